"""
Motore dei quozienti per azioni cicliche di ordine 2 e 3.

L'azione è descritta curva per curva (puntualmente fissa, invariante con
i suoi punti fissi isolati, scambiata con un'altra curva). Il motore
verifica la coerenza delle annotazioni, costruisce il grafo del quoziente
risolto e lo riduce alla forma minimale contraendo le (-1)-curve.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from math import gcd
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

import networkx as nx
import numpy as np

from singstar.core.errors import (
    ArithmeticDomainError,
    DivisibilityError,
    FixedLocusError,
    InvariantViolation,
    QuotientError,
    SwapError,
)
from singstar.core.hirzebruch_jung import hj_expand
from singstar.graphs.chain_graph import ChainGraph
from singstar.graphs.plumbing import PlumbingGraph, PlumbingNode
from singstar.graphs.star_graph import StarGraph, star_to_plumbing
from singstar.invariants.lattice import intersection_matrix, is_negative_definite

logger = logging.getLogger(__name__)

ORDINI_AMMESSI = (2, 3)


class CurveAction(str, Enum):
    """Comportamento di una curva sotto il generatore dell'azione."""

    POINTWISE = "pointwise"
    INVARIANT = "invariant"
    SWAPPED = "swap"


@dataclass(frozen=True)
class IsolatedPoint:
    """
    Punto fisso isolato di tipo locale (n, q) su una curva invariante.

    Attributes:
        n: Ordine dell'azione
        q: Numero di rotazione, 1 <= q < n, coprimo con n
        at: Id della curva vicina se il punto è un contatto, None se libero
            o da assegnare automaticamente
    """

    n: int
    q: int
    at: Optional[int] = None

    def __post_init__(self) -> None:
        if self.n not in ORDINI_AMMESSI:
            raise QuotientError(f"ordine {self.n} non supportato, ammessi 2 e 3")
        if not 0 < self.q < self.n or gcd(self.n, self.q) != 1:
            raise QuotientError(f"tipo locale non valido: {self.n}/{self.q}")

    def __str__(self) -> str:
        testo = f"{self.n}/{self.q}"
        return testo if self.at is None else f"{testo}@{self.at}"


@dataclass(frozen=True)
class CurveSpec:
    """Annotazione di una singola curva."""

    kind: CurveAction
    isolated: Tuple[IsolatedPoint, ...] = ()
    image: Optional[int] = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "kind", CurveAction(self.kind))
        object.__setattr__(self, "isolated", tuple(self.isolated))
        if self.kind is CurveAction.SWAPPED and self.image is None:
            raise QuotientError("una curva scambiata deve indicare la sua immagine")
        if self.kind is not CurveAction.SWAPPED and self.image is not None:
            raise QuotientError("solo le curve scambiate hanno un'immagine")
        if self.kind is not CurveAction.INVARIANT and self.isolated:
            raise QuotientError("punti isolati ammessi solo su curve invarianti")
        if len(self.isolated) > 2:
            raise FixedLocusError("una curva invariante ha al più due punti fissi")

    @classmethod
    def pointwise(cls) -> "CurveSpec":
        return cls(CurveAction.POINTWISE)

    @classmethod
    def invariant(cls, *punti: IsolatedPoint) -> "CurveSpec":
        return cls(CurveAction.INVARIANT, tuple(punti))

    @classmethod
    def swap(cls, immagine: int) -> "CurveSpec":
        return cls(CurveAction.SWAPPED, (), immagine)


@dataclass(frozen=True)
class FixedPointSpec:
    """
    Annotazione completa di un'azione ciclica.

    Attributes:
        order: Ordine n del generatore (2 o 3)
        curves: Annotazione per id di curva
    """

    order: int
    curves: Mapping[int, CurveSpec] = field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(self, "curves", dict(self.curves))
        if self.order not in ORDINI_AMMESSI:
            raise QuotientError(f"ordine {self.order} non supportato, ammessi 2 e 3")
        for id_curva, annotazione in self.curves.items():
            for punto in annotazione.isolated:
                if punto.n != self.order:
                    raise QuotientError(
                        f"punto isolato di ordine {punto.n} in un'azione di ordine {self.order}",
                        curva=id_curva,
                    )


@dataclass(frozen=True)
class Contrazione:
    """Una (-1)-curva contratta e i suoi vicini al momento della contrazione."""

    curva: int
    vicini: Tuple[int, ...]

    def __str__(self) -> str:
        vicini = ",".join(str(v) for v in self.vicini) or "-"
        return f"contract {self.curva} (neighbors {vicini})"


GrafoQuoziente = Union[ChainGraph, StarGraph, PlumbingGraph]


@dataclass(frozen=True)
class QuotientResult:
    """Grafo minimale del quoziente e registro delle contrazioni."""

    graph: GrafoQuoziente
    blowdown_log: Tuple[Contrazione, ...] = ()

    @property
    def is_cyclic_quotient(self) -> bool:
        """Catena (eventualmente vuota): il quoziente è una singolarità ciclica."""
        return isinstance(self.graph, ChainGraph)


def curve_image_weight(
    b: int,
    n: int,
    isolated: Sequence[int] = (),
    pointwise: bool = False,
    curva: Optional[int] = None,
) -> int:
    """
    Peso dell'immagine di una curva di peso b nel quoziente risolto.

    Curva invariante: (b + Σq)/n, dove q scorre sui numeri di rotazione
    dei punti fissi isolati. Curva puntualmente fissa: n·b.

    Raises:
        DivisibilityError: se n non divide b + Σq
    """
    if n not in ORDINI_AMMESSI:
        raise QuotientError(f"ordine {n} non supportato, ammessi 2 e 3", curva=curva)
    if b < 1:
        raise ArithmeticDomainError(f"il peso deve essere positivo, ricevuto {b}")
    if pointwise:
        return n * b
    if len(isolated) > 2:
        raise FixedLocusError("una curva invariante ha al più due punti fissi", curva=curva)
    for q in isolated:
        if not 0 < q < n or gcd(n, q) != 1:
            raise QuotientError(f"tipo locale non valido: {n}/{q}", curva=curva)
    totale = b + sum(isolated)
    if totale % n != 0:
        raise DivisibilityError(
            f"peso {b} con rotazioni {list(isolated)}: {totale} non è divisibile per {n}",
            curva=curva,
        )
    return totale // n


# --- blow-down -------------------------------------------------------------


def _contraibili(grafo: nx.Graph) -> List[int]:
    return sorted(
        nodo
        for nodo, dati in grafo.nodes(data=True)
        if dati.get("genus", 0) == 0 and dati["weight"] == 1 and grafo.degree(nodo) <= 2
    )


def blow_down(
    p: PlumbingGraph,
    seed: Optional[int] = None,
    registro: Optional[List[Contrazione]] = None,
) -> PlumbingGraph:
    """
    Contrae le (-1)-curve razionali di grado <= 2 finché ce ne sono.

    I vicini perdono 1 dal peso; con grado 2 diventano adiacenti. L'ordine
    è per id crescente, oppure casuale se è indicato `seed`; il risultato
    non dipende dall'ordine.

    Args:
        p: Plumbing di partenza
        seed: Seme per l'ordine casuale delle contrazioni
        registro: Lista a cui aggiungere le contrazioni eseguite

    Returns:
        Plumbing minimale (vuoto per un punto liscio)
    """
    grafo = p.to_networkx()
    rng = np.random.default_rng(seed) if seed is not None else None
    while True:
        candidati = _contraibili(grafo)
        if not candidati:
            break
        scelto = candidati[0] if rng is None else candidati[int(rng.integers(len(candidati)))]
        vicini = tuple(sorted(grafo.neighbors(scelto)))
        for vicino in vicini:
            grafo.nodes[vicino]["weight"] -= 1
        grafo.remove_node(scelto)
        if len(vicini) == 2:
            grafo.add_edge(*vicini)
        logger.debug("contratta la curva %d, vicini %s", scelto, vicini)
        if registro is not None:
            registro.append(Contrazione(scelto, vicini))
    return PlumbingGraph.da_networkx(grafo)


# --- verifica delle annotazioni --------------------------------------------


def _permutazione(p: PlumbingGraph, spec: FixedPointSpec) -> Dict[int, int]:
    """Mappa curva -> immagine; le orbite delle curve scambiate hanno lunghezza n."""
    sigma = {id_curva: id_curva for id_curva in p.ids}
    for id_curva in p.ids:
        annotazione = spec.curves[id_curva]
        if annotazione.kind is CurveAction.SWAPPED:
            if annotazione.image not in sigma:
                raise SwapError(f"immagine {annotazione.image} sconosciuta", curva=id_curva)
            if spec.curves[annotazione.image].kind is not CurveAction.SWAPPED:
                raise SwapError(
                    f"l'immagine {annotazione.image} non è annotata come scambiata",
                    curva=id_curva,
                )
            sigma[id_curva] = annotazione.image

    if sorted(sigma.values()) != sorted(sigma):
        raise SwapError("gli scambi non formano una permutazione")

    for id_curva in p.ids:
        if spec.curves[id_curva].kind is not CurveAction.SWAPPED:
            continue
        orbita = [id_curva]
        while sigma[orbita[-1]] != id_curva:
            orbita.append(sigma[orbita[-1]])
        if len(orbita) != spec.order:
            raise SwapError(
                f"orbita {orbita} di lunghezza {len(orbita)}, attesa {spec.order}",
                curva=id_curva,
            )
        if len({p.node(c).weight for c in orbita}) != 1:
            raise SwapError(f"curve scambiate con pesi diversi: {orbita}", curva=id_curva)
        if any(v in orbita for v in p.neighbors(id_curva)):
            raise SwapError("una curva interseca una sua immagine", curva=id_curva)

    for u, v in p.edges:
        immagine = tuple(sorted((sigma[u], sigma[v])))
        if immagine not in p.edges:
            raise SwapError(f"lo scambio non preserva l'arco ({u}, {v})")
    return sigma


@dataclass
class _CurvaInvariante:
    contatti: Dict[int, int] = field(default_factory=dict)
    liberi: List[int] = field(default_factory=list)

    @property
    def rotazioni(self) -> List[int]:
        return list(self.contatti.values()) + self.liberi


def _assegna_punti(
    p: PlumbingGraph, spec: FixedPointSpec, id_curva: int
) -> _CurvaInvariante:
    """Distribuisce i punti isolati fra i contatti invarianti e i punti liberi."""
    annotazioni = spec.curves
    vicini_fissi = [
        v for v in p.neighbors(id_curva) if annotazioni[v].kind is not CurveAction.SWAPPED
    ]
    if len(vicini_fissi) > 2:
        raise FixedLocusError(
            f"{len(vicini_fissi)} contatti fissi, una curva invariante ne ha al più due",
            curva=id_curva,
        )
    vicini_invarianti = [v for v in vicini_fissi if annotazioni[v].kind is CurveAction.INVARIANT]

    esito = _CurvaInvariante()
    non_assegnati: List[IsolatedPoint] = []
    for punto in annotazioni[id_curva].isolated:
        if punto.at is None:
            non_assegnati.append(punto)
            continue
        if punto.at not in vicini_invarianti:
            raise FixedLocusError(
                f"punto isolato su {punto.at}, che non è un vicino invariante",
                curva=id_curva,
            )
        if punto.at in esito.contatti:
            raise FixedLocusError(f"due punti isolati sul contatto con {punto.at}", curva=id_curva)
        esito.contatti[punto.at] = punto.q

    for vicino in vicini_invarianti:
        if vicino in esito.contatti:
            continue
        if not non_assegnati:
            raise FixedLocusError(
                f"il contatto con la curva invariante {vicino} deve essere un punto isolato",
                curva=id_curva,
            )
        esito.contatti[vicino] = non_assegnati.pop(0).q

    liberi_disponibili = 2 - len(vicini_fissi)
    if len(non_assegnati) > liberi_disponibili:
        raise FixedLocusError(
            f"{len(non_assegnati)} punti isolati liberi, disponibili {liberi_disponibili}",
            curva=id_curva,
        )
    esito.liberi = [punto.q for punto in non_assegnati]
    return esito


def _verifica_puntuali(p: PlumbingGraph, spec: FixedPointSpec) -> None:
    for id_curva in p.ids:
        if spec.curves[id_curva].kind is not CurveAction.POINTWISE:
            continue
        for vicino in p.neighbors(id_curva):
            tipo = spec.curves[vicino].kind
            if tipo is CurveAction.POINTWISE:
                raise FixedLocusError(
                    f"interseca la curva puntualmente fissa {vicino}", curva=id_curva
                )
            if tipo is CurveAction.SWAPPED:
                raise FixedLocusError(
                    f"il vicino {vicino} di una curva puntualmente fissa non può essere scambiato",
                    curva=id_curva,
                )


# --- costruzione del quoziente ---------------------------------------------


class _Costruttore:
    """Grafo di lavoro del quoziente, con id nuovi sopra il massimo esistente."""

    def __init__(self, primo_id: int):
        self.grafo = nx.Graph()
        self._prossimo = primo_id

    def nodo(self, id_nodo: int, peso: int) -> None:
        self.grafo.add_node(id_nodo, genus=0, weight=peso)

    def catena(self, pesi: Sequence[int], da: int, a: Optional[int] = None) -> None:
        precedente = da
        for peso in pesi:
            nuovo = self._prossimo
            self._prossimo += 1
            self.nodo(nuovo, peso)
            self.grafo.add_edge(precedente, nuovo)
            precedente = nuovo
        if a is not None:
            self.grafo.add_edge(precedente, a)


def _classifica(p: PlumbingGraph) -> GrafoQuoziente:
    if p.is_empty:
        return ChainGraph(())
    if not is_negative_definite(intersection_matrix(p)):
        raise QuotientError("il quoziente ottenuto non è definito negativo: annotazione incoerente")

    centri = [n for n in p.ids if p.degree(n) >= 3]
    if not centri:
        estremo = min(n for n in p.ids if p.degree(n) <= 1)
        pesi = [p.node(n).weight for n in nx.dfs_preorder_nodes(p.to_networkx(), estremo)]
        return ChainGraph(tuple(min(pesi, list(reversed(pesi)))))
    if len(centri) > 1:
        return p

    centro = centri[0]
    rami = []
    for primo in p.neighbors(centro):
        pesi, precedente, attuale = [], centro, primo
        while True:
            pesi.append(p.node(attuale).weight)
            successivi = [v for v in p.neighbors(attuale) if v != precedente]
            if not successivi:
                break
            precedente, attuale = attuale, successivi[0]
        rami.append(tuple(pesi))
    try:
        return StarGraph(0, p.node(centro).weight, tuple(rami))
    except InvariantViolation as exc:
        raise QuotientError(f"il quoziente non è una stella valida: {exc}") from exc


def quotient_plumbing(
    p: PlumbingGraph, spec: FixedPointSpec, seed: Optional[int] = None
) -> QuotientResult:
    """
    Quoziente di un plumbing di curve razionali per l'azione annotata.

    Ogni orbita di curve scambiate diventa una sola curva con lo stesso
    peso; ogni curva invariante prende il peso di `curve_image_weight`;
    tra due curve invarianti si inserisce la catena del punto isolato e
    ogni punto isolato libero genera un ramo nuovo. Il risultato è ridotto
    con `blow_down` e classificato come catena, stella o plumbing.

    Raises:
        QuotientError: annotazione incompleta o incoerente (sottoclassi
            FixedLocusError, DivisibilityError, SwapError)
    """
    n = spec.order
    for nodo in p.nodes:
        if nodo.genus != 0:
            raise QuotientError("il motore tratta solo curve razionali", curva=nodo.id)
    mancanti = [i for i in p.ids if i not in spec.curves]
    if mancanti:
        raise QuotientError(f"curve senza annotazione: {mancanti}")
    estranee = sorted(set(spec.curves) - set(p.ids))
    if estranee:
        raise QuotientError(f"annotazioni per curve inesistenti: {estranee}")

    sigma = _permutazione(p, spec)
    _verifica_puntuali(p, spec)

    invarianti: Dict[int, _CurvaInvariante] = {}
    for id_curva in p.ids:
        if spec.curves[id_curva].kind is CurveAction.INVARIANT:
            invarianti[id_curva] = _assegna_punti(p, spec, id_curva)

    for u, v in sorted(p.edges):
        if u in invarianti and v in invarianti:
            qu, qv = invarianti[u].contatti[v], invarianti[v].contatti[u]
            if (qu * qv) % n != 1:
                raise FixedLocusError(
                    f"tipi locali {n}/{qu} e {n}/{qv} incompatibili sul contatto con {v}",
                    curva=u,
                )

    rappresentante: Dict[int, int] = {}
    for id_curva in p.ids:
        orbita = [id_curva]
        while sigma[orbita[-1]] != id_curva:
            orbita.append(sigma[orbita[-1]])
        rappresentante[id_curva] = min(orbita)

    costruttore = _Costruttore(max(p.ids, default=-1) + 1)
    for id_curva in sorted(set(rappresentante.values())):
        annotazione = spec.curves[id_curva]
        peso = p.node(id_curva).weight
        if annotazione.kind is CurveAction.POINTWISE:
            peso = curve_image_weight(peso, n, pointwise=True, curva=id_curva)
        elif annotazione.kind is CurveAction.INVARIANT:
            peso = curve_image_weight(peso, n, invarianti[id_curva].rotazioni, curva=id_curva)
        costruttore.nodo(id_curva, peso)

    for u, v in sorted(p.edges):
        if u in invarianti and v in invarianti:
            costruttore.catena(hj_expand(n, invarianti[u].contatti[v]), u, v)
        else:
            costruttore.grafo.add_edge(rappresentante[u], rappresentante[v])
    for id_curva in sorted(invarianti):
        for q in invarianti[id_curva].liberi:
            costruttore.catena(hj_expand(n, q), id_curva)

    logger.debug(
        "quoziente di ordine %d: %d curve prima delle contrazioni",
        n,
        costruttore.grafo.number_of_nodes(),
    )
    registro: List[Contrazione] = []
    minimale = blow_down(PlumbingGraph.da_networkx(costruttore.grafo), seed, registro)
    return QuotientResult(_classifica(minimale), tuple(registro))


def star_quotient(
    g: StarGraph, spec: FixedPointSpec, n: Optional[int] = None, seed: Optional[int] = None
) -> QuotientResult:
    """
    Quoziente di una stella; gli id delle curve sono quelli di `curve_ids`.

    Raises:
        QuotientError: curva centrale di genere positivo o ordine incoerente
    """
    if n is not None and n != spec.order:
        raise QuotientError(f"ordine {n} diverso da quello dell'annotazione ({spec.order})")
    if g.genus != 0:
        raise QuotientError("curva centrale di genere positivo non supportata", curva=0)
    return quotient_plumbing(star_to_plumbing(g), spec, seed)


# --- quozienti di catene di una sola curva ---------------------------------


class InvolutionType(str, Enum):
    """Punti fissi di un'involuzione su X_{b,1}."""

    POINTWISE = "pointwise"
    ISO_ISO = "iso_iso"
    ISO_TRANSVERSE = "iso_transverse"
    TRANSVERSE_TRANSVERSE = "transverse_transverse"


@dataclass(frozen=True)
class ChainSpec:
    """
    Punti fissi di un automorfismo di ordine 3 su X_{b,1}.

    Attributes:
        pointwise: La curva è puntualmente fissa
        isolated: Rotazioni q dei punti fissi isolati; gli altri sono trasversali
    """

    pointwise: bool = False
    isolated: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "isolated", tuple(self.isolated))
        if self.pointwise and self.isolated:
            raise QuotientError("una curva puntualmente fissa non ha punti isolati")


def _quoziente_curva(b: int, annotazione: CurveSpec, n: int) -> ChainGraph:
    if b < 1:
        raise ArithmeticDomainError(f"b deve essere positivo, ricevuto {b}")
    p = PlumbingGraph((PlumbingNode(0, 0, b),))
    risultato = quotient_plumbing(p, FixedPointSpec(n, {0: annotazione}))
    return risultato.graph


def chain_quotient_involution(b: int, tipo: Union[InvolutionType, str]) -> ChainGraph:
    """
    Quoziente di X_{b,1} (una curva di peso b) per un'involuzione.

    Raises:
        DivisibilityError: se la parità di b non ammette il tipo indicato
    """
    tipo = InvolutionType(tipo)
    if tipo is InvolutionType.POINTWISE:
        return _quoziente_curva(b, CurveSpec.pointwise(), 2)
    if tipo is InvolutionType.ISO_TRANSVERSE:
        if b % 2 == 0:
            raise DivisibilityError(f"un punto isolato e uno trasversale richiedono b dispari, b = {b}")
        return _quoziente_curva(b, CurveSpec.invariant(IsolatedPoint(2, 1)), 2)
    if b % 2 == 1:
        raise DivisibilityError(f"il tipo {tipo.value} richiede b pari, b = {b}")
    if tipo is InvolutionType.ISO_ISO:
        return _quoziente_curva(b, CurveSpec.invariant(IsolatedPoint(2, 1), IsolatedPoint(2, 1)), 2)
    return _quoziente_curva(b, CurveSpec.invariant(), 2)


def chain_quotient_order3(b: int, spec: ChainSpec) -> ChainGraph:
    """
    Quoziente di X_{b,1} per un automorfismo di ordine 3.

    Example:
        >>> chain_quotient_order3(4, ChainSpec(isolated=(1, 1))).weights
        (3, 2, 3)
    """
    if spec.pointwise:
        return _quoziente_curva(b, CurveSpec.pointwise(), 3)
    punti = tuple(IsolatedPoint(3, q) for q in spec.isolated)
    return _quoziente_curva(b, CurveSpec.invariant(*punti), 3)
