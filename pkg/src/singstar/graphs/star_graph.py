"""
Grafi a stella della risoluzione minimale buona.

Una curva centrale E0 di genere g e peso b (autointersezione -b) e r
rami lineari di curve razionali, ciascuno descritto dai pesi letti dal
centro verso l'esterno.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations, product
from typing import Dict, Iterator, List, Sequence, Tuple, Union

from singstar.core.errors import (
    BranchWeightError,
    InvariantViolation,
    NonDefiniteError,
    TooFewBranchesError,
)
from singstar.core.hirzebruch_jung import hj_evaluate
from singstar.graphs.chain_graph import ChainGraph
from singstar.graphs.plumbing import PlumbingGraph, PlumbingNode


@dataclass(frozen=True)
class BranchChain:
    """Ramo della stella: pesi b_i1, ..., b_il dal centro verso l'esterno."""

    weights: Tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
        if not self.weights:
            raise BranchWeightError("ramo vuoto")
        for peso in self.weights:
            if peso < 2:
                raise BranchWeightError(
                    f"peso {peso} < 2 nel ramo {list(self.weights)}"
                )

    def __len__(self) -> int:
        return len(self.weights)

    def __str__(self) -> str:
        return "[" + ",".join(str(w) for w in self.weights) + "]"


RamoInput = Union[BranchChain, Sequence[int]]


@dataclass(frozen=True, eq=False)
class StarGraph:
    """
    Grafo a stella pesato.

    L'uguaglianza ignora l'ordine dei rami: due stelle sono uguali se hanno
    la stessa forma canonica. L'ordine memorizzato resta quello di
    costruzione e fissa la numerazione delle curve.

    Attributes:
        genus: Genere g della curva centrale
        central_weight: Peso b della curva centrale
        branches: Rami ordinati
        verifica_definitezza: Se False non controlla b - Σβ/α > 0
    """

    genus: int
    central_weight: int
    branches: Tuple[BranchChain, ...] = ()
    verifica_definitezza: bool = field(default=True, repr=False)

    def __post_init__(self) -> None:
        rami = tuple(
            ramo if isinstance(ramo, BranchChain) else BranchChain(tuple(ramo))
            for ramo in self.branches
        )
        object.__setattr__(self, "branches", rami)
        self._valida_parametri()

    def _valida_parametri(self) -> None:
        if self.genus < 0:
            raise InvariantViolation(f"genere negativo: {self.genus}")
        if self.central_weight < 1:
            raise InvariantViolation(
                f"il peso centrale deve essere positivo, ricevuto {self.central_weight}"
            )
        if self.genus == 0 and self.num_branches < 3:
            raise TooFewBranchesError(
                f"con genere 0 servono almeno 3 rami, trovati {self.num_branches}"
            )
        if self.verifica_definitezza and self.grado_orbifold() <= 0:
            raise NonDefiniteError(
                f"grafo non definito negativo: b - Σβ/α = {self.grado_orbifold()}"
            )

    def grado_orbifold(self) -> Fraction:
        """b - Σ β_i/α_i."""
        totale = Fraction(self.central_weight)
        for ramo in self.branches:
            alpha, beta = hj_evaluate(ramo.weights)
            totale -= Fraction(beta, alpha)
        return totale

    @property
    def num_branches(self) -> int:
        return len(self.branches)

    @property
    def num_curves(self) -> int:
        return 1 + sum(len(ramo) for ramo in self.branches)

    def chiave_canonica(self) -> Tuple[int, int, Tuple[Tuple[int, ...], ...]]:
        return (
            self.genus,
            self.central_weight,
            tuple(sorted(ramo.weights for ramo in self.branches)),
        )

    def __eq__(self, altro: object) -> bool:
        if not isinstance(altro, StarGraph):
            return NotImplemented
        return self.chiave_canonica() == altro.chiave_canonica()

    def __hash__(self) -> int:
        return hash(self.chiave_canonica())

    def __str__(self) -> str:
        rami = " ".join(str(ramo) for ramo in self.branches)
        return f"g={self.genus} b={self.central_weight} branches {rami}".rstrip()

    def branch_classes(self) -> List[Tuple[Tuple[int, ...], List[int]]]:
        """Classi di rami con pesi identici: (pesi, indici), ordinate per pesi."""
        classi: Dict[Tuple[int, ...], List[int]] = {}
        for indice, ramo in enumerate(self.branches):
            classi.setdefault(ramo.weights, []).append(indice)
        return sorted(classi.items())

    def branch_permutations(self) -> Iterator[Tuple[int, ...]]:
        """
        Tutte le permutazioni dei rami che preservano i pesi.

        Ogni permutazione è una tupla `perm` con perm[i] = ramo immagine di i.
        La prima prodotta è l'identità.
        """
        classi = [indici for _, indici in self.branch_classes()]
        for scelte in product(*(permutations(indici) for indici in classi)):
            perm = list(range(self.num_branches))
            for indici, immagini in zip(classi, scelte):
                for i, j in zip(indici, immagini):
                    perm[i] = j
            yield tuple(perm)

    def curve_id(self, ramo: int, posizione: int) -> int:
        """Id della curva `posizione` (0 = vicina al centro) del ramo `ramo`."""
        if not 0 <= posizione < len(self.branches[ramo]):
            raise IndexError(posizione)
        return 1 + sum(len(r) for r in self.branches[:ramo]) + posizione

    def curve_ids(self) -> List[Tuple[int, str, int]]:
        """
        Elenco (id, descrizione, peso) delle curve.

        Il centro ha id 0; seguono le curve dei rami, ramo per ramo, dal
        centro verso l'esterno, nell'ordine memorizzato.
        """
        elenco = [(0, "center", self.central_weight)]
        for i, ramo in enumerate(self.branches):
            for j, peso in enumerate(ramo.weights):
                elenco.append((self.curve_id(i, j), f"branch {i + 1} position {j + 1}", peso))
        return elenco


def canonical_form(grafo: StarGraph) -> StarGraph:
    """Stessa stella con i rami ordinati lessicograficamente per pesi."""
    rami = tuple(sorted(grafo.branches, key=lambda ramo: ramo.weights))
    return StarGraph(
        grafo.genus, grafo.central_weight, rami, verifica_definitezza=grafo.verifica_definitezza
    )


def graphs_isomorphic(
    a: Union[StarGraph, ChainGraph], b: Union[StarGraph, ChainGraph]
) -> bool:
    """
    Isomorfismo tra stelle (forma canonica) o tra catene (a meno di
    inversione dell'intera catena). Tipi diversi non sono isomorfi.
    """
    if isinstance(a, StarGraph) and isinstance(b, StarGraph):
        return a.chiave_canonica() == b.chiave_canonica()
    if isinstance(a, ChainGraph) and isinstance(b, ChainGraph):
        return a.weights == b.weights or a.weights == tuple(reversed(b.weights))
    return False


def star_to_plumbing(grafo: StarGraph) -> PlumbingGraph:
    """Un nodo per curva con gli id di `StarGraph.curve_ids`."""
    nodi = [PlumbingNode(0, grafo.genus, grafo.central_weight)]
    archi = []
    for i, ramo in enumerate(grafo.branches):
        precedente = 0
        for j, peso in enumerate(ramo.weights):
            id_curva = grafo.curve_id(i, j)
            nodi.append(PlumbingNode(id_curva, 0, peso))
            archi.append((precedente, id_curva))
            precedente = id_curva
    return PlumbingGraph(tuple(nodi), frozenset(archi))
