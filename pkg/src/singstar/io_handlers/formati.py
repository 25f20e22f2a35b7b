"""
Formati di testo: stelle, catene, configurazioni di punti e annotazioni
di azioni.

Tutti i formati sono a righe, UTF-8, con commenti introdotti da '#' e
righe vuote ignorate. Gli errori di sintassi riportano riga e colonna
(1-based); le violazioni degli invarianti arrivano dai costruttori.

Stella::

    genus 0
    central 1
    branch 2
    branch 3
    branch 7

Catena::

    chain 2 3 2

Punti::

    point 0:1 label=3/1
    point 1:0 label=3/1

Azione::

    order 2
    curve 0 invariant iso 2/1
    curve 1 pointwise
    curve 2 swap 3
    curve 3 swap 2
"""

import re
from pathlib import Path
from typing import Dict, Iterator, List, Optional, Tuple, Union

from singstar.core.errors import ArithmeticDomainError, GraphSyntaxError
from singstar.graphs.chain_graph import ChainGraph
from singstar.graphs.star_graph import StarGraph, canonical_form
from singstar.quotients.engine import CurveAction, CurveSpec, FixedPointSpec, IsolatedPoint
from singstar.symmetry.moebius import PointConfig, ProjPoint

_TOKEN = re.compile(r"\S+")
_INTERO = re.compile(r"\d+")
_ISO = re.compile(r"(\d+)/(\d+)(?:@(\d+))?")

Token = Tuple[str, int]


def _righe(testo: str) -> Iterator[Tuple[int, List[Token]]]:
    """(numero di riga, [(token, colonna)]) per le righe non vuote."""
    for numero, riga in enumerate(testo.splitlines(), start=1):
        contenuto = riga.split("#", 1)[0]
        token = [(m.group(), m.start() + 1) for m in _TOKEN.finditer(contenuto)]
        if token:
            yield numero, token


def _intero(token: Token, riga: int) -> int:
    valore, colonna = token
    if not _INTERO.fullmatch(valore):
        raise GraphSyntaxError(f"intero atteso, trovato {valore!r}", riga, colonna)
    return int(valore)


def _parola_chiave(token: List[Token], attesa: str, riga: int) -> None:
    if token[0][0] != attesa:
        raise GraphSyntaxError(f"atteso {attesa!r}, trovato {token[0][0]!r}", riga, token[0][1])


def _un_valore(token: List[Token], riga: int) -> int:
    if len(token) == 1:
        raise GraphSyntaxError(f"valore mancante dopo {token[0][0]!r}", riga, token[0][1] + len(token[0][0]))
    if len(token) > 2:
        raise GraphSyntaxError(f"token inatteso {token[2][0]!r}", riga, token[2][1])
    return _intero(token[1], riga)


def leggi_testo(percorso: Union[str, Path]) -> str:
    """Legge un file UTF-8."""
    with open(percorso, "r", encoding="utf-8") as f:
        return f.read()


# --- stelle -----------------------------------------------------------------


def parse_star(testo: str, verifica_definitezza: bool = True) -> StarGraph:
    """
    Legge una stella: `genus`, poi `central`, poi zero o più `branch`.

    Raises:
        GraphSyntaxError: per errori di sintassi
        InvariantViolation: per pesi < 2, troppi pochi rami o grafo non definito
    """
    genere: Optional[int] = None
    centrale: Optional[int] = None
    rami: List[Tuple[int, ...]] = []
    ultima_riga = 1

    for riga, token in _righe(testo):
        ultima_riga = riga
        if genere is None:
            _parola_chiave(token, "genus", riga)
            genere = _un_valore(token, riga)
        elif centrale is None:
            _parola_chiave(token, "central", riga)
            centrale = _un_valore(token, riga)
        else:
            _parola_chiave(token, "branch", riga)
            if len(token) == 1:
                raise GraphSyntaxError("ramo senza pesi", riga, token[0][1] + len("branch"))
            rami.append(tuple(_intero(t, riga) for t in token[1:]))

    if genere is None:
        raise GraphSyntaxError("riga 'genus' mancante", ultima_riga)
    if centrale is None:
        raise GraphSyntaxError("riga 'central' mancante", ultima_riga)
    return StarGraph(genere, centrale, tuple(rami), verifica_definitezza=verifica_definitezza)


def serialize_star(g: StarGraph) -> str:
    """Testo canonico (rami ordinati), con newline finale."""
    canonica = canonical_form(g)
    righe = [f"genus {canonica.genus}", f"central {canonica.central_weight}"]
    righe += ["branch " + " ".join(str(w) for w in ramo.weights) for ramo in canonica.branches]
    return "\n".join(righe) + "\n"


def load_star(percorso: Union[str, Path], verifica_definitezza: bool = True) -> StarGraph:
    return parse_star(leggi_testo(percorso), verifica_definitezza)


# --- catene -----------------------------------------------------------------


def parse_chain(testo: str) -> ChainGraph:
    """Una sola riga `chain w1 w2 ...`; senza pesi è il punto liscio."""
    catena: Optional[ChainGraph] = None
    for riga, token in _righe(testo):
        if catena is not None:
            raise GraphSyntaxError("una sola riga 'chain' ammessa", riga, token[0][1])
        _parola_chiave(token, "chain", riga)
        catena = ChainGraph(tuple(_intero(t, riga) for t in token[1:]))
    if catena is None:
        raise GraphSyntaxError("riga 'chain' mancante", 1)
    return catena


def serialize_chain(c: ChainGraph) -> str:
    return " ".join(["chain"] + [str(w) for w in c.weights]) + "\n"


# --- punti ------------------------------------------------------------------


def parse_points(testo: str) -> PointConfig:
    """
    Righe `point X:Y [label=<token>]`; l'etichetta mancante vale "".

    Raises:
        GraphSyntaxError: per righe malformate o punti non validi
    """
    coppie: List[Tuple[ProjPoint, str]] = []
    for riga, token in _righe(testo):
        _parola_chiave(token, "point", riga)
        if len(token) < 2:
            raise GraphSyntaxError("coordinate mancanti", riga, token[0][1] + len("point"))
        if len(token) > 3:
            raise GraphSyntaxError(f"token inatteso {token[3][0]!r}", riga, token[3][1])
        valore, colonna = token[1]
        try:
            punto = ProjPoint.parse(valore)
        except ArithmeticDomainError as exc:
            raise GraphSyntaxError(str(exc), riga, colonna) from exc
        etichetta = ""
        if len(token) == 3:
            valore, colonna = token[2]
            if not valore.startswith("label="):
                raise GraphSyntaxError(f"atteso 'label=...', trovato {valore!r}", riga, colonna)
            etichetta = valore[len("label="):]
        coppie.append((punto, etichetta))
    return PointConfig.da_coppie(coppie)


def serialize_points(cfg: PointConfig) -> str:
    """Una riga `point` per punto, nell'ordine della configurazione."""
    righe = []
    for punto, etichetta in zip(cfg.points, cfg.labels):
        testo = str(etichetta)
        if any(c.isspace() or c == "#" for c in testo):
            raise ArithmeticDomainError(f"etichetta non serializzabile: {testo!r}")
        righe.append(f"point {punto}" + (f" label={testo}" if testo else ""))
    return "\n".join(righe) + "\n"


def load_points(percorso: Union[str, Path]) -> PointConfig:
    return parse_points(leggi_testo(percorso))


# --- azioni -----------------------------------------------------------------


def _punto_isolato(token: Token, riga: int) -> IsolatedPoint:
    valore, colonna = token
    corrispondenza = _ISO.fullmatch(valore)
    if corrispondenza is None:
        raise GraphSyntaxError(f"tipo locale 'n/q[@id]' atteso, trovato {valore!r}", riga, colonna)
    n, q, at = corrispondenza.groups()
    return IsolatedPoint(int(n), int(q), None if at is None else int(at))


def _curva(token: List[Token], riga: int) -> Tuple[int, CurveSpec]:
    if len(token) < 3:
        raise GraphSyntaxError("atteso 'curve <id> <azione>'", riga, token[-1][1])
    id_curva = _intero(token[1], riga)
    azione, colonna = token[2]

    if azione == CurveAction.POINTWISE.value:
        if len(token) > 3:
            raise GraphSyntaxError(f"token inatteso {token[3][0]!r}", riga, token[3][1])
        return id_curva, CurveSpec.pointwise()
    if azione == CurveAction.SWAPPED.value:
        if len(token) != 4:
            raise GraphSyntaxError("atteso 'swap <id>'", riga, colonna)
        return id_curva, CurveSpec.swap(_intero(token[3], riga))
    if azione == CurveAction.INVARIANT.value:
        resto = token[3:]
        punti = []
        while resto:
            parola, col = resto[0]
            if parola != "iso":
                raise GraphSyntaxError(f"atteso 'iso', trovato {parola!r}", riga, col)
            if len(resto) < 2:
                raise GraphSyntaxError("tipo locale mancante dopo 'iso'", riga, col + 3)
            punti.append(_punto_isolato(resto[1], riga))
            resto = resto[2:]
        return id_curva, CurveSpec.invariant(*punti)
    raise GraphSyntaxError(
        f"azione sconosciuta {azione!r} (pointwise, invariant, swap)", riga, colonna
    )


def parse_action(testo: str) -> FixedPointSpec:
    """
    Intestazione `order 2|3`, poi una riga `curve` per curva.

    Raises:
        GraphSyntaxError: per errori di sintassi o curve ripetute
        QuotientError: per tipi locali non validi
    """
    ordine: Optional[int] = None
    curve: Dict[int, CurveSpec] = {}
    for riga, token in _righe(testo):
        if ordine is None:
            _parola_chiave(token, "order", riga)
            ordine = _un_valore(token, riga)
            continue
        _parola_chiave(token, "curve", riga)
        id_curva, annotazione = _curva(token, riga)
        if id_curva in curve:
            raise GraphSyntaxError(f"curva {id_curva} annotata due volte", riga, token[1][1])
        curve[id_curva] = annotazione
    if ordine is None:
        raise GraphSyntaxError("riga 'order' mancante", 1)
    return FixedPointSpec(ordine, curve)


def serialize_action(spec: FixedPointSpec) -> str:
    """Testo di un'annotazione, curve in ordine di id."""
    righe = [f"order {spec.order}"]
    for id_curva in sorted(spec.curves):
        annotazione = spec.curves[id_curva]
        if annotazione.kind is CurveAction.SWAPPED:
            righe.append(f"curve {id_curva} swap {annotazione.image}")
        elif annotazione.kind is CurveAction.POINTWISE:
            righe.append(f"curve {id_curva} pointwise")
        else:
            punti = "".join(f" iso {p}" for p in annotazione.isolated)
            righe.append(f"curve {id_curva} invariant{punti}")
    return "\n".join(righe) + "\n"


def load_action(percorso: Union[str, Path]) -> FixedPointSpec:
    return parse_action(leggi_testo(percorso))
