"""
Annotazioni standard delle azioni su stelle a tre rami.

Costruisce i FixedPointSpec delle involuzioni (centrale, ciclica, non
ciclica) e della rotazione di ordine 3. Lungo i rami invarianti i tipi
dei punti fissi seguono la regola di parità: una curva invariante di
peso w con q_in sul lato interno ha q_out ≡ w + q_in (mod 2).
"""

import logging
from enum import Enum
from typing import Dict, List, Optional, Sequence, Tuple

from singstar.core.errors import QuotientError
from singstar.graphs.star_graph import StarGraph
from singstar.quotients.engine import CurveSpec, FixedPointSpec, IsolatedPoint

logger = logging.getLogger(__name__)


class InvolutionKind(str, Enum):
    """Involuzioni di una stella a tre rami."""

    CENTRAL = "central"
    CYCLIC = "cyclic"
    NON_CYCLIC = "non_cyclic"


def _propaga_parita(
    ids: Sequence[int], pesi: Sequence[int], interno: Optional[int], isolato_interno: bool
) -> Dict[int, CurveSpec]:
    """
    Annota un ramo invariante dal lato del centro verso l'esterno.

    Args:
        ids: Id delle curve del ramo
        pesi: Pesi corrispondenti
        interno: Id della curva che precede il ramo
        isolato_interno: Vero se il contatto con `interno` è un punto isolato,
            falso se `interno` è puntualmente fissa
    """
    annotazioni: Dict[int, CurveSpec] = {}
    stato = "isolato" if isolato_interno else "trasversale"
    precedente = interno
    for k, (id_curva, peso) in enumerate(zip(ids, pesi)):
        if stato == "puntuale":
            annotazioni[id_curva] = CurveSpec.pointwise()
            stato = "trasversale"
            precedente = id_curva
            continue

        punti: List[IsolatedPoint] = []
        q_in = 1 if stato == "isolato" else 0
        if q_in:
            punti.append(IsolatedPoint(2, 1, at=precedente))
        if (peso + q_in) % 2 == 1:
            successivo = ids[k + 1] if k + 1 < len(ids) else None
            punti.append(IsolatedPoint(2, 1, at=successivo))
            stato = "isolato"
        else:
            stato = "puntuale"
        annotazioni[id_curva] = CurveSpec.invariant(*punti)
        precedente = id_curva
    return annotazioni


def _ids_ramo(g: StarGraph, ramo: int) -> List[int]:
    return [g.curve_id(ramo, j) for j in range(len(g.branches[ramo]))]


def _coppia_scambiata(g: StarGraph) -> Tuple[int, int, int]:
    """(ramo fisso, ramo scambiato, ramo scambiato)."""
    for _, indici in g.branch_classes():
        if len(indici) >= 2:
            coppia = (indici[-2], indici[-1])
            fisso = next(i for i in range(3) if i not in coppia)
            return fisso, coppia[0], coppia[1]
    raise QuotientError("nessuna coppia di rami uguali da scambiare")


def _verifica_tre_rami(g: StarGraph) -> None:
    if g.genus != 0 or g.num_branches != 3:
        raise QuotientError(
            f"annotazioni standard solo per stelle razionali a tre rami, "
            f"ricevuto genere {g.genus} con {g.num_branches} rami"
        )


def involution_action(g: StarGraph, kind: InvolutionKind) -> FixedPointSpec:
    """
    Annotazione di un'involuzione della stella.

    - CENTRAL: la curva centrale è puntualmente fissa e ogni ramo è invariante;
    - CYCLIC: due rami uguali scambiati, il punto fisso libero del centro
      è trasversale (il quoziente è ciclico);
    - NON_CYCLIC: due rami uguali scambiati, il punto fisso libero del
      centro è isolato di tipo (2,1).

    Raises:
        QuotientError: se la stella non ha tre rami o manca una coppia di
            rami uguali per le involuzioni che scambiano
    """
    _verifica_tre_rami(g)
    kind = InvolutionKind(kind)
    annotazioni: Dict[int, CurveSpec] = {}

    if kind is InvolutionKind.CENTRAL:
        annotazioni[0] = CurveSpec.pointwise()
        for ramo, pesi in enumerate(g.branches):
            annotazioni.update(_propaga_parita(_ids_ramo(g, ramo), pesi.weights, 0, False))
        return FixedPointSpec(2, annotazioni)

    fisso, primo, secondo = _coppia_scambiata(g)
    for a, b in zip(_ids_ramo(g, primo), _ids_ramo(g, secondo)):
        annotazioni[a] = CurveSpec.swap(b)
        annotazioni[b] = CurveSpec.swap(a)

    q_libero = 1 if kind is InvolutionKind.NON_CYCLIC else 0
    contatto_isolato = (g.central_weight + q_libero) % 2 == 1
    ids_fisso = _ids_ramo(g, fisso)

    punti: List[IsolatedPoint] = []
    if contatto_isolato:
        punti.append(IsolatedPoint(2, 1, at=ids_fisso[0]))
        annotazioni.update(_propaga_parita(ids_fisso, g.branches[fisso].weights, 0, True))
    else:
        annotazioni[ids_fisso[0]] = CurveSpec.pointwise()
        annotazioni.update(
            _propaga_parita(ids_fisso[1:], g.branches[fisso].weights[1:], ids_fisso[0], False)
        )
    if q_libero:
        punti.append(IsolatedPoint(2, 1))
    annotazioni[0] = CurveSpec.invariant(*punti)

    logger.debug("involuzione %s: ramo fisso %d, rami scambiati %d e %d", kind.value, fisso, primo, secondo)
    return FixedPointSpec(2, annotazioni)


def rotation_action(g: StarGraph) -> FixedPointSpec:
    """
    Rotazione di ordine 3 di tre rami identici.

    I due punti fissi del centro sono isolati con rotazioni (1,2) se
    b ≡ 0, (1,1) se b ≡ 1 e (2,2) se b ≡ 2 modulo 3.
    """
    _verifica_tre_rami(g)
    if len(g.branch_classes()) != 1:
        raise QuotientError("la rotazione di ordine 3 richiede tre rami identici")

    annotazioni: Dict[int, CurveSpec] = {}
    rami = [_ids_ramo(g, i) for i in range(3)]
    for posizione in range(len(rami[0])):
        for i in range(3):
            annotazioni[rami[i][posizione]] = CurveSpec.swap(rami[(i + 1) % 3][posizione])

    rotazioni = {0: (1, 2), 1: (1, 1), 2: (2, 2)}[g.central_weight % 3]
    annotazioni[0] = CurveSpec.invariant(*(IsolatedPoint(3, q) for q in rotazioni))
    return FixedPointSpec(3, annotazioni)
