"""
Famiglie con nome e tabelle chiuse dei loro quozienti.

- Singolarità triangolari D_{p,q,r}: curva centrale di peso 1 e tre rami
  di una sola curva; quozienti per σ3, Z3 e S3.
- Singolarità tetraedriche T_m e i quozienti ottaedrici T_m/σ3.
- Quozienti per l'involuzione centrale di alcune triangolari.
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Tuple

from singstar.core.errors import ArithmeticDomainError
from singstar.graphs.chain_graph import ChainGraph
from singstar.graphs.star_graph import StarGraph, graphs_isomorphic
from singstar.quotients.actions import InvolutionKind, involution_action, rotation_action
from singstar.quotients.engine import GrafoQuoziente, star_quotient

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class NamedQuotient:
    """
    Voce di una tabella di quozienti.

    Attributes:
        group: Nome del gruppo che agisce ("σ3", "Z3", "S3", "σ1")
        name: Nome del quoziente, ad esempio "D_{6,2,5}"
        graph: Grafo minimale del quoziente
    """

    group: str
    name: str
    graph: GrafoQuoziente


def _triangolo(p: int, q: int, r: int) -> StarGraph:
    return StarGraph(0, 1, ((p,), (q,), (r,)))


def family_triangle(p: int, q: int, r: int) -> StarGraph:
    """
    Grafo di D_{p,q,r}.

    Raises:
        InvariantViolation: se un peso è < 2 o 1/p + 1/q + 1/r >= 1
    """
    return _triangolo(p, q, r)


def family_triangle_quotients(p: int, q: int, r: int) -> List[NamedQuotient]:
    """
    Tabella chiusa dei quozienti di D_{p,q,r}.

    D_{p,q,q}/σ3 = D_{2p,2,q}; se p = q = r anche D_{p,p,p}/Z3 = D_{3,3,p}
    e D_{p,p,p}/S3 = D_{2,3,2p}. Tabella vuota se i rami sono distinti.
    """
    grafo = family_triangle(p, q, r)
    classi = grafo.branch_classes()
    if len(classi) == 3:
        return []
    if len(classi) == 1:
        return [
            NamedQuotient("σ3", f"D_{{{2 * p},2,{p}}}", _triangolo(2 * p, 2, p)),
            NamedQuotient("Z3", f"D_{{3,3,{p}}}", _triangolo(3, 3, p)),
            NamedQuotient("S3", f"D_{{2,3,{2 * p}}}", _triangolo(2, 3, 2 * p)),
        ]
    (singolo,) = [pesi[0] for pesi, indici in classi if len(indici) == 1]
    (doppio,) = [pesi[0] for pesi, indici in classi if len(indici) == 2]
    return [
        NamedQuotient(
            "σ3", f"D_{{{2 * singolo},2,{doppio}}}", _triangolo(2 * singolo, 2, doppio)
        )
    ]


def engine_triangle_quotients(p: int, q: int, r: int) -> List[NamedQuotient]:
    """
    Le stesse voci di `family_triangle_quotients` ricalcolate con il motore.

    S3 si ottiene componendo: prima Z3, poi σ3 sul quoziente.
    """
    grafo = family_triangle(p, q, r)
    voci: List[NamedQuotient] = []
    for voce in family_triangle_quotients(p, q, r):
        if voce.group == "σ3":
            risultato = star_quotient(grafo, involution_action(grafo, InvolutionKind.NON_CYCLIC))
        elif voce.group == "Z3":
            risultato = star_quotient(grafo, rotation_action(grafo))
        else:
            intermedio = star_quotient(grafo, rotation_action(grafo)).graph
            risultato = star_quotient(
                intermedio, involution_action(intermedio, InvolutionKind.NON_CYCLIC)
            )
        voci.append(NamedQuotient(voce.group, voce.name, risultato.graph))
    return voci


def triangle_table_agreement(p: int, q: int, r: int) -> List[Tuple[NamedQuotient, GrafoQuoziente, bool]]:
    """(voce della tabella, grafo del motore, accordo) per ogni voce."""
    esito = []
    for attesa, calcolata in zip(
        family_triangle_quotients(p, q, r), engine_triangle_quotients(p, q, r)
    ):
        accordo = graphs_isomorphic(attesa.graph, calcolata.graph)
        if not accordo:
            logger.warning("tabella e motore in disaccordo su %s/%s", attesa.name, attesa.group)
        esito.append((attesa, calcolata.graph, accordo))
    return esito


def _peso_tetraedrico(m: int) -> Tuple[int, int]:
    """(b, m mod 6) per m ≡ 1 o 5 mod 6, m >= 7."""
    if m < 7 or m % 6 not in (1, 5):
        raise ArithmeticDomainError(f"T_m richiede m ≡ 1 o 5 (mod 6) e m >= 7, ricevuto {m}")
    resto = m % 6
    return (m - resto) // 6 + 2, resto


def family_tetrahedral(m: int) -> Tuple[StarGraph, StarGraph]:
    """
    Grafi di T_m e del quoziente ottaedrico T_m/σ3.

    m = 6(b-2)+1: T_m ha centro b e rami [2,2],[2,2],[2];
    m = 6(b-2)+5: T_m ha centro b e rami [2],[3],[3].
    """
    b, resto = _peso_tetraedrico(m)
    if resto == 1:
        tetraedrica = StarGraph(0, b, ((2, 2), (2, 2), (2,)))
        if b % 2 == 1:
            ottaedrica = StarGraph(0, (b + 1) // 2, ((2,), (4,), (2, 2)))
        else:
            ottaedrica = StarGraph(0, (b + 2) // 2, ((2,), (2, 2), (2, 2, 2)))
    else:
        tetraedrica = StarGraph(0, b, ((2,), (3,), (3,)))
        if b % 2 == 1:
            ottaedrica = StarGraph(0, (b + 1) // 2, ((2,), (3,), (4,)))
        else:
            ottaedrica = StarGraph(0, (b + 2) // 2, ((2,), (3,), (2, 2, 2)))
    return tetraedrica, ottaedrica


def engine_tetrahedral_quotient(m: int) -> GrafoQuoziente:
    """T_m/σ3 calcolato dal motore con l'annotazione dell'involuzione non ciclica."""
    tetraedrica, _ = family_tetrahedral(m)
    return star_quotient(
        tetraedrica, involution_action(tetraedrica, InvolutionKind.NON_CYCLIC)
    ).graph


CENTRAL_INVOLUTION_QUOTIENTS: Dict[Tuple[int, int, int], GrafoQuoziente] = {
    (3, 3, 5): StarGraph(0, 2, ((2, 2), (2, 2), (3, 2))),
    (3, 4, 5): StarGraph(0, 2, ((2, 2), (2,), (3, 2))),
    (3, 3, 6): StarGraph(0, 2, ((2, 2), (2, 2), (3,))),
    (2, 3, 7): ChainGraph(()),
}
"""D_{p,q,r}/σ1 per l'involuzione centrale (l'elemento -1 di C*)."""


def central_involution_quotient(p: int, q: int, r: int) -> GrafoQuoziente:
    """D_{p,q,r}/σ1 calcolato dal motore."""
    grafo = family_triangle(p, q, r)
    return star_quotient(grafo, involution_action(grafo, InvolutionKind.CENTRAL)).graph
