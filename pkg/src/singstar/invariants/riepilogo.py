"""Riepilogo degli invarianti di una stella, condiviso da CLI ed export."""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

from singstar.core.errors import SingstarError
from singstar.core.razionali import format_rational
from singstar.graphs.star_graph import StarGraph, star_to_plumbing
from singstar.invariants.lattice import (
    LIMITE_AUTOMORFISMI,
    LinkHomology,
    determinant,
    intersection_matrix,
    link_homology,
    torsion_action_faithful,
)
from singstar.invariants.seifert import (
    GANTER_CAVEAT,
    SeifertPair,
    canonical_pp,
    ganter_bound,
    orbifold_euler_characteristic,
    seifert_degree,
    seifert_pairs,
)
from singstar.symmetry.report import aut_gamma

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class InvariantSummary:
    """Invarianti numerici e reticolari di una stella definita negativa."""

    grafo: StarGraph
    seifert_pairs: Tuple[SeifertPair, ...]
    seifert_degree: Fraction
    pp: Fraction
    orbifold_euler: Fraction
    determinant: int
    homology: LinkHomology
    aut_gamma_order: int
    faithful: Optional[bool]
    ganter_bound: Optional[Fraction] = None

    def voci(self) -> List[Tuple[str, str]]:
        """Coppie (chiave, valore) nell'ordine di stampa."""
        fattori = self.homology.torsion.invariant_factors
        voci = [
            ("seifert_pairs", " ".join(str(c) for c in self.seifert_pairs) or "none"),
            ("seifert_degree", format_rational(self.seifert_degree)),
            ("pp", format_rational(self.pp)),
            ("orbifold_euler", format_rational(self.orbifold_euler)),
            ("determinant", str(self.determinant)),
            ("invariant_factors", " ".join(str(d) for d in fattori) or "none"),
            ("discriminant_group", str(self.homology.torsion)),
            ("link_homology", str(self.homology)),
            ("free_rank", str(self.homology.free_rank)),
            ("aut_gamma_order", str(self.aut_gamma_order)),
            ("faithful", _si_no(self.faithful)),
        ]
        if self.ganter_bound is not None:
            voci.append(("ganter_bound", format_rational(self.ganter_bound)))
            voci.append(("ganter_caveat", GANTER_CAVEAT))
        return voci

    def as_record(self) -> Dict[str, Any]:
        """Riga piatta per l'export tabellare."""
        record: Dict[str, Any] = {
            "genus": self.grafo.genus,
            "central_weight": self.grafo.central_weight,
            "branches": " ".join(str(r) for r in self.grafo.branches),
        }
        record.update(dict(self.voci()))
        record.pop("ganter_caveat", None)
        return record


def _si_no(valore: Optional[bool]) -> str:
    if valore is None:
        return "unknown"
    return "yes" if valore else "no"


def summarize(
    grafo: StarGraph, epsilon: Optional[int] = None, limite: int = LIMITE_AUTOMORFISMI
) -> InvariantSummary:
    """
    Calcola tutti gli invarianti di `grafo`.

    La fedeltà dell'azione sulla torsione è `None` se |Aut Γ| supera
    `limite`.
    """
    plumbing = star_to_plumbing(grafo)
    try:
        fedele: Optional[bool] = torsion_action_faithful(grafo, limite)
    except SingstarError as exc:
        logger.warning("fedeltà non calcolata: %s", exc)
        fedele = None
    return InvariantSummary(
        grafo=grafo,
        seifert_pairs=tuple(seifert_pairs(grafo)),
        seifert_degree=seifert_degree(grafo),
        pp=canonical_pp(grafo),
        orbifold_euler=orbifold_euler_characteristic(grafo),
        determinant=determinant(intersection_matrix(plumbing)),
        homology=link_homology(grafo),
        aut_gamma_order=aut_gamma(grafo).order,
        faithful=fedele,
        ganter_bound=ganter_bound(grafo, epsilon) if epsilon is not None else None,
    )
