"""
Determinazione del gruppo finito G/G1 di una singolarità quasi omogenea.

Il report combina Aut Γ, il gruppo A delle trasformazioni della curva
centrale che preservano i punti etichettati, il caso ellittico semplice e
il criterio di scissione dell'estensione 1 → G1 → G → G/G1 → 1.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import factorial, prod
from typing import List, Optional, Sequence, Tuple, Union

from singstar.core.config import ClasseJ
from singstar.core.errors import ArithmeticDomainError, OptionsError, SingstarError
from singstar.core.hirzebruch_jung import hj_expand
from singstar.core.razionali import format_rational
from singstar.graphs.star_graph import StarGraph
from singstar.invariants.lattice import LIMITE_AUTOMORFISMI, torsion_action_faithful
from singstar.invariants.seifert import GANTER_CAVEAT, SeifertPair, ganter_bound, seifert_pairs
from singstar.symmetry.moebius import (
    EQUIANHARMONIC,
    GroupDescription,
    PointConfig,
    identify_group,
    label_preserving_group,
    quadrilateral_symmetry,
)

logger = logging.getLogger(__name__)


class Determination(str, Enum):
    EXACT = "exact"
    UPPER_BOUND = "upper_bound"


class Splitting(str, Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class AutGamma:
    """
    Aut Γ come prodotto di gruppi simmetrici sulle classi di rami uguali.

    Attributes:
        classes: Coppie (pesi del ramo, molteplicità), ordinate per pesi
    """

    classes: Tuple[Tuple[Tuple[int, ...], int], ...]

    @property
    def order(self) -> int:
        return prod(factorial(molteplicita) for _, molteplicita in self.classes)

    def description(self) -> GroupDescription:
        fattori = sorted(m for _, m in self.classes if m >= 2)
        if not fattori:
            return GroupDescription.cyclic(1)
        if fattori == [2]:
            return GroupDescription.cyclic(2)
        if fattori == [3]:
            return GroupDescription.dihedral(6)
        if fattori == [2, 2]:
            return GroupDescription.dihedral(4)
        if len(fattori) == 1:
            return GroupDescription(f"S{fattori[0]}", self.order, "symmetric")
        nomi = ["Z2" if m == 2 else f"S{m}" for m in fattori]
        return GroupDescription(" x ".join(nomi), self.order, "product")


def aut_gamma(grafo: StarGraph) -> AutGamma:
    """Classi di rami per uguaglianza esatta delle sequenze di pesi."""
    return AutGamma(tuple((pesi, len(indici)) for pesi, indici in grafo.branch_classes()))


def elliptic_aut0_order(j_class: Union[ClasseJ, str]) -> int:
    """|Aut0 E0| = 6, 4 o 2 per j = 0, j = 1 o j generico."""
    return {ClasseJ.ZERO: 6, ClasseJ.ONE: 4, ClasseJ.GENERIC: 2}[ClasseJ(j_class)]


@dataclass(frozen=True)
class SymmetryOptions:
    """
    Dati analitici facoltativi per il report.

    Attributes:
        points: Posizioni dei punti p_i sulla curva centrale, nell'ordine dei rami
        lam: Birapporto dei quattro punti (r = 4)
        j: Valore di j, oppure EQUIANHARMONIC
        j_class: Classe del j-invariante della curva ellittica centrale
        epsilon: Grado della 2-forma per il limite di Ganter
        limite_automorfismi: Massimo |Aut Γ| enumerato per la nota di fedeltà
    """

    points: Optional[PointConfig] = None
    lam: Optional[Fraction] = None
    j: Optional[object] = None
    j_class: Optional[ClasseJ] = None
    epsilon: Optional[int] = None
    limite_automorfismi: int = LIMITE_AUTOMORFISMI

    @property
    def ha_moduli(self) -> bool:
        return self.points is not None or self.lam is not None or self.j is not None


@dataclass(frozen=True)
class SymmetryReport:
    """Determinazione di G/G1."""

    group_name: str
    order: Optional[int]
    splits: Splitting
    embeds_in_aut_gamma: bool
    determination: Determination
    ganter_bound: Optional[Fraction] = None
    aut_gamma_order: Optional[int] = None
    notes: Tuple[str, ...] = field(default=())

    def voci(self) -> List[Tuple[str, str]]:
        """Coppie (chiave, valore) nell'ordine di stampa."""
        voci = [
            ("group", self.group_name),
            ("order", "unknown" if self.order is None else str(self.order)),
            ("splits", self.splits.value),
            ("determination", self.determination.value),
            ("embeds_in_aut_gamma", "yes" if self.embeds_in_aut_gamma else "no"),
        ]
        if self.aut_gamma_order is not None:
            voci.append(("aut_gamma_order", str(self.aut_gamma_order)))
        if self.ganter_bound is not None:
            voci.append(("ganter_bound", format_rational(self.ganter_bound)))
        for nota in self.notes:
            voci.append(("note", nota))
        return voci


def criterio_scissione(b: int, gruppo: GroupDescription) -> Splitting:
    """
    Condizione sufficiente di scissione: b pari, A ciclico, oppure A
    diedrale di ordine 2q con q dispari. Altrimenti UNKNOWN, mai NO.
    """
    if b % 2 == 0 or gruppo.is_cyclic:
        return Splitting.YES
    if gruppo.family == "dihedral" and gruppo.order is not None and (gruppo.order // 2) % 2 == 1:
        return Splitting.YES
    return Splitting.UNKNOWN


def _gruppo_da_moduli(grafo: StarGraph, opzioni: SymmetryOptions) -> GroupDescription:
    etichette = seifert_pairs(grafo)
    if opzioni.points is not None:
        if opzioni.lam is not None or opzioni.j is not None:
            raise OptionsError("indicare i punti oppure λ/j, non entrambi")
        if len(opzioni.points) != grafo.num_branches:
            raise OptionsError(
                f"{len(opzioni.points)} punti per {grafo.num_branches} rami"
            )
        configurazione = opzioni.points.rietichetta(etichette)
        return identify_group(label_preserving_group(configurazione))
    if grafo.num_branches != 4:
        raise OptionsError(f"λ e j richiedono 4 rami, il grafo ne ha {grafo.num_branches}")
    return quadrilateral_symmetry(etichette, lam=opzioni.lam, j=opzioni.j)


def _nota_fedelta(grafo: StarGraph, aut: AutGamma, limite: int) -> List[str]:
    """Aut Γ agisce fedelmente sulla torsione di H_1 del link?"""
    if aut.order == 1:
        return []
    try:
        fedele = torsion_action_faithful(grafo, limite)
    except SingstarError as exc:
        logger.debug("fedeltà non verificata: %s", exc)
        return []
    esito = "yes" if fedele else "no"
    return [f"faithful_on_torsion: {esito} (Aut Γ branch permutations only)"]


def _report_razionale(grafo: StarGraph, opzioni: SymmetryOptions, aut: AutGamma) -> SymmetryReport:
    b = grafo.central_weight
    r = grafo.num_branches
    note = _nota_fedelta(grafo, aut, opzioni.limite_automorfismi)
    if r == 3:
        if opzioni.ha_moduli:
            note.append("three points carry no moduli; analytic data ignored")
        gruppo = aut.description()
        return SymmetryReport(
            gruppo.name, gruppo.order, Splitting.YES, True, Determination.EXACT,
            aut_gamma_order=aut.order, notes=tuple(note),
        )
    if opzioni.ha_moduli:
        gruppo = _gruppo_da_moduli(grafo, opzioni)
        return SymmetryReport(
            gruppo.name, gruppo.order, criterio_scissione(b, gruppo), True,
            Determination.EXACT, aut_gamma_order=aut.order, notes=tuple(note),
        )
    gruppo = aut.description()
    # ogni sottogruppo di {1}, Z2, S3 soddisfa il criterio di scissione
    scissione = Splitting.YES if b % 2 == 0 or aut.order in (1, 2, 6) and len(
        [m for _, m in aut.classes if m >= 2]
    ) <= 1 else Splitting.UNKNOWN
    note.append("upper bound: G/G1 embeds into Aut Γ; supply points or λ/j for A")
    return SymmetryReport(
        gruppo.name, gruppo.order, scissione, True, Determination.UPPER_BOUND,
        aut_gamma_order=aut.order, notes=tuple(note),
    )


def _report_ellittico(grafo: StarGraph, opzioni: SymmetryOptions) -> SymmetryReport:
    b = grafo.central_weight
    scissione = Splitting.YES if b == 1 else Splitting.NO
    if opzioni.j_class is None:
        nome = "Aut0(E0)" if b == 1 else f"(Z{b})^2 ⋊ Aut0(E0)"
        return SymmetryReport(
            nome, b * b * 6, scissione, False, Determination.UPPER_BOUND, aut_gamma_order=1,
            notes=("j class not given: order bounded by the j = 0 case",),
        )
    k = elliptic_aut0_order(opzioni.j_class)
    nome = f"Z{k}" if b == 1 else f"(Z{b})^2 ⋊ Z{k}"
    return SymmetryReport(
        nome, b * b * k, scissione, False, Determination.EXACT, aut_gamma_order=1
    )


def _report_genere_alto(grafo: StarGraph, aut: AutGamma) -> SymmetryReport:
    immersione = grafo.num_branches > 2 * grafo.genus + 2
    if immersione:
        gruppo = aut.description()
        return SymmetryReport(
            gruppo.name, gruppo.order, Splitting.UNKNOWN, True, Determination.UPPER_BOUND,
            aut_gamma_order=aut.order, notes=("r > 2g+2: G/G1 embeds into Aut Γ",),
        )
    return SymmetryReport(
        "finite", None, Splitting.UNKNOWN, False, Determination.UPPER_BOUND,
        aut_gamma_order=aut.order, notes=("G/G1 is finite; no algorithm for Aut E0 at this genus",),
    )


def symmetry_report(grafo: StarGraph, opzioni: Optional[SymmetryOptions] = None) -> SymmetryReport:
    """
    Report di G/G1 secondo la forma del grafo.

    - g = 0, r = 3: Aut Γ, esatto, scinde;
    - g = 0, r >= 4 con punti o λ/j: gruppo A, esatto;
    - g = 0 senza moduli: Aut Γ come limite superiore;
    - g = 1, r = 0: (Z_b)^2 ⋊ Aut0 E0, scinde se e solo se b = 1;
    - altrimenti: solo finitezza e immersione in Aut Γ se r > 2g + 2.

    Raises:
        OptionsError: se le opzioni non sono compatibili con il grafo
    """
    opzioni = opzioni or SymmetryOptions()
    aut = aut_gamma(grafo)

    if grafo.genus == 0:
        if opzioni.j_class is not None:
            raise OptionsError("j_class si applica solo a curve centrali ellittiche")
        report = _report_razionale(grafo, opzioni, aut)
    elif grafo.genus == 1 and grafo.num_branches == 0:
        if opzioni.ha_moduli:
            raise OptionsError("punti, λ e j si applicano solo a curve centrali razionali")
        report = _report_ellittico(grafo, opzioni)
    else:
        if opzioni.ha_moduli or opzioni.j_class is not None:
            raise OptionsError("nessun dato analitico è accettato per questo genere")
        report = _report_genere_alto(grafo, aut)
    logger.debug("report di simmetria: %s, %s", report.group_name, report.determination.value)

    if opzioni.epsilon is not None:
        limite = ganter_bound(grafo, opzioni.epsilon)
        report = SymmetryReport(
            report.group_name, report.order, report.splits, report.embeds_in_aut_gamma,
            report.determination, limite, report.aut_gamma_order,
            report.notes + (f"ganter: {GANTER_CAVEAT}",),
        )
    return report


def realize_finite_group(cfg: PointConfig, b: int) -> StarGraph:
    """
    Stella di genere 0 con peso centrale b e ramo i = hj_expand(α_i, β_i).

    Le etichette della configurazione devono essere coppie di Seifert
    (oggetti SeifertPair o testi `a/b`).

    Raises:
        ArithmeticDomainError: se b <= Σ β_i/α_i
    """
    coppie = [
        etichetta if isinstance(etichetta, SeifertPair) else SeifertPair.parse(str(etichetta))
        for etichetta in cfg.labels
    ]
    soglia = sum((Fraction(c.beta, c.alpha) for c in coppie), Fraction(0))
    if b <= soglia:
        raise ArithmeticDomainError(
            f"il grado b = {b} deve superare Σβ/α = {format_rational(soglia)}"
        )
    return StarGraph(0, b, tuple(hj_expand(c.alpha, c.beta) for c in coppie))


def family_fermat(d: int) -> StarGraph:
    """Cono sulla curva di Fermat di grado d: genere (d-1)(d-2)/2, peso d, nessun ramo."""
    if d < 3:
        raise ArithmeticDomainError(f"la famiglia di Fermat richiede d >= 3, ricevuto {d}")
    return StarGraph((d - 1) * (d - 2) // 2, d, ())


def fermat_symmetry(d: int) -> SymmetryReport:
    """
    G/G1 ≅ H/Z_d di ordine 6d² per x^d + y^d + z^d.

    Non scinde se e solo se 3 divide d. Per d >= 4 il limite di Ganter usa
    il grado della forma ε = d - 3.
    """
    grafo = family_fermat(d)
    limite = ganter_bound(grafo, d - 3) if d >= 4 else None
    note = ("ganter: epsilon = d - 3 for this family",) if limite is not None else (
        "epsilon = 0 (simple elliptic): no ganter bound",
    )
    return SymmetryReport(
        f"(Z{d})^2 ⋊ S3",
        6 * d * d,
        Splitting.NO if d % 3 == 0 else Splitting.YES,
        False,
        Determination.EXACT,
        limite,
        1,
        note,
    )


__all__ = [
    "AutGamma",
    "Determination",
    "EQUIANHARMONIC",
    "Splitting",
    "SymmetryOptions",
    "SymmetryReport",
    "aut_gamma",
    "criterio_scissione",
    "elliptic_aut0_order",
    "family_fermat",
    "fermat_symmetry",
    "realize_finite_group",
    "symmetry_report",
]
