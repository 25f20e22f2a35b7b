"""
Retta proiettiva razionale: punti, trasformazioni di Möbius intere,
birapporto, mappa j e gruppi finiti di automorfismi che preservano le
etichette di una configurazione di punti.
"""

import logging
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from math import gcd
from typing import Hashable, List, Optional, Sequence, Tuple, Union

from singstar.core.errors import ArithmeticDomainError, SingstarError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ProjPoint:
    """
    Punto (x : y) di P¹(Q), ridotto: gcd = 1, y > 0 oppure (1 : 0).
    """

    x: int
    y: int

    def __post_init__(self) -> None:
        x, y = int(self.x), int(self.y)
        if x == 0 and y == 0:
            raise ArithmeticDomainError("il punto (0 : 0) non esiste")
        g = gcd(x, y)
        x, y = x // g, y // g
        if y < 0 or (y == 0 and x < 0):
            x, y = -x, -y
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)

    @classmethod
    def infinity(cls) -> "ProjPoint":
        return cls(1, 0)

    @classmethod
    def from_rational(cls, valore: Union[int, Fraction]) -> "ProjPoint":
        valore = Fraction(valore)
        return cls(valore.numerator, valore.denominator)

    @classmethod
    def parse(cls, testo: str) -> "ProjPoint":
        """Legge `X:Y`."""
        parti = testo.split(":")
        if len(parti) != 2:
            raise ArithmeticDomainError(f"punto non valido: {testo!r}")
        try:
            return cls(int(parti[0]), int(parti[1]))
        except ValueError as exc:
            if isinstance(exc, ArithmeticDomainError):
                raise
            raise ArithmeticDomainError(f"punto non valido: {testo!r}") from exc

    @property
    def is_infinity(self) -> bool:
        return self.y == 0

    def as_fraction(self) -> Optional[Fraction]:
        return None if self.is_infinity else Fraction(self.x, self.y)

    def __str__(self) -> str:
        return f"{self.x}:{self.y}"


def _det(p: ProjPoint, q: ProjPoint) -> int:
    return p.x * q.y - p.y * q.x


@dataclass(frozen=True)
class MoebiusMap:
    """
    Matrice intera (a, b; c, d) a meno del segno, con contenuto 1 e primo
    coefficiente non nullo positivo.
    """

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self) -> None:
        coefficienti = [int(v) for v in (self.a, self.b, self.c, self.d)]
        if coefficienti[0] * coefficienti[3] - coefficienti[1] * coefficienti[2] == 0:
            raise ArithmeticDomainError(f"matrice singolare: {tuple(coefficienti)}")
        contenuto = 0
        for v in coefficienti:
            contenuto = gcd(contenuto, v)
        coefficienti = [v // contenuto for v in coefficienti]
        primo = next(v for v in coefficienti if v != 0)
        if primo < 0:
            coefficienti = [-v for v in coefficienti]
        for nome, valore in zip("abcd", coefficienti):
            object.__setattr__(self, nome, valore)

    @classmethod
    def identity(cls) -> "MoebiusMap":
        return cls(1, 0, 0, 1)

    @property
    def matrix(self) -> Tuple[Tuple[int, int], Tuple[int, int]]:
        return (self.a, self.b), (self.c, self.d)

    def __call__(self, punto: ProjPoint) -> ProjPoint:
        return apply(self, punto)

    def compose(self, altra: "MoebiusMap") -> "MoebiusMap":
        """self ∘ altra."""
        return MoebiusMap(
            self.a * altra.a + self.b * altra.c,
            self.a * altra.b + self.b * altra.d,
            self.c * altra.a + self.d * altra.c,
            self.c * altra.b + self.d * altra.d,
        )

    def inverse(self) -> "MoebiusMap":
        return MoebiusMap(self.d, -self.b, -self.c, self.a)

    @property
    def is_identity(self) -> bool:
        return self == MoebiusMap.identity()

    def order(self, limite: int = 120) -> Optional[int]:
        """Ordine della mappa, None se supera `limite`."""
        potenza = self
        for k in range(1, limite + 1):
            if potenza.is_identity:
                return k
            potenza = potenza.compose(self)
        return None

    def __str__(self) -> str:
        return f"({self.a},{self.b};{self.c},{self.d})"


def apply(mappa: MoebiusMap, punto: ProjPoint) -> ProjPoint:
    """Immagine ridotta (a·x + b·y : c·x + d·y)."""
    return ProjPoint(mappa.a * punto.x + mappa.b * punto.y, mappa.c * punto.x + mappa.d * punto.y)


def compose(m1: MoebiusMap, m2: MoebiusMap) -> MoebiusMap:
    return m1.compose(m2)


def _distinti(punti: Sequence[ProjPoint]) -> None:
    if len(set(punti)) != len(punti):
        raise ArithmeticDomainError(f"punti ripetuti: {[str(p) for p in punti]}")


def cross_ratio(p1: ProjPoint, p2: ProjPoint, p3: ProjPoint, p4: ProjPoint) -> Fraction:
    """
    Birapporto ((p1 - p3)(p2 - p4)) / ((p1 - p4)(p2 - p3)) in forma proiettiva.

    Raises:
        ArithmeticDomainError: se i punti non sono distinti
    """
    _distinti([p1, p2, p3, p4])
    return Fraction(_det(p1, p3) * _det(p2, p4), _det(p1, p4) * _det(p2, p3))


def j_invariant(lam: Union[int, Fraction]) -> Fraction:
    """j(λ) = 4(λ² - λ + 1)³ / (27 λ² (λ - 1)²)."""
    lam = Fraction(lam)
    if lam in (0, 1):
        raise ArithmeticDomainError(f"j non definito per λ = {lam}")
    return 4 * (lam * lam - lam + 1) ** 3 / (27 * lam * lam * (lam - 1) ** 2)


def _verso_zero_inf_uno(p1: ProjPoint, p2: ProjPoint, p3: ProjPoint) -> Tuple[int, int, int, int]:
    # manda p1 -> 0, p2 -> ∞, p3 -> 1
    k1, k2 = _det(p3, p2), _det(p3, p1)
    return k1 * p1.y, -k1 * p1.x, k2 * p2.y, -k2 * p2.x


def moebius_through(
    sorgente: Sequence[ProjPoint], destinazione: Sequence[ProjPoint]
) -> MoebiusMap:
    """
    Unica mappa che manda sorgente[i] in destinazione[i], i = 0, 1, 2.

    Raises:
        ArithmeticDomainError: se una terna non è di punti distinti
    """
    if len(sorgente) != 3 or len(destinazione) != 3:
        raise ArithmeticDomainError("servono due terne di punti")
    _distinti(sorgente)
    _distinti(destinazione)
    a, b, c, d = _verso_zero_inf_uno(*sorgente)
    e, f, g, h = _verso_zero_inf_uno(*destinazione)
    # aggiunta della seconda matrice per la prima
    return MoebiusMap(h * a - f * c, h * b - f * d, -g * a + e * c, -g * b + e * d)


@dataclass(frozen=True)
class PointConfig:
    """
    Punti etichettati di P¹(Q), a due a due distinti, almeno tre.

    Attributes:
        points: Punti nell'ordine dei rami
        labels: Etichette opache (in pratica coppie di Seifert)
    """

    points: Tuple[ProjPoint, ...]
    labels: Tuple[Hashable, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "points", tuple(self.points))
        object.__setattr__(self, "labels", tuple(self.labels))
        if len(self.points) != len(self.labels):
            raise ArithmeticDomainError("numero di etichette diverso dal numero di punti")
        if len(self.points) < 3:
            raise ArithmeticDomainError(f"servono almeno 3 punti, trovati {len(self.points)}")
        _distinti(self.points)

    @classmethod
    def da_coppie(cls, coppie: Sequence[Tuple[ProjPoint, Hashable]]) -> "PointConfig":
        return cls(tuple(p for p, _ in coppie), tuple(e for _, e in coppie))

    def rietichetta(self, etichette: Sequence[Hashable]) -> "PointConfig":
        return PointConfig(self.points, tuple(etichette))

    def __len__(self) -> int:
        return len(self.points)


def _preserva(mappa: MoebiusMap, cfg: PointConfig) -> bool:
    etichetta = dict(zip(cfg.points, cfg.labels))
    for punto, lab in zip(cfg.points, cfg.labels):
        immagine = apply(mappa, punto)
        if immagine not in etichetta or etichetta[immagine] != lab:
            return False
    return True


def label_preserving_group(cfg: PointConfig) -> List[MoebiusMap]:
    """
    Gruppo finito delle mappe che permutano i punti preservando le etichette.

    Ogni elemento è determinato dalle immagini dei primi tre punti: si
    enumerano le terne ordinate compatibili con le etichette. L'identità
    è il primo elemento.
    """
    sorgente = cfg.points[:3]
    trovate = {MoebiusMap.identity()}
    for i, j, k in permutations(range(len(cfg)), 3):
        if (cfg.labels[i], cfg.labels[j], cfg.labels[k]) != cfg.labels[:3]:
            continue
        mappa = moebius_through(sorgente, (cfg.points[i], cfg.points[j], cfg.points[k]))
        if _preserva(mappa, cfg):
            trovate.add(mappa)
    gruppo = sorted(trovate, key=lambda m: (not m.is_identity, (m.a, m.b, m.c, m.d)))
    logger.debug("gruppo delle etichette: %d elementi su %d punti", len(gruppo), len(cfg))
    return gruppo


# --- identificazione dei gruppi ---------------------------------------------


@dataclass(frozen=True)
class GroupDescription:
    """
    Nome, ordine e famiglia di un gruppo finito.

    `family` vale trivial, cyclic, dihedral, tetrahedral, octahedral,
    icosahedral, symmetric, product, semidirect oppure finite.
    """

    name: str
    order: Optional[int]
    family: str

    @classmethod
    def cyclic(cls, n: int) -> "GroupDescription":
        if n == 1:
            return cls("trivial", 1, "trivial")
        return cls(f"Z{n}", n, "cyclic")

    @classmethod
    def dihedral(cls, ordine: int) -> "GroupDescription":
        if ordine == 2:
            return cls.cyclic(2)
        nomi = {4: "Klein", 6: "S3"}
        return cls(nomi.get(ordine, f"dihedral({ordine})"), ordine, "dihedral")

    @classmethod
    def tetrahedral(cls) -> "GroupDescription":
        return cls("A4", 12, "tetrahedral")

    @property
    def is_cyclic(self) -> bool:
        return self.family in ("trivial", "cyclic")


def identify_group(mappe: Sequence[MoebiusMap]) -> GroupDescription:
    """Identifica il gruppo da ordine e multiinsieme degli ordini degli elementi."""
    n = len(mappe)
    ordini = Counter(m.order(limite=n) for m in mappe)
    if None in ordini:
        raise SingstarError("l'insieme di mappe non è un gruppo finito")
    massimo = max(ordini)
    if massimo == n:
        return GroupDescription.cyclic(n)
    if n == 12 and ordini[3] == 8:
        return GroupDescription.tetrahedral()
    if n == 24 and massimo == 4:
        return GroupDescription("S4", 24, "octahedral")
    if n == 60 and massimo == 5:
        return GroupDescription("A5", 60, "icosahedral")
    if n % 2 == 0 and massimo == n // 2 and ordini[2] >= n // 2:
        return GroupDescription.dihedral(n)
    return GroupDescription(f"group of order {n}", n, "finite")


# --- quadrilateri -------------------------------------------------------------


class _Equianarmonico:
    def __repr__(self) -> str:
        return "EQUIANHARMONIC"


EQUIANHARMONIC = _Equianarmonico()
"""Marcatore per j = 0 (λ radice di λ² - λ + 1, non razionale)."""


def _birapporto_riordinato(lam: Fraction, ordine: Sequence[int]) -> Fraction:
    # realizza quattro punti con birapporto λ e lo ricalcola nell'ordine dato
    punti = [
        ProjPoint.from_rational(lam / (lam - 1)),
        ProjPoint.infinity(),
        ProjPoint(0, 1),
        ProjPoint(1, 1),
    ]
    return cross_ratio(*(punti[k] for k in ordine))


def quadrilateral_symmetry(
    weights: Sequence[Hashable],
    lam: Optional[Union[int, Fraction]] = None,
    j: Optional[Union[int, Fraction, _Equianarmonico]] = None,
) -> GroupDescription:
    """
    Gruppo A per quattro punti etichettati, noto λ (nell'ordine dei pesi)
    oppure j (o il marcatore EQUIANHARMONIC).

    Convenzione per i casi con coppie: il birapporto viene riordinato in
    modo che la coppia di etichette uguali (quella che contiene il primo
    punto, se sono due) occupi le prime due posizioni; il caso speciale è
    λ = -1 in quell'ordine.

    Raises:
        ArithmeticDomainError: se mancano λ e j, se sono incoerenti, oppure
            se con sole coppie j = 1 non decide l'accoppiamento
    """
    if len(weights) != 4:
        raise ArithmeticDomainError(f"servono quattro pesi, ricevuti {len(weights)}")
    for peso in weights:
        if isinstance(peso, int) and peso <= 0:
            raise ArithmeticDomainError(f"peso non positivo: {peso}")

    if lam is not None:
        lam = Fraction(lam)
        valore_j = j_invariant(lam)
        if j is EQUIANHARMONIC or (j is not None and Fraction(j) != valore_j):
            raise ArithmeticDomainError(f"λ = {lam} e j = {j} sono incoerenti")
    elif j is EQUIANHARMONIC:
        valore_j = Fraction(0)
    elif j is not None:
        valore_j = Fraction(j)
    else:
        raise ArithmeticDomainError("serve λ, j oppure EQUIANHARMONIC")

    conteggi = Counter(weights)
    schema = sorted(conteggi.values())

    if schema == [4]:
        if valore_j == 0:
            return GroupDescription.tetrahedral()
        if valore_j == 1:
            return GroupDescription.dihedral(8)
        return GroupDescription.dihedral(4)
    if schema == [1, 3]:
        if valore_j == 0:
            return GroupDescription.cyclic(3)
        if valore_j == 1:
            return GroupDescription.cyclic(2)
        return GroupDescription.cyclic(1)
    if schema == [1, 1, 1, 1]:
        return GroupDescription.cyclic(1)

    # una o due coppie di etichette uguali
    if schema == [2, 2]:
        coppia = [k for k in range(4) if weights[k] == weights[0]]
    else:
        doppia = next(e for e, c in conteggi.items() if c == 2)
        coppia = [k for k in range(4) if weights[k] == doppia]
    resto = [k for k in range(4) if k not in coppia]

    if lam is not None:
        armonico = _birapporto_riordinato(lam, coppia + resto) == -1
    elif valore_j == 1:
        raise ArithmeticDomainError(
            "con j = 1 l'accoppiamento armonico dipende dall'ordine: fornire λ"
        )
    else:
        armonico = False

    if schema == [2, 2]:
        return GroupDescription.dihedral(4) if armonico else GroupDescription.cyclic(2)
    return GroupDescription.cyclic(2) if armonico else GroupDescription.cyclic(1)
