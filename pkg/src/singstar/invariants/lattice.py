"""
Reticolo d'intersezione e gruppo discriminante.

Matrici intere esatte su array numpy con dtype=object (interi Python a
precisione arbitraria). La definitezza si decide con i minori principali
calcolati per eliminazione senza frazioni (Bareiss); il gruppo
discriminante coker j con la forma normale di Smith.
"""

import logging
from dataclasses import dataclass, field
from math import factorial, prod
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from singstar.core.errors import NonDefiniteError, SingstarError
from singstar.graphs.plumbing import PlumbingGraph
from singstar.graphs.star_graph import StarGraph, star_to_plumbing

logger = logging.getLogger(__name__)

LIMITE_AUTOMORFISMI = 40320


@dataclass(frozen=True)
class IntersectionMatrix:
    """
    Matrice d'intersezione simmetrica.

    Attributes:
        matrice: Array s×s di interi (dtype object)
        ids: Id della curva per ogni riga
    """

    matrice: np.ndarray = field(compare=False)
    ids: Tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.ids)

    def indice(self, id_curva: int) -> int:
        return self.ids.index(id_curva)


def intersection_matrix(plumbing: PlumbingGraph) -> IntersectionMatrix:
    """Diagonale -peso, 1 per ogni arco."""
    ids = plumbing.ids
    indice = {id_curva: k for k, id_curva in enumerate(ids)}
    matrice = np.zeros((len(ids), len(ids)), dtype=object)
    for k, nodo in enumerate(plumbing.nodes):
        matrice[k, k] = -nodo.weight
    for u, v in plumbing.edges:
        matrice[indice[u], indice[v]] = 1
        matrice[indice[v], indice[u]] = 1
    return IntersectionMatrix(matrice, ids)


def _come_array(m) -> np.ndarray:
    if isinstance(m, IntersectionMatrix):
        m = m.matrice
    return np.array(m, dtype=object)


def leading_minors(m) -> List[int]:
    """
    Minori principali di testa, calcolati con Bareiss.

    Si ferma al primo minore nullo (incluso nella lista): oltre quel punto
    l'eliminazione senza pivot non è definita.
    """
    a = _come_array(m)
    s = a.shape[0]
    minori: List[int] = []
    precedente = 1
    for k in range(s):
        pivot = a[k, k]
        minori.append(int(pivot))
        if pivot == 0:
            break
        blocco = a[k + 1:, k + 1:] * pivot - np.outer(a[k + 1:, k], a[k, k + 1:])
        a[k + 1:, k + 1:] = blocco // precedente
        precedente = pivot
    return minori


def is_negative_definite(m) -> bool:
    """Vero se (-1)^k · (minore di ordine k) > 0 per ogni k."""
    a = _come_array(m)
    minori = leading_minors(a)
    if len(minori) < a.shape[0]:
        return False
    return all((-1) ** (k + 1) * minore > 0 for k, minore in enumerate(minori))


def determinant(m) -> int:
    """Determinante esatto (Bareiss con scambio di righe)."""
    a = _come_array(m)
    s = a.shape[0]
    if s == 0:
        return 1
    segno = 1
    precedente = 1
    for k in range(s - 1):
        if a[k, k] == 0:
            candidati = [i for i in range(k + 1, s) if a[i, k] != 0]
            if not candidati:
                return 0
            i = candidati[0]
            a[[k, i], :] = a[[i, k], :]
            segno = -segno
        pivot = a[k, k]
        blocco = a[k + 1:, k + 1:] * pivot - np.outer(a[k + 1:, k], a[k, k + 1:])
        a[k + 1:, k + 1:] = blocco // precedente
        precedente = pivot
    return segno * int(a[s - 1, s - 1])


# --- forma normale di Smith -------------------------------------------------


def _pivot_minimo(a: np.ndarray, t: int) -> Optional[Tuple[int, int]]:
    migliore: Optional[Tuple[int, int]] = None
    for i in range(t, a.shape[0]):
        for j in range(t, a.shape[1]):
            if a[i, j] != 0 and (migliore is None or abs(a[i, j]) < abs(a[migliore])):
                migliore = (i, j)
    return migliore


def _riduci(a: np.ndarray, u: np.ndarray, v: np.ndarray, t: int) -> bool:
    """Una passata di eliminazione su colonna e riga t. Vero se entrambe sono nulle."""
    pivot = a[t, t]
    for i in range(t + 1, a.shape[0]):
        if a[i, t] != 0:
            f = a[i, t] // pivot
            a[i, :] = a[i, :] - f * a[t, :]
            u[i, :] = u[i, :] - f * u[t, :]
    for j in range(t + 1, a.shape[1]):
        if a[t, j] != 0:
            f = a[t, j] // pivot
            a[:, j] = a[:, j] - f * a[:, t]
            v[:, j] = v[:, j] - f * v[:, t]
    return all(x == 0 for x in a[t + 1:, t]) and all(x == 0 for x in a[t, t + 1:])


def _riga_non_divisibile(a: np.ndarray, t: int) -> Optional[int]:
    for i in range(t + 1, a.shape[0]):
        for j in range(t + 1, a.shape[1]):
            if a[i, j] % a[t, t] != 0:
                return i
    return None


def smith_normal_form(m) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """
    Forma normale di Smith U·m·V = D.

    U e V sono unimodulari, D è diagonale con d1 | d2 | ... e d_i >= 0.
    Il pivot è sempre l'elemento non nullo di modulo minimo.

    Returns:
        (U, D, V) come array numpy dtype object
    """
    a = _come_array(m)
    righe, colonne = a.shape
    u = np.identity(righe, dtype=object)
    v = np.identity(colonne, dtype=object)

    t = 0
    while t < min(righe, colonne):
        posizione = _pivot_minimo(a, t)
        if posizione is None:
            break
        i, j = posizione
        if i != t:
            a[[t, i], :] = a[[i, t], :]
            u[[t, i], :] = u[[i, t], :]
        if j != t:
            a[:, [t, j]] = a[:, [j, t]]
            v[:, [t, j]] = v[:, [j, t]]
        if not _riduci(a, u, v, t):
            continue
        k = _riga_non_divisibile(a, t)
        if k is not None:
            a[t, :] = a[t, :] + a[k, :]
            u[t, :] = u[t, :] + u[k, :]
            continue
        if a[t, t] < 0:
            a[t, :] = -a[t, :]
            u[t, :] = -u[t, :]
        t += 1

    logger.debug("SNF %dx%d: diagonale %s", righe, colonne, [a[k, k] for k in range(min(righe, colonne))])
    return u, a, v


# --- gruppo discriminante ---------------------------------------------------


@dataclass(frozen=True)
class DiscriminantGroup:
    """
    coker j ≅ ⊕ Z/d_i con d_1 | d_2 | ..., ogni d_i >= 2.

    Attributes:
        invariant_factors: Fattori invarianti
        transform: Righe di U (SNF) che mandano un vettore del duale nelle
            coordinate di ⊕ Z/d_i
    """

    invariant_factors: Tuple[int, ...]
    transform: np.ndarray = field(compare=False, repr=False)

    @property
    def order(self) -> int:
        return prod(self.invariant_factors)

    @property
    def is_trivial(self) -> bool:
        return not self.invariant_factors

    def coordinates(self, vettore: Sequence[int]) -> Tuple[int, ...]:
        """Classe di `vettore` (coordinate nella base duale) in ⊕ Z/d_i."""
        immagine = self.transform.dot(np.array(list(vettore), dtype=object))
        return tuple(int(x) % d for x, d in zip(immagine, self.invariant_factors))

    def __str__(self) -> str:
        if self.is_trivial:
            return "trivial"
        return " + ".join(f"Z/{d}" for d in self.invariant_factors)


def discriminant_group(plumbing: PlumbingGraph) -> DiscriminantGroup:
    """
    Gruppo discriminante coker j di un plumbing definito negativo.

    Raises:
        NonDefiniteError: se la matrice d'intersezione non è definita negativa
    """
    matrice = intersection_matrix(plumbing)
    if not is_negative_definite(matrice):
        raise NonDefiniteError("il gruppo discriminante richiede un reticolo definito negativo")
    s = matrice.size
    if s == 0:
        return DiscriminantGroup((), np.zeros((0, 0), dtype=object))
    u, d, _ = smith_normal_form(matrice.matrice)
    indici = [k for k in range(s) if d[k, k] > 1]
    fattori = tuple(int(d[k, k]) for k in indici)
    trasformazione = u[indici, :] if indici else np.zeros((0, s), dtype=object)
    return DiscriminantGroup(fattori, trasformazione)


@dataclass(frozen=True)
class LinkHomology:
    """H1(L) ≅ Z^free_rank ⊕ torsion."""

    free_rank: int
    torsion: DiscriminantGroup

    def __str__(self) -> str:
        parti = []
        if self.free_rank:
            parti.append(f"Z^{self.free_rank}")
        if not self.torsion.is_trivial:
            parti.append(str(self.torsion))
        return " + ".join(parti) if parti else "0"


def link_homology(grafo: StarGraph) -> LinkHomology:
    """Rango libero 2g, torsione = gruppo discriminante."""
    return LinkHomology(2 * grafo.genus, discriminant_group(star_to_plumbing(grafo)))


# --- automorfismi del grafo -------------------------------------------------


@dataclass(frozen=True)
class GraphAutomorphism:
    """
    Permutazione degli id delle curve.

    Attributes:
        mapping: Coppie (id, immagine) ordinate per id
    """

    mapping: Tuple[Tuple[int, int], ...]

    def __post_init__(self) -> None:
        coppie = self.mapping.items() if isinstance(self.mapping, Mapping) else self.mapping
        normalizzate = tuple(sorted((int(a), int(b)) for a, b in coppie))
        object.__setattr__(self, "mapping", normalizzate)
        dominio = [a for a, _ in normalizzate]
        immagini = sorted(b for _, b in normalizzate)
        if len(set(dominio)) != len(dominio) or immagini != dominio:
            raise SingstarError(f"non è una permutazione: {dict(normalizzate)}")

    @classmethod
    def identity(cls, ids: Iterable[int]) -> "GraphAutomorphism":
        return cls(tuple((i, i) for i in ids))

    @classmethod
    def from_branch_permutation(
        cls, grafo: StarGraph, perm: Sequence[int]
    ) -> "GraphAutomorphism":
        """Estende curva per curva una permutazione dei rami, fissando il centro."""
        if sorted(perm) != list(range(grafo.num_branches)):
            raise SingstarError(f"permutazione dei rami non valida: {list(perm)}")
        mappa = {0: 0}
        for i, j in enumerate(perm):
            if grafo.branches[i].weights != grafo.branches[j].weights:
                raise SingstarError(f"i rami {i + 1} e {j + 1} hanno pesi diversi")
            for posizione in range(len(grafo.branches[i])):
                mappa[grafo.curve_id(i, posizione)] = grafo.curve_id(j, posizione)
        return cls(tuple(mappa.items()))

    def as_dict(self) -> Dict[int, int]:
        return dict(self.mapping)

    def __call__(self, id_curva: int) -> int:
        return self.as_dict()[id_curva]

    def compose(self, altro: "GraphAutomorphism") -> "GraphAutomorphism":
        """self ∘ altro."""
        mio, suo = self.as_dict(), altro.as_dict()
        return GraphAutomorphism(tuple((k, mio[suo[k]]) for k in suo))

    def inverse(self) -> "GraphAutomorphism":
        return GraphAutomorphism(tuple((b, a) for a, b in self.mapping))

    @property
    def is_identity(self) -> bool:
        return all(a == b for a, b in self.mapping)

    def order(self) -> int:
        potenza, k = self, 1
        while not potenza.is_identity:
            potenza = potenza.compose(self)
            k += 1
        return k


def _verifica_compatibile(plumbing: PlumbingGraph, automorfismo: GraphAutomorphism) -> Dict[int, int]:
    mappa = automorfismo.as_dict()
    if set(mappa) != set(plumbing.ids):
        raise SingstarError("l'automorfismo non agisce sugli id del grafo")
    for nodo in plumbing.nodes:
        immagine = plumbing.node(mappa[nodo.id])
        if (immagine.weight, immagine.genus) != (nodo.weight, nodo.genus):
            raise SingstarError(f"la curva {nodo.id} va in una curva di peso o genere diverso")
    for u, v in plumbing.edges:
        if tuple(sorted((mappa[u], mappa[v]))) not in plumbing.edges:
            raise SingstarError(f"l'arco ({u}, {v}) non va in un arco")
    return mappa


def automorphism_matrix(plumbing: PlumbingGraph, automorfismo: GraphAutomorphism) -> np.ndarray:
    """
    Matrice di permutazione P con P·e_k = e_φ(k), quindi P·M·Pᵀ = M.

    Raises:
        SingstarError: se l'automorfismo non è compatibile con il grafo
    """
    mappa = _verifica_compatibile(plumbing, automorfismo)
    ids = plumbing.ids
    indice = {id_curva: k for k, id_curva in enumerate(ids)}
    p = np.zeros((len(ids), len(ids)), dtype=object)
    for id_curva in ids:
        p[indice[mappa[id_curva]], indice[id_curva]] = 1
    m = intersection_matrix(plumbing).matrice
    if not np.array_equal(p.dot(m).dot(p.T), m):
        raise SingstarError("la permutazione non preserva la matrice d'intersezione")
    return p


def acts_trivially_on_discriminant(
    plumbing: PlumbingGraph,
    automorfismo: GraphAutomorphism,
    gruppo: Optional[DiscriminantGroup] = None,
) -> bool:
    """
    Vero se φλ - λ ∈ im j per ogni vettore λ della base duale.

    Args:
        gruppo: Gruppo discriminante già calcolato (opzionale)
    """
    mappa = _verifica_compatibile(plumbing, automorfismo)
    gruppo = gruppo if gruppo is not None else discriminant_group(plumbing)
    if gruppo.is_trivial:
        return True
    ids = plumbing.ids
    indice = {id_curva: k for k, id_curva in enumerate(ids)}
    for k, id_curva in enumerate(ids):
        differenza = [0] * len(ids)
        differenza[indice[mappa[id_curva]]] += 1
        differenza[k] -= 1
        if any(gruppo.coordinates(differenza)):
            return False
    return True


def torsion_action_faithful(grafo: StarGraph, limite: int = LIMITE_AUTOMORFISMI) -> bool:
    """
    Vero se Aut Γ → Aut(coker j) è iniettivo.

    Si enumerano solo le permutazioni dei rami che preservano i pesi.

    Raises:
        SingstarError: se |Aut Γ| supera `limite`
    """
    ordine = prod(factorial(len(indici)) for _, indici in grafo.branch_classes())
    if ordine > limite:
        raise SingstarError(f"|Aut Γ| = {ordine} supera il limite di enumerazione {limite}")
    plumbing = star_to_plumbing(grafo)
    gruppo = discriminant_group(plumbing)
    for perm in grafo.branch_permutations():
        automorfismo = GraphAutomorphism.from_branch_permutation(grafo, perm)
        if automorfismo.is_identity:
            continue
        if acts_trivially_on_discriminant(plumbing, automorfismo, gruppo):
            logger.debug("permutazione %s banale sulla torsione", perm)
            return False
    logger.debug("azione fedele: %d elementi controllati", ordine)
    return True
