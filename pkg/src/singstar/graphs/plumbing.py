"""
Grafi di plumbing ad albero.

Rappresentazione intermedia usata dal motore dei quozienti e dal modulo
reticolo. Il peso di un nodo è l'opposto dell'autointersezione della curva.
"""

from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Tuple

import networkx as nx

from singstar.core.errors import InvariantViolation


@dataclass(frozen=True)
class PlumbingNode:
    """Curva del plumbing: identificativo, genere e peso (autointersezione -peso)."""

    id: int
    genus: int = 0
    weight: int = 1


@dataclass(frozen=True)
class PlumbingGraph:
    """
    Albero pesato di curve.

    Attributes:
        nodes: Nodi nell'ordine che fissa le righe della matrice d'intersezione
        edges: Coppie non ordinate di id, normalizzate come (min, max)
    """

    nodes: Tuple[PlumbingNode, ...] = ()
    edges: FrozenSet[Tuple[int, int]] = frozenset()
    _adiacenza: Dict[int, Tuple[int, ...]] = field(
        default_factory=dict, init=False, repr=False, compare=False
    )

    def __post_init__(self) -> None:
        object.__setattr__(self, "nodes", tuple(self.nodes))
        archi = frozenset(tuple(sorted((int(u), int(v)))) for u, v in self.edges)
        object.__setattr__(self, "edges", archi)
        self._valida_parametri()

        adiacenza: Dict[int, List[int]] = {nodo.id: [] for nodo in self.nodes}
        for u, v in self.edges:
            adiacenza[u].append(v)
            adiacenza[v].append(u)
        object.__setattr__(
            self, "_adiacenza", {k: tuple(sorted(v)) for k, v in adiacenza.items()}
        )

    def _valida_parametri(self) -> None:
        ids = [nodo.id for nodo in self.nodes]
        if len(set(ids)) != len(ids):
            raise InvariantViolation(f"id duplicati nel plumbing: {sorted(ids)}")
        for nodo in self.nodes:
            if nodo.genus < 0:
                raise InvariantViolation(f"genere negativo sul nodo {nodo.id}")
        noti = set(ids)
        for u, v in self.edges:
            if u == v:
                raise InvariantViolation(f"cappio sul nodo {u}")
            if u not in noti or v not in noti:
                raise InvariantViolation(f"arco ({u}, {v}) con estremo sconosciuto")
        if self.nodes and not nx.is_tree(self.to_networkx()):
            raise InvariantViolation("il plumbing deve essere un albero connesso")

    @property
    def ids(self) -> Tuple[int, ...]:
        return tuple(nodo.id for nodo in self.nodes)

    @property
    def is_empty(self) -> bool:
        """Il grafo vuoto rappresenta un punto liscio."""
        return len(self.nodes) == 0

    def node(self, id_nodo: int) -> PlumbingNode:
        for nodo in self.nodes:
            if nodo.id == id_nodo:
                return nodo
        raise KeyError(id_nodo)

    def neighbors(self, id_nodo: int) -> Tuple[int, ...]:
        return self._adiacenza[id_nodo]

    def degree(self, id_nodo: int) -> int:
        return len(self._adiacenza[id_nodo])

    def to_networkx(self) -> nx.Graph:
        """Grafo networkx con attributi `genus` e `weight` sui nodi."""
        grafo = nx.Graph()
        for nodo in self.nodes:
            grafo.add_node(nodo.id, genus=nodo.genus, weight=nodo.weight)
        grafo.add_edges_from(self.edges)
        return grafo

    @classmethod
    def da_networkx(cls, grafo: nx.Graph) -> "PlumbingGraph":
        """Ricostruisce il plumbing con i nodi ordinati per id."""
        nodi = [
            PlumbingNode(n, grafo.nodes[n].get("genus", 0), grafo.nodes[n]["weight"])
            for n in sorted(grafo.nodes)
        ]
        return cls(tuple(nodi), frozenset(grafo.edges))

    def con_pesi(self, pesi: Dict[int, int]) -> "PlumbingGraph":
        """Copia con i pesi indicati sostituiti."""
        nodi = tuple(
            PlumbingNode(n.id, n.genus, pesi.get(n.id, n.weight)) for n in self.nodes
        )
        return PlumbingGraph(nodi, self.edges)


def plumbing_da_catena(pesi: Iterable[int], primo_id: int = 0) -> PlumbingGraph:
    """Plumbing lineare con id consecutivi a partire da `primo_id`."""
    pesi = list(pesi)
    nodi = tuple(PlumbingNode(primo_id + k, 0, w) for k, w in enumerate(pesi))
    archi = frozenset((primo_id + k, primo_id + k + 1) for k in range(len(pesi) - 1))
    return PlumbingGraph(nodi, archi)
