"""Catene lineari di curve razionali (singolarità cicliche X_{n,q})."""

from dataclasses import dataclass
from typing import Tuple

from singstar.core.errors import InvariantViolation
from singstar.core.hirzebruch_jung import hj_evaluate, hj_expand
from singstar.graphs.plumbing import PlumbingGraph, plumbing_da_catena


@dataclass(frozen=True)
class ChainGraph:
    """
    Catena pesata. La catena vuota è un punto liscio; pesi 1 compaiono
    solo negli stati intermedi dei quozienti.
    """

    weights: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
        for peso in self.weights:
            if peso < 1:
                raise InvariantViolation(f"peso {peso} < 1 in una catena")

    @classmethod
    def from_fraction(cls, n: int, q: int) -> "ChainGraph":
        """Catena di X_{n,q}; n = 1 dà la catena vuota."""
        if n == 1:
            return cls(())
        return cls(tuple(hj_expand(n, q)))

    def evaluate(self) -> Tuple[int, int]:
        """Coppia (n, q) della catena minimale; (1, 0) per il punto liscio."""
        if not self.weights:
            return 1, 0
        return hj_evaluate(self.weights)

    def is_minimal(self) -> bool:
        return all(peso >= 2 for peso in self.weights)

    @property
    def is_smooth(self) -> bool:
        return len(self.weights) == 0

    def reversed(self) -> "ChainGraph":
        return ChainGraph(tuple(reversed(self.weights)))

    def to_plumbing(self) -> PlumbingGraph:
        return plumbing_da_catena(self.weights)

    def __len__(self) -> int:
        return len(self.weights)

    def __str__(self) -> str:
        return "[" + ",".join(str(w) for w in self.weights) + "]"
