"""Maximum matchings of forests in linear time, plus an augmenting-path checker.

The matcher repeatedly eliminates leaves with a degree-counting queue; the
augmenting-path routine is a deliberately simple quadratic search kept around
as an independent correctness check (a matching is maximum exactly when no
augmenting path exists).
"""

from __future__ import annotations

from typing import Iterable

import numpy as np

from ._backend import impl
from .forest import Forest, _readonly


class Matching:
    """Edge set given by a per-vertex mate map; mate_of is O(1).

    ``mate_of(v)`` is None when v is unsaturated.  Construct with
    :func:`maximum_matching` or :meth:`Matching.from_edges`.
    """

    __slots__ = ("n", "_mate", "_edges_cache")

    def __init__(self, n: int, mate: np.ndarray):
        mate = np.asarray(mate, dtype=np.int64)
        if mate.shape != (n,):
            raise ValueError("mate array must have one entry per vertex")
        sat = np.flatnonzero(mate >= 0)
        if sat.size:
            if int(mate.max()) >= n:
                raise ValueError("mate id out of range")
            if np.any(mate[sat] == sat):
                raise ValueError("vertex matched to itself")
            if np.any(mate[mate[sat]] != sat):
                raise ValueError("mate map is not an involution")
        self.n = n
        self._mate = _readonly(mate)
        self._edges_cache = None

    @classmethod
    def from_edges(cls, f: Forest, pairs: Iterable[tuple[int, int]]) -> "Matching":
        """Build and validate a matching of f from explicit edge pairs."""
        host = set(f.edges)
        mate = np.full(f.n, -1, dtype=np.int64)
        for u, v in pairs:
            u, v = int(u), int(v)
            e = (u, v) if u < v else (v, u)
            if e not in host:
                raise ValueError(f"pair {e} is not an edge of the forest")
            if mate[u] >= 0 or mate[v] >= 0:
                raise ValueError(f"vertex reused by pair {e}")
            mate[u], mate[v] = v, u
        return cls(f.n, mate)

    @property
    def size(self) -> int:
        return int((self._mate >= 0).sum()) // 2

    @property
    def mate_array(self) -> np.ndarray:
        return self._mate

    def mate_of(self, v: int) -> int | None:
        w = int(self._mate[v])
        return None if w < 0 else w

    def is_saturated(self, v: int) -> bool:
        return bool(self._mate[v] >= 0)

    @property
    def edges(self) -> list[tuple[int, int]]:
        if self._edges_cache is None:
            mate = self._mate.tolist()
            self._edges_cache = [(v, mate[v]) for v in range(self.n)
                                 if 0 <= mate[v] and v < mate[v]]
        return self._edges_cache

    def unsaturated(self) -> list[int]:
        return np.flatnonzero(self._mate < 0).tolist()

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matching):
            return NotImplemented
        return self.n == other.n and np.array_equal(self._mate, other._mate)

    def __hash__(self):
        return hash((self.n, self._mate.tobytes()))

    def __repr__(self) -> str:
        return f"Matching(n={self.n}, size={self.size})"


def maximum_matching(f: Forest) -> Matching:
    """Maximum matching of a forest by leaf elimination; deterministic, O(n)."""
    mate = impl().leaf_matching(f._adj_ptr, f._adj_dat, f.n)
    return Matching(f.n, mate)


def has_augmenting_path(f: Forest, m: Matching) -> bool:
    """Whether an augmenting path for m exists (so False means m is maximum).

    Alternating breadth-first search from every unsaturated vertex.  Worst
    case O(n^2); meant as a test oracle, not for the hot path.
    """
    mate = m.mate_array.tolist()
    ptr = f._adj_ptr.tolist()
    dat = f._adj_dat.tolist()
    n = f.n
    for u in range(n):
        if mate[u] >= 0:
            continue
        visited_even = [False] * n
        visited_odd = [False] * n
        visited_even[u] = True
        frontier = [u]
        while frontier:
            nxt: list[int] = []
            for v in frontier:
                for i in range(ptr[v], ptr[v + 1]):
                    w = dat[i]
                    if mate[v] == w:
                        continue  # leave even vertices along non-matching edges
                    if mate[w] < 0:
                        if w != u:
                            return True
                        continue
                    if not visited_odd[w]:
                        visited_odd[w] = True
                        x = mate[w]
                        if not visited_even[x]:
                            visited_even[x] = True
                            nxt.append(x)
            frontier = nxt
    return False


def nullity(f: Forest) -> int:
    """Dimension of the null space of the adjacency matrix: n - 2|M|."""
    return f.n - 2 * maximum_matching(f).size
