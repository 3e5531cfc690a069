"""{-1,0,1} null bases of forests and the null-space support set.

Both computations run on the alternating digraph D of a forest F with a
maximum matching M: D has an arc x -> y whenever some edge xv lies outside M
and vy lies inside M.  Directed paths in D starting at an unsaturated vertex
correspond to even-length alternating paths in F, so a breadth-first search
from an unsaturated vertex u reaches exactly the vertices where the basis
vector anchored at u is nonzero, with sign +1 at even depth and -1 at odd
depth.  A multi-source search from all unsaturated vertices yields the set of
vertices carrying a nonzero of some null vector.
"""

from __future__ import annotations

from typing import Iterable, Iterator

import numpy as np

from ._backend import impl
from .errors import NotMaximumError
from .forest import Forest, _readonly
from .matching import Matching, has_augmenting_path


class SparseVector:
    """Vector with entries in {-1, +1} on a strictly increasing vertex list.

    Zeros are implicit; construction rejects unsorted ids, duplicate ids, and
    any stored value other than -1 or +1.
    """

    __slots__ = ("_ids", "_signs")

    def __init__(self, ids, signs):
        ids = np.array(ids, dtype=np.int64, copy=True)
        signs = np.array(signs, dtype=np.int8, copy=True)
        if ids.ndim != 1 or signs.shape != ids.shape:
            raise ValueError("ids and signs must be equal-length 1-d sequences")
        if ids.size:
            if int(ids[0]) < 0:
                raise ValueError("negative vertex id")
            if ids.size > 1 and not np.all(np.diff(ids) > 0):
                raise ValueError("vertex ids must be strictly increasing")
            if not np.all(np.abs(signs) == 1):
                raise ValueError("stored entries must be -1 or +1")
        self._ids = _readonly(ids)
        self._signs = _readonly(signs)

    @classmethod
    def from_pairs(cls, pairs: Iterable[tuple[int, int]]) -> "SparseVector":
        items = list(pairs)
        return cls([v for v, _ in items], [s for _, s in items])

    @property
    def nnz(self) -> int:
        return int(self._ids.size)

    @property
    def ids(self) -> np.ndarray:
        return self._ids

    @property
    def signs(self) -> np.ndarray:
        return self._signs

    @property
    def entries(self) -> list[tuple[int, int]]:
        return list(zip(self._ids.tolist(), self._signs.tolist()))

    def sign_at(self, v: int) -> int:
        i = int(np.searchsorted(self._ids, v))
        if i < self._ids.size and int(self._ids[i]) == v:
            return int(self._signs[i])
        return 0

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.entries)

    def __len__(self) -> int:
        return self.nnz

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparseVector):
            return NotImplemented
        return (np.array_equal(self._ids, other._ids)
                and np.array_equal(self._signs, other._signs))

    def __hash__(self):
        return hash((self._ids.tobytes(), self._signs.tobytes()))

    def __repr__(self) -> str:
        if self.nnz > 8:
            return f"SparseVector(nnz={self.nnz})"
        return f"SparseVector({self.entries!r})"


class NullBasis:
    """Ordered list of null-basis vectors, each tagged with its anchor vertex."""

    __slots__ = ("n", "_items")

    def __init__(self, n: int, items: Iterable[tuple[int, SparseVector]]):
        self.n = int(n)
        self._items = tuple((int(u), vec) for u, vec in items)

    @property
    def vectors(self) -> tuple[tuple[int, SparseVector], ...]:
        return self._items

    @property
    def anchors(self) -> list[int]:
        return [u for u, _ in self._items]

    @property
    def total_nnz(self) -> int:
        return sum(vec.nnz for _, vec in self._items)

    def __len__(self) -> int:
        return len(self._items)

    def __iter__(self) -> Iterator[tuple[int, SparseVector]]:
        return iter(self._items)

    def __getitem__(self, i: int) -> tuple[int, SparseVector]:
        return self._items[i]

    def __repr__(self) -> str:
        return f"NullBasis(n={self.n}, vectors={len(self._items)}, nnz={self.total_nnz})"


class AltDigraph:
    """Alternating digraph of (F, M): arc x -> y iff xv misses M and vy is in M.

    Acyclic whenever F is a forest; carries at most 2|E(F)| arcs.  Out-arc
    lists are sorted ascending.
    """

    __slots__ = ("n", "_out_ptr", "_out_dat")

    def __init__(self, n: int, out_ptr: np.ndarray, out_dat: np.ndarray):
        self.n = n
        self._out_ptr = out_ptr
        self._out_dat = out_dat

    def out_arcs(self, v: int) -> np.ndarray:
        if not 0 <= v < self.n:
            raise IndexError(f"vertex {v} out of range")
        return self._out_dat[self._out_ptr[v]:self._out_ptr[v + 1]]

    @property
    def arc_count(self) -> int:
        return int(self._out_dat.size)

    @property
    def arcs(self) -> list[tuple[int, int]]:
        """All arcs as (tail, head), sorted."""
        ptr = self._out_ptr.tolist()
        dat = self._out_dat.tolist()
        return [(x, dat[i]) for x in range(self.n)
                for i in range(ptr[x], ptr[x + 1])]

    def __repr__(self) -> str:
        return f"AltDigraph(n={self.n}, arcs={self.arc_count})"


def _sort_csr_slices(ptr: np.ndarray, dat: np.ndarray) -> np.ndarray:
    """Sort each CSR slice ascending with one global lexsort."""
    if dat.size == 0:
        return dat
    rows = np.repeat(np.arange(ptr.size - 1, dtype=np.int64), np.diff(ptr))
    return dat[np.lexsort((dat, rows))]


def build_alternating_digraph(f: Forest, m: Matching, *,
                              verify_maximum: bool = False) -> AltDigraph:
    """Build the alternating digraph of (f, m) in O(n).

    With ``verify_maximum`` the matching is first certified maximum by the
    augmenting-path checker (test mode; the check itself is quadratic).
    """
    if verify_maximum and has_augmenting_path(f, m):
        raise NotMaximumError("matching admits an augmenting path")
    ptr, dat = impl().alternating_digraph(f._adj_ptr, f._adj_dat,
                                          m.mate_array, f.n)
    dat = _sort_csr_slices(ptr, dat)
    return AltDigraph(f.n, _readonly(ptr), _readonly(dat))


def null_basis(f: Forest, m: Matching) -> NullBasis:
    """{-1,0,1} null basis determined by a maximum matching.

    One vector per unsaturated vertex u, nonzero exactly on the vertices
    reachable from u in the alternating digraph, signed by depth parity;
    u itself always carries +1 and no other basis vector touches u.  Total
    work is proportional to the number of produced nonzeros (plus the O(n)
    digraph construction).
    """
    d = build_alternating_digraph(f, m)
    anchors = np.flatnonzero(m.mate_array < 0).astype(np.int64)
    offsets, verts, signs = impl().anchor_vectors(
        d._out_ptr, d._out_dat, anchors, f.n)
    if verts.size:
        rows = np.repeat(np.arange(anchors.size, dtype=np.int64),
                         np.diff(offsets))
        order = np.lexsort((verts, rows))
        verts = verts[order]
        signs = signs[order]
    offs = offsets.tolist()
    items = []
    for i, u in enumerate(anchors.tolist()):
        seg = slice(offs[i], offs[i + 1])
        items.append((u, SparseVector(verts[seg], signs[seg])))
    return NullBasis(f.n, items)


def support_set(f: Forest, m: Matching) -> list[int]:
    """Vertices at which some null vector is nonzero, sorted ascending.

    Multi-source reachability in the alternating digraph from the unsaturated
    vertices; O(n) and independent of which maximum matching is supplied.
    """
    d = build_alternating_digraph(f, m)
    sources = np.flatnonzero(m.mate_array < 0).astype(np.int64)
    seen = impl().reachable_from(d._out_ptr, d._out_dat, sources, f.n)
    return np.flatnonzero(seen).tolist()
