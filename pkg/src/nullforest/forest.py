"""Forest representation: validated edge lists, components, deterministic rooting.

Vertices are dense 0-based integers.  Adjacency lives in compressed sparse
row (CSR) form with neighbor lists sorted ascending, which keeps every
downstream pass deterministic and lets forests with millions of vertices fit
comfortably in a few flat arrays.

The text format (UTF-8, LF newlines) is::

    p forest <n> <m>
    e <u> <v>          (exactly m such lines, 0 <= u,v < n)

Blank lines and lines starting with ``c`` are ignored.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from ._backend import impl
from .errors import (
    CycleError,
    DuplicateEdgeError,
    InvalidRootError,
    ParseError,
    SelfLoopError,
)


def _readonly(a: np.ndarray) -> np.ndarray:
    a.flags.writeable = False
    return a


class Forest:
    """Acyclic undirected simple graph on vertices 0..n-1.

    Immutable after construction and safe to share across threads.  Raises
    SelfLoopError / DuplicateEdgeError / CycleError when the edge list is not
    a forest.
    """

    __slots__ = ("n", "_adj_ptr", "_adj_dat", "_edge_arr", "_labels", "_ncomp",
                 "_edges_cache", "_adjacency_cache")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        n = int(n)
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        if isinstance(edges, np.ndarray):
            arr = edges.astype(np.int64, copy=False)
        else:
            listed = list(edges)
            arr = (np.asarray(listed, dtype=np.int64) if listed
                   else np.empty((0, 2), dtype=np.int64))
        if arr.size == 0:
            arr = arr.reshape(0, 2)
        if arr.ndim != 2 or arr.shape[1] != 2:
            raise ValueError("edges must be (u, v) pairs")
        m = arr.shape[0]
        if m:
            if int(arr.min()) < 0 or int(arr.max()) >= n:
                raise ValueError("edge endpoint out of range")
            same = arr[:, 0] == arr[:, 1]
            if same.any():
                raise SelfLoopError(
                    f"self-loop at vertex {int(arr[int(np.argmax(same)), 0])}")
            lo = np.minimum(arr[:, 0], arr[:, 1])
            hi = np.maximum(arr[:, 0], arr[:, 1])
            order = np.lexsort((hi, lo))
            lo, hi = lo[order], hi[order]
            dup = (lo[1:] == lo[:-1]) & (hi[1:] == hi[:-1])
            if dup.any():
                i = int(np.argmax(dup))
                raise DuplicateEdgeError(
                    f"duplicate edge ({int(lo[i])}, {int(hi[i])})")
            edge_arr = np.column_stack((lo, hi))
        else:
            edge_arr = np.empty((0, 2), dtype=np.int64)

        src = np.concatenate((edge_arr[:, 0], edge_arr[:, 1]))
        dst = np.concatenate((edge_arr[:, 1], edge_arr[:, 0]))
        if src.size:
            o = np.lexsort((dst, src))
            dat = dst[o]
        else:
            dat = dst
        counts = (np.bincount(src, minlength=n).astype(np.int64)
                  if n else np.zeros(0, dtype=np.int64))
        ptr = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(counts, out=ptr[1:])

        self.n = n
        self._adj_ptr = _readonly(ptr)
        self._adj_dat = _readonly(dat.astype(np.int64, copy=False))
        self._edge_arr = _readonly(edge_arr)
        labels, ncomp = impl().component_labels(self._adj_ptr, self._adj_dat, n)
        self._labels = _readonly(labels)
        self._ncomp = int(ncomp)
        if m:
            sizes = np.bincount(self._labels, minlength=self._ncomp)
            comp_edges = np.bincount(self._labels[edge_arr[:, 0]],
                                     minlength=self._ncomp)
            bad = comp_edges != sizes - 1
            if bad.any():
                c = int(np.argmax(bad))
                v = int(np.argmax(self._labels == c))
                raise CycleError(f"component containing vertex {v} is not a tree")
        self._edges_cache = None
        self._adjacency_cache = None

    @property
    def m(self) -> int:
        """Number of edges."""
        return int(self._edge_arr.shape[0])

    @property
    def edges(self) -> list[tuple[int, int]]:
        """Edges as (u, v) with u < v, sorted lexicographically."""
        if self._edges_cache is None:
            self._edges_cache = [tuple(e) for e in self._edge_arr.tolist()]
        return self._edges_cache

    @property
    def edge_array(self) -> np.ndarray:
        """Read-only (m, 2) int64 array of edges, u < v, lexsorted."""
        return self._edge_arr

    @property
    def adjacency(self) -> list[list[int]]:
        """Per-vertex sorted neighbor lists (built lazily)."""
        if self._adjacency_cache is None:
            ptr = self._adj_ptr.tolist()
            dat = self._adj_dat.tolist()
            self._adjacency_cache = [dat[ptr[v]:ptr[v + 1]] for v in range(self.n)]
        return self._adjacency_cache

    def neighbors(self, v: int) -> np.ndarray:
        """Sorted neighbor ids of v as a read-only array view."""
        if not 0 <= v < self.n:
            raise IndexError(f"vertex {v} out of range")
        return self._adj_dat[self._adj_ptr[v]:self._adj_ptr[v + 1]]

    def degree(self, v: int) -> int:
        if not 0 <= v < self.n:
            raise IndexError(f"vertex {v} out of range")
        return int(self._adj_ptr[v + 1] - self._adj_ptr[v])

    @property
    def degrees(self) -> np.ndarray:
        return np.diff(self._adj_ptr)

    @property
    def component_count(self) -> int:
        return self._ncomp

    def __eq__(self, other) -> bool:
        if not isinstance(other, Forest):
            return NotImplemented
        return self.n == other.n and np.array_equal(self._edge_arr, other._edge_arr)

    def __hash__(self):
        return hash((self.n, self._edge_arr.tobytes()))

    def __repr__(self) -> str:
        return f"Forest(n={self.n}, m={self.m})"


class RootedForest:
    """A forest plus parent pointers, children lists, and a children-first order.

    ``postorder`` visits every vertex after all of its children; reversing it
    gives a parents-first order.  Roots have ``parent_of(r) is None``.
    """

    __slots__ = ("base", "roots", "parent", "postorder", "_children_cache")

    def __init__(self, base: Forest, roots: tuple[int, ...],
                 parent: np.ndarray, postorder: np.ndarray):
        self.base = base
        self.roots = roots
        self.parent = parent
        self.postorder = postorder
        self._children_cache = None

    def parent_of(self, v: int) -> int | None:
        p = int(self.parent[v])
        return None if p < 0 else p

    @property
    def children(self) -> list[list[int]]:
        """Per-vertex sorted lists of children (built lazily)."""
        if self._children_cache is None:
            out: list[list[int]] = [[] for _ in range(self.base.n)]
            for v, p in enumerate(self.parent.tolist()):
                if p >= 0:
                    out[p].append(v)
            self._children_cache = out
        return self._children_cache

    def children_of(self, v: int) -> list[int]:
        return self.children[v]

    def __repr__(self) -> str:
        return f"RootedForest(n={self.base.n}, roots={list(self.roots)})"


def components(f: Forest) -> list[list[int]]:
    """Connected components as sorted vertex lists, ordered by minimum id."""
    comps: list[list[int]] = [[] for _ in range(f._ncomp)]
    for v, c in enumerate(f._labels.tolist()):
        comps[c].append(v)
    return comps


def root_at(f: Forest, roots: Sequence[int]) -> RootedForest:
    """Root each component at the given vertex (one root per component).

    ``roots[i]`` must lie in the i-th component (components ordered by
    minimum vertex id).  The traversal is iterative, so deep paths are fine.
    """
    rts = [int(r) for r in roots]
    if len(rts) != f._ncomp:
        raise InvalidRootError(
            f"expected {f._ncomp} roots, got {len(rts)}")
    for i, r in enumerate(rts):
        if not 0 <= r < f.n or int(f._labels[r]) != i:
            raise InvalidRootError(f"root {r} is not in component {i}")
    parent, post = impl().root_forest(
        f._adj_ptr, f._adj_dat, np.asarray(rts, dtype=np.int64), f.n)
    return RootedForest(f, tuple(rts), _readonly(parent), _readonly(post))


def _int_token(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"line {lineno}: expected integer, got {tok!r}") from None


def parse_forest(source) -> Forest:
    """Parse the edge-list text format into a validated Forest.

    Accepts str, bytes, or a readable text stream.
    """
    if hasattr(source, "read"):
        source = source.read()
    if isinstance(source, (bytes, bytearray)):
        try:
            source = source.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"input is not valid UTF-8: {exc}") from None
    header: tuple[int, int] | None = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(source.split("\n"), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        tok = line.split()
        if header is None:
            if tok[0] != "p":
                raise ParseError(f"line {lineno}: expected 'p forest <n> <m>'")
            if len(tok) != 4 or tok[1] != "forest":
                raise ParseError(f"line {lineno}: malformed problem line")
            n = _int_token(tok[2], lineno)
            m = _int_token(tok[3], lineno)
            if n < 0 or m < 0:
                raise ParseError(f"line {lineno}: negative count")
            header = (n, m)
        else:
            if tok[0] != "e" or len(tok) != 3:
                raise ParseError(f"line {lineno}: expected 'e <u> <v>'")
            u = _int_token(tok[1], lineno)
            v = _int_token(tok[2], lineno)
            if not (0 <= u < header[0] and 0 <= v < header[0]):
                raise ParseError(f"line {lineno}: vertex id out of range")
            edges.append((u, v))
    if header is None:
        raise ParseError("missing problem line")
    if len(edges) != header[1]:
        raise ParseError(
            f"expected {header[1]} edge lines, found {len(edges)}")
    return Forest(header[0], edges)


def format_forest(f: Forest) -> str:
    """Render a Forest in the edge-list text format (round-trips with parse)."""
    lines = [f"p forest {f.n} {f.m}"]
    lines.extend(f"e {u} {v}" for u, v in f._edge_arr.tolist())
    return "\n".join(lines) + "\n"
