"""Sparsest {-1,0,1} null bases, computed in time proportional to their size.

Pipeline: the support set S of the forest F induces the subforest G of all
edges meeting S (S is stable, so every edge of G joins S to its complement R
inside G, and no R-vertex is a leaf).  Rooting each component of G at its
smallest S-vertex, two linear passes compute for every vertex the minimum
nonzero count of an anchored null vector (``weight``), first within the
vertex's own subtree (``down_weight``) and then over all of G.  Picking for
every R-vertex the neighbor that realizes its weight yields a maximum
matching of G whose unsaturated vertices anchor basis vectors of exactly
minimal support; materializing those vectors costs output-sensitive time.
Isolated vertices of F lie in S but not in G and contribute unit vectors.
"""

from __future__ import annotations

from typing import Iterable

import numpy as np

from ._backend import impl
from .errors import InternalError
from .forest import Forest, RootedForest, _readonly, root_at
from .matching import Matching, maximum_matching
from .nullspace import NullBasis, SparseVector, null_basis, support_set


class SupportForest:
    """Subforest of edges meeting the support set, compacted and rooted.

    Vertices are relabeled 0..k-1 preserving the original order;
    ``original_ids`` maps back, ``s_mask`` flags support vertices, and every
    component is rooted at its smallest support vertex.  Empty when the
    support set touches no edge.
    """

    __slots__ = ("forest", "original_ids", "s_mask", "rooted", "host_n",
                 "_compact_of")

    def __init__(self, forest: Forest, original_ids: np.ndarray,
                 s_mask: np.ndarray, rooted: RootedForest, host_n: int,
                 compact_of: np.ndarray):
        self.forest = forest
        self.original_ids = original_ids
        self.s_mask = s_mask
        self.rooted = rooted
        self.host_n = host_n
        self._compact_of = compact_of

    @property
    def n(self) -> int:
        return self.forest.n

    @property
    def vertices(self) -> list[int]:
        """Original ids of the subforest's vertices, sorted."""
        return self.original_ids.tolist()

    @property
    def edges(self) -> list[tuple[int, int]]:
        """Edges in original ids, normalized and sorted."""
        if self.forest.n == 0:
            return []
        remapped = self.original_ids[self.forest.edge_array]
        return [tuple(e) for e in remapped.tolist()]

    def compact_id(self, original_v: int) -> int:
        c = int(self._compact_of[original_v])
        if c < 0:
            raise ValueError(f"vertex {original_v} is not in the support forest")
        return c

    def is_support(self, original_v: int) -> bool:
        return bool(self.s_mask[self.compact_id(original_v)])

    @property
    def support_vertices(self) -> list[int]:
        return self.original_ids[self.s_mask.astype(bool)].tolist()

    @property
    def core_vertices(self) -> list[int]:
        return self.original_ids[~self.s_mask.astype(bool)].tolist()

    @property
    def core_count(self) -> int:
        return self.forest.n - int(self.s_mask.sum())

    def __repr__(self) -> str:
        return (f"SupportForest(n={self.forest.n}, "
                f"support={int(self.s_mask.sum())}, core={self.core_count})")


class SupportWeights:
    """Minimum nonzero counts of anchored null vectors over the support forest.

    ``down_weight(v)`` restricts attention to v's subtree, ``weight(v)`` ranges
    over the whole forest; both are queried by original vertex id.
    """

    __slots__ = ("support_forest", "down_array", "weight_array")

    def __init__(self, support_forest: SupportForest,
                 down_array: np.ndarray, weight_array: np.ndarray):
        self.support_forest = support_forest
        self.down_array = down_array
        self.weight_array = weight_array

    def down_weight(self, original_v: int) -> int:
        return int(self.down_array[self.support_forest.compact_id(original_v)])

    def weight(self, original_v: int) -> int:
        return int(self.weight_array[self.support_forest.compact_id(original_v)])


class WeightMatching:
    """Matching of the support forest built from per-vertex weight minimizers.

    Saturates every core vertex, hence it is a maximum matching of the
    support forest; its unsaturated vertices anchor a sparsest basis.
    """

    __slots__ = ("support_forest", "matching", "_phi")

    def __init__(self, support_forest: SupportForest, matching: Matching,
                 phi: np.ndarray):
        self.support_forest = support_forest
        self.matching = matching
        self._phi = phi

    def minimizer_of(self, original_r: int) -> int:
        g = self.support_forest
        c = int(self._phi[g.compact_id(original_r)])
        if c < 0:
            raise ValueError(f"vertex {original_r} is a support vertex")
        return int(g.original_ids[c])

    @property
    def edges(self) -> list[tuple[int, int]]:
        """Matched pairs in original ids, normalized and sorted."""
        g = self.support_forest
        out = []
        for u, v in self.matching.edges:
            a, b = int(g.original_ids[u]), int(g.original_ids[v])
            out.append((a, b) if a < b else (b, a))
        out.sort()
        return out

    def unsaturated(self) -> list[int]:
        """Unsaturated vertices of the support forest, original ids."""
        g = self.support_forest
        return g.original_ids[self.matching.mate_array < 0].tolist()

    def __repr__(self) -> str:
        return f"WeightMatching(size={self.matching.size})"


def _empty_support_forest(host_n: int) -> SupportForest:
    gforest = Forest(0, [])
    rooted = root_at(gforest, [])
    return SupportForest(
        gforest,
        _readonly(np.empty(0, dtype=np.int64)),
        _readonly(np.empty(0, dtype=np.uint8)),
        rooted,
        host_n,
        _readonly(np.full(host_n, -1, dtype=np.int64)),
    )


def build_support_forest(f: Forest, s: Iterable[int]) -> SupportForest:
    """Subforest of the edges of f meeting the support set s, rooted in s.

    Expects s to be the support set of f; raises InternalError when the given
    set fails the structural guarantees that the support set satisfies
    (stability, no core leaves).
    """
    s_list = sorted({int(x) for x in s})
    for x in s_list:
        if not 0 <= x < f.n:
            raise ValueError(f"support vertex {x} out of range")
    smask_host = np.zeros(f.n, dtype=bool)
    smask_host[s_list] = True
    e = f.edge_array
    if e.shape[0]:
        end_s0 = smask_host[e[:, 0]]
        end_s1 = smask_host[e[:, 1]]
        if np.any(end_s0 & end_s1):
            raise InternalError("support set is not stable: edge inside support")
        ge = e[end_s0 | end_s1]
    else:
        ge = e
    if ge.shape[0] == 0:
        return _empty_support_forest(f.n)

    vids = np.unique(ge)
    compact_of = np.full(f.n, -1, dtype=np.int64)
    compact_of[vids] = np.arange(vids.size, dtype=np.int64)
    gforest = Forest(int(vids.size), compact_of[ge])
    smask = smask_host[vids]

    deg = gforest.degrees
    if np.any(~smask & (deg == 1)):
        raise InternalError("core vertex occurs as a leaf of the support forest")

    labels = gforest._labels
    roots = np.full(gforest._ncomp, -1, dtype=np.int64)
    sverts = np.flatnonzero(smask)
    # reversed assignment keeps the first (smallest) support vertex per label
    roots[labels[sverts][::-1]] = sverts[::-1]
    if np.any(roots < 0):
        raise InternalError("support-forest component without support vertex")
    rooted = root_at(gforest, roots.tolist())
    return SupportForest(gforest, _readonly(vids),
                         _readonly(smask.astype(np.uint8)), rooted, f.n,
                         _readonly(compact_of))


def compute_weights(g: SupportForest) -> SupportWeights:
    """Two linear passes over the rooted support forest.

    Children-before-parents for the subtree values: leaves (always support
    vertices) get 1, support vertices 1 + sum over children, core vertices the
    min over children.  Parents-first for the full values: support vertices
    add the parent's value, core vertices take min(subtree value, parent value
    minus subtree value); roots contribute 0.
    """
    if g.forest.n == 0:
        empty = _readonly(np.empty(0, dtype=np.int64))
        return SupportWeights(g, empty, empty)
    try:
        down, weight = impl().weight_passes(
            g.rooted.parent, g.rooted.postorder, g.s_mask, g.forest.n)
    except ValueError as exc:
        raise InternalError(str(exc)) from None
    return SupportWeights(g, _readonly(down), _readonly(weight))


def _children_csr(parent: np.ndarray, n: int) -> tuple[np.ndarray, np.ndarray]:
    mask = parent >= 0
    counts = np.bincount(parent[mask], minlength=n).astype(np.int64)
    ptr = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(counts, out=ptr[1:])
    order = np.argsort(parent, kind="stable")
    dat = order[int(n - mask.sum()):].astype(np.int64)
    return ptr, dat


def weight_matching(g: SupportForest, w: SupportWeights) -> WeightMatching:
    """Match every core vertex to a neighbor realizing its weight.

    Ties break toward the smallest-id child, with the parent as fallback,
    so the result is reproducible.  The chosen pairs are disjoint and form a
    maximum matching of the support forest.
    """
    n = g.forest.n
    if n == 0:
        return WeightMatching(
            g, Matching(0, np.empty(0, dtype=np.int64)),
            _readonly(np.empty(0, dtype=np.int64)))
    child_ptr, child_dat = _children_csr(g.rooted.parent, n)
    try:
        phi = impl().pick_minimizers(child_ptr, child_dat, g.rooted.parent,
                                     g.s_mask, w.down_array, w.weight_array, n)
    except ValueError as exc:
        raise InternalError(str(exc)) from None
    core = np.flatnonzero(g.s_mask == 0)
    targets = phi[core]
    if np.unique(targets).size != targets.size:
        raise InternalError("weight minimizer chosen by two core vertices")
    mate = np.full(n, -1, dtype=np.int64)
    mate[core] = targets
    mate[targets] = core
    return WeightMatching(g, Matching(n, mate), _readonly(phi))


def sparsest_basis(f: Forest) -> NullBasis:
    """A sparsest null basis of f, with entries in {-1, 0, 1}.

    Runs the support / weights / minimizer-matching pipeline, materializes
    one vector per unsaturated vertex of the resulting matching (extended by
    zeros outside the support forest), and appends a unit vector for every
    isolated vertex.  Each vector is sparsest among null vectors that are
    nonzero at its anchor, and the total nonzero count is minimum over all
    null bases.  Vectors are ordered by ascending anchor id.
    """
    m = maximum_matching(f)
    s = support_set(f, m)
    g = build_support_forest(f, s)
    items: list[tuple[int, SparseVector]] = []
    if g.forest.n:
        w = compute_weights(g)
        bm = weight_matching(g, w)
        orig = g.original_ids
        for a, vec in null_basis(g.forest, bm.matching):
            items.append((int(orig[a]), SparseVector(orig[vec.ids], vec.signs)))
    for x in np.flatnonzero(f.degrees == 0).tolist():
        items.append((x, SparseVector([x], [1])))
    items.sort(key=lambda t: t[0])
    return NullBasis(f.n, items)


def sparsest_nnz_count(f: Forest) -> int:
    """Total nonzeros of a sparsest null basis, without materializing vectors.

    Sum of the weights of the minimizer matching's unsaturated vertices plus
    one per isolated vertex; O(n).
    """
    m = maximum_matching(f)
    s = support_set(f, m)
    g = build_support_forest(f, s)
    iso = int((f.degrees == 0).sum())
    if g.forest.n == 0:
        return iso
    w = compute_weights(g)
    bm = weight_matching(g, w)
    unsat = np.flatnonzero(bm.matching.mate_array < 0)
    return int(w.weight_array[unsat].sum()) + iso
