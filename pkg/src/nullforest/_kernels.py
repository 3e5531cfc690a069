"""Pure-Python fallback kernels.

These mirror the compiled kernels in ``nullforest._speedups`` and are picked
automatically when the extension is not importable (or when
``NULLFOREST_BACKEND=py`` is set).  Every function takes and returns numpy
arrays with the same dtypes as the compiled versions, so callers never need
to know which backend is active.  Internally plain Python lists are used:
converting once at the boundary is much cheaper than indexing ndarrays
element by element.

Conventions shared by both backends:

* adjacency and out-arc structures are CSR pairs ``(ptr, dat)`` of int64;
* ``mate[v] == -1`` means v is unmatched;
* ``parent[v] == -1`` marks a root; ``-2`` never escapes a kernel;
* per-slice ordering of produced CSR data is *not* guaranteed here, the
  wrappers sort slices where the public types require it.
"""

from __future__ import annotations

import numpy as np

_INF = 1 << 62


def component_labels(adj_ptr, adj_dat, n):
    """Label vertices by connected component, numbered by lowest member id."""
    ptr = adj_ptr.tolist()
    dat = adj_dat.tolist()
    labels = [-1] * n
    count = 0
    for s in range(n):
        if labels[s] >= 0:
            continue
        labels[s] = count
        stack = [s]
        while stack:
            v = stack.pop()
            for i in range(ptr[v], ptr[v + 1]):
                w = dat[i]
                if labels[w] < 0:
                    labels[w] = count
                    stack.append(w)
        count += 1
    return np.asarray(labels, dtype=np.int64), count


def root_forest(adj_ptr, adj_dat, roots, n):
    """Parent pointers plus a children-before-parents order for each root's tree.

    The order is a depth-first postorder with children visited ascending.
    """
    ptr = adj_ptr.tolist()
    dat = adj_dat.tolist()
    parent = [-2] * n
    post: list[int] = []
    for r in roots.tolist():
        if parent[r] != -2:
            raise ValueError("duplicate root within one component")
        parent[r] = -1
        begin = len(post)
        stack = [r]
        while stack:
            v = stack.pop()
            post.append(v)
            for i in range(ptr[v], ptr[v + 1]):
                w = dat[i]
                if parent[w] == -2:
                    parent[w] = v
                    stack.append(w)
        # children were pushed ascending, hence visited descending; reversing
        # the segment yields a postorder with children ascending.
        post[begin:] = reversed(post[begin:])
    if len(post) != n:
        raise ValueError("roots do not cover every component")
    return np.asarray(parent, dtype=np.int64), np.asarray(post, dtype=np.int64)


def leaf_matching(adj_ptr, adj_dat, n):
    """Maximum matching of a forest by repeated leaf elimination.

    Current leaves sit in a FIFO queue seeded in ascending vertex order;
    vertices whose degree drops to one are appended as they appear, which
    keeps the whole pass O(n) and fully deterministic.
    """
    ptr = adj_ptr.tolist()
    dat = adj_dat.tolist()
    deg = [ptr[v + 1] - ptr[v] for v in range(n)]
    mate = [-1] * n
    removed = [False] * n
    queue = [v for v in range(n) if deg[v] == 1]
    head = 0
    while head < len(queue):
        u = queue[head]
        head += 1
        if removed[u]:
            continue
        removed[u] = True
        if deg[u] == 0:
            continue  # sole neighbor disappeared earlier; u stays unmatched
        v = -1
        for i in range(ptr[u], ptr[u + 1]):
            w = dat[i]
            if not removed[w]:
                v = w
                break
        mate[u] = v
        mate[v] = u
        removed[v] = True
        for i in range(ptr[v], ptr[v + 1]):
            w = dat[i]
            if not removed[w]:
                deg[w] -= 1
                if deg[w] == 1:
                    queue.append(w)
    return np.asarray(mate, dtype=np.int64)


def alternating_digraph(adj_ptr, adj_dat, mate, n):
    """Arcs x->mate(v) for every edge xv whose endpoint v is matched elsewhere.

    Returns a CSR pair over the same vertex set; slices are unsorted.
    """
    ptr = adj_ptr.tolist()
    dat = adj_dat.tolist()
    mt = mate.tolist()
    out_ptr = [0] * (n + 1)
    for x in range(n):
        c = 0
        for i in range(ptr[x], ptr[x + 1]):
            mv = mt[dat[i]]
            if mv >= 0 and mv != x:
                c += 1
        out_ptr[x + 1] = out_ptr[x] + c
    out_dat = [0] * out_ptr[n]
    for x in range(n):
        p = out_ptr[x]
        for i in range(ptr[x], ptr[x + 1]):
            mv = mt[dat[i]]
            if mv >= 0 and mv != x:
                out_dat[p] = mv
                p += 1
    return (np.asarray(out_ptr, dtype=np.int64),
            np.asarray(out_dat, dtype=np.int64))


def reachable_from(out_ptr, out_dat, sources, n):
    """Vertices reachable from any source by directed paths (uint8 mask)."""
    ptr = out_ptr.tolist()
    dat = out_dat.tolist()
    seen = bytearray(n)
    stack = []
    for s in sources.tolist():
        if not seen[s]:
            seen[s] = 1
            stack.append(s)
    while stack:
        v = stack.pop()
        for i in range(ptr[v], ptr[v + 1]):
            w = dat[i]
            if not seen[w]:
                seen[w] = 1
                stack.append(w)
    return np.frombuffer(bytes(seen), dtype=np.uint8)


def anchor_vectors(out_ptr, out_dat, anchors, n):
    """Per-anchor reachable vertices with alternating signs, traversal order.

    Breadth-first from each anchor; a vertex at even depth gets +1, odd depth
    -1.  A stamp array deduplicates without clearing per anchor, so total work
    is proportional to the number of produced entries.
    """
    ptr = out_ptr.tolist()
    dat = out_dat.tolist()
    stamp = [-1] * n
    verts: list[int] = []
    signs: list[int] = []
    offsets = [0]
    for ai, u in enumerate(anchors.tolist()):
        q = [u]
        qs = [1]
        stamp[u] = ai
        head = 0
        while head < len(q):
            v = q[head]
            sv = qs[head]
            head += 1
            verts.append(v)
            signs.append(sv)
            for i in range(ptr[v], ptr[v + 1]):
                w = dat[i]
                if stamp[w] != ai:
                    stamp[w] = ai
                    q.append(w)
                    qs.append(-sv)
        offsets.append(len(verts))
    return (np.asarray(offsets, dtype=np.int64),
            np.asarray(verts, dtype=np.int64),
            np.asarray(signs, dtype=np.int8))


def weight_passes(parent, postorder, s_flag, n):
    """Subtree and whole-forest minimum nonzero counts on the rooted support forest.

    One children-before-parents pass for the subtree values, one reversed
    (parents-first) pass for the full values.  Support vertices take
    1 + sum over children; the others take the min over children, then
    min(own subtree value, parent value - own subtree value).
    """
    par = parent.tolist()
    post = postorder.tolist()
    sf = s_flag.tolist()
    down = [0] * n
    acc_sum = [0] * n
    acc_min = [_INF] * n
    for v in post:
        if sf[v]:
            d = 1 + acc_sum[v]
        else:
            d = acc_min[v]
            if d >= _INF:
                raise ValueError("core vertex with no children")
        down[v] = d
        p = par[v]
        if p >= 0:
            acc_sum[p] += d
            if d < acc_min[p]:
                acc_min[p] = d
    weight = [0] * n
    for v in reversed(post):
        p = par[v]
        pw = weight[p] if p >= 0 else 0
        if sf[v]:
            weight[v] = down[v] + pw
        else:
            alt = pw - down[v]
            weight[v] = down[v] if down[v] < alt else alt
    return (np.asarray(down, dtype=np.int64),
            np.asarray(weight, dtype=np.int64))


def pick_minimizers(child_ptr, child_dat, parent, s_flag, down, weight, n):
    """For each non-support vertex pick the neighbor realizing its weight.

    Children are preferred over the parent and scanned ascending; the chosen
    child c satisfies down[c] == weight[r], the parent fallback satisfies
    weight[r] == weight[parent] - down[r].
    """
    cptr = child_ptr.tolist()
    cdat = child_dat.tolist()
    par = parent.tolist()
    sf = s_flag.tolist()
    dn = down.tolist()
    wt = weight.tolist()
    phi = [-1] * n
    for r in range(n):
        if sf[r]:
            continue
        target = wt[r]
        sel = -1
        for i in range(cptr[r], cptr[r + 1]):
            c = cdat[i]
            if dn[c] == target:
                sel = c
                break
        if sel < 0:
            p = par[r]
            if p >= 0 and target == wt[p] - dn[r]:
                sel = p
        if sel < 0:
            raise ValueError(f"no weight minimizer for vertex {r}")
        phi[r] = sel
    return np.asarray(phi, dtype=np.int64)
