# cython: language_level=3, boundscheck=False, wraparound=False
# cython: initializedcheck=False, cdivision=True
"""Compiled kernels for the hot loops.

Mirrors ``nullforest._kernels``; see that module for the reference
implementations and the calling conventions shared by both backends.
"""

import numpy as np

from libc.stdint cimport int8_t, int64_t, uint8_t

cdef int64_t _INF = (<int64_t>1) << 62


def component_labels(adj_ptr, adj_dat, Py_ssize_t n):
    """Label vertices by connected component, numbered by lowest member id."""
    cdef const int64_t[::1] ptr = adj_ptr
    cdef const int64_t[::1] dat = adj_dat
    labels_arr = np.full(n, -1, dtype=np.int64)
    stack_arr = np.empty(max(n, 1), dtype=np.int64)
    cdef int64_t[::1] labels = labels_arr
    cdef int64_t[::1] stack = stack_arr
    cdef Py_ssize_t top
    cdef int64_t s, v, w, i, count = 0
    for s in range(n):
        if labels[s] >= 0:
            continue
        labels[s] = count
        top = 0
        stack[top] = s
        top += 1
        while top > 0:
            top -= 1
            v = stack[top]
            for i in range(ptr[v], ptr[v + 1]):
                w = dat[i]
                if labels[w] < 0:
                    labels[w] = count
                    stack[top] = w
                    top += 1
        count += 1
    return labels_arr, int(count)


def root_forest(adj_ptr, adj_dat, roots, Py_ssize_t n):
    """Parent pointers plus a children-before-parents order for each root's tree."""
    cdef const int64_t[::1] ptr = adj_ptr
    cdef const int64_t[::1] dat = adj_dat
    cdef const int64_t[::1] rts = roots
    parent_arr = np.full(n, -2, dtype=np.int64)
    post_arr = np.empty(n, dtype=np.int64)
    stack_arr = np.empty(max(n, 1), dtype=np.int64)
    cdef int64_t[::1] parent = parent_arr
    cdef int64_t[::1] post = post_arr
    cdef int64_t[::1] stack = stack_arr
    cdef Py_ssize_t top, filled = 0, begin, lo, hi, ri
    cdef int64_t r, v, w, i, tmp
    for ri in range(rts.shape[0]):
        r = rts[ri]
        if parent[r] != -2:
            raise ValueError("duplicate root within one component")
        parent[r] = -1
        begin = filled
        top = 0
        stack[top] = r
        top += 1
        while top > 0:
            top -= 1
            v = stack[top]
            post[filled] = v
            filled += 1
            for i in range(ptr[v], ptr[v + 1]):
                w = dat[i]
                if parent[w] == -2:
                    parent[w] = v
                    stack[top] = w
                    top += 1
        lo = begin
        hi = filled - 1
        while lo < hi:
            tmp = post[lo]
            post[lo] = post[hi]
            post[hi] = tmp
            lo += 1
            hi -= 1
    if filled != n:
        raise ValueError("roots do not cover every component")
    return parent_arr, post_arr


def leaf_matching(adj_ptr, adj_dat, Py_ssize_t n):
    """Maximum matching of a forest by repeated leaf elimination."""
    cdef const int64_t[::1] ptr = adj_ptr
    cdef const int64_t[::1] dat = adj_dat
    mate_arr = np.full(n, -1, dtype=np.int64)
    deg_arr = np.empty(n, dtype=np.int64)
    removed_arr = np.zeros(n, dtype=np.uint8)
    queue_arr = np.empty(max(n, 1), dtype=np.int64)
    cdef int64_t[::1] mate = mate_arr
    cdef int64_t[::1] deg = deg_arr
    cdef uint8_t[::1] removed = removed_arr
    cdef int64_t[::1] queue = queue_arr
    cdef Py_ssize_t head = 0, tail = 0
    cdef int64_t u, v, w, i
    for u in range(n):
        deg[u] = ptr[u + 1] - ptr[u]
        if deg[u] == 1:
            queue[tail] = u
            tail += 1
    while head < tail:
        u = queue[head]
        head += 1
        if removed[u]:
            continue
        removed[u] = 1
        if deg[u] == 0:
            continue
        v = -1
        for i in range(ptr[u], ptr[u + 1]):
            w = dat[i]
            if not removed[w]:
                v = w
                break
        mate[u] = v
        mate[v] = u
        removed[v] = 1
        for i in range(ptr[v], ptr[v + 1]):
            w = dat[i]
            if not removed[w]:
                deg[w] -= 1
                if deg[w] == 1:
                    queue[tail] = w
                    tail += 1
    return mate_arr


def alternating_digraph(adj_ptr, adj_dat, mate, Py_ssize_t n):
    """Arcs x->mate(v) for every edge xv whose endpoint v is matched elsewhere."""
    cdef const int64_t[::1] ptr = adj_ptr
    cdef const int64_t[::1] dat = adj_dat
    cdef const int64_t[::1] mt = mate
    out_ptr_arr = np.zeros(n + 1, dtype=np.int64)
    cdef int64_t[::1] out_ptr = out_ptr_arr
    cdef int64_t x, i, mv, total = 0
    for x in range(n):
        for i in range(ptr[x], ptr[x + 1]):
            mv = mt[dat[i]]
            if mv >= 0 and mv != x:
                total += 1
        out_ptr[x + 1] = total
    out_dat_arr = np.empty(total, dtype=np.int64)
    cdef int64_t[::1] out_dat = out_dat_arr
    cdef int64_t p
    for x in range(n):
        p = out_ptr[x]
        for i in range(ptr[x], ptr[x + 1]):
            mv = mt[dat[i]]
            if mv >= 0 and mv != x:
                out_dat[p] = mv
                p += 1
    return out_ptr_arr, out_dat_arr


def reachable_from(out_ptr, out_dat, sources, Py_ssize_t n):
    """Vertices reachable from any source by directed paths (uint8 mask)."""
    cdef const int64_t[::1] ptr = out_ptr
    cdef const int64_t[::1] dat = out_dat
    cdef const int64_t[::1] src = sources
    seen_arr = np.zeros(n, dtype=np.uint8)
    stack_arr = np.empty(max(n, 1), dtype=np.int64)
    cdef uint8_t[::1] seen = seen_arr
    cdef int64_t[::1] stack = stack_arr
    cdef Py_ssize_t top = 0, si
    cdef int64_t s, v, w, i
    for si in range(src.shape[0]):
        s = src[si]
        if not seen[s]:
            seen[s] = 1
            stack[top] = s
            top += 1
    while top > 0:
        top -= 1
        v = stack[top]
        for i in range(ptr[v], ptr[v + 1]):
            w = dat[i]
            if not seen[w]:
                seen[w] = 1
                stack[top] = w
                top += 1
    return seen_arr


def anchor_vectors(out_ptr, out_dat, anchors, Py_ssize_t n):
    """Per-anchor reachable vertices with alternating signs, traversal order."""
    cdef const int64_t[::1] ptr = out_ptr
    cdef const int64_t[::1] dat = out_dat
    cdef const int64_t[::1] anc = anchors
    cdef Py_ssize_t k = anc.shape[0]
    offsets_arr = np.zeros(k + 1, dtype=np.int64)
    cdef int64_t[::1] offsets = offsets_arr
    cdef Py_ssize_t cap = 1024
    verts_arr = np.empty(cap, dtype=np.int64)
    signs_arr = np.empty(cap, dtype=np.int8)
    cdef int64_t[::1] verts = verts_arr
    cdef int8_t[::1] signs = signs_arr
    stamp_arr = np.full(max(n, 1), -1, dtype=np.int64)
    queue_arr = np.empty(max(n, 1), dtype=np.int64)
    qsign_arr = np.empty(max(n, 1), dtype=np.int8)
    cdef int64_t[::1] stamp = stamp_arr
    cdef int64_t[::1] queue = queue_arr
    cdef int8_t[::1] qsign = qsign_arr
    cdef Py_ssize_t used = 0, head, tail, ai, need
    cdef int64_t u, v, w, i
    cdef int8_t s
    for ai in range(k):
        # one anchor can add at most n entries; reserve once up front
        if used + n > cap:
            need = used + n
            cap = cap * 2
            if cap < need:
                cap = need
            new_v = np.empty(cap, dtype=np.int64)
            new_v[:used] = verts_arr[:used]
            verts_arr = new_v
            verts = verts_arr
            new_s = np.empty(cap, dtype=np.int8)
            new_s[:used] = signs_arr[:used]
            signs_arr = new_s
            signs = signs_arr
        u = anc[ai]
        head = 0
        tail = 0
        queue[tail] = u
        qsign[tail] = 1
        tail += 1
        stamp[u] = ai
        while head < tail:
            v = queue[head]
            s = qsign[head]
            head += 1
            verts[used] = v
            signs[used] = s
            used += 1
            for i in range(ptr[v], ptr[v + 1]):
                w = dat[i]
                if stamp[w] != ai:
                    stamp[w] = ai
                    queue[tail] = w
                    qsign[tail] = <int8_t>(-s)
                    tail += 1
        offsets[ai + 1] = used
    return offsets_arr, verts_arr[:used].copy(), signs_arr[:used].copy()


def weight_passes(parent, postorder, s_flag, Py_ssize_t n):
    """Subtree and whole-forest minimum nonzero counts on the rooted support forest."""
    cdef const int64_t[::1] par = parent
    cdef const int64_t[::1] post = postorder
    cdef const uint8_t[::1] sf = s_flag
    down_arr = np.zeros(n, dtype=np.int64)
    weight_arr = np.zeros(n, dtype=np.int64)
    acc_sum_arr = np.zeros(n, dtype=np.int64)
    acc_min_arr = np.full(n, _INF, dtype=np.int64)
    cdef int64_t[::1] down = down_arr
    cdef int64_t[::1] weight = weight_arr
    cdef int64_t[::1] acc_sum = acc_sum_arr
    cdef int64_t[::1] acc_min = acc_min_arr
    cdef Py_ssize_t idx
    cdef int64_t v, p, d, pw, alt
    for idx in range(n):
        v = post[idx]
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
    for idx in range(n - 1, -1, -1):
        v = post[idx]
        p = par[v]
        pw = weight[p] if p >= 0 else 0
        if sf[v]:
            weight[v] = down[v] + pw
        else:
            alt = pw - down[v]
            weight[v] = down[v] if down[v] < alt else alt
    return down_arr, weight_arr


def pick_minimizers(child_ptr, child_dat, parent, s_flag, down, weight,
                    Py_ssize_t n):
    """For each non-support vertex pick the neighbor realizing its weight."""
    cdef const int64_t[::1] cptr = child_ptr
    cdef const int64_t[::1] cdat = child_dat
    cdef const int64_t[::1] par = parent
    cdef const uint8_t[::1] sf = s_flag
    cdef const int64_t[::1] dn = down
    cdef const int64_t[::1] wt = weight
    phi_arr = np.full(n, -1, dtype=np.int64)
    cdef int64_t[::1] phi = phi_arr
    cdef int64_t r, i, c, p, target, sel
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
    return phi_arr
