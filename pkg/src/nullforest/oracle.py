"""Exact-arithmetic ground truth for small instances.

Everything here runs over ``fractions.Fraction``, so the answers are exact.
These routines certify the linear-time algorithms on small forests; they are
deliberately brute force and make no attempt to be fast.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import InternalError, NotInSupportError, SizeLimitError
from .forest import Forest
from .matching import nullity
from .nullspace import NullBasis

_ZERO = Fraction(0)
_ONE = Fraction(1)


@dataclass(frozen=True)
class RationalMatrix:
    """Dense matrix of exact rationals."""

    rows: int
    cols: int
    entries: tuple[tuple[Fraction, ...], ...]

    def row_lists(self) -> list[list[Fraction]]:
        """Mutable copy of the entries, for elimination."""
        return [list(r) for r in self.entries]


def adjacency_matrix(f: Forest) -> RationalMatrix:
    """Symmetric 0/1 adjacency matrix with zero diagonal."""
    n = f.n
    rows = [[_ZERO] * n for _ in range(n)]
    for u, v in f.edges:
        rows[u][v] = _ONE
        rows[v][u] = _ONE
    return RationalMatrix(n, n, tuple(tuple(r) for r in rows))


def _rank(rows: list[list[Fraction]]) -> int:
    """Rank by Gaussian elimination; mutates its argument."""
    if not rows:
        return 0
    ncols = len(rows[0])
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(rows)):
            if rows[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r]
        pval = prow[c]
        for i in range(r + 1, len(rows)):
            fv = rows[i][c]
            if fv:
                ratio = fv / pval
                row = rows[i]
                for j in range(c, ncols):
                    row[j] -= ratio * prow[j]
        r += 1
        if r == len(rows):
            break
    return r


def _null_space(rows: list[list[Fraction]], ncols: int) -> list[list[Fraction]]:
    """Basis of the right null space via reduced row echelon form."""
    mat = [r[:] for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(mat)):
            if mat[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        pval = mat[r][c]
        mat[r] = [x / pval for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c]:
                fv = mat[i][c]
                mat[i] = [a - fv * b for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        vec = [_ZERO] * ncols
        vec[fc] = _ONE
        for ri, pc in enumerate(pivots):
            vec[pc] = -mat[ri][fc]
        basis.append(vec)
    return basis


def null_dimension(a: RationalMatrix) -> int:
    """cols - rank, by exact elimination."""
    return a.cols - _rank(a.row_lists())


def support_oracle(f: Forest, limit: int = 64) -> list[int]:
    """Vertices x where forcing z(x) = 0 shrinks the null space, sorted.

    Tests each vertex by appending the corresponding unit row to the
    adjacency matrix and comparing null-space dimensions.
    """
    if f.n > limit:
        raise SizeLimitError(f"support oracle capped at n = {limit}")
    a = adjacency_matrix(f)
    base = null_dimension(a)
    out = []
    for x in range(f.n):
        rows = a.row_lists()
        extra = [_ZERO] * f.n
        extra[x] = _ONE
        rows.append(extra)
        if f.n - _rank(rows) < base:
            out.append(x)
    return out


def min_weight(f: Forest, x: int, limit: int = 12) -> int:
    """Minimum nonzeros among null vectors that are nonzero at x.

    Enumerates candidate supports by size (restricted to the support set,
    which loses nothing since null vectors vanish elsewhere) and tests each
    with an exact rank comparison on the column-restricted adjacency matrix.
    """
    if f.n > limit:
        raise SizeLimitError(f"min-weight oracle capped at n = {limit}")
    supp = support_oracle(f, limit=limit)
    if x not in supp:
        raise NotInSupportError(f"vertex {x} is zero in every null vector")
    a = adjacency_matrix(f)
    others = [s for s in supp if s != x]
    for k in range(1, len(supp) + 1):
        for rest in combinations(others, k - 1):
            cols = sorted((x, *rest))
            sub = [[row[c] for c in cols] for row in a.entries]
            r0 = _rank([r[:] for r in sub])
            erow = [_ZERO] * k
            erow[cols.index(x)] = _ONE
            if _rank(sub + [erow]) > r0:
                return k
    raise InternalError("support vertex without an anchored null vector")


def sparsest_total_oracle(f: Forest, limit: int = 12) -> int:
    """Total nonzeros of a sparsest null basis, built greedily.

    Repeatedly takes a sparsest null vector outside the span of those already
    chosen (supports enumerated by size, span membership decided by exact
    rank); any basis built this way has minimum total nonzeros.
    """
    if f.n > limit:
        raise SizeLimitError(f"sparsest-total oracle capped at n = {limit}")
    a = adjacency_matrix(f)
    dim = f.n - _rank(a.row_lists())
    if dim == 0:
        return 0
    supp = support_oracle(f, limit=limit)
    chosen: list[list[Fraction]] = []
    total = 0
    for _ in range(dim):
        total += _greedy_step(a, supp, chosen, f.n)
    return total


def _greedy_step(a: RationalMatrix, supp: list[int],
                 chosen: list[list[Fraction]], n: int) -> int:
    """Append to ``chosen`` a sparsest null vector outside its span."""
    for k in range(1, len(supp) + 1):
        for cols in combinations(supp, k):
            sub = [[row[c] for c in cols] for row in a.entries]
            local = _null_space(sub, k)
            if not local:
                continue
            embedded = []
            for vec in local:
                full = [_ZERO] * n
                for ci, c in enumerate(cols):
                    full[c] = vec[ci]
                embedded.append(full)
            stacked = [v[:] for v in chosen] + [v[:] for v in embedded]
            if _rank(stacked) <= len(chosen):
                continue
            for cand in embedded:
                if _rank([v[:] for v in chosen] + [cand[:]]) > len(chosen):
                    chosen.append(cand)
                    return k
    raise InternalError("greedy step found no new null vector")


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of verify_basis: one entry per structural check."""

    checks: tuple[CheckResult, ...]

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def lines(self) -> list[str]:
        out = []
        for c in self.checks:
            status = "PASS" if c.passed else "FAIL"
            suffix = f" ({c.detail})" if c.detail and not c.passed else ""
            out.append(f"{c.name}: {status}{suffix}")
        return out

    def __str__(self) -> str:
        return "\n".join(self.lines())


def verify_basis(f: Forest, b: NullBasis) -> VerificationReport:
    """Check a claimed null basis: entries, null membership, count, independence.

    Failures become report entries rather than exceptions.  Null membership
    uses plain integer neighborhood sums; independence uses exact sparse
    elimination over rationals.
    """
    checks = []

    ok, detail = True, ""
    for u, vec in b:
        ids = vec.ids
        if ids.size and (int(ids[0]) < 0 or int(ids[-1]) >= f.n):
            ok, detail = False, f"vector {u}: vertex id out of range"
            break
        if vec.signs.size and not all(s in (-1, 1) for s in vec.signs.tolist()):
            ok, detail = False, f"vector {u}: entry outside {{-1, 0, 1}}"
            break
    checks.append(CheckResult("entries", ok, detail))

    ok, detail = True, ""
    if checks[0].passed:
        for u, vec in b:
            sums: dict[int, int] = {}
            for v, s in vec:
                for w in f.neighbors(v).tolist():
                    sums[w] = sums.get(w, 0) + s
            bad = sorted(w for w, total in sums.items() if total != 0)
            if bad:
                ok = False
                detail = (f"vector {u}: neighborhood sum "
                          f"{sums[bad[0]]} at vertex {bad[0]}")
                break
    checks.append(CheckResult("null_membership", ok, detail))

    expected = nullity(f)
    ok = len(b) == expected
    checks.append(CheckResult(
        "vector_count", ok,
        "" if ok else f"expected {expected}, got {len(b)}"))

    ok, detail = True, ""
    pivots: list[tuple[int, dict[int, Fraction]]] = []
    for u, vec in b:
        work = {v: Fraction(s) for v, s in vec}
        for pv, prow in pivots:
            cf = work.get(pv)
            if cf:
                for idx, val in prow.items():
                    nv = work.get(idx, _ZERO) - cf * val
                    if nv:
                        work[idx] = nv
                    else:
                        work.pop(idx, None)
        if not work:
            ok, detail = False, f"vector {u} depends on earlier vectors"
            break
        pv = min(work)
        pval = work[pv]
        pivots.append((pv, {idx: val / pval for idx, val in work.items()}))
    checks.append(CheckResult("independent", ok, detail))

    return VerificationReport(tuple(checks))
