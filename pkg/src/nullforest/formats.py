"""Text and Matrix Market serialization of null bases.

Text grammar, one vector per line, entries sorted by vertex id::

    <anchor>: (+|-)<vertex>( (+|-)<vertex>)*

Matrix Market output is coordinate format with an integer field and general
symmetry: rows are vertices, columns are basis vectors in emitted order, and
indices are 1-based per that format's convention (the text format stays 0-based).
"""

from __future__ import annotations

from .errors import ParseError
from .nullspace import NullBasis, SparseVector


def format_basis_text(basis: NullBasis) -> str:
    """One line per vector; empty string for an empty basis."""
    lines = []
    for u, vec in basis:
        parts = [f"{u}:"]
        parts.extend(("+" if s > 0 else "-") + str(v) for v, s in vec)
        lines.append(" ".join(parts))
    return "\n".join(lines) + "\n" if lines else ""


def parse_basis_text(text: str, n: int) -> NullBasis:
    """Inverse of format_basis_text; validates ids against the host size n."""
    items = []
    for lineno, raw in enumerate(text.split("\n"), 1):
        line = raw.strip()
        if not line:
            continue
        head, sep, rest = line.partition(":")
        if not sep:
            raise ParseError(f"line {lineno}: missing ':' after anchor")
        try:
            anchor = int(head)
        except ValueError:
            raise ParseError(f"line {lineno}: bad anchor {head!r}") from None
        if not 0 <= anchor < n:
            raise ParseError(f"line {lineno}: anchor {anchor} out of range")
        tokens = rest.split()
        if not tokens:
            raise ParseError(f"line {lineno}: vector has no entries")
        pairs = []
        for tok in tokens:
            if len(tok) < 2 or tok[0] not in "+-":
                raise ParseError(f"line {lineno}: bad entry {tok!r}")
            try:
                v = int(tok[1:])
            except ValueError:
                raise ParseError(f"line {lineno}: bad entry {tok!r}") from None
            if not 0 <= v < n:
                raise ParseError(f"line {lineno}: vertex {v} out of range")
            pairs.append((v, 1 if tok[0] == "+" else -1))
        try:
            vec = SparseVector.from_pairs(pairs)
        except ValueError as exc:
            raise ParseError(f"line {lineno}: {exc}") from None
        items.append((anchor, vec))
    return NullBasis(n, items)


def format_basis_mm(basis: NullBasis) -> str:
    """Matrix Market coordinate form: n rows, one column per basis vector."""
    lines = [
        "%%MatrixMarket matrix coordinate integer general",
        f"{basis.n} {len(basis)} {basis.total_nnz}",
    ]
    for col, (_, vec) in enumerate(basis, 1):
        lines.extend(f"{v + 1} {col} {s}" for v, s in vec)
    return "\n".join(lines) + "\n"
