"""Small exact linear algebra over the rationals.

Everything in this package is computed with `fractions.Fraction`; no
floating point is allowed anywhere, so the usual numpy routines are of
no use here.  Vectors are tuples of Fractions, matrices are tuples of
row tuples.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Rat = Fraction
Vec = tuple[Rat, ...]
Mat = tuple[Vec, ...]


def vec(*entries) -> Vec:
    return tuple(Rat(e) for e in entries)


def zero_vec(n: int) -> Vec:
    return (Rat(0),) * n


def add(u: Vec, v: Vec) -> Vec:
    return tuple(a + b for a, b in zip(u, v, strict=True))


def sub(u: Vec, v: Vec) -> Vec:
    return tuple(a - b for a, b in zip(u, v, strict=True))


def smul(c, v: Vec) -> Vec:
    c = Rat(c)
    return tuple(c * a for a in v)


def dot(u: Vec, v: Vec) -> Rat:
    return sum((a * b for a, b in zip(u, v, strict=True)), Rat(0))


def mat_vec(m: Mat, v: Vec) -> Vec:
    return tuple(dot(row, v) for row in m)


def bilinear(gram: Mat, u: Vec, v: Vec) -> Rat:
    return dot(u, mat_vec(gram, v))


def outer(u: Vec, v: Vec) -> Mat:
    return tuple(tuple(a * b for b in v) for a in u)


def mat_add(a: Mat, b: Mat) -> Mat:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_scale(c, a: Mat) -> Mat:
    c = Rat(c)
    return tuple(tuple(c * x for x in row) for row in a)


def identity(n: int) -> Mat:
    return tuple(tuple(Rat(1 if i == j else 0) for j in range(n)) for i in range(n))


def _echelon(rows: list[list[Rat]]) -> tuple[list[list[Rat]], list[int]]:
    """Row reduce in place; returns (reduced rows, pivot columns)."""
    pivots: list[int] = []
    r = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = Rat(1) / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rank(vectors: Iterable[Vec]) -> int:
    rows = [list(v) for v in vectors]
    if not rows:
        return 0
    _, pivots = _echelon(rows)
    return len(pivots)


def solve(a: Mat, b: Vec) -> Vec | None:
    """One solution of a@x=b, or None when inconsistent."""
    n = len(a)
    m = len(a[0]) if n else 0
    rows = [list(a[i]) + [b[i]] for i in range(n)]
    rows, pivots = _echelon(rows)
    x = [Rat(0)] * m
    for r, c in enumerate(pivots):
        if c == m:
            return None
        x[c] = rows[r][m]
    # rows below the pivots must be consistent
    for r in range(len(pivots), n):
        if rows[r][m] != 0 and all(v == 0 for v in rows[r][:m]):
            return None
    return tuple(x)


def inverse(a: Mat) -> Mat:
    n = len(a)
    rows = [list(a[i]) + [Rat(1 if i == j else 0) for j in range(n)] for i in range(n)]
    rows, pivots = _echelon(rows)
    if pivots != list(range(n)):
        raise ValueError("matrix is singular")
    return tuple(tuple(rows[i][n:]) for i in range(n))


def determinant(a: Mat) -> Rat:
    n = len(a)
    rows = [list(r) for r in a]
    det = Rat(1)
    for c in range(n):
        pivot = next((i for i in range(c, n) if rows[i][c] != 0), None)
        if pivot is None:
            return Rat(0)
        if pivot != c:
            rows[c], rows[pivot] = rows[pivot], rows[c]
            det = -det
        det *= rows[c][c]
        inv = Rat(1) / rows[c][c]
        for i in range(c + 1, n):
            if rows[i][c] != 0:
                f = rows[i][c] * inv
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[c])]
    return det


def in_span(vectors: Sequence[Vec], v: Vec) -> bool:
    return rank(list(vectors)) == rank(list(vectors) + [v])


def parse_rat(text: str) -> Rat:
    """Parse "p/q" (reduced or not) or an integer literal."""
    try:
        return Rat(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"malformed rational {text!r}") from exc


def fmt_rat(x) -> str:
    """Serialize reduced, negative sign on the numerator."""
    x = Rat(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"
