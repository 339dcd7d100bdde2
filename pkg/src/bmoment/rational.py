"""Exact rational helpers: parsing, formatting and small dense linear algebra.

Everything here works on ``fractions.Fraction`` so results are bit-stable.
Matrices are plain sequences of row sequences; sizes in this package are tiny
(dimension at most a handful), so clarity wins over speed.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence

Rational = Fraction
Matrix = list[list[Fraction]]


def to_fraction(x) -> Fraction:
    """Convert ints, floats (exactly), Fractions and ``"p/q"`` strings."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, float):
        if x != x or x in (float("inf"), float("-inf")):
            raise ValueError(f"non-finite value {x!r} has no rational form")
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    # numpy scalars and similar
    if hasattr(x, "item"):
        return to_fraction(x.item())
    raise TypeError(f"cannot interpret {x!r} as a rational")


def format_fraction(q) -> str:
    q = to_fraction(q)
    return f"{q.numerator}/{q.denominator}"


def lcm(a: int, b: int) -> int:
    return abs(a * b) // gcd(a, b) if a and b else 0


def primitive_integer(vec: Sequence) -> tuple[int, ...]:
    """Scale a rational vector by a positive factor to a primitive integer vector.

    The zero vector maps to itself.
    """
    qs = [to_fraction(x) for x in vec]
    den = 1
    for q in qs:
        den = lcm(den, q.denominator)
    ints = [int(q * den) for q in qs]
    g = 0
    for i in ints:
        g = gcd(g, i)
    if g == 0:
        return tuple(ints)
    return tuple(i // g for i in ints)


def dot(u: Sequence, v: Sequence) -> Fraction:
    if len(u) != len(v):
        raise ValueError(f"dimension mismatch: {len(u)} vs {len(v)}")
    return sum((to_fraction(a) * to_fraction(b) for a, b in zip(u, v)), Fraction(0))


def _copy(A) -> Matrix:
    return [[to_fraction(x) for x in row] for row in A]


def row_echelon(A) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and pivot columns."""
    M = _copy(A)
    if not M:
        return M, []
    ncols = len(M[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(M)) if M[i][c] != 0), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        piv = M[r][c]
        M[r] = [x / piv for x in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == len(M):
            break
    return M, pivots


def rank(A) -> int:
    return len(row_echelon(A)[1])


def nullspace(A, ncols: int | None = None) -> Matrix:
    """Basis of {x : A x = 0} as a list of rational vectors."""
    if not A:
        if ncols is None:
            raise ValueError("ncols required for an empty matrix")
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    R, pivots = row_echelon(A)
    n = len(R[0])
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * n
        x[f] = Fraction(1)
        for i, p in enumerate(pivots):
            x[p] = -R[i][f]
        basis.append(x)
    return basis


def solve(A, b) -> list[Fraction] | None:
    """Unique solution of the square-or-tall system ``A x = b``; None if singular
    or inconsistent."""
    M = _copy(A)
    if not M:
        return None
    n = len(M[0])
    aug = [row + [to_fraction(bi)] for row, bi in zip(M, b)]
    R, pivots = row_echelon(aug)
    if n in pivots:
        return None
    if len(pivots) < n:
        return None
    return [R[i][n] for i in range(n)]


def det(A) -> Fraction:
    M = _copy(A)
    n = len(M)
    d = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if M[i][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            M[c], M[p] = M[p], M[c]
            d = -d
        d *= M[c][c]
        for i in range(c + 1, n):
            if M[i][c] != 0:
                f = M[i][c] / M[c][c]
                M[i] = [a - f * bb for a, bb in zip(M[i], M[c])]
    return d
