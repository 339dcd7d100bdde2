"""Exact linear algebra over the Lie algebra t = Q^k, its dual t*, and the
integer lattice Z^k.

Elements of the lattice are :class:`LatticeVector` (integer coordinates),
elements of t* are :class:`Covector` (rational coordinates). All operations
are exact; nothing in this module touches floating point.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .errors import DimensionMismatchError, NoComplementError
from .rational import det, format_fraction, primitive_integer, rank, solve, to_fraction


@dataclass(frozen=True)
class LatticeVector:
    coords: tuple[int, ...]

    def __init__(self, coords: Iterable[int]):
        cs = []
        for c in coords:
            q = to_fraction(c)
            if q.denominator != 1:
                raise ValueError(f"lattice coordinates must be integers, got {c!r}")
            cs.append(int(q))
        if not cs:
            raise ValueError("lattice vectors need dimension >= 1")
        object.__setattr__(self, "coords", tuple(cs))

    def __len__(self):
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __neg__(self):
        return LatticeVector(-c for c in self.coords)

    def __add__(self, other):
        _check_dims(self, other)
        return LatticeVector(a + b for a, b in zip(self, other))

    def __sub__(self, other):
        _check_dims(self, other)
        return LatticeVector(a - b for a, b in zip(self, other))

    def __mul__(self, s: int):
        return LatticeVector(s * c for c in self.coords)

    __rmul__ = __mul__

    @property
    def dim(self) -> int:
        return len(self.coords)

    @property
    def is_primitive(self) -> bool:
        g = 0
        for c in self.coords:
            g = gcd(g, c)
        return g == 1

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __repr__(self):
        return f"LatticeVector({list(self.coords)})"


@dataclass(frozen=True)
class Covector:
    coords: tuple[Fraction, ...]

    def __init__(self, coords: Iterable):
        cs = tuple(to_fraction(c) for c in coords)
        object.__setattr__(self, "coords", cs)

    def __len__(self):
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __getitem__(self, i):
        return self.coords[i]

    def __neg__(self):
        return Covector(-c for c in self.coords)

    def __add__(self, other):
        _check_dims(self, other)
        return Covector(a + to_fraction(b) for a, b in zip(self, other))

    def __sub__(self, other):
        _check_dims(self, other)
        return Covector(a - to_fraction(b) for a, b in zip(self, other))

    def __mul__(self, s):
        s = to_fraction(s)
        return Covector(s * c for c in self.coords)

    __rmul__ = __mul__

    @property
    def dim(self) -> int:
        return len(self.coords)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def primitive(self) -> LatticeVector:
        """Positive rescaling to a primitive integer vector (zero stays zero)."""
        return LatticeVector(primitive_integer(self.coords))

    def to_strings(self) -> list[str]:
        return [format_fraction(c) for c in self.coords]

    def __repr__(self):
        return "Covector([%s])" % ", ".join(str(c) for c in self.coords)


def _check_dims(a, b):
    if len(a) != len(b):
        raise DimensionMismatchError(f"dimension mismatch: {len(a)} vs {len(b)}")


def pairing(X, xi) -> Fraction:
    """Exact natural pairing <X, xi> = sum X_i xi_i."""
    _check_dims(X, xi)
    return sum((to_fraction(a) * to_fraction(b) for a, b in zip(X, xi)), Fraction(0))


def proportionality(u, v) -> Fraction | None:
    """Return lam with v = lam * u, or None if v is not a multiple of u.

    ``u`` must be nonzero.
    """
    _check_dims(u, v)
    i = next((j for j, x in enumerate(u) if x != 0), None)
    if i is None:
        raise ValueError("reference vector is zero")
    lam = to_fraction(v[i]) / to_fraction(u[i])
    if all(to_fraction(b) == lam * to_fraction(a) for a, b in zip(u, v)):
        return lam
    return None


# --- integer normal forms ---------------------------------------------------

def smith_normal_form(A: Sequence[Sequence[int]]):
    """Smith normal form of a small integer matrix.

    Returns ``(D, U, V)`` with ``U @ A @ V == D``, ``U`` and ``V`` unimodular and
    ``D`` diagonal with nonnegative entries, each dividing the next.
    """
    m = len(A)
    n = len(A[0]) if m else 0
    D = [[int(x) for x in row] for row in A]
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    V = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in D:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):  # row_dst += q * row_src
        D[dst] = [a + q * b for a, b in zip(D[dst], D[src])]
        U[dst] = [a + q * b for a, b in zip(U[dst], U[src])]

    def add_col(dst, src, q):
        for row in D:
            row[dst] += q * row[src]
        for row in V:
            row[dst] += q * row[src]

    for t in range(min(m, n)):
        nz = [(abs(D[i][j]), i, j) for i in range(t, m) for j in range(t, n) if D[i][j]]
        if not nz:
            break
        _, i0, j0 = min(nz)
        swap_rows(t, i0)
        swap_cols(t, j0)
        while True:
            clean = True
            for i in range(t + 1, m):
                if D[i][t]:
                    add_row(i, t, -(D[i][t] // D[t][t]))
                    clean = clean and D[i][t] == 0
            for j in range(t + 1, n):
                if D[t][j]:
                    add_col(j, t, -(D[t][j] // D[t][t]))
                    clean = clean and D[t][j] == 0
            if not clean:
                cands = [(abs(D[i][t]), i, t) for i in range(t + 1, m) if D[i][t]]
                cands += [(abs(D[t][j]), t, j) for j in range(t + 1, n) if D[t][j]]
                _, i1, j1 = min(cands)
                if i1 != t:
                    swap_rows(t, i1)
                else:
                    swap_cols(t, j1)
                continue
            bad = next(
                ((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if D[i][j] % D[t][t]),
                None,
            )
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if D[t][t] < 0:
            D[t] = [-x for x in D[t]]
            U[t] = [-x for x in U[t]]
    return D, U, V


def hermite_normal_form(rows: Sequence[Sequence[int]]) -> list[list[int]]:
    """Row-style Hermite normal form (echelon, positive pivots, entries above
    each pivot reduced into [0, pivot)). Zero rows are dropped."""
    M = [[int(x) for x in r] for r in rows]
    if not M:
        return []
    m, n = len(M), len(M[0])
    r = 0
    for c in range(n):
        if r == m:
            break
        while True:
            nz = [i for i in range(r, m) if M[i][c]]
            if not nz:
                break
            p = min(nz, key=lambda i: abs(M[i][c]))
            M[r], M[p] = M[p], M[r]
            done = True
            for i in range(r + 1, m):
                if M[i][c]:
                    q = M[i][c] // M[r][c]
                    M[i] = [a - q * b for a, b in zip(M[i], M[r])]
                    done = done and M[i][c] == 0
            if done:
                break
        if M[r][c] == 0:
            continue
        if M[r][c] < 0:
            M[r] = [-x for x in M[r]]
        for i in range(r):
            q = M[i][c] // M[r][c]
            if q:
                M[i] = [a - q * b for a, b in zip(M[i], M[r])]
        r += 1
    return [row for row in M if any(row)]


# --- kernels and complements ---------------------------------------------------

@dataclass(frozen=True)
class KernelLattice:
    """Saturated sublattice {X in Z^k : <X, v> = 0}, in Hermite normal form."""

    basis: tuple[LatticeVector, ...]
    ambient_dim: int

    @property
    def rank(self) -> int:
        return len(self.basis)

    def contains(self, X) -> bool:
        if len(X) != self.ambient_dim:
            raise DimensionMismatchError("lattice vector has wrong dimension")
        if not self.basis:
            return not any(X)
        rows = [list(b) for b in self.basis]
        return rank(rows + [list(X)]) == rank(rows)

    def coordinates(self, X) -> tuple[int, ...]:
        """Integer coefficients a with X = sum a_j basis_j."""
        if not self.contains(X):
            raise ValueError(f"{X!r} is not in the kernel lattice")
        if not self.basis:
            return ()
        cols = [[b[i] for b in self.basis] for i in range(self.ambient_dim)]
        sol = solve(cols, list(X))
        assert sol is not None and all(s.denominator == 1 for s in sol)
        return tuple(int(s) for s in sol)

    def restrict(self, xi) -> Covector:
        """Coordinates of xi restricted to the kernel: eta_j = <b_j, xi>."""
        return Covector(pairing(b, xi) for b in self.basis)


def kernel_lattice(v) -> KernelLattice:
    v = Covector(v)
    k = v.dim
    vhat = primitive_integer(v.coords)
    if not any(vhat):
        basis = [[int(i == j) for j in range(k)] for i in range(k)]
    else:
        _, _, V = smith_normal_form([list(vhat)])
        basis = [[V[i][j] for i in range(k)] for j in range(1, k)]
    basis = hermite_normal_form(basis)
    return KernelLattice(tuple(LatticeVector(b) for b in basis), k)


def _vectors_of_l1_norm(k: int, n: int):
    """All integer vectors of dimension k and L1 norm n, lexicographically sorted."""
    out = []
    for split in itertools.product(range(n + 1), repeat=k):
        if sum(split) != n:
            continue
        nz = [i for i, a in enumerate(split) if a]
        for signs in itertools.product((-1, 1), repeat=len(nz)):
            x = list(split)
            for i, s in zip(nz, signs):
                x[i] *= s
            out.append(tuple(x))
    return sorted(out)


def primitive_complement(v) -> LatticeVector:
    """Primitive X with <X, v> > 0 completing a basis of the kernel lattice of v
    to a Z-basis of Z^k.

    Among all such X the one with smallest L1 norm, then lexicographically
    smallest coordinates, is returned.
    """
    v = Covector(v)
    vhat = primitive_integer(v.coords)
    if not any(vhat):
        raise NoComplementError("the zero covector has no transverse primitive direction")
    # [kernel basis | X] is unimodular iff <X, vhat> = +-1; positivity fixes the sign
    n = 1
    while True:
        for x in _vectors_of_l1_norm(v.dim, n):
            if sum(a * b for a, b in zip(x, vhat)) == 1:
                return LatticeVector(x)
        n += 1


def is_unimodular(vectors: Sequence[Sequence[int]]) -> bool:
    return abs(det([list(x) for x in vectors])) == 1
