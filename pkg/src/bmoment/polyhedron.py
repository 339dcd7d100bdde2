"""Exact H-represented polyhedra {x in Q^k : A x <= b}.

Two independent vertex enumerators are provided:

* ``"bruteforce"`` solves every k-subset of constraints as equalities and keeps
  feasible solutions;
* ``"dd"`` runs the double description method on the homogenised cone
  {(x, t) : A x - b t <= 0, t >= 0}, adding one constraint at a time and
  combining adjacent rays.

They share nothing beyond the exact row-reduction helpers, and must agree.
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Sequence

from .lattice import Covector, hermite_normal_form
from .rational import dot, nullspace, primitive_integer, rank, solve, to_fraction


class Polyhedron:
    def __init__(self, normals: Sequence[Sequence], bounds: Sequence, dim: int | None = None):
        self.A = tuple(tuple(to_fraction(x) for x in row) for row in normals)
        self.b = tuple(to_fraction(x) for x in bounds)
        if len(self.A) != len(self.b):
            raise ValueError("normals and bounds differ in length")
        if dim is None:
            if not self.A:
                raise ValueError("dimension required for a polyhedron without constraints")
            dim = len(self.A[0])
        self.dim = int(dim)
        if any(len(row) != self.dim for row in self.A):
            raise ValueError("constraint normal of wrong dimension")

    def __repr__(self):
        return f"Polyhedron(dim={self.dim}, constraints={len(self.A)})"

    def add(self, normal, bound) -> "Polyhedron":
        return Polyhedron(self.A + (tuple(normal),), self.b + (bound,), self.dim)

    def contains(self, x) -> bool:
        x = [to_fraction(v) for v in x]
        return all(dot(a, x) <= bi for a, bi in zip(self.A, self.b))

    def active(self, x) -> list[int]:
        x = [to_fraction(v) for v in x]
        return [i for i, (a, bi) in enumerate(zip(self.A, self.b)) if dot(a, x) == bi]

    # -- structure -----------------------------------------------------------

    def lineality_basis(self) -> list[tuple[int, ...]]:
        """Canonical (Hermite-reduced, primitive) basis of {d : A d = 0}."""
        if self.dim == 0:
            return []
        ns = nullspace([list(r) for r in self.A], self.dim) if self.A else nullspace([], self.dim)
        ints = [primitive_integer(v) for v in ns]
        return [tuple(r) for r in hermite_normal_form(ints)]

    def _pointed_part(self) -> "Polyhedron":
        """Intersection with the orthogonal complement of the lineality space."""
        P = self
        for l in self.lineality_basis():
            P = P.add(l, 0).add([-x for x in l], 0)
        return P

    def is_empty(self) -> bool:
        if self.dim == 0:
            return any(bi < 0 for bi in self.b)
        return not self._pointed_part().vertices()

    def recession_generators(self) -> list[Covector]:
        """Generators of {d : A d <= 0}, primitive-normalised and sorted.

        Lineality directions appear with both signs, so two cones are equal
        exactly when their generator lists are equal.
        """
        if self.dim == 0:
            return []
        lin = self.lineality_basis()
        k = self.dim
        eq_rows = [list(l) for l in lin]
        need = k - 1 - len(lin)
        rays = set()
        if need >= 0:
            rows = [list(a) for a in self.A]
            for subset in itertools.combinations(range(len(rows)), need):
                M = eq_rows + [rows[i] for i in subset]
                if M and rank(M) != k - 1:
                    continue
                ns = nullspace(M, k) if M else nullspace([], k)
                if len(ns) != 1:
                    continue
                u = ns[0]
                for s in (1, -1):
                    d = [s * x for x in u]
                    if all(dot(a, d) <= 0 for a in rows) and any(dot(a, d) < 0 for a in rows):
                        rays.add(primitive_integer(d))
        gens = set(rays)
        for l in lin:
            gens.add(tuple(l))
            gens.add(tuple(-x for x in l))
        return [Covector(g) for g in sorted(gens)]

    def is_bounded(self) -> bool:
        return not self.recession_generators()

    # -- vertices ------------------------------------------------------------

    def vertices(self, method: str = "bruteforce") -> list[Covector]:
        if self.dim == 0:
            return [Covector(())] if all(bi >= 0 for bi in self.b) else []
        if method == "bruteforce":
            pts = _vertices_bruteforce(self.A, self.b, self.dim)
        elif method == "dd":
            pts = _vertices_double_description(self.A, self.b, self.dim)
        else:
            raise ValueError(f"unknown method {method!r}")
        return [Covector(p) for p in sorted(set(pts))]


def _vertices_bruteforce(A, b, k):
    out = set()
    rows = [list(a) for a in A]
    for subset in itertools.combinations(range(len(rows)), k):
        x = solve([rows[i] for i in subset], [b[i] for i in subset])
        if x is None:
            continue
        if all(dot(a, x) <= bi for a, bi in zip(rows, b)):
            out.add(tuple(x))
    return out


def _normalise_ray(v):
    return [Fraction(x) for x in primitive_integer(v)]


def _vertices_double_description(A, b, k):
    d = k + 1
    M = [list(a) + [-bi] for a, bi in zip(A, b)]
    M.append([Fraction(0)] * k + [Fraction(-1)])
    if rank(M) < d:
        # nontrivial lineality: no vertices
        return set()
    # initial simplicial cone from d independent rows, taken in order
    basis_idx: list[int] = []
    for i in range(len(M)):
        if rank([M[j] for j in basis_idx] + [M[i]]) > len(basis_idx):
            basis_idx.append(i)
        if len(basis_idx) == d:
            break
    S = [M[i] for i in basis_idx]
    # generators: g_j solves S g = -e_j
    rays = []
    for j in range(d):
        g = solve(S, [Fraction(-1 if i == j else 0) for i in range(d)])
        rays.append(_normalise_ray(g))
    processed = list(basis_idx)

    def zero_set(r):
        return frozenset(i for i in processed if dot(M[i], r) == 0)

    for i in range(len(M)):
        if i in basis_idx:
            continue
        a = M[i]
        vals = [dot(a, r) for r in rays]
        pos = [r for r, v in zip(rays, vals) if v > 0]
        neg = [r for r, v in zip(rays, vals) if v < 0]
        keep = [r for r, v in zip(rays, vals) if v <= 0]
        zs = {id(r): zero_set(r) for r in rays}
        new = []
        for p in pos:
            for n in neg:
                common = zs[id(p)] & zs[id(n)]
                if len(common) < d - 2:
                    continue
                if common and rank([M[c] for c in common]) != d - 2:
                    continue
                if not common and d - 2 != 0:
                    continue
                ap, an = dot(a, p), dot(a, n)
                new.append(_normalise_ray([ap * y - an * x for x, y in zip(p, n)]))
        rays = keep + new
        processed.append(i)
        # drop duplicates
        uniq = {}
        for r in rays:
            uniq[tuple(r)] = r
        rays = list(uniq.values())
    out = set()
    for r in rays:
        t = r[-1]
        if t > 0:
            out.add(tuple(x / t for x in r[:-1]))
    return out
