"""Fans, the divisor class group and the Cox grading.

Ray indices are zero-based.  Integer linear algebra is done on Python ints,
so entry growth during Smith reduction is never a concern.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

Matrix = list[list[int]]


class TorusFactorError(ValueError):
    """The rays do not span the ambient space, so X has a torus factor."""


def _identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def smith_normal_form(A: Sequence[Sequence[int]]) -> tuple[Matrix, Matrix, Matrix]:
    """Return ``(U, D, V)`` with ``U @ A @ V == D`` and U, V unimodular.

    D is diagonal with nonnegative entries, each dividing the next.
    """
    D = [list(map(int, row)) for row in A]
    rows = len(D)
    cols = len(D[0]) if rows else 0
    U = _identity(rows)
    V = _identity(cols)

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for M in (D, V):
            for row in M:
                row[i], row[j] = row[j], row[i]

    def add_row(src, dst, q):
        # row_dst += q * row_src
        D[dst] = [a + q * b for a, b in zip(D[dst], D[src])]
        U[dst] = [a + q * b for a, b in zip(U[dst], U[src])]

    def add_col(src, dst, q):
        for M in (D, V):
            for row in M:
                row[dst] += q * row[src]

    t = 0
    while t < min(rows, cols):
        nonzero = [(abs(D[i][j]), i, j) for i in range(t, rows)
                   for j in range(t, cols) if D[i][j]]
        if not nonzero:
            break
        _, i, j = min(nonzero)
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            p = D[t][t]
            dirty = False
            for i in range(t + 1, rows):
                q = D[i][t] // p
                if q:
                    add_row(t, i, -q)
                if D[i][t]:
                    dirty = True
            for j in range(t + 1, cols):
                q = D[t][j] // p
                if q:
                    add_col(t, j, -q)
                if D[t][j]:
                    dirty = True
            if not dirty:
                bad = [(i, j) for i in range(t + 1, rows) for j in range(t + 1, cols)
                       if D[i][j] % p]
                if not bad:
                    break
                add_row(bad[0][0], t, 1)
                continue
            # move the smallest remaining entry of row/column t to the pivot
            cands = [(abs(D[i][t]), i, t) for i in range(t, rows) if D[i][t]]
            cands += [(abs(D[t][j]), t, j) for j in range(t, cols) if D[t][j]]
            _, i, j = min(cands)
            swap_rows(t, i)
            swap_cols(t, j)
        if D[t][t] < 0:
            D[t] = [-a for a in D[t]]
            U[t] = [-a for a in U[t]]
        t += 1
    return U, D, V


def _matmul(A: Matrix, B: Matrix) -> Matrix:
    return [[sum(a * b for a, b in zip(row, col)) for col in zip(*B)] for row in A]


def _matvec(A: Sequence[Sequence[int]], x: Sequence[int]) -> list[int]:
    return [sum(a * b for a, b in zip(row, x)) for row in A]


@dataclass(frozen=True)
class Fan:
    """A fan given by primitive rays and its maximal cones (ray index sets)."""

    dim: int
    rays: tuple[tuple[int, ...], ...]
    max_cones: tuple[frozenset[int], ...]

    def __init__(self, dim: int, rays: Iterable[Sequence[int]],
                 max_cones: Iterable[Iterable[int]] | None = None):
        rays = tuple(tuple(int(a) for a in r) for r in rays)
        for r in rays:
            if len(r) != dim:
                raise ValueError(f"ray {r} does not live in Z^{dim}")
            if math.gcd(*r) != 1:
                raise ValueError(f"ray {r} is not primitive")
        if max_cones is None:
            max_cones = [[i] for i in range(len(rays))]
        cones = {frozenset(int(i) for i in c) for c in max_cones}
        for c in cones:
            if not c or min(c) < 0 or max(c) >= len(rays):
                raise ValueError(f"cone {sorted(c)} refers to unknown rays")
        covered = set().union(*cones) if cones else set()
        # every ray is a cone even if no listed maximal cone contains it
        cones |= {frozenset([i]) for i in range(len(rays)) if i not in covered}
        cones = {c for c in cones if not any(c < o for o in cones)}
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "rays", rays)
        object.__setattr__(self, "max_cones",
                           tuple(sorted(cones, key=lambda c: (len(c), sorted(c)))))

    @property
    def d(self) -> int:
        return len(self.rays)

    @cached_property
    def cones(self) -> frozenset[frozenset[int]]:
        """All cones (faces of the maximal cones), the empty cone included."""
        out = set()
        for c in self.max_cones:
            for size in range(len(c) + 1):
                out.update(frozenset(s) for s in combinations(sorted(c), size))
        return frozenset(out)

    def pairing_matrix(self) -> Matrix:
        """The d x n matrix of ``div``: row rho is the ray v_rho."""
        return [list(r) for r in self.rays]

    def div(self, m: Sequence[int]) -> list[int]:
        """The principal divisor of the character ``m``: coefficients <m, v_rho>."""
        return _matvec(self.rays, m)

    def irrelevant_ideal_generators(self) -> list[tuple[int, ...]]:
        """Exponent vectors of ``prod_{rho not in sigma} x_rho`` per maximal cone."""
        return [tuple(int(i not in c) for i in range(self.d)) for c in self.max_cones]

    @classmethod
    def affine_space(cls, d: int) -> "Fan":
        rays = [[int(i == j) for j in range(d)] for i in range(d)]
        return cls(d, rays, [range(d)])


@dataclass(frozen=True)
class DivisorClass:
    """Coordinates of a class in ``ClassGroup`` (torsion residues first)."""

    coords: tuple[int, ...]

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __str__(self) -> str:
        return "(" + ", ".join(map(str, self.coords)) + ")"


@dataclass(frozen=True)
class ClassGroup:
    """``Cl(X) = Z^d / div(M)`` as a product of cyclic groups.

    ``invariant_factors`` lists the nontrivial torsion orders followed by one
    ``0`` per free factor; ``degree_matrix`` sends Z^d to coordinates, which
    are then reduced modulo the torsion orders.
    """

    d: int
    invariant_factors: tuple[int, ...]
    degree_matrix: tuple[tuple[int, ...], ...]

    @property
    def free_rank(self) -> int:
        return sum(1 for q in self.invariant_factors if q == 0)

    @property
    def torsion(self) -> tuple[int, ...]:
        return tuple(q for q in self.invariant_factors if q)

    def reduce(self, coords: Sequence[int]) -> DivisorClass:
        return DivisorClass(tuple(c % q if q else c
                                  for c, q in zip(coords, self.invariant_factors)))

    def divisor_class(self, D: Sequence[int]) -> DivisorClass:
        if len(D) != self.d:
            raise ValueError(f"divisor of length {len(D)}, expected {self.d}")
        return self.reduce(_matvec(self.degree_matrix, D))

    def add(self, *classes: DivisorClass) -> DivisorClass:
        total = [0] * len(self.invariant_factors)
        for c in classes:
            total = [a + b for a, b in zip(total, c.coords)]
        return self.reduce(total)

    def neg(self, c: DivisorClass) -> DivisorClass:
        return self.reduce([-a for a in c.coords])

    def sub(self, a: DivisorClass, b: DivisorClass) -> DivisorClass:
        return self.add(a, self.neg(b))

    def zero(self) -> DivisorClass:
        return DivisorClass((0,) * len(self.invariant_factors))


def class_group(fan: Fan) -> ClassGroup:
    U, D, _ = smith_normal_form(fan.pairing_matrix())
    diag = [D[i][i] for i in range(min(len(D), fan.dim))]
    rank = sum(1 for a in diag if a)
    if rank < fan.dim:
        raise TorusFactorError(
            f"rays span a rank-{rank} sublattice of Z^{fan.dim}: X has a torus factor")
    rows, factors = [], []
    for i in range(fan.d):
        q = diag[i] if i < len(diag) else 0
        if q == 1:
            continue
        rows.append(tuple(U[i]))
        factors.append(q)
    # torsion before free, as documented
    order = sorted(range(len(factors)), key=lambda i: (factors[i] == 0, i))
    return ClassGroup(fan.d, tuple(factors[i] for i in order),
                      tuple(rows[i] for i in order))


def divisor_class(D: Sequence[int], cg: ClassGroup) -> DivisorClass:
    return cg.divisor_class(D)


def solve_integer(A: Sequence[Sequence[int]], b: Sequence[int]) -> list[int] | None:
    """An integer solution of ``A x = b``, or None."""
    if not A:
        return []
    U, D, V = smith_normal_form(A)
    c = _matvec(U, b)
    n = len(A[0])
    y = [0] * n
    for i, ci in enumerate(c):
        dii = D[i][i] if i < n else 0
        if dii == 0:
            if ci:
                return None
        elif ci % dii:
            return None
        else:
            y[i] = ci // dii
    return _matvec(V, y)


def is_cartier(D: Sequence[int], fan: Fan) -> bool:
    """Whether the torus-invariant divisor ``sum a_rho D_rho`` is Cartier.

    On each maximal cone sigma there must be an integral m_sigma with
    ``<m_sigma, v_rho> = -a_rho`` for every ray rho of sigma.
    """
    if len(D) != fan.d:
        raise ValueError(f"divisor of length {len(D)}, expected {fan.d}")
    for cone in fan.max_cones:
        idx = sorted(cone)
        if solve_integer([fan.rays[i] for i in idx], [-D[i] for i in idx]) is None:
            return False
    return True


def prime_set_realizable(variables: Iterable[int], fan: Fan) -> bool:
    """Whether the coordinate subspace ``{x_i = 0 : i in variables}`` meets X."""
    s = frozenset(variables)
    return any(s <= c for c in fan.max_cones)
