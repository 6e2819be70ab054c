"""Brute-force verification in the fine Z^d grading.

Every module in sight is generated by fine-homogeneous vectors whose
coefficients are signed monomials.  In multidegree delta the graded piece of
a free module with basis degrees ``b_1..b_r`` has one basis vector per
``b_i <= delta`` and the piece of a submodule is spanned by the sign vectors
of the generators of degree ``<= delta``.  So the whole computation is
exact linear algebra over Q on small integer matrices.

The piece at delta only depends on the set P of items (basis elements and
generators) whose degree is ``<= delta``, and the smallest delta realising P
is ``lcm(deg i : i in P)``.  We enumerate every delta in the window once,
group them by P, and solve once per group.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

import numpy as np

from .circuits import transposition_order
from .monomial import Monomial, MonomialIdeal, Polynomial, grlex_key, lcm_all
from .syzygy import beta_generators
from .syzygy_element import SyzygyElement


class WindowTooSmall(ValueError):
    pass


# -- exact linear algebra ---------------------------------------------------

def _rref(rows: Iterable[Sequence[int]], width: int) -> list[list[Fraction]]:
    """Reduced row echelon form (nonzero rows only)."""
    mat = [[Fraction(x) for x in r] for r in rows]
    out: list[list[Fraction]] = []
    col = 0
    while mat and col < width:
        piv = next((r for r in mat if r[col] != 0), None)
        if piv is None:
            col += 1
            continue
        mat.remove(piv)
        piv = [x / piv[col] for x in piv]
        mat = [[a - r[col] * b for a, b in zip(r, piv)] for r in mat]
        out = [[a - r[col] * b for a, b in zip(r, piv)] for r in out]
        out.append(piv)
        mat = [r for r in mat if any(r)]
        col += 1
    return out


def rank(vectors: Sequence[Sequence[int]], width: int) -> int:
    return len(_rref(vectors, width))


def in_span(vectors: Sequence[Sequence[int]], target: Sequence[int], width: int) -> bool:
    return rank(list(vectors) + [target], width) == rank(vectors, width)


def nullspace(columns: Sequence[Sequence[int]], nrows: int) -> list[list[int]]:
    """Integer basis of ``{c : sum_j c_j columns[j] = 0}``."""
    ncols = len(columns)
    rows = [[columns[j][i] for j in range(ncols)] for i in range(nrows)]
    red = _rref(rows, ncols)
    pivots = [next(i for i, x in enumerate(r) if x != 0) for r in red]
    basis = []
    for free in (j for j in range(ncols) if j not in pivots):
        vec = [Fraction(0)] * ncols
        vec[free] = Fraction(1)
        for r, p in zip(red, pivots):
            vec[p] = -r[free]
        lcd = math.lcm(*(x.denominator for x in vec))
        basis.append([int(x * lcd) for x in vec])
    return basis


# -- windows and degree patterns -------------------------------------------

@dataclass(frozen=True)
class FineDegreeWindow:
    """All multidegrees ``delta <= bound`` componentwise."""

    bound: Monomial

    @classmethod
    def around(cls, degrees: Iterable[Monomial], pad: int = 2) -> "FineDegreeWindow":
        top = lcm_all(list(degrees))
        return cls(Monomial(e + pad for e in top))

    def require(self, degrees: Iterable[Monomial]) -> None:
        degrees = list(degrees)
        if not degrees:
            return
        top = lcm_all(degrees)
        if not top.divides(self.bound):
            raise WindowTooSmall(
                f"window bound {list(self.bound)} does not cover {list(top)}")

    def grid(self) -> np.ndarray:
        """Every multidegree in the window, shape (N, d), C order."""
        axes = [np.arange(b + 1) for b in self.bound]
        mesh = np.meshgrid(*axes, indexing="ij")
        return np.stack([a.ravel() for a in mesh], axis=-1)

    @property
    def size(self) -> int:
        return int(np.prod([b + 1 for b in self.bound]))


def _patterns(window: FineDegreeWindow, degrees: Sequence[Monomial]):
    """Distinct active-sets over the window, in graded order of their least degree.

    Returns ``(patterns, inverse)`` where each pattern is ``(delta_min, active)``
    and ``inverse[i]`` indexes the pattern of grid point i.
    """
    grid = window.grid()
    D = np.array([list(x) for x in degrees], dtype=np.int64).reshape(len(degrees), -1)
    mask = (D[None, :, :] <= grid[:, None, :]).all(axis=-1)
    uniq, inverse = np.unique(mask, axis=0, return_inverse=True)
    inverse = inverse.reshape(-1)
    pats = []
    for row in uniq:
        active = tuple(int(i) for i in np.flatnonzero(row))
        lo = lcm_all([degrees[i] for i in active], window.bound.d)
        pats.append((lo, active))
    order = sorted(range(len(pats)), key=lambda i: grlex_key(pats[i][0])[::1])
    remap = np.empty(len(pats), dtype=np.int64)
    for new, old in enumerate(order):
        remap[old] = new
    return [pats[i] for i in order], remap[inverse]


@dataclass
class GradedSpace:
    """A free module with fine-graded basis and homogeneous signed-monomial vectors."""

    basis: str
    basis_degrees: list[Monomial]

    def vector(self, v: SyzygyElement) -> tuple[Monomial, list[int]]:
        return v.fine_degree(self.basis_degrees), v.sign_vector(len(self.basis_degrees))

    def element(self, delta: Monomial, coeffs: Sequence[int]) -> SyzygyElement:
        terms = {}
        for i, c in enumerate(coeffs, start=1):
            if c:
                terms[i] = Polynomial.monomial(delta / self.basis_degrees[i - 1], int(c))
        return SyzygyElement(self.basis, terms)


def _restrict(vec: Sequence[int], active: Sequence[int]) -> list[int]:
    return [vec[i] for i in active]


# -- generic computations ---------------------------------------------------

def kernel_generators(source: GradedSpace, images: Sequence[Sequence[int]],
                      target_size: int, window: FineDegreeWindow) -> list[SyzygyElement]:
    """Minimal-by-degree generators of the kernel of ``basis_i -> images[i]``.

    ``images[i]`` is the sign vector (over the target basis) of the image of
    source basis element i.  A kernel vector becomes a new generator when it
    is not in the span of generators of lower or equal degree.
    """
    n = len(source.basis_degrees)
    window.require(source.basis_degrees)
    pats, _ = _patterns(window, source.basis_degrees)
    gens: list[tuple[Monomial, list[int]]] = []
    out = []
    for delta, active in pats:
        if not active:
            continue
        cols = [list(images[i]) for i in active]
        ker = nullspace(cols, target_size)
        if not ker:
            continue
        span = [_restrict(v, active) for deg, v in gens if deg.divides(delta)]
        for kv in ker:
            if not in_span(span, kv, len(active)):
                full = [0] * n
                for i, c in zip(active, kv):
                    full[i] = c
                gens.append((delta, full))
                span.append(kv)
                out.append(source.element(delta, full))
    return out


def spans_agree(space: GradedSpace, gens_a: Sequence[SyzygyElement],
                gens_b: Sequence[SyzygyElement], window: FineDegreeWindow):
    """Compare the submodules generated by two sets, degree by degree.

    Returns None when they agree everywhere in the window, else the first
    multidegree (graded order) where they differ.
    """
    va = [space.vector(g) for g in gens_a]
    vb = [space.vector(g) for g in gens_b]
    items = list(space.basis_degrees) + [d for d, _ in va] + [d for d, _ in vb]
    window.require(items)
    pats, _ = _patterns(window, items)
    nb, na = len(space.basis_degrees), len(va)
    for delta, active in pats:
        act = set(active)
        basis = [i for i in range(nb) if i in act]
        A = [_restrict(v, basis) for i, (_, v) in enumerate(va) if nb + i in act]
        B = [_restrict(v, basis) for i, (_, v) in enumerate(vb) if nb + na + i in act]
        w = len(basis)
        ra, rb = rank(A, w), rank(B, w)
        if ra != rb or rank(A + B, w) != ra:
            return delta
    return None


def membership_ideal(space: GradedSpace, generators: Sequence[SyzygyElement],
                     target: SyzygyElement, window: FineDegreeWindow) -> MonomialIdeal:
    """``{s monomial : s * target in <generators>}`` as a monomial ideal."""
    vg = [space.vector(g) for g in generators]
    t_deg, t_vec = space.vector(target)
    items = list(space.basis_degrees) + [t_deg] + [d for d, _ in vg]
    window.require(items)
    pats, inverse = _patterns(window, items)
    nb = len(space.basis_degrees)
    t_item = nb
    member = np.zeros(len(pats), dtype=bool)
    for p, (delta, active) in enumerate(pats):
        act = set(active)
        if t_item not in act:
            continue
        basis = [i for i in range(nb) if i in act]
        span = [_restrict(v, basis) for i, (_, v) in enumerate(vg) if nb + 1 + i in act]
        member[p] = in_span(span, _restrict(t_vec, basis), len(basis))
    # closure under multiplication by variables inside the window
    shape = tuple(b + 1 for b in window.bound)
    cube = member[inverse].reshape(shape)
    for axis in range(len(shape)):
        lo = np.take(cube, range(shape[axis] - 1), axis=axis)
        hi = np.take(cube, range(1, shape[axis]), axis=axis)
        if np.any(lo & ~hi):
            raise AssertionError("membership set is not closed under multiplication")
    gens = [delta / t_deg for p, (delta, _) in enumerate(pats) if member[p]]
    return MonomialIdeal(gens, window.bound.d)


# -- the concrete oracles ---------------------------------------------------

def default_window(f: Sequence[Monomial], extra: Iterable[Monomial] = (), pad: int = 2):
    return FineDegreeWindow.around(list(f) + list(extra), pad)


def e_space(f: Sequence[Monomial]) -> GradedSpace:
    return GradedSpace("e", [Monomial(x) for x in f])


def eps_space(f: Sequence[Monomial], k: int) -> GradedSpace:
    table = transposition_order(len(f))
    return GradedSpace("eps", [f[mu - 1].lcm(f[nu - 1]) for mu, nu in table.order[:k]])


def oracle_kernel(f: Sequence[Monomial], window: FineDegreeWindow | None = None):
    """Generators of ker(e_mu -> f^mu) found degree by degree."""
    f = [Monomial(x) for x in f]
    window = window or default_window(f)
    window.require(f)
    return kernel_generators(e_space(f), [[1] for _ in f], 1, window)


def oracle_syzygies(f: Sequence[Monomial], k: int,
                    window: FineDegreeWindow | None = None) -> list[SyzygyElement]:
    """Generators of ker(psi: eps_j -> beta_j, j <= k)."""
    f = [Monomial(x) for x in f]
    window = window or default_window(f)
    window.require(f)
    betas = beta_generators(f)[:k]
    images = [b.sign_vector(len(f)) for b in betas]
    return kernel_generators(eps_space(f, k), images, len(f), window)


def oracle_ideal(generators: Sequence[SyzygyElement], target: SyzygyElement,
                 f: Sequence[Monomial], window: FineDegreeWindow | None = None) -> MonomialIdeal:
    """The ideal ``{s : s*target in <generators>}`` for e-basis vectors over f."""
    f = [Monomial(x) for x in f]
    space = e_space(f)
    if window is None:
        degs = [space.vector(g)[0] for g in list(generators) + [target]]
        window = default_window(f, degs)
    return membership_ideal(space, generators, target, window)


def oracle_filtration_ideal(f: Sequence[Monomial], k: int,
                            window: FineDegreeWindow | None = None) -> MonomialIdeal:
    f = [Monomial(x) for x in f]
    betas = beta_generators(f)
    return oracle_ideal(betas[:k - 1], betas[k - 1], f, window)


def wheel_filtration_module(wheel, k: int) -> list[SyzygyElement]:
    """Generators of the wheel filtration step F^k (F^0 = im phi^2)."""
    from .wheel import alpha
    betas = beta_generators(wheel.f_out)
    m = wheel.m
    if k <= m:
        return betas[:k] + [alpha(wheel, j) for j in range(k + 1, m + 1)]
    return betas[:k]


def wheel_window(wheel, pad: int = 2) -> FineDegreeWindow:
    from .wheel import build_complex
    degs = build_complex(wheel).degrees.values()
    return FineDegreeWindow.around(list(degs), pad)


def oracle_wheel_ideal(wheel, k: int, window: FineDegreeWindow | None = None) -> MonomialIdeal:
    """I_k for the wheel filtration: ``{s : s*beta_k in F^{k-1}}``."""
    betas = beta_generators(wheel.f_out)
    window = window or wheel_window(wheel)
    return membership_ideal(e_space(wheel.f_out), wheel_filtration_module(wheel, k - 1),
                            betas[k - 1], window)


def check_filtration_chain(wheel, window: FineDegreeWindow | None = None):
    """Check ``F^0 <= F^1 <= ... <= F^n = ker phi^1`` in every degree.

    Returns None on success or ``(k, delta)`` for the first failure, where
    k = n + 1 flags a mismatch between F^n and the kernel.
    """
    window = window or wheel_window(wheel)
    space = e_space(wheel.f_out)
    n = wheel.m * (wheel.m - 1) // 2
    steps = [wheel_filtration_module(wheel, k) for k in range(n + 1)]
    for k in range(1, n + 1):
        delta = spans_agree(space, steps[k], steps[k] + steps[k - 1], window)
        if delta is not None:
            return k, delta
    kernel = oracle_kernel(wheel.f_out, window)
    delta = spans_agree(space, steps[n], kernel, window)
    if delta is not None:
        return n + 1, delta
    return None


def check_h2_vanishing(wheel, window: FineDegreeWindow | None = None):
    """Compare ker(phi^2) with im(phi^3) degree by degree; None when equal."""
    window = window or wheel_window(wheel)
    m = wheel.m
    src_deg = [wheel.f_out[j] * wheel.rim_bwd[j] for j in range(m)]
    src = GradedSpace("e", src_deg)
    images = []
    for j in range(m):
        col = [0] * m
        col[(j + 1) % m] += 1
        col[j] -= 1
        images.append(col)
    ker = kernel_generators(src, images, m, window)
    hub = SyzygyElement.from_signed("e", {j + 1: (1, wheel.f_in[j]) for j in range(m)})
    return spans_agree(src, ker, [hub], window)
