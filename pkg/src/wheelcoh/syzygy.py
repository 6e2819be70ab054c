"""Generators of ker(phi), of syz(F^k), and the filtration ideals I_k."""
from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Sequence

from .circuits import circuit_syzygy, minimal_circuits, transposition_order
from .monomial import Monomial, MonomialIdeal, Polynomial, lcm_all
from .syzygy_element import SyzygyElement, combine
from .toric import ClassGroup, DivisorClass

if TYPE_CHECKING:
    from .wheel import Wheel


def _monos(f: Sequence[Sequence[int]]) -> list[Monomial]:
    f = [Monomial(x) for x in f]
    if len({len(x) for x in f}) > 1:
        raise ValueError("monomials of different lengths")
    return f


def beta(f: Sequence[Monomial], mu: int, nu: int) -> SyzygyElement:
    """``(f^{mu,nu}/f^nu) e_nu - (f^{mu,nu}/f^mu) e_mu`` (one-based, mu < nu)."""
    f_mu, f_nu = f[mu - 1], f[nu - 1]
    top = f_mu.lcm(f_nu)
    return SyzygyElement.from_signed("e", {nu: (1, top / f_nu), mu: (-1, top / f_mu)})


def beta_generators(f: Sequence[Monomial]) -> list[SyzygyElement]:
    """beta_1, ..., beta_n in transposition order."""
    f = _monos(f)
    table = transposition_order(len(f))
    return [beta(f, mu, nu) for mu, nu in table.order]


def apply_phi(f: Sequence[Monomial], v: SyzygyElement) -> Polynomial:
    """Image of an e-basis vector under ``e_mu -> f^mu``."""
    out = Polynomial()
    for i, p in v.terms.items():
        out = out + p.scale(f[i - 1])
    return out


def apply_psi(f: Sequence[Monomial], sigma: SyzygyElement) -> SyzygyElement:
    """Image of an eps-basis vector under ``eps_j -> beta_j``."""
    betas = beta_generators(f)
    return combine([(p, betas[j - 1]) for j, p in sigma.terms.items()], "e")


def syzygy_generators(f: Sequence[Monomial], k: int) -> list[SyzygyElement]:
    """``sigma_gamma`` for every minimal circuit gamma of Gamma_k."""
    f = _monos(f)
    circuits = sorted(minimal_circuits(len(f), k), key=lambda c: (len(c), c.vertices))
    return [circuit_syzygy(c, f) for c in circuits]


def _check_k(m: int, k: int) -> int:
    n = m * (m - 1) // 2
    if not 1 <= k <= n:
        raise IndexError(f"k={k} outside 1..{n} for m={m}")
    return n


def filtration_ideal_generators(f: Sequence[Monomial], k: int) -> list[Monomial]:
    """Closed-form (not necessarily minimal) generators of I_k for ``F^k/F^{k-1}``.

    Here ``F^k = <beta_1, ..., beta_k>``, so ``F^0 = 0``.
    """
    f = _monos(f)
    m = len(f)
    _check_k(m, k)
    d = len(f[0])

    def L(*idx: int) -> Monomial:
        return lcm_all([f[i - 1] for i in idx], d)

    if k <= m - 1:
        return []
    if k == m:
        return [L(*range(1, m + 1)) / L(1, m)]
    if k <= 2 * m - 3:
        nu = k - m + 2
        return [L(1, *range(nu, m + 1)) / L(1, nu),
                L(1, nu - 1, nu) / L(1, nu)]
    mu_k, nu_k = transposition_order(m).tau(k)
    heads = list(range(1, mu_k)) + [nu_k - 1]
    return [L(mu, mu_k, nu_k) / L(mu_k, nu_k) for mu in heads]


def filtration_ideal(f: Sequence[Monomial], k: int) -> MonomialIdeal:
    f = _monos(f)
    return MonomialIdeal(filtration_ideal_generators(f, k), len(f[0]))


@dataclass(frozen=True)
class FiltrationStep:
    """One quotient ``F^k/F^{k-1} = (S/I_k)(shift)`` of the wheel filtration."""

    k: int
    tau: tuple[int, int]
    raw_generators: tuple[Monomial, ...]
    ideal: MonomialIdeal
    shift_divisor: tuple[int, ...]
    shift_class: DivisorClass | None
    shift_symbolic: str

    @property
    def vanishes(self) -> bool:
        return self.ideal.is_unit()


def rim_gcd(wheel: "Wheel", j: int) -> Monomial:
    """``gcd(f^j_{j+1}, f^{j+1}_j)`` with cyclic j in 1..m."""
    return wheel.rim_fwd[j - 1].gcd(wheel.rim_bwd[j - 1])


WHEEL_FORMULAS = ("cycle", "spokes")


def wheel_cycle_monomial(wheel: "Wheel", k: int, formula: str = "cycle") -> Monomial:
    """The lcm governing ``<beta_1..beta_{k-1}, alpha_{k+1}..alpha_m> : beta_k`` for k <= m.

    The m spoke pairs form one cycle whose j-th edge carries beta_j for
    j <= k and ``alpha_j = g_j beta_j`` for j > k, of degree
    ``g_j * f^{j,j+1}``.  The cyclic syzygy on that cycle has lcm
    ``lcm(f^{j,j+1} (j <= k), g_j f^{j,j+1} (j > k))``.

    ``formula="spokes"`` returns ``lcm(f^1..f^m, g_{k+1}..g_m)``, which
    always divides the cycle lcm and agrees with it on many wheels, but can
    be a proper divisor, making I_k too large.
    """
    m, f = wheel.m, wheel.f_out
    if formula == "spokes":
        return lcm_all(list(f) + [rim_gcd(wheel, i) for i in range(k + 1, m + 1)], wheel.d)
    if formula != "cycle":
        raise ValueError(f"unknown formula {formula!r}; expected one of {WHEEL_FORMULAS}")
    degs = [f[j - 1].lcm(f[j % m]) for j in range(1, m + 1)]
    degs = [deg * rim_gcd(wheel, j) if j > k else deg for j, deg in enumerate(degs, start=1)]
    return lcm_all(degs, wheel.d)


def wheel_filtration_generators(wheel: "Wheel", k: int, formula: str = "cycle") -> list[Monomial]:
    """Closed-form generators of I_k for the filtration starting at im(phi^2).

    For k <= m the filtration step is ``<beta_1..beta_k, alpha_{k+1}..alpha_m>``
    and ``I_k = <g_k, C_k / f^{k,k+1}>`` with C_k from ``wheel_cycle_monomial``;
    past m it coincides with the plain filtration.
    """
    m = wheel.m
    _check_k(m, k)
    f = wheel.f_out
    if k > m:
        return filtration_ideal_generators(f, k)
    pair = f[k - 1].lcm(f[k % m])
    return [rim_gcd(wheel, k), wheel_cycle_monomial(wheel, k, formula) / pair]


def shift_divisor(wheel: "Wheel", k: int) -> tuple[int, ...]:
    """A divisor for ``L_mu (x) L_nu (x) L^-1(gcd(D^mu, D^nu))``, tau_k = (mu, nu).

    Computed term by term from ``L_j = L(-D^j)``; equals ``L - lcm(D^mu, D^nu)``.
    """
    mu, nu = transposition_order(wheel.m).tau(k)
    base = wheel.base_divisor
    L_mu = [b - a for b, a in zip(base, wheel.f_out[mu - 1])]
    L_nu = [b - a for b, a in zip(base, wheel.f_out[nu - 1])]
    g = wheel.f_out[mu - 1].gcd(wheel.f_out[nu - 1])
    out = tuple(x + y - b + c for x, y, b, c in zip(L_mu, L_nu, base, g))
    closed = tuple(b - a for b, a in
                   zip(base, wheel.f_out[mu - 1].lcm(wheel.f_out[nu - 1])))
    if out != closed:
        raise AssertionError(f"shift divisor mismatch at k={k}: {out} != {closed}")
    return out


def wheel_filtration_ideal(wheel: "Wheel", k: int, cg: ClassGroup | None = None,
                           formula: str = "cycle") -> FiltrationStep:
    raw = wheel_filtration_generators(wheel, k, formula)
    mu, nu = transposition_order(wheel.m).tau(k)
    shift = shift_divisor(wheel, k)
    g = wheel.f_out[mu - 1].gcd(wheel.f_out[nu - 1])
    symbolic = f"L_{mu}*L_{nu}*L^-1({g.divisor_str()})"
    return FiltrationStep(
        k=k, tau=(mu, nu), raw_generators=tuple(raw),
        ideal=MonomialIdeal(raw, wheel.d),
        shift_divisor=shift,
        shift_class=cg.divisor_class(shift) if cg is not None else None,
        shift_symbolic=symbolic)
