"""Cohomology sheaves of a wheel complex, assembled from the filtration data.

Divisors here are plain integer vectors over the rays, so the cutting
divisors of Z_k are computed with max/min/subtraction on exponent vectors,
separately from the monomial arithmetic that produces the ideals I_k.  The
two routes are compared on every call.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .circuits import transposition_order
from .monomial import Monomial, MonomialIdeal
from .syzygy import FiltrationStep, WHEEL_FORMULAS, wheel_filtration_ideal
from .toric import ClassGroup, DivisorClass, Fan, class_group, prime_set_realizable
from .wheel import Wheel, validate_wheel

Divisor = tuple[int, ...]


class InconsistentDivisorError(AssertionError):
    """A cutting divisor came out non-effective or disagrees with I_k."""


def _lcm(*divs: Sequence[int]) -> Divisor:
    return tuple(max(col) for col in zip(*divs))


def _gcd(*divs: Sequence[int]) -> Divisor:
    return tuple(min(col) for col in zip(*divs))


def _minus(a: Sequence[int], b: Sequence[int]) -> Divisor:
    return tuple(x - y for x, y in zip(a, b))


def _plus(a: Sequence[int], b: Sequence[int]) -> Divisor:
    return tuple(x + y for x, y in zip(a, b))


def divisor_str(D: Sequence[int]) -> str:
    return Monomial(D).divisor_str()


def components_str(components: Sequence[frozenset[int]]) -> list[str]:
    """``{0, 1, 6}`` -> ``"E_1∩E_2∩E_7"``."""
    return ["∩".join(f"E_{i + 1}" for i in sorted(c)) for c in components]


@dataclass(frozen=True)
class SubschemeZ:
    k: int
    cutting_divisors: tuple[Divisor, ...]
    ideal: MonomialIdeal
    components: tuple[frozenset[int], ...]
    empty: bool


def cutting_divisors(wheel: Wheel, k: int, formula: str = "cycle") -> list[Divisor]:
    """The effective divisors whose intersection is Z_k.

    For k <= m the second divisor is ``C - lcm(D^k, D^{k+1})`` where C is the
    lcm of the spoke-pair divisors along the cycle, each pair j > k raised by
    its rim gcd (``formula="cycle"``), or ``lcm(D^1..D^m, rim gcds)`` under
    ``formula="spokes"``.
    """
    m = wheel.m
    n = m * (m - 1) // 2
    if not 1 <= k <= n:
        raise IndexError(f"k={k} outside 1..{n} for m={m}")
    D = [tuple(x) for x in wheel.f_out]
    gcds = [_gcd(wheel.rim_fwd[j], wheel.rim_bwd[j]) for j in range(m)]

    def spoke(j: int) -> Divisor:  # one-based, cyclic
        return D[(j - 1) % m]

    if k <= m:
        if formula == "spokes":
            top = _lcm(*D, *[gcds[i - 1] for i in range(k + 1, m + 1)])
        elif formula == "cycle":
            pairs = [_lcm(spoke(j), spoke(j + 1)) for j in range(1, m + 1)]
            top = _lcm(*[_plus(p, gcds[j - 1]) if j > k else p
                         for j, p in enumerate(pairs, start=1)])
        else:
            raise ValueError(f"unknown formula {formula!r}; expected one of {WHEEL_FORMULAS}")
        divs = [gcds[k - 1], _minus(top, _lcm(spoke(k), spoke(k + 1)))]
    elif k <= 2 * m - 3:
        nu = k - m + 2
        base = _lcm(D[0], spoke(nu))
        divs = [_minus(_lcm(D[0], *D[nu - 1:]), base),
                _minus(_lcm(D[0], spoke(nu - 1), spoke(nu)), base)]
    else:
        mu_k, nu_k = transposition_order(m).tau(k)
        base = _lcm(spoke(mu_k), spoke(nu_k))
        divs = [_minus(_lcm(spoke(mu), spoke(mu_k), spoke(nu_k)), base)
                for mu in list(range(1, mu_k)) + [nu_k - 1]]
    for div in divs:
        if min(div) < 0:
            raise InconsistentDivisorError(f"Z_{k}: cutting divisor {div} is not effective")
    return divs


def subscheme_Z(wheel: Wheel, k: int, fan: Fan | None = None,
                formula: str = "cycle") -> SubschemeZ:
    """Z_k with its ideal and the minimal primes that meet X.

    Without a fan every minimal prime counts (X is taken to be affine space).
    """
    divs = cutting_divisors(wheel, k, formula)
    step = wheel_filtration_ideal(wheel, k, formula=formula)
    if [tuple(g) for g in step.raw_generators] != divs:
        raise InconsistentDivisorError(
            f"Z_{k}: cutting divisors {divs} differ from I_{k} generators "
            f"{[tuple(g) for g in step.raw_generators]}")
    ideal = MonomialIdeal([Monomial(x) for x in divs], wheel.d)
    comps = tuple(c for c in ideal.minimal_primes()
                  if fan is None or prime_set_realizable(c, fan))
    return SubschemeZ(k, tuple(divs), ideal, comps, empty=not comps)


@dataclass(frozen=True)
class H0Data:
    ideal: MonomialIdeal
    components: tuple[frozenset[int], ...]
    empty: bool
    twist_class: DivisorClass


@dataclass(frozen=True)
class H1Step:
    filtration: FiltrationStep
    subscheme: SubschemeZ

    @property
    def vanishes(self) -> bool:
        """The quotient module is zero, i.e. ``I_k = S``."""
        return self.filtration.vanishes

    @property
    def support_empty(self) -> bool:
        """Z_k misses X; the sheaf quotient is zero even when ``I_k != S``."""
        return self.subscheme.empty


@dataclass(frozen=True)
class H2Data:
    divisor: Divisor
    twist_class: DivisorClass

    @property
    def zero(self) -> bool:
        return not any(self.divisor)


@dataclass(frozen=True)
class CohomologyReport:
    m: int
    class_group: ClassGroup
    h0: H0Data
    h1_steps: tuple[H1Step, ...]
    h2: H2Data
    h3_zero: bool = True

    def nonvanishing_steps(self) -> list[int]:
        return [s.filtration.k for s in self.h1_steps if not s.vanishes]

    def vanishing_steps(self) -> list[int]:
        return [s.filtration.k for s in self.h1_steps if s.vanishes]

    def empty_support_steps(self) -> list[int]:
        """Nonvanishing steps whose Z_k does not meet X."""
        return [s.filtration.k for s in self.h1_steps if s.support_empty and not s.vanishes]

    def concentrated_in(self) -> list[int]:
        degrees = []
        if not self.h0.empty:
            degrees.append(0)
        if any(not s.support_empty for s in self.h1_steps):
            degrees.append(-1)
        if not self.h2.zero:
            degrees.append(-2)
        return degrees


class InvalidWheelError(ValueError):
    def __init__(self, messages: list[str]):
        super().__init__("; ".join(messages))
        self.messages = messages


def cohomology_report(wheel: Wheel, fan: Fan, formula: str = "cycle") -> CohomologyReport:
    cg = class_group(fan)
    report = validate_wheel(wheel, fan, cg)
    if not report.valid:
        raise InvalidWheelError(report.messages())
    base = wheel.base_divisor

    h0_ideal = MonomialIdeal(wheel.f_out, wheel.d)
    h0_comps = tuple(c for c in h0_ideal.minimal_primes() if prime_set_realizable(c, fan))
    h0 = H0Data(h0_ideal, h0_comps, not h0_comps, cg.divisor_class(base))

    n = wheel.m * (wheel.m - 1) // 2
    steps = tuple(H1Step(wheel_filtration_ideal(wheel, k, cg, formula),
                         subscheme_Z(wheel, k, fan, formula)) for k in range(1, n + 1))

    D = _gcd(*[tuple(x) for x in wheel.f_in])
    h2 = H2Data(D, cg.divisor_class(_plus(base, D)))
    return CohomologyReport(wheel.m, cg, h0, steps, h2)
