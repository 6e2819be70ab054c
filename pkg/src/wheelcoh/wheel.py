"""Wheels: four-term complexes of invertible sheaves with monomial maps.

Spoke and rim indices j are one-based and cyclic modulo m.  For each j the
wheel carries four monomials:

* ``f_out[j]``  = f^j,          the map L_j -> L             (divisor D^j)
* ``f_in[j]``   = f_{j,j+1},    the map L -> L_{j,j+1}       (D_{j,j+1})
* ``rim_fwd[j]`` = f^j_{j+1},   the map L_{j,j+1} -> L_{j+1} (D^j_{j+1})
* ``rim_bwd[j]`` = f^{j+1}_j,   the map L_{j,j+1} -> L_j     (D^{j+1}_j)

(lists are stored zero-based, so ``f_out[j - 1]`` is f^j).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .monomial import Monomial, Polynomial
from .syzygy import beta_generators, rim_gcd
from .syzygy_element import SyzygyElement
from .toric import ClassGroup, DivisorClass, Fan, class_group, is_cartier


class NotAComplexError(ValueError):
    """A composition of consecutive maps is nonzero."""


@dataclass(frozen=True)
class Wheel:
    m: int
    f_out: tuple[Monomial, ...]
    f_in: tuple[Monomial, ...]
    rim_fwd: tuple[Monomial, ...]
    rim_bwd: tuple[Monomial, ...]
    base_divisor: tuple[int, ...]

    @classmethod
    def create(cls, f_out, f_in, rim_fwd, rim_bwd=None, base_divisor=None) -> "Wheel":
        """Build a wheel, deriving ``rim_bwd`` from the rhombus relation if omitted."""
        f_out = tuple(Monomial(x) for x in f_out)
        f_in = tuple(Monomial(x) for x in f_in)
        rim_fwd = tuple(Monomial(x) for x in rim_fwd)
        m = len(f_out)
        if m < 3:
            raise ValueError(f"a wheel needs m >= 3 spokes, got {m}")
        if not (len(f_in) == len(rim_fwd) == m):
            raise ValueError("f_out, f_in and rim_fwd must all have m entries")
        d = len(f_out[0])
        if rim_bwd is None:
            rim_bwd = tuple(derive_rim_bwd(f_out, rim_fwd))
        else:
            rim_bwd = tuple(Monomial(x) for x in rim_bwd)
            if len(rim_bwd) != m:
                raise ValueError("rim_bwd must have m entries")
        for mono in f_out + f_in + rim_fwd + rim_bwd:
            if len(mono) != d:
                raise ValueError(f"monomial {mono} is not over {d} variables")
        base = tuple(base_divisor) if base_divisor is not None else (0,) * d
        if len(base) != d:
            raise ValueError(f"base divisor must have {d} entries")
        return cls(m, f_out, f_in, rim_fwd, rim_bwd, tuple(int(b) for b in base))

    @property
    def d(self) -> int:
        return len(self.f_out[0])

    def arrows(self) -> dict[str, Monomial]:
        """Every arrow monomial keyed by its divisor name (``D^1``, ``D^2_1``...)."""
        m = self.m
        out = {}
        for j in range(1, m + 1):
            nxt = j % m + 1
            out[f"D^{j}"] = self.f_out[j - 1]
            out[f"D_{{{j},{nxt}}}"] = self.f_in[j - 1]
            out[f"D^{j}_{nxt}"] = self.rim_fwd[j - 1]
            out[f"D^{nxt}_{j}"] = self.rim_bwd[j - 1]
        return out


def derive_rim_bwd(f_out: Sequence[Monomial], rim_fwd: Sequence[Monomial]) -> list[Monomial]:
    """``D^{j+1}_j = D^j_{j+1} + D^{j+1} - D^j``; fails if a coefficient goes negative."""
    m = len(f_out)
    out = []
    for j in range(m):
        vals = [a + b - c for a, b, c in zip(rim_fwd[j], f_out[(j + 1) % m], f_out[j])]
        if min(vals, default=0) < 0:
            raise ValueError(
                f"rim_bwd[{j + 1}] cannot be derived: D^{j + 1}_{(j + 1) % m + 1}"
                f" + D^{(j + 1) % m + 1} - D^{j + 1} is not effective")
        out.append(Monomial(vals))
    return out


@dataclass
class ValidationReport:
    relation12_failures: list[int] = field(default_factory=list)
    relation13_failures: list[int] = field(default_factory=list)
    non_cartier: list[str] = field(default_factory=list)
    class_failures: list[str] = field(default_factory=list)
    classes: dict[str, DivisorClass] = field(default_factory=dict)

    @property
    def valid(self) -> bool:
        return not (self.relation12_failures or self.relation13_failures
                    or self.non_cartier or self.class_failures)

    def messages(self) -> list[str]:
        out = [f"relation (12) fails at j={j}: D^j_(j+1) + D^(j+1) != D^(j+1)_j + D^j"
               for j in self.relation12_failures]
        out += [f"relation (13) fails at j={j}: D^(j-1)_j + D_(j-1,j) != D^(j+1)_j + D_(j,j+1)"
                for j in self.relation13_failures]
        out += [f"{name} is not Cartier" for name in self.non_cartier]
        out += self.class_failures
        return out


def relation_failures(wheel: Wheel) -> tuple[list[int], list[int]]:
    m = wheel.m
    bad12, bad13 = [], []
    for j in range(1, m + 1):
        nxt, prv = j % m + 1, (j - 2) % m + 1
        if wheel.rim_fwd[j - 1] * wheel.f_out[nxt - 1] != wheel.rim_bwd[j - 1] * wheel.f_out[j - 1]:
            bad12.append(j)
        # D^{j-1}_j is rim_fwd of rim segment (j-1, j); D^{j+1}_j is rim_bwd of (j, j+1)
        if wheel.rim_fwd[prv - 1] * wheel.f_in[prv - 1] != wheel.rim_bwd[j - 1] * wheel.f_in[j - 1]:
            bad13.append(j)
    return bad12, bad13


def validate_wheel(wheel: Wheel, fan: Fan | None = None,
                   cg: ClassGroup | None = None) -> ValidationReport:
    """Check both rhombus relations, Cartier-ness, and the derived sheaf classes.

    With a fan, the classes ``L_j = L(-D^j)`` and ``L_{j,j+1}`` are derived and
    ``L_{j,j+1}`` is computed three ways (via L_j, via L_{j+1}, and as
    ``L(D_{j,j+1})``); all must agree in Cl(X).
    """
    report = ValidationReport()
    report.relation12_failures, report.relation13_failures = relation_failures(wheel)
    if fan is None:
        return report
    if fan.d != wheel.d:
        raise ValueError(f"wheel has {wheel.d} variables but the fan has {fan.d} rays")
    for name, mono in wheel.arrows().items():
        if not is_cartier(list(mono), fan):
            report.non_cartier.append(name)
    cg = cg or class_group(fan)
    m = wheel.m
    base = wheel.base_divisor
    L = cg.divisor_class(base)
    report.classes["L"] = L
    for j in range(1, m + 1):
        report.classes[f"L_{j}"] = cg.sub(L, cg.divisor_class(wheel.f_out[j - 1]))
    for j in range(1, m + 1):
        nxt = j % m + 1
        via_j = cg.sub(report.classes[f"L_{j}"], cg.divisor_class(wheel.rim_bwd[j - 1]))
        via_next = cg.sub(report.classes[f"L_{nxt}"], cg.divisor_class(wheel.rim_fwd[j - 1]))
        via_hub = cg.add(L, cg.divisor_class(wheel.f_in[j - 1]))
        report.classes[f"L_{{{j},{nxt}}}"] = via_j
        if via_j != via_next:
            report.class_failures.append(
                f"L_({j},{nxt}) differs when computed from L_{j} and from L_{nxt}")
        if via_j != via_hub:
            report.class_failures.append(
                f"L_({j},{nxt}) computed from L_{j} differs from L(D_({j},{nxt}))")
    return report


@dataclass(frozen=True)
class LiftedComplex:
    """``S(L) -phi3-> (+) S(L_{j,j+1}) -phi2-> (+) S(L_j) -phi1-> S(L)``.

    Matrices are lists of rows of Polynomials: rows index the target basis,
    columns the source basis.  ``degrees`` holds the fine Z^d-degree of every
    basis element, normalised so that the target copy of L sits in degree 0;
    a column's degree is its row's degree plus the entry's exponent.
    """

    phi3: list[list[Polynomial]]
    phi2: list[list[Polynomial]]
    phi1: list[list[Polynomial]]
    degrees: dict[str, Monomial]


def _compose(A: list[list[Polynomial]], B: list[list[Polynomial]]) -> list[list[Polynomial]]:
    out = []
    for row in A:
        out_row = []
        for col in zip(*B):
            acc = Polynomial()
            for a, b in zip(row, col):
                if not a.is_zero() and not b.is_zero():
                    acc = acc + a * b
            out_row.append(acc)
        out.append(out_row)
    return out


def build_complex(wheel: Wheel) -> LiftedComplex:
    m = wheel.m
    P = Polynomial.monomial
    zero = Polynomial()
    phi1 = [[P(wheel.f_out[j]) for j in range(m)]]
    phi2 = [[zero] * m for _ in range(m)]
    for j in range(m):
        nxt = (j + 1) % m
        phi2[nxt][j] = phi2[nxt][j] + P(wheel.rim_fwd[j])
        phi2[j][j] = phi2[j][j] - P(wheel.rim_bwd[j])
    phi3 = [[P(wheel.f_in[j])] for j in range(m)]

    problems = []
    for j, entry in enumerate(_compose(phi1, phi2)[0], start=1):
        if not entry.is_zero():
            problems.append(f"(phi1*phi2)(e_{{{j},{j % m + 1}}}) = {entry}: "
                            f"relation (12) violated at j={j}")
    for j, row in enumerate(_compose(phi2, phi3), start=1):
        if not row[0].is_zero():
            problems.append(f"(phi2*phi3)(e_L) has e_{j}-coefficient {row[0]}: "
                            f"relation (13) violated at j={j}")
    if problems:
        raise NotAComplexError("; ".join(problems))

    degrees = {"L": Monomial.one(wheel.d)}
    for j in range(1, m + 1):
        degrees[f"L_{j}"] = wheel.f_out[j - 1]
    for j in range(1, m + 1):
        nxt = j % m + 1
        a = wheel.f_out[j - 1] * wheel.rim_bwd[j - 1]
        b = wheel.f_out[nxt - 1] * wheel.rim_fwd[j - 1]
        assert a == b
        degrees[f"L_{{{j},{nxt}}}"] = a
    hub = {degrees[f"L_{{{j},{j % m + 1}}}"] * wheel.f_in[j - 1] for j in range(1, m + 1)}
    assert len(hub) == 1
    degrees["L'"] = hub.pop()
    return LiftedComplex(phi3, phi2, phi1, degrees)


def alpha(wheel: Wheel, j: int) -> SyzygyElement:
    """``alpha_j = f^j_{j+1} e_{j+1} - f^{j+1}_j e_j``."""
    nxt = j % wheel.m + 1
    return SyzygyElement.from_signed(
        "e", {nxt: (1, wheel.rim_fwd[j - 1]), j: (-1, wheel.rim_bwd[j - 1])})


def alpha_generators(wheel: Wheel) -> list[tuple[SyzygyElement, Monomial]]:
    """``[(alpha_j, g_j)]`` with ``alpha_j = g_j * beta_j`` checked exactly.

    For j = m the edge is (1, m) oriented the other way round, so there the
    identity reads ``alpha_m = -g_m * beta_m``.
    """
    betas = beta_generators(wheel.f_out)
    out = []
    for j in range(1, wheel.m + 1):
        a = alpha(wheel, j)
        g = rim_gcd(wheel, j)
        sign = -1 if j == wheel.m else 1
        if a != betas[j - 1].scale(g, sign):
            raise AssertionError(f"alpha_{j} != {'-' if sign < 0 else ''}({g}) beta_{j}")
        out.append((a, g))
    return out
