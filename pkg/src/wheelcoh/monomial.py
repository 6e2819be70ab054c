"""Monomials of the Cox ring, stored as exponent vectors, and monomial ideals.

An exponent vector doubles as an effective torus-invariant Weil divisor:
``(1, 0, 0, 0, 0, 1, 0)`` is both ``x_1*x_6`` and ``E_1 + E_6``.
Variable positions are zero-based in the API and one-based in every
printed form (``x_1``, ``E_1``).
"""
from __future__ import annotations

import re
from itertools import combinations
from typing import Iterable, Iterator, Mapping, Sequence


class DimensionError(ValueError):
    """Exponent vectors of different lengths were combined."""


class DivisibilityError(ArithmeticError):
    """A monomial quotient was requested that does not exist."""


class Monomial(tuple):
    """An immutable exponent vector with entries >= 0."""

    __slots__ = ()

    def __new__(cls, exponents: Iterable[int] = ()):
        exps = tuple(int(e) for e in exponents)
        for i, e in enumerate(exps):
            if e < 0:
                raise ValueError(f"negative exponent {e} at x_{i + 1}")
        return super().__new__(cls, exps)

    @classmethod
    def one(cls, d: int) -> "Monomial":
        return cls((0,) * d)

    @classmethod
    def var(cls, i: int, d: int, power: int = 1) -> "Monomial":
        exps = [0] * d
        exps[i] = power
        return cls(exps)

    @classmethod
    def parse(cls, text: str, d: int) -> "Monomial":
        """Read ``"x_1*x_6"``, ``"x_3^2 x_4"`` or ``"1"``; variables are one-based."""
        text = text.strip()
        exps = [0] * d
        if text in ("", "1"):
            return cls(exps)
        rest = re.sub(r"x_(\d+)(?:\^(\d+))?", "", text)
        if rest.replace("*", "").strip():
            raise ValueError(f"cannot parse monomial {text!r}")
        for idx, power in re.findall(r"x_(\d+)(?:\^(\d+))?", text):
            i = int(idx) - 1
            if not 0 <= i < d:
                raise DimensionError(f"variable x_{idx} outside x_1..x_{d}")
            exps[i] += int(power) if power else 1
        return cls(exps)

    @property
    def d(self) -> int:
        return len(self)

    @property
    def degree(self) -> int:
        return sum(self)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(i for i, e in enumerate(self) if e)

    def is_one(self) -> bool:
        return not any(self)

    def _check(self, other: Sequence[int]) -> None:
        if len(self) != len(other):
            raise DimensionError(
                f"exponent vectors of length {len(self)} and {len(other)}")

    def __mul__(self, other: "Monomial") -> "Monomial":
        self._check(other)
        return Monomial(a + b for a, b in zip(self, other))

    __rmul__ = __mul__

    def __truediv__(self, other: "Monomial") -> "Monomial":
        return mono_divide(self, other)

    def divides(self, other: "Monomial") -> bool:
        self._check(other)
        return all(a <= b for a, b in zip(self, other))

    def gcd(self, other: "Monomial") -> "Monomial":
        self._check(other)
        return Monomial(min(a, b) for a, b in zip(self, other))

    def lcm(self, other: "Monomial") -> "Monomial":
        self._check(other)
        return Monomial(max(a, b) for a, b in zip(self, other))

    def __str__(self) -> str:
        parts = [f"x_{i + 1}" if e == 1 else f"x_{i + 1}^{e}"
                 for i, e in enumerate(self) if e]
        return "*".join(parts) if parts else "1"

    def __repr__(self) -> str:
        return f"Monomial({str(self)!r})"

    def divisor_str(self) -> str:
        """E-notation, e.g. ``E_1+E_5+E_6+E_7`` (``0`` for the zero divisor)."""
        parts = []
        for i, e in enumerate(self):
            if e:
                parts.append(f"E_{i + 1}" if e == 1 else f"{e}E_{i + 1}")
        return "+".join(parts) if parts else "0"


ExponentVector = Monomial


def mono_gcd_lcm(a: Monomial, b: Monomial) -> tuple[Monomial, Monomial]:
    return a.gcd(b), a.lcm(b)


def mono_divide(a: Monomial, b: Monomial) -> Monomial:
    """Return ``a / b``; raises if ``b`` does not divide ``a``."""
    a._check(b)
    for i, (x, y) in enumerate(zip(a, b)):
        if y > x:
            raise DivisibilityError(
                f"{b} does not divide {a}: exponent of x_{i + 1} is {y} > {x}")
    return Monomial(x - y for x, y in zip(a, b))


def lcm_all(monos: Iterable[Monomial], d: int | None = None) -> Monomial:
    monos = list(monos)
    if not monos:
        if d is None:
            raise ValueError("lcm of an empty list needs the ambient dimension")
        return Monomial.one(d)
    out = monos[0]
    for mono in monos[1:]:
        out = out.lcm(mono)
    return out


def gcd_all(monos: Iterable[Monomial]) -> Monomial:
    monos = list(monos)
    if not monos:
        raise ValueError("gcd of an empty list is undefined")
    out = monos[0]
    for mono in monos[1:]:
        out = out.gcd(mono)
    return out


def grlex_key(mono: Monomial) -> tuple:
    return (mono.degree, tuple(-e for e in mono))


class MonomialIdeal:
    """A monomial ideal held by its minimal generators, in graded-lex order.

    The empty generator set is the zero ideal and ``{1}`` is the unit ideal.
    """

    __slots__ = ("generators", "d")

    def __init__(self, generators: Iterable[Monomial], d: int):
        gens = {Monomial(g) for g in generators}
        for g in gens:
            if len(g) != d:
                raise DimensionError(f"generator {g} not of length {d}")
        minimal = [g for g in gens
                   if not any(h != g and h.divides(g) for h in gens)]
        self.generators: tuple[Monomial, ...] = tuple(sorted(minimal, key=grlex_key))
        self.d = d

    def is_zero(self) -> bool:
        return not self.generators

    def is_unit(self) -> bool:
        return any(g.is_one() for g in self.generators)

    def contains(self, mono: Monomial) -> bool:
        return any(g.divides(mono) for g in self.generators)

    def __contains__(self, mono: Monomial) -> bool:
        return self.contains(mono)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.d == other.d and self.generators == other.generators

    def __hash__(self) -> int:
        return hash((self.d, self.generators))

    def __iter__(self) -> Iterator[Monomial]:
        return iter(self.generators)

    def __len__(self) -> int:
        return len(self.generators)

    def __repr__(self) -> str:
        if self.is_zero():
            return "MonomialIdeal(0)"
        return "MonomialIdeal<" + ", ".join(map(str, self.generators)) + ">"

    def minimal_primes(self) -> list[frozenset[int]]:
        return ideal_minimal_primes(self)


def ideal_minimal_generators(gens: Iterable[Monomial], d: int | None = None) -> MonomialIdeal:
    gens = list(gens)
    if d is None:
        if not gens:
            raise ValueError("ambient dimension required for an empty generator set")
        d = len(gens[0])
    return MonomialIdeal(gens, d)


def ideal_minimal_primes(ideal: MonomialIdeal) -> list[frozenset[int]]:
    """Minimal primes of a monomial ideal as sets of (zero-based) variables.

    These are the minimal vertex covers of the hypergraph whose edges are the
    generator supports.  The unit ideal has none; the zero ideal has the
    single prime ``frozenset()``.
    """
    if ideal.is_unit():
        return []
    edges = sorted({g.support for g in ideal.generators}, key=len)
    edges = [e for e in edges if not any(f < e for f in edges)]
    found: list[frozenset[int]] = []

    def search(chosen: frozenset[int]) -> None:
        if any(c <= chosen for c in found):
            return
        for edge in edges:
            if not edge & chosen:
                for v in sorted(edge):
                    search(chosen | {v})
                return
        found.append(chosen)

    search(frozenset())
    minimal = {c for c in found if not any(o < c for o in found)}
    return sorted(minimal, key=lambda c: (len(c), sorted(c)))


def is_vertex_cover(cover: Iterable[int], ideal: MonomialIdeal) -> bool:
    cover = set(cover)
    return all(g.support & cover for g in ideal.generators)


def brute_force_minimal_primes(ideal: MonomialIdeal) -> list[frozenset[int]]:
    """Exhaustive subset search; exponential in ``d``, used for cross-checks."""
    if ideal.is_unit():
        return []
    covers = []
    for size in range(ideal.d + 1):
        for subset in combinations(range(ideal.d), size):
            s = frozenset(subset)
            if is_vertex_cover(s, ideal) and not any(c <= s for c in covers):
                covers.append(s)
    return sorted(covers, key=lambda c: (len(c), sorted(c)))


class Polynomial:
    """Sparse integer-coefficient polynomial; just enough for matrix checks."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, int] | None = None):
        self.terms = {m: c for m, c in (terms or {}).items() if c}

    @classmethod
    def monomial(cls, mono: Monomial, coeff: int = 1) -> "Polynomial":
        return cls({mono: coeff})

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "Polynomial") -> "Polynomial":
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return Polynomial(out)

    def __neg__(self) -> "Polynomial":
        return Polynomial({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        out: dict[Monomial, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = m1 * m2
                out[m] = out.get(m, 0) + c1 * c2
        return Polynomial(out)

    def scale(self, mono: Monomial, coeff: int = 1) -> "Polynomial":
        return Polynomial({m * mono: c * coeff for m, c in self.terms.items()})

    def single_term(self) -> tuple[int, Monomial]:
        """Return ``(coefficient, monomial)`` for a one-term polynomial."""
        if len(self.terms) != 1:
            raise ValueError(f"{self} is not a single term")
        (m, c), = self.terms.items()
        return c, m

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = ""
        for m, c in sorted(self.terms.items(), key=lambda t: grlex_key(t[0])):
            mag = abs(c)
            body = str(m) if mag == 1 else (f"{mag}" if m.is_one() else f"{mag}*{m}")
            out += ("-" if c < 0 else ("+" if out else "")) + body
        return out

    __repr__ = __str__
