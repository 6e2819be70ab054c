"""Elements of the free modules ``(+) S e_mu`` and ``(+) S eps_j``."""
from __future__ import annotations

from typing import Mapping, Sequence

from .monomial import Monomial, Polynomial


class SyzygyElement:
    """A vector over a free S-module with basis ``e_1..e_m`` or ``eps_1..eps_k``.

    Keys are one-based basis indices; zero coefficients are never stored.
    """

    __slots__ = ("basis", "terms")

    def __init__(self, basis: str, terms: Mapping[int, Polynomial]):
        if basis not in ("e", "eps"):
            raise ValueError(f"unknown basis {basis!r}")
        self.basis = basis
        self.terms = {i: p for i, p in sorted(terms.items()) if not p.is_zero()}

    @classmethod
    def from_signed(cls, basis: str,
                    terms: Mapping[int, tuple[int, Monomial]]) -> "SyzygyElement":
        return cls(basis, {i: Polynomial.monomial(mono, sign)
                           for i, (sign, mono) in terms.items()})

    @classmethod
    def zero(cls, basis: str) -> "SyzygyElement":
        return cls(basis, {})

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, i: int) -> Polynomial:
        return self.terms.get(i, Polynomial())

    def signed_monomial(self, i: int) -> tuple[int, Monomial]:
        return self.terms[i].single_term()

    def support(self) -> list[int]:
        return list(self.terms)

    def __add__(self, other: "SyzygyElement") -> "SyzygyElement":
        if self.basis != other.basis:
            raise ValueError("cannot add elements over different bases")
        out = dict(self.terms)
        for i, p in other.terms.items():
            out[i] = out[i] + p if i in out else p
        return SyzygyElement(self.basis, out)

    def __neg__(self) -> "SyzygyElement":
        return SyzygyElement(self.basis, {i: -p for i, p in self.terms.items()})

    def __sub__(self, other: "SyzygyElement") -> "SyzygyElement":
        return self + (-other)

    def scale(self, mono: Monomial, sign: int = 1) -> "SyzygyElement":
        return SyzygyElement(self.basis,
                             {i: p.scale(mono, sign) for i, p in self.terms.items()})

    def fine_degree(self, basis_degrees: Sequence[Monomial]) -> Monomial:
        """The common Z^d-degree of all terms; raises if not homogeneous.

        ``basis_degrees[i - 1]`` is the degree assigned to basis element i.
        """
        degs = {mono * basis_degrees[i - 1]
                for i, p in self.terms.items() for mono in p.terms}
        if len(degs) != 1:
            raise ValueError(f"{self} is not fine-homogeneous (degrees {degs})")
        return degs.pop()

    def sign_vector(self, size: int) -> list[int]:
        """Integer coefficients per basis index, for single-term homogeneous elements."""
        vec = [0] * size
        for i, p in self.terms.items():
            c, _ = p.single_term()
            vec[i - 1] = c
        return vec

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SyzygyElement):
            return NotImplemented
        return self.basis == other.basis and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.basis, frozenset(self.terms.items())))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        sym = "e" if self.basis == "e" else "eps"
        out = []
        for i, p in self.terms.items():
            s = str(p)
            if len(p.terms) > 1:
                s = f"({s})"
            if s == "1":
                s = ""
            elif s == "-1":
                s = "-"
            out.append(f"{s}{'*' if s not in ('', '-') else ''}{sym}_{i}")
        return " + ".join(out).replace("+ -", "- ")

    __repr__ = __str__


def combine(items: Sequence[tuple[Polynomial, SyzygyElement]], basis: str) -> SyzygyElement:
    """``sum c_i * v_i`` with polynomial coefficients."""
    out: dict[int, Polynomial] = {}
    for coeff, vec in items:
        for i, p in vec.terms.items():
            term = coeff * p
            out[i] = out[i] + term if i in out else term
    return SyzygyElement(basis, out)
