"""Transposition order, the graphs Gamma_k and their minimal circuits.

Vertices are the labels 1..m and edge indices k run over 1..n = m(m-1)/2,
so printed output reads the same as the usual mathematical notation.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .monomial import Monomial, lcm_all
from .syzygy_element import SyzygyElement

Edge = tuple[int, int]


class UnsupportedSizeError(ValueError):
    pass


@dataclass(frozen=True)
class TranspositionTable:
    m: int
    order: tuple[Edge, ...]

    @property
    def n(self) -> int:
        return len(self.order)

    def tau(self, k: int) -> Edge:
        """The k-th transposition, 1 <= k <= n."""
        if not 1 <= k <= self.n:
            raise IndexError(f"k={k} outside 1..{self.n}")
        return self.order[k - 1]

    def __post_init__(self):
        object.__setattr__(self, "_positions",
                           {e: k + 1 for k, e in enumerate(self.order)})

    def index(self, edge: Edge) -> int:
        """One-based position of an (unordered) edge."""
        return self._positions[tuple(sorted(edge))]

    def edges(self, k: int) -> tuple[Edge, ...]:
        """Edges of Gamma_k."""
        return self.order[:k]

    def same_head_pairs(self, k: int) -> list[tuple[int, int]]:
        """Pairs ``(i, j)``, ``i < j <= k``, whose edges share their larger vertex."""
        return [(i, j) for j in range(1, k + 1) for i in range(1, j)
                if self.order[i - 1][1] == self.order[j - 1][1]]


@lru_cache(maxsize=None)
def transposition_order(m: int) -> TranspositionTable:
    if m < 3:
        raise UnsupportedSizeError(
            f"m={m}: the transposition order needs at least three letters")
    order = [(j, j + 1) for j in range(1, m)]
    order.append((1, m))
    order += [(1, j - m + 2) for j in range(m + 1, 2 * m - 2)]
    order += [(mu, nu) for mu in range(2, m + 1) for nu in range(mu + 2, m + 1)]
    return TranspositionTable(m, tuple(order))


@dataclass(frozen=True)
class Circuit:
    """A closed walk ``(v_1, ..., v_l, v_1)`` through distinct vertices, l >= 3.

    ``vertices`` omits the closing repeat.  Orientation matters for the
    syzygy sign, so construction keeps the order it is given; use
    ``canonical()`` for set comparisons.
    """

    vertices: tuple[int, ...]

    def __post_init__(self):
        vs = tuple(self.vertices)
        object.__setattr__(self, "vertices", vs)
        if len(vs) < 3:
            raise ValueError(f"circuit {vs} has length < 3")
        if len(set(vs)) != len(vs):
            raise ValueError(f"circuit {vs} repeats a vertex")

    def __len__(self) -> int:
        return len(self.vertices)

    def edges(self) -> list[tuple[Edge, int]]:
        """``[(edge, sign)]``; sign is +1 when walked from smaller to larger vertex."""
        vs = self.vertices
        out = []
        for a, b in zip(vs, vs[1:] + vs[:1]):
            out.append(((min(a, b), max(a, b)), 1 if a < b else -1))
        return out

    def support(self) -> frozenset[Edge]:
        return frozenset(e for e, _ in self.edges())

    def chords(self, edges: Iterable[Edge]) -> list[Edge]:
        own = self.support()
        verts = set(self.vertices)
        return sorted(e for e in map(lambda e: tuple(sorted(e)), edges)
                      if e[0] in verts and e[1] in verts and e not in own)

    def canonical(self) -> "Circuit":
        vs = list(self.vertices)
        i = vs.index(min(vs))
        vs = vs[i:] + vs[:i]
        if vs[1] > vs[-1]:
            vs = [vs[0]] + vs[1:][::-1]
        return Circuit(tuple(vs))

    def reversed(self) -> "Circuit":
        return Circuit(self.vertices[::-1])

    def closed(self) -> tuple[int, ...]:
        return self.vertices + self.vertices[:1]

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.closed())) + ")"


def is_chordless(cycle: Sequence[int], adj: dict[int, set[int]]) -> bool:
    ell = len(cycle)
    for a in range(ell):
        for b in range(a + 2, ell):
            if a == 0 and b == ell - 1:
                continue
            if cycle[b] in adj[cycle[a]]:
                return False
    return True


def chordless_cycles(vertices: Iterable[int], edges: Iterable[Edge]) -> set[Circuit]:
    """All chordless cycles of length >= 3 by canonical-start DFS.

    Each cycle is grown from its smallest vertex through larger vertices only;
    a vertex may join the path only if it is adjacent to no interior path
    vertex, so every completed path is already chordless.
    """
    vertices = sorted(set(vertices))
    adj: dict[int, set[int]] = {v: set() for v in vertices}
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    found: set[Circuit] = set()

    def grow(path: list[int], blocked: set[int]) -> None:
        start, last = path[0], path[-1]
        for v in sorted(adj[last]):
            if v <= start or v in path or v in blocked:
                continue
            if start in adj[v]:
                if len(path) >= 2:
                    cyc = path + [v]
                    if cyc[1] < cyc[-1]:
                        found.add(Circuit(tuple(cyc)))
                # v closes a cycle; extending past it would leave (start, v) as a chord
                continue
            grow(path + [v], blocked | adj[last] - {v})

    for s in vertices:
        for v in sorted(adj[s]):
            if v > s:
                grow([s, v], set())
    return found


def brute_force_minimal_circuits(m: int, k: int) -> set[Circuit]:
    table = transposition_order(m)
    _check_k(table, k)
    return chordless_cycles(range(1, m + 1), table.edges(k))


def triangle(table: TranspositionTable, i: int, j: int) -> Circuit:
    """``gamma(i, j) = (mu_i, mu_j, nu_j, mu_i)`` for a same-head pair ``(i, j)``."""
    mu_i, _ = table.tau(i)
    mu_j, nu_j = table.tau(j)
    return Circuit((mu_i, mu_j, nu_j))


def _check_k(table: TranspositionTable, k: int) -> None:
    if not 1 <= k <= table.n:
        raise IndexError(f"k={k} outside 1..{table.n} for m={table.m}")


def minimal_circuits(m: int, k: int, *, method: str = "auto") -> set[Circuit]:
    """Chordless circuits of Gamma_k, canonicalized.

    ``method="auto"`` uses the closed-form classification where one exists
    (k < m, k = m, k >= 2m - 3) and the DFS enumeration in between;
    ``method="brute"`` always enumerates.
    """
    table = transposition_order(m)
    _check_k(table, k)
    if method == "brute":
        return brute_force_minimal_circuits(m, k)
    if method != "auto":
        raise ValueError(f"unknown method {method!r}")
    if k < m:
        return set()
    if k == m:
        return {Circuit(tuple(range(1, m + 1)))}
    if k >= 2 * m - 3:
        return {triangle(table, i, j).canonical() for i, j in table.same_head_pairs(k)}
    return brute_force_minimal_circuits(m, k)


def circuit_monomial(circuit: Circuit, f: Sequence[Monomial]) -> Monomial:
    return lcm_all(f[v - 1] for v in circuit.vertices)


def circuit_syzygy(circuit: Circuit, f: Sequence[Monomial]) -> SyzygyElement:
    """``sum_e sign(e) * (f^gamma / f^e) * eps_e`` over the circuit's edges."""
    table = transposition_order(len(f))
    top = circuit_monomial(circuit, f)
    terms = {}
    for (a, b), sign in circuit.edges():
        f_e = f[a - 1].lcm(f[b - 1])
        terms[table.index((a, b))] = (sign, top / f_e)
    return SyzygyElement.from_signed("eps", terms)


def chord_split(circuit: Circuit, chord: Edge) -> tuple[Circuit, Circuit]:
    """Split along ``chord = (v_r, v_s)``, r < s, keeping the walk's orientation."""
    vs = circuit.vertices
    a, b = chord
    if a not in vs or b not in vs:
        raise ValueError(f"{chord} does not join two vertices of {circuit}")
    r, s = sorted((vs.index(a), vs.index(b)))
    if s - r == 1 or (r == 0 and s == len(vs) - 1):
        raise ValueError(f"{chord} is an edge of {circuit}, not a chord")
    return Circuit(vs[r:s + 1]), Circuit(vs[:r + 1] + vs[s:])
