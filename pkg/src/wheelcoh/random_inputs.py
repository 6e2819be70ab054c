"""Seeded random f-lists, valid wheels and single-relation perturbations."""
from __future__ import annotations

import random

from .monomial import Monomial
from .wheel import Wheel


def random_monomial(rng: random.Random, d: int, max_exp: int) -> Monomial:
    return Monomial(rng.randint(0, max_exp) for _ in range(d))


def random_flist(rng: random.Random, m: int, d: int, max_exp: int = 2) -> list[Monomial]:
    return [random_monomial(rng, d, max_exp) for _ in range(m)]


def random_wheel(rng: random.Random, m: int, d: int, max_exp: int = 2,
                 max_gcd: int = 1) -> Wheel:
    """A wheel satisfying both rhombus relations.

    Spokes D^j and rim gcds g_j are free; the rim divisors then follow from
    ``D^j_{j+1} - gcd = D^j - gcd(D^j, D^{j+1})`` and the hub divisors from
    the second relation, which telescopes around the cycle.  A common shift
    makes the hub divisors effective.
    """
    spokes = random_flist(rng, m, d, max_exp)
    gcds = random_flist(rng, m, d, max_gcd)
    fwd, bwd = [], []
    for j in range(m):
        c = spokes[j].gcd(spokes[(j + 1) % m])
        fwd.append(gcds[j] * spokes[j] / c)
        bwd.append(gcds[j] * spokes[(j + 1) % m] / c)
    hub = [[0] * d]
    for j in range(1, m):
        hub.append([a + b - c for a, b, c in zip(hub[-1], fwd[j - 1], bwd[j])])
    low = [min(h[i] for h in hub) for i in range(d)]
    extra = random_monomial(rng, d, 1)
    f_in = [Monomial(h[i] - low[i] + extra[i] for i in range(d)) for h in hub]
    return Wheel.create(spokes, f_in, fwd, bwd)


def perturb(wheel: Wheel, field: str, j: int, var: int) -> Wheel:
    """Multiply one arrow (``field`` list entry j, zero-based) by ``x_var``."""
    lists = {name: list(getattr(wheel, name))
             for name in ("f_out", "f_in", "rim_fwd", "rim_bwd")}
    lists[field][j] = lists[field][j] * Monomial.var(var, wheel.d)
    return Wheel.create(lists["f_out"], lists["f_in"], lists["rim_fwd"], lists["rim_bwd"],
                        wheel.base_divisor)
