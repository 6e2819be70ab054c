import random

import pytest

from wheelcoh.monomial import Monomial, MonomialIdeal
from wheelcoh.oracle import (FineDegreeWindow, WindowTooSmall, check_filtration_chain,
                             check_h2_vanishing, e_space, eps_space, in_span, nullspace,
                             oracle_filtration_ideal, oracle_ideal, oracle_kernel,
                             oracle_syzygies, oracle_wheel_ideal, rank, spans_agree,
                             wheel_filtration_module)
from wheelcoh.random_inputs import random_flist, random_wheel
from wheelcoh.syzygy import beta_generators, syzygy_generators
from wheelcoh.wheel import Wheel

from conftest import E


def test_linear_algebra_helpers():
    assert rank([[1, 2], [2, 4]], 2) == 1
    assert in_span([[1, 1]], [3, 3], 2) and not in_span([[1, 1]], [1, 0], 2)
    ker = nullspace([[1], [1], [1]], 1)  # columns (1), (1), (1)
    assert len(ker) == 2
    for v in ker:
        assert sum(v) == 0
    assert nullspace([[1, 0], [0, 1]], 2) == []


def test_window_grid_and_requirement():
    w = FineDegreeWindow(Monomial([1, 2]))
    assert w.size == 6
    assert w.grid().shape == (6, 2)
    with pytest.raises(WindowTooSmall):
        w.require([Monomial([2, 0])])
    assert FineDegreeWindow.around([Monomial([1, 0]), Monomial([0, 3])]).bound == Monomial([3, 5])


def test_hex_kernel_has_eleven_generators(hex_f):
    window = FineDegreeWindow(Monomial(e + 1 for e in E(1, 2, 3, 4, 5, 6, 7)))
    gens = oracle_kernel(hex_f, window)
    assert len(gens) == 11
    betas = beta_generators(hex_f)
    minimal = [b for j, b in enumerate(betas, start=1) if j not in (9, 10, 12, 13)]
    assert spans_agree(e_space(hex_f), gens, minimal, window) is None
    assert spans_agree(e_space(hex_f), gens, betas, window) is None


def test_koszul_case():
    f = [Monomial([1, 0, 0]), Monomial([0, 1, 0]), Monomial([0, 0, 1])]
    assert len(oracle_kernel(f)) == 3


def test_equal_monomials_give_rank_m_minus_one():
    f = [Monomial([1])] * 4
    gens = oracle_kernel(f)
    assert len(gens) == 3
    assert all(g.fine_degree(f) == Monomial([1]) for g in gens)


def test_window_monotonicity_and_determinism(rng):
    for _ in range(10):
        f = random_flist(rng, 4, 3)
        small = oracle_kernel(f, FineDegreeWindow.around(f, 0))
        large = oracle_kernel(f, FineDegreeWindow.around(f, 2))
        assert set(map(str, small)) <= set(map(str, large))
        assert list(map(str, large)) == list(map(str, oracle_kernel(f)))


def test_syzygy_module_shapes(rng):
    for _ in range(10):
        f = random_flist(rng, 4, 3)
        assert oracle_syzygies(f, 3) == []
        assert len(oracle_syzygies(f, 4)) == 1
        window = FineDegreeWindow.around(f)
        assert spans_agree(eps_space(f, 5), syzygy_generators(f, 5),
                           oracle_syzygies(f, 5, window), window) is None


def test_spans_agree_reports_counterexample():
    f = [Monomial([1, 0]), Monomial([0, 1]), Monomial([1, 1])]
    betas = beta_generators(f)
    window = FineDegreeWindow.around(f)
    delta = spans_agree(e_space(f), betas[:1], betas, window)
    assert delta is not None
    assert betas[1].fine_degree(f).divides(delta)


def test_ideal_examples(hex_f, wheel):
    assert oracle_filtration_ideal(hex_f, 1).is_zero()
    assert oracle_filtration_ideal(hex_f, 9).is_unit()
    assert oracle_wheel_ideal(wheel, 3) == MonomialIdeal([E(7)], 7)
    betas = beta_generators(hex_f)
    # beta_9 = -x_4 x_7 beta_6 - x_1 beta_5, so beta_9 lies in <beta_5, beta_6>
    assert oracle_ideal([betas[4], betas[5]], betas[8], hex_f).is_unit()


def test_filtration_chain_and_h2(wheel):
    assert check_filtration_chain(wheel) is None
    assert check_h2_vanishing(wheel) is None


def test_h2_nonvanishing_detected(wheel):
    # multiplying every hub arrow by x_1 keeps both relations but gives gcd E_1
    shifted = Wheel.create(wheel.f_out, [g * E(1) for g in wheel.f_in],
                           wheel.rim_fwd, wheel.rim_bwd)
    assert check_h2_vanishing(shifted) is not None


def test_filtration_modules_shapes(wheel):
    assert len(wheel_filtration_module(wheel, 0)) == 6
    assert len(wheel_filtration_module(wheel, 6)) == 6
    assert len(wheel_filtration_module(wheel, 15)) == 15


def test_random_wheels_satisfy_chain(rng):
    for _ in range(10):
        w = random_wheel(rng, 3, rng.randint(1, 3))
        assert check_filtration_chain(w) is None
