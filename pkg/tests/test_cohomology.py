import pytest

from wheelcoh.cohomology import (InconsistentDivisorError, InvalidWheelError, cohomology_report,
                                 components_str, cutting_divisors, subscheme_Z)
from wheelcoh.random_inputs import perturb, random_wheel
from wheelcoh.syzygy import wheel_filtration_generators
from wheelcoh.toric import Fan
from wheelcoh.wheel import Wheel

from conftest import E


def test_z3(wheel, fan):
    z = subscheme_Z(wheel, 3, fan)
    assert set(z.cutting_divisors) == {tuple(E(7)), tuple(E(1, 5, 6, 7))}
    assert components_str(z.components) == ["E_7"]
    assert not z.empty


def test_z7(wheel, fan):
    z = subscheme_Z(wheel, 7, fan)
    assert set(z.cutting_divisors) == {tuple(E(7)), tuple(E(4, 5, 7))}
    assert components_str(z.components) == ["E_7"]


def test_z15_is_a_point(wheel, fan):
    z = subscheme_Z(wheel, 15, fan)
    assert z.cutting_divisors == tuple(tuple(x) for x in (E(1), E(1, 2, 7), E(2), E(7)))
    assert components_str(z.components) == ["E_1∩E_2∩E_7"]


def test_z11_misses_the_variety(wheel, fan):
    z = subscheme_Z(wheel, 11, fan)
    assert not z.ideal.is_unit()
    assert z.empty
    assert subscheme_Z(wheel, 11).components == (frozenset({2, 5}),)


def test_hex_report(wheel, fan):
    r = cohomology_report(wheel, fan)
    assert r.h0.empty and r.h2.zero and r.h3_zero
    assert r.vanishing_steps() == [1, 2, 4, 5, 9, 10, 12, 13]
    assert r.nonvanishing_steps() == [3, 6, 7, 8, 11, 14, 15]
    assert r.empty_support_steps() == [11]
    assert r.concentrated_in() == [-1]
    assert len(r.h1_steps) == 15


# E_1234567 = div(0, 0, 1) is principal, so shifting by it keeps every class consistent
PRINCIPAL = E(1, 2, 3, 4, 5, 6, 7)


def test_h2_divisor_from_common_hub_factor(wheel, fan):
    shifted = Wheel.create(wheel.f_out, [g * PRINCIPAL for g in wheel.f_in],
                           wheel.rim_fwd, wheel.rim_bwd)
    r = cohomology_report(shifted, fan)
    assert r.h2.divisor == tuple(PRINCIPAL)
    assert not r.h2.zero
    assert -2 in r.concentrated_in()


def test_h0_nonempty_when_spokes_share_a_factor(wheel, fan):
    shifted = Wheel.create([g * PRINCIPAL for g in wheel.f_out], wheel.f_in,
                           wheel.rim_fwd, wheel.rim_bwd)
    r = cohomology_report(shifted, fan)
    assert not r.h0.empty
    assert components_str(r.h0.components) == [f"E_{i}" for i in range(1, 8)]


def test_invalid_wheel_rejected(wheel, fan):
    with pytest.raises(InvalidWheelError, match="relation"):
        cohomology_report(perturb(wheel, "f_out", 0, 0), fan)


def test_cutting_divisors_agree_with_ideal_generators(rng):
    for _ in range(60):
        w = random_wheel(rng, rng.choice([3, 4, 5, 6]), rng.randint(1, 5))
        for formula in ("cycle", "spokes"):
            for k in range(1, w.m * (w.m - 1) // 2 + 1):
                divs = cutting_divisors(w, k, formula)
                assert divs == [tuple(g) for g in wheel_filtration_generators(w, k, formula)]


def test_cutting_divisors_k_range(wheel):
    with pytest.raises(IndexError):
        cutting_divisors(wheel, 16)


def test_affine_default_counts_every_prime(rng):
    w = random_wheel(rng, 4, 3)
    for k in range(1, 7):
        z = subscheme_Z(w, k, Fan.affine_space(3))
        assert z.components == tuple(z.ideal.minimal_primes())
