import pytest

from wheelcoh.monomial import Monomial, Polynomial
from wheelcoh.random_inputs import perturb, random_wheel
from wheelcoh.syzygy import beta_generators
from wheelcoh.toric import Fan, class_group
from wheelcoh.wheel import (NotAComplexError, Wheel, _compose, alpha, alpha_generators,
                            build_complex, derive_rim_bwd, relation_failures, validate_wheel)

from conftest import E


def test_hex_wheel_is_valid(wheel, fan):
    report = validate_wheel(wheel, fan)
    assert report.valid, report.messages()
    cg = class_group(fan)
    assert report.classes["L_4"] == report.classes["L_1"] == cg.divisor_class([-x for x in E(1, 6)])
    assert report.classes["L_{1,2}"] == cg.divisor_class(E(3, 4, 5))
    assert report.classes["L_{5,6}"] == report.classes["L_{1,2}"]


def test_derived_rim_bwd_matches_diagram(wheel):
    assert derive_rim_bwd(wheel.f_out, wheel.rim_fwd) == list(wheel.rim_bwd)


def test_derive_rim_bwd_rejects_non_effective():
    with pytest.raises(ValueError, match="not effective"):
        derive_rim_bwd([Monomial([1]), Monomial([0]), Monomial([0])],
                       [Monomial([0]), Monomial([0]), Monomial([0])])


def test_create_checks_lengths():
    with pytest.raises(ValueError):
        Wheel.create([Monomial([1])] * 2, [Monomial([1])] * 2, [Monomial([1])] * 2)
    with pytest.raises(ValueError):
        Wheel.create([Monomial([1])] * 3, [Monomial([1])] * 2, [Monomial([1])] * 3)


def test_complex_compositions_vanish(wheel):
    cx = build_complex(wheel)
    assert all(p.is_zero() for p in _compose(cx.phi1, cx.phi2)[0])
    assert all(row[0].is_zero() for row in _compose(cx.phi2, cx.phi3))
    assert cx.degrees["L"] == Monomial.one(7)
    assert cx.degrees["L'"] == E(1, 2, 3, 4, 5, 6, 7)  # hub degree


def test_hex_alphas(wheel):
    gens = alpha_generators(wheel)
    assert [g for _, g in gens] == [E(), E(), E(7), E(), E(), E(7)]
    betas = beta_generators(wheel.f_out)
    assert alpha(wheel, 1) == betas[0]
    assert alpha(wheel, 3) == betas[2].scale(E(7))
    assert alpha(wheel, 6) == betas[5].scale(E(7), -1)


def test_random_wheels_are_valid(rng):
    for _ in range(30):
        w = random_wheel(rng, rng.choice([3, 4, 5]), rng.randint(1, 4))
        assert validate_wheel(w, Fan.affine_space(w.d)).valid
        build_complex(w)
        alpha_generators(w)


def test_perturbations_are_caught(wheel):
    bad = perturb(wheel, "rim_fwd", 0, 0)
    assert relation_failures(bad) == ([1], [2])
    with pytest.raises(NotAComplexError, match=r"relation \(12\) violated at j=1"):
        build_complex(bad)
    bad = perturb(wheel, "f_in", 2, 0)
    assert relation_failures(bad) == ([], [3, 4])
    with pytest.raises(NotAComplexError, match=r"relation \(13\) violated at j=3"):
        build_complex(bad)


def test_broken_hub_relation_shows_in_classes(wheel, fan):
    # L_{1,2} computed from L_1 no longer matches L(D_{1,2}) once the hub arrow changes
    report = validate_wheel(perturb(wheel, "f_in", 0, 0), fan)
    assert report.relation13_failures == [1, 2]
    assert any("L(D_(1,2))" in msg for msg in report.class_failures)


def test_non_cartier_arrow_is_reported():
    quadric = Fan(3, [(1, 0, 1), (0, 1, 1), (-1, 0, 1), (0, -1, 1)], [(0, 1, 2, 3)])
    x = lambda *e: Monomial(e)
    w = Wheel.create([x(1, 0, 0, 0), x(1, 0, 0, 0), x(1, 0, 0, 0)],
                     [x(0, 0, 0, 0)] * 3, [x(0, 0, 0, 0)] * 3)
    report = validate_wheel(w, quadric)
    assert "D^1" in report.non_cartier
    assert not report.valid
