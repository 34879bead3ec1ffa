import random
from fractions import Fraction

import pytest

from quadkit.conditions import (CONDITION_NAMES, DIST_VARS,
                                condition_poly, condition_sign,
                                equal_angle_witness, eval_condition,
                                eval_poly_on_sextuple, identity_poly,
                                midpoint_v_formulas, run_self_check,
                                supplementary_witness, verify_all_identities,
                                verify_identity)
from quadkit.geometry import (DistSextuple, QuadConfig, gen_cyclic,
                              gen_folded, gen_tilted_kite, random_quad,
                              reflect_over_line)
from quadkit.poly import Polynomial
from quadkit.radicals import RadicalValue

FOLDED_RECT = DistSextuple(16, 9, 16, 9, 25, Fraction(49, 25))


def test_condition_poly_examples():
    assert condition_poly("P") == Polynomial.parse("a*c + b*d - e*f", DIST_VARS)
    assert condition_poly("K") == Polynomial.parse(
        "e^2*(a*b + c*d) - (a^2 + b^2)*c*d - (c^2 + d^2)*a*b", DIST_VARS)
    assert condition_poly("R_T") == Polynomial.parse(
        "(a*b - c*d)^2 - f^2*(a^2 + b^2 + c^2 + d^2 - e^2 - f^2)", DIST_VARS)
    with pytest.raises(ValueError):
        condition_poly("nope")


def test_every_condition_name_resolves():
    for name in CONDITION_NAMES:
        p = condition_poly(name)
        assert not p.is_zero


def test_all_identities_expand_to_zero():
    assert all(verify_all_identities().values())


def test_mutated_identity_fails():
    # wrong multiplier: f^2*CM instead of e^2*CM must not cancel
    t = {n: condition_poly(n) for n in ("K", "P", "Q", "R", "CM")}
    f = Polynomial.variable(DIST_VARS, "f")
    mutated = (t["K"] * t["K"] - t["P"] * t["Q"] * t["R"]) * 2 + f * f * t["CM"]
    assert not mutated.is_zero
    with pytest.raises(ValueError):
        verify_identity("I99")


def test_identities_hold_numerically_on_random_configs():
    rng = random.Random(17)
    for _ in range(200):
        d = random_quad(rng).sextuple()
        for name in ("I2", "I3", "IT", "IG"):
            assert eval_poly_on_sextuple(identity_poly(name), d).is_zero


def test_cm_self_check():
    run_self_check()


def test_eval_condition_worked_instances():
    # rectangle with sides 3, 4: Ptolemy is tight
    rect = DistSextuple(9, 16, 9, 16, 25, 25)
    assert eval_condition("P", rect).is_zero
    # folded 3-4 rectangle
    assert eval_condition("R", FOLDED_RECT).is_zero
    assert eval_condition("K", FOLDED_RECT).is_zero
    assert eval_condition("P", FOLDED_RECT) == RadicalValue.from_rational(18)
    # parallelogram a=c=2, b=d=1: the equal-angle condition is the
    # parallelogram law
    par = DistSextuple(4, 1, 4, 1, 6, 4)
    assert eval_condition("R_T", par).is_zero


def test_eval_condition_irrational_values():
    d = DistSextuple(2, 3, 5, 7, 11, 13)
    v = eval_condition("P", d)
    assert not v.is_rational()
    assert v == (RadicalValue({10: Fraction(1)}) + RadicalValue({21: Fraction(1)})
                 - RadicalValue({143: Fraction(1)}))


def test_condition_sign_trichotomy_on_cyclic():
    d = gen_cyclic(77).sextuple()
    assert condition_sign("P", d) == 0
    assert condition_sign("Q", d) == 1


def test_supplementary_witness():
    assert supplementary_witness(FOLDED_RECT)
    assert supplementary_witness(QuadConfig.of((0, 0), (1, 0), (1, 1),
                                               (0, 1)).sextuple())
    rng = random.Random(3)
    hits = 0
    for _ in range(50):
        d = random_quad(rng).sextuple()
        if supplementary_witness(d):
            hits += 1
    assert hits == 0  # generic quadrilaterals fail the witness


def test_equal_angle_witness():
    kite = QuadConfig.of((0, 0), (1, 1), (2, 0), (1, -3)).sextuple()
    assert equal_angle_witness(kite)
    par = DistSextuple(4, 1, 4, 1, 6, 4)
    assert equal_angle_witness(par)
    rng = random.Random(4)
    hits = 0
    for _ in range(50):
        if equal_angle_witness(random_quad(rng).sextuple()):
            hits += 1
    assert hits == 0


def test_witnesses_match_symbolic_zero_tests():
    rng = random.Random(19)
    for _ in range(40):
        d = random_quad(rng).sextuple()
        assert supplementary_witness(d) == eval_condition("K", d).is_zero
        assert equal_angle_witness(d) == eval_condition("K_T", d).is_zero
    for seed in range(10):
        d = gen_folded(seed).sextuple()
        assert supplementary_witness(d)
        d = gen_tilted_kite(seed).sextuple()
        assert equal_angle_witness(d)


def test_midpoint_v_formulas_folded_rectangle():
    v1, v2 = midpoint_v_formulas(FOLDED_RECT)
    want = RadicalValue.from_rational(Fraction(12, 5))
    assert v1 == want and v2 == want
    # ... and the value matches the coordinate distance between the midpoints
    rect = QuadConfig.of((0, 0), (4, 0), (4, 3), (0, 3))
    folded = reflect_over_line(rect, "D", ("A", "C"))
    m_ac_x = (folded.A.x + folded.C.x) / 2
    m_ac_y = (folded.A.y + folded.C.y) / 2
    m_bd_x = (folded.B.x + folded.D.x) / 2
    m_bd_y = (folded.B.y + folded.D.y) / 2
    dist_sq = (m_ac_x - m_bd_x) ** 2 + (m_ac_y - m_bd_y) ** 2
    assert dist_sq == Fraction(144, 25)


def test_midpoint_v_formulas_agree_on_folded_family():
    for seed in range(12):
        d = gen_folded(seed).sextuple()
        v1, v2 = midpoint_v_formulas(d)
        assert v1 == v2
        assert v1.sign() > 0 or v1.is_zero


def test_midpoint_v_formulas_reject_cyclic():
    d = gen_cyclic(9).sextuple()
    with pytest.raises(ValueError):
        midpoint_v_formulas(d)


def test_ptolemy_equality_and_inequality():
    # P = 0 on sequential cyclic configs, P > 0 off-circle (planar)
    for seed in range(15):
        assert condition_sign("P", gen_cyclic(seed, "ABCD").sextuple()) == 0
    rng = random.Random(21)
    checked = 0
    from quadkit.geometry import cocircularity
    while checked < 30:
        cfg = random_quad(rng)
        if cocircularity(cfg) == 0:
            continue
        assert condition_sign("P", cfg.sextuple()) == 1
        checked += 1


def test_k_and_s_vanish_iff_p_vanishes():
    for seed in range(15):
        d = gen_cyclic(seed).sextuple()
        assert eval_condition("K", d).is_zero
        assert eval_condition("S", d).is_zero
    rng = random.Random(2)
    for _ in range(30):
        d = random_quad(rng).sextuple()
        p_zero = eval_condition("P", d).is_zero
        ks_zero = (eval_condition("K", d).is_zero
                   and eval_condition("S", d).is_zero)
        assert p_zero == ks_zero
