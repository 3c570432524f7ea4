from fractions import Fraction

import pytest

from multiapolar.apolar import DualSubspace, annihilator_degree, contract
from multiapolar.exactla import DEFAULT_PRIME, Field, RATIONALS
from multiapolar.points import (
    Point,
    PointConfiguration,
    SmallCharacteristicError,
    check_add_point,
    check_generic_hf,
    check_nested_inequality,
    evaluation_dual,
    hilbert_function_points,
    ideal_degree_piece,
    nested_bound_report,
    random_configuration,
)
from multiapolar.ring import Space, Window
from multiapolar.rng import CounterRng

P1 = Space((1,))
P2 = Space((2,))
P6 = Space((6,))
P1P1 = Space((1, 1))
GF = Field(DEFAULT_PRIME)


def simple(space, field, coords):
    return PointConfiguration.make(space, field, [(c, 1) for c in coords])


# -- evaluation duals ---------------------------------------------------------------

def test_evaluation_dual_coordinate_point():
    Z = simple(P1, RATIONALS, [((1, 0),)])
    ev = evaluation_dual(P1, RATIONALS, Z.points[0], (2,))
    assert ev.terms == (((2, 0), Fraction(1)),)


def test_evaluation_dual_ones_point():
    Z = simple(P1, RATIONALS, [((1, 1),)])
    ev = evaluation_dual(P1, RATIONALS, Z.points[0], (2,))
    assert ev.coefficient_vector() == (Fraction(1),) * 3


def test_evaluation_dual_contraction_identity():
    # theta . ev_L(p) = theta(p) * ev_{L-deg theta}(p), exactly
    rng = CounterRng(101, 0)
    Z = random_configuration(P2, GF, 1, rng)
    p = Z.points[0]
    ev4 = evaluation_dual(P2, GF, p, (4,))
    ev3 = evaluation_dual(P2, GF, p, (3,))
    theta = (0, 1, 0)
    value = p.blocks[0][1]  # evaluation of x1 at p
    assert contract(theta, ev4) == ev3.scale(value)


def test_evaluation_dual_rejects_zero_block():
    with pytest.raises(ValueError):
        PointConfiguration.make(P1, RATIONALS, [(((0, 0),), 1)])


# -- ideal pieces and Hilbert functions --------------------------------------------------

def test_single_point_has_codimension_one():
    Z = simple(P2, RATIONALS, [((1, 2, 3),)])
    for D in [(1,), (2,), (3,)]:
        assert ideal_degree_piece(Z, D).codim == 1
        assert hilbert_function_points(Z, D) == 1
    assert hilbert_function_points(Z, (0,)) == 1


def test_two_double_points_on_p6_give_13():
    # the defective case: two general double points impose only 13 conditions
    # on the 28-dimensional space of quadrics
    for field in (RATIONALS, GF):
        rng = CounterRng(2026, 0)
        Z = random_configuration(P6, field, 2, rng, multiplicity=2)
        assert Z.degree() == 14
        assert hilbert_function_points(Z, (2,)) == 13
        assert ideal_degree_piece(Z, (2,)).dim == 28 - 13


def test_two_double_points_on_p2_are_defective_too():
    rng = CounterRng(7, 0)
    Z = random_configuration(P2, GF, 2, rng, multiplicity=2)
    assert hilbert_function_points(Z, (2,)) == 5  # not 6: the double line


def test_three_random_points_impose_independent_linear_conditions():
    rng = CounterRng(3, 0)
    Z = random_configuration(P2, GF, 3, rng)
    assert hilbert_function_points(Z, (1,)) == 3


def test_hilbert_at_zero_is_one():
    rng = CounterRng(4, 0)
    for r in (1, 3):
        Z = random_configuration(P1P1, GF, r, rng)
        assert hilbert_function_points(Z, (0, 0)) == 1


def test_small_characteristic_refused_for_fat_points():
    Z = PointConfiguration.make(P2, Field(3), [(((1, 0, 0),), 2)])
    with pytest.raises(SmallCharacteristicError):
        hilbert_function_points(Z, (3,))
    # simple points are fine over any prime
    W = PointConfiguration.make(P2, Field(3), [(((1, 0, 0),), 1)])
    assert hilbert_function_points(W, (3,)) == 1


def test_fat_point_rank_matches_local_degree():
    # one mu-fat point imposes C(n + mu - 1, n) conditions once the degree
    # is large enough
    rng = CounterRng(9, 0)
    for space, mu, D in [(P2, 2, (2,)), (P2, 3, (3,)), (P1P1, 2, (2, 2))]:
        Z = random_configuration(space, GF, 1, rng, multiplicity=mu)
        assert hilbert_function_points(Z, D) == Z.degree()


# -- duality bridge ----------------------------------------------------------------------

def test_ideal_piece_is_joint_annihilator_of_evaluations():
    rng = CounterRng(12, 0)
    Z = random_configuration(P1P1, GF, 3, rng)
    L = (2, 2)
    piece = ideal_degree_piece(Z, L)
    anns = [annihilator_degree(
        DualSubspace.span([evaluation_dual(P1P1, GF, p, L)]), L)
        for p in Z.points]
    joint = anns[0]
    for a in anns[1:]:
        joint = joint.intersect(a)
    assert piece == joint


# -- randomized checks --------------------------------------------------------------------

def test_check_generic_hf_small_run():
    rep = check_generic_hf(P2, 5, Window.box((4,)), trials=20, seed=1)
    assert rep["pass_fraction"] == 1.0
    rep = check_generic_hf(P1P1, 3, Window.box((2, 2)), trials=20, seed=2)
    assert rep["pass_fraction"] == 1.0


def test_check_generic_hf_r1_always_passes():
    rep = check_generic_hf(P2, 1, Window.box((3,)), trials=10, seed=3)
    assert rep["passed"] == 10


def test_check_generic_hf_deterministic_and_thread_invariant():
    a = check_generic_hf(P2, 4, Window.box((3,)), trials=12, seed=5, threads=1)
    b = check_generic_hf(P2, 4, Window.box((3,)), trials=12, seed=5, threads=4)
    assert a == b


def test_check_add_point_empty_and_random():
    empty = PointConfiguration.make(P2, GF, [])
    assert check_add_point(empty, Point(((1, 2, 3),)), Window.box((3,)))
    rng = CounterRng(21, 0)
    Z = random_configuration(P2, GF, 2, rng)
    p = Point(tuple(rng.nonzero_vector(GF, 3) for _ in range(1)))
    assert check_add_point(Z, p, Window.box((3,)))


def test_check_add_point_collinear_witness():
    # a third point on the line through two others breaks the recursion in
    # degree 1: h stays 2 instead of reaching 3
    Z = simple(P2, GF, [((1, 0, 0),), ((0, 1, 0),)])
    on_line = Point(((1, 1, 0),))
    assert not check_add_point(Z, on_line, Window.box((1,)))
    assert hilbert_function_points(
        PointConfiguration.make(P2, GF, list(Z.points) + [on_line]), (1,)) == 2


def test_check_add_point_rejects_support_member():
    Z = simple(P2, GF, [((1, 0, 0),)])
    with pytest.raises(ValueError):
        check_add_point(Z, Point(((2, 0, 0),)), Window.box((1,)))  # same point


def test_nested_inequality_examples():
    rng = CounterRng(33, 0)
    R = random_configuration(P2, GF, 4, rng)
    assert check_nested_inequality(R, R, Window.box((2,)))
    # 4 points containing a collinear triple
    coords = [((1, 0, 0),), ((0, 1, 0),), ((1, 1, 0),), ((0, 0, 1),)]
    R = simple(P2, GF, coords)
    sub = simple(P2, GF, coords[:3])
    assert check_nested_inequality(sub, R, Window.box((1,)))
    assert hilbert_function_points(sub, (1,)) == 2
    assert hilbert_function_points(R, (1,)) == 3  # forced below 4 by the triple
    with pytest.raises(ValueError):
        check_nested_inequality(R, sub, Window.box((1,)))


def test_nested_inequality_random_pairs():
    rng = CounterRng(35, 0)
    for trial in range(5):
        sub_rng = rng.spawn(trial)
        R = random_configuration(P2, GF, 5, sub_rng)
        sub = PointConfiguration(P2, GF, R.points[:2])
        assert check_nested_inequality(sub, R, Window.box((3,)))


def test_generic_linear_rank_on_projective_spaces():
    # random simple configurations see min(r, n+1) independent linear conditions
    rng = CounterRng(40, 0)
    for n in (2, 3, 4):
        space = Space((n,))
        for r in (1, n, n + 1, n + 3):
            Z = random_configuration(space, GF, r, rng.spawn(n, r))
            assert hilbert_function_points(Z, (1,)) == min(r, n + 1)


def test_hilbert_bounded_by_degree_and_window_monotone():
    # h never exceeds the total degree of the scheme, and within the window
    # it is empirically nondecreasing along the componentwise order
    rng = CounterRng(44, 0)
    for trial in range(4):
        sub = rng.spawn(trial)
        mult = 1 + sub.integer(2)
        Z = random_configuration(P1P1, GF, 2, sub, multiplicity=mult)
        window = Window.box((3, 3))
        h = {D: hilbert_function_points(Z, D) for D in window}
        for D in window:
            assert h[D] <= Z.degree()
            for i in range(2):
                below = list(D)
                below[i] -= 1
                if below[i] >= 0:
                    assert h[tuple(below)] <= h[D]


def test_nested_bound_report_p6():
    rng = CounterRng(2026, 0)
    Z = random_configuration(P6, GF, 2, rng, multiplicity=2)
    rep = nested_bound_report(Z, 28, (2,))
    assert rep["h_sub"] == 13
    assert rep["bound"] == 27
    assert rep["generic"] == 28
    assert rep["below_generic"]


# -- configuration plumbing ------------------------------------------------------------

def test_configuration_normalization_and_json():
    Z = PointConfiguration.make(P1P1, GF, [(((2, 4), (3, 0)), 1)])
    assert Z.points[0].blocks == ((1, 2), (1, 0))
    data = Z.to_json()
    assert PointConfiguration.from_json(P1P1, data) == Z
    W = PointConfiguration.make(P2, RATIONALS, [(((Fraction(1, 2), 1, 0),), 2)])
    assert PointConfiguration.from_json(P2, W.to_json()) == W


def test_configuration_validation():
    with pytest.raises(ValueError):
        PointConfiguration.make(P2, GF, [(((1, 0),), 1)])  # wrong block length
    with pytest.raises(ValueError):
        PointConfiguration.make(P2, GF, [(((1, 0, 0),), 0)])  # bad multiplicity
    with pytest.raises(ValueError):
        PointConfiguration.make(P1P1, GF, [(((1, 0),), 1)])  # missing block
