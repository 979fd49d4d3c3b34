# Copyright 2026 Canonical Ltd.
# See LICENSE file for licensing details.

from fractions import Fraction

import pytest
from conftest import HOLLOW3

from errors import (
    ComplexMismatch,
    EndpointMismatch,
    KindMismatch,
    OutOfRange,
    PointNotInSimplex,
    PointNotInStar,
    RefEndpointMismatch,
)
from geometry import Simplex, build_complex, interpolate, make_point, star
from sampling import SplitMix64, random_loop_upto, random_path, random_point_in
from thin_bundle import (
    ThinPath,
    act,
    contract,
    endpoint,
    fiber_element,
    lift,
    local_triv,
    local_triv_inv,
    path_core,
    paths_thin_equal,
)
from thin_group import core, identity, inv, reduce_all_orders
from words import PLWord, WordKind, concat

A, B, C = (0, 0), (1, 0), (0, 1)
MID_AB = ("1/2", "0")
P = (0,)
ROUND_TRIPS = 500


def pts(*points):
    return tuple(make_point(p) for p in points)


def random_chart(complex_, rng: SplitMix64):
    """Return a chart centre x, a reference path to x, a loop class g and a point y near x."""
    ref = path_core(random_path(complex_, 1 + rng.below(4), rng.next()))
    x = ref.endpoint
    g = core(random_loop_upto(complex_, 8, rng.next()))
    neighbourhood = complex_.sorted_simplices(star(complex_, x))
    y = random_point_in(complex_, neighbourhood[rng.below(len(neighbourhood))], rng, 4)
    return x, ref, g, y


@pytest.mark.parametrize(
    "complex_name, points, expected",
    [
        ("hollow3", [A, B, A, B], [A, B]),
        ("hollow3", [A, B], [A, B]),
        ("line", [P, (2,), (1,)], [P, (1,)]),
        ("hollow3", [A, A], [A]),
    ],
)
def test_path_core(request, path, complex_name, points, expected):
    complex_ = request.getfixturevalue(complex_name)
    assert path_core(path(complex_, *points)).points == pts(*expected)


def test_path_core_needs_a_path(hollow3, loop):
    with pytest.raises(KindMismatch):
        path_core(loop(hollow3, A, B, A))


def test_endpoint(hollow3, path):
    assert endpoint(path_core(path(hollow3, A, B))) == make_point(B)
    assert endpoint(path_core(path(hollow3, A))) == make_point(A)


def test_act_identity(hollow3, path):
    p = path_core(path(hollow3, A, C))
    assert act(identity(hollow3), p) == p
    assert act(core(PLWord(hollow3, pts(A, B, A), WordKind.LOOP)), p) == p


def test_act_on_a_path(hollow3, loop, path):
    g = core(loop(hollow3, A, B, C, A))
    p = path_core(path(hollow3, A, MID_AB))
    assert act(g, p).points == pts(A, B, C, A, MID_AB)


def test_act_different_complexes(hollow3, path):
    other = build_complex(HOLLOW3)
    with pytest.raises(ComplexMismatch):
        act(identity(other), path_core(path(hollow3, A, B)))


def test_action_axioms(any_complex):
    rng = SplitMix64(41)
    for _ in range(200):
        g = core(random_loop_upto(any_complex, 8, rng.next()))
        p = path_core(random_path(any_complex, rng.below(5), rng.next()))
        moved = act(g, p)
        assert endpoint(moved) == endpoint(p)
        assert act(g, act(inv(g), p)) == p
        assert act(inv(g), moved) == p


def test_action_is_free(any_complex):
    rng = SplitMix64(43)
    for _ in range(200):
        # GIVEN a random loop class and a random path, both short
        g = core(random_loop_upto(any_complex, 5, rng.next()))
        p = path_core(random_path(any_complex, rng.below(3), rng.next()))
        moved = act(g, p)
        # THEN g fixes p only if g is the identity
        assert (moved == p) == g.is_identity
        # AND the reduction of g · p does not depend on the deletion order
        word = PLWord(any_complex, concat(g.points, p.points), WordKind.PATH)
        if len(word) <= 8:
            assert reduce_all_orders(word, 8) == {moved.word}


def test_fiber_transitivity(any_complex):
    rng = SplitMix64(47)
    for _ in range(200):
        # GIVEN two random paths ending at the same vertex
        target = next(v for v in sorted(any_complex.vertices) if v != any_complex.basepoint)
        p = path_core(random_path(any_complex, rng.below(4), rng.next(), to_vertex=target))
        q = path_core(random_path(any_complex, rng.below(4), rng.next(), to_vertex=target))
        # WHEN the loop g = p · q⁻¹ is formed
        g = fiber_element(p, q)
        # THEN g moves q onto p
        assert act(g, q) == p


def test_fiber_element_needs_a_common_endpoint(hollow3, path):
    with pytest.raises(EndpointMismatch):
        fiber_element(path_core(path(hollow3, A, B)), path_core(path(hollow3, A, C)))


def test_paths_thin_equal(hollow3, path):
    assert paths_thin_equal(
        path_core(path(hollow3, A, B, A, B)), path_core(path(hollow3, A, MID_AB, B))
    )
    assert not paths_thin_equal(path_core(path(hollow3, A, B)), path_core(path(hollow3, A, C)))
    assert not paths_thin_equal(
        path_core(path(hollow3, A, B)), path_core(path(hollow3, A, C, B))
    )


def test_local_triv_with_trivial_data(hollow3, path):
    ref = path_core(path(hollow3, A))
    p = local_triv(hollow3, A, ref, identity(hollow3), MID_AB)
    assert p.points == pts(A, MID_AB)


def test_local_triv_at_the_centre(hollow3, loop, path):
    ref = path_core(path(hollow3, A, B))
    g = core(loop(hollow3, A, B, C, A))
    expected = path_core(PLWord(hollow3, concat(g.points, ref.points), WordKind.PATH))
    assert local_triv(hollow3, B, ref, g, B) == expected


def test_local_triv_inv_of_the_reference(hollow3, path):
    ref = path_core(path(hollow3, A, B, C))
    g, y = local_triv_inv(hollow3, C, ref, ref)
    assert g == identity(hollow3)
    assert y == make_point(C)


def test_local_triv_reference_mismatch(hollow3, path):
    ref = path_core(path(hollow3, A, B))
    with pytest.raises(RefEndpointMismatch):
        local_triv(hollow3, C, ref, identity(hollow3), C)
    with pytest.raises(RefEndpointMismatch):
        local_triv_inv(hollow3, C, ref, ref)


def test_local_triv_outside_the_star(hollow3, path):
    ref = path_core(path(hollow3, A))
    with pytest.raises(PointNotInStar):
        local_triv(hollow3, A, ref, identity(hollow3), ("1/2", "1/2"))
    far = path_core(path(hollow3, A, B, ("1/2", "1/2")))
    with pytest.raises(PointNotInStar):
        local_triv_inv(hollow3, A, ref, far)


def test_local_trivialization_round_trips(any_complex):
    rng = SplitMix64(53)
    for _ in range(ROUND_TRIPS):
        # GIVEN a chart around the endpoint of a random reference path
        x, ref, g, y = random_chart(any_complex, rng)
        # WHEN (g, y) is sent to a path and back
        p = local_triv(any_complex, x, ref, g, y)
        g_back, y_back = local_triv_inv(any_complex, x, ref, p)
        # THEN both round trips are exact
        assert endpoint(p) == y
        assert (g_back, y_back) == (g, y)
        assert local_triv(any_complex, x, ref, g_back, y_back) == p


def test_lift_through_an_edge(hollow3, path):
    e = path_core(path(hollow3, A, B))
    lifted = lift(hollow3, e, Simplex.of("AB"), MID_AB, 0.5)
    assert lifted.points == pts(A, MID_AB)


def test_lift_at_the_start_is_thin_equal(hollow3, path):
    e = path_core(path(hollow3, A, B))
    lifted = lift(hollow3, e, Simplex.of("AB"), B, 0.0)
    assert lifted == e
    assert paths_thin_equal(lifted, e)


def test_lift_errors(hollow3, path):
    e = path_core(path(hollow3, A))
    with pytest.raises(PointNotInSimplex):
        lift(hollow3, e, Simplex.of("BC"), B, 0.5)
    with pytest.raises(PointNotInSimplex):
        lift(hollow3, e, Simplex.of("AB"), C, 0.5)
    with pytest.raises(OutOfRange):
        lift(hollow3, e, Simplex.of("AB"), B, 1.5)


def test_lift_along_a_segment(any_complex):
    rng = SplitMix64(59)
    for _ in range(100):
        # GIVEN a path e ending at x and a segment from x to z inside a simplex of its star
        e = path_core(random_path(any_complex, 1 + rng.below(4), rng.next()))
        x = e.endpoint
        neighbourhood = any_complex.sorted_simplices(star(any_complex, x))
        sigma = neighbourhood[rng.below(len(neighbourhood))]
        z = random_point_in(any_complex, sigma, rng, 4)
        # WHEN e is lifted to points gamma(t) on the open segment
        prefixes = set()
        for t in (Fraction(1, 5), Fraction(2, 5), Fraction(3, 5), Fraction(4, 5)):
            position = interpolate(x, z, t)
            lifted = lift(any_complex, e, sigma, position, float(t))
            # THEN the lift is a prefix of e followed by gamma(t)
            assert endpoint(lifted) == position
            prefix = lifted.points[:-1]
            assert e.points[: len(prefix)] == prefix
            # Passing through a point of e shortens the word there.
            if position not in e.points:
                prefixes.add(prefix)
        # AND away from e the prefix does not move
        assert len(prefixes) <= 1
        assert paths_thin_equal(lift(any_complex, e, sigma, x, 0.0), e)


def test_contraction_ends_at_the_basepoint(any_complex):
    rng = SplitMix64(61)
    for _ in range(100):
        p = path_core(random_path(any_complex, rng.below(6), rng.next()))
        steps = contract(p)
        assert steps[0] == p
        assert steps[-1].points == (any_complex.basepoint_coords,)
        assert [len(s.points) for s in steps] == list(range(len(p.points), 0, -1))
        assert all(isinstance(s, ThinPath) for s in steps)
