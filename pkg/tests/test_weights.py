from fractions import Fraction

import pytest

from rootspace import cartan, roots, weights
from rootspace.errors import JEqualsWholeSet, NotDominantIntegralOnJ


def _ctx(label):
    c = cartan.build_cartan(cartan.parse_type(label))
    return c, roots.generate_finite(c)


def test_integrability_patterns():
    c, _ = _ctx("A2")
    assert weights.integrability(c, weights.HighestWeight.of([1, 1])) == (1, 2)
    assert weights.integrability(
        c, weights.HighestWeight.of([1, Fraction(-1, 2)])) == (1,)
    assert weights.integrability(
        c, weights.HighestWeight.of([Fraction(1, 3), -1])) == ()


def test_adjoint_weights_are_roots_and_zero():
    c, rs = _ctx("A2")
    win = weights.integrable_weights(c, weights.HighestWeight.of([1, 1]), 100)
    assert win.exact
    # depths of lambda - mu for mu in Delta u {0}, lambda = theta
    assert win.depths == frozenset({
        (0, 0), (1, 0), (0, 1), (1, 1), (2, 1), (1, 2), (2, 2)})


def test_fundamental_representation_a2():
    c, rs = _ctx("A2")
    win = weights.integrable_weights(c, weights.HighestWeight.of([1, 0]), 100)
    assert win.exact and len(win.depths) == 3


def test_truncation_marks_inexact():
    c, rs = _ctx("A2")
    win = weights.integrable_weights(c, weights.HighestWeight.of([3, 3]), 2)
    assert not win.exact


def test_integrable_weights_rejects_bad_pairings():
    c, _ = _ctx("A2")
    with pytest.raises(NotDominantIntegralOnJ):
        weights.integrable_weights(c, weights.HighestWeight.of([-1, 0]), 5)


def test_minimal_generators_match_unit_height():
    c, rs = _ctx("A6")
    gens = weights.minimal_generators(rs, [1, 3, 6])
    assert len(gens) == 8
    assert all(roots.height_I(c, g, (2, 4, 5)) == 1 for g in gens)
    with pytest.raises(JEqualsWholeSet):
        weights.minimal_generators(rs, list(c.nodes))


def test_verma_weights_fill_the_cone():
    c, rs = _ctx("A2")
    spec = weights.ModuleSpec("verma", c, weights.HighestWeight.of([1, 1]))
    win = weights.weights_of_module(spec, rs, 3)
    expect = {(i, j) for i in range(4) for j in range(4) if i + j <= 3}
    assert win.depths == frozenset(expect)
    assert not win.exact


def test_simple_non_integral_direction():
    c, rs = _ctx("A2")
    hw = weights.HighestWeight.of([1, Fraction(-1, 2)])
    spec = weights.ModuleSpec("simple", c, hw)
    win = weights.weights_of_module(spec, rs, 3)
    # top part lambda - {0, alpha1} minus the cone over Delta_{{2},1}
    assert (0, 0) in win.depths and (1, 0) in win.depths
    assert (0, 1) in win.depths and (2, 1) in win.depths
    assert (2, 0) not in win.depths


@pytest.mark.parametrize("label", ["A2", "B2"])
@pytest.mark.parametrize("kind", ["simple", "verma"])
def test_two_cone_formulas_agree(label, kind):
    c = cartan.build_cartan(cartan.parse_type(label))
    rs = roots.generate_finite(c)
    half = Fraction(-1, 2)
    for lam in [(half, half), (1, half), (half, 1), (1, 1)]:
        spec = weights.ModuleSpec(kind, c, weights.HighestWeight.of(lam))
        assert weights.weights_two_ways_agree(spec, rs, 8)


def test_hull_lattice_recovery_b2():
    c, rs = _ctx("B2")
    spec = weights.ModuleSpec("simple", c, weights.HighestWeight.of([1, 1]))
    assert weights.hull_lattice_recover(spec, rs, 7)


def test_orbit_depths_size():
    c, _ = _ctx("B2")
    orb = weights._orbit_depths(c, weights.HighestWeight.of([1, 1]))
    assert len(orb) == 8  # regular orbit = |W(B2)|
