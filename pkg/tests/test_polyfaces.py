from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from rootspace import cartan, polyfaces, roots
from rootspace.errors import DimensionTooLarge, SingularCartan

F = Fraction


def _hexagon():
    c = cartan.build_cartan(cartan.parse_type("A2"))
    rs = roots.generate_finite(c)
    return c, [tuple(map(F, r)) for r in rs.all_roots()]


def test_hexagon_hull():
    _, pts = _hexagon()
    poly = polyfaces.hull(pts)
    assert len(poly.facets) == 6 and not poly.equations
    assert polyfaces.contains(poly, (F(0), F(0)))
    assert not polyfaces.contains(poly, (F(2), F(0)))


def test_lower_dimensional_hull():
    pts = [(F(0), F(0), F(0)), (F(1), F(1), F(0))]
    poly = polyfaces.hull(pts)
    assert len(poly.equations) == 2 and len(poly.facets) == 2
    assert polyfaces.contains(poly, (F(1, 2), F(1, 2), F(0)))
    assert not polyfaces.contains(poly, (F(1, 2), F(0), F(0)))


def test_cone_with_rays():
    poly = polyfaces.hull([(F(0), F(0))], rays=[(F(1), F(0)), (F(0), F(1))])
    assert len(poly.facets) == 2
    assert polyfaces.contains(poly, (F(5), F(7)))
    assert not polyfaces.contains(poly, (F(-1), F(0)))


def test_dimension_guard():
    with pytest.raises(DimensionTooLarge):
        polyfaces.hull([tuple(F(0) for _ in range(5))])


def test_exposed_face_and_maximizer():
    _, pts = _hexagon()
    theta = (F(1), F(1))
    face = polyfaces.exposed_face(pts, (F(1), F(1)))
    assert theta in face
    assert polyfaces.is_maximizer(face, pts)
    # 0 is interior, so its smallest face is everything
    assert polyfaces.smallest_face_containing([(F(0), F(0))], pts) == sorted(pts)
    # non-adjacent vertices do not span a face
    assert not polyfaces.is_maximizer([(F(1), F(0)), (F(0), F(1))], pts)
    # an edge is
    assert polyfaces.is_maximizer([(F(1), F(1)), (F(0), F(1))], pts)


def test_all_face_sets_hexagon():
    _, pts = _hexagon()
    faces = polyfaces.all_face_sets(pts)
    assert len(faces) == 13  # whole + 6 edges + 6 vertices


def test_fundamental_weights_a2():
    c = cartan.build_cartan(cartan.parse_type("A2"))
    om = polyfaces.fundamental_weights(c)
    assert om[1] == (F(2, 3), F(1, 3))
    assert om[2] == (F(1, 3), F(2, 3))
    ca = cartan.build_cartan(cartan.parse_type("A1~1"))
    with pytest.raises(SingularCartan):
        polyfaces.fundamental_weights(ca)


def test_standard_functional_matches_example():
    c = cartan.build_cartan(cartan.parse_type("A2"))
    rs = roots.generate_finite(c)
    pts = [tuple(map(F, r)) for r in rs.all_roots()] + [(F(0), F(0))]
    psi = polyfaces.standard_functional(c, roots.IDENTITY, [1])
    assert set(map(tuple, polyfaces.exposed_face(pts, psi))) == {
        (F(0), F(1)), (F(1), F(1))}
    psi0 = polyfaces.standard_functional(c, roots.IDENTITY, [])
    assert set(map(tuple, polyfaces.exposed_face(pts, psi0))) == {(F(1), F(1))}


@st.composite
def _unimodular(draw):
    # product of elementary shear/swap matrices, exactly invertible over Z
    m = [[1, 0], [0, 1]]
    for _ in range(draw(st.integers(0, 4))):
        k = draw(st.integers(-3, 3))
        if draw(st.booleans()):
            m = [[m[0][0] + k * m[1][0], m[0][1] + k * m[1][1]], m[1]]
        else:
            m = [m[1], m[0]]
    return m


@settings(max_examples=25, deadline=None)
@given(_unimodular(), st.data())
def test_maximizer_invariant_under_unimodular_maps(m, data):
    _, pts = _hexagon()
    sub = data.draw(st.sets(st.sampled_from(pts), min_size=1, max_size=3))
    Y = sorted(sub)

    def apply(p):
        return (m[0][0] * p[0] + m[0][1] * p[1],
                m[1][0] * p[0] + m[1][1] * p[1])

    before = polyfaces.is_maximizer(Y, pts)
    after = polyfaces.is_maximizer([apply(y) for y in Y], [apply(p) for p in pts])
    assert before == after
