import pytest

from rootspace import cartan, roots
from rootspace.errors import EmptyI, NotFiniteType, WindowTooSmall


def _rs(label, H=None):
    c = cartan.build_cartan(cartan.parse_type(label))
    return roots.root_system(c, H)


@pytest.mark.parametrize("label,count", [
    ("A1", 1), ("A2", 3), ("A6", 21), ("B2", 4), ("C3", 9), ("D4", 12),
    ("G2", 6), ("F4", 24), ("E6", 36),
])
def test_positive_root_counts(label, count):
    rs = _rs(label)
    assert len(rs.positive_roots) == count
    assert roots.positive_root_count(rs.cartan.type_label) == count


def test_a2_positive_roots():
    rs = _rs("A2")
    assert rs.positive_roots == {(1, 0), (0, 1), (1, 1)}


def test_g2_highest_root():
    rs = _rs("G2")
    assert max(rs.positive_roots, key=roots.height) == (3, 2)


def test_affine_needs_window():
    c = cartan.build_cartan(cartan.parse_type("A1~1"))
    with pytest.raises(WindowTooSmall):
        roots.root_system(c)
    with pytest.raises(NotFiniteType):
        roots.generate_finite(c)


def test_affine_window_contains_imaginary_roots():
    rs = _rs("A1~1", 8)
    d = rs.delta
    assert d == (1, 1)
    for n in range(1, 5):
        assert tuple(n * v for v in d) in rs.positive_roots


def test_twisted_a2_root_pattern():
    # alpha1 recurs only with even multiples of delta; delta + alpha1 is not
    # a root, 2*delta + alpha1 is
    rs = _rs("A2~2", 12)
    d = rs.delta
    a1 = (0, 1)
    assert tuple(x + y for x, y in zip(a1, d)) not in rs.positive_roots
    assert tuple(x + 2 * y for x, y in zip(a1, d)) in rs.positive_roots


def test_unit_height_set_requires_nonempty_I():
    rs = _rs("A2")
    with pytest.raises(EmptyI):
        roots.unit_I_height_set(rs, [])


def test_unit_height_affine_includes_delta():
    rs = _rs("A1~1", 8)
    got = roots.unit_I_height_set(rs, [1])
    assert set(got) == {(0, 1), (1, 1), (2, 1)}  # alpha1, delta, delta+alpha1


def test_classify_root_lengths():
    rs = _rs("A2~2", 12)
    assert roots.classify_root(rs, tuple(rs.delta))[0] == "imaginary"
    assert roots.classify_root(rs, (0, 1)) == ("real", "long")
    assert roots.classify_root(rs, (1, 0)) == ("real", "short")


def test_finite_part_sets_twisted():
    rs = _rs("A2~2", 12)
    ring, short, long_ = roots.finite_part_sets(rs)
    assert ring == {(0, 1), (0, -1)}
    assert short == set() and long_ == ring


def test_finite_part_sets_untwisted_simply_laced():
    rs = _rs("A2~1", 9)
    ring, short, long_ = roots.finite_part_sets(rs)
    assert len(ring) == 6 and short == long_ == ring


@pytest.mark.parametrize("label,order", [("A2", 6), ("B2", 8), ("G2", 12)])
def test_weyl_group_orders(label, order):
    c = cartan.build_cartan(cartan.parse_type(label))
    assert len(roots.weyl_group(c)) == order


def test_orbit_of_highest_root():
    c = cartan.build_cartan(cartan.parse_type("A2"))
    orb = roots.orbit(c, (1, 2), (1, 1))
    assert len(orb) == 6  # all roots of A2


def test_reflection_involution():
    c = cartan.build_cartan(cartan.parse_type("G2"))
    rs = roots.generate_finite(c)
    for b in rs.all_roots():
        for node in c.nodes:
            assert roots.reflect_root(c, roots.reflect_root(c, b, node), node) == b
