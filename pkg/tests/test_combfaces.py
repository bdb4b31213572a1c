import pytest

from rootspace import cartan, combfaces, roots, weights
from rootspace.errors import RootspaceError, TooLarge


def _rs(label, H=None):
    c = cartan.build_cartan(cartan.parse_type(label))
    return roots.root_system(c, H)


def _a2():
    rs = _rs("A2")
    return (rs, combfaces.roots_ambient(rs).elements,
            combfaces.roots_ambient(rs, with_zero=True).elements)


def test_singletons_in_delta_are_closed():
    rs, X, _ = _a2()
    for y in X:
        ok, _w = combfaces.is_212_closed({y}, X)
        assert ok


def test_pair_with_zero_witness():
    rs, _, X0 = _a2()
    ok, wit = combfaces.is_212_closed({(1, 0), (0, 1)}, X0)
    assert not ok
    y1, y2, x1, x2 = wit
    assert tuple(a + b for a, b in zip(y1, y2)) == tuple(
        a + b for a, b in zip(x1, x2))
    assert {x1, x2} == {(0, 0), (1, 1)}


def test_closure_infects_everything_from_zero():
    rs, _, X0 = _a2()
    assert combfaces.closure_212({(1, 0), (-1, 0)}, X0) == frozenset(X0)
    assert combfaces.closure_212({(1, 0), (0, 1)}, X0) == frozenset(X0)


def test_closure_is_idempotent_on_closed_sets():
    rs, X, _ = _a2()
    for s in combfaces.enumerate_212(X):
        assert combfaces.closure_212(s, X) == frozenset(s)


def test_enumerate_a2_counts():
    rs, X, X0 = _a2()
    e = combfaces.enumerate_212(X)
    e0 = combfaces.enumerate_212(X0)
    assert len(e) == 26 and len(e0) == 12
    by_size = {}
    for s in e:
        by_size[len(s)] = by_size.get(len(s), 0) + 1
    assert by_size == {1: 6, 2: 12, 3: 8}


def test_enumerate_a1():
    rs = _rs("A1")
    e = combfaces.enumerate_212(combfaces.roots_ambient(rs).elements)
    assert e == [((-1,),), ((1,),)]


def test_enumerate_guard():
    with pytest.raises(TooLarge):
        combfaces.enumerate_212([(i,) for i in range(21)])


def test_descriptor_realization_example():
    rs = _rs("A2")
    got = combfaces.realize_standard_roots(rs, roots.IDENTITY, (1,))
    assert got == frozenset({(1, 1), (0, 1)})
    exc = combfaces.realize_exceptional_a2(rs, "delta_plus", roots.IDENTITY)
    assert exc == frozenset({(1, 0), (0, 1), (1, 1)})
    alt = combfaces.realize_exceptional_a2(rs, "alt_triple", roots.IDENTITY)
    assert alt == frozenset({(1, 0), (0, 1), (-1, -1)})


def test_classify_roundtrip():
    rs, X, _ = _a2()
    descs = combfaces.all_root_face_descriptors(rs)
    res = combfaces.classify({(0, 1), (1, 1)}, X, descs)
    assert res.status == "face"
    assert res.descriptor.variant == "standard_roots"
    res2 = combfaces.classify({(1, 0), (-1, 0)}, X, descs)
    assert res2.status == "not_closed" and res2.witness is not None


def test_weak_face_refutation_of_pi():
    rs, X, _ = _a2()
    status, wit = combfaces.is_weak_face_bounded({(1, 0), (0, 1)}, X, 6, 3)
    assert status == "refuted"
    left, right = wit
    ls = [0, 0]
    total_l = total_r = 0
    for v, r in left:
        ls = [a + r * b for a, b in zip(ls, v)]
        total_l += r
    rs_ = [0, 0]
    for v, t in right:
        rs_ = [a + t * b for a, b in zip(rs_, v)]
        total_r += t
    assert ls == rs_ and total_l == total_r > 0
    assert any(v not in {(1, 0), (0, 1)} for v, _t in right)


def test_weak_face_no_violation_for_vertex():
    rs, X, _ = _a2()
    status, wit = combfaces.is_weak_face_bounded({(1, 1)}, X, 6, 3)
    assert status == "no_violation_found" and wit is None


def test_affine_lift_untwisted():
    rs = _rs("A2~1", 9)
    L = combfaces.affine_lift({(0, 1, 0)}, rs, 9)
    d = rs.delta
    assert (0, 1, 0) in L and tuple(a + b for a, b in zip((0, 1, 0), d)) in L
    assert all(rs.contains(x) for x in L)


def test_affine_lift_twisted_long_step():
    rs = _rs("A2~2", 12)
    L = combfaces.affine_lift({(0, 1)}, rs, 12)
    d = rs.delta
    one = tuple(a + b for a, b in zip((0, 1), d))
    two = tuple(a + 2 * b for a, b in zip((0, 1), d))
    assert one not in L and two in L


def test_affine_lift_empty():
    rs = _rs("A2~1", 9)
    assert combfaces.affine_lift(set(), rs, 9) == frozenset()


def test_imaginary_roots_break_closedness():
    rs = _rs("A2~1", 9)
    X = rs.all_roots()
    ok, wit = combfaces.is_212_closed({rs.delta}, X)
    assert not ok


def test_equivalence_check_counts():
    rs = _rs("A2~1", 9)
    rep = combfaces.affine_212_equivalence_check(rs, 9)
    assert rep["closed_finite"] == 26 == rep["closed_lifts"]
    assert rep["forward_ok"] and rep["backward_ok"]


def test_weight_ambient_faces_b2():
    c = cartan.build_cartan(cartan.parse_type("B2"))
    hw = weights.HighestWeight.of([1, 1])
    win = weights.integrable_weights(c, hw, 100)
    X = combfaces.weights_ambient(win).elements
    e = combfaces.enumerate_212(X, proper=False)
    std = combfaces.all_weight_face_descriptors(c, hw, win)
    assert {frozenset(s) for s in e} == {s for _d, s in std}


def test_ambient_set_validation():
    with pytest.raises(RootspaceError):
        combfaces.AmbientSet("roots", ((0, 0), (1, 0)))
    with pytest.raises(RootspaceError):
        combfaces.AmbientSet("roots0", ((1, 0),))
