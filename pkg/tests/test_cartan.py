from fractions import Fraction

import pytest

from rootspace import cartan
from rootspace.errors import IllegalType


def test_parse_finite():
    t = cartan.parse_type("A6")
    assert (t.family, t.rank, t.twist) == ("A", 6, None)
    assert not t.is_affine


def test_parse_affine_twists():
    assert cartan.parse_type("A2~1").twist == 1
    assert cartan.parse_type("A2~2").twist == 2
    assert cartan.parse_type("D4~3").twist == 3


@pytest.mark.parametrize("bad", ["A0", "B1", "C1", "D3", "E5", "E9", "F5",
                                 "G3", "H2", "A1~2", "D3~1", "E6~3", "x",
                                 "A2~4", ""])
def test_illegal_labels_rejected(bad):
    with pytest.raises(IllegalType):
        cartan.parse_type(bad)


def test_a2_matrix():
    c = cartan.build_cartan(cartan.parse_type("A2"))
    assert c.matrix == ((2, -1), (-1, 2))
    assert c.nodes == (1, 2)


def test_b2_symmetrizer_and_form():
    c = cartan.build_cartan(cartan.parse_type("B2"))
    assert c.matrix == ((2, -1), (-2, 2))
    assert c.symmetrizer == (Fraction(2), Fraction(1))
    # long simple root has squared length 4, short has 2
    assert cartan.form_on_vectors(c, (1, 0), (1, 0)) == 4
    assert cartan.form_on_vectors(c, (0, 1), (0, 1)) == 2


def test_g2_matrix():
    c = cartan.build_cartan(cartan.parse_type("G2"))
    assert c.matrix == ((2, -3), (-1, 2))


def test_untwisted_affine_marks():
    c = cartan.build_cartan(cartan.parse_type("A2~1"))
    assert c.nodes == (0, 1, 2)
    assert cartan.marks(c) == (1, 1, 1)
    c = cartan.build_cartan(cartan.parse_type("G2~1"))
    assert cartan.marks(c) == (1, 3, 2)  # theta = 3 alpha1 + 2 alpha2


def test_twisted_affine_matrices():
    c = cartan.build_cartan(cartan.parse_type("A2~2"))
    assert c.matrix == ((2, -4), (-1, 2))
    assert cartan.marks(c) == (2, 1)
    c = cartan.build_cartan(cartan.parse_type("D4~3"))
    g = cartan.build_cartan(cartan.parse_type("G2~1"))
    assert c.matrix == tuple(zip(*g.matrix))


def test_affine_matrix_is_singular_with_positive_kernel():
    c = cartan.build_cartan(cartan.parse_type("A2~2"))
    m = cartan.marks(c)
    n = c.size
    assert all(sum(c.matrix[i][j] * m[j] for j in range(n)) == 0
               for i in range(n))


def test_subsystem_inherits_symmetrizer():
    c = cartan.build_cartan(cartan.parse_type("B3"))
    sub = cartan.subsystem(c, [2, 3])
    assert sub.nodes == (2, 3)
    assert sub.type_label is None
    assert sub.symmetrizer == (c.symmetrizer[1], c.symmetrizer[2])
