"""Cartan matrices for finite simple and affine Kac-Moody types.

A type label is written ``A6`` (finite) or ``A2~1`` / ``A2~2`` / ``D4~3``
(affine, with the twist after ``~``).  Matrices follow the convention
``a[i][j] = <alpha_j, alpha_i^vee> = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i)``,
nodes ordered as in Kac's tables: finite types use labels 1..rank (Bourbaki
numbering), affine types add the node 0.

The invariant bilinear form is ``(alpha_i, alpha_j) = d_i a[i][j]`` where the
symmetrizer ``d`` is the minimal positive integer vector with ``d_i a_ij``
symmetric; long roots then have squared length ``2 * (max length ratio)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .errors import EmptySubset, IllegalType

FINITE_RANK_RANGES = {
    "A": (1, None),
    "B": (2, None),
    "C": (2, None),
    "D": (4, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}

# Highest-root coefficients over the simple roots, Bourbaki node order.
_HIGHEST_ROOT = {
    "A": lambda n: [1] * n,
    "B": lambda n: [1] + [2] * (n - 1),
    "C": lambda n: [2] * (n - 1) + [1],
    "D": lambda n: [1] + [2] * (n - 3) + [1, 1],
    "E": lambda n: {6: [1, 2, 2, 3, 2, 1],
                    7: [2, 2, 3, 4, 3, 2, 1],
                    8: [2, 3, 4, 6, 5, 4, 3, 2]}[n],
    "F": lambda n: [2, 3, 4, 2],
    "G": lambda n: [3, 2],
}


@dataclass(frozen=True)
class LieType:
    family: str
    rank: int
    twist: Optional[int] = None  # None = finite type

    def __post_init__(self):
        if self.family not in FINITE_RANK_RANGES:
            raise IllegalType(f"unknown family {self.family!r}")
        if self.twist is None or self.twist == 1:
            lo, hi = FINITE_RANK_RANGES[self.family]
            if self.rank < lo or (hi is not None and self.rank > hi):
                raise IllegalType(f"illegal rank {self.rank} for family {self.family}")
        elif self.twist == 2:
            ok = ((self.family == "A" and self.rank >= 2)
                  or (self.family == "D" and self.rank >= 3)
                  or (self.family == "E" and self.rank == 6))
            if not ok:
                raise IllegalType(f"no twisted type {self.family}{self.rank}~2")
        elif self.twist == 3:
            if not (self.family == "D" and self.rank == 4):
                raise IllegalType(f"no twisted type {self.family}{self.rank}~3")
        else:
            raise IllegalType(f"illegal twist {self.twist}")

    @property
    def is_affine(self) -> bool:
        return self.twist is not None

    def __str__(self) -> str:
        s = f"{self.family}{self.rank}"
        return s if self.twist is None else f"{s}~{self.twist}"


_TYPE_RE = re.compile(r"^([A-G])(\d+)(?:~([123]))?$")


def parse_type(label: str) -> LieType:
    m = _TYPE_RE.match(label.strip())
    if m is None:
        raise IllegalType(f"cannot parse type label {label!r}")
    fam, rank, twist = m.group(1), int(m.group(2)), m.group(3)
    return LieType(fam, rank, None if twist is None else int(twist))


@dataclass(frozen=True)
class CartanData:
    matrix: tuple  # tuple of integer row tuples, indexed parallel to nodes
    nodes: tuple   # ordered node labels
    symmetrizer: tuple  # Fractions, d_i a_ij symmetric
    type_label: Optional[LieType]  # None for derived subsystems

    @property
    def size(self) -> int:
        return len(self.nodes)

    @property
    def is_affine(self) -> bool:
        return self.type_label is not None and self.type_label.is_affine

    def pos(self, node) -> int:
        return self.nodes.index(node)

    def entry(self, i, j) -> int:
        return self.matrix[self.pos(i)][self.pos(j)]

    def to_json_dict(self) -> dict:
        return {
            "type": str(self.type_label) if self.type_label else None,
            "nodes": list(self.nodes),
            "matrix": [list(r) for r in self.matrix],
            "symmetrizer": [f"{d.numerator}/{d.denominator}" for d in self.symmetrizer],
        }


def _finite_matrix(fam: str, n: int):
    a = [[2 * (i == j) for j in range(n)] for i in range(n)]

    def link(i, j, aij=-1, aji=-1):
        a[i][j], a[j][i] = aij, aji

    if fam in ("A", "B", "C"):
        for i in range(n - 1):
            link(i, i + 1)
        if fam == "B" and n >= 2:
            link(n - 2, n - 1, -1, -2)   # alpha_n short
        if fam == "C" and n >= 2:
            link(n - 2, n - 1, -2, -1)   # alpha_n long
    elif fam == "D":
        for i in range(n - 2):
            link(i, i + 1)
        link(n - 3, n - 1)
    elif fam == "E":
        # Bourbaki: chain 1-3-4-5-6(-7-8), node 2 hangs off node 4.
        chain = [0, 2, 3, 4, 5, 6, 7][: n - 1]
        for x, y in zip(chain, chain[1:]):
            link(x, y)
        link(1, 3)
    elif fam == "F":
        link(0, 1)
        link(1, 2, -1, -2)
        link(2, 3)
    elif fam == "G":
        link(0, 1, -3, -1)  # alpha_1 short, alpha_2 long
    return a


def _symmetrizer(a) -> tuple:
    """Minimal positive integers d with d_i a_ij = d_j a_ji (per component)."""
    n = len(a)
    d = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if i != j and a[i][j] != 0 and d[j] is None:
                    d[j] = d[i] * Fraction(a[i][j], a[j][i])
                    stack.append(j)
    from math import gcd
    denom = 1
    for x in d:
        denom = denom * x.denominator // gcd(denom, x.denominator)
    ints = [int(x * denom) for x in d]
    g = 0
    for v in ints:
        g = gcd(g, v)
    return tuple(Fraction(v // g) for v in ints)


def _det(rows) -> Fraction:
    m = [[Fraction(x) for x in r] for r in rows]
    n = len(m)
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det *= m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] / m[c][c]
            for k in range(c, n):
                m[r][k] -= f * m[c][k]
    return det


def _kernel_vector(rows):
    """A nonzero rational kernel vector of a corank-1 matrix, or None."""
    n = len(rows)
    m = [[Fraction(x) for x in r] for r in rows]
    pivots = []
    row = 0
    for col in range(n):
        piv = next((r for r in range(row, n) if m[r][col] != 0), None)
        if piv is None:
            continue
        m[row], m[piv] = m[piv], m[row]
        for r in range(n):
            if r != row and m[r][col] != 0:
                f = m[r][col] / m[row][col]
                for k in range(n):
                    m[r][k] -= f * m[row][k]
        pivots.append(col)
        row += 1
    free = [c for c in range(n) if c not in pivots]
    if len(free) != 1:
        return None
    v = [Fraction(0)] * n
    v[free[0]] = Fraction(1)
    for r, col in enumerate(pivots):
        v[col] = -m[r][free[0]] / m[r][col]
    return v


def _validate(c: CartanData) -> None:
    a, d, n = c.matrix, c.symmetrizer, c.size
    for i in range(n):
        if a[i][i] != 2:
            raise IllegalType("diagonal entries must be 2")
        for j in range(n):
            if i != j and a[i][j] > 0:
                raise IllegalType("off-diagonal entries must be <= 0")
            if (a[i][j] == 0) != (a[j][i] == 0):
                raise IllegalType("zero pattern must be symmetric")
            if d[i] * a[i][j] != d[j] * a[j][i]:
                raise IllegalType("matrix is not symmetrizable by d")
    if c.type_label is not None and c.type_label.is_affine:
        if _det(a) != 0:
            raise IllegalType("affine matrix must be singular")
        marks = _kernel_vector(a)
        if marks is None or any(x <= 0 for x in marks):
            raise IllegalType("affine matrix must have corank 1 with positive kernel")
    else:
        # positive definite: all leading principal minors positive
        for k in range(1, n + 1):
            sub = [row[:k] for row in a[:k]]
            if _det(sub) <= 0:
                raise IllegalType("finite-type matrix must be positive definite")


def _affine_untwisted(fam: str, n: int):
    """Extended matrix: node 0 is -theta for the finite system."""
    fin = _finite_matrix(fam, n)
    d = _symmetrizer(fin)
    theta = _HIGHEST_ROOT[fam](n)

    def form(x, y):  # bilinear form on coefficient vectors over the finite system
        return sum(Fraction(x[i]) * y[j] * d[i] * fin[i][j]
                   for i in range(n) for j in range(n) if fin[i][j] != 0)

    tt = form(theta, theta)
    a = [[0] * (n + 1) for _ in range(n + 1)]
    a[0][0] = 2
    for j in range(n):
        ej = [0] * n
        ej[j] = 1
        a0j = -2 * form(theta, ej) / tt
        aj0 = -2 * form(theta, ej) / (2 * d[j])
        assert a0j.denominator == 1 and aj0.denominator == 1
        a[0][j + 1] = int(a0j)
        a[j + 1][0] = int(aj0)
    for i in range(n):
        for j in range(n):
            a[i + 1][j + 1] = fin[i][j]
    return a


def _affine_matrix(t: LieType):
    fam, n, r = t.family, t.rank, t.twist
    if r == 1:
        return _affine_untwisted(fam, n)
    if fam == "A" and n % 2 == 0:
        ell = n // 2
        if ell == 1:
            return [[2, -4], [-1, 2]]
        a = [[2 * (i == j) for j in range(ell + 1)] for i in range(ell + 1)]
        for i in range(ell):
            a[i][i + 1] = a[i + 1][i] = -1
        a[0][1], a[1][0] = -2, -1
        a[ell - 1][ell], a[ell][ell - 1] = -2, -1
        return a
    # the remaining twisted diagrams are transposes of untwisted ones
    if fam == "A":          # A_{2l-1}^{(2)} = transpose of B_l^{(1)}
        base = _affine_untwisted("B", (n + 1) // 2)
    elif fam == "D" and r == 2:   # D_{l+1}^{(2)} = transpose of C_l^{(1)}
        base = _affine_untwisted("C", n - 1)
    elif fam == "E":        # E6^{(2)} = transpose of F4^{(1)}
        base = _affine_untwisted("F", 4)
    else:                   # D4^{(3)} = transpose of G2^{(1)}
        base = _affine_untwisted("G", 2)
    m = len(base)
    return [[base[j][i] for j in range(m)] for i in range(m)]


def build_cartan(t: LieType) -> CartanData:
    """Validated Cartan data for a legal finite or affine type."""
    if not t.is_affine:
        a = _finite_matrix(t.family, t.rank)
        nodes = tuple(range(1, t.rank + 1))
    else:
        a = _affine_matrix(t)
        nodes = tuple(range(len(a)))
    a = tuple(tuple(r) for r in a)
    c = CartanData(a, nodes, _symmetrizer(a), t)
    _validate(c)
    return c


def marks(c: CartanData) -> tuple:
    """Integer marks of an affine matrix: delta = sum marks_i alpha_i."""
    if not c.is_affine:
        raise IllegalType("marks are defined for affine types only")
    v = _kernel_vector(c.matrix)
    denom = 1
    for x in v:
        denom = denom * x.denominator
    ints = [x * denom for x in v]
    from math import gcd
    g = 0
    for x in ints:
        g = gcd(g, int(x))
    return tuple(int(x) // g for x in ints)


def subsystem(c: CartanData, J: Sequence) -> CartanData:
    """Principal submatrix on the node subset J, with inherited symmetrizer."""
    J = list(J)
    if not J:
        raise EmptySubset("J must be nonempty")
    idx = [c.pos(j) for j in J]
    a = tuple(tuple(c.matrix[i][j] for j in idx) for i in idx)
    sub = CartanData(a, tuple(J), tuple(c.symmetrizer[i] for i in idx), None)
    _validate(sub)
    return sub


def bilinear_form(c: CartanData, i, j) -> Fraction:
    """(alpha_i, alpha_j) for node labels i, j."""
    return c.symmetrizer[c.pos(i)] * c.entry(i, j)


def form_on_vectors(c: CartanData, x: Sequence, y: Sequence) -> Fraction:
    """Bilinear extension of the form to coefficient vectors in node order."""
    a, d, n = c.matrix, c.symmetrizer, c.size
    total = Fraction(0)
    for i in range(n):
        if x[i] == 0:
            continue
        for j in range(n):
            if y[j] != 0 and a[i][j] != 0:
                total += Fraction(x[i]) * y[j] * d[i] * a[i][j]
    return total
