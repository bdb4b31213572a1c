"""Exact rational convex geometry at small rank.

Points are tuples of Fractions.  Hulls (with optional rays) are computed by
an exhaustive facet scan over the homogenization cone; no floating point is
used anywhere.  The guard on the ambient dimension keeps the scan tractable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import List, Optional, Sequence, Tuple

from .cartan import CartanData
from .errors import DimensionTooLarge, SingularCartan
from .roots import WeylElement

Point = Tuple[Fraction, ...]

MAX_DIM = 4


@dataclass(frozen=True)
class Polyhedron:
    points: tuple
    rays: tuple
    facets: tuple      # (normal, offset): normal . x <= offset
    equations: tuple   # (normal, offset): normal . x == offset


def _frac(p) -> Point:
    return tuple(Fraction(v) for v in p)


def _rref(rows):
    """Reduced row echelon form; returns (rows, pivot columns)."""
    m = [list(r) for r in rows]
    if not m:
        return m, []
    ncols = len(m[0])
    pivots = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        f = m[r][col]
        m[r] = [x / f for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col] != 0:
                g = m[i][col]
                m[i] = [a - g * b for a, b in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
    return m[:r], pivots


def _nullspace(rows, ncols):
    """Basis of {v : rows . v = 0}."""
    red, pivots = _rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for r, col in enumerate(pivots):
            v[col] = -red[r][f]
        basis.append(tuple(v))
    return basis


def _canonical(normal, offset=None):
    """Scale to coprime integers with a positive leading entry."""
    denom = 1
    vals = list(normal) + ([offset] if offset is not None else [])
    for x in vals:
        denom = denom * x.denominator // gcd(denom, x.denominator)
    ints = [int(x * denom) for x in vals]
    g = 0
    for v in ints:
        g = gcd(g, abs(v))
    ints = [v // g for v in ints]
    if offset is None:
        return tuple(Fraction(v) for v in ints)
    return tuple(Fraction(v) for v in ints[:-1]), Fraction(ints[-1])


def hull(points: Sequence, rays: Sequence = ()) -> Polyhedron:
    """Irredundant facet description of conv(points) + cone(rays)."""
    pts = [_frac(p) for p in points]
    rys = [_frac(r) for r in rays]
    if not pts:
        raise ValueError("hull needs at least one point")
    n = len(pts[0])
    if n > MAX_DIM:
        raise DimensionTooLarge(f"ambient dimension {n} exceeds {MAX_DIM}")
    gens = [(Fraction(1),) + p for p in pts] + [(Fraction(0),) + r for r in rys]
    gens = list(dict.fromkeys(gens))

    # affine hull: functionals vanishing on every generator
    eqs = []
    for v in _nullspace(gens, n + 1):
        normal, off = _canonical(v[1:], -v[0])
        if any(normal):
            eqs.append((normal, off))
        # a pure (c,0,...,0) kernel vector cannot occur: some generator has 1

    # project onto a basis of the span; the cone is full-dimensional there
    basis, _ = _rref(gens)
    k = len(basis)
    coords = [_solve_coords(basis, g) for g in gens]

    facets = {}
    if k >= 2:
        for combo in combinations(range(len(coords)), k - 1):
            sub = [coords[i] for i in combo]
            null = _nullspace(sub, k)
            if len(null) != 1:
                continue
            v = null[0]
            pos = any(_dot(v, g) > 0 for g in coords)
            neg = any(_dot(v, g) < 0 for g in coords)
            if pos and neg:
                continue
            if pos:
                v = tuple(-x for x in v)
            tight = [g for g in coords if _dot(v, g) == 0]
            red2, _ = _rref(tight)
            if len(red2) != k - 1:
                continue
            amb = _lift_functional(basis, v)
            if not any(amb[1:]):
                continue  # the face at infinity, not a facet of P
            normal, off = _canonical(amb[1:], -amb[0])
            facets[(normal, off)] = True
    return Polyhedron(tuple(pts), tuple(rys), tuple(facets), tuple(eqs))


def _solve_coords(basis, g):
    """Coordinates of g in the row space spanned by basis (consistent system)."""
    k = len(basis)
    cols = len(g)
    aug = [[basis[j][c] for j in range(k)] + [g[c]] for c in range(cols)]
    red, piv = _rref(aug)
    x = [Fraction(0)] * k
    for r, col in enumerate(piv):
        if col == k:
            raise ValueError("vector outside span")
        x[col] = red[r][k]
    return tuple(x)


def _lift_functional(basis, nb):
    """Ambient vector f with f . g = nb . coords(g): f = B^T (B B^T)^{-1} nb."""
    k = len(basis)
    bbt = [[_dot(basis[i], basis[j]) for j in range(k)] for i in range(k)]
    inv = _inverse(bbt)
    y = [sum(inv[i][j] * nb[j] for j in range(k)) for i in range(k)]
    cols = len(basis[0])
    return tuple(sum(basis[i][c] * y[i] for i in range(k)) for c in range(cols))


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def contains(poly: Polyhedron, x: Sequence) -> bool:
    q = _frac(x)
    return (all(_dot(n, q) == off for n, off in poly.equations)
            and all(_dot(n, q) <= off for n, off in poly.facets))


def exposed_face(X: Sequence, psi: Sequence) -> list:
    """The argmax of the linear functional psi over the finite point set X."""
    pts = [_frac(p) for p in X]
    f = _frac(psi)
    best = max(_dot(f, p) for p in pts)
    return sorted(p for p in pts if _dot(f, p) == best)


def smallest_face_containing(Y: Sequence, X: Sequence) -> list:
    """Intersection of X with all facets of conv(X) through Y (X if none)."""
    pts = [_frac(p) for p in X]
    ys = [_frac(y) for y in Y]
    poly = hull(pts)
    tight = [(n, off) for n, off in poly.facets
             if all(_dot(n, y) == off for y in ys)]
    if not tight:
        return sorted(set(pts))
    out = [p for p in set(pts)
           if all(_dot(n, p) == off for n, off in tight)]
    return sorted(out)


def all_face_sets(X: Sequence) -> set:
    """Every nonempty exposed face of conv(X), each as frozenset(face ^ X).

    The face lattice of a polytope is generated by X itself and the facet
    sets, closed under intersection.
    """
    pts = [_frac(p) for p in X]
    poly = hull(pts)
    facets = [frozenset(p for p in pts if _dot(n, p) == off)
              for n, off in poly.facets]
    faces = {frozenset(pts)}
    frontier = set(facets)
    while frontier:
        new = set()
        for f in frontier:
            for g in facets:
                h = f & g
                if h and h not in faces and h not in frontier and h not in new:
                    new.add(h)
        faces |= frontier
        frontier = new
    return faces


def is_maximizer(Y: Sequence, X: Sequence) -> bool:
    ys = sorted({_frac(y) for y in Y})
    return smallest_face_containing(ys, X) == ys


def _inverse(rows):
    n = len(rows)
    aug = [[Fraction(x) for x in rows[i]] + [Fraction(int(i == j)) for j in range(n)]
           for i in range(n)]
    red, piv = _rref(aug)
    if piv != list(range(n)):
        raise SingularCartan("matrix is singular")
    return [r[n:] for r in red]


def fundamental_weights(c: CartanData):
    """omega_j in simple-root coordinates (columns of the inverse matrix)."""
    try:
        inv = _inverse(c.matrix)
    except SingularCartan:
        raise SingularCartan("fundamental weights need a nonsingular Cartan matrix")
    return {node: tuple(inv[i][c.pos(node)] for i in range(c.size))
            for node in c.nodes}


def gram_matrix(c: CartanData):
    return [[c.symmetrizer[i] * c.matrix[i][j] for j in range(c.size)]
            for i in range(c.size)]


def standard_functional(c: CartanData, w: WeylElement, I: Sequence):
    """Normal vector (for root-coordinate points) of (w sum_{j not in I} omega_j, -)."""
    from .roots import apply_weyl

    omegas = fundamental_weights(c)
    comp = [n for n in c.nodes if n not in set(I)]
    phi = [Fraction(0)] * c.size
    for j in comp:
        for i in range(c.size):
            phi[i] += omegas[j][i]
    phi = apply_weyl(c, w, tuple(phi))
    G = gram_matrix(c)
    return tuple(sum(G[i][j] * phi[j] for j in range(c.size))
                 for i in range(c.size))
