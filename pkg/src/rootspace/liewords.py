"""Chevalley structure constants and right-normed Lie words, finite type.

Constants N(a, b) with [e_a, e_b] = N(a, b) e_{a+b} are fixed by the usual
extraspecial-pair convention: positive roots are ordered by (height, lex),
for each non-simple positive root the special pair with the smallest first
member gets N = p + 1 > 0 (p the length of the descending root string), and
every other constant follows from antisymmetry, negation, the invariant-form
rotation rule and the Jacobi identity.  The table is validated at build time
by an exhaustive Jacobi check over the whole algebra, Cartan part included.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from . import cartan as _cartan
from .cartan import CartanData, LieType, build_cartan
from .errors import (NoWordFound, NotFiniteType, NotSupported, RootspaceError)
from .roots import Root, RootSystem, generate_finite, height, height_I
from . import psp

MAX_RANK = 4


@dataclass(frozen=True)
class StructureTable:
    cartan: CartanData
    roots: RootSystem
    constants: dict  # (a, b) -> int, defined exactly when a + b is a root

    def n(self, a: Root, b: Root) -> int:
        return self.constants[(a, b)]


@dataclass(frozen=True)
class LieWord:
    """gamma_1..gamma_m, evaluated as [e_{gamma_m}, [.., [e_{gamma_2}, e_{gamma_1}]..]]."""
    gammas: tuple


def _neg(a: Root) -> Root:
    return tuple(-v for v in a)


def _add(a: Root, b: Root) -> Root:
    return tuple(x + y for x, y in zip(a, b))


def _sub(a: Root, b: Root) -> Root:
    return tuple(x - y for x, y in zip(a, b))


def _string_down(rs: RootSystem, b: Root, a: Root) -> int:
    """p = max{k : b - k a is a root}."""
    p = 0
    cur = b
    while True:
        cur = _sub(cur, a)
        if not rs.contains(cur):
            return p
        p += 1


def build_constants(t: LieType) -> StructureTable:
    if t.is_affine:
        raise NotFiniteType("structure constants are built for finite type only")
    if t.rank > MAX_RANK:
        raise NotSupported(f"rank {t.rank} exceeds the supported bound {MAX_RANK}")
    c = build_cartan(t)
    rs = generate_finite(c)
    pos = sorted(rs.positive_roots, key=lambda r: (height(r), r))
    order = {r: i for i, r in enumerate(pos)}
    norm = {b: _cartan.form_on_vectors(c, b, b) for b in rs.all_roots()}

    # special pairs per sum, smallest first member = extraspecial
    special: Dict[Root, list] = {}
    for g in pos:
        if height(g) == 1:
            continue
        pairs = [(a, _sub(g, a)) for a in pos
                 if _sub(g, a) in rs.positive_roots and order[a] < order[_sub(g, a)]]
        pairs.sort(key=lambda ab: order[ab[0]])
        special[g] = pairs

    memo: Dict[tuple, Fraction] = {}

    def n(a: Root, b: Root) -> Fraction:
        key = (a, b)
        if key in memo:
            return memo[key]
        s = _add(a, b)
        if not rs.contains(s):
            raise RootspaceError(f"{a} + {b} is not a root")
        apos = all(v >= 0 for v in a)
        bpos = all(v >= 0 for v in b)
        if not apos and not bpos:
            v = -n(_neg(a), _neg(b))
        elif apos and bpos:
            if order[b] < order[a]:
                v = -n(b, a)
            else:
                v = _special_value(a, b)
        else:
            v = _mixed_value(a, b)
        memo[key] = v
        return v

    def _special_value(a: Root, b: Root) -> Fraction:
        g = _add(a, b)
        pairs = special[g]
        a0, b0 = pairs[0]
        if (a, b) == (a0, b0):
            return Fraction(_string_down(rs, b, a) + 1)
        # peel the extraspecial a0 off via the Jacobi identity on (a, b, -a0)
        total = Fraction(0)
        d1 = _sub(a, a0)
        if rs.contains(d1):
            total += n(a, _neg(a0)) * n(d1, b)
        d2 = _sub(b, a0)
        if rs.contains(d2):
            total += n(b, _neg(a0)) * n(a, d2)
        return total / n(g, _neg(a0))

    def _mixed_value(a: Root, b: Root) -> Fraction:
        # one of a, b negative: rotate into the positive triple al + be = de
        if all(v >= 0 for v in b):
            return -n(b, a)
        s = _add(a, b)
        if all(v >= 0 for v in s):
            x, y = s, _neg(b)  # x + y = a
            de = a
        else:
            x, y = a, _neg(s)  # x + y = -b
            de = _neg(b)
        al, be = (x, y) if order[x] < order[y] else (y, x)
        base = n(al, be)
        rot = base * norm[al] / norm[de]   # = n(be, -de)
        if (a, b) == (de, _neg(be)):
            return rot
        if (a, b) == (de, _neg(al)):
            return -(base * norm[be] / norm[de])
        if (a, b) == (al, _neg(de)):
            return -(base * norm[be] / norm[de])
        if (a, b) == (be, _neg(de)):
            return rot
        raise RootspaceError("unreachable rotation case")

    constants = {}
    allr = rs.all_roots()
    for a in allr:
        for b in allr:
            if _add(a, b) != (0,) * c.size and rs.contains(_add(a, b)):
                v = n(a, b)
                if v.denominator != 1:
                    raise RootspaceError(f"non-integer constant at {(a, b)}")
                constants[(a, b)] = int(v)
    table = StructureTable(c, rs, constants)
    _validate(table)
    return table


def coroot_vector(c: CartanData, a: Root) -> tuple:
    """a^vee as rational coefficients over the simple coroots."""
    norm = _cartan.form_on_vectors(c, a, a)
    return tuple(Fraction(a[i]) * c.symmetrizer[i] * 2 / norm
                 for i in range(c.size))


def _pair_h(c: CartanData, g: Root, h: tuple) -> Fraction:
    """<g, h> for h = sum h_j alpha_j^vee."""
    return sum(hj * sum(c.matrix[j][k] * g[k] for k in range(c.size))
               for j, hj in enumerate(h))


# an algebra element is (root -> coeff, h-vector over simple coroots)
def _bracket(t: StructureTable, x, y):
    c = t.cartan
    ex, hx = x
    ey, hy = y
    zero = (0,) * c.size
    eout: Dict[Root, Fraction] = {}
    hout = [Fraction(0)] * c.size

    def adde(r, v):
        if v:
            eout[r] = eout.get(r, Fraction(0)) + v

    for a, va in ex.items():
        for b, vb in ey.items():
            s = _add(a, b)
            if s == zero:
                for i, hv in enumerate(coroot_vector(c, a)):
                    hout[i] += va * vb * hv
            elif t.roots.contains(s):
                adde(s, va * vb * t.constants[(a, b)])
    for b, vb in ey.items():
        adde(b, _pair_h(c, b, hx) * vb)
    for a, va in ex.items():
        adde(a, -_pair_h(c, a, hy) * va)
    return ({r: v for r, v in eout.items() if v}, tuple(hout))


def _validate(t: StructureTable):
    """Antisymmetry, string lengths, and the Jacobi identity on every basis triple."""
    c = t.cartan
    rs = t.roots
    allr = rs.all_roots()
    for (a, b), v in t.constants.items():
        if t.constants[(b, a)] != -v:
            raise RootspaceError("antisymmetry fails")
        if abs(v) != _string_down(rs, b, a) + 1:
            raise RootspaceError(f"|N| != p + 1 at {(a, b)}")

    basis = [({r: Fraction(1)}, (Fraction(0),) * c.size) for r in allr]
    hzero: tuple = (Fraction(0),) * c.size
    for i in range(c.size):
        h = list(hzero)
        h[i] = Fraction(1)
        basis.append(({}, tuple(h)))

    def is_zero(x):
        return not x[0] and not any(x[1])

    def add(x, y):
        e = dict(x[0])
        for r, v in y[0].items():
            e[r] = e.get(r, Fraction(0)) + v
        return ({r: v for r, v in e.items() if v},
                tuple(a + b for a, b in zip(x[1], y[1])))

    n = len(basis)
    for i in range(n):
        for j in range(i + 1, n):
            bij = _bracket(t, basis[i], basis[j])
            for k in range(j + 1, n):
                s = add(_bracket(t, basis[k], bij),
                        add(_bracket(t, basis[i], _bracket(t, basis[j], basis[k])),
                            _bracket(t, basis[j], _bracket(t, basis[k], basis[i]))))
                if not is_zero(s):
                    raise RootspaceError(f"Jacobi fails on basis triple {(i, j, k)}")


def evaluate(word: LieWord, t: StructureTable) -> int:
    """c with word value = c * e_{sum}; 0 when a later partial sum leaves Delta.

    A zero partial sum would leave the root spaces (a Cartan element) and is
    rejected.
    """
    gammas = list(word.gammas)
    if not gammas:
        raise RootspaceError("empty Lie word")
    zero = (0,) * t.cartan.size
    s = gammas[0]
    if s == zero or not t.roots.contains(s):
        raise RootspaceError("word must start at a root vector")
    coeff = 1
    for g in gammas[1:]:
        s2 = _add(s, g)
        if s2 == zero:
            raise RootspaceError("zero partial sum: word leaves the root spaces")
        if not t.roots.contains(s2):
            return 0
        coeff *= t.constants[(g, s)]
        s = s2
    return coeff


def verify_spanning(beta: Root, I: Sequence, t: StructureTable):
    """A right-normed word over Delta_{I,1} whose value spans g_beta.

    Returns (word, coefficient); the word's partial sums are all roots, so it
    projects to a valid parabolic decomposition.
    """
    if height_I(t.cartan, beta, I) <= 0:
        raise RootspaceError("beta must have positive I-height")
    d = psp.decompose(beta, tuple(I), t.roots)
    word = LieWord(d.gammas)
    coeff = evaluate(word, t)
    if coeff == 0:
        raise NoWordFound(f"decomposition word for {beta} evaluated to zero")
    return word, coeff
