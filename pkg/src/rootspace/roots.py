"""Root systems: finite generation, affine height windows, heights, Weyl action.

A root is a tuple of integer coefficients over the simple roots, in the node
order of the underlying :class:`~rootspace.cartan.CartanData`.  Finite systems
are generated completely; affine systems are materialized per height window.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Optional, Sequence, Tuple

from . import cartan as _cartan
from .cartan import CartanData
from .errors import (EmptyI, IllegalType, InfiniteOrbit, NotFiniteType,
                     WindowTooSmall)

Root = Tuple[int, ...]

# |Delta^+| for the finite families, used as a generation cross-check.
def positive_root_count(t) -> int:
    n = t.rank
    if t.family == "A":
        return n * (n + 1) // 2
    if t.family in ("B", "C"):
        return n * n
    if t.family == "D":
        return n * (n - 1)
    if t.family == "E":
        return {6: 36, 7: 63, 8: 120}[n]
    return 24 if t.family == "F" else 6


def height(x: Sequence[int]) -> int:
    return sum(x)


def height_I(c: CartanData, x: Sequence[int], I: Iterable) -> int:
    return sum(x[c.pos(i)] for i in I)


def simple_root(c: CartanData, node) -> Root:
    v = [0] * c.size
    v[c.pos(node)] = 1
    return tuple(v)


def coroot_pairing(c: CartanData, x: Sequence[int], node) -> int:
    """<x, alpha_node^vee> for an integer coefficient vector x."""
    row = c.matrix[c.pos(node)]
    return sum(row[j] * x[j] for j in range(c.size) if x[j])


def reflect_root(c: CartanData, x: Root, node) -> Root:
    k = c.pos(node)
    p = coroot_pairing(c, x, node)
    if p == 0:
        return x
    y = list(x)
    y[k] -= p
    return tuple(y)


@dataclass(frozen=True)
class RootSystem:
    cartan: CartanData
    positive_roots: frozenset  # positive roots within the window
    height_bound: Optional[int]  # None = complete (finite type)
    delta: Optional[Root]  # smallest positive imaginary root, affine only

    @property
    def is_affine(self) -> bool:
        return self.delta is not None

    def sorted_positive(self):
        return sorted(self.positive_roots, key=lambda r: (height(r), r))

    def contains(self, x: Root) -> bool:
        """Membership for a root of either sign (within the window)."""
        if all(v >= 0 for v in x):
            return x in self.positive_roots
        if all(v <= 0 for v in x):
            return tuple(-v for v in x) in self.positive_roots
        return False

    def all_roots(self):
        neg = [tuple(-v for v in r) for r in self.positive_roots]
        return sorted(self.positive_roots | set(neg), key=lambda r: (height(r), r))


def _close_positive(c: CartanData, bound: Optional[int]):
    """Level-by-level closure under simple-root strings.

    For any Kac-Moody algebra the alpha_i-string through a root is unbroken,
    so beta + alpha_i is a root iff p - <beta, alpha_i^vee> > 0 where
    p = max{k : beta - k alpha_i is a root}.  Every positive root of height
    h+1 arises as beta + alpha_i from one of height h.
    """
    n = c.size
    roots = {simple_root(c, node) for node in c.nodes}
    level = sorted(roots)
    h = 1
    while level and (bound is None or h < bound):
        nxt = set()
        for beta in level:
            for k, node in enumerate(c.nodes):
                pair = coroot_pairing(c, beta, node)
                p = 0
                cur = list(beta)
                while True:
                    cur[k] -= 1
                    t = tuple(cur)
                    if any(v < 0 for v in t) or t not in roots:
                        break
                    p += 1
                if p - pair > 0:
                    up = list(beta)
                    up[k] += 1
                    nxt.add(tuple(up))
        roots |= nxt
        level = sorted(nxt)
        h += 1
        if bound is None and h > 5000:
            raise NotFiniteType("closure did not terminate; type is not finite")
    return roots


def generate_finite(c: CartanData) -> RootSystem:
    if c.type_label is not None and c.type_label.is_affine:
        raise NotFiniteType(f"{c.type_label} is affine")
    pos = _close_positive(c, None)
    return RootSystem(c, frozenset(pos), None, None)


def delta_root(c: CartanData) -> Root:
    return tuple(_cartan.marks(c))


@lru_cache(maxsize=256)
def generate_affine_window(c: CartanData, H: int) -> RootSystem:
    if not c.is_affine:
        raise IllegalType("generate_affine_window needs an affine Cartan matrix")
    d = delta_root(c)
    if H < height(d):
        raise WindowTooSmall(f"window {H} below height of delta {height(d)}")
    pos = _close_positive(c, H)
    return RootSystem(c, frozenset(pos), H, d)


def root_system(c: CartanData, H: Optional[int] = None) -> RootSystem:
    if c.is_affine:
        if H is None:
            raise WindowTooSmall("affine systems need an explicit window")
        return generate_affine_window(c, H)
    return generate_finite(c)


def unit_I_height_set(rs: RootSystem, I: Sequence) -> list:
    """All positive roots of I-height exactly 1, canonically sorted.

    For affine systems the window is auto-extended until the answer is stable
    under doubling, which covers the finite bound guaranteed by the marks
    being positive.
    """
    I = tuple(I)
    if not I:
        raise EmptyI("I must be nonempty")
    return list(_unit_I_height_cached(rs, I))


@lru_cache(maxsize=4096)
def _unit_I_height_cached(rs: RootSystem, I: tuple) -> tuple:
    c = rs.cartan

    def collect(system):
        return sorted((b for b in system.positive_roots
                       if height_I(c, b, I) == 1), key=lambda r: (height(r), r))

    if not rs.is_affine:
        return tuple(collect(rs))
    H = rs.height_bound
    cur = collect(rs)
    while True:
        bigger = generate_affine_window(c, 2 * H)
        nxt = collect(bigger)
        if nxt == cur and H > 4 * height(rs.delta):
            return tuple(cur)
        cur, H = nxt, 2 * H
        if H > 4096:
            raise WindowTooSmall("unit-I-height search did not stabilize")


def classify_root(rs: RootSystem, beta: Root):
    """-> ('real'|'imaginary', 'short'|'long'|None).

    Length classes compare (beta,beta) against the real-root lengths present
    in the system; a one-length system reports every real root as 'long'.
    """
    c = rs.cartan
    norm = _cartan.form_on_vectors(c, beta, beta)
    if norm == 0:
        return ("imaginary", None)
    lengths = real_root_lengths(rs)
    if len(lengths) == 1:
        return ("real", "long")
    cls = "short" if norm == lengths[0] else ("long" if norm == lengths[-1] else "middle")
    return ("real", cls)


def real_root_lengths(rs: RootSystem) -> list:
    c = rs.cartan
    vals = set()
    for b in rs.positive_roots:
        n = _cartan.form_on_vectors(c, b, b)
        if n > 0:
            vals.add(n)
    return sorted(vals)


def finite_part_sets(rs: RootSystem):
    """(finite part, its short class, its long class) for an affine system.

    The finite part is Delta restricted to the nodes 1..l, embedded with a
    zero coefficient at node 0.  Short/long are measured against the lengths
    of all real roots of the ambient system, so e.g. the one-length finite
    part of A2~2 counts as all-long (its roots only recur with step 2*delta).
    """
    if not rs.is_affine:
        raise NotFiniteType("finite_part_sets needs an affine system")
    c = rs.cartan
    zero = c.pos(0)
    ring = set()
    for b in rs.all_roots():
        if b[zero] == 0 and any(b):
            ring.add(b)
    lengths = real_root_lengths(rs)
    short = {b for b in ring if _cartan.form_on_vectors(c, b, b) == lengths[0]}
    long_ = {b for b in ring if _cartan.form_on_vectors(c, b, b) == lengths[-1]}
    if len({_cartan.form_on_vectors(c, b, b) for b in ring}) == 1 and len(lengths) == 1:
        short = long_ = set(ring)
    return ring, short, long_


@dataclass(frozen=True)
class WeylElement:
    word: tuple  # sequence of node labels, applied right to left

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        return WeylElement(self.word + other.word)


IDENTITY = WeylElement(())


def apply_weyl(c: CartanData, w: WeylElement, x: Root) -> Root:
    for node in reversed(w.word):
        x = reflect_root(c, x, node)
    return x


def weyl_matrix(c: CartanData, w: WeylElement):
    cols = [apply_weyl(c, w, simple_root(c, node)) for node in c.nodes]
    return tuple(zip(*cols))  # rows


def weyl_group(c: CartanData, J: Optional[Sequence] = None, limit: int = 2 ** 20):
    """All elements of W_J as WeylElements (BFS over short words)."""
    nodes = list(c.nodes if J is None else J)
    seen = {weyl_matrix(c, IDENTITY): IDENTITY}
    frontier = [IDENTITY]
    while frontier:
        nxt = []
        for w in frontier:
            for node in nodes:
                w2 = WeylElement((node,) + w.word)
                m = weyl_matrix(c, w2)
                if m not in seen:
                    seen[m] = w2
                    nxt.append(w2)
                    if len(seen) > limit:
                        raise InfiniteOrbit("Weyl group exceeds limit")
        frontier = nxt
    return list(seen.values())


def orbit(c: CartanData, J: Sequence, x: Root, height_cap: int = 10000) -> list:
    """W_J-orbit of x, canonically sorted; errors out if it grows unboundedly."""
    out = {x}
    frontier = [x]
    while frontier:
        nxt = []
        for y in frontier:
            for node in J:
                z = reflect_root(c, y, node)
                if z not in out:
                    if abs(height(z)) > height_cap:
                        raise InfiniteOrbit("orbit height exceeded the safety bound")
                    out.add(z)
                    nxt.append(z)
        frontier = nxt
    return sorted(out, key=lambda r: (height(r), r))
