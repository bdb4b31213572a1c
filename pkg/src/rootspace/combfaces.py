"""Combinatorial faces of root and weight sets.

Exact 212-closedness checks, fixed-point closure, exhaustive enumeration over
small ambient sets (bitmasks + a pair-sum index), bounded weak-face refutation
over the integers, realization of the standard and exceptional face families,
and the delta-periodic lift that carries finite-part faces into an affine
height window.

Elements are integer coefficient tuples over the simple roots (or depth
vectors for weight sets); both live in the same kind of lattice so every
routine here is coordinate-agnostic.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .cartan import CartanData
from .errors import NotFiniteType, RootspaceError, TooLarge, WindowTooSmall
from .roots import (RootSystem, WeylElement, apply_weyl, finite_part_sets,
                    generate_affine_window, height, weyl_group)

Vec = Tuple[int, ...]


@dataclass(frozen=True)
class AmbientSet:
    """A finite ambient set X together with what it is a sample of."""
    kind: str  # 'roots' | 'roots0' | 'weights' | 'hull_sample'
    elements: tuple  # canonically sorted vectors

    def __post_init__(self):
        if len(set(self.elements)) != len(self.elements):
            raise RootspaceError("ambient set has duplicate elements")
        zero = (0,) * len(self.elements[0]) if self.elements else ()
        has_zero = zero in self.elements
        if self.kind == "roots" and has_zero:
            raise RootspaceError("'roots' ambient must not contain 0")
        if self.kind == "roots0" and not has_zero:
            raise RootspaceError("'roots0' ambient must contain 0")


def roots_ambient(rs: RootSystem, with_zero: bool = False) -> AmbientSet:
    elems = list(rs.all_roots())
    if with_zero:
        elems.append((0,) * rs.cartan.size)
    return AmbientSet("roots0" if with_zero else "roots",
                      tuple(sorted(elems)))


def weights_ambient(window) -> AmbientSet:
    return AmbientSet("weights", tuple(window.sorted_depths()))


def _vadd(a: Vec, b: Vec) -> Vec:
    return tuple(x + y for x, y in zip(a, b))


def pair_sum_index(X: Sequence[Vec]) -> Dict[Vec, list]:
    """sum -> all unordered pairs {x1, x2} (x1 = x2 allowed) attaining it."""
    idx: Dict[Vec, list] = {}
    for x1, x2 in combinations_with_replacement(sorted(set(X)), 2):
        idx.setdefault(_vadd(x1, x2), []).append((x1, x2))
    return idx


def is_212_closed(Y: Iterable[Vec], X: Iterable[Vec],
                  index: Optional[Dict[Vec, list]] = None):
    """(True, None) or (False, (y1, y2, x1, x2)) with y1+y2 = x1+x2, x_i not all in Y."""
    Xs = set(map(tuple, X))
    Ys = set(map(tuple, Y))
    if not Ys or not Ys <= Xs:
        raise RootspaceError("need a nonempty Y contained in X")
    if index is None:
        index = pair_sum_index(Xs)
    for y1, y2 in combinations_with_replacement(sorted(Ys), 2):
        for x1, x2 in index.get(_vadd(y1, y2), ()):
            if x1 not in Ys or x2 not in Ys:
                return False, (y1, y2, x1, x2)
    return True, None


def closure_212(Y: Iterable[Vec], X: Iterable[Vec]) -> frozenset:
    """Smallest 212-closed superset of Y inside X (iterate the rule)."""
    Xs = set(map(tuple, X))
    cur = set(map(tuple, Y))
    if not cur <= Xs:
        raise RootspaceError("Y must be contained in X")
    index = pair_sum_index(Xs)
    changed = True
    while changed:
        changed = False
        for y1, y2 in combinations_with_replacement(sorted(cur), 2):
            for x1, x2 in index.get(_vadd(y1, y2), ()):
                if x1 not in cur or x2 not in cur:
                    cur.add(x1)
                    cur.add(x2)
                    changed = True
    return frozenset(cur)


def enumerate_212(X: Iterable[Vec], proper: bool = True) -> List[Tuple[Vec, ...]]:
    """All nonempty 212-closed subsets of X, canonically sorted.

    Y = X is excluded by default (the convention for root-type ambients);
    pass proper=False to include it, as is natural for weight sets.

    Bitmask scan over 2^|X|.  Pairs are grouped by their sum; a subset is
    closed iff whenever it contains a pair of some group it contains the
    union of that whole group.  Groups with a single pair are vacuous.
    """
    elems = sorted(set(map(tuple, X)))
    n = len(elems)
    if n > 20:
        raise TooLarge(f"ambient of size {n} exceeds the enumeration guard (20)")
    pos = {e: i for i, e in enumerate(elems)}
    groups: Dict[Vec, list] = {}
    for x1, x2 in combinations_with_replacement(elems, 2):
        groups.setdefault(_vadd(x1, x2), []).append((1 << pos[x1]) | (1 << pos[x2]))
    constraints = []
    for masks in groups.values():
        union = 0
        for pm in masks:
            union |= pm
        useful = [pm for pm in masks if union & ~pm]
        if useful:
            constraints.append((useful, union))

    out = []
    top = (1 << n) - 1 if proper else (1 << n)
    for m in range(1, top):
        ok = True
        for masks, union in constraints:
            if union & ~m:
                for pm in masks:
                    if not (pm & ~m):
                        ok = False
                        break
                if not ok:
                    break
        if ok:
            out.append(tuple(e for e in elems if m & (1 << pos[e])))
    out.sort(key=lambda s: (len(s), s))
    return out


def is_weak_face_bounded(Y: Iterable[Vec], X: Iterable[Vec],
                         max_terms: int = 6, max_coeff: int = 3):
    """Bounded search for a weak-Z-face violation of Y in X.

    Looks for sum(r_i y_i) = sum(t_j x_j) with equal positive totals, each
    coefficient <= max_coeff, totals <= max_terms, and some x_j outside Y
    carrying t_j > 0.  Returns ('refuted', witness) with witness a pair of
    (element, coefficient) lists, or ('no_violation_found', None).
    """
    Ys = sorted(set(map(tuple, Y)))
    Xs = sorted(set(map(tuple, X)))
    yset = set(Ys)
    if not yset <= set(Xs):
        raise RootspaceError("Y must be contained in X")
    dim = len(Xs[0])
    zero = (0,) * dim

    left: Dict[tuple, tuple] = {}

    def scan_left(i: int, total: int, acc: Vec, coeffs: tuple):
        if total:
            left.setdefault((acc, total), coeffs)
        if i == len(Ys):
            return
        scan_left(i + 1, total, acc, coeffs)
        add = zero
        for r in range(1, max_coeff + 1):
            if total + r > max_terms:
                break
            add = _vadd(add, Ys[i])
            scan_left(i + 1, total + r, _vadd(acc, add),
                      coeffs + ((Ys[i], r),))

    scan_left(0, 0, zero, ())

    found = []

    def scan_right(i: int, total: int, acc: Vec, coeffs: tuple, outside: bool):
        if found:
            return
        if total and outside:
            key = (acc, total)
            if key in left:
                found.append((left[key], coeffs))
                return
        if i == len(Xs):
            return
        scan_right(i + 1, total, acc, coeffs, outside)
        add = zero
        out2 = outside or Xs[i] not in yset
        for t in range(1, max_coeff + 1):
            if total + t > max_terms:
                break
            add = _vadd(add, Xs[i])
            scan_right(i + 1, total + t, _vadd(acc, add),
                       coeffs + ((Xs[i], t),), out2)

    scan_right(0, 0, zero, (), False)
    if found:
        return "refuted", found[0]
    return "no_violation_found", None


# ---------------------------------------------------------------------------
# face descriptors and their realizations

@dataclass(frozen=True)
class FaceDescriptor:
    """variant: 'standard_roots' | 'standard_weights' | 'exceptional_a2' | 'affine_lift'"""
    variant: str
    w: Optional[WeylElement] = None
    I: tuple = ()
    tag: Optional[str] = None  # 'pi' | 'delta_plus' | 'alt_triple'
    inner: Optional["FaceDescriptor"] = None


def highest_root(rs: RootSystem) -> Vec:
    if rs.is_affine:
        raise NotFiniteType("highest root needs a finite system")
    return max(rs.positive_roots, key=lambda r: (height(r), r))


def realize_standard_roots(rs: RootSystem, w: WeylElement,
                           I: Sequence) -> frozenset:
    """w[(theta - Z>=0 Pi_I) intersect Delta]."""
    c = rs.cartan
    Iset = set(I)
    if Iset >= set(c.nodes):
        raise RootspaceError("I must be a proper subset of the nodes")
    theta = highest_root(rs)
    out = set()
    for b in rs.all_roots():
        diff = tuple(t - x for t, x in zip(theta, b))
        if all(v >= 0 for v in diff) and all(
                v == 0 for n, v in zip(c.nodes, diff) if n not in Iset):
            out.add(apply_weyl(c, w, b))
    return frozenset(out)


def realize_standard_weights(c: CartanData, hw, window, w: WeylElement,
                             I: Sequence) -> frozenset:
    """w[(lambda - Z>=0 Pi_I) intersect wt V], as depth vectors."""
    from .weights import reflect_weight

    Iset = set(I)
    base = [d for d in window.depths
            if all(v == 0 for n, v in zip(c.nodes, d) if n not in Iset)]
    out = set()
    for d in base:
        for node in reversed(w.word):
            d = reflect_weight(c, hw, d, node)
        out.add(d)
    return frozenset(out)


_A2_BASES = {
    "pi": ((1, 0), (0, 1)),
    "delta_plus": ((1, 0), (0, 1), (1, 1)),
    "alt_triple": ((1, 0), (0, 1), (-1, -1)),
}


def realize_exceptional_a2(rs: RootSystem, tag: str, w: WeylElement) -> frozenset:
    c = rs.cartan
    if c.size != 2 or c.matrix[0][1] != -1 or c.matrix[1][0] != -1:
        raise RootspaceError("exceptional faces exist only in type A2")
    return frozenset(apply_weyl(c, w, b) for b in _A2_BASES[tag])


def realize(desc: FaceDescriptor, rs: Optional[RootSystem] = None,
            hw=None, window=None, H: Optional[int] = None) -> frozenset:
    if desc.variant == "standard_roots":
        return realize_standard_roots(rs, desc.w, desc.I)
    if desc.variant == "standard_weights":
        return realize_standard_weights(rs.cartan, hw, window, desc.w, desc.I)
    if desc.variant == "exceptional_a2":
        return realize_exceptional_a2(rs, desc.tag, desc.w)
    if desc.variant == "affine_lift":
        finite_rs = generate_finite_part(rs)
        Z = realize(desc.inner, rs=finite_rs)
        Z = {embed_finite(rs.cartan, z) for z in Z}
        return affine_lift(Z, rs, H if H is not None else rs.height_bound)
    raise RootspaceError(f"unknown descriptor variant {desc.variant!r}")


def all_root_face_descriptors(rs: RootSystem):
    """Every standard (and, in A2, exceptional) face with its realization.

    Returns a list of (FaceDescriptor, frozenset); one descriptor per distinct
    realized subset.
    """
    c = rs.cartan
    W = weyl_group(c)
    seen: Dict[frozenset, FaceDescriptor] = {}
    nodes = list(c.nodes)
    from itertools import combinations as _comb
    for r in range(len(nodes)):
        for I in _comb(nodes, r):
            for w in W:
                s = realize_standard_roots(rs, w, I)
                if s not in seen:
                    seen[s] = FaceDescriptor("standard_roots", w=w, I=tuple(I))
    is_a2 = (c.size == 2 and c.matrix[0][1] == -1 and c.matrix[1][0] == -1)
    if is_a2:
        for tag in _A2_BASES:
            for w in W:
                s = realize_exceptional_a2(rs, tag, w)
                if s not in seen:
                    seen[s] = FaceDescriptor("exceptional_a2", tag=tag, w=w)
    return [(d, s) for s, d in seen.items()]


def all_weight_face_descriptors(c: CartanData, hw, window):
    """Standard faces w[(lambda - Z>=0 Pi_I) intersect wt V], w in W_{J_lambda}."""
    from .weights import integrability

    J = integrability(c, hw)
    W = weyl_group(c, J)
    seen: Dict[frozenset, FaceDescriptor] = {}
    nodes = list(c.nodes)
    from itertools import combinations as _comb
    for r in range(len(nodes) + 1):
        for I in _comb(nodes, r):
            for w in W:
                s = realize_standard_weights(c, hw, window, w, I)
                if s and s not in seen:
                    seen[s] = FaceDescriptor("standard_weights", w=w, I=tuple(I))
    return [(d, s) for s, d in seen.items()]


@dataclass(frozen=True)
class ClassifyResult:
    status: str  # 'face' | 'not_closed' | 'unclassified'
    descriptor: Optional[FaceDescriptor] = None
    witness: Optional[tuple] = None


def classify(Y: Iterable[Vec], X: Iterable[Vec], descriptors) -> ClassifyResult:
    """Match Y against realized face descriptors, else report a 212 violation."""
    Ys = frozenset(map(tuple, Y))
    ok, witness = is_212_closed(Ys, X)
    if not ok:
        return ClassifyResult("not_closed", witness=witness)
    for desc, s in descriptors:
        if s == Ys:
            return ClassifyResult("face", descriptor=desc)
    return ClassifyResult("unclassified")


# ---------------------------------------------------------------------------
# affine lifts

def generate_finite_part(rs: RootSystem) -> RootSystem:
    """The finite subsystem on nodes 1..l of an affine system, as its own system."""
    from . import cartan as _cartan
    from .roots import generate_finite

    c = rs.cartan
    sub = _cartan.subsystem(c, [n for n in c.nodes if n != 0])
    return generate_finite(sub)


def embed_finite(c_affine: CartanData, v: Vec) -> Vec:
    """Pad a finite-part vector (nodes 1..l) with a zero node-0 coefficient."""
    out = [0] * c_affine.size
    for n, x in zip([n for n in c_affine.nodes if n != 0], v):
        out[c_affine.pos(n)] = x
    return tuple(out)


def affine_lift(Z: Iterable[Vec], rs: RootSystem, H: int) -> frozenset:
    """(Z_s union Z_l) within the window: Z_s = (Z ^ short) + Z delta,
    Z_l = (Z ^ long) + r Z delta, r the twist of the affine type."""
    if not rs.is_affine:
        raise NotFiniteType("affine_lift needs an affine system")
    c = rs.cartan
    if H < height(rs.delta):
        raise WindowTooSmall("window is below the height of delta")
    r = c.type_label.twist if c.type_label is not None else 1
    _, short, long_ = finite_part_sets(generate_affine_window(c, H))
    window = generate_affine_window(c, H)
    allowed = set(window.all_roots())
    d = rs.delta
    hd = height(d)
    out = set()
    for z in set(map(tuple, Z)):
        steps = []
        if z in short:
            steps.append(1)
        if z in long_:
            steps.append(r)
        for step in steps:
            hz = height(z)
            n0 = -(H + hz) // (step * hd) - 1
            n1 = (H - hz) // (step * hd) + 1
            for n in range(n0, n1 + 1):
                cand = tuple(a + n * step * m for a, m in zip(z, d))
                if abs(height(cand)) <= H and cand in allowed:
                    out.add(cand)
    return frozenset(out)


def affine_212_equivalence_check(rs: RootSystem, H: Optional[int] = None) -> dict:
    """Both directions of the lift correspondence within a height window.

    Every 212-closed subset of the finite part must lift to a window-212-closed
    set, and every lifted subset that is window-212-closed must come from a
    212-closed finite-part subset.

    The ambient for the correspondence is the set of real roots in the window.
    With imaginary roots admitted into X, the identity
    (y1) + (y2) = (y1 + y2 + delta) + (-delta) refutes every candidate whose
    members ever sum to a root, which would wipe out exactly the lifted sets
    the correspondence is about; the periodic classification lives over the
    real part.
    """
    if H is None:
        H = rs.height_bound
    if H < 3 * height(rs.delta):
        raise WindowTooSmall("need H >= 3 * height(delta)")
    from . import cartan as _cartan

    window = generate_affine_window(rs.cartan, H)
    X = [b for b in window.all_roots()
         if _cartan.form_on_vectors(rs.cartan, b, b) > 0]
    index = pair_sum_index(X)
    finite_rs = generate_finite_part(rs)
    ring = [embed_finite(rs.cartan, v) for v in finite_rs.all_roots()]
    closed_finite = enumerate_212(ring)

    closed_lifts = 0
    forward_ok = True
    lifted_closed = set()
    for Z in closed_finite:
        L = affine_lift(Z, rs, H)
        ok, _ = is_212_closed(L, X, index)
        if ok:
            closed_lifts += 1
            lifted_closed.add(L)
        else:
            forward_ok = False

    # converse: scan every nonempty subset of the finite part
    backward_ok = True
    other_closed = 0
    n = len(ring)
    for m in range(1, (1 << n) - 1):
        Z = [ring[i] for i in range(n) if m & (1 << i)]
        L = affine_lift(Z, rs, H)
        if not L:
            continue
        ok, _ = is_212_closed(L, X, index)
        if ok and L not in lifted_closed:
            other_closed += 1
            backward_ok = False
    return {
        "window": H,
        "closed_finite": len(closed_finite),
        "closed_lifts": closed_lifts,
        "forward_ok": forward_ok,
        "backward_ok": backward_ok,
        "unexpected_closed_lifts": other_closed,
        "lifted_sets": frozenset(lifted_closed),
    }
