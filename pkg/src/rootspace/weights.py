"""Weight sets of highest weight modules via the Minkowski-difference formula.

A highest weight is stored through its exact rational co-root pairings; a
weight mu = lambda - sum_i d_i alpha_i is stored as its nonnegative integer
depth vector d.  Weight-set windows are truncated at a total depth bound and
carry an ``exact`` flag telling whether the whole set fit inside the window.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple

from .cartan import CartanData
from .errors import (JEqualsWholeSet, NotDominantIntegralOnJ, RootspaceError)
from .roots import RootSystem, height, unit_I_height_set

Depth = Tuple[int, ...]


@dataclass(frozen=True)
class HighestWeight:
    pairings: tuple  # Fractions <lambda, alpha_i^vee> in node order

    @staticmethod
    def of(values: Iterable) -> "HighestWeight":
        return HighestWeight(tuple(Fraction(v) for v in values))

    def is_dominant_integral(self) -> bool:
        return all(p.denominator == 1 and p >= 0 for p in self.pairings)


@dataclass(frozen=True)
class WeightSetWindow:
    anchor: HighestWeight
    max_depth: int
    depths: frozenset  # of depth tuples
    exact: bool

    def sorted_depths(self) -> List[Depth]:
        return sorted(self.depths, key=lambda d: (sum(d), d))


@dataclass(frozen=True)
class ModuleSpec:
    """kind is 'simple', 'verma' or 'given' (user-supplied top part)."""
    kind: str
    cartan: CartanData
    hw: HighestWeight
    top_part: Optional[WeightSetWindow] = None
    given_integrability: Optional[tuple] = None


def integrability(c: CartanData, hw: HighestWeight) -> tuple:
    """J_lambda: nodes whose co-root pairing is a nonnegative integer."""
    return tuple(n for n, p in zip(c.nodes, hw.pairings)
                 if p.denominator == 1 and p >= 0)


def integrability_of_module(spec: ModuleSpec) -> tuple:
    if spec.kind == "simple":
        return integrability(spec.cartan, spec.hw)
    if spec.kind == "verma":
        return ()
    if spec.given_integrability is None:
        raise RootspaceError("'given' modules must state their integrability")
    return tuple(spec.given_integrability)


def weight_pairing(c: CartanData, hw: HighestWeight, depth: Sequence[int],
                   node) -> Fraction:
    """<mu, alpha_node^vee> for mu = lambda - sum d_i alpha_i."""
    row = c.matrix[c.pos(node)]
    return hw.pairings[c.pos(node)] - sum(
        row[i] * depth[i] for i in range(c.size) if depth[i])


def reflect_weight(c: CartanData, hw: HighestWeight, depth: Depth, node) -> Depth:
    p = weight_pairing(c, hw, depth, node)
    if p.denominator != 1:
        raise RootspaceError("reflection requires an integer pairing")
    d = list(depth)
    d[c.pos(node)] += int(p)
    return tuple(d)


def _antidominant_depth(c: CartanData, hw: HighestWeight, J: Sequence) -> Depth:
    """Depth of the lowest weight of the integrable g_J-module (finite g_J)."""
    depth = (0,) * c.size
    for _ in range(100000):
        node = next((j for j in J
                     if weight_pairing(c, hw, depth, j) > 0), None)
        if node is None:
            return depth
        depth = reflect_weight(c, hw, depth, node)
    raise RootspaceError("antidominant descent did not terminate")


def integrable_weights(c: CartanData, hw: HighestWeight, D: int,
                       J: Optional[Sequence] = None) -> WeightSetWindow:
    """Weight set of the integrable simple module over g_J, truncated at D.

    Dominant weights are exactly the J-dominant points below lambda in the
    J-root lattice; the rest is their W_J-orbit, walked by reflections along
    paths of increasing depth.
    """
    J = tuple(c.nodes if J is None else J)
    jpos = [c.pos(j) for j in J]
    for j in J:
        p = hw.pairings[c.pos(j)]
        if p.denominator != 1 or p < 0:
            raise NotDominantIntegralOnJ(f"pairing at node {j} is {p}")

    affine = c.is_affine and len(J) == c.size
    if affine:
        box = D
        exact = False
    else:
        box = min(D, sum(_antidominant_depth(c, hw, J)))
        exact = sum(_antidominant_depth(c, hw, J)) <= D

    # dominant candidates: depth supported on J, total <= box, J-dominant
    dominant = []

    def scan(i: int, depth: list, left: int):
        if i == len(jpos):
            if all(weight_pairing(c, hw, depth, j) >= 0 for j in J):
                dominant.append(tuple(depth))
            return
        for v in range(left + 1):
            depth[jpos[i]] = v
            scan(i + 1, depth, left - v)
        depth[jpos[i]] = 0

    scan(0, [0] * c.size, box)

    out = set(dominant)
    frontier = list(dominant)
    while frontier:
        nxt = []
        for d in frontier:
            for j in J:
                p = weight_pairing(c, hw, d, j)
                if p > 0:  # reflecting down increases depth
                    d2 = reflect_weight(c, hw, d, j)
                    if sum(d2) <= D and d2 not in out:
                        out.add(d2)
                        nxt.append(d2)
        frontier = nxt
    return WeightSetWindow(hw, D, frozenset(out), exact)


def minimal_generators(rs: RootSystem, J: Sequence) -> list:
    """Delta_{J^c,1}: the minimal generating set of Z>=0(Delta+ \\ Delta_J+)."""
    J = set(J)
    comp = [n for n in rs.cartan.nodes if n not in J]
    if not comp:
        raise JEqualsWholeSet("J = I leaves no generators")
    return unit_I_height_set(rs, comp)


def cone_vectors(generators: Sequence, max_total: int) -> set:
    """All Z>=0-combinations of the generators with total height <= max_total."""
    out = set()
    gens = list(generators)
    n = len(gens[0]) if gens else 0

    def rec(i: int, acc: tuple, left: int):
        out.add(acc)
        for k in range(i, len(gens)):
            g = gens[k]
            h = height(g)
            if h <= left:
                rec(k, tuple(a + b for a, b in zip(acc, g)), left - h)

    rec(0, (0,) * n, max_total)
    return out


def _top_part(spec: ModuleSpec, rs: RootSystem, D: int) -> WeightSetWindow:
    c = spec.cartan
    J = integrability(c, spec.hw)
    if spec.kind == "simple":
        if not J:
            return WeightSetWindow(spec.hw, D, frozenset({(0,) * c.size}), True)
        return integrable_weights(c, spec.hw, D, J)
    if spec.kind == "verma":
        # wt_J M(lambda) = lambda - Z>=0 Pi_J, every depth occurs
        jpos = [c.pos(j) for j in J]
        depths = set()

        def scan(i, depth, left):
            if i == len(jpos):
                depths.add(tuple(depth))
                return
            for v in range(left + 1):
                depth[jpos[i]] = v
                scan(i + 1, depth, left - v)
            depth[jpos[i]] = 0

        scan(0, [0] * c.size, D)
        return WeightSetWindow(spec.hw, D, frozenset(depths), not J)
    if spec.top_part is None:
        raise RootspaceError("'given' modules need a top part window")
    return spec.top_part


def weights_of_module(spec: ModuleSpec, rs: RootSystem, D: int) -> WeightSetWindow:
    """wt V = wt_{J_lambda} V - Z>=0 Delta_{J_lambda^c, 1}, truncated at D."""
    c = spec.cartan
    J = integrability(c, spec.hw)
    top = _top_part(spec, rs, D)
    if len(J) == c.size:
        return top
    gens = minimal_generators(rs, J)
    out = set()
    for t in top.depths:
        td = sum(t)
        if td > D:
            continue
        for cvec in cone_vectors(gens, D - td):
            out.add(tuple(a + b for a, b in zip(t, cvec)))
    # a nonempty cone makes the weight set infinite downward
    return WeightSetWindow(spec.hw, D, frozenset(out), False)


def weights_two_ways_agree(spec: ModuleSpec, rs: RootSystem, D: int) -> bool:
    """Minkowski difference by Delta_{J^c,1} vs by all of Delta+ \\ Delta_J+."""
    c = spec.cartan
    J = integrability(c, spec.hw)
    top = _top_part(spec, rs, D)
    if len(J) == c.size:
        return True
    gens1 = minimal_generators(rs, J)
    jset = set(J)
    gens2 = [b for b in rs.sorted_positive()
             if any(b[c.pos(n)] for n in c.nodes if n not in jset)
             and height(b) <= D]

    def build(gens):
        out = set()
        for t in top.depths:
            td = sum(t)
            if td > D:
                continue
            for cvec in cone_vectors(gens, D - td):
                out.add(tuple(a + b for a, b in zip(t, cvec)))
        return out

    return build(gens1) == build(gens2)


def _orbit_depths(c: CartanData, hw: HighestWeight) -> set:
    """Depth vectors of the Weyl orbit W lambda (lambda dominant integral)."""
    start = (0,) * c.size
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for d in frontier:
            for node in c.nodes:
                d2 = reflect_weight(c, hw, d, node)
                if d2 not in seen:
                    seen.add(d2)
                    nxt.append(d2)
        frontier = nxt
    return seen


def hull_lattice_recover(spec: ModuleSpec, rs: RootSystem, D: int) -> bool:
    """Does the weight set equal conv(weights) intersected with the depth
    lattice?  Checked within depth D (exact when the window is exact)."""
    from . import polyfaces

    c = spec.cartan
    win = weights_of_module(spec, rs, D)
    J = integrability(c, spec.hw)
    if spec.kind == "simple" and len(J) == c.size:
        # integrable case: the hull is conv(W lambda), so its vertices lie in
        # the orbit of the highest weight -- far fewer generators to scan
        pts = [tuple(Fraction(v) for v in d) for d in _orbit_depths(c, spec.hw)]
    else:
        pts = [tuple(Fraction(v) for v in d) for d in win.depths]
    rays = []
    if len(J) < c.size:
        rays = [tuple(Fraction(v) for v in g) for g in minimal_generators(rs, J)]
    poly = polyfaces.hull(pts, rays)
    bounds = [max(int(p[i]) for p in pts) for i in range(c.size)]

    cand = set()

    def scan(i, depth, left):
        if i == c.size:
            q = tuple(Fraction(v) for v in depth)
            if polyfaces.contains(poly, q):
                cand.add(tuple(depth))
            return
        for v in range(min(bounds[i] if not rays else left, left) + 1):
            depth[i] = v
            scan(i + 1, depth, left - v)
        depth[i] = 0

    scan(0, [0] * c.size, D)
    return cand == set(win.depths)
