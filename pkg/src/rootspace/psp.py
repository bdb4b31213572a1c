"""Parabolic partial-sum decompositions and their certificate checker.

A decomposition of a positive root beta for a node subset I is an ordered
list gamma_1..gamma_m of unit-I-height roots summing to beta whose partial
sums are all positive roots; m is forced to equal the I-height of beta.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .errors import NoSingleStep, NotAPositiveRoot, SearchExhausted
from .roots import (Root, RootSystem, height, height_I, unit_I_height_set)


@dataclass(frozen=True)
class PspDecomposition:
    beta: Root
    I: tuple
    gammas: tuple  # ordered, partial sums from the left are roots

    def partial_sums(self) -> List[Root]:
        out, acc = [], (0,) * len(self.beta)
        for g in self.gammas:
            acc = tuple(a + b for a, b in zip(acc, g))
            out.append(acc)
        return out


def _unit_set(rs: RootSystem, I: Sequence, max_height: int) -> List[Root]:
    return [g for g in unit_I_height_set(rs, I) if height(g) <= max_height]


def one_step(beta: Root, I: Sequence, rs: RootSystem) -> Root:
    """Smallest gamma in Delta_{I,1} (canonical order) with beta - gamma
    a positive root.  Guaranteed to exist in finite type."""
    c = rs.cartan
    if beta not in rs.positive_roots:
        raise NotAPositiveRoot(f"{beta} is not a positive root in the window")
    if height_I(c, beta, I) <= 1:
        raise NotAPositiveRoot("one_step needs I-height > 1")
    for g in _unit_set(rs, I, height(beta) - 1):
        rest = tuple(b - a for a, b in zip(g, beta))
        if any(v < 0 for v in rest):
            continue
        if rest in rs.positive_roots:
            return g
    raise NoSingleStep(f"no single unit-I-height step from {beta}")


def decompose(beta: Root, I: Sequence, rs: RootSystem) -> PspDecomposition:
    """A valid decomposition, deterministic via canonical tie-breaking.

    Greedy peeling (guaranteed in finite type by the one-step lemma) with a
    depth-first fallback over ordered unit-height sequences for affine
    systems, where the greedy step may fail.
    """
    c = rs.cartan
    I = tuple(I)
    if beta not in rs.positive_roots:
        raise NotAPositiveRoot(f"{beta} is not a positive root in the window")
    m = height_I(c, beta, I)
    if m <= 0:
        raise NotAPositiveRoot("beta must have positive I-height")
    gammas: List[Root] = []
    cur = beta
    ok = True
    while height_I(c, cur, I) > 1:
        try:
            g = one_step(cur, I, rs)
        except NoSingleStep:
            ok = False
            break
        gammas.append(g)
        cur = tuple(b - a for a, b in zip(g, cur))
    if ok:
        gammas.append(cur)
        gammas.reverse()
        return PspDecomposition(beta, I, tuple(gammas))
    return _search(beta, I, rs, m)


def _search(beta: Root, I: tuple, rs: RootSystem, m: int) -> PspDecomposition:
    """Depth-first search over ordered sequences, partial sums pruned to roots."""
    units = _unit_set(rs, I, height(beta))
    zero = (0,) * len(beta)

    def extend(acc: Root, depth: int) -> Optional[Tuple[Root, ...]]:
        if depth == m:
            return () if acc == beta else None
        for g in units:
            nxt = tuple(a + b for a, b in zip(acc, g))
            if any(n > b for n, b in zip(nxt, beta)):
                continue
            if nxt != beta and nxt not in rs.positive_roots:
                continue
            if nxt == beta and depth + 1 < m:
                continue
            tail = extend(nxt, depth + 1)
            if tail is not None:
                return (g,) + tail
        return None

    found = extend(zero, 0)
    if found is None:
        raise SearchExhausted(f"no decomposition found for {beta}, I={I}")
    return PspDecomposition(beta, I, found)


def verify(d: PspDecomposition, rs: RootSystem):
    """(ok, failure) where failure pinpoints the first violated invariant."""
    c = rs.cartan
    units = set(unit_I_height_set(rs, d.I))
    for t, g in enumerate(d.gammas):
        if g not in units:
            return False, ("gamma_not_unit_height", t)
    if len(d.gammas) != height_I(c, d.beta, d.I):
        return False, ("wrong_length", len(d.gammas))
    sums = d.partial_sums()
    if not sums or sums[-1] != d.beta:
        return False, ("sum_mismatch", None)
    for t, s in enumerate(sums):
        if s not in rs.positive_roots:
            return False, ("partial_sum_not_root", t)
    return True, None
