"""Annihilator sets, principal ideals, and the annihilator family closure.

Subsets of a ring are packed bitsets (see bitsets.py): bit i set means
element i belongs. An :class:`AnnihilatorSet` remembers which elements
generated it so the claim can be rechecked from scratch.

The per-ring scan cache (:class:`RingScan`, in classifiers.py) precomputes
four vectors of bitsets in two table passes:

* ``rann[s]``  — right annihilator of the single element s,
* ``lann[s]``  — left annihilator of s,
* ``row_set[s]`` — the value set {s*r : r}, i.e. the right ideal sR,
* ``col_set[s]`` — the value set {r*s : r}, i.e. the left ideal Rs.

Annihilators of ideals reduce to intersections over generating sets:
r(additive-closure(G)) = intersection of r(g) for g in G, because sums of
left factors annihilate whenever each factor does.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Tuple

import numpy as np

from .bitsets import (
    bool_from_mask,
    full_mask,
    indices_of,
    iter_indices,
    mask_from_bool,
    popcount,
)
from .errors import FamilyCapExceeded
from .rings import StarRing


@dataclass(frozen=True)
class AnnihilatorSet:
    """A right or left annihilator with provenance.

    ``mask`` is the packed member bitset, ``universe`` the ring order,
    ``side`` is "right" or "left", and ``generators`` the element indices
    whose (one-sided) annihilators were intersected to produce it.
    """

    mask: int
    universe: int
    side: str
    generators: Tuple[int, ...]

    def indices(self) -> List[int]:
        return indices_of(self.mask)

    def contains(self, i: int) -> bool:
        return (self.mask >> i) & 1 == 1

    def count(self) -> int:
        return popcount(self.mask)

    def intersect(self, other: "AnnihilatorSet") -> "AnnihilatorSet":
        if self.universe != other.universe or self.side != other.side:
            raise ValueError("cannot intersect annihilators of different kinds")
        gens = tuple(sorted(set(self.generators) | set(other.generators)))
        return AnnihilatorSet(self.mask & other.mask, self.universe, self.side, gens)


def rann_single(ring: StarRing, s: int) -> int:
    """Bitset of {y : s*y = 0}."""
    return mask_from_bool(ring.mul_row(s) == 0)


def lann_single(ring: StarRing, s: int) -> int:
    """Bitset of {y : y*s = 0}."""
    return mask_from_bool(ring.mul_col(s) == 0)


def right_annihilator(ring: StarRing, elements: Iterable[int]) -> AnnihilatorSet:
    """r(S) = {y : s*y = 0 for every s in S}; r(empty) is the whole ring."""
    gens = tuple(sorted(set(int(e) for e in elements)))
    mask = full_mask(ring.order)
    for s in gens:
        mask &= rann_single(ring, s)
        if mask == 1:  # only zero remains; no further shrink possible
            break
    return AnnihilatorSet(mask, ring.order, "right", gens)


def left_annihilator(ring: StarRing, elements: Iterable[int]) -> AnnihilatorSet:
    gens = tuple(sorted(set(int(e) for e in elements)))
    mask = full_mask(ring.order)
    for s in gens:
        mask &= lann_single(ring, s)
        if mask == 1:
            break
    return AnnihilatorSet(mask, ring.order, "left", gens)


def additive_closure(ring: StarRing, seed_mask: int) -> int:
    """Smallest subgroup of (R, +) containing the seed set."""
    members = bool_from_mask(seed_mask | 1, ring.order)  # zero always in
    queue = [int(i) for i in np.flatnonzero(members)]
    neg = ring.neg_vector()
    head = 0
    while head < len(queue):
        x = queue[head]
        head += 1
        nx = int(neg[x])
        if not members[nx]:
            members[nx] = True
            queue.append(nx)
        current = np.flatnonzero(members)
        sums = ring.add_pairs(np.full(len(current), x, dtype=np.int64), current)
        for y in np.unique(sums):
            y = int(y)
            if not members[y]:
                members[y] = True
                queue.append(y)
    return mask_from_bool(members)


def principal_right_ideal(ring: StarRing, a: int) -> int:
    """Bitset of aR = {a*r : r in R} (the literal value set, no closure)."""
    return mask_from_bool(np.bincount(ring.mul_row(a), minlength=ring.order) > 0)


def principal_left_ideal(ring: StarRing, a: int) -> int:
    """Bitset of Ra = {r*a : r in R}."""
    return mask_from_bool(np.bincount(ring.mul_col(a), minlength=ring.order) > 0)


def principal_two_sided_ideal(ring: StarRing, a: int) -> int:
    """The two-sided ideal (a): additive closure of {a} + aR + Ra + RaR + Za."""
    seed = 1 << a
    row = ring.mul_row(a)
    col = ring.mul_col(a)
    seed |= mask_from_bool(np.bincount(row, minlength=ring.order) > 0)
    seed |= mask_from_bool(np.bincount(col, minlength=ring.order) > 0)
    for t in np.unique(col):
        seed |= mask_from_bool(
            np.bincount(ring.mul_row(int(t)), minlength=ring.order) > 0
        )
    # integer multiples of a
    cur = a
    while cur != 0:
        seed |= 1 << cur
        cur = ring.add(cur, a)
    return additive_closure(ring, seed)


def annihilator_family(
    ring: StarRing,
    mode: str,
    cap: int = 4096,
    rann: Optional[List[int]] = None,
    lann: Optional[List[int]] = None,
    row_sets: Optional[List[int]] = None,
    col_sets: Optional[List[int]] = None,
) -> List[AnnihilatorSet]:
    """All annihilators of the given kind, closed under intersection.

    mode "subset": right annihilators of arbitrary subsets. These are exactly
        the intersection closure of the single-element annihilators r({x})
        (plus the whole ring for the empty set).
    mode "right-ideal": {r(aR) : a in R}, closed under intersection.
    mode "two-sided-ideal": {r(I) : I a principal two-sided ideal}, closed
        under intersection; r((a)) is computed as the intersection of r(g)
        over the generating set {a} + aR + Ra + RaR.

    Results are sorted by mask value; deterministic for a given ring. Raises
    FamilyCapExceeded when the closure would exceed ``cap`` sets.
    """
    n = ring.order
    if rann is None:
        rann = [rann_single(ring, s) for s in range(n)]
    if mode == "subset":
        base = {}
        for a in range(n):
            base.setdefault(rann[a], (a,))
        seed_sets = [
            AnnihilatorSet(mask, n, "right", gens) for mask, gens in base.items()
        ]
        seed_sets.append(AnnihilatorSet(full_mask(n), n, "right", ()))
    elif mode == "right-ideal":
        if row_sets is None:
            row_sets = [
                mask_from_bool(np.bincount(ring.mul_row(a), minlength=n) > 0)
                for a in range(n)
            ]
        cache: Dict[int, int] = {}
        base = {}
        for a in range(n):
            mask = _ann_of_set(rann, row_sets[a], cache)
            base.setdefault(mask, (a,))
        seed_sets = [
            AnnihilatorSet(mask, n, "right", gens) for mask, gens in base.items()
        ]
    elif mode == "two-sided-ideal":
        if row_sets is None:
            row_sets = [
                mask_from_bool(np.bincount(ring.mul_row(a), minlength=n) > 0)
                for a in range(n)
            ]
        if col_sets is None:
            col_sets = [
                mask_from_bool(np.bincount(ring.mul_col(a), minlength=n) > 0)
                for a in range(n)
            ]
        r_of_row: Dict[int, int] = {}
        r_of_col: Dict[int, int] = {}
        r_of_sandwich: Dict[int, int] = {}
        base = {}
        for a in range(n):
            mask = rann[a]
            mask &= _ann_of_set(rann, row_sets[a], r_of_row)
            mask &= _ann_of_set(rann, col_sets[a], r_of_col)
            if col_sets[a] not in r_of_sandwich:
                acc = full_mask(n)
                for t in iter_indices(col_sets[a]):
                    acc &= _ann_of_set(rann, row_sets[t], r_of_row)
                r_of_sandwich[col_sets[a]] = acc
            mask &= r_of_sandwich[col_sets[a]]
            base.setdefault(mask, (a,))
        seed_sets = [
            AnnihilatorSet(mask, n, "right", gens) for mask, gens in base.items()
        ]
    else:
        raise ValueError("unknown annihilator family mode %r" % (mode,))

    return _intersection_closure(seed_sets, cap)


def _ann_of_set(rann: List[int], member_mask: int, cache: Dict[int, int]) -> int:
    """Intersection of rann over the members of a bitset, memoized by bitset."""
    hit = cache.get(member_mask)
    if hit is not None:
        return hit
    acc = full_mask(len(rann))
    for s in iter_indices(member_mask):
        acc &= rann[s]
    cache[member_mask] = acc
    return acc


def _intersection_closure(
    seeds: List[AnnihilatorSet], cap: int
) -> List[AnnihilatorSet]:
    seen: Dict[int, AnnihilatorSet] = {}
    queue: List[AnnihilatorSet] = []
    for s in sorted(seeds, key=lambda t: t.mask):
        if s.mask not in seen:
            seen[s.mask] = s
            queue.append(s)
    head = 0
    while head < len(queue):
        cur = queue[head]
        head += 1
        for other in list(queue[:head]):
            meet = cur.mask & other.mask
            if meet not in seen:
                if len(seen) >= cap:
                    raise FamilyCapExceeded(cap)
                merged = cur.intersect(other)
                seen[meet] = merged
                queue.append(merged)
    return sorted(seen.values(), key=lambda t: t.mask)
