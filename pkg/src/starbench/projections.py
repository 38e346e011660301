"""Projections, the projection poset, and projection-valued operators.

A projection is a self-adjoint idempotent (e = e* = e^2). The poset order is
e <= f iff ef = e = fe; for projections in a *-ring the two one-sided
conditions are equivalent, and this equivalence is asserted during
construction rather than assumed.

:class:`RingScan` bundles the per-ring caches every scan needs: annihilator
bitsets for single elements, row/column value sets (the sets aR and Ra), the
projection poset, and precomputed rp/lp/central-cover tables. Classifier and
verification code shares one scan per ring.

Operator conventions (all searches ascend element indices, so results and
witnesses are the lowest-index ones):

* rp(x): the projection e with xe = x and (xy = 0 implies ey = 0).
* lp(x): mirror; cross-checked against star(rp(star(x))).
* rp_via_star(x): rp(x* x), asserted equal to rp(x); sensible when the
  involution is proper.
* central_cover(x): least central projection h with hx = x.
* largest_eigen_projection(A, a, lam): greatest projection g with
  a g = lam.g (optionally among central projections only).
* scalar domination reports: for every nonzero scalar lam, a projection
  e_lam dominating LP(x) (or C(x)) for all x killed by lam.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, List, Optional, Tuple

import numpy as np

from .algebra import ScalarAlgebra
from .annihilators import lann_single, rann_single
from .bitsets import is_subset, mask_from_bool
from .errors import (
    AmbiguousLeftProjection,
    AmbiguousRightProjection,
    NoCentralCover,
    NoGreatestElement,
    NoLeftProjection,
    NoRightProjection,
    VerificationFailed,
)
from .rings import StarRing


@dataclass(frozen=True)
class Projection:
    index: int
    central: bool


class ProjectionPoset:
    """All projections of a ring, ordered by e <= f iff ef = e = fe."""

    def __init__(self, ring: StarRing):
        self.ring = ring
        n = ring.order
        idx = np.arange(n, dtype=np.int64)
        fixed = ring.star_vector() == idx
        cand = np.flatnonzero(fixed)
        idem = ring.mul_pairs(cand, cand) == cand
        self.indices = cand[idem].astype(np.int64)
        p = len(self.indices)
        self._pos: Dict[int, int] = {int(e): i for i, e in enumerate(self.indices)}

        central = np.zeros(p, dtype=bool)
        for i, e in enumerate(self.indices):
            e = int(e)
            central[i] = np.array_equal(ring.mul_row(e), ring.mul_col(e))
        self.central_flags = central

        leq = np.zeros((p, p), dtype=bool)
        for i in range(p):
            e = int(self.indices[i])
            for j in range(p):
                f = int(self.indices[j])
                ef = ring.mul(e, f) == e
                fe = ring.mul(f, e) == e
                if ef != fe:
                    raise VerificationFailed(
                        "projection-order-asymmetry",
                        (ring.decode(e), ring.decode(f)),
                    )
                leq[i, j] = ef
        self.leq = leq

    def __len__(self) -> int:
        return len(self.indices)

    def items(self) -> List[Projection]:
        return [
            Projection(int(e), bool(c))
            for e, c in zip(self.indices, self.central_flags)
        ]

    def position(self, e_index: int) -> int:
        return self._pos[int(e_index)]

    def is_projection(self, e_index: int) -> bool:
        return int(e_index) in self._pos

    def leq_elements(self, e_index: int, f_index: int) -> bool:
        return bool(self.leq[self.position(e_index), self.position(f_index)])

    def central_positions(self) -> np.ndarray:
        return np.flatnonzero(self.central_flags)

    def least(self, positions) -> Optional[int]:
        """Position of the least member of the set, or None."""
        positions = list(positions)
        for g in positions:
            if all(self.leq[g, h] for h in positions):
                return int(g)
        return None

    def greatest(self, positions) -> Optional[int]:
        positions = list(positions)
        for g in positions:
            if all(self.leq[h, g] for h in positions):
                return int(g)
        return None


class RingScan:
    """Shared per-ring caches for the exhaustive scans.

    Everything is computed lazily and exactly once. The arrays returned by
    rp_all/lp_all use -1 for "no such projection" and -2 for "ambiguous"
    (ambiguity cannot happen in a valid *-ring; kept as a guard).
    """

    def __init__(self, ring: StarRing):
        self.ring = ring

    @cached_property
    def rann(self) -> List[int]:
        r = self.ring
        return [rann_single(r, s) for s in range(r.order)]

    @cached_property
    def lann(self) -> List[int]:
        r = self.ring
        return [lann_single(r, s) for s in range(r.order)]

    @cached_property
    def row_sets(self) -> List[int]:
        """row_sets[a] = bitset of aR = {a*r : r}."""
        r = self.ring
        n = r.order
        return [
            mask_from_bool(np.bincount(r.mul_row(a), minlength=n) > 0)
            for a in range(n)
        ]

    @cached_property
    def col_sets(self) -> List[int]:
        """col_sets[a] = bitset of Ra = {r*a : r}."""
        r = self.ring
        n = r.order
        return [
            mask_from_bool(np.bincount(r.mul_col(a), minlength=n) > 0)
            for a in range(n)
        ]

    @cached_property
    def poset(self) -> ProjectionPoset:
        return ProjectionPoset(self.ring)

    @cached_property
    def _fixed_right(self) -> np.ndarray:
        """fixed_right[i, x] <=> x * e_i = x, for projection position i."""
        r = self.ring
        idx = np.arange(r.order, dtype=np.int64)
        rows = [r.mul_col(int(e)) == idx for e in self.poset.indices]
        return np.array(rows, dtype=bool).reshape(len(self.poset), r.order)

    @cached_property
    def _fixed_left(self) -> np.ndarray:
        """fixed_left[i, x] <=> e_i * x = x."""
        r = self.ring
        idx = np.arange(r.order, dtype=np.int64)
        rows = [r.mul_row(int(e)) == idx for e in self.poset.indices]
        return np.array(rows, dtype=bool).reshape(len(self.poset), r.order)

    @cached_property
    def rp_all(self) -> np.ndarray:
        poset = self.poset
        rann = self.rann
        n = self.ring.order
        fixed = self._fixed_right
        out = np.full(n, -1, dtype=np.int64)
        e_ann = [rann[int(e)] for e in poset.indices]
        for x in range(n):
            found = -1
            count = 0
            for i in range(len(poset)):
                if fixed[i, x] and is_subset(rann[x], e_ann[i]):
                    count += 1
                    if found < 0:
                        found = int(poset.indices[i])
            out[x] = -2 if count > 1 else found
        return out

    @cached_property
    def lp_all(self) -> np.ndarray:
        poset = self.poset
        lann = self.lann
        n = self.ring.order
        fixed = self._fixed_left
        out = np.full(n, -1, dtype=np.int64)
        e_ann = [lann[int(e)] for e in poset.indices]
        for x in range(n):
            found = -1
            count = 0
            for i in range(len(poset)):
                if fixed[i, x] and is_subset(lann[x], e_ann[i]):
                    count += 1
                    if found < 0:
                        found = int(poset.indices[i])
            out[x] = -2 if count > 1 else found
        return out

    @cached_property
    def cover_all(self) -> np.ndarray:
        """cover_all[x] = index of C(x), or -1 when no central cover exists."""
        poset = self.poset
        n = self.ring.order
        centrals = poset.central_positions()
        fixed = self._fixed_left[centrals] if len(centrals) else np.zeros((0, n), bool)
        out = np.full(n, -1, dtype=np.int64)
        memo: Dict[bytes, int] = {}
        for x in range(n):
            key = fixed[:, x].tobytes()
            if key in memo:
                out[x] = memo[key]
                continue
            fixers = [int(centrals[i]) for i in np.flatnonzero(fixed[:, x])]
            least = poset.least(fixers) if fixers else None
            val = int(poset.indices[least]) if least is not None else -1
            memo[key] = val
            out[x] = val
        return out

    @cached_property
    def eR_by_mask(self) -> Dict[int, Tuple[int, ...]]:
        """Map from the bitset of eR to the projections e producing it."""
        out: Dict[int, List[int]] = {}
        for e in self.poset.indices:
            out.setdefault(self.row_sets[int(e)], []).append(int(e))
        return {k: tuple(v) for k, v in out.items()}

    @cached_property
    def Rf_by_mask(self) -> Dict[int, Tuple[int, ...]]:
        out: Dict[int, List[int]] = {}
        for f in self.poset.indices:
            out.setdefault(self.col_sets[int(f)], []).append(int(f))
        return {k: tuple(v) for k, v in out.items()}


def projections(ring: StarRing, scan: Optional[RingScan] = None) -> ProjectionPoset:
    """The projection poset of a ring."""
    if scan is not None:
        return scan.poset
    return ProjectionPoset(ring)


def _candidates_rp(ring: StarRing, x: int, scan: RingScan) -> List[int]:
    poset = scan.poset
    out = []
    for i in range(len(poset)):
        e = int(poset.indices[i])
        if scan._fixed_right[i, x] and is_subset(scan.rann[x], scan.rann[e]):
            out.append(e)
    return out


def rp(ring: StarRing, x: int, scan: Optional[RingScan] = None) -> int:
    """Right projection of x: the unique projection e with xe = x and
    rann(x) contained in rann(e). Raises NoRightProjection or, should a
    *-ring axiom be broken upstream, AmbiguousRightProjection."""
    scan = scan or RingScan(ring)
    val = int(scan.rp_all[x])
    if val >= 0:
        return val
    if val == -1:
        raise NoRightProjection(ring.decode(x))
    cands = _candidates_rp(ring, x, scan)
    raise AmbiguousRightProjection(ring.decode(x), [ring.decode(e) for e in cands])


def lp(ring: StarRing, x: int, scan: Optional[RingScan] = None) -> int:
    """Left projection of x; cross-checked against star(rp(star(x)))."""
    scan = scan or RingScan(ring)
    val = int(scan.lp_all[x])
    mirror = int(scan.rp_all[ring.star(x)])
    if val >= 0:
        mirrored = ring.star(mirror) if mirror >= 0 else -1
        if mirrored != val:
            raise VerificationFailed(
                "lp-vs-star-rp-star", (ring.decode(x), ring.decode(val))
            )
        return val
    if val == -1:
        if mirror != -1:
            raise VerificationFailed("lp-vs-star-rp-star", (ring.decode(x),))
        raise NoLeftProjection(ring.decode(x))
    poset = scan.poset
    cands = [
        int(poset.indices[i])
        for i in range(len(poset))
        if scan._fixed_left[i, x]
        and is_subset(scan.lann[x], scan.lann[int(poset.indices[i])])
    ]
    raise AmbiguousLeftProjection(ring.decode(x), [ring.decode(e) for e in cands])


def rp_via_star(ring: StarRing, x: int, scan: Optional[RingScan] = None) -> int:
    """rp(x* x), asserted equal to rp(x).

    The equality is a theorem for proper involutions; on rings where it
    fails the mismatch is surfaced as VerificationFailed rather than
    silently returning either side.
    """
    scan = scan or RingScan(ring)
    xs = ring.mul(ring.star(x), x)
    via = rp(ring, xs, scan)
    direct = rp(ring, x, scan)
    if via != direct:
        raise VerificationFailed(
            "rp-via-star-mismatch",
            (ring.decode(x), ring.decode(via), ring.decode(direct)),
        )
    return via


def central_cover(ring: StarRing, x: int, scan: Optional[RingScan] = None) -> int:
    """C(x): least central projection h with hx = x."""
    scan = scan or RingScan(ring)
    val = int(scan.cover_all[x])
    if val < 0:
        raise NoCentralCover(ring.decode(x))
    return val


def largest_eigen_projection(
    algebra: ScalarAlgebra,
    a: int,
    lam: int,
    central_only: bool = False,
    scan: Optional[RingScan] = None,
) -> int:
    """Greatest projection g with a*g = lam.g (g central when asked).

    g = 0 always qualifies, so the candidate set is never empty, but a
    greatest element may still not exist; that raises NoGreatestElement.
    """
    if lam == 0:
        raise ValueError("lam must be a nonzero scalar index")
    ring = algebra.ring
    scan = scan or RingScan(ring)
    poset = scan.poset
    lam_row = algebra.action_row(lam)
    positions = []
    for i in range(len(poset)):
        if central_only and not poset.central_flags[i]:
            continue
        g = int(poset.indices[i])
        if ring.mul(a, g) == int(lam_row[g]):
            positions.append(i)
    top = poset.greatest(positions)
    if top is None:
        raise NoGreatestElement(
            [ring.decode(int(poset.indices[i])) for i in positions]
        )
    return int(poset.indices[top])


@dataclass(frozen=True)
class ScalarDominationReport:
    """Certificate for the scalar domination conditions.

    For each nonzero lam (by index), ``selections[lam]`` is the chosen
    dominating projection e_lam and ``least_unique[lam]`` records whether the
    residual upper-bound set had a least element (when False, the lowest
    index member was picked). ``failure`` is the first (lam, x) whose
    LP(x) / C(x) emptied the running upper-bound set; the scan stops there.
    """

    kind: str  # "lp" or "central-cover"
    ok: bool
    selections: Dict[int, int]
    least_unique: Dict[int, bool]
    failure: Optional[Tuple[int, int]]

    def to_json(self, algebra: ScalarAlgebra) -> dict:
        K, R = algebra.scalars, algebra.ring
        return {
            "kind": self.kind,
            "ok": self.ok,
            "selections": [
                {
                    "lam": K.decode(lam),
                    "projection": R.decode(e),
                    "least_unique": self.least_unique[lam],
                }
                for lam, e in sorted(self.selections.items())
            ],
            "failure": None
            if self.failure is None
            else {
                "lam": K.decode(self.failure[0]),
                "x": R.decode(self.failure[1]),
            },
        }


def _domination_report(
    algebra: ScalarAlgebra,
    kind: str,
    scan: Optional[RingScan],
) -> ScalarDominationReport:
    ring = algebra.ring
    scan = scan or RingScan(ring)
    poset = scan.poset
    table = scan.lp_all if kind == "lp" else scan.cover_all
    selections: Dict[int, int] = {}
    unique: Dict[int, bool] = {}
    for lam in range(1, algebra.scalars.order):
        killed = np.flatnonzero(algebra.action_row(lam) == 0)
        bounds = list(range(len(poset)))
        for x in killed:
            x = int(x)
            low = int(table[x])
            if low == -1:
                if kind == "lp":
                    raise NoLeftProjection(ring.decode(x))
                raise NoCentralCover(ring.decode(x))
            if low == -2:
                raise AmbiguousLeftProjection(ring.decode(x), [])
            low_pos = poset.position(low)
            bounds = [b for b in bounds if poset.leq[low_pos, b]]
            if not bounds:
                return ScalarDominationReport(kind, False, selections, unique, (lam, x))
        least = poset.least(bounds)
        if least is not None:
            selections[lam] = int(poset.indices[least])
            unique[lam] = True
        else:
            selections[lam] = int(poset.indices[min(bounds)])
            unique[lam] = False
    return ScalarDominationReport(kind, True, selections, unique, None)


def condition3_witnesses(
    algebra: ScalarAlgebra, scan: Optional[RingScan] = None
) -> ScalarDominationReport:
    """For each nonzero lam, a projection dominating LP(x) whenever lam.x = 0."""
    return _domination_report(algebra, "lp", scan)


def condition_beta_witnesses(
    algebra: ScalarAlgebra, scan: Optional[RingScan] = None
) -> ScalarDominationReport:
    """Central-cover variant: e_lam dominates C(x) whenever lam.x = 0."""
    return _domination_report(algebra, "central-cover", scan)
