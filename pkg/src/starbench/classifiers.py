"""Classifiers: structural predicates on *-rings, as timed reports.

Every classifier returns a :class:`PropertyReport` and scans elements in
ascending index order, so the reported witness is always the lowest-index
one. A shared :class:`~starbench.projections.RingScan` makes repeated
classification of one ring cheap; verdicts for descriptor-built rings are
additionally memoized per (descriptor hash, property).

Definitions implemented (R a finite *-ring, r/l one-sided annihilators):

* proper involution: x*x = 0 implies x = 0.
* semi-proper: x R x* = 0 implies x = 0.
* reduced: x^2 = 0 implies x = 0. abelian: idempotents are central.
* Rickart*: r({x}) = eR for a projection e, for every x.
* weakly Rickart*: every x has a right projection RP(x).
* Baer*: r(S) = eR for every subset S.
* quasi-Baer*: r(I) = eR for every two-sided ideal I.
* p.q.-Baer*: r(aR) = eR and l(Ra) = Rf (projections e, f), for every a.
* weakly p.q.-Baer*: every x has a central cover C(x) and
  xRy = 0 iff C(x)y = 0.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from . import kernels
from .annihilators import annihilator_family, principal_two_sided_ideal
from .bitsets import bool_from_mask, contains, full_mask, indices_of
from .config import DEFAULT_LIMITS, Limits
from .descriptor import Descriptor, descriptor_hash, to_dsl
from .errors import FamilyCapExceeded, VerificationFailed
from .projections import RingScan
from .rings import StarRing, build_ring


@dataclass(frozen=True)
class PropertyReport:
    ring: str
    prop: str
    verdict: bool
    witness: Optional[Any]
    micros: int

    def to_json(self, include_timings: bool = False) -> dict:
        out: Dict[str, Any] = {
            "ring": self.ring,
            "property": self.prop,
            "verdict": self.verdict,
        }
        if self.witness is not None:
            out["witness"] = self.witness
        if include_timings:
            out["micros"] = self.micros
        return out

    def render(self) -> str:
        mark = "true" if self.verdict else "false"
        tail = "" if self.witness is None else "  witness=%s" % (self.witness,)
        return "%-28s %-5s%s" % (self.prop, mark, tail)


_REPORT_CACHE: Dict[Tuple[str, str], PropertyReport] = {}


def clear_report_cache() -> None:
    _REPORT_CACHE.clear()


def _cached(ring: StarRing, prop: str) -> Optional[PropertyReport]:
    if ring.descriptor is None:
        return None
    return _REPORT_CACHE.get((descriptor_hash(ring.descriptor), prop))


def _store(ring: StarRing, report: PropertyReport) -> PropertyReport:
    if ring.descriptor is not None:
        _REPORT_CACHE[(descriptor_hash(ring.descriptor), report.prop)] = report
    return report


def _finish(
    ring: StarRing, prop: str, verdict: bool, witness: Optional[Any], t0: int
) -> PropertyReport:
    micros = (time.perf_counter_ns() - t0) // 1000
    return _store(ring, PropertyReport(ring.label, prop, verdict, witness, int(micros)))


def is_proper_involution(ring: StarRing, scan: Optional[RingScan] = None) -> PropertyReport:
    hit = _cached(ring, "proper")
    if hit is not None:
        return hit
    t0 = time.perf_counter_ns()
    idx = np.arange(ring.order, dtype=np.int64)
    diag = ring.mul_pairs(ring.star_vector(), idx)  # x* x
    bad = np.flatnonzero((diag == 0) & (idx != 0))
    if len(bad):
        x = int(bad[0])
        return _finish(ring, "proper", False, {"x": ring.decode(x)}, t0)
    return _finish(ring, "proper", True, None, t0)


def is_semi_proper(ring: StarRing, scan: Optional[RingScan] = None) -> PropertyReport:
    hit = _cached(ring, "semi-proper")
    if hit is not None:
        return hit
    t0 = time.perf_counter_ns()
    n = ring.order
    star = ring.star_vector()
    witness = None
    if ring.has_tables():
        mul = np.ascontiguousarray(ring.mul_table(), dtype=np.int32)
        star32 = np.ascontiguousarray(star, dtype=np.int32)
        witness = kernels.semi_proper_witness(mul, star32)
    else:
        for a in range(1, n):
            row = ring.mul_row(a)  # a r over r
            prods = ring.mul_pairs(row, np.full(n, int(star[a]), dtype=np.int64))
            if not prods.any():
                witness = a
                break
    if witness is not None:
        return _finish(
            ring, "semi-proper", False, {"x": ring.decode(int(witness))}, t0
        )
    return _finish(ring, "semi-proper", True, None, t0)


def is_reduced(ring: StarRing, scan: Optional[RingScan] = None) -> PropertyReport:
    hit = _cached(ring, "reduced")
    if hit is not None:
        return hit
    t0 = time.perf_counter_ns()
    idx = np.arange(ring.order, dtype=np.int64)
    squares = ring.mul_pairs(idx, idx)
    bad = np.flatnonzero((squares == 0) & (idx != 0))
    if len(bad):
        return _finish(ring, "reduced", False, {"x": ring.decode(int(bad[0]))}, t0)
    return _finish(ring, "reduced", True, None, t0)


def is_abelian(ring: StarRing, scan: Optional[RingScan] = None) -> PropertyReport:
    hit = _cached(ring, "abelian")
    if hit is not None:
        return hit
    t0 = time.perf_counter_ns()
    idx = np.arange(ring.order, dtype=np.int64)
    idems = np.flatnonzero(ring.mul_pairs(idx, idx) == idx)
    for e in idems:
        e = int(e)
        row = ring.mul_row(e)
        col = ring.mul_col(e)
        neq = row != col
        if neq.any():
            y = int(np.argmax(neq))
            return _finish(
                ring,
                "abelian",
                False,
                {"idempotent": ring.decode(e), "witness": ring.decode(y)},
                t0,
            )
    return _finish(ring, "abelian", True, None, t0)


def has_unity(ring: StarRing, scan: Optional[RingScan] = None) -> PropertyReport:
    hit = _cached(ring, "unity")
    if hit is not None:
        return hit
    t0 = time.perf_counter_ns()
    if ring.unity is None:
        return _finish(ring, "unity", False, None, t0)
    return _finish(ring, "unity", True, {"unity": ring.decode(ring.unity)}, t0)


def _matching_e(scan: RingScan, mask: int) -> Optional[int]:
    """A projection e with eR equal to the given bitset (and e a member)."""
    for e in scan.eR_by_mask.get(mask, ()):
        if contains(mask, e):
            return e
    return None


def _matching_f_left(scan: RingScan, mask: int) -> Optional[int]:
    for f in scan.Rf_by_mask.get(mask, ()):
        if contains(mask, f):
            return f
    return None


def is_rickart_star(ring: StarRing, scan: Optional[RingScan] = None) -> PropertyReport:
    hit = _cached(ring, "rickart-star")
    if hit is not None:
        return hit
    t0 = time.perf_counter_ns()
    scan = scan or RingScan(ring)
    for x in range(ring.order):
        if _matching_e(scan, scan.rann[x]) is None:
            return _finish(ring, "rickart-star", False, {"x": ring.decode(x)}, t0)
    return _finish(ring, "rickart-star", True, None, t0)


def is_weakly_rickart_star(
    ring: StarRing, scan: Optional[RingScan] = None
) -> PropertyReport:
    hit = _cached(ring, "weakly-rickart-star")
    if hit is not None:
        return hit
    t0 = time.perf_counter_ns()
    scan = scan or RingScan(ring)
    bad = np.flatnonzero(scan.rp_all < 0)
    if len(bad):
        x = int(bad[0])
        reason = "ambiguous" if scan.rp_all[x] == -2 else "none"
        return _finish(
            ring,
            "weakly-rickart-star",
            False,
            {"x": ring.decode(x), "reason": reason},
            t0,
        )
    return _finish(ring, "weakly-rickart-star", True, None, t0)


def is_baer_star(ring: StarRing, scan: Optional[RingScan] = None) -> PropertyReport:
    hit = _cached(ring, "baer-star")
    if hit is not None:
        return hit
    t0 = time.perf_counter_ns()
    scan = scan or RingScan(ring)
    try:
        family = annihilator_family(
            ring, "subset", cap=ring.limits.family_cap, rann=scan.rann
        )
    except FamilyCapExceeded:
        raise
    for member in family:
        if _matching_e(scan, member.mask) is None:
            return _finish(
                ring,
                "baer-star",
                False,
                {
                    "generators": [ring.decode(g) for g in member.generators],
                    "annihilator_size": member.count(),
                },
                t0,
            )
    return _finish(ring, "baer-star", True, None, t0)


def is_quasi_baer_star(
    ring: StarRing, scan: Optional[RingScan] = None
) -> PropertyReport:
    hit = _cached(ring, "quasi-baer-star")
    if hit is not None:
        return hit
    t0 = time.perf_counter_ns()
    scan = scan or RingScan(ring)
    family = annihilator_family(
        ring,
        "two-sided-ideal",
        cap=ring.limits.family_cap,
        rann=scan.rann,
        row_sets=scan.row_sets,
        col_sets=scan.col_sets,
    )
    for member in family:
        if _matching_e(scan, member.mask) is None:
            return _finish(
                ring,
                "quasi-baer-star",
                False,
                {
                    "ideal_generators": [ring.decode(g) for g in member.generators],
                    "annihilator_size": member.count(),
                },
                t0,
            )
    return _finish(ring, "quasi-baer-star", True, None, t0)


def _r_of_row_set(scan: RingScan, cache: Dict[int, int], a: int) -> int:
    """r(aR) as a bitset, memoized by the bitset of aR."""
    key = scan.row_sets[a]
    hit = cache.get(key)
    if hit is not None:
        return hit
    acc = full_mask(scan.ring.order)
    for s in indices_of(key):
        acc &= scan.rann[s]
    cache[key] = acc
    return acc


def _l_of_col_set(scan: RingScan, cache: Dict[int, int], a: int) -> int:
    """l(Ra) as a bitset, memoized by the bitset of Ra."""
    key = scan.col_sets[a]
    hit = cache.get(key)
    if hit is not None:
        return hit
    acc = full_mask(scan.ring.order)
    for s in indices_of(key):
        acc &= scan.lann[s]
    cache[key] = acc
    return acc


def is_pq_baer_star(ring: StarRing, scan: Optional[RingScan] = None) -> PropertyReport:
    """Both clauses are checked independently for every a: r(aR) = eR and
    l(Ra) = Rf; the witness names the first failing side."""
    hit = _cached(ring, "pq-baer-star")
    if hit is not None:
        return hit
    t0 = time.perf_counter_ns()
    scan = scan or RingScan(ring)
    rcache: Dict[int, int] = {}
    lcache: Dict[int, int] = {}
    for a in range(ring.order):
        right = _r_of_row_set(scan, rcache, a)
        if _matching_e(scan, right) is None:
            return _finish(
                ring,
                "pq-baer-star",
                False,
                {"a": ring.decode(a), "side": "right"},
                t0,
            )
        left = _l_of_col_set(scan, lcache, a)
        if _matching_f_left(scan, left) is None:
            return _finish(
                ring,
                "pq-baer-star",
                False,
                {"a": ring.decode(a), "side": "left"},
                t0,
            )
    return _finish(ring, "pq-baer-star", True, None, t0)


def is_weakly_pq_baer_star(
    ring: StarRing, scan: Optional[RingScan] = None
) -> PropertyReport:
    """Every x has a central cover C(x) with xRy = 0 iff C(x)y = 0.

    When the verdict is true, the symmetry xRy = 0 iff yRx = 0 is asserted
    as a cross-check; a divergence would be a bug and raises.
    """
    hit = _cached(ring, "weakly-pq-baer-star")
    if hit is not None:
        return hit
    t0 = time.perf_counter_ns()
    scan = scan or RingScan(ring)
    n = ring.order
    rcache: Dict[int, int] = {}
    masks: List[int] = []
    for x in range(n):
        cover = int(scan.cover_all[x])
        mask = _r_of_row_set(scan, rcache, x)
        masks.append(mask)
        if cover < 0:
            return _finish(
                ring,
                "weakly-pq-baer-star",
                False,
                {"x": ring.decode(x), "reason": "no-central-cover"},
                t0,
            )
        if mask != scan.rann[cover]:
            return _finish(
                ring,
                "weakly-pq-baer-star",
                False,
                {"x": ring.decode(x), "reason": "biconditional"},
                t0,
            )
    sym = np.zeros((n, n), dtype=bool)
    for x in range(n):
        sym[x] = bool_from_mask(masks[x], n)
    if not np.array_equal(sym, sym.T):
        diff = np.argwhere(sym != sym.T)
        x, y = (int(diff[0][0]), int(diff[0][1]))
        raise VerificationFailed(
            "annihilation-symmetry", (ring.decode(x), ring.decode(y))
        )
    return _finish(ring, "weakly-pq-baer-star", True, None, t0)


def square_free(m: int) -> bool:
    d = 2
    while d * d <= m:
        if m % (d * d) == 0:
            return False
        d += 1
    return True


def prime_factors(m: int) -> List[int]:
    out = []
    d = 2
    while d * d <= m:
        if m % d == 0:
            out.append(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        out.append(m)
    return out


def classify_matrix_ring(n: int, m: int) -> bool:
    """Arithmetic verdict: is the ring of n-by-n matrices over Z(m) Baer*
    under the transpose involution?

    n = 1: exactly when m is square-free. n = 2: m square-free with every
    prime factor congruent to 3 mod 4 (so that -1 is not a sum of two
    squares mod p). n >= 3: never (for m >= 2).
    """
    if n < 1 or m < 1:
        raise ValueError("need n >= 1 and m >= 1")
    if m == 1:
        return True  # the one-element ring
    if n == 1:
        return square_free(m)
    if n == 2:
        return square_free(m) and all(p % 4 == 3 for p in prime_factors(m))
    return False


def find_rp_not_central_cover(
    ring: StarRing, scan: Optional[RingScan] = None
) -> Optional[int]:
    """Lowest-index x whose RP(x) is not the central cover of any element.

    Returns None when every right projection arises as some central cover
    (or when no x has an RP at all).
    """
    scan = scan or RingScan(ring)
    covers = {int(c) for c in scan.cover_all if c >= 0}
    for x in range(ring.order):
        e = int(scan.rp_all[x])
        if e >= 0 and e not in covers:
            return x
    return None


def rp_not_central_cover_report(
    ring: StarRing, scan: Optional[RingScan] = None
) -> PropertyReport:
    t0 = time.perf_counter_ns()
    scan = scan or RingScan(ring)
    x = find_rp_not_central_cover(ring, scan)
    if x is None:
        return _finish(ring, "rp-not-cover", False, None, t0)
    e = int(scan.rp_all[x])
    return _finish(
        ring,
        "rp-not-cover",
        True,
        {"x": ring.decode(x), "rp": ring.decode(e)},
        t0,
    )


PROPERTY_CLASSIFIERS: Dict[str, Callable[..., PropertyReport]] = {
    "proper": is_proper_involution,
    "semi-proper": is_semi_proper,
    "reduced": is_reduced,
    "abelian": is_abelian,
    "unity": has_unity,
    "rickart-star": is_rickart_star,
    "weakly-rickart-star": is_weakly_rickart_star,
    "baer-star": is_baer_star,
    "quasi-baer-star": is_quasi_baer_star,
    "pq-baer-star": is_pq_baer_star,
    "weakly-pq-baer-star": is_weakly_pq_baer_star,
    "rp-not-cover": rp_not_central_cover_report,
}


def classify_all(ring: StarRing, scan: Optional[RingScan] = None) -> Dict[str, PropertyReport]:
    """Run every classifier over one shared scan."""
    scan = scan or RingScan(ring)
    return {name: fn(ring, scan) for name, fn in PROPERTY_CLASSIFIERS.items()}


IMPLICATIONS: Tuple[Tuple[str, Callable[[Dict[str, bool]], bool]], ...] = (
    (
        "rickart-iff-weakly-rickart-with-unity",
        lambda v: v["rickart-star"] == (v["weakly-rickart-star"] and v["unity"]),
    ),
    (
        "pq-baer-iff-weakly-pq-baer-with-unity",
        lambda v: v["pq-baer-star"] == (v["weakly-pq-baer-star"] and v["unity"]),
    ),
    (
        "rickart-implies-proper-unital",
        lambda v: (not v["rickart-star"]) or (v["proper"] and v["unity"]),
    ),
    (
        "pq-baer-implies-semi-proper-unital",
        lambda v: (not v["pq-baer-star"]) or (v["semi-proper"] and v["unity"]),
    ),
    (
        "abelian-rickart-implies-pq-baer",
        lambda v: (not (v["abelian"] and v["rickart-star"])) or v["pq-baer-star"],
    ),
    (
        "reduced-pq-baer-implies-rickart",
        lambda v: (not (v["reduced"] and v["pq-baer-star"])) or v["rickart-star"],
    ),
    (
        "finite-collapse-rickart-iff-baer",
        lambda v: v["rickart-star"] == v["baer-star"],
    ),
)


def implication_reports_for(
    d: Descriptor, limits: Limits = DEFAULT_LIMITS
) -> List[PropertyReport]:
    """All implication laws evaluated on one ring; failures carry the full
    verdict table as the witness so the offending combination is
    inspectable."""
    ring = build_ring(d, limits)
    scan = RingScan(ring)
    t0 = time.perf_counter_ns()
    verdicts = {
        name: fn(ring, scan).verdict
        for name, fn in PROPERTY_CLASSIFIERS.items()
        if name != "rp-not-cover"
    }
    out: List[PropertyReport] = []
    for name, law in IMPLICATIONS:
        holds = law(verdicts)
        witness = None if holds else dict(sorted(verdicts.items()))
        micros = (time.perf_counter_ns() - t0) // 1000
        out.append(
            PropertyReport(to_dsl(d), "implication:%s" % name, holds, witness, int(micros))
        )
    return out


def implication_suite(
    descriptors: Sequence[Descriptor], limits: Limits = DEFAULT_LIMITS
) -> List[PropertyReport]:
    """Evaluate the cross-classifier implications over a corpus."""
    out: List[PropertyReport] = []
    for d in descriptors:
        out.extend(implication_reports_for(d, limits))
    return out


def ideal_annihilator_crosscheck(ring: StarRing, scan: Optional[RingScan] = None) -> bool:
    """Definitional route vs generator shortcut for r((a)), every a.

    The family code computes r((a)) as an intersection over the generating
    set {a} + aR + Ra + RaR; this recomputes it from the literal two-sided
    ideal and compares. Used by tests; raises on divergence.
    """
    scan = scan or RingScan(ring)
    rcache: Dict[int, int] = {}
    for a in range(ring.order):
        ideal = principal_two_sided_ideal(ring, a)
        direct = full_mask(ring.order)
        for s in indices_of(ideal):
            direct &= scan.rann[s]
        shortcut = scan.rann[a]
        shortcut &= _r_of_row_set(scan, rcache, a)
        shortcut &= _r_of_col_set(scan, a)
        sandwich = full_mask(ring.order)
        for t in indices_of(scan.col_sets[a]):
            sandwich &= _r_of_row_set(scan, rcache, t)
        shortcut &= sandwich
        if direct != shortcut:
            raise VerificationFailed("ideal-annihilator-shortcut", (ring.decode(a),))
    return True


def _r_of_col_set(scan: RingScan, a: int) -> int:
    """Right annihilator of the set Ra (helper for the cross-check)."""
    acc = full_mask(scan.ring.order)
    for s in indices_of(scan.col_sets[a]):
        acc &= scan.rann[s]
    return acc
