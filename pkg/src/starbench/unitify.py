"""Unit adjunction for *-rings over a scalar *-ring.

Given a scalar algebra (K acting on R), the pair ring consists of all (a, lam)
with

    (a, lam) + (b, mu) = (a + b, lam + mu)
    (a, lam) (b, mu)   = (ab + mu.a + lam.b, lam mu)
    (a, lam)*          = (a*, lam*)

It is unital with unity (0, 1). The kernel ideal

    N = {(a, lam) : a x + lam.x = 0 for every x in R}

collects the pairs that act as zero on R; the quotient of the pair ring by N
is the unitified ring, written here with cosets [a, lam]. The canonical coset
representative is the member with the least pair index (pair index =
a_index * |K| + lam_index), so [0, 1] names the unity.

The map a -> [a, 0] is a *-homomorphism, injective exactly when
L(R) = {x : xR = 0} vanishes. Projection formulas in the quotient:

* [a, 0] has right projection [rp(a), 0];
* a self-adjoint coset with canonical representative (a, lam), lam != 0, has
  right projection [-g, 1] where g is the greatest projection satisfying
  a g = (-lam).g;
* the same shape computes central covers with g ranging over central
  projections.

Every formula result is compared against an exhaustive definition-level
search in the quotient; a divergence raises FormulaMismatch rather than
trusting either side.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

import numpy as np

from .algebra import ScalarAlgebra
from .bitsets import bool_from_mask, full_mask, indices_of, iter_indices, mask_from_bool
from .classifiers import (
    is_pq_baer_star,
    is_proper_involution,
    is_rickart_star,
    is_semi_proper,
    is_weakly_pq_baer_star,
    is_weakly_rickart_star,
)
from .config import DEFAULT_LIMITS, Limits
from .errors import (
    FormulaMismatch,
    HypothesisNotMet,
    InvolutionNotWellDefined,
    NoCentralCover,
    NoGreatestElement,
    NoRightProjection,
    OrderCapExceeded,
    VerificationFailed,
)
from .projections import (
    RingScan,
    central_cover,
    condition3_witnesses,
    condition_beta_witnesses,
    largest_eigen_projection,
    rp,
)
from .rings import StarRing, _as_index_array, _brute_additive_exponent

_SAMPLE_SEED = 9173
_FULL_CHECK_MAX = 512


class _PairBackend:
    """The pair ring R (+) K. Pair index = a_index * |K| + lam_index."""

    def __init__(self, algebra: ScalarAlgebra):
        self.A = algebra
        self.R = algebra.ring
        self.K = algebra.scalars
        self.kn = self.K.order
        self.order = self.R.order * self.K.order
        self._action = algebra.action.astype(np.int64)

    def _split(self, u):
        u = _as_index_array(u)
        return u // self.kn, u % self.kn

    def add_row(self, i: int) -> np.ndarray:
        a, lam = divmod(i, self.kn)
        return (
            self.R.add_row(a)[:, None] * self.kn + self.K.add_row(lam)[None, :]
        ).ravel()

    def mul_row(self, i: int) -> np.ndarray:
        a, lam = divmod(i, self.kn)
        nr, nk = self.R.order, self.kn
        ab = self.R.mul_row(a)                    # a b over b
        lam_b = self._action[lam]                 # lam.b over b
        mu_a = self._action[:, a]                 # mu.a over mu
        partial = self.R.add_pairs(ab, lam_b)     # over b
        u = np.broadcast_to(partial[:, None], (nr, nk)).ravel()
        v = np.broadcast_to(mu_a[None, :], (nr, nk)).ravel()
        rpart = self.R.add_pairs(u, v)
        kpart = np.broadcast_to(self.K.mul_row(lam)[None, :], (nr, nk)).ravel()
        return rpart * self.kn + kpart

    def mul_col(self, j: int) -> np.ndarray:
        b, mu = divmod(j, self.kn)
        nr, nk = self.R.order, self.kn
        ab = self.R.mul_col(b)                    # a b over a
        mu_a = self._action[mu]                   # mu.a over a
        lam_b = self._action[:, b]                # lam.b over lam
        partial = self.R.add_pairs(ab, mu_a)      # over a
        u = np.broadcast_to(partial[:, None], (nr, nk)).ravel()
        v = np.broadcast_to(lam_b[None, :], (nr, nk)).ravel()
        rpart = self.R.add_pairs(u, v)
        kpart = np.broadcast_to(self.K.mul_col(mu)[None, :], (nr, nk)).ravel()
        return rpart * self.kn + kpart

    def add_pairs(self, u, v) -> np.ndarray:
        ua, ul = self._split(u)
        va, vl = self._split(v)
        return self.R.add_pairs(ua, va) * self.kn + self.K.add_pairs(ul, vl)

    def mul_pairs(self, u, v) -> np.ndarray:
        ua, ul = self._split(u)
        va, vl = self._split(v)
        ab = self.R.mul_pairs(ua, va)
        mu_a = self._action[vl, ua]
        lam_b = self._action[ul, va]
        rpart = self.R.add_pairs(self.R.add_pairs(ab, mu_a), lam_b)
        return rpart * self.kn + self.K.mul_pairs(ul, vl)

    def neg_vec(self) -> np.ndarray:
        return (
            self.R.neg_vector()[:, None] * self.kn + self.K.neg_vector()[None, :]
        ).ravel()

    def star_vec(self) -> np.ndarray:
        return (
            self.R.star_vector()[:, None] * self.kn + self.K.star_vector()[None, :]
        ).ravel()

    def find_unity(self) -> Optional[int]:
        return self.K.unity  # the pair (0, 1_K)

    def characteristic(self) -> int:
        import math

        return math.lcm(self.R.characteristic, self.K.characteristic)

    def additive_order(self, i: int) -> int:
        import math

        a, lam = divmod(i, self.kn)
        return math.lcm(self.R.additive_order(a), self.K.additive_order(lam))

    def decode(self, i: int) -> Any:
        a, lam = divmod(i, self.kn)
        return (self.R.decode(a), self.K.decode(lam))

    def encode(self, lit: Any) -> int:
        if not isinstance(lit, tuple) or len(lit) != 2:
            raise ValueError("pair literal expected, got %r" % (lit,))
        return self.R.encode(lit[0]) * self.kn + self.K.encode(lit[1])


class _QuotientBackend:
    """The pair ring modulo the kernel ideal; elements are coset ordinals."""

    def __init__(self, r1: StarRing, reps: np.ndarray, coset_of_pair: np.ndarray):
        self.r1 = r1
        self.reps = reps
        self.coset_of_pair = coset_of_pair
        self.order = len(reps)

    def add_row(self, i: int) -> np.ndarray:
        full = np.full(self.order, self.reps[i], dtype=np.int64)
        return self.coset_of_pair[self.r1.add_pairs(full, self.reps)]

    def mul_row(self, i: int) -> np.ndarray:
        full = np.full(self.order, self.reps[i], dtype=np.int64)
        return self.coset_of_pair[self.r1.mul_pairs(full, self.reps)]

    def mul_col(self, j: int) -> np.ndarray:
        full = np.full(self.order, self.reps[j], dtype=np.int64)
        return self.coset_of_pair[self.r1.mul_pairs(self.reps, full)]

    def add_pairs(self, u, v) -> np.ndarray:
        u = _as_index_array(u)
        v = _as_index_array(v)
        return self.coset_of_pair[self.r1.add_pairs(self.reps[u], self.reps[v])]

    def mul_pairs(self, u, v) -> np.ndarray:
        u = _as_index_array(u)
        v = _as_index_array(v)
        return self.coset_of_pair[self.r1.mul_pairs(self.reps[u], self.reps[v])]

    def neg_vec(self) -> np.ndarray:
        return self.coset_of_pair[self.r1.neg_vector()[self.reps]]

    def star_vec(self) -> np.ndarray:
        return self.coset_of_pair[self.r1.star_vector()[self.reps]]

    def find_unity(self) -> Optional[int]:
        if self.r1.unity is None:
            return None
        return int(self.coset_of_pair[self.r1.unity])

    def characteristic(self) -> int:
        return _brute_additive_exponent(self)

    def additive_order(self, i: int) -> int:
        k = 1
        cur = i
        while cur != 0:
            cur = int(self.add_pairs(np.array([cur]), np.array([i]))[0])
            k += 1
        return k

    def decode(self, i: int) -> Any:
        return self.r1.decode(int(self.reps[i]))

    def encode(self, lit: Any) -> int:
        return int(self.coset_of_pair[self.r1.encode(lit)])


@dataclass(frozen=True)
class KernelN:
    """The kernel ideal of the pair ring, as a bitset over pair indices."""

    mask: int
    size: int
    star_closed: bool


@dataclass
class Quotient:
    """The unitified ring together with its construction data."""

    algebra: ScalarAlgebra
    r1: StarRing
    kernel: KernelN
    ring: StarRing
    reps: np.ndarray
    coset_of_pair: np.ndarray

    @property
    def kn(self) -> int:
        return self.algebra.scalars.order

    def pair_index(self, a: int, lam: int) -> int:
        return a * self.kn + lam

    def embed(self, a: int) -> int:
        """Coset of (a, 0)."""
        return int(self.coset_of_pair[a * self.kn])

    def embed_all(self) -> np.ndarray:
        idx = np.arange(self.algebra.ring.order, dtype=np.int64) * self.kn
        return self.coset_of_pair[idx]


def build_R1(algebra: ScalarAlgebra, limits: Limits = DEFAULT_LIMITS) -> StarRing:
    """The unital pair ring R (+) K."""
    order = algebra.ring.order * algebra.scalars.order
    if order > limits.element_cap:
        raise OrderCapExceeded(order, limits.element_cap, what="pair ring")
    label = "pairs(%s over %s)" % (algebra.ring.label, algebra.scalars.label)
    return StarRing(_PairBackend(algebra), descriptor=None, label=label, limits=limits)


def compute_kernel_N(
    algebra: ScalarAlgebra,
    r1: Optional[StarRing] = None,
    limits: Limits = DEFAULT_LIMITS,
) -> KernelN:
    """N = {(a, lam) : a x + lam.x = 0 for all x}, with its ideal invariants
    verified rather than assumed (any failure is a bug and raises)."""
    R, K = algebra.ring, algebra.scalars
    if r1 is None:
        r1 = build_R1(algebra, limits)
    nr, nk = R.order, K.order
    flags = np.zeros(nr * nk, dtype=bool)
    for a in range(nr):
        row = R.mul_row(a)
        for lam in range(nk):
            combined = R.add_pairs(row, algebra.action_row(lam))
            if not combined.any():
                flags[a * nk + lam] = True
    mask = mask_from_bool(flags)
    members = np.flatnonzero(flags)

    # additive subgroup
    k = len(members)
    if k:
        u = np.repeat(members, k)
        v = np.tile(members, k)
        sums = r1.add_pairs(u, v)
        if not flags[sums].all():
            bad = int(sums[int(np.argmax(~flags[sums]))])
            raise VerificationFailed("kernel-additive-closure", r1.decode(bad))
    # two-sided absorption
    for u_ in members:
        u_ = int(u_)
        if not flags[r1.mul_row(u_)].all() or not flags[r1.mul_col(u_)].all():
            raise VerificationFailed("kernel-absorption", r1.decode(u_))
    star_closed = bool(flags[r1.star_vector()[members]].all()) if k else True
    return KernelN(mask=mask, size=int(k), star_closed=star_closed)


def _validate_quotient(quot: "Quotient") -> None:
    """Well-definedness audit: operations recomputed on full cosets.

    All coset pairs are checked when the quotient is small; otherwise a
    seeded random sample of coset pairs, each still recomputed over every
    member combination.
    """
    q = quot.ring
    r1 = quot.r1
    n = q.order
    members_by_coset: List[np.ndarray] = [
        np.flatnonzero(quot.coset_of_pair == c).astype(np.int64) for c in range(n)
    ]
    if n <= _FULL_CHECK_MAX:
        pairs = [(i, j) for i in range(n) for j in range(n)]
    else:
        rng = random.Random(_SAMPLE_SEED)
        pairs = [(rng.randrange(n), rng.randrange(n)) for _ in range(_FULL_CHECK_MAX)]
    for i, j in pairs:
        mi, mj = members_by_coset[i], members_by_coset[j]
        u = np.repeat(mi, len(mj))
        v = np.tile(mj, len(mi))
        prod_cosets = quot.coset_of_pair[r1.mul_pairs(u, v)]
        if not (prod_cosets == q.mul(i, j)).all():
            raise VerificationFailed(
                "quotient-multiplication-well-defined", (q.decode(i), q.decode(j))
            )
        sum_cosets = quot.coset_of_pair[r1.add_pairs(u, v)]
        if not (sum_cosets == q.add(i, j)).all():
            raise VerificationFailed(
                "quotient-addition-well-defined", (q.decode(i), q.decode(j))
            )
    star_all = quot.coset_of_pair[r1.star_vector()]
    star_reps = quot.coset_of_pair[r1.star_vector()[quot.reps]]
    expected = star_reps[quot.coset_of_pair]
    if not np.array_equal(star_all, expected):
        bad = int(np.argmax(star_all != expected))
        raise VerificationFailed("quotient-star-well-defined", r1.decode(bad))


def build_quotient(
    algebra: ScalarAlgebra,
    limits: Limits = DEFAULT_LIMITS,
    validate: bool = True,
) -> Quotient:
    """Quotient the pair ring by its kernel ideal.

    The involution descends exactly when N is star-closed (guaranteed for
    proper and semi-proper involutions on R, but always checked directly);
    otherwise InvolutionNotWellDefined is raised with a witness pair.
    """
    r1 = build_R1(algebra, limits)
    kern = compute_kernel_N(algebra, r1, limits)
    if not kern.star_closed:
        star = r1.star_vector()
        for u in iter_indices(kern.mask):
            if not (kern.mask >> int(star[u])) & 1:
                raise InvolutionNotWellDefined(r1.decode(u))
        raise InvolutionNotWellDefined(None)  # unreachable
    flags = bool_from_mask(kern.mask, r1.order)
    members = np.flatnonzero(flags).astype(np.int64)
    n1 = r1.order
    all_pairs = np.arange(n1, dtype=np.int64)
    rep_of_pair = all_pairs.copy()
    for u in members:
        if u == 0:
            continue
        shifted = r1.add_pairs(all_pairs, np.full(n1, int(u), dtype=np.int64))
        np.minimum(rep_of_pair, shifted, out=rep_of_pair)
    reps = np.unique(rep_of_pair)
    coset_of_pair = np.searchsorted(reps, rep_of_pair)
    label = "unitified(%s over %s)" % (algebra.ring.label, algebra.scalars.label)
    qring = StarRing(
        _QuotientBackend(r1, reps, coset_of_pair),
        descriptor=None,
        label=label,
        limits=limits,
    )
    quot = Quotient(
        algebra=algebra,
        r1=r1,
        kernel=kern,
        ring=qring,
        reps=reps,
        coset_of_pair=coset_of_pair,
    )
    if validate:
        _validate_quotient(quot)
    return quot


def embed(quot: Quotient, a: int) -> int:
    """Coset of (a, 0) in the unitified ring."""
    return quot.embed(a)


def _formula_projection(
    quot: Quotient,
    c: int,
    rscan: RingScan,
    central: bool,
) -> int:
    """Closed-form RP/central-cover of a coset from its canonical rep.

    lam = 0: embed the answer computed inside R. lam != 0: [-g, 1] with g
    the greatest (central) projection satisfying a g = (-lam).g. The result
    does not depend on the representative because members of one coset act
    identically on R.
    """
    R = quot.algebra.ring
    K = quot.algebra.scalars
    rep = int(quot.reps[c])
    a, lam = divmod(rep, quot.kn)
    if lam == 0:
        e = central_cover(R, a, rscan) if central else rp(R, a, rscan)
        return quot.embed(e)
    g = largest_eigen_projection(
        quot.algebra, a, K.neg(lam), central_only=central, scan=rscan
    )
    pair = quot.pair_index(R.neg(g), K.unity)
    return int(quot.coset_of_pair[pair])


def _quotient_involution_proper(q: StarRing) -> bool:
    idx = np.arange(q.order, dtype=np.int64)
    diag = q.mul_pairs(q.star_vector(), idx)
    return not bool(((diag == 0) & (idx != 0)).any())


def rp_in_quotient(
    quot: Quotient,
    c: int,
    qscan: Optional[RingScan] = None,
    rscan: Optional[RingScan] = None,
) -> int:
    """Right projection of a coset: formula result checked against brute force.

    Self-adjoint cosets take the formula directly. Non-self-adjoint cosets
    route through c* c when the quotient involution is proper (RP(x) =
    RP(x* x) there); without properness no formula claim exists and the
    exhaustive answer is returned as-is.
    """
    q = quot.ring
    qscan = qscan or RingScan(q)
    rscan = rscan or RingScan(quot.algebra.ring)
    brute = rp(q, c, qscan)
    target = c
    if q.star(c) != c:
        if not _quotient_involution_proper(q):
            return brute
        target = q.mul(q.star(c), c)
    formula = _formula_projection(quot, target, rscan, central=False)
    if formula != brute:
        raise FormulaMismatch(q.decode(c), q.decode(formula), q.decode(brute))
    return brute


def cover_in_quotient(
    quot: Quotient,
    c: int,
    qscan: Optional[RingScan] = None,
    rscan: Optional[RingScan] = None,
) -> int:
    """Central cover of a coset: formula vs brute force, plus the
    biconditional c R y = 0 iff (cover) y = 0 checked over every y."""
    q = quot.ring
    qscan = qscan or RingScan(q)
    rscan = rscan or RingScan(quot.algebra.ring)
    brute = central_cover(q, c, qscan)
    formula = _formula_projection(quot, c, rscan, central=True)
    if formula != brute:
        raise FormulaMismatch(q.decode(c), q.decode(formula), q.decode(brute))
    acc = full_mask(q.order)
    for s in indices_of(qscan.row_sets[c]):
        acc &= qscan.rann[s]
    if acc != qscan.rann[brute]:
        raise VerificationFailed("cover-biconditional", q.decode(c))
    return brute


@dataclass
class EmbeddingReport:
    """Result of verify_unitification; JSON shape is fixed for goldens."""

    mode: str
    ring: str
    scalars: str
    hypotheses: Dict[str, bool]
    flags: List[str]
    kernel_order: int
    quotient_order: int
    injective: bool
    noninjective_witness: Optional[Any]
    quotient_satisfies: bool
    preservation: List[dict]
    formula_agreement: bool
    failures: List[str] = field(default_factory=list)
    verdict: bool = False

    def to_json(self) -> dict:
        return {
            "mode": self.mode,
            "ring": self.ring,
            "scalars": self.scalars,
            "hypotheses": dict(sorted(self.hypotheses.items())),
            "flags": list(self.flags),
            "kernel_order": self.kernel_order,
            "quotient_order": self.quotient_order,
            "injective": self.injective,
            "noninjective_witness": self.noninjective_witness,
            "quotient_satisfies": self.quotient_satisfies,
            "preservation": self.preservation,
            "formula_agreement": self.formula_agreement,
            "failures": list(self.failures),
            "verdict": self.verdict,
        }

    def preserved_rows(self) -> int:
        return sum(1 for row in self.preservation if row["ok"])


def verify_unitification(
    algebra: ScalarAlgebra,
    mode: str = "rickart",
    limits: Limits = DEFAULT_LIMITS,
) -> EmbeddingReport:
    """Machine-check the unit-adjunction theorem on a concrete algebra.

    mode "rickart": gate on R weakly Rickart* and condition (3); then build
    the unitified ring and check it is Rickart*, that a -> [a, 0] preserves
    right projections element by element, and that the [-g, 1] formula
    agrees with brute force on every coset.

    mode "pqbaer": the central-cover mirror, gated on R weakly p.q.-Baer*
    and condition (beta).

    Unmet gates raise HypothesisNotMet. Claim-level failures do not raise;
    they are recorded in the report with verdict False. The K-is-a-domain
    and torsion-free flags are informational: the construction is exercised
    precisely because it works without them.
    """
    if mode not in ("rickart", "pqbaer"):
        raise ValueError("mode must be 'rickart' or 'pqbaer'")
    R = algebra.ring
    K = algebra.scalars
    rscan = RingScan(R)
    hypotheses: Dict[str, bool] = {
        "k_is_domain": algebra.k_is_domain,
        "torsion_free": algebra.torsion_free,
    }
    flags: List[str] = []
    if not algebra.k_is_domain:
        flags.append("K-not-domain")
    if not algebra.torsion_free:
        flags.append("torsion-present")

    if mode == "rickart":
        gate = is_weakly_rickart_star(R, rscan)
        hypotheses["weakly_rickart"] = gate.verdict
        if not gate.verdict:
            raise HypothesisNotMet("ring is weakly Rickart*", gate.witness)
        dom = condition3_witnesses(algebra, rscan)
        hypotheses["condition_3"] = dom.ok
        if not dom.ok:
            lam, x = dom.failure
            raise HypothesisNotMet(
                "condition (3)", {"lam": K.decode(lam), "x": R.decode(x)}
            )
        hypotheses["proper_involution"] = is_proper_involution(R).verdict
    else:
        gate = is_weakly_pq_baer_star(R, rscan)
        hypotheses["weakly_pq_baer"] = gate.verdict
        if not gate.verdict:
            raise HypothesisNotMet("ring is weakly p.q.-Baer*", gate.witness)
        dom = condition_beta_witnesses(algebra, rscan)
        hypotheses["condition_beta"] = dom.ok
        if not dom.ok:
            lam, x = dom.failure
            raise HypothesisNotMet(
                "condition (beta)", {"lam": K.decode(lam), "x": R.decode(x)}
            )
        hypotheses["semi_proper"] = is_semi_proper(R).verdict

    quot = build_quotient(algebra, limits)
    q = quot.ring
    qscan = RingScan(q)
    failures: List[str] = []

    emb = quot.embed_all()
    seen: Dict[int, int] = {}
    noninjective = None
    for a in range(R.order):
        c = int(emb[a])
        if c in seen:
            noninjective = [R.decode(seen[c]), R.decode(a)]
            break
        seen[c] = a
    injective = noninjective is None
    if not injective:
        failures.append("embedding-not-injective")

    if mode == "rickart":
        cls = is_rickart_star(q, qscan)
    else:
        cls = is_pq_baer_star(q, qscan)
    if not cls.verdict:
        failures.append("quotient-classifier:%r" % (cls.witness,))

    preservation: List[dict] = []
    key_r = "rp_R" if mode == "rickart" else "cover_R"
    key_q = "rp_Q" if mode == "rickart" else "cover_Q"
    table = rscan.rp_all if mode == "rickart" else rscan.cover_all
    qtable = qscan.rp_all if mode == "rickart" else qscan.cover_all
    all_ok = True
    for a in range(R.order):
        in_r = int(table[a])
        in_q = int(qtable[int(emb[a])])
        ok = in_r >= 0 and in_q >= 0 and int(emb[in_r]) == in_q
        all_ok &= ok
        preservation.append(
            {
                "a": R.decode(a),
                key_r: R.decode(in_r) if in_r >= 0 else None,
                key_q: q.decode(in_q) if in_q >= 0 else None,
                "ok": ok,
            }
        )
    if not all_ok:
        failures.append("preservation")

    formula_ok = True
    for c in range(q.order):
        try:
            if mode == "rickart":
                rp_in_quotient(quot, c, qscan, rscan)
            else:
                cover_in_quotient(quot, c, qscan, rscan)
        except (FormulaMismatch, NoGreatestElement, NoRightProjection, NoCentralCover, VerificationFailed) as exc:
            formula_ok = False
            failures.append("formula:%s" % exc)
            break

    report = EmbeddingReport(
        mode=mode,
        ring=R.label,
        scalars=K.label,
        hypotheses=hypotheses,
        flags=flags,
        kernel_order=quot.kernel.size,
        quotient_order=q.order,
        injective=injective,
        noninjective_witness=noninjective,
        quotient_satisfies=cls.verdict,
        preservation=preservation,
        formula_agreement=formula_ok,
        failures=failures,
        verdict=bool(injective and cls.verdict and all_ok and formula_ok),
    )
    return report


def describe_unitification(
    algebra: ScalarAlgebra, limits: Limits = DEFAULT_LIMITS
) -> dict:
    """Build the pair ring and quotient with no theorem gates and report the
    construction data: kernel size, quotient order, embedding injectivity.

    This is the right entry point for negative controls, where the point is
    to watch the embedding degenerate."""
    quot = build_quotient(algebra, limits)
    q = quot.ring
    R = algebra.ring
    emb = quot.embed_all()
    image = sorted(set(int(c) for c in emb))
    noninjective = None
    seen: Dict[int, int] = {}
    for a in range(R.order):
        c = int(emb[a])
        if c in seen:
            noninjective = [R.decode(seen[c]), R.decode(a)]
            break
        seen[c] = a
    return {
        "mode": "build",
        "ring": R.label,
        "scalars": algebra.scalars.label,
        "pair_ring_order": quot.r1.order,
        "kernel_order": quot.kernel.size,
        "quotient_order": q.order,
        "quotient_unity": q.decode(q.unity) if q.unity is not None else None,
        "injective": noninjective is None,
        "noninjective_witness": noninjective,
        "embed_image_size": len(image),
    }


def check_R1_lemmas(algebra: ScalarAlgebra, limits: Limits = DEFAULT_LIMITS) -> dict:
    """Pair-ring lemmas under the classical hypotheses.

    Gates: K an integral domain and R torsion-free over K (HypothesisNotMet
    otherwise; the quotient route exists precisely to go beyond these).
    Checks: (i) a proper involution on R stays proper on the pair ring;
    (ii) RP(x) = e in R iff RP((x, 0)) = (e, 0) in the pair ring, for every
    x. Divergence raises VerificationFailed.
    """
    K = algebra.scalars
    if not algebra.torsion_free:
        hits = np.argwhere(np.asarray(algebra.action)[1:, 1:] == 0)
        lam, a = int(hits[0][0]) + 1, int(hits[0][1]) + 1
        raise HypothesisNotMet(
            "the module action is torsion-free",
            {"lam": K.decode(lam), "a": algebra.ring.decode(a)},
        )
    if not algebra.k_is_domain:
        kmul = np.stack([K.mul_row(i) for i in range(K.order)])
        hits = np.argwhere(kmul[1:, 1:] == 0)
        lam, mu = int(hits[0][0]) + 1, int(hits[0][1]) + 1
        raise HypothesisNotMet(
            "scalars form an integral domain",
            {"lam": K.decode(lam), "mu": K.decode(mu)},
        )
    R = algebra.ring
    kn = algebra.scalars.order
    r1 = build_R1(algebra, limits)
    rscan = RingScan(R)
    r1scan = RingScan(r1)
    proper_r = is_proper_involution(R).verdict
    if proper_r and not _quotient_involution_proper(r1):
        raise VerificationFailed("proper-involution-transfer", r1.label)
    checked = 0
    for x in range(R.order):
        in_r = int(rscan.rp_all[x])
        in_r1 = int(r1scan.rp_all[x * kn])
        if in_r >= 0:
            if in_r1 != in_r * kn:
                raise VerificationFailed(
                    "rp-pair-transfer",
                    (R.decode(x), R.decode(in_r), r1.decode(in_r1) if in_r1 >= 0 else None),
                )
        else:
            if in_r1 >= 0 and in_r1 % kn == 0:
                raise VerificationFailed(
                    "rp-pair-transfer-converse", (R.decode(x), r1.decode(in_r1))
                )
        checked += 1
    return {
        "ring": R.label,
        "scalars": algebra.scalars.label,
        "pair_ring_order": r1.order,
        "proper_involution_transfers": proper_r,
        "elements_checked": checked,
        "ok": True,
    }
