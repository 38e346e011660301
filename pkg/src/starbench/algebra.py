"""Scalar algebras: a commutative unital *-ring K acting on a *-ring R.

The action is a table action[lam, a] -> index of lam.a, validated
exhaustively at construction against every axiom it must satisfy:

* biadditivity in both arguments,
* associativity with K's multiplication and with R's multiplication
  (lam.(ab) = (lam.a)b = a(lam.b)),
* unit action (1_K . a = a),
* star compatibility ((lam.a)* = lam*.a*).

The only built-in action is "natural": K = Z(m) acting by repeated addition,
defined exactly when char(R) divides m. An explicit table can be supplied
instead; it is validated the same way.

Two structural flags are recorded, not assumed: whether K is an integral
domain and whether R is K-torsion-free. Downstream verification reports cite
them so that runs outside the classical setting are visible.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Optional, Tuple, Union

import numpy as np

from .descriptor import Cyclic
from .errors import (
    ActionAxiomViolation,
    CharacteristicMismatch,
    DescriptorError,
)
from .rings import StarRing


@dataclass(frozen=True)
class ScalarAlgebra:
    ring: StarRing
    scalars: StarRing
    action: np.ndarray = field(repr=False)  # (|K|, |R|) int32, read-only
    action_kind: str  # "natural" or "table"
    torsion_free: bool
    k_is_domain: bool

    @property
    def label(self) -> str:
        return "%s over %s" % (self.ring.label, self.scalars.label)

    def act(self, lam: int, a: int) -> int:
        return int(self.action[lam, a])

    def action_row(self, lam: int) -> np.ndarray:
        return self.action[lam].astype(np.int64)

    def describe(self) -> dict:
        return {
            "ring": self.ring.label,
            "scalars": self.scalars.label,
            "action": self.action_kind,
            "torsion_free": self.torsion_free,
            "k_is_domain": self.k_is_domain,
        }


def _natural_action(ring: StarRing, scalars: StarRing) -> np.ndarray:
    if not isinstance(scalars.descriptor, Cyclic):
        raise DescriptorError("the natural action needs cyclic scalars Z(m)")
    m = scalars.descriptor.modulus
    if m % ring.characteristic != 0:
        raise CharacteristicMismatch(ring.characteristic, m)
    n = ring.order
    idx = np.arange(n, dtype=np.int64)
    rows = np.empty((m, n), dtype=np.int32)
    cur = np.zeros(n, dtype=np.int64)
    for lam in range(m):
        rows[lam] = cur
        cur = ring.add_pairs(cur, idx)
    return rows


def _first_true(mask: np.ndarray) -> Tuple[int, ...]:
    flat = int(np.argmax(mask))
    return tuple(int(c) for c in np.unravel_index(flat, mask.shape))


def build_scalar_algebra(
    ring: StarRing,
    scalars: StarRing,
    action: Union[str, np.ndarray] = "natural",
) -> ScalarAlgebra:
    """Assemble and exhaustively validate a scalar algebra.

    Raises ActionAxiomViolation (with the axiom name and a literal witness)
    when any axiom fails, CharacteristicMismatch when the natural action is
    undefined, and DescriptorError for non-cyclic natural scalars.
    """
    K = scalars
    R = ring
    if K.unity is None:
        raise ActionAxiomViolation("scalars-unital", ())
    kmul = K.mul_table()
    sym = kmul != kmul.T
    if sym.any():
        lam, mu = _first_true(sym)
        raise ActionAxiomViolation(
            "scalars-commutative", (K.decode(lam), K.decode(mu))
        )

    if isinstance(action, str):
        if action != "natural":
            raise DescriptorError("unknown action %r" % (action,))
        table = _natural_action(R, K)
        kind = "natural"
    else:
        table = np.asarray(action, dtype=np.int32)
        if table.shape != (K.order, R.order):
            raise DescriptorError(
                "action table must have shape (|K|, |R|) = (%d, %d), got %r"
                % (K.order, R.order, table.shape)
            )
        if table.min() < 0 or table.max() >= R.order:
            raise DescriptorError("action table entries must be element indices")
        kind = "table"
    table = np.ascontiguousarray(table, dtype=np.int32)
    table.setflags(write=False)

    nk, nr = K.order, R.order
    idx_r = np.arange(nr, dtype=np.int64)
    table64 = table.astype(np.int64)

    # 1_K . a = a
    unit_row = table64[K.unity]
    if not np.array_equal(unit_row, idx_r):
        a = int(np.argmax(unit_row != idx_r))
        raise ActionAxiomViolation("unit-action", (R.decode(a),))

    # (lam + mu).a = lam.a + mu.a
    for lam in range(nk):
        krow = K.add_row(lam)
        lam_row = table64[lam]
        for mu in range(nk):
            lhs = table64[int(krow[mu])]
            rhs = R.add_pairs(lam_row, table64[mu])
            neq = lhs != rhs
            if neq.any():
                a = int(np.argmax(neq))
                raise ActionAxiomViolation(
                    "additive-in-scalar",
                    (K.decode(lam), K.decode(mu), R.decode(a)),
                )

    # (lam mu).a = lam.(mu.a)
    for lam in range(nk):
        krow = K.mul_row(lam)
        lam_row = table64[lam]
        for mu in range(nk):
            lhs = table64[int(krow[mu])]
            rhs = lam_row[table64[mu]]
            neq = lhs != rhs
            if neq.any():
                a = int(np.argmax(neq))
                raise ActionAxiomViolation(
                    "multiplicative-in-scalar",
                    (K.decode(lam), K.decode(mu), R.decode(a)),
                )

    # lam.(a + b) = lam.a + lam.b
    for lam in range(nk):
        lam_row = table64[lam]
        for a in range(nr):
            lhs = lam_row[R.add_row(a)]
            rhs = R.add_pairs(np.full(nr, lam_row[a], dtype=np.int64), lam_row)
            neq = lhs != rhs
            if neq.any():
                b = int(np.argmax(neq))
                raise ActionAxiomViolation(
                    "additive-in-element",
                    (K.decode(lam), R.decode(a), R.decode(b)),
                )

    # lam.(ab) = (lam.a)b = a(lam.b)
    for lam in range(nk):
        lam_row = table64[lam]
        for a in range(nr):
            arow = R.mul_row(a)
            lhs = lam_row[arow]
            mid = R.mul_row(int(lam_row[a]))
            neq = lhs != mid
            if neq.any():
                b = int(np.argmax(neq))
                raise ActionAxiomViolation(
                    "associative-left",
                    (K.decode(lam), R.decode(a), R.decode(b)),
                )
            rgt = arow[lam_row]
            neq = lhs != rgt
            if neq.any():
                b = int(np.argmax(neq))
                raise ActionAxiomViolation(
                    "associative-right",
                    (K.decode(lam), R.decode(a), R.decode(b)),
                )

    # (lam.a)* = lam*.a*
    rstar = R.star_vector()
    kstar = K.star_vector()
    for lam in range(nk):
        lhs = rstar[table64[lam]]
        rhs = table64[int(kstar[lam])][rstar]
        neq = lhs != rhs
        if neq.any():
            a = int(np.argmax(neq))
            raise ActionAxiomViolation("star-action", (K.decode(lam), R.decode(a)))

    # structural flags (recorded, never assumed)
    torsion_free = True
    if nk > 1 and nr > 1:
        torsion_free = not bool((table64[1:, 1:] == 0).any())

    k_is_domain = K.order >= 2
    if k_is_domain:
        nonzero_products = kmul[1:, 1:]
        k_is_domain = not bool((nonzero_products == 0).any())

    return ScalarAlgebra(
        ring=R,
        scalars=K,
        action=table,
        action_kind=kind,
        torsion_free=torsion_free,
        k_is_domain=k_is_domain,
    )
