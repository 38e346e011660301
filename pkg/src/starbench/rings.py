"""Finite *-rings with indexed elements.

A :class:`StarRing` is a finite ring with involution whose elements are the
indices 0..order-1, with index 0 always the zero element. Operations are
served by a backend object; small rings get dense int32 Cayley tables at
construction (``order**2 <= limits.table_threshold``), larger ones stay
call-based with vectorized structural rows.

Backends implement a narrow vector protocol:

* ``add_row(i)``, ``mul_row(i)`` — full row of the operation table.
* ``mul_col(j)`` — full column (addition is commutative, so no add_col).
* ``add_pairs(u, v)``, ``mul_pairs(u, v)`` — elementwise on index vectors.
* ``neg_vec()``, ``star_vec()`` — unary maps as vectors.
* ``find_unity()``, ``characteristic()``, ``additive_order(i)``.
* ``decode(i)`` / ``encode(literal)`` — the element codec.

Everything downstream (annihilator scans, classifiers, unit adjunction)
works through :class:`StarRing`, never through a backend directly.
"""

from __future__ import annotations

import math
from typing import Any, List, Optional, Sequence

import numpy as np

from . import kernels
from .config import DEFAULT_LIMITS, Limits
from .descriptor import (
    Cyclic,
    Descriptor,
    Matrix,
    Product,
    SubringClosure,
    check_literal_shape,
    structural_order,
    to_dsl,
    validate_descriptor,
)
from .errors import (
    AxiomViolation,
    DescriptorError,
    LiteralError,
    OrderCapExceeded,
)

# Transient tables for full axiom validation are allowed to be larger than
# the persistent-table threshold, but not unbounded.
VALIDATION_TABLE_CAP = 36_000_000


def _as_index_array(v) -> np.ndarray:
    return np.asarray(v, dtype=np.int64)


class _CyclicBackend:
    """Integers mod m; identity involution; literal = any int (reduced)."""

    def __init__(self, modulus: int):
        self.m = modulus
        self.order = modulus
        self._idx = np.arange(modulus, dtype=np.int64)

    def add_row(self, i: int) -> np.ndarray:
        return (self._idx + i) % self.m

    def mul_row(self, i: int) -> np.ndarray:
        return (self._idx * i) % self.m

    def mul_col(self, j: int) -> np.ndarray:
        return self.mul_row(j)  # commutative

    def add_pairs(self, u, v) -> np.ndarray:
        return (_as_index_array(u) + _as_index_array(v)) % self.m

    def mul_pairs(self, u, v) -> np.ndarray:
        return (_as_index_array(u) * _as_index_array(v)) % self.m

    def neg_vec(self) -> np.ndarray:
        return (-self._idx) % self.m

    def star_vec(self) -> np.ndarray:
        return self._idx.copy()

    def find_unity(self) -> Optional[int]:
        return 1 % self.m

    def characteristic(self) -> int:
        return self.m

    def additive_order(self, i: int) -> int:
        return self.m // math.gcd(self.m, i)

    def decode(self, i: int) -> Any:
        return int(i)

    def encode(self, lit: Any) -> int:
        if not isinstance(lit, int) or isinstance(lit, bool):
            raise LiteralError("cyclic element literal must be an int, got %r" % (lit,))
        return lit % self.m


class _MatrixBackend:
    """n-by-n matrices over Z(m), involution = transpose composed with the
    base star (identity for cyclic bases, composed anyway).

    Index encoding: row-major digits base m, first entry most significant.
    """

    def __init__(self, size: int, modulus: int):
        self.k = size
        self.m = modulus
        self.order = modulus ** (size * size)
        kk = size * size
        powers = modulus ** np.arange(kk - 1, -1, -1, dtype=np.int64)
        self._powers = powers
        idx = np.arange(self.order, dtype=np.int64)
        digits = (idx[:, None] // powers[None, :]) % modulus
        self.mats = np.ascontiguousarray(
            digits.reshape(self.order, size, size).astype(np.int64)
        )
        self._base_star = np.arange(modulus, dtype=np.int64)  # identity on Z(m)

    def _enc(self, mats: np.ndarray) -> np.ndarray:
        flat = mats.reshape(mats.shape[0], -1)
        return flat @ self._powers

    def add_row(self, i: int) -> np.ndarray:
        return self._enc((self.mats[i][None, :, :] + self.mats) % self.m)

    def mul_row(self, i: int) -> np.ndarray:
        prod = np.einsum("ab,nbc->nac", self.mats[i], self.mats) % self.m
        return self._enc(prod)

    def mul_col(self, j: int) -> np.ndarray:
        prod = np.einsum("nab,bc->nac", self.mats, self.mats[j]) % self.m
        return self._enc(prod)

    def add_pairs(self, u, v) -> np.ndarray:
        u = _as_index_array(u)
        v = _as_index_array(v)
        return self._enc((self.mats[u] + self.mats[v]) % self.m)

    def mul_pairs(self, u, v) -> np.ndarray:
        u = _as_index_array(u)
        v = _as_index_array(v)
        prod = np.einsum("nab,nbc->nac", self.mats[u], self.mats[v]) % self.m
        return self._enc(prod)

    def neg_vec(self) -> np.ndarray:
        return self._enc((-self.mats) % self.m)

    def star_vec(self) -> np.ndarray:
        starred = self._base_star[self.mats.transpose(0, 2, 1)]
        return self._enc(np.ascontiguousarray(starred))

    def find_unity(self) -> Optional[int]:
        return int(self._enc(np.eye(self.k, dtype=np.int64)[None, :, :] % self.m)[0])

    def characteristic(self) -> int:
        return self.m

    def additive_order(self, i: int) -> int:
        g = math.gcd(self.m, int(np.gcd.reduce(self.mats[i], axis=None)))
        return self.m // g

    def decode(self, i: int) -> Any:
        return tuple(tuple(int(e) for e in row) for row in self.mats[i])

    def encode(self, lit: Any) -> int:
        arr = np.array(lit, dtype=np.int64)
        if arr.shape != (self.k, self.k):
            raise LiteralError(
                "matrix literal must be %dx%d, got shape %r" % (self.k, self.k, arr.shape)
            )
        return int(self._enc((arr % self.m)[None, :, :])[0])


class _ProductBackend:
    """Direct product; componentwise operations and involution.

    Index encoding: i = left_index * right_order + right_index.
    """

    def __init__(self, left: "StarRing", right: "StarRing"):
        self.left = left
        self.right = right
        self.rn = right.order
        self.order = left.order * right.order

    def _split(self, u):
        u = _as_index_array(u)
        return u // self.rn, u % self.rn

    def add_row(self, i: int) -> np.ndarray:
        li, ri = divmod(i, self.rn)
        lrow = self.left.add_row(li)
        rrow = self.right.add_row(ri)
        return (lrow[:, None] * self.rn + rrow[None, :]).ravel()

    def mul_row(self, i: int) -> np.ndarray:
        li, ri = divmod(i, self.rn)
        lrow = self.left.mul_row(li)
        rrow = self.right.mul_row(ri)
        return (lrow[:, None] * self.rn + rrow[None, :]).ravel()

    def mul_col(self, j: int) -> np.ndarray:
        lj, rj = divmod(j, self.rn)
        lcol = self.left.mul_col(lj)
        rcol = self.right.mul_col(rj)
        return (lcol[:, None] * self.rn + rcol[None, :]).ravel()

    def add_pairs(self, u, v) -> np.ndarray:
        ul, ur = self._split(u)
        vl, vr = self._split(v)
        return self.left.add_pairs(ul, vl) * self.rn + self.right.add_pairs(ur, vr)

    def mul_pairs(self, u, v) -> np.ndarray:
        ul, ur = self._split(u)
        vl, vr = self._split(v)
        return self.left.mul_pairs(ul, vl) * self.rn + self.right.mul_pairs(ur, vr)

    def neg_vec(self) -> np.ndarray:
        ln = self.left.neg_vector()
        rn_ = self.right.neg_vector()
        return (ln[:, None] * self.rn + rn_[None, :]).ravel()

    def star_vec(self) -> np.ndarray:
        ls = self.left.star_vector()
        rs = self.right.star_vector()
        return (ls[:, None] * self.rn + rs[None, :]).ravel()

    def find_unity(self) -> Optional[int]:
        lu = self.left.unity
        ru = self.right.unity
        if lu is None or ru is None:
            return None
        return lu * self.rn + ru

    def characteristic(self) -> int:
        return math.lcm(self.left.characteristic, self.right.characteristic)

    def additive_order(self, i: int) -> int:
        li, ri = divmod(i, self.rn)
        return math.lcm(
            self.left.additive_order(li), self.right.additive_order(ri)
        )

    def decode(self, i: int) -> Any:
        li, ri = divmod(i, self.rn)
        return (self.left.decode(li), self.right.decode(ri))

    def encode(self, lit: Any) -> int:
        if not isinstance(lit, tuple) or len(lit) != 2:
            raise LiteralError("product element literal must be a pair, got %r" % (lit,))
        return self.left.encode(lit[0]) * self.rn + self.right.encode(lit[1])


class _ClosureBackend:
    """A subring of a parent ring, carried by an ascending index array.

    Local index i corresponds to parent index carrier[i]. The carrier is
    closed under the parent's +, -, *, star by construction; membership of a
    gathered parent row is asserted, not assumed.
    """

    def __init__(self, parent: "StarRing", carrier: np.ndarray):
        self.parent = parent
        self.carrier = carrier
        self.order = len(carrier)

    def _pos(self, parent_indices) -> np.ndarray:
        parent_indices = _as_index_array(parent_indices)
        pos = np.searchsorted(self.carrier, parent_indices)
        safe = np.minimum(pos, self.order - 1)
        if not np.array_equal(self.carrier[safe], parent_indices):
            raise AxiomViolation(
                "closure", tuple(int(p) for p in np.atleast_1d(parent_indices)[:3])
            )
        return pos

    def add_row(self, i: int) -> np.ndarray:
        return self._pos(self.parent.add_row(int(self.carrier[i]))[self.carrier])

    def mul_row(self, i: int) -> np.ndarray:
        return self._pos(self.parent.mul_row(int(self.carrier[i]))[self.carrier])

    def mul_col(self, j: int) -> np.ndarray:
        return self._pos(self.parent.mul_col(int(self.carrier[j]))[self.carrier])

    def add_pairs(self, u, v) -> np.ndarray:
        return self._pos(
            self.parent.add_pairs(self.carrier[_as_index_array(u)], self.carrier[_as_index_array(v)])
        )

    def mul_pairs(self, u, v) -> np.ndarray:
        return self._pos(
            self.parent.mul_pairs(self.carrier[_as_index_array(u)], self.carrier[_as_index_array(v)])
        )

    def neg_vec(self) -> np.ndarray:
        return self._pos(self.parent.neg_vector()[self.carrier])

    def star_vec(self) -> np.ndarray:
        return self._pos(self.parent.star_vector()[self.carrier])

    def find_unity(self) -> Optional[int]:
        ident = np.arange(self.order)
        for e in range(self.order):
            if np.array_equal(self.mul_row(e), ident) and np.array_equal(
                self.mul_col(e), ident
            ):
                return e
        return None

    def characteristic(self) -> int:
        out = 1
        for p in self.carrier:
            out = math.lcm(out, self.parent.additive_order(int(p)))
        return out

    def additive_order(self, i: int) -> int:
        return self.parent.additive_order(int(self.carrier[i]))

    def decode(self, i: int) -> Any:
        return self.parent.decode(int(self.carrier[i]))

    def encode(self, lit: Any) -> int:
        p = self.parent.encode(lit)
        pos = int(np.searchsorted(self.carrier, p))
        if pos >= self.order or self.carrier[pos] != p:
            raise LiteralError("element %r is not in the subring" % (lit,))
        return pos


class _RawTablesBackend:
    """Explicit tables; used by tests and by StarRing.from_tables."""

    def __init__(
        self,
        add: np.ndarray,
        mul: np.ndarray,
        neg: np.ndarray,
        star: np.ndarray,
        literals: Optional[Sequence[Any]] = None,
    ):
        self.order = add.shape[0]
        self._add = np.ascontiguousarray(add, dtype=np.int32)
        self._mul = np.ascontiguousarray(mul, dtype=np.int32)
        self._neg = np.asarray(neg, dtype=np.int64)
        self._star = np.asarray(star, dtype=np.int64)
        self._literals = list(literals) if literals is not None else list(range(self.order))
        self._lit_index = {self._freeze(l): i for i, l in enumerate(self._literals)}

    @staticmethod
    def _freeze(lit: Any) -> Any:
        if isinstance(lit, list):
            return tuple(_RawTablesBackend._freeze(x) for x in lit)
        return lit

    def add_row(self, i: int) -> np.ndarray:
        return self._add[i].astype(np.int64)

    def mul_row(self, i: int) -> np.ndarray:
        return self._mul[i].astype(np.int64)

    def mul_col(self, j: int) -> np.ndarray:
        return self._mul[:, j].astype(np.int64)

    def add_pairs(self, u, v) -> np.ndarray:
        return self._add[_as_index_array(u), _as_index_array(v)].astype(np.int64)

    def mul_pairs(self, u, v) -> np.ndarray:
        return self._mul[_as_index_array(u), _as_index_array(v)].astype(np.int64)

    def neg_vec(self) -> np.ndarray:
        return self._neg.copy()

    def star_vec(self) -> np.ndarray:
        return self._star.copy()

    def find_unity(self) -> Optional[int]:
        ident = np.arange(self.order)
        diag = self._mul[np.arange(self.order), np.arange(self.order)]
        for e in np.flatnonzero(diag == np.arange(self.order)):
            e = int(e)
            if np.array_equal(self._mul[e].astype(np.int64), ident) and np.array_equal(
                self._mul[:, e].astype(np.int64), ident
            ):
                return e
        return None

    def characteristic(self) -> int:
        return _brute_additive_exponent(self)

    def additive_order(self, i: int) -> int:
        k = 1
        cur = i
        while cur != 0:
            cur = int(self._add[cur, i])
            k += 1
        return k

    def decode(self, i: int) -> Any:
        return self._literals[i]

    def encode(self, lit: Any) -> int:
        key = self._freeze(lit)
        if key not in self._lit_index:
            raise LiteralError("element %r is not in the ring" % (lit,))
        return self._lit_index[key]


def _brute_additive_exponent(backend) -> int:
    """Least k >= 1 with k.x = 0 for all x, by iterated vector addition."""
    n = backend.order
    idx = np.arange(n, dtype=np.int64)
    cur = idx.copy()
    k = 1
    while cur.any():
        cur = backend.add_pairs(cur, idx)
        k += 1
        if k > 4 * n + 4:
            raise AxiomViolation("additive-exponent", ())
    return k


class StarRing:
    """A finite ring with involution, elements indexed 0..order-1.

    Index 0 is the zero element. ``unity`` is the index of the multiplicative
    identity or None. ``characteristic`` is the additive exponent. All arrays
    handed out are read-only views or fresh copies.
    """

    def __init__(
        self,
        backend,
        descriptor: Optional[Descriptor] = None,
        label: Optional[str] = None,
        limits: Limits = DEFAULT_LIMITS,
    ):
        self._backend = backend
        self.descriptor = descriptor
        self.order = backend.order
        self.label = label if label is not None else (
            to_dsl(descriptor) if descriptor is not None else "ring(order=%d)" % backend.order
        )
        self.limits = limits

        n = self.order
        self._neg = np.asarray(backend.neg_vec(), dtype=np.int64)
        self._star = np.asarray(backend.star_vec(), dtype=np.int64)
        self._neg.setflags(write=False)
        self._star.setflags(write=False)

        self._add_table: Optional[np.ndarray] = None
        self._mul_table: Optional[np.ndarray] = None
        if n * n <= limits.table_threshold:
            self._add_table = self._assemble(backend.add_row)
            self._mul_table = self._assemble(backend.mul_row)

        self._check_structural_invariants()
        self.unity: Optional[int] = backend.find_unity()
        self.characteristic: int = backend.characteristic()

    def _assemble(self, row_fn) -> np.ndarray:
        n = self.order
        table = np.empty((n, n), dtype=np.int32)
        for i in range(n):
            table[i] = row_fn(i)
        table.setflags(write=False)
        return table

    def _check_structural_invariants(self) -> None:
        n = self.order
        idx = np.arange(n, dtype=np.int64)
        if int(self._star[0]) != 0:
            raise AxiomViolation("zero-star", (self.decode(0),))
        if int(self._neg[0]) != 0:
            raise AxiomViolation("zero-neg", (self.decode(0),))
        row0 = self.add_row(0)
        if not np.array_equal(row0, idx):
            bad = int(np.argmax(row0 != idx))
            raise AxiomViolation("zero-identity", (self.decode(bad),))
        if not np.array_equal(self._star[self._star], idx):
            bad = int(np.argmax(self._star[self._star] != idx))
            raise AxiomViolation("star-involutive", (self.decode(bad),))
        if self.add_pairs(idx, self._neg).any():
            bad = int(np.argmax(self.add_pairs(idx, self._neg) != 0))
            raise AxiomViolation("add-inverse", (self.decode(bad),))

    # --- scalar ops ------------------------------------------------------

    def add(self, i: int, j: int) -> int:
        if self._add_table is not None:
            return int(self._add_table[i, j])
        return int(self._backend.add_pairs(np.array([i]), np.array([j]))[0])

    def mul(self, i: int, j: int) -> int:
        if self._mul_table is not None:
            return int(self._mul_table[i, j])
        return int(self._backend.mul_pairs(np.array([i]), np.array([j]))[0])

    def neg(self, i: int) -> int:
        return int(self._neg[i])

    def star(self, i: int) -> int:
        return int(self._star[i])

    def sub(self, i: int, j: int) -> int:
        return self.add(i, self.neg(j))

    # --- vector ops -------------------------------------------------------

    def add_row(self, i: int) -> np.ndarray:
        if self._add_table is not None:
            return self._add_table[i].astype(np.int64)
        return _as_index_array(self._backend.add_row(i))

    def mul_row(self, i: int) -> np.ndarray:
        if self._mul_table is not None:
            return self._mul_table[i].astype(np.int64)
        return _as_index_array(self._backend.mul_row(i))

    def mul_col(self, j: int) -> np.ndarray:
        if self._mul_table is not None:
            return self._mul_table[:, j].astype(np.int64)
        return _as_index_array(self._backend.mul_col(j))

    def add_pairs(self, u, v) -> np.ndarray:
        if self._add_table is not None:
            return self._add_table[_as_index_array(u), _as_index_array(v)].astype(np.int64)
        return _as_index_array(self._backend.add_pairs(u, v))

    def mul_pairs(self, u, v) -> np.ndarray:
        if self._mul_table is not None:
            return self._mul_table[_as_index_array(u), _as_index_array(v)].astype(np.int64)
        return _as_index_array(self._backend.mul_pairs(u, v))

    def neg_vector(self) -> np.ndarray:
        return self._neg

    def star_vector(self) -> np.ndarray:
        return self._star

    def add_table(self) -> np.ndarray:
        """Dense int32 table; assembled transiently for call-based rings."""
        if self._add_table is not None:
            return self._add_table
        self._guard_transient()
        return self._assemble(self._backend.add_row)

    def mul_table(self) -> np.ndarray:
        if self._mul_table is not None:
            return self._mul_table
        self._guard_transient()
        return self._assemble(self._backend.mul_row)

    def _guard_transient(self) -> None:
        if self.order * self.order > VALIDATION_TABLE_CAP:
            raise OrderCapExceeded(
                self.order * self.order, VALIDATION_TABLE_CAP, what="transient table"
            )

    def has_tables(self) -> bool:
        return self._mul_table is not None

    # --- codec and misc ----------------------------------------------------

    def decode(self, i: int) -> Any:
        return self._backend.decode(i)

    def encode(self, lit: Any) -> int:
        return self._backend.encode(lit)

    def additive_order(self, i: int) -> int:
        return self._backend.additive_order(i)

    def __repr__(self) -> str:
        return "StarRing(%s, order=%d)" % (self.label, self.order)

    @staticmethod
    def from_tables(
        add: np.ndarray,
        mul: np.ndarray,
        neg: np.ndarray,
        star: np.ndarray,
        literals: Optional[Sequence[Any]] = None,
        label: str = "raw",
        limits: Limits = DEFAULT_LIMITS,
    ) -> "StarRing":
        """Build a ring from explicit tables (tests and adapters)."""
        backend = _RawTablesBackend(add, mul, neg, star, literals)
        return StarRing(backend, descriptor=None, label=label, limits=limits)


def _close_subring(parent: StarRing, generator_indices: List[int]) -> np.ndarray:
    """Smallest subset containing the generators, closed under +, -, *, star.

    Worklist closure: when an element is processed, its sums and products
    against everything already present (both orders) are added; later
    arrivals pick up their pairs with it when their own turn comes.
    """
    n = parent.order
    member = np.zeros(n, dtype=bool)
    queue: List[int] = []
    for g in generator_indices:
        if not member[g]:
            member[g] = True
            queue.append(g)
    neg = parent.neg_vector()
    star = parent.star_vector()
    head = 0
    while head < len(queue):
        x = queue[head]
        head += 1
        for y in (int(neg[x]), int(star[x])):
            if not member[y]:
                member[y] = True
                queue.append(y)
        current = np.flatnonzero(member)
        produced = np.concatenate(
            [
                parent.add_row(x)[current],
                parent.mul_row(x)[current],
                parent.mul_col(x)[current],
            ]
        )
        for y in np.unique(produced):
            y = int(y)
            if not member[y]:
                member[y] = True
                queue.append(y)
    carrier = np.flatnonzero(member).astype(np.int64)
    if len(carrier) == 0 or carrier[0] != 0:
        raise AxiomViolation("closure-zero", ())
    return carrier


def build_ring(d: Descriptor, limits: Limits = DEFAULT_LIMITS) -> StarRing:
    """Construct the ring a descriptor denotes.

    Raises DescriptorError for malformed descriptors, OrderCapExceeded when
    the (structural) order passes limits.element_cap, and AxiomViolation if
    a structural guard trips (cannot happen for these constructors; kept as
    a defense against backend bugs).
    """
    validate_descriptor(d)
    order = structural_order(d)
    if order > limits.element_cap:
        raise OrderCapExceeded(order, limits.element_cap)

    if isinstance(d, Cyclic):
        return StarRing(_CyclicBackend(d.modulus), descriptor=d, limits=limits)
    if isinstance(d, Matrix):
        return StarRing(_MatrixBackend(d.size, d.base.modulus), descriptor=d, limits=limits)
    if isinstance(d, Product):
        left = build_ring(d.left, limits)
        right = build_ring(d.right, limits)
        return StarRing(_ProductBackend(left, right), descriptor=d, limits=limits)
    if isinstance(d, SubringClosure):
        parent = build_ring(d.parent, limits)
        gen_indices = []
        for g in d.generators:
            check_literal_shape(d.parent, g)
            gen_indices.append(parent.encode(g))
        carrier = _close_subring(parent, gen_indices)
        return StarRing(_ClosureBackend(parent, carrier), descriptor=d, limits=limits)
    raise DescriptorError("not a descriptor: %r" % (d,))


def characteristic(ring: StarRing) -> int:
    """Least k >= 1 with k.x = 0 for every x."""
    return ring.characteristic


def validate_star_ring(ring: StarRing) -> dict:
    """Exhaustively audit the *-ring axioms; raises AxiomViolation on failure.

    Checks run in a fixed order so the first reported violation is
    deterministic. Returns a summary dict on success.
    """
    n = ring.order
    idx = np.arange(n, dtype=np.int64)
    add = np.ascontiguousarray(ring.add_table(), dtype=np.int32)
    mul = np.ascontiguousarray(ring.mul_table(), dtype=np.int32)
    star = np.ascontiguousarray(ring.star_vector(), dtype=np.int32)
    neg = ring.neg_vector()
    checks: List[str] = []

    def witness(*indices: int) -> tuple:
        return tuple(ring.decode(int(i)) for i in indices)

    # zero is a (left, hence two-sided once commutativity holds) identity
    row0 = add[0].astype(np.int64)
    if not np.array_equal(row0, idx):
        raise AxiomViolation("zero-identity", witness(int(np.argmax(row0 != idx))))
    checks.append("zero-identity")

    bad = add != add.T
    if bad.any():
        flat = int(np.argmax(bad))
        raise AxiomViolation("add-commutative", witness(flat // n, flat % n))
    checks.append("add-commutative")

    inv = add[idx, neg]
    if inv.any():
        raise AxiomViolation("add-inverse", witness(int(np.argmax(inv != 0))))
    checks.append("add-inverse")

    hit = kernels.first_assoc_violation(add)
    if hit is not None:
        raise AxiomViolation("add-associative", witness(*hit))
    checks.append("add-associative")

    hit = kernels.first_assoc_violation(mul)
    if hit is not None:
        raise AxiomViolation("mul-associative", witness(*hit))
    checks.append("mul-associative")

    hit = kernels.first_distrib_violation(add, mul)
    if hit is not None:
        side, x, y, z = hit
        name = "left-distributive" if side == 0 else "right-distributive"
        raise AxiomViolation(name, witness(x, y, z))
    checks.append("distributive")

    star64 = star.astype(np.int64)
    if not np.array_equal(star64[star64], idx):
        raise AxiomViolation(
            "star-involutive", witness(int(np.argmax(star64[star64] != idx)))
        )
    checks.append("star-involutive")

    for x in range(n):
        lhs = star64[add[x]]
        rhs = add[star64[x]][star64]
        neq = lhs != rhs
        if neq.any():
            raise AxiomViolation("star-additive", witness(x, int(np.argmax(neq))))
    checks.append("star-additive")

    hit = kernels.first_antimult_violation(mul, star)
    if hit is not None:
        raise AxiomViolation("star-anti-multiplicative", witness(*hit))
    checks.append("star-anti-multiplicative")

    if ring.unity is not None:
        e = ring.unity
        if not (
            np.array_equal(mul[e].astype(np.int64), idx)
            and np.array_equal(mul[:, e].astype(np.int64), idx)
        ):
            raise AxiomViolation("unity", witness(e))
        checks.append("unity")

    return {"ring": ring.label, "order": n, "checks": checks, "ok": True}
