"""Finite commutative rings with unity, stored as explicit operation tables.

Every ring here is a table pair (addition, multiplication) over element
indices 0..order-1 plus display labels.  Constructors build Z_n, GF(p^k)
and direct products; quotient presentations live in ``quotient``.
"""
from __future__ import annotations

import math
import os
from functools import cached_property
from itertools import product as _iproduct

import numpy as np

from .errors import InconsistentPresentation, NotPrime, OrderOutOfRange

DEFAULT_CAP = 4096

_AXIOM_CHUNK = 128


def ring_order_cap() -> int:
    """Maximum allowed ring order.  Overridden by the CZDG_CAP env var."""
    raw = os.environ.get("CZDG_CAP")
    if raw is None or not raw.strip():
        return DEFAULT_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise ValueError(f"CZDG_CAP must be an integer, got {raw!r}") from None
    if cap < 2:
        raise ValueError("CZDG_CAP must be at least 2")
    return cap


def _resolve_cap(cap: int | None) -> int:
    return ring_order_cap() if cap is None else cap


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_power(q: int) -> tuple[int, int] | None:
    """Return (p, k) with q == p**k and p prime, or None."""
    if q < 2:
        return None
    for p in range(2, q + 1):
        if p * p > q:
            return (q, 1) if is_prime(q) else None
        if q % p:
            continue
        k, rest = 0, q
        while rest % p == 0:
            rest //= p
            k += 1
        return (p, k) if rest == 1 else None
    return None


def bitset_from_mask(mask: np.ndarray) -> int:
    """Pack a boolean vector into a Python-int bitset (bit i == mask[i])."""
    packed = np.packbits(mask.astype(np.uint8), bitorder="little")
    return int.from_bytes(packed.tobytes(), "little")


def iter_bits(bits: int):
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


class ElementSet:
    """A subset of a ring's elements, stored as a bitset over indices."""

    __slots__ = ("ring", "bits")

    def __init__(self, ring: "FiniteRing", bits: int):
        self.ring = ring
        self.bits = bits

    @classmethod
    def from_indices(cls, ring: "FiniteRing", indices) -> "ElementSet":
        bits = 0
        for i in indices:
            bits |= 1 << i
        return cls(ring, bits)

    def indices(self) -> tuple[int, ...]:
        return tuple(iter_bits(self.bits))

    def labels(self) -> tuple[str, ...]:
        return tuple(self.ring.labels[i] for i in iter_bits(self.bits))

    def __contains__(self, i: int) -> bool:
        return bool((self.bits >> i) & 1)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ElementSet)
            and self.bits == other.bits
            and self.ring is other.ring
        )

    def __hash__(self):
        return hash((id(self.ring), self.bits))

    def __repr__(self):
        return f"ElementSet({{{', '.join(self.labels())}}})"


def _table_dtype(order: int):
    return np.int16 if order <= 32767 else np.int32


class FiniteRing:
    """A finite commutative ring with unity given by explicit tables.

    Immutable once built.  ``add_table``/``mul_table`` are dense numpy
    arrays indexed by element pairs; ``labels`` are display strings and
    ``source_spec`` remembers the spec text the ring came from.
    """

    def __init__(self, order, add_table, mul_table, zero, one, labels, source_spec):
        if order < 2:
            raise OrderOutOfRange(f"ring order must be >= 2, got {order}")
        dtype = _table_dtype(order)
        add_table = np.ascontiguousarray(add_table, dtype=dtype)
        mul_table = np.ascontiguousarray(mul_table, dtype=dtype)
        if add_table.shape != (order, order) or mul_table.shape != (order, order):
            raise ValueError("operation tables must be order x order")
        for t in (add_table, mul_table):
            if t.min() < 0 or t.max() >= order:
                raise ValueError("table entries out of element range")
        if zero == one:
            raise InconsistentPresentation("zero and one coincide")
        if len(labels) != order:
            raise ValueError("need one label per element")
        self.order = int(order)
        self.add_table = add_table
        self.mul_table = mul_table
        self.zero = int(zero)
        self.one = int(one)
        self.labels = list(labels)
        self.source_spec = source_spec
        self._check_cheap_axioms()

    # -- basic operations -------------------------------------------------

    def add(self, a: int, b: int) -> int:
        return int(self.add_table[a, b])

    def mul(self, a: int, b: int) -> int:
        return int(self.mul_table[a, b])

    def neg(self, a: int) -> int:
        return int(self._neg_vector[a])

    def element_set(self, indices) -> ElementSet:
        return ElementSet.from_indices(self, indices)

    def _check_cheap_axioms(self):
        """O(n^2) sanity: commutativity, identities, additive inverses."""
        A, M, n = self.add_table, self.mul_table, self.order
        idx = np.arange(n, dtype=A.dtype)
        if not np.array_equal(A, A.T):
            raise InconsistentPresentation("addition is not commutative")
        if not np.array_equal(M, M.T):
            raise InconsistentPresentation("multiplication is not commutative")
        if not np.array_equal(A[self.zero], idx):
            raise InconsistentPresentation("zero is not an additive identity")
        if not np.array_equal(M[self.one], idx):
            raise InconsistentPresentation("one is not a multiplicative identity")
        has_neg = (A == self.zero).any(axis=1)
        if not has_neg.all():
            raise InconsistentPresentation("some element has no additive inverse")
        self._neg_vector = np.argmax(A == self.zero, axis=1)

    def verify_axioms(self) -> None:
        """Exhaustive O(n^3) associativity/distributivity sweep.

        Chunked along the first axis so memory stays O(n^2).  Raises
        InconsistentPresentation with a witness triple on failure.
        """
        A = self.add_table.astype(np.intp)
        M = self.mul_table.astype(np.intp)
        n = self.order
        for a0 in range(0, n, _AXIOM_CHUNK):
            a1 = min(a0 + _AXIOM_CHUNK, n)
            for a in range(a0, a1):
                ra, rm = A[a], M[a]
                lhs = A[ra]            # lhs[b, c] = (a+b)+c
                rhs = ra[A]            # rhs[b, c] = a+(b+c)
                if not np.array_equal(lhs, rhs):
                    b, c = np.argwhere(lhs != rhs)[0]
                    raise InconsistentPresentation(
                        f"addition not associative at ({a},{b},{c})"
                    )
                lhs = M[rm]            # (a*b)*c
                rhs = rm[M]            # a*(b*c)
                if not np.array_equal(lhs, rhs):
                    b, c = np.argwhere(lhs != rhs)[0]
                    raise InconsistentPresentation(
                        f"multiplication not associative at ({a},{b},{c})"
                    )
                lhs = rm[A]            # a*(b+c)
                rhs = A[rm[:, None], rm[None, :]]   # a*b + a*c
                if not np.array_equal(lhs, rhs):
                    b, c = np.argwhere(lhs != rhs)[0]
                    raise InconsistentPresentation(
                        f"distributivity fails at ({a},{b},{c})"
                    )

    # -- derived structure -------------------------------------------------

    @cached_property
    def _unit_mask(self) -> np.ndarray:
        return (self.mul_table == self.one).any(axis=1)

    @cached_property
    def _zero_divisor_mask(self) -> np.ndarray:
        annihilates = self.mul_table == self.zero
        annihilates[:, self.zero] = False
        mask = annihilates.any(axis=1)
        mask[self.zero] = False
        units = self._unit_mask
        # units / zero divisors / {0} must partition the ring
        assert not (mask & units).any()
        assert bool((mask | units).sum() == self.order - 1)
        return mask

    def units(self) -> ElementSet:
        return ElementSet(self, bitset_from_mask(self._unit_mask))

    def zero_divisors(self) -> ElementSet:
        """Nonzero elements annihilated by some nonzero element."""
        return ElementSet(self, bitset_from_mask(self._zero_divisor_mask))

    def annihilator(self, x: int) -> ElementSet:
        """ann(x) = {y : x*y = 0}; always contains 0."""
        return ElementSet(self, bitset_from_mask(self.mul_table[x] == self.zero))

    # -- predicates ---------------------------------------------------------

    def is_field(self) -> bool:
        return int(self._unit_mask.sum()) == self.order - 1

    def is_local(self) -> bool:
        """True iff the nonunits are closed under addition."""
        nonunit = ~self._unit_mask
        idx = np.flatnonzero(nonunit)
        sums = self.add_table[np.ix_(idx, idx)]
        return bool(nonunit[sums].all())

    def is_reduced(self) -> bool:
        """True iff the ring has no nonzero nilpotents."""
        p = np.arange(self.order, dtype=np.intp)
        M = self.mul_table.astype(np.intp)
        for _ in range(max(1, self.order.bit_length())):
            p = M[p, p]
        nil = p == self.zero
        nil[self.zero] = False
        return not nil.any()

    def is_boolean(self) -> bool:
        return bool(
            np.array_equal(self.mul_table.diagonal(), np.arange(self.order))
        )

    def is_vnr(self) -> bool:
        """Von Neumann regular: every a has b with a = a*a*b."""
        sq = self.mul_table.diagonal().astype(np.intp)
        rows = self.mul_table[sq]
        hits = rows == np.arange(self.order, dtype=self.mul_table.dtype)[:, None]
        return bool(hits.any(axis=1).all())

    def predicates(self) -> dict[str, bool]:
        return {
            "is_field": self.is_field(),
            "is_local": self.is_local(),
            "is_reduced": self.is_reduced(),
            "is_boolean": self.is_boolean(),
            "is_vnr": self.is_vnr(),
        }

    def __repr__(self):
        return f"FiniteRing({self.source_spec!r}, order={self.order})"


# -- constructors ------------------------------------------------------------


def build_zn(n: int, cap: int | None = None, source_spec: str | None = None) -> FiniteRing:
    """The ring of integers modulo n."""
    cap = _resolve_cap(cap)
    if n < 2 or n > cap:
        raise OrderOutOfRange(f"Z_n needs 2 <= n <= {cap}, got {n}")
    idx = np.arange(n, dtype=np.int64)
    add = (idx[:, None] + idx[None, :]) % n
    mul = (idx[:, None] * idx[None, :]) % n
    labels = [str(i) for i in range(n)]
    return FiniteRing(n, add, mul, 0, 1, labels, source_spec or f"Z{n}")


# ---- GF(p^k) ----------------------------------------------------------------


def _poly_mod(num: list[int], den: list[int], p: int) -> list[int]:
    """Remainder of num by monic den over Z_p (coefficients low->high)."""
    num = list(num)
    dd = len(den) - 1
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i] % p
        if c:
            for j, dc in enumerate(den):
                num[i - dd + j] = (num[i - dd + j] - c * dc) % p
    return [c % p for c in num[:dd]]


def _is_irreducible(coeffs: tuple[int, ...], p: int) -> bool:
    """Is x^k + sum coeffs[j] x^j irreducible over Z_p?"""
    k = len(coeffs)
    full = list(coeffs) + [1]
    if k == 1:
        return True
    for d in range(1, k // 2 + 1):
        for tail in _iproduct(range(p), repeat=d):
            den = list(tail) + [1]
            if not any(_poly_mod(full, den, p)):
                return False
    return True


def _smallest_irreducible(p: int, k: int) -> tuple[int, ...]:
    """Lexicographically smallest (c_0..c_{k-1}) making x^k + sum c_j x^j irreducible."""
    for coeffs in _iproduct(range(p), repeat=k):
        if _is_irreducible(coeffs, p):
            return coeffs
    raise AssertionError("no irreducible polynomial found")  # unreachable


def _gf_label(digits, var: str = "a") -> str:
    terms = []
    for j in range(len(digits) - 1, -1, -1):
        c = int(digits[j])
        if c == 0:
            continue
        if j == 0:
            terms.append(str(c))
        else:
            head = "" if c == 1 else str(c)
            power = var if j == 1 else f"{var}^{j}"
            terms.append(head + power)
    return "+".join(terms) if terms else "0"


def build_gf(p: int, k: int, cap: int | None = None, source_spec: str | None = None) -> FiniteRing:
    """The field GF(p^k), modulo the lexicographically smallest monic irreducible.

    Elements are polynomials of degree < k over Z_p; index i encodes the
    coefficient vector of i in base p (low digit = constant term).  For
    k == 1 the tables coincide with build_zn(p).
    """
    cap = _resolve_cap(cap)
    if not is_prime(p):
        raise NotPrime(f"GF base must be prime, got {p}")
    if k < 1:
        raise OrderOutOfRange("GF exponent must be >= 1")
    q = p**k
    if q > cap:
        raise OrderOutOfRange(f"GF({q}) exceeds cap {cap}")

    irr = _smallest_irreducible(p, k)
    # reduction rows: x^d as a vector over the basis 1..x^{k-1}
    red = np.zeros((2 * k - 1, k), dtype=np.int64)
    for d in range(k):
        red[d, d] = 1
    for d in range(k, 2 * k - 1):
        prev = red[d - 1]
        shifted = np.zeros(k, dtype=np.int64)
        shifted[1:] = prev[:-1]
        spill = int(prev[k - 1])
        if spill:
            shifted = (shifted + spill * (-(np.array(irr, dtype=np.int64))) % p) % p
        red[d] = shifted % p

    digits = np.zeros((q, k), dtype=np.int64)
    r = np.arange(q)
    for j in range(k):
        digits[:, j] = r % p
        r = r // p
    powers = p ** np.arange(k, dtype=np.int64)

    add = ((digits[:, None, :] + digits[None, :, :]) % p) @ powers

    mul = np.empty((q, q), dtype=np.int64)
    block = max(1, min(q, (1 << 22) // max(1, q * (2 * k - 1))))
    for start in range(0, q, block):
        stop = min(q, start + block)
        conv = np.zeros((stop - start, q, 2 * k - 1), dtype=np.int64)
        for i in range(k):
            for j in range(k):
                conv[:, :, i + j] += digits[start:stop, i, None] * digits[None, :, j]
        prod_digits = (conv.reshape(-1, 2 * k - 1) @ red) % p
        mul[start:stop] = (prod_digits @ powers).reshape(stop - start, q)

    if k == 1:
        labels = [str(i) for i in range(q)]
    else:
        labels = [_gf_label(digits[i]) for i in range(q)]
    return FiniteRing(q, add, mul, 0, 1, labels, source_spec or f"GF({q})")


def build_product(left: FiniteRing, right: FiniteRing, cap: int | None = None,
                  source_spec: str | None = None) -> FiniteRing:
    """Direct product; element (a, b) gets index a * right.order + b."""
    cap = _resolve_cap(cap)
    order = left.order * right.order
    if order > cap:
        raise OrderOutOfRange(f"product order {order} exceeds cap {cap}")
    nr = right.order
    la = left.add_table.astype(np.int64)
    lm = left.mul_table.astype(np.int64)
    ra = right.add_table.astype(np.int64)
    rm = right.mul_table.astype(np.int64)
    add = (la[:, None, :, None] * nr + ra[None, :, None, :]).reshape(order, order)
    mul = (lm[:, None, :, None] * nr + rm[None, :, None, :]).reshape(order, order)
    labels = [f"({a},{b})" for a in left.labels for b in right.labels]
    zero = left.zero * nr + right.zero
    one = left.one * nr + right.one
    if source_spec is None:
        rs = right.source_spec
        if " x " in rs:
            rs = f"({rs})"
        source_spec = f"{left.source_spec} x {rs}"
    return FiniteRing(order, add, mul, zero, one, labels, source_spec)
