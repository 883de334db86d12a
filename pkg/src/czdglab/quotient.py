"""Quotient presentations: Z_m[vars]/(relations) and GF(q)[vars]/(relations).

Relations are oriented into monomial rewrite rules under the graded-lex
order.  Two rule kinds exist: monic rules ``mono -> tail`` (unit leading
coefficient) and, over Z_m, torsion rules ``c * mono -> 0`` (single-term
relations with non-unit coefficient).  The system is closed under
critical-pair consequences before the monomial basis is enumerated, so
presentations whose ideal forces extra collapses still build correctly.
"""
from __future__ import annotations

import heapq
import math
from collections import deque
from dataclasses import dataclass

import numpy as np

from .errors import (
    InconsistentPresentation,
    NonOrientableRelation,
    NonTerminating,
    OrderOutOfRange,
)
from .rings import FiniteRing, _resolve_cap, build_gf

_MAX_WORK_ITEMS = 10000
_MAX_BASIS_MONOMIALS = 64
_MAX_BFS_POPS = 100000
_FULL_AXIOM_CHECK_MAX = 1024
_TABLE_CHUNK = 256

# -- monomials: tuples of per-variable exponents ------------------------------


def _grlex_key(mono):
    return (sum(mono), mono)


def _m_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _m_divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _m_quot(num, den):
    return tuple(x - y for x, y in zip(num, den))


def _m_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _m_coprime(a, b):
    return all(min(x, y) == 0 for x, y in zip(a, b))


# -- scalar domains ------------------------------------------------------------


class _ZmScalars:
    """Coefficients are residues 0..m-1."""

    is_field = False

    def __init__(self, m: int):
        self.m = m

    def from_int(self, c: int) -> int:
        return c % self.m

    def add(self, a, b):
        return (a + b) % self.m

    def neg(self, a):
        return (-a) % self.m

    def mul(self, a, b):
        return (a * b) % self.m

    def is_unit(self, c) -> bool:
        return math.gcd(c, self.m) == 1

    def inv(self, c):
        return pow(c, -1, self.m)


class _GFScalars:
    """Coefficients are element indices of a GF(p^k) table ring."""

    is_field = True

    def __init__(self, field: FiniteRing, p: int):
        self.field = field
        self.p = p
        self.q = field.order

    def from_int(self, c: int) -> int:
        return c % self.p

    def add(self, a, b):
        return int(self.field.add_table[a, b])

    def neg(self, a):
        return self.field.neg(a)

    def mul(self, a, b):
        return int(self.field.mul_table[a, b])

    def is_unit(self, c) -> bool:
        return c != 0

    def inv(self, c):
        return int(np.argmax(self.field.mul_table[c] == self.field.one))


def _p_add_term(S, poly: dict, mono, coeff):
    c = S.add(poly.get(mono, 0), coeff)
    if c:
        poly[mono] = c
    else:
        poly.pop(mono, None)


# -- presentation --------------------------------------------------------------


@dataclass(frozen=True)
class RingPresentation:
    """A quotient presentation over a base ring.

    ``base`` is ("zn", m) or ("gf", p, k); ``relations`` holds integer
    polynomials as tuples of (coefficient, exponent-tuple) terms.
    """

    base: tuple
    variables: tuple[str, ...]
    relations: tuple[tuple[tuple[int, tuple[int, ...]], ...], ...]

    def build(self, cap: int | None = None, source_spec: str | None = None) -> FiniteRing:
        return _QuotientBuilder(self, _resolve_cap(cap), source_spec).build()


class _QuotientBuilder:
    def __init__(self, pres: RingPresentation, cap: int, source_spec):
        self.pres = pres
        self.cap = cap
        self.source_spec = source_spec
        self.nvars = len(pres.variables)
        if pres.base[0] == "zn":
            self.m = pres.base[1]
            if self.m < 2:
                raise OrderOutOfRange(f"Z_n base needs n >= 2, got {self.m}")
            self.S = _ZmScalars(self.m)
        else:
            _, p, k = pres.base
            field = build_gf(p, k, cap=cap)
            self.S = _GFScalars(field, p)
            self.q = field.order
        self.is_gf = self.S.is_field
        self.monic: dict[tuple, dict] = {}
        self.torsion: dict[tuple, int] = {}
        self.queue: deque = deque()

    # -- rewrite system ---------------------------------------------------

    def _ord(self, mono) -> int:
        """Additive order of a monomial: gcd of m and all dividing torsions."""
        g = self.m
        for nu, c in self.torsion.items():
            if _m_divides(nu, mono):
                g = math.gcd(g, c)
        return g

    def _nf(self, poly: dict) -> dict:
        """Fully reduce a polynomial by the current rule system."""
        S = self.S
        work = dict(poly)
        while True:
            if not self.is_gf:
                for mono in list(work):
                    c = work[mono] % self._ord(mono)
                    if c:
                        work[mono] = c
                    else:
                        del work[mono]
            target = rule_lhs = None
            for mono in sorted(work, key=_grlex_key, reverse=True):
                for lhs in self.monic:
                    if _m_divides(lhs, mono):
                        target, rule_lhs = mono, lhs
                        break
                if target is not None:
                    break
            if target is None:
                return work
            c = work.pop(target)
            shift = _m_quot(target, rule_lhs)
            for tmono, tcoeff in self.monic[rule_lhs].items():
                _p_add_term(S, work, _m_mul(shift, tmono), S.mul(c, tcoeff))

    def _pair_torsion_monic(self, nu, c, lhs, tail):
        """c*nu -> 0 and lhs -> tail overlap at lcm: c*(lcm/lhs)*tail is in the ideal."""
        if _m_coprime(nu, lhs):
            return
        shift = _m_quot(_m_lcm(nu, lhs), lhs)
        p: dict = {}
        for tmono, tcoeff in tail.items():
            _p_add_term(self.S, p, _m_mul(shift, tmono), self.S.mul(c, tcoeff))
        if p:
            self.queue.append(p)

    def _add_monic(self, lhs, tail):
        S = self.S
        for lhs2, tail2 in list(self.monic.items()):
            if _m_coprime(lhs, lhs2):
                continue
            gamma = _m_lcm(lhs, lhs2)
            p: dict = {}
            s1 = _m_quot(gamma, lhs)
            for tmono, tcoeff in tail.items():
                _p_add_term(S, p, _m_mul(s1, tmono), tcoeff)
            s2 = _m_quot(gamma, lhs2)
            for tmono, tcoeff in tail2.items():
                _p_add_term(S, p, _m_mul(s2, tmono), S.neg(tcoeff))
            if p:
                self.queue.append(p)
        self.monic[lhs] = tail
        if not self.is_gf:
            for nu, c in list(self.torsion.items()):
                self._pair_torsion_monic(nu, c, lhs, tail)

    def _add_torsion(self, mono, c):
        g = math.gcd(self.m, c)
        old = self.torsion.get(mono)
        new = g if old is None else math.gcd(old, g)
        if not any(mono) and new == 1:
            raise InconsistentPresentation("relations force 1 = 0")
        if old == new:
            return
        self.torsion[mono] = new
        for lhs, tail in list(self.monic.items()):
            self._pair_torsion_monic(mono, new, lhs, tail)

    def _complete(self):
        for rel in self.pres.relations:
            p: dict = {}
            for coeff, exps in rel:
                _p_add_term(self.S, p, tuple(exps), self.S.from_int(coeff))
            if p:
                self.queue.append(p)
        processed = 0
        while self.queue:
            processed += 1
            if processed > _MAX_WORK_ITEMS:
                raise NonTerminating(
                    f"rule completion exceeded {_MAX_WORK_ITEMS} steps"
                )
            nf = self._nf(self.queue.popleft())
            if not nf:
                continue
            lead = max(nf, key=_grlex_key)
            c = nf[lead]
            if self.S.is_unit(c):
                if not any(lead):
                    raise InconsistentPresentation("relations force 1 = 0")
                inv = self.S.inv(c)
                tail = {
                    mono: self.S.neg(self.S.mul(inv, coeff))
                    for mono, coeff in nf.items()
                    if mono != lead
                }
                self._add_monic(lead, tail)
            elif len(nf) == 1:
                self._add_torsion(lead, c)
            else:
                raise NonOrientableRelation(
                    "relation reduces to a non-unit leading coefficient "
                    f"{c} with a nonzero tail; this engine cannot orient it"
                )

    # -- basis enumeration --------------------------------------------------

    def _find_basis(self):
        start = (0,) * self.nvars
        heap = [(_grlex_key(start), start, 0)]
        basis, ords = [], []
        count = 1
        pops = 0
        while heap:
            pops += 1
            if pops > _MAX_BFS_POPS:
                raise NonTerminating("basis enumeration exceeded its step cap")
            _, mono, first_var = heapq.heappop(heap)
            if any(_m_divides(lhs, mono) for lhs in self.monic):
                continue
            o = self.q if self.is_gf else self._ord(mono)
            if o == 1:
                continue
            basis.append(mono)
            ords.append(o)
            count *= o
            if count > self.cap:
                raise NonTerminating(
                    f"quotient order exceeds cap {self.cap}"
                    " (the presentation may even be infinite)"
                )
            if len(basis) > _MAX_BASIS_MONOMIALS:
                raise NonTerminating(
                    "monomial basis keeps growing; presentation looks infinite"
                )
            for i in range(first_var, self.nvars):
                child = tuple(
                    e + 1 if j == i else e for j, e in enumerate(mono)
                )
                heapq.heappush(heap, (_grlex_key(child), child, i))
        if not basis or any(basis[0]):
            raise InconsistentPresentation("relations force 1 = 0")
        return basis, ords, count

    # -- table assembly -----------------------------------------------------

    def _structure_constants(self, basis, ords):
        nb = len(basis)
        pos = {mono: k for k, mono in enumerate(basis)}
        C = np.zeros((nb, nb, nb), dtype=np.int64)
        for i in range(nb):
            for j in range(i, nb):
                nf = self._nf({_m_mul(basis[i], basis[j]): 1})
                for mono, coeff in nf.items():
                    assert mono in pos, "normal form left the basis"
                    C[i, j, pos[mono]] = coeff
                C[j, i] = C[i, j]
        return C

    def _labels(self, basis, digits):
        names = self.pres.variables

        def mono_str(mono):
            parts = []
            for v, e in zip(names, mono):
                if e == 1:
                    parts.append(v)
                elif e > 1:
                    parts.append(f"{v}^{e}")
            return "".join(parts)

        labels = []
        for row in digits:
            terms = []
            for k in range(len(basis) - 1, -1, -1):
                c = int(row[k])
                if c == 0:
                    continue
                ms = mono_str(basis[k])
                if self.is_gf:
                    cs = self.S.field.labels[c]
                    if not ms:
                        terms.append(cs)
                    elif c == self.S.field.one:
                        terms.append(ms)
                    else:
                        terms.append(f"({cs}){ms}" if "+" in cs else f"{cs}{ms}")
                else:
                    if not ms:
                        terms.append(str(c))
                    else:
                        terms.append(ms if c == 1 else f"{c}{ms}")
            labels.append("+".join(terms) if terms else "0")
        return labels

    def build(self) -> FiniteRing:
        self._complete()
        basis, ords, n = self._find_basis()
        nb = len(basis)
        ords_arr = np.array(ords, dtype=np.int64)
        places = np.ones(nb, dtype=np.int64)
        for k in range(1, nb):
            places[k] = places[k - 1] * ords[k - 1]
        idx = np.arange(n, dtype=np.int64)
        digits = (idx[:, None] // places[None, :]) % ords_arr[None, :]
        C = self._structure_constants(basis, ords)

        if self.is_gf:
            add, mul = self._gf_tables(digits, C, places, n, nb)
        else:
            add, mul = self._zm_tables(digits, C, ords_arr, places, n, nb)

        labels = self._labels(basis, digits)
        ring = FiniteRing(n, add, mul, 0, 1, labels, self.source_spec)
        self._post_check(ring)
        return ring

    def _zm_tables(self, digits, C, ords_arr, places, n, nb):
        add = np.empty((n, n), dtype=np.int64)
        mul = np.empty((n, n), dtype=np.int64)
        # P[b, i, k] = sum_j digits[b, j] * C[i, j, k]
        P = np.einsum("bj,ijk->bik", digits, C)
        for a0 in range(0, n, _TABLE_CHUNK):
            a1 = min(n, a0 + _TABLE_CHUNK)
            chunk = digits[a0:a1]
            s = (chunk[:, None, :] + digits[None, :, :]) % ords_arr
            add[a0:a1] = s @ places
            t = np.einsum("ai,bik->abk", chunk, P) % ords_arr
            mul[a0:a1] = t @ places
        return add, mul

    def _gf_tables(self, digits, C, places, n, nb):
        S = self.S
        fadd = S.field.add_table
        fmul = S.field.mul_table
        add = np.zeros((n, n), dtype=np.int64)
        for k in range(nb):
            add += fadd[np.ix_(digits[:, k], digits[:, k])].astype(np.int64) * int(places[k])
        mul = np.zeros((n, n), dtype=np.int64)
        for k in range(nb):
            acc = np.zeros((n, n), dtype=np.int64)
            for i in range(nb):
                for j in range(nb):
                    c = int(C[i, j, k])
                    if c == 0:
                        continue
                    term = fmul[fmul[np.ix_(digits[:, i], digits[:, j])], c]
                    acc = fadd[acc, term].astype(np.int64)
            mul += acc * int(places[k])
        return add, mul

    def _post_check(self, ring: FiniteRing):
        """Guard the rewrite engine: exhaustive axiom sweep on small rings,
        a seeded random sample on large ones."""
        if ring.order <= _FULL_AXIOM_CHECK_MAX:
            ring.verify_axioms()
            return
        rng = np.random.RandomState(0)
        A = ring.add_table
        M = ring.mul_table
        for _ in range(4):
            a, b, c = rng.randint(0, ring.order, size=(3, 5000))
            if not (
                np.array_equal(A[A[a, b], c], A[a, A[b, c]])
                and np.array_equal(M[M[a, b], c], M[a, M[b, c]])
                and np.array_equal(M[a, A[b, c]], A[M[a, b], M[a, c]])
            ):
                raise InconsistentPresentation("sampled axiom check failed")
