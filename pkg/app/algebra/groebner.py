"""Buchberger engine over the packed-monomial polynomial rings.

Working polynomials are rows of ``(key, monomial, coefficient)`` triples. Keys
are the additive order keys of :mod:`app.algebra.polyring`, so shifting a row by
a monomial shifts every key by one constant and never needs a re-sort.
"""
import heapq
import logging
import time
from dataclasses import dataclass
from fractions import Fraction
from itertools import islice
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from pydantic import BaseModel, Field

from ..errors import ComputationAborted, ExponentOverflowError, ParameterError
from .polyring import GRevLex, Monomial, MonomialOrder, Polynomial, Ring, Variable, elimination_order

logger = logging.getLogger(__name__)

Coeff = Union[int, Fraction]
Term = Tuple[int, Monomial, Coeff]
Row = List[Term]

STRATEGIES = ("normal", "sugar")
PROGRESS_EVERY = 500


class ResourceCaps(BaseModel):
    """Limits that turn a runaway computation into an aborted result"""

    timeout_seconds: Optional[float] = Field(default=3600.0, gt=0)
    max_terms: Optional[int] = Field(default=1_000_000, gt=0)
    max_degree: Optional[int] = Field(default=None, gt=0)


class GBStats(BaseModel):
    pairs_processed: int = 0
    zero_reductions: int = 0
    max_degree: int = 0
    basis_size: int = 0
    pairs_pruned_coprime: int = 0
    pairs_pruned_chain: int = 0
    elapsed_ms: float = 0.0


def _norm(c: Coeff) -> Coeff:
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


def _div(a: Coeff, b: Coeff) -> Coeff:
    if type(a) is int and type(b) is int and a % b == 0:
        return a // b
    return _norm(Fraction(a) / b)


# =============================================================================
# IDEALS AND BASES
# =============================================================================


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced Groebner basis: monic, sorted by descending leading monomial"""

    basis: Tuple[Polynomial, ...]
    order: MonomialOrder
    stats: GBStats

    @property
    def ring(self) -> Ring:
        return self.order.ring

    def __iter__(self):
        return iter(self.basis)

    def is_unit(self) -> bool:
        return len(self.basis) == 1 and self.basis[0].is_constant()

    def leading_monomials(self) -> List[Monomial]:
        return [p.leading_term(self.order)[0] for p in self.basis]

    def reduce(self, p: Polynomial) -> Polynomial:
        return normal_form(self.ring.embed(p), self.basis, self.order)

    def contains(self, p: Polynomial) -> bool:
        return self.reduce(p).is_zero()


class Ideal:
    """Finitely generated ideal with a provenance tag and an optional known basis"""

    def __init__(
        self,
        generators: Iterable[Polynomial],
        ring: Optional[Ring] = None,
        provenance: str = "",
        basis: Optional[GroebnerBasis] = None,
    ):
        generators = list(generators)
        if ring is None:
            if not generators:
                raise ParameterError("an ideal without generators needs an explicit ring")
            ring = generators[0].ring
            for g in generators[1:]:
                ring = ring.union(g.ring)
        self.ring = ring
        self.generators: Tuple[Polynomial, ...] = tuple(
            ring.embed(g) for g in generators if not g.is_zero()
        )
        self.provenance = provenance
        self.basis = basis

    def __add__(self, other: "Ideal") -> "Ideal":
        if not isinstance(other, Ideal):
            return NotImplemented
        ring = self.ring.union(other.ring)
        provenance = "+".join(tag for tag in (self.provenance, other.provenance) if tag)
        return Ideal(self.generators + other.generators, ring, provenance)

    def __iter__(self):
        return iter(self.generators)

    def __repr__(self) -> str:
        return f"Ideal({self.provenance or '?'}: {len(self.generators)} generators, {self.ring.nvars} variables)"

    def with_basis(self, gb: GroebnerBasis) -> "Ideal":
        return Ideal(self.generators, self.ring, self.provenance, gb)

    def in_ring(self, ring: Ring) -> "Ideal":
        """Same generators embedded in a larger ring"""
        return Ideal(self.generators, ring, self.provenance)


# =============================================================================
# ENGINE
# =============================================================================


class _Engine:
    def __init__(self, order: MonomialOrder, caps: Optional[ResourceCaps], strategy: str):
        self.ring = order.ring
        self.order = order
        self.key = order.key
        self.caps = caps or ResourceCaps()
        self.sugar_strategy = strategy == "sugar"
        self.stats = GBStats()
        self.started = time.monotonic()
        timeout = self.caps.timeout_seconds
        self.deadline = self.started + timeout if timeout else None
        self.rows: List[Row] = []
        self.leads: List[Monomial] = []
        self.lead_keys: List[int] = []
        self.sugar: List[int] = []
        self.active: List[int] = []
        self.pairs: List[tuple] = []
        self.total_terms = 0

    # ----- conversions ---------------------------------------------------------

    def to_row(self, p: Polynomial) -> Row:
        key = self.key
        return sorted(((key(m), m, _norm(c)) for m, c in p.terms.items()), reverse=True)

    def to_poly(self, row: Row) -> Polynomial:
        return Polynomial(self.ring, {m: c for _, m, c in row})

    # ----- caps ----------------------------------------------------------------

    def elapsed_ms(self) -> float:
        return round((time.monotonic() - self.started) * 1000.0, 3)

    def abort(self, cap: str, message: str):
        self.stats.basis_size = len(self.active)
        self.stats.elapsed_ms = self.elapsed_ms()
        logger.warning(f"Groebner computation aborted ({cap}): {message}")
        raise ComputationAborted(cap, message, self.stats.model_dump())

    def check_caps(self, pending_terms: int = 0):
        if self.deadline is not None and time.monotonic() > self.deadline:
            self.abort("timeout", f"exceeded {self.caps.timeout_seconds} s")
        max_terms = self.caps.max_terms
        if max_terms and self.total_terms + pending_terms > max_terms:
            self.abort("max_terms", f"more than {max_terms} terms in flight")

    def note_degree(self, degree: int):
        if degree > self.stats.max_degree:
            self.stats.max_degree = degree
            max_degree = self.caps.max_degree
            if max_degree and degree > max_degree:
                self.abort("max_degree", f"intermediate degree {degree} exceeds {max_degree}")

    # ----- reduction -----------------------------------------------------------

    def find_divisor(self, m: Monomial, divisors: Sequence[int]) -> Optional[int]:
        guard = self.ring.guard
        bm = m | guard
        leads = self.leads
        for i in divisors:
            if (bm - leads[i]) & guard == guard:
                return i
        return None

    def reduce(self, terms: Iterable[Term], divisors: Optional[Sequence[int]] = None) -> Row:
        """Full reduction, largest term first; returns the remainder row"""
        divisors = self.active if divisors is None else divisors
        guard = self.ring.guard
        acc: Dict[Monomial, Coeff] = {}
        heap = []
        for k, m, c in terms:
            acc[m] = c
            heap.append((-k, m))
        heapq.heapify(heap)
        remainder: Row = []
        steps = 0
        while heap:
            negk, m = heapq.heappop(heap)
            c = acc.pop(m, 0)
            if not c:
                continue
            d = self.find_divisor(m, divisors)
            if d is None:
                remainder.append((-negk, m, c))
                continue
            row = self.rows[d]
            t = m - self.leads[d]
            shift = -negk - self.lead_keys[d]
            for k2, m2, c2 in islice(row, 1, None):
                nm = m2 + t
                if nm & guard:
                    raise ExponentOverflowError(f"exponent overflow beyond 2^{self.ring.exponent_bits} - 1")
                prev = acc.get(nm)
                if prev is None:
                    acc[nm] = -c * c2
                    heapq.heappush(heap, (-(k2 + shift), nm))
                else:
                    acc[nm] = prev - c * c2
            steps += 1
            if not steps & 255:
                self.check_caps(len(acc) + len(remainder))
        return remainder

    def s_terms(self, i: int, j: int, lcm: Monomial) -> List[Term]:
        guard = self.ring.guard
        lcm_key = self.key(lcm)
        acc: Dict[Monomial, List] = {}
        for index, sign in ((i, 1), (j, -1)):
            t = lcm - self.leads[index]
            shift = lcm_key - self.lead_keys[index]
            for k, m, c in islice(self.rows[index], 1, None):
                nm = m + t
                if nm & guard:
                    raise ExponentOverflowError(f"exponent overflow beyond 2^{self.ring.exponent_bits} - 1")
                entry = acc.get(nm)
                if entry is None:
                    acc[nm] = [k + shift, sign * c]
                else:
                    entry[1] += sign * c
        return [(k, m, c) for m, (k, c) in acc.items() if c]

    # ----- basis maintenance ---------------------------------------------------

    def insert(self, row: Row, sugar: int) -> bool:
        """Add a reduced nonzero row; True when it is a constant"""
        lead = row[0][2]
        if lead != 1:
            row = [(k, m, _div(c, lead)) for k, m, c in row]
        index = len(self.rows)
        self.rows.append(row)
        self.leads.append(row[0][1])
        self.lead_keys.append(row[0][0])
        self.sugar.append(sugar)
        self.total_terms += len(row)
        degree = self.ring.degree
        self.note_degree(max(degree(m) for _, m, _ in row))
        if row[0][1] == 0:
            self.active = [index]
            self.pairs = []
            return True
        self.update(index)
        self.check_caps()
        return False

    def pair_entry(self, i: int, j: int, lcm: Monomial) -> tuple:
        if not self.sugar_strategy:
            return (self.key(lcm), i, j, lcm)
        degree = self.ring.degree
        sugar = max(
            self.sugar[i] + degree(lcm - self.leads[i]),
            self.sugar[j] + degree(lcm - self.leads[j]),
        )
        return (sugar, self.key(lcm), i, j, lcm)

    def update(self, h: int):
        """Gebauer-Moeller installation of basis element h"""
        ring = self.ring
        leads = self.leads
        lh = leads[h]
        candidates = [(j, ring.lcm(lh, leads[j])) for j in self.active]
        kept: List[Tuple[int, Monomial]] = []
        for pos, (j, lcm) in enumerate(candidates):
            if ring.coprime(lh, leads[j]):
                kept.append((j, lcm))
                continue
            if any(ring.divides(other, lcm) for _, other in candidates[pos + 1:]) or any(
                ring.divides(other, lcm) for _, other in kept
            ):
                self.stats.pairs_pruned_chain += 1
                continue
            kept.append((j, lcm))

        fresh = []
        for j, lcm in kept:
            if ring.coprime(lh, leads[j]):
                self.stats.pairs_pruned_coprime += 1
            else:
                fresh.append((j, lcm))

        if self.pairs:
            survivors = []
            for entry in self.pairs:
                i, j, lcm = entry[-3:]
                if (
                    ring.divides(lh, lcm)
                    and ring.lcm(leads[i], lh) != lcm
                    and ring.lcm(lh, leads[j]) != lcm
                ):
                    self.stats.pairs_pruned_chain += 1
                else:
                    survivors.append(entry)
            if len(survivors) != len(self.pairs):
                heapq.heapify(survivors)
                self.pairs = survivors

        self.active = [g for g in self.active if not ring.divides(lh, leads[g])]
        self.active.append(h)
        for j, lcm in fresh:
            heapq.heappush(self.pairs, self.pair_entry(j, h, lcm))

    # ----- driver --------------------------------------------------------------

    def run(self, generators: Sequence[Polynomial]) -> Tuple[Polynomial, ...]:
        rows = [self.to_row(g) for g in generators if not g.is_zero()]
        rows.sort(key=lambda row: row[0][0])
        degree = self.ring.degree
        for row in rows:
            reduced = self.reduce(row)
            if reduced and self.insert(reduced, max(degree(m) for _, m, _ in row)):
                return self.finish()

        while self.pairs:
            entry = heapq.heappop(self.pairs)
            i, j, lcm = entry[-3:]
            self.stats.pairs_processed += 1
            if self.stats.pairs_processed % PROGRESS_EVERY == 0:
                logger.debug(
                    f"{self.stats.pairs_processed} pairs processed, {len(self.pairs)} queued, "
                    f"{len(self.active)} basis elements"
                )
            self.note_degree(degree(lcm))
            self.check_caps()
            reduced = self.reduce(self.s_terms(i, j, lcm))
            if not reduced:
                self.stats.zero_reductions += 1
                continue
            sugar = entry[0] if self.sugar_strategy else degree(lcm)
            if self.insert(reduced, sugar):
                break
        return self.finish()

    def finish(self) -> Tuple[Polynomial, ...]:
        for g in self.active:
            others = [o for o in self.active if o != g]
            self.rows[g] = self.reduce(self.rows[g], others)
        ordered = sorted(self.active, key=lambda g: self.lead_keys[g], reverse=True)
        self.stats.basis_size = len(ordered)
        self.stats.elapsed_ms = self.elapsed_ms()
        return tuple(self.to_poly(self.rows[g]) for g in ordered)


# =============================================================================
# OPERATIONS
# =============================================================================


def _check_strategy(strategy: str) -> str:
    strategy = strategy.lower()
    if strategy not in STRATEGIES:
        raise ParameterError(f"unknown selection strategy {strategy!r}")
    return strategy


def normal_form(p: Polynomial, basis: Sequence[Polynomial], order: MonomialOrder) -> Polynomial:
    """Remainder of p on division by basis, divisors tried in list order"""
    if p.is_zero():
        return p
    ring = order.ring
    engine = _Engine(order, ResourceCaps(timeout_seconds=None, max_terms=None), "normal")
    for g in basis:
        if g.is_zero():
            continue
        row = engine.to_row(ring.embed(g))
        lead = row[0][2]
        engine.rows.append([(k, m, _div(c, lead)) for k, m, c in row])
        engine.leads.append(row[0][1])
        engine.lead_keys.append(row[0][0])
    remainder = engine.reduce(engine.to_row(ring.embed(p)), range(len(engine.rows)))
    return engine.to_poly(remainder)


def s_polynomial(p: Polynomial, q: Polynomial, order: MonomialOrder) -> Polynomial:
    """lcm/lt(p) * p - lcm/lt(q) * q"""
    if p.is_zero() or q.is_zero():
        raise ParameterError("S-polynomials need nonzero operands")
    ring = order.ring
    p, q = ring.embed(p), ring.embed(q)
    mp, cp = p.leading_term(order)
    mq, cq = q.leading_term(order)
    lcm = ring.lcm(mp, mq)
    return Polynomial(ring, {lcm - mp: 1 / cp}) * p - Polynomial(ring, {lcm - mq: 1 / cq}) * q


def buchberger(
    ideal: Ideal,
    order: Optional[MonomialOrder] = None,
    *,
    caps: Optional[ResourceCaps] = None,
    strategy: str = "normal",
) -> GroebnerBasis:
    """Reduced Groebner basis of ideal under order (grevlex by default)"""
    order = order if order is not None else GRevLex(ideal.ring)
    strategy = _check_strategy(strategy)
    if ideal.basis is not None and ideal.basis.order == order:
        return ideal.basis
    generators = [order.ring.embed(g) for g in ideal.generators]
    engine = _Engine(order, caps, strategy)
    basis = engine.run(generators)
    stats = engine.stats
    logger.info(
        f"Groebner basis of {ideal.provenance or 'ideal'} under {order.describe()}: "
        f"{stats.basis_size} elements, {stats.pairs_processed} pairs, "
        f"{stats.zero_reductions} zero reductions, {stats.elapsed_ms} ms"
    )
    return GroebnerBasis(basis, order, stats)


def contains_one(ideal: Ideal, *, caps: Optional[ResourceCaps] = None, strategy: str = "normal") -> bool:
    """True when the ideal is the whole ring"""
    if ideal.basis is not None:
        return ideal.basis.is_unit()
    if any(g.is_constant() for g in ideal.generators):
        return True
    return buchberger(ideal, caps=caps, strategy=strategy).is_unit()


def elimination_ideal(
    ideal: Ideal,
    keep: Iterable[Variable],
    *,
    caps: Optional[ResourceCaps] = None,
    strategy: str = "normal",
) -> Ideal:
    """
    Intersection of ideal with the subring on keep.
    The result lives in that subring and carries its reduced grevlex basis.
    """
    keep = frozenset(keep)
    ring = ideal.ring
    subring = ring.subring(keep)
    order = elimination_order(ring, keep)
    gb = buchberger(ideal, order, caps=caps, strategy=strategy)
    kept = [subring.embed(p) for p in gb.basis if all(not m & order.mask_elim for m in p.terms)]
    provenance = f"elim({ideal.provenance})" if ideal.provenance else "elim"
    logger.info(f"Eliminated {len(order.eliminate)} variables: {len(kept)} of {len(gb.basis)} elements kept")
    sub_basis = GroebnerBasis(tuple(kept), GRevLex(subring), gb.stats)
    return Ideal(kept, subring, provenance, sub_basis)


def ideal_subset(
    a: Ideal,
    b: Ideal,
    *,
    caps: Optional[ResourceCaps] = None,
    strategy: str = "normal",
) -> bool:
    """True when every generator of a reduces to zero modulo a basis of b"""
    gb = b.basis if b.basis is not None else buchberger(b, caps=caps, strategy=strategy)
    if gb.is_unit():
        return True
    for g in a.generators:
        if not gb.contains(g):
            logger.info(f"Generator {g} of {a.provenance or 'ideal'} is not in {b.provenance or 'ideal'}")
            return False
    return True


def ideal_membership(
    p: Polynomial,
    ideal: Ideal,
    order: Optional[MonomialOrder] = None,
    *,
    caps: Optional[ResourceCaps] = None,
) -> bool:
    """True when p lies in ideal"""
    if order is None and ideal.basis is not None:
        return ideal.basis.contains(p)
    return buchberger(ideal, order, caps=caps).contains(p)
