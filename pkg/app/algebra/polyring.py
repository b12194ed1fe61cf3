"""Exact sparse polynomials over Q on the tagged variable universe.

A monomial is a packed integer with one field of ``exponent_bits + 1`` bits per
ring variable. Variable 0 sits in the least significant field and the top bit of
every field is a guard bit that stays clear in a valid monomial. Multiplying
monomials is integer addition, so a set guard bit after an addition means an
exponent overflowed.

Every monomial order is realised as an additive integer key:
``key(a * b) == key(a) + key(b)``. Comparing keys compares monomials, and
multiplying a polynomial by a monomial shifts all of its keys by one constant.
"""
import enum
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from types import MappingProxyType
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from ..errors import ExponentOverflowError, ParameterError
from ..models import RingKind

logger = logging.getLogger(__name__)

Monomial = int
Coefficient = Union[int, Fraction]


class VarTag(enum.IntEnum):
    """Variable families, in enumeration order"""
    E = 0
    F = 1
    X = 2
    Y = 3
    Z = 4
    XT = 5
    YT = 6


_PREFIX = {
    VarTag.E: "e",
    VarTag.F: "f",
    VarTag.X: "x",
    VarTag.Y: "y",
    VarTag.Z: "z",
    VarTag.XT: "xt",
    VarTag.YT: "yt",
}
_TAG_BY_PREFIX = {prefix: tag for tag, prefix in _PREFIX.items()}
_ARITY = {
    VarTag.E: 2,
    VarTag.F: 2,
    VarTag.X: 1,
    VarTag.Y: 1,
    VarTag.Z: 2,
    VarTag.XT: 3,
    VarTag.YT: 3,
}


@dataclass(frozen=True, order=True)
class Variable:
    """A ring variable such as e_1_2 or xt_1_2_3"""

    tag: VarTag
    indices: Tuple[int, ...]

    def __post_init__(self):
        if len(self.indices) != _ARITY[self.tag]:
            raise ParameterError(f"{_PREFIX[self.tag]} takes {_ARITY[self.tag]} indices, got {self.indices}")
        if any(i < 1 for i in self.indices):
            raise ParameterError(f"variable indices must be positive: {self.indices}")
        if self.tag in (VarTag.E, VarTag.F, VarTag.XT, VarTag.YT) and not self.indices[0] < self.indices[1]:
            raise ParameterError(f"{_PREFIX[self.tag]} requires its first index below its second: {self.indices}")

    @property
    def name(self) -> str:
        return "_".join([_PREFIX[self.tag], *(str(i) for i in self.indices)])

    def __str__(self) -> str:
        return self.name

    @classmethod
    def parse(cls, name: str) -> "Variable":
        """Parse a variable name like 'z_2_3'"""
        prefix, _, rest = name.partition("_")
        tag = _TAG_BY_PREFIX.get(prefix)
        if tag is None or not rest:
            raise ParameterError(f"unknown variable {name!r}")
        try:
            indices = tuple(int(part) for part in rest.split("_"))
        except ValueError:
            raise ParameterError(f"bad indices in variable {name!r}")
        return cls(tag, indices)

    # Shorthand constructors used throughout the encoders
    @classmethod
    def e(cls, i: int, j: int) -> "Variable":
        return cls(VarTag.E, (i, j))

    @classmethod
    def f(cls, i: int, j: int) -> "Variable":
        return cls(VarTag.F, (i, j))

    @classmethod
    def x(cls, i: int) -> "Variable":
        return cls(VarTag.X, (i,))

    @classmethod
    def y(cls, i: int) -> "Variable":
        return cls(VarTag.Y, (i,))

    @classmethod
    def z(cls, i: int, j: int) -> "Variable":
        return cls(VarTag.Z, (i, j))

    @classmethod
    def xt(cls, p: int, q: int, l: int) -> "Variable":
        return cls(VarTag.XT, (p, q, l))

    @classmethod
    def yt(cls, p: int, q: int, l: int) -> "Variable":
        return cls(VarTag.YT, (p, q, l))


def var_universe(kind: RingKind, k: int, n: int, nprime: int) -> List[Variable]:
    """Variables of the W-, V- or fixed-graph ring, in enumeration order"""
    if k < 2 or n < 1 or nprime < 1:
        raise ParameterError(f"need k >= 2, n >= 1, n' >= 1; got k={k}, n={n}, n'={nprime}")
    kind = RingKind(kind)
    variables = [Variable.e(i, j) for i, j in combinations(range(1, n + 1), 2)]
    variables += [Variable.f(i, j) for i, j in combinations(range(1, nprime + 1), 2)]
    if kind == RingKind.W:
        variables += [Variable.x(i) for i in range(1, n + 1)]
        variables += [Variable.y(i) for i in range(1, nprime + 1)]
    variables += [Variable.z(i, j) for i in range(1, n + 1) for j in range(1, nprime + 1)]
    if kind == RingKind.V:
        variables += [
            Variable.xt(p, q, l)
            for p, q in combinations(range(1, n + 1), 2)
            for l in range(1, n + 1)
        ]
        variables += [
            Variable.yt(p, q, l)
            for p, q in combinations(range(1, nprime + 1), 2)
            for l in range(1, nprime + 1)
        ]
    return variables


class Ring:
    """Polynomial ring over Q on an ordered set of variables"""

    def __init__(self, variables: Iterable[Variable], exponent_bits: int = 16):
        self.variables: Tuple[Variable, ...] = tuple(sorted(set(variables)))
        self.exponent_bits = exponent_bits
        self.width = exponent_bits + 1
        self.nvars = len(self.variables)
        self.total_bits = self.nvars * self.width
        self._index: Dict[Variable, int] = {v: i for i, v in enumerate(self.variables)}
        self.field_mask = (1 << exponent_bits) - 1
        self.ones = sum(1 << (i * self.width) for i in range(self.nvars))
        self.guard = self.ones << exponent_bits
        self._degree_mask = (1 << self.width) - 1
        self._hash = hash((self.variables, exponent_bits))

    @classmethod
    def from_variables(cls, variables: Iterable[Variable], exponent_bits: int = 16) -> "Ring":
        return cls(variables, exponent_bits)

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        if not isinstance(other, Ring):
            return NotImplemented
        return self.exponent_bits == other.exponent_bits and self.variables == other.variables

    def __hash__(self) -> int:
        return self._hash

    def __contains__(self, var: Variable) -> bool:
        return var in self._index

    def __repr__(self) -> str:
        return f"Ring({self.nvars} variables)"

    def index(self, var: Variable) -> int:
        try:
            return self._index[var]
        except KeyError:
            raise ParameterError(f"variable {var} is not in this ring")

    def union(self, other: "Ring") -> "Ring":
        if other == self:
            return self
        if other.exponent_bits != self.exponent_bits:
            raise ParameterError("cannot merge rings with different exponent caps")
        return Ring(set(self.variables) | set(other.variables), self.exponent_bits)

    def subring(self, keep: Iterable[Variable]) -> "Ring":
        keep = set(keep)
        missing = keep.difference(self.variables)
        if missing:
            raise ParameterError(f"variables not in ring: {sorted(str(v) for v in missing)}")
        return Ring(keep, self.exponent_bits)

    # ----- monomials -----------------------------------------------------------

    def monomial(self, exponents: Mapping[Variable, int]) -> Monomial:
        m = 0
        for var, exp in exponents.items():
            if exp < 0:
                raise ParameterError(f"negative exponent for {var}")
            if exp > self.field_mask:
                raise ExponentOverflowError(f"exponent {exp} of {var} exceeds 2^{self.exponent_bits} - 1")
            m += exp << (self.index(var) * self.width)
        return m

    def exponents(self, m: Monomial) -> Dict[Variable, int]:
        result = {}
        i = 0
        while m:
            exp = m & self.field_mask
            if exp:
                result[self.variables[i]] = exp
            m >>= self.width
            i += 1
        return result

    def exponent_vector(self, m: Monomial) -> Tuple[int, ...]:
        return tuple((m >> (i * self.width)) & self.field_mask for i in range(self.nvars))

    def mul(self, a: Monomial, b: Monomial) -> Monomial:
        c = a + b
        if c & self.guard:
            raise ExponentOverflowError(f"exponent overflow beyond 2^{self.exponent_bits} - 1")
        return c

    def divides(self, a: Monomial, b: Monomial) -> bool:
        """True when a divides b"""
        return ((b | self.guard) - a) & self.guard == self.guard

    def lcm(self, a: Monomial, b: Monomial) -> Monomial:
        wider = (((a | self.guard) - b) & self.guard) >> self.exponent_bits
        mask = wider * self.field_mask
        return (a & mask) | (b & ~mask)

    def gcd(self, a: Monomial, b: Monomial) -> Monomial:
        wider = (((a | self.guard) - b) & self.guard) >> self.exponent_bits
        mask = wider * self.field_mask
        return (b & mask) | (a & ~mask)

    def support(self, m: Monomial) -> int:
        """Guard-bit pattern of the variables occurring in m"""
        return ((m | self.guard) - self.ones) & self.guard

    def coprime(self, a: Monomial, b: Monomial) -> bool:
        return not (self.support(a) & self.support(b))

    def degree(self, m: Monomial) -> int:
        # total degree must stay below 2^(exponent_bits + 1)
        if not m:
            return 0
        return ((m * self.ones) >> ((self.nvars - 1) * self.width)) & self._degree_mask

    def mask_of(self, variables: Iterable[Variable]) -> int:
        mask = 0
        for var in variables:
            mask |= self.field_mask << (self.index(var) * self.width)
        return mask

    def format_monomial(self, m: Monomial) -> str:
        parts = []
        for var, exp in self.exponents(m).items():
            parts.append(var.name if exp == 1 else f"{var.name}^{exp}")
        return "*".join(parts) if parts else "1"

    # ----- polynomials ---------------------------------------------------------

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return Polynomial(self, {0: 1})

    def const(self, c: Coefficient) -> "Polynomial":
        return Polynomial(self, {0: c})

    def var(self, var: Union[Variable, str]) -> "Polynomial":
        if isinstance(var, str):
            var = Variable.parse(var)
        return Polynomial(self, {1 << (self.index(var) * self.width): 1})

    def embed(self, p: "Polynomial") -> "Polynomial":
        """Map p into this ring by variable identity"""
        if p.ring == self:
            return p if p.ring is self else Polynomial(self, p.terms)
        return Polynomial(
            self,
            {self.monomial(p.ring.exponents(m)): c for m, c in p.terms.items()},
        )


@lru_cache(maxsize=64)
def make_ring(kind: RingKind, k: int, n: int, nprime: int, exponent_bits: int = 16) -> Ring:
    """Cached ring over var_universe(kind, k, n, n')"""
    ring = Ring(var_universe(kind, k, n, nprime), exponent_bits)
    logger.debug(f"Built {RingKind(kind).value}-ring for k={k}, n={n}, n'={nprime}: {ring.nvars} variables")
    return ring


# =============================================================================
# MONOMIAL ORDERS
# =============================================================================


class MonomialOrder:
    """A monomial order bound to a ring, exposed as an additive integer key"""

    kind = "abstract"

    def __init__(self, ring: Ring):
        self.ring = ring

    def key(self, m: Monomial) -> int:
        raise NotImplementedError

    def compare(self, a: Monomial, b: Monomial) -> int:
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    def describe(self) -> str:
        return self.kind

    def _identity(self) -> tuple:
        return (self.kind, self.ring)

    def __eq__(self, other) -> bool:
        return isinstance(other, MonomialOrder) and self._identity() == other._identity()

    def __hash__(self) -> int:
        return hash(self._identity())

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.describe()})"


class Lex(MonomialOrder):
    """Lexicographic order, earlier variables larger"""

    kind = "lex"

    def key(self, m: Monomial) -> int:
        key = 0
        for exp in self.ring.exponent_vector(m):
            key = (key << self.ring.width) | exp
        return key


class GRevLex(MonomialOrder):
    """Graded reverse lexicographic order, earlier variables larger"""

    kind = "grevlex"

    def key(self, m: Monomial) -> int:
        return (self.ring.degree(m) << self.ring.total_bits) - m


class BlockElim(MonomialOrder):
    """Two-block elimination order.

    Monomials are compared first by grevlex on the eliminated block and then
    by grevlex on the kept block, so anything touching an eliminated variable
    exceeds every monomial in the kept variables alone.
    """

    kind = "elim"

    def __init__(self, ring: Ring, eliminate: Iterable[Variable]):
        super().__init__(ring)
        self.eliminate: FrozenSet[Variable] = frozenset(eliminate)
        for var in self.eliminate:
            ring.index(var)
        self.keep: FrozenSet[Variable] = frozenset(ring.variables) - self.eliminate
        self.mask_elim = ring.mask_of(self.eliminate)
        self.mask_keep = ring.mask_of(self.keep)
        self._shift_keep_deg = ring.total_bits
        self._shift_elim = ring.total_bits + ring.width + 2
        self._shift_elim_deg = self._shift_elim + ring.total_bits + 1

    def key(self, m: Monomial) -> int:
        ring = self.ring
        m_elim = m & self.mask_elim
        m_keep = m & self.mask_keep
        return (
            (ring.degree(m_elim) << self._shift_elim_deg)
            - (m_elim << self._shift_elim)
            + (ring.degree(m_keep) << self._shift_keep_deg)
            - m_keep
        )

    def describe(self) -> str:
        return "elim(" + ",".join(v.name for v in sorted(self.eliminate)) + ")"

    def _identity(self) -> tuple:
        return (self.kind, self.ring, self.eliminate)


def elimination_order(ring: Ring, keep: Iterable[Variable]) -> BlockElim:
    """Block order eliminating every ring variable outside keep"""
    keep = set(keep)
    return BlockElim(ring, [v for v in ring.variables if v not in keep])


def order_from_name(ring: Ring, name: str, keep: Optional[Iterable[Variable]] = None) -> MonomialOrder:
    """Resolve 'lex', 'grevlex' or 'elim' to an order on ring"""
    name = name.lower()
    if name == "lex":
        return Lex(ring)
    if name == "grevlex":
        return GRevLex(ring)
    if name == "elim":
        if keep is None:
            raise ParameterError("an elimination order needs the set of kept variables")
        return elimination_order(ring, keep)
    raise ParameterError(f"unknown monomial order {name!r}")


def compare(a: Monomial, b: Monomial, order: MonomialOrder) -> int:
    """-1, 0 or 1 as a is below, equal to or above b"""
    return order.compare(a, b)


# =============================================================================
# POLYNOMIALS
# =============================================================================


def _normalize(c: Coefficient) -> Fraction:
    return c if isinstance(c, Fraction) else Fraction(c)


class Polynomial:
    """Immutable sparse polynomial: packed monomial -> nonzero rational"""

    __slots__ = ("ring", "_terms", "_hash")

    def __init__(self, ring: Ring, terms: Mapping[Monomial, Coefficient]):
        self.ring = ring
        self._terms: Dict[Monomial, Fraction] = {m: _normalize(c) for m, c in terms.items() if c}
        self._hash: Optional[int] = None

    @property
    def terms(self) -> Mapping[Monomial, Fraction]:
        return MappingProxyType(self._terms)

    # ----- arithmetic ----------------------------------------------------------

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise ParameterError("polynomials live in different rings; embed one first")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ring.const(other)
        return NotImplemented

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self._terms)
        for m, c in other._terms.items():
            terms[m] = terms.get(m, 0) + c
        return Polynomial(self.ring, terms)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.ring, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "Polynomial":
        return (-self) + other

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return Polynomial(self.ring, {m: c * other for m, c in self._terms.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        mul = self.ring.mul
        terms: Dict[Monomial, Coefficient] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = mul(m1, m2)
                terms[m] = terms.get(m, 0) + c1 * c2
        return Polynomial(self.ring, terms)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Polynomial":
        if not isinstance(exponent, int) or exponent < 0:
            raise ParameterError("polynomial powers need a non-negative integer exponent")
        result = self.ring.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = self.ring.const(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    # ----- inspection ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(m == 0 for m in self._terms)

    def constant_value(self) -> Fraction:
        return self._terms.get(0, Fraction(0))

    def total_degree(self) -> int:
        return max((self.ring.degree(m) for m in self._terms), default=0)

    def variables(self) -> FrozenSet[Variable]:
        support = 0
        for m in self._terms:
            support |= m
        return frozenset(self.ring.exponents(support))

    def sorted_terms(self, order: MonomialOrder) -> List[Tuple[Monomial, Fraction]]:
        """Terms in descending order"""
        key = order.key
        return sorted(self._terms.items(), key=lambda item: key(item[0]), reverse=True)

    def leading_term(self, order: MonomialOrder) -> Optional[Tuple[Monomial, Fraction]]:
        if not self._terms:
            return None
        key = order.key
        return max(self._terms.items(), key=lambda item: key(item[0]))

    def monic(self, order: MonomialOrder) -> "Polynomial":
        lead = self.leading_term(order)
        if lead is None or lead[1] == 1:
            return self
        return self * (1 / lead[1])

    def substitute(self, values: Mapping[Variable, Union["Polynomial", Coefficient]]) -> "Polynomial":
        """Replace variables by polynomials or numbers of the same ring"""
        replacements = {
            self.ring.index(var): value if isinstance(value, Polynomial) else self.ring.const(value)
            for var, value in values.items()
        }
        ring = self.ring
        result = ring.zero()
        for m, c in self._terms.items():
            kept = 0
            term = ring.const(c)
            for i, exp in enumerate(ring.exponent_vector(m)):
                if not exp:
                    continue
                if i in replacements:
                    term = term * replacements[i] ** exp
                else:
                    kept += exp << (i * ring.width)
            result = result + term * Polynomial(ring, {kept: 1})
        return result

    def evaluate(self, values: Mapping[Variable, Coefficient]) -> Fraction:
        """Exact value with every occurring variable bound"""
        unbound = self.variables().difference(values)
        if unbound:
            raise ParameterError(f"unbound variables: {sorted(str(v) for v in unbound)}")
        total = Fraction(0)
        for m, c in self._terms.items():
            value = c
            for var, exp in self.ring.exponents(m).items():
                value *= Fraction(values[var]) ** exp
            total += value
        return total

    def __str__(self) -> str:
        from .polytext import format_polynomial

        return format_polynomial(self)

    def __repr__(self) -> str:
        return f"Polynomial({str(self)!r})"


def add(p: Polynomial, q: Polynomial) -> Polynomial:
    return p + q


def mul(p: Polynomial, q: Polynomial) -> Polynomial:
    return p * q


def leading_term(p: Polynomial, order: MonomialOrder) -> Optional[Tuple[Monomial, Fraction]]:
    """(monomial, coefficient) maximal under order; None for the zero polynomial"""
    return p.leading_term(order)


def product(factors: Sequence[Polynomial], ring: Ring) -> Polynomial:
    """Product of factors; the empty product is 1"""
    result = ring.one()
    for factor in factors:
        result = result * factor
    return result
