"""Plain-text polynomial syntax.

Terms look like ``3/2*e_1_2^2*z_1_1`` and are joined with ``+``/``-``.
Variables are ``e_i_j``, ``f_i_j``, ``x_i``, ``y_i``, ``z_i_j``, ``xt_p_q_l``
and ``yt_p_q_l``. The printer and the parser accept the same grammar.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from pyparsing import (
    Group,
    Optional as Opt,
    ParseBaseException,
    ParseFatalException,
    Regex,
    StringEnd,
    Suppress,
    ZeroOrMore,
    one_of,
)

from ..errors import ParameterError, PolynomialParseError
from .polyring import GRevLex, MonomialOrder, Polynomial, Ring, Variable

_TermSpec = Tuple[Fraction, Dict[Variable, int]]


@dataclass(frozen=True)
class _Term:
    coefficient: Fraction
    factors: Tuple[Tuple[Variable, int], ...]


def _to_variable(s, loc, toks):
    try:
        return Variable.parse(toks[0])
    except ParameterError as e:
        raise ParseFatalException(s, loc, e.message)


def _to_power(toks):
    return [(toks[0], int(toks[1]) if len(toks) > 1 else 1)]


def _to_term(toks):
    coefficient = Fraction(1)
    factors = []
    for tok in toks:
        if isinstance(tok, Fraction):
            coefficient *= tok
        else:
            factors.append(tuple(tok))
    return _Term(coefficient, tuple(factors))


def _build_grammar():
    variable = Regex(r"(?:xt|yt)_\d+_\d+_\d+|[efz]_\d+_\d+|[xy]_\d+").set_name("variable")
    variable.set_parse_action(_to_variable)
    coefficient = Regex(r"\d+(?:/\d+)?").set_name("coefficient")
    coefficient.set_parse_action(lambda toks: Fraction(toks[0]))
    exponent = Regex(r"\d+").set_name("exponent")
    power = Group(variable + Opt(Suppress("^") + exponent))
    power.set_parse_action(lambda toks: [tuple(_to_power(toks[0])[0])])
    factors = power + ZeroOrMore(Suppress("*") + power)
    term = (coefficient + Opt(Suppress("*") + factors)) | factors
    term.set_parse_action(_to_term)
    sign = one_of("+ -")
    return Opt(sign) + term + ZeroOrMore(sign + term) + StringEnd()


_GRAMMAR = _build_grammar()


def _parse_terms(text: str, line: Optional[int] = None) -> List[_TermSpec]:
    try:
        tokens = _GRAMMAR.parse_string(text.strip(), parse_all=True)
    except ParseBaseException as e:
        raise PolynomialParseError(
            f"cannot parse polynomial {text.strip()!r}: {e.msg}",
            line=line if line is not None else e.lineno,
            column=e.col,
        )
    specs: List[_TermSpec] = []
    negative = False
    for tok in tokens:
        if tok in ("+", "-"):
            negative = tok == "-"
            continue
        exponents: Dict[Variable, int] = {}
        for var, exp in tok.factors:
            exponents[var] = exponents.get(var, 0) + exp
        specs.append((-tok.coefficient if negative else tok.coefficient, exponents))
        negative = False
    return specs


def _build(specs: Sequence[_TermSpec], ring: Ring) -> Polynomial:
    terms: Dict[int, Fraction] = {}
    for coefficient, exponents in specs:
        m = ring.monomial(exponents)
        terms[m] = terms.get(m, Fraction(0)) + coefficient
    return Polynomial(ring, terms)


def _ring_for(specs: Sequence[_TermSpec], exponent_bits: int) -> Ring:
    return Ring({var for _, exponents in specs for var in exponents}, exponent_bits)


def parse_polynomial(text: str, ring: Optional[Ring] = None, exponent_bits: int = 16) -> Polynomial:
    """Parse one polynomial; without a ring, use the ring of its own variables"""
    specs = _parse_terms(text)
    return _build(specs, ring if ring is not None else _ring_for(specs, exponent_bits))


def parse_generators(text: str, ring: Optional[Ring] = None, exponent_bits: int = 16) -> List[Polynomial]:
    """
    Parse one polynomial per line into a common ring.
    Blank lines and '#' comments are skipped.
    """
    parsed: List[List[_TermSpec]] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            parsed.append(_parse_terms(body, line=number))
    if ring is None:
        ring = _ring_for([spec for specs in parsed for spec in specs], exponent_bits)
    return [_build(specs, ring) for specs in parsed]


def format_polynomial(p: Polynomial, order: Optional[MonomialOrder] = None) -> str:
    """Render p with terms in descending order (grevlex unless given)"""
    if p.is_zero():
        return "0"
    order = order if order is not None else GRevLex(p.ring)
    pieces: List[str] = []
    for m, c in p.sorted_terms(order):
        magnitude = abs(c)
        if m == 0:
            body = str(magnitude)
        elif magnitude == 1:
            body = p.ring.format_monomial(m)
        else:
            body = f"{magnitude}*{p.ring.format_monomial(m)}"
        if not pieces:
            pieces.append(f"-{body}" if c < 0 else body)
        else:
            pieces.append(f"- {body}" if c < 0 else f"+ {body}")
    return " ".join(pieces)
