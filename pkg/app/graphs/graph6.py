"""graph6 (short form) and the ``n; i j; i j`` edge-list format."""
from typing import List

from pyparsing import (
    Group,
    ParseBaseException,
    Suppress,
    Word,
    ZeroOrMore,
    Optional as Opt,
    StringEnd,
    nums,
)

from ..errors import GraphParseError, ParameterError
from .graph import Graph

HEADER = ">>graph6<<"
MAX_SHORT_ORDER = 62


def _upper_triangle(n: int):
    """(i, j) pairs in column-major upper-triangle order, 1-based"""
    for j in range(2, n + 1):
        for i in range(1, j):
            yield i, j


def graph6_emit(g: Graph) -> str:
    if g.n > MAX_SHORT_ORDER:
        raise ParameterError(f"graph6 short form holds at most {MAX_SHORT_ORDER} vertices, got {g.n}")
    bits = [g.adjacency(i, j) for i, j in _upper_triangle(g.n)]
    bits += [0] * (-len(bits) % 6)
    out = [chr(g.n + 63)]
    for start in range(0, len(bits), 6):
        value = 0
        for bit in bits[start:start + 6]:
            value = (value << 1) | bit
        out.append(chr(value + 63))
    return "".join(out)


def graph6_parse(text: str) -> Graph:
    text = text.strip()
    base = 0
    if text.startswith(HEADER):
        base = len(HEADER)
        text = text[base:]
    if not text:
        raise GraphParseError("empty graph6 string", offset=base)
    first = ord(text[0]) - 63
    if first == 63:
        raise GraphParseError("long-form graph6 (n > 62) is not supported", offset=base)
    if not 0 <= first <= MAX_SHORT_ORDER:
        raise GraphParseError(f"invalid graph6 header byte {text[0]!r}", offset=base)
    n = first
    pairs = list(_upper_triangle(n))
    expected = (len(pairs) + 5) // 6
    body = text[1:]
    if len(body) != expected:
        offset = base + 1 + min(len(body), expected)
        raise GraphParseError(
            f"graph6 for n={n} needs {expected} data bytes, found {len(body)}", offset=offset
        )
    bits: List[int] = []
    for pos, ch in enumerate(body, start=1):
        value = ord(ch) - 63
        if not 0 <= value < 64:
            raise GraphParseError(f"invalid graph6 data byte {ch!r}", offset=base + pos)
        bits.extend((value >> shift) & 1 for shift in range(5, -1, -1))
    if any(bits[len(pairs):]):
        raise GraphParseError("nonzero padding bits in graph6 data", offset=base + len(body))
    return Graph(n, [pair for pair, bit in zip(pairs, bits) if bit])


# =============================================================================
# EDGE LISTS
# =============================================================================

_INTEGER = Word(nums).set_parse_action(lambda toks: int(toks[0]))
_EDGE_LIST = (
    _INTEGER("n")
    + Group(ZeroOrMore(Suppress(";") + Group(_INTEGER + _INTEGER)))("edges")
    + Opt(Suppress(";"))
    + StringEnd()
)


def edge_list_emit(g: Graph) -> str:
    return "; ".join([str(g.n)] + [f"{i} {j}" for i, j in g.edges()])


def edge_list_parse(text: str) -> Graph:
    try:
        parsed = _EDGE_LIST.parse_string(text, parse_all=True)
    except ParseBaseException as e:
        raise GraphParseError(f"malformed edge list: {e.msg}", offset=e.loc)
    try:
        return Graph(parsed["n"], [tuple(edge) for edge in parsed["edges"]])
    except ParameterError as e:
        raise GraphParseError(f"invalid edge list: {e.message}")
