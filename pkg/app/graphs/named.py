"""Named graphs and the graph input surface shared by every command.

Names: ``K<n>``, ``C<n>``, ``E<n>`` (edgeless), ``H0``..``H6``, ``Hstar``,
``Grotzsch`` and ``M(<name>)`` for the Mycielskian, joined left to right with
``+`` as in ``K1+H0``.
"""
import logging
import os
from functools import lru_cache, reduce
from typing import List, Tuple

from pyparsing import (
    CaselessLiteral,
    Forward,
    ParseBaseException,
    Regex,
    StringEnd,
    Suppress,
    ZeroOrMore,
)

from ..errors import GraphParseError, ParameterError
from .canonical import enumerate_graphs, is_isomorphic
from .coloring import is_k_critical
from .graph import Graph, complete, cycle, empty_graph, join, mycielskian
from .graph6 import edge_list_parse, graph6_parse

logger = logging.getLogger(__name__)

_H0_EDGES = [(1, 2), (1, 3), (1, 4), (2, 5), (2, 6), (3, 5), (3, 7), (4, 6), (4, 7), (5, 6), (5, 7), (6, 7)]

_HSTAR_EDGES = (
    [(1, 2), (1, 3), (1, 7), (2, 4), (2, 8), (3, 4), (3, 6), (4, 5), (5, 6), (5, 7), (6, 8), (7, 8)]
    + [(1, 9), (2, 9), (5, 9), (6, 9), (3, 10), (4, 10), (7, 10), (8, 10), (9, 10)]
    + [(i, 11) for i in range(1, 9)]
)


def h0() -> Graph:
    """The member of the order-7 4-critical family with a vertex (1) in no triangle"""
    return Graph(7, _H0_EDGES)


def h_star() -> Graph:
    """K4-free 5-critical graph of order 11"""
    return Graph(11, _HSTAR_EDGES)


def grotzsch() -> Graph:
    return mycielskian(cycle(5))


@lru_cache(maxsize=1)
def _a4() -> Tuple[Graph, ...]:
    critical = [g for g in enumerate_graphs(7) if is_k_critical(g, 4)]
    reference = h0()
    first = [g for g in critical if is_isomorphic(g, reference)]
    rest = [g for g in critical if not is_isomorphic(g, reference)]
    if len(critical) != 7 or len(first) != 1:
        logger.warning(
            f"Order-7 4-critical family has {len(critical)} classes, {len(first)} isomorphic to H0"
        )
    return tuple(first + rest)


def a4_family() -> List[Graph]:
    """The 4-critical graphs of order 7, the H0 class first, the rest in canonical order"""
    return list(_a4())


def _a4_member(index: int) -> Graph:
    family = _a4()
    if index >= len(family):
        raise ParameterError(f"H{index} does not exist: the family has {len(family)} members")
    return family[index]


def h1() -> Graph:
    return _a4_member(1)


def h2() -> Graph:
    return _a4_member(2)


def h3() -> Graph:
    return _a4_member(3)


def h4() -> Graph:
    return _a4_member(4)


def h5() -> Graph:
    return _a4_member(5)


def h6() -> Graph:
    return _a4_member(6)


_H_BY_INDEX = {0: h0, 1: h1, 2: h2, 3: h3, 4: h4, 5: h5, 6: h6}


# =============================================================================
# NAMED-GRAPH LANGUAGE
# =============================================================================


def _build_grammar():
    expr = Forward()
    sized = Regex(r"([KCE])(\d+)")
    sized.set_parse_action(lambda toks: _sized(toks[0]))
    hstar = CaselessLiteral("Hstar").set_parse_action(lambda: h_star())
    indexed = Regex(r"H([0-6])")
    indexed.set_parse_action(lambda toks: _H_BY_INDEX[int(toks[0][1])]())
    grotz = (CaselessLiteral("Grotzsch") | CaselessLiteral("Grötzsch")).set_parse_action(lambda: grotzsch())
    myc = Suppress("M(") + expr + Suppress(")")
    myc.set_parse_action(lambda toks: mycielskian(toks[0]))
    atom = myc | hstar | indexed | grotz | sized
    joined = atom + ZeroOrMore(Suppress("+") + atom)
    joined.set_parse_action(lambda toks: reduce(join, toks))
    expr <<= joined
    return expr + StringEnd()


def _sized(token: str) -> Graph:
    kind, n = token[0], int(token[1:])
    if kind == "K":
        return complete(n)
    if kind == "E":
        return empty_graph(n)
    return cycle(n)


_NAMED = _build_grammar()


def parse_named(text: str) -> Graph:
    try:
        return _NAMED.parse_string(text.strip(), parse_all=True)[0]
    except ParseBaseException as e:
        raise GraphParseError(f"unknown graph name {text.strip()!r}: {e.msg}", offset=e.loc)
    except ParameterError as e:
        raise GraphParseError(f"invalid graph name {text.strip()!r}: {e.message}")


def parse_graph_text(text: str) -> Graph:
    """Edge list, named expression or graph6, tried in that order"""
    text = text.strip()
    if ";" in text or text.isdigit():
        return edge_list_parse(text)
    try:
        return parse_named(text)
    except GraphParseError as named_error:
        try:
            return graph6_parse(text)
        except GraphParseError:
            raise named_error


def load_graph(spec: str) -> Graph:
    """Accept a graph name, graph6 string, edge list, or a file holding one of them"""
    if os.path.isfile(spec):
        with open(spec, encoding="utf-8") as handle:
            lines = [line.strip() for line in handle if line.strip() and not line.startswith("#")]
        if not lines:
            raise GraphParseError(f"graph file {spec} is empty", offset=0)
        text = lines[0]
        if lines[0].isdigit():
            # one edge per line after the vertex count
            text = "; ".join(line.rstrip(";") for line in lines)
        logger.debug(f"Loaded graph text from {spec}")
        return parse_graph_text(text)
    return parse_graph_text(spec)
