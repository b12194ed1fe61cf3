from . import encode, gb, graph, pair, schema, suite, thm44, verify

COMMANDS = [thm44, pair, suite, verify, encode, graph, gb, schema]
