"""Answer-set counting by dynamic programming on tree decompositions."""

from ._aspdp import (
    OracleLimitExceeded,
    Program,
    answer_sets,
    decompose,
    edges,
    encode_graph,
    generate_tgrid,
    parse,
    solve,
)

__all__ = [
    "OracleLimitExceeded",
    "Program",
    "answer_sets",
    "count",
    "decompose",
    "edges",
    "encode_graph",
    "generate_tgrid",
    "parse",
    "solve",
]


def count(program, **kwargs):
    """Return (optimum, count) of the optimal answer sets, or None if there are none."""
    r = solve(program, task="count-optimal", **kwargs)
    return (r["optimum"], r["count"]) if r["consistent"] else None
