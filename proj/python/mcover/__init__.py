"""Optimal matching covers of simple graphs."""

from ._mcover import (
    BudgetExceeded,
    Graph,
    InvariantError,
    NoCoverError,
    ParseError,
    brute_mc,
    brute_nu,
    decompose,
    maximum_matching,
    parse_graph,
    random_connected_gnm,
    random_connected_gnp,
    solve,
    verify_cover,
)

__all__ = [
    "BudgetExceeded",
    "Graph",
    "InvariantError",
    "NoCoverError",
    "ParseError",
    "brute_mc",
    "brute_nu",
    "decompose",
    "maximum_matching",
    "parse_graph",
    "random_connected_gnm",
    "random_connected_gnp",
    "solve",
    "verify_cover",
]
