"""Breadth-first search on directed hypergraphs over arbitrary value sets."""

from ._core import (
    Error,
    Hypergraph,
    ValueSet,
    bfs,
    builtin,
    builtin_names,
    load_value_set,
    parse_hypergraph,
    parse_value_set,
    report,
    run_cli,
)

__all__ = [
    "Error",
    "Hypergraph",
    "ValueSet",
    "bfs",
    "builtin",
    "builtin_names",
    "load_value_set",
    "parse_hypergraph",
    "parse_value_set",
    "report",
    "run_cli",
]
