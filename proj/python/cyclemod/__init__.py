"""Cycle lengths modulo k in cubic graphs: Python front end for the C++ core."""

import json as _json

from ._cyclemod import (  # noqa: F401
    CyclemodError,
    Graph,
    OverflowError,
    ParseError,
    PreconditionError,
    complete_graph,
    cycle_graph,
    cycle_length_histogram,
    erdos_szekeres,
    has_cycle_mod,
    nonseparating_induced_cycle,
    petersen_graph,
    prism_graph,
    random_cubic_3connected,
    read_graph_file,
    residue_spectrum,
    xy_path_lengths,
)
from . import _cyclemod


def find_pair_diff12(g, x, y):
    """Two x-y paths whose lengths differ by 1 or 2, or None."""
    return _json.loads(_cyclemod._find_pair_diff12(g, x, y))


def shortest_theta(g, u, v):
    return _json.loads(_cyclemod._shortest_theta(g, u, v))


def kgood_search(g, k):
    return _json.loads(_cyclemod._kgood_search(g, k))


def validate_witness(witness, k):
    """witness: dict in the CLI witness schema."""
    return _json.loads(_cyclemod._validate_witness(_json.dumps(witness), k))


def realize_witness(witness, m, k):
    return _json.loads(_cyclemod._realize_witness(_json.dumps(witness), m, k))


def build_counterexample(m, k, min_n):
    return _json.loads(_cyclemod._build_counterexample(m, k, min_n))


def bounds(k):
    return _json.loads(_cyclemod._bounds(k))
