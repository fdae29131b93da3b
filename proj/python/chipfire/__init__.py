"""Chip-firing, reduced divisors and Baker-Norine ranks on metric multigraphs.

The heavy lifting lives in the compiled extension; this wrapper turns its
JSON payloads into plain dicts.
"""

import json as _json

from chipfire._core import (
    FalsificationError,
    Graph,
    GraphError,
    ResourceError,
    bipartite_girth_bound,
    catalog,
    cycle_hit_lower_bound,
    parse_graph,
    rank_oracle,
    reduce,
    rho,
    scan_girth_bound,
)
from chipfire import _core as _impl

__all__ = [
    "FalsificationError",
    "Graph",
    "GraphError",
    "ResourceError",
    "bipartite_girth_bound",
    "catalog",
    "cycle_hit_lower_bound",
    "certify_heawood",
    "parse_graph",
    "rank",
    "rank_oracle",
    "reduce",
    "rho",
    "scan_girth_bound",
]


def rank(graph, divisor, probe_set="auto", probe_cap=2_000_000):
    """Baker-Norine rank of a divisor on a metric graph, with witnesses.

    Returns a dict with keys ``rank``, ``lower_witnesses`` and
    ``upper_witness``.
    """
    return _json.loads(_impl._rank_json(graph, divisor, probe_set, probe_cap))


def certify_heawood(seed=42, trials=1, numerator_bound=10, denominator_bound=6,
                    unit_lengths=True, verify=False):
    """Brill-Noether specialness certificates for metrics on the Heawood graph.

    With ``unit_lengths=False`` each trial draws a random rational metric from
    the seeded generator. Raises ``FalsificationError`` if any trial fails,
    which would contradict the theorem the pipeline verifies.
    """
    return _json.loads(_impl._certify_heawood_json(
        seed, trials, numerator_bound, denominator_bound, unit_lengths, verify))
