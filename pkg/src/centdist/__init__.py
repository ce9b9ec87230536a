"""Centrality distances between named graphs."""

from .centrality import (
    CentralityKind,
    betweenness_centrality,
    centrality,
    closeness_centrality,
    degree_centrality,
)
from .distance import (
    DistanceMode,
    DistanceResult,
    approx_distance,
    degree_distance,
    exact_distance,
    is_sensitive,
    neighbor_distance,
)
from .graph import (
    EditKind,
    EditOp,
    NamedGraph,
    apply_edit,
    cycle_graph,
    ged,
    line_graph,
    shell_graph,
)

__version__ = "0.1.0"
