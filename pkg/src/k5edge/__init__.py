"""Edge coloring, discharging and K5-minor tools."""

__version__ = "0.1.0"

from .graph import Graph, GraphError, build_graph  # noqa: F401
