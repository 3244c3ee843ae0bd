"""Exact invariants of edge ideals: v-number, h-polynomial and regularity."""

from .graph import (
    Graph,
    GraphError,
    Graph6Error,
    parse_graph6,
    write_graph6,
)
from .invariants import (
    FVector,
    HilbertSeries,
    deg_h,
    f_vector,
    hilbert_series,
    leading_coefficient,
    series_coefficients,
    v_number,
    v_witness,
)
from .poly import IntPolynomial
from .regularity import GF2, RATIONALS, FieldSpec, ResourceLimitError, regularity, regularity_chordal

__version__ = "0.1.0"

__all__ = [
    "FVector",
    "FieldSpec",
    "GF2",
    "Graph",
    "Graph6Error",
    "GraphError",
    "HilbertSeries",
    "IntPolynomial",
    "RATIONALS",
    "ResourceLimitError",
    "deg_h",
    "f_vector",
    "hilbert_series",
    "leading_coefficient",
    "parse_graph6",
    "regularity",
    "regularity_chordal",
    "series_coefficients",
    "v_number",
    "v_witness",
    "write_graph6",
]
