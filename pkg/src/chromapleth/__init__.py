"""Chromatic and Tutte symmetric functions of vertex-weighted graphs, with plethysm."""

from .alphabet import (
    Alphabet,
    Eps,
    Int,
    Neg,
    One,
    Param,
    PlethExpr,
    Prod,
    SignedVar,
    Sum,
    Var,
    VarSet,
    eps,
    integer,
    parse_expr,
    var_set,
)
from .csf import (
    chromatic_polynomial,
    x_pleth_combinatorial,
    x_via_delcon,
    x_via_stable_partitions,
    x_via_subsets,
    xb_pleth_combinatorial,
    xb_via_delcon,
    xb_via_partitions,
    xb_via_subsets,
)
from .errors import (
    CapacityError,
    CsfError,
    ExprParseError,
    GraphFormatError,
    SymFuncFormatError,
    UnboundedAlphabetError,
    UnknownAlphabetError,
)
from .plethysm import pleth
from .poly import Poly
from .symfunc import Partition, SymFunc, e, h, m, mt, omega, p, parse_symfunc
from .wgraph import WeightedGraph, complete_graph, cycle_graph, edgeless, path_graph

__version__ = "0.1.0"

__all__ = [
    "Alphabet",
    "CapacityError",
    "chromatic_polynomial",
    "complete_graph",
    "CsfError",
    "cycle_graph",
    "e",
    "edgeless",
    "Eps",
    "eps",
    "ExprParseError",
    "GraphFormatError",
    "h",
    "Int",
    "integer",
    "m",
    "mt",
    "Neg",
    "omega",
    "One",
    "p",
    "Param",
    "parse_expr",
    "parse_symfunc",
    "Partition",
    "path_graph",
    "pleth",
    "PlethExpr",
    "Poly",
    "Prod",
    "SignedVar",
    "Sum",
    "SymFunc",
    "SymFuncFormatError",
    "UnboundedAlphabetError",
    "UnknownAlphabetError",
    "Var",
    "var_set",
    "VarSet",
    "WeightedGraph",
    "x_pleth_combinatorial",
    "x_via_delcon",
    "x_via_stable_partitions",
    "x_via_subsets",
    "xb_pleth_combinatorial",
    "xb_via_delcon",
    "xb_via_partitions",
    "xb_via_subsets",
]

