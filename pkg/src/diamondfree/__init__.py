"""Degree sequences of diamond-free graphs, design hill climbs, verification.

Public surface: the Graph and DegreeSequence types, the arithmetic
candidate enumerator, graphicality tests, the diamond-free realization
search, the staged pipeline and single-stage cross-check model, the
Stinson-style design climbs with structure classification, and the
independent witness verifier.
"""

from .errors import Inconclusive
from .graphs import (
    DegreeSequence,
    Graph,
    GraphFormatError,
    complement,
    degrees,
    edges_among,
    is_diamond_free,
)
from .graphical import is_graphical_eg, is_graphical_hh, realize_any
from .sequences import (
    ArithmeticConstraints,
    enumerate_arithmetic,
    iter_arithmetic,
    satisfies_arithmetic,
)
from .search import (
    SearchConfig,
    SearchStats,
    count_realizations,
    find_diamond_free_realization,
)
from .pipeline import SequenceResult, realizable_sequences, solve_sequences
from .modela import solve_model_a
from .designs import (
    Design,
    RngSpec,
    StructureReport,
    classify_structure,
    complement_degree_sequence,
    stinson_four,
    stinson_sts,
    uncovered_pairs_graph,
)
from .verify import VerificationReport, WitnessFormatError, verify_witness

__version__ = "0.1.0"

__all__ = [
    "ArithmeticConstraints",
    "DegreeSequence",
    "Design",
    "Graph",
    "GraphFormatError",
    "Inconclusive",
    "RngSpec",
    "SearchConfig",
    "SearchStats",
    "SequenceResult",
    "StructureReport",
    "VerificationReport",
    "WitnessFormatError",
    "classify_structure",
    "complement",
    "complement_degree_sequence",
    "count_realizations",
    "degrees",
    "edges_among",
    "enumerate_arithmetic",
    "find_diamond_free_realization",
    "is_diamond_free",
    "is_graphical_eg",
    "is_graphical_hh",
    "iter_arithmetic",
    "realizable_sequences",
    "realize_any",
    "satisfies_arithmetic",
    "solve_model_a",
    "solve_sequences",
    "stinson_four",
    "stinson_sts",
    "uncovered_pairs_graph",
    "verify_witness",
]
