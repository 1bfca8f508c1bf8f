"""Exact Lie-algebra controllability analysis for spin-1/2 networks.

The package decides whether a network of coupled spin-1/2 particles in a
driving field is operator and/or state controllable, by computing the Lie
algebra generated by its drift and control operators exactly (rational
coefficients over the i-word basis) and by applying graph-based shortcut
criteria that are cross-checked against the closure. A dense numeric
oracle independently reproduces every product, commutator and dimension.
"""

from .classify import (
    AnalysisReport,
    ComponentPrediction,
    ControlSubalgebraCheck,
    StructurePrediction,
    SymplecticWitness,
    analyze,
    component_structure,
    control_subalgebra_check,
    operator_verdict,
    state_verdict,
    symplectic_probe,
)
from .closure import ClosureCapExceeded, ClosureResult, close
from .echelon import (
    EchelonBasis,
    bracket,
    center_dimension,
    centralizer_dimension,
    corner_projector,
    span_equals,
    sparse_rank,
    subspace_bracket_contained,
)
from .graph import (
    DisintegrationResult,
    InteractionGraph,
    connected_components,
    disintegrate,
    is_connected,
)
from .model import (
    CouplingTriple,
    GammaPartition,
    InvalidNetwork,
    SpinNetwork,
    build_controls,
    build_drift,
    build_graph,
    collective_spin,
    gamma_partition,
    spin_network,
    validate,
)
from .oracle import (
    DENSE_SITE_CAP,
    materialize,
    numeric_closure_dim,
    numeric_rank,
    oracle_commutator,
    word_matrix,
)
from .pauli import (
    Element,
    PhaseCoefficient,
    basis_commutator,
    make_word,
    site_product,
    swap_symmetrize,
    word_product,
)

__version__ = "0.1.0"

__all__ = [
    "AnalysisReport",
    "ClosureCapExceeded",
    "ClosureResult",
    "ComponentPrediction",
    "ControlSubalgebraCheck",
    "CouplingTriple",
    "DENSE_SITE_CAP",
    "DisintegrationResult",
    "EchelonBasis",
    "Element",
    "GammaPartition",
    "InteractionGraph",
    "InvalidNetwork",
    "PhaseCoefficient",
    "SpinNetwork",
    "StructurePrediction",
    "SymplecticWitness",
    "analyze",
    "basis_commutator",
    "bracket",
    "build_controls",
    "build_drift",
    "build_graph",
    "center_dimension",
    "centralizer_dimension",
    "close",
    "collective_spin",
    "component_structure",
    "connected_components",
    "control_subalgebra_check",
    "corner_projector",
    "disintegrate",
    "gamma_partition",
    "is_connected",
    "make_word",
    "materialize",
    "numeric_closure_dim",
    "numeric_rank",
    "operator_verdict",
    "oracle_commutator",
    "site_product",
    "span_equals",
    "sparse_rank",
    "spin_network",
    "state_verdict",
    "subspace_bracket_contained",
    "swap_symmetrize",
    "symplectic_probe",
    "validate",
    "word_matrix",
    "word_product",
]
