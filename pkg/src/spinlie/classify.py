"""Controllability verdicts and structural decompositions.

The decisive machinery is exact: the closure dimension decides operator
controllability, and the corner-projector rank test decides state
controllability. Graph shortcuts (distinct-ratio connectivity, coupling
signature refinement) produce the same verdicts without a closure when
their hypotheses hold; whenever both a shortcut and the closure ran, they
are compared and any disagreement is surfaced as an internal-consistency
failure rather than resolved silently.

Every verdict carries a provenance tag naming the test that produced it.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Optional

import numpy as np

from .closure import ClosureCapExceeded, ClosureResult, close
from .echelon import (
    EchelonBasis,
    center_dimension,
    centralizer_dimension,
    corner_projector,
    span_equals,
)
from .graph import connected_components, disintegrate
from .model import (
    SpinNetwork,
    build_controls,
    build_drift,
    build_graph,
    collective_spin,
    gamma_partition,
    validate,
)
from .oracle import DENSE_SITE_CAP, materialize
from .pauli import AXES

TAG_CONNECTIVITY = "distinct-ratio-connectivity"
TAG_REFINEMENT = "signature-refinement"
TAG_STRUCTURE = "component-structure"
TAG_OP_IMPLIES_STATE = "operator-implies-state"
TAG_CLOSURE = "closure-dimension"
TAG_RANK = "centralizer-rank"
TAG_SKIPPED = "closure-skipped"

# center detection is quadratic in the closure dimension; skip it for spans
# larger than su(8)
_CENTER_DIM_LIMIT = 63


def operator_verdict(result: ClosureResult, n: int) -> tuple[bool, str]:
    """Operator controllability from the closure dimension.

    The generators are traceless, so the closure sits inside su(2^n) and
    reaching dimension ``4**n - 1`` is both necessary and sufficient.
    """
    return result.dimension == 4**n - 1, TAG_CLOSURE


def state_verdict(basis: EchelonBasis, n: int) -> tuple[bool, str]:
    """State controllability by the exact centralizer rank test.

    The span moves the state to every point of the sphere exactly when its
    dimension exceeds that of its corner-projector centralizer by
    ``2N - 2`` with ``N = 2**n``.
    """
    gap = basis.dimension - centralizer_dimension(basis, corner_projector(n))
    return gap == 2 * 2**n - 2, TAG_RANK


@dataclass(frozen=True)
class ComponentPrediction:
    sites: tuple[int, ...]
    dimension: int


@dataclass(frozen=True)
class StructurePrediction:
    """Predicted block structure: one full su(2^m) factor per component."""

    components: tuple[ComponentPrediction, ...]
    total_dimension: int

    def to_dict(self) -> dict:
        return {
            "components": [
                {"sites": list(p.sites), "dimension": p.dimension}
                for p in self.components
            ],
            "total_dimension": self.total_dimension,
        }


def _predict_from_components(net: SpinNetwork) -> StructurePrediction:
    comps = connected_components(build_graph(net))
    preds = tuple(
        ComponentPrediction(tuple(c), 4 ** len(c) - 1) for c in comps
    )
    return StructurePrediction(preds, sum(p.dimension for p in preds))


def component_structure(net: SpinNetwork) -> Optional[StructurePrediction]:
    """Per-component dimension prediction for distinct-ratio networks.

    Each graph component contributes the full algebra on its own sites and
    the blocks commute, so the dimensions add. Returns ``None`` when at
    least two ratios coincide (the prediction is then unfounded).
    """
    if gamma_partition(net).block_count != net.n:
        return None
    return _predict_from_components(net)


@dataclass
class ControlSubalgebraCheck:
    dimension: int
    expected_dimension: int
    passed: bool


def control_subalgebra_check(net: SpinNetwork) -> ControlSubalgebraCheck:
    """Close the control operators alone and test the expected picture.

    Expected: one three-dimensional block per distinct ratio, spanned by
    the collective spin components of the equal-ratio blocks (dimension
    ``3r``). With only two control axes the bracket of the two controls
    recovers the third axis, so the expectation is unchanged as long as
    the absolute ratios stay pairwise distinct (and nonzero).
    """
    net = validate(net)
    part = gamma_partition(net)
    expected = 3 * part.block_count
    controls = build_controls(net)
    gens = [controls[a] for a in net.control_axes if controls[a]]
    if not gens:
        return ControlSubalgebraCheck(0, expected, False)
    result = close(gens, net.n)
    target = EchelonBasis(net.n)
    for j in range(part.block_count):
        for axis in AXES:
            target.insert(collective_spin(net, j, axis))
    ok = result.dimension == expected and span_equals(result.basis, target)
    return ControlSubalgebraCheck(result.dimension, expected, ok)


@dataclass
class SymplecticWitness:
    """An invariant antisymmetric nondegenerate form, with diagnostics."""

    form: np.ndarray
    solution_dimension: int
    conditioning: float  # smallest over largest singular value of the form
    max_residual: float

    def summary(self) -> dict:
        return {
            "found": True,
            "solution_dimension": self.solution_dimension,
            "conditioning": self.conditioning,
            "max_residual": self.max_residual,
        }


def symplectic_probe(
    basis: EchelonBasis,
    n: int,
    tol: float = 1e-9,
    nondegeneracy_tol: float = 1e-6,
) -> Optional[SymplecticWitness]:
    """Search for a bilinear form ``J`` with ``X J + J X^T = 0`` on the span.

    The constraints are linear in the entries of ``J``; the numeric null
    space of the stacked system is computed, each null vector is projected
    onto its antisymmetric part (the solution space is closed under
    transposition, so the projection still solves the system) and the
    first nondegenerate antisymmetric solution is returned. Advisory only:
    the decision-grade test is :func:`state_verdict`. In particular small
    abelian spans admit invariant forms without that saying anything about
    transitivity.
    """
    if n > DENSE_SITE_CAP:
        raise ValueError(f"probe refuses {n} sites (dense cap {DENSE_SITE_CAP})")
    if basis.dimension == 0:
        raise ValueError("probe needs a nonempty basis")
    size = 2**n
    eye = np.eye(size)
    mats = [materialize(row, n) for row in basis.rows]
    system = np.concatenate(
        [np.kron(x, eye) + np.kron(eye, x) for x in mats], axis=0
    )
    svals = np.linalg.svd(system, compute_uv=False)
    _, _, vh = np.linalg.svd(system)
    rank = int((svals > tol * svals[0]).sum()) if svals[0] > 0 else 0
    null_vectors = vh[rank:].conj()
    if null_vectors.shape[0] == 0:
        return None
    solution_dimension = null_vectors.shape[0]

    candidates = [vec.reshape(size, size) for vec in null_vectors]
    if solution_dimension > 1:
        rng = np.random.default_rng(7)
        for _ in range(8):
            weights = rng.standard_normal(solution_dimension) + 1j * rng.standard_normal(
                solution_dimension
            )
            candidates.append(
                sum(w * c for w, c in zip(weights, candidates[:solution_dimension]))
            )

    for j in candidates:
        anti = (j - j.T) / 2
        scale = np.abs(anti).max()
        if scale < tol:
            continue
        anti = anti / scale
        form_svals = np.linalg.svd(anti, compute_uv=False)
        if form_svals[-1] <= nondegeneracy_tol * form_svals[0]:
            continue
        residual = max(
            float(np.abs(x @ anti + anti @ x.T).max()) for x in mats
        )
        if residual > 1e-6:
            continue
        return SymplecticWitness(
            form=anti,
            solution_dimension=solution_dimension,
            conditioning=float(form_svals[-1] / form_svals[0]),
            max_residual=residual,
        )
    return None


@dataclass
class AnalysisReport:
    """Everything the analysis produced, with verdict provenance tags.

    ``operator_controllable`` and ``state_controllable`` are ``None`` only
    when the closure was skipped and no shortcut applied. The report is
    plain data; ``to_dict``/``from_dict`` round-trip through JSON exactly.
    """

    n: int
    full_dimension: int
    control_axes: list[str]
    closure_dimension: Optional[int]
    closure_skipped: Optional[str]
    bracket_count: Optional[int]
    operator_controllable: Optional[bool]
    operator_tag: str
    state_controllable: Optional[bool]
    state_tag: str
    equivalent_state_controllable: Optional[bool]
    graph_components: list[list[int]]
    connectivity_criterion: bool
    refinement_criterion: bool
    disintegration_success: bool
    final_partition: list[list[int]]
    decomposition: Optional[dict]
    control_subalgebra_dimension: int
    control_subalgebra_expected: int
    control_subalgebra_ok: Optional[bool]
    centralizer_dimension: Optional[int]
    center_dimension: Optional[int]
    symplectic: Optional[dict]
    consistency_failures: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    closure_basis: Optional[list[dict]] = None

    def to_dict(self) -> dict:
        return asdict(self)

    @classmethod
    def from_dict(cls, data: dict) -> "AnalysisReport":
        return cls(**data)


def _shortcut_support(net: SpinNetwork) -> tuple[bool, list[str]]:
    """Whether the control-subalgebra argument underpinning the graph
    shortcuts applies for this axis set and these ratios.

    All three axes: the ratios must be nonzero (a zero ratio leaves its
    block invisible to the controls). Axes x and y only: additionally the
    absolute ratios must be pairwise distinct, since the missing axis is
    recovered through squared ratios.
    """
    notes: list[str] = []
    part = gamma_partition(net)
    nonzero = all(g != 0 for g in part.ratios)
    if not nonzero:
        notes.append("a zero gyromagnetic ratio disables the graph shortcuts")
    axes = set(net.control_axes)
    if axes == {"x", "y", "z"}:
        return nonzero, notes
    if axes == {"x", "y"}:
        notes.append(
            "constant-z drive: drift term along z omitted (it lies in the "
            "control subalgebra and cannot change the closure)"
        )
        abs_ratios = [abs(g) for g in part.ratios]
        guard = nonzero and len(set(abs_ratios)) == len(abs_ratios)
        if not guard and nonzero:
            notes.append(
                "absolute ratios collide; graph shortcuts disabled, the "
                "closure is the verdict"
            )
        return guard, notes
    notes.append(
        f"axis set {sorted(axes)} has no shortcut support; closure decides"
    )
    return False, notes


def analyze(
    net: SpinNetwork,
    cap: Optional[int] = None,
    include_basis: bool = False,
    probe: bool = True,
) -> AnalysisReport:
    """Full classification pipeline for one network.

    Order of play: graph components and ratio partition first; the
    distinct-ratio connectivity criterion or, failing that, the signature
    refinement criterion produce verdicts without a closure; the closure
    (subject to the cap policy) either cross-checks those verdicts or is
    itself the verdict. The symplectic probe runs only on the interesting
    boundary (state controllable, operator not).
    """
    net = validate(net)
    n = net.n
    full = 4**n - 1
    components = connected_components(build_graph(net))
    connected = len(components) == 1
    part = gamma_partition(net)
    distinct = part.block_count == n
    refinement = disintegrate(net)

    support, notes = _shortcut_support(net)
    consistency: list[str] = []

    connectivity_criterion = distinct and support
    refinement_criterion = refinement.success and support

    controls = build_controls(net)
    drift = build_drift(net)
    generators = [drift] + [controls[a] for a in net.control_axes]
    generators = [g for g in generators if g]

    closure_result: Optional[ClosureResult] = None
    closure_skipped: Optional[str] = None
    if not generators:
        closure_skipped = "drift and all controls vanish"
        notes.append("degenerate network: " + closure_skipped)
    elif n > 5 and cap is None:
        closure_skipped = (
            f"no closure attempted for {n} sites without an explicit cap"
        )
    else:
        try:
            closure_result = close(generators, n, cap=cap)
        except ClosureCapExceeded as exc:
            closure_skipped = (
                f"closure cap {exc.cap} exceeded at dimension {exc.dimension}"
            )

    decomposition: Optional[StructurePrediction] = None
    op: Optional[bool] = None
    state: Optional[bool] = None
    op_tag = state_tag = TAG_SKIPPED

    if connectivity_criterion:
        decomposition = component_structure(net)
        op, op_tag = connected, TAG_CONNECTIVITY
        # every controllability notion coincides for this class
        state, state_tag = connected, TAG_CONNECTIVITY
    elif refinement_criterion:
        decomposition = _predict_from_components(net)
        op, op_tag = connected, TAG_REFINEMENT
        if connected:
            state, state_tag = True, TAG_OP_IMPLIES_STATE
        else:
            # a product of commuting full blocks is neither the full
            # algebra nor simple, so it cannot act transitively
            state, state_tag = False, TAG_STRUCTURE

    centralizer_dim: Optional[int] = None
    center_dim: Optional[int] = None
    if closure_result is not None:
        closure_op, _ = operator_verdict(closure_result, n)
        centralizer_dim = centralizer_dimension(
            closure_result.basis, corner_projector(n)
        )
        closure_state = (
            closure_result.dimension - centralizer_dim == 2 * 2**n - 2
        )
        if op is None:
            op, op_tag = closure_op, TAG_CLOSURE
            state, state_tag = closure_state, TAG_RANK
        else:
            if closure_op != op:
                consistency.append(
                    f"operator verdict: {op_tag} says {op}, closure "
                    f"dimension {closure_result.dimension} says {closure_op}"
                )
            if closure_state != state:
                consistency.append(
                    f"state verdict: {state_tag} says {state}, centralizer "
                    f"rank test says {closure_state}"
                )
        if (
            decomposition is not None
            and decomposition.total_dimension != closure_result.dimension
        ):
            consistency.append(
                f"predicted dimension {decomposition.total_dimension} != "
                f"closure dimension {closure_result.dimension}"
            )
        if not closure_op and closure_result.dimension <= _CENTER_DIM_LIMIT:
            center_dim = center_dimension(closure_result.basis)

    if op is True and state is False:
        consistency.append(
            "operator controllability without state controllability is "
            "impossible; some test above is wrong"
        )

    ctrl = control_subalgebra_check(net)
    if support and not ctrl.passed:
        consistency.append(
            f"control subalgebra closure has dimension {ctrl.dimension}, "
            f"expected {ctrl.expected_dimension}"
        )

    symplectic: Optional[dict] = None
    if (
        probe
        and closure_result is not None
        and state is True
        and op is False
        and n <= DENSE_SITE_CAP
    ):
        witness = symplectic_probe(closure_result.basis, n)
        symplectic = witness.summary() if witness else {"found": False}

    basis_rows: Optional[list[dict]] = None
    if include_basis and closure_result is not None:
        basis_rows = [
            {w: str(c) for w, c in row.terms()}
            for row in closure_result.basis.rows
        ]

    return AnalysisReport(
        n=n,
        full_dimension=full,
        control_axes=list(net.control_axes),
        closure_dimension=(
            closure_result.dimension if closure_result is not None else None
        ),
        closure_skipped=closure_skipped,
        bracket_count=(
            closure_result.bracket_count if closure_result is not None else None
        ),
        operator_controllable=op,
        operator_tag=op_tag,
        state_controllable=state,
        state_tag=state_tag,
        equivalent_state_controllable=state,
        graph_components=[list(c) for c in components],
        connectivity_criterion=connectivity_criterion,
        refinement_criterion=refinement_criterion,
        disintegration_success=refinement.success,
        final_partition=[list(b) for b in refinement.final_partition],
        decomposition=decomposition.to_dict() if decomposition else None,
        control_subalgebra_dimension=ctrl.dimension,
        control_subalgebra_expected=ctrl.expected_dimension,
        control_subalgebra_ok=ctrl.passed if support else None,
        centralizer_dimension=centralizer_dim,
        center_dimension=center_dim,
        symplectic=symplectic,
        consistency_failures=consistency,
        notes=notes,
        closure_basis=basis_rows,
    )
