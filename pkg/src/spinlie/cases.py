"""Built-in library of reference networks with known classifications.

Each entry is a small network whose closure dimension and verdicts are
known exactly; running the library end to end is the fastest full check of
the pipeline. Keys follow the two-equal-ratio family naming (``b-ii``,
``b-iii``, ...) with the inner coupling called J12 and the outer ones J13,
J23.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .classify import AnalysisReport, analyze
from .model import SpinNetwork, spin_network


@dataclass(frozen=True)
class ReferenceCase:
    key: str
    description: str
    n: int
    gamma: tuple[str, ...]
    couplings: tuple[tuple[int, int, str], ...]  # (k, l, J) Heisenberg pairs
    expected_dimension: int
    expected_operator: bool
    expected_state: bool
    expected_center: Optional[int] = None
    expects_witness: bool = False
    expected_decomposition: Optional[tuple[int, ...]] = None

    def network(self, control_axes=("x", "y", "z")) -> SpinNetwork:
        couplings = {(k, l): j for k, l, j in self.couplings}
        return spin_network(self.n, self.gamma, couplings, control_axes)


CASES: tuple[ReferenceCase, ...] = (
    ReferenceCase(
        key="n1",
        description="single particle, any nonzero ratio",
        n=1,
        gamma=("1",),
        couplings=(),
        expected_dimension=3,
        expected_operator=True,
        expected_state=True,
    ),
    ReferenceCase(
        key="n2-distinct",
        description="two particles, distinct ratios, Heisenberg coupling",
        n=2,
        gamma=("1", "2"),
        couplings=((1, 2, "1"),),
        expected_dimension=15,
        expected_operator=True,
        expected_state=True,
    ),
    ReferenceCase(
        key="n2-equal",
        description="two particles, equal ratios: four-dimensional algebra "
        "with a one-dimensional center",
        n=2,
        gamma=("1", "1"),
        couplings=((1, 2, "1"),),
        expected_dimension=4,
        expected_operator=False,
        expected_state=False,
        expected_center=1,
    ),
    ReferenceCase(
        key="a-all-equal",
        description="three particles, all ratios equal, connected Heisenberg",
        n=3,
        gamma=("1", "1", "1"),
        couplings=((1, 2, "1"), (1, 3, "1"), (2, 3, "1")),
        expected_dimension=4,
        expected_operator=False,
        expected_state=False,
        expected_center=1,
    ),
    ReferenceCase(
        key="b-i",
        description="ratios (g, g, g'), outer couplings with distinct "
        "magnitudes: refinement succeeds, fully controllable",
        n=3,
        gamma=("1", "1", "2"),
        couplings=((1, 2, "1"), (1, 3, "1"), (2, 3, "2")),
        expected_dimension=63,
        expected_operator=True,
        expected_state=True,
    ),
    ReferenceCase(
        key="b-ii-J12nonzero",
        description="ratios (g, g, g'), equal outer couplings, inner "
        "coupling on",
        n=3,
        gamma=("1", "1", "2"),
        couplings=((1, 2, "1"), (1, 3, "1"), (2, 3, "1")),
        expected_dimension=39,
        expected_operator=False,
        expected_state=False,
    ),
    ReferenceCase(
        key="b-ii-J12zero",
        description="ratios (g, g, g'), equal outer couplings, inner "
        "coupling off",
        n=3,
        gamma=("1", "1", "2"),
        couplings=((1, 3, "1"), (2, 3, "1")),
        expected_dimension=38,
        expected_operator=False,
        expected_state=False,
    ),
    ReferenceCase(
        key="b-ii-decoupled-J12nonzero",
        description="ratios (g, g, g'), no outer couplings, inner pair "
        "coupled: control blocks plus a central drift",
        n=3,
        gamma=("1", "1", "2"),
        couplings=((1, 2, "1"),),
        expected_dimension=7,
        expected_operator=False,
        expected_state=False,
        expected_center=1,
    ),
    ReferenceCase(
        key="b-ii-decoupled-J12zero",
        description="ratios (g, g, g'), no couplings at all: control "
        "subalgebra only",
        n=3,
        gamma=("1", "1", "2"),
        couplings=(),
        expected_dimension=6,
        expected_operator=False,
        expected_state=False,
        expected_center=0,
    ),
    ReferenceCase(
        key="b-iii-J12zero",
        description="ratios (g, g, g'), opposite outer couplings, inner "
        "coupling off: state controllable but not operator controllable",
        n=3,
        gamma=("1", "1", "2"),
        couplings=((1, 3, "1"), (2, 3, "-1")),
        expected_dimension=36,
        expected_operator=False,
        expected_state=True,
        expects_witness=True,
    ),
    ReferenceCase(
        key="b-iii-J12nonzero",
        description="ratios (g, g, g'), opposite outer couplings, inner "
        "coupling on: fully controllable",
        n=3,
        gamma=("1", "1", "2"),
        couplings=((1, 2, "1"), (1, 3, "1"), (2, 3, "-1")),
        expected_dimension=63,
        expected_operator=True,
        expected_state=True,
    ),
    ReferenceCase(
        key="distinct-connected",
        description="three distinct ratios, connected graph",
        n=3,
        gamma=("1", "2", "3"),
        couplings=((1, 2, "1"), (1, 3, "1"), (2, 3, "1")),
        expected_dimension=63,
        expected_operator=True,
        expected_state=True,
    ),
    ReferenceCase(
        key="distinct-disconnected",
        description="three distinct ratios, one isolated particle: "
        "block sum 15 + 3",
        n=3,
        gamma=("1", "2", "3"),
        couplings=((1, 2, "1"),),
        expected_dimension=18,
        expected_operator=False,
        expected_state=False,
        expected_decomposition=(15, 3),
    ),
)

CASE_INDEX = {case.key: case for case in CASES}


@dataclass
class CaseOutcome:
    case: ReferenceCase
    report: AnalysisReport
    oracle_dimension: Optional[int]
    failures: list[str]

    @property
    def passed(self) -> bool:
        return not self.failures


def run_case(
    case: ReferenceCase,
    oracle: bool = False,
    control_axes: tuple[str, ...] = ("x", "y", "z"),
) -> CaseOutcome:
    """Analyze one reference network and diff against its expectations."""
    net = case.network(control_axes)
    report = analyze(net)
    failures: list[str] = []

    if report.closure_dimension != case.expected_dimension:
        failures.append(
            f"dimension {report.closure_dimension} != {case.expected_dimension}"
        )
    if report.operator_controllable != case.expected_operator:
        failures.append(
            f"operator {report.operator_controllable} != {case.expected_operator}"
        )
    if report.state_controllable != case.expected_state:
        failures.append(
            f"state {report.state_controllable} != {case.expected_state}"
        )
    if (
        case.expected_center is not None
        and report.center_dimension != case.expected_center
    ):
        failures.append(
            f"center {report.center_dimension} != {case.expected_center}"
        )
    if case.expects_witness and not (
        report.symplectic and report.symplectic.get("found")
    ):
        failures.append("no symplectic witness found")
    if case.expected_decomposition is not None:
        got = tuple(
            c["dimension"] for c in (report.decomposition or {}).get("components", ())
        )
        if got != case.expected_decomposition:
            failures.append(
                f"decomposition {got} != {case.expected_decomposition}"
            )
    if report.consistency_failures:
        failures.extend(report.consistency_failures)

    oracle_dim: Optional[int] = None
    if oracle:
        from .model import build_controls, build_drift
        from .oracle import materialize, numeric_closure_dim

        controls = build_controls(net)
        gens = [build_drift(net)] + [controls[a] for a in net.control_axes]
        mats = [materialize(g, net.n) for g in gens if g]
        oracle_dim = numeric_closure_dim(mats)
        if oracle_dim != case.expected_dimension:
            failures.append(
                f"oracle dimension {oracle_dim} != {case.expected_dimension}"
            )

    return CaseOutcome(case, report, oracle_dim, failures)


def run_cases(
    selector: Optional[str] = None, oracle: bool = False
) -> list[CaseOutcome]:
    """Run the whole library, or the single case named by ``selector``."""
    if selector is not None:
        if selector not in CASE_INDEX:
            known = ", ".join(sorted(CASE_INDEX))
            raise KeyError(f"unknown case {selector!r}; known: {known}")
        picked = [CASE_INDEX[selector]]
    else:
        picked = list(CASES)
    return [run_case(case, oracle=oracle) for case in picked]
