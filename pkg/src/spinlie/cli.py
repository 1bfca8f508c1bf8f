"""Command line front end: JSON config in, JSON report or table out.

Commands:
  analyze <file>        classify one network (``-`` reads stdin)
  cases [selector]      run the built-in reference library
  oracle-check <file>   compare the exact closure with the dense recomputation

Exit codes: 0 all requested analyses completed and consistent; 2 input
error; 3 internal consistency failure (a shortcut and the closure, or the
exact and dense paths, disagree — or a reference case misses its
expectation).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .cases import CASE_INDEX, run_cases
from .classify import analyze
from .model import InvalidNetwork, SpinNetwork, spin_network
from .pauli import AXES

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_INCONSISTENT = 3


class ConfigError(ValueError):
    """The configuration document is malformed."""


@dataclass
class NetworkConfig:
    """Parsed form of the JSON network description."""

    n: int
    gamma: list[Fraction]
    couplings: list[tuple[int, int, Fraction, Fraction, Fraction]]
    control_axes: list[str] = field(default_factory=lambda: list(AXES))
    closure_cap: Optional[int] = None

    def network(self) -> SpinNetwork:
        couplings = {
            (k, l): (xx, yy, zz) for k, l, xx, yy, zz in self.couplings
        }
        return spin_network(self.n, self.gamma, couplings, self.control_axes)


def _rational(value, what: str) -> Fraction:
    """Exact rational from an int or a string like ``3``, ``1/2``, ``0.5``."""
    if isinstance(value, bool) or isinstance(value, float):
        raise ConfigError(f"{what} must be an integer or a rational string")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as exc:
            raise ConfigError(f"bad rational for {what}: {value!r}") from exc
    raise ConfigError(f"{what} must be an integer or a rational string")


def parse_config(document) -> NetworkConfig:
    """Validate and parse a configuration document (JSON text or dict).

    Coupling entries carry either the Heisenberg shorthand ``J`` or the
    per-axis constants ``M``, ``N``, ``P`` (coefficients of the XX, YY and
    ZZ terms) — never both.
    """
    if isinstance(document, (str, bytes)):
        try:
            document = json.loads(document)
        except json.JSONDecodeError as exc:
            raise ConfigError(f"not valid JSON: {exc}") from exc
    if not isinstance(document, dict):
        raise ConfigError("the configuration must be a JSON object")

    known = {"n", "gamma", "couplings", "control_axes", "closure_cap"}
    unknown = set(document) - known
    if unknown:
        raise ConfigError(f"unknown configuration keys: {sorted(unknown)}")

    n = document.get("n")
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ConfigError("'n' must be a positive integer")
    gamma_raw = document.get("gamma")
    if not isinstance(gamma_raw, list) or len(gamma_raw) != n:
        raise ConfigError(f"'gamma' must list exactly {n} rationals")
    gamma = [_rational(g, f"gamma[{i}]") for i, g in enumerate(gamma_raw)]

    couplings = []
    for i, entry in enumerate(document.get("couplings", [])):
        if not isinstance(entry, dict):
            raise ConfigError(f"coupling entry {i} must be an object")
        what = f"coupling entry {i}"
        missing = {"k", "l"} - set(entry)
        if missing:
            raise ConfigError(f"{what} lacks {sorted(missing)}")
        k, l = entry["k"], entry["l"]
        for idx in (k, l):
            if not isinstance(idx, int) or isinstance(idx, bool):
                raise ConfigError(f"{what}: particle indices must be integers")
        has_j = "J" in entry
        has_axes = bool({"M", "N", "P"} & set(entry))
        if has_j and has_axes:
            raise ConfigError(f"{what}: 'J' excludes 'M'/'N'/'P'")
        if not has_j and not has_axes:
            raise ConfigError(f"{what}: needs 'J' or at least one of 'M'/'N'/'P'")
        extra = set(entry) - {"k", "l", "J", "M", "N", "P"}
        if extra:
            raise ConfigError(f"{what}: unknown keys {sorted(extra)}")
        if has_j:
            j = _rational(entry["J"], f"{what} J")
            xx = yy = zz = j
        else:
            xx = _rational(entry.get("M", 0), f"{what} M")
            yy = _rational(entry.get("N", 0), f"{what} N")
            zz = _rational(entry.get("P", 0), f"{what} P")
        couplings.append((k, l, xx, yy, zz))

    axes_raw = document.get("control_axes", list(AXES))
    if not isinstance(axes_raw, list) or not all(
        isinstance(a, str) for a in axes_raw
    ):
        raise ConfigError("'control_axes' must be a list of axis names")

    cap = document.get("closure_cap")
    if cap is not None and (
        not isinstance(cap, int) or isinstance(cap, bool) or cap < 1
    ):
        raise ConfigError("'closure_cap' must be a positive integer")

    return NetworkConfig(n, gamma, couplings, axes_raw, cap)


def _load(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return handle.read()
    except OSError as exc:
        raise ConfigError(f"cannot read {path}: {exc}") from exc


def _axes_override(raw: Optional[str]) -> Optional[list[str]]:
    if raw is None:
        return None
    axes = [a.strip() for a in raw.split(",") if a.strip()]
    if not axes or any(a not in AXES for a in axes):
        raise ConfigError(f"--axes wants a comma list from x,y,z: {raw!r}")
    return axes


def run_analyze(args) -> int:
    config = parse_config(_load(args.config))
    if args.axes is not None:
        config.control_axes = _axes_override(args.axes)
    cap = args.cap if args.cap is not None else config.closure_cap
    report = analyze(
        config.network(), cap=cap, include_basis=args.basis
    )
    print(json.dumps(report.to_dict(), indent=2))
    return EXIT_INCONSISTENT if report.consistency_failures else EXIT_OK


def _case_table(outcomes) -> str:
    headers = (
        "case", "dim", "expected", "operator", "state", "oracle", "status"
    )
    rows = []
    for out in outcomes:
        rows.append(
            (
                out.case.key,
                str(out.report.closure_dimension),
                str(out.case.expected_dimension),
                f"{out.report.operator_controllable}/{out.case.expected_operator}",
                f"{out.report.state_controllable}/{out.case.expected_state}",
                "-" if out.oracle_dimension is None else str(out.oracle_dimension),
                "pass" if out.passed else "FAIL: " + "; ".join(out.failures),
            )
        )
    widths = [
        max(len(headers[i]), max(len(r[i]) for r in rows)) for i in range(len(headers))
    ]
    lines = [
        "  ".join(h.ljust(widths[i]) for i, h in enumerate(headers)),
        "  ".join("-" * w for w in widths),
    ]
    lines += ["  ".join(r[i].ljust(widths[i]) for i in range(len(r))) for r in rows]
    return "\n".join(lines)


def run_case_library(args) -> int:
    if args.selector is not None and args.selector not in CASE_INDEX:
        raise ConfigError(
            f"unknown case {args.selector!r}; known: {', '.join(sorted(CASE_INDEX))}"
        )
    outcomes = run_cases(args.selector, oracle=args.oracle)
    print(_case_table(outcomes))
    failed = [o for o in outcomes if not o.passed]
    print(f"\n{len(outcomes) - len(failed)}/{len(outcomes)} cases passed")
    return EXIT_INCONSISTENT if failed else EXIT_OK


def run_oracle_check(args) -> int:
    from .model import build_controls, build_drift
    from .oracle import materialize, numeric_closure_dim, oracle_commutator

    config = parse_config(_load(args.config))
    if args.axes is not None:
        config.control_axes = _axes_override(args.axes)
    net = config.network()
    cap = args.cap if args.cap is not None else config.closure_cap
    report = analyze(net, cap=cap, probe=False)

    controls = build_controls(net)
    gens = [build_drift(net)] + [controls[a] for a in net.control_axes]
    gens = [g for g in gens if g]
    mats = [materialize(g, net.n) for g in gens]
    numeric_dim = numeric_closure_dim(mats)

    from .echelon import bracket

    max_err = 0.0
    for i, a in enumerate(gens):
        for b in gens[i + 1:]:
            symbolic = materialize(bracket(a, b), net.n)
            dense = oracle_commutator(
                materialize(a, net.n), materialize(b, net.n)
            )
            max_err = max(max_err, float(abs(symbolic - dense).max()))

    agree = report.closure_dimension == numeric_dim
    print(
        json.dumps(
            {
                "symbolic_dimension": report.closure_dimension,
                "numeric_dimension": numeric_dim,
                "dimensions_agree": agree,
                "max_commutator_error": max_err,
            },
            indent=2,
        )
    )
    ok = agree and max_err < 1e-12 and not report.consistency_failures
    return EXIT_OK if ok else EXIT_INCONSISTENT


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spinlie",
        description="Exact controllability analysis of spin-1/2 networks",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="classify one network from a JSON config")
    p.add_argument("config", help="path to a JSON config, or - for stdin")
    p.add_argument("--basis", action="store_true", help="include the closure basis")
    p.add_argument("--axes", help="override control axes, e.g. x,y")
    p.add_argument("--cap", type=int, help="closure dimension budget")
    p.set_defaults(func=run_analyze)

    p = sub.add_parser("cases", help="run the built-in reference cases")
    p.add_argument("selector", nargs="?", help="run a single named case")
    p.add_argument(
        "--oracle",
        action="store_true",
        help="also recompute every dimension densely",
    )
    p.set_defaults(func=run_case_library)

    p = sub.add_parser(
        "oracle-check", help="compare the exact and dense closure paths"
    )
    p.add_argument("config", help="path to a JSON config, or - for stdin")
    p.add_argument("--axes", help="override control axes, e.g. x,y")
    p.add_argument("--cap", type=int, help="closure dimension budget")
    p.set_defaults(func=run_oracle_check)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ConfigError, InvalidNetwork, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
