"""Command-line front end.

    radchain chain --group C4 --p 2 --format json
    radchain chain --input algebra.json
    radchain verify --suite abelian --p 2 --max-order 16

Exit codes: 0 success, 1 input or usage error, 2 a check failed.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path

from .algcore import AlgebraError, Lattice, OrderLat, dual_lattice, index_val, make_algebra, make_form
from .chain import ChainReport, chain_invariants, run_chain, verify_symmetric_theorems
from .exactla import check_prime
from .grouprings import (
    GroupError,
    GroupTable,
    abelian_invariants,
    abelian_lrad,
    frattini_index,
    from_table,
    group_ring,
    p_power_exponent,
    parse_group,
    predicted_delta,
    predicted_gamma,
)
from .suites import SUITES, run_suite

EXIT_OK, EXIT_INPUT, EXIT_CHECK = 0, 1, 2


class InputError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    group: str | None = None
    input: Path | None = None
    p: int | None = None
    max_steps: int = 1000
    format: str = "text"
    checks: bool = True
    assume_indecomposable: bool = False
    suite: str | None = None
    max_order: int | None = None
    jobs: int | None = None


# ---------------------------------------------------------------------------
# input files


def _frac(s) -> Fraction:
    if isinstance(s, bool) or not isinstance(s, (str, int)):
        raise InputError(f"expected a fraction string, got {s!r}")
    try:
        return Fraction(s) if isinstance(s, int) else Fraction(s.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad fraction {s!r}") from exc


def load_algebra_doc(doc: dict, p_flag: int | None):
    try:
        n = int(doc["dim"])
        p = int(doc["p"])
        consts = [[[_frac(x) for x in row] for row in plane] for plane in doc["structure_constants"]]
        unit = [_frac(x) for x in doc["unit"]]
        tau = [_frac(x) for x in doc["tau"]]
        basis = doc.get("order_basis")
    except (KeyError, TypeError) as exc:
        raise InputError(f"algebra file is missing or mangles a field: {exc}") from exc
    if p_flag is not None and p_flag != p:
        raise InputError(f"--p {p_flag} disagrees with p = {p} in the file")
    shapes_ok = len(consts) == n and all(len(r) == n and all(len(c) == n for c in r) for r in consts)
    if not shapes_ok or len(unit) != n or len(tau) != n:
        raise InputError("array shapes do not match dim")
    A = make_algebra(consts, unit, p)
    form = make_form(A, tau)
    L = Lattice.standard(n, p) if basis is None else Lattice.from_rows([[_frac(x) for x in r] for r in basis], p)
    O = OrderLat(L, A)
    return A, O, form


def load_group_doc(doc: dict) -> GroupTable:
    try:
        G = from_table(doc["table"], int(doc.get("identity", 0)))
        if int(doc["order"]) != G.order:
            raise InputError("order does not match the table")
        return G
    except (KeyError, TypeError) as exc:
        raise InputError(f"group file is missing or mangles a field: {exc}") from exc


def load_input(path: Path, p_flag: int | None):
    """('group', GroupTable) or ('algebra', (A, O, form)) from a JSON file."""
    try:
        doc = json.loads(path.read_text())
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise InputError("top level must be a JSON object")
    if "table" in doc:
        return "group", load_group_doc(doc)
    return "algebra", load_algebra_doc(doc, p_flag)


# ---------------------------------------------------------------------------
# chain


def group_checks(G: GroupTable, p: int, report: ChainReport, form, A) -> dict[str, bool]:
    """Structure checks for Z_pG, G a p-group."""
    Lam = report.order(0)
    checks = {"order_symmetric": dual_lattice(Lam, form) == Lam}
    checks.update(verify_symmetric_theorems(report, Lam, form, A))
    checks["step1_predicted"] = report.order(1) == predicted_gamma(G, p)
    checks["step1_index_one"] = index_val(Lam, report.order(1)) == 1
    checks["first_step_hereditary_iff_cyclic_p"] = (report.length == 1) == (G.order == p)
    if G.order >= p * p:
        fi = frattini_index(G, p)
        checks["step2_predicted"] = report.order(2) == predicted_delta(G, p)
        checks["step2_index"] = index_val(Lam, report.order(2)) == 2 + p_power_exponent(fi, p)
        checks["second_step_hereditary_iff_order_4"] = (report.length == 2) == (G.order == 4)
    if G.is_abelian():
        n, a = abelian_invariants(G, p)
        checks["abelian_length"] = report.length == abelian_lrad(n, a, p)
    return checks


def report_dict(label: str, p: int, dim: int, report: ChainReport) -> dict:
    return {
        "group": label,
        "p": p,
        "dimension": dim,
        "length": report.length,
        "steps": [
            {"n": i, "index_val": s.index_from_start, "radical_selfdual": s.radical_selfdual, "hereditary": s.hereditary}
            for i, s in enumerate(report.steps)
        ],
        "checks": dict(report.checks),
    }


def dump_json(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def format_text(d: dict) -> str:
    yn = {True: "yes", False: "no"}
    lines = [f"group: {d['group']}  p: {d['p']}  dimension: {d['dimension']}"]
    for s in d["steps"]:
        lines.append(
            f"  step {s['n']}: index valuation {s['index_val']}, "
            f"radical self-dual {yn[s['radical_selfdual']]}, hereditary {yn[s['hereditary']]}"
        )
    lines.append(f"length: {d['length']}, head order reached")
    for name, ok in d["checks"].items():
        lines.append(f"  check {name}: {'pass' if ok else 'FAIL'}")
    return "\n".join(lines) + "\n"


def cmd_chain(cfg: RunConfig) -> int:
    if (cfg.group is None) == (cfg.input is None):
        raise InputError("give exactly one of --group or --input")
    if cfg.max_steps < 1:
        raise InputError("--max-steps must be at least 1")
    G = None
    if cfg.group is not None:
        if cfg.p is None:
            raise InputError("--p is required with --group")
        G = parse_group(cfg.group)
        label = cfg.group
    else:
        kind, payload = load_input(cfg.input, cfg.p)
        label = cfg.input.name
        if kind == "group":
            if cfg.p is None:
                raise InputError("--p is required with a group file")
            G = payload
    if G is not None:
        p = check_prime(cfg.p)
        A, O, form = group_ring(G, p)
    else:
        A, O, form = payload
        p = A.p
    report = run_chain(O.lattice, form, A, cfg.max_steps)
    if cfg.checks:
        if G is not None and p_power_exponent(G.order, p) is not None:
            report.checks = group_checks(G, p, report, form, A)
        elif cfg.assume_indecomposable and dual_lattice(O.lattice, form) == O.lattice:
            report.checks = verify_symmetric_theorems(report, O.lattice, form, A)
        else:
            report.checks = chain_invariants(report, A)
    d = report_dict(label, p, A.dim, report)
    sys.stdout.write(dump_json(d) if cfg.format == "json" else format_text(d))
    return EXIT_OK if all(report.checks.values()) else EXIT_CHECK


# ---------------------------------------------------------------------------
# verify


def cmd_verify(cfg: RunConfig) -> int:
    if cfg.suite not in SUITES:
        raise InputError(f"unknown suite {cfg.suite!r}; choose from {', '.join(SUITES)}")
    if cfg.p is not None:
        check_prime(cfg.p)
    lines = run_suite(cfg.suite, cfg.p, cfg.max_order, cfg.jobs)
    passed = sum(l.ok for l in lines)
    if cfg.format == "json":
        doc = {
            "suite": cfg.suite,
            "results": [
                {"name": l.name, "subject": l.subject, "expected": l.expected, "got": l.got, "ok": l.ok} for l in lines
            ],
            "passed": passed,
            "total": len(lines),
        }
        sys.stdout.write(dump_json(doc))
    else:
        for l in lines:
            print(l.text())
        if cfg.suite == "abelian":
            print(f"{len(lines)} groups, {passed} matches")
        else:
            print(f"{passed}/{len(lines)} checks passed")
    return EXIT_OK if passed == len(lines) else EXIT_CHECK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="radchain", description="Radical idealizer chains of Z_(p)-orders.")
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("chain", help="run the radical idealizer chain of one order")
    c.add_argument("--group", help="built-in group: C{n}, C{a}xC{b}..., D{2n}, Q8, E{p}{r}")
    c.add_argument("--input", type=Path, help="algebra or group JSON file")
    c.add_argument("--p", type=int)
    c.add_argument("--max-steps", type=int, default=1000)
    c.add_argument("--format", choices=["text", "json"], default="text")
    c.add_argument("--no-checks", dest="checks", action="store_false", help="skip theorem checks")
    c.add_argument(
        "--assume-indecomposable",
        action="store_true",
        help="treat a self-dual input order as indecomposable and run the symmetric-order checks",
    )

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("--suite", required=True, help="abelian, pgroup-structure or oracles")
    v.add_argument("--p", type=int)
    v.add_argument("--max-order", type=int)
    v.add_argument("--jobs", type=int, help="worker processes (default: CPU count)")
    v.add_argument("--format", choices=["text", "json"], default="text")
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        ns = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    cfg = RunConfig(**vars(ns))
    try:
        return cmd_chain(cfg) if cfg.command == "chain" else cmd_verify(cfg)
    except (InputError, AlgebraError, GroupError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
