"""Batch verification suites shared by the CLI and the acceptance tests.

Every task is a top-level function of picklable arguments returning a list
of CheckLine, so the suites can fan out to a process pool and still
aggregate deterministically (results are collected in submission order).
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .algcore import (
    conductor,
    conductor_direct,
    contains,
    dual_lattice,
    idealizer,
    index_val,
    lattice_intersect,
    lattice_sum,
    left_order,
    multiplier_order_direct,
    right_order,
)
from .chain import run_chain, verify_symmetric_theorems
from .grouprings import (
    abelian_invariants,
    abelian_lrad,
    abelian_pgroups,
    frattini_index,
    group_ring,
    homs_to_cyclic_p,
    p_power_exponent,
    parse_group,
    predicted_delta,
    predicted_gamma,
)
from .radical import brute_force_radical, fp_algebra_from, fp_radical
from .randalg import random_lattice, random_small_algebra

STRUCTURE_GROUPS = {
    2: ["C2", "C4", "C8", "C2xC2", "C2xC2xC2", "C2xC4", "D8", "Q8"],
    3: ["C3", "C9", "C3xC3"],
}
DEFAULT_MAX_ORDER = {2: 32, 3: 27}
RANDOM_LATTICES = 200
RANDOM_ALGEBRAS = 50


@dataclass(frozen=True)
class CheckLine:
    name: str
    subject: str
    expected: object
    got: object

    @property
    def ok(self) -> bool:
        return self.expected == self.got

    def text(self) -> str:
        mark = "ok" if self.ok else "FAIL"
        return f"{self.name} {self.subject}: expected {self.expected}, got {self.got} [{mark}]"


@lru_cache(maxsize=None)
def group_chain(name: str, p: int):
    """(G, algebra, form, chain report) for a built-in group."""
    G = parse_group(name)
    A, O, form = group_ring(G, p)
    return G, A, form, run_chain(O.lattice, form, A)


def pool_map(fn, tasks, jobs: int | None = None) -> list:
    jobs = jobs or os.cpu_count() or 1
    if jobs <= 1 or len(tasks) <= 1:
        return [fn(*t) for t in tasks]
    with ProcessPoolExecutor(max_workers=min(jobs, len(tasks))) as ex:
        return list(ex.map(fn, *zip(*tasks)))


# ---------------------------------------------------------------------------
# abelian


def abelian_task(name: str, p: int) -> list[CheckLine]:
    G, _, _, report = group_chain(name, p)
    n, a = abelian_invariants(G, p)
    return [CheckLine("l_rad", name, abelian_lrad(n, a, p), report.length)]


def abelian_tasks(p: int | None = None, max_order: int | None = None) -> list[tuple]:
    primes = [p] if p is not None else sorted(DEFAULT_MAX_ORDER)
    tasks = []
    for q in primes:
        bound = max_order if max_order is not None else DEFAULT_MAX_ORDER.get(q, q**3)
        tasks += [(G.name, q) for G in abelian_pgroups(q, bound)]
    return tasks


# ---------------------------------------------------------------------------
# p-group structure


def first_step_lines(name: str, p: int) -> list[CheckLine]:
    G, A, form, report = group_chain(name, p)
    Lam = report.order(0)
    Gamma = report.order(1)
    return [
        CheckLine("Gamma = <Lambda, sum(g)/p>", name, True, Gamma == predicted_gamma(G, p)),
        CheckLine("Gamma = J(Lambda)^#", name, True, Gamma == dual_lattice(report.radical(0), form)),
        CheckLine("[Gamma:Lambda] valuation", name, 1, index_val(Lam, Gamma)),
        CheckLine("first step hereditary", name, G.order == p, report.length == 1),
    ]


def second_step_lines(name: str, p: int) -> list[CheckLine]:
    G, A, form, report = group_chain(name, p)
    if G.order < p * p:
        return []
    Lam, Delta = report.order(0), report.order(2)
    fi = frattini_index(G, p)
    return [
        CheckLine("Delta = predicted generators", name, True, Delta == predicted_delta(G, p)),
        CheckLine("[Δ:Λ] valuation", name, 2 + p_power_exponent(fi, p), index_val(Lam, Delta)),
        CheckLine("second step hereditary", name, G.order == 4, report.length == 2),
        CheckLine("homomorphisms to Z/p", name, fi, len(homs_to_cyclic_p(G, p))),
    ]


def theorem_lines(name: str, p: int) -> list[CheckLine]:
    G, A, form, report = group_chain(name, p)
    checks = verify_symmetric_theorems(report, report.order(0), form, A)
    return [CheckLine(k, name, True, v) for k, v in checks.items()]


def structure_task(name: str, p: int) -> list[CheckLine]:
    return first_step_lines(name, p) + second_step_lines(name, p) + theorem_lines(name, p)


def structure_tasks(p: int | None = None) -> list[tuple]:
    primes = [p] if p is not None else sorted(STRUCTURE_GROUPS)
    return [(g, q) for q in primes for g in STRUCTURE_GROUPS.get(q, [f"C{q}", f"C{q * q}", f"C{q}xC{q}"])]


# ---------------------------------------------------------------------------
# oracles


def conductor_lines(name: str, p: int) -> list[CheckLine]:
    """Form-based conductor against the direct solver, both sides, for steps 1, 2 and the head."""
    G, A, form, report = group_chain(name, p)
    Lam = report.order(0)
    out = []
    for label, Gam in (("step 1", report.order(1)), ("step 2", report.order(2)), ("head", report.head)):
        F = conductor(Gam, Lam, form, A)
        direct = conductor_direct(Gam, Lam, A)
        agree = F == direct.two_sided == direct.left == direct.right
        out.append(CheckLine("conductor = direct = left = right", f"{name} {label}", True, agree))
    return out


def multiplier_lines(name: str, p: int) -> list[CheckLine]:
    """Dual-formula left/right orders and idealizers against the direct solver on every chain lattice."""
    G, A, form, report = group_chain(name, p)
    mismatches = 0
    count = 0
    for st in report.steps:
        for L in (st.order_lattice, st.radical):
            Ol = left_order(L, form, A)
            Or = right_order(L, form, A)
            ok = (
                Ol == multiplier_order_direct(L, "left", A)
                and Or == multiplier_order_direct(L, "right", A)
                and idealizer(L, form, A) == lattice_intersect(Ol, Or, form) == multiplier_order_direct(L, "both", A)
            )
            mismatches += not ok
            count += 1
    return [CheckLine(f"multiplier orders vs direct ({count} lattices) mismatches", name, 0, mismatches)]


def dual_lines(name: str, p: int, samples: int = RANDOM_LATTICES, seed: int = 0) -> list[CheckLine]:
    """Involution and inclusion reversal of the dual on random lattices."""
    G, A, form, report = group_chain(name, p)
    rng = np.random.default_rng([seed, p, G.order, sum(map(ord, name))])
    invol = rev = 0
    for _ in range(samples):
        L = random_lattice(rng, A.dim, p)
        D = dual_lattice(L, form)
        invol += dual_lattice(D, form) != L
        S = lattice_sum(L, random_lattice(rng, A.dim, p))
        rev += not contains(D, dual_lattice(S, form))
    return [
        CheckLine(f"dual involution mismatches ({samples} lattices)", name, 0, invol),
        CheckLine(f"dual inclusion reversal mismatches ({samples} lattices)", name, 0, rev),
    ]


def radical_group_lines(name: str, p: int) -> list[CheckLine]:
    G = parse_group(name)
    A, _, _ = group_ring(G, p)
    F = fp_algebra_from(A)
    a, b = fp_radical(F), brute_force_radical(F)
    return [CheckLine("radical vs brute force", f"F_{p}[{name}]", True, np.array_equal(a.rows, b.rows))]


def random_radical_lines(count: int = RANDOM_ALGEBRAS, seed: int = 0) -> list[CheckLine]:
    rng = np.random.default_rng(seed)
    bad = 0
    for i in range(count):
        p = (2, 3)[i % 2]
        F = random_small_algebra(rng, p, 12 if p == 2 else 7)
        bad += not np.array_equal(fp_radical(F).rows, brute_force_radical(F).rows)
    return [CheckLine(f"radical vs brute force mismatches ({count} random algebras)", "random", 0, bad)]


# every group of order at most 9, up to isomorphism
SMALL_GROUPS = [
    "C1", "C2", "C3", "C4", "C2xC2", "C5", "C6", "D6", "C7",
    "C8", "C2xC4", "C2xC2xC2", "D8", "Q8", "C9", "C3xC3",
]
RADICAL_MAX_ORDER = {2: 8, 3: 9}


def radical_groups(p: int) -> list[str]:
    bound = RADICAL_MAX_ORDER.get(p, 4)
    return [g for g in SMALL_GROUPS if parse_group(g).order <= bound]


def oracle_task(kind: str, name: str, p: int) -> list[CheckLine]:
    if kind == "random":
        return random_radical_lines()
    fn = {
        "conductor": conductor_lines,
        "multiplier": multiplier_lines,
        "dual": dual_lines,
        "radical": radical_group_lines,
    }[kind]
    return fn(name, p)


def oracle_tasks(p: int | None = None) -> list[tuple]:
    primes = [p] if p is not None else sorted(STRUCTURE_GROUPS)
    tasks = []
    for q in primes:
        groups = STRUCTURE_GROUPS.get(q, [f"C{q}", f"C{q * q}"])
        tasks += [("dual", g, q) for g in groups]
        tasks += [("multiplier", g, q) for g in groups]
        tasks += [("conductor", g, q) for g in groups]
        tasks += [("radical", g, q) for g in radical_groups(q)]
    tasks.append(("random", "", 0))
    return tasks


SUITES = {
    "abelian": (abelian_task, abelian_tasks),
    "pgroup-structure": (structure_task, structure_tasks),
    "oracles": (oracle_task, oracle_tasks),
}


def run_suite(suite: str, p: int | None = None, max_order: int | None = None, jobs: int | None = None) -> list[CheckLine]:
    if suite not in SUITES:
        raise KeyError(suite)
    task, make = SUITES[suite]
    tasks = make(p, max_order) if suite == "abelian" else make(p)
    return [line for lines in pool_map(task, tasks, jobs) for line in lines]

