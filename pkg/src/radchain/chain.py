"""The radical idealizer chain Lambda_{n+1} = Id(J(Lambda_n)) and its theorems."""

from __future__ import annotations

from dataclasses import dataclass, field

from .algcore import (
    Algebra,
    InternalCheckError,
    Lattice,
    NotSymmetricError,
    SymForm,
    center,
    contains,
    dual_lattice,
    element_mul,
    idealizer,
    index_val,
    lattice_product,
    lattice_sum,
    left_order,
    right_order,
)
from .radical import order_radical


class ChainNonTermination(RuntimeError):
    """The step guard was hit; the chain is finite, so this signals a bug."""


class PreconditionError(ValueError):
    pass


@dataclass(frozen=True)
class ChainStep:
    order_lattice: Lattice
    index_from_start: int
    radical: Lattice
    radical_selfdual: bool
    hereditary: bool


@dataclass
class ChainReport:
    steps: list[ChainStep]
    length: int
    checks: dict[str, bool] = field(default_factory=dict)

    @property
    def head(self) -> Lattice:
        return self.steps[-1].order_lattice

    def order(self, n: int) -> Lattice:
        """Lambda_n, constant from the head order on."""
        return self.steps[min(n, len(self.steps) - 1)].order_lattice

    def radical(self, n: int) -> Lattice:
        return self.steps[min(n, len(self.steps) - 1)].radical


def radical_idealizer_step(L: Lattice, form: SymForm, A: Algebra) -> Lattice:
    nxt = idealizer(order_radical(L, A), form, A)
    if not contains(nxt, L):
        raise InternalCheckError("idealizer of the radical does not contain the order")
    return nxt


def run_chain(L: Lattice, form: SymForm, A: Algebra, max_steps: int = 1000) -> ChainReport:
    """Iterate to the hereditary fixpoint, recording every order on the way."""
    if max_steps < 1:
        raise ValueError("max_steps must be at least 1")
    steps: list[ChainStep] = []
    cur = L
    for n in range(max_steps + 1):
        J = order_radical(cur, A)
        nxt = idealizer(J, form, A)
        if not contains(nxt, cur):
            raise InternalCheckError("idealizer of the radical does not contain the order")
        hereditary = nxt == cur
        steps.append(ChainStep(cur, index_val(L, cur), J, dual_lattice(J, form) == J, hereditary))
        if hereditary:
            return ChainReport(steps, n)
        cur = nxt
    raise ChainNonTermination(f"no fixpoint after {max_steps} steps")


def chain_invariants(report: ChainReport, A: Algebra) -> dict[str, bool]:
    """Checks that hold for every chain, symmetric or not."""
    st = report.steps
    pairs = list(zip(st, st[1:]))
    return {
        "monotone": all(
            contains(b.order_lattice, a.order_lattice) and b.index_from_start > a.index_from_start for a, b in pairs
        ),
        "radical_covering": all(contains(b.radical, a.radical) for a, b in pairs),
        "p_step_contained": all(contains(a.order_lattice, b.order_lattice.scaled(1)) for a, b in pairs),
        "fixpoint_sound": st[-1].hereditary and not any(s.hereditary for s in st[:-1]),
        "length_consistent": report.length == len(st) - 1,
    }


def center_radical_generators(L: Lattice, A: Algebra) -> list[list]:
    """Z_(p)-generators of J(Z(L)) in ambient coordinates."""
    Z = center(L, A)
    JZ = order_radical(Lattice.standard(Z.rank, L.p), Z.algebra)
    return [Z.to_ambient(row) for row in JZ.basis]


def _ideal_times_in(gens, Gamma: Lattice, target: Lattice, A: Algebra) -> bool:
    return all(element_mul(z, g, A) in target for z in gens for g in Gamma.basis)


def verify_symmetric_theorems(
    report: ChainReport, L: Lattice, form: SymForm, A: Algebra, indecomposable: bool = True
) -> dict[str, bool]:
    """Exact lattice checks of the first two steps of a symmetric order's chain.

    Lambda must be self-dual and indecomposable; the latter cannot be decided
    here and is taken from the caller.  For a hereditary Lambda only the
    generic chain invariants are returned.
    """
    if dual_lattice(L, form) != L:
        raise NotSymmetricError("order is not self-dual under the form")
    if not indecomposable:
        raise PreconditionError("the symmetric-order theorems need an indecomposable order")
    checks = chain_invariants(report, A)
    if report.length == 0:
        return checks
    J = report.radical(0)
    Gamma, JG = report.order(1), report.radical(1)
    Delta = report.order(2)

    checks["step1_is_dual_of_radical"] = Gamma == dual_lattice(J, form)
    checks["step1_sided_orders_agree"] = left_order(J, form, A) == Gamma == right_order(J, form, A)
    checks["step2_sided_orders_agree"] = left_order(JG, form, A) == Delta == right_order(JG, form, A)

    gamma_hereditary = report.length == 1
    if gamma_hereditary:
        # Gamma hereditary: the radical does not move and Gamma is the head order
        checks["step2_dichotomy"] = JG == J and Delta == Gamma
    else:
        checks["step2_dichotomy"] = (
            Delta == dual_lattice(lattice_product(JG, JG, A), form)
            and Gamma == lattice_sum(JG, L)
            and JG == dual_lattice(JG, form)
            and index_val(JG, Gamma) == index_val(J, L)
        )

    checks["p_step1_in_order"] = contains(L, Gamma.scaled(1))
    gens = center_radical_generators(L, A)
    checks["center_radical_step1_in_order"] = _ideal_times_in(gens, Gamma, L, A)
    return checks
