import pytest

from radchain.algcore import Lattice, contains, dual_lattice, index_val, make_algebra, make_form
from radchain.chain import (
    ChainNonTermination,
    PreconditionError,
    chain_invariants,
    radical_idealizer_step,
    run_chain,
    verify_symmetric_theorems,
)
from radchain.algcore import NotSymmetricError
from radchain.grouprings import group_ring, parse_group, predicted_gamma


def ring(name, p):
    G = parse_group(name)
    A, O, form = group_ring(G, p)
    return G, A, O.lattice, form


def test_step_examples():
    G, A, Lam, form = ring("C8", 2)
    assert radical_idealizer_step(Lam, form, A) == predicted_gamma(G, 2)
    G, A, Lam, form = ring("C2", 2)
    Gamma = radical_idealizer_step(Lam, form, A)
    assert radical_idealizer_step(Gamma, form, A) == Gamma
    G, A, Lam, form = ring("C4", 2)
    Delta = radical_idealizer_step(radical_idealizer_step(Lam, form, A), form, A)
    assert index_val(Lam, Delta) == 3


@pytest.mark.parametrize("name,p,length", [("C2", 2, 1), ("C4", 2, 2), ("C2xC4", 2, 4), ("C3", 3, 1), ("C9", 3, 3)])
def test_run_chain_lengths(name, p, length):
    G, A, Lam, form = ring(name, p)
    report = run_chain(Lam, form, A)
    assert report.length == length
    assert len(report.steps) == length + 1
    assert report.steps[-1].hereditary
    assert all(chain_invariants(report, A).values())


def test_step_records():
    G, A, Lam, form = ring("C4", 2)
    report = run_chain(Lam, form, A)
    assert [s.index_from_start for s in report.steps] == [0, 1, 3]
    assert [s.hereditary for s in report.steps] == [False, False, True]
    assert [s.radical_selfdual for s in report.steps] == [False, True, True]
    for a, b in zip(report.steps, report.steps[1:]):
        assert contains(b.radical, a.radical)
        assert contains(a.order_lattice, b.order_lattice.scaled(1))


def test_non_termination_guard():
    G, A, Lam, form = ring("C8", 2)
    with pytest.raises(ChainNonTermination):
        run_chain(Lam, form, A, max_steps=2)
    with pytest.raises(ValueError):
        run_chain(Lam, form, A, max_steps=0)


def test_hereditary_input_has_length_zero():
    G, A, Lam, form = ring("C3", 2)
    report = run_chain(Lam, form, A)
    assert report.length == 0
    assert verify_symmetric_theorems(report, Lam, form, A) == chain_invariants(report, A)


@pytest.mark.parametrize("name,p", [("C2", 2), ("C4", 2), ("C9", 3), ("Q8", 2), ("C3xC3", 3)])
def test_symmetric_theorems(name, p):
    G, A, Lam, form = ring(name, p)
    report = run_chain(Lam, form, A)
    checks = verify_symmetric_theorems(report, Lam, form, A)
    assert checks["step1_is_dual_of_radical"]
    assert checks["step2_dichotomy"]
    assert checks["p_step1_in_order"] and checks["center_radical_step1_in_order"]
    assert all(checks.values()), checks


def test_c9_second_radical_is_self_dual():
    G, A, Lam, form = ring("C9", 3)
    report = run_chain(Lam, form, A)
    JG = report.radical(1)
    assert dual_lattice(JG, form) == JG


def test_c2_takes_the_hereditary_branch():
    G, A, Lam, form = ring("C2", 2)
    report = run_chain(Lam, form, A)
    assert report.length == 1
    assert report.radical(1) == report.radical(0)


def test_preconditions():
    G, A, Lam, form = ring("C4", 2)
    report = run_chain(Lam, form, A)
    with pytest.raises(PreconditionError):
        verify_symmetric_theorems(report, Lam, form, A, indecomposable=False)
    # Q x Q with tau = (1, 2): the standard lattice is not self-dual
    B = make_algebra([[[1, 0], [0, 0]], [[0, 0], [0, 1]]], [1, 1], 2)
    phi = make_form(B, [1, 2])
    L = Lattice.standard(2, 2)
    rep = run_chain(L, phi, B)
    with pytest.raises(NotSymmetricError):
        verify_symmetric_theorems(rep, L, phi, B)
