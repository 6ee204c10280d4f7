from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from radchain.algcore import Lattice, contains, idealizer, index_val, lattice_from_generators, lattice_product
from radchain.exactla import fp_rref
from radchain.grouprings import group_ring, parse_group
from radchain.radical import (
    FpAlgebra,
    brute_force_radical,
    fp_algebra_from,
    fp_radical,
    is_hereditary,
    nilpotency_power_in,
    order_radical,
    order_structure,
)
from radchain.randalg import random_small_algebra, truncated_polynomial_algebra
from radchain.suites import SMALL_GROUPS

F = Fraction


def fp_group_algebra(name, p):
    A, _, _ = group_ring(parse_group(name), p)
    return fp_algebra_from(A)


def test_fp_radical_examples():
    assert fp_radical(fp_group_algebra("C2", 2)).rows.tolist() == [[1, 1]]
    assert len(fp_radical(fp_group_algebra("C2", 3))) == 0
    assert len(fp_radical(fp_group_algebra("C2xC2", 2))) == 3


def test_brute_force_examples():
    assert brute_force_radical(fp_group_algebra("C2", 2)).rows.tolist() == [[1, 1]]
    J = brute_force_radical(fp_group_algebra("C4", 2))
    assert len(J) == 3
    # augmentation ideal: every row has coefficient sum 0
    assert not (J.rows.sum(axis=1) % 2).any()
    assert len(brute_force_radical(fp_group_algebra("C3", 2))) == 0


def test_brute_force_guard():
    with pytest.raises(ValueError):
        brute_force_radical(fp_group_algebra("C2xC2xC2xC2xC2", 2))


@pytest.mark.parametrize("p", [2, 3])
@pytest.mark.parametrize("name", SMALL_GROUPS)
def test_layered_trace_matches_brute_force_on_group_algebras(name, p):
    if parse_group(name).order > {2: 8, 3: 9}[p]:
        pytest.skip("outside brute-force range")
    A = fp_group_algebra(name, p)
    assert np.array_equal(fp_radical(A).rows, brute_force_radical(A).rows)


@given(st.integers(0, 2**32 - 1), st.sampled_from([2, 3]))
@settings(max_examples=50)
def test_layered_trace_matches_brute_force_on_random_algebras(seed, p):
    A = random_small_algebra(np.random.default_rng(seed), p, 12 if p == 2 else 7)
    assert np.array_equal(fp_radical(A).rows, brute_force_radical(A).rows)


def test_truncated_polynomials():
    # F_2[x]/(x^4): radical (x)
    A = truncated_polynomial_algebra([0, 0, 0, 0], 2)
    assert fp_radical(A).rows.tolist() == [[0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]
    # F_3[x]/(x^2 + 1) is the field with 9 elements
    assert len(fp_radical(truncated_polynomial_algebra([1, 0], 3))) == 0


def test_plain_trace_form_is_not_enough():
    # in F_2[C2 x C2] every trace Tr(xy) vanishes, so the plain kernel is everything
    A = fp_group_algebra("C2xC2", 2)
    reps = np.einsum("ri,ijk->rjk", np.eye(4, dtype=np.int64), A.constants)
    assert not (np.trace(reps @ reps, axis1=1, axis2=2) % 2).any()
    assert len(fp_radical(A)) == 3


def test_order_radical_examples():
    for name, p in [("C4", 2), ("Q8", 2), ("C9", 3)]:
        G = parse_group(name)
        A, O, form = group_ring(G, p)
        m = G.order
        e = G.identity
        gens = [[p * int(i == j) for j in range(m)] for i in range(m)]
        gens += [[int(j == g) - int(j == e) for j in range(m)] for g in range(m)]
        J = order_radical(O.lattice, A)
        assert J == lattice_from_generators(gens, p)
        assert index_val(J, O.lattice) == 1
        if m >= p * p:
            Gamma = idealizer(J, form, A)
            JG = order_radical(Gamma, A)
            assert JG == lattice_from_generators(J.basis + [[F(1, p)] * m], p)


def test_order_radical_of_split_maximal_order():
    # Z_3[C2] = Z_3 + Z_3 is maximal for odd p
    A, O, _ = group_ring(parse_group("C2"), 3)
    assert order_radical(O.lattice, A) == O.lattice.scaled(1)


def test_order_radical_properties():
    for name, p in [("C2xC4", 2), ("D8", 2), ("C3xC3", 3), ("D6", 3), ("C6", 2)]:
        A, O, form = group_ring(parse_group(name), p)
        L = O.lattice
        J = order_radical(L, A)
        assert contains(L, J) and contains(J, L.scaled(1))
        assert contains(J, lattice_product(J, L, A)) and contains(J, lattice_product(L, J, A))
        assert nilpotency_power_in(J, L.scaled(1), A) <= 2 * A.dim
        # J / pL is exactly the radical of L / pL
        Fp = order_structure(L, A)
        coords = [[int(x) % p for x in L.coordinates(v)] for v in J.basis]
        rref, _ = fp_rref(np.array(coords), p)
        assert np.array_equal(rref, fp_radical(Fp).rows)


def test_order_structure_is_in_lattice_basis():
    A, O, form = group_ring(parse_group("C4"), 2)
    Gamma = idealizer(order_radical(O.lattice, A), form, A)
    S = order_structure(Gamma, A)
    assert S.dim == 4
    # structure constants of Gamma/2Gamma computed by hand from the basis products
    for i, a in enumerate(Gamma.basis):
        for j, b in enumerate(Gamma.basis):
            prod = A.mul(a, b)
            c = [int(x) % 2 for x in Gamma.coordinates(prod)]
            assert S.constants[i, j].tolist() == c


def test_is_hereditary_examples():
    for p in (2, 3):
        A, O, form = group_ring(parse_group(f"C{p}"), p)
        assert not is_hereditary(O.lattice, form, A)
        Gamma = idealizer(order_radical(O.lattice, A), form, A)
        assert is_hereditary(Gamma, form, A)
    A, O, form = group_ring(parse_group("C4"), 2)
    assert not is_hereditary(O.lattice, form, A)
    A, O, form = group_ring(parse_group("C1"), 5)
    assert is_hereditary(O.lattice, form, A)


def test_fp_algebra_mul():
    A = fp_group_algebra("C3", 3)
    g = np.array([0, 1, 0])
    assert A.mul(g, g).tolist() == [0, 0, 1]
    assert A.mul(A.unit, g).tolist() == g.tolist()
