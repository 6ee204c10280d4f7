"""Random small F_p-algebras and lattices for property checks."""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .algcore import Lattice
from .exactla import fp_coordinates, fp_rref
from .radical import FpAlgebra


def matrix_subalgebra(gens, p: int, max_dim: int | None = None) -> FpAlgebra | None:
    """The unital subalgebra of M_k(F_p) generated by the given matrices.

    Returns None when the closure exceeds ``max_dim``.
    """
    gens = [np.asarray(g, dtype=np.int64) % p for g in gens]
    k = gens[0].shape[0]
    flat = [np.eye(k, dtype=np.int64).ravel()]
    basis, piv = fp_rref(np.array(flat), p)
    frontier = list(flat)
    while frontier:
        new = []
        for v in frontier:
            for g in gens:
                w = (v.reshape(k, k) @ g % p).ravel()
                cand, cpiv = fp_rref(np.vstack([basis, w]), p)
                if len(cand) > len(basis):
                    basis, piv = cand, cpiv
                    new.append(w)
                    if max_dim is not None and len(basis) > max_dim:
                        return None
        frontier = new
    m = len(basis)
    mats = basis.reshape(m, k, k)
    prods = np.einsum("iab,jbc->ijac", mats, mats).reshape(m * m, k * k) % p
    C = fp_coordinates(basis, piv, prods, p).reshape(m, m, m)
    unit = fp_coordinates(basis, piv, np.eye(k, dtype=np.int64).reshape(1, -1), p)[0]
    return FpAlgebra(p, C, unit)


def random_matrix_algebra(rng: np.random.Generator, p: int, max_dim: int) -> FpAlgebra:
    """Subalgebra generated by random block upper triangular matrices.

    Sparse strictly upper parts make non-semisimple results common.
    """
    while True:
        k = int(rng.integers(2, 5))
        gens = []
        for _ in range(int(rng.integers(1, 3))):
            M = rng.integers(0, p, size=(k, k))
            cut = int(rng.integers(0, k + 1))
            M[cut:, :cut] = 0
            M[np.tril_indices(k, -1)] *= rng.integers(0, 2, size=len(np.tril_indices(k, -1)[0]))
            gens.append(M)
        A = matrix_subalgebra(gens, p, max_dim)
        if A is not None:
            return A


def truncated_polynomial_algebra(coeffs, p: int) -> FpAlgebra:
    """F_p[x]/(f) for monic f = x^d + coeffs[d-1] x^(d-1) + ... + coeffs[0]."""
    d = len(coeffs)
    C = np.zeros((d, d, d), dtype=np.int64)
    f = np.asarray(coeffs, dtype=np.int64) % p
    # x^k reduced mod f for k < 2d - 1
    powers = []
    v = np.zeros(d, dtype=np.int64)
    v[0] = 1
    for _ in range(2 * d - 1):
        powers.append(v.copy())
        top = v[-1]
        v = np.roll(v, 1)
        v[0] = 0
        v = (v - top * f) % p
    for i in range(d):
        for j in range(d):
            C[i, j] = powers[i + j]
    unit = np.zeros(d, dtype=np.int64)
    unit[0] = 1
    return FpAlgebra(p, C, unit)


def random_small_algebra(rng: np.random.Generator, p: int, max_dim: int) -> FpAlgebra:
    if rng.random() < 0.3:
        d = int(rng.integers(1, max_dim + 1))
        return truncated_polynomial_algebra(rng.integers(0, p, size=d), p)
    return random_matrix_algebra(rng, p, max_dim)


def random_lattice(rng: np.random.Generator, n: int, p: int, spread: int = 2, extra: int = 2) -> Lattice:
    """Full lattice from random generators with denominators and factors up to p^spread."""
    while True:
        rows = []
        for _ in range(n + int(rng.integers(0, extra + 1))):
            rows.append(
                [
                    Fraction(int(rng.integers(-p**2, p**2 + 1)) * p ** int(rng.integers(0, spread + 1)),
                             p ** int(rng.integers(0, spread + 1)))
                    for _ in range(n)
                ]
            )
        try:
            return Lattice.from_rows(rows, p)
        except ValueError:
            continue
