"""Jacobson radicals of F_p-algebras and of Z_(p)-orders.

The radical of an order L is the preimage of the radical of L/pL.  Over F_p
the radical is computed with the layered trace method for prime fields
(Cohen, Ivanyos and Wales): starting from I_{-1} = A, the ideal I_i is the
kernel inside I_{i-1} of the functionals a -> g_i(a*b), where g_i(a) is
Tr(M^(p^i)) / p^i mod p for an integer lift M of the regular representation
of a.  After floor(log_p dim) + 1 layers the result is the radical.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .algcore import (
    Algebra,
    InternalCheckError,
    Lattice,
    SymForm,
    idealizer,
)
from .exactla import FpMat, all_fp_vectors, fp_kernel, fp_rref, fp_span_contains, residue

BRUTE_FORCE_LIMIT = 1 << 16


@dataclass(frozen=True, eq=False)
class FpAlgebra:
    """Finite-dimensional associative unital algebra over F_p."""

    p: int
    constants: np.ndarray  # (m, m, m), entries in [0, p)
    unit: np.ndarray

    def __post_init__(self):
        C = np.asarray(self.constants, dtype=np.int64) % self.p
        u = np.asarray(self.unit, dtype=np.int64) % self.p
        C.setflags(write=False)
        u.setflags(write=False)
        object.__setattr__(self, "constants", C)
        object.__setattr__(self, "unit", u)

    @property
    def dim(self) -> int:
        return self.constants.shape[0]

    def mul(self, x, y) -> np.ndarray:
        return self.products([x], [y])[0]

    def products(self, X: np.ndarray, Y: np.ndarray) -> np.ndarray:
        """All products x*y for rows x of X and y of Y, shape (len X * len Y, m)."""
        m = self.dim
        X = np.asarray(X, dtype=np.int64).reshape(-1, m)
        Y = np.asarray(Y, dtype=np.int64).reshape(-1, m)
        T = (X @ self.constants.reshape(m, m * m)).reshape(len(X), m, m) % self.p  # x*a_j
        P = np.matmul(Y[None, :, :], T) % self.p  # (x, y, k)
        return P.reshape(-1, m)


def fp_algebra_from(A: Algebra) -> FpAlgebra:
    """Reduce a p-integral algebra modulo p in its given basis."""
    return FpAlgebra(A.p, A.constants_mod(A.p).astype(np.int64), _reduce_vec(A.unit, A.p))


def _reduce_vec(v, p: int) -> np.ndarray:
    return np.array([residue(x, p, p) for x in v], dtype=np.int64)


def order_structure(L: Lattice, A: Algebra) -> FpAlgebra:
    """L/pL as an F_p-algebra in the basis of L."""
    p, n = L.p, L.n
    K, X = L._inverse
    t = L.scale + K  # structure constants in L's basis are p^-t * (h_i h_j X)
    q = p ** (max(t, 0) + 1)
    C = A.constants_mod(q).astype(object)
    H = np.array(L.hnf, dtype=object) % q
    R = np.tensordot(H, C, axes=([1], [1])) % q  # (j, a, k)
    P = np.matmul(H[None, :, :], R) % q  # (j, i, k) = h_i * h_j
    Z = np.matmul(P, np.array(X, dtype=object) % q) % q
    if t >= 0:
        pt = p**t
        if (Z % pt != 0).any():
            raise InternalCheckError("lattice is not closed under multiplication")
        Z = (Z // pt) % p
    else:
        Z = (Z * p ** (-t)) % p
    consts = np.transpose(Z, (1, 0, 2)).astype(np.int64)  # (i, j, k)
    return FpAlgebra(p, consts, _reduce_vec(L.coordinates(A.unit), p))


# ---------------------------------------------------------------------------
# Radical over F_p


def _matrix_power_mod(M: np.ndarray, e: int, mod: int) -> np.ndarray:
    """Batched M**e mod `mod` for a stack of square integer matrices."""
    n = M.shape[-1]
    result = np.broadcast_to(np.eye(n, dtype=np.int64), M.shape).copy()
    base = M % mod
    while e:
        if e & 1:
            result = np.matmul(result, base) % mod
        e >>= 1
        if e:
            base = np.matmul(base, base) % mod
    return result


def _log_floor(m: int, p: int) -> int:
    l, x = 0, p
    while x <= m:
        l += 1
        x *= p
    return l


def _trace_layers(A: FpAlgebra) -> np.ndarray:
    """Radical basis (RREF rows) by the layered trace method, no checks."""
    p, m = A.p, A.dim
    C = A.constants
    basis, pivots = np.eye(m, dtype=np.int64), list(range(m))
    for i in range(_log_floor(m, p) + 1):
        r = len(basis)
        if r == 0:
            break
        mod = p ** (i + 1)
        # regular representation y -> x*y of each basis element, lifted to Z
        reps = np.einsum("ri,ijk->rjk", basis, C) % mod
        tr = np.trace(_matrix_power_mod(reps, p**i, mod), axis1=1, axis2=2) % mod
        if (tr % p**i).any():
            raise InternalCheckError("trace layer not divisible by p^i")
        w = (tr // p**i) % p
        # g_i(a_k * b_j) through coordinates of a_k * b_j in the current ideal
        prods = A.products(basis, np.eye(m, dtype=np.int64)).reshape(r, m, m)
        coords = prods[:, :, pivots] % p  # (k, j, t)
        T = (coords @ w) % p  # (k, j)
        kern = fp_kernel(FpMat(p, T.T))
        new = (kern.rows @ basis) % p
        basis, pivots = fp_rref(new, p) if len(new) else (np.zeros((0, m), dtype=np.int64), [])
    return basis.reshape(-1, m)


def _quotient(A: FpAlgebra, J: np.ndarray, pivots) -> FpAlgebra:
    p, m = A.p, A.dim
    free = [c for c in range(m) if c not in pivots]

    def reduce(v):
        v = np.asarray(v, dtype=np.int64) % p
        if len(pivots):
            v = (v - v[..., list(pivots)] @ J) % p
        return v[..., free]

    C = A.constants[np.ix_(free, free)]  # (f, g, k)
    Q = reduce(C)
    return FpAlgebra(p, Q, reduce(A.unit))


def _subspace_product(A: FpAlgebra, X: np.ndarray, Y: np.ndarray) -> np.ndarray:
    if len(X) == 0 or len(Y) == 0:
        return np.zeros((0, A.dim), dtype=np.int64)
    return fp_rref(A.products(X, Y), A.p)[0]


def fp_radical(A: FpAlgebra, check: bool = True) -> FpMat:
    """Jacobson radical of an F_p-algebra as RREF basis rows.

    With ``check`` the result is verified to be a two-sided nilpotent ideal
    whose quotient has zero radical.
    """
    p, m = A.p, A.dim
    J = _trace_layers(A)
    if check:
        rref, piv = fp_rref(J, p) if len(J) else (J, [])
        eye = np.eye(m, dtype=np.int64)
        if len(J):
            if not fp_span_contains(rref, piv, A.products(J, eye), p):
                raise InternalCheckError("radical is not a right ideal")
            if not fp_span_contains(rref, piv, A.products(eye, J), p):
                raise InternalCheckError("radical is not a left ideal")
        S = rref
        for _ in range(m.bit_length() + 1):
            if len(S) == 0:
                break
            S = _subspace_product(A, S, S)
        if len(S):
            raise InternalCheckError("radical is not nilpotent")
        if len(J) < m:
            Q = _quotient(A, rref, piv)
            if len(_trace_layers(Q)):
                raise InternalCheckError("quotient by the radical is not semisimple")
    return FpMat(p, J.reshape(-1, m))


@lru_cache(maxsize=None)
def _all_vectors(dim: int, p: int) -> np.ndarray:
    return all_fp_vectors(dim, p)


def brute_force_radical(A: FpAlgebra) -> FpMat:
    """Radical by exhaustive enumeration of the algebra.

    x is in the radical iff the right ideal xA is nil, i.e. every element of
    xA is nilpotent (in finite dimension a nil one-sided ideal is nilpotent,
    so this is the same as x generating a nilpotent ideal).  Every element of
    every xA is enumerated; no linear algebra beyond spans is used.
    """
    p, m = A.p, A.dim
    if p**m > BRUTE_FORCE_LIMIT:
        raise ValueError(f"brute force limited to p^dim <= {BRUTE_FORCE_LIMIT}")
    E = _all_vectors(m, p)
    weights = p ** np.arange(m - 1, -1, -1, dtype=np.int64)
    C2 = A.constants.reshape(m, m * m)

    def square(X):
        T = (X @ C2).reshape(len(X), m, m) % p
        return np.einsum("ej,ejk->ek", X, T) % p

    X = E.copy()
    e = 1
    while e < m:
        X = square(X)
        e *= 2
    nil = ~X.any(axis=1)
    members = np.zeros(len(E), dtype=bool)
    members[0] = True
    for idx in np.nonzero(nil)[0]:
        x = E[idx]
        nz = np.nonzero(x)[0]
        if len(nz) == 0 or x[nz[0]] != 1:
            continue  # scalar multiples share the verdict with the normalized vector
        xA = (x @ C2).reshape(m, m) % p  # row j = x * a_j
        rref, _ = fp_rref(xA, p)
        coeffs = _all_vectors(len(rref), p)
        elems = (coeffs @ rref) % p
        if nil[elems @ weights].all():
            for c in range(1, p):
                members[((c * x) % p) @ weights] = True
    found = E[members]
    basis, _ = fp_rref(found, p) if len(found) else (found, [])
    if p ** len(basis) != len(found):
        raise InternalCheckError("enumerated radical is not a subspace")
    return FpMat(p, basis.reshape(-1, m))


# ---------------------------------------------------------------------------
# Orders


def order_radical(L: Lattice, A: Algebra, check: bool = True) -> Lattice:
    """J(L): preimage in L of the radical of L/pL."""
    p = L.p
    Fp = order_structure(L, A)
    rad = fp_radical(Fp, check=check)
    H = [list(row) for row in L.hnf]
    gens = [[p * v for v in row] for row in H]
    for c in rad.rows:
        gens.append([sum(int(c[i]) * H[i][k] for i in range(L.n) if c[i]) for k in range(L.n)])
    return Lattice._from_int(gens, p, L.scale, L.exponent + 1)


def is_hereditary(L: Lattice, form: SymForm, A: Algebra) -> bool:
    return idealizer(order_radical(L, A), form, A) == L


def radical_quotient_dim(L: Lattice, J: Lattice) -> int:
    """dim_F_p of L/J (equals the index valuation since pL <= J)."""
    return J.det_val - L.det_val


def nilpotency_power_in(J: Lattice, target: Lattice, A: Algebra, max_steps: int | None = None) -> int | None:
    """Smallest 2^k with J^(2^k) inside target, by repeated squaring."""
    from .algcore import contains, lattice_product

    S, e = J, 1
    steps = max_steps if max_steps is not None else J.n.bit_length() + 1
    for _ in range(steps + 1):
        if contains(target, S):
            return e
        S = lattice_product(S, S, A)
        e *= 2
    return None
