"""Algebras by structure constants and full Z_(p)-lattices inside them.

A :class:`Lattice` is stored canonically as ``p^-scale * rowspan(hnf)``
where ``hnf`` is the integer p-local Hermite form produced by
:func:`radchain.exactla.hnf_mod`.  Two lattices are equal exactly when the
dataclass fields agree.

Orders, duals, idealizers and conductors are built from two primitives:
products of lattices (all pairwise products of basis vectors) and duals
with respect to a symmetric associative form.  The ``*_direct`` functions
solve the defining linear conditions instead and never touch the form;
they exist so the dual-based formulas can be checked against them.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import gcd
from typing import NamedTuple, Sequence

import numpy as np

from .exactla import (
    DegenerateLatticeError,
    _ival,
    as_fraction_matrix,
    check_prime,
    choose_dtype,
    full_rank_exponent_bound,
    hnf_mod,
    pval,
    rat_inverse,
    rat_kernel,
    residue,
    scaled_integer_rows,
    triangular_inverse_scaled,
    _independent_rows,
    clear_denominators,
)


class AlgebraError(ValueError):
    pass


class AssociativityError(AlgebraError):
    pass


class UnitError(AlgebraError):
    pass


class NonIntegralConstantsError(AlgebraError):
    pass


class FormError(AlgebraError):
    pass


class NotContainedError(ValueError):
    pass


class NotSymmetricError(ValueError):
    pass


class InternalCheckError(AssertionError):
    """A computed object failed a structural postcondition (arithmetic bug)."""


Coords = tuple  # tuple[Fraction, ...]


def _mod_array(M, q: int, p: int, dtype) -> np.ndarray:
    """Residues mod q of a nested array of p-integral rationals."""
    arr = np.asarray(M, dtype=object)
    flat = [residue(v, q, p) for v in arr.ravel()]
    return np.array(flat, dtype=object).reshape(arr.shape).astype(dtype)


def _int_to_dtype(M, q: int, dtype) -> np.ndarray:
    arr = np.array(M, dtype=object) % q
    return arr.astype(dtype) if dtype is np.int64 else arr


# ---------------------------------------------------------------------------
# Algebras


@dataclass(frozen=True, eq=False)
class Algebra:
    """Associative unital algebra over Q given by structure constants.

    ``constants[i][j][k]`` is the coefficient of a_k in a_i * a_j.
    """

    dim: int
    constants: tuple
    unit: Coords
    p: int
    _mod_cache: dict = field(default_factory=dict, repr=False, compare=False)

    def constants_mod(self, q: int) -> np.ndarray:
        key = q
        if key not in self._mod_cache:
            dtype = choose_dtype(q, self.dim)
            self._mod_cache[key] = _mod_array(self.constants, q, self.p, dtype)
        return self._mod_cache[key]

    @cached_property
    def integer_constants(self) -> tuple[int, np.ndarray]:
        """(d, C) with constants = C / d; d is prime to p, C an object array of ints."""
        d = 1
        for plane in self.constants:
            for row in plane:
                for v in row:
                    d = d * v.denominator // gcd(d, v.denominator)
        C = np.array([[[int(v * d) for v in row] for row in plane] for plane in self.constants], dtype=object)
        return d, C

    @cached_property
    def unit_denominator_val(self) -> int:
        """Least c >= 0 with p^c * unit p-integral."""
        return max([0] + [-pval(u, self.p) for u in self.unit if u != 0])

    def mul(self, a, b) -> Coords:
        return element_mul(a, b, self)

    def right_mult_matrix(self, b) -> list[list[Fraction]]:
        """R with x*b = x @ R."""
        n = self.dim
        b = [Fraction(v) for v in b]
        C = self.constants
        return [
            [sum((b[j] * C[a][j][k] for j in range(n) if b[j]), Fraction(0)) for k in range(n)]
            for a in range(n)
        ]

    def left_mult_matrix(self, b) -> list[list[Fraction]]:
        """L with b*x = x @ L."""
        n = self.dim
        b = [Fraction(v) for v in b]
        C = self.constants
        return [
            [sum((b[i] * C[i][a][k] for i in range(n) if b[i]), Fraction(0)) for k in range(n)]
            for a in range(n)
        ]

    @cached_property
    def center_basis(self) -> list[list[Fraction]]:
        """Basis of Z(A) over Q."""
        n = self.dim
        C = self.constants
        # commutator conditions x a_i - a_i x = 0, one column block per i
        cols = []
        for i in range(n):
            for k in range(n):
                cols.append([C[a][i][k] - C[i][a][k] for a in range(n)])
        return _left_kernel_of_columns(cols, n)


def _left_kernel_of_columns(cols: list[list[Fraction]], n: int) -> list[list[Fraction]]:
    """Basis of {x in Q^n : x . c = 0 for every column c}."""
    nonzero = [c for c in cols if any(c)]
    if not nonzero:
        return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    # a row basis found modulo a large prime is independent over Q; the
    # kernel is verified against every column before it is trusted
    chosen = _independent_rows(clear_denominators(nonzero), n)
    kernel = rat_kernel([nonzero[i] for i in chosen])
    if all(sum((a * b for a, b in zip(x, c)), Fraction(0)) == 0 for x in kernel for c in nonzero):
        return kernel
    return rat_kernel(nonzero)


def make_algebra(constants, unit, p: int) -> Algebra:
    """Validate structure constants and return an :class:`Algebra`."""
    check_prime(p)
    C = [[[Fraction(v) for v in row_k] for row_k in row_j] for row_j in constants]
    n = len(C)
    if n < 1 or any(len(r) != n or any(len(rk) != n for rk in r) for r in C):
        raise AlgebraError("structure constants must form an n x n x n array")
    u = tuple(Fraction(v) for v in unit)
    if len(u) != n:
        raise AlgebraError("unit has wrong length")
    for r in C:
        for rk in r:
            for v in rk:
                if v.denominator % p == 0:
                    raise NonIntegralConstantsError(f"constant {v} has denominator divisible by {p}")
    # unit laws: u*a_j = a_j = a_j*u
    for j in range(n):
        for k in range(n):
            want = Fraction(int(j == k))
            left = sum((u[i] * C[i][j][k] for i in range(n) if u[i]), Fraction(0))
            right = sum((u[i] * C[j][i][k] for i in range(n) if u[i]), Fraction(0))
            if left != want or right != want:
                raise UnitError("unit law fails")
    _check_associative(C, n)
    frozen = tuple(tuple(tuple(rk) for rk in r) for r in C)
    return Algebra(n, frozen, u, p)


def _check_associative(C, n: int) -> None:
    den = 1
    for r in C:
        for rk in r:
            for v in rk:
                den = den * v.denominator // gcd(den, v.denominator)
    ints = [[[int(v * den) for v in rk] for rk in r] for r in C]
    biggest = max(abs(v) for r in ints for rk in r for v in rk)
    dtype = np.int64 if n * biggest * biggest < (1 << 62) else object
    T = np.array(ints, dtype=object).astype(dtype)
    # (a_i a_j) a_k : sum_l C[i,j,l] C[l,k,m]
    lhs = T.reshape(n * n, n) @ T.reshape(n, n * n)
    # a_i (a_j a_k) : sum_l C[j,k,l] C[i,l,m]
    jk = T.reshape(n * n, n)  # (j,k) x l
    il = np.transpose(T, (1, 0, 2)).reshape(n, n * n)  # l x (i,m)
    rhs = (jk @ il).reshape(n, n, n, n)  # j,k,i,m
    rhs = np.transpose(rhs, (2, 0, 1, 3)).reshape(n * n, n * n)
    if not np.array_equal(lhs, rhs):
        raise AssociativityError("structure constants are not associative")


def element_mul(a, b, A: Algebra) -> Coords:
    n = A.dim
    C = A.constants
    out = [Fraction(0)] * n
    for i in range(n):
        ai = Fraction(a[i])
        if not ai:
            continue
        for j in range(n):
            bj = Fraction(b[j])
            if not bj:
                continue
            f = ai * bj
            row = C[i][j]
            for k in range(n):
                if row[k]:
                    out[k] += f * row[k]
    return tuple(out)


# ---------------------------------------------------------------------------
# Symmetric forms


@dataclass(frozen=True, eq=False)
class SymForm:
    """phi(x, y) = tau(x*y) for a linear functional tau."""

    tau: Coords
    gram: tuple
    p: int

    @cached_property
    def gram_inverse(self) -> list[list[Fraction]]:
        return rat_inverse(self.gram)

    @cached_property
    def _dual_data(self) -> tuple[int, list[list[int]], int]:
        """(g, Y, K_Y): gram^-1 = p^-g * Y (Y p-integral), exponent of rowspan(Y)."""
        s, Y = scaled_integer_rows(self.gram_inverse, self.p)
        K_Y = Lattice.from_rows(self.gram_inverse, self.p).exponent
        return s, Y, K_Y

    def __call__(self, x, y) -> Fraction:
        n = len(self.tau)
        return sum(
            (Fraction(x[i]) * self.gram[i][j] * Fraction(y[j]) for i in range(n) for j in range(n) if x[i] and y[j]),
            Fraction(0),
        )


def make_form(A: Algebra, tau) -> SymForm:
    n = A.dim
    t = [Fraction(v) for v in tau]
    if len(t) != n:
        raise FormError("tau has wrong length")
    C = A.constants
    gram = [[sum((C[i][j][k] * t[k] for k in range(n) if C[i][j][k]), Fraction(0)) for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(i):
            if gram[i][j] != gram[j][i]:
                raise FormError("tau(ab) != tau(ba): form is not symmetric")
    from .exactla import rat_det

    if rat_det(gram) == 0:
        raise FormError("form is degenerate")
    return SymForm(tuple(t), tuple(tuple(r) for r in gram), A.p)


# ---------------------------------------------------------------------------
# Lattices


@dataclass(frozen=True)
class Lattice:
    """Full Z_(p)-lattice ``p^-scale * rowspan(hnf)`` in canonical form."""

    p: int
    scale: int
    hnf: tuple

    @property
    def n(self) -> int:
        return len(self.hnf)

    @cached_property
    def exps(self) -> tuple[int, ...]:
        return tuple(_ival(self.hnf[i][i], self.p) for i in range(self.n))

    @cached_property
    def basis(self) -> list[list[Fraction]]:
        d = Fraction(self.p) ** self.scale
        return [[Fraction(v) / d for v in row] for row in self.hnf]

    @property
    def det_val(self) -> int:
        """v_p of the determinant of the basis matrix."""
        return sum(self.exps) - self.n * self.scale

    @cached_property
    def _inverse(self) -> tuple[int, list[list[int]]]:
        return triangular_inverse_scaled(self.hnf, self.p)

    @property
    def exponent(self) -> int:
        """Least K with p^K Z^n inside rowspan(hnf)."""
        return self._inverse[0]

    # -- construction -----------------------------------------------------

    @classmethod
    def standard(cls, n: int, p: int) -> "Lattice":
        check_prime(p)
        return cls(p, 0, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @classmethod
    def from_rows(cls, rows, p: int) -> "Lattice":
        """Canonical lattice spanned by arbitrary rational generators."""
        check_prime(p)
        rows = as_fraction_matrix(rows)
        if not rows or not rows[0]:
            raise DegenerateLatticeError("no generators")
        s, ints = scaled_integer_rows(rows, p)
        ints = [r for r in ints if any(r)]
        if not ints:
            raise DegenerateLatticeError("all generators vanish")
        K = full_rank_exponent_bound(ints, p)
        return cls._from_int(ints, p, s, K)

    @classmethod
    def _from_int(cls, int_rows, p: int, scale: int, K: int, n: int | None = None) -> "Lattice":
        """Lattice p^-scale * span(int_rows); p^K Z^n must lie in the span."""
        exps, H = hnf_mod(int_rows, p, K, n)
        while all(e > 0 for e in exps) and all(v % p == 0 for row in H for v in row):
            H = [[v // p for v in row] for row in H]
            exps = [e - 1 for e in exps]
            scale -= 1
        return cls(p, scale, tuple(tuple(row) for row in H))

    def scaled(self, k: int) -> "Lattice":
        """p^k * L."""
        return Lattice(self.p, self.scale - k, self.hnf)

    # -- membership -------------------------------------------------------

    def coordinates(self, x) -> list[Fraction]:
        """y with x = y * basis."""
        K, X = self._inverse
        f = Fraction(self.p) ** (self.scale - K)
        xs = [Fraction(v) for v in x]
        n = self.n
        return [sum((xs[i] * X[i][j] for i in range(j + 1) if xs[i] and X[i][j]), Fraction(0)) * f for j in range(n)]

    def __contains__(self, x) -> bool:
        return all(y.denominator % self.p != 0 for y in self.coordinates(x))

    def issuperset(self, other: "Lattice") -> bool:
        return all(row in self for row in other.basis)


def member(x, L: Lattice) -> bool:
    return x in L


def contains(L1: Lattice, L2: Lattice) -> bool:
    """True when L2 is a sublattice of L1."""
    return L1.issuperset(L2)


def lattice_eq(L1: Lattice, L2: Lattice) -> bool:
    return L1 == L2


def lattice_from_generators(rows, p: int) -> Lattice:
    return Lattice.from_rows(rows, p)


def lattice_sum(L1: Lattice, L2: Lattice) -> Lattice:
    p = L1.p
    s = max(L1.scale, L2.scale)
    r1 = [[v * p ** (s - L1.scale) for v in row] for row in L1.hnf]
    r2 = [[v * p ** (s - L2.scale) for v in row] for row in L2.hnf]
    K = min(L1.exponent + s - L1.scale, L2.exponent + s - L2.scale)
    return Lattice._from_int(r1 + r2, p, s, K)


def lattice_product(L1: Lattice, L2: Lattice, A: Algebra) -> Lattice:
    """Lattice spanned by all products x*y, x in L1, y in L2."""
    p = L1.p
    n = A.dim
    K = L1.exponent + L2.exponent + A.unit_denominator_val
    q = p**K
    dtype = choose_dtype(q, n)
    C = A.constants_mod(q)
    H1 = _int_to_dtype(L1.hnf, q, dtype)
    H2 = _int_to_dtype(L2.hnf, q, dtype)
    # R[j] = right multiplication by the j-th basis vector of L2
    R = np.tensordot(H2, C, axes=([1], [1])) % q  # (j, a, k)
    P = np.matmul(H1[None, :, :], R) % q  # (j, i, k)
    return Lattice._from_int(P.reshape(n * n, n), p, L1.scale + L2.scale, K, n)


def _dual_from_inverse(L: Lattice, g: int, Y, K_Y: int) -> Lattice:
    p = L.p
    n = L.n
    K, X = L._inverse
    q = p ** (K + K_Y)
    dtype = choose_dtype(q, n)
    Xt = _int_to_dtype([list(col) for col in zip(*X)], q, dtype)
    Ym = _int_to_dtype(Y, q, dtype)
    D = (Xt @ Ym) % q
    return Lattice._from_int(D, p, K + g - L.scale, K + K_Y, n)


def dual_lattice(L: Lattice, form: SymForm) -> Lattice:
    """L^# = {a : phi(L, a) in Z_(p)}."""
    g, Y, K_Y = form._dual_data
    return _dual_from_inverse(L, g, Y, K_Y)


def standard_dual(L: Lattice) -> Lattice:
    """Dual with respect to the coordinate dot product."""
    n = L.n
    return _dual_from_inverse(L, 0, [[int(i == j) for j in range(n)] for i in range(n)], 0)


def lattice_intersect(L1: Lattice, L2: Lattice, form: SymForm) -> Lattice:
    return dual_lattice(lattice_sum(dual_lattice(L1, form), dual_lattice(L2, form)), form)


def index_val(Lsub: Lattice, Lsup: Lattice) -> int:
    """v_p of the index [Lsup : Lsub]."""
    if not contains(Lsup, Lsub):
        raise NotContainedError("first lattice is not contained in the second")
    return Lsub.det_val - Lsup.det_val


# ---------------------------------------------------------------------------
# Orders


def is_order(L: Lattice, A: Algebra) -> bool:
    if A.unit not in L:
        return False
    return contains(L, lattice_product(L, L, A))


def _checked_order(L: Lattice, A: Algebra, what: str) -> Lattice:
    if not is_order(L, A):
        raise InternalCheckError(f"{what} is not an order")
    return L


def left_order(L: Lattice, form: SymForm, A: Algebra, check: bool = True) -> Lattice:
    """O_l(L) = (L L^#)^#."""
    Ld = dual_lattice(L, form)
    O = dual_lattice(lattice_product(L, Ld, A), form)
    return _checked_order(O, A, "left order") if check else O


def right_order(L: Lattice, form: SymForm, A: Algebra, check: bool = True) -> Lattice:
    """O_r(L) = (L^# L)^#."""
    Ld = dual_lattice(L, form)
    O = dual_lattice(lattice_product(Ld, L, A), form)
    return _checked_order(O, A, "right order") if check else O


def idealizer(L: Lattice, form: SymForm, A: Algebra, check: bool = True) -> Lattice:
    """Id(L) = O_l(L) cap O_r(L).

    The intersection of two duals is the dual of the sum, so this is
    (L L^# + L^# L)^# and needs only two products.
    """
    Ld = dual_lattice(L, form)
    s = lattice_sum(lattice_product(L, Ld, A), lattice_product(Ld, L, A))
    O = dual_lattice(s, form)
    return _checked_order(O, A, "idealizer") if check else O


def _integer_map(M, p: int) -> tuple[int, list[list[int]]]:
    """M = p^-t * u^-1 * Mint with u a p-adic unit; return (t, Mint)."""
    F = as_fraction_matrix(M)
    vals = [pval(v, p) for row in F for v in row if v != 0]
    if not vals:
        return 0, [[0] * len(row) for row in F]
    t = -min(vals)
    f = Fraction(p) ** t
    den = 1
    for row in F:
        for v in row:
            d = (v * f).denominator
            den = den * d // gcd(den, d)
    return t, [[int(v * f * den) for v in row] for row in F]


def solve_conditions(maps: Sequence, target: Lattice) -> Lattice:
    """{x : x @ M in target for every M in maps}, as a full lattice."""
    return _solve_integer_conditions([_integer_map(M, target.p) for M in maps], target)


def _solve_integer_conditions(maps, target: Lattice) -> Lattice:
    """Same as solve_conditions for maps given as (t, Mint) with M = p^-t * unit * Mint.

    x M lies in target iff every entry of x M B^-1 = p^(scale-K-t) x Mint X
    is p-integral, so the answer is the standard dual of the column span.
    """
    p = target.p
    K, X = target._inverse
    Xo = np.array(X, dtype=object)
    blocks = []
    for t, Mint in maps:
        N = np.asarray(Mint, dtype=object) @ Xo
        blocks.append((target.scale - K - t, N.T))
    if not blocks:
        raise DegenerateLatticeError("conditions are empty")
    e = min(b[0] for b in blocks)
    rows = []
    for f, cols in blocks:
        shift = p ** (f - e)
        rows += [[int(v) * shift for v in col] for col in cols if any(col)]
    if not rows:
        raise DegenerateLatticeError("conditions are empty")
    S = Lattice._from_int(rows, p, -e, full_rank_exponent_bound(rows, p))
    return standard_dual(S)


def _basis_mult_maps(L: Lattice, A: Algebra, side: str) -> list[tuple[int, np.ndarray]]:
    """Integer multiplication maps by the basis of L.

    side='right' gives x -> x*b, side='left' gives x -> b*x, for b in L's basis.
    """
    _, C = A.integer_constants
    H = np.array(L.hnf, dtype=object)
    axis = 1 if side == "right" else 0
    return [(L.scale, np.tensordot(h, C, axes=([0], [axis]))) for h in H]


def multiplier_order_direct(L: Lattice, side: str, A: Algebra) -> Lattice:
    """{x : x L in L} (side='left'), {x : L x in L} (side='right') or both."""
    if side not in ("left", "right", "both"):
        raise ValueError("side must be 'left', 'right' or 'both'")
    maps = []
    if side in ("left", "both"):
        maps += _basis_mult_maps(L, A, "right")
    if side in ("right", "both"):
        maps += _basis_mult_maps(L, A, "left")
    return _solve_integer_conditions(maps, L)


@dataclass(frozen=True, eq=False)
class OrderLat:
    lattice: Lattice
    algebra: Algebra

    def __post_init__(self):
        if not is_order(self.lattice, self.algebra):
            raise AlgebraError("lattice is not an order")


# ---------------------------------------------------------------------------
# Center


@dataclass(frozen=True, eq=False)
class CentralOrder:
    """Z(Lambda) as an order in its own right.

    ``basis`` holds its Z_(p)-basis in ambient coordinates; ``algebra`` is the
    span of the center with the induced structure constants in that basis,
    so the order itself is the standard lattice of ``algebra``.
    """

    basis: list
    algebra: Algebra

    @property
    def rank(self) -> int:
        return len(self.basis)

    def to_ambient(self, coords) -> list[Fraction]:
        n = len(self.basis[0])
        return [sum((Fraction(c) * b[k] for c, b in zip(coords, self.basis) if c), Fraction(0)) for k in range(n)]


def _span_solver(Zb: list[list[Fraction]]):
    """Return v -> t with t @ Zb = v for Zb of full row rank (exact, verified)."""
    r, n = len(Zb), len(Zb[0])
    cols = _pivot_columns(Zb)
    inv = rat_inverse([[Zb[i][c] for c in cols] for i in range(r)])

    def solve(v) -> list[Fraction]:
        vv = [Fraction(v[c]) for c in cols]
        t = [sum((vv[k] * inv[k][i] for k in range(r) if vv[k]), Fraction(0)) for i in range(r)]
        back = [sum((t[i] * Zb[i][k] for i in range(r) if t[i]), Fraction(0)) for k in range(n)]
        if back != [Fraction(x) for x in v]:
            raise InternalCheckError("vector not in span")
        return t

    return solve


def _pivot_columns(rows: list[list[Fraction]]) -> list[int]:
    A = [list(r) for r in rows]
    piv = []
    rank = 0
    for col in range(len(A[0])):
        i = next((k for k in range(rank, len(A)) if A[k][col] != 0), None)
        if i is None:
            continue
        A[rank], A[i] = A[i], A[rank]
        for k in range(rank + 1, len(A)):
            if A[k][col] != 0:
                f = A[k][col] / A[rank][col]
                A[k] = [a - f * b for a, b in zip(A[k], A[rank])]
        piv.append(col)
        rank += 1
        if rank == len(A):
            break
    return piv


def center(L: Lattice, A: Algebra) -> CentralOrder:
    """Central elements of the order L, with induced algebra structure."""
    p = L.p
    B = L.basis
    Binv = rat_inverse(B)
    V = A.center_basis
    r = len(V)
    W = [[sum((v[i] * Binv[i][j] for i in range(len(v)) if v[i]), Fraction(0)) for j in range(L.n)] for v in V]
    # reduced echelon form of W: pivot columns carry the identity
    piv = _pivot_columns(W)
    sub = [[W[i][c] for c in piv] for i in range(r)]
    R = [[sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in zip(*W)] for row in rat_inverse(sub)]
    # {c in Q^r : c R in Z_(p)^n} is the standard dual of the column span of R
    cols = [[R[i][j] for i in range(r)] for j in range(L.n)]
    Cl = standard_dual(Lattice.from_rows(cols, p))
    coords = [[sum((c[i] * R[i][j] for i in range(r)), Fraction(0)) for j in range(L.n)] for c in Cl.basis]
    Zb = [[sum((y[i] * B[i][k] for i in range(L.n) if y[i]), Fraction(0)) for k in range(A.dim)] for y in coords]
    solve = _span_solver(Zb)
    consts = [[solve(element_mul(zi, zj, A)) for zj in Zb] for zi in Zb]
    unit = solve(A.unit)
    Z = make_algebra(consts, unit, p)
    return CentralOrder(Zb, Z)


# ---------------------------------------------------------------------------
# Conductors


class ConductorSet(NamedTuple):
    two_sided: Lattice
    left: Lattice
    right: Lattice


def conductor(Gamma: Lattice, Lam: Lattice, form: SymForm, A: Algebra) -> Lattice:
    """Largest two-sided Gamma-ideal in a symmetric Lambda, computed as Gamma^#."""
    if dual_lattice(Lam, form) != Lam:
        raise NotSymmetricError("Lambda is not self-dual under the given form")
    if not contains(Gamma, Lam):
        raise NotContainedError("Gamma does not contain Lambda")
    F = dual_lattice(Gamma, form)
    ok = (
        contains(Lam, F)
        and contains(F, lattice_product(Gamma, F, A))
        and contains(F, lattice_product(F, Gamma, A))
    )
    if not ok:
        raise InternalCheckError("Gamma^# is not a Gamma-ideal inside Lambda")
    return F


def conductor_direct(Gamma: Lattice, Lam: Lattice, A: Algebra) -> ConductorSet:
    """Conductors from the defining conditions, with no bilinear form."""
    if not contains(Gamma, Lam):
        raise NotContainedError("Gamma does not contain Lambda")
    left = _solve_integer_conditions(_basis_mult_maps(Gamma, A, "left"), Lam)
    right = _solve_integer_conditions(_basis_mult_maps(Gamma, A, "right"), Lam)
    # Gamma x Gamma in Lambda  iff  x Gamma in the left conductor
    two = _solve_integer_conditions(_basis_mult_maps(Gamma, A, "right"), left)
    return ConductorSet(two, left, right)
