"""Exact rational and p-local linear algebra.

Scalars are :class:`fractions.Fraction`.  Lattices over the local ring
Z_(p) are handled through integer matrices: a full-rank lattice that lies
in Z_(p)^n and contains p^K Z_(p)^n is determined by its image modulo p^K,
so the workhorse :func:`hnf_mod` runs Hermite reduction over Z/p^K with
numpy (int64 when the modulus is small enough, Python ints otherwise).
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

import numpy as np

Rat = Fraction
Mat = list  # list[list[Fraction]]

# Large prime used only to pick linearly independent rows quickly.
_WITNESS_PRIME = (1 << 61) - 1
_INT64_SAFE = 1 << 62


class DegenerateLatticeError(ValueError):
    """Generators do not span a full-rank lattice."""


class SingularMatrixError(ValueError):
    pass


@functools.total_ordering
class _Infinity:
    """Valuation of zero.  Compares above every integer."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        return False

    def __hash__(self):
        return hash("pval-infinity")

    def __repr__(self):
        return "INF"


INF = _Infinity()


@functools.lru_cache(maxsize=None)
def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def check_prime(p: int) -> int:
    if not isinstance(p, int) or not is_prime(p):
        raise ValueError(f"p must be a prime, got {p!r}")
    return p


def _ival(n: int, p: int) -> int:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def pval(x, p: int):
    """p-adic valuation of a rational; ``INF`` for zero."""
    x = Fraction(x)
    if x == 0:
        return INF
    return _ival(x.numerator, p) - _ival(x.denominator, p)


def split_unit(x, p: int) -> tuple[int, Fraction]:
    """Write nonzero x as p^v * u with u a p-adic unit; return (v, u)."""
    x = Fraction(x)
    v = pval(x, p)
    return v, x / Fraction(p) ** v


def residue(x, modulus: int, p: int) -> int:
    """Image of a p-integral rational in Z/modulus (modulus a power of p)."""
    x = Fraction(x)
    if x.denominator % p == 0:
        raise ValueError(f"{x} is not {p}-integral")
    if modulus == 1:
        return 0
    return x.numerator * pow(x.denominator, -1, modulus) % modulus


def as_fraction_matrix(rows) -> list[list[Fraction]]:
    return [[Fraction(v) for v in row] for row in rows]


def identity(n: int) -> list[list[Fraction]]:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def transpose(M):
    return [list(col) for col in zip(*M)]


def matmul(A, B):
    Bt = list(zip(*B))
    return [[sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in Bt] for row in A]


# ---------------------------------------------------------------------------
# Dense exact algebra over Q


def rat_inverse(M) -> list[list[Fraction]]:
    """Exact inverse by Gauss-Jordan elimination."""
    A = as_fraction_matrix(M)
    n = len(A)
    if any(len(row) != n for row in A):
        raise ValueError("matrix must be square")
    aug = [row + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(A)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            raise SingularMatrixError("matrix is singular")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [v * inv for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def rat_det(M) -> Fraction:
    A = as_fraction_matrix(M)
    n = len(A)
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if A[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            A[col], A[piv] = A[piv], A[col]
            det = -det
        det *= A[col][col]
        for r in range(col + 1, n):
            if A[r][col] != 0:
                f = A[r][col] / A[col][col]
                A[r] = [a - f * b for a, b in zip(A[r], A[col])]
    return det


def rat_rank(M) -> int:
    A = as_fraction_matrix(M)
    if not A:
        return 0
    rank = 0
    ncols = len(A[0])
    for col in range(ncols):
        piv = next((r for r in range(rank, len(A)) if A[r][col] != 0), None)
        if piv is None:
            continue
        A[rank], A[piv] = A[piv], A[rank]
        for r in range(rank + 1, len(A)):
            if A[r][col] != 0:
                f = A[r][col] / A[rank][col]
                A[r] = [a - f * b for a, b in zip(A[r], A[rank])]
        rank += 1
    return rank


def rat_kernel(M) -> list[list[Fraction]]:
    """Basis of {y : M y = 0} over Q in reduced echelon form (rows)."""
    A = as_fraction_matrix(M)
    ncols = len(A[0]) if A else 0
    pivots = []
    rank = 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(A)) if A[r][col] != 0), None)
        if piv is None:
            continue
        A[rank], A[piv] = A[piv], A[rank]
        inv = 1 / A[rank][col]
        A[rank] = [v * inv for v in A[rank]]
        for r in range(len(A)):
            if r != rank and A[r][col] != 0:
                f = A[r][col]
                A[r] = [a - f * b for a, b in zip(A[r], A[rank])]
        pivots.append(col)
        rank += 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fcol in free:
        v = [Fraction(0)] * ncols
        v[fcol] = Fraction(1)
        for r, pc in enumerate(pivots):
            v[pc] = -A[r][fcol]
        basis.append(v)
    return basis


def det_val(M, p: int) -> int:
    """v_p(|det M|) for a nonsingular rational square matrix."""
    d = rat_det(M)
    if d == 0:
        raise SingularMatrixError("matrix is singular")
    return pval(d, p)


def bareiss_det(M: Sequence[Sequence[int]]) -> int:
    """Fraction-free determinant of an integer matrix."""
    A = [list(map(int, row)) for row in M]
    n = len(A)
    sign, prev = 1, 1
    for k in range(n - 1):
        piv = next((r for r in range(k, n) if A[r][k] != 0), None)
        if piv is None:
            return 0
        if piv != k:
            A[k], A[piv] = A[piv], A[k]
            sign = -sign
        akk = A[k][k]
        for i in range(k + 1, n):
            aik = A[i][k]
            row_i, row_k = A[i], A[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
        prev = akk
    return sign * A[n - 1][n - 1] if n else 1


# ---------------------------------------------------------------------------
# Integer vectors for p-local work


def scaled_integer_rows(rows, p: int) -> tuple[int, list[list[int]]]:
    """Return (s, R) with R integer and rowspan_{Z_(p)}(R) = p^s * rowspan(rows).

    s is the least integer making every entry p-integral; prime-to-p
    denominators are cleared row by row (units do not change the span).
    """
    F = as_fraction_matrix(rows)
    vals = [pval(v, p) for row in F for v in row if v != 0]
    if not vals:
        return 0, [[0] * len(row) for row in F]
    s = -min(vals)
    scale = Fraction(p) ** s
    out = []
    for row in F:
        row = [v * scale for v in row]
        den = 1
        for v in row:
            den = den * v.denominator // gcd(den, v.denominator)
        out.append([int(v * den) for v in row])
    return s, out


def clear_denominators(rows) -> list[list[int]]:
    """Integer rows, each a positive multiple of the corresponding input row."""
    out = []
    for row in as_fraction_matrix(rows):
        den = 1
        for v in row:
            den = den * v.denominator // gcd(den, v.denominator)
        out.append([int(v * den) for v in row])
    return out


def _independent_rows(rows: list[list[int]], n: int) -> list[int]:
    """Indices of a maximal set (at most n) of rows independent modulo a large prime."""
    P = _WITNESS_PRIME
    basis: list[tuple[int, list[int]]] = []
    chosen = []
    for idx, row in enumerate(rows):
        v = [x % P for x in row]
        for col, b in basis:
            if v[col]:
                f = v[col]
                v = [(a - f * c) % P for a, c in zip(v, b)]
        lead = next((c for c, x in enumerate(v) if x), None)
        if lead is None:
            continue
        inv = pow(v[lead], -1, P)
        v = [x * inv % P for x in v]
        basis.append((lead, v))
        chosen.append(idx)
        if len(chosen) == n:
            break
    return chosen


def full_rank_exponent_bound(int_rows: list[list[int]], p: int) -> int:
    """K with p^K Z^n inside the Z_(p)-span of full-rank integer rows."""
    n = len(int_rows[0])
    chosen = _independent_rows(int_rows, n)
    if len(chosen) < n:
        if rat_rank(int_rows) < n:
            raise DegenerateLatticeError("generators do not have full rank")
        # Witness prime divided a minor; fall back to exact selection.
        chosen = []
        acc: list[list[int]] = []
        for i, row in enumerate(int_rows):
            if rat_rank(acc + [row]) > len(acc):
                acc.append(row)
                chosen.append(i)
            if len(acc) == n:
                break
    d = bareiss_det([int_rows[i] for i in chosen])
    return _ival(abs(d), p)


def _valuations(col: np.ndarray, p: int, K: int) -> np.ndarray:
    """Valuations of residues mod p^K, capped at K (zero maps to K)."""
    v = np.zeros(len(col), dtype=np.int64)
    pk = 1
    for _ in range(K):
        pk *= p
        hit = (col % pk) == 0
        if not hit.any():
            break
        v += hit.astype(np.int64)
    return v


def choose_dtype(q: int, n: int = 1):
    return np.int64 if n * q * q < _INT64_SAFE else object


def hnf_mod(rows, p: int, K: int, n: int | None = None) -> tuple[list[int], list[list[int]]]:
    """Canonical p-local HNF of L + p^K Z^n from integer generator rows.

    Returns ``(exps, H)``: H is upper triangular with H[j][j] = p^exps[j] and
    every entry above a pivot reduced into [0, p^exps[j]).  The caller must
    guarantee p^K Z^n is contained in the lattice for the result to be the
    lattice itself.
    """
    q = p**K
    if n is None:
        n = len(rows[0])
    dtype = choose_dtype(q)
    if len(rows):
        A = np.array(rows, dtype=object) % q
        A = A.astype(dtype) if dtype is np.int64 else A
    else:
        A = np.zeros((0, n), dtype=dtype)
    A = A[(A != 0).any(axis=1)] if len(A) else A
    H: list[list[int]] = []
    exps: list[int] = []
    for j in range(n):
        if len(A):
            vals = _valuations(A[:, j], p, K)
            i = int(np.argmin(vals))
            e = int(vals[i])
        else:
            e = K
        if e >= K:
            row = [0] * n
            row[j] = q
            H.append(row)
            exps.append(K)
            continue
        pe = p**e
        unit = int(A[i, j]) // pe
        inv = pow(unit, -1, q)
        prow = (A[i] * inv) % q
        A = np.delete(A, i, axis=0)
        if len(A):
            c = A[:, j] // pe
            A = (A - (c[:, None] * prow[None, :]) % q) % q
        if e:
            rel = (prow * (p ** (K - e))) % q
            A = np.vstack([A, rel[None, :]]) if len(A) else rel[None, :]
        A = A[(A != 0).any(axis=1)] if len(A) else A
        H.append([int(x) for x in prow])
        exps.append(e)
    for j in range(n):
        pj = p ** exps[j]
        H[j][j] = pj
        for i in range(j):
            t = H[i][j] // pj
            if t:
                rj = H[j]
                H[i] = [a - t * b for a, b in zip(H[i], rj)]
    return exps, H


def triangular_inverse_scaled(H: Sequence[Sequence[int]], p: int) -> tuple[int, list[list[int]]]:
    """(K, X) with X = p^K H^-1 integral and K minimal, for a p-local HNF H."""
    n = len(H)
    exps = [_ival(H[i][i], p) for i in range(n)]
    E = sum(exps)
    X = [[0] * n for _ in range(n)]
    for i in range(n - 1, -1, -1):
        X[i][i] = p ** (E - exps[i])
        hi = H[i]
        for j in range(i + 1, n):
            acc = 0
            for k in range(i + 1, j + 1):
                if hi[k]:
                    acc += hi[k] * X[k][j]
            q, r = divmod(-acc, H[i][i])
            if r:
                raise ArithmeticError("inexact division in triangular inverse")
            X[i][j] = q
    nz = [_ival(abs(v), p) for row in X for v in row if v]
    m = min(nz)
    if m:
        pm = p**m
        X = [[v // pm for v in row] for row in X]
    return E - m, X


# ---------------------------------------------------------------------------
# Generic canonical form (any rank)


def local_hnf(M, p: int, full_rank: bool = False) -> list[list[Fraction]]:
    """Canonical Z_(p)-row-span basis of a rational matrix.

    Rows are in echelon form with pivots exact powers of p; entries above a
    pivot are reduced to the integer range [0, p^e) after scaling.  Zero rows
    are dropped.  With ``full_rank=True`` a rank below the column count
    raises :class:`DegenerateLatticeError`.
    """
    check_prime(p)
    F = as_fraction_matrix(M)
    if not F:
        if full_rank:
            raise DegenerateLatticeError("empty generator set")
        return []
    ncols = len(F[0])
    s, _ = scaled_integer_rows(F, p)
    scale = Fraction(p) ** s
    rows = [[v * scale for v in row] for row in F]
    rows = [r for r in rows if any(r)]
    echelon: list[tuple[int, int, list[Fraction]]] = []  # (col, exp, row)
    for col in range(ncols):
        cands = [(pval(r[col], p), i) for i, r in enumerate(rows) if r[col] != 0]
        if not cands:
            continue
        e, i = min(cands)
        prow = rows.pop(i)
        unit = prow[col] / Fraction(p) ** e
        prow = [v / unit for v in prow]
        pe = Fraction(p) ** e
        rest = []
        for r in rows:
            if r[col] != 0:
                f = r[col] / pe
                r = [a - f * b for a, b in zip(r, prow)]
            if any(r):
                rest.append(r)
        rows = rest
        echelon.append((col, e, prow))
    if full_rank and len(echelon) < ncols:
        raise DegenerateLatticeError(f"rank {len(echelon)} < {ncols}")
    # reduce entries above pivots
    for k, (col, e, prow) in enumerate(echelon):
        pe = p**e
        for i in range(k):
            c0, e0, r = echelon[i]
            x = r[col]
            rep = residue(x, pe, p) if pe > 1 else 0
            f = (x - rep) / pe
            if f:
                r = [a - f * b for a, b in zip(r, prow)]
                echelon[i] = (c0, e0, r)
    inv_scale = 1 / scale
    return [[v * inv_scale for v in r] for _, _, r in echelon]


# ---------------------------------------------------------------------------
# Linear algebra over F_p


@dataclass(frozen=True)
class FpMat:
    p: int
    rows: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.rows, dtype=np.int64)
        if arr.ndim == 1:
            arr = arr.reshape(1, -1) if arr.size else arr.reshape(0, 0)
        arr = arr % self.p
        arr.setflags(write=False)
        object.__setattr__(self, "rows", arr)

    @property
    def shape(self):
        return self.rows.shape

    def __len__(self):
        return self.rows.shape[0]


def fp_rref(M: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form mod p; returns (nonzero rows, pivot columns)."""
    A = np.array(M, dtype=np.int64) % p
    if A.ndim != 2 or A.shape[0] == 0:
        return A.reshape(0, A.shape[-1] if A.ndim == 2 else 0), []
    rows, cols = A.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(A[r:, c])[0]
        if len(nz) == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            A[[r, i]] = A[[i, r]]
        A[r] = (A[r] * pow(int(A[r, c]), -1, p)) % p
        f = A[:, c].copy()
        f[r] = 0
        nzr = np.nonzero(f)[0]
        if len(nzr):
            A[nzr] = (A[nzr] - f[nzr, None] * A[r][None, :]) % p
        pivots.append(c)
        r += 1
    return A[:r], pivots


def fp_rank(M: np.ndarray, p: int) -> int:
    return len(fp_rref(M, p)[1])


def fp_kernel(M: FpMat) -> FpMat:
    """Rows spanning the right null space {x : M x = 0} over F_p."""
    p = M.p
    A = M.rows
    ncols = A.shape[1]
    R, pivots = fp_rref(A, p)
    free = [c for c in range(ncols) if c not in pivots]
    K = np.zeros((len(free), ncols), dtype=np.int64)
    for k, fc in enumerate(free):
        K[k, fc] = 1
        for r, pc in enumerate(pivots):
            K[k, pc] = (-R[r, fc]) % p
    return FpMat(p, K.reshape(len(free), ncols))


def fp_span_contains(basis_rref: np.ndarray, pivots: Sequence[int], vecs: np.ndarray, p: int) -> bool:
    """True when every row of vecs lies in the span of an RREF basis."""
    V = np.array(vecs, dtype=np.int64) % p
    if V.size == 0:
        return True
    if len(pivots):
        coeffs = V[:, list(pivots)]
        V = (V - coeffs @ basis_rref) % p
    return not V.any()


def fp_coordinates(basis_rref: np.ndarray, pivots: Sequence[int], vecs: np.ndarray, p: int) -> np.ndarray:
    """Coordinates of vectors (assumed in the span) w.r.t. an RREF basis."""
    V = np.array(vecs, dtype=np.int64) % p
    return V[:, list(pivots)] % p


def all_fp_vectors(dim: int, p: int) -> np.ndarray:
    """Every vector of F_p^dim as rows, in lexicographic order."""
    return np.array(list(itertools.product(range(p), repeat=dim)), dtype=np.int64).reshape(-1, dim)
