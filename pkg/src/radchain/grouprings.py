"""Finite groups by multiplication table and their group-ring orders over Z_(p).

Closed-form predictions for the first two radical idealizer steps of Z_pG
and for the chain length of abelian p-groups live here too, so the generic
chain can be checked against them.
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .algcore import Algebra, Lattice, OrderLat, SymForm, make_algebra, make_form
from .exactla import check_prime


class GroupError(ValueError):
    """Table does not define a group, or the group is unsuitable."""


@dataclass(frozen=True)
class GroupTable:
    order: int
    table: tuple[tuple[int, ...], ...]
    identity: int = 0
    name: str = ""

    def __post_init__(self):
        m = self.order
        T = np.asarray(self.table, dtype=np.int64)
        if m < 1 or T.shape != (m, m):
            raise GroupError(f"table must be {m}x{m}")
        if not 0 <= self.identity < m:
            raise GroupError("identity index out of range")
        full = np.arange(m)
        if not all((np.sort(T[i]) == full).all() and (np.sort(T[:, i]) == full).all() for i in range(m)):
            raise GroupError("rows and columns must be permutations")
        e = self.identity
        if not ((T[e] == full).all() and (T[:, e] == full).all()):
            raise GroupError("identity law fails")
        # (ab)c == a(bc) for all triples
        if not (T[T, :] == T[:, T]).all():
            raise GroupError("table is not associative")
        object.__setattr__(self, "table", tuple(tuple(int(x) for x in row) for row in T))

    @property
    def array(self) -> np.ndarray:
        return np.asarray(self.table, dtype=np.int64)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inverse(self, a: int) -> int:
        return self.table[a].index(self.identity)

    def power(self, a: int, k: int) -> int:
        x = self.identity
        for _ in range(k):
            x = self.table[x][a]
        return x

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != self.identity:
            x = self.table[x][a]
            k += 1
        return k

    def is_abelian(self) -> bool:
        T = self.array
        return bool((T == T.T).all())

    def exponent(self) -> int:
        return math.lcm(*(self.element_order(a) for a in range(self.order)))


def from_table(table, identity: int = 0, name: str = "") -> GroupTable:
    return GroupTable(len(table), tuple(tuple(r) for r in table), identity, name)


def cyclic(n: int) -> GroupTable:
    return from_table([[(i + j) % n for j in range(n)] for i in range(n)], 0, f"C{n}")


def direct_product(G: GroupTable, H: GroupTable) -> GroupTable:
    """Element (g, h) gets index g * |H| + h."""
    m = H.order
    table = [
        [G.table[a // m][b // m] * m + H.table[a % m][b % m] for b in range(G.order * m)]
        for a in range(G.order * m)
    ]
    name = f"{G.name}x{H.name}" if G.name and H.name else ""
    return from_table(table, G.identity * m + H.identity, name)


def dihedral(order: int) -> GroupTable:
    """Dihedral group of the given (even) order; r^k s^e has index k + n*e."""
    if order < 2 or order % 2:
        raise GroupError("dihedral order must be even and positive")
    n = order // 2

    def mul(x, y):
        a, e = x % n, x // n
        b, f = y % n, y // n
        return (a + (b if e == 0 else -b)) % n + n * ((e + f) % 2)

    return from_table([[mul(x, y) for y in range(order)] for x in range(order)], 0, f"D{order}")


# unit quaternions 1, i, j, k as (sign, index) products
_QUAT = {
    (0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
    (1, 0): (1, 1), (1, 1): (-1, 0), (1, 2): (1, 3), (1, 3): (-1, 2),
    (2, 0): (1, 2), (2, 1): (-1, 3), (2, 2): (-1, 0), (2, 3): (1, 1),
    (3, 0): (1, 3), (3, 1): (1, 2), (3, 2): (-1, 1), (3, 3): (-1, 0),
}


def quaternion8() -> GroupTable:
    """Q8 with element u + 4*s standing for (-1)^s times 1, i, j, k."""

    def mul(x, y):
        sign, u = _QUAT[(x % 4, y % 4)]
        s = (x // 4 + y // 4 + (sign < 0)) % 2
        return u + 4 * s

    return from_table([[mul(x, y) for y in range(8)] for x in range(8)], 0, "Q8")


def elementary_abelian(p: int, r: int) -> GroupTable:
    G = cyclic(p)
    for _ in range(r - 1):
        G = direct_product(G, cyclic(p))
    return GroupTable(G.order, G.table, G.identity, f"E{p}^{r}")


_CYC = re.compile(r"C(\d+)")


def parse_group(name: str) -> GroupTable:
    """Built-in groups: C{n}, C{a}xC{b}..., D{2n}, Q8, E{p}{r} (also E{p}^{r})."""
    s = name.strip()
    if re.fullmatch(r"C\d+(xC\d+)*", s):
        parts = [int(x) for x in _CYC.findall(s)]
        if any(k < 1 for k in parts):
            raise GroupError(f"bad cyclic factor in {name!r}")
        G = cyclic(parts[0])
        for k in parts[1:]:
            G = direct_product(G, cyclic(k))
        return GroupTable(G.order, G.table, G.identity, s)
    if m := re.fullmatch(r"D(\d+)", s):
        return dihedral(int(m.group(1)))
    if s == "Q8":
        return quaternion8()
    if m := re.fullmatch(r"E(\d+)[\^_](\d+)", s):
        p, r = int(m.group(1)), int(m.group(2))
    elif m := re.fullmatch(r"E(\d+)", s):
        digits = m.group(1)
        split = next(
            (k for k in range(1, len(digits)) if _is_prime_str(digits[:k]) and digits[k] != "0"), None
        )
        if split is None:
            raise GroupError(f"cannot split {name!r} into prime and rank")
        p, r = int(digits[:split]), int(digits[split:])
    else:
        raise GroupError(f"unknown group name {name!r}")
    check_prime(p)
    if r < 1:
        raise GroupError("rank must be positive")
    G = elementary_abelian(p, r)
    return GroupTable(G.order, G.table, G.identity, s)


def _is_prime_str(s: str) -> bool:
    try:
        check_prime(int(s))
        return True
    except ValueError:
        return False


def p_power_exponent(m: int, p: int) -> int | None:
    """log_p m if m is a power of p, else None."""
    n = 0
    while m % p == 0:
        m //= p
        n += 1
    return n if m == 1 else None


def require_pgroup(G: GroupTable, p: int) -> int:
    n = p_power_exponent(G.order, p)
    if n is None:
        raise GroupError(f"group of order {G.order} is not a {p}-group")
    return n


# ---------------------------------------------------------------------------
# Group rings


def group_ring(G: GroupTable, p: int, pgroup: bool = False) -> tuple[Algebra, OrderLat, SymForm]:
    """Z_(p)G in the group basis with the form (x, y) -> coefficient of 1 in xy."""
    check_prime(p)
    if pgroup:
        require_pgroup(G, p)
    m = G.order
    zero, one = Fraction(0), Fraction(1)
    consts = [[[zero] * m for _ in range(m)] for _ in range(m)]
    for a in range(m):
        for b in range(m):
            consts[a][b][G.table[a][b]] = one
    unit = [one if g == G.identity else zero for g in range(m)]
    A = make_algebra(consts, unit, p)
    form = make_form(A, unit)
    return A, OrderLat(Lattice.standard(m, p), A), form


def subgroup_closure(G: GroupTable, gens) -> set[int]:
    H = {G.identity}
    frontier = set(gens) - H
    while frontier:
        H |= frontier
        frontier = {G.table[a][b] for a in H for b in H} - H
    return H


def frattini_subgroup(G: GroupTable, p: int) -> set[int]:
    """G'G^p, generated by all commutators and p-th powers."""
    m = G.order
    inv = [G.inverse(a) for a in range(m)]
    T = G.table
    comms = {T[T[inv[a]][inv[b]]][T[a][b]] for a in range(m) for b in range(m)}
    powers = {G.power(a, p) for a in range(m)}
    return subgroup_closure(G, comms | powers)


def frattini_index(G: GroupTable, p: int) -> int:
    """|G / G'G^p|."""
    require_pgroup(G, p)
    return G.order // len(frattini_subgroup(G, p))


def homs_to_cyclic_p(G: GroupTable, p: int) -> list[tuple[int, ...]]:
    """All homomorphisms G -> Z/p as value vectors, sorted.

    They factor through the elementary abelian quotient V = G/G'G^p: pick
    coset representatives forming an F_p-basis of V, write every element in
    that basis, and apply each linear functional.
    """
    require_pgroup(G, p)
    N = frattini_subgroup(G, p)
    gens: list[int] = []
    H = set(N)
    for a in range(G.order):
        if a not in H:
            gens.append(a)
            H = subgroup_closure(G, H | {a})
    r = len(gens)
    coords: dict[int, tuple[int, ...]] = {}
    for e in itertools.product(range(p), repeat=r):
        x = G.identity
        for g, k in zip(gens, e):
            x = G.table[x][G.power(g, k)]
        for n in N:
            coords[G.table[n][x]] = e
    if len(coords) != G.order:
        raise AssertionError("coset coordinates do not cover the group")
    homs = []
    for c in itertools.product(range(p), repeat=r):
        homs.append(tuple(sum(ci * ei for ci, ei in zip(c, coords[g])) % p for g in range(G.order)))
    return sorted(homs)


def predicted_gamma(G: GroupTable, p: int) -> Lattice:
    """<Lambda, (1/p) sum g>."""
    require_pgroup(G, p)
    m = G.order
    rows = [[int(i == j) for j in range(m)] for i in range(m)]
    rows.append([Fraction(1, p)] * m)
    return Lattice.from_rows(rows, p)


def predicted_delta(G: GroupTable, p: int) -> Lattice:
    """<Lambda, (1/p^2) sum g, (1/p) sum phi(g) g for phi in Hom(G, Z/p)>."""
    require_pgroup(G, p)
    m = G.order
    if m < p * p:
        raise GroupError("second-step prediction needs |G| >= p^2")
    rows = [[int(i == j) for j in range(m)] for i in range(m)]
    rows.append([Fraction(1, p * p)] * m)
    for phi in homs_to_cyclic_p(G, p):
        rows.append([Fraction(v, p) for v in phi])
    return Lattice.from_rows(rows, p)


def abelian_lrad(n: int, a: int, p: int) -> int:
    """Chain length of Z_pG for G abelian of order p^n and exponent p^a."""
    if not 1 <= a <= n:
        raise ValueError("need 1 <= a <= n")
    return p ** (a - 1) + (p**a - p ** (a - 1)) * (n - a)


def abelian_invariants(G: GroupTable, p: int) -> tuple[int, int]:
    """(log_p |G|, log_p exponent) of an abelian p-group."""
    if not G.is_abelian():
        raise GroupError("group is not abelian")
    n = require_pgroup(G, p)
    return n, p_power_exponent(G.exponent(), p)


def _partitions(n: int, largest: int | None = None):
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in _partitions(n - k, k):
            yield (k,) + rest


def abelian_pgroups(p: int, max_order: int) -> list[GroupTable]:
    """Every abelian p-group of order 1 < |G| <= max_order, one per isomorphism type."""
    out = []
    n = 1
    while p**n <= max_order:
        for part in _partitions(n):
            name = "x".join(f"C{p**k}" for k in sorted(part))
            out.append(parse_group(name))
        n += 1
    return out
