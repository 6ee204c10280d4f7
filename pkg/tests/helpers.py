"""Independent oracles used across the tests."""

import itertools
from fractions import Fraction

from hypothesis import strategies as st


def span_mod(rows, q):
    """Z-span of integer rows reduced mod q, as a set of tuples."""
    n = len(rows[0])
    span = {tuple([0] * n)}
    for r in rows:
        r = [x % q for x in r]
        new = set(span)
        for v in span:
            w = v
            for _ in range(q):
                w = tuple((a + b) % q for a, b in zip(w, r))
                new.add(w)
        span = new
    return span


def conjugacy_class_sums(G):
    m = G.order
    seen, sums = set(), []
    for a in range(m):
        if a in seen:
            continue
        cls = {G.mul(G.mul(g, a), G.inverse(g)) for g in range(m)}
        seen |= cls
        sums.append([int(x in cls) for x in range(m)])
    return sums


def all_homs_exhaustive(G, p):
    """Every map G -> Z/p satisfying phi(ab) = phi(a) + phi(b), by brute force."""
    out = []
    for vals in itertools.product(range(p), repeat=G.order):
        if vals[G.identity] != 0:
            continue
        if all(vals[G.mul(a, b)] == (vals[a] + vals[b]) % p for a in range(G.order) for b in range(G.order)):
            out.append(vals)
    return sorted(out)


def rational_matrices(n, p, max_exp=2, min_rows=None, max_rows=None):
    """Rational n-column matrices with p-power denominators and small numerators."""
    entry = st.builds(
        lambda a, d: Fraction(a, p**d), st.integers(-3 * p, 3 * p), st.integers(0, max_exp)
    )
    rows = st.lists(entry, min_size=n, max_size=n)
    return st.lists(rows, min_size=min_rows or n, max_size=max_rows or n + 2)


def unimodular(n, p):
    """Integer n x n matrices invertible over Z_(p)."""
    return (
        st.lists(st.lists(st.integers(-4, 4), min_size=n, max_size=n), min_size=n, max_size=n)
        .filter(lambda M: _det(M) % p != 0)
    )


def _det(M):
    from radchain.exactla import bareiss_det

    return bareiss_det(M)
