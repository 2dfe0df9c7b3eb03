"""Brute-force reference implementations, deliberately naive and independent
of the search strategies used in the library."""

from __future__ import annotations

import itertools

from periodic_daha import AffinePermutation, PeriodicTableau, ShapePair, apply, row_reading
from periodic_daha.diagrams import contains, fundamental_cells

EXAMPLE = ShapePair(7, 2, 3, (5, 3), (1, 0))
ROW2 = ShapePair(2, 1, 0, (2,), (0,))
COLUMN2 = ShapePair(2, 2, 0, (1, 1), (0, 0))


def inversions_by_scan(w: AffinePermutation) -> set[tuple[int, int]]:
    """Scan ``j`` in ``(i, i + B*n]``.

    An inversion ``i < j`` has ``j - i < (w(i) - i) - (w(j) - j)``, at most twice
    the largest displacement ``|w(k) - k|``, which fixes ``B``.
    """
    n = w.n
    bound = 2 * max(abs(w(k) - k) for k in range(1, n + 1)) // n + 2
    return {(i, j) for i in range(1, n + 1) for j in range(i + 1, i + bound * n + 1)
            if (j - i) % n and w(i) > w(j)}


def word_ball(n: int, max_length: int) -> dict[tuple[int, ...], tuple[int, ...]]:
    """Shortest word in ``s_0..s_{n-1}`` for every non-extended element it reaches.

    Plain breadth-first search over all words, keyed by window.
    """
    ident = AffinePermutation.identity(n)
    best = {ident.window: ()}
    frontier = [(ident, ())]
    for _ in range(max_length):
        nxt = []
        for w, word in frontier:
            for i in range(n):
                v = w * AffinePermutation.s(n, i)
                if v.window not in best:
                    best[v.window] = word + (i,)
                    nxt.append((v, word + (i,)))
        frontier = nxt
    return best


def extended_ball(n: int, max_length: int, r_values) -> list[AffinePermutation]:
    ball = word_ball(n, max_length)
    out = []
    for r in r_values:
        p = AffinePermutation.pi(n, r)
        out.extend(p * AffinePermutation(n, win) for win in ball)
    return out


def standard_by_window(t: PeriodicTableau, rows: int = 2) -> bool:
    """Check row/column increase cell by cell on several periods of the diagram."""
    s = t.shape
    lo_row, hi_row = 1 - rows * s.m, (rows + 1) * s.m
    span = (rows + 1) * s.ell + max(s.lam) - min(s.mu) + 2
    lo_col, hi_col = min(s.mu) - span, max(s.lam) + span
    for a in range(lo_row, hi_row + 1):
        for b in range(lo_col, hi_col + 1):
            if not contains(s, (a, b)):
                continue
            for nb in ((a, b + 1), (a + 1, b)):
                if contains(s, nb) and t[(a, b)] >= t[nb]:
                    return False
    return True


def translate_equivalent(a: ShapePair, b: ShapePair, radius: int = 12):
    """Return ``r`` with ``diagram(a) + (r, r) == diagram(b)`` or ``None``.

    Both diagrams are periodic with the same period and ``n`` cells per
    period, so inclusion of one shifted fundamental domain suffices.
    """
    if (a.n, a.m, a.ell) != (b.n, b.m, b.ell):
        return None
    cells = fundamental_cells(a)
    for r in range(-radius, radius + 1):
        if all(contains(b, (x + r, y + r)) for x, y in cells):
            return r
    return None


def all_strict_shapes(n: int, m: int, ell: int, box: int) -> list[ShapePair]:
    """Every strict shape pair with entries in ``[-box, box]``, found by plain filtering."""
    out = []
    rng = range(-box, box + 1)
    for mu in itertools.product(rng, repeat=m):
        if any(mu[i] < mu[i + 1] for i in range(m - 1)) or mu[0] - mu[-1] > ell:
            continue
        for lam in itertools.product(rng, repeat=m):
            if any(lam[i] < lam[i + 1] for i in range(m - 1)) or lam[0] - lam[-1] > ell:
                continue
            rows = [x - y for x, y in zip(lam, mu)]
            if min(rows) >= 1 and sum(rows) == n:
                out.append(ShapePair(n, m, ell, lam, mu))
    return out


def standard_in_ball(shape: ShapePair, max_length: int, r_range: int) -> set[tuple[int, ...]]:
    base = row_reading(shape)
    found = set()
    for w in extended_ball(shape.n, max_length, range(-r_range, r_range + 1)):
        tab = apply(w, base)
        if standard_by_window(tab):
            found.add(tab.values)
    return found
