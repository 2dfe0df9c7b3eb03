"""Tableaux on periodic skew diagrams.

A tableau ``T`` is a bijection from the diagram to the integers with
``T(u + gamma) = T(u) + n``; it is stored by its values on the fundamental
cells in row-reading order.  The affine Weyl group acts on values,
``(wT)(u) = w(T(u))``, simply transitively.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from functools import cached_property
from typing import Optional

from .affine_weyl import AffinePermutation, IntegralWeight, _split, bfs_ball, in_z
from .diagrams import (
    Cell,
    ShapePair,
    canonical_rep,
    contains,
    fundamental_cells,
    normalize_cell,
    require_strict,
    shape_from_cells,
)
from .exceptions import C2Violation, InvalidInput, InternalInvariant, MismatchedRank, NotAContent, NotADiagram

__all__ = [
    "ContentFunction",
    "PeriodicTableau",
    "apply",
    "check_c2",
    "content",
    "enumerate_standard",
    "is_column_increasing",
    "is_row_increasing",
    "is_standard",
    "reconstruct",
    "row_reading",
    "tableau_to_group",
    "weight",
]


@dataclass(frozen=True)
class ContentFunction:
    """``F(i)`` for ``i`` in ``[1, n]``, extended by ``F(i + n) = F(i) - kappa``."""

    n: int
    kappa: int
    values: tuple[int, ...]

    def __post_init__(self):
        values = tuple(int(x) for x in self.values)
        if len(values) != self.n:
            raise InvalidInput(f"content has {len(values)} values, expected {self.n}")
        if self.n < 2 or self.kappa < 1:
            raise InvalidInput(f"need n >= 2 and kappa >= 1, got n={self.n}, kappa={self.kappa}")
        object.__setattr__(self, "values", values)

    def __call__(self, i: int) -> int:
        r, k = _split(i, self.n)
        return self.values[r - 1] - k * self.kappa

    def preimage(self, p: int) -> list[int]:
        """``F^{-1}(p)`` in increasing order."""
        out = []
        for i, v in enumerate(self.values, start=1):
            k, rem = divmod(v - p, self.kappa)
            if rem == 0:
                out.append(i + k * self.n)
        return sorted(out)

    def to_dict(self) -> dict:
        return {"n": self.n, "kappa": self.kappa, "values": list(self.values)}

    @classmethod
    def from_dict(cls, data: dict) -> ContentFunction:
        try:
            return cls(int(data["n"]), int(data["kappa"]), tuple(int(x) for x in data["values"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidInput(f"bad content JSON: {data!r}") from exc


@dataclass(frozen=True)
class PeriodicTableau:
    shape: ShapePair
    values: tuple[int, ...]

    def __post_init__(self):
        values = tuple(int(x) for x in self.values)
        n = self.shape.n
        if len(values) != n:
            raise InvalidInput(f"tableau has {len(values)} values, expected {n}")
        if len({v % n for v in values}) != n:
            raise InvalidInput(f"tableau values {values} repeat a residue mod {n}")
        object.__setattr__(self, "values", values)

    @cached_property
    def _cells(self) -> list[Cell]:
        return fundamental_cells(self.shape)

    @cached_property
    def _index(self) -> dict[Cell, int]:
        return {c: p for p, c in enumerate(self._cells)}

    @cached_property
    def _by_residue(self) -> dict[int, int]:
        n = self.shape.n
        return {v % n: p for p, v in enumerate(self.values)}

    def __getitem__(self, cell: Cell) -> int:
        """``T(cell)`` for any cell of the periodic diagram."""
        c0, k = normalize_cell(self.shape, cell)
        try:
            p = self._index[c0]
        except KeyError:
            raise KeyError(f"{cell} is not in the diagram") from None
        return self.values[p] + k * self.shape.n

    def get(self, cell: Cell) -> Optional[int]:
        return self[cell] if contains(self.shape, cell) else None

    def cell_of(self, i: int) -> Cell:
        """``T^{-1}(i)``."""
        n = self.shape.n
        p = self._by_residue[i % n]
        k = (i - self.values[p]) // n
        a, b = self._cells[p]
        m, ell = self.shape.m, self.shape.ell
        return (a + k * m, b - k * ell)

    def key(self) -> tuple[int, ...]:
        return self.values

    def to_dict(self) -> dict:
        return {"shape": self.shape.to_dict(), "values": list(self.values)}

    @classmethod
    def from_dict(cls, data: dict) -> PeriodicTableau:
        try:
            return cls(ShapePair.from_dict(data["shape"]), tuple(int(x) for x in data["values"]))
        except (KeyError, TypeError) as exc:
            raise InvalidInput(f"bad tableau JSON: {data!r}") from exc


def row_reading(shape: ShapePair) -> PeriodicTableau:
    return PeriodicTableau(shape, tuple(range(1, shape.n + 1)))


def apply(w: AffinePermutation, t: PeriodicTableau) -> PeriodicTableau:
    if w.n != t.shape.n:
        raise MismatchedRank(f"rank {w.n} element on a rank {t.shape.n} tableau")
    return PeriodicTableau(t.shape, tuple(w(v) for v in t.values))


def tableau_to_group(base: PeriodicTableau, target: PeriodicTableau) -> AffinePermutation:
    """The unique ``w`` with ``apply(w, base) == target``."""
    if base.shape != target.shape:
        raise InvalidInput("tableaux live on different shapes")
    n = base.shape.n
    return AffinePermutation(n, tuple(target[base.cell_of(i)] for i in range(1, n + 1)))


def is_row_increasing(t: PeriodicTableau) -> bool:
    # horizontal neighbours of a fundamental cell stay in the same row
    for (a, b), v in zip(t._cells, t.values):
        right = t.get((a, b + 1))
        if right is not None and v >= right:
            return False
    return True


def is_column_increasing(t: PeriodicTableau) -> bool:
    # the cell below row m lives in the next period; __getitem__ handles it
    for (a, b), v in zip(t._cells, t.values):
        below = t.get((a + 1, b))
        if below is not None and v >= below:
            return False
    return True


def is_standard(t: PeriodicTableau) -> bool:
    return is_row_increasing(t) and is_column_increasing(t)


def content(t: PeriodicTableau) -> ContentFunction:
    n = t.shape.n
    values = []
    for i in range(1, n + 1):
        a, b = t.cell_of(i)
        values.append(b - a)
    return ContentFunction(n, t.shape.kappa, tuple(values))


def weight(t: PeriodicTableau) -> IntegralWeight:
    c = content(t)
    return IntegralWeight(c.n, c.values, c.kappa)


def enumerate_standard(
    shape: ShapePair, max_length: int, r_range: Optional[int] = None
) -> list[tuple[PeriodicTableau, AffinePermutation]]:
    """Standard tableaux ``w T0`` with ``l(w) <= max_length`` and ``|pi-power| <= r_range``.

    ``r_range`` defaults to ``max_length``.  Output is sorted by
    ``(length, pi-power, values)``.
    """
    require_strict(shape)
    if max_length < 0:
        raise InvalidInput("max_length must be non-negative")
    if r_range is None:
        r_range = max_length
    t0 = row_reading(shape)
    zeta0 = weight(t0)

    def accept(w):
        return is_standard(apply(w, t0))

    elements = bfs_ball(shape.n, max_length, range(-r_range, r_range + 1), accept)
    found = []
    for w in elements:
        if not in_z(w, zeta0):
            raise InternalInvariant(f"standard tableau from {w} outside the Z-set")
        found.append((apply(w, t0), w))
    found.sort(key=lambda pair: (pair[1].length(), pair[1].pi_power, pair[0].values))
    return found


def check_c2(f: ContentFunction) -> None:
    """Raise :class:`C2Violation` unless ``f`` satisfies the separation condition.

    Since ``F(i + n) = F(i) - kappa``, one window of ``kappa`` values of ``p`` suffices.
    """
    start = f.values[0]
    for p in range(start, start + f.kappa):
        pts = f.preimage(p)
        if len(pts) < 2:
            continue
        below, above = f.preimage(p - 1), f.preimage(p + 1)
        for i, j in zip(pts, pts[1:]):
            for sign, seps in (("-", below), ("+", above)):
                count = bisect_left(seps, j) - bisect_right(seps, i)
                if count != 1:
                    raise C2Violation(
                        f"F^-1({p}) has consecutive points {i} < {j} with "
                        f"{count} points of F^-1({p - 1 if sign == '-' else p + 1}) between",
                        (p, i, j, sign),
                    )


def _diagonal_cells(f: ContentFunction, r: int) -> tuple[dict[int, list[Cell]], int]:
    """Place the points of ``F^{-1}(p)`` along diagonals, anchoring ``p0 = F(1)`` at row ``r``.

    Returns cells for ``p`` in ``[p0, p0 + kappa)`` and the row count ``m``.
    """
    kappa = f.kappa
    p0 = f.values[0]
    residues = sorted({v % kappa for v in f.values})
    # values of F in [p0, p0 + kappa], increasing
    image = sorted(p for p in range(p0, p0 + kappa + 1) if p % kappa in residues)

    a, b = r, p0 + r
    heads = {p0: (a, b)}
    for p, nxt in zip(image, image[1:]):
        here, there = f.preimage(p), f.preimage(nxt)
        if nxt == p + 1:
            if here[0] < there[0]:
                if len(here) - len(there) not in (0, 1):
                    raise C2Violation(f"diagonals {p} and {nxt} have incompatible sizes",
                                      (p, here[0], there[0], "+"))
                b += 1
            else:
                if len(here) - len(there) not in (0, -1):
                    raise C2Violation(f"diagonals {p} and {nxt} have incompatible sizes",
                                      (p, there[0], here[0], "-"))
                a -= 1
        else:
            if len(here) != 1:
                raise C2Violation(f"diagonal {p} has {len(here)} boxes but {p + 1} is empty",
                                  (p, here[0], here[1], "+"))
            a, b = a - 1, b + nxt - p - 1
        heads[nxt] = (a, b)

    m = heads[p0][0] - heads[p0 + kappa][0]
    cells = {}
    for p in image[:-1]:
        a1, b1 = heads[p]
        cells[p] = [(a1 + j, b1 + j) for j in range(len(f.preimage(p)))]
    return cells, m


def reconstruct(f: ContentFunction) -> tuple[ShapePair, PeriodicTableau, tuple[int, int]]:
    """Find the canonical shape and a standard tableau whose content is ``f``.

    Returns ``(shape, tableau, (p0, r))`` where the most north-west box of
    content ``p0 = F(1)`` sits at ``(r, p0 + r)``.
    """
    check_c2(f)

    def build(r):
        cells, m = _diagonal_cells(f, r)
        if not 1 <= m <= f.kappa:
            raise NotAContent(f"row count {m} outside [1, {f.kappa}]")
        labelled = {}
        for p, diag in cells.items():
            for cell, i in zip(diag, f.preimage(p)):
                labelled[cell] = i
        try:
            shape = shape_from_cells(labelled, (m, m - f.kappa))
        except NotADiagram as exc:
            raise NotAContent(str(exc)) from exc
        values = {}
        for (a, b), i in labelled.items():
            k = (a - 1) // m
            values[(a - k * m, b + k * shape.ell)] = i - k * f.n
        order = fundamental_cells(shape)
        return shape, PeriodicTableau(shape, tuple(values[c] for c in order))

    shape, _ = build(0)
    _, r = canonical_rep(shape)
    shape, t = build(r)
    if content(t) != f:
        raise NotAContent("reconstructed tableau does not reproduce the content")
    if not is_standard(t):
        raise NotAContent("reconstructed tableau is not standard")
    return shape, t, (f.values[0], r)
