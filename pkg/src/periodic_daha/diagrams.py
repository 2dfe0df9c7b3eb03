"""Periodic skew diagrams attached to shape pairs ``(lambda, mu)``.

A shape pair with ``m`` rows and spread ``ell`` determines the diagram

    {(a + k*m, b - k*ell) : a in [1, m], mu_a < b <= lambda_a, k in Z},

periodic under ``gamma = (m, -ell)``.  Cells are ``(row, column)`` pairs with
content ``column - row``.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .exceptions import InvalidInput, InvalidShape, NotADiagram

__all__ = [
    "Cell",
    "ShapeKind",
    "ShapePair",
    "canonical_rep",
    "contains",
    "enumerate_shapes",
    "fundamental_cells",
    "omega_shift",
    "shape_from_cells",
    "validate",
]

Cell = tuple[int, int]


class ShapeKind(enum.Enum):
    STRICT = "StrictShape"
    NON_STRICT = "NonStrictShape"


@dataclass(frozen=True)
class ShapePair:
    n: int
    m: int
    ell: int
    lam: tuple[int, ...]
    mu: tuple[int, ...]

    def __post_init__(self):
        lam = tuple(int(x) for x in self.lam)
        mu = tuple(int(x) for x in self.mu)
        if self.m < 1:
            raise InvalidShape(f"m must be at least 1, got {self.m}")
        if self.ell < 0:
            raise InvalidShape(f"ell must be non-negative, got {self.ell}")
        if len(lam) != self.m or len(mu) != self.m:
            raise InvalidShape(f"lambda and mu must both have m={self.m} entries")
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "mu", mu)

    @property
    def kappa(self) -> int:
        return self.ell + self.m

    @property
    def gamma(self) -> tuple[int, int]:
        return (self.m, -self.ell)

    @property
    def row_lengths(self) -> tuple[int, ...]:
        return tuple(a - b for a, b in zip(self.lam, self.mu))

    def parabolic_subset(self) -> frozenset[int]:
        """``I_{lambda,mu} = [1, n-1]`` minus the row breaks ``n_1, ..., n_{m-1}``."""
        breaks = set(itertools.accumulate(self.row_lengths[:-1]))
        return frozenset(i for i in range(1, self.n) if i not in breaks)

    def to_dict(self) -> dict:
        return {"n": self.n, "m": self.m, "ell": self.ell,
                "lambda": list(self.lam), "mu": list(self.mu)}

    @classmethod
    def from_dict(cls, data: dict) -> ShapePair:
        try:
            return cls(int(data["n"]), int(data["m"]), int(data["ell"]),
                       tuple(data["lambda"]), tuple(data["mu"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidShape(f"bad shape JSON: {data!r}") from exc


def _check_dominant(seq: Sequence[int], ell: int, name: str) -> None:
    for i in range(len(seq) - 1):
        if seq[i] < seq[i + 1]:
            raise InvalidShape(f"{name} is not weakly decreasing at position {i + 1}")
    if seq[0] - seq[-1] > ell:
        raise InvalidShape(f"{name} spread {seq[0] - seq[-1]} exceeds ell={ell}")


def validate(shape: ShapePair) -> ShapeKind:
    """Classify a shape pair, raising :class:`InvalidShape` if it is outside ``J_{m,ell}``."""
    if shape.n < 2:
        raise InvalidShape(f"n must be at least 2, got {shape.n}")
    _check_dominant(shape.lam, shape.ell, "lambda")
    _check_dominant(shape.mu, shape.ell, "mu")
    for i, d in enumerate(shape.row_lengths, start=1):
        if d < 0:
            raise InvalidShape(f"lambda_{i} < mu_{i}")
    degree = sum(shape.row_lengths)
    if degree != shape.n:
        raise InvalidShape(f"degree {degree} differs from n={shape.n}")
    if all(d > 0 for d in shape.row_lengths):
        return ShapeKind.STRICT
    return ShapeKind.NON_STRICT


def require_strict(shape: ShapePair) -> None:
    if validate(shape) is not ShapeKind.STRICT:
        raise InvalidShape("shape has an empty row; operation needs a strict shape")


def fundamental_cells(shape: ShapePair) -> list[Cell]:
    """Cells of rows ``1..m`` in row-reading order."""
    return [(a, b)
            for a in range(1, shape.m + 1)
            for b in range(shape.mu[a - 1] + 1, shape.lam[a - 1] + 1)]


def normalize_cell(shape: ShapePair, cell: Cell) -> tuple[Cell, int]:
    """Return ``(c0, k)`` with ``cell = c0 + k*gamma`` and ``c0`` in rows ``1..m``."""
    a, b = cell
    k = (a - 1) // shape.m
    return (a - k * shape.m, b + k * shape.ell), k


def contains(shape: ShapePair, cell: Cell) -> bool:
    (a, b), _ = normalize_cell(shape, cell)
    return shape.mu[a - 1] < b <= shape.lam[a - 1]


def shape_from_cells(cells: Iterable[Cell], gamma: tuple[int, int]) -> ShapePair:
    """Recover ``(lambda, mu)`` from a fundamental domain of a periodic diagram.

    The translates of ``cells`` by ``Z*gamma`` must tile a diagram without
    empty rows; the result lies in ``J*_{m,ell}``.
    """
    m, minus_ell = gamma
    if m < 1 or minus_ell > 0:
        raise NotADiagram(f"period {gamma} is not of the form (m, -ell) with m >= 1, ell >= 0")
    ell = -minus_ell
    cells = list(cells)
    rows: dict[int, set[int]] = {a: set() for a in range(1, m + 1)}
    for a, b in cells:
        k = (a - 1) // m
        a0, b0 = a - k * m, b + k * ell
        if b0 in rows[a0]:
            raise NotADiagram(f"cell {(a, b)} repeats a translate of another cell")
        rows[a0].add(b0)
    lam, mu = [], []
    for a in range(1, m + 1):
        row = rows[a]
        if not row:
            raise NotADiagram(f"row {a} is empty; (lambda, mu) is not unique")
        lo, hi = min(row), max(row)
        if hi - lo + 1 != len(row):
            missing = min(set(range(lo, hi + 1)) - row)
            raise NotADiagram(f"rectangle condition fails: cell {(a, missing)} missing from row {a}")
        lam.append(hi)
        mu.append(lo - 1)
    try:
        shape = ShapePair(len(cells), m, ell, tuple(lam), tuple(mu))
        validate(shape)
    except InvalidShape as exc:
        raise NotADiagram(f"rectangle condition fails: {exc}") from exc
    return shape


def _omega_once(seq: Sequence[int], ell: int) -> tuple[int, ...]:
    return (seq[-1] + ell + 1,) + tuple(x + 1 for x in seq[:-1])


def _omega_inverse_once(seq: Sequence[int], ell: int) -> tuple[int, ...]:
    return tuple(x - 1 for x in seq[1:]) + (seq[0] - ell - 1,)


def omega_shift(shape: ShapePair, r: int) -> ShapePair:
    """``omega_m^r . (lambda, mu)``; its diagram is the original translated by ``(r, r)``."""
    step = _omega_once if r >= 0 else _omega_inverse_once
    lam, mu = shape.lam, shape.mu
    for _ in range(abs(r)):
        lam, mu = step(lam, shape.ell), step(mu, shape.ell)
    return ShapePair(shape.n, shape.m, shape.ell, lam, mu)


def canonical_rep(shape: ShapePair) -> tuple[ShapePair, int]:
    """The orbit representative with ``sum(mu)`` in ``[0, kappa)`` and the shift reaching it.

    ``omega`` raises ``sum(mu)`` by exactly ``kappa``.
    """
    validate(shape)
    r = -(sum(shape.mu) // shape.kappa)
    return omega_shift(shape, r), r


def _dominant_sequences(m: int, lo: int, hi: int) -> Iterator[tuple[int, ...]]:
    """Weakly decreasing length-``m`` sequences ending in ``lo`` with entries at most ``hi``."""
    for head in itertools.combinations_with_replacement(range(hi, lo - 1, -1), m - 1):
        yield head + (lo,)


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Compositions of ``total`` into ``parts`` positive integers."""
    for cuts in itertools.combinations(range(1, total), parts - 1):
        bounds = (0,) + cuts + (total,)
        yield tuple(bounds[i + 1] - bounds[i] for i in range(parts))


def enumerate_shapes(n: int, m: int, ell: int) -> list[ShapePair]:
    """Canonical representatives of ``J*_{m,ell} / <omega_m>`` in degree ``n``."""
    if n < 2 or m < 1 or ell < 0:
        raise InvalidInput(f"need n >= 2, m >= 1, ell >= 0; got n={n}, m={m}, ell={ell}")
    kappa = m + ell
    out = []
    if m > n:
        return out
    # sum(mu) in [0, kappa) with spread <= ell forces mu_m in [-ell, (kappa-1)//m]
    for mu_last in range(-ell, (kappa - 1) // m + 1):
        for mu in _dominant_sequences(m, mu_last, mu_last + ell):
            if not 0 <= sum(mu) < kappa:
                continue
            for rows in _compositions(n, m):
                lam = tuple(a + d for a, d in zip(mu, rows))
                if any(lam[i] < lam[i + 1] for i in range(m - 1)) or lam[0] - lam[-1] > ell:
                    continue
                out.append(ShapePair(n, m, ell, lam, mu))
    out.sort(key=lambda s: (s.mu, s.lam))
    return out


def satisfies_rectangle_condition(shape: ShapePair) -> bool:
    """Brute-force rectangle condition on the window ``rows [1-m, 2m]``."""
    rows = range(1 - shape.m, 2 * shape.m + 1)
    lo = min(shape.mu) - 2 * shape.ell - 1
    hi = max(shape.lam) + 2 * shape.ell + 1
    inside = {(a, b) for a in rows for b in range(lo, hi + 1) if contains(shape, (a, b))}
    for (a, b) in inside:
        for (c, d) in inside:
            if c >= a and d >= b:
                for x in range(a, c + 1):
                    for y in range(b, d + 1):
                        if (x, y) not in inside:
                            return False
    return True
