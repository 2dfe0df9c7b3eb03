"""The extended affine Weyl group of GL_n in window notation.

An element ``w`` is a bijection of the integers with ``w(j + n) = w(j) + n``;
it is stored as its window ``(w(1), ..., w(n))``.  Simple reflections act by

    s_i(j) = j + 1   (j = i mod n)
    s_i(j) = j - 1   (j = i + 1 mod n)
    pi(j)  = j + 1

so ``s_0`` swaps the classes of ``0`` and ``1``.  Roots ``alpha_ij`` with
``i < j`` and ``i != j mod n`` are the positive real roots; they are
represented by the pair ``(i, j)`` normalized to ``i`` in ``[1, n]``.

>>> w = AffinePermutation.from_window(3, (4, 2, 3))
>>> w.length(), w.reduced_word()
(2, ReducedWord(n=3, r=1, letters=(2, 1)))
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .exceptions import DuplicateResidue, IndexOutOfRange, InvalidInput, MismatchedRank

__all__ = [
    "AffinePermutation",
    "IntegralWeight",
    "ReducedWord",
    "act_weight",
    "elements_up_to_length",
    "in_z",
    "min_coset_rep",
]


def _split(j: int, n: int) -> tuple[int, int]:
    """Write ``j = r + k*n`` with ``r`` in ``[1, n]``; return ``(r, k)``."""
    k, r = divmod(j - 1, n)
    return r + 1, k


@dataclass(frozen=True)
class AffinePermutation:
    n: int
    window: tuple[int, ...]

    def __post_init__(self):
        if self.n < 2:
            raise InvalidInput(f"rank must be at least 2, got {self.n}")
        window = tuple(int(x) for x in self.window)
        if len(window) != self.n:
            raise InvalidInput(f"window has {len(window)} entries, expected {self.n}")
        residues = [x % self.n for x in window]
        if len(set(residues)) != self.n:
            raise DuplicateResidue(f"window {window} has repeated residues mod {self.n}")
        object.__setattr__(self, "window", window)

    # -- constructors -----------------------------------------------------

    @classmethod
    def from_window(cls, n: int, window: Sequence[int]) -> AffinePermutation:
        return cls(n, tuple(window))

    @classmethod
    def identity(cls, n: int) -> AffinePermutation:
        return cls(n, tuple(range(1, n + 1)))

    @classmethod
    def pi(cls, n: int, power: int = 1) -> AffinePermutation:
        return cls(n, tuple(j + power for j in range(1, n + 1)))

    @classmethod
    def s(cls, n: int, i: int) -> AffinePermutation:
        """The simple reflection ``s_i``, ``i`` in ``[0, n-1]``."""
        if not 0 <= i < n:
            raise IndexOutOfRange(f"s_{i} undefined for n={n}")
        window = list(range(1, n + 1))
        if i == 0:
            window[0], window[-1] = 0, n + 1
        else:
            window[i - 1], window[i] = i + 1, i
        return cls(n, tuple(window))

    @classmethod
    def tau(cls, n: int, i: int) -> AffinePermutation:
        """Translation by ``epsilon_i``: ``j -> j + n`` on the class of ``i``."""
        if not 1 <= i <= n:
            raise IndexOutOfRange(f"tau_{i} undefined for n={n}")
        window = list(range(1, n + 1))
        window[i - 1] += n
        return cls(n, tuple(window))

    @classmethod
    def from_word(cls, n: int, r: int, letters: Iterable[int]) -> AffinePermutation:
        """Evaluate ``pi^r s_{letters[0]} s_{letters[1]} ...``."""
        w = cls.pi(n, r)
        for i in letters:
            w = w * cls.s(n, i)
        return w

    # -- group structure --------------------------------------------------

    def __call__(self, j: int) -> int:
        r, k = _split(j, self.n)
        return self.window[r - 1] + k * self.n

    def act_int(self, j: int) -> int:
        return self(j)

    def __mul__(self, other: AffinePermutation) -> AffinePermutation:
        if not isinstance(other, AffinePermutation):
            return NotImplemented
        if other.n != self.n:
            raise MismatchedRank(f"cannot compose rank {self.n} with rank {other.n}")
        return AffinePermutation(self.n, tuple(self(v) for v in other.window))

    def compose(self, other: AffinePermutation) -> AffinePermutation:
        """``j -> self(other(j))``."""
        return self * other

    def inverse(self) -> AffinePermutation:
        return self._inverse

    @cached_property
    def _inverse(self) -> AffinePermutation:
        inv = [0] * self.n
        for i, value in enumerate(self.window, start=1):
            r, k = _split(value, self.n)
            inv[r - 1] = i - k * self.n
        return AffinePermutation(self.n, tuple(inv))

    def __pow__(self, k: int) -> AffinePermutation:
        base = self if k >= 0 else self.inverse()
        out = AffinePermutation.identity(self.n)
        for _ in range(abs(k)):
            out = out * base
        return out

    @property
    def is_identity(self) -> bool:
        return self.window == tuple(range(1, self.n + 1))

    @property
    def pi_power(self) -> int:
        """The exponent ``r`` in ``w = pi^r s_{j1} ... s_{jk}``."""
        return (sum(self.window) - self.n * (self.n + 1) // 2) // self.n

    # -- length and words ---------------------------------------------------

    @cached_property
    def _inversions(self) -> frozenset[tuple[int, int]]:
        n, w = self.n, self.window
        pairs = set()
        for i in range(1, n + 1):
            for b in range(1, n + 1):
                if b == i:
                    continue
                # j = b + k*n must satisfy j > i and w(j) < w(i)
                k_min = (i - b) // n + 1
                k_max = (w[i - 1] - w[b - 1] - 1) // n
                for k in range(k_min, k_max + 1):
                    pairs.add((i, b + k * n))
        return frozenset(pairs)

    def inversion_set(self) -> frozenset[tuple[int, int]]:
        """Representatives ``(i, j)`` of ``R(w)``, ``i`` in ``[1, n]``, ``j > i``."""
        return self._inversions

    def length(self) -> int:
        return len(self._inversions)

    def has_right_descent(self, i: int) -> bool:
        """``l(w s_i) < l(w)``, i.e. ``w(i) > w(i+1)``."""
        return self(i) > self(i + 1)

    def has_left_descent(self, i: int) -> bool:
        """``l(s_i w) < l(w)``, i.e. ``w^{-1}(i) > w^{-1}(i+1)``."""
        inv = self.inverse()
        return inv(i) > inv(i + 1)

    def reduced_word(self, prefer: str = "min") -> ReducedWord:
        """Peel right descents, smallest index first (``prefer="max"``: largest)."""
        if prefer not in ("min", "max"):
            raise InvalidInput(f"prefer must be 'min' or 'max', got {prefer!r}")
        order = range(self.n) if prefer == "min" else range(self.n - 1, -1, -1)
        peeled = []
        w = self
        while True:
            for i in order:
                if w.has_right_descent(i):
                    peeled.append(i)
                    w = w * AffinePermutation.s(self.n, i)
                    break
            else:
                break
        return ReducedWord(self.n, w.pi_power, tuple(reversed(peeled)))

    # -- serialization ------------------------------------------------------

    def to_dict(self) -> dict:
        return {"n": self.n, "window": list(self.window)}

    @classmethod
    def from_dict(cls, data: dict) -> AffinePermutation:
        try:
            return cls(int(data["n"]), tuple(int(x) for x in data["window"]))
        except (KeyError, TypeError) as exc:
            raise InvalidInput(f"bad group element JSON: {data!r}") from exc

    def __repr__(self) -> str:
        return f"AffinePermutation(n={self.n}, window={self.window})"


@dataclass(frozen=True)
class ReducedWord:
    n: int
    r: int
    letters: tuple[int, ...]

    def evaluate(self) -> AffinePermutation:
        return AffinePermutation.from_word(self.n, self.r, self.letters)

    def __len__(self) -> int:
        return len(self.letters)


@dataclass(frozen=True)
class IntegralWeight:
    """``sum v_i eps_i + kappa c*``; the value at ``i + k*n`` is ``v_i - k*kappa``."""

    n: int
    contents: tuple[int, ...]
    kappa: int

    def __post_init__(self):
        contents = tuple(int(x) for x in self.contents)
        if len(contents) != self.n:
            raise InvalidInput(f"weight has {len(contents)} contents, expected {self.n}")
        object.__setattr__(self, "contents", contents)

    def value(self, i: int) -> int:
        r, k = _split(i, self.n)
        return self.contents[r - 1] - k * self.kappa

    def pairing(self, i: int, j: int) -> int:
        """``<zeta, alpha_ij^vee>``."""
        return self.value(i) - self.value(j)

    def to_dict(self) -> dict:
        return {"n": self.n, "contents": list(self.contents), "kappa": self.kappa}

    @classmethod
    def from_dict(cls, data: dict) -> IntegralWeight:
        try:
            return cls(int(data["n"]), tuple(int(x) for x in data["contents"]), int(data["kappa"]))
        except (KeyError, TypeError) as exc:
            raise InvalidInput(f"bad weight JSON: {data!r}") from exc


def act_weight(w: AffinePermutation, z: IntegralWeight) -> IntegralWeight:
    """Affine action: ``(w.z)(i) = z(w^{-1}(i))``."""
    if w.n != z.n:
        raise MismatchedRank(f"rank {w.n} element on rank {z.n} weight")
    inv = w.inverse()
    return IntegralWeight(z.n, tuple(z.value(inv(i)) for i in range(1, z.n + 1)), z.kappa)


def min_coset_rep(
    w: AffinePermutation, subset: Iterable[int]
) -> tuple[AffinePermutation, AffinePermutation]:
    """Split ``w = x * y`` with ``y`` in ``W_I`` and ``x`` minimal in ``w W_I``."""
    subset = sorted(set(subset))
    for i in subset:
        if not 0 <= i < w.n:
            raise IndexOutOfRange(f"s_{i} undefined for n={w.n}")
    x, y = w, AffinePermutation.identity(w.n)
    while True:
        for i in subset:
            if x.has_right_descent(i):
                s = AffinePermutation.s(w.n, i)
                x, y = x * s, s * y
                break
        else:
            return x, y


def in_z(w: AffinePermutation, z: IntegralWeight) -> bool:
    """No root of ``R(w)`` pairs with ``z`` to ``+1`` or ``-1``."""
    if w.n != z.n:
        raise MismatchedRank(f"rank {w.n} element on rank {z.n} weight")
    return all(z.pairing(i, j) not in (-1, 1) for i, j in w.inversion_set())


def elements_up_to_length(
    n: int, max_length: int, r_values: Iterable[int] = (0,)
) -> Iterator[AffinePermutation]:
    """Every ``w`` with ``l(w) <= max_length`` and ``pi``-power in ``r_values``.

    Yielded in order of increasing length, each length level sorted by window.
    """
    level = sorted({AffinePermutation.pi(n, r) for r in r_values}, key=lambda w: w.window)
    seen = set(level)
    for length in range(max_length + 1):
        yield from level
        if length == max_length:
            return
        nxt = set()
        for w in level:
            for i in range(n):
                if not w.has_left_descent(i):
                    v = AffinePermutation.s(n, i) * w
                    if v not in seen:
                        nxt.add(v)
        seen |= nxt
        level = sorted(nxt, key=lambda w: w.window)


def bfs_ball(
    n: int, max_length: int, r_values: Iterable[int], accept
) -> list[AffinePermutation]:
    """Elements reachable from ``pi^r`` by length-increasing left ``s_i`` steps
    through elements satisfying ``accept``; a pruned version of
    :func:`elements_up_to_length`."""
    start = [AffinePermutation.pi(n, r) for r in r_values]
    out, seen = [], set()
    queue = deque()
    for w in start:
        if w not in seen and accept(w):
            seen.add(w)
            queue.append((w, 0))
    while queue:
        w, length = queue.popleft()
        out.append(w)
        if length == max_length:
            continue
        for i in range(n):
            if w.has_left_descent(i):
                continue
            v = AffinePermutation.s(n, i) * w
            if v not in seen and accept(v):
                seen.add(v)
                queue.append((v, length + 1))
    return out
