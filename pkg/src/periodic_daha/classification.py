"""Isomorphism classes of the modules ``V(lambda, mu)``.

Two strict shape pairs give isomorphic modules exactly when they have the
same ``m`` and ``ell`` and lie in one ``omega``-orbit, so everything here is
shape arithmetic.  :func:`isomorphic` additionally cross-checks its verdict
against content reconstruction.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .diagrams import ShapePair, canonical_rep, enumerate_shapes, require_strict
from .exceptions import InternalInvariant, InvalidInput, MismatchedRank
from .tableaux import content, reconstruct, row_reading

__all__ = ["IsoVerdict", "classify", "isomorphic"]


@dataclass(frozen=True)
class IsoVerdict:
    """``shift`` is the ``r`` with ``b = omega^r . a``; it is set iff ``isomorphic``."""

    isomorphic: bool
    shift: Optional[int] = None

    def __post_init__(self):
        if self.isomorphic != (self.shift is not None):
            raise InvalidInput("shift must be given exactly when isomorphic")

    def to_dict(self) -> dict:
        return {"isomorphic": self.isomorphic, "shift": self.shift}


def isomorphic(a: ShapePair, b: ShapePair) -> IsoVerdict:
    """Decide ``V(a) ~ V(b)``.

    >>> ex = ShapePair(7, 2, 3, (5, 3), (1, 0))
    >>> from periodic_daha.diagrams import omega_shift
    >>> isomorphic(ex, omega_shift(ex, 2))
    IsoVerdict(isomorphic=True, shift=2)
    """
    require_strict(a)
    require_strict(b)
    if a.n != b.n:
        raise MismatchedRank(f"shapes of degree {a.n} and {b.n}")
    if (a.m, a.ell) != (b.m, b.ell):
        return IsoVerdict(False)
    ca, ra = canonical_rep(a)
    cb, rb = canonical_rep(b)
    orbit_verdict = ca == cb

    # independent check: T0 on ``a`` has a content realised by a standard
    # tableau on b's orbit iff the reconstructed canonical shapes agree
    rec_a = reconstruct(content(row_reading(a)))[0]
    rec_b = reconstruct(content(row_reading(b)))[0]
    if (rec_a == rec_b) != orbit_verdict:
        raise InternalInvariant(f"orbit and content criteria disagree on {a} and {b}")
    if not orbit_verdict:
        return IsoVerdict(False)
    return IsoVerdict(True, ra - rb)


def classify(n: int, kappa: int) -> list[ShapePair]:
    """One canonical shape pair per isomorphism class at level ``kappa``.

    Ordered by ``m``, then by ``(mu, lambda)``.

    >>> [(s.m, s.lam, s.mu) for s in classify(2, 1)]
    [(1, (2,), (0,))]
    """
    if n < 2 or kappa < 1:
        raise InvalidInput(f"need n >= 2 and kappa >= 1, got n={n}, kappa={kappa}")
    out = []
    for m in range(1, min(kappa, n) + 1):
        out.extend(enumerate_shapes(n, m, kappa - m))
    return out
