"""SU(2) and SL(2,C) representation bookkeeping.

Spins are stored as integers ``twice_j`` so that every label and dimension
stays exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterator

from .biglog import BigLogNumber

__all__ = [
    "IrrepLabel",
    "LorentzLabel",
    "MultiplicityTable",
    "multiplicity",
    "branching_multiplicity",
    "peter_weyl_dimension",
    "peter_weyl_cumulative",
    "cutoff_length",
    "ur_count_from_cutoff",
    "lorentz_decompose",
    "maxwell_product",
    "bispinor_product",
]


def _twice(j) -> int:
    t = Fraction(j) * 2
    if t.denominator != 1 or t < 0:
        raise ValueError(f"{j!r} is not a non-negative half-integer")
    return int(t)


@dataclass(frozen=True, order=True)
class IrrepLabel:
    """SU(2) irrep of spin ``twice_j / 2``."""

    twice_j: int

    def __post_init__(self):
        if self.twice_j < 0:
            raise ValueError("twice_j must be >= 0")

    @classmethod
    def spin(cls, j) -> "IrrepLabel":
        return cls(_twice(j))

    @property
    def j(self) -> Fraction:
        return Fraction(self.twice_j, 2)

    @property
    def dimension(self) -> int:
        return self.twice_j + 1

    def __str__(self) -> str:
        return str(self.j)


@dataclass(frozen=True, order=True)
class LorentzLabel:
    """SL(2,C) irrep ``D(a, b)`` with ``a = twice_a / 2`` and ``b = twice_b / 2``."""

    twice_a: int
    twice_b: int

    def __post_init__(self):
        if self.twice_a < 0 or self.twice_b < 0:
            raise ValueError("labels must be non-negative")

    @classmethod
    def of(cls, a, b) -> "LorentzLabel":
        return cls(_twice(a), _twice(b))

    @property
    def dimension(self) -> int:
        return (self.twice_a + 1) * (self.twice_b + 1)

    def __str__(self) -> str:
        return f"D({Fraction(self.twice_a, 2)},{Fraction(self.twice_b, 2)})"


@dataclass(frozen=True)
class MultiplicityTable:
    """Multiplicities of spin ``j`` in the ``N``-fold tensor power of spin 1/2."""

    n: int
    counts: dict  # twice_j -> multiplicity

    def __getitem__(self, j) -> int:
        return self.counts.get(_twice(j), 0)

    def items(self) -> Iterator[tuple[IrrepLabel, int]]:
        for tj in sorted(self.counts, reverse=True):
            yield IrrepLabel(tj), self.counts[tj]

    def dimension_sum(self) -> int:
        return sum((tj + 1) * m for tj, m in self.counts.items())

    def is_unimodal(self) -> bool:
        """Counts rise then fall (ties allowed) when ordered by increasing ``j``."""
        seq = [self.counts[tj] for tj in sorted(self.counts)]
        k = 0
        while k + 1 < len(seq) and seq[k + 1] >= seq[k]:
            k += 1
        return all(seq[i + 1] <= seq[i] for i in range(k, len(seq) - 1))

    def peak(self) -> IrrepLabel:
        """Largest spin among those of maximal multiplicity."""
        best = max(self.counts.values())
        return IrrepLabel(max(tj for tj, m in self.counts.items() if m == best))


def multiplicity(n: int) -> MultiplicityTable:
    """``m(j, N) = C(N, N/2 - j) - C(N, N/2 - j - 1)`` for ``N >= 1``."""
    if n < 1:
        raise ValueError("N must be >= 1")
    counts = {}
    for tj in range(n % 2, n + 1, 2):
        k = (n - tj) // 2
        counts[tj] = comb(n, k) - (comb(n, k - 1) if k >= 1 else 0)
    return MultiplicityTable(n, counts)


def branching_multiplicity(n: int) -> MultiplicityTable:
    """Independent oracle: couple one spin-1/2 at a time (``j -> j +- 1/2``)."""
    if n < 1:
        raise ValueError("N must be >= 1")
    counts = {1: 1}
    for _ in range(n - 1):
        nxt: dict[int, int] = {}
        for tj, m in counts.items():
            nxt[tj + 1] = nxt.get(tj + 1, 0) + m
            if tj > 0:
                nxt[tj - 1] = nxt.get(tj - 1, 0) + m
        counts = nxt
    return MultiplicityTable(n, counts)


def peter_weyl_dimension(j) -> int:
    """Dimension ``(2j + 1)**2`` of the spin-``j`` block of ``L2(S^3)``."""
    label = j if isinstance(j, IrrepLabel) else IrrepLabel.spin(j)
    return label.dimension**2


def peter_weyl_cumulative(j_max) -> int:
    """``sum (2j + 1)**2`` over ``j = 0, 1/2, ..., j_max``."""
    top = j_max.twice_j if isinstance(j_max, IrrepLabel) else _twice(j_max)
    return sum((tj + 1) ** 2 for tj in range(top + 1))


def cutoff_length(radius, n_urs) -> BigLogNumber:
    """Shortest resolvable wavelength ``R / sqrt(N)``."""
    r = BigLogNumber.of(radius)
    n = BigLogNumber.of(n_urs)
    if r.is_zero or n.is_zero:
        raise ValueError("R and N must be positive")
    return r / n.sqrt()


def ur_count_from_cutoff(radius, cutoff) -> BigLogNumber:
    """Inverse of ``cutoff_length``: ``N = (R / l0)**2``."""
    return (BigLogNumber.of(radius) / BigLogNumber.of(cutoff)) ** 2


def lorentz_decompose(left: LorentzLabel, right: LorentzLabel) -> list[tuple[LorentzLabel, int]]:
    """``D(a,b) x D(c,d) = sum_{e=|a-c|}^{a+c} sum_{f=|b-d|}^{b+d} D(e,f)``, each once."""
    out = []
    for te in range(abs(left.twice_a - right.twice_a), left.twice_a + right.twice_a + 1, 2):
        for tf in range(abs(left.twice_b - right.twice_b), left.twice_b + right.twice_b + 1, 2):
            out.append((LorentzLabel(te, tf), 1))
    return sorted(out, reverse=True)


def maxwell_product() -> list[tuple[LorentzLabel, int]]:
    """``D(1/2,0) x D(1/2,0)``: a spin-1 triplet plus a singlet, ``D(1,0) + D(0,0)``."""
    half = LorentzLabel(1, 0)
    return lorentz_decompose(half, half)


def bispinor_product() -> list[tuple[LorentzLabel, int]]:
    """``D(1/2,0) x D(0,1/2) = D(1/2,1/2)``, the four-vector."""
    return lorentz_decompose(LorentzLabel(1, 0), LorentzLabel(0, 1))
