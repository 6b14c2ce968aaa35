"""Two-component spinors, the spinor metric and the spinor -> null vector map.

Conventions (fixed once, used everywhere):

* Minkowski signature ``(+, -, -, -)``.
* ``sigma^0`` is the identity, ``sigma^1..3`` the standard Pauli matrices,
  no ``1/sqrt(2)`` factor:  ``k_mu = conj(u^a) sigma^mu_ab u^b``.
  The complex-conjugated spinor sits in the *left* (row) slot.
* ``epsilon_01 = epsilon^01 = +1``.  Indices are raised with
  ``u^A = epsilon^AB u_B`` and lowered with ``u_B = u^A epsilon_AB``, so the
  two maps are mutually inverse and ``u_A v^A = u^0 v^1 - u^1 v^0``.

Every function accepts either exact components (``GaussianRational`` /
``Fraction`` / ``int``) or floats; the result lives on the same backend.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .errors import NonUnimodular, VarianceMismatch
from .gaussian import GaussianRational, abs2, as_exact, conj, is_exact, mul_i

__all__ = [
    "UPPER",
    "LOWER",
    "Spinor",
    "Dyad",
    "FourVector",
    "SL2C",
    "ETA",
    "spinor_to_null",
    "mixed_null",
    "induced_lorentz",
    "epsilon_raise",
    "epsilon_lower",
    "epsilon_apply",
    "pairing",
    "sigma_dot",
    "minkowski_dot",
]

UPPER = "upper"
LOWER = "lower"

ETA = np.diag([1, -1, -1, -1])

FLOAT_TOL = 1e-12


def _real_part(z):
    """Real part that stays exact on the exact backend."""
    if isinstance(z, GaussianRational):
        return z.re
    if isinstance(z, (int, Fraction)):
        return z
    return z.real


@dataclass(frozen=True)
class Spinor:
    components: tuple
    index: str = UPPER

    def __post_init__(self):
        comps = tuple(self.components)
        if len(comps) != 2:
            raise ValueError("a spinor has exactly two components")
        if self.index not in (UPPER, LOWER):
            raise ValueError(f"index must be {UPPER!r} or {LOWER!r}")
        object.__setattr__(self, "components", comps)

    @classmethod
    def exact(cls, c0, c1, index: str = UPPER) -> "Spinor":
        return cls((as_exact(c0), as_exact(c1)), index)

    def __getitem__(self, k):
        return self.components[k]

    def __iter__(self):
        return iter(self.components)

    @property
    def is_exact(self) -> bool:
        return all(is_exact(c) for c in self.components)

    def is_zero(self) -> bool:
        return all(abs2(c) == 0 for c in self.components)

    def scale(self, lam) -> "Spinor":
        return Spinor(tuple(lam * c for c in self.components), self.index)

    def transform(self, a: "SL2C") -> "Spinor":
        """Act with ``a`` on the upper-index components."""
        if self.index != UPPER:
            raise VarianceMismatch("SL(2,C) acts on upper-index spinors")
        (a00, a01), (a10, a11) = a.entries
        u0, u1 = self.components
        return Spinor((a00 * u0 + a01 * u1, a10 * u0 + a11 * u1), UPPER)

    def raised(self) -> "Spinor":
        return self if self.index == UPPER else epsilon_raise(self)

    def lowered(self) -> "Spinor":
        return self if self.index == LOWER else epsilon_lower(self)

    def to_float(self) -> "Spinor":
        return Spinor(tuple(complex(c) for c in self.components), self.index)


def epsilon_raise(u: Spinor) -> Spinor:
    """``u^A = epsilon^AB u_B``: ``(u_0, u_1) -> (u_1, -u_0)``."""
    if u.index != LOWER:
        raise VarianceMismatch("epsilon_raise needs a lower-index spinor")
    return Spinor((u[1], -u[0]), UPPER)


def epsilon_lower(u: Spinor) -> Spinor:
    """``u_B = u^A epsilon_AB``: ``(u^0, u^1) -> (-u^1, u^0)``."""
    if u.index != UPPER:
        raise VarianceMismatch("epsilon_lower needs an upper-index spinor")
    return Spinor((-u[1], u[0]), LOWER)


def epsilon_apply(components: Sequence) -> tuple:
    """Multiply a bare component pair by the epsilon matrix ``[[0, 1], [-1, 0]]``.

    The matrix squares to ``-1``, so applying it twice negates the input.
    """
    c0, c1 = components
    return (c1, -c0)


def pairing(u: Spinor, v: Spinor):
    """Symplectic product ``u_A v^A``; antisymmetric in its arguments."""
    uu = u.raised()
    vv = v.raised()
    return uu[0] * vv[1] - uu[1] * vv[0]


@dataclass(frozen=True)
class Dyad:
    """Spinor pair ``(u, v)``; normalised when ``u_A v^A == 1``."""

    u: Spinor
    v: Spinor

    def __post_init__(self):
        object.__setattr__(self, "u", self.u.raised())
        object.__setattr__(self, "v", self.v.raised())

    @property
    def pairing(self):
        return pairing(self.u, self.v)

    @property
    def is_exact(self) -> bool:
        return self.u.is_exact and self.v.is_exact

    def is_normalized(self, tol: float = FLOAT_TOL) -> bool:
        p = self.pairing
        if is_exact(p):
            return p == 1
        return abs(p - 1) < tol

    def normalized(self) -> "Dyad":
        """Rescale ``v`` so that ``u_A v^A == 1``; zero pairing divides by zero."""
        p = self.pairing
        if is_exact(p) and p == 1:
            return self
        return Dyad(self.u, self.v.scale(1 / p))

    def transform(self, a: "SL2C") -> "Dyad":
        return Dyad(self.u.transform(a), self.v.transform(a))


# --- four-vectors ------------------------------------------------------------


@dataclass(frozen=True)
class FourVector:
    """Minkowski vector with components ``(k_0, k_1, k_2, k_3)``."""

    components: tuple

    def __post_init__(self):
        comps = tuple(self.components)
        if len(comps) != 4:
            raise ValueError("a four-vector has exactly four components")
        object.__setattr__(self, "components", comps)

    def __getitem__(self, k):
        return self.components[k]

    def __iter__(self):
        return iter(self.components)

    def __add__(self, other: "FourVector") -> "FourVector":
        return FourVector(tuple(a + b for a, b in zip(self, other)))

    def __sub__(self, other: "FourVector") -> "FourVector":
        return FourVector(tuple(a - b for a, b in zip(self, other)))

    def __neg__(self) -> "FourVector":
        return FourVector(tuple(-a for a in self))

    def scale(self, c) -> "FourVector":
        return FourVector(tuple(c * a for a in self))

    def conjugate(self) -> "FourVector":
        return FourVector(tuple(conj(a) for a in self))

    def dot(self, other: "FourVector"):
        """Bilinear (not sesquilinear) Minkowski product."""
        return minkowski_dot(self, other)

    def norm2(self):
        return minkowski_dot(self, self)

    def real(self) -> "FourVector":
        return FourVector(tuple(_real_part(a) for a in self))

    def imag(self) -> "FourVector":
        return FourVector(tuple(_real_part(mul_i(conj(a))) for a in self))

    def as_array(self) -> np.ndarray:
        dtype = object if any(is_exact(a) for a in self) else None
        return np.array(self.components, dtype=dtype)

    def is_null(self, tol: float = FLOAT_TOL) -> bool:
        n = self.norm2()
        if is_exact(n):
            return n == 0
        scale = max(1.0, abs(self[0]) ** 2)
        return abs(n) / scale < tol


def minkowski_dot(a: Sequence, b: Sequence):
    return a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3]


def sigma_dot(k: Sequence) -> tuple:
    """``sum_mu k_mu sigma^mu`` as a 2x2 nested tuple."""
    k0, k1, k2, k3 = k
    return ((k0 + k3, k1 - mul_i(k2)), (k1 + mul_i(k2), k0 - k3))


def _contract(u: Spinor, v: Spinor) -> tuple:
    """``conj(u^a) sigma^mu_ab v^b`` for mu = 0..3."""
    u0, u1 = (conj(c) for c in u.raised())
    v0, v1 = v.raised()
    return (
        u0 * v0 + u1 * v1,
        u0 * v1 + u1 * v0,
        mul_i(u1 * v0 - u0 * v1),
        u0 * v0 - u1 * v1,
    )


def spinor_to_null(u: Spinor) -> FourVector:
    """Future-pointing null vector ``k_mu = conj(u^a) sigma^mu_ab u^b``.

    Lower-index input is raised first.  The zero spinor maps to zero.
    """
    uu = u.raised()
    u0, u1 = uu
    n0, n1 = abs2(u0), abs2(u1)
    cross = conj(u0) * u1
    return FourVector((n0 + n1, 2 * _real_part(cross), 2 * _real_part(mul_i(conj(cross))), n0 - n1))


def mixed_null(u: Spinor, v: Spinor) -> FourVector:
    """Complex null vector ``m_mu = conj(u^a) sigma^mu_ab v^b``.

    With ``u = (1, 0)``, ``v = (0, 1)`` this gives ``(0, 1, -i, 0)``;
    ``conj(mixed_null(u, v)) == mixed_null(v, u)``.
    """
    return FourVector(_contract(u, v))


# --- SL(2,C) -----------------------------------------------------------------


@dataclass(frozen=True)
class SL2C:
    """Unimodular 2x2 complex matrix, stored as nested tuples."""

    entries: tuple
    tol: float = 1e-10

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.entries)
        if len(rows) != 2 or any(len(r) != 2 for r in rows):
            raise ValueError("SL2C needs a 2x2 matrix")
        object.__setattr__(self, "entries", rows)
        d = self.det()
        if is_exact(d):
            if d != 1:
                raise NonUnimodular(f"det = {d}, expected 1")
        elif abs(d - 1) > self.tol:
            raise NonUnimodular(f"|det - 1| = {abs(d - 1):.3e} exceeds {self.tol:g}")

    @classmethod
    def exact(cls, rows) -> "SL2C":
        return cls(tuple(tuple(as_exact(x) for x in r) for r in rows))

    @classmethod
    def from_array(cls, a, tol: float = 1e-10) -> "SL2C":
        a = np.asarray(a, dtype=complex)
        return cls(tuple(tuple(complex(x) for x in row) for row in a), tol)

    def det(self):
        (a, b), (c, d) = self.entries
        return a * d - b * c

    def __neg__(self) -> "SL2C":
        return SL2C(tuple(tuple(-x for x in r) for r in self.entries), self.tol)

    def __matmul__(self, other: "SL2C") -> "SL2C":
        (a, b), (c, d) = self.entries
        (e, f), (g, h) = other.entries
        return SL2C(((a * e + b * g, a * f + b * h), (c * e + d * g, c * f + d * h)), self.tol)

    @property
    def is_exact(self) -> bool:
        return all(is_exact(x) for r in self.entries for x in r)


def induced_lorentz(a: SL2C) -> np.ndarray:
    """Lorentz matrix with ``Lambda @ spinor_to_null(u) == spinor_to_null(a u)``.

    ``Lambda[mu, nu] = tr(sigma^mu A sigma^nu A^dagger) / 2``.  Exact input
    gives an object array of ``Fraction``; float input a float64 array.
    """
    if not isinstance(a, SL2C):
        a = SL2C.from_array(a)
    basis = (
        Spinor((1, 0)),
        Spinor((0, 1)),
    )
    # Column nu is sum_ab sigma^nu_ab <A e_b| sigma^mu |A e_a> / 2.
    e0, e1 = (b.transform(a) for b in basis)
    k00 = _contract(e0, e0)
    k11 = _contract(e1, e1)
    k01 = _contract(e0, e1)
    k10 = _contract(e1, e0)
    cols = (
        [x + y for x, y in zip(k00, k11)],
        [x + y for x, y in zip(k01, k10)],
        [mul_i(x - y) for x, y in zip(k01, k10)],
        [x - y for x, y in zip(k00, k11)],
    )
    exact = a.is_exact
    lam = np.empty((4, 4), dtype=object if exact else float)
    for nu, col in enumerate(cols):
        for mu, val in enumerate(col):
            lam[mu, nu] = _real_part(val) / 2
    return lam
