"""Null tetrads from spinor dyads and the real orthonormal frame built from them.

For a dyad ``(u, v)`` with ``u_A v^A = 1``::

    l = k(u, u)    n = k(v, v)    m = k(u, v)    mbar = k(v, u)

where ``k(a, b)_mu = conj(a) sigma^mu b``.  With the unnormalised Pauli map
these satisfy ``l.n = 2`` and ``m.mbar = -2``.  The real legs are::

    t = (l + n) / 2        z = (l - n) / 2
    x = (m + mbar) / 2     y = (mbar - m) / (2i)

which turns the standard dyad ``u = (1, 0)``, ``v = (0, 1)`` into the
identity frame.  ``(x, y, z)`` is right-handed: the frame matrix with rows
``t, x, y, z`` has determinant ``+1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import DegenerateDyad
from .gaussian import abs2, is_exact
from .spinor import FLOAT_TOL, Dyad, FourVector, minkowski_dot, mixed_null, spinor_to_null

__all__ = [
    "NullTetrad",
    "RealTetrad",
    "LN_PRODUCT",
    "MMBAR_PRODUCT",
    "DEGENERACY_TOL",
    "dyad_to_null_tetrad",
    "null_to_real_tetrad",
    "dyad_to_real_tetrad",
    "tetrad_metric",
]

LN_PRODUCT = 2
MMBAR_PRODUCT = -2
DEGENERACY_TOL = FLOAT_TOL


@dataclass(frozen=True)
class NullTetrad:
    l: FourVector
    n: FourVector
    m: FourVector
    mbar: FourVector

    def legs(self) -> tuple[FourVector, ...]:
        return (self.l, self.n, self.m, self.mbar)

    def gram(self) -> np.ndarray:
        """Bilinear Minkowski products of ``(l, n, m, mbar)``."""
        legs = self.legs()
        exact = all(is_exact(c) for leg in legs for c in leg)
        g = np.empty((4, 4), dtype=object if exact else complex)
        for i, a in enumerate(legs):
            for j, b in enumerate(legs):
                g[i, j] = minkowski_dot(a, b)
        return g


@dataclass(frozen=True)
class RealTetrad:
    t: FourVector
    x: FourVector
    y: FourVector
    z: FourVector

    def legs(self) -> tuple[FourVector, ...]:
        return (self.t, self.x, self.y, self.z)

    def frame(self) -> np.ndarray:
        """Rows are ``t, x, y, z``; entry ``[alpha, mu]`` is ``theta_mu^alpha``."""
        exact = all(is_exact(c) for leg in self.legs() for c in leg)
        return np.array([leg.components for leg in self.legs()], dtype=object if exact else float)

    def determinant(self):
        f = self.frame()
        if f.dtype == object:
            return _exact_det(f.tolist())
        return float(np.linalg.det(f))


def _exact_det(rows) -> Fraction:
    m = [[Fraction(x) for x in r] for r in rows]
    n = len(m)
    det = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if m[r][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            m[c], m[p] = m[p], m[c]
            det = -det
        det *= m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] / m[c][c]
            if f:
                m[r] = [a - f * b for a, b in zip(m[r], m[c])]
    return det


def dyad_to_null_tetrad(d: Dyad, tol: float = DEGENERACY_TOL) -> NullTetrad:
    """Null tetrad ``(l, n, m, mbar)`` of a dyad.

    A non-normalised dyad is rescaled to ``u_A v^A = 1`` first.

    Raises
    ------
    DegenerateDyad
        If ``|u_A v^A|`` is zero (exact) or below ``tol`` (float).
    """
    p = d.pairing
    if is_exact(p):
        if p == 0:
            raise DegenerateDyad("u_A v^A = 0: spinors are proportional")
    elif abs2(p) < tol * tol:
        raise DegenerateDyad(f"|u_A v^A| = {abs(p):.3e} below {tol:g}")
    d = d.normalized()
    u, v = d.u, d.v
    return NullTetrad(
        l=spinor_to_null(u),
        n=spinor_to_null(v),
        m=mixed_null(u, v),
        mbar=mixed_null(v, u),
    )


def null_to_real_tetrad(nt: NullTetrad) -> RealTetrad:
    half = Fraction(1, 2)
    exact = all(is_exact(c) for leg in nt.legs() for c in leg)
    if not exact:
        half = 0.5
    t = (nt.l + nt.n).scale(half)
    z = (nt.l - nt.n).scale(half)
    x = (nt.m + nt.mbar).scale(half).real()
    # (mbar - m) / (2i) == -Im(m)
    y = nt.m.imag().scale(-1)
    return RealTetrad(t=t, x=x, y=y, z=z)


def dyad_to_real_tetrad(d: Dyad) -> RealTetrad:
    return null_to_real_tetrad(dyad_to_null_tetrad(d))


def tetrad_metric(rt: RealTetrad) -> np.ndarray:
    """Gram matrix of Minkowski products of the legs ``(t, x, y, z)``."""
    legs = rt.legs()
    exact = all(is_exact(c) for leg in legs for c in leg)
    g = np.empty((4, 4), dtype=object if exact else float)
    for i, a in enumerate(legs):
        for j, b in enumerate(legs):
            g[i, j] = minkowski_dot(a, b)
    return g
