"""Massless field identities: Klein-Gordon on a grid, Weyl rank, Maxwell cyclic identity.

Conventions follow ``spinor``: signature ``(+, -, -, -)``, plane waves
``psi(x) = exp(-i k.x)``, ``sigma^0 = 1``.  The field strength built from a
symmetric spinor ``phi^{bd}`` is

    F^{mu nu} = 1/4 sigma^mu_ab sigma^nu_cd (phi^{bd} eps^{ac} + conj(phi^{ac}) eps^{bd})

with ``a, c`` the conjugated (primed) slots.  Its ``phi`` part is
anti-self-dual, ``*F = -i F`` with ``*F^{mu nu} = 1/2 eps^{mu nu rho sigma} F_{rho sigma}``
and ``eps^{0123} = +1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

import numpy as np

from .errors import GridTooSmall, NotNull, NotSymmetric, ZeroSpinor
from .gaussian import conj, is_exact
from .spinor import ETA, FLOAT_TOL, FourVector, Spinor, sigma_dot, spinor_to_null

__all__ = [
    "PAULI",
    "DEFAULT_POINTS",
    "DEFAULT_SPACINGS",
    "PlaneWave",
    "kg_residual",
    "kg_convergence",
    "kg_leading_error",
    "WeylReport",
    "weyl_rank_check",
    "FieldStrength",
    "MaxwellReport",
    "field_strength",
    "maxwell_identity_check",
    "hodge_dual",
]

PAULI = np.array(
    [
        [[1, 0], [0, 1]],
        [[0, 1], [1, 0]],
        [[0, -1j], [1j, 0]],
        [[1, 0], [0, -1]],
    ],
    dtype=complex,
)
EPS2 = np.array([[0, 1], [-1, 0]], dtype=float)
DEFAULT_POINTS = 17
DEFAULT_SPACINGS = (0.2, 0.1, 0.05)
MAXWELL_TOL = 1e-10


def _levi_civita() -> np.ndarray:
    e = np.zeros((4,) * 4)
    for p in permutations(range(4)):
        e[p] = round(np.linalg.det(np.eye(4)[list(p)]))
    return e


LEVI_CIVITA = _levi_civita()


# --- Klein-Gordon -----------------------------------------------------------------------


@dataclass(frozen=True)
class PlaneWave:
    """``exp(-i k.x)`` sampled on ``points**4`` grid nodes with spacing ``h``."""

    k: FourVector
    h: float = 0.1
    points: int = DEFAULT_POINTS

    def __post_init__(self):
        if not self.h > 0:
            raise ValueError("grid spacing must be positive")
        if not isinstance(self.k, FourVector):
            object.__setattr__(self, "k", FourVector(tuple(self.k)))

    def wave_vector(self) -> np.ndarray:
        return np.array([complex(c).real for c in self.k], dtype=float)

    def sample(self) -> np.ndarray:
        """Values on the grid, axes ordered ``(t, x, y, z)``."""
        k = ETA @ self.wave_vector()  # k^mu, so k.x = k_mu x^mu
        axis = np.arange(self.points) * self.h
        phases = [np.exp(-1j * k[mu] * axis) for mu in range(4)]
        return np.einsum("a,b,c,d->abcd", *phases)


def kg_residual(w: PlaneWave) -> float:
    """Max-norm over interior nodes of the central-difference d'Alembertian of ``w``."""
    if w.points < 3:
        raise GridTooSmall(f"need at least 3 points per axis, got {w.points}")
    psi = w.sample()
    inner = (slice(1, -1),) * 4
    box = np.zeros(psi[inner].shape, dtype=complex)
    for mu in range(4):
        lo = [slice(1, -1)] * 4
        hi = [slice(1, -1)] * 4
        lo[mu], hi[mu] = slice(0, -2), slice(2, None)
        second = (psi[tuple(hi)] - 2 * psi[inner] + psi[tuple(lo)]) / w.h**2
        box += ETA[mu, mu] * second
    return float(np.max(np.abs(box)))


def kg_leading_error(k, h: float) -> float:
    """Taylor estimate ``h**2 / 12 |k0**4 - k1**4 - k2**4 - k3**4|`` of the stencil residual."""
    kk = np.array([complex(c).real for c in k], dtype=float)
    return h**2 / 12 * abs(kk[0] ** 4 - np.sum(kk[1:] ** 4))


def kg_convergence(k, spacings=DEFAULT_SPACINGS, points: int = DEFAULT_POINTS) -> tuple[list[float], list[float]]:
    """Residuals for each spacing and the ratios between successive refinements."""
    res = [kg_residual(PlaneWave(FourVector(tuple(k)), h, points)) for h in spacings]
    ratios = [a / b if b else float("inf") for a, b in zip(res, res[1:])]
    return res, ratios


# --- Weyl -------------------------------------------------------------------------------


@dataclass(frozen=True)
class WeylReport:
    k: FourVector
    matrix: tuple  # sigma.k
    det: object
    rank: int
    kernel: Spinor
    weyl_residual: float  # |sigmabar.k u|

    @property
    def passed(self) -> bool:
        exact = is_exact(self.det)
        det_ok = self.det == 0 if exact else abs(self.det) <= FLOAT_TOL * max(1.0, abs(complex(self.k[0])) ** 2)
        return det_ok and self.rank == 1 and self.weyl_residual <= (0 if exact else 1e-10 * max(1.0, abs(complex(self.k[0]))))


def _det2(m):
    return m[0][0] * m[1][1] - m[0][1] * m[1][0]


def weyl_rank_check(u: Spinor) -> WeylReport:
    """``sigma.k`` for ``k = spinor_to_null(u)`` is ``2 u u^dagger``: rank one, kernel ``u^perp``."""
    if u.is_zero():
        raise ZeroSpinor("the Weyl check needs a nonzero spinor")
    uu = u.raised()
    k = spinor_to_null(uu)
    m = sigma_dot(k)
    det = _det2(m)
    kernel = Spinor((-conj(uu[1]), conj(uu[0])))
    # sigmabar.k = adj(sigma.k)
    bar = ((m[1][1], -m[0][1]), (-m[1][0], m[0][0]))
    out = [bar[r][0] * uu[0] + bar[r][1] * uu[1] for r in range(2)]
    if uu.is_exact:
        rank = 2 if det != 0 else (0 if all(x == 0 for row in m for x in row) else 1)
        resid = 0.0 if all(x == 0 for x in out) else max(abs(complex(x)) for x in out)
    else:
        arr = np.array(m, dtype=complex)
        s = np.linalg.svd(arr, compute_uv=False)
        rank = int(np.sum(s > FLOAT_TOL * max(1.0, s[0])))
        resid = float(max(abs(complex(x)) for x in out))
    return WeylReport(k, m, det, rank, kernel, resid)


# --- Maxwell ----------------------------------------------------------------------------


@dataclass(frozen=True)
class FieldStrength:
    """Real antisymmetric plane-wave amplitude ``F_{mu nu}`` with carrier ``k``."""

    F: np.ndarray
    k: np.ndarray

    def __post_init__(self):
        f = np.asarray(self.F, dtype=float)
        if f.shape != (4, 4) or not np.array_equal(f, -f.T):
            raise ValueError("F must be an exactly antisymmetric 4x4 matrix")
        object.__setattr__(self, "F", f)


@dataclass(frozen=True)
class MaxwellReport:
    field: FieldStrength
    antisymmetric: bool
    symmetric_part: float  # of the raw contraction, before projection
    cyclic_residual: float  # max |k_[l F_mn]|
    transverse_residual: float  # max |F_{mu nu} k^nu|
    tolerance: float = MAXWELL_TOL

    @property
    def passed(self) -> bool:
        return self.antisymmetric and self.cyclic_residual < self.tolerance


def _complex_matrix(phi) -> np.ndarray:
    return np.array([[complex(x) for x in row] for row in phi], dtype=complex)


def field_strength(phi) -> tuple[np.ndarray, float]:
    """Upper-index ``F^{mu nu}`` from symmetric ``phi^{bd}`` and the raw symmetric-part size."""
    p = _complex_matrix(phi)
    t = np.einsum("bd,ac->badc", p, EPS2) + np.einsum("ac,bd->badc", p.conj(), EPS2)
    raw = 0.25 * np.einsum("mab,ncd,badc->mn", PAULI, PAULI, t)
    sym = float(np.max(np.abs(raw + raw.T))) if raw.size else 0.0
    f = raw.real
    return (f - f.T) / 2, max(sym, float(np.max(np.abs(raw.imag))))


def hodge_dual(f_upper: np.ndarray) -> np.ndarray:
    """``*F^{mu nu} = 1/2 eps^{mu nu rho sigma} F_{rho sigma}``."""
    return 0.5 * np.einsum("mnrs,rs->mn", LEVI_CIVITA, ETA @ f_upper @ ETA)


def maxwell_identity_check(phi, k, tol: float = FLOAT_TOL) -> MaxwellReport:
    """Build ``F`` from ``phi`` and test ``k_[l F_mn] = 0`` (momentum-space ``dF = 0``)."""
    p = _complex_matrix(phi)
    if p.shape != (2, 2):
        raise ValueError("phi must be 2x2")
    scale = max(1.0, float(np.max(np.abs(p))))
    if abs(p[0, 1] - p[1, 0]) > tol * scale:
        raise NotSymmetric("phi must be symmetric")
    kv = k if isinstance(k, FourVector) else FourVector(tuple(k))
    if not kv.is_null(tol):
        raise NotNull(f"k is not null: k.k = {kv.norm2()}")
    f_up, sym = field_strength(p)
    k_up = np.array([complex(c).real for c in kv], dtype=float)
    k_lo = ETA @ k_up
    f_lo = ETA @ f_up @ ETA
    c = np.einsum("l,mn->lmn", k_lo, f_lo)
    cyc = c + np.einsum("lmn->mnl", c) + np.einsum("lmn->nlm", c)
    anti = bool(np.array_equal(f_lo, -f_lo.T))
    fs = FieldStrength(f_lo, k_lo)
    return MaxwellReport(
        fs,
        anti,
        sym,
        float(np.max(np.abs(cyc))),
        float(np.max(np.abs(f_lo @ k_up))),
    )
