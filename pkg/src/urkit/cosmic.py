"""Order-of-magnitude cosmology: ur counts, Bekenstein entropies, holographic bounds.

Everything is in Planck units (``l_o = 1`` by default, masses in Planck
masses, ``m = 1 / lambda`` for a Compton wavelength ``lambda``).

Two modes:

``exact``
    Inputs are used as given and the geometric prefactors (``1/4``,
    ``4 pi``, ``8 pi``) are kept, ``pi`` symbolically.
``oom``
    Order of magnitude: every input is first rounded to its nearest power
    of ten and the prefactors are set to one, so every result is an exact
    power of ten.  Entropies are reported in bits.
"""

from __future__ import annotations

from dataclasses import dataclass, fields
from fractions import Fraction
from pathlib import Path

from .biglog import BigLogNumber
from .errors import NegativeArea, NegativeMass, NonPositiveInput, ParameterError
from .su2 import cutoff_length

__all__ = [
    "EXACT",
    "OOM",
    "MODES",
    "CosmologyParams",
    "EntropyDelta",
    "DiscrepancyRow",
    "ur_count_particle",
    "total_urs",
    "hilbert_dimension_label",
    "nucleon_count",
    "universe_area",
    "bekenstein_area_entropy",
    "bekenstein_mass_entropy",
    "particle_entropy_delta",
    "holographic_particle_bits",
    "discrepancy_report",
    "headline_exponents",
    "load_params",
    "parse_params",
]

EXACT = "exact"
OOM = "oom"
MODES = (EXACT, OOM)

PROTON_ELECTRON_RATIO = 1836
AGREEMENT_ORDERS = 3


def _check_mode(mode: str) -> None:
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")


def _positive(name: str, x) -> BigLogNumber:
    try:
        v = BigLogNumber.of(x)
    except (ValueError, ZeroDivisionError) as exc:
        raise NonPositiveInput(f"{name} must be positive, got {x!r}") from exc
    if v.is_zero:
        raise NonPositiveInput(f"{name} must be positive, got {x!r}")
    return v


def _prep(x: BigLogNumber, mode: str) -> BigLogNumber:
    return x.to_power_of_ten() if mode == OOM else x


def _prefactor(factor, pi_power: int, mode: str) -> BigLogNumber:
    if mode == OOM:
        return BigLogNumber(1)
    return BigLogNumber(Fraction(factor), 0, pi_power)


@dataclass(frozen=True)
class CosmologyParams:
    """Fiducial cosmological inputs in Planck units.

    ``m_nucleon`` / ``m_electron`` default to ``1 / lambda`` of the
    corresponding Compton wavelength.
    """

    R: BigLogNumber = BigLogNumber.power_of_ten(60)
    lambda_nucleon: BigLogNumber = BigLogNumber.power_of_ten(20)
    lambda_electron: BigLogNumber = BigLogNumber(PROTON_ELECTRON_RATIO, 20)
    M_u: BigLogNumber = BigLogNumber.power_of_ten(60)
    l_o: BigLogNumber = BigLogNumber(1)
    m_nucleon: BigLogNumber | None = None
    m_electron: BigLogNumber | None = None

    def __post_init__(self):
        for f in fields(self):
            v = getattr(self, f.name)
            if v is None:
                continue
            object.__setattr__(self, f.name, _positive(f.name, v))
        if self.m_nucleon is None:
            object.__setattr__(self, "m_nucleon", 1 / self.lambda_nucleon)
        if self.m_electron is None:
            object.__setattr__(self, "m_electron", 1 / self.lambda_electron)

    def as_strings(self) -> dict[str, str]:
        return {f.name: getattr(self, f.name).sci(6) for f in fields(self)}


KEYS = tuple(f.name for f in fields(CosmologyParams))


def parse_params(text: str) -> CosmologyParams:
    """Parse ``key = value`` lines (``#`` starts a comment) into parameters.

    Values are exact decimals or fractions (``1e60``, ``1836e20``, ``1/3``).
    """
    values = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ParameterError(f"line {lineno}: expected 'key = value', got {raw.strip()!r}")
        key, _, value = (part.strip() for part in line.partition("="))
        if key not in KEYS:
            raise ParameterError(f"line {lineno}: unknown key {key!r}; known keys: {', '.join(KEYS)}")
        if key in values:
            raise ParameterError(f"line {lineno}: duplicate key {key!r}")
        try:
            values[key] = BigLogNumber(Fraction(value))
        except (ValueError, ZeroDivisionError) as exc:
            raise ParameterError(f"line {lineno}: bad value for {key}: {value!r}") from exc
    try:
        return CosmologyParams(**values)
    except NonPositiveInput as exc:
        raise ParameterError(str(exc)) from exc


def load_params(path: str | Path) -> CosmologyParams:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParameterError(f"cannot read parameter file {path}: {exc}") from exc
    return parse_params(text)


# --- ur counts ----------------------------------------------------------------------


def ur_count_particle(R, lam, mode: str = EXACT) -> BigLogNumber:
    """Urs needed to localise a particle of Compton wavelength ``lam``: ``R / lam``."""
    _check_mode(mode)
    return _prep(_positive("R", R), mode) / _prep(_positive("lambda", lam), mode)


def total_urs(R, lam, mode: str = EXACT) -> BigLogNumber:
    """Number of elementary cells ``(R / lam)**3``."""
    return ur_count_particle(R, lam, mode) ** 3


def hilbert_dimension_label(n_urs: BigLogNumber) -> str:
    """``2^N`` written symbolically, e.g. ``2^(1e120)``; never expanded."""
    return f"2^({BigLogNumber.of(n_urs).sci()})"


def nucleon_count(params: CosmologyParams, mode: str = EXACT) -> BigLogNumber:
    return total_urs(params.R, params.lambda_nucleon, mode) / ur_count_particle(params.R, params.lambda_nucleon, mode)


# --- entropies ---------------------------------------------------------------------------


def universe_area(R, mode: str = EXACT) -> BigLogNumber:
    """Horizon area ``4 pi R**2`` (``R**2`` in oom mode)."""
    _check_mode(mode)
    return _prefactor(4, 1, mode) * _prep(_positive("R", R), mode) ** 2


def bekenstein_area_entropy(area, mode: str = EXACT) -> BigLogNumber:
    """``S = A / 4`` in Planck units (``S = A`` in oom mode)."""
    _check_mode(mode)
    try:
        a = BigLogNumber.of(area)
    except ValueError as exc:
        raise NegativeArea(f"area must be >= 0, got {area}") from exc
    if a.is_zero:
        return a
    return _prefactor(Fraction(1, 4), 0, mode) * _prep(a, mode)


def _mass(name: str, m) -> BigLogNumber:
    try:
        return BigLogNumber.of(m)
    except ValueError as exc:
        raise NegativeMass(f"{name} must be >= 0, got {m}") from exc


def bekenstein_mass_entropy(mass, mode: str = EXACT) -> BigLogNumber:
    """``S = 4 pi M**2`` (Schwarzschild ``R = 2M`` in ``S = A / 4``)."""
    _check_mode(mode)
    m = _mass("M", mass)
    if m.is_zero:
        return m
    return _prefactor(4, 1, mode) * _prep(m, mode) ** 2


@dataclass(frozen=True)
class EntropyDelta:
    """Entropy added to a universe of mass ``M_u`` by a particle of mass ``m``.

    ``exact = 4 pi ((M_u + m)**2 - M_u**2)`` and ``linearized = 8 pi M_u m``;
    ``relative_deviation = (exact - linearized) / exact = m / (2 M_u + m)``.
    In oom mode both are ``M_u * m`` and the deviation is zero.
    """

    exact: BigLogNumber
    linearized: BigLogNumber
    relative_deviation: Fraction


def particle_entropy_delta(M_u, m, mode: str = EXACT) -> EntropyDelta:
    _check_mode(mode)
    big = _mass("M_u", M_u)
    small = _mass("m", m)
    if small.is_zero:
        zero = BigLogNumber(0)
        return EntropyDelta(zero, zero, Fraction(0))
    if mode == OOM:
        v = _prep(big, mode) * _prep(small, mode) if not big.is_zero else BigLogNumber(0)
        return EntropyDelta(v, v, Fraction(0))
    # (M + m)^2 - M^2 = 2 M m + m^2, kept exact
    bf, sf = big.to_fraction(), small.to_fraction()
    exact = BigLogNumber(4 * (2 * bf * sf + sf * sf), 0, 1)
    linear = BigLogNumber(8 * bf * sf, 0, 1) if bf else BigLogNumber(0)
    return EntropyDelta(exact, linear, sf / (2 * bf + sf))


def holographic_particle_bits(lam, l_o=1, mode: str = EXACT) -> BigLogNumber:
    """Area-law bits of a particle: ``(lam / l_o)**2``."""
    _check_mode(mode)
    return (_prep(_positive("lambda", lam), mode) / _prep(_positive("l_o", l_o), mode)) ** 2


# --- comparison --------------------------------------------------------------------------


@dataclass(frozen=True)
class DiscrepancyRow:
    name: str
    ur_bits: BigLogNumber
    holographic_bits: BigLogNumber
    ur_exponent: int
    holographic_exponent: int
    gap: int
    agree: bool


def _row(name: str, ur: BigLogNumber, holo: BigLogNumber, tolerance: int) -> DiscrepancyRow:
    ue, he = ur.order_of_magnitude(), holo.order_of_magnitude()
    return DiscrepancyRow(name, ur, holo, ue, he, he - ue, abs(he - ue) <= tolerance)


def discrepancy_report(
    params: CosmologyParams | None = None, mode: str = OOM, tolerance: int = AGREEMENT_ORDERS
) -> list[DiscrepancyRow]:
    """Entropy-difference (ur) route versus area (holographic) route.

    Rows agree when their orders of magnitude differ by at most ``tolerance``.
    """
    p = params or CosmologyParams()
    rows = []
    for name, lam, mass in (
        ("nucleon", p.lambda_nucleon, p.m_nucleon),
        ("electron", p.lambda_electron, p.m_electron),
    ):
        ur = particle_entropy_delta(p.M_u, mass, mode).linearized
        holo = holographic_particle_bits(lam, p.l_o, mode)
        rows.append(_row(name, ur, holo, tolerance))
    ur_u = bekenstein_mass_entropy(p.M_u, mode)
    holo_u = bekenstein_area_entropy(universe_area(p.R / p.l_o, mode), mode)
    rows.append(_row("universe", ur_u, holo_u, tolerance))
    return rows


def headline_exponents(params: CosmologyParams | None = None) -> dict[str, int]:
    """Decimal exponents of the headline large numbers, computed in oom mode."""
    p = params or CosmologyParams()
    n_total = total_urs(p.R, p.lambda_nucleon, OOM)
    r = p.R.to_power_of_ten()
    return {
        "nucleon_urs": ur_count_particle(p.R, p.lambda_nucleon, OOM).order_of_magnitude(),
        "total_urs": n_total.order_of_magnitude(),
        "nucleon_count": nucleon_count(p, OOM).order_of_magnitude(),
        "cutoff_over_R": (cutoff_length(r, n_total) / r).order_of_magnitude(),
        "universe_entropy": bekenstein_mass_entropy(p.M_u, OOM).order_of_magnitude(),
        "universe_area_entropy": bekenstein_area_entropy(universe_area(p.R / p.l_o, OOM), OOM).order_of_magnitude(),
        "holographic_nucleon": holographic_particle_bits(p.lambda_nucleon, p.l_o, OOM).order_of_magnitude(),
        "holographic_electron": holographic_particle_bits(p.lambda_electron, p.l_o, OOM).order_of_magnitude(),
        "ur_electron": ur_count_particle(p.R, p.lambda_electron, OOM).order_of_magnitude(),
        "entropy_nucleon": particle_entropy_delta(p.M_u, p.m_nucleon, OOM).linearized.order_of_magnitude(),
        "entropy_electron": particle_entropy_delta(p.M_u, p.m_electron, OOM).linearized.order_of_magnitude(),
    }
