"""Seeded random generators for property sweeps on both numeric backends."""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from .fock import N_MODES, QuadraticOperator
from .gaussian import GaussianRational
from .spinor import SL2C, Dyad, FourVector, Spinor


def rng(seed: int) -> np.random.Generator:
    return np.random.default_rng(seed)


def random_rational(gen: np.random.Generator, num: int = 9, den: int = 5) -> Fraction:
    return Fraction(int(gen.integers(-num, num + 1)), int(gen.integers(1, den + 1)))


def random_gaussian(gen: np.random.Generator, num: int = 9, den: int = 5) -> GaussianRational:
    return GaussianRational(random_rational(gen, num, den), random_rational(gen, num, den))


def random_complex(gen: np.random.Generator) -> complex:
    return complex(gen.normal(), gen.normal())


def random_spinor(gen: np.random.Generator, exact: bool = False) -> Spinor:
    if exact:
        return Spinor((random_gaussian(gen), random_gaussian(gen)))
    return Spinor((random_complex(gen), random_complex(gen)))


def random_sl2c(gen: np.random.Generator, exact: bool = False) -> SL2C:
    """Random unimodular matrix; exact samples solve ``d = (1 + b c) / a``."""
    if exact:
        a = GaussianRational(0)
        while not a:
            a = random_gaussian(gen)
        b, c = random_gaussian(gen), random_gaussian(gen)
        return SL2C(((a, b), (c, (1 + b * c) / a)))
    while True:
        m = gen.normal(size=(2, 2)) + 1j * gen.normal(size=(2, 2))
        det = np.linalg.det(m)
        if abs(det) > 1e-3:
            return SL2C.from_array(m / np.sqrt(det))


def random_dyad(gen: np.random.Generator, exact: bool = False) -> Dyad:
    """Random normalised dyad (``u_A v^A = 1``)."""
    while True:
        d = Dyad(random_spinor(gen, exact), random_spinor(gen, exact))
        p = d.pairing
        if (p != 0) if exact else (abs(p) > 1e-3):
            return d.normalized()


def random_four_vector(gen: np.random.Generator, exact: bool = False) -> FourVector:
    if exact:
        return FourVector(tuple(random_rational(gen) for _ in range(4)))
    return FourVector(tuple(float(x) for x in gen.normal(size=4)))


def random_quadratic(gen: np.random.Generator, n_modes: int = N_MODES, density: float = 0.3, num: int = 3, den: int = 2) -> QuadraticOperator:
    """Sparse random quadratic form with small Gaussian-rational coefficients."""

    def coeff():
        if gen.random() > density:
            return GaussianRational(0)
        return random_gaussian(gen, num, den)

    def mat():
        return [[coeff() for _ in range(n_modes)] for _ in range(n_modes)]

    return QuadraticOperator(coeff(), mat(), mat(), mat(), n_modes)
