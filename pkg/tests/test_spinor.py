from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from urkit.errors import NonUnimodular, VarianceMismatch
from urkit.gaussian import GaussianRational as G
from urkit.sampling import random_sl2c, random_spinor, rng
from urkit.spinor import (
    ETA,
    LOWER,
    SL2C,
    Dyad,
    FourVector,
    Spinor,
    epsilon_apply,
    epsilon_lower,
    epsilon_raise,
    induced_lorentz,
    minkowski_dot,
    mixed_null,
    pairing,
    sigma_dot,
    spinor_to_null,
)

from strategies import exact_spinor, float_spinor

PAULI = np.array([[[1, 0], [0, 1]], [[0, 1], [1, 0]], [[0, -1j], [1j, 0]], [[1, 0], [0, -1]]])


def oracle_null(u) -> np.ndarray:
    """``u^dagger sigma^mu u`` with numpy."""
    v = np.array([complex(c) for c in u], dtype=complex)
    return np.einsum("a,mab,b->m", v.conj(), PAULI, v).real


def oracle_lorentz(a) -> np.ndarray:
    m = np.array([[complex(x) for x in r] for r in a.entries])
    return np.array([[0.5 * np.trace(PAULI[i] @ m @ PAULI[j] @ m.conj().T).real for j in range(4)] for i in range(4)])


def test_basis_spinors():
    assert spinor_to_null(Spinor.exact(1, 0)) == FourVector((1, 0, 0, 1))
    assert spinor_to_null(Spinor.exact(0, 1)) == FourVector((1, 0, 0, -1))


def test_mixed_null_convention():
    m = mixed_null(Spinor.exact(1, 0), Spinor.exact(0, 1))
    assert tuple(complex(c) for c in m) == (0, 1, -1j, 0)


def test_zero_spinor_maps_to_zero():
    assert spinor_to_null(Spinor.exact(0, 0)) == FourVector((0, 0, 0, 0))


@given(exact_spinor)
def test_null_exact(u):
    k = spinor_to_null(u)
    assert k.norm2() == 0
    assert k[0] >= 0


@given(float_spinor)
def test_null_matches_oracle(u):
    k = np.array(spinor_to_null(u).components, dtype=float)
    assert np.allclose(k, oracle_null(u), atol=1e-9)


@given(exact_spinor)
def test_phase_invariance(u):
    assert spinor_to_null(u.scale(G(0, 1))) == spinor_to_null(u)


@given(exact_spinor)
def test_lower_index_input_is_raised(u):
    assert spinor_to_null(u.lowered()) == spinor_to_null(u)


@given(exact_spinor, exact_spinor)
def test_mixed_null_conjugation(u, v):
    assert mixed_null(u, v).conjugate() == mixed_null(v, u)


def test_epsilon_round_trip():
    u = Spinor.exact(2, G(1, 1))
    assert u.lowered().raised() == u
    assert epsilon_raise(epsilon_lower(u)) == u
    assert epsilon_apply(epsilon_apply(u.components)) == tuple(-c for c in u)


def test_variance_mismatch():
    with pytest.raises(VarianceMismatch):
        epsilon_raise(Spinor.exact(1, 0))
    with pytest.raises(VarianceMismatch):
        Spinor.exact(1, 0, LOWER).transform(SL2C.exact(((1, 0), (0, 1))))


@given(exact_spinor, exact_spinor)
def test_pairing_antisymmetric(u, v):
    assert pairing(u, v) == -pairing(v, u)
    assert pairing(u, u) == 0


def test_pairing_standard_dyad():
    assert Dyad(Spinor.exact(1, 0), Spinor.exact(0, 1)).pairing == 1


def test_sl2c_rejects_non_unimodular():
    with pytest.raises(NonUnimodular):
        SL2C.exact(((2, 0), (0, 1)))
    with pytest.raises(NonUnimodular):
        SL2C.from_array([[1.1, 0], [0, 1]])


@given(exact_spinor, exact_spinor, st.integers(0, 2**32 - 1))
@settings(max_examples=50)
def test_pairing_invariant_under_sl2c(u, v, seed):
    a = random_sl2c(rng(seed), exact=True)
    assert pairing(u.transform(a), v.transform(a)) == pairing(u, v)


def test_induced_lorentz_matches_oracle():
    gen = rng(3)
    for _ in range(50):
        a = random_sl2c(gen)
        assert np.allclose(induced_lorentz(a), oracle_lorentz(a), atol=1e-10)


def test_induced_lorentz_is_lorentz_exact():
    gen = rng(4)
    for _ in range(20):
        lam = induced_lorentz(random_sl2c(gen, exact=True))
        assert np.all(lam.T.dot(ETA).dot(lam) == ETA)
        assert lam[0, 0] >= 1


def test_equivariance_and_double_cover_exact():
    gen = rng(5)
    for _ in range(20):
        a = random_sl2c(gen, exact=True)
        u = random_spinor(gen, exact=True)
        lam = induced_lorentz(a)
        assert np.all(lam.dot(spinor_to_null(u).as_array()) == spinor_to_null(u.transform(a)).as_array())
        assert np.all(induced_lorentz(-a) == lam)


def test_boost_along_z():
    # diag(e^{s/2}, e^{-s/2}) boosts along z by rapidity s
    s = 0.7
    a = SL2C.from_array(np.diag([np.exp(s / 2), np.exp(-s / 2)]))
    lam = induced_lorentz(a)
    want = np.eye(4)
    want[0, 0] = want[3, 3] = np.cosh(s)
    want[0, 3] = want[3, 0] = np.sinh(s)
    assert np.allclose(lam, want)


def test_sigma_dot_determinant_identity():
    k = FourVector((Fraction(3), Fraction(1, 2), Fraction(-2), Fraction(5, 3)))
    m = sigma_dot(k)
    assert m[0][0] * m[1][1] - m[0][1] * m[1][0] == minkowski_dot(k, k)


def test_four_vector_requires_four_components():
    with pytest.raises(ValueError):
        FourVector((1, 2, 3))
