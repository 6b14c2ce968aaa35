from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from urkit.fock import (
    N_MODES,
    TETRAD_NUMBER_RATIO,
    FockState,
    QuadraticOperator,
    commutator,
    fock_basis,
    interior_columns,
    matrix_representation,
    number_operator,
    quantize_tetrad,
)
from urkit.gaussian import GaussianRational as G
from urkit.sampling import random_quadratic, rng

Q = QuadraticOperator
seeds = st.integers(0, 2**32 - 1)


def test_pair_commutator():
    # [a a, a+ a+] = 4 a+ a + 2
    assert commutator(Q.annihilate_pair(1, 1), Q.create_pair(1, 1)) == Q.hop(1, 1, 4) + Q.constant(2)


def test_hop_commutator():
    assert commutator(Q.hop(1, 2), Q.hop(2, 1)) == Q.hop(1, 1) - Q.hop(2, 2)


def test_distinct_mode_pairs():
    # [a1 a2, a1+ a2+] = a1+ a1 + a2+ a2 + 1
    assert commutator(Q.annihilate_pair(1, 2), Q.create_pair(1, 2)) == Q.hop(1, 1) + Q.hop(2, 2) + Q.constant(1)


def test_symmetrised_pairs():
    assert Q.create_pair(1, 2) == Q.create_pair(2, 1)


@given(seeds)
@settings(max_examples=25, deadline=None)
def test_commutator_antisymmetric_and_jacobi(seed):
    gen = rng(seed)
    p, q, r = (random_quadratic(gen) for _ in range(3))
    assert commutator(p, q) == -commutator(q, p)
    assert (commutator(p, commutator(q, r)) + commutator(q, commutator(r, p)) + commutator(r, commutator(p, q))).is_zero()


@given(seeds)
@settings(max_examples=25, deadline=None)
def test_adjoint_of_commutator(seed):
    gen = rng(seed)
    p, q = random_quadratic(gen), random_quadratic(gen)
    assert commutator(p, q).adjoint() == commutator(q.adjoint(), p.adjoint())


@given(seeds)
@settings(max_examples=25, deadline=None)
def test_real_vector_round_trip(seed):
    p = random_quadratic(rng(seed))
    v = p.to_real_vector()
    assert len(v) == Q.real_dimension(N_MODES) == 74
    assert Q.from_real_vector(v) == p


def test_matrix_oracle_agrees_on_interior():
    gen = rng(21)
    cols = interior_columns(5)
    assert all(sum(fock_basis(5)[c]) <= 3 for c in cols)
    for _ in range(10):
        p, q = random_quadratic(gen), random_quadratic(gen)
        mp, mq = matrix_representation(p, 5), matrix_representation(q, 5)
        assert matrix_representation(commutator(p, q), 5).equal_on(mp @ mq - mq @ mp, cols)


def test_matrix_oracle_detects_wrong_commutator():
    gen = rng(22)
    p, q = random_quadratic(gen, density=1), random_quadratic(gen, density=1)
    mp, mq = matrix_representation(p, 5), matrix_representation(q, 5)
    wrong = commutator(p, q) + Q.constant(1)
    assert not matrix_representation(wrong, 5).equal_on(mp @ mq - mq @ mp, interior_columns(5))


def test_fock_basis_size():
    assert len(fock_basis(4)) == 70
    assert fock_basis(1)[0] == (0, 0, 0, 0)


def test_number_operator_spectrum():
    n = number_operator()
    m = matrix_representation(n, 4)
    assert [m.entry(k, k) for k in range(len(m.basis))] == [sum(s) + 2 for s in m.basis]
    assert n.vacuum_expectation() == 2
    assert n.is_hermitian()


def test_t0_is_half_number():
    ops = quantize_tetrad()
    assert ops["t0"] == number_operator() * TETRAD_NUMBER_RATIO
    assert TETRAD_NUMBER_RATIO == Fraction(1, 2)


def test_tetrad_operators_hermitian():
    ops = quantize_tetrad()
    assert len(ops) == 16
    assert all(op.is_hermitian() for op in ops.values())


def test_number_commutes_with_tetrad():
    n = number_operator()
    assert all(commutator(n, op).is_zero() for op in quantize_tetrad().values())


def test_fock_state_apply_matches_matrix():
    gen = rng(23)
    p = random_quadratic(gen)
    basis = fock_basis(4)
    amps = gen.normal(size=len(basis)) + 1j * gen.normal(size=len(basis))
    state = FockState(dict(zip(basis, amps)), 4)
    got = state.apply(p)
    want = matrix_representation(p, 4).to_complex() @ amps
    assert np.allclose([got.amplitudes.get(b, 0) for b in basis], want)


def test_fock_state_validation():
    with pytest.raises(ValueError):
        FockState({(5, 0, 0, 0): 1.0}, 4)
    with pytest.raises(ValueError):
        FockState({(1, 0, 0): 1.0}, 4)


def test_creation_normalisation():
    out = FockState.vacuum().apply(Q.create_pair(1, 1))
    assert out.amplitudes == {(2, 0, 0, 0): pytest.approx(np.sqrt(2))}


def test_exact_coefficients():
    op = Q.hop(1, 2, G(1, Fraction(1, 3)))
    assert op.alpha[0][1] == G(1, Fraction(1, 3))
    assert op.adjoint().alpha[1][0] == G(1, Fraction(-1, 3))
