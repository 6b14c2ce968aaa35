from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings

from urkit.errors import GridTooSmall, NotNull, NotSymmetric, ZeroSpinor
from urkit.fields import (
    FieldStrength,
    PlaneWave,
    field_strength,
    hodge_dual,
    kg_convergence,
    kg_leading_error,
    kg_residual,
    maxwell_identity_check,
    weyl_rank_check,
)
from urkit.gaussian import GaussianRational as G
from urkit.sampling import random_complex, random_spinor, rng
from urkit.spinor import FourVector, Spinor, spinor_to_null

from strategies import float_spinor, nonzero_spinor

WAVE = (1, Fraction(1, 3), Fraction(2, 3), Fraction(2, 3))


def stencil_oracle(k, h) -> float:
    """Exact symbol of the second-difference d'Alembertian on exp(-i k.x)."""
    kk = np.array([float(c) for c in k])
    sym = [(2 * np.cos(c * h) - 2) / h**2 for c in kk]
    return abs(sym[0] - sum(sym[1:]))


def test_plane_wave_unit_modulus():
    psi = PlaneWave(FourVector(WAVE), 0.2, 5).sample()
    assert np.allclose(np.abs(psi), 1)


@pytest.mark.parametrize("h", [0.2, 0.1, 0.05])
def test_residual_matches_symbol(h):
    assert kg_residual(PlaneWave(FourVector(WAVE), h)) == pytest.approx(stencil_oracle(WAVE, h), rel=1e-6)


@pytest.mark.parametrize("h", [0.1, 0.05])
def test_residual_matches_taylor(h):
    assert kg_residual(PlaneWave(FourVector(WAVE), h)) == pytest.approx(kg_leading_error(WAVE, h), rel=0.02)


def test_second_order_convergence():
    _, ratios = kg_convergence(WAVE)
    assert all(3.6 <= r <= 4.4 for r in ratios)


def test_zero_wave():
    assert kg_residual(PlaneWave(FourVector((0, 0, 0, 0)))) == 0


def test_massive_wave_tends_to_mass():
    res, _ = kg_convergence((1, 0, 0, 0))
    assert abs(res[-1] - 1) < 1e-3
    assert abs(res[-1] - 1) < abs(res[0] - 1)


def test_axis_aligned_null_wave_cancels():
    assert kg_residual(PlaneWave(FourVector((1, 0, 0, 1)), 0.1)) < 1e-10


def test_grid_too_small():
    with pytest.raises(GridTooSmall):
        kg_residual(PlaneWave(FourVector(WAVE), 0.1, 2))
    with pytest.raises(ValueError):
        PlaneWave(FourVector(WAVE), 0)


def test_weyl_basis_spinor():
    r = weyl_rank_check(Spinor.exact(1, 0))
    assert r.matrix == ((2, 0), (0, 0))
    assert r.kernel == Spinor.exact(0, 1)
    assert r.rank == 1 and r.det == 0 and r.passed


@given(nonzero_spinor)
def test_weyl_exact(u):
    r = weyl_rank_check(u)
    assert r.det == 0 and r.rank == 1 and r.weyl_residual == 0
    # kernel is Hermitian-orthogonal to u and annihilated by sigma.k
    assert u[0].conjugate() * r.kernel[0] + u[1].conjugate() * r.kernel[1] == 0
    m = r.matrix
    assert m[0][0] * r.kernel[0] + m[0][1] * r.kernel[1] == 0


@given(nonzero_spinor)
def test_weyl_scaling_keeps_kernel_direction(u):
    a = weyl_rank_check(u).kernel
    b = weyl_rank_check(u.scale(G(3, -2))).kernel
    assert a[0] * b[1] - a[1] * b[0] == 0


def test_weyl_float_and_zero():
    assert weyl_rank_check(Spinor((0.3 + 1j, -0.2 + 0.1j))).passed
    with pytest.raises(ZeroSpinor):
        weyl_rank_check(Spinor.exact(0, 0))


def null_field(gen):
    u = random_spinor(gen)
    return random_complex(gen) * np.outer(u.components, u.components), spinor_to_null(u)


def test_maxwell_cyclic_identity():
    gen = rng(31)
    for _ in range(100):
        phi, k = null_field(gen)
        rep = maxwell_identity_check(phi, k)
        assert rep.passed and rep.antisymmetric
        assert rep.cyclic_residual < 1e-10
        assert rep.transverse_residual < 1e-10 * max(1.0, np.max(np.abs(phi)))


def test_zero_field():
    rep = maxwell_identity_check(np.zeros((2, 2)), FourVector((1, 0, 0, 1)))
    assert rep.passed and not np.any(rep.field.F)


def test_generic_phi_breaks_cyclic_identity():
    rep = maxwell_identity_check(np.array([[1, 0.5], [0.5, 2]]), FourVector((1, 0, 0, 1)))
    assert not rep.passed


def test_maxwell_guards():
    with pytest.raises(NotNull):
        maxwell_identity_check(np.eye(2), FourVector((1, 0, 0, 0)))
    with pytest.raises(NotSymmetric):
        maxwell_identity_check(np.array([[1, 2], [0, 1]]), FourVector((1, 0, 0, 1)))


@given(float_spinor)
@settings(max_examples=50)
def test_phi_part_is_anti_self_dual(u):
    phi = np.outer(u.components, u.components)
    eps = np.array([[0, 1], [-1, 0]])
    pauli = np.array([[[1, 0], [0, 1]], [[0, 1], [1, 0]], [[0, -1j], [1j, 0]], [[1, 0], [0, -1]]])
    half = 0.25 * np.einsum("mab,ncd,bd,ac->mn", pauli, pauli, phi, eps)
    assert np.allclose(hodge_dual(half), -1j * half, atol=1e-9)
    f, _ = field_strength(phi)
    assert np.allclose(f, 2 * half.real, atol=1e-9)


def test_field_strength_type_rejects_symmetric():
    with pytest.raises(ValueError):
        FieldStrength(np.eye(4), np.zeros(4))
