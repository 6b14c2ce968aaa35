import numpy as np
import pytest
from hypothesis import given

from urkit.errors import DegenerateDyad
from urkit.gaussian import GaussianRational as G
from urkit.sampling import random_dyad, random_sl2c, rng
from urkit.spinor import ETA, Dyad, FourVector, Spinor, induced_lorentz
from urkit.tetrad import (
    LN_PRODUCT,
    MMBAR_PRODUCT,
    dyad_to_null_tetrad,
    dyad_to_real_tetrad,
    null_to_real_tetrad,
    tetrad_metric,
)

from strategies import exact_spinor

STANDARD = Dyad(Spinor.exact(1, 0), Spinor.exact(0, 1))

NULL_GRAM = np.array(
    [[0, LN_PRODUCT, 0, 0], [LN_PRODUCT, 0, 0, 0], [0, 0, 0, MMBAR_PRODUCT], [0, 0, MMBAR_PRODUCT, 0]]
)


def test_standard_dyad_gives_identity_frame():
    rt = dyad_to_real_tetrad(STANDARD)
    assert np.all(rt.frame() == np.eye(4, dtype=int))
    assert rt.determinant() == 1


def test_standard_null_legs():
    nt = dyad_to_null_tetrad(STANDARD)
    assert nt.l == FourVector((1, 0, 0, 1))
    assert nt.n == FourVector((1, 0, 0, -1))
    assert nt.mbar == nt.m.conjugate()


def test_null_gram_exact():
    gen = rng(11)
    for _ in range(30):
        nt = dyad_to_null_tetrad(random_dyad(gen, exact=True))
        assert np.all(nt.gram() == NULL_GRAM)


@given(exact_spinor, exact_spinor)
def test_real_gram_is_eta(u, v):
    d = Dyad(u, v)
    if d.pairing == 0:
        with pytest.raises(DegenerateDyad):
            dyad_to_null_tetrad(d)
        return
    rt = dyad_to_real_tetrad(d)
    assert np.all(tetrad_metric(rt) == ETA)
    assert rt.determinant() == 1


def test_non_normalised_dyad_is_rescaled():
    d = Dyad(Spinor.exact(1, 0), Spinor.exact(0, 3))
    assert dyad_to_null_tetrad(d) == dyad_to_null_tetrad(STANDARD)


def test_degenerate_float_dyad():
    with pytest.raises(DegenerateDyad):
        dyad_to_null_tetrad(Dyad(Spinor((1.0, 2.0)), Spinor((2.0, 4.0 + 1e-15))))


def test_float_gram_close_to_eta():
    gen = rng(12)
    for _ in range(100):
        rt = dyad_to_real_tetrad(random_dyad(gen))
        scale = max(1.0, float(np.max(np.abs(rt.frame()))) ** 2)
        assert np.max(np.abs(tetrad_metric(rt) - ETA)) / scale < 1e-12


def test_frame_equivariance_exact():
    gen = rng(13)
    for _ in range(20):
        d = random_dyad(gen, exact=True)
        a = random_sl2c(gen, exact=True)
        lam = induced_lorentz(a)
        before = null_to_real_tetrad(dyad_to_null_tetrad(d)).frame()
        after = null_to_real_tetrad(dyad_to_null_tetrad(d.transform(a))).frame()
        assert np.all(before.dot(lam.T) == after)


def test_phase_rotation_spins_m():
    # u -> e^{i t} u, v -> e^{-i t} v keeps l, n and multiplies m by e^{2 i t}
    d = Dyad(Spinor.exact(G(0, 1), 0), Spinor.exact(0, G(0, -1)))
    nt, std = dyad_to_null_tetrad(d), dyad_to_null_tetrad(STANDARD)
    assert nt.l == std.l and nt.n == std.n
    assert nt.m == std.m.scale(G(-1))
