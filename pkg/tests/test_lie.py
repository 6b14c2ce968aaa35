from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from urkit.checks import null_spatial_generators, sl2_generators
from urkit.errors import NotClosed
from urkit.fock import QuadraticOperator, commutator, number_operator, quantize_tetrad
from urkit.lie import (
    ExactSpan,
    StructureConstants,
    abelian_structure,
    exact_nullspace,
    exact_rank,
    hermitian_bracket,
    identify_algebra,
    killing_signature,
    lie_closure,
    sl2c_pair_structure,
    so3_structure,
)

Q = QuadraticOperator
small_matrix = st.lists(st.lists(st.fractions(-4, 4, max_denominator=3), min_size=3, max_size=3), min_size=1, max_size=4)


@pytest.fixture(scope="module")
def tetrad_closure():
    return lie_closure(list(quantize_tetrad().values()))


@given(small_matrix)
def test_nullspace_is_annihilated(m):
    for x in exact_nullspace(m):
        assert all(sum(a * b for a, b in zip(row, x)) == 0 for row in m)
    assert len(exact_nullspace(m)) == 3 - exact_rank(m)


def test_exact_span_coordinates():
    span = ExactSpan(3)
    assert span.add([1, 0, 1]) and span.add([0, 2, 0])
    assert not span.add([2, 4, 2])
    assert span.coordinates([3, 2, 3]) == [3, 1]
    assert span.coordinates([0, 0, 1]) is None


def test_killing_signature_congruence():
    assert killing_signature([[0, 1], [1, 0]]) == (1, 1, 0)
    assert killing_signature([[2, 0, 0], [0, -3, 0], [0, 0, 0]]) == (1, 1, 1)
    assert killing_signature([[1, 2], [2, 4]]) == (1, 0, 1)


def test_so3_killing_form():
    sc = so3_structure()
    sc.check()
    assert sc.killing_form() == [[Fraction(-2) if i == j else 0 for j in range(3)] for i in range(3)]


def test_broken_jacobi_detected():
    c = np.zeros((3, 3, 3))
    c[0, 1, 2], c[1, 0, 2] = 1, -1
    c[1, 2, 1], c[2, 1, 1] = 1, -1  # [e1,e2]=e1 ; [e0,e1]=e2 ; inconsistent
    c[0, 2, 0], c[2, 0, 0] = 1, -1
    with pytest.raises(NotClosed):
        StructureConstants.from_array(c).check()


def test_non_antisymmetric_detected():
    c = np.zeros((2, 2, 2))
    c[0, 1, 0] = 1
    with pytest.raises(NotClosed):
        StructureConstants.from_array(c).check()


def test_sl2_closure():
    cl = lie_closure(sl2_generators())
    assert cl.dimension == 3
    assert killing_signature(cl.structure.killing_form()) == (2, 1, 0)
    assert cl.contains(Q.hop(1, 1) - Q.hop(2, 2))
    assert not cl.contains(Q.hop(1, 1))


def test_abelian_closure():
    cl = lie_closure([Q.hop(1, 1), Q.hop(2, 2), Q.hop(1, 1) + Q.hop(2, 2)])
    assert cl.dimension == 2
    assert identify_algebra(cl.structure).center_dimension == 2


def test_reference_sl2c_pair_identified():
    rep = identify_algebra(sl2c_pair_structure())
    assert rep.is_sl2c_pair
    assert rep.killing_signature == (6, 6, 0)
    assert [i.dimension for i in rep.ideals] == [6, 6]


def test_negative_controls():
    assert not identify_algebra(so3_structure()).is_sl2c_pair
    assert not identify_algebra(abelian_structure(2)).is_sl2c_pair
    rep = identify_algebra(so3_structure())
    assert rep.semisimple and rep.killing_signature == (0, 3, 0)


def test_direct_sum_of_compact_and_noncompact_is_rejected():
    # so(3) + so(3) has the right shape but compact real ideals
    c = np.zeros((6, 6, 6))
    so3 = so3_structure().as_float()
    c[:3, :3, :3] = so3
    c[3:, 3:, 3:] = so3
    rep = identify_algebra(StructureConstants.from_array(c.astype(int)))
    assert len(rep.ideals) == 2 and not rep.is_sl2c_pair


def test_tetrad_closure_dimension(tetrad_closure):
    assert tetrad_closure.generator_count == 16
    assert tetrad_closure.dimension == 31
    tetrad_closure.structure.check()


def test_tetrad_closure_structure(tetrad_closure):
    rep = identify_algebra(tetrad_closure.structure)
    assert rep.center_dimension == 1 and rep.derived_dimension == 30
    assert rep.reductive and not rep.is_sl2c_pair
    assert tetrad_closure.contains(number_operator())


def test_hermitian_closure_is_u4():
    cl = lie_closure(list(quantize_tetrad().values()), bracket=hermitian_bracket)
    rep = identify_algebra(cl.structure)
    assert cl.dimension == 16
    assert rep.center_dimension == 1
    assert [(i.dimension, i.centroid_type, i.killing_signature) for i in rep.ideals] == [(15, "real", (0, 15, 0))]


def test_null_spatial_probe_is_sl2c_pair():
    cl = lie_closure(null_spatial_generators())
    assert cl.dimension == 12
    assert identify_algebra(cl.structure).is_sl2c_pair


def test_closure_is_closed(tetrad_closure):
    basis = tetrad_closure.basis
    for i in range(0, len(basis), 5):
        for j in range(1, len(basis), 7):
            assert tetrad_closure.contains(commutator(basis[i], basis[j]))
