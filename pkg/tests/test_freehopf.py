"""Free braided Hopf algebra on a diagonal braiding: shuffle coproduct,
graded quotients, primitives."""

import pytest

from nicholsforge.braided import DiagonalBraiding
from nicholsforge.freehopf import (
    GradedQuotient,
    primitives,
    quotient_by_hopf_ideal,
    shuffle_coproduct,
    tensor_space,
)
from nicholsforge.linalg import Matrix
from nicholsforge.scalars import ONE, ZERO, root_of_unity

TRIVIAL = DiagonalBraiding.from_entries([["1"]])
SIGN = DiagonalBraiding.from_entries([["-1"]])
QP = DiagonalBraiding.from_entries([["-1", "1"], ["1", "-1"]])


def test_tensor_space_dims_and_labels():
    V3 = tensor_space(QP, 3)
    assert V3.dim == 8
    assert V3.labels[0] == "x1*x1*x1"
    assert tensor_space(QP, 0).labels == ("1",)


def test_shuffle_coproduct_counts_splits():
    # trivial braiding, degree 2: Delta(x*x) has (1,1) component 2 x(x)x
    comps = shuffle_coproduct(TRIVIAL, 2)
    block = comps[(1, 1)]
    assert block.get(0, 0) == ONE + ONE


def test_shuffle_coproduct_sign_braiding_cancels():
    # q = -1: the two splits of x*x cancel, x*x is primitive
    comps = shuffle_coproduct(SIGN, 2)
    assert comps[(1, 1)].is_zero()


def test_shuffle_coproduct_outer_components_are_identity():
    comps = shuffle_coproduct(QP, 3)
    assert comps[(0, 3)] == Matrix.identity(8)
    assert comps[(3, 0)] == Matrix.identity(8)


def test_free_quotient_dims_are_powers():
    Q = GradedQuotient.free(QP, 4)
    assert Q.dims == (1, 2, 4, 8, 16)
    assert Q.total_dim() == 31


def test_free_mul_block_concatenates():
    Q = GradedQuotient.free(QP, 3)
    block = Q.mul_block(1, 2)
    assert block.shape == (8, 8)
    assert block == Matrix.identity(8)


def test_primitives_of_free_algebra():
    Q = GradedQuotient.free(QP, 3)
    assert primitives(Q, 1).dim == 2
    # degree 2 free Lie dimension is 1 classically; braided count differs:
    # x1*x1 and x2*x2 are primitive under q_ii = -1, plus one commutator
    assert primitives(Q, 2).dim == 3


def test_primitive_degree_out_of_range():
    Q = GradedQuotient.free(QP, 2)
    with pytest.raises(ValueError):
        primitives(Q, 3)


def test_quotient_kills_generator_and_descendants():
    Q = GradedQuotient.free(SIGN, 4)
    # x*x is primitive for q = -1; kill it
    R = quotient_by_hopf_ideal(Q, [(2, [ONE])])
    assert R.dims == (1, 1, 0, 0, 0)


def test_quotient_rejects_non_primitive_generator():
    Q = GradedQuotient.free(TRIVIAL, 3)
    # x*x is not primitive when q = 1
    with pytest.raises(ValueError):
        quotient_by_hopf_ideal(Q, [(2, [ONE])])


def test_quotient_by_empty_ideal_is_same_object():
    Q = GradedQuotient.free(QP, 2)
    assert quotient_by_hopf_ideal(Q, []) is Q


def test_quotient_structure_blocks_stay_compatible():
    z3 = root_of_unity(3, 1)
    b = DiagonalBraiding(((z3,),))
    Q = GradedQuotient.free(b, 4)
    rep = primitives(Q, 3)
    assert rep.dim == 1
    R = quotient_by_hopf_ideal(Q, [(3, rep.subspace.basis.column_vector(0))])
    assert R.dims == (1, 1, 1, 0, 0)
    # multiplication must still land in the right space
    assert R.mul_block(1, 1).shape == (1, 1)
    assert R.mul_block(1, 2).shape == (0, 1)
