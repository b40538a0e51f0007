from hypothesis import given

from g2hol.exterior import C1, C2, C3, act_on_form
from g2hol.g2star import (G2Params, LieMatrixAlgebra, g2_basis, g2_from_params, lie_closure, so_algebra,
                          so_check, stabilizer_algebra)
from g2hol.linalg import Matrix

from conftest import vectors


def test_stabilizer_is_the_fourteen_parameter_model():
    st = stabilizer_algebra(C1)
    model = LieMatrixAlgebra.from_matrices(g2_basis(), n=7)
    assert st.dim == 14 and st == model
    assert st.closed and model.closed
    assert all(so_check(C1, m) for m in st.basis())


def test_other_conventions_have_g2_stabilizers():
    for conv in (C2, C3):
        st = stabilizer_algebra(conv)
        assert st.dim == 14 and st.closed
        assert st.is_subalgebra_of(so_algebra(conv))


def test_so_has_dimension_21():
    assert so_algebra(C1).dim == 21


@given(vectors(14))
def test_every_parameter_point_annihilates_omega(s):
    m = g2_from_params(G2Params(s))
    assert act_on_form(m, C1.omega).is_zero()
    assert so_check(C1, m)


def test_lie_closure_of_two_root_vectors():
    x = Matrix.unit(3, 0, 1)
    y = Matrix.unit(3, 1, 0)
    alg = lie_closure([x, y])
    assert alg.dim == 3 and alg.closed


def test_bracket_failure_is_reported():
    alg = LieMatrixAlgebra.from_matrices([Matrix.unit(3, 0, 1), Matrix.unit(3, 1, 0)])
    assert not alg.closed
    assert alg.first_bracket_failure() == (0, 1)
