import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from g2hol.catalog import (ALPHA_GRID, TypeIElement, all_entries, cross_ratio_set, entry_ids, exact_root, get_entry,
                           gl2_algebra, gl2_subalgebra, h_type1, h_type2, m_basis, m_subspace, n_basis, parse_id,
                           phi2, plucker_decomposable, type1_coords, type2_coords, w_join, w_split)
from g2hol.exterior import C1, C2
from g2hol.g2star import stabilizer_algebra
from g2hol.linalg import Matrix
from g2hol.scalar import SQRT2, Scalar

from conftest import matrices, scalars, vectors
from formulas import (PHI1_GENERATORS, PHI2_NEGATIVE, PHI2_POSITIVE, PHI3_GENERATORS, STRUCTURAL, Phi3_equivariant,
                      phi1_equivariant, phi2_equivariant, rand_vec, rand_wprime)


@pytest.fixture(scope="module")
def entries():
    return all_entries()


@given(matrices(2), scalars(), vectors(2), vectors(2))
def test_type1_family_in_g2_and_round_trip(A, v, u, y):
    m = h_type1(A, v, u, y)
    assert stabilizer_algebra(C1).contains(m)
    assert type1_coords(m) == TypeIElement(A, v, u, y)


@given(matrices(2), vectors(4), scalars())
def test_type2_family_in_g2_and_round_trip(A, z, c):
    m = h_type2(A, z, c)
    assert stabilizer_algebra(C2).contains(m)
    assert type2_coords(m).matrix() == m


def test_coords_reject_foreign_matrices():
    with pytest.raises(ValueError):
        type1_coords(Matrix.identity(7))
    with pytest.raises(ValueError):
        type2_coords(Matrix.identity(7))


@pytest.mark.parametrize("name", sorted(STRUCTURAL))
def test_structural_formula(name):
    r = random.Random(name)
    assert all(STRUCTURAL[name](r) for _ in range(25))


@pytest.mark.parametrize("g", PHI1_GENERATORS, ids=str)
def test_phi1_equivariance(g):
    r = random.Random(1)
    assert all(phi1_equivariant(g, rand_vec(r, 4)) for _ in range(5))


@pytest.mark.parametrize("g", PHI2_POSITIVE, ids=str)
def test_phi2_equivariance_positive_determinant(g):
    r = random.Random(2)
    assert all(phi2_equivariant(g, rand_wprime(r)) for _ in range(5))


@pytest.mark.xfail(strict=True, raises=AssertionError,
                   reason="a scalar -1 on the matrix cannot change the sign of a quartic")
@pytest.mark.parametrize("g", PHI2_NEGATIVE, ids=str)
def test_phi2_equivariance_negative_determinant_as_printed(g):
    r = random.Random(3)
    assert all(phi2_equivariant(g, rand_wprime(r)) for _ in range(5))


@pytest.mark.parametrize("g", PHI2_POSITIVE + PHI2_NEGATIVE, ids=str)
def test_phi2_equivariance_with_sign_on_the_polynomial(g):
    r = random.Random(4)
    assert all(phi2_equivariant(g, rand_wprime(r), sign_on_polynomial=True) for _ in range(5))


@pytest.mark.parametrize("g", PHI3_GENERATORS, ids=str)
def test_Phi3_equivariance(g):
    r = random.Random(5)
    assert all(Phi3_equivariant(g, rand_vec(r, 4)) for _ in range(5))


def test_phi2_rejects_w0():
    with pytest.raises(ValueError):
        phi2(w_join(1, 0, 0, 0, 0, 0))


@given(vectors(4, irrational=False), vectors(4, irrational=False))
def test_plucker_accepts_wedges(a, b):
    w = tuple(a[i] * b[j] - a[j] * b[i] for i, j in ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)))
    assert plucker_decomposable(w_split(w))


def test_plucker_examples():
    e12 = (1, 0, 0, 0, 0, 0)
    assert plucker_decomposable(w_split(e12))
    assert not plucker_decomposable((1, 0, 0, 0, 0, 0))  # w0
    assert not plucker_decomposable(w_split((0, 0, 1, 1, 0, 0)))  # e14 + e23


@given(st.fractions(min_value=Fraction(1, 20), max_value=20, max_denominator=20))
def test_cross_ratio_set(q):
    if q == 1:
        return
    q = Scalar(q)
    got = cross_ratio_set([0, "inf", -q, -q.inverse()])
    q2 = q * q
    want = {q2, q2.inverse(), 1 - q2, (1 - q2).inverse(), 1 - q2.inverse(), (1 - q2.inverse()).inverse()}
    assert got == frozenset(want)


def test_cross_ratio_needs_distinct_points():
    with pytest.raises(ValueError):
        cross_ratio_set([0, 0, 1, 2])


def test_exact_root():
    assert exact_root(Scalar(8, 0), 3) == 2
    assert exact_root(4, 4) == SQRT2
    assert exact_root(Scalar(Fraction(1, 16)), 4) == Scalar(Fraction(1, 2))
    with pytest.raises(ValueError):
        exact_root(2, 4)


def test_m_and_n_pieces():
    assert len(m_basis(full=True)) == 5
    assert m_subspace(1, 1, 2).dim == 4
    assert m_subspace(1, 0, 2).dim == 3
    assert len(n_basis()) == 5
    with pytest.raises(ValueError):
        m_basis(2, 0, 0)


def test_gl2_subalgebras_are_closed():
    for name in ("sl2", "gl2", "u1", "b2", "b2hat", "d", "S", "N", "I"):
        assert gl2_algebra(name).closed
    assert gl2_algebra("s", lam=Scalar(Fraction(1, 2))).dim == 2
    with pytest.raises(KeyError):
        gl2_subalgebra("so3")


def test_default_grid_size(entries):
    assert len(entries) == len(entry_ids()) == 108
    assert len({e.id for e in entries}) == 108


def test_entries_live_in_their_g2(entries):
    for e in entries:
        assert e.algebra.is_subalgebra_of(stabilizer_algebra(e.convention)), e.id


def test_only_one_entry_fails_closure(entries):
    """Closure forces j = 0 when i = 0; the grid point (0, 1) is not a subalgebra."""
    assert [e.id for e in entries if not e.algebra.closed] == ["T1.2c[i=0,j=1]"]


def test_parse_and_get_entry():
    assert parse_id("T1.2a[lambda=1/2]") == ("T1.2a", {"lambda": Scalar(Fraction(1, 2))})
    e = get_entry("T1.2a", **{"lambda": 2})
    assert e.id == "T1.2a[lambda=2]" and e.dim == 7 and e.declared_type == "I"
    assert get_entry("T2.5c-a0[alpha=1/2 r2]").parameters["alpha"] == SQRT2 / 2
    assert get_entry("T2.1-sl2").dim == 8


@pytest.mark.parametrize("bad", ["T9.9", "T1.2a", "T1.1-a0[x=1]", "T2.5c-a0[alpha=2]",
                                 "T2.5d-a0[s=1,alpha=2]", "T2.5e-a0[kappa=2]", "T3.2-a0[k=1/2]"])
def test_bad_ids(bad):
    with pytest.raises((KeyError, ValueError)):
        get_entry(bad)


def test_alpha_grid_is_inside_the_interval():
    for a in ALPHA_GRID:
        get_entry(f"T2.5c-aI[alpha={a}]")
