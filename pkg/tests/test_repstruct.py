import pytest

from g2hol.berger import hI_algebra, hII_algebra
from g2hol.catalog import _t2_Z, get_entry
from g2hol.exterior import C1, C2
from g2hol.g2star import LieMatrixAlgebra, stabilizer_algebra
from g2hol.linalg import Matrix, Subspace, unit_vector
from g2hol.repstruct import (associative_envelope, commutant, extract_invariants_typeI, extract_Z_typeII,
                             holonomy_type, indecomposable, is_isotropic_subspace, socle, trace_radical)
from g2hol.scalar import ONE

E = [unit_vector(7, i) for i in range(7)]


def _invariant(h, S):
    return all(S.contains(m.apply(v)) for m in h.basis() for v in S.basis)


def test_socle_of_the_parabolics():
    s1 = socle(hI_algebra())
    assert s1 == Subspace(7, [E[0]])
    s2 = socle(hII_algebra())
    assert s2 == Subspace(7, [E[0], E[1]])
    assert is_isotropic_subspace(s1, C1.gram) and is_isotropic_subspace(s2, C2.gram)


@pytest.mark.parametrize("eid,dim,kind", [
    ("T1.1-gl2", 1, "I"), ("T1.4a", 1, "I"), ("T2.1-sl2", 2, "II"), ("T2.5-a0-n13", 2, "II"),
    ("T3.1-sl2", 3, "III"), ("T3.2-a0[k=2]", 3, "III"),
])
def test_type_by_socle(eid, dim, kind):
    e = get_entry(eid)
    r = holonomy_type(e.algebra, e.convention)
    assert (r.socle_dim, r.type) == (dim, kind)
    assert r.socle_isotropic and _invariant(e.algebra, r.socle)
    assert r.indecomposable == "yes"


def test_g2_is_irreducible():
    r = holonomy_type(stabilizer_algebra(C1), C1)
    assert r.type == "irreducible" and r.socle_dim == 7
    assert commutant(stabilizer_algebra(C1)).dim == 1


def test_envelope_and_radical_of_m():
    h = get_entry("T1.1-a0").algebra  # nilpotent
    A = associative_envelope(h)
    assert A.contains(Matrix.identity(7).entries)
    rad = trace_radical(A, 7)
    # everything but the identity direction is nilpotent
    assert len(rad) == A.dim - 1


def test_zero_algebra_is_decomposable():
    zero = LieMatrixAlgebra(7, Subspace.zero(49), closed=True)
    assert indecomposable(zero, C1.gram).verdict == "no"


@pytest.mark.parametrize("eid", ["T2.5d-a0[s=1,alpha=1]", "T2.5d-aI[s=1,alpha=1]"])
def test_listed_algebra_that_splits(eid):
    """At s = 1, alpha = 1 the space Z is Z_1 and the representation splits orthogonally."""
    e = get_entry(eid)
    v = indecomposable(e.algebra, C2.gram)
    assert v.verdict == "no"
    W1, W2 = v.splitting
    G = C2.gram
    assert W1.dim + W2.dim == 7 and W1.intersect(W2).dim == 0
    for W in (W1, W2):
        assert _invariant(e.algebra, W)
        gW = Matrix([[C2.inner(a, b) for b in W.basis] for a in W.basis])
        assert gW.rank() == W.dim
    assert all(not C2.inner(a, b) for a in W1.basis for b in W2.basis)
    # the invariant line is b3 + b5
    line = W1 if W1.dim == 1 else W2
    assert line == Subspace(7, [tuple(ONE if i in (2, 4) else 0 for i in range(7))])
    # the extra invariant line also enlarges the socle beyond the declared Type II
    r = holonomy_type(e.algebra, G)
    assert (r.socle_dim, e.declared_type) == (3, "II")


def test_extract_invariants_typeI():
    a, u, v, y = extract_invariants_typeI(get_entry("T1.4b[j=0]").algebra)
    assert (a.dim, u.dim, v.dim, y.dim) == (1, 0, 1, 2)
    with pytest.raises(ValueError):
        extract_invariants_typeI(hII_algebra())


def test_extract_Z():
    p = {"s": ONE * 3 / 10, "alpha": ONE * 3 / 5}
    e = get_entry("T2.5d-a0", **p)
    assert extract_Z_typeII(e.algebra) == Subspace(4, _t2_Z("d", e.parameters))
