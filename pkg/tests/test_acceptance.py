"""Acceptance criteria 1-8.

Each test records ``(ok, detail)`` under its criterion number; the terminal
summary (see conftest) prints one PASS/FAIL line per criterion.  Parts that
cannot hold as stated are xfail(strict=True): they run in full and must fail.
"""

import random
import time

import pytest
from hypothesis import given, settings, strategies as st

from g2hol import berger, g2star, liegeom
from g2hol.berger import is_berger, table_relations_check
from g2hol.catalog import all_entries, cross_ratio_set, plucker_decomposable, w_split
from g2hol.exterior import C1, C2, C3, cross, get_convention, hat_E, is_isotropic
from g2hol.g2star import LieMatrixAlgebra, g2_basis, so_check, stabilizer_algebra
from g2hol.liegeom import (ambrose_singer, examples_registry, get_example, jacobi_check, koszul, parallel_form_check,
                           parse_endomorphism, verify_example)
from g2hol.linalg import unit_vector
from g2hol.repstruct import holonomy_type
from g2hol.scalar import Scalar

from formulas import (PHI1_GENERATORS, PHI2_NEGATIVE, PHI2_POSITIVE, PHI3_GENERATORS, STRUCTURAL, Phi3_equivariant,
                      phi1_equivariant, phi2_equivariant, rand_vec, rand_wprime)

RESULTS: dict = {}


def unattainable(reason):
    return pytest.mark.xfail(strict=True, raises=AssertionError, reason=reason)


def record(n: int, ok: bool, detail: str) -> bool:
    RESULTS.setdefault(n, []).append((bool(ok), detail))
    return ok


def _clear_caches():
    for f in (g2star.stabilizer_algebra, g2star.so_algebra, berger.hI_algebra, berger.hII_algebra,
              liegeom._catalog, liegeom.parse_endomorphism):
        f.cache_clear()


# --- 1 ----------------------------------------------------------------------


def test_criterion_1_g2_model():
    _clear_caches()
    t = time.perf_counter()
    st_ = stabilizer_algebra(C1)
    model = LieMatrixAlgebra.from_matrices(g2_basis(), n=7)
    ok = st_.dim == 14 and st_ == model and st_.is_bracket_closed() and all(so_check(C1, m) for m in st_.basis())
    dt = time.perf_counter() - t
    assert record(1, ok and dt < 1, f"dim 14, equals the parameter model, closed, skew ({dt:.2f} s)")


# --- 2 ----------------------------------------------------------------------


def test_criterion_2_cross_product():
    E = [unit_vector(7, i) for i in range(7)]
    bad = 0
    for conv in (C1, C2, C3):
        for u in E:
            for v in E:
                uv = cross(conv, u, v)
                bad += cross(conv, v, u) != tuple(-x for x in uv)
                bad += conv.inner(uv, u) != 0
                uu, uvi = conv.inner(u, u), conv.inner(u, v)
                bad += cross(conv, u, uv) != tuple(-uu * b + uvi * a for a, b in zip(u, v))
    S = hat_E(C1, E[0])
    ok = bad == 0 and S.dim == 3 and is_isotropic(C1, S) and S.contains(E[0])
    assert record(2, ok, f"3 x 49 basis pairs, {bad} identity failures; E(e1) dim {S.dim}, isotropic, contains e1")


# --- 3 ----------------------------------------------------------------------


def _table(which):
    t = time.perf_counter()
    res = table_relations_check(which)
    return res, time.perf_counter() - t


def test_criterion_3_table1():
    _clear_caches()
    r, dt = _table(1)
    ok = r.ok and r.kernel_dim == r.bruteforce_dim == r.n_symbols == 29 and dt < 10
    # the x4 count question: 29 table parameters (x4 included) = dim K(h^I)
    assert record(3, ok, f"table 1: dim K = brute force = {r.kernel_dim} = parameters (x4 counted), "
                         f"cells and footer hold ({dt:.1f} s)")


def test_criterion_3_table2_cells_and_footer():
    r, dt = _table(2)
    ok = (not r.failing_symbols and not r.relation_failures and r.pair_symmetry_failures == 0
          and r.table_rank == r.n_symbols == 25 and r.kernel_dim == r.bruteforce_dim and dt < 10)
    assert record(3, ok, f"table 2: 25 parameters, cells and footer hold, dim K = brute force = {r.kernel_dim} "
                         f"({dt:.1f} s)")


@unattainable("dim K(h^II) is 26; the table misses one tensor direction (R67 only)")
def test_criterion_3_table2_dim_25():
    r, _ = _table(2)
    assert record(3, r.kernel_dim == 25, f"table 2: dim K(h^II) = {r.kernel_dim}, criterion asks for 25")


# --- 4 ----------------------------------------------------------------------

KNOWN_BERGER_EXCEPTIONS = {
    "T1.2c[i=0,j=1]": "not bracket-closed",
    "T2.5d-a0[s=1,alpha=1]": "decomposable (orthogonal splitting), socle dim 3",
    "T2.5d-aI[s=1,alpha=1]": "decomposable (orthogonal splitting), socle dim 3",
}


def _sweep():
    t = time.perf_counter()
    failures, undetermined, n = {}, 0, 0
    for e in all_entries():
        n += 1
        conv = get_convention(e.convention)
        g2 = stabilizer_algebra(conv)
        why = []
        if not e.algebra.is_bracket_closed():
            why.append("not closed")
        elif not is_berger(e.algebra).verdict:
            why.append("not Berger")
        if not e.algebra.span.is_subspace_of(g2.span):
            why.append("omega not annihilated")
        r = holonomy_type(e.algebra, conv.gram)
        if r.type != e.declared_type:
            why.append(f"type {r.type}, declared {e.declared_type}")
        if r.indecomposable == "no":
            why.append("decomposable")
        undetermined += r.indecomposable == "undetermined"
        if why:
            failures[e.id] = why
    return n, failures, undetermined, time.perf_counter() - t


@pytest.fixture(scope="module")
def sweep():
    return _sweep()


def test_criterion_4_sweep_outside_documented_exceptions(sweep):
    n, failures, undetermined, dt = sweep
    ok = n == 108 and set(failures) == set(KNOWN_BERGER_EXCEPTIONS) and dt < 120
    assert record(4, ok, f"{n - len(failures)}/{n} entries pass ({undetermined} undetermined, {dt:.1f} s)")


@unattainable("three grid entries fail as printed; see KNOWN_BERGER_EXCEPTIONS")
def test_criterion_4_every_entry(sweep):
    n, failures, _, _ = sweep
    listed = ", ".join(f"{k}: {'/'.join(v)}" for k, v in sorted(failures.items()))
    assert record(4, not failures, f"failing: {listed}")


# --- 5 ----------------------------------------------------------------------

PRINTED_DERIVATIVE_GENERATORS = {"type1_dim6": {"D6R36"}, "type1_dim7": {"D5R56"}, "type2_dim5": {"D7R67"},
                                 "type2_dim8": {"D6R67", "D7R67"}}


def test_criterion_5_examples():
    _clear_caches()
    t = time.perf_counter()
    reports = [verify_example(ex) for ex in examples_registry()]
    dt = time.perf_counter() - t
    dims = [r.holonomy_dim for r in reports]
    derivs = {ex.name: {g for g in ex.generators if g.startswith("D")} for ex in examples_registry()}
    derivs = {k: v for k, v in derivs.items() if v}
    ok = all(r.ok for r in reports) and dims == [5, 6, 7, 3, 5, 8, 3] and dt < 30 \
        and derivs == PRINTED_DERIVATIVE_GENERATORS
    assert record(5, ok, f"{sum(r.ok for r in reports)}/7 examples, dims {dims}, derivative generators "
                         f"included ({dt:.1f} s)")


# --- 6 ----------------------------------------------------------------------


def test_criterion_6_structural_formulas():
    r = random.Random(20240601)
    bad = {name: sum(not f(r) for _ in range(100)) for name, f in STRUCTURAL.items()}
    assert record(6, not any(bad.values()), f"{len(STRUCTURAL)} formulas x 100 exact samples, "
                                            f"{sum(bad.values())} disagreements")


# --- 7 ----------------------------------------------------------------------


def test_criterion_7_auxiliary_identities():
    r = random.Random(7)
    eq = all(phi1_equivariant(g, rand_vec(r, 4)) for g in PHI1_GENERATORS for _ in range(3))
    eq &= all(phi2_equivariant(g, rand_wprime(r)) for g in PHI2_POSITIVE for _ in range(3))
    eq &= all(Phi3_equivariant(g, rand_vec(r, 4)) for g in PHI3_GENERATORS for _ in range(3))
    pl = (plucker_decomposable(w_split((1, 0, 0, 0, 0, 0))) and not plucker_decomposable((1, 0, 0, 0, 0, 0))
          and not plucker_decomposable(w_split((0, 0, 1, 1, 0, 0))))
    cr = True
    for q in (Scalar(2), Scalar("1/3"), Scalar(1, 1)):
        q2 = q * q
        want = {q2, q2.inverse(), 1 - q2, (1 - q2).inverse(), 1 - q2.inverse(), (1 - q2.inverse()).inverse()}
        cr &= cross_ratio_set([0, "inf", -q, -q.inverse()]) == frozenset(want)
    assert record(7, eq and pl and cr, "phi1, Phi3 and phi2 (det > 0) equivariant; Plucker and cross-ratio hold")


@unattainable("sgn(det) on the matrix cannot flip the sign of a quartic")
def test_criterion_7_phi2_negative_determinant():
    r = random.Random(8)
    samples = [(g, rand_wprime(r)) for g in PHI2_NEGATIVE for _ in range(3)]
    ok = all(phi2_equivariant(g, w) for g, w in samples)
    alt = all(phi2_equivariant(g, w, sign_on_polynomial=True) for g, w in samples)
    assert record(7, ok, f"phi2 at det < 0 as printed fails; with sgn(det) on the polynomial it "
                         f"{'holds' if alt else 'fails too'}")


# --- 8 ----------------------------------------------------------------------

FIRST = get_example("type1_dim5")
M_ALGEBRA = verify_example(FIRST).holonomy.algebra
PRINTED_LAMBDA = [parse_endomorphism(FIRST.printed_lambda[j]) for j in range(7)]


def _narrow_detected(p):
    """Jacobi, parallel omega, holonomy algebra."""
    if not jacobi_check(p).ok:
        return True
    ct = koszul(p)
    if not parallel_form_check(ct, p.convention):
        return True
    return ambrose_singer(ct, p).algebra != M_ALGEBRA


def _full_detected(p):
    """Narrow checks plus the printed connection table."""
    return _narrow_detected(p) or list(koszul(p).Lambda) != PRINTED_LAMBDA


def _sign_flips():
    p = FIRST.presentation
    return [((i, j, k), p.with_constant(i, j, k, -v)) for i, row in enumerate(p.constants()) for (j, k), v in row.items()]


@unattainable("sign flips of c^1_56, c^2_56 and c^7_36 keep Jacobi, nabla omega = 0 and holonomy m; "
              "only the connection table changes")
def test_criterion_8_every_sign_flip_breaks_jacobi_parallel_or_holonomy():
    survivors = [tuple(x + 1 for x in ijk) for ijk, p in _sign_flips() if not _narrow_detected(p)]
    assert record(8, not survivors, f"Jacobi / nabla omega / holonomy miss flips of c^i_jk at {survivors}")


def test_criterion_8_every_sign_flip_breaks_reproduction():
    flips = _sign_flips()
    assert record(8, len(flips) >= 11 and all(_full_detected(p) for _, p in flips),
                  f"with the connection table compared, all {len(flips)} sign flips are detected")


_mutated = st.tuples(st.integers(0, 6), st.integers(0, 5), st.integers(1, 6), st.integers(-3, 3)) \
    .filter(lambda t: t[1] < t[2])


RANDOM_MUTATIONS = []


@settings(max_examples=40)
@given(_mutated)
def test_criterion_8_random_mutations(m):
    """Random single-constant changes (a zero delta means a sign flip)."""
    i, j, k, delta = m
    p = FIRST.presentation
    old = p.c(i, j, k)
    new = (-old if old else Scalar(1)) if delta == 0 else old + delta
    RANDOM_MUTATIONS.append((i + 1, j + 1, k + 1, str(new)))
    assert _full_detected(p.with_constant(i, j, k, new))


def test_criterion_8_random_mutation_count():
    n = len(set(RANDOM_MUTATIONS))
    assert record(8, n >= 20, f"{n} distinct random mutations detected")
