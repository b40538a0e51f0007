"""Socle, Type, indecomposability and the invariant subspaces of a holonomy representation."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .berger import hI_algebra, hII_algebra
from .catalog import m_subspace, n_subspace, type1_coords, type2_coords
from .exterior import get_convention
from .g2star import LieMatrixAlgebra
from .linalg import Matrix, RowReducer, Subspace, kernel_of_rows
from .scalar import ONE, SQRT2, ZERO, Scalar, as_scalar

__all__ = [
    "RepReport",
    "associative_envelope",
    "trace_radical",
    "socle",
    "commutant",
    "self_adjoint_part",
    "indecomposable",
    "IndecomposableVerdict",
    "holonomy_type",
    "extract_invariants_typeI",
    "extract_Z_typeII",
    "is_isotropic_subspace",
]

TYPES = {1: "I", 2: "II", 3: "III"}


def _gram(g) -> Matrix:
    if isinstance(g, Matrix):
        return g
    return get_convention(g).gram


def associative_envelope(h: LieMatrixAlgebra) -> Subspace:
    """Unital associative matrix algebra generated by ``h``."""
    n = h.n
    red = RowReducer(n * n)
    found = [Matrix.identity(n)]
    red.add(found[0].entries)
    gens = list(h.basis())
    for g in gens:
        if red.add(g.entries):
            found.append(g)
    frontier = list(found)
    while frontier:
        new = []
        for x in frontier:
            for g in gens:
                y = x @ g
                if not y.is_zero() and red.add(y.entries):
                    new.append(y)
        frontier = new
    return Subspace._from_reducer(red)


def trace_radical(alg: Subspace, n: int) -> list[Matrix]:
    """Basis of ``{x in alg : tr(x y) = 0 for all y in alg}`` (Dickson's criterion)."""
    B = [Matrix.from_flat(v, n) for v in alg.basis]
    if not B:
        return []
    # tr(x y) = sum_ij x_ij y_ji
    T = [b.T.entries for b in B]
    rows = []
    for t in T:
        row = {}
        for a, b in enumerate(B):
            s = ZERO
            for x, y in zip(b.entries, t):
                if x and y:
                    s = s + x * y
            if s:
                row[a] = s
        if row:
            rows.append(row)
    ker = kernel_of_rows(rows, len(B))
    out = []
    for c in ker.basis:
        m = Matrix.zeros(n)
        for coef, b in zip(c, B):
            if coef:
                m = m + b.scale(coef)
        out.append(m)
    return out


def socle(h: LieMatrixAlgebra, gram=None) -> Subspace:
    """Joint kernel of the radical of the associative envelope of ``h``.

    ``gram`` is accepted for symmetry with the other entry points and unused:
    the socle does not depend on the metric.
    """
    n = h.n
    rad = trace_radical(associative_envelope(h), n)
    rows = []
    for r in rad:
        rows.extend({j: x for j, x in enumerate(row) if x} for row in r.data)
    return kernel_of_rows([r for r in rows if r], n)


def is_isotropic_subspace(S: Subspace, gram) -> bool:
    G = _gram(gram)
    for u in S.basis:
        Gu = G @ u
        for v in S.basis:
            if sum((a * b for a, b in zip(Gu, v)), ZERO):
                return False
    return True


def commutant(h: LieMatrixAlgebra) -> Subspace:
    """All matrices commuting with every element of ``h`` (flattened)."""
    n = h.n
    rows = []
    for b in h.basis():
        # (X b - b X)_{ij} = sum_k X_ik b_kj - b_ik X_kj
        for i in range(n):
            for j in range(n):
                row = {}
                for k in range(n):
                    if b[k, j]:
                        c = i * n + k
                        row[c] = row.get(c, ZERO) + b[k, j]
                    if b[i, k]:
                        c = k * n + j
                        row[c] = row.get(c, ZERO) - b[i, k]
                row = {c: v for c, v in row.items() if v}
                if row:
                    rows.append(row)
    return kernel_of_rows(rows, n * n)


def _adjoint(X: Matrix, G: Matrix, Gi: Matrix) -> Matrix:
    return Gi @ X.T @ G


def self_adjoint_part(C: Subspace, gram) -> Subspace:
    """Elements ``X`` of ``C`` with ``G^-1 X^T G = X``."""
    G = _gram(gram)
    Gi = G.inverse()
    n = G.rows
    B = [Matrix.from_flat(v, n) for v in C.basis]
    if not B:
        return Subspace(n * n)
    diffs = [(_adjoint(b, G, Gi) - b).entries for b in B]
    rows = []
    for e in range(n * n):
        row = {a: d[e] for a, d in enumerate(diffs) if d[e]}
        if row:
            rows.append(row)
    ker = kernel_of_rows(rows, len(B))
    vecs = []
    for c in ker.basis:
        m = Matrix.zeros(n)
        for coef, b in zip(c, B):
            if coef:
                m = m + b.scale(coef)
        vecs.append(m.entries)
    return Subspace(n * n, vecs)


@dataclass
class IndecomposableVerdict:
    verdict: str  # "yes", "no", "undetermined"
    reason: str
    commutant_dim: int
    self_adjoint_dim: int
    splitting: tuple | None = None

    def __str__(self) -> str:
        return self.verdict


def _to_sympy(x: Scalar):
    import sympy

    return sympy.Rational(int(x.rat.numerator), int(x.rat.denominator)) + sympy.Rational(
        int(x.irr.numerator), int(x.irr.denominator)) * sympy.sqrt(2)


def _from_sympy(e) -> Scalar:
    import sympy

    e = sympy.expand(e)
    b = e.coeff(sympy.sqrt(2))
    a = sympy.expand(e - b * sympy.sqrt(2))
    if not (a.is_Rational and b.is_Rational):
        raise ValueError(f"{e} is not in Q(sqrt 2)")
    return as_scalar(f"{a}") + as_scalar(f"{b}") * SQRT2 if b else as_scalar(f"{a}")


def minimal_polynomial(x: Matrix) -> list[Scalar]:
    """Monic minimal polynomial, coefficients by ascending degree."""
    n = x.rows
    powers = [Matrix.identity(n)]
    while True:
        k = len(powers) - 1
        vecs = [p.entries for p in powers]
        rows = []
        for e in range(n * n):
            row = {j: v[e] for j, v in enumerate(vecs) if v[e]}
            if row:
                rows.append(row)
        ker = kernel_of_rows(rows, len(powers))
        if ker.dim:
            c = ker.basis[0]
            lead = c[-1]
            return [t / lead for t in c]
        powers.append(powers[-1] @ x)
        if k > n:
            raise RuntimeError("minimal polynomial degree exceeds n")


def _poly_eval(coeffs: Sequence[Scalar], x: Matrix) -> Matrix:
    n = x.rows
    out = Matrix.zeros(n)
    for c in reversed(coeffs):
        out = out @ x + Matrix.identity(n).scale(c)
    return out


def _split_by_minpoly(x: Matrix):
    """Idempotent polynomial in ``x`` from a coprime factorisation of its minimal polynomial."""
    import sympy

    coeffs = minimal_polynomial(x)
    if len(coeffs) <= 2:
        return None
    t = sympy.Symbol("t")
    poly = sum(_to_sympy(c) * t ** i for i, c in enumerate(coeffs))
    _, factors = sympy.factor_list(sympy.expand(poly), t, extension=sympy.sqrt(2))
    if len(factors) < 2:
        return None
    f0, m0 = factors[0]
    f = sympy.Poly(f0 ** m0, t)
    fc = [_from_sympy(c) for c in reversed(f.all_coeffs())]
    rest = sympy.Poly(sympy.expand(poly), t).quo(f)
    gc = [_from_sympy(c) for c in reversed(rest.all_coeffs())]
    n = x.rows
    W1 = _kernel_matrix(_poly_eval(fc, x))
    W2 = _kernel_matrix(_poly_eval(gc, x))
    if W1.dim + W2.dim != n or not W1.dim or not W2.dim:
        return None
    cols = list(W1.basis) + list(W2.basis)
    P = Matrix([[cols[j][i] for j in range(n)] for i in range(n)])
    D = Matrix.diag([ONE] * W1.dim + [ZERO] * W2.dim)
    return P @ D @ P.inverse(), W1, W2


def _kernel_matrix(m: Matrix) -> Subspace:
    rows = [{j: x for j, x in enumerate(r) if x} for r in m.data]
    return kernel_of_rows([r for r in rows if r], m.cols)


def _is_local(C: Subspace, n: int) -> bool:
    rad = trace_radical(C, n)
    return C.dim - len(rad) == 1


def indecomposable(h: LieMatrixAlgebra, gram) -> IndecomposableVerdict:
    """Three-valued indecomposability verdict with a certificate.

    ``yes`` when the self-adjoint commutant is the scalars or the commutant is
    a local algebra (its only idempotents are 0 and 1); ``no`` when a
    self-adjoint idempotent other than 0 and 1 is found; otherwise
    ``undetermined``.
    """
    G = _gram(gram)
    n = h.n
    C = commutant(h)
    S = self_adjoint_part(C, G)
    if S.dim == 1:
        return IndecomposableVerdict("yes", "self-adjoint commutant is the scalars", C.dim, S.dim)
    if _is_local(C, n):
        return IndecomposableVerdict("yes", "commutant is a local algebra", C.dim, S.dim)
    B = [Matrix.from_flat(v, n) for v in S.basis]
    candidates = list(B)
    for w in range(1, 4):
        total = Matrix.zeros(n)
        for k, b in enumerate(B):
            total = total + b.scale(Scalar(k + w) ** (k + 1))
        candidates.append(total)
    Gi = G.inverse()
    for x in candidates:
        split = _split_by_minpoly(x)
        if split is None:
            continue
        e, W1, W2 = split
        ok = (
            (e @ e) == e
            and _adjoint(e, G, Gi) == e
            and all((e @ b) == (b @ e) for b in h.basis())
        )
        if ok:
            return IndecomposableVerdict("no", "self-adjoint idempotent in the commutant", C.dim, S.dim, (W1, W2))
    return IndecomposableVerdict("undetermined", "no idempotent found", C.dim, S.dim)


@dataclass
class RepReport:
    socle: Subspace
    socle_dim: int
    socle_isotropic: bool
    type: str
    indecomposable: str
    commutant_dim: int
    detail: IndecomposableVerdict | None = None


def holonomy_type(h: LieMatrixAlgebra, gram) -> RepReport:
    G = _gram(gram)
    S = socle(h)
    iso = is_isotropic_subspace(S, G)
    ind = indecomposable(h, G)
    d = S.dim
    if d == h.n:
        kind = "irreducible" if ind.verdict == "yes" else "none"
    else:
        kind = TYPES.get(d, "none")
    return RepReport(S, d, iso, kind, ind.verdict, ind.commutant_dim, ind)


def extract_invariants_typeI(h: LieMatrixAlgebra) -> tuple:
    """``(a, u, v, y)``: the gl(2)-projection and the three filtered projections.

    ``a`` is a subspace of gl(2) in row-major coordinates, ``u`` and ``y`` of
    R^2 and ``v`` of R.
    """
    if not h.is_subalgebra_of(hI_algebra()):
        raise ValueError("algebra is not contained in h^I")
    els = [type1_coords(b) for b in h.basis()]
    a = Subspace(4, [e.A.entries for e in els])
    in_m = h.span.intersect(m_subspace(full=True))
    m_els = [type1_coords(Matrix.from_flat(v, 7)) for v in in_m.basis]
    u = Subspace(2, [e.u for e in m_els])
    in_v = h.span.intersect(m_subspace(1, 0, 2))
    v = Subspace(1, [(type1_coords(Matrix.from_flat(x, 7)).v,) for x in in_v.basis])
    in_y = h.span.intersect(m_subspace(0, 0, 2))
    y = Subspace(2, [type1_coords(Matrix.from_flat(x, 7)).y for x in in_y.basis])
    return a, u, v, y


def extract_Z_typeII(h: LieMatrixAlgebra) -> Subspace:
    """``Z = {z : h(0, z, c) in h for some c}``."""
    if not h.is_subalgebra_of(hII_algebra()):
        raise ValueError("algebra is not contained in h^II")
    inter = h.span.intersect(n_subspace())
    return Subspace(4, [type2_coords(Matrix.from_flat(v, 7)).z for v in inter.basis])
