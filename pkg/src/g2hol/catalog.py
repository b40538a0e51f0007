"""Named subalgebras of g2*: the Type I, II and III normal forms and their tools.

Type I and Type III algebras live in convention C1 and are built from
``h(A, v, u, y)``; Type II algebras live in C2 and are built from
``h(A, z, c)``.  Everything a theorem lists is realised as a literal span of
7x7 matrices, keyed by a stable id such as ``"T1.2a[lambda=1/2]"``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations
from typing import Callable, Iterable, Sequence

from gmpy2 import iroot, mpq

from .g2star import LieMatrixAlgebra
from .linalg import Matrix, Subspace, exp_nilpotent
from .scalar import ONE, SQRT2, ZERO, Scalar, as_scalar, parse_scalar

__all__ = [
    "TypeIElement",
    "TypeIIElement",
    "h_type1",
    "h_type2",
    "type1_coords",
    "type2_coords",
    "sigma",
    "sigma_star",
    "rho",
    "U",
    "theta",
    "eta",
    "gl2_basis",
    "gl2_subalgebra",
    "m_basis",
    "m_subspace",
    "n_basis",
    "n_subspace",
    "CatalogEntry",
    "theorem_entries",
    "all_entries",
    "get_entry",
    "entry_ids",
    "ad_exp_v",
    "ad_exp_u",
    "ad_exp_y",
    "ad_gl2_type1",
    "ad_exp_type2",
    "ad_gl2_type2",
    "embed_gl2_type1",
    "embed_gl2_type2",
    "gl2_on_R4",
    "gl2_group_on_R4",
    "phi1",
    "phi2",
    "Phi3",
    "act_on_poly",
    "wedge2_action",
    "wedge3_action",
    "plucker_decomposable",
    "cross_ratio_set",
]


def _m2(a) -> Matrix:
    if isinstance(a, Matrix):
        if a.shape != (2, 2):
            raise ValueError("expected a 2x2 matrix")
        return a
    if a is None or (not isinstance(a, (list, tuple)) and not a):
        return Matrix.zeros(2)
    return Matrix(a)


def _v(x, n: int) -> tuple:
    x = tuple(as_scalar(t) for t in x)
    if len(x) != n:
        raise ValueError(f"expected a vector of length {n}")
    return x


I2 = Matrix.identity(2)
H2 = Matrix([[1, 0], [0, -1]])
X2 = Matrix([[0, 1], [0, 0]])
Y2 = Matrix([[0, 0], [1, 0]])
N2 = X2
S2 = Matrix([[1, 1], [0, 1]])
J2 = Matrix([[0, -1], [1, 0]])


def C(a) -> Matrix:
    a = as_scalar(a)
    return Matrix([[a, -1], [1, a]])


def diag2(a, d) -> Matrix:
    return Matrix.diag([a, d])


# ---------------------------------------------------------------------------
# Type I: h(A, v, u, y) in C1


@dataclass(frozen=True)
class TypeIElement:
    A: Matrix = field(default_factory=lambda: Matrix.zeros(2))
    v: Scalar = ZERO
    u: tuple = (ZERO, ZERO)
    y: tuple = (ZERO, ZERO)

    def __post_init__(self):
        object.__setattr__(self, "A", _m2(self.A))
        object.__setattr__(self, "v", as_scalar(self.v))
        object.__setattr__(self, "u", _v(self.u, 2))
        object.__setattr__(self, "y", _v(self.y, 2))

    def matrix(self) -> Matrix:
        return h_type1(self)


def h_type1(A=None, v=0, u=(0, 0), y=(0, 0)) -> Matrix:
    """The 7x7 matrix ``h(A, v, u, y)`` of the Type I family."""
    if isinstance(A, TypeIElement):
        A, v, u, y = A.A, A.v, A.u, A.y
    A = _m2(A)
    v = as_scalar(v)
    u1, u2 = _v(u, 2)
    y1, y2 = _v(y, 2)
    (a1, a2), (a3, a4) = A.data
    tr = a1 + a4
    r = SQRT2
    z = ZERO
    return Matrix([
        [tr, -u2, u1, r * v, z, -y1, -y2],
        [z, a1, a2, r * u1, y1, z, v],
        [z, a3, a4, r * u2, y2, -v, z],
        [z, z, z, z, r * v, r * u1, r * u2],
        [z, z, z, z, -tr, z, z],
        [z, z, z, z, u2, -a1, -a3],
        [z, z, z, z, -u1, -a2, -a4],
    ])


def type1_coords(m: Matrix) -> TypeIElement:
    """Inverse of :func:`h_type1`; ValueError if ``m`` is not of that form."""
    e = TypeIElement(
        Matrix([[m[1, 1], m[1, 2]], [m[2, 1], m[2, 2]]]),
        m[1, 6],
        (m[0, 2], -m[0, 1]),
        (m[1, 4], m[2, 4]),
    )
    if h_type1(e) != m:
        raise ValueError("matrix is not in the Type I family")
    return e


def theta(u, ub) -> Scalar:
    u1, u2 = _v(u, 2)
    b1, b2 = _v(ub, 2)
    return u1 * b2 - u2 * b1


# ---------------------------------------------------------------------------
# Type II: h(A, z, c) in C2


def sigma(z) -> Matrix:
    z1, z2, z3, z4 = _v(z, 4)
    return Matrix([[z2, SQRT2 * z3, z4], [z1, SQRT2 * z2, z3]])


def sigma_star(z) -> Matrix:
    z1, z2, z3, z4 = _v(z, 4)
    return Matrix([[-z4, -z3], [SQRT2 * z3, SQRT2 * z2], [-z2, -z1]])


def rho(A) -> Matrix:
    (a1, a2), (a3, a4) = _m2(A).data
    r = SQRT2
    return Matrix([
        [a1 - a4, -r * a2, ZERO],
        [-r * a3, ZERO, -r * a2],
        [ZERO, -r * a3, -a1 + a4],
    ])


def U(c) -> Matrix:
    c = as_scalar(c)
    return Matrix([[0, -c], [c, 0]])


@dataclass(frozen=True)
class TypeIIElement:
    A: Matrix = field(default_factory=lambda: Matrix.zeros(2))
    z: tuple = (ZERO,) * 4
    c: Scalar = ZERO

    def __post_init__(self):
        object.__setattr__(self, "A", _m2(self.A))
        object.__setattr__(self, "z", _v(self.z, 4))
        object.__setattr__(self, "c", as_scalar(self.c))

    def matrix(self) -> Matrix:
        return h_type2(self)


def h_type2(A=None, z=(0, 0, 0, 0), c=0) -> Matrix:
    """Block matrix ``[[A, sigma(z), U(c)], [0, rho(A), sigma(z)*], [0, 0, -A^T]]``."""
    if isinstance(A, TypeIIElement):
        A, z, c = A.A, A.z, A.c
    A = _m2(A)
    out = [[ZERO] * 7 for _ in range(7)]

    def put(block: Matrix, r0: int, c0: int) -> None:
        for i, row in enumerate(block.data):
            for j, x in enumerate(row):
                out[r0 + i][c0 + j] = x

    put(A, 0, 0)
    put(sigma(z), 0, 2)
    put(U(c), 0, 5)
    put(rho(A), 2, 2)
    put(sigma_star(z), 2, 5)
    put(-A.T, 5, 5)
    return Matrix(out)


def type2_coords(m: Matrix) -> TypeIIElement:
    e = TypeIIElement(
        Matrix([[m[0, 0], m[0, 1]], [m[1, 0], m[1, 1]]]),
        (m[1, 2], m[0, 2], m[1, 4], m[0, 4]),
        m[1, 5],
    )
    if h_type2(e) != m:
        raise ValueError("matrix is not in the Type II family")
    return e


def eta(z, zh) -> Scalar:
    z1, z2, z3, z4 = _v(z, 4)
    w1, w2, w3, w4 = _v(zh, 4)
    return -z1 * w4 + z4 * w1 + 3 * z2 * w3 - 3 * z3 * w2


# ---------------------------------------------------------------------------
# gl(2) and its subalgebras


def gl2_basis() -> list[Matrix]:
    return [Matrix.unit(2, i, j) for i in range(2) for j in range(2)]


_GL2_NAMES = ("0", "sl2", "gl2", "u1", "b2", "b2hat", "d", "C", "S", "N", "s", "diag", "I")


def gl2_subalgebra(name: str, **params) -> list[Matrix]:
    """Basis of a named subalgebra of gl(2, R).

    ``C`` takes ``a``, ``s`` (the algebra s_lambda) takes ``lam`` and ``diag``
    (the line through diag(1, mu)) takes ``mu``.
    """
    if name == "0":
        return []
    if name == "sl2":
        return [H2, X2, Y2]
    if name == "gl2":
        return gl2_basis()
    if name == "u1":
        return [I2, J2]
    if name == "b2":
        return [Matrix.unit(2, 0, 0), Matrix.unit(2, 1, 1), N2]
    if name == "b2hat":
        return [I2, N2]
    if name == "d":
        return [Matrix.unit(2, 0, 0), Matrix.unit(2, 1, 1)]
    if name == "C":
        return [C(params["a"])]
    if name == "S":
        return [S2]
    if name == "N":
        return [N2]
    if name == "s":
        lam = as_scalar(params["lam"])
        return [diag2(lam, lam - 1), N2]
    if name == "diag":
        return [diag2(1, params["mu"])]
    if name == "I":
        return [I2]
    raise KeyError(f"unknown gl(2) subalgebra {name!r}; expected one of {_GL2_NAMES}")


def gl2_algebra(name: str, **params) -> LieMatrixAlgebra:
    return LieMatrixAlgebra.from_matrices(gl2_subalgebra(name, **params), n=2)


# ---------------------------------------------------------------------------
# nilradical pieces


def m_basis(i: int = 1, j: int = 1, k: int = 2, full: bool = False) -> list[Matrix]:
    """Basis of m(i, j, k); ``full=True`` gives all of m (dimension 5)."""
    if full:
        return [h_type1(v=1), h_type1(u=(1, 0)), h_type1(u=(0, 1)),
                h_type1(y=(1, 0)), h_type1(y=(0, 1))]
    if i not in (0, 1) or j not in (0, 1) or k not in (0, 1, 2):
        raise ValueError("m(i,j,k) needs i, j in {0,1} and k in {0,1,2}")
    out = []
    if i:
        out.append(h_type1(v=1))
    if j:
        out.append(h_type1(u=(1, 0)))
    if k >= 1:
        out.append(h_type1(y=(1, 0)))
    if k == 2:
        out.append(h_type1(y=(0, 1)))
    return out


def m_subspace(i: int = 1, j: int = 1, k: int = 2, full: bool = False) -> Subspace:
    return Subspace(49, (m.entries for m in m_basis(i, j, k, full)))


def n_basis(indices: Iterable[int] = (1, 2, 3, 4), Z: Iterable[Sequence] | None = None) -> list[Matrix]:
    """Basis of n(indices) or, given ``Z``, of ``{h(0, z, c) : z in span Z}``."""
    if Z is not None:
        zs = [_v(z, 4) for z in Z]
    else:
        idx = sorted(set(indices))
        if any(i not in (1, 2, 3, 4) for i in idx):
            raise ValueError("n(...) indices must lie in {1,2,3,4}")
        zs = [tuple(ONE if l == i else ZERO for l in range(1, 5)) for i in idx]
    return [h_type2(z=z) for z in zs] + [h_type2(c=1)]


def n_subspace(indices: Iterable[int] = (1, 2, 3, 4), Z=None) -> Subspace:
    return Subspace(49, (m.entries for m in n_basis(indices, Z)))


# ---------------------------------------------------------------------------
# conjugation formulas (closed forms)


def _t1(x) -> TypeIElement:
    return x if isinstance(x, TypeIElement) else type1_coords(x)


def _t2(x) -> TypeIIElement:
    return x if isinstance(x, TypeIIElement) else type2_coords(x)


def ad_exp_v(vb, x) -> TypeIElement:
    """``Ad(exp h(0, vb, 0, 0)) h(A, v, u, y)``."""
    e, vb = _t1(x), as_scalar(vb)
    trA = e.A.trace()
    return TypeIElement(e.A, e.v - trA * vb, e.u, tuple(yi - 3 * vb * ui for yi, ui in zip(e.y, e.u)))


def ad_exp_u(ub, x) -> TypeIElement:
    """``Ad(exp h(0, 0, ub, 0)) h(A, v, u, y)``."""
    e, ub = _t1(x), _v(ub, 2)
    Aub = e.A @ ub
    t = theta(e.u, ub)
    s = theta(ub, Aub)
    coef = 3 * e.v - 3 * t - s
    return TypeIElement(
        e.A,
        e.v - 2 * t - s,
        tuple(a - b for a, b in zip(e.u, Aub)),
        tuple(yi + coef * bi for yi, bi in zip(e.y, ub)),
    )


def ad_exp_y(yb, x) -> TypeIElement:
    """``Ad(exp h(0, 0, 0, yb)) h(A, v, u, y)``."""
    e, yb = _t1(x), _v(yb, 2)
    shift = (e.A + Matrix.identity(2).scale(e.A.trace())) @ yb
    return TypeIElement(e.A, e.v, e.u, tuple(a - b for a, b in zip(e.y, shift)))


def ad_gl2_type1(g, x) -> TypeIElement:
    """``Ad(g) h(A, v, u, y)`` for ``g`` in GL(2) embedded block-diagonally."""
    e, g = _t1(x), _m2(g)
    det = _det2(g)
    gi = g.inverse()
    return TypeIElement(g @ e.A @ gi, det * e.v, g @ e.u, tuple(det * t for t in g @ e.y))


def ad_exp_type2(zb, x) -> TypeIIElement:
    """``Ad(exp h(0, zb, 0)) h(A, z, c)``."""
    e, zb = _t2(x), _v(zb, 4)
    Azb = gl2_on_R4(e.A, zb)
    return TypeIIElement(
        e.A,
        tuple(a - b for a, b in zip(e.z, Azb)),
        e.c - eta(e.z, zb) - eta(zb, Azb) / 2,
    )


def ad_gl2_type2(g, x) -> TypeIIElement:
    """``Ad(g) h(A, z, c)`` for the Type II embedding of GL(2)."""
    e, g = _t2(x), _m2(g)
    return TypeIIElement(g @ e.A @ g.inverse(), gl2_group_on_R4(g, e.z), _det2(g) * e.c)


def _det2(g: Matrix) -> Scalar:
    return g[0, 0] * g[1, 1] - g[0, 1] * g[1, 0]


def embed_gl2_type1(g) -> Matrix:
    """``diag(det g, g, 1, 1/det g, g^-T)``."""
    g = _m2(g)
    det = _det2(g)
    return Matrix.block_diag(Matrix([[det]]), g, Matrix([[1]]), Matrix([[det.inverse()]]), g.inverse().T)


def _ldu(g: Matrix) -> list[tuple[str, object]]:
    """Factor ``g`` into shears and a diagonal matrix (left to right)."""
    if not g[0, 0]:
        # g = X(-1) (X(1) g) and X(1) g has a nonzero corner
        return [("X", -ONE)] + _ldu(Matrix([[1, 1], [0, 1]]) @ g)
    a = g[0, 0]
    l = g[1, 0] / a
    u = g[0, 1] / a
    d = g[1, 1] - l * g[0, 1]
    return [("Y", l), ("D", (a, d)), ("X", u)]


def _type2_diag(a, d) -> Matrix:
    a, d = as_scalar(a), as_scalar(d)
    return Matrix.diag([a, d, a / d, 1, d / a, a.inverse(), d.inverse()])


def embed_gl2_type2(g) -> Matrix:
    """Group element of G2* (convention C2) for ``g`` in GL(2).

    Unipotent factors are exponentials of ``h(N, 0, 0)``-type elements and
    diagonal factors map to ``diag(a, d, a/d, 1, d/a, 1/a, 1/d)``; in
    particular ``diag(1, -1)`` goes to ``diag(1, -1, -1, 1, -1, 1, -1)``.
    """
    out = Matrix.identity(7)
    for kind, p in _ldu(_m2(g)):
        if kind == "D":
            out = out @ _type2_diag(*p)
        elif p:
            gen = X2 if kind == "X" else Y2
            out = out @ exp_nilpotent(h_type2(gen.scale(p)))
    return out


# ---------------------------------------------------------------------------
# gl(2) on R^4 and binary forms

_R4_I = Matrix.identity(4)
_R4_H = Matrix.diag([-3, -1, 1, 3])
_R4_X = Matrix([[0, 0, 0, 0], [1, 0, 0, 0], [0, 2, 0, 0], [0, 0, 3, 0]])
_R4_Y = Matrix([[0, 3, 0, 0], [0, 0, 2, 0], [0, 0, 0, 1], [0, 0, 0, 0]])


def gl2_on_R4_matrix(A) -> Matrix:
    (a1, a2), (a3, a4) = _m2(A).data
    half = Scalar(1) / 2
    return (_R4_I.scale((a1 + a4) * half) + _R4_H.scale((a1 - a4) * half)
            + _R4_X.scale(a2) + _R4_Y.scale(a3))


def gl2_on_R4(A, z) -> tuple:
    """Lie algebra action of gl(2, R) on R^4."""
    return gl2_on_R4_matrix(A) @ _v(z, 4)


def gl2_group_matrix_R4(g) -> Matrix:
    out = Matrix.identity(4)
    for kind, p in _ldu(_m2(g)):
        if kind == "D":
            a, d = p
            out = out @ Matrix.diag([d * d / a, d, a, a * a / d])
        elif p:
            gen = _R4_X if kind == "X" else _R4_Y
            out = out @ exp_nilpotent(gen.scale(p))
    return out


def gl2_group_on_R4(g, z) -> tuple:
    """Group action of GL(2, R) on R^4 (diag(1,-1) acts by (z1, -z2, z3, -z4))."""
    return gl2_group_matrix_R4(g) @ _v(z, 4)


def _binom(n: int, k: int) -> int:
    from math import comb

    return comb(n, k)


def _poly_mul(p: list, q: list) -> list:
    out = [ZERO] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                if b:
                    out[i + j] = out[i + j] + a * b
    return out


def act_on_poly(g, p: Sequence) -> tuple:
    """``(g.p)(x, y) = p((x, y) g)``; ``p[k]`` is the coefficient of ``x^k y^(d-k)``."""
    g = _m2(g)
    (a1, a2), (a3, a4) = g.data
    d = len(p) - 1
    xp = [a3, a1]  # x' = a1 x + a3 y, coefficients by x-degree
    yp = [a4, a2]  # y' = a2 x + a4 y
    out = [ZERO] * (d + 1)
    for k, c in enumerate(p):
        c = as_scalar(c)
        if not c:
            continue
        term = [ONE]
        for _ in range(k):
            term = _poly_mul(term, xp)
        for _ in range(d - k):
            term = _poly_mul(term, yp)
        for i, t in enumerate(term):
            out[i] = out[i] + c * t
    return tuple(out)


def phi1(z) -> tuple:
    """``z1 y^3 + 3 z2 x y^2 + 3 z3 x^2 y + z4 x^3`` as coefficients by x-degree."""
    z1, z2, z3, z4 = _v(z, 4)
    return (z1, 3 * z2, 3 * z3, z4)


# 2-vectors on R^4 use the basis e12, e13, e14, e23, e24, e34
_PAIRS = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))
_TRIPLES = ((0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3))


def w_split(w) -> tuple:
    """Coordinates ``(t0, z12, z13, t', z24, z34)`` in ``w0, e12, e13, w', e24, e34``."""
    z12, z13, z14, z23, z24, z34 = _v(w, 6)
    half = Scalar(1) / 2
    tp = (z23 + z14 / 3) * half
    t0 = (z23 - z14 / 3) * half
    return t0, z12, z13, tp, z24, z34


def w_join(t0, z12, z13, tp, z24, z34) -> tuple:
    """Inverse of :func:`w_split`, with ``w0 = e23 - 3 e14`` and ``w' = e23 + 3 e14``."""
    t0, tp = as_scalar(t0), as_scalar(tp)
    return _v((z12, z13, 3 * (tp - t0), t0 + tp, z24, z34), 6)


def phi2(w) -> tuple:
    """Quartic attached to a 2-vector in W'; ValueError on a w0-component."""
    t0, z12, z13, tp, z24, z34 = w_split(w)
    if t0:
        raise ValueError("phi2 is defined on W' only; input has a w0-component")
    return (z12, 2 * z13, 6 * tp, 2 * z24, z34)


def Phi3(w) -> tuple:
    """Cubic attached to a 3-vector (basis e123, e124, e134, e234)."""
    w123, w124, w134, w234 = _v(w, 4)
    return (w123, w124, w134, w234)


def _minor(m: Matrix, rows, cols) -> Scalar:
    if len(rows) == 2:
        (r0, r1), (c0, c1) = rows, cols
        return m[r0, c0] * m[r1, c1] - m[r0, c1] * m[r1, c0]
    total = ZERO
    for sgn, c in zip((1, -1, 1), range(3)):
        rest = [cols[i] for i in range(3) if i != c]
        total = total + (m[rows[0], cols[c]] * _minor(m, rows[1:], rest)).__mul__(sgn)
    return total


def wedge2_action(g4: Matrix) -> Matrix:
    """Matrix of ``Lambda^2 g4`` in the basis e12, e13, e14, e23, e24, e34."""
    return Matrix([[_minor(g4, r, c) for c in _PAIRS] for r in _PAIRS])


def wedge3_action(g4: Matrix) -> Matrix:
    return Matrix([[_minor(g4, r, c) for c in _TRIPLES] for r in _TRIPLES])


def plucker_decomposable(coeffs) -> bool:
    """Decomposability test on ``(t0, z12, z13, t', z24, z34)``."""
    t0, z12, z13, tp, z24, z34 = _v(coeffs, 6)
    return z12 * z34 - z13 * z24 == 3 * (t0 * t0 - tp * tp)


INF = "inf"


def _proj(p) -> tuple:
    if p is None or (isinstance(p, str) and p.strip().lower() in ("inf", "oo", "infinity")):
        return (ONE, ZERO)
    if isinstance(p, tuple) and len(p) == 2:
        return (as_scalar(p[0]), as_scalar(p[1]))
    return (as_scalar(p), ONE)


def cross_ratio_set(roots: Sequence) -> frozenset:
    """All cross-ratios of four distinct points of the projective line."""
    pts = [_proj(r) for r in roots]
    if len(pts) != 4:
        raise ValueError("cross_ratio_set needs exactly four points")

    def br(p, q):
        return p[0] * q[1] - q[0] * p[1]

    for a in range(4):
        for b in range(a + 1, 4):
            if not br(pts[a], pts[b]):
                raise ValueError("cross_ratio_set needs pairwise distinct points")
    out = set()
    for i, j, k, l in permutations(range(4)):
        zi, zj, zk, zl = pts[i], pts[j], pts[k], pts[l]
        out.add((br(zi, zk) * br(zj, zl)) / (br(zj, zk) * br(zi, zl)))
    return frozenset(out)


def exact_root(x, n: int) -> Scalar:
    """Exact ``n``-th root of a positive rational, or of ``2**k`` times a square."""
    x = as_scalar(x)
    if not x.is_rational() or x.rat <= 0:
        raise ValueError("exact_root needs a positive rational")
    num, den = int(x.rat.numerator), int(x.rat.denominator)
    rn, ok1 = iroot(num, n)
    rd, ok2 = iroot(den, n)
    if ok1 and ok2:
        return Scalar(mpq(int(rn), int(rd)))
    if n % 2 == 0:
        # (sqrt2 * r)^n = 2^(n/2) r^n
        half = x.rat / 2 ** (n // 2)
        rn, ok1 = iroot(int(half.numerator), n)
        rd, ok2 = iroot(int(half.denominator), n)
        if ok1 and ok2:
            return SQRT2 * Scalar(mpq(int(rn), int(rd)))
    raise ValueError(f"{x} has no exact {n}-th root in Q(sqrt 2)")


# ---------------------------------------------------------------------------
# catalog


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    convention: str
    algebra: LieMatrixAlgebra
    declared_type: str
    parameters: dict
    label: str

    @property
    def dim(self) -> int:
        return self.algebra.dim


@dataclass(frozen=True)
class _Family:
    base: str
    kind: str  # "I", "II", "III"
    label: str
    build: Callable[[dict], list]
    params: tuple = ()
    grid: tuple = ()  # tuples of param dicts


def _embed1(mats: Iterable[Matrix]) -> list[Matrix]:
    return [h_type1(A) for A in mats]


def _embed2(mats: Iterable[Matrix]) -> list[Matrix]:
    return [h_type2(A) for A in mats]


def _int(x) -> int:
    x = as_scalar(x)
    if not x.is_rational() or x.rat.denominator != 1:
        raise ValueError(f"expected an integer parameter, got {x}")
    return int(x.rat)


def _q(x) -> Scalar:
    return as_scalar(x)


def _grid(name: str, values: Iterable) -> tuple:
    return tuple({name: _q(v)} for v in values)


LAMBDA_GRID = ("-1", "0", "1/2", "1", "2")
MU_GRID_T1 = ("-1", "0", "1/2", "1")
MU_GRID_T2 = ("-1", "0", "1/2")
A_GRID = ("-1", "0", "1")
ALPHA_GRID = ("1/2", "1/2 r2", "1")
SALPHA_GRID = (("1", "1"), ("1", "-1/3"), ("3/10", "3/5"), ("3/10", "-1/6"))
ALPHA_LO = (Scalar(0, mpq(1, 2)), mpq(1, 6))  # centre 1/sqrt2, radius**2 = 1/6

Z2_BASIS = ((3, 0, 1, 0), (0, 1, 0, 3))


def _check_range(cond: bool, msg: str) -> None:
    if not cond:
        raise ValueError(msg)


def _alpha_ok(alpha: Scalar) -> bool:
    d = alpha - ALPHA_LO[0]
    return (d * d).__le__(Scalar(ALPHA_LO[1]))


def _t2_Z(tag: str, p: dict) -> list:
    if tag == "a":
        return [(1, 0, 1, 0), (0, 0, 0, 1)]
    if tag == "b":
        return [(0, 1, 0, -1), (0, 0, 1, 0)]
    if tag == "c":
        al = p["alpha"]
        _check_range(_alpha_ok(al), "alpha outside [(sqrt3-1)/sqrt6, (sqrt3+1)/sqrt6]")
        return [(1, al, 0, 0), (0, 0, al, 1)]
    if tag == "d":
        s, al = p["s"], p["alpha"]
        _check_range(s.sign() > 0 and s <= ONE, "s must lie in (0, 1]")
        _check_range(not (3 * al * al - (s + 1) * al - s), "(s, alpha) violates 3 alpha^2 - (s+1) alpha - s = 0")
        return [(s, 0, -al, 0), (0, al, 0, -1)]
    if tag == "e":
        k = p["kappa"]
        _check_range(k == ONE or k == -ONE, "kappa must be +1 or -1")
        return [(1, 0, k, 0), (0, 1, 0, 0), (0, 0, 0, 1)]
    raise KeyError(tag)


def _families() -> list[_Family]:
    fams: list[_Family] = []
    add = fams.append
    full_m = m_basis(full=True)

    # Theorem for Type I
    for name, lab in (("a0", "m"), ("sl2", "sl(2,R) x m"), ("gl2", "gl(2,R) x m"), ("u1", "u(1) x m"),
                      ("b2", "b2 x m"), ("b2hat", "b2hat x m"), ("d", "d x m"), ("S", "R.S x m")):
        a = "0" if name == "a0" else name
        add(_Family(f"T1.1-{name}", "I", lab, lambda p, a=a: _embed1(gl2_subalgebra(a)) + full_m))
    add(_Family("T1.1-C", "I", "R.C_a x m", lambda p: _embed1([C(p["a"])]) + full_m, ("a",), _grid("a", A_GRID)))
    add(_Family("T1.2a", "I", "s_lambda x m", lambda p: _embed1(gl2_subalgebra("s", lam=p["lambda"])) + full_m,
                ("lambda",), _grid("lambda", LAMBDA_GRID)))
    add(_Family("T1.2b", "I", "R.h(X,0,(0,1),0) x (R.N x m(1,1,2))",
                lambda p: [h_type1(diag2(1, 0), u=(0, 1)), h_type1(N2)] + m_basis(1, 1, 2)))
    add(_Family("T1.2c", "I", "span{X, h(N,0,(0,1),0)} x m(i,j,2)",
                lambda p: [h_type1(diag2(2, 1)), h_type1(N2, u=(0, 1))] + m_basis(_int(p["i"]), _int(p["j"]), 2),
                ("i", "j"), tuple({"i": _q(i), "j": _q(j)} for i in (0, 1) for j in (0, 1))))
    add(_Family("T1.3a", "I", "R.diag(1,mu) x m", lambda p: _embed1([diag2(1, p["mu"])]) + full_m,
                ("mu",), _grid("mu", MU_GRID_T1)))
    add(_Family("T1.3b", "I", "R.h(diag(1,0),0,(0,1),0) x m(1,1,2)",
                lambda p: [h_type1(diag2(1, 0), u=(0, 1))] + m_basis(1, 1, 2)))
    add(_Family("T1.4a", "I", "R.N x m", lambda p: _embed1([N2]) + full_m))
    add(_Family("T1.4b", "I", "R.h(N,0,(0,1),0) x m(1,j,2)",
                lambda p: [h_type1(N2, u=(0, 1))] + m_basis(1, _int(p["j"]), 2),
                ("j",), _grid("j", (0, 1))))

    # Type III
    for name in ("sl2", "gl2", "u1", "d"):
        add(_Family(f"T3.1-{name}", "III", f"{name} x m(1,0,2)",
                    lambda p, a=name: _embed1(gl2_subalgebra(a)) + m_basis(1, 0, 2)))
    add(_Family("T3.2-a0", "III", "m(1,0,k)", lambda p: m_basis(1, 0, _int(p["k"])), ("k",), _grid("k", (1, 2))))
    add(_Family("T3.2-diag10", "III", "R.diag(1,0) x m(1,0,k)",
                lambda p: _embed1([diag2(1, 0)]) + m_basis(1, 0, _int(p["k"])), ("k",), _grid("k", (1, 2))))

    # Type II
    full_n = n_basis()
    for name in ("sl2", "gl2"):
        add(_Family(f"T2.1-{name}", "II", f"{name} x n", lambda p, a=name: _embed2(gl2_subalgebra(a)) + full_n))
    add(_Family("T2.2-u1-n", "II", "u(1) x n", lambda p: _embed2(gl2_subalgebra("u1")) + full_n))
    add(_Family("T2.2-u1-Z2", "II", "u(1) x n_Z2", lambda p: _embed2(gl2_subalgebra("u1")) + n_basis(Z=Z2_BASIS)))
    add(_Family("T2.2-C-n", "II", "R.C_a x n", lambda p: _embed2([C(p["a"])]) + full_n, ("a",), _grid("a", A_GRID)))
    add(_Family("T2.2-C-Z2", "II", "R.C_a x n_Z2", lambda p: _embed2([C(p["a"])]) + n_basis(Z=Z2_BASIS),
                ("a",), _grid("a", A_GRID)))

    def nsets(*names):
        return {nm: (tuple(int(ch) for ch in nm[1:]) if nm != "n" else (1, 2, 3, 4)) for nm in names}

    for nm, idx in nsets("n", "n13", "n23", "n123", "n124").items():
        add(_Family(f"T2.3-{nm}", "II", f"d x {_nlabel(nm)}", lambda p, idx=idx: _embed2(gl2_subalgebra("d")) + n_basis(idx)))
    for nm, idx in nsets("n", "n23", "n123", "n124", "n134", "n234").items():
        add(_Family(f"T2.4a-{nm}", "II", f"R.diag(1,mu) x {_nlabel(nm)}",
                    lambda p, idx=idx: _embed2([diag2(1, p["mu"])]) + n_basis(idx), ("mu",), _grid("mu", MU_GRID_T2)))
    for nm, idx in nsets("n23", "n234").items():
        add(_Family(f"T2.4b-{nm}", "II", f"R.h(diag(1,1/2),e1,0) x {_nlabel(nm)}",
                    lambda p, idx=idx: [h_type2(diag2(1, Scalar(mpq(1, 2))), (1, 0, 0, 0))] + n_basis(idx)))
    add(_Family("T2.4c-n24", "II", "R.diag(1,0) x n(2,4)", lambda p: _embed2([diag2(1, 0)]) + n_basis((2, 4))))
    for nm, idx in nsets("n14", "n34", "n134").items():
        add(_Family(f"T2.4c-e2-{nm}", "II", f"R.h(diag(1,0),e2,0) x {_nlabel(nm)}",
                    lambda p, idx=idx: [h_type2(diag2(1, 0), (0, 1, 0, 0))] + n_basis(idx)))
    for aname, amats in (("a0", []), ("aI", [I2])):
        alab = "" if aname == "a0" else "R.I x "
        for nm, idx in nsets("n", "n13", "n23", "n134", "n234").items():
            add(_Family(f"T2.5-{aname}-{nm}", "II", f"{alab}{_nlabel(nm)}",
                        lambda p, idx=idx, am=amats: _embed2(am) + n_basis(idx)))
        for tag, params, grid in (
            ("a", (), ()),
            ("b", (), ()),
            ("c", ("alpha",), _grid("alpha", ALPHA_GRID)),
            ("d", ("s", "alpha"), tuple({"s": _q(s), "alpha": _q(a)} for s, a in SALPHA_GRID)),
            ("e", ("kappa",), _grid("kappa", ("1", "-1"))),
        ):
            add(_Family(f"T2.5{tag}-{aname}", "II", f"{alab}n_Z(5{tag})",
                        lambda p, t=tag, am=amats: _embed2(am) + n_basis(Z=_t2_Z(t, p)), params, grid))
    return fams


def _nlabel(nm: str) -> str:
    return "n" if nm == "n" else "n(" + ",".join(nm[1:]) + ")"


@lru_cache(maxsize=None)
def _family_map() -> dict:
    return {f.base: f for f in _families()}


_ID_RE = re.compile(r"^(?P<base>[^\[\]]+?)(?:\[(?P<params>[^\]]*)\])?$")


def _fmt_id(base: str, params: dict, order: Sequence[str]) -> str:
    if not order:
        return base
    return base + "[" + ",".join(f"{k}={params[k]}" for k in order) + "]"


def parse_id(text: str) -> tuple[str, dict]:
    m = _ID_RE.match(text.strip())
    if not m:
        raise KeyError(f"malformed catalog id {text!r}")
    params = {}
    if m.group("params"):
        for item in m.group("params").split(","):
            k, _, v = item.partition("=")
            params[k.strip()] = parse_scalar(v)
    return m.group("base").strip(), params


def get_entry(entry_id: str, **overrides) -> CatalogEntry:
    """Build a catalog entry from its id; ``overrides`` supply or replace parameters."""
    base, params = parse_id(entry_id)
    fams = _family_map()
    if base not in fams:
        raise KeyError(f"unknown catalog id {entry_id!r}; available: {', '.join(entry_ids())}")
    fam = fams[base]
    params.update({k: as_scalar(v) for k, v in overrides.items()})
    missing = [k for k in fam.params if k not in params]
    if missing:
        raise KeyError(f"catalog family {base} needs parameters {missing}")
    extra = [k for k in params if k not in fam.params]
    if extra:
        raise KeyError(f"catalog family {base} takes no parameters {extra}")
    return _build(fam, params)


def _build(fam: _Family, params: dict) -> CatalogEntry:
    mats = fam.build(params)
    alg = LieMatrixAlgebra.from_matrices(mats, n=7)
    conv = "C2" if fam.kind == "II" else "C1"
    eid = _fmt_id(fam.base, params, fam.params)
    return CatalogEntry(eid, conv, alg, fam.kind, dict(params), _label(fam, params))


def _label(fam: _Family, params: dict) -> str:
    lab = fam.label
    if "lambda" in params:
        lab = lab.replace("s_lambda", f"s_{{{params['lambda']}}}")
    if "mu" in params:
        lab = lab.replace("diag(1,mu)", f"diag(1,{params['mu']})")
    if "a" in params:
        lab = lab.replace("C_a", f"C_{{{params['a']}}}")
    if "k" in params:
        lab = lab.replace("m(1,0,k)", f"m(1,0,{params['k']})")
    if "j" in params and "i" not in params:
        lab = lab.replace("m(1,j,2)", f"m(1,{params['j']},2)")
    if "i" in params:
        lab = lab.replace("m(i,j,2)", f"m({params['i']},{params['j']},2)")
    extra = {k: v for k, v in params.items() if k in ("alpha", "s", "kappa")}
    if extra:
        lab += " [" + ", ".join(f"{k}={v}" for k, v in extra.items()) + "]"
    return lab


def theorem_entries(which: str, grid: dict | None = None) -> list[CatalogEntry]:
    """All entries of one theorem (``"T1"``, ``"T3"`` or ``"T2"``) on the parameter grid.

    ``grid`` maps a family base id to a list of parameter dicts and replaces
    the default grid of that family.
    """
    which = which.upper()
    if which not in ("T1", "T2", "T3"):
        raise KeyError("which must be T1, T2 or T3")
    out = []
    for fam in _families():
        if not fam.base.startswith(which + "."):
            continue
        points = (grid or {}).get(fam.base, fam.grid) if fam.params else ({},)
        for p in points:
            out.append(_build(fam, {k: as_scalar(v) for k, v in p.items()}))
    return out


def all_entries(grid: dict | None = None) -> list[CatalogEntry]:
    return theorem_entries("T1", grid) + theorem_entries("T3", grid) + theorem_entries("T2", grid)


def entry_ids() -> list[str]:
    """Ids of every entry on the default grid."""
    out = []
    for fam in _families():
        if not fam.params:
            out.append(fam.base)
        else:
            out.extend(_fmt_id(fam.base, p, fam.params) for p in fam.grid)
    return out


def family_ids() -> list[str]:
    return [f.base for f in _families()]


def family_params(base: str) -> tuple:
    return _family_map()[base].params
