"""Formal curvature spaces K(h), the derived span and the Berger test.

A formal curvature tensor is stored as its 21 values ``R_ij = R(b_i, b_j)``
for ``i < j`` (one-based indices), each an ``n x n`` matrix in ``h``.  The
unknowns of the Bianchi system are the ``h``-coordinates of those values, so
membership in ``h`` holds by construction.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Mapping, Sequence

from .catalog import TypeIElement, TypeIIElement, h_type1, h_type2
from .exterior import Convention, get_convention
from .g2star import LieMatrixAlgebra
from .linalg import Matrix, RowReducer, Subspace, kernel_of_rows
from .scalar import ONE, SQRT2, ZERO, Scalar, as_scalar

__all__ = [
    "CurvatureFamily",
    "BergerResult",
    "curvature_space",
    "curvature_space_bruteforce",
    "derived_span",
    "is_berger",
    "bianchi_residual",
    "pair_symmetry_violations",
    "hI_algebra",
    "hII_algebra",
    "TableCheck",
    "table_relations_check",
    "table_parametrization",
    "TABLE1_SYMBOLS",
    "TABLE2_SYMBOLS",
]

Pair = tuple  # (i, j) with 1 <= i < j <= n


def _pairs(n: int) -> list[Pair]:
    return list(combinations(range(1, n + 1), 2))


def _signed(i: int, j: int) -> tuple[Pair, int]:
    return ((i, j), 1) if i < j else ((j, i), -1)


@dataclass
class CurvatureFamily:
    """A basis of K(h); each element maps ``(i, j)`` with ``i < j`` to a matrix."""

    h: LieMatrixAlgebra
    basis: list = field(default_factory=list)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def n(self) -> int:
        return self.h.n

    def combination(self, coeffs: Sequence) -> dict:
        out = {p: Matrix.zeros(self.n) for p in _pairs(self.n)}
        for c, R in zip(coeffs, self.basis):
            c = as_scalar(c)
            if c:
                for p, m in R.items():
                    out[p] = out[p] + m.scale(c)
        return out


def _value(R: Mapping, i: int, j: int, n: int) -> Matrix:
    if i == j:
        return Matrix.zeros(n)
    p, s = _signed(i, j)
    m = R.get(p)
    if m is None:
        return Matrix.zeros(n)
    return m if s > 0 else -m


def bianchi_residual(R: Mapping, n: int = 7) -> list:
    """Triples ``(i, j, k)`` where ``R_ij b_k + R_jk b_i + R_ki b_j`` is nonzero."""
    bad = []
    for i, j, k in combinations(range(1, n + 1), 3):
        v = [ZERO] * n
        for (a, b), c in (((i, j), k), ((j, k), i), ((k, i), j)):
            col = _value(R, a, b, n).column(c - 1)
            v = [x + y for x, y in zip(v, col)]
        if any(v):
            bad.append((i, j, k))
    return bad


def curvature_space(h: LieMatrixAlgebra) -> CurvatureFamily:
    """Exact kernel of the Bianchi system with unknowns in ``h``."""
    n = h.n
    B = h.basis()
    m = len(B)
    pairs = _pairs(n)
    index = {p: t for t, p in enumerate(pairs)}
    if m == 0:
        return CurvatureFamily(h, [])
    # column k of basis element a, stored sparsely
    cols = [[{l: b[l, k] for l in range(n) if b[l, k]} for k in range(n)] for b in B]
    rows = []
    for i, j, k in combinations(range(1, n + 1), 3):
        eq: dict[int, dict[int, Scalar]] = {}
        for (a, b), c in (((i, j), k), ((j, k), i), ((k, i), j)):
            p, s = _signed(a, b)
            base = index[p] * m
            for t in range(m):
                for l, x in cols[t][c - 1].items():
                    row = eq.setdefault(l, {})
                    val = x if s > 0 else -x
                    row[base + t] = row.get(base + t, ZERO) + val
        for row in eq.values():
            row = {c: v for c, v in row.items() if v}
            if row:
                rows.append(row)
    ker = kernel_of_rows(rows, len(pairs) * m)
    basis = []
    for vec in ker.basis:
        R = {}
        for p in pairs:
            t0 = index[p] * m
            R[p] = h.element(vec[t0:t0 + m])
        basis.append(R)
    return CurvatureFamily(h, basis)


def curvature_space_bruteforce(h: LieMatrixAlgebra) -> int:
    """dim K(h) from full ``n x n`` unknowns plus membership equations.

    An independent oracle for :func:`curvature_space`: nothing here uses a
    basis of ``h``, only its annihilator.
    """
    n = h.n
    N = n * n
    pairs = _pairs(n)
    index = {p: t for t, p in enumerate(pairs)}
    rows = []
    ann = h.span.annihilator().basis
    for p in pairs:
        base = index[p] * N
        for a in ann:
            row = {base + c: x for c, x in enumerate(a) if x}
            if row:
                rows.append(row)
    for i, j, k in combinations(range(1, n + 1), 3):
        for l in range(n):
            row = {}
            for (a, b), c in (((i, j), k), ((j, k), i), ((k, i), j)):
                p, s = _signed(a, b)
                col = index[p] * N + l * n + (c - 1)
                row[col] = row.get(col, ZERO) + (ONE if s > 0 else -ONE)
            row = {c: v for c, v in row.items() if v}
            if row:
                rows.append(row)
    return kernel_of_rows(rows, len(pairs) * N).dim


def derived_span(k: CurvatureFamily) -> LieMatrixAlgebra:
    """Span of every value ``R(b_i, b_j)`` over the basis of K(h)."""
    red = RowReducer(k.n * k.n)
    for R in k.basis:
        for m in R.values():
            if not m.is_zero():
                red.add(m.entries)
    alg = LieMatrixAlgebra(k.n, Subspace._from_reducer(red))
    alg.closed = alg.is_bracket_closed()
    return alg


@dataclass
class BergerResult:
    verdict: bool
    curvature: CurvatureFamily
    derived: LieMatrixAlgebra

    @property
    def dim_K(self) -> int:
        return self.curvature.dim

    def __bool__(self) -> bool:
        return self.verdict


def is_berger(h: LieMatrixAlgebra) -> BergerResult:
    """``h`` equals its derived span; the K(h)-basis is the certificate."""
    k = curvature_space(h)
    d = derived_span(k)
    return BergerResult(d.span == h.span, k, d)


def pair_symmetry_violations(k: CurvatureFamily, conv: Convention | str | Matrix) -> list:
    """Basis elements and index quadruples where ``<R_ij b_k, b_l> != <R_kl b_i, b_j>``."""
    G = conv if isinstance(conv, Matrix) else get_convention(conv).gram
    n = k.n
    bad = []
    for e, R in enumerate(k.basis):
        GR = {p: G @ m for p, m in R.items()}

        def val(i, j, a, b):
            if i == j:
                return ZERO
            p, s = _signed(i, j)
            x = GR[p][b - 1, a - 1]
            return x if s > 0 else -x

        for i, j in _pairs(n):
            for a, b in _pairs(n):
                if val(i, j, a, b) != val(a, b, i, j):
                    bad.append((e, (i, j, a, b)))
    return bad


# ---------------------------------------------------------------------------
# the two maximal families and their tables


@lru_cache(maxsize=None)
def hI_algebra() -> LieMatrixAlgebra:
    """gl(2) x m in convention C1 (dimension 9)."""
    mats = [h_type1(Matrix.unit(2, i, j)) for i in range(2) for j in range(2)]
    mats += [h_type1(v=1), h_type1(u=(1, 0)), h_type1(u=(0, 1)), h_type1(y=(1, 0)), h_type1(y=(0, 1))]
    return LieMatrixAlgebra.from_matrices(mats, n=7)


@lru_cache(maxsize=None)
def hII_algebra() -> LieMatrixAlgebra:
    """gl(2) x n in convention C2 (dimension 9)."""
    mats = [h_type2(Matrix.unit(2, i, j)) for i in range(2) for j in range(2)]
    mats += [h_type2(z=tuple(int(a == b) for b in range(4))) for a in range(4)] + [h_type2(c=1)]
    return LieMatrixAlgebra.from_matrices(mats, n=7)


TABLE1_SYMBOLS = tuple(
    [f"a{i}" for i in (1, 2, 3)] + [f"r{i}" for i in (1, 2, 3)] + [f"x{i}" for i in (1, 2, 3, 4)]
    + [f"{c}{k}" for c in "bcuj" for k in (1, 2, 3, 4)] + ["v1", "v2", "t"]
)
TABLE2_SYMBOLS = tuple(
    [f"x{i}" for i in range(1, 6)] + [f"y{i}" for i in range(1, 6)] + [f"r{i}" for i in range(1, 5)]
    + ["t"] + [f"t{i}" for i in range(1, 7)] + ["s1", "s2", "j1", "j2"]
)

# Each row: the pairs it fills, with the factor relating R_ij to the cell data,
# and the cells themselves.  Type I cells are (A, v, u, y); Type II (A, z, c).
_R2 = "r2"
TABLE1_ROWS = (
    ([((1, 5), "1")], ("0", "0", "0", "0"), "0", ("0", "0"), ("b1+b4", "c1+c4")),
    ([((2, 5), "-1"), ((4, 7), _R2)], ("x2", "-x1", "x3", "-x2"), "c1-b3", ("r2", "r3"), ("u2", "u4")),
    ([((2, 6), "1")], ("-a1", "-a2", "-a3", "a1"), "-r2", ("x1", "x2"), ("b1", "c1")),
    ([((2, 7), "1")], ("-a3", "a1", "j1", "a3"), "-r3", ("x2", "x3"), ("b3", "c3")),
    ([((3, 5), "1"), ((4, 6), _R2)], ("x1", "x4", "x2", "-x1"), "b4-c2", ("r1", "r2"), ("u1", "u3")),
    ([((3, 6), "1")], ("-a2", "j2", "a1", "a2"), "r1", ("x4", "-x1"), ("b2", "c2")),
    ([((6, 7), "-1"), ((4, 5), _R2)], ("-r2", "r1", "-r3", "r2"), "u2-u3", ("b4-c2", "c1-b3"), ("v1", "v2")),
    ([((5, 6), "1")], ("b1", "b2", "b3", "b4"), "v1", ("u1", "u2"), ("j3", "t")),
    ([((5, 7), "1")], ("c1", "c2", "c3", "c4"), "v2", ("u3", "u4"), ("t", "j4")),
)
TABLE1_ZERO = ((1, 2), (1, 3), (1, 4), (1, 6), (1, 7), (2, 3), (2, 4), (3, 4))
TABLE1_DIFF = ((3, 7), (1, 5), (2, 6))  # R37 = R15 - R26

TABLE2_ROWS = (
    ([((1, 6), "1")], ("0", "0", "0", "0"), ("x4", "x3", "x2", "x1"), "t1+t"),
    ([((1, 7), "1"), ((3, 4), _R2)], ("0", "0", "0", "0"), ("x5", "x4", "x3", "x2"), "t4-t5"),
    ([((2, 6), "1"), ((4, 5), "-r2")], ("0", "0", "0", "0"), ("y4", "y3", "y2", "y1"), "t2-t3"),
    ([((2, 7), "1")], ("0", "0", "0", "0"), ("y5", "y4", "y3", "y2"), "t6+t"),
    ([((5, 6), "1")], ("x1", "y1", "x2", "y2"), ("t6", "t2", "s2", "j2"), "r1"),
    ([((5, 7), "1"), ((4, 6), _R2)], ("x2", "y2", "x3", "y3"), ("t5", "t1", "t3", "s2"), "r2"),
    ([((3, 6), "1"), ((4, 7), _R2)], ("x3", "y3", "x4", "y4"), ("s1", "t4", "t1", "t2"), "r3"),
    ([((3, 7), "1")], ("x4", "y4", "x5", "y5"), ("j1", "s1", "t5", "t6"), "r4"),
    ([((6, 7), "1")], ("t1+t", "t2-t3", "t4-t5", "t6+t"), ("r4", "r3", "r2", "r1"), "0"),
)
TABLE2_ZERO = ((1, 2), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5))
TABLE2_DIFF = ((3, 5), (1, 6), (2, 7))  # R35 = R16 - R27


def _linear(text: str, symbols: Sequence[str]) -> dict:
    """Parse a cell like ``"c1-b3"`` into ``{symbol: coefficient}``."""
    import sympy

    syms = {s: sympy.Symbol(s) for s in symbols}
    expr = sympy.sympify(text, locals=syms)
    out = {}
    for s, name in ((syms[k], k) for k in symbols):
        c = expr.coeff(s)
        if c != 0:
            out[name] = as_scalar(int(c)) if c.is_Integer else as_scalar(str(c))
    rest = expr.subs({s: 0 for s in syms.values()})
    if rest != 0:
        raise ValueError(f"table cell {text!r} is not linear in the parameters")
    return out


def _cell(text: str, values: Mapping[str, Scalar], symbols) -> Scalar:
    total = ZERO
    for k, c in _linear(text, symbols).items():
        total = total + c * values.get(k, ZERO)
    return total


def _factor(text: str) -> Scalar:
    return {"1": ONE, "-1": -ONE, "r2": SQRT2, "-r2": -SQRT2}[text]


def table_parametrization(which: int, values: Mapping[str, object]) -> dict:
    """The curvature tensor that Table ``which`` assigns to the given parameters."""
    vals = {k: as_scalar(v) for k, v in values.items()}
    if which == 1:
        syms, rows, zero, diff = TABLE1_SYMBOLS, TABLE1_ROWS, TABLE1_ZERO, TABLE1_DIFF
    elif which == 2:
        syms, rows, zero, diff = TABLE2_SYMBOLS, TABLE2_ROWS, TABLE2_ZERO, TABLE2_DIFF
    else:
        raise ValueError("which must be 1 or 2")
    unknown = set(vals) - set(syms)
    if unknown:
        raise KeyError(f"unknown table parameters {sorted(unknown)}")
    R = {p: Matrix.zeros(7) for p in _pairs(7)}
    for row in rows:
        targets = row[0]
        if which == 1:
            A, v, u, y = row[1:]
            A = Matrix([[_cell(A[0], vals, syms), _cell(A[1], vals, syms)],
                        [_cell(A[2], vals, syms), _cell(A[3], vals, syms)]])
            data = h_type1(TypeIElement(A, _cell(v, vals, syms),
                                        tuple(_cell(s, vals, syms) for s in u),
                                        tuple(_cell(s, vals, syms) for s in y)))
        else:
            A, z, c = row[1:]
            A = Matrix([[_cell(A[0], vals, syms), _cell(A[1], vals, syms)],
                        [_cell(A[2], vals, syms), _cell(A[3], vals, syms)]])
            data = h_type2(TypeIIElement(A, tuple(_cell(s, vals, syms) for s in z), _cell(c, vals, syms)))
        for p, f in targets:
            R[p] = data.scale(_factor(f))
    for p in zero:
        R[p] = Matrix.zeros(7)
    tgt, a, b = diff
    R[tgt] = R[a] - R[b]
    return R


@dataclass
class TableCheck:
    which: int
    kernel_dim: int
    bruteforce_dim: int | None
    n_symbols: int
    table_rank: int
    failing_symbols: list
    relation_failures: list
    pair_symmetry_failures: int
    gap: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return (
            not self.failing_symbols
            and not self.relation_failures
            and self.table_rank == self.n_symbols == self.kernel_dim
            and self.pair_symmetry_failures == 0
            and (self.bruteforce_dim is None or self.bruteforce_dim == self.kernel_dim)
        )


def _relations(which: int) -> list:
    """Footer identities as lists of (pair, coefficient) summing to zero."""
    r2 = SQRT2
    if which == 1:
        rels = [[(p, ONE)] for p in TABLE1_ZERO]
        rels.append([((3, 7), ONE), ((1, 5), -ONE), ((2, 6), ONE)])
        rels.append([((2, 5), -r2), ((4, 7), -ONE)])   # -sqrt2 R25 = R47
        rels.append([((3, 5), r2), ((4, 6), -ONE)])    # sqrt2 R35 = R46
        rels.append([((6, 7), -r2), ((4, 5), -ONE)])   # -sqrt2 R67 = R45
    else:
        rels = [[(p, ONE)] for p in TABLE2_ZERO]
        rels.append([((3, 5), ONE), ((1, 6), -ONE), ((2, 7), ONE)])
        rels.append([((1, 7), r2), ((3, 4), -ONE)])
        rels.append([((2, 6), r2), ((4, 5), ONE)])
        rels.append([((5, 7), r2), ((4, 6), -ONE)])
        rels.append([((3, 6), r2), ((4, 7), -ONE)])
    return rels


def table_relations_check(which: int, bruteforce: bool = True) -> TableCheck:
    """Compare K(h^I) (``which=1``) or K(h^II) (``which=2``) with its table.

    Every unit parameter vector must give a tensor satisfying Bianchi, the
    parameter map must be injective, its rank must equal dim K, and every
    footer identity must hold on the independently computed kernel.
    """
    h = hI_algebra() if which == 1 else hII_algebra()
    conv = "C1" if which == 1 else "C2"
    syms = TABLE1_SYMBOLS if which == 1 else TABLE2_SYMBOLS
    k = curvature_space(h)
    failing = []
    red = RowReducer(21 * 49)
    pairs = _pairs(7)
    for s in syms:
        R = table_parametrization(which, {s: 1})
        if bianchi_residual(R) or any(not h.contains(m) for m in R.values()):
            failing.append(s)
        red.add(tuple(x for p in pairs for x in R[p].entries))
    rel_fail = []
    for e, R in enumerate(k.basis):
        for rel in _relations(which):
            tot = Matrix.zeros(7)
            for p, c in rel:
                tot = tot + R[p].scale(c)
            if not tot.is_zero():
                rel_fail.append((e, tuple(p for p, _ in rel)))
    rank = len(red)
    # kernel directions the table does not reach, reduced modulo its image
    gap = []
    for R in k.basis:
        flat = tuple(x for p in pairs for x in R[p].entries)
        rest = red.reduce({i: x for i, x in enumerate(flat) if x})
        if rest and red.add(flat):
            dense = [rest.get(i, ZERO) for i in range(21 * 49)]
            gap.append({p: Matrix.from_flat(dense[t * 49:(t + 1) * 49], 7)
                        for t, p in enumerate(pairs) if any(dense[t * 49:(t + 1) * 49])})
    bf = curvature_space_bruteforce(h) if bruteforce else None
    return TableCheck(
        which, k.dim, bf, len(syms), rank, failing, rel_fail,
        len(pair_symmetry_violations(k, conv)), gap,
    )
