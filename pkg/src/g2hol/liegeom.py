"""Left-invariant metrics on 7-dimensional Lie groups: connection, curvature, holonomy.

Conventions (fixed once and checked against a printed connection table):

* Maurer-Cartan: ``db(x, y) = -b([x, y])``, so ``db^i = -sum_{j<k} c^i_{jk} b^{jk}``
  with ``[b_j, b_k] = sum_i c^i_{jk} b_i``.
* ``Lambda_j`` is the matrix of ``nabla_{b_j}``; column ``k`` holds ``nabla_{b_j} b_k``.
* ``R(x, y) = [nabla_x, nabla_y] - nabla_{[x, y]}``.
* ``b^j_i`` denotes ``b_i (x) b^j``, the matrix unit in row ``i`` and column ``j``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from importlib import resources
from typing import Iterable, Sequence

from .exterior import Convention, act_on_form, get_convention
from .g2star import LieMatrixAlgebra
from .linalg import Matrix, RowReducer, Subspace
from .scalar import ONE, ZERO, Scalar, as_scalar, parse_scalar

__all__ = [
    "LieParseError",
    "LiePresentation",
    "JacobiResult",
    "ConnectionTable",
    "HolonomyResult",
    "Example",
    "parse_lie",
    "load_lie",
    "jacobi_check",
    "koszul",
    "curvature",
    "bianchi_residual",
    "parallel_form_check",
    "covariant_derivative",
    "ambrose_singer",
    "match_catalog",
    "format_endomorphism",
    "parse_endomorphism",
    "examples_registry",
    "get_example",
    "named_generator",
    "verify_example",
    "ExampleReport",
    "abelian",
    "data_files",
]

MAX_SWEEPS = 21


# ---------------------------------------------------------------------------
# presentations and the .lie format


class LieParseError(ValueError):
    def __init__(self, msg: str, line: int, col: int):
        super().__init__(f"line {line}, column {col}: {msg}")
        self.line = line
        self.col = col


@dataclass(frozen=True)
class LiePresentation:
    """Structure constants ``c[i][(j, k)]`` (zero-based, ``j < k``) plus a convention."""

    dim: int
    structure: tuple
    convention: Convention
    name: str = ""

    @classmethod
    def from_dict(cls, dim: int, c: dict, convention, name: str = "") -> "LiePresentation":
        rows = []
        for i in range(dim):
            d = {}
            for (j, k), v in c.get(i, {}).items():
                v = as_scalar(v)
                if j > k:
                    j, k, v = k, j, -v
                if j == k or not v:
                    continue
                d[(j, k)] = v
            rows.append(tuple(sorted(d.items())))
        return cls(dim, tuple(rows), get_convention(convention), name)

    def constants(self) -> list[dict]:
        return [dict(r) for r in self.structure]

    def c(self, i: int, j: int, k: int) -> Scalar:
        if j == k:
            return ZERO
        sign = ONE
        if j > k:
            j, k, sign = k, j, -ONE
        return dict(self.structure[i]).get((j, k), ZERO) * sign

    @property
    def gram(self) -> Matrix:
        return self.convention.gram

    def bracket_basis(self, j: int, k: int) -> tuple:
        return tuple(self.c(i, j, k) for i in range(self.dim))

    def bracket(self, x: Sequence, y: Sequence) -> tuple:
        out = [ZERO] * self.dim
        for i, row in enumerate(self.structure):
            s = ZERO
            for (j, k), v in row:
                t = x[j] * y[k] - x[k] * y[j]
                if t:
                    s = s + v * t
            out[i] = s
        return tuple(out)

    def differential(self, i: int) -> dict:
        """``db^i`` as ``{(j, k): coefficient of b^{jk}}``."""
        return {jk: -v for jk, v in self.structure[i]}

    def with_constant(self, i: int, j: int, k: int, value) -> "LiePresentation":
        c = {n: dict(r) for n, r in enumerate(self.structure)}
        c.setdefault(i, {})[(j, k)] = as_scalar(value)
        return LiePresentation.from_dict(self.dim, c, self.convention, self.name)

    def with_convention(self, conv) -> "LiePresentation":
        return LiePresentation(self.dim, self.structure, get_convention(conv), self.name)

    def to_text(self) -> str:
        lines = [f"convention: {self.convention.name}"]
        for i in range(self.dim):
            d = self.differential(i)
            if d:
                rhs = " + ".join(f"({v}) b{j + 1}{k + 1}" for (j, k), v in sorted(d.items()))
                lines.append(f"d b{i + 1} = {rhs}")
        return "\n".join(lines) + "\n"


_LHS = re.compile(r"^\s*d\s*[be]\s*\^?\s*(\d)\s*=(.*)$")
_TERM = re.compile(r"^(?:\((?P<paren>[^()]*)\)|(?P<plain>[^()]*?))\s*\*?\s*[be]\s*\^?\s*(?P<j>\d)(?P<k>\d)$")


def _split_terms(text: str, offset: int, lineno: int) -> list[tuple[int, str, int]]:
    """Split at top-level signs; yields ``(sign, body, column)``."""
    out = []
    depth = 0
    sign = 1
    start = 0
    cur = ""
    for pos, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise LieParseError("unbalanced ')'", lineno, offset + pos + 1)
        if depth == 0 and ch in "+-":
            if cur.strip():
                out.append((sign, cur.strip(), offset + start + len(cur) - len(cur.lstrip()) + 1))
                sign = 1
            if ch == "-":
                sign = -sign
            cur = ""
            start = pos + 1
            continue
        cur += ch
    if depth:
        raise LieParseError("unbalanced '('", lineno, offset + len(text))
    if cur.strip():
        out.append((sign, cur.strip(), offset + start + len(cur) - len(cur.lstrip()) + 1))
    elif text.strip():
        raise LieParseError("dangling sign", lineno, offset + len(text))
    return out


def _coef(text: str, lineno: int, col: int) -> Scalar:
    text = text.strip()
    if not text:
        return ONE
    try:
        return parse_scalar(text)
    except ValueError:
        raise LieParseError(f"bad coefficient {text!r}", lineno, col) from None


def parse_lie(text: str, name: str = "", dim: int = 7) -> LiePresentation:
    """Parse structure equations; ``e`` and ``b`` are accepted as the same basis letter."""
    conv = None
    c: dict[int, dict] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        low = line.strip().lower()
        if low.startswith("convention"):
            _, _, val = line.partition(":")
            try:
                conv = get_convention(val.strip())
            except KeyError as e:
                raise LieParseError(str(e.args[0]), lineno, line.index(val.strip(), line.index(":")) + 1) from None
            continue
        m = _LHS.match(line)
        if not m:
            raise LieParseError("expected 'd b<i> = ...' or 'convention: C1|C2|C3'", lineno, 1)
        i = int(m.group(1)) - 1
        if not 0 <= i < dim:
            raise LieParseError(f"index {i + 1} out of range", lineno, m.start(1) + 1)
        if i in c:
            raise LieParseError(f"d b{i + 1} given twice", lineno, 1)
        row: dict = {}
        for sign, body, col in _split_terms(m.group(2), m.start(2), lineno):
            t = _TERM.match(body)
            if not t:
                raise LieParseError(f"cannot read term {body!r}", lineno, col)
            coef = _coef(t.group("paren") if t.group("paren") is not None else t.group("plain"), lineno, col)
            j, k = int(t.group("j")) - 1, int(t.group("k")) - 1
            if not (0 <= j < dim and 0 <= k < dim) or j == k:
                raise LieParseError(f"bad index pair b{j + 1}{k + 1}", lineno, col)
            v = coef * sign
            if j > k:
                j, k, v = k, j, -v
            # c^i_jk = -(coefficient of b^{jk} in db^i)
            row[(j, k)] = row.get((j, k), ZERO) - v
        c[i] = row
    if conv is None:
        raise LieParseError("missing 'convention:' header", 1, 1)
    return LiePresentation.from_dict(dim, c, conv, name)


def load_lie(path) -> LiePresentation:
    with open(path, encoding="utf-8") as fh:
        return parse_lie(fh.read(), name=str(path))


# ---------------------------------------------------------------------------
# Jacobi, Koszul, curvature


@dataclass(frozen=True)
class JacobiResult:
    ok: bool
    triple: tuple | None = None
    residual: tuple | None = None

    def __bool__(self):
        return self.ok


def jacobi_check(p: LiePresentation) -> JacobiResult:
    n = p.dim
    e = [tuple(ONE if a == b else ZERO for b in range(n)) for a in range(n)]
    br = {(j, k): p.bracket_basis(j, k) for j in range(n) for k in range(n)}
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                r = [ZERO] * n
                for a, b, cc in ((i, j, k), (j, k, i), (k, i, j)):
                    t = p.bracket(br[(a, b)], e[cc])
                    r = [x + y for x, y in zip(r, t)]
                if any(r):
                    return JacobiResult(False, (i + 1, j + 1, k + 1), tuple(r))
    return JacobiResult(True)


@dataclass(frozen=True)
class ConnectionTable:
    Lambda: tuple

    def __getitem__(self, j: int) -> Matrix:
        return self.Lambda[j]

    def apply(self, x: Sequence) -> Matrix:
        """``nabla_x`` for a coordinate vector ``x``."""
        out = Matrix.zeros(len(self.Lambda))
        for c, L in zip(x, self.Lambda):
            if c:
                out = out + L.scale(c)
        return out

    def is_metric(self, gram: Matrix) -> bool:
        return all((L.T @ gram + gram @ L).is_zero() for L in self.Lambda)

    def is_torsion_free(self, p: LiePresentation) -> bool:
        n = p.dim
        for i in range(n):
            for j in range(i + 1, n):
                t = tuple(a - b for a, b in zip(self.Lambda[i].column(j), self.Lambda[j].column(i)))
                if t != p.bracket_basis(i, j):
                    return False
        return True


def koszul(p: LiePresentation) -> ConnectionTable:
    """``2<nabla_x y, z> = <[x,y],z> - <[y,z],x> + <[z,x],y>`` on basis vectors."""
    n = p.dim
    g = p.gram
    ginv = p.convention.gram_inverse
    gb = {(j, k): g.apply(p.bracket_basis(j, k)) for j in range(n) for k in range(n)}
    half = as_scalar("1/2")
    Ls = []
    for j in range(n):
        cols = []
        for k in range(n):
            low = tuple(half * (gb[(j, k)][l] - gb[(k, l)][j] + gb[(l, j)][k]) for l in range(n))
            cols.append(ginv.apply(low))
        Ls.append(Matrix([[cols[k][r] for k in range(n)] for r in range(n)]))
    return ConnectionTable(tuple(Ls))


def curvature(ct: ConnectionTable, p: LiePresentation) -> dict:
    """``{(i, j): R(b_i, b_j)}`` for zero-based ``i < j``."""
    n = p.dim
    out = {}
    for i in range(n):
        for j in range(i + 1, n):
            out[(i, j)] = ct[i].bracket(ct[j]) - ct.apply(p.bracket_basis(i, j))
    return out


def _R(R: dict, i: int, j: int) -> Matrix:
    if i == j:
        return Matrix.zeros(R[(0, 1)].rows)
    return R[(i, j)] if i < j else -R[(j, i)]


def _R_vec(R: dict, x: Sequence, y: Sequence, n: int) -> Matrix:
    out = Matrix.zeros(n)
    for i in range(n):
        if not x[i]:
            continue
        for j in range(n):
            if y[j] and i != j:
                out = out + _R(R, i, j).scale(x[i] * y[j])
    return out


def bianchi_residual(R: dict, n: int) -> list:
    """Triples ``(i, j, k)`` (one-based) where the cyclic sum of ``R(b_i,b_j)b_k`` is nonzero."""
    bad = []
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                s = [a + b + c for a, b, c in zip(_R(R, i, j).column(k), _R(R, j, k).column(i), _R(R, k, i).column(j))]
                if any(s):
                    bad.append((i + 1, j + 1, k + 1))
    return bad


def parallel_form_check(ct: ConnectionTable, conv) -> bool:
    omega = get_convention(conv).omega
    return all(act_on_form(L, omega).is_zero() for L in ct.Lambda)


def covariant_derivative(ct: ConnectionTable, R: dict, m: int, i: int, j: int) -> Matrix:
    """``(nabla_{b_m} R)(b_i, b_j) = [Lambda_m, R_ij] - R(Lambda_m b_i, b_j) - R(b_i, Lambda_m b_j)``."""
    n = ct[0].rows
    e_i = tuple(ONE if a == i else ZERO for a in range(n))
    e_j = tuple(ONE if a == j else ZERO for a in range(n))
    L = ct[m]
    return (L.bracket(_R(R, i, j))
            - _R_vec(R, L.apply(e_i), e_j, n)
            - _R_vec(R, e_i, L.apply(e_j), n))


# ---------------------------------------------------------------------------
# holonomy


@dataclass
class HolonomyResult:
    algebra: LieMatrixAlgebra
    generations: int
    curvature_span: Subspace
    matched_catalog: str | None = None

    @property
    def dim(self) -> int:
        return self.algebra.dim


def ambrose_singer(ct: ConnectionTable, p: LiePresentation, R: dict | None = None) -> HolonomyResult:
    """Holonomy algebra of the left-invariant metric.

    Let ``V_k`` be spanned by the values of ``nabla^l R`` for ``l <= k``.  Since
    ``(nabla_m T)(args) = [Lambda_m, T(args)] - sum T(.., Lambda_m arg, ..)`` and
    the second part already lies in ``V_k``, one gets
    ``V_{k+1} = V_k + sum_m [Lambda_m, V_k]``.  The sweep below iterates that
    identity, which yields exactly the spans of the successive covariant
    derivatives without building the tensors.  ``generations`` counts the
    sweeps that enlarged the span.
    """
    n = p.dim
    if R is None:
        R = curvature(ct, p)
    red = RowReducer(n * n)
    for m in R.values():
        red.add(m.entries)
    curv = Subspace(n * n, red.dense_rows())
    current = [Matrix.from_flat(v, n) for v in red.dense_rows()]
    generations = 0
    while True:
        new = []
        for L in ct.Lambda:
            if L.is_zero():
                continue
            for X in current:
                Y = L.bracket(X)
                if red.add(Y.entries):
                    new.append(Y)
        if not new:
            break
        generations += 1
        if generations > MAX_SWEEPS:
            raise RuntimeError("holonomy sweep did not stabilise")
        current = current + new
    alg = LieMatrixAlgebra(n, Subspace(n * n, red.dense_rows()))
    failure = alg.first_bracket_failure()
    if failure is not None:
        raise AssertionError(f"holonomy span is not bracket-closed at basis pair {failure}")
    alg.closed = True
    return HolonomyResult(alg, generations, curv)


def named_generator(name: str, ct: ConnectionTable, R: dict) -> Matrix:
    """``"R25"`` is ``R(b_2, b_5)``; ``"D6R36"`` is ``(nabla_{b_6} R)(b_3, b_6)``."""
    m = re.fullmatch(r"(?:D(\d))?R(\d)(\d)", name)
    if not m:
        raise ValueError(f"bad generator name {name!r}")
    i, j = int(m.group(2)) - 1, int(m.group(3)) - 1
    if m.group(1) is None:
        return _R(R, i, j)
    return covariant_derivative(ct, R, int(m.group(1)) - 1, i, j)


def _family(conv: Convention) -> str:
    return "C2" if conv.name == "C2" else "C1"


@lru_cache(maxsize=1)
def _catalog() -> tuple:
    from .catalog import all_entries

    return tuple(all_entries())


def match_catalog(hr: HolonomyResult, conv="C1", entries: Iterable | None = None) -> str | None:
    """First catalog entry whose literal span equals the holonomy algebra.

    Type II entries are compared for a C2 presentation, the C1 entries
    otherwise (C3 shares the C1 metric).
    """
    fam = _family(get_convention(conv))
    if entries is None:
        entries = _catalog()
    for e in entries:
        if e.convention != fam or e.dim != hr.dim:
            continue
        if e.algebra.span == hr.algebra.span:
            hr.matched_catalog = e.id
            return e.id
    return None


# ---------------------------------------------------------------------------
# b^j_i notation


def format_endomorphism(m: Matrix) -> str:
    """Matrix as a combination of ``b^j_i`` (row ``i``, column ``j``)."""
    out = ""
    for i in range(m.rows):
        for j in range(m.cols):
            v = m[i, j]
            if not v:
                continue
            neg = v.sign() < 0 if v.is_rational() or not v.rat else False
            a = -v if neg else v
            s = str(a)
            if " " in s:
                s = f"({s})"
            term = f"b^{j + 1}_{i + 1}" if s == "1" else f"{s} b^{j + 1}_{i + 1}"
            if not out:
                out = ("-" if neg else "") + term
            else:
                out += (" - " if neg else " + ") + term
    return out or "0"


@lru_cache(maxsize=None)
def parse_endomorphism(text: str, n: int = 7) -> Matrix:
    """Read a combination of ``b^j_i`` into a matrix.

    Accepts sympy syntax (``sqrt(2)*b^5_2``) and the output of
    :func:`format_endomorphism`; ``e^j_i`` is read as ``b^j_i``.
    """
    import sympy

    from .repstruct import _from_sympy

    src = re.sub(r"(?<=[\d)])\s+(?=r2\b)", "*", text)  # output of format_endomorphism
    src = re.sub(r"\br2\b", "sqrt(2)", src)
    src = re.sub(r"(?<=[\w)])\s+(?=[be]\^)", "*", src)
    src = re.sub(r"[be]\^(\d)_(\d)", r"B_\1_\2", src)
    syms = {f"B_{j}_{i}": sympy.Symbol(f"B_{j}_{i}") for j in range(1, n + 1) for i in range(1, n + 1)}
    expr = sympy.expand(sympy.sympify(src, locals=dict(syms, sqrt=sympy.sqrt)))
    rows = [[ZERO] * n for _ in range(n)]
    for j in range(1, n + 1):
        for i in range(1, n + 1):
            c = expr.coeff(syms[f"B_{j}_{i}"])
            if c != 0:
                rows[i - 1][j - 1] = _from_sympy(c)
    rest = sympy.expand(expr - sum(expr.coeff(s) * s for s in syms.values()))
    if rest != 0:
        raise ValueError(f"non-linear or constant part {rest} in {text!r}")
    return Matrix(rows)


# ---------------------------------------------------------------------------
# the bundled examples


@dataclass
class Example:
    name: str
    presentation: LiePresentation
    dim: int
    catalog: str
    generators: tuple
    printed_lambda: tuple
    alternatives: dict = field(default_factory=dict)
    printed_convention: str = ""

    @property
    def convention(self) -> Convention:
        return self.presentation.convention

    def printed_readings(self, j: int) -> list[str]:
        return [self.printed_lambda[j]] + list(self.alternatives.get(j, ()))


def _data_text(fname: str) -> str:
    return resources.files("g2hol").joinpath("data", fname).read_text(encoding="utf-8")


def data_files() -> list[str]:
    return sorted(p.name for p in resources.files("g2hol").joinpath("data").iterdir() if p.name.endswith(".lie"))


def examples_registry() -> list[Example]:
    from ._printed import EXAMPLES

    out = []
    for name, d in EXAMPLES.items():
        p = parse_lie(_data_text(name + ".lie"), name=name)
        out.append(Example(name, p, d["dim"], d["catalog"], tuple(d["generators"]),
                           tuple(d["Lambda"]), dict(d.get("alternatives", {})),
                           d["printed_convention"]))
    return out


def get_example(name: str) -> Example:
    for e in examples_registry():
        if e.name == name:
            return e
    raise KeyError(f"unknown example {name!r}; available: {[e.name for e in examples_registry()]}")


def abelian() -> LiePresentation:
    return parse_lie(_data_text("abelian.lie"), name="abelian")


@dataclass
class ExampleReport:
    name: str
    jacobi: bool
    signature: tuple
    parallel: bool
    lambda_readings: dict  # j -> index of the matching printed reading, or None
    holonomy_dim: int
    expected_dim: int
    generations: int
    generators_span: bool
    catalog_equal: bool
    matched_catalog: str | None
    holonomy: HolonomyResult | None = None

    @property
    def lambda_ok(self) -> bool:
        return all(v is not None for v in self.lambda_readings.values())

    @property
    def ok(self) -> bool:
        return (self.jacobi and self.signature == (4, 0, 3) and self.parallel and self.lambda_ok
                and self.holonomy_dim == self.expected_dim and self.generators_span and self.catalog_equal)


def verify_example(ex: Example) -> ExampleReport:
    from .catalog import get_entry
    from .linalg import signature

    p = ex.presentation
    ct = koszul(p)
    R = curvature(ct, p)
    readings = {}
    for j in range(p.dim):
        readings[j + 1] = next((k for k, t in enumerate(ex.printed_readings(j)) if parse_endomorphism(t) == ct[j]), None)
    hr = ambrose_singer(ct, p, R)
    gens = Subspace(p.dim ** 2, [named_generator(g, ct, R).entries for g in ex.generators])
    match_catalog(hr, p.convention)
    return ExampleReport(
        ex.name, jacobi_check(p).ok, signature(p.gram), parallel_form_check(ct, p.convention), readings,
        hr.dim, ex.dim, hr.generations, gens == hr.algebra.span,
        get_entry(ex.catalog).algebra.span == hr.algebra.span, hr.matched_catalog, hr)
