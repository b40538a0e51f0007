"""The 14-dimensional matrix model of g2* and generic matrix Lie algebras."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .exterior import C1, Convention, act_on_form, get_convention
from .linalg import Matrix, RowReducer, Subspace, kernel_of_rows
from .scalar import SQRT2, ZERO, Scalar, as_scalar

__all__ = [
    "G2Params",
    "LieMatrixAlgebra",
    "g2_from_params",
    "g2_basis",
    "lie_closure",
    "matrix_span",
    "stabilizer_algebra",
    "so_check",
    "so_algebra",
]


@dataclass(frozen=True)
class G2Params:
    """The fourteen free coordinates ``s1..s14`` of g2*."""

    s: tuple

    def __post_init__(self):
        if len(self.s) != 14:
            raise ValueError("g2* has exactly 14 parameters")
        object.__setattr__(self, "s", tuple(as_scalar(x) for x in self.s))

    @classmethod
    def unit(cls, k: int) -> "G2Params":
        """Parameter vector with ``s_k = 1`` (one-based ``k``) and the rest zero."""
        return cls(tuple(1 if i == k - 1 else 0 for i in range(14)))


def g2_from_params(p: G2Params | Sequence) -> Matrix:
    if not isinstance(p, G2Params):
        p = G2Params(tuple(p))
    s = (None,) + p.s  # one-based
    r = SQRT2
    z = ZERO
    return Matrix([
        [s[1] + s[4], -s[10], s[9], r * s[6], z, -s[11], -s[12]],
        [-s[8], s[1], s[2], r * s[9], s[11], z, s[6]],
        [s[7], s[3], s[4], r * s[10], s[12], -s[6], z],
        [r * s[5], r * s[7], r * s[8], z, r * s[6], r * s[9], r * s[10]],
        [z, s[13], s[14], r * s[5], -s[1] - s[4], s[8], -s[7]],
        [-s[13], z, -s[5], r * s[7], s[10], -s[1], -s[3]],
        [-s[14], s[5], z, r * s[8], -s[9], -s[2], -s[4]],
    ])


def g2_basis() -> list[Matrix]:
    return [g2_from_params(G2Params.unit(k)) for k in range(1, 15)]


class LieMatrixAlgebra:
    """Span of ``n x n`` matrices (flattened row-major) with a closure flag.

    ``closed`` is a certificate: it is only ever set after every bracket of
    basis elements has been checked to lie in the span.
    """

    __slots__ = ("n", "span", "closed", "_basis")

    def __init__(self, n: int, span: Subspace, closed: bool = False):
        if span.ambient_dim != n * n:
            raise ValueError("span does not live in gl(n)")
        self.n = n
        self.span = span
        self.closed = closed
        self._basis = None

    @classmethod
    def from_matrices(cls, mats: Iterable[Matrix], n: int | None = None, check: bool = True):
        mats = list(mats)
        if n is None:
            if not mats:
                raise ValueError("dimension needed for an empty span")
            n = mats[0].rows
        alg = cls(n, Subspace(n * n, (m.entries for m in mats)))
        if check:
            alg.closed = alg.is_bracket_closed()
        return alg

    @property
    def dim(self) -> int:
        return self.span.dim

    def basis(self) -> list[Matrix]:
        if self._basis is None:
            self._basis = [Matrix.from_flat(v, self.n) for v in self.span.basis]
        return self._basis

    def contains(self, m: Matrix) -> bool:
        return self.span.contains(m.entries)

    __contains__ = contains

    def coordinates(self, m: Matrix) -> tuple:
        return self.span.coordinates(m.entries)

    def element(self, coords: Sequence) -> Matrix:
        out = Matrix.zeros(self.n)
        for c, b in zip(coords, self.basis()):
            c = as_scalar(c)
            if c:
                out = out + b.scale(c)
        return out

    def is_bracket_closed(self) -> bool:
        return self.first_bracket_failure() is None

    def first_bracket_failure(self):
        b = self.basis()
        for i in range(len(b)):
            for j in range(i + 1, len(b)):
                if not self.contains(b[i].bracket(b[j])):
                    return i, j
        return None

    def is_subalgebra_of(self, other: "LieMatrixAlgebra") -> bool:
        return self.span.is_subspace_of(other.span)

    def __eq__(self, other):
        return isinstance(other, LieMatrixAlgebra) and self.n == other.n and self.span == other.span

    def __hash__(self):
        return hash(self.span)

    def __repr__(self):
        return f"LieMatrixAlgebra(n={self.n}, dim={self.dim}, closed={self.closed})"


def matrix_span(mats: Iterable[Matrix], n: int) -> Subspace:
    return Subspace(n * n, (m.entries for m in mats))


def lie_closure(gens: Iterable[Matrix], n: int | None = None) -> LieMatrixAlgebra:
    """Smallest bracket-closed span containing ``gens``."""
    gens = list(gens)
    if n is None:
        if not gens:
            raise ValueError("dimension needed for an empty generating set")
        n = gens[0].rows
    red = RowReducer(n * n)
    basis: list[Matrix] = []
    for g in gens:
        if g.shape != (n, n):
            raise ValueError("generators must all be n x n")
        if red.add(g.entries):
            basis.append(g)
    frontier = list(basis)
    while frontier:
        new = []
        for x in frontier:
            for y in list(basis):
                c = x.bracket(y)
                if not c.is_zero() and red.add(c.entries):
                    basis.append(c)
                    new.append(c)
        frontier = new
    return LieMatrixAlgebra(n, Subspace._from_reducer(red), closed=True)


def _unit_matrices(n: int):
    for i in range(n):
        for j in range(n):
            yield i, j, Matrix.unit(n, i, j)


@lru_cache(maxsize=None)
def stabilizer_algebra(conv: Convention | str = C1) -> LieMatrixAlgebra:
    """Kernel of ``A -> A.omega`` on gl(n)."""
    conv = get_convention(conv)
    n = conv.dim
    images = [act_on_form(e, conv.omega) for _, _, e in _unit_matrices(n)]
    keys = sorted({k for f in images for k in f.terms})
    # each equation is one 3-form component; unknowns are the n*n entries
    rows = []
    for key in keys:
        rows.append({col: f.terms[key] for col, f in enumerate(images) if key in f.terms})
    ker = kernel_of_rows(rows, n * n)
    alg = LieMatrixAlgebra(n, ker)
    alg.closed = alg.is_bracket_closed()
    return alg


def so_check(conv: Convention | str, a: Matrix) -> bool:
    """True iff ``a`` is skew-adjoint for the convention's metric."""
    g = get_convention(conv).gram
    return (g @ a + a.T @ g).is_zero()


@lru_cache(maxsize=None)
def so_algebra(conv: Convention | str = C1) -> LieMatrixAlgebra:
    """All skew-adjoint matrices of the convention's metric."""
    conv = get_convention(conv)
    n = conv.dim
    g = conv.gram
    rows = []
    # (gA + A^T g)_{ij} = sum_k g_ik A_kj + A_ki g_kj
    for i in range(n):
        for j in range(i, n):
            row: dict[int, Scalar] = {}
            for k in range(n):
                if g[i, k]:
                    col = k * n + j
                    row[col] = row.get(col, ZERO) + g[i, k]
                if g[k, j]:
                    col = k * n + i
                    row[col] = row.get(col, ZERO) + g[k, j]
            rows.append({c: v for c, v in row.items() if v})
    return LieMatrixAlgebra(n, kernel_of_rows(rows, n * n), closed=True)
