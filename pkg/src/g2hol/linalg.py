"""Exact dense linear algebra over Q(sqrt 2).

Vectors are plain tuples of :class:`~g2hol.scalar.Scalar`.  :class:`Matrix` is
an immutable row-major grid.  :class:`Subspace` always stores the reduced
row-echelon basis of its span, which makes equality of subspaces a plain
comparison of tuples.

Elimination pivots on the first nonzero column; there is no magnitude
pivoting because the field is exact.  Internally rows are kept as sparse
``{column: Scalar}`` dicts, which is where nearly all the run time goes.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .scalar import ONE, ZERO, Scalar, as_scalar

__all__ = [
    "Matrix",
    "Subspace",
    "DimensionMismatch",
    "rref",
    "kernel",
    "span",
    "signature",
    "RowReducer",
    "exp_nilpotent",
    "unit_vector",
    "dot",
    "kernel_of_rows",
]


class DimensionMismatch(ValueError):
    pass


Vector = tuple


def vec(values: Iterable) -> tuple:
    return tuple(as_scalar(x) for x in values)


def zero_vector(n: int) -> tuple:
    return (ZERO,) * n


def unit_vector(n: int, i: int) -> tuple:
    return tuple(ONE if k == i else ZERO for k in range(n))


def dot(u: Sequence[Scalar], v: Sequence[Scalar]) -> Scalar:
    acc = ZERO
    for a, b in zip(u, v):
        if a and b:
            acc = acc + a * b
    return acc


class Matrix:
    """Immutable ``rows x cols`` matrix over Q(sqrt 2)."""

    __slots__ = ("rows", "cols", "data", "_hash")

    def __init__(self, data: Sequence[Sequence]):
        rows = tuple(tuple(as_scalar(x) for x in row) for row in data)
        self.rows = len(rows)
        self.cols = len(rows[0]) if rows else 0
        if any(len(r) != self.cols for r in rows):
            raise DimensionMismatch("ragged matrix")
        self.data = rows
        self._hash = None

    @classmethod
    def _wrap(cls, rows: tuple, ncols: int | None = None) -> "Matrix":
        m = object.__new__(cls)
        m.data = rows
        m.rows = len(rows)
        m.cols = len(rows[0]) if rows else (ncols or 0)
        m._hash = None
        return m

    @property
    def entries(self) -> tuple:
        """Row-major flat tuple of the entries."""
        return tuple(x for row in self.data for x in row)

    # -- constructors ------------------------------------------------------
    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> "Matrix":
        cols = rows if cols is None else cols
        return cls._wrap(tuple((ZERO,) * cols for _ in range(rows)), cols)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls._wrap(tuple(unit_vector(n, i) for i in range(n)))

    @classmethod
    def unit(cls, n: int, i: int, j: int, value=ONE) -> "Matrix":
        """Matrix with a single entry ``value`` at (i, j), zero-based."""
        value = as_scalar(value)
        return cls._wrap(tuple(
            tuple(value if (r == i and c == j) else ZERO for c in range(n)) for r in range(n)
        ))

    @classmethod
    def from_flat(cls, flat: Sequence, rows: int, cols: int | None = None) -> "Matrix":
        cols = rows if cols is None else cols
        if len(flat) != rows * cols:
            raise DimensionMismatch("flat length does not match shape")
        flat = tuple(as_scalar(x) for x in flat)
        return cls._wrap(tuple(flat[r * cols:(r + 1) * cols] for r in range(rows)), cols)

    @classmethod
    def diag(cls, values: Sequence) -> "Matrix":
        values = [as_scalar(v) for v in values]
        n = len(values)
        return cls._wrap(tuple(
            tuple(values[r] if r == c else ZERO for c in range(n)) for r in range(n)
        ))

    @classmethod
    def block_diag(cls, *blocks: "Matrix") -> "Matrix":
        n = sum(b.rows for b in blocks)
        out = [[ZERO] * n for _ in range(n)]
        off = 0
        for b in blocks:
            for i in range(b.rows):
                for j in range(b.cols):
                    out[off + i][off + j] = b.data[i][j]
            off += b.rows
        return cls._wrap(tuple(tuple(r) for r in out))

    # -- access ------------------------------------------------------------
    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def column(self, j: int) -> tuple:
        return tuple(row[j] for row in self.data)

    def flat(self) -> tuple:
        return self.entries

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def is_zero(self) -> bool:
        return not any(x for row in self.data for x in row)

    def is_square(self) -> bool:
        return self.rows == self.cols

    # -- arithmetic --------------------------------------------------------
    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same(other)
        return Matrix._wrap(tuple(
            tuple(a + b for a, b in zip(r1, r2)) for r1, r2 in zip(self.data, other.data)
        ), self.cols)

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_same(other)
        return Matrix._wrap(tuple(
            tuple(a - b for a, b in zip(r1, r2)) for r1, r2 in zip(self.data, other.data)
        ), self.cols)

    def __neg__(self) -> "Matrix":
        return Matrix._wrap(tuple(tuple(-a for a in r) for r in self.data), self.cols)

    def scale(self, c) -> "Matrix":
        c = as_scalar(c)
        if not c:
            return Matrix.zeros(self.rows, self.cols)
        return Matrix._wrap(tuple(tuple(c * a if a else ZERO for a in r) for r in self.data), self.cols)

    def __mul__(self, c) -> "Matrix":
        if isinstance(c, Matrix):
            return NotImplemented
        return self.scale(c)

    __rmul__ = __mul__

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self.cols != other.rows:
                raise DimensionMismatch(f"cannot multiply {self.shape} by {other.shape}")
            ocols = other.columns_sparse()
            out = []
            for row in self.data:
                nz = [(k, a) for k, a in enumerate(row) if a]
                new = []
                for col in ocols:
                    acc = ZERO
                    for k, a in nz:
                        b = col.get(k)
                        if b is not None:
                            acc = acc + a * b
                    new.append(acc)
                out.append(tuple(new))
            return Matrix._wrap(tuple(out), other.cols)
        v = tuple(other)
        if len(v) != self.cols:
            raise DimensionMismatch("vector length does not match matrix")
        return tuple(dot(row, v) for row in self.data)

    def columns_sparse(self) -> list[dict]:
        cols: list[dict] = [dict() for _ in range(self.cols)]
        for i, row in enumerate(self.data):
            for j, a in enumerate(row):
                if a:
                    cols[j][i] = a
        return cols

    def apply(self, v: Sequence) -> tuple:
        return self @ v

    def bracket(self, other: "Matrix") -> "Matrix":
        """Commutator ``self @ other - other @ self``."""
        return self @ other - other @ self

    def transpose(self) -> "Matrix":
        return Matrix._wrap(tuple(zip(*self.data)), self.rows) if self.rows else self

    T = property(transpose)

    def trace(self) -> Scalar:
        acc = ZERO
        for i in range(min(self.rows, self.cols)):
            acc = acc + self.data[i][i]
        return acc

    def __pow__(self, n: int) -> "Matrix":
        if n < 0:
            return self.inverse() ** (-n)
        result = Matrix.identity(self.rows)
        base = self
        while n:
            if n & 1:
                result = result @ base
            base = base @ base
            n >>= 1
        return result

    def inverse(self) -> "Matrix":
        if not self.is_square():
            raise DimensionMismatch("inverse of a non-square matrix")
        n = self.rows
        aug = Matrix._wrap(tuple(r + unit_vector(n, i) for i, r in enumerate(self.data)))
        red, piv = rref(aug)
        if piv[:n] != tuple(range(n)):
            raise ZeroDivisionError("matrix is singular")
        return Matrix._wrap(tuple(r[n:] for r in red.data[:n]))

    def rank(self) -> int:
        return len(rref(self)[1])

    def _check_same(self, other: "Matrix") -> None:
        if self.shape != other.shape:
            raise DimensionMismatch(f"shape {self.shape} vs {other.shape}")

    # -- identity ----------------------------------------------------------
    def __eq__(self, other):
        return isinstance(other, Matrix) and self.data == other.data

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.data)
        return self._hash

    def __repr__(self):
        return f"Matrix({[[str(x) for x in r] for r in self.data]})"

    def pretty(self) -> str:
        cells = [[str(x) for x in r] for r in self.data]
        if not cells:
            return "[]"
        w = max(len(c) for r in cells for c in r)
        return "\n".join("[" + " ".join(c.rjust(w) for c in r) + "]" for r in cells)


# ---------------------------------------------------------------------------
# sparse row reduction


def _sparse(row: Sequence[Scalar]) -> dict:
    return {j: a for j, a in enumerate(row) if a}


class RowReducer:
    """Incrementally maintained reduced row-echelon basis of a row space.

    Every stored row has a 1 at its pivot and zeros in all other pivot
    columns, so :meth:`reduce` needs only one pass over the pivots present in
    the incoming row.
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.pivots: dict[int, dict] = {}

    def __len__(self) -> int:
        return len(self.pivots)

    def reduce(self, row: dict) -> dict:
        row = dict(row)
        for c in [c for c in row if c in self.pivots]:
            coef = row.get(c)
            if not coef:
                continue
            for j, b in self.pivots[c].items():
                nv = row.get(j, ZERO) - coef * b
                if nv:
                    row[j] = nv
                else:
                    row.pop(j, None)
        return row

    def add(self, row) -> bool:
        """Insert a row; returns True iff it enlarged the span."""
        if not isinstance(row, dict):
            row = _sparse(row)
        row = self.reduce(row)
        if not row:
            return False
        p = min(row)
        inv = row[p].inverse()
        if inv != ONE:
            row = {j: a * inv for j, a in row.items()}
        for q, prow in self.pivots.items():
            coef = prow.get(p)
            if coef:
                for j, b in row.items():
                    nv = prow.get(j, ZERO) - coef * b
                    if nv:
                        prow[j] = nv
                    else:
                        prow.pop(j, None)
        self.pivots[p] = row
        return True

    def contains(self, row) -> bool:
        if not isinstance(row, dict):
            row = _sparse(row)
        return not self.reduce(row)

    def rows(self) -> list[tuple[int, dict]]:
        return sorted(self.pivots.items())

    def dense_rows(self) -> tuple:
        n = self.ncols
        out = []
        for _, r in self.rows():
            dense = [ZERO] * n
            for j, a in r.items():
                dense[j] = a
            out.append(tuple(dense))
        return tuple(out)


def rref(m: Matrix) -> tuple[Matrix, tuple[int, ...]]:
    """Reduced row-echelon form and pivot columns of ``m``."""
    red = RowReducer(m.cols)
    for row in m.data:
        red.add(row)
    rows = red.dense_rows()
    pivots = tuple(p for p, _ in red.rows())
    zero_rows = tuple((ZERO,) * m.cols for _ in range(m.rows - len(rows)))
    return Matrix._wrap(rows + zero_rows, m.cols), pivots


def _kernel_from_reducer(red: RowReducer) -> list[tuple]:
    n = red.ncols
    piv = red.rows()
    pivset = {p for p, _ in piv}
    basis = []
    for f in range(n):
        if f in pivset:
            continue
        v = [ZERO] * n
        v[f] = ONE
        for p, r in piv:
            a = r.get(f)
            if a:
                v[p] = -a
        basis.append(tuple(v))
    return basis


def kernel_of_rows(rows: Iterable, ncols: int) -> "Subspace":
    """Null space of the system whose (sparse or dense) rows are given."""
    red = RowReducer(ncols)
    for r in rows:
        red.add(r)
    return Subspace(ncols, _kernel_from_reducer(red))


def kernel(m: Matrix) -> "Subspace":
    """Right null space ``{v : m v = 0}``."""
    return kernel_of_rows(m.data, m.cols)


# ---------------------------------------------------------------------------


class Subspace:
    """Subspace of ``Q(sqrt2)^n`` stored by its canonical (RREF) basis."""

    __slots__ = ("ambient_dim", "basis", "pivots", "_reducer")

    def __init__(self, ambient_dim: int, vectors: Iterable = ()):
        red = RowReducer(ambient_dim)
        for v in vectors:
            v = tuple(v)
            if len(v) != ambient_dim:
                raise DimensionMismatch(f"vector of length {len(v)} in ambient {ambient_dim}")
            red.add(v)
        self._init_from(red)

    def _init_from(self, red: RowReducer) -> None:
        self.ambient_dim = red.ncols
        self.basis = red.dense_rows()
        self.pivots = tuple(p for p, _ in red.rows())
        self._reducer = red

    @classmethod
    def _from_reducer(cls, red: RowReducer) -> "Subspace":
        s = object.__new__(cls)
        s._init_from(red)
        return s

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls(n)

    @classmethod
    def full(cls, n: int) -> "Subspace":
        return cls(n, (unit_vector(n, i) for i in range(n)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self) -> int:
        return self.dim

    def contains(self, v) -> bool:
        v = tuple(v)
        if len(v) != self.ambient_dim:
            raise DimensionMismatch("vector length does not match ambient dimension")
        return self._reducer.contains(v)

    __contains__ = contains

    def coordinates(self, v) -> tuple:
        """Coordinates of ``v`` in :attr:`basis`; ValueError if ``v`` is outside."""
        v = tuple(v)
        if not self.contains(v):
            raise ValueError("vector is not in the subspace")
        return tuple(v[p] for p in self.pivots)

    def _check(self, other: "Subspace") -> None:
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatch(f"ambient {self.ambient_dim} vs {other.ambient_dim}")

    def sum(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return Subspace(self.ambient_dim, self.basis + other.basis)

    __add__ = sum

    def annihilator(self) -> "Subspace":
        """``{w : <w, v> = 0 for all v}`` with respect to the standard pairing."""
        return Subspace._from_reducer(_reducer_with_kernel(self.basis, self.ambient_dim))

    def intersect(self, other: "Subspace") -> "Subspace":
        self._check(other)
        return kernel_of_rows(self.annihilator().basis + other.annihilator().basis, self.ambient_dim)

    __and__ = intersect

    def is_subspace_of(self, other: "Subspace") -> bool:
        self._check(other)
        return all(other.contains(v) for v in self.basis)

    def __le__(self, other: "Subspace") -> bool:
        return self.is_subspace_of(other)

    def equals(self, other: "Subspace") -> bool:
        self._check(other)
        return self.basis == other.basis

    def __eq__(self, other):
        return isinstance(other, Subspace) and self.ambient_dim == other.ambient_dim \
            and self.basis == other.basis

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def __repr__(self):
        return f"Subspace(ambient_dim={self.ambient_dim}, dim={self.dim})"


def _reducer_with_kernel(rows: Sequence, n: int) -> RowReducer:
    red = RowReducer(n)
    for r in rows:
        red.add(r)
    out = RowReducer(n)
    for v in _kernel_from_reducer(red):
        out.add(v)
    return out


def span(vectors: Iterable, ambient_dim: int | None = None) -> Subspace:
    vectors = [tuple(v) for v in vectors]
    if ambient_dim is None:
        if not vectors:
            raise ValueError("ambient dimension needed for an empty span")
        ambient_dim = len(vectors[0])
    return Subspace(ambient_dim, vectors)


# ---------------------------------------------------------------------------


def signature(gram: Matrix) -> tuple[int, int, int]:
    """Inertia ``(negative, zero, positive)`` of a symmetric matrix.

    Exact symmetric Gaussian reduction; a zero diagonal pivot is repaired by
    adding a partner row/column with a nonzero off-diagonal entry.
    """
    if not gram.is_square() or gram != gram.T:
        raise ValueError("signature needs a symmetric matrix")
    a = [list(r) for r in gram.data]
    n = len(a)
    neg = zero = pos = 0
    active = list(range(n))
    while active:
        k = next((i for i in active if a[i][i]), None)
        if k is None:
            pair = next(((i, j) for i in active for j in active if i != j and a[i][j]), None)
            if pair is None:
                zero += len(active)
                break
            i, j = pair
            # row_i += row_j, col_i += col_j  -> a[i][i] = 2 a[i][j] != 0
            for c in range(n):
                a[i][c] = a[i][c] + a[j][c]
            for r in range(n):
                a[r][i] = a[r][i] + a[r][j]
            k = i
        p = a[k][k]
        s = p.sign()
        if s < 0:
            neg += 1
        else:
            pos += 1
        active.remove(k)
        inv = p.inverse()
        for i in active:
            f = a[i][k]
            if not f:
                continue
            f = f * inv
            for j in active:
                if a[k][j]:
                    a[i][j] = a[i][j] - f * a[k][j]
            a[i][k] = ZERO
        for j in active:
            a[k][j] = ZERO
    return neg, zero, pos


def exp_nilpotent(m: Matrix) -> Matrix:
    """``exp(m)`` as a finite sum; ValueError unless ``m`` is nilpotent."""
    n = m.rows
    total = Matrix.identity(n)
    term = Matrix.identity(n)
    for k in range(1, n + 1):
        term = (term @ m).scale(Scalar(1) / k)
        if term.is_zero():
            return total
        total = total + term
    raise ValueError("matrix is not nilpotent")
