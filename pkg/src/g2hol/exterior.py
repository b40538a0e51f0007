"""Alternating forms, the three (omega, metric) conventions and the cross product.

Forms are evaluated with the determinant convention

    (b^j ^ b^k)(x, y) = b^j(x) b^k(y) - b^j(y) b^k(x),

so ``b^{i1...ik}(b_{i1}, ..., b_{ik}) = 1`` and there are no ``1/k!`` factors.
Indices are zero-based in code and printed one-based.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import permutations
from typing import Iterable, Mapping, Sequence

from .linalg import Matrix, Subspace, dot, kernel, signature, unit_vector
from .scalar import ONE, SQRT2, ZERO, Scalar, as_scalar

__all__ = [
    "KForm",
    "basis_form",
    "form_from_terms",
    "Convention",
    "C1",
    "C2",
    "C3",
    "CONVENTIONS",
    "get_convention",
    "cross",
    "hat_E",
    "act_on_form",
]


def _perm_sign(seq: Sequence[int]) -> int:
    inversions = sum(1 for a in range(len(seq)) for b in range(a + 1, len(seq)) if seq[a] > seq[b])
    return -1 if inversions % 2 else 1


def _normalize(idx: Sequence[int]) -> tuple[int, tuple[int, ...]]:
    """Sign and sorted tuple for an index tuple; sign 0 on a repeat."""
    if len(set(idx)) != len(idx):
        return 0, ()
    inversions = sum(1 for a in range(len(idx)) for b in range(a + 1, len(idx)) if idx[a] > idx[b])
    return (-1 if inversions % 2 else 1), tuple(sorted(idx))


class KForm:
    """Alternating ``degree``-form on a ``dim``-dimensional space."""

    __slots__ = ("degree", "dim", "terms")

    def __init__(self, degree: int, dim: int, terms: Mapping[tuple, object] | None = None):
        self.degree = degree
        self.dim = dim
        clean: dict[tuple, Scalar] = {}
        for idx, c in (terms or {}).items():
            idx = tuple(idx)
            if len(idx) != degree or any(not 0 <= i < dim for i in idx):
                raise ValueError(f"bad index tuple {idx} for a {degree}-form on R^{dim}")
            s, key = _normalize(idx)
            c = as_scalar(c)
            if not s or not c:
                continue
            v = clean.get(key, ZERO) + (c if s > 0 else -c)
            if v:
                clean[key] = v
            else:
                clean.pop(key, None)
        self.terms = clean

    def __add__(self, other: "KForm") -> "KForm":
        self._check(other)
        t = dict(self.terms)
        for k, v in other.terms.items():
            t[k] = t.get(k, ZERO) + v
        return KForm(self.degree, self.dim, t)

    def __sub__(self, other: "KForm") -> "KForm":
        return self + (-other)

    def __neg__(self) -> "KForm":
        return KForm(self.degree, self.dim, {k: -v for k, v in self.terms.items()})

    def scale(self, c) -> "KForm":
        c = as_scalar(c)
        return KForm(self.degree, self.dim, {k: c * v for k, v in self.terms.items()})

    __rmul__ = scale

    def __mul__(self, c):
        return self.scale(c)

    def _check(self, other: "KForm") -> None:
        if (self.degree, self.dim) != (other.degree, other.dim):
            raise ValueError("forms of different degree or ambient dimension")

    def wedge(self, other: "KForm") -> "KForm":
        if self.dim != other.dim:
            raise ValueError("wedge of forms on different spaces")
        out: dict[tuple, Scalar] = {}
        for i, a in self.terms.items():
            for j, b in other.terms.items():
                s, key = _normalize(i + j)
                if not s:
                    continue
                v = a * b
                out[key] = out.get(key, ZERO) + (v if s > 0 else -v)
        return KForm(self.degree + other.degree, self.dim, out)

    __xor__ = wedge

    def evaluate(self, vectors: Sequence[Sequence]) -> Scalar:
        if len(vectors) != self.degree:
            raise ValueError(f"a {self.degree}-form takes {self.degree} vectors, got {len(vectors)}")
        vecs = [tuple(as_scalar(x) for x in v) for v in vectors]
        if any(len(v) != self.dim for v in vecs):
            raise ValueError("vector dimension does not match the form")
        k = self.degree
        perms = [(p, _perm_sign(p)) for p in permutations(range(k))]
        total = ZERO
        for idx, c in self.terms.items():
            det = ZERO
            for p, s in perms:
                prod = ONE
                for a in range(k):
                    prod = prod * vecs[p[a]][idx[a]]
                    if not prod:
                        break
                if prod:
                    det = det + prod if s > 0 else det - prod
            if det:
                total = total + c * det
        return total

    __call__ = lambda self, *vectors: self.evaluate(vectors)  # noqa: E731

    def coefficient(self, *idx: int) -> Scalar:
        s, key = _normalize(idx)
        return ZERO if not s else (self.terms.get(key, ZERO) if s > 0 else -self.terms.get(key, ZERO))

    def vector(self, keys: Sequence[tuple]) -> tuple:
        return tuple(self.terms.get(k, ZERO) for k in keys)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        return isinstance(other, KForm) and (self.degree, self.dim) == (other.degree, other.dim) \
            and self.terms == other.terms

    def __hash__(self):
        return hash((self.degree, self.dim, frozenset(self.terms.items())))

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for idx in sorted(self.terms):
            c = self.terms[idx]
            name = "b^{" + "".join(str(i + 1) for i in idx) + "}"
            if c == ONE:
                parts.append(("+", name))
            elif c == -ONE:
                parts.append(("-", name))
            elif c.is_rational() or not c.rat:
                neg = c.sign() < 0
                parts.append(("-" if neg else "+", f"{-c if neg else c} {name}"))
            else:
                parts.append(("+", f"({c}) {name}"))
        text = " ".join(f"{s} {t}" for s, t in parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def __repr__(self):
        return f"KForm({self.degree}, {self.dim}, '{self}')"


def basis_form(dim: int, *idx: int, coef=ONE) -> KForm:
    """``coef * b^{idx}`` with zero-based indices."""
    return KForm(len(idx), dim, {tuple(idx): coef})


def form_from_terms(dim: int, degree: int, terms: Iterable[tuple]) -> KForm:
    """Build a form from ``(coef, "167")``-style pairs using one-based digits."""
    t: dict[tuple, Scalar] = {}
    for coef, digits in terms:
        idx = tuple(int(ch) - 1 for ch in str(digits))
        s, key = _normalize(idx)
        if not s:
            continue
        c = as_scalar(coef)
        t[key] = t.get(key, ZERO) + (c if s > 0 else -c)
    return KForm(degree, dim, t)


def act_on_form(a: Matrix, form: KForm) -> KForm:
    """Derivation action ``(A.f)(v1..vk) = -sum_i f(v1, .., A vi, .., vk)``."""
    n = form.dim
    if a.shape != (n, n):
        raise ValueError("endomorphism and form live on different spaces")
    out: dict[tuple, Scalar] = {}
    for idx, w in form.terms.items():
        for slot, r in enumerate(idx):
            row = a.data[r]
            for c in range(n):
                arc = row[c]
                if not arc:
                    continue
                new = idx[:slot] + (c,) + idx[slot + 1:]
                s, key = _normalize(new)
                if not s:
                    continue
                v = w * arc
                out[key] = out.get(key, ZERO) - v if s > 0 else out.get(key, ZERO) + v
    return KForm(form.degree, n, out)


def _gram_from_pairs(dim: int, pairs: Sequence[tuple[int, int]], square: int) -> Matrix:
    """Gram matrix of ``2(sum b^i . b^j) - (b^square)^2`` (one-based indices)."""
    g = [[ZERO] * dim for _ in range(dim)]
    for i, j in pairs:
        g[i - 1][j - 1] = ONE
        g[j - 1][i - 1] = ONE
    g[square - 1][square - 1] = -ONE
    return Matrix(g)


@dataclass(frozen=True)
class Convention:
    """A generic 3-form with its metric, both written in one fixed basis."""

    name: str
    omega: KForm
    gram: Matrix
    description: str = field(default="", compare=False)

    @property
    def dim(self) -> int:
        return self.gram.rows

    @cached_property
    def gram_inverse(self) -> Matrix:
        return self.gram.inverse()

    def inner(self, u: Sequence, v: Sequence) -> Scalar:
        return dot(tuple(u), self.gram @ tuple(v))

    def signature(self) -> tuple[int, int, int]:
        return signature(self.gram)

    def with_omega(self, omega: KForm, name: str | None = None) -> "Convention":
        return Convention(name or self.name, omega, self.gram, self.description)

    def __str__(self):
        return self.name


def _omega(sqrt_terms: Sequence[tuple[int, str]], four_terms: Sequence[tuple[int, str]]) -> KForm:
    """``sqrt2 * sum(s * b^{abc}) - b^4 ^ sum(s * b^{ab})``."""
    first = form_from_terms(7, 3, [(SQRT2 * s, d) for s, d in sqrt_terms])
    two = form_from_terms(7, 2, [(s, d) for s, d in four_terms])
    return first - basis_form(7, 3).wedge(two)


C1 = Convention(
    "C1",
    _omega([(1, "167"), (1, "235")], [(1, "15"), (-1, "26"), (-1, "37")]),
    _gram_from_pairs(7, [(1, 5), (2, 6), (3, 7)], 4),
    "omega_0 of the G2* model and the Type I / Type III normal form",
)
C2 = Convention(
    "C2",
    _omega([(-1, "157"), (1, "236")], [(1, "16"), (-1, "27"), (-1, "35")]),
    _gram_from_pairs(7, [(1, 6), (2, 7), (3, 5)], 4),
    "Type II normal form",
)
C3 = Convention(
    "C3",
    _omega([(1, "127"), (1, "356")], [(1, "15"), (1, "26"), (-1, "37")]),
    _gram_from_pairs(7, [(1, 5), (2, 6), (3, 7)], 4),
    "form used by the Type I and Type III left-invariant examples",
)

CONVENTIONS = {c.name: c for c in (C1, C2, C3)}


def get_convention(name) -> Convention:
    if isinstance(name, Convention):
        return name
    try:
        return CONVENTIONS[str(name).upper()]
    except KeyError:
        raise KeyError(f"unknown convention {name!r}; expected one of {sorted(CONVENTIONS)}") from None


def _omega_contract(conv: Convention, u: Sequence, v: Sequence) -> tuple:
    n = conv.dim
    return tuple(conv.omega.evaluate([u, v, unit_vector(n, w)]) for w in range(n))


def cross(conv: Convention, u: Sequence, v: Sequence) -> tuple:
    """The vector ``x`` with ``<x, w> = omega(u, v, w)`` for every ``w``."""
    u = tuple(as_scalar(x) for x in u)
    v = tuple(as_scalar(x) for x in v)
    return conv.gram_inverse @ _omega_contract(conv, u, v)


def cross_matrix(conv: Convention, b: Sequence) -> Matrix:
    """Matrix of the linear map ``v -> v x b``."""
    n = conv.dim
    cols = [cross(conv, unit_vector(n, i), b) for i in range(n)]
    return Matrix(list(zip(*cols)))


def hat_E(conv: Convention, b: Sequence) -> Subspace:
    """``{v : v x b = 0}``."""
    b = tuple(as_scalar(x) for x in b)
    if not any(b):
        raise ValueError("hat_E needs a nonzero vector")
    return kernel(cross_matrix(conv, b))


def is_isotropic(conv: Convention, sub: Subspace) -> bool:
    return all(not conv.inner(u, v) for u in sub.basis for v in sub.basis)
