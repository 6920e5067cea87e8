"""Exact rational linear algebra.

Vectors are sparse ``dict[int, Scalar]`` maps with no explicit zeros.
Subspaces are stored by their reduced row-echelon basis, which makes
equality of subspaces a plain comparison of bases.
"""

from __future__ import annotations

from collections import abc
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping, Sequence, Union

from gmpy2 import mpq

from .errors import DimensionError, SchemaError

# arbitrary-precision rationals, always kept reduced by GMP
Scalar = type(mpq())
Vec = dict[int, Scalar]
VecLike = Union[Mapping[int, object], Sequence[object]]

ZERO = mpq(0)
ONE = mpq(1)


# -- scalars -----------------------------------------------------------------

def to_scalar(x: object) -> Scalar:
    if isinstance(x, Scalar):
        return x
    if isinstance(x, bool) or isinstance(x, float):
        raise TypeError(f"refusing inexact or boolean scalar {x!r}")
    if isinstance(x, (int, Fraction)):
        return mpq(x)
    if isinstance(x, str):
        return parse_scalar(x)
    raise TypeError(f"cannot interpret {x!r} as a rational scalar")


def parse_scalar(text: object, field: str | None = None) -> Scalar:
    """Parse ``"p/q"``, ``"p"`` or an integer into an exact rational."""
    if isinstance(text, bool):
        raise SchemaError(f"expected rational string, got {text!r}", field)
    if isinstance(text, int):
        return mpq(text)
    if not isinstance(text, str):
        raise SchemaError(f"expected rational string, got {text!r}", field)
    num, sep, den = text.strip().partition("/")
    try:
        p = int(num)
        q = int(den) if sep else 1
    except ValueError:
        raise SchemaError(f"malformed rational {text!r}", field) from None
    if q == 0:
        raise SchemaError(f"zero denominator in {text!r}", field)
    return mpq(p, q)


def format_scalar(x: object) -> str:
    return str(to_scalar(x))


# -- sparse vectors ----------------------------------------------------------

def as_vec(v: VecLike) -> Vec:
    """Normalize a dense sequence or a sparse mapping to a sparse vector."""
    if type(v) is dict and all(type(k) is int and type(c) is Scalar and c for k, c in v.items()):
        return dict(v)
    items = v.items() if isinstance(v, abc.Mapping) else enumerate(v)
    out: Vec = {}
    for i, c in items:
        c = to_scalar(c)
        if c:
            out[int(i)] = c
    return out


def unit_vec(i: int) -> Vec:
    return {i: ONE}


def dense(v: Mapping[int, Scalar], n: int) -> tuple[Scalar, ...]:
    return tuple(v.get(i, ZERO) for i in range(n))


def add_into(acc: dict, v: Mapping, c: Scalar = ONE) -> dict:
    """acc += c * v, in place, dropping cancelled entries."""
    if not c:
        return acc
    for k, x in v.items():
        y = acc.get(k, ZERO) + c * x
        if y:
            acc[k] = y
        else:
            acc.pop(k, None)
    return acc


def lincomb(terms: Iterable[tuple[Scalar, Mapping]]) -> dict:
    acc: dict = {}
    for c, v in terms:
        add_into(acc, v, c)
    return acc


def scale(v: Mapping, c: Scalar) -> dict:
    if not c:
        return {}
    return {k: c * x for k, x in v.items()}


def sub(u: Mapping, v: Mapping) -> dict:
    return add_into(dict(u), v, -ONE)


# -- matrices ----------------------------------------------------------------

@dataclass(frozen=True)
class Matrix:
    """Dense row-major rational matrix (the serialization carrier)."""

    rows: int
    cols: int
    entries: tuple[Scalar, ...]

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise DimensionError(
                f"{len(self.entries)} entries for a {self.rows}x{self.cols} matrix")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[object]], cols: int | None = None) -> Matrix:
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise DimensionError("ragged matrix rows")
        return cls(len(rows), cols, tuple(to_scalar(x) for r in rows for x in r))

    @classmethod
    def from_sparse_rows(cls, rows: Sequence[Mapping[int, Scalar]], cols: int) -> Matrix:
        return cls(len(rows), cols, tuple(x for r in rows for x in dense(r, cols)))

    @classmethod
    def from_columns(cls, columns: Sequence[Mapping[int, Scalar]], rows: int) -> Matrix:
        return cls.from_sparse_rows(columns, rows).transpose()

    @classmethod
    def identity(cls, n: int) -> Matrix:
        return cls(n, n, tuple(ONE if i == j else ZERO for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> Matrix:
        return cls(rows, cols, (ZERO,) * (rows * cols))

    def __getitem__(self, ij: tuple[int, int]) -> Scalar:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[Scalar, ...]:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> list[list[Scalar]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def sparse_rows(self) -> list[Vec]:
        return [as_vec(self.row(i)) for i in range(self.rows)]

    def sparse_columns(self) -> list[Vec]:
        return self.transpose().sparse_rows()

    def transpose(self) -> Matrix:
        e = self.entries
        return Matrix(self.cols, self.rows,
                      tuple(e[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)))

    def __matmul__(self, other: Matrix) -> Matrix:
        if self.cols != other.rows:
            raise DimensionError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        cols = other.sparse_columns()
        rows = self.sparse_rows()
        out = []
        for r in rows:
            for c in cols:
                out.append(sum((x * c[k] for k, x in r.items() if k in c), ZERO))
        return Matrix(self.rows, other.cols, tuple(out))

    def to_json(self) -> list[list[str]]:
        return [[format_scalar(x) for x in self.row(i)] for i in range(self.rows)]


# -- elimination -------------------------------------------------------------

def _rref_sparse(rows: Iterable[Mapping[int, Scalar]]) -> tuple[list[Vec], list[int]]:
    """Gauss-Jordan elimination on sparse rows.

    Returns the nonzero rows of the reduced row-echelon form and their
    pivot columns in increasing order.
    """
    remaining: list[Vec] = [as_vec(r) for r in rows]
    remaining = [r for r in remaining if r]
    done: list[Vec] = []
    pivots: list[int] = []
    while remaining:
        col = min(min(r) for r in remaining)
        for idx, r in enumerate(remaining):
            if col in r:
                break
        prow = remaining.pop(idx)
        inv = ONE / prow[col]
        if inv != ONE:
            prow = {k: x * inv for k, x in prow.items()}
        for group in (remaining, done):
            for r in group:
                c = r.get(col)
                if c:
                    add_into(r, prow, -c)
        remaining = [r for r in remaining if r]
        done.append(prow)
        pivots.append(col)
    return done, pivots


def rref(m: Matrix) -> tuple[Matrix, list[int]]:
    """Reduced row-echelon form of ``m`` with zero rows removed."""
    rows, pivots = _rref_sparse(m.sparse_rows())
    return Matrix.from_sparse_rows(rows, m.cols), pivots


# -- subspaces ---------------------------------------------------------------

class Subspace:
    """A subspace of Q^n kept in canonical reduced row-echelon form."""

    def __init__(self, ambient_dim: int, vectors: Iterable[VecLike] = ()):
        rows, pivots = _rref_sparse(vectors)
        if rows and max(max(r) for r in rows) >= ambient_dim:
            raise DimensionError(f"vector index out of range for ambient dimension {ambient_dim}")
        self.ambient_dim = ambient_dim
        self.rows: tuple[Vec, ...] = tuple(rows)
        self.pivot_cols: tuple[int, ...] = tuple(pivots)

    @classmethod
    def zero(cls, n: int) -> Subspace:
        return cls(n)

    @classmethod
    def full(cls, n: int) -> Subspace:
        return cls(n, [unit_vec(i) for i in range(n)])

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def codim(self) -> int:
        return self.ambient_dim - len(self.rows)

    @property
    def basis(self) -> Matrix:
        return Matrix.from_sparse_rows(self.rows, self.ambient_dim)

    @cached_property
    def complement(self) -> tuple[int, ...]:
        piv = set(self.pivot_cols)
        return tuple(i for i in range(self.ambient_dim) if i not in piv)

    @cached_property
    def _complement_pos(self) -> dict[int, int]:
        return {c: i for i, c in enumerate(self.complement)}

    def _check(self, v: Mapping[int, Scalar]) -> None:
        if v and (max(v) >= self.ambient_dim or min(v) < 0):
            raise DimensionError(f"vector does not live in ambient dimension {self.ambient_dim}")

    def reduce(self, v: VecLike) -> Vec:
        """Remainder of ``v`` modulo the subspace; zero at every pivot."""
        v = as_vec(v)
        self._check(v)
        out = dict(v)
        for p, row in zip(self.pivot_cols, self.rows):
            c = v.get(p)
            if c:
                add_into(out, row, -c)
        return out

    def contains(self, v: VecLike) -> bool:
        return not self.reduce(v)

    __contains__ = contains

    def coords(self, v: VecLike) -> Vec:
        """Coordinates of a member of the subspace in the canonical basis."""
        v = as_vec(v)
        if self.reduce(v):
            raise DimensionError("vector is not in the subspace")
        return {t: v[p] for t, p in enumerate(self.pivot_cols) if p in v}

    def quotient_coords(self, v: VecLike) -> Vec:
        """Image of ``v`` in ambient/self on the non-pivot coordinate basis."""
        pos = self._complement_pos
        return {pos[k]: x for k, x in self.reduce(v).items()}

    def from_coords(self, c: Mapping[int, Scalar]) -> Vec:
        return lincomb((x, self.rows[t]) for t, x in c.items())

    def vectors(self) -> list[Vec]:
        return [dict(r) for r in self.rows]

    def _same_ambient(self, other: Subspace) -> None:
        if self.ambient_dim != other.ambient_dim:
            raise DimensionError(
                f"ambient dimensions differ: {self.ambient_dim} vs {other.ambient_dim}")

    def sum(self, other: Subspace) -> Subspace:
        self._same_ambient(other)
        return Subspace(self.ambient_dim, list(self.rows) + list(other.rows))

    __add__ = sum

    def intersect(self, other: Subspace) -> Subspace:
        self._same_ambient(other)
        # a in other  <=>  its class in ambient/other vanishes
        images = [other.quotient_coords(r) for r in self.rows]
        alphas = kernel_from_columns(images, self.dim)
        return Subspace(self.ambient_dim,
                        [lincomb((c, self.rows[t]) for t, c in a.items()) for a in alphas.rows])

    __and__ = intersect

    def contains_space(self, other: Subspace) -> bool:
        self._same_ambient(other)
        return all(self.contains(r) for r in other.rows)

    def equals(self, other: Subspace) -> bool:
        return (self.ambient_dim == other.ambient_dim
                and self.pivot_cols == other.pivot_cols
                and self.rows == other.rows)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.equals(other)

    def __hash__(self) -> int:
        return hash((self.ambient_dim, self.pivot_cols,
                     tuple(tuple(sorted(r.items())) for r in self.rows)))

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim}, pivots={list(self.pivot_cols)})"


def span(vectors: Iterable[VecLike], ambient_dim: int) -> Subspace:
    return Subspace(ambient_dim, vectors)


def kernel_from_columns(columns: Sequence[Mapping[int, Scalar]], dom_dim: int) -> Subspace:
    """Null space of the linear map whose j-th column is ``columns[j]``."""
    by_row: dict[int, Vec] = {}
    for j, col in enumerate(columns):
        for i, x in col.items():
            if x:
                by_row.setdefault(i, {})[j] = to_scalar(x)
    rows, pivots = _rref_sparse(by_row[i] for i in sorted(by_row))
    piv = set(pivots)
    basis = []
    for f in range(dom_dim):
        if f in piv:
            continue
        v = {f: ONE}
        for p, r in zip(pivots, rows):
            c = r.get(f)
            if c:
                v[p] = -c
        basis.append(v)
    return Subspace(dom_dim, basis)


def kernel_space(m: Matrix) -> Subspace:
    return kernel_from_columns(m.sparse_columns(), m.cols)


def image_space(m: Matrix) -> Subspace:
    return Subspace(m.rows, m.sparse_columns())


def intersect(a: Subspace, b: Subspace) -> Subspace:
    return a.intersect(b)


def contains(a: Subspace, v: VecLike) -> bool:
    return a.contains(v)


def equals(a: Subspace, b: Subspace) -> bool:
    return a.equals(b)


def complement_basis(s: Subspace) -> list[Vec]:
    """Standard basis vectors at the non-pivot columns of ``s``.

    Their classes form a basis of ambient/s.
    """
    return [unit_vec(i) for i in s.complement]


def rank_of_columns(columns: Sequence[Mapping[int, Scalar]], cod_dim: int) -> int:
    return Subspace(cod_dim, columns).dim
