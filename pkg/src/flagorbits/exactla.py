"""Exact linear algebra over the rationals and over prime fields.

Everything here is exact: rationals are :class:`fractions.Fraction`, residues
mod ``p`` are plain ints in ``range(p)``.  Matrices are immutable; operations
return new objects.

>>> m = Matrix.from_rows([[1, 2], [2, 4]])
>>> rref(m)[1]
1
>>> nullspace(m).dim
1
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

__all__ = [
    "FieldMismatchError", "ShapeError", "Field", "QQ", "GF",
    "Matrix", "MatSpace", "rref", "nullspace", "intersect", "span",
    "matrix_to_json", "matrix_from_json",
]


class FieldMismatchError(ValueError):
    """Raised when objects over different fields are combined."""


class ShapeError(ValueError):
    """Raised on incompatible matrix or ambient shapes."""


class Field:
    """Base class for the two kinds of exact scalar fields."""

    characteristic: int

    def __call__(self, x):
        raise NotImplementedError

    def inv(self, x):
        raise NotImplementedError

    def reduce(self, x):
        return x

    @property
    def zero(self):
        return self(0)

    @property
    def one(self):
        return self(1)


class _Rationals(Field):
    characteristic = 0

    def __call__(self, x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, bool) or not isinstance(x, (int, str)):
            raise TypeError(f"cannot coerce {x!r} to a rational exactly")
        return Fraction(x)

    def inv(self, x):
        return 1 / x

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, _Rationals)

    def __hash__(self):
        return hash("QQ")


QQ = _Rationals()


class GF(Field):
    """The prime field of ``p`` elements."""

    def __init__(self, p: int):
        if p < 2 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.characteristic = p

    def __call__(self, x):
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ZeroDivisionError(f"{x} has no image in GF({self.p})")
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        return int(x) % self.p

    def reduce(self, x):
        return x % self.p

    def inv(self, x):
        if x % self.p == 0:
            raise ZeroDivisionError("division by zero in GF(%d)" % self.p)
        return pow(x, -1, self.p)

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, GF) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))


def _check_same_field(*fields):
    first = fields[0]
    for f in fields[1:]:
        if f != first:
            raise FieldMismatchError(f"{first!r} vs {f!r}")
    return first


@dataclass(frozen=True)
class Matrix:
    """A dense ``rows x cols`` matrix over an exact field."""

    rows: int
    cols: int
    entries: tuple  # row-major, length rows * cols
    field: Field = QQ

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ShapeError("entries length must equal rows * cols")

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], field: Field = QQ) -> Matrix:
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ShapeError("ragged rows")
        return cls(len(rows), ncols, tuple(field(x) for r in rows for x in r), field)

    @classmethod
    def zeros(cls, rows: int, cols: int, field: Field = QQ) -> Matrix:
        return cls(rows, cols, (field.zero,) * (rows * cols), field)

    @classmethod
    def identity(cls, n: int, field: Field = QQ) -> Matrix:
        z, o = field.zero, field.one
        return cls(n, n, tuple(o if i == j else z for i in range(n) for j in range(n)), field)

    @classmethod
    def diagonal(cls, diag: Sequence, field: Field = QQ) -> Matrix:
        n = len(diag)
        z = field.zero
        return cls(n, n, tuple(field(diag[i]) if i == j else z
                               for i in range(n) for j in range(n)), field)

    @classmethod
    def elementary(cls, rows: int, cols: int, i: int, j: int, field: Field = QQ) -> Matrix:
        """The matrix unit with a single 1 at 0-based position (i, j)."""
        data = [field.zero] * (rows * cols)
        data[i * cols + j] = field.one
        return cls(rows, cols, tuple(data), field)

    @classmethod
    def block_diagonal(cls, blocks: Sequence[Matrix]) -> Matrix:
        field = _check_same_field(*(b.field for b in blocks)) if blocks else QQ
        n = sum(b.rows for b in blocks)
        m = sum(b.cols for b in blocks)
        data = [[field.zero] * m for _ in range(n)]
        r0 = c0 = 0
        for b in blocks:
            for i in range(b.rows):
                for j in range(b.cols):
                    data[r0 + i][c0 + j] = b[i, j]
            r0 += b.rows
            c0 += b.cols
        return cls.from_rows(data, field) if n else cls(0, m, (), field)

    # -- access ------------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row_list(self) -> list[list]:
        c = self.cols
        return [list(self.entries[i * c:(i + 1) * c]) for i in range(self.rows)]

    def column(self, j: int) -> tuple:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def submatrix(self, rows: Iterable[int], cols: Iterable[int]) -> Matrix:
        rows, cols = list(rows), list(cols)
        return Matrix(len(rows), len(cols),
                      tuple(self[i, j] for i in rows for j in cols), self.field)

    def with_field(self, field: Field) -> Matrix:
        """Reinterpret integer (or p-integral rational) entries over ``field``."""
        return Matrix(self.rows, self.cols, tuple(field(x) for x in self.entries), field)

    # -- arithmetic --------------------------------------------------------

    def _binary(self, other: Matrix, op) -> Matrix:
        _check_same_field(self.field, other.field)
        if self.shape != other.shape:
            raise ShapeError(f"{self.shape} vs {other.shape}")
        red = self.field.reduce
        return Matrix(self.rows, self.cols,
                      tuple(red(op(a, b)) for a, b in zip(self.entries, other.entries)),
                      self.field)

    def __add__(self, other: Matrix) -> Matrix:
        return self._binary(other, lambda a, b: a + b)

    def __sub__(self, other: Matrix) -> Matrix:
        return self._binary(other, lambda a, b: a - b)

    def __neg__(self) -> Matrix:
        red = self.field.reduce
        return Matrix(self.rows, self.cols, tuple(red(-a) for a in self.entries), self.field)

    def scale(self, c) -> Matrix:
        c = self.field(c)
        red = self.field.reduce
        return Matrix(self.rows, self.cols, tuple(red(c * a) for a in self.entries), self.field)

    def __matmul__(self, other: Matrix) -> Matrix:
        _check_same_field(self.field, other.field)
        if self.cols != other.rows:
            raise ShapeError(f"cannot multiply {self.shape} by {other.shape}")
        a = self.row_list()
        bt = other.transpose().row_list()
        red = self.field.reduce
        zero = self.field.zero
        out = []
        for row in a:
            nz = [(k, x) for k, x in enumerate(row) if x]
            for col in bt:
                s = zero
                for k, x in nz:
                    y = col[k]
                    if y:
                        s += x * y
                out.append(red(s))
        return Matrix(self.rows, other.cols, tuple(out), self.field)

    def transpose(self) -> Matrix:
        return Matrix(self.cols, self.rows,
                      tuple(self[i, j] for j in range(self.cols) for i in range(self.rows)),
                      self.field)

    @property
    def T(self) -> Matrix:
        return self.transpose()

    def delta(self) -> Matrix:
        """Transpose along the antidiagonal: entry (i, j) goes to (m-1-j, n-1-i)."""
        r, c = self.rows, self.cols
        return Matrix(c, r, tuple(self[r - 1 - j, c - 1 - i]
                                  for i in range(c) for j in range(r)), self.field)

    def is_zero(self) -> bool:
        return not any(self.entries)

    def rank(self) -> int:
        return rref(self)[1]

    def det(self):
        if self.rows != self.cols:
            raise ShapeError("determinant of a non-square matrix")
        rows = self.row_list()
        f = self.field
        n = self.rows
        d = f.one
        for c in range(n):
            piv = next((i for i in range(c, n) if rows[i][c]), None)
            if piv is None:
                return f.zero
            if piv != c:
                rows[c], rows[piv] = rows[piv], rows[c]
                d = f.reduce(-d)
            p = rows[c][c]
            d = f.reduce(d * p)
            pinv = f.inv(p)
            for i in range(c + 1, n):
                if rows[i][c]:
                    k = f.reduce(rows[i][c] * pinv)
                    rows[i] = [f.reduce(x - k * y) for x, y in zip(rows[i], rows[c])]
        return d

    def inverse(self) -> Matrix:
        if self.rows != self.cols:
            raise ShapeError("inverse of a non-square matrix")
        n = self.rows
        aug = Matrix.from_rows([r + e for r, e in zip(self.row_list(),
                                                      Matrix.identity(n, self.field).row_list())],
                               self.field)
        red, rank = rref(aug)
        if any(red[i, i] != self.field.one for i in range(n)):
            raise ZeroDivisionError("matrix is singular")
        return red.submatrix(range(n), range(n, 2 * n))

    def flatten(self) -> tuple:
        return self.entries

    def __str__(self):
        w = max((len(str(x)) for x in self.entries), default=1)
        return "\n".join(" ".join(str(x).rjust(w) for x in r) for r in self.row_list())


def _rref_rows(rows: list[list], field: Field) -> tuple[list[list], list[int]]:
    """In-place style reduction of a list of rows; returns (rows, pivot columns)."""
    red = field.reduce
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = field.inv(rows[r][c])
        rows[r] = [red(x * inv) for x in rows[r]]
        prow = rows[r]
        nzp = [(j, x) for j, x in enumerate(prow) if x]
        for i in range(nrows):
            if i != r:
                k = rows[i][c]
                if k:
                    row = rows[i]
                    for j, x in nzp:
                        row[j] = red(row[j] - k * x)
        pivots.append(c)
        r += 1
    return rows, pivots


def rref(m: Matrix) -> tuple[Matrix, int]:
    """Reduced row-echelon form and rank.

    Pivots are taken as the first nonzero entry scanning columns left to
    right, so the output is canonical.
    """
    if any(x is not None and not _in_field(x, m.field) for x in m.entries):
        raise FieldMismatchError("entry outside the matrix field")
    rows, pivots = _rref_rows(m.row_list(), m.field)
    out = Matrix.from_rows(rows, m.field) if m.rows else m
    return out, len(pivots)


def _in_field(x, field: Field) -> bool:
    if field.characteristic == 0:
        return isinstance(x, Fraction)
    return isinstance(x, int) and not isinstance(x, bool) and 0 <= x < field.characteristic


@dataclass(frozen=True)
class MatSpace:
    """A linear subspace of ``rows x cols`` matrices, given by a basis.

    The basis is kept in reduced echelon form (on flattened coordinates), so
    two equal subspaces have equal bases.
    """

    ambient: tuple[int, int]
    basis: tuple[Matrix, ...]
    field: Field = QQ

    def __post_init__(self):
        for b in self.basis:
            if b.shape != self.ambient:
                raise ShapeError("basis element outside the ambient shape")
            _check_same_field(self.field, b.field)
        if self.basis and _rank_of_vectors([b.entries for b in self.basis], self.field) != len(self.basis):
            raise ValueError("basis is not linearly independent")

    @property
    def dim(self) -> int:
        return len(self.basis)

    def vectors(self) -> list[tuple]:
        return [b.entries for b in self.basis]

    def __contains__(self, m: Matrix) -> bool:
        if m.shape != self.ambient:
            raise ShapeError("ambient mismatch")
        _check_same_field(self.field, m.field)
        vecs = self.vectors()
        return _rank_of_vectors(vecs + [m.entries], self.field) == len(vecs)

    def contains_space(self, other: MatSpace) -> bool:
        _check_ambient(self, other)
        vecs = self.vectors()
        return _rank_of_vectors(vecs + other.vectors(), self.field) == len(vecs)

    def __add__(self, other: MatSpace) -> MatSpace:
        _check_ambient(self, other)
        return span(list(self.basis) + list(other.basis), self.ambient, self.field)

    def __eq__(self, other):
        if not isinstance(other, MatSpace):
            return NotImplemented
        return (self.ambient == other.ambient and self.field == other.field
                and self.basis == other.basis)

    def __hash__(self):
        return hash((self.ambient, self.basis))

    def conjugate(self, g: Matrix, g_inv: Matrix | None = None) -> MatSpace:
        """The subspace ``g X g^-1``."""
        g_inv = g.inverse() if g_inv is None else g_inv
        return span([g @ b @ g_inv for b in self.basis], self.ambient, self.field)

    def image(self, f) -> MatSpace:
        """Image under a linear map given as a Python callable on matrices."""
        imgs = [f(b) for b in self.basis]
        shape = imgs[0].shape if imgs else self.ambient
        return span(imgs, shape, self.field)


def _check_ambient(a: MatSpace, b: MatSpace):
    if a.ambient != b.ambient:
        raise ShapeError(f"ambient mismatch {a.ambient} vs {b.ambient}")
    _check_same_field(a.field, b.field)


def _rank_of_vectors(vecs: list[Sequence], field: Field) -> int:
    if not vecs:
        return 0
    return len(_rref_rows([list(v) for v in vecs], field)[1])


def span(mats: Sequence[Matrix], ambient: tuple[int, int], field: Field = QQ) -> MatSpace:
    """The subspace spanned by ``mats`` with a canonical (echelon) basis."""
    r, c = ambient
    vecs = [list(m.entries) for m in mats]
    for m in mats:
        if m.shape != ambient:
            raise ShapeError("generator outside the ambient shape")
        _check_same_field(field, m.field)
    if not vecs:
        return MatSpace(ambient, (), field)
    rows, pivots = _rref_rows(vecs, field)
    basis = tuple(Matrix(r, c, tuple(rows[i]), field) for i in range(len(pivots)))
    return MatSpace(ambient, basis, field)


def nullspace(m: Matrix) -> MatSpace:
    """Basis of ``{v : m v = 0}`` as column vectors, one per free column."""
    f = m.field
    red, rank = rref(m)
    rows = red.row_list()[:rank]
    pivots = [next(j for j, x in enumerate(row) if x) for row in rows]
    free = [j for j in range(m.cols) if j not in set(pivots)]
    basis = []
    for fc in free:
        v = [f.zero] * m.cols
        v[fc] = f.one
        for row, pc in zip(rows, pivots):
            v[pc] = f.reduce(-row[fc])
        basis.append(Matrix(m.cols, 1, tuple(v), f))
    return span(basis, (m.cols, 1), f)


def solve_linear(equations: Sequence[Sequence], nvars: int, field: Field = QQ) -> list[tuple]:
    """Basis (as coordinate tuples) of the solution space of homogeneous equations."""
    if not equations:
        f = field
        return [tuple(f.one if i == j else f.zero for j in range(nvars)) for i in range(nvars)]
    mat = Matrix.from_rows(equations, field)
    return [b.entries for b in nullspace(mat).basis]


def intersect(a: MatSpace, b: MatSpace) -> MatSpace:
    """The intersection of two subspaces of the same ambient space."""
    _check_ambient(a, b)
    f = a.field
    if a.dim == 0 or b.dim == 0:
        return MatSpace(a.ambient, (), f)
    va, vb = a.vectors(), b.vectors()
    n = len(va[0])
    # coefficients (x, y) with sum x_i a_i - sum y_j b_j = 0
    cols = [list(v) for v in va] + [[f.reduce(-x) for x in v] for v in vb]
    eqs = [[cols[k][i] for k in range(len(cols))] for i in range(n)]
    sols = solve_linear(eqs, len(cols), f)
    r, c = a.ambient
    gens = []
    for s in sols:
        vec = [f.zero] * n
        for k, coef in enumerate(s[:len(va)]):
            if coef:
                vec = [f.reduce(x + coef * y) for x, y in zip(vec, va[k])]
        gens.append(Matrix(r, c, tuple(vec), f))
    out = span(gens, a.ambient, f)
    if out.dim != a.dim + b.dim - (a + b).dim:
        raise ArithmeticError("intersection dimension formula violated")
    return out


_CANON = re.compile(r"^(0|-?[1-9][0-9]*)(/[1-9][0-9]*)?$")


def _parse_rational(s: str) -> Fraction:
    if not isinstance(s, str) or not _CANON.match(s):
        raise ValueError(f"non-canonical rational {s!r}")
    x = Fraction(s)
    if str(x) != s:
        raise ValueError(f"non-canonical rational {s!r}")
    return x


def matrix_to_json(m: Matrix) -> list:
    """Rationals become canonical strings (``"3"``, ``"-1/2"``); residues stay ints."""
    if m.field.characteristic == 0:
        return [[str(x) for x in row] for row in m.row_list()]
    return m.row_list()


def matrix_from_json(data: list, field: Field = QQ) -> Matrix:
    if field.characteristic == 0:
        return Matrix.from_rows([[_parse_rational(x) for x in row] for row in data], field)
    p = field.characteristic
    for row in data:
        for x in row:
            if isinstance(x, bool) or not isinstance(x, int) or not 0 <= x < p:
                raise ValueError(f"{x!r} is not a reduced residue mod {p}")
    return Matrix.from_rows(data, field)
