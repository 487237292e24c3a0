"""Exact scalars and small dense matrices over Q and prime fields F_p.

Rationals are :class:`fractions.Fraction`; prime-field elements are :class:`Fp`.
A :class:`Field` object carries the field tag and does coercion, parsing and
canonical formatting. Nothing in this module ever rounds.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

__all__ = [
    "FieldMismatchError",
    "DimensionError",
    "SingularMatrixError",
    "Fp",
    "Field",
    "QQ",
    "GF",
    "field_of",
    "Matrix",
    "mat_mul",
    "mat_inverse",
    "kernel_basis",
    "rref",
    "rank",
    "solve",
]


class FieldMismatchError(TypeError):
    """Arithmetic between scalars or matrices over different fields."""


class DimensionError(ValueError):
    pass


class SingularMatrixError(ArithmeticError):
    pass


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


class Fp:
    """An element of the prime field F_p, stored as a residue in [0, p)."""

    __slots__ = ("v", "p")

    def __init__(self, v: int, p: int):
        self.v = v % p
        self.p = p

    def _coerce(self, other) -> int:
        if isinstance(other, Fp):
            if other.p != self.p:
                raise FieldMismatchError(f"F_{self.p} vs F_{other.p}")
            return other.v
        if isinstance(other, int) and not isinstance(other, bool):
            return other
        raise FieldMismatchError(f"cannot combine F_{self.p} element with {type(other).__name__}")

    def __add__(self, other):
        return Fp(self.v + self._coerce(other), self.p)

    __radd__ = __add__

    def __sub__(self, other):
        return Fp(self.v - self._coerce(other), self.p)

    def __rsub__(self, other):
        return Fp(self._coerce(other) - self.v, self.p)

    def __mul__(self, other):
        return Fp(self.v * self._coerce(other), self.p)

    __rmul__ = __mul__

    def __neg__(self):
        return Fp(-self.v, self.p)

    def inverse(self) -> "Fp":
        if self.v == 0:
            raise ZeroDivisionError("inverse of 0 in F_p")
        return Fp(pow(self.v, -1, self.p), self.p)

    def __truediv__(self, other):
        o = Fp(self._coerce(other), self.p)
        return self * o.inverse()

    def __rtruediv__(self, other):
        return Fp(self._coerce(other), self.p) * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return Fp(pow(self.v, e, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, Fp):
            return self.p == other.p and self.v == other.v
        if isinstance(other, int) and not isinstance(other, bool):
            return self.v == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.v, self.p))

    def __bool__(self):
        return self.v != 0

    def __int__(self):
        return self.v

    def __repr__(self):
        return f"Fp({self.v}, {self.p})"

    def __str__(self):
        return str(self.v)


class Field:
    """Base field tag: ``Field(0)`` is Q, ``Field(p)`` is F_p."""

    __slots__ = ("p",)

    def __init__(self, p: int = 0):
        if p and not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        if p >= 2**31:
            raise ValueError("prime fields are limited to p < 2^31")
        self.p = p

    @property
    def is_rational(self) -> bool:
        return self.p == 0

    @property
    def characteristic(self) -> int:
        return self.p

    @property
    def tag(self) -> str:
        return "Q" if self.p == 0 else f"F{self.p}"

    def __eq__(self, other):
        return isinstance(other, Field) and other.p == self.p

    def __hash__(self):
        return hash(("Field", self.p))

    def __repr__(self):
        return "QQ" if self.p == 0 else f"GF({self.p})"

    @property
    def zero(self):
        return Fraction(0) if self.p == 0 else Fp(0, self.p)

    @property
    def one(self):
        return Fraction(1) if self.p == 0 else Fp(1, self.p)

    def __call__(self, x):
        """Coerce an int, Fraction, string literal or element of this field."""
        if isinstance(x, str):
            return self.parse(x)
        if self.p == 0:
            if isinstance(x, Fp):
                raise FieldMismatchError("F_p element used over Q")
            return Fraction(x)
        if isinstance(x, Fp):
            if x.p != self.p:
                raise FieldMismatchError(f"F_{x.p} element used over F_{self.p}")
            return x
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ZeroDivisionError(f"denominator divisible by {self.p}")
            return Fp(x.numerator, self.p) / x.denominator
        return Fp(int(x), self.p)

    def contains(self, x) -> bool:
        if self.p == 0:
            return isinstance(x, Fraction)
        return isinstance(x, Fp) and x.p == self.p

    def parse(self, literal) -> object:
        """Parse a JSON literal: ``"a/b"`` or ``"a"`` over Q, an int (or digit string) over F_p."""
        if self.p == 0:
            if isinstance(literal, bool) or not isinstance(literal, (str, int)):
                raise ValueError(f"bad rational literal {literal!r}")
            return Fraction(literal)
        if isinstance(literal, str):
            literal = int(literal)
        if isinstance(literal, bool) or not isinstance(literal, int):
            raise ValueError(f"bad F_p literal {literal!r}")
        return Fp(literal, self.p)

    def format(self, x):
        """Canonical JSON form of a scalar (string over Q, int over F_p)."""
        if self.p == 0:
            x = Fraction(x)
            return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
        return int(self(x))

    def to_json(self) -> dict:
        return {"type": "Q"} if self.p == 0 else {"type": "Fp", "p": self.p}

    @staticmethod
    def from_json(obj: dict) -> "Field":
        kind = obj.get("type")
        if kind == "Q":
            return QQ
        if kind == "Fp":
            return GF(int(obj["p"]))
        raise ValueError(f"unknown base field {obj!r}")


QQ = Field(0)


@lru_cache(maxsize=None)
def GF(p: int) -> Field:
    return Field(p)


def field_of(x) -> Field:
    if isinstance(x, Fp):
        return GF(x.p)
    if isinstance(x, (Fraction, int)):
        return QQ
    raise TypeError(f"not an exact scalar: {x!r}")


class Matrix:
    """Immutable dense matrix; every entry lies in ``field``."""

    __slots__ = ("field", "rows", "cols", "_data")

    def __init__(self, field: Field, data: Sequence[Sequence]):
        data = tuple(tuple(field(x) for x in row) for row in data)
        rows = len(data)
        cols = len(data[0]) if rows else 0
        if any(len(r) != cols for r in data):
            raise DimensionError("ragged matrix")
        self.field = field
        self.rows = rows
        self.cols = cols
        self._data = data

    @classmethod
    def _raw(cls, field: Field, data, rows: int, cols: int) -> "Matrix":
        m = object.__new__(cls)
        m.field, m.rows, m.cols = field, rows, cols
        m._data = tuple(tuple(r) for r in data)
        return m

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        z, o = field.zero, field.one
        return cls._raw(field, [[o if i == j else z for j in range(n)] for i in range(n)], n, n)

    @classmethod
    def zeros(cls, field: Field, rows: int, cols: int) -> "Matrix":
        return cls._raw(field, [[field.zero] * cols for _ in range(rows)], rows, cols)

    @classmethod
    def from_columns(cls, field: Field, columns: Sequence[Sequence]) -> "Matrix":
        if not columns:
            raise DimensionError("no columns")
        return cls(field, list(zip(*columns)))

    @property
    def entries(self) -> tuple:
        return tuple(x for row in self._data for x in row)

    def tolist(self) -> list[list]:
        return [list(r) for r in self._data]

    def row(self, i: int) -> tuple:
        return self._data[i]

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self._data)

    def __getitem__(self, ij):
        i, j = ij
        return self._data[i][j]

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self._data == other._data
            and self.rows == other.rows
            and self.cols == other.cols
        )

    def __hash__(self):
        return hash((self.field, self.rows, self.cols, self._data))

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in r) for r in self._data)
        return f"Matrix({self.field!r}, [{body}])"

    def __matmul__(self, other: "Matrix") -> "Matrix":
        return mat_mul(self, other)

    def __add__(self, other: "Matrix") -> "Matrix":
        _check_same(self, other)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionError("shape mismatch in addition")
        data = [[a + b for a, b in zip(r, s)] for r, s in zip(self._data, other._data)]
        return Matrix._raw(self.field, data, self.rows, self.cols)

    def __sub__(self, other: "Matrix") -> "Matrix":
        _check_same(self, other)
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionError("shape mismatch in subtraction")
        data = [[a - b for a, b in zip(r, s)] for r, s in zip(self._data, other._data)]
        return Matrix._raw(self.field, data, self.rows, self.cols)

    def transpose(self) -> "Matrix":
        return Matrix._raw(self.field, list(zip(*self._data)) if self.rows else [], self.cols, self.rows)

    def apply(self, vec: Sequence) -> tuple:
        """Matrix times a column vector."""
        if len(vec) != self.cols:
            raise DimensionError("vector length mismatch")
        z = self.field.zero
        out = []
        for r in self._data:
            acc = z
            for a, b in zip(r, vec):
                if a and b:
                    acc = acc + a * b
            out.append(acc)
        return tuple(out)

    def is_identity(self) -> bool:
        return self.rows == self.cols and all(
            self._data[i][j] == (1 if i == j else 0) for i in range(self.rows) for j in range(self.cols)
        )


def _check_same(a: Matrix, b: Matrix) -> None:
    if a.field != b.field:
        raise FieldMismatchError(f"{a.field!r} vs {b.field!r}")


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    _check_same(a, b)
    if a.cols != b.rows:
        raise DimensionError(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    z = a.field.zero
    bt = list(zip(*b._data)) if b.rows else [() for _ in range(b.cols)]
    data = []
    for r in a._data:
        row = []
        for c in bt:
            acc = z
            for x, y in zip(r, c):
                if x and y:
                    acc = acc + x * y
            row.append(acc)
        data.append(row)
    return Matrix._raw(a.field, data, a.rows, b.cols)


def rref(rows: Iterable[Sequence], field: Field) -> tuple[list[list], list[int]]:
    """Reduced row echelon form of a list of rows; returns (nonzero rows, pivot columns).

    Pivot is always the first nonzero entry found scanning down the column.
    """
    m = [list(r) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(m)):
            if m[i][c]:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = field.one / m[r][c]
        prow = [x * inv if x else x for x in m[r]]
        m[r] = prow
        nz = [j for j in range(c, ncols) if prow[j]]
        for i in range(len(m)):
            if i != r:
                f = m[i][c]
                if f:
                    row = m[i]
                    for j in nz:
                        row[j] = row[j] - f * prow[j]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def _kernel_from_rref(red: list[list], pivots: list[int], ncols: int, field: Field) -> list[tuple]:
    pivset = set(pivots)
    free = [c for c in range(ncols) if c not in pivset]
    basis = []
    z, o = field.zero, field.one
    for f in free:
        v = [z] * ncols
        v[f] = o
        for row, pc in zip(red, pivots):
            if row[f]:
                v[pc] = -row[f]
        basis.append(tuple(v))
    return basis


def kernel_vectors(rows: Sequence[Sequence], ncols: int, field: Field) -> list[tuple]:
    """Null-space basis of the row list; one vector per free column, in column order."""
    red, pivots = rref(rows, field)
    return _kernel_from_rref(red, pivots, ncols, field)


def kernel_basis(m: Matrix) -> list[tuple]:
    """Exact null-space basis of ``m``.

    Vector ``i`` is 1 at the i-th free column, 0 at every other free column,
    so the list is ordered by free-column position and is canonical.
    """
    return kernel_vectors(m._data, m.cols, m.field)


def rank(m: Matrix) -> int:
    return len(rref(m._data, m.field)[1])


def mat_inverse(m: Matrix) -> Matrix:
    if m.rows != m.cols:
        raise DimensionError("inverse of a non-square matrix")
    n = m.rows
    f = m.field
    aug = [list(r) + [f.one if i == j else f.zero for j in range(n)] for i, r in enumerate(m._data)]
    red, pivots = rref(aug, f)
    if len(pivots) < n or pivots[n - 1] != n - 1:
        raise SingularMatrixError("matrix is singular")
    return Matrix._raw(f, [row[n:] for row in red], n, n)


def solve(a: Matrix, b: Matrix) -> Matrix | None:
    """Some X with a X = b (free variables set to 0), or None when inconsistent."""
    _check_same(a, b)
    if a.rows != b.rows:
        raise DimensionError("row mismatch in solve")
    n, k = a.cols, b.cols
    aug = [list(r) + list(s) for r, s in zip(a._data, b._data)]
    red, pivots = rref(aug, a.field)
    if pivots and pivots[-1] >= n:
        return None
    x = [[a.field.zero] * k for _ in range(n)]
    for row, pc in zip(red, pivots):
        x[pc] = row[n:]
    return Matrix._raw(a.field, x, n, k)
