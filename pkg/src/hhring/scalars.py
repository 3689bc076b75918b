"""Exact field arithmetic (QQ and GF(p)) and dense linear algebra.

Scalars are plain Python values: ``Fraction`` in characteristic 0 and ints
in ``range(p)`` in characteristic p.  All elimination is exact; over QQ the
kernels work on integer rows (cleared denominators) with per-row gcd
reduction, which is much faster than Fraction arithmetic and loses nothing.

Pivoting is leftmost-nonzero with topmost row, so every result is
deterministic; representative choices downstream depend on this.
"""

from fractions import Fraction
from math import gcd


class CompositeCharacteristic(ValueError):
    pass


class DimensionMismatch(ValueError):
    pass


def _is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class Field:
    """QQ (characteristic 0) or the prime field GF(p)."""

    def __init__(self, characteristic):
        if characteristic != 0 and not _is_prime(characteristic):
            raise CompositeCharacteristic(
                f"characteristic must be 0 or prime, got {characteristic}")
        self.characteristic = characteristic

    def of_int(self, k):
        if self.characteristic == 0:
            return Fraction(k)
        return k % self.characteristic

    def zero(self):
        return self.of_int(0)

    def one(self):
        return self.of_int(1)

    def add(self, a, b):
        c = a + b
        return c if self.characteristic == 0 else c % self.characteristic

    def sub(self, a, b):
        c = a - b
        return c if self.characteristic == 0 else c % self.characteristic

    def mul(self, a, b):
        c = a * b
        return c if self.characteristic == 0 else c % self.characteristic

    def neg(self, a):
        return -a if self.characteristic == 0 else (-a) % self.characteristic

    def inv(self, a):
        if self.characteristic == 0:
            return Fraction(1) / a
        return pow(a, self.characteristic - 2, self.characteristic)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a):
        return a == 0

    def __eq__(self, other):
        return isinstance(other, Field) and self.characteristic == other.characteristic

    def __hash__(self):
        return hash(("Field", self.characteristic))

    def __repr__(self):
        return "QQ" if self.characteristic == 0 else f"GF({self.characteristic})"


def field_create(characteristic):
    return Field(characteristic)


class Matrix:
    """Dense matrix over a Field; ``entries`` is a list of row lists."""

    def __init__(self, field, rows, cols, entries):
        if len(entries) != rows or any(len(r) != cols for r in entries):
            raise DimensionMismatch("entry count must equal rows x cols")
        self.field = field
        self.rows = rows
        self.cols = cols
        self.entries = entries

    @classmethod
    def zero(cls, field, rows, cols):
        return cls(field, rows, cols, [[field.zero()] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, field, n):
        m = cls.zero(field, n, n)
        for i in range(n):
            m.entries[i][i] = field.one()
        return m

    def transpose(self):
        ent = [[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)]
        return Matrix(self.field, self.cols, self.rows, ent)

    def mul_vector(self, v):
        if len(v) != self.cols:
            raise DimensionMismatch("vector length must equal cols")
        f = self.field
        out = []
        for row in self.entries:
            s = f.zero()
            for a, x in zip(row, v):
                if a != 0 and x != 0:
                    s = f.add(s, f.mul(a, x))
            out.append(s)
        return out


def _int_rows_from_field(field, entries):
    # Clear denominators row by row; GF(p) rows pass through as ints.
    if field.characteristic != 0:
        p = field.characteristic
        return [[int(a) % p for a in row] for row in entries]
    out = []
    for row in entries:
        den = 1
        for a in row:
            if isinstance(a, Fraction):
                den = den * a.denominator // gcd(den, a.denominator)
        out.append([int(a * den) for a in row])
    return out


def _reduce_row(row):
    g = 0
    for a in row:
        if a:
            g = gcd(g, abs(a))
            if g == 1:
                break
    if g > 1:
        for j in range(len(row)):
            row[j] //= g
    return row


def int_echelon(rows, ncols, char):
    """In-place forward+back elimination on integer rows.

    Returns the pivot column list.  Over QQ the echelon rows are integer
    multiples of the reduced rows (pivot entries need not be 1); over GF(p)
    pivots are normalized to 1.  Row order after the call: pivot rows first
    in pivot-column order, zero rows dropped.
    """
    pivots = []
    pivrows = []
    work = rows
    nrows = len(work)
    top = 0
    for col in range(ncols):
        sel = None
        for i in range(top, nrows):
            if work[i][col]:
                sel = i
                break
        if sel is None:
            continue
        work[top], work[sel] = work[sel], work[top]
        piv = work[top]
        if char:
            inv = pow(piv[col], char - 2, char)
            for j in range(col, ncols):
                if piv[j]:
                    piv[j] = piv[j] * inv % char
            for i in range(nrows):
                if i != top and work[i][col]:
                    c = work[i][col]
                    row = work[i]
                    for j in range(col, ncols):
                        if piv[j]:
                            row[j] = (row[j] - c * piv[j]) % char
        else:
            pv = piv[col]
            for i in range(nrows):
                if i != top and work[i][col]:
                    c = work[i][col]
                    row = work[i]
                    for j in range(ncols):
                        row[j] = pv * row[j] - c * piv[j]
                    _reduce_row(row)
        pivots.append(col)
        pivrows.append(piv)
        top += 1
        if top == nrows:
            break
    del work[top:]
    return pivots


def rank_nullspace(A):
    """Rank and a deterministic nullspace basis (one vector per free column)."""
    f = A.field
    rows = _int_rows_from_field(f, A.entries)
    pivots = int_echelon(rows, A.cols, f.characteristic)
    rank = len(pivots)
    pivset = set(pivots)
    basis = []
    for free in range(A.cols):
        if free in pivset:
            continue
        v = [f.zero()] * A.cols
        v[free] = f.one()
        for i, c in enumerate(pivots):
            a = rows[i][free]
            if a:
                if f.characteristic == 0:
                    v[c] = Fraction(-a, rows[i][c])
                else:
                    v[c] = f.neg(f.mul(a, f.inv(rows[i][c])))
        basis.append(v)
    return rank, basis


def solve_linear(A, b):
    """Some x with Ax = b, or None; free variables are set to zero."""
    f = A.field
    if len(b) != A.rows:
        raise DimensionMismatch("rhs length must equal rows")
    aug = [row + [bb] for row, bb in zip(A.entries, b)]
    rows = _int_rows_from_field(f, aug)
    pivots = int_echelon(rows, A.cols + 1, f.characteristic)
    if pivots and pivots[-1] == A.cols:
        return None
    x = [f.zero()] * A.cols
    for i, c in enumerate(pivots):
        if f.characteristic == 0:
            x[c] = Fraction(rows[i][A.cols], rows[i][c])
        else:
            x[c] = f.mul(rows[i][A.cols], f.inv(rows[i][c]))
    return x


def column_space_basis(A):
    """Basis of the column space, as coordinate vectors (deterministic)."""
    f = A.field
    rows = _int_rows_from_field(f, A.transpose().entries)
    pivots = int_echelon(rows, A.rows, f.characteristic)
    out = []
    for i in range(len(pivots)):
        if f.characteristic == 0:
            piv = rows[i][pivots[i]]
            out.append([Fraction(a, piv) for a in rows[i]])
        else:
            out.append([a % f.characteristic for a in rows[i]])
    return out
