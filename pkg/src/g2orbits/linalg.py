"""Exact linear algebra over the rationals and Gaussian rationals.

Everything here is pure, exact and deterministic: no floating point, no
pivot heuristics.  Elimination always picks the first row (top-down) with a
nonzero entry in the current column, sweeping columns left to right, so
equal inputs produce bit-for-bit equal outputs.  Kernel bases are returned
in a canonical form (the unique reduced echelon basis of the null space,
leading entry of every vector equal to 1).
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Optional, Sequence, Tuple, Union

Rational = Fraction


class GaussianRational:
    """A complex number re + im*i with exact rational components."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = re if isinstance(re, Fraction) else Fraction(re)
        self.im = im if isinstance(im, Fraction) else Fraction(im)

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm(self) -> Fraction:
        """Squared modulus re^2 + im^2."""
        return self.re * self.re + self.im * self.im

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __eq__(self, other) -> bool:
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        # match hash(Fraction) when the value is real so mixed containers work
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.re, -self.im)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            return GaussianRational(self.re + other, self.im)
        if isinstance(other, GaussianRational):
            return GaussianRational(self.re + other.re, self.im + other.im)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            return GaussianRational(self.re - other, self.im)
        if isinstance(other, GaussianRational):
            return GaussianRational(self.re - other.re, self.im - other.im)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return GaussianRational(self.re * other, self.im * other)
        if isinstance(other, GaussianRational):
            return GaussianRational(
                self.re * other.re - self.im * other.im,
                self.re * other.im + self.im * other.re,
            )
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return GaussianRational(self.re / other, self.im / other)
        if isinstance(other, GaussianRational):
            n = other.norm()
            if not n:
                raise ZeroDivisionError("division by zero Gaussian rational")
            return self * other.conjugate() / n
        return NotImplemented

    def __rtruediv__(self, other):
        n = self.norm()
        if not n:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return self.conjugate() * other / n

    def __repr__(self) -> str:
        return f"GaussianRational({self.re}, {self.im})"

    def __str__(self) -> str:
        if not self.im:
            return str(self.re)
        if not self.re:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"


Scalar = Union[int, Fraction, GaussianRational]


class Matrix:
    """Immutable dense matrix with exact scalar entries, stored row-major.

    One scalar kind per matrix: either rationals (Fraction/int) or
    GaussianRational.
    """

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Sequence[Scalar]):
        entries = tuple(entries)
        if len(entries) != rows * cols:
            raise ValueError(f"need {rows * cols} entries, got {len(entries)}")
        self.rows = rows
        self.cols = cols
        self.entries = entries

    @classmethod
    def from_rows(cls, rows_seq: Sequence[Sequence[Scalar]]) -> "Matrix":
        rows_seq = [tuple(r) for r in rows_seq]
        m = len(rows_seq)
        n = len(rows_seq[0]) if m else 0
        flat = []
        for r in rows_seq:
            if len(r) != n:
                raise ValueError("ragged rows")
            flat.extend(r)
        return cls(m, n, flat)

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        one, zero = Fraction(1), Fraction(0)
        return cls(n, n, [one if i == j else zero for i in range(n) for j in range(n)])

    def entry(self, i: int, j: int) -> Scalar:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> Tuple[Scalar, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def row_lists(self):
        return [list(self.row(i)) for i in range(self.rows)]

    def transpose(self) -> "Matrix":
        return Matrix(
            self.cols,
            self.rows,
            [self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)],
        )

    def apply(self, vec: Sequence[Scalar]) -> tuple:
        """Matrix-vector product M @ v."""
        if len(vec) != self.cols:
            raise ValueError("vector length mismatch")
        out = []
        e = self.entries
        n = self.cols
        for i in range(self.rows):
            base = i * n
            acc = None
            for j in range(n):
                m = e[base + j]
                if m:
                    term = m * vec[j]
                    acc = term if acc is None else acc + term
            out.append(acc if acc is not None else self._scalar_zero())
        return tuple(out)

    def __mul__(self, other):
        if isinstance(other, Matrix):
            if self.cols != other.rows:
                raise ValueError("inner dimension mismatch")
            n, p = self.cols, other.cols
            a, b = self.entries, other.entries
            out = [self._scalar_zero()] * (self.rows * p)
            for i in range(self.rows):
                abase = i * n
                obase = i * p
                for k in range(n):
                    aik = a[abase + k]
                    if aik:
                        bbase = k * p
                        for j in range(p):
                            bkj = b[bbase + j]
                            if bkj:
                                out[obase + j] = out[obase + j] + aik * bkj
            return Matrix(self.rows, p, out)
        if isinstance(other, (int, Fraction, GaussianRational)):
            return Matrix(self.rows, self.cols, [e * other for e in self.entries])
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            return Matrix(self.rows, self.cols, [other * e for e in self.entries])
        return NotImplemented

    def __add__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return Matrix(self.rows, self.cols, [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return Matrix(self.rows, self.cols, [a - b for a, b in zip(self.entries, other.entries)])

    def __neg__(self):
        return Matrix(self.rows, self.cols, [-e for e in self.entries])

    def is_zero(self) -> bool:
        return not any(self.entries)

    def trace(self) -> Scalar:
        if self.rows != self.cols:
            raise ValueError("trace of non-square matrix")
        t = self._scalar_zero()
        for i in range(self.rows):
            t = t + self.entries[i * self.cols + i]
        return t

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self) -> str:
        return f"Matrix({self.rows}x{self.cols})"

    def _scalar_zero(self) -> Scalar:
        if self.entries and isinstance(self.entries[0], GaussianRational):
            return GaussianRational(0)
        return Fraction(0)

    def _scalar_one(self) -> Scalar:
        if self.entries and isinstance(self.entries[0], GaussianRational):
            return GaussianRational(1)
        return Fraction(1)


# ---------------------------------------------------------------------------
# elimination cores
# ---------------------------------------------------------------------------

def _rref_generic(rows) -> Tuple[int, ...]:
    """In-place reduced row echelon form over any exact field.

    Returns the pivot columns.  Pivot rule: first row at or below the
    current one with a nonzero entry, columns left to right.
    """
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        hit = -1
        for i in range(r, nrows):
            if rows[i][c]:
                hit = i
                break
        if hit < 0:
            continue
        if hit != r:
            rows[r], rows[hit] = rows[hit], rows[r]
        prow = rows[r]
        pv = prow[c]
        if pv != 1:
            for j in range(c, ncols):
                if prow[j]:
                    prow[j] = prow[j] / pv
        for i in range(nrows):
            if i == r:
                continue
            f = rows[i][c]
            if f:
                row = rows[i]
                for j in range(c, ncols):
                    pj = prow[j]
                    if pj:
                        row[j] = row[j] - f * pj
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return tuple(pivots)


def _normalize_int_row(row) -> None:
    """Divide an integer row by the gcd of its entries, leading entry > 0."""
    g = 0
    lead = 0
    for v in row:
        if v:
            if lead == 0:
                lead = v
            g = gcd(g, v if v > 0 else -v)
            if g == 1:
                break
    if g == 0:
        return
    if lead < 0:
        g = -g
    if g != 1:
        for j, v in enumerate(row):
            if v:
                row[j] = v // g


def _rref_int(rows) -> Tuple[int, ...]:
    """Fraction-free elimination for all-integer rows (same pivot rule).

    Row updates are row*pivot - pivot_row*factor followed by a gcd
    reduction, so all intermediate values stay integers.  The caller turns
    the result into the rational RREF by dividing each row by its pivot.
    """
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        hit = -1
        for i in range(r, nrows):
            if rows[i][c]:
                hit = i
                break
        if hit < 0:
            continue
        if hit != r:
            rows[r], rows[hit] = rows[hit], rows[r]
        prow = rows[r]
        _normalize_int_row(prow)
        pv = prow[c]
        for i in range(nrows):
            if i == r:
                continue
            f = rows[i][c]
            if f:
                row = rows[i]
                # the whole row is rescaled by pv, including entries left
                # of c (rows above the pivot can be nonzero there)
                for j in range(c):
                    if row[j]:
                        row[j] = row[j] * pv
                for j in range(c, ncols):
                    row[j] = row[j] * pv - prow[j] * f
                _normalize_int_row(row)
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return tuple(pivots)


def _as_int_rows(rows) -> Optional[list]:
    out = []
    for row in rows:
        irow = []
        for e in row:
            if isinstance(e, int):
                irow.append(e)
            elif isinstance(e, Fraction):
                if e.denominator != 1:
                    return None
                irow.append(e.numerator)
            else:
                return None
        out.append(irow)
    return out


def _rref_rows(rows) -> Tuple[list, Tuple[int, ...]]:
    """RREF of a list of rows, returned as Fraction (or Gaussian) rows."""
    irows = _as_int_rows(rows)
    if irows is not None:
        pivots = _rref_int(irows)
        ncols = len(irows[0]) if irows else 0
        zero_row = [Fraction(0)] * ncols
        out = []
        for ridx, c in enumerate(pivots):
            pv = irows[ridx][c]
            out.append([Fraction(v, pv) for v in irows[ridx]])
        for _ in range(len(irows) - len(pivots)):
            out.append(list(zero_row))
        return out, pivots
    pivots = _rref_generic(rows)
    return rows, pivots


# ---------------------------------------------------------------------------
# public operations
# ---------------------------------------------------------------------------

def rref(m: Matrix) -> Tuple[Matrix, Tuple[int, ...]]:
    """Reduced row echelon form and pivot columns."""
    rows, pivots = _rref_rows(m.row_lists())
    flat = []
    for r in rows:
        flat.extend(r)
    return Matrix(m.rows, m.cols, flat), pivots


def rank(m: Matrix) -> int:
    """Exact rank over the matrix's scalar field."""
    _, pivots = _rref_rows(m.row_lists())
    return len(pivots)


def kernel_basis(m: Matrix) -> Tuple[tuple, ...]:
    """Canonical basis of the right null space.

    The returned vectors are the reduced echelon basis of the null space;
    the leading entry of every vector is 1, and repeated calls on equal
    inputs return identical output.
    """
    red, pivots = _rref_rows(m.row_lists())
    n = m.cols
    pivset = set(pivots)
    free = [c for c in range(n) if c not in pivset]
    if not free:
        return ()
    zero = m._scalar_zero()
    one = m._scalar_one()
    vecs = []
    for f in free:
        v = [zero] * n
        v[f] = one
        for ridx, c in enumerate(pivots):
            e = red[ridx][f]
            if e:
                v[c] = -e
        vecs.append(v)
    # canonicalize: reduced echelon basis of the spanned subspace
    piv2 = _rref_generic(vecs)
    if len(piv2) != len(vecs):
        raise AssertionError("kernel vectors must be independent")
    return tuple(tuple(v) for v in vecs)


def solve(m: Matrix, b: Sequence[Scalar]) -> Optional[tuple]:
    """One exact solution of M x = b, or None if the system is inconsistent.

    The particular solution sets all free variables to zero.
    """
    if len(b) != m.rows:
        raise ValueError("right-hand side length mismatch")
    rows = m.row_lists()
    for row, rhs in zip(rows, b):
        row.append(rhs)
    red, pivots = _rref_rows(rows)
    n = m.cols
    if n in pivots:
        return None
    x = [m._scalar_zero()] * n
    for ridx, c in enumerate(pivots):
        x[c] = red[ridx][n]
    return tuple(x)


def det(m: Matrix) -> Scalar:
    """Exact determinant (forward elimination, product of pivots)."""
    if m.rows != m.cols:
        raise ValueError("determinant of non-square matrix")
    rows = m.row_lists()
    n = m.rows
    sign = 1
    result = m._scalar_one()
    for c in range(n):
        hit = -1
        for i in range(c, n):
            if rows[i][c]:
                hit = i
                break
        if hit < 0:
            return m._scalar_zero()
        if hit != c:
            rows[c], rows[hit] = rows[hit], rows[c]
            sign = -sign
        pv = rows[c][c]
        result = result * pv
        for i in range(c + 1, n):
            f = rows[i][c]
            if f:
                fi = f / pv
                row = rows[i]
                prow = rows[c]
                for j in range(c, n):
                    if prow[j]:
                        row[j] = row[j] - fi * prow[j]
    return result if sign > 0 else -result
