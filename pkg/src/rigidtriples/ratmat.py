"""Exact rational matrices and the elimination kernel used everywhere else.

Scalars are :class:`fractions.Fraction`, which is always stored in lowest
terms with a positive denominator.  Elimination is done on integer rows
(each row cleared of denominators and divided by its content), which keeps
intermediate numbers small without any fraction arithmetic in the inner loop.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

from .errors import DimensionMismatch, Inconsistent, Singular

Rat = Fraction


def rat(x) -> Fraction:
    """Coerce an int, Fraction or "num/den" string to a Fraction.

    Floats are refused: nothing in this package is allowed to round.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a rational")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    if hasattr(x, "numerator") and hasattr(x, "denominator") and not isinstance(x, float):
        return Fraction(int(x.numerator), int(x.denominator))
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


def fmt_rat(q) -> str:
    return str(rat(q))


class RatMatrix:
    """Immutable dense matrix of Fractions, indexed from 0 internally."""

    __slots__ = ("_rows", "nrows", "ncols")

    def __init__(self, rows, ncols: int | None = None):
        data = tuple(tuple(rat(x) for x in r) for r in rows)
        if ncols is None:
            ncols = len(data[0]) if data else 0
        for r in data:
            if len(r) != ncols:
                raise DimensionMismatch("ragged rows")
        self._rows = data
        self.nrows = len(data)
        self.ncols = ncols

    @classmethod
    def _raw(cls, rows, ncols):
        m = object.__new__(cls)
        m._rows = rows
        m.nrows = len(rows)
        m.ncols = ncols
        return m

    @classmethod
    def zeros(cls, n: int, m: int | None = None) -> RatMatrix:
        m = n if m is None else m
        z = Fraction(0)
        return cls._raw(tuple((z,) * m for _ in range(n)), m)

    @classmethod
    def identity(cls, n: int) -> RatMatrix:
        return cls.diag([1] * n)

    @classmethod
    def diag(cls, values) -> RatMatrix:
        vals = [rat(v) for v in values]
        n = len(vals)
        return cls([[vals[i] if i == j else 0 for j in range(n)] for i in range(n)], n)

    @classmethod
    def from_columns(cls, cols) -> RatMatrix:
        cols = [tuple(rat(x) for x in c) for c in cols]
        if not cols:
            return cls([], 0)
        return cls(list(zip(*cols)), len(cols))

    @classmethod
    def block_diag(cls, *blocks: RatMatrix) -> RatMatrix:
        n = sum(b.nrows for b in blocks)
        out = [[Fraction(0)] * n for _ in range(n)]
        off = 0
        for b in blocks:
            for i in range(b.nrows):
                for j in range(b.ncols):
                    out[off + i][off + j] = b[i, j]
            off += b.nrows
        return cls(out, n)

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    @property
    def is_square(self):
        return self.nrows == self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self._rows[i][j]

    def row(self, i):
        return self._rows[i]

    def col(self, j):
        return tuple(r[j] for r in self._rows)

    def rows(self):
        return self._rows

    def columns(self):
        return [self.col(j) for j in range(self.ncols)]

    @property
    def T(self) -> RatMatrix:
        return RatMatrix._raw(tuple(zip(*self._rows)) if self._rows else (), self.nrows)

    def __eq__(self, other):
        if not isinstance(other, RatMatrix):
            return NotImplemented
        return self.shape == other.shape and self._rows == other._rows

    def __hash__(self):
        return hash(self._rows)

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in r) for r in self._rows)
        return f"RatMatrix([{body}])"

    def _check_same(self, other):
        if self.shape != other.shape:
            raise DimensionMismatch(f"{self.shape} vs {other.shape}")

    def __add__(self, other: RatMatrix) -> RatMatrix:
        self._check_same(other)
        return RatMatrix._raw(
            tuple(tuple(x + y for x, y in zip(r, s)) for r, s in zip(self._rows, other._rows)),
            self.ncols)

    def __sub__(self, other: RatMatrix) -> RatMatrix:
        self._check_same(other)
        return RatMatrix._raw(
            tuple(tuple(x - y for x, y in zip(r, s)) for r, s in zip(self._rows, other._rows)),
            self.ncols)

    def __neg__(self) -> RatMatrix:
        return RatMatrix._raw(tuple(tuple(-x for x in r) for r in self._rows), self.ncols)

    def scale(self, k) -> RatMatrix:
        k = rat(k)
        return RatMatrix._raw(tuple(tuple(k * x for x in r) for r in self._rows), self.ncols)

    def __mul__(self, k):
        if isinstance(k, RatMatrix):
            return mat_mul(self, k)
        return self.scale(k)

    __rmul__ = scale

    def __matmul__(self, other):
        if isinstance(other, RatMatrix):
            return mat_mul(self, other)
        return mat_vec(self, other)

    def shift(self, lam) -> RatMatrix:
        """self + lam * Id."""
        lam = rat(lam)
        return RatMatrix._raw(
            tuple(tuple(x + lam if i == j else x for j, x in enumerate(r))
                  for i, r in enumerate(self._rows)), self.ncols)

    def trace(self):
        return sum((self._rows[i][i] for i in range(min(self.shape))), Fraction(0))

    def is_zero(self):
        return all(x == 0 for r in self._rows for x in r)

    def is_symmetric(self):
        return self == self.T

    def submatrix(self, rows, cols) -> RatMatrix:
        return RatMatrix._raw(tuple(tuple(self._rows[i][j] for j in cols) for i in rows), len(cols))

    def delete(self, idx) -> RatMatrix:
        """Drop the given rows and the same columns (0-based)."""
        keep = [i for i in range(self.nrows) if i not in set(idx)]
        return self.submatrix(keep, keep)

    def to_json(self):
        return [[str(x) for x in r] for r in self._rows]

    @classmethod
    def from_json(cls, data) -> RatMatrix:
        return cls(data)


def mat_mul(A: RatMatrix, B: RatMatrix) -> RatMatrix:
    if A.ncols != B.nrows:
        raise DimensionMismatch(f"cannot multiply {A.shape} by {B.shape}")
    cols = B.columns()
    zero = Fraction(0)
    out = tuple(tuple(sum((a * b for a, b in zip(r, c) if a and b), zero) for c in cols)
                for r in A.rows())
    return RatMatrix._raw(out, B.ncols)


def mat_vec(A: RatMatrix, v) -> tuple:
    v = tuple(rat(x) for x in v)
    if A.ncols != len(v):
        raise DimensionMismatch(f"{A.shape} times vector of length {len(v)}")
    zero = Fraction(0)
    return tuple(sum((a * b for a, b in zip(r, v) if a and b), zero) for r in A.rows())


def mat_pow(A: RatMatrix, k: int) -> RatMatrix:
    out = RatMatrix.identity(A.nrows)
    for _ in range(k):
        out = mat_mul(out, A)
    return out


def char_poly(M: RatMatrix) -> list:
    """Monic characteristic polynomial det(x Id - M), lowest degree first.

    Faddeev-LeVerrier recursion.
    """
    if not M.is_square:
        raise DimensionMismatch("char_poly needs a square matrix")
    n = M.nrows
    coeffs = [Fraction(0)] * (n + 1)
    coeffs[n] = Fraction(1)
    N = RatMatrix.zeros(n)
    for k in range(1, n + 1):
        N = mat_mul(M, N.shift(coeffs[n - k + 1]))
        coeffs[n - k] = -N.trace() / k
    return coeffs


def poly_from_roots(roots) -> list:
    """Expand prod (x - r) over the given roots, lowest degree first."""
    p = [Fraction(1)]
    for r in roots:
        r = rat(r)
        q = [Fraction(0)] * (len(p) + 1)
        for i, c in enumerate(p):
            q[i + 1] += c
            q[i] -= r * c
        p = q
    return p


def poly_eval_matrix(coeffs, M: RatMatrix) -> RatMatrix:
    """Horner evaluation of a polynomial at a square matrix."""
    out = RatMatrix.zeros(M.nrows)
    for c in reversed(coeffs):
        out = mat_mul(out, M).shift(c)
    return out


# elimination

def _int_row(row):
    den = 1
    for x in row:
        den = lcm(den, x.denominator)
    out = [x.numerator * (den // x.denominator) for x in row]
    return _primitive(out)


def _primitive(row):
    g = 0
    for x in row:
        if x:
            g = gcd(g, x)
            if g == 1:
                return row
    if g > 1:
        return [x // g for x in row]
    return row


def echelon(rows, ncols: int, stop_col: int | None = None):
    """Fraction-free Gauss-Jordan elimination on rational rows.

    Returns (pivot_columns, reduced_integer_rows).  Each reduced row has a
    nonzero entry at its pivot and zeros at every other pivot column.  When
    ``stop_col`` is given, pivots are only searched in columns < stop_col.
    """
    work = [_int_row(r) for r in rows]
    work = [r for r in work if any(r)]
    limit = ncols if stop_col is None else stop_col
    pivots = []
    done = []
    for col in range(limit):
        if not work:
            break
        best = None
        for idx, r in enumerate(work):
            if r[col]:
                # prefer short pivots to keep entries small
                if best is None or abs(r[col]) < abs(work[best][col]):
                    best = idx
        if best is None:
            continue
        p = work.pop(best)
        a = p[col]
        nxt = []
        for r in work:
            b = r[col]
            if b:
                g = gcd(a, b)
                ka, kb = a // g, b // g
                r = _primitive([ka * x - kb * y for x, y in zip(r, p)])
                if not any(r):
                    continue
            nxt.append(r)
        work = nxt
        for k, r in enumerate(done):
            b = r[col]
            if b:
                g = gcd(a, b)
                ka, kb = a // g, b // g
                done[k] = _primitive([ka * x - kb * y for x, y in zip(r, p)])
        pivots.append(col)
        done.append(p)
    leftover = work
    return pivots, done, leftover


def rank(M: RatMatrix) -> int:
    pivots, _, _ = echelon(M.rows(), M.ncols)
    return len(pivots)


def kernel(M: RatMatrix) -> list:
    """Basis of the right null space as tuples of Fractions.

    Each basis vector has a 1 in one free column and 0 in the others.
    """
    n = M.ncols
    pivots, rows, _ = echelon(M.rows(), n)
    pivset = set(pivots)
    basis = []
    for f in range(n):
        if f in pivset:
            continue
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for col, r in zip(pivots, rows):
            if r[f]:
                v[col] = Fraction(-r[f], r[col])
        basis.append(tuple(v))
    return basis


class SolutionSet:
    """Affine solution set particular + span(basis)."""

    def __init__(self, particular, basis):
        self.particular = particular
        self.basis = basis

    @property
    def dimension(self):
        return len(self.basis)

    @property
    def unique(self):
        return not self.basis

    def __repr__(self):
        return f"SolutionSet(particular={self.particular}, dim={self.dimension})"


def solve_linear(A: RatMatrix, b) -> SolutionSet:
    """All solutions of A x = b; raises Inconsistent when there are none."""
    b = tuple(rat(x) for x in b)
    if len(b) != A.nrows:
        raise DimensionMismatch("right-hand side length differs from row count")
    n = A.ncols
    aug = [tuple(r) + (bi,) for r, bi in zip(A.rows(), b)]
    pivots, rows, leftover = echelon(aug, n + 1, stop_col=n)
    # unpivoted rows have a vanishing coefficient part after elimination
    if any(r[n] for r in leftover):
        raise Inconsistent("linear system has no solution")
    x = [Fraction(0)] * n
    for col, r in zip(pivots, rows):
        x[col] = Fraction(r[n], r[col])
    return SolutionSet(tuple(x), kernel(A))


def det(M: RatMatrix):
    """Determinant by Bareiss elimination over a common denominator."""
    if not M.is_square:
        raise DimensionMismatch("det needs a square matrix")
    n = M.nrows
    if n == 0:
        return Fraction(1)
    den = 1
    for r in M.rows():
        for x in r:
            den = lcm(den, x.denominator)
    a = [[x.numerator * (den // x.denominator) for x in r] for r in M.rows()]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return Fraction(sign * a[n - 1][n - 1], den ** n)


def inverse(M: RatMatrix) -> RatMatrix:
    if not M.is_square:
        raise DimensionMismatch("inverse needs a square matrix")
    n = M.nrows
    aug = [tuple(r) + tuple(Fraction(int(i == j)) for j in range(n)) for i, r in enumerate(M.rows())]
    pivots, rows, _ = echelon(aug, 2 * n, stop_col=n)
    if pivots != list(range(n)):
        raise Singular("matrix is not invertible")
    out = [None] * n
    for col, r in zip(pivots, rows):
        out[col] = [Fraction(x, r[col]) for x in r[n:]]
    return RatMatrix(out, n)


def is_zero_vector(v) -> bool:
    return all(x == 0 for x in v)
