"""Exact dense linear algebra over Q(zeta_n) plus integer lattice tools.

Two layers live here:

  * ``Matrix``: immutable dense matrices with CycNum entries, supporting
    exact elimination (rref, det, inverse, kernel, solve, eigenspace).
    Row-vector convention: subspace bases are rows.
  * integer matrices as plain nested lists, with Hermite/Smith normal forms,
    saturation and integer kernels built on the kernel backend.

Entry-wise exactness is the point; nothing here touches floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import kernels
from .cyclofield import CycNum, _CyclotomicField
from .errors import FieldMismatchError, SingularMatrixError

__all__ = [
    "Matrix",
    "SolveResult",
    "eigenspace",
    "int_identity",
    "int_transpose",
    "int_matmul",
    "int_det",
    "hnf",
    "hnf_with_transform",
    "int_kernel",
    "saturation",
    "snf",
]


class Matrix:
    """Immutable rows x cols matrix over one cyclotomic field."""

    __slots__ = ("field", "rows", "cols", "entries")

    def __init__(self, field: _CyclotomicField, entries):
        object.__setattr__(self, "field", field)
        ent = tuple(tuple(self._coerce_entry(field, e) for e in row) for row in entries)
        object.__setattr__(self, "entries", ent)
        object.__setattr__(self, "rows", len(ent))
        object.__setattr__(self, "cols", len(ent[0]) if ent else 0)
        if any(len(row) != self.cols for row in ent):
            raise ValueError("ragged rows")

    def __setattr__(self, *a):
        raise AttributeError("Matrix is immutable")

    @staticmethod
    def _coerce_entry(field, e):
        if isinstance(e, CycNum):
            if e.field is not field:
                raise FieldMismatchError(
                    f"entry conductor {e.field.n} vs matrix conductor {field.n}"
                )
            return e
        return field.from_rational(e)

    @classmethod
    def identity(cls, field, n: int) -> "Matrix":
        one, zero = field.one, field.zero
        return cls(field, [[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, field, r: int, c: int) -> "Matrix":
        zero = field.zero
        return cls(field, [[zero] * c for _ in range(r)])

    @classmethod
    def from_int_matrix(cls, field, M) -> "Matrix":
        return cls(field, [[field.from_rational(v) for v in row] for row in M])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def row(self, i):
        return self.entries[i]

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.field is other.field and self.entries == other.entries

    def __hash__(self):
        return hash((self.field.n, self.entries))

    def __add__(self, other):
        self._check_same_shape(other)
        return Matrix(
            self.field,
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.entries, other.entries)
            ],
        )

    def __sub__(self, other):
        self._check_same_shape(other)
        return Matrix(
            self.field,
            [
                [a - b for a, b in zip(ra, rb)]
                for ra, rb in zip(self.entries, other.entries)
            ],
        )

    def __neg__(self):
        return Matrix(self.field, [[-a for a in row] for row in self.entries])

    def _check_same_shape(self, other):
        if self.field is not other.field:
            raise FieldMismatchError("mixed fields")
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, CycNum)):
            return Matrix(self.field, [[a * other for a in row] for row in self.entries])
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.field is not other.field:
            raise FieldMismatchError("mixed fields")
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        bt = [tuple(other.entries[t][j] for t in range(other.rows)) for j in range(other.cols)]
        zero = self.field.zero
        out = []
        for i in range(self.rows):
            ri = self.entries[i]
            row = []
            for j in range(other.cols):
                cj = bt[j]
                s = zero
                for t in range(self.cols):
                    a = ri[t]
                    if a:
                        s = s + a * cj[t]
                row.append(s)
            out.append(row)
        return Matrix(self.field, out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, CycNum)):
            return self * other
        return NotImplemented

    def transpose(self) -> "Matrix":
        return Matrix(
            self.field,
            [[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)],
        )

    def conj(self) -> "Matrix":
        return Matrix(self.field, [[a.conj() for a in row] for row in self.entries])

    def is_symmetric(self) -> bool:
        if self.rows != self.cols:
            return False
        return all(
            self.entries[i][j] == self.entries[j][i]
            for i in range(self.rows)
            for j in range(i)
        )

    def hstack(self, other: "Matrix") -> "Matrix":
        if self.rows != other.rows:
            raise ValueError("row mismatch")
        return Matrix(
            self.field,
            [list(a) + list(b) for a, b in zip(self.entries, other.entries)],
        )

    def vstack(self, other: "Matrix") -> "Matrix":
        if self.cols != other.cols:
            raise ValueError("column mismatch")
        return Matrix(self.field, list(self.entries) + list(other.entries))

    def submatrix(self, row_idx, col_idx) -> "Matrix":
        return Matrix(
            self.field,
            [[self.entries[i][j] for j in col_idx] for i in row_idx],
        )

    def rref(self):
        """Reduced row echelon form; returns (R, pivot column tuple)."""
        M = [list(row) for row in self.entries]
        n, m = self.rows, self.cols
        pivots = []
        r = 0
        for col in range(m):
            if r == n:
                break
            piv = next((i for i in range(r, n) if M[i][col]), None)
            if piv is None:
                continue
            if piv != r:
                M[r], M[piv] = M[piv], M[r]
            pinv = M[r][col].inv()
            M[r] = [pinv * x for x in M[r]]
            for i in range(n):
                if i != r and M[i][col]:
                    f = M[i][col]
                    M[i] = [x - f * y for x, y in zip(M[i], M[r])]
            pivots.append(col)
            r += 1
        return Matrix(self.field, M), tuple(pivots)

    def rank(self) -> int:
        return len(self.rref()[1])

    def det(self) -> CycNum:
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        M = [list(row) for row in self.entries]
        n = self.rows
        sign = 1
        acc = self.field.one
        for col in range(n):
            piv = next((i for i in range(col, n) if M[i][col]), None)
            if piv is None:
                return self.field.zero
            if piv != col:
                M[col], M[piv] = M[piv], M[col]
                sign = -sign
            p = M[col][col]
            acc = acc * p
            pinv = p.inv()
            for i in range(col + 1, n):
                if M[i][col]:
                    f = M[i][col] * pinv
                    M[i] = [x - f * y for x, y in zip(M[i], M[col])]
        return acc if sign == 1 else -acc

    def inverse(self) -> "Matrix":
        if self.rows != self.cols:
            raise ValueError("inverse of a non-square matrix")
        n = self.rows
        aug = self.hstack(Matrix.identity(self.field, n))
        R, pivots = aug.rref()
        if pivots != tuple(range(n)):
            raise SingularMatrixError("matrix is singular")
        return R.submatrix(range(n), range(n, 2 * n))

    def kernel(self) -> "Matrix":
        """Basis rows of the right null space {v : A v^t = 0};
        rank + returned rows = cols."""
        R, pivots = self.rref()
        m = self.cols
        free = [j for j in range(m) if j not in pivots]
        zero, one = self.field.zero, self.field.one
        basis = []
        for f in free:
            v = [zero] * m
            v[f] = one
            for r_i, p in enumerate(pivots):
                v[p] = -R.entries[r_i][f]
            basis.append(v)
        return Matrix(self.field, basis) if basis else Matrix(self.field, [[]] * 0)

    def solve(self, b) -> "SolveResult":
        """Solve A x = b for the column vector x; b is a length-rows vector."""
        b = [Matrix._coerce_entry(self.field, e) for e in b]
        if len(b) != self.rows:
            raise ValueError("right-hand side length mismatch")
        aug = self.hstack(Matrix(self.field, [[e] for e in b]))
        R, pivots = aug.rref()
        if self.cols in pivots:
            return SolveResult("inconsistent", None, self.kernel())
        zero = self.field.zero
        x = [zero] * self.cols
        for r_i, p in enumerate(pivots):
            x[p] = R.entries[r_i][self.cols]
        ker = self.kernel()
        status = "unique" if ker.rows == 0 else "family"
        return SolveResult(status, tuple(x), ker)

    def map(self, fn) -> "Matrix":
        return Matrix(self.field, [[fn(a) for a in row] for row in self.entries])

    def embed(self, precision_bits: int = 128, k: int = 1):
        return [
            [a.embed(precision_bits, k) for a in row] for row in self.entries
        ]

    def to_int_matrix(self):
        out = []
        for row in self.entries:
            r = []
            for a in row:
                q = a.rational_value()
                if q.denominator != 1:
                    raise ValueError(f"entry {a} is not an integer")
                r.append(q.numerator)
            out.append(r)
        return out

    def __repr__(self):
        return f"Matrix({self.rows}x{self.cols} over Q(zeta_{self.field.n}))"


@dataclass(frozen=True)
class SolveResult:
    """Outcome of Matrix.solve: status is 'unique', 'family' or
    'inconsistent'; particular is None when inconsistent; kernel rows span
    the homogeneous solutions."""

    status: str
    particular: tuple | None
    kernel: Matrix


def eigenspace(A: Matrix, lam: CycNum) -> Matrix:
    """Basis rows v with v (A - lam I) = 0 (left eigenvectors, row
    convention).  Empty matrix when lam is not an eigenvalue."""
    if A.rows != A.cols:
        raise ValueError("eigenspace of a non-square matrix")
    shifted = A - Matrix.identity(A.field, A.rows) * lam
    return shifted.transpose().kernel()


# ---------------------------------------------------------------------------
# Integer matrices: lists of lists of ints.

def int_identity(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def int_transpose(M):
    return [list(col) for col in zip(*M)] if M else []


int_matmul = kernels.int_matmul


def int_det(M):
    """Bareiss fraction-free determinant."""
    n = len(M)
    if any(len(row) != n for row in M):
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return 1
    A = [list(row) for row in M]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            piv = next((i for i in range(k + 1, n) if A[i][k]), None)
            if piv is None:
                return 0
            A[k], A[piv] = A[piv], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
            A[i][k] = 0
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def hnf(M):
    """Row-style Hermite normal form, canonical: positive pivots, entries
    above a pivot reduced into [0, pivot), zero rows at the bottom."""
    H, _, _ = kernels.hnf_transform([list(r) for r in M])
    return H


def hnf_with_transform(M):
    return kernels.hnf_transform([list(r) for r in M])


def int_kernel(M):
    """Basis rows of {x integral : M x^t = 0}; the lattice is saturated."""
    if not M:
        return []
    Mt = int_transpose(M)
    H, U, _ = kernels.hnf_transform(Mt)
    return [U[i] for i in range(len(Mt)) if not any(H[i])]


def saturation(M):
    """HNF basis of (Q-row-space of M) intersected with the integer lattice.

    Computed as the integer kernel of the integer kernel: x lies in the
    Q-row-space iff it is orthogonal to every integral vector annihilating
    the rows of M.
    """
    M = [list(r) for r in M]
    if not M:
        return []
    cols = len(M[0])
    K = int_kernel(M)
    if not K:
        return int_identity(cols)
    sat = int_kernel(K)
    H, _, rank = kernels.hnf_transform(sat)
    return H[:rank]


def snf(M):
    """Smith normal form with transforms: (D, U, V) with U M V = D,
    nonnegative diagonal, divisor chain d1 | d2 | ..."""
    return kernels.snf_transform([list(r) for r in M])
