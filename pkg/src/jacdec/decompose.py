"""Averaging idempotents of subgroup actions, their image sublattices,
induced polarizations with elementary-divisor types, sub-period matrices of
the corresponding abelian subvarieties, and the sum-map certificate.

Lattices are rows of integer matrices in the ambient symplectic basis; the
induced alternating form of a basis B is E = B J B^t.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import NotAGroupError
from .exactlinalg import (
    Matrix,
    int_det,
    int_identity,
    int_matmul,
    int_transpose,
    saturation,
    snf,
)
from .symplectic import J_matrix, _coprime_embeddings, is_riemann_matrix

__all__ = [
    "Idempotent",
    "Sublattice",
    "SubvarietyData",
    "SumCertificate",
    "make_idempotent",
    "idempotent_image",
    "lattice_from_basis",
    "polarization_type",
    "frobenius_transform",
    "sub_period_matrix",
    "sum_map_certificate",
]


@dataclass(frozen=True)
class Idempotent:
    """Averaging element (1/|H|) sum of the matrices of a subgroup."""

    subgroup: tuple
    rho: tuple  # nested tuple of Fractions, rho*rho == rho


@dataclass(frozen=True)
class Sublattice:
    B: tuple       # k x 2g integer basis rows (saturated, HNF)
    E: tuple       # induced alternating form B J B^t
    type: tuple    # elementary divisor pairs (d1 | d2 | ...)
    d: int         # content of E

    @property
    def rank(self) -> int:
        return len(self.B)


@dataclass(frozen=True)
class SubvarietyData:
    lattice: Sublattice
    Z_sub: Matrix
    divisor: int
    embedding_k: int


@dataclass(frozen=True)
class SumCertificate:
    det: int
    kernel_order: int | None
    verdict: str  # "isomorphism" | "isogeny" | "rank failure"


def _freeze_int(M):
    return tuple(tuple(int(v) for v in row) for row in M)


def make_idempotent(H) -> Idempotent:
    """Build and validate the averaging idempotent of a subgroup's matrices."""
    H = [_freeze_int(M) for M in H]
    if not H:
        raise ValueError("subgroup must be nonempty")
    n = len(H[0])
    if any(len(M) != n or any(len(r) != n for r in M) for M in H):
        raise ValueError("subgroup elements must be square matrices of equal size")
    order = len(H)
    S = [[sum(M[i][j] for M in H) for j in range(n)] for i in range(n)]
    SS = int_matmul(S, S)
    if any(SS[i][j] != order * S[i][j] for i in range(n) for j in range(n)):
        raise NotAGroupError("averaging element is not idempotent: "
                             "the given elements are not a subgroup")
    rho = tuple(tuple(Fraction(v, order) for v in row) for row in S)
    return Idempotent(tuple(H), rho)


def idempotent_image(H) -> Sublattice:
    """Saturated image lattice of the averaging idempotent, with its induced
    form and polarization type.

    The idempotent maps lattice coordinate columns, so the image lattice is
    the saturation of the column space of sum(H) (rows of its transpose).
    """
    idem = make_idempotent(H)
    n = len(idem.subgroup[0])
    order = len(idem.subgroup)
    S = [[int(idem.rho[i][j] * order) for j in range(n)] for i in range(n)]
    B = saturation(int_transpose(S))
    trace = sum(S[i][i] for i in range(n))
    if trace != order * len(B):
        raise ArithmeticError("idempotent trace does not match image rank")
    if not B:
        return Sublattice((), (), (), 0)
    typ, d = polarization_type(B)
    E = _induced_form(B)
    return Sublattice(_freeze_int(B), _freeze_int(E), typ, d)


def lattice_from_basis(B) -> Sublattice:
    """Sublattice record for explicitly given basis rows (kept as given,
    not HNF-reduced)."""
    B = _freeze_int(B)
    if not B:
        return Sublattice((), (), (), 0)
    typ, d = polarization_type(B)
    E = _freeze_int(_induced_form([list(r) for r in B]))
    return Sublattice(B, E, typ, d)


def _induced_form(B):
    two_g = len(B[0])
    J = J_matrix(two_g // 2)
    return int_matmul(int_matmul([list(r) for r in B], J), int_transpose(B))


def polarization_type(B):
    """Elementary divisors of B J B^t, paired: ((d1, d2, ...), content)."""
    B = [list(r) for r in B]
    if not B:
        return (), 0
    if len(B[0]) % 2:
        raise ValueError("ambient rank must be even")
    E = _induced_form(B)
    k = len(E)
    if k % 2 or int_det(E) == 0:
        raise ValueError("induced alternating form is degenerate")
    D, _, _ = snf(E)
    diag = [D[i][i] for i in range(k)]
    for i in range(0, k, 2):
        if diag[i] != diag[i + 1]:
            raise ArithmeticError("elementary divisors of an alternating "
                                  "form must come in pairs")
    d = math.gcd(*(v for row in E for v in row))
    if d != diag[0]:
        raise ArithmeticError("content does not match the first divisor")
    return tuple(diag[0::2]), d


def frobenius_transform(E):
    """Integral symplectic-basis reduction of an alternating form.

    Returns (F, U) with U E U^t = F = [[0, diag(e)], [-diag(e), 0]] and U
    unimodular.  Pivot selection takes the smallest nonzero |entry|, ties
    broken by column index then row index; that makes the reduction
    deterministic and keeps a form already in standard shape fixed (U = I).
    """
    k = len(E)
    if k % 2:
        raise ValueError("alternating form must have even size")
    A = [list(map(int, row)) for row in E]
    if any(len(r) != k for r in A):
        raise ValueError("form must be square")
    for i in range(k):
        if A[i][i]:
            raise ValueError("form is not alternating")
        for j in range(i):
            if A[i][j] != -A[j][i]:
                raise ValueError("form is not alternating")
    U = int_identity(k)

    def swap(i, j):
        if i == j:
            return
        A[i], A[j] = A[j], A[i]
        for r in A:
            r[i], r[j] = r[j], r[i]
        U[i], U[j] = U[j], U[i]

    def addrow(dst, src, t):
        A[dst] = [x + t * y for x, y in zip(A[dst], A[src])]
        for r in A:
            r[dst] += t * r[src]
        U[dst] = [x + t * y for x, y in zip(U[dst], U[src])]

    def negrow(i):
        A[i] = [-x for x in A[i]]
        for r in A:
            r[i] = -r[i]
        U[i] = [-x for x in U[i]]

    s = 0
    while s < k:
        best = None
        for r in range(s, k):
            for c in range(r + 1, k):
                v = A[r][c]
                if v and (best is None or (abs(v), c, r) < best):
                    best = (abs(v), c, r)
        if best is None:
            raise ValueError("form is degenerate")
        _, c, r = best
        if r != s:
            swap(r, s)
        if c != s + 1:
            swap(c, s + 1)
        if A[s][s + 1] < 0:
            negrow(s)
        e = A[s][s + 1]
        clean = True
        for j in range(s + 2, k):
            v = A[j][s]
            if v:
                q, rem = divmod(v, e)
                addrow(j, s + 1, q)
                if rem:
                    clean = False
                    break
            v = A[j][s + 1]
            if v:
                q, rem = divmod(v, e)
                addrow(j, s, -q)
                if rem:
                    clean = False
                    break
        if clean:
            s += 2
    m = k // 2
    perm = [2 * i for i in range(m)] + [2 * i + 1 for i in range(m)]
    F = [[A[perm[a]][perm[b]] for b in range(k)] for a in range(k)]
    Up = [U[perm[a]] for a in range(k)]
    return _freeze_int(F), _freeze_int(Up)


def sub_period_matrix(
    Pi: Matrix,
    L: Sublattice,
    precision_bits: int = 128,
    tolerance_bits: int = 40,
) -> SubvarietyData:
    """Riemann matrix of the subvariety spanned by a saturated sublattice.

    Columns of Pi B^t are the complex coordinates of the lattice basis; the
    first maximal independent columns serve as a complex basis, every column
    is expressed in it, the basis is rotated to a symplectic one for E/d by
    Frobenius reduction, and the left block is normalized to the identity.
    """
    k = L.rank
    m = k // 2
    if k % 2 or m == 0:
        raise ValueError("sublattice rank must be even and positive")
    g = Pi.rows
    if Pi.cols != len(L.B[0]):
        raise ValueError("period matrix and lattice sizes do not match")
    if L.d <= 0:
        raise ValueError("divisor must be positive")
    field = Pi.field

    Ediv = []
    for row in L.E:
        out = []
        for v in row:
            if v % L.d:
                raise ValueError("content does not divide the induced form")
            out.append(v // L.d)
        Ediv.append(out)
    D, _, _ = snf(Ediv)
    if any(D[i][i] != 1 for i in range(k)):
        raise ValueError("the reduced form E/d is not principal")
    F, U = frobenius_transform(Ediv)
    if F != _freeze_int(J_matrix(m)):
        raise ArithmeticError("Frobenius reduction missed the standard form")

    Cmat = Pi * Matrix.from_int_matrix(field, int_transpose(L.B))
    sel = []
    r = 0
    for j in range(k):
        cand = Cmat.submatrix(range(g), sel + [j])
        if cand.rank() > r:
            sel.append(j)
            r += 1
            if r == m:
                break
    if r != m or Cmat.rank() != m:
        raise ValueError("rank mismatch: the lattice does not span a "
                         "half-rank complex subspace")
    basis = Cmat.submatrix(range(g), sel)
    _, row_piv = basis.transpose().rref()
    square = basis.submatrix(row_piv, range(m))
    X = square.inverse() * Cmat.submatrix(row_piv, range(k))
    if basis * X != Cmat:
        raise ArithmeticError("column expression is inconsistent")

    Pc = X * Matrix.from_int_matrix(field, int_transpose(U))
    P1 = Pc.submatrix(range(m), range(m))
    P2 = Pc.submatrix(range(m), range(m, k))
    Z_sub = P1.inverse() * P2
    if not Z_sub.is_symmetric():
        raise ArithmeticError("sub-period matrix is not symmetric")
    for kk in _coprime_embeddings(field.n):
        if is_riemann_matrix(Z_sub, kk, precision_bits, tolerance_bits):
            return SubvarietyData(L, Z_sub, L.d, kk)
    raise ArithmeticError("no embedding makes the sub-period matrix "
                          "positive definite")


def sum_map_certificate(L1: Sublattice, L2: Sublattice) -> SumCertificate:
    """Stack the two bases; |det| = 1 certifies the sum map is an
    isomorphism, a larger value an isogeny with that kernel order."""
    if not L1.B or not L2.B:
        raise ValueError("rank mismatch: empty sublattice")
    two_g = len(L1.B[0])
    if len(L2.B[0]) != two_g:
        raise ValueError("rank mismatch: different ambient sizes")
    if L1.rank + L2.rank != two_g:
        raise ValueError("rank mismatch: bases do not fill the ambient lattice")
    stacked = [list(r) for r in L1.B] + [list(r) for r in L2.B]
    det = abs(int_det(stacked))
    if det == 0:
        return SumCertificate(0, None, "rank failure")
    return SumCertificate(det, det, "isomorphism" if det == 1 else "isogeny")
