"""Symplectic integer matrices, the Siegel action on exact Riemann
matrices, group fixed points in the Siegel space, and integral ppav
isomorphism witnesses.

Conventions: J = [[0, I], [-I, 0]]; a 2g x 2g matrix R acts on a symmetric
g x g matrix Z through blocks A = R[:g,:g], B = R[:g,g:], C = R[g:,:g],
D = R[g:,g:] by R.Z = (A + ZC)^(-1) (B + ZD).  The composition law
siegel_act(R1, siegel_act(R2, Z)) == siegel_act(R2 R1, Z) is pinned by a
regression test, not assumed.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import mpmath

from . import kernels
from .errors import DegenerateFixedLocusError
from .exactlinalg import Matrix, eigenspace, int_identity, int_kernel
from .grouprep import MatrixGroup, element_order

__all__ = [
    "J_matrix",
    "is_symplectic",
    "siegel_act",
    "imag_leading_minors",
    "is_riemann_matrix",
    "FixedPointResult",
    "fixed_riemann_matrix",
    "WitnessResult",
    "ppav_isomorphism_witness",
    "charpoly_int",
]


def J_matrix(g: int):
    """The standard alternating form on Z^2g as a nested list."""
    J = [[0] * (2 * g) for _ in range(2 * g)]
    for i in range(g):
        J[i][g + i] = 1
        J[g + i][i] = -1
    return J


def is_symplectic(M) -> bool:
    """Exact check of M^t J M = J."""
    M = [list(r) for r in M]
    n = len(M)
    if any(len(r) != n for r in M):
        raise ValueError("matrix must be square")
    if n % 2:
        raise ValueError("matrix size must be even")
    return kernels.is_symplectic(M)


def _field_blocks(R, Z):
    g = Z.rows
    Rf = Matrix.from_int_matrix(Z.field, R)
    idx = range(g), range(g, 2 * g)
    A = Rf.submatrix(idx[0], idx[0])
    B = Rf.submatrix(idx[0], idx[1])
    C = Rf.submatrix(idx[1], idx[0])
    D = Rf.submatrix(idx[1], idx[1])
    return A, B, C, D


def siegel_act(R, Z: Matrix) -> Matrix:
    """Apply R to Z; raises SingularMatrixError when A + ZC is singular."""
    if Z.rows != Z.cols or not Z.is_symmetric():
        raise ValueError("Z must be a symmetric square matrix")
    R = [list(r) for r in R]
    if len(R) != 2 * Z.rows:
        raise ValueError("matrix size must be twice the Riemann matrix size")
    if not is_symplectic(R):
        raise ValueError("the acting matrix is not symplectic")
    A, B, C, D = _field_blocks(R, Z)
    out = (A + Z * C).inverse() * (B + Z * D)
    if not out.is_symmetric():
        raise ArithmeticError("Siegel action produced a non-symmetric matrix")
    return out


def imag_leading_minors(Z: Matrix, k: int = 1, precision_bits: int = 128):
    """Leading principal minors of Im(Z) under zeta -> exp(2 pi i k / n)."""
    g = Z.rows
    with mpmath.workprec(precision_bits):
        Y = [[Z[i, j].embed(precision_bits, k).imag for j in range(g)]
             for i in range(g)]
        return tuple(
            mpmath.det(mpmath.matrix([row[: m + 1] for row in Y[: m + 1]]))
            for m in range(g)
        )


def is_riemann_matrix(
    Z: Matrix, k: int = 1, precision_bits: int = 128, tolerance_bits: int = 40
) -> bool:
    """Exactly symmetric and numerically positive definite imaginary part:
    every leading principal minor exceeds 2^-tolerance_bits."""
    if Z.rows != Z.cols or not Z.is_symmetric():
        return False
    threshold = mpmath.mpf(2) ** (-tolerance_bits)
    return all(m > threshold for m in imag_leading_minors(Z, k, precision_bits))


def charpoly_int(M) -> tuple[int, ...]:
    """Characteristic polynomial of an integer matrix, coefficients in
    descending degree (monic), by the Faddeev-LeVerrier recurrence."""
    M = [list(r) for r in M]
    n = len(M)
    if any(len(r) != n for r in M):
        raise ValueError("matrix must be square")
    coeffs = [1]
    B = int_identity(n)
    for k in range(1, n + 1):
        MB = kernels.int_matmul(M, B)
        tr = sum(MB[i][i] for i in range(n))
        if tr % k:
            raise ArithmeticError("trace recurrence left a remainder")
        c = -tr // k
        coeffs.append(c)
        B = [[MB[i][j] + (c if i == j else 0) for j in range(n)] for i in range(n)]
    return tuple(coeffs)


def _eval_poly(coeffs, x):
    field = x.field
    acc = field.zero
    for c in coeffs:
        acc = acc * x + field.from_rational(c)
    return acc


def _candidate_roots(field, rou_orders):
    roots = field.roots_of_unity()
    if rou_orders is None:
        return roots
    out = []
    for x in roots:
        for m in rou_orders:
            if m < 1:
                raise ValueError("root-of-unity orders must be positive")
            p = field.one
            for _ in range(m):
                p = p * x
            if p == field.one:
                out.append(x)
                break
    return out


def _coprime_embeddings(n):
    ks = [k for k in range(1, n) if math.gcd(k, n) == 1]
    return ks or [1]


@dataclass(frozen=True)
class FixedPointResult:
    """Fixed point of a symplectic group action on the Siegel space."""

    Z: Matrix
    embedding_k: int
    element: tuple            # the regular element whose eigenlines were used
    element_ord: int
    eigenvalues: tuple        # its 2g eigenvalues, in candidate order


def fixed_riemann_matrix(
    G: MatrixGroup,
    field,
    rou_orders=None,
    precision_bits: int = 128,
    tolerance_bits: int = 40,
) -> FixedPointResult:
    """The unique Z with siegel_act(R, Z) = Z for every element of G.

    Eigenline method: pick a maximal-order element whose eigenvalues are 2g
    distinct candidate roots of unity, stack g of its eigen-rows at a time,
    and keep the span W only when it is invariant under every generator,
    W + conj(W) is the whole space, the left block P1 of the stacked basis
    is invertible, and Z = P1^-1 P2 is exactly symmetric.  Embeddings
    zeta -> exp(2 pi i k / n) are scanned in increasing k; the first k at
    which exactly one survivor has positive definite imaginary part wins and
    is recorded.  Degenerate outcomes (no regular element, zero survivors,
    several distinct survivors) raise DegenerateFixedLocusError.
    """
    for name, M in G.generators:
        if not is_symplectic(M):
            raise ValueError(f"generator {name!r} is not symplectic")
    two_g = G.degree
    if two_g % 2:
        raise ValueError("group elements must have even size")
    g = two_g // 2

    candidates = []
    seen = set()
    for x in _candidate_roots(field, rou_orders):
        if x not in seen:
            seen.add(x)
            candidates.append(x)

    regular = []
    for M in G.elements:
        p = charpoly_int(M)
        roots = [w for w in candidates if not _eval_poly(p, w)]
        if len(roots) == two_g:
            regular.append((M, roots))
    if not regular:
        raise DegenerateFixedLocusError(
            "degenerate fixed locus, multiple survivors: no group element has "
            f"{two_g} distinct eigenvalues among the candidate roots of unity"
        )
    orders = [element_order(M, bound=G.order) for M, _ in regular]
    best = max(range(len(regular)), key=lambda i: (orders[i], -i))
    R_reg, eigenvalues = regular[best]
    reg_order = orders[best]

    lines = []
    Rf = Matrix.from_int_matrix(field, R_reg)
    for w in eigenvalues:
        E = eigenspace(Rf, w)
        if E.rows != 1:
            raise ArithmeticError("eigenline is not one-dimensional")
        lines.append(E.row(0))

    gen_mats = [Matrix.from_int_matrix(field, M) for _, M in G.generators]
    symmetric_survivors = []
    for combo in itertools.combinations(range(two_g), g):
        W = Matrix(field, [lines[i] for i in combo])
        rrefW = W.rref()[0]
        if any((W * Mg).rref()[0] != rrefW for Mg in gen_mats):
            continue
        if not W.vstack(W.conj()).det():
            continue
        P1 = W.submatrix(range(g), range(g))
        if not P1.det():
            continue
        P2 = W.submatrix(range(g), range(g, two_g))
        Z = P1.inverse() * P2
        if not Z.is_symmetric():
            continue
        if not any(Z == S for S in symmetric_survivors):
            symmetric_survivors.append(Z)

    for k in _coprime_embeddings(field.n):
        survivors = [
            Z
            for Z in symmetric_survivors
            if is_riemann_matrix(Z, k, precision_bits, tolerance_bits)
        ]
        if len(survivors) == 1:
            Z = survivors[0]
            for _, M in G.generators:
                if siegel_act(M, Z) != Z:
                    raise ArithmeticError("survivor is not fixed by a generator")
            return FixedPointResult(Z, k, R_reg, reg_order, tuple(eigenvalues))
        if len(survivors) > 1:
            raise DegenerateFixedLocusError(
                f"degenerate fixed locus, multiple survivors: {len(survivors)} "
                f"distinct fixed points are positive definite at embedding "
                f"k={k}; each is reported in .survivors",
                survivors=tuple(survivors),
            )
    raise DegenerateFixedLocusError(
        "degenerate fixed locus, zero survivors: no invariant eigenline "
        "subset yields a positive definite symmetric fixed point"
    )


@dataclass(frozen=True)
class WitnessResult:
    """Outcome of the integral witness search.

    kind is 'witness', 'none' or 'inconclusive'.  For a witness, T is the
    integral symplectic matrix and M the field matrix with
    M (I Z_a) = (I Z_b) T; siegel_act(T, Z_b) == Z_a.  lattice_rank is the
    rank of the integer solution lattice of the linear condition (None when
    the search short-circuited on equal inputs).
    """

    kind: str
    T: tuple | None
    M: Matrix | None
    lattice_rank: int | None


def _witness_lattice(Za: Matrix, Zb: Matrix):
    """Integer basis of {T : B + Zb D = (A + Zb C) Za} flattened row-major
    as (A, B, C, D) blocks."""
    field = Za.field
    m = Za.rows
    unknowns = 4 * m * m
    rows = []
    for i in range(m):
        for j in range(m):
            coeff = [field.zero] * unknowns
            for t in range(m):
                coeff[i * m + t] = -Za[t, j]                      # A[i][t]
            coeff[m * m + i * m + j] = field.one                  # B[i][j]
            for t in range(m):
                for l in range(m):
                    coeff[2 * m * m + t * m + l] = -(Zb[i, t] * Za[l, j])
            for t in range(m):
                coeff[3 * m * m + t * m + j] = Zb[i, t]           # D[t][j]
            for t in range(field.degree):
                rat = [c.coeffs[t] for c in coeff]
                scale = math.lcm(*(q.denominator for q in rat))
                rows.append([int(q * scale) for q in rat])
    return int_kernel(rows)


def _assemble_T(flat, m):
    """Blocks-to-matrix: flat is (A, B, C, D) block-major, each row-major."""
    mm = m * m
    block = lambda off: [flat[off + i * m: off + (i + 1) * m] for i in range(m)]
    A, B, C, D = block(0), block(mm), block(2 * mm), block(3 * mm)
    top = [tuple(a) + tuple(b) for a, b in zip(A, B)]
    bottom = [tuple(c) + tuple(d) for c, d in zip(C, D)]
    return tuple(top + bottom)


def _witness_invariant_holds(T, Za, Zb):
    field = Za.field
    m = Za.rows
    A, B, C, D = _field_blocks([list(r) for r in T], Za)
    M = A + Zb * C
    ident = Matrix.identity(field, m)
    lhs = M * ident.hstack(Za)
    rhs = ident.hstack(Zb) * Matrix.from_int_matrix(field, [list(r) for r in T])
    return (M, lhs == rhs)


def ppav_isomorphism_witness(
    Za: Matrix, Zb: Matrix, search_bound: int = 20
) -> WitnessResult:
    """Search for an integral symplectic T with B + Zb D = (A + Zb C) Za.

    The linear condition over the power basis cuts out an integer lattice of
    T candidates; its basis combinations are scanned in L-infinity shells
    1..search_bound (lexicographic inside each shell) for a symplectic
    member.  Rank 0 settles 'none'; an exhausted scan over a positive
    dimensional lattice is 'inconclusive'.
    """
    if Za.field is not Zb.field:
        raise ValueError("dimension mismatch: different fields")
    if (Za.rows, Za.cols) != (Zb.rows, Zb.cols) or Za.rows != Za.cols:
        raise ValueError("dimension mismatch")
    m = Za.rows
    if Za == Zb:
        ident = Matrix.identity(Za.field, m)
        T_id = tuple(tuple(row) for row in int_identity(2 * m))
        return WitnessResult("witness", T_id, ident, None)

    basis = _witness_lattice(Za, Zb)
    rank = len(basis)
    if rank == 0:
        return WitnessResult("none", None, None, 0)

    n_flat = 4 * m * m
    for radius in range(1, search_bound + 1):
        for coeffs in itertools.product(range(-radius, radius + 1), repeat=rank):
            if max(abs(c) for c in coeffs) != radius:
                continue
            flat = [0] * n_flat
            for c, b in zip(coeffs, basis):
                if c:
                    for idx in range(n_flat):
                        flat[idx] += c * b[idx]
            T = _assemble_T(flat, m)
            if not kernels.is_symplectic([list(r) for r in T]):
                continue
            M, ok = _witness_invariant_holds(T, Za, Zb)
            if not ok:
                raise ArithmeticError("lattice member violates the witness identity")
            return WitnessResult("witness", T, M, rank)
    return WitnessResult("inconclusive", None, None, rank)
