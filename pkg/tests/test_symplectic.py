"""Siegel action, fixed-point solver, and isomorphism witnesses."""

import random
from fractions import Fraction

import mpmath
import pytest
import sympy

from helpers import random_int_matrix, random_symplectic
from jacdec.cyclofield import CyclotomicField
from jacdec.errors import DegenerateFixedLocusError, SingularMatrixError
from jacdec.exactlinalg import Matrix, int_matmul
from jacdec.grouprep import generate_group
from jacdec.symplectic import (
    J_matrix,
    charpoly_int,
    fixed_riemann_matrix,
    imag_leading_minors,
    is_riemann_matrix,
    is_symplectic,
    ppav_isomorphism_witness,
    siegel_act,
)

F1 = CyclotomicField(1)
F4 = CyclotomicField(4)


def test_j_matrix_shape():
    J = J_matrix(2)
    assert J == [[0, 0, 1, 0], [0, 0, 0, 1], [-1, 0, 0, 0], [0, -1, 0, 0]]
    assert int_matmul(J, J) == [[-int(i == j) for j in range(4)] for i in range(4)]


def test_is_symplectic_on_group_elements(assignments):
    assert is_symplectic(assignments["a"])
    assert is_symplectic(assignments["c"])
    assert is_symplectic([[int(i == j) for j in range(8)] for i in range(8)])
    assert not is_symplectic([[2 * int(i == j) for j in range(8)] for i in range(8)])


def test_is_symplectic_rejects_odd_size():
    with pytest.raises(ValueError):
        is_symplectic([[1, 0, 0], [0, 1, 0], [0, 0, 1]])


def test_identity_fixes_every_point(z_paper):
    n = 2 * z_paper.rows
    I = [[int(i == j) for j in range(n)] for i in range(n)]
    assert siegel_act(I, z_paper) == z_paper


def test_generators_fix_the_fixed_point(assignments, z_paper):
    assert siegel_act(assignments["a"], z_paper) == z_paper
    assert siegel_act(assignments["c"], z_paper) == z_paper


def test_all_forty_elements_fix_the_fixed_point(group40, z_paper):
    for M in group40.elements:
        assert siegel_act(M, z_paper) == z_paper


def test_action_composition_order(group40, z_paper):
    # Pinned convention: acting by R1 after R2 equals acting by the product
    # R2 R1 (a right action).
    rng = random.Random(301)
    elements = list(group40.elements)
    for _ in range(10):
        R1 = rng.choice(elements)
        R2 = rng.choice(elements)
        lhs = siegel_act(R1, siegel_act(R2, z_paper))
        rhs = siegel_act(int_matmul(R2, R1), z_paper)
        assert lhs == rhs


def test_action_matches_floating_moebius():
    i = F4.zeta()
    Z = Matrix(F4, [[2 * i, i], [i, 2 * i]])
    rng = random.Random(302)
    with mpmath.workprec(128):
        Zm = mpmath.matrix([[Z[r, c].embed(128) for c in range(2)] for r in range(2)])
        for _ in range(20):
            R = random_symplectic(rng, 2, 5)
            W = siegel_act(R, Z)
            A = mpmath.matrix([[R[r][c] for c in range(2)] for r in range(2)])
            B = mpmath.matrix([[R[r][c + 2] for c in range(2)] for r in range(2)])
            C = mpmath.matrix([[R[r + 2][c] for c in range(2)] for r in range(2)])
            D = mpmath.matrix([[R[r + 2][c + 2] for c in range(2)] for r in range(2)])
            ref = (A + Zm * C) ** -1 * (B + Zm * D)
            for r in range(2):
                for c in range(2):
                    assert abs(W[r, c].embed(128) - ref[r, c]) < mpmath.mpf(2) ** -100


def test_action_preserves_positivity(z_paper):
    rng = random.Random(303)
    for _ in range(10):
        R = random_symplectic(rng, 4, 4)
        W = siegel_act(R, z_paper)
        assert W.is_symmetric()
        assert is_riemann_matrix(W, 1)


def test_action_rejects_bad_inputs(z_paper):
    not_symplectic = [[2 * int(i == j) for j in range(8)] for i in range(8)]
    with pytest.raises(ValueError):
        siegel_act(not_symplectic, z_paper)
    asym = Matrix.from_int_matrix(F1, [[1, 2], [3, 4]])
    with pytest.raises(ValueError):
        siegel_act(J_matrix(2), asym)
    with pytest.raises(ValueError):
        siegel_act(J_matrix(3), Matrix.from_int_matrix(F1, [[1]]))


def test_action_singular_denominator():
    Z0 = Matrix.from_int_matrix(F1, [[0]])
    with pytest.raises(SingularMatrixError):
        siegel_act([[0, 1], [-1, 0]], Z0)


def test_charpoly_matches_sympy():
    rng = random.Random(304)
    lam = sympy.Symbol("lam")
    for _ in range(8):
        A = random_int_matrix(rng, 5, 5, -4, 4)
        got = charpoly_int(A)
        ref = sympy.Matrix(A).charpoly(lam).all_coeffs()
        assert list(got) == [int(c) for c in ref]


def test_charpoly_of_order_ten_generator(assignments, field5):
    coeffs = charpoly_int(assignments["a"])
    assert len(coeffs) == 9 and coeffs[0] == 1
    # the eigenvalues are exactly the eight non-real tenth roots of unity
    for w in field5.roots_of_unity():
        acc = field5.zero
        for c in coeffs:
            acc = acc * w + field5.from_rational(c)
        is_root = acc == field5.zero
        assert is_root == (w != field5.one and w != -field5.one)


def test_riemann_matrix_predicate(z_paper):
    assert is_riemann_matrix(z_paper, 1)
    minors = imag_leading_minors(z_paper, 1)
    assert len(minors) == 4
    assert all(m > 0 for m in minors)
    asym = Matrix.from_int_matrix(F1, [[1, 2], [3, 4]])
    assert not is_riemann_matrix(asym, 1)


def test_fixed_point_reproduces_bundled_matrix(group40, field5, z_paper):
    res = fixed_riemann_matrix(group40, field5)
    assert res.Z == z_paper
    assert res.embedding_k == 1
    assert res.element_ord == 10
    assert len(res.eigenvalues) == 8
    assert len(set(res.eigenvalues)) == 8


def test_fixed_point_trivial_group_is_degenerate():
    e2 = generate_group({"e": [[1, 0], [0, 1]]})
    with pytest.raises(DegenerateFixedLocusError, match="multiple survivors"):
        fixed_riemann_matrix(e2, F4)


def test_fixed_point_central_involution_is_degenerate():
    neg = generate_group({"m": [[-int(i == j) for j in range(4)] for i in range(4)]})
    with pytest.raises(DegenerateFixedLocusError, match="multiple survivors"):
        fixed_riemann_matrix(neg, F4)


def test_fixed_point_rejects_non_symplectic_generator():
    bad = generate_group({"s": [[0, 1], [1, 0]]})
    with pytest.raises(ValueError, match="'s' is not symplectic"):
        fixed_riemann_matrix(bad, F4)


def test_witness_on_equal_inputs(z1_half):
    w = ppav_isomorphism_witness(z1_half, z1_half)
    assert w.kind == "witness"
    assert w.T == tuple(map(tuple, [[int(i == j) for j in range(4)] for i in range(4)]))
    assert w.lattice_rank is None


def test_witness_between_bundled_surfaces(z1_half, z2_half):
    w = ppav_isomorphism_witness(z1_half, z2_half)
    assert w.kind == "witness"
    assert is_symplectic(w.T)
    _assert_witness_identity(w, z1_half, z2_half)
    assert siegel_act(w.T, z2_half) == z1_half


def test_witness_never_false_on_translate(z1_half):
    field = z1_half.field
    one = Matrix(field, [[field.one, field.zero], [field.zero, field.zero]])
    shifted = z1_half + one
    w = ppav_isomorphism_witness(z1_half, shifted, search_bound=3)
    if w.kind == "witness":
        _assert_witness_identity(w, z1_half, shifted)
        assert siegel_act(w.T, shifted) == z1_half
    else:
        assert w.kind in ("none", "inconclusive")


def _assert_witness_identity(w, za, zb):
    field = za.field
    g = za.rows
    Pa = Matrix.identity(field, g).hstack(za)
    Pb = Matrix.identity(field, g).hstack(zb)
    T = Matrix.from_int_matrix(field, w.T)
    assert w.M * Pa == Pb * T
