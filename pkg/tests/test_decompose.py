"""Idempotent images, polarization types, and sub-period matrices."""

import pytest

from helpers import freeze
from jacdec.errors import NotAGroupError
from jacdec.exactlinalg import Matrix, hnf, int_matmul, int_transpose
from jacdec.decompose import (
    frobenius_transform,
    idempotent_image,
    lattice_from_basis,
    make_idempotent,
    polarization_type,
    sub_period_matrix,
    sum_map_certificate,
)
from jacdec.grouprep import evaluate_word, generate_group
from jacdec.symplectic import J_matrix, ppav_isomorphism_witness, siegel_act

I8 = [[int(i == j) for j in range(8)] for i in range(8)]


def _subgroup(word, assignments):
    return generate_group({"h": evaluate_word(word, assignments)}).elements


def _period(Z):
    return Matrix.identity(Z.field, Z.rows).hstack(Z)


def test_idempotent_is_idempotent(assignments):
    idem = make_idempotent(_subgroup("c", assignments))
    n = len(idem.rho)
    prod = [
        [sum(idem.rho[i][k] * idem.rho[k][j] for k in range(n)) for j in range(n)]
        for i in range(n)
    ]
    assert freeze(prod) == idem.rho


def test_make_idempotent_rejects_non_subgroup(assignments):
    with pytest.raises(NotAGroupError):
        make_idempotent([I8, assignments["a"]])


def test_image_of_first_subgroup_matches_bundled_basis(assignments, b1):
    L = idempotent_image(_subgroup("c", assignments))
    assert L.B == freeze(hnf(b1))
    assert L.type == (2, 2)
    assert L.d == 2
    assert L.rank == 4


def test_image_of_conjugate_subgroup_matches_bundled_basis(assignments, b2):
    L = idempotent_image(_subgroup("a c a^-1", assignments))
    assert L.B == freeze(hnf(b2))
    assert L.type == (2, 2)
    assert L.d == 2


def test_conjugate_subgroups_share_polarization_type(assignments):
    types = set()
    for k in range(1, 10):
        L = idempotent_image(_subgroup(f"a^{k} c a^-{k}", assignments))
        types.add((L.type, L.d))
    assert types == {((2, 2), 2)}


def test_trivial_subgroup_gives_full_lattice():
    L = idempotent_image([I8])
    assert L.B == freeze(I8)
    assert L.type == (1, 1, 1, 1)
    assert L.d == 1


def test_polarization_type_values(b1, b2):
    assert polarization_type(b1) == ((2, 2), 2)
    assert polarization_type(b2) == ((2, 2), 2)
    assert polarization_type(I8) == ((1, 1, 1, 1), 1)


def test_polarization_type_rejects_bad_input():
    with pytest.raises(ValueError):
        polarization_type([[1, 0, 0], [0, 1, 0]])
    # isotropic rows: the induced form is identically zero
    with pytest.raises(ValueError):
        polarization_type([[1, 0, 0, 0], [0, 1, 0, 0]])


def test_frobenius_transform_standardizes(b1):
    E = int_matmul(int_matmul(b1, J_matrix(4)), int_transpose(b1))
    halves = [[v // 2 for v in row] for row in E]
    F, U = frobenius_transform(halves)
    assert F == freeze(J_matrix(2))
    assert freeze(int_matmul(int_matmul(U, halves), int_transpose(U))) == F


def test_frobenius_transform_fixes_standard_form():
    J = J_matrix(3)
    F, U = frobenius_transform(J)
    assert F == freeze(J)
    assert U == freeze([[int(i == j) for j in range(6)] for i in range(6)])


def test_full_lattice_round_trip(z_paper):
    sub = sub_period_matrix(_period(z_paper), idempotent_image([I8]))
    assert sub.Z_sub == z_paper
    assert sub.divisor == 1
    assert sub.embedding_k == 1


def test_sub_period_matrices_are_two_by_two(assignments, z_paper):
    Pi = _period(z_paper)
    for word in ("c", "a c a^-1"):
        sub = sub_period_matrix(Pi, idempotent_image(_subgroup(word, assignments)))
        assert sub.Z_sub.rows == 2
        assert sub.Z_sub.is_symmetric()
        assert sub.divisor == 2
        assert sub.embedding_k == 1


def test_sub_periods_recover_bundled_surfaces(assignments, z_paper, z1_half, z2_half):
    Pi = _period(z_paper)
    s1 = sub_period_matrix(Pi, idempotent_image(_subgroup("c", assignments)))
    s2 = sub_period_matrix(Pi, idempotent_image(_subgroup("a c a^-1", assignments)))
    for sub, target in ((s1, z1_half), (s2, z2_half)):
        w = ppav_isomorphism_witness(sub.Z_sub, target)
        assert w.kind == "witness"
        assert siegel_act(w.T, target) == sub.Z_sub


def test_sub_period_matrix_rejects_rank_mismatch(z_paper):
    # two standard symplectic pairs whose image spans a rank-4 complex space
    L = lattice_from_basis([I8[0], I8[1], I8[4], I8[5]])
    assert L.type == (1, 1) and L.d == 1
    with pytest.raises(ValueError, match="rank"):
        sub_period_matrix(_period(z_paper), L)


def test_sub_period_matrix_requires_principal_reduced_form(z_paper):
    # pairings 1 and 2 with content 1: the reduced form stays non-principal
    stretched = [2 * v for v in I8[5]]
    L = lattice_from_basis([I8[0], I8[1], I8[4], stretched])
    assert L.type == (1, 2) and L.d == 1
    with pytest.raises(ValueError, match="principal"):
        sub_period_matrix(_period(z_paper), L)


def test_sum_certificate_isomorphism(assignments):
    L1 = idempotent_image(_subgroup("c", assignments))
    L2 = idempotent_image(_subgroup("a c a^-1", assignments))
    cert = sum_map_certificate(L1, L2)
    assert cert.det == 1
    assert cert.kernel_order == 1
    assert cert.verdict == "isomorphism"


def test_sum_certificate_rank_failure(assignments):
    L1 = idempotent_image(_subgroup("c", assignments))
    cert = sum_map_certificate(L1, L1)
    assert cert.det == 0
    assert cert.kernel_order is None
    assert cert.verdict == "rank failure"


def test_sum_certificate_isogeny(assignments, b2):
    L1 = idempotent_image(_subgroup("c", assignments))
    doubled = lattice_from_basis([[2 * v for v in row] for row in b2])
    cert = sum_map_certificate(L1, doubled)
    assert cert.det == 16
    assert cert.kernel_order == 16
    assert cert.verdict == "isogeny"


def test_lattice_from_basis_keeps_rows(b1):
    L = lattice_from_basis(b1)
    assert L.B == freeze(b1)
    assert L.type == (2, 2)
    assert L.d == 2
