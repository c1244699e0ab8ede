"""Shared test utilities: deterministic random matrix generators."""

from __future__ import annotations

import random
from fractions import Fraction

from jacdec.exactlinalg import int_matmul
from jacdec.symplectic import J_matrix, is_symplectic


def random_int_matrix(rng: random.Random, rows: int, cols: int, lo: int = -9, hi: int = 9):
    return [[rng.randint(lo, hi) for _ in range(cols)] for _ in range(rows)]


def random_fraction(rng: random.Random, max_num: int = 6, max_den: int = 4) -> Fraction:
    return Fraction(rng.randint(-max_num, max_num), rng.randint(1, max_den))


def random_symplectic(rng: random.Random, g: int, factors: int, max_entry: int = 1):
    """Product of elementary symplectic factors: upper and lower shears by a
    symmetric integer block, and the standard form J.  Small factor counts
    keep entries modest, which matters for positivity-margin tests."""
    n = 2 * g
    result = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for _ in range(factors):
        kind = rng.randrange(3)
        if kind == 2:
            f = J_matrix(g)
        else:
            block = [[0] * g for _ in range(g)]
            for i in range(g):
                for j in range(i, g):
                    v = rng.randint(-max_entry, max_entry)
                    block[i][j] = v
                    block[j][i] = v
            f = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
            for i in range(g):
                for j in range(g):
                    if kind == 0:
                        f[i][g + j] = block[i][j]
                    else:
                        f[g + i][j] = block[i][j]
        result = int_matmul(result, f)
    assert is_symplectic(result)
    return result


def freeze(rows):
    return tuple(tuple(r) for r in rows)
