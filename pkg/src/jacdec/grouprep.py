"""Finite integer matrix groups: closure, word evaluation, presentation
checks, surface-kernel data and Riemann-Hurwitz bookkeeping.

Group elements are tuples of tuples of ints (hashable, exact).  Words are
strings over generator names: whitespace-separated chunks of the forms
``a``, ``a^-3``, ``(ac)^2``, ``[a,b]`` (commutator, expanded to
``x y x^-1 y^-1``) or a run of single-letter names like ``cacab``; the chunk
``1`` is the identity.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from fractions import Fraction

from . import kernels
from .errors import NotAGroupError

__all__ = [
    "MatrixGroup",
    "Signature",
    "RelationReport",
    "SkepReport",
    "generate_group",
    "element_order",
    "evaluate_word",
    "verify_relations",
    "riemann_hurwitz_genus",
    "verify_skep",
    "int_inverse_unimodular",
]


def _freeze(M):
    return tuple(tuple(int(v) for v in row) for row in M)


def _identity(n):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def _mul(A, B):
    return _freeze(kernels.int_matmul([list(r) for r in A], [list(r) for r in B]))


def int_inverse_unimodular(M):
    """Exact inverse of an integer matrix with determinant +-1."""
    n = len(M)
    aug = [[Fraction(v) for v in row] + [Fraction(1 if i == j else 0) for j in range(n)]
           for i, row in enumerate(M)]
    for col in range(n):
        piv = next((i for i in range(col, n) if aug[i][col]), None)
        if piv is None:
            raise ValueError("matrix is singular")
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for i in range(n):
            if i != col and aug[i][col]:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[col])]
    inv = []
    for i in range(n):
        row = []
        for j in range(n, 2 * n):
            q = aug[i][j]
            if q.denominator != 1:
                raise ValueError("matrix is not unimodular")
            row.append(q.numerator)
        inv.append(tuple(row))
    return tuple(inv)


@dataclass(frozen=True)
class Signature:
    orbit_genus: int
    periods: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "periods", tuple(int(p) for p in self.periods))
        if any(p < 2 for p in self.periods):
            raise ValueError("periods must be at least 2")


@dataclass(frozen=True)
class MatrixGroup:
    """Closure of named generators; ``elements`` keeps BFS insertion order
    (identity first), which makes every derived computation deterministic."""

    generators: tuple[tuple[str, tuple], ...]
    elements: tuple
    order: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "order", len(self.elements))

    @property
    def degree(self):
        return len(self.elements[0])

    def generator(self, name):
        for n, M in self.generators:
            if n == name:
                return M
        raise KeyError(f"no generator named {name!r}")

    def __contains__(self, M):
        return _freeze(M) in set(self.elements)


def generate_group(gens, max_order: int = 10000) -> MatrixGroup:
    """Breadth-first closure of the given generators.

    ``gens`` is a mapping name -> matrix or an iterable of matrices (then
    names g0, g1, ... are assigned).  Raises NotAGroupError when the closure
    exceeds ``max_order``.
    """
    if isinstance(gens, dict):
        named = [(str(k), _freeze(v)) for k, v in gens.items()]
    else:
        named = [(f"g{i}", _freeze(v)) for i, v in enumerate(gens)]
    if not named:
        raise ValueError("at least one generator is required")
    n = len(named[0][1])
    if any(len(M) != n or any(len(r) != n for r in M) for _, M in named):
        raise ValueError("generators must be square matrices of equal size")
    ident = _identity(n)
    seen = {ident}
    elements = [ident]
    frontier = [ident]
    gen_ms = [M for _, M in named]
    while frontier:
        nxt = []
        for w in frontier:
            for g in gen_ms:
                p = _mul(w, g)
                if p not in seen:
                    seen.add(p)
                    elements.append(p)
                    nxt.append(p)
                    if len(elements) > max_order:
                        raise NotAGroupError(
                            f"closure not finite within bound {max_order}"
                        )
        frontier = nxt
    return MatrixGroup(generators=tuple(named), elements=tuple(elements))


def element_order(M, bound: int = 10000) -> int:
    """Least k <= bound with M^k = I."""
    if bound < 1:
        raise ValueError("bound must be at least 1")
    M = _freeze(M)
    ident = _identity(len(M))
    P = M
    for k in range(1, bound + 1):
        if P == ident:
            return k
        P = _mul(P, M)
    raise NotAGroupError(f"no order within bound {bound}")


def _tokenize_word(word: str):
    chunks = word.split()
    if not chunks:
        raise ValueError("empty word")
    return chunks


def evaluate_word(word: str, assignments: dict) -> tuple:
    """Evaluate a word to a matrix under name -> matrix assignments."""
    mats = {k: _freeze(v) for k, v in assignments.items()}
    n = len(next(iter(mats.values())))
    acc = _identity(n)
    for chunk in _tokenize_word(word):
        acc = _mul(acc, _evaluate_chunk(chunk, mats))
    return acc


def _evaluate_chunk(chunk: str, mats: dict) -> tuple:
    n = len(next(iter(mats.values())))
    if chunk == "1":
        return _identity(n)
    if chunk.startswith("[") and chunk.endswith("]"):
        inner = chunk[1:-1]
        depth = 0
        split_at = None
        for i, ch in enumerate(inner):
            if ch in "([":
                depth += 1
            elif ch in ")]":
                depth -= 1
            elif ch == "," and depth == 0:
                split_at = i
                break
        if split_at is None:
            raise ValueError(f"malformed commutator {chunk!r}")
        x = _evaluate_chunk(inner[:split_at], mats)
        y = _evaluate_chunk(inner[split_at + 1:], mats)
        return _mul(_mul(x, y), _mul(int_inverse_unimodular(x), int_inverse_unimodular(y)))
    base, exp = chunk, 1
    if "^" in chunk:
        base, _, e = chunk.rpartition("^")
        try:
            exp = int(e)
        except ValueError:
            raise ValueError(f"bad exponent in {chunk!r}") from None
    if base.startswith("(") and base.endswith(")"):
        M = _evaluate_chunk(base[1:-1], mats)
    elif base.startswith("[") and base.endswith("]"):
        M = _evaluate_chunk(base, mats)
    elif base in mats:
        M = mats[base]
    elif all(ch in mats for ch in base):
        M = _identity(n)
        for ch in base:
            M = _mul(M, mats[ch])
    else:
        raise ValueError(f"unknown generator in {chunk!r}")
    if exp < 0:
        M = int_inverse_unimodular(M)
        exp = -exp
    P = _identity(n)
    for _ in range(exp):
        P = _mul(P, M)
    return P


@dataclass(frozen=True)
class RelationReport:
    results: tuple[tuple[str, bool], ...]

    @property
    def all_hold(self) -> bool:
        return all(ok for _, ok in self.results)

    def failing(self):
        return [w for w, ok in self.results if not ok]


def verify_relations(assignments: dict, relations) -> RelationReport:
    """Evaluate each relation word; a relation holds when it equals I."""
    mats = {k: _freeze(v) for k, v in assignments.items()}
    n = len(next(iter(mats.values())))
    ident = _identity(n)
    results = []
    for w in relations:
        results.append((w, evaluate_word(w, mats) == ident))
    return RelationReport(tuple(results))


def riemann_hurwitz_genus(group_order: int, sig: Signature) -> Fraction:
    """1 + (|G|/2) (2h - 2 + sum(1 - 1/m_i)); the caller checks integrality."""
    if group_order < 1:
        raise ValueError("group order must be positive")
    for p in sig.periods:
        if group_order % p:
            warnings.warn(
                f"period {p} does not divide the group order {group_order}",
                stacklevel=2,
            )
    total = 2 * sig.orbit_genus - 2 + sum(1 - Fraction(1, m) for m in sig.periods)
    return 1 + Fraction(group_order, 2) * total


@dataclass(frozen=True)
class SkepReport:
    product_is_identity: bool
    image_orders: tuple[tuple[int, int], ...]  # (actual, required) per image
    generates: bool

    @property
    def passed(self) -> bool:
        return (
            self.product_is_identity
            and all(a == b for a, b in self.image_orders)
            and self.generates
        )


def verify_skep(images, sig: Signature, G: MatrixGroup) -> SkepReport:
    """Surface-kernel checks: images multiply to I, have the signature's
    periods as exact orders, and generate G."""
    images = [_freeze(M) for M in images]
    if len(images) != len(sig.periods):
        raise ValueError("one image per period is required")
    n = len(images[0])
    prod = _identity(n)
    for M in images:
        prod = _mul(prod, M)
    orders = tuple(
        (element_order(M, bound=max(G.order, 1)), p)
        for M, p in zip(images, sig.periods)
    )
    closure = generate_group(images, max_order=G.order)
    generates = set(closure.elements) == set(G.elements)
    return SkepReport(prod == _identity(n), orders, generates)
