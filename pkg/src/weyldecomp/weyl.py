"""Weyl group elements as exact integer matrices in the simple-root basis.

An element is stored as a rank x rank tuple-of-tuples, row-major, whose i-th
column is the image of the i-th simple root.  Matrices are hashable, so they
serve directly as dictionary keys in the reduced-word counter.  Every element
preserves the doubled Gram matrix: ``M^T G M == G``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import BadLetter, DimensionMismatch, NotARoot, TooLarge
from .rootsys import Matrix, Root, RootSystem, cartan_integer, is_root, negate, pairing2


def identity_matrix(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def matrix_neg(m: Matrix) -> Matrix:
    return tuple(tuple(-e for e in row) for row in m)


def apply_matrix(m: Matrix, x: Root) -> Root:
    """Apply m to a coefficient vector (columns are images of simple roots)."""
    if len(x) != len(m):
        raise DimensionMismatch(f"vector of length {len(x)} under a {len(m)}x{len(m)} matrix")
    return tuple(sum(row[j] * xj for j, xj in enumerate(x)) for row in m)


def compose(u: Matrix, v: Matrix) -> Matrix:
    """The product u.v, i.e. apply v first and then u."""
    n = len(u)
    if len(v) != n:
        raise DimensionMismatch(f"composing {n}x{n} with {len(v)}x{len(v)}")
    cols = list(zip(*v))
    return tuple(
        tuple(sum(row[k] * col[k] for k in range(n)) for col in cols) for row in u
    )


def reflection_of(rs: RootSystem, a: Root) -> Matrix:
    """The reflection through the hyperplane orthogonal to the root a."""
    if not is_root(rs, a):
        raise NotARoot(f"{a} is not a root of {rs.type}")
    n = rs.rank
    cols = []
    for i in range(n):
        e = tuple(1 if j == i else 0 for j in range(n))
        c = cartan_integer(rs, e, a)
        cols.append(tuple(e[j] - c * a[j] for j in range(n)))
    return tuple(tuple(col[i] for col in cols) for i in range(n))


@lru_cache(maxsize=None)
def _simple_reflections(rs: RootSystem) -> tuple[Matrix, ...]:
    return tuple(reflection_of(rs, rs.simple_root(i)) for i in range(1, rs.rank + 1))


def simple_reflection(rs: RootSystem, i: int) -> Matrix:
    """The simple reflection for the i-th simple root (1-based)."""
    if not 1 <= i <= rs.rank:
        raise BadLetter(f"letter {i} outside 1..{rs.rank}")
    return _simple_reflections(rs)[i - 1]


def evaluate_word(rs: RootSystem, word) -> Matrix:
    """Evaluate a word of simple-reflection letters, rightmost applied first."""
    m = identity_matrix(rs.rank)
    for letter in word:
        m = compose(m, simple_reflection(rs, letter))
    return m


def _column(m: Matrix, i: int) -> Root:
    return tuple(row[i - 1] for row in m)


def _sends_positive(m: Matrix, i: int) -> bool:
    """True iff m sends the i-th simple root to a positive root."""
    col = _column(m, i)
    for c in col:
        if c > 0:
            return True
        if c < 0:
            return False
    raise AssertionError("zero column in a Weyl matrix")


def length_of(rs: RootSystem, m: Matrix) -> int:
    """Coxeter length: the number of positive roots sent to negative roots."""
    if len(m) != rs.rank:
        raise DimensionMismatch(f"{len(m)}x{len(m)} matrix in a rank-{rs.rank} system")
    count = 0
    for r in rs.positive_roots:
        image = apply_matrix(m, r)
        if image not in rs.root_index:
            assert negate(image) in rs.root_index
            count += 1
    return count


def descents(rs: RootSystem, m: Matrix) -> list[int]:
    """Letters i with l(m.S_i) < l(m), i.e. m sends the i-th simple root negative."""
    return [i for i in range(1, rs.rank + 1) if not _sends_positive(m, i)]


@lru_cache(maxsize=None)
def longest_element(rs: RootSystem) -> Matrix:
    """The longest element: the unique element sending every positive root negative.

    Built greedily: while some simple root is still sent to a positive root,
    multiply on the right by the simple reflection of the smallest such index.
    Each step increases the length by one, so the walk stops after exactly
    ``len(rs.positive_roots)`` steps.
    """
    m = identity_matrix(rs.rank)
    for _ in range(len(rs.positive_roots)):
        i = next(j for j in range(1, rs.rank + 1) if _sends_positive(m, j))
        m = compose(m, simple_reflection(rs, i))
    assert not any(_sends_positive(m, j) for j in range(1, rs.rank + 1))
    return m


@dataclass(frozen=True)
class LongestClassification:
    """How the longest element acts: minus the identity, or minus a diagram
    automorphism given as a 1-based permutation of simple-root indices."""

    kind: str  # "minus_identity" or "minus_automorphism"
    automorphism: tuple[int, ...]


def classify_longest(rs: RootSystem) -> LongestClassification:
    """Classify the longest element as -P for a diagram automorphism P."""
    w0 = longest_element(rs)
    p = matrix_neg(w0)
    n = rs.rank
    perm = []
    for i in range(1, n + 1):
        col = _column(p, i)
        assert sum(abs(c) for c in col) == 1 and sum(col) == 1, (
            "minus the longest element must permute the simple roots"
        )
        perm.append(col.index(1) + 1)
    sigma = tuple(perm)
    kind = "minus_identity" if sigma == tuple(range(1, n + 1)) else "minus_automorphism"
    return LongestClassification(kind=kind, automorphism=sigma)


def reduced_word_of(rs: RootSystem, m: Matrix) -> tuple[int, ...]:
    """A canonical reduced word for m: repeatedly strip the smallest descent."""
    if len(m) != rs.rank:
        raise DimensionMismatch(f"{len(m)}x{len(m)} matrix in a rank-{rs.rank} system")
    letters: list[int] = []
    ident = identity_matrix(rs.rank)
    guard = len(rs.positive_roots) + 1
    while m != ident:
        if len(letters) >= guard:
            raise ValueError("matrix is not a Weyl group element")
        i = next(j for j in range(1, rs.rank + 1) if not _sends_positive(m, j))
        m = compose(m, simple_reflection(rs, i))
        letters.append(i)
    return tuple(reversed(letters))


def count_reduced_words(rs: RootSystem, m: Matrix, *, state_bound: int = 10**6) -> int:
    """The number of reduced words for m, by memoized descent recursion.

    ``count(identity) == 1`` and ``count(w)`` sums ``count(w.S_i)`` over the
    descents i of w.  The memo is bounded by ``state_bound`` distinct group
    elements; exceeding it raises TooLarge.
    """
    if len(m) != rs.rank:
        raise DimensionMismatch(f"{len(m)}x{len(m)} matrix in a rank-{rs.rank} system")
    memo: dict[Matrix, int] = {identity_matrix(rs.rank): 1}

    def count(w: Matrix) -> int:
        cached = memo.get(w)
        if cached is not None:
            return cached
        total = sum(count(compose(w, simple_reflection(rs, i))) for i in descents(rs, w))
        if len(memo) >= state_bound:
            raise TooLarge(f"reduced-word search exceeded {state_bound} states")
        memo[w] = total
        return total

    return count(m)


def preserves_form(rs: RootSystem, m: Matrix) -> bool:
    """True iff m preserves the doubled Gram pairing (is an orthogonal map)."""
    n = rs.rank
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            ei = rs.simple_root(i)
            ej = rs.simple_root(j)
            if pairing2(rs, apply_matrix(m, ei), apply_matrix(m, ej)) != pairing2(rs, ei, ej):
                return False
    return True
