"""Shared sweep lists and independently derived oracles for the test suite."""
from __future__ import annotations

from itertools import product

from weyldecomp import (
    Matrix,
    RootSystem,
    compose,
    evaluate_word,
    identity_matrix,
    simple_reflection,
    system,
)

# The full sweep of admissible types exercised by the acceptance criteria.
FULL_SWEEP = (
    [f"A{n}" for n in range(1, 9)]
    + [f"B{n}" for n in range(2, 9)]
    + [f"C{n}" for n in range(2, 9)]
    + [f"D{n}" for n in range(3, 9)]
    + ["E6", "E7", "E8", "F4", "G2"]
)

SMALL_SWEEP = ["A1", "A2", "A3", "A4", "B2", "B3", "C2", "C3", "D3", "D4", "F4", "G2"]

# Frozen oracle: positive-root counts from the classical closed formulas
# n(n+1)/2, n^2, n^2, n(n-1), plus the five exceptional constants.
POSITIVE_ROOT_COUNT = {
    "A1": 1, "A2": 3, "A3": 6, "A4": 10, "A5": 15, "A6": 21, "A7": 28, "A8": 36,
    "B2": 4, "B3": 9, "B4": 16, "B5": 25, "B6": 36, "B7": 49, "B8": 64,
    "C2": 4, "C3": 9, "C4": 16, "C5": 25, "C6": 36, "C7": 49, "C8": 64,
    "D3": 6, "D4": 12, "D5": 20, "D6": 30, "D7": 42, "D8": 56,
    "E6": 36, "E7": 63, "E8": 120, "F4": 24, "G2": 6,
}

# Frozen oracle: Weyl group orders (n+1)!, 2^n n!, 2^(n-1) n!, and the
# exceptional constants, for the types the exhaustive tests walk.
GROUP_ORDER = {
    "A1": 2, "A2": 6, "A3": 24, "A4": 120,
    "B2": 8, "B3": 48, "C3": 48, "D4": 192, "G2": 12,
}


def brute_force_reduced_word_count(rs: RootSystem, m: Matrix, length: int) -> int:
    """Count reduced words by trying every letter sequence of the given length."""
    hits = 0
    for word in product(range(1, rs.rank + 1), repeat=length):
        if evaluate_word(rs, word) == m:
            hits += 1
    return hits


def generate_group(rs: RootSystem) -> dict[Matrix, int]:
    """BFS over right multiplication: every element mapped to its word length."""
    gens = [simple_reflection(rs, i) for i in range(1, rs.rank + 1)]
    seen: dict[Matrix, int] = {identity_matrix(rs.rank): 0}
    frontier = [identity_matrix(rs.rank)]
    depth = 0
    while frontier:
        depth += 1
        nxt = []
        for m in frontier:
            for g in gens:
                mg = compose(m, g)
                if mg not in seen:
                    seen[mg] = depth
                    nxt.append(mg)
        frontier = nxt
    return seen


def build(t: str) -> RootSystem:
    return system(t)
