"""Orthogonal reflection decompositions of the longest element.

The longest element of every Weyl group factors as a product of reflections
in mutually orthogonal positive roots, one factor per -1 eigenvalue of its
action.  This module constructs the canonical such decomposition for each
family, verifies candidate decompositions against five independent
conditions, enumerates all maximal-orthogonal decompositions by exhaustive
search on small systems, and exposes the cross-rank recursion that produces
each canonical decomposition from a smaller system's.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import NoRelation, NotARoot, TooLarge, WrongFamily
from .rootsys import (
    Root,
    RootSystem,
    dominance_leq,
    highest_root_of,
    is_connected,
    is_root,
    pairing2,
    parabolic_embedding,
    support,
)
from .weyl import (
    Matrix,
    compose,
    identity_matrix,
    longest_element,
    reduced_word_of,
    reflection_of,
)


@dataclass(frozen=True)
class DecompositionFactor:
    """One reflection factor: its (positive) root and what the root is.

    ``kind`` is "simple" for a simple root and "highest" for the highest root
    of the connected standard parabolic on ``span`` (the root's support).
    """

    root: Root
    kind: str  # "simple" or "highest"

    @property
    def span(self) -> tuple[int, ...]:
        return support(self.root)


@dataclass(frozen=True)
class Decomposition:
    """An ordered tuple of mutually orthogonal reflection factors."""

    system: RootSystem
    factors: tuple[DecompositionFactor, ...]

    @property
    def roots(self) -> tuple[Root, ...]:
        return tuple(f.root for f in self.factors)

    def product(self) -> Matrix:
        m = identity_matrix(self.system.rank)
        for f in self.factors:
            m = compose(m, reflection_of(self.system, f.root))
        return m


def _factor_for(rs: RootSystem, root: Root) -> DecompositionFactor:
    kind = "simple" if sum(root) == 1 else "highest"
    return DecompositionFactor(root=root, kind=kind)


def decomposition_from_roots(rs: RootSystem, roots) -> Decomposition:
    """Wrap explicit root vectors as a Decomposition (tagging each factor)."""
    checked = []
    for r in roots:
        if r not in rs.root_index:
            raise NotARoot(f"{r} is not a positive root of {rs.type}")
        checked.append(_factor_for(rs, r))
    return Decomposition(system=rs, factors=tuple(checked))


def _expected_supports(rs: RootSystem) -> list[tuple[int, ...]]:
    """Supports of the canonical factors, simples first, then growing chains."""
    fam, n = rs.family, rs.rank
    simples: list[int] = []
    chains: list[tuple[int, ...]] = []
    if fam == "A":
        k = n // 2
        if n % 2 == 0:
            # intervals [k-i+1, k+i]
            chains = [tuple(range(k - i + 1, k + i + 1)) for i in range(1, k + 1)]
        else:
            simples = [k + 1]
            chains = [tuple(range(k - i + 1, k + i + 2)) for i in range(1, k + 1)]
    elif fam == "B":
        if n % 2 == 0:
            simples = list(range(1, n, 2))
            tails = range(2, n + 1, 2)
        else:
            simples = [n] + list(range(1, n - 1, 2))
            tails = range(3, n + 1, 2)
        chains = [tuple(range(n - m + 1, n + 1)) for m in tails]
    elif fam == "C":
        simples = [n]
        chains = [tuple(range(n - m + 1, n + 1)) for m in range(2, n + 1)]
    elif fam == "D":
        if n % 2 == 0:
            simples = [n, n - 1] + list(range(1, n - 2, 2))
            tails = range(4, n + 1, 2)
        else:
            simples = list(range(1, n - 1, 2))
            tails = range(3, n + 1, 2)
        chains = [tuple(range(n - m + 1, n + 1)) for m in tails]
    elif fam == "E" and n == 6:
        simples = [4]
        chains = [(3, 4, 5), (1, 3, 4, 5, 6), (1, 2, 3, 4, 5, 6)]
    elif fam == "E" and n == 7:
        simples = [2, 3, 5, 7]
        chains = [(2, 3, 4, 5), (2, 3, 4, 5, 6, 7), (1, 2, 3, 4, 5, 6, 7)]
    elif fam == "E" and n == 8:
        simples = [2, 3, 5, 7]
        chains = [
            (2, 3, 4, 5),
            (2, 3, 4, 5, 6, 7),
            (1, 2, 3, 4, 5, 6, 7),
            (1, 2, 3, 4, 5, 6, 7, 8),
        ]
    elif fam == "F":
        simples = [2]
        chains = [(2, 3), (2, 3, 4), (1, 2, 3, 4)]
    elif fam == "G":
        simples = [1]
        chains = [(1, 2)]
    supports = [tuple([i]) for i in simples] + chains
    return supports


def canonical_decomposition(rs: RootSystem) -> Decomposition:
    """The canonical maximal-orthogonal decomposition of the longest element.

    Simple factors come first; the remaining factors are highest roots of a
    dominance-increasing chain of connected standard parabolics, listed by
    ascending support.
    """
    roots = [highest_root_of(rs, J) for J in _expected_supports(rs)]
    return Decomposition(system=rs, factors=tuple(_factor_for(rs, r) for r in roots))


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of the five independent decomposition checks."""

    orthogonal: bool
    highest_root_ok: bool
    chain_ok: bool
    product_is_w0: bool
    count_ok: bool

    def all_ok(self) -> bool:
        return (
            self.orthogonal
            and self.highest_root_ok
            and self.chain_ok
            and self.product_is_w0
            and self.count_ok
        )


def verify_decomposition(rs: RootSystem, dec: Decomposition) -> VerificationReport:
    """Run the five checks on a candidate decomposition.

    orthogonal: the factor roots are pairwise orthogonal.
    highest_root_ok: every factor root is the highest root of the connected
        standard parabolic on its own support (simple roots trivially so).
    chain_ok: the non-simple factor roots are totally ordered by dominance.
    product_is_w0: the product of the factor reflections equals the longest
        element.
    count_ok: there are at most rank-many factors (pairwise orthogonal roots
        are linearly independent, so more can never occur in a valid set).
    """
    roots = dec.roots
    for r in roots:
        if not is_root(rs, r):
            raise NotARoot(f"{r} is not a root of {rs.type}")

    orthogonal = all(
        pairing2(rs, roots[i], roots[j]) == 0
        for i in range(len(roots))
        for j in range(i + 1, len(roots))
    )

    highest_ok = True
    for r in roots:
        J = support(r)
        if not is_connected(rs, J) or highest_root_of(rs, J) != r:
            highest_ok = False
            break

    non_simple = [r for r in roots if sum(r) > 1]
    chain_ok = all(
        dominance_leq(x, y) or dominance_leq(y, x)
        for i, x in enumerate(non_simple)
        for y in non_simple[i + 1 :]
    )

    product_is_w0 = dec.product() == longest_element(rs)
    count_ok = len(roots) <= rs.rank
    return VerificationReport(
        orthogonal=orthogonal,
        highest_root_ok=highest_ok,
        chain_ok=chain_ok,
        product_is_w0=product_is_w0,
        count_ok=count_ok,
    )


def _candidate_pool(rs: RootSystem) -> list[Root]:
    """Highest roots of all connected standard parabolics, deduplicated.

    Each pool root is recovered exactly once since its support determines it.
    """
    pool: list[Root] = []
    seen: set[Root] = set()
    n = rs.rank
    for mask in range(1, 1 << n):
        J = tuple(i + 1 for i in range(n) if mask >> i & 1)
        if not is_connected(rs, J):
            continue
        r = highest_root_of(rs, J)
        if support(r) == J and r not in seen:
            seen.add(r)
            pool.append(r)
    return sorted(pool, key=lambda r: (sum(r), r))


def enumerate_max_orthogonal(
    rs: RootSystem, *, rank_bound: int = 4, size_bound: int = 40
) -> list[Decomposition]:
    """Exhaustively enumerate decompositions satisfying the structural checks.

    Searches all sets of mutually orthogonal pool roots (highest roots of
    connected standard parabolics) whose non-simple members form a dominance
    chain and whose reflections multiply to the longest element, in any
    admissible order; each qualifying set is reported once, factors ordered
    simples-first then by ascending height, and the result list is itself
    sorted by those factor sequences.  Refuses systems that are large in both
    rank and root count: allowed when rank <= rank_bound or the positive root
    count is <= size_bound.
    """
    npos = len(rs.positive_roots)
    if rs.rank > rank_bound and npos > size_bound:
        raise TooLarge(
            f"{rs.type} has rank {rs.rank} > {rank_bound} and {npos} > {size_bound} "
            "positive roots; raise the bounds to search anyway"
        )
    pool = _candidate_pool(rs)
    w0 = longest_element(rs)
    refl = {r: reflection_of(rs, r) for r in pool}
    results: list[tuple[Root, ...]] = []

    def extend(start: int, chosen: list[Root], product: Matrix) -> None:
        if product == w0:
            results.append(tuple(chosen))
            return  # a strict superset of reflections cannot multiply to w0 again
        for idx in range(start, len(pool)):
            r = pool[idx]
            if any(pairing2(rs, r, c) != 0 for c in chosen):
                continue
            if sum(r) > 1:
                comparable = all(
                    sum(c) == 1 or dominance_leq(c, r) or dominance_leq(r, c)
                    for c in chosen
                )
                if not comparable:
                    continue
            chosen.append(r)
            extend(idx + 1, chosen, compose(product, refl[r]))
            chosen.pop()

    extend(0, [], identity_matrix(rs.rank))
    decs = []
    for roots in sorted(
        sorted(roots, key=lambda r: (sum(r) > 1, sum(r), r)) for roots in results
    ):
        decs.append(decomposition_from_roots(rs, roots))
    return decs


# Cross-rank recursion table: for each eligible type, the index set carrying
# the smaller system whose canonical decomposition seeds this one, and how
# many trailing reflections complete it.
def _recursion_plan(rs: RootSystem):
    fam, n = rs.family, rs.rank
    if fam == "A" and n >= 3:
        return tuple(range(2, n)), "highest_only"
    if fam == "B" and n >= 4:
        return tuple(range(3, n + 1)), "highest_and_first"
    if fam == "C" and n >= 3:
        return tuple(range(2, n + 1)), "highest_only"
    if fam == "D" and n >= 6:
        return tuple(range(3, n + 1)), "highest_and_first"
    if fam == "E" and n == 6:
        return (1, 3, 4, 5, 6), "highest_only"
    if fam == "E" and n == 7:
        return (2, 3, 4, 5, 6, 7), "highest_only"
    if fam == "E" and n == 8:
        return (1, 2, 3, 4, 5, 6, 7), "highest_only"
    if fam == "F":
        return (2, 3, 4), "highest_only"
    raise NoRelation(f"no cross-rank recursion is defined for {rs.type}")


def recursion_relation_check(rs: RootSystem) -> bool:
    """Check that the canonical decomposition satisfies its recursion relation.

    The longest element factors as (image of the smaller system's longest
    element under the parabolic embedding) times a short tail: the reflection
    in the full highest root, together with the first simple reflection in the
    families whose parabolic drops two nodes.  Both tail orders are accepted,
    as the tail reflections commute with each other but orderings against the
    embedded part differ per family.
    """
    J, tail_kind = _recursion_plan(rs)
    inner, index_map = parabolic_embedding(rs, J)
    inner_word = reduced_word_of(inner, longest_element(inner))
    embedded = identity_matrix(rs.rank)
    for letter in inner_word:
        embedded = compose(
            embedded, reflection_of(rs, rs.simple_root(index_map[letter]))
        )
    s_high = reflection_of(rs, rs.highest_root)
    tails = [s_high]
    if tail_kind == "highest_and_first":
        s_first = reflection_of(rs, rs.simple_root(1))
        assert compose(s_high, s_first) == compose(s_first, s_high), (
            "tail reflections must commute (first simple root is orthogonal "
            "to the highest root here)"
        )
        tails = [compose(s_high, s_first), compose(s_first, s_high)]
    w0 = longest_element(rs)
    return any(
        compose(embedded, tail) == w0 or compose(tail, embedded) == w0
        for tail in tails
    )


@dataclass(frozen=True)
class ParabolicTower:
    """The ascending chain of connected standard parabolics underlying the
    canonical decomposition, as 1-based index sets ending at the full set
    when the full diagram appears as a factor support."""

    system: RootSystem
    supports: tuple[tuple[int, ...], ...]


def _tower_is_seeded(rs: RootSystem) -> bool:
    """Whether the canonical tower starts from the singleton support of the
    first simple factor rather than from the smallest chain support."""
    fam, n = rs.family, rs.rank
    if fam in ("A", "B"):
        return n % 2 == 1
    if fam == "C" or fam == "F" or fam == "G":
        return True
    if fam == "E":
        return n in (6, 7)
    return False  # D even/odd and E8 start at their smallest chain support


def parabolic_tower(rs: RootSystem) -> ParabolicTower:
    """The dominance tower of supports behind the canonical decomposition.

    The tower lists the chain-factor supports in ascending order; when the
    decomposition leads with a lone simple factor that nests inside the
    smallest chain support, that singleton is prepended as the seed.  The
    seed is always the first simple factor of the decomposition itself: in
    E6 this is {4} (the branch node), the only simple factor whose singleton
    sits inside the smallest chain support {3,4,5} -- a seed taken from the
    outer node 1 would not nest and is therefore not used.
    """
    dec = canonical_decomposition(rs)
    chains = [f.span for f in dec.factors if f.kind == "highest"]
    supports: list[tuple[int, ...]] = []
    if _tower_is_seeded(rs):
        first_simple = next(f for f in dec.factors if f.kind == "simple")
        supports.append(first_simple.span)
    supports.extend(chains)
    return ParabolicTower(system=rs, supports=tuple(supports))


def epsilon_factorization(rs: RootSystem) -> tuple[Root, ...]:
    """The coordinate-frame factorization of the longest element for B and C.

    Returns n mutually orthogonal roots whose reflections multiply to the
    longest element: the tail sums a_i + ... + a_n in family B, and their
    long-root counterparts 2(a_i + ... + a_(n-1)) + a_n (with a_n itself last)
    in family C.  These are generally not highest roots of parabolics, so
    they form a second, different maximal orthogonal set.
    """
    fam, n = rs.family, rs.rank
    if fam == "B":
        roots = [
            tuple(1 if j >= i else 0 for j in range(1, n + 1)) for i in range(1, n + 1)
        ]
    elif fam == "C":
        roots = [
            tuple(2 if i <= j < n else (1 if j == n else 0) for j in range(1, n + 1))
            for i in range(1, n)
        ]
        roots.append(tuple(1 if j == n else 0 for j in range(1, n + 1)))
    else:
        raise WrongFamily(f"coordinate-frame factorization needs B or C, not {rs.type}")
    return tuple(roots)


def dn_orthogonality_pattern(rs: RootSystem) -> bool:
    """Check the D-family cross-pairing parity pattern.

    In D_n (n >= 4), the simple root a_i for i < n-2 pairs non-trivially with
    exactly two of the non-simple canonical factor roots when i is even, and
    with none when i is odd.  Returns True iff the pattern holds.
    """
    if rs.family != "D" or rs.rank < 4:
        raise WrongFamily(f"pattern is defined for D with rank >= 4, not {rs.type}")
    chains = [f.root for f in canonical_decomposition(rs).factors if f.kind == "highest"]
    for i in range(1, rs.rank - 2):
        hits = sum(1 for r in chains if pairing2(rs, rs.simple_root(i), r) != 0)
        expected = 2 if i % 2 == 0 else 0
        if hits != expected:
            return False
    return True
