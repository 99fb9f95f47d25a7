"""Crystallographic root systems in the simple-root basis, with exact integers.

Roots are integer coefficient vectors over the simple roots (Bourbaki
numbering, 1-based).  All inner products are exposed in doubled form
(``pairing2(x, y) == 2*(x, y)``) so that the half-integer values occurring in
G2, B and F4 stay exact integers; no floats or rationals appear anywhere.

Normalization per family (squared lengths): A/D/E roots 2; B long 2, short 1;
C short 2, long 4; F4 long 2, short 1; G2 short 1, long 3.  Hence the doubled
Gram matrix has diagonal 4 for every squared-length-2 root, 2 for
squared-length-1, 8 for squared-length-4, and 6 for squared-length-3.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .errors import (
    DimensionMismatch,
    DisconnectedSubset,
    InvalidType,
    NotARoot,
    UnrecognizedDiagram,
)

Root = tuple[int, ...]
Matrix = tuple[tuple[int, ...], ...]

_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3}


@dataclass(frozen=True)
class RootSystemType:
    """An admissible system type: family in A..G plus rank.

    Admissible pairs: A n>=1, B n>=2, C n>=2, D n>=3, E n in {6,7,8},
    F n=4, G n=2.
    """

    family: str
    rank: int

    def __post_init__(self) -> None:
        fam, n = self.family, self.rank
        admissible = (
            (fam in _MIN_RANK and n >= _MIN_RANK[fam])
            or (fam == "E" and n in (6, 7, 8))
            or (fam == "F" and n == 4)
            or (fam == "G" and n == 2)
        )
        if not admissible:
            raise InvalidType(f"no root system of type {fam}{n}")

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


def parse_type(text: str) -> RootSystemType:
    """Parse a type string such as ``"F4"`` or ``"A5"`` into a RootSystemType."""
    fam, digits = text[:1], text[1:]
    if fam not in "ABCDEFG" or not digits.isdigit():
        raise InvalidType(f"cannot parse root-system type {text!r}")
    return RootSystemType(fam, int(digits))


@dataclass(frozen=True, eq=False)
class RootSystem:
    """A constructed root system.

    ``gram2`` is the doubled Gram matrix of the simple roots,
    ``positive_roots`` lists every positive root ordered by height and then
    lexicographically by coefficient vector, and ``root_index`` maps each
    positive root to its position in that list.  Instances are immutable and
    shared: :func:`build_root_system` caches them per type.
    """

    type: RootSystemType
    gram2: Matrix
    positive_roots: tuple[Root, ...] = field(repr=False)
    root_index: dict[Root, int] = field(repr=False)

    @property
    def rank(self) -> int:
        return self.type.rank

    @property
    def family(self) -> str:
        return self.type.family

    @property
    def highest_root(self) -> Root:
        """The dominance-maximal positive root (last in enumeration order)."""
        return self.positive_roots[-1]

    def simple_root(self, i: int) -> Root:
        """The i-th simple root (1-based) as a coefficient vector."""
        if not 1 <= i <= self.rank:
            raise DimensionMismatch(f"simple-root index {i} outside 1..{self.rank}")
        return tuple(1 if j == i - 1 else 0 for j in range(self.rank))


def _gram2_for(t: RootSystemType) -> Matrix:
    fam, n = t.family, t.rank
    diag = [4] * n
    edges: dict[tuple[int, int], int] = {}

    def chain(upto: int, weight: int = -2) -> None:
        for i in range(1, upto):
            edges[(i, i + 1)] = weight

    if fam == "A":
        chain(n)
    elif fam == "B":
        chain(n)
        diag[n - 1] = 2
    elif fam == "C":
        chain(n - 1)
        edges[(n - 1, n)] = -4
        diag[n - 1] = 8
    elif fam == "D":
        chain(n - 2)
        edges[(n - 2, n - 1)] = -2
        edges[(n - 2, n)] = -2
    elif fam == "E":
        edges[(1, 3)] = -2
        edges[(2, 4)] = -2
        for i in range(3, n):
            edges[(i, i + 1)] = -2
    elif fam == "F":
        edges[(1, 2)] = -2
        edges[(2, 3)] = -2
        edges[(3, 4)] = -1
        diag = [4, 4, 2, 2]
    elif fam == "G":
        edges[(1, 2)] = -3
        diag = [2, 6]

    g = [[0] * n for _ in range(n)]
    for i in range(n):
        g[i][i] = diag[i]
    for (i, j), w in edges.items():
        g[i - 1][j - 1] = w
        g[j - 1][i - 1] = w
    return tuple(tuple(row) for row in g)


def _pairing2_raw(gram2: Matrix, x: Root, y: Root) -> int:
    total = 0
    for i, xi in enumerate(x):
        if xi:
            row = gram2[i]
            total += xi * sum(row[j] * yj for j, yj in enumerate(y) if yj)
    return total


def _enumerate_positive_roots(gram2: Matrix, n: int) -> tuple[Root, ...]:
    """Enumerate all positive roots by height-by-height closure.

    A candidate x + a_i is accepted by the root-string test: with p the
    largest k such that x - k*a_i is a known root, the string through x has
    q = p - <x, a_i-check> further steps upward, and x + a_i is a root iff
    q >= 1.  Ordering is by height, ties broken lexicographically.
    """
    simples = [tuple(1 if j == i else 0 for j in range(n)) for i in range(n)]
    known: set[Root] = set(simples)
    ordered: list[Root] = sorted(simples)
    current = list(simples)
    while current:
        found: set[Root] = set()
        for x in current:
            for i, a in enumerate(simples):
                y = tuple(xc + ac for xc, ac in zip(x, a))
                if y in known or y in found:
                    continue
                p = 0
                z = tuple(xc - ac for xc, ac in zip(x, a))
                while z in known:
                    p += 1
                    z = tuple(zc - ac for zc, ac in zip(z, a))
                num = 2 * _pairing2_raw(gram2, a, x)
                den = _pairing2_raw(gram2, a, a)
                cartan, rem = divmod(num, den)
                assert rem == 0
                if p - cartan >= 1:
                    found.add(y)
        current = sorted(found)
        ordered.extend(current)
        known.update(found)
    return tuple(ordered)


@lru_cache(maxsize=None)
def build_root_system(t: RootSystemType) -> RootSystem:
    """Construct (and cache) the root system of an admissible type."""
    gram2 = _gram2_for(t)
    positive = _enumerate_positive_roots(gram2, t.rank)
    index = {r: i for i, r in enumerate(positive)}
    return RootSystem(type=t, gram2=gram2, positive_roots=positive, root_index=index)


def system(text: str) -> RootSystem:
    """Convenience: ``system("F4")`` builds the root system parsed from text."""
    return build_root_system(parse_type(text))


def negate(x: Root) -> Root:
    return tuple(-c for c in x)


def is_root(rs: RootSystem, x: Root) -> bool:
    """True iff x is a root (positive or negative) of rs."""
    return x in rs.root_index or negate(x) in rs.root_index


def support(x: Root) -> tuple[int, ...]:
    """The 1-based indices of the nonzero coefficients of x, ascending."""
    return tuple(i + 1 for i, c in enumerate(x) if c)


def height(x: Root) -> int:
    return sum(x)


def pairing2(rs: RootSystem, x: Root, y: Root) -> int:
    """The doubled inner product 2*(x, y); exact for all lattice vectors."""
    if len(x) != rs.rank or len(y) != rs.rank:
        raise DimensionMismatch(
            f"vectors of length {len(x)} and {len(y)} in a rank-{rs.rank} system"
        )
    return _pairing2_raw(rs.gram2, x, y)


def cartan_integer(rs: RootSystem, x: Root, a: Root) -> int:
    """The integer 2*(a, x)/(a, a) for a root ``a`` and lattice vector ``x``."""
    if not is_root(rs, a):
        raise NotARoot(f"{a} is not a root of {rs.type}")
    num = 2 * pairing2(rs, a, x)
    den = pairing2(rs, a, a)
    q, rem = divmod(num, den)
    assert rem == 0, "Cartan integer must be exact for lattice vectors"
    return q


def _adjacent(rs: RootSystem, i: int, j: int) -> bool:
    return i != j and rs.gram2[i - 1][j - 1] != 0


def is_connected(rs: RootSystem, indices: tuple[int, ...]) -> bool:
    """True iff the given simple-root indices span a connected subdiagram."""
    nodes = set(indices)
    if not nodes:
        return False
    seen = {min(nodes)}
    frontier = [min(nodes)]
    while frontier:
        i = frontier.pop()
        for j in nodes - seen:
            if _adjacent(rs, i, j):
                seen.add(j)
                frontier.append(j)
    return seen == nodes


def _check_index_set(rs: RootSystem, J) -> tuple[int, ...]:
    indices = tuple(sorted(set(J)))
    if not indices or any(not 1 <= i <= rs.rank for i in indices):
        raise DisconnectedSubset(
            f"index set {sorted(set(J))} is not a non-empty subset of 1..{rs.rank}"
        )
    return indices


def highest_root_of(rs: RootSystem, J) -> Root:
    """The highest root of the standard parabolic subsystem on index set J.

    J must be non-empty and connected in the Dynkin diagram; the result is
    the unique root supported inside J that dominates every root supported
    inside J.
    """
    indices = _check_index_set(rs, J)
    if not is_connected(rs, indices):
        raise DisconnectedSubset(f"index set {list(indices)} is disconnected in {rs.type}")
    members = set(indices)
    best: Root | None = None
    for r in rs.positive_roots:
        if all(i in members for i in support(r)):
            if best is None or height(r) > height(best):
                best = r
    assert best is not None
    return best


def dominance_leq(x: Root, y: Root) -> bool:
    """Componentwise partial order: True iff every coefficient of y - x is >= 0."""
    if len(x) != len(y):
        raise DimensionMismatch(f"vectors of length {len(x)} and {len(y)}")
    return all(yc - xc >= 0 for xc, yc in zip(x, y))


def _cartan_entry(rs: RootSystem, i: int, j: int) -> int:
    """Cartan integer <a_i, a_j-check> = 2*(a_i, a_j)/(a_j, a_j)."""
    num = 2 * rs.gram2[i - 1][j - 1]
    den = rs.gram2[j - 1][j - 1]
    q, rem = divmod(num, den)
    assert rem == 0
    return q


def _diagram_bijections(inner: RootSystem, outer: RootSystem, nodes: tuple[int, ...]):
    """All maps p -> nodes[...] with matching Cartan integers, as tuples."""
    k = inner.rank
    results: list[tuple[int, ...]] = []
    assignment: list[int] = []
    used: set[int] = set()

    def extend(p: int) -> None:
        if p > k:
            results.append(tuple(assignment))
            return
        for j in nodes:
            if j in used:
                continue
            ok = True
            for q in range(1, p):
                jq = assignment[q - 1]
                if (
                    _cartan_entry(inner, p, q) != _cartan_entry(outer, j, jq)
                    or _cartan_entry(inner, q, p) != _cartan_entry(outer, jq, j)
                ):
                    ok = False
                    break
            if ok:
                assignment.append(j)
                used.add(j)
                extend(p + 1)
                assignment.pop()
                used.remove(j)

    extend(1)
    return results


def parabolic_embedding(rs: RootSystem, J) -> tuple[RootSystem, dict[int, int]]:
    """Identify the abstract type of the parabolic subsystem on J.

    Returns the abstract root system of the induced diagram together with the
    map from its simple-root indices to the indices of ``rs`` (Bourbaki
    renumbering included).  When several families or bijections fit, the
    earliest family in A..G and the lexicographically smallest index map win,
    which keeps the result deterministic.
    """
    try:
        indices = _check_index_set(rs, J)
    except DisconnectedSubset as exc:
        raise UnrecognizedDiagram(str(exc)) from None
    if not is_connected(rs, indices):
        raise UnrecognizedDiagram(f"index set {list(indices)} is disconnected in {rs.type}")
    k = len(indices)
    for fam in "ABCDEFG":
        try:
            t = RootSystemType(fam, k)
        except InvalidType:
            continue
        inner = build_root_system(t)
        matches = _diagram_bijections(inner, rs, indices)
        if matches:
            best = min(matches)
            return inner, {p + 1: j for p, j in enumerate(best)}
    raise UnrecognizedDiagram(
        f"subdiagram on {list(indices)} of {rs.type} matches no admissible type"
    )


def format_root(x: Root) -> str:
    """Human-readable rendering, e.g. (0,1,2,0) -> ``"a2+2a3"``."""
    parts: list[str] = []
    for i, c in enumerate(x, start=1):
        if c == 0:
            continue
        sign = "-" if c < 0 else ("+" if parts else "")
        mag = abs(c)
        coeff = "" if mag == 1 else str(mag)
        parts.append(f"{sign}{coeff}a{i}")
    return "".join(parts) if parts else "0"
