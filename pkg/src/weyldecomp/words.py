"""Closed forms for conjugating one reflection by another, plus two word
identities among simple reflections in the A family.

For roots a (the conjugator) and b, the conjugate s_a . s_b . s_a is the
reflection in s_a(b).  When a and b are non-orthogonal and non-proportional,
s_a(b) is b -/+ k*a with k determined entirely by the squared lengths of a and
b and the sign of their inner product; ``classify_conjugation`` names these
cases and ``conjugated_root`` computes the resulting (positive) root directly.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import BadRange, NotARoot, Orthogonal, Proportional
from .rootsys import Root, RootSystem, is_root, negate, pairing2
from .weyl import Matrix, compose, evaluate_word, reflection_of


def positive_representative(rs: RootSystem, x: Root) -> Root:
    """The positive root among x and -x."""
    if x in rs.root_index:
        return x
    neg = negate(x)
    if neg in rs.root_index:
        return neg
    raise NotARoot(f"{x} is not a root of {rs.type}")


def conjugated_root(rs: RootSystem, delta: Root, tau: Root) -> Root:
    """The positive root r with s_delta . s_tau . s_delta == s_r."""
    for x in (delta, tau):
        if not is_root(rs, x):
            raise NotARoot(f"{x} is not a root of {rs.type}")
    c = 2 * pairing2(rs, delta, tau) // pairing2(rs, delta, delta)
    image = tuple(t - c * d for t, d in zip(tau, delta))
    return positive_representative(rs, image)


@dataclass(frozen=True)
class ConjugationCase:
    """A named conjugation pattern.

    ``rule`` records the squared-length pattern of (conjugator, target):
    LongLong, LongShort_B_F4, LongShort_G2, ShortLong_B_F4, ShortLong_C, or
    ShortLong_G2.  ``sign`` is Minus when the two roots have negative inner
    product (so the conjugate involves the sum b + k*a) and Plus otherwise
    (the difference b - k*a).  ``coefficient`` is that k.
    """

    rule: str
    sign: str
    coefficient: int


# (2(a,a), 2(b,b), |2(a,b)|) -> (rule name, coefficient k in  b -/+ k*a).
_CASE_TABLE: dict[tuple[int, int, int], tuple[str, int]] = {
    (4, 4, 2): ("LongLong", 1),
    (4, 2, 2): ("LongShort_B_F4", 1),
    (6, 2, 3): ("LongShort_G2", 1),
    (2, 4, 2): ("ShortLong_B_F4", 2),
    (4, 8, 4): ("ShortLong_C", 2),
    (2, 6, 3): ("ShortLong_G2", 3),
}


def classify_conjugation(rs: RootSystem, a: Root, b: Root) -> ConjugationCase | None:
    """Name the conjugation pattern for conjugator a and target b.

    Returns None when the pair falls outside the six tabulated patterns (for
    example two short roots of squared length 1, or two G2 long roots), in
    which case ``conjugated_root`` still applies but no closed-form name does.
    Proportional or orthogonal pairs are rejected with exceptions since no
    conjugation pattern is defined for them at all.
    """
    for x in (a, b):
        if not is_root(rs, x):
            raise NotARoot(f"{x} is not a root of {rs.type}")
    if b == a or b == negate(a):
        raise Proportional(f"{a} and {b} are proportional")
    p_ab = pairing2(rs, a, b)
    if p_ab == 0:
        raise Orthogonal(f"{a} and {b} are orthogonal")
    key = (pairing2(rs, a, a), pairing2(rs, b, b), abs(p_ab))
    entry = _CASE_TABLE.get(key)
    if entry is None:
        return None
    rule, k = entry
    sign = "Minus" if p_ab < 0 else "Plus"
    return ConjugationCase(rule=rule, sign=sign, coefficient=k)


def predicted_conjugate(rs: RootSystem, a: Root, b: Root, case: ConjugationCase) -> Root:
    """The closed-form conjugate for a classified pair: b + k*a or b - k*a."""
    k = case.coefficient if case.sign == "Minus" else -case.coefficient
    return positive_representative(rs, tuple(bc + k * ac for bc, ac in zip(b, a)))


def _check_range(rs: RootSystem, k: int, n: int, *, allow_equal: bool = False) -> None:
    if rs.family != "A":
        raise BadRange(f"identity defined in family A only, not {rs.type}")
    if not (1 <= k <= n <= rs.rank and (allow_equal or k < n)):
        op = "<=" if allow_equal else "<"
        raise BadRange(f"need 1 <= k {op} n <= {rs.rank}, got k={k}, n={n}")


def _interval_root(rs: RootSystem, k: int, n: int) -> Root:
    """The root a_k + a_(k+1) + ... + a_n."""
    return tuple(1 if k <= i <= n else 0 for i in range(1, rs.rank + 1))


def check_lambda_v(rs: RootSystem, k: int, n: int) -> bool:
    """Check the V-shaped rewriting of an interval word against its mirror.

    Compares  (s_k ... s_n)(s_(n-1) ... s_k)  with  (s_n ... s_k)(s_(k+1) ... s_n)
    as group elements, and checks that both equal the reflection in
    a_k + ... + a_n.  Requires an A-family system and 1 <= k <= n <= rank.
    """
    _check_range(rs, k, n, allow_equal=True)
    up_then_down = list(range(k, n + 1)) + list(range(n - 1, k - 1, -1))
    down_then_up = list(range(n, k - 1, -1)) + list(range(k + 1, n + 1))
    target = reflection_of(rs, _interval_root(rs, k, n))
    return (
        evaluate_word(rs, up_then_down) == target
        and evaluate_word(rs, down_then_up) == target
    )


def check_permutation_lemma(rs: RootSystem, k: int, n: int) -> bool:
    """Check the interval-reflection shuffle identity.

    Compares  s_(a_k+...+a_(n-1)) . (s_n s_(n-1) ... s_k)  with
    (s_(n-1) ... s_(k+1)) . s_(a_k+...+a_n)  as group elements.  Requires an
    A-family system and 1 <= k < n <= rank.
    """
    _check_range(rs, k, n)
    left = compose(
        reflection_of(rs, _interval_root(rs, k, n - 1)),
        evaluate_word(rs, range(n, k - 1, -1)),
    )
    right = compose(
        evaluate_word(rs, range(n - 1, k, -1)),
        reflection_of(rs, _interval_root(rs, k, n)),
    )
    return left == right


def conjugation_identity_holds(rs: RootSystem, delta: Root, tau: Root) -> bool:
    """Dual-route check: closed-form conjugate vs literal matrix conjugation."""
    s_delta = reflection_of(rs, delta)
    s_tau = reflection_of(rs, tau)
    literal: Matrix = compose(compose(s_delta, s_tau), s_delta)
    return reflection_of(rs, conjugated_root(rs, delta, tau)) == literal
