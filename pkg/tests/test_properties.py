"""Property-based invariants over random systems, roots, and words."""
from __future__ import annotations

from hypothesis import given, settings
from hypothesis import strategies as st

from weyldecomp import (
    apply_matrix,
    compose,
    conjugation_identity_holds,
    dominance_leq,
    evaluate_word,
    identity_matrix,
    is_root,
    length_of,
    longest_element,
    pairing2,
    preserves_form,
    reduced_word_of,
    reflection_of,
    system,
)

TYPES = ["A1", "A2", "A3", "A4", "B2", "B3", "C2", "C3", "D3", "D4", "D5", "F4", "G2", "E6"]

systems = st.sampled_from(TYPES).map(system)


@st.composite
def system_and_word(draw, max_len: int = 10):
    rs = draw(systems)
    word = draw(st.lists(st.integers(1, rs.rank), max_size=max_len))
    return rs, word


@st.composite
def system_and_two_roots(draw):
    rs = draw(systems)
    a = draw(st.sampled_from(rs.positive_roots))
    b = draw(st.sampled_from(rs.positive_roots))
    return rs, a, b


@given(system_and_word())
def test_words_evaluate_to_form_preserving_matrices(data):
    rs, word = data
    m = evaluate_word(rs, word)
    assert preserves_form(rs, m)


@given(system_and_word())
def test_word_evaluation_is_multiplicative(data):
    rs, word = data
    cut = len(word) // 2
    left, right = word[:cut], word[cut:]
    assert evaluate_word(rs, word) == compose(
        evaluate_word(rs, left), evaluate_word(rs, right)
    )


@given(system_and_word())
def test_reduced_word_roundtrip_and_minimality(data):
    rs, word = data
    m = evaluate_word(rs, word)
    reduced = reduced_word_of(rs, m)
    assert evaluate_word(rs, reduced) == m
    assert len(reduced) == length_of(rs, m)
    assert len(reduced) <= len(word)


@given(system_and_word())
def test_length_is_subadditive_and_parity_preserving(data):
    rs, word = data
    m = evaluate_word(rs, word)
    assert length_of(rs, m) % 2 == len(word) % 2
    assert length_of(rs, m) <= len(word)


@given(system_and_word())
def test_longest_element_length_duality(data):
    rs, word = data
    m = evaluate_word(rs, word)
    w0 = longest_element(rs)
    assert length_of(rs, compose(w0, m)) == length_of(rs, w0) - length_of(rs, m)


@given(system_and_two_roots())
def test_pairing_is_symmetric(data):
    rs, a, b = data
    assert pairing2(rs, a, b) == pairing2(rs, b, a)


@given(system_and_two_roots())
def test_reflection_fixes_orthogonal_and_negates_own_root(data):
    rs, a, b = data
    s = reflection_of(rs, a)
    assert apply_matrix(s, a) == tuple(-c for c in a)
    if pairing2(rs, a, b) == 0:
        assert apply_matrix(s, b) == b


@given(system_and_two_roots())
def test_reflections_send_roots_to_roots(data):
    rs, a, b = data
    image = apply_matrix(reflection_of(rs, a), b)
    assert is_root(rs, image)
    assert pairing2(rs, image, image) == pairing2(rs, b, b)


@given(system_and_two_roots())
def test_conjugation_identity_property(data):
    rs, a, b = data
    if a == b:
        return
    assert conjugation_identity_holds(rs, a, b)


@given(system_and_two_roots())
def test_dominance_is_a_partial_order_on_roots(data):
    rs, a, b = data
    assert dominance_leq(a, a)
    if dominance_leq(a, b) and dominance_leq(b, a):
        assert a == b
    # every positive root sits below the highest root
    assert dominance_leq(a, rs.highest_root)


@given(systems)
@settings(max_examples=30)
def test_longest_element_is_an_involution_inverting_all_positives(rs):
    w0 = longest_element(rs)
    assert compose(w0, w0) == identity_matrix(rs.rank)
    for r in rs.positive_roots:
        assert all(c <= 0 for c in apply_matrix(w0, r))


@given(system_and_word())
def test_inverse_via_reversed_word(data):
    rs, word = data
    m = evaluate_word(rs, word)
    inv = evaluate_word(rs, list(reversed(word)))
    assert compose(m, inv) == identity_matrix(rs.rank)
    assert length_of(rs, m) == length_of(rs, inv)
