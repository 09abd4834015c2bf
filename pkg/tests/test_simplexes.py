"""Word-calculus checks against a brute-force model.

The oracle: in the standard simplex every simplex IS its label (a weakly
increasing vertex tuple) and faces/degeneracies are plain tuple surgery, so
the canonical-form machinery can be compared against direct tuple operations
through the label correspondence.
"""

import random

from hypothesis import given, settings
from hypothesis import strategies as st

from nervelab.constructions import std_simplex
from nervelab.simplexes import (
    Simplex,
    degeneracy_words,
    extract_common,
    insert_degeneracy,
)


def test_insert_degeneracy_keeps_words_decreasing():
    word = ()
    for j in (0, 0, 1, 3, 2, 0):
        word = insert_degeneracy(word, j)
        assert all(a > b for a, b in zip(word, word[1:]))
    assert len(word) == 6


@given(st.lists(st.integers(0, 5), min_size=0, max_size=6))
def test_insert_degeneracy_matches_relation_count(js):
    # inserting j degeneracies one at a time always yields a word of that length
    word = ()
    degree = 0
    for j in js:
        j = j % (degree + 1)  # s_j needs 0 <= j <= degree
        word = insert_degeneracy(word, j)
        degree += 1
        assert all(a > b for a, b in zip(word, word[1:]))
    assert len(word) == len(js)


def test_degeneracy_words_count():
    # over a vertex, degree-n words are forced: exactly one word per length
    assert list(degeneracy_words(0, 0)) == [()]
    assert list(degeneracy_words(3, 0)) == [(2, 1, 0)]
    # over a 1-simplex there are n+1 degenerate simplices in degree n+... :
    # counts match the simplicial-circle roster sizes
    assert len(list(degeneracy_words(1, 1))) == 2
    assert len(list(degeneracy_words(2, 1))) == 3


def _ops_oracle(n_top=2, trunc=4, seed=0, rounds=300):
    """Drive random face/degeneracy strings through both representations."""
    X = std_simplex(n_top, trunc)
    rng = random.Random(seed)
    for _ in range(rounds):
        degree = rng.randint(0, trunc - 1)
        sx = rng.choice(X.all_simplices(degree))
        label = X.label_of(sx)
        for _step in range(4):
            degree = X.degree(sx)
            if degree >= 1 and (degree + 1 > X.trunc or rng.random() < 0.5):
                i = rng.randint(0, degree)
                sx = X.face(sx, i)
                label = label[:i] + label[i + 1:]
            elif degree + 1 <= X.trunc:
                i = rng.randint(0, degree)
                sx = X.degeneracy(sx, i)
                label = label[:i] + (label[i],) + label[i:]
            assert X.label_of(sx) == label, (sx, label)


def test_face_degeneracy_rewriting_matches_tuple_oracle():
    _ops_oracle(n_top=2, seed=1)
    _ops_oracle(n_top=3, seed=2)


def test_extract_common_removes_all_shared_directions():
    shared, a, b = extract_common((3, 1, 0), (3, 0))
    assert shared == (3, 0)
    assert set(a) & set(b) == set()
    # joint word (s_shared a', s_shared b') must reproduce the originals
    wa, wb = a, b
    for m in reversed(shared):
        wa = insert_degeneracy(wa, m)
        wb = insert_degeneracy(wb, m)
    assert wa == (3, 1, 0) and wb == (3, 0)


@given(st.lists(st.integers(0, 4), max_size=5), st.lists(st.integers(0, 4), max_size=5))
@settings(max_examples=200)
def test_extract_common_roundtrip(raw_a, raw_b):
    wa = wb = ()
    for j in raw_a:
        wa = insert_degeneracy(wa, j % (len(wa) + 1))
    for j in raw_b:
        wb = insert_degeneracy(wb, j % (len(wb) + 1))
    shared, a, b = extract_common(wa, wb)
    assert set(a) & set(b) == set()
    ra, rb = a, b
    for m in reversed(shared):
        ra = insert_degeneracy(ra, m)
        rb = insert_degeneracy(rb, m)
    assert (ra, rb) == (wa, wb)


def test_simplex_key_and_equality():
    assert Simplex("x", (2, 0)).key() == "s2s0|x"
    assert Simplex("x") == Simplex("x", ())
    assert Simplex("x", (1,)) != Simplex("x", (0,))
    assert hash(Simplex("y", (1, 0))) == hash(Simplex("y", (1, 0)))
