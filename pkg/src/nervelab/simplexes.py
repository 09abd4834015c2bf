"""Canonical form for simplices and the degeneracy-word calculus.

Every simplex of a simplicial set factors uniquely as s_{i_k} ... s_{i_1} x
with x nondegenerate and i_k > ... > i_1 (Eilenberg-Zilber canonical form).
We store the id of x together with the word (i_k, ..., i_1); faces and
degeneracies of degenerate simplices are never tabulated but computed by
rewriting with the simplicial identities.
"""

from __future__ import annotations

from itertools import combinations


class Simplex:
    """A simplex written as a degeneracy word over a nondegenerate id.

    ``word`` is strictly decreasing and applied right-to-left: the simplex is
    s_{word[0]} s_{word[1]} ... s_{word[-1]} base.  Treated as immutable;
    the hash is precomputed since these are used as dict keys everywhere.
    """

    __slots__ = ("base", "word", "_hash")

    def __init__(self, base: str, word: tuple[int, ...] = ()):
        self.base = base
        self.word = word
        self._hash = hash((base, word))

    def __eq__(self, other):
        return (self is other or
                (type(other) is Simplex and self._hash == other._hash
                 and self.base == other.base and self.word == other.word))

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return self._hash

    def is_degenerate(self) -> bool:
        return bool(self.word)

    def key(self) -> str:
        if not self.word:
            return self.base
        return "s" + "s".join(str(i) for i in self.word) + "|" + self.base

    def __repr__(self) -> str:
        return self.key()


def insert_degeneracy(word: tuple[int, ...], j: int) -> tuple[int, ...]:
    """Canonical word for s_j composed onto an existing degeneracy word.

    Uses s_j s_i = s_{i+1} s_j (j <= i) to push s_j inward until the word is
    strictly decreasing again.
    """
    bigger = [i + 1 for i in word if i >= j]
    smaller = [i for i in word if i < j]
    return tuple(bigger + [j] + smaller)


def push_face(word: tuple[int, ...], i: int):
    """Push d_i through a degeneracy word.

    Returns ("deg", outer, rest) when d_i cancels some s_j (result is the
    degeneracies ``outer`` applied over the remaining word ``rest``, no face
    reaches the base), or ("face", outer, i') when the face d_{i'} survives to
    hit the base.  ``outer`` is strictly decreasing, outermost first.
    """
    outer = []
    for pos, j in enumerate(word):
        if i < j:
            outer.append(j - 1)
        elif i == j or i == j + 1:
            return ("deg", outer, list(word[pos + 1:]))
        else:  # i > j + 1: d_i s_j = s_j d_{i-1}
            outer.append(j)
            i -= 1
    return ("face", outer, i)


def apply_word(base_word: tuple[int, ...], outer) -> tuple[int, ...]:
    """Compose degeneracies ``outer`` (outermost first) onto ``base_word``."""
    if not outer:
        return base_word
    word = base_word
    for j in reversed(outer):
        word = insert_degeneracy(word, j)
    return word


def degeneracy_words(length: int, base_degree: int):
    """All canonical degeneracy words of a given length over a base degree.

    The j-th applied index (innermost first) must not exceed base_degree+j-1.
    """
    if length == 0:
        yield ()
        return
    top = base_degree + length
    for comb in combinations(range(top), length):  # ascending = application order
        if all(c <= base_degree + pos for pos, c in enumerate(comb)):
            yield tuple(reversed(comb))


def extract_common(word_a: tuple[int, ...], word_b: tuple[int, ...]):
    """Extract the maximal shared degeneracy word of a pair of simplices.

    A pair (s_A x, s_B y) is jointly degenerate iff A and B share an index;
    peeling the largest shared index repeatedly yields the canonical
    decomposition s_K (s_{A'} x, s_{B'} y) with A' and B' disjoint.
    Returns (K, A', B').
    """
    a, b = list(word_a), list(word_b)
    shared = []
    while True:
        common = set(a) & set(b)
        if not common:
            return tuple(shared), tuple(a), tuple(b)
        m = max(common)
        shared.append(m)
        a = [t - 1 if t > m else t for t in a if t != m]
        b = [t - 1 if t > m else t for t in b if t != m]
