"""Symbolic Kan loop group of a reduced simplicial set.

The group in degree n is free on the (n+1)-simplices of the base modulo the
image of s_0.  Degreewise groups are infinite, so there is no homology here;
structure maps act on reduced words and identities are verified on random
samples.  The structure maps follow the standard convention

    d_0<x> = <d_1 x><d_0 x>^(-1),  d_i<x> = <d_{i+1} x> (i >= 1),
    s_i<x> = <s_{i+1} x>,          <s_0 y> = 1,

which every report carries in its header.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .simplexes import Simplex
from .sset import SimplicialSet

STRUCTURE_CONVENTION = ("d0<x>=<d1 x><d0 x>^-1; di<x>=<d(i+1) x> (i>=1); "
                        "si<x>=<s(i+1) x>; <s0 y>=1")


def reduce_word(pairs):
    """Cancel adjacent (g,+1)(g,-1) pairs; returns the reduced tuple."""
    out = []
    for g, e in pairs:
        if out and out[-1][0] == g and out[-1][1] == -e:
            out.pop()
        else:
            out.append((g, e))
    return tuple(out)


def multiply(a, b):
    return reduce_word(tuple(a) + tuple(b))


def invert(a):
    return tuple((g, -e) for g, e in reversed(a))


def word_str(w):
    if not w:
        return "1"
    return " ".join(g if e == 1 else f"{g}^-1" for g, e in w)


class FreeSimplicialGroup:
    """Free group levels on base simplices, with homomorphic structure maps."""

    def __init__(self, base: SimplicialSet):
        if len(base.rosters[0]) != 1:
            raise ValueError("Kan loop group needs a reduced base (one vertex)")
        self.base = base
        self.trunc = base.trunc - 1
        # generators in degree n: (n+1)-simplices of the base not of the form s_0 y
        self._simplex_of_key = {}
        self.generators = []
        for n in range(self.trunc + 1):
            gens = []
            for sx in base.all_simplices(n + 1):
                key = sx.key()
                self._simplex_of_key[n, key] = sx
                if 0 not in sx.word:
                    gens.append(key)
            self.generators.append(tuple(gens))

    def generator_count(self, n):
        return len(self.generators[n])

    def bracket(self, sx: Simplex):
        """<x>: a one-letter word, or the identity when x is an s_0 image."""
        if 0 in sx.word:
            return ()
        return ((sx.key(), 1),)

    def _gen_simplex(self, n, key):
        return self._simplex_of_key[n, key]

    def _map_word(self, word, n, gen_fn):
        out = ()
        for g, e in word:
            img = gen_fn(self._gen_simplex(n, g))
            out = multiply(out, img if e == 1 else invert(img))
        return out

    def face(self, n, word, i):
        """d_i on a degree-n word; lands in degree n-1."""
        assert 1 <= n <= self.trunc and 0 <= i <= n

        def on_gen(sx):
            if i == 0:
                return multiply(self.bracket(self.base.face(sx, 1)),
                                invert(self.bracket(self.base.face(sx, 0))))
            return self.bracket(self.base.face(sx, i + 1))

        return self._map_word(word, n, on_gen)

    def degeneracy(self, n, word, i):
        assert 0 <= i <= n and n + 1 <= self.trunc

        def on_gen(sx):
            return self.bracket(self.base.degeneracy(sx, i + 1))

        return self._map_word(word, n, on_gen)

    def random_word(self, n, rng, max_len=4):
        gens = self.generators[n]
        if not gens:
            return ()
        length = rng.randint(0, max_len)
        return reduce_word(tuple((rng.choice(gens), rng.choice((1, -1)))
                                 for _ in range(length)))


def kan_loop_group(X: SimplicialSet) -> FreeSimplicialGroup:
    return FreeSimplicialGroup(X)


@dataclass
class SampleReport:
    convention: str
    samples: int
    seed: int
    violations: list

    def ok(self):
        return not self.violations

    def __str__(self):
        status = "ok" if self.ok() else f"{len(self.violations)} violations"
        return (f"loop-group sample check [{self.convention}] "
                f"samples={self.samples} seed={self.seed}: {status}")


def sample_identity_check(G: FreeSimplicialGroup, samples=200, seed=0) -> SampleReport:
    """Randomized verification of the simplicial identities and of the
    homomorphism property of every structure map."""
    rng = random.Random(seed)
    bad = []
    degrees = [n for n in range(G.trunc + 1) if G.generators[n]]
    for _ in range(samples):
        if not degrees:
            break
        n = rng.choice(degrees)
        w = G.random_word(n, rng)
        v = G.random_word(n, rng)
        # homomorphism and inversion behaviour
        if n >= 1:
            i = rng.randint(0, n)
            if G.face(n, multiply(w, v), i) != multiply(G.face(n, w, i), G.face(n, v, i)):
                bad.append(("face-homomorphism", n, i, w, v))
            if G.face(n, invert(w), i) != invert(G.face(n, w, i)):
                bad.append(("face-inversion", n, i, w))
        if n + 1 <= G.trunc:
            j = rng.randint(0, n)
            if G.degeneracy(n, multiply(w, v), j) != multiply(
                    G.degeneracy(n, w, j), G.degeneracy(n, v, j)):
                bad.append(("degeneracy-homomorphism", n, j, w, v))
        # simplicial identities on the sampled word
        if n >= 2:
            for j in range(n + 1):
                dj = G.face(n, w, j)
                for i in range(j):
                    if G.face(n - 1, dj, i) != G.face(n - 1, G.face(n, w, i), j - 1):
                        bad.append(("didj", n, (i, j), w))
        if n + 1 <= G.trunc:
            for j in range(n + 1):
                sj = G.degeneracy(n, w, j)
                for i in range(n + 2):
                    lhs = G.face(n + 1, sj, i)
                    if i == j or i == j + 1:
                        rhs = w
                    elif i < j:
                        rhs = G.degeneracy(n - 1, G.face(n, w, i), j - 1)
                    else:
                        rhs = G.degeneracy(n - 1, G.face(n, w, i - 1), j)
                    if lhs != rhs:
                        bad.append(("dis j", n, (i, j), w))
        if n + 2 <= G.trunc:
            for j in range(n + 1):
                sj = G.degeneracy(n, w, j)
                for i in range(j + 1):
                    if G.degeneracy(n + 1, sj, i) != G.degeneracy(
                            n + 1, G.degeneracy(n, w, i), j + 1):
                        bad.append(("sisj", n, (i, j), w))
    return SampleReport(STRUCTURE_CONVENTION, samples, seed, bad)
