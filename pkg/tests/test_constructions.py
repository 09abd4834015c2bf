"""Products, wedges, smashes, quotients, pushouts, and their maps."""

import pytest

from nervelab.constructions import (
    basepoint_inclusion,
    boundary_simplex,
    constant_map,
    minimal_sphere,
    point,
    product,
    projections,
    pushout,
    quotient,
    quotient_map,
    smash,
    std_simplex,
    subcomplex_inclusion,
    wedge,
    wedge_fold,
    wedge_inclusion,
)
from nervelab.homology import homology_table
from nervelab.simplexes import Simplex
from nervelab.sset import SimplicialMap


def shuffle_count(p, q):
    # independent oracle for nondegenerate top cells of Delta^p x Delta^q:
    # lattice paths from (0,0) to (p,q)
    from math import comb
    return comb(p + q, p)


def test_product_of_intervals_has_two_shuffle_cells():
    P = product(std_simplex(1), std_simplex(1))
    assert len(P.rosters[2]) == shuffle_count(1, 1) == 2
    assert not P.validate()


def test_product_of_triangles_matches_shuffles():
    P = product(std_simplex(2, 4), std_simplex(2, 4))
    assert len(P.rosters[4]) == shuffle_count(2, 2) == 6
    assert not P.validate()


def test_product_with_point_is_identity(circle, pt):
    P = product(circle, pt)
    iso = SimplicialMap.from_simplex_fn(
        P, circle, lambda sx: _left_factor(P, sx), name="pr")
    assert iso.is_isomorphism()


def _left_factor(P, sx):
    from nervelab.simplexes import apply_word
    a, _ = P.label_of(sx)
    return Simplex(a.base, apply_word(a.word, sx.word))


def test_torus_homology(circle):
    T = product(circle, circle)
    table = homology_table(T)
    assert (table[1].betti, table[1].torsion) == (2, ())
    assert (table[2].betti, table[2].torsion) == (1, ())


def test_projections_are_simplicial(circle):
    D1 = std_simplex(1)
    P = product(circle, D1)
    p1, p2 = projections(P, circle, D1)
    assert not p1.verify() and not p2.verify()


def test_wedge_homology(circle):
    W = wedge(circle, circle)
    table = homology_table(W)
    assert (table[1].betti, table[1].torsion) == (2, ())
    assert W.pi0() == 1


def test_smash_of_circles(circle):
    S = smash(circle, circle)
    table = homology_table(S, reduced=True)
    assert table[1].is_zero()
    assert (table[2].betti, table[2].torsion) == (1, ())


def test_quotient_requires_closed_subset(circle):
    D2 = std_simplex(2)
    # a single edge without its endpoints is not closed under faces
    edge = D2.rosters[1][0]
    with pytest.raises(ValueError):
        quotient(D2, [edge])


def test_quotient_map_is_simplicial():
    D1 = std_simplex(1, 4)
    Q = quotient(D1, list(D1.rosters[0]))
    q = quotient_map(D1, Q)
    assert not q.verify()
    assert Q.nondegenerate_counts() == (1, 1, 0, 0, 0)


def test_pushout_circle_from_interval(pt):
    D1 = std_simplex(1)
    bd = boundary_simplex(1)
    f = subcomplex_inclusion(bd, D1)
    g = constant_map(bd, pt)
    P, inB, inC = pushout(f, g)
    assert not P.validate()
    assert not inB.verify() and not inC.verify()
    table = homology_table(P)
    assert (table[1].betti, table[1].torsion) == (1, ())


def test_pushout_along_identity_is_unchanged(circle, pt):
    # pushout of X <- pt -> pt collapses nothing new: result is X again
    i = basepoint_inclusion(pt, circle)
    g = SimplicialMap.identity(pt)
    P, inB, inC = pushout(i, g)
    cmp = SimplicialMap.from_simplex_fn(
        circle, P, lambda sx: P.simplex_of_label(
            circle.degree(sx), P.normalize_label("B", sx)), name="cmp")
    assert cmp.is_isomorphism()


def test_pushout_of_cones_is_suspension():
    # two intervals glued along their boundary: a circle; for X = S^0 the
    # suspension has H_1 = Z
    D1 = std_simplex(1)
    bd = boundary_simplex(1)
    f = subcomplex_inclusion(bd, D1)
    P, _, _ = pushout(f, f)
    table = homology_table(P)
    assert (table[1].betti, table[1].torsion) == (1, ())
    assert P.pi0() == 1


def test_pushout_rejects_non_injective_leg(circle, pt):
    collapse = constant_map(circle, pt)
    with pytest.raises(ValueError):
        pushout(collapse, SimplicialMap.identity(circle))


def test_minimal_sphere_is_clean():
    S2 = minimal_sphere(2)
    assert S2.nondegenerate_counts() == (1, 0, 1, 0, 0)
    assert not S2.validate()
    table = homology_table(S2)
    assert (table[2].betti, table[2].torsion) == (1, ())


def test_wedge_maps(circle):
    W = wedge(circle, circle)
    for side in ("L", "R"):
        inc = wedge_inclusion(W, side)
        assert not inc.verify()
        assert inc.is_injective()
    fold = wedge_fold(W)
    assert not fold.verify()


def test_basepoint_and_constant_maps(circle, pt):
    assert not basepoint_inclusion(pt, circle).verify()
    assert not constant_map(circle, pt).verify()


def test_iterated_products_validate_and_associate():
    from nervelab.constructions import simplicial_circle
    D1 = std_simplex(1, 3)
    S1 = simplicial_circle(3)
    left = product(product(S1, S1), D1)
    right = product(S1, product(S1, D1))
    assert not left.validate() and not right.validate()

    # associator via labels: ((a,b),c) -> (a,(b,c))
    P12 = product(S1, S1)
    P23 = product(S1, D1)

    def fn(n, lbl):
        pair12, c = lbl
        a, b = P12.label_of(pair12)  # already at degree n
        return (a, P23.simplex_of_label(n, (b, c)))

    iso = SimplicialMap.from_label_fn(left, right, fn, name="assoc")
    assert iso.is_isomorphism()
