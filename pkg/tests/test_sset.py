"""Core simplicial sets: standard objects, identities, serialization."""

import pytest

from nervelab.constructions import (
    boundary_simplex,
    corrupt_face,
    disjoint_union,
    point,
    simplicial_circle,
    std_simplex,
)
from nervelab.homology import homology_table
from nervelab.simplexes import Simplex
from nervelab.sset import SimplicialSet, parse, serialize


def test_std_simplex_counts():
    assert std_simplex(1).nondegenerate_counts()[:2] == (2, 1)
    assert std_simplex(2).nondegenerate_counts()[:3] == (3, 3, 1)
    # the point has one simplex in every degree, all degenerate above 0
    P = point(4)
    assert P.nondegenerate_counts() == (1, 0, 0, 0, 0)
    assert all(P.size(n) == 1 for n in range(5))


def test_std_simplex_truncation_too_small():
    with pytest.raises(ValueError):
        std_simplex(3, trunc=2)


def test_simplicial_circle_shape(circle):
    assert circle.nondegenerate_counts() == (1, 1, 0, 0, 0)
    assert circle.pi0() == 1
    table = homology_table(circle, reduced=True)
    assert (table[1].betti, table[1].torsion) == (1, ())


def test_circle_equals_quotient_of_interval():
    from nervelab.constructions import quotient
    D1 = std_simplex(1, 4)
    ends = [xid for xid in D1.rosters[0]]
    Q = quotient(D1, ends)
    assert Q.nondegenerate_counts() == (1, 1, 0, 0, 0)
    assert not Q.validate()


def test_validate_clean_everywhere(circle):
    for X in (std_simplex(2), circle, boundary_simplex(2), point()):
        assert X.validate() == []


def test_validate_catches_corruption(z2):
    from nervelab.bar import nerve
    bad = corrupt_face(nerve(z2, 3))
    violations = bad.validate()
    assert violations
    assert any("d_" in v.law for v in violations)


def test_all_simplices_sizes(circle):
    # |S1_n| = n + 1
    for n in range(5):
        assert circle.size(n) == n + 1


def test_pi0_disjoint_circles(circle):
    two = disjoint_union(circle, circle)
    assert two.pi0() == 2
    assert not two.validate()


def test_euler_characteristic(circle):
    assert std_simplex(2).euler_characteristic() == 1
    assert circle.euler_characteristic() == 0
    assert boundary_simplex(2).euler_characteristic() == 0


def test_serialization_roundtrip(circle):
    from nervelab.constructions import product
    torus = product(circle, circle)  # face targets carry degeneracy words
    for X in (circle, std_simplex(2, 3), boundary_simplex(2, 3), torus):
        txt = serialize(X)
        Y = parse(txt)
        assert serialize(Y) == txt  # byte-stable after canonicalization
        assert Y.nondegenerate_counts() == X.nondegenerate_counts()
        assert not Y.validate()


def test_parse_rejects_garbage():
    with pytest.raises(ValueError):
        parse("nonsense")


def test_duplicate_ids_rejected():
    with pytest.raises(ValueError):
        SimplicialSet("dup", 1, [("a", "a"), ()], {})


def test_face_targets_must_exist():
    with pytest.raises(ValueError):
        SimplicialSet("bad", 1, [("v",), ("e",)],
                      {"e": (Simplex("v"), Simplex("ghost"))})


def test_from_explicit_id_collision_detected():
    # distinct labels whose sanitized ids coincide must be rejected
    with pytest.raises(ValueError):
        SimplicialSet.from_explicit(
            "clash", 0, [["x,y", "x.y"]],
            lambda n, lbl, i: lbl, lambda n, lbl, i: lbl)
