"""Generated suites for the homological gluing and realization properties.

Realization: a bisimplicial map whose rows are all homology equivalences
through degree k has a diagonal that is one too.  Gluing: a map of pushout
squares (injective left legs) whose three comparison maps are homology
equivalences through k induces one on the pushouts.

"Homology equivalence through k" is measured on the algebraic cone:
connectivity(f) >= k, clamped to the degrees where the truncated complexes
are trustworthy.  Instances are enumerated deterministically from a small zoo
of pointed spaces and maps; each suite checks at least fifty.
"""

from nervelab.algebra import cyclic_monoid, monoid_map
from nervelab.bar import generalized_wedge, nerve, nerve_map, pointed_space_situation
from nervelab.bisset import BisimplicialMap, external_product
from nervelab.constructions import (
    basepoint_inclusion,
    boundary_simplex,
    constant_map,
    minimal_sphere,
    point,
    pushout,
    quotient,
    quotient_map,
    simplicial_circle,
    std_simplex,
    subcomplex_inclusion,
    wedge,
    wedge_fold,
    wedge_inclusion,
)
from nervelab.homology import map_homological_connectivity
from nervelab.sset import SimplicialMap

TRUNC = 3


def _zoo():
    pt = point(TRUNC)
    s1 = simplicial_circle(TRUNC)
    s2 = minimal_sphere(2, TRUNC)
    w = wedge(s1, s1)
    n2 = nerve(cyclic_monoid(2), TRUNC)
    n4 = nerve(cyclic_monoid(4), TRUNC)
    return pt, s1, s2, w, n2, n4


def pointed_maps():
    """A deterministic list of pointed simplicial maps of varied connectivity."""
    pt, s1, s2, w, n2, n4 = _zoo()
    maps = [
        SimplicialMap.identity(s1),
        SimplicialMap.identity(s2),
        SimplicialMap.identity(n2),
        constant_map(s1, pt),
        constant_map(s2, pt),
        constant_map(n2, pt),
        basepoint_inclusion(pt, s1),
        basepoint_inclusion(pt, s2),
        basepoint_inclusion(pt, n2),
        wedge_inclusion(w, "L"),
        wedge_inclusion(w, "R"),
        wedge_fold(w),
        constant_map(w, pt),
        nerve_map(monoid_map(cyclic_monoid(4), cyclic_monoid(2),
                             {"0": "0", "1": "1", "2": "0", "3": "1"}), n4, n2),
    ]
    for f in maps:
        assert not f.verify()
    return maps


# -- realization ----------------------------------------------------------------


def _wedge_bimap(f):
    BX = generalized_wedge(pointed_space_situation(f.source), TRUNC)
    BY = generalized_wedge(pointed_space_situation(f.target), TRUNC)

    def fn(p, q, lbl):
        return tuple(f.apply(x) for x in lbl)

    return BisimplicialMap.from_label_fn(BX, BY, fn, name=f"W({f.name})")


def _box_bimap(f, other, left):
    if left:
        B1 = external_product(f.source, other)
        B2 = external_product(f.target, other)

        def fn(p, q, lbl):
            return (f.apply(lbl[0]), lbl[1])
    else:
        B1 = external_product(other, f.source)
        B2 = external_product(other, f.target)

        def fn(p, q, lbl):
            return (lbl[0], f.apply(lbl[1]))

    return BisimplicialMap.from_label_fn(B1, B2, fn, name=f"box({f.name})")


def _realization_instances():
    s1 = simplicial_circle(TRUNC)
    n2 = nerve(cyclic_monoid(2), TRUNC)
    for f in pointed_maps():
        yield ("wedge-rows", f, _wedge_bimap(f))
        yield ("box-left-s1", f, _box_bimap(f, s1, left=True))
        yield ("box-right-s1", f, _box_bimap(f, s1, left=False))
        yield ("box-left-n2", f, _box_bimap(f, n2, left=True))


def test_realization_property_suite():
    checked = 0
    failures = []
    for tag, f, F in _realization_instances():
        assert F.verify() == []
        conns = []
        for p in range(F.depth[0] + 1):
            rm = F.row_map(p)
            conns.append(map_homological_connectivity(rm))
        k = min(c.lower() for c in conns)
        dconn = map_homological_connectivity(F.diagonal_map())
        bound = min(k, dconn.bound)
        if not dconn.is_at_least(bound):
            failures.append((tag, f.name, k, str(dconn)))
        checked += 1
    assert checked >= 50, checked
    assert not failures, failures


# -- gluing ----------------------------------------------------------------------


def _collapse_one_edge(bd2):
    sub = {bd2.rosters[1][0]}
    for xid in list(sub):
        for fc in bd2.faces[xid]:
            sub.add(fc.base)
    Q = quotient(bd2, sorted(sub))
    return quotient_map(bd2, Q)


def _induced_pushout_map(po1, po2, beta, gamma):
    def fn(sx):
        tag, inner = po1.label_of(sx)
        g = gamma if tag == "C" else beta
        return po2.simplex_of_label(
            po1.degree(sx), po2.normalize_label(tag, g.apply(inner)))

    return SimplicialMap.from_simplex_fn(po1, po2, fn, name="glued")


def _gluing_instances():
    """Maps of pushout squares (f1, g1, f2, g2, alpha, beta, gamma)."""
    pt = point(TRUNC)
    s1 = simplicial_circle(TRUNC)
    d1, bd1 = std_simplex(1, TRUNC), boundary_simplex(1, TRUNC)
    d2, bd2 = std_simplex(2, TRUNC), boundary_simplex(2, TRUNC)
    w = wedge(s1, s1)
    id_pt = SimplicialMap.identity(pt)
    out = []

    # family A: keep the legs, vary the C corner along h: A -> C'
    inclusions = [
        (subcomplex_inclusion(bd1, d1), bd1),
        (subcomplex_inclusion(bd2, d2), bd2),
        (basepoint_inclusion(pt, s1), pt),
        (basepoint_inclusion(pt, w), pt),
        (basepoint_inclusion(pt, d2), pt),
        (wedge_inclusion(w, "L"), s1),
    ]
    for incl, A in inclusions:
        id_A = SimplicialMap.identity(A)
        targets = [id_A]
        if A is not pt:
            targets.append(constant_map(A, pt))
        if A is bd2:
            targets.append(_collapse_one_edge(bd2))
        for h in targets:
            out.append((incl, id_A, incl, h,
                        SimplicialMap.identity(incl.target), id_A, h))

    # family B: wedges B v C -> B' v C' from pairs of pointed maps
    zoo = pointed_maps()
    for i, beta in enumerate(zoo):
        for j, gamma in enumerate(zoo):
            if (i + j) % 4:  # deterministic thinning
                continue
            f1 = basepoint_inclusion(pt, beta.source)
            f2 = basepoint_inclusion(pt, beta.target)
            g1 = basepoint_inclusion(pt, gamma.source)
            g2 = basepoint_inclusion(pt, gamma.target)
            out.append((f1, g1, f2, g2, beta, id_pt, gamma))

    # family C: collapse the attaching sphere (alpha varies too)
    for bd, d in ((bd1, d1), (bd2, d2)):
        alpha = constant_map(bd, pt)
        out.append((subcomplex_inclusion(bd, d), SimplicialMap.identity(bd),
                    basepoint_inclusion(pt, d), id_pt,
                    constant_map(d, d), alpha, constant_map(bd, pt)))
    return out


def test_gluing_property_suite():
    checked = 0
    failures = []
    for (f1, g1, f2, g2, beta, alpha, gamma) in _gluing_instances():
        # commuting map of spans: beta f1 = f2 alpha and gamma g1 = g2 alpha
        for n in range(alpha.depth + 1):
            for sx in alpha.source.all_simplices(n):
                assert beta.apply(f1.apply(sx)) == f2.apply(alpha.apply(sx))
                assert gamma.apply(g1.apply(sx)) == g2.apply(alpha.apply(sx))
        po1, _, _ = pushout(f1, g1)
        po2, _, _ = pushout(f2, g2)
        glued = _induced_pushout_map(po1, po2, beta, gamma)
        assert not glued.verify()
        k = min(map_homological_connectivity(alpha).lower(),
                map_homological_connectivity(beta).lower(),
                map_homological_connectivity(gamma).lower())
        gconn = map_homological_connectivity(glued)
        bound = min(k, gconn.bound)
        if not gconn.is_at_least(bound):
            failures.append((alpha.name, beta.name, gamma.name, k, str(gconn)))
        checked += 1
    assert checked >= 50, checked
    assert not failures, failures
