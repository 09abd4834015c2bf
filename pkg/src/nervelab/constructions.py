"""Standard simplicial sets and the categorical constructions on them.

Everything here goes through SimplicialSet.from_explicit: each object is
described by degree-wise labels with face/degeneracy formulas, and the engine
extracts the canonical nondegenerate form.
"""

from __future__ import annotations

from itertools import combinations_with_replacement

from .simplexes import Simplex, apply_word
from .sset import SimplicialMap, SimplicialSet

DEFAULT_TRUNC = 4


def _monotone_tuples(n, k):
    # order-preserving maps [k] -> [n], i.e. weakly increasing (k+1)-tuples
    return list(combinations_with_replacement(range(n + 1), k + 1))


def _tuple_face(k, t, i):
    return t[:i] + t[i + 1:]


def _tuple_degen(k, t, i):
    return t[:i] + (t[i],) + t[i:]


def std_simplex(n, trunc=None):
    """The simplicial n-simplex; labels are weakly increasing vertex tuples."""
    if trunc is None:
        trunc = max(n, DEFAULT_TRUNC)
    if trunc < n:
        raise ValueError(f"truncation {trunc} smaller than simplex dimension {n}")
    rosters = [_monotone_tuples(n, k) for k in range(trunc + 1)]
    return SimplicialSet.from_explicit(f"Delta{n}", trunc, rosters,
                                       _tuple_face, _tuple_degen, basepoint=(0,))


def point(trunc=DEFAULT_TRUNC):
    return std_simplex(0, trunc)


def boundary_simplex(n, trunc=None):
    """The boundary of the n-simplex (all proper faces)."""
    if trunc is None:
        trunc = max(n - 1, DEFAULT_TRUNC)
    full = tuple(range(n + 1))
    rosters = [[t for t in _monotone_tuples(n, k) if tuple(sorted(set(t))) != full]
               for k in range(trunc + 1)]
    return SimplicialSet.from_explicit(f"bdDelta{n}", trunc, rosters,
                                       _tuple_face, _tuple_degen, basepoint=(0,))


def simplicial_circle(trunc=DEFAULT_TRUNC):
    """Delta^1 / boundary: one vertex, one nondegenerate 1-simplex."""

    def collapse(t):
        return "*" if len(set(t)) == 1 else t

    rosters = []
    for k in range(trunc + 1):
        seen, row = set(), []
        for t in _monotone_tuples(1, k):
            lbl = collapse(t)
            if lbl not in seen:
                seen.add(lbl)
                row.append(lbl)
        rosters.append(row)

    def face(k, t, i):
        return "*" if t == "*" else collapse(_tuple_face(k, t, i))

    def degen(k, t, i):
        return "*" if t == "*" else collapse(_tuple_degen(k, t, i))

    return SimplicialSet.from_explicit("S1", trunc, rosters, face, degen, basepoint="*")


def discrete_space(elements, trunc=DEFAULT_TRUNC, basepoint=None, name=None):
    """The constant simplicial set on a finite set of vertex labels."""
    elements = list(elements)
    rosters = [[(e, k) for e in elements] for k in range(trunc + 1)]

    def face(k, lbl, i):
        return (lbl[0], k - 1)

    def degen(k, lbl, i):
        return (lbl[0], k + 1)

    return SimplicialSet.from_explicit(
        name or "disc", trunc, rosters, face, degen,
        basepoint=(basepoint, 0) if basepoint is not None else None)


# -- binary constructions -------------------------------------------------


def product(X, Y, name=None, cap=None):
    """Degreewise product; labels are pairs of canonical simplices."""
    trunc = min(X.trunc, Y.trunc)
    rosters = [[(a, b) for a in X.all_simplices(n) for b in Y.all_simplices(n)]
               for n in range(trunc + 1)]

    def face(n, lbl, i):
        return (X.face(lbl[0], i), Y.face(lbl[1], i))

    def degen(n, lbl, i):
        return (X.degeneracy(lbl[0], i), Y.degeneracy(lbl[1], i))

    bp = None
    if X.basepoint is not None and Y.basepoint is not None:
        bp = (Simplex(X.basepoint), Simplex(Y.basepoint))
    return SimplicialSet.from_explicit(name or f"({X.name}x{Y.name})", trunc,
                                       rosters, face, degen, basepoint=bp,
                                       cap=cap)


def projections(P, X, Y):
    """The two projection maps of a product built by :func:`product`."""

    def project(which, Z):
        def fn(sx):
            comp = P.label_of(sx)[which]
            return comp
        return SimplicialMap.from_simplex_fn(P, Z, fn, name=f"pr{which + 1}")

    return project(0, X), project(1, Y)


def disjoint_union(X, Y, name=None):
    trunc = min(X.trunc, Y.trunc)
    rosters = [[("L", a) for a in X.all_simplices(n)] +
               [("R", b) for b in Y.all_simplices(n)] for n in range(trunc + 1)]

    def face(n, lbl, i):
        tag, s = lbl
        return (tag, (X if tag == "L" else Y).face(s, i))

    def degen(n, lbl, i):
        tag, s = lbl
        return (tag, (X if tag == "L" else Y).degeneracy(s, i))

    return SimplicialSet.from_explicit(name or f"({X.name}+{Y.name})", trunc,
                                       rosters, face, degen)


def quotient(X, sub_ids, name=None):
    """Collapse the simplicial subset spanned by the given nondegenerate ids.

    ``sub_ids`` must be closed under faces (checked); the collapsed class
    becomes the basepoint.  Collapsing the empty subset adds a disjoint
    basepoint.
    """
    sub = set(sub_ids)
    for xid in sub:
        if xid not in X.degree_of:
            raise ValueError(f"unknown id {xid!r} in subset")
        for f in X.faces.get(xid, ()):
            if f.base not in sub:
                raise ValueError(
                    f"subset not closed under faces: {xid} has face over {f.base}")

    def collapse(sx):
        return "*" if sx.base in sub else sx

    rosters = []
    for n in range(X.trunc + 1):
        seen, row = set(), []
        for sx in X.all_simplices(n):
            lbl = collapse(sx)
            if lbl not in seen:
                seen.add(lbl)
                row.append(lbl)
        if not sub:
            row.append("*")
        rosters.append(row)

    def face(n, lbl, i):
        return "*" if lbl == "*" else collapse(X.face(lbl, i))

    def degen(n, lbl, i):
        return "*" if lbl == "*" else collapse(X.degeneracy(lbl, i))

    Q = SimplicialSet.from_explicit(name or f"{X.name}/A", X.trunc, rosters,
                                    face, degen, basepoint="*")
    Q._collapsed = sub
    return Q


def quotient_map(X, Q):
    """The collapse map X -> X/A for Q built by :func:`quotient`."""
    sub = Q._collapsed
    images = {}
    for n in range(min(X.trunc, Q.trunc) + 1):
        for xid in X.rosters[n]:
            if xid in sub:
                images[xid] = Q.simplex_of_label(n, "*")
            else:
                images[xid] = Q.simplex_of_label(n, Simplex(xid))
    return SimplicialMap(X, Q, images, name="collapse")


def minimal_sphere(n, trunc=None):
    """Delta^n / boundary: one vertex and one nondegenerate n-simplex."""
    D = std_simplex(n, trunc)
    full = tuple(range(n + 1))
    sub = [xid for deg in range(n + 1) for xid in D.rosters[deg]
           if D.label_of(Simplex(xid)) != full]
    S = quotient(D, sub, name=f"S{n}min")
    return S


def wedge(X, Y, name=None):
    """One-point union of pointed simplicial sets."""
    assert X.basepoint is not None and Y.basepoint is not None
    U = disjoint_union(X, Y)
    sub = [uid for uid in U.rosters[0]
           if U.label_of(Simplex(uid)) in (("L", Simplex(X.basepoint)),
                                           ("R", Simplex(Y.basepoint)))]
    W = quotient(U, sub, name=name or f"({X.name}v{Y.name})")
    W._wedge_parts = (U, X, Y)
    return W


def wedge_inclusion(W, side):
    """Inclusion of a summand into a wedge built by :func:`wedge`."""
    U, X, Y = W._wedge_parts
    Z = X if side == "L" else Y

    def fn(sx):
        n = Z.degree(sx)
        u_sx = U.simplex_of_label(n, (side, sx))
        lbl = "*" if u_sx.base in W._collapsed else u_sx
        return W.simplex_of_label(n, lbl)

    return SimplicialMap.from_simplex_fn(Z, W, fn, name=f"in{side}")


def wedge_fold(W, Z=None):
    """Fold map X v X -> X (both summands by the identity)."""
    U, X, Y = W._wedge_parts
    Z = Z or X
    images = {}
    for n in range(min(W.trunc, Z.trunc) + 1):
        for wid in W.rosters[n]:
            lbl = W.label_of(Simplex(wid))
            if lbl == "*":
                images[wid] = Simplex(Z.basepoint)
            else:
                tag, z_sx = U.label_of(lbl)
                images[wid] = Simplex(z_sx.base, apply_word(z_sx.word, lbl.word))
    return SimplicialMap(W, Z, images, name="fold")


def smash(X, Y, name=None):
    """Quotient of the product by the wedge of the axes."""
    assert X.basepoint is not None and Y.basepoint is not None
    P = product(X, Y)
    sub = [pid for roster in P.rosters for pid in roster
           if _touches_basepoint(P, X, Y, pid)]
    return quotient(P, sub, name=name or f"({X.name}^{Y.name})")


def _touches_basepoint(P, X, Y, pid):
    a, b = P.label_of(Simplex(pid))
    return a.base == X.basepoint or b.base == Y.basepoint


def pushout(f: SimplicialMap, g: SimplicialMap, name=None):
    """Pushout of B <-f- A -g-> C along an injective f.

    Returns (P, inB, inC).  B-simplices over the image of f are rerouted
    through g; this needs no derived correction because f is a cofibration.
    """
    A, B, C = f.source, f.target, g.target
    assert g.source is A
    if not f.is_injective():
        raise ValueError("pushout requires the first leg to be a levelwise injection")
    trunc = min(B.trunc, C.trunc, A.trunc)
    preimage = {}
    for n in range(trunc + 1):
        for aid in A.rosters[n]:
            img = f.nd_images[aid]
            assert not img.word, "injective map must preserve nondegeneracy"
            preimage[img.base] = aid

    def normalize(tag, sx):
        if tag == "C":
            return ("C", sx)
        if sx.base in preimage:
            ga = g.nd_images[preimage[sx.base]]
            return ("C", Simplex(ga.base, apply_word(ga.word, sx.word)))
        return ("B", sx)

    rosters = []
    for n in range(trunc + 1):
        seen, row = set(), []
        for sx in C.all_simplices(n):
            row.append(("C", sx))
            seen.add(("C", sx))
        for sx in B.all_simplices(n):
            lbl = normalize("B", sx)
            if lbl not in seen:
                seen.add(lbl)
                row.append(lbl)
        rosters.append(row)

    def face(n, lbl, i):
        tag, sx = lbl
        return normalize(tag, (C if tag == "C" else B).face(sx, i))

    def degen(n, lbl, i):
        tag, sx = lbl
        return normalize(tag, (C if tag == "C" else B).degeneracy(sx, i))

    bp = ("C", Simplex(C.basepoint)) if C.basepoint is not None else None
    P = SimplicialSet.from_explicit(name or f"({B.name}u{C.name})", trunc,
                                    rosters, face, degen, basepoint=bp)
    inB = SimplicialMap(B, P, {
        bid: P.simplex_of_label(B.degree_of[bid], normalize("B", Simplex(bid)))
        for n in range(trunc + 1) for bid in B.rosters[n]}, name="inB")
    inC = SimplicialMap(C, P, {
        cid: P.simplex_of_label(C.degree_of[cid], ("C", Simplex(cid)))
        for n in range(trunc + 1) for cid in C.rosters[n]}, name="inC")
    P.normalize_label = normalize
    return P, inB, inC


def subcomplex_inclusion(S, X, id_map=None):
    """Inclusion of a subcomplex whose nondegenerate ids match X's.

    ``id_map`` translates S-ids to X-ids when they differ (default identity
    on labels via the shared explicit labels).
    """
    def fn(sx):
        if id_map is not None:
            return Simplex(id_map[sx.base])
        lbl = S.label_of(sx)
        n = S.degree(sx)
        return X.simplex_of_label(n, lbl)

    return SimplicialMap.from_simplex_fn(S, X, fn, name=f"{S.name}incl")


def basepoint_inclusion(P, X):
    """The map from the point sending everything to X's basepoint chain."""
    assert X.basepoint is not None

    def fn(sx):
        n = P.degree(sx)
        return Simplex(X.basepoint, tuple(range(n - 1, -1, -1)))

    return SimplicialMap.from_simplex_fn(P, X, fn, name="base")


def constant_map(X, Y):
    """The pointed collapse of X onto Y's basepoint chain."""
    assert Y.basepoint is not None

    def fn(sx):
        n = X.degree(sx)
        return Simplex(Y.basepoint, tuple(range(n - 1, -1, -1)))

    return SimplicialMap.from_simplex_fn(X, Y, fn, name="const")


def corrupt_face(X, name=None):
    """Deliberately break one face entry (regression helper).

    Overwrites one face of one nondegenerate simplex with a sibling face and
    keeps the first replacement that actually violates an identity (some
    swaps happen to stay consistent).
    """
    for n in range(2, X.trunc + 1):
        for victim in X.rosters[n]:
            fs = X.faces[victim]
            for i in range(n + 1):
                for j in range(n + 1):
                    if fs[i] == fs[j]:
                        continue
                    faces = dict(X.faces)
                    broken = list(fs)
                    broken[i] = fs[j]
                    faces[victim] = tuple(broken)
                    out = SimplicialSet(name or f"{X.name}!corrupt", X.trunc,
                                        X.rosters, faces, basepoint=X.basepoint)
                    if out.validate():
                        return out
    raise ValueError("could not manufacture an inconsistent face table")
