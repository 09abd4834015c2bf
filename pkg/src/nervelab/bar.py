"""Nerve, generalized wedge, cyclic bar construction, and the comparison maps.

All objects are produced degree-wise from explicit tuple labels.  The
overloaded product of two carrier elements (monoid multiplication vs. the
action on the carrier) is resolved by membership in the embedded submonoid,
and likewise for the outer monoid acting on wedge tuples: embedded
coordinates transform through the action on the submonoid, the distinguished
coordinate through the action on the carrier.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iproduct

from .algebra import (
    AxiomViolation,
    DiscreteMonoid,
    GAugmentedSituation,
    MonoidMap,
    OperationSituation,
    TwoSidedAction,
    check_action,
    semidirect_opsit,
)
from .bisset import BisimplicialSet, TrisimplicialRef, diagonal
from .sset import SimplicialMap, SimplicialSet, Violation


# -- nerve -------------------------------------------------------------------


def nerve(m: DiscreteMonoid, trunc, cap=None) -> SimplicialSet:
    """Nerve of a monoid: degree k is m^k with multiplying faces."""
    rosters = [list(iproduct(m.elements, repeat=k)) for k in range(trunc + 1)]

    def face(k, t, i):
        if i == 0:
            return t[1:]
        if i == k:
            return t[:-1]
        return t[:i - 1] + (m.mul(t[i - 1], t[i]),) + t[i + 1:]

    def degen(k, t, i):
        return t[:i] + (m.unit,) + t[i:]

    return SimplicialSet.from_explicit(f"N({m.name})", trunc, rosters, face,
                                       degen, basepoint=(), cap=cap)


def nerve_map(f: MonoidMap, source, target) -> SimplicialMap:
    return SimplicialMap.from_label_fn(
        source, target, lambda n, t: tuple(f(x) for x in t), name=f"N(f)")


# -- generalized wedge -------------------------------------------------------


def wedge_tuples(sit: OperationSituation, p):
    """Degree-p wedge roster: tuples in M^p with at most one coordinate
    outside the embedded submonoid."""
    if p == 0:
        return [()]
    image = [x for x in sit.carrier if x in sit.image]
    outside = [x for x in sit.carrier if x not in sit.image]
    out = list(iproduct(image, repeat=p))
    for i in range(p):
        for pre in iproduct(image, repeat=i):
            for m in outside:
                for post in iproduct(image, repeat=p - i - 1):
                    out.append(pre + (m,) + post)
    return out


def wedge_face(sit: OperationSituation, k, t, i):
    if i == 0:
        return t[1:]
    if i == k:
        return t[:-1]
    return t[:i - 1] + (sit.op(t[i - 1], t[i]),) + t[i + 1:]


def wedge_degen(sit: OperationSituation, k, t, i):
    return t[:i] + (sit.basepoint,) + t[i:]


def generalized_wedge_sset(sit: OperationSituation, trunc, cap=None) -> SimplicialSet:
    """The wedge axis of the generalized wedge, as a simplicial set."""
    rosters = [wedge_tuples(sit, p) for p in range(trunc + 1)]
    return SimplicialSet.from_explicit(
        f"W({sit.name})", trunc,
        rosters,
        lambda k, t, i: wedge_face(sit, k, t, i),
        lambda k, t, i: wedge_degen(sit, k, t, i),
        basepoint=(), cap=cap)


@dataclass(frozen=True)
class SimplicialSituation:
    """An operation situation per internal simplicial level.

    ``sits[l]`` is an operation situation on the level-l carriers; the
    ``m_face``/``m_degen`` callables move carrier elements between levels and
    are required to respect the embedded submonoids and the operations.
    """

    name: str
    trunc: int
    sits: tuple
    m_face: object   # (l, x, i) -> x at level l-1
    m_degen: object  # (l, x, i) -> x at level l+1


def constant_situation(sit: OperationSituation, trunc) -> SimplicialSituation:
    return SimplicialSituation(
        f"const({sit.name})", trunc, tuple(sit for _ in range(trunc + 1)),
        lambda l, x, i: x, lambda l, x, i: x)


def pointed_space_situation(M: SimplicialSet) -> SimplicialSituation:
    """The situation * Y M for a pointed simplicial set M.

    Level-l carrier elements are the canonical simplices of M in degree l;
    the embedded trivial monoid sits at the degenerate basepoint.
    """
    from .algebra import trivial_situation
    assert M.basepoint is not None, "M must be pointed"
    from .simplexes import Simplex
    sits = []
    for l in range(M.trunc + 1):
        base = Simplex(M.basepoint, tuple(range(l - 1, -1, -1)))
        sits.append(trivial_situation(M.all_simplices(l), base,
                                      name=f"*Y{M.name}[{l}]"))
    return SimplicialSituation(
        f"*Y{M.name}", M.trunc, tuple(sits),
        lambda l, x, i: M.face(x, i),
        lambda l, x, i: M.degeneracy(x, i))


def generalized_wedge(ssit, wedge_trunc, internal_trunc=None, cap=None) -> BisimplicialSet:
    """The generalized wedge bisimplicial set: wedge axis x internal axis.

    Accepts either a SimplicialSituation or a plain (discrete)
    OperationSituation, which is lifted to a constant one; the internal axis
    is then constant of truncation ``internal_trunc``.
    """
    if isinstance(ssit, OperationSituation):
        ssit = constant_situation(ssit, wedge_trunc if internal_trunc is None
                                  else internal_trunc)
    rosters = {}
    for p in range(wedge_trunc + 1):
        for l in range(ssit.trunc + 1):
            rosters[p, l] = wedge_tuples(ssit.sits[l], p)

    def hface(p, l, t, i):
        return wedge_face(ssit.sits[l], p, t, i)

    def hdegen(p, l, t, i):
        return wedge_degen(ssit.sits[l], p, t, i)

    def vface(p, l, t, i):
        return tuple(ssit.m_face(l, x, i) for x in t)

    def vdegen(p, l, t, i):
        return tuple(ssit.m_degen(l, x, i) for x in t)

    return BisimplicialSet.from_explicit(
        f"W({ssit.name})", (wedge_trunc, ssit.trunc), rosters,
        hface, vface, hdegen, vdegen, basepoint=(), cap=cap)


def composable_tuples(m: DiscreteMonoid, sub_elements, p):
    """Tuples whose iterated product is defined in the partial monoid where
    x*y exists iff one factor lies in the submonoid (left-to-right rule)."""
    sub = set(sub_elements)
    if m.unit not in sub:
        raise ValueError("submonoid must contain the unit")
    for a in sub:
        for b in sub:
            if m.mul(a, b) not in sub:
                raise ValueError("not closed under multiplication")
    out = []
    for t in iproduct(m.elements, repeat=p):
        acc = t[0] if p else m.unit
        ok = True
        for x in t[1:]:
            if acc in sub or x in sub:
                acc = m.mul(acc, x)
            else:
                ok = False
                break
        if ok:
            out.append(t)
    return out


# -- cyclic bar construction --------------------------------------------------


def cyclic_bar(g_monoid: DiscreteMonoid, action: TwoSidedAction, trunc,
               cap=None) -> SimplicialSet:
    """N^cy(G, X) for a finite two-sided G-set X; labels ((g_1..g_k), x)."""
    rosters = [[(gs, x) for gs in iproduct(g_monoid.elements, repeat=k)
                for x in action.carrier] for k in range(trunc + 1)]

    def face(k, lbl, i):
        gs, x = lbl
        if i == 0:
            return (gs[1:], action.r(x, gs[0]))
        if i == k:
            return (gs[:-1], action.l(gs[-1], x))
        return (gs[:i - 1] + (g_monoid.mul(gs[i - 1], gs[i]),) + gs[i + 1:], x)

    def degen(k, lbl, i):
        gs, x = lbl
        return (gs[:i] + (g_monoid.unit,) + gs[i:], x)

    return SimplicialSet.from_explicit(f"Ncy({g_monoid.name})", trunc, rosters,
                                       face, degen, cap=cap)


def cyclic_bar_simplicial(g_monoid: DiscreteMonoid, X: SimplicialSet,
                          level_actions, trunc, cap=None) -> BisimplicialSet:
    """N^cy of a constant monoid acting levelwise on a simplicial set.

    ``level_actions[l]`` is a TwoSidedAction of g_monoid on the degree-l
    simplices of X; the structure maps of X must be equivariant.
    """
    rosters = {}
    for k in range(trunc + 1):
        for l in range(X.trunc + 1):
            rosters[k, l] = [(gs, x) for gs in iproduct(g_monoid.elements, repeat=k)
                             for x in X.all_simplices(l)]

    def hface(k, l, lbl, i):
        gs, x = lbl
        act = level_actions[l]
        if i == 0:
            return (gs[1:], act.r(x, gs[0]))
        if i == k:
            return (gs[:-1], act.l(gs[-1], x))
        return (gs[:i - 1] + (g_monoid.mul(gs[i - 1], gs[i]),) + gs[i + 1:], x)

    def hdegen(k, l, lbl, i):
        gs, x = lbl
        return (gs[:i] + (g_monoid.unit,) + gs[i:], x)

    def vface(k, l, lbl, i):
        gs, x = lbl
        return (gs, X.face(x, i))

    def vdegen(k, l, lbl, i):
        gs, x = lbl
        return (gs, X.degeneracy(x, i))

    return BisimplicialSet.from_explicit(
        f"Ncy({g_monoid.name};{X.name})", (trunc, X.trunc), rosters,
        hface, vface, hdegen, vdegen, cap=cap)


# -- the outer action on wedge tuples ----------------------------------------


def _act_left(gsit: GAugmentedSituation, g, x):
    sit = gsit.sit
    if x in sit.image:
        return sit.embedding[gsit.on_h.l(g, sit.unembed[x])]
    return gsit.on_m.l(g, x)


def _act_right(gsit: GAugmentedSituation, x, g):
    sit = gsit.sit
    if x in sit.image:
        return sit.embedding[gsit.on_h.r(sit.unembed[x], g)]
    return gsit.on_m.r(x, g)


def wedge_action(gsit: GAugmentedSituation, p) -> TwoSidedAction:
    """The coordinatewise action of G on the degree-p wedge roster.

    Verified exhaustively (a failure is a hard error: the augmentation was
    not an action by endomorphisms of the situation).
    """
    G = gsit.g_monoid
    carrier = [tuple(t) for t in wedge_tuples(gsit.sit, p)]
    left = {(g, t): tuple(_act_left(gsit, g, x) for x in t)
            for g in G.elements for t in carrier}
    right = {(t, g): tuple(_act_right(gsit, x, g) for x in t)
             for g in G.elements for t in carrier}
    cset = set(carrier)
    for v in left.values():
        if v not in cset:
            raise RuntimeError(f"wedge action not closed: {v}")
    for v in right.values():
        if v not in cset:
            raise RuntimeError(f"wedge action not closed: {v}")
    act = check_action(G, carrier, left, right)
    if isinstance(act, AxiomViolation):
        raise RuntimeError(f"wedge action invalid: {act}")
    return act


def wedge_action_face_compatibility(gsit: GAugmentedSituation, P):
    """Check the G-action commutes with the wedge structure maps up to P."""
    out = []
    acts = [wedge_action(gsit, p) for p in range(P + 1)]
    sit = gsit.sit
    for p in range(1, P + 1):
        for g in gsit.g_monoid.elements:
            for t in acts[p].carrier:
                for i in range(p + 1):
                    lhs = wedge_face(sit, p, acts[p].l(g, t), i)
                    rhs = acts[p - 1].l(g, wedge_face(sit, p, t, i))
                    if lhs != rhs:
                        out.append(Violation(f"g.d_{i}", p, (g, t)))
                    lhs = wedge_face(sit, p, acts[p].r(t, g), i)
                    rhs = acts[p - 1].r(wedge_face(sit, p, t, i), g)
                    if lhs != rhs:
                        out.append(Violation(f"d_{i}.g", p, (g, t)))
    return out


# -- the comparison suite ------------------------------------------------------


def _prefix_products(m: DiscreteMonoid, gs):
    out, acc = [], m.unit
    for g in gs:
        acc = m.mul(acc, g)
        out.append(acc)
    return out


def _suffix_products(m: DiscreteMonoid, gs):
    out, acc = [], m.unit
    for g in reversed(gs):
        acc = m.mul(g, acc)
        out.append(acc)
    return list(reversed(out))


def diag_cyclic_wedge(gsit: GAugmentedSituation, trunc, cap=None) -> SimplicialSet:
    """diag N^cy(G, wedge(H Y M)): degree k is G^k x wedge^k, with the
    composite face maps (written out once, instead of routing through the
    trisimplicial object; see cyclic_wedge_trisimplicial for that path)."""
    G, sit = gsit.g_monoid, gsit.sit
    rosters = [[(gs, t) for gs in iproduct(G.elements, repeat=k)
                for t in wedge_tuples(sit, k)] for k in range(trunc + 1)]

    def face(k, lbl, i):
        gs, t = lbl
        if i == 0:
            return (gs[1:], tuple(_act_right(gsit, x, gs[0]) for x in t[1:]))
        if i == k:
            return (gs[:-1], tuple(_act_left(gsit, gs[-1], x) for x in t[:-1]))
        return (gs[:i - 1] + (G.mul(gs[i - 1], gs[i]),) + gs[i + 1:],
                t[:i - 1] + (sit.op(t[i - 1], t[i]),) + t[i + 1:])

    def degen(k, lbl, i):
        gs, t = lbl
        return (gs[:i] + (G.unit,) + gs[i:], t[:i] + (sit.basepoint,) + t[i:])

    return SimplicialSet.from_explicit(
        f"diagNcyW({G.name};{sit.name})", trunc, rosters, face, degen,
        basepoint=((), ()), cap=cap)


def intermediate_t(gsit: GAugmentedSituation, trunc, cap=None) -> SimplicialSet:
    """The simplicial set interpolating between the diagonal cyclic bar and
    the wedge of the semidirect situation.

    Same underlying sets as diag_cyclic_wedge; d_0 forgets, the middle faces
    twist only one wedge coordinate, d_k acts on the left.  The simplicial
    identities are verified; failure is a hard error.
    """
    G, sit = gsit.g_monoid, gsit.sit
    rosters = [[(gs, t) for gs in iproduct(G.elements, repeat=k)
                for t in wedge_tuples(sit, k)] for k in range(trunc + 1)]

    def face(k, lbl, i):
        gs, t = lbl
        if i == 0:
            return (gs[1:], t[1:])
        if i == k:
            return (gs[:-1], tuple(_act_left(gsit, gs[-1], x) for x in t[:-1]))
        new = sit.op(_act_right(gsit, t[i - 1], gs[i]), t[i])
        return (gs[:i - 1] + (G.mul(gs[i - 1], gs[i]),) + gs[i + 1:],
                t[:i - 1] + (new,) + t[i + 1:])

    def degen(k, lbl, i):
        gs, t = lbl
        return (gs[:i] + (G.unit,) + gs[i:], t[:i] + (sit.basepoint,) + t[i:])

    T = SimplicialSet.from_explicit(
        f"T({G.name};{sit.name})", trunc, rosters, face, degen,
        basepoint=((), ()), cap=cap)
    bad = T.validate()
    if bad:
        raise RuntimeError(f"intermediate object is not simplicial: {bad[0]}")
    return T


@dataclass
class ComparisonSuite:
    """The diagonal cyclic bar of a wedge, the wedge of the semidirect
    situation, and the comparison maps between them, for one instance."""

    gsit: GAugmentedSituation
    trunc: int
    source: SimplicialSet        # diag N^cy(G, wedge(H Y M))
    middle: SimplicialSet        # the intermediate object T
    target: SimplicialSet        # wedge(G |x (H Y M))
    semidirect: OperationSituation
    v: SimplicialMap
    w: SimplicialMap
    u: SimplicialMap

    def label_v(self, lbl):
        gs, t = lbl
        G = self.gsit.g_monoid
        pre = _prefix_products(G, gs)
        return (gs, tuple(_act_right(self.gsit, x, pre[i])
                          for i, x in enumerate(t)))

    def label_w(self, lbl):
        gs, t = lbl
        G = self.gsit.g_monoid
        suf = _suffix_products(G, gs)
        return tuple((gs[i], _act_left(self.gsit, suf[i], x))
                     for i, x in enumerate(t))

    def label_u(self, lbl):
        gs, t = lbl
        G = self.gsit.g_monoid
        pre = _prefix_products(G, gs)
        suf = _suffix_products(G, gs)
        return tuple(
            (gs[i], _act_left(self.gsit, suf[i],
                              _act_right(self.gsit, x, pre[i])))
            for i, x in enumerate(t))

    def shear_factors(self, n):
        """The per-degree factorizations v_n = r_1...r_n, w_n = l_n...l_1.

        Each r_i right-twists coordinates i..n by g_i, each l_i left-twists
        coordinates 1..i by g_i; products are read in application order.
        These are functions on degree-n labels, not simplicial maps.
        """
        gsit = self.gsit

        def r(i):
            def fn(lbl):
                gs, t = lbl
                return (gs, t[:i - 1] + tuple(_act_right(gsit, x, gs[i - 1])
                                              for x in t[i - 1:]))
            return fn

        def l(i):
            def fn(lbl):
                gs, t = lbl
                return (gs, tuple(_act_left(gsit, gs[i - 1], x)
                                  for x in t[:i]) + t[i:])
            return fn

        return [r(i) for i in range(1, n + 1)], [l(i) for i in range(1, n + 1)]

    def check_factorizations(self):
        """u = w.v and the shear factorizations, element by element."""
        out = []
        for n in range(self.trunc + 1):
            rs, ls = self.shear_factors(n)
            for lbl in (self.source.label_of(s) for s in self.source.all_simplices(n)):
                via_t = self.label_w(self.label_v(lbl))
                direct = self.label_u(lbl)
                if via_t != direct:
                    out.append(Violation("u = w.v", n, (lbl,)))
                acc = lbl
                for r in rs:  # v_n = r_1 r_2 ... r_n, read in application order
                    acc = r(acc)
                mid = self.label_v(lbl)
                if acc != mid:
                    out.append(Violation("v_n = r_1...r_n", n, (lbl,)))
                acc = mid
                for l in reversed(ls):  # w_n = l_n ... l_1: apply l_n first
                    acc = l(acc)
                if self._interleave(acc) != self.label_w(mid):
                    out.append(Violation("w_n = l_n...l_1", n, (lbl,)))
        return out

    @staticmethod
    def _interleave(lbl):
        gs, t = lbl
        return tuple((gs[i], t[i]) for i in range(len(gs)))

    def bijectivity(self):
        """u must be a bijection on every degree when G acts invertibly."""
        out = []
        for n in range(self.trunc + 1):
            seen = set()
            for s in self.source.all_simplices(n):
                seen.add(self.label_u(self.source.label_of(s)))
            targets = {self.target.label_of(s) for s in self.target.all_simplices(n)}
            if seen != targets:
                out.append(Violation("u degreewise bijection", n,
                                     (len(seen), len(targets))))
        return out


def comparison_suite(gsit: GAugmentedSituation, trunc, cap=None) -> ComparisonSuite:
    sd = semidirect_opsit(gsit)
    source = diag_cyclic_wedge(gsit, trunc, cap=cap)
    middle = intermediate_t(gsit, trunc, cap=cap)
    target = generalized_wedge_sset(sd, trunc, cap=cap)
    suite = ComparisonSuite(gsit, trunc, source, middle, target, sd,
                            None, None, None)
    suite.v = SimplicialMap.from_label_fn(
        source, middle, lambda n, lbl: suite.label_v(lbl), name="v")
    suite.w = SimplicialMap.from_label_fn(
        middle, target, lambda n, lbl: suite.label_w(lbl), name="w")
    suite.u = SimplicialMap.from_label_fn(
        source, target, lambda n, lbl: suite.label_u(lbl), name="u")
    return suite


def map_v(gsit: GAugmentedSituation, trunc, cap=None) -> SimplicialMap:
    """The comparison factor v: diag N^cy(G, wedge) -> T."""
    return comparison_suite(gsit, trunc, cap=cap).v


def map_w(gsit: GAugmentedSituation, trunc, cap=None) -> SimplicialMap:
    """The comparison factor w: T -> wedge of the semidirect situation."""
    return comparison_suite(gsit, trunc, cap=cap).w


def map_u(gsit: GAugmentedSituation, trunc, cap=None) -> SimplicialMap:
    """The comparison map u = w . v."""
    return comparison_suite(gsit, trunc, cap=cap).u


def cyclic_wedge_trisimplicial(gsit: GAugmentedSituation, bar_trunc,
                               wedge_trunc, internal_trunc) -> TrisimplicialRef:
    """N^cy(G, wedge(H Y M)) as a trisimplicial object with a constant
    internal axis (discrete inputs lifted levelwise)."""
    G, sit = gsit.g_monoid, gsit.sit
    rosters = {}
    for k in range(bar_trunc + 1):
        for p in range(wedge_trunc + 1):
            cell = [(gs, t) for gs in iproduct(G.elements, repeat=k)
                    for t in wedge_tuples(sit, p)]
            for l in range(internal_trunc + 1):
                rosters[k, p, l] = cell

    def face_fn(axis, degs, lbl, i):
        k, p, l = degs
        gs, t = lbl
        if axis == 0:  # cyclic bar axis, acting on the whole wedge tuple
            if i == 0:
                return (gs[1:], tuple(_act_right(gsit, x, gs[0]) for x in t))
            if i == k:
                return (gs[:-1], tuple(_act_left(gsit, gs[-1], x) for x in t))
            return (gs[:i - 1] + (G.mul(gs[i - 1], gs[i]),) + gs[i + 1:], t)
        if axis == 1:  # wedge axis
            return (gs, wedge_face(sit, p, t, i))
        return lbl  # internal axis is constant

    def degen_fn(axis, degs, lbl, i):
        k, p, l = degs
        gs, t = lbl
        if axis == 0:
            return (gs[:i] + (G.unit,) + gs[i:], t)
        if axis == 1:
            return (gs, wedge_degen(sit, p, t, i))
        return lbl

    return TrisimplicialRef(
        f"Ncy({G.name};W({sit.name}))", ("cyclic-bar", "wedge", "internal"),
        (bar_trunc, wedge_trunc, internal_trunc), rosters, face_fn, degen_fn)


# -- shear maps ---------------------------------------------------------------


@dataclass(frozen=True)
class ShearReport:
    monoid: str
    carrier_size: int
    bijective: bool
    witness: tuple | None  # two pairs with equal shear image, if any

    def __str__(self):
        if self.bijective:
            return f"shear({self.monoid}): bijective on {self.carrier_size} pairs"
        return f"shear({self.monoid}): not injective, {self.witness[0]} and " \
               f"{self.witness[1]} both map to {self.witness[2]}"


def shear_map(action: TwoSidedAction) -> ShearReport:
    """(g, x) -> (g, gx); bijective exactly when the action is invertible."""
    seen = {}
    witness = None
    for g in action.monoid.elements:
        for x in action.carrier:
            img = (g, action.l(g, x))
            if img in seen and witness is None:
                witness = (seen[img], (g, x), img)
            seen[img] = (g, x)
    total = len(action.monoid.elements) * len(action.carrier)
    return ShearReport(action.monoid.name, total,
                       witness is None and len(seen) == total, witness)


# -- naturality ---------------------------------------------------------------


@dataclass(frozen=True)
class SituationMap:
    """A map of operation situations (monoid part, carrier part)."""

    source: OperationSituation
    target: OperationSituation
    on_h: dict
    on_m: dict


def situation_map(source, target, on_h, on_m):
    H1, H2 = source.monoid, target.monoid
    if on_h[H1.unit] != H2.unit:
        return AxiomViolation("unit", (H1.unit,))
    for a in H1.elements:
        for b in H1.elements:
            if on_h[H1.mul(a, b)] != H2.mul(on_h[a], on_h[b]):
                return AxiomViolation("monoid-map", (a, b))
    for h in H1.elements:
        if on_m[source.embedding[h]] != target.embedding[on_h[h]]:
            return AxiomViolation("inclusion-compatibility", (h,))
        for m in source.carrier:
            if on_m[source.action.l(h, m)] != target.action.l(on_h[h], on_m[m]):
                return AxiomViolation("left-equivariance", (h, m))
            if on_m[source.action.r(m, h)] != target.action.r(on_m[m], on_h[h]):
                return AxiomViolation("right-equivariance", (m, h))
    return SituationMap(source, target, dict(on_h), dict(on_m))


def naturality_check(a: MonoidMap, f: SituationMap,
                     gsit1: GAugmentedSituation, gsit2: GAugmentedSituation,
                     trunc) -> list:
    """Verify u' . induced(a,f) = induced(a |x f) . u up to the truncation.

    ``a`` maps the outer monoids, ``f`` the situations; compatibility of f
    with the two outer actions via a is checked first.
    """
    out = []
    for g in gsit1.g_monoid.elements:
        for m in gsit1.sit.carrier:
            if f.on_m[gsit1.on_m.l(g, m)] != gsit2.on_m.l(a(g), f.on_m[m]):
                out.append(Violation("f left-compatible via a", 0, (g, m)))
            if f.on_m[gsit1.on_m.r(m, g)] != gsit2.on_m.r(f.on_m[m], a(g)):
                out.append(Violation("f right-compatible via a", 0, (m, g)))
        for h in gsit1.sit.monoid.elements:
            if f.on_h[gsit1.on_h.l(g, h)] != gsit2.on_h.l(a(g), f.on_h[h]):
                out.append(Violation("f_H left-compatible via a", 0, (g, h)))
            if f.on_h[gsit1.on_h.r(h, g)] != gsit2.on_h.r(f.on_h[h], a(g)):
                out.append(Violation("f_H right-compatible via a", 0, (h, g)))
    if out:
        return out
    s1 = comparison_suite(gsit1, trunc)
    s2 = comparison_suite(gsit2, trunc)

    def induced_source(lbl):
        gs, t = lbl
        return (tuple(a(g) for g in gs), tuple(f.on_m[x] for x in t))

    def induced_target(lbl):
        return tuple((a(g), f.on_m[x]) for (g, x) in lbl)

    for n in range(trunc + 1):
        for s in s1.source.all_simplices(n):
            lbl = s1.source.label_of(s)
            lhs = s2.label_u(induced_source(lbl))
            rhs = induced_target(s1.label_u(lbl))
            if lhs != rhs:
                out.append(Violation("u natural square", n, (lbl,)))
    return out
