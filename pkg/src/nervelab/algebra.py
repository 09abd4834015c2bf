"""Finite monoids, two-sided actions, operation situations, semidirect products.

Validation is exhaustive over the finite rosters.  Failed axioms come back as
AxiomViolation values (witness tuples), not exceptions, so callers can render
them; only re-validation of objects we constructed ourselves is a hard error.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations


@dataclass(frozen=True)
class AxiomViolation:
    law: str
    witness: tuple
    detail: str = ""

    def __str__(self):
        extra = f": {self.detail}" if self.detail else ""
        return f"{self.law} fails on {self.witness}{extra}"


@dataclass(frozen=True)
class DiscreteMonoid:
    name: str
    elements: tuple
    unit: object
    table: dict  # (a, b) -> c, total

    def mul(self, a, b):
        return self.table[a, b]

    def product(self, seq):
        acc = self.unit
        for x in seq:
            acc = self.table[acc, x]
        return acc

    def __repr__(self):
        return f"DiscreteMonoid({self.name}, order {len(self.elements)})"


def monoid_from_table(name, elements, unit, table):
    """Validate a multiplication table; returns the monoid or a witness."""
    elements = tuple(elements)
    elset = set(elements)
    if unit not in elset:
        return AxiomViolation("unit-in-roster", (unit,))
    for a in elements:
        for b in elements:
            c = table.get((a, b))
            if c is None or c not in elset:
                return AxiomViolation("totality", (a, b), f"product {c!r}")
    for a in elements:
        if table[unit, a] != a:
            return AxiomViolation("left-unit", (a,), f"1*{a} = {table[unit, a]}")
        if table[a, unit] != a:
            return AxiomViolation("right-unit", (a,), f"{a}*1 = {table[a, unit]}")
    for a in elements:
        for b in elements:
            ab = table[a, b]
            for c in elements:
                if table[ab, c] != table[a, table[b, c]]:
                    return AxiomViolation(
                        "associativity", (a, b, c),
                        f"({a}{b}){c} = {table[ab, c]} but {a}({b}{c}) = {table[a, table[b, c]]}")
    return DiscreteMonoid(name, elements, unit, dict(table))


@dataclass(frozen=True)
class MonoidMap:
    source: DiscreteMonoid
    target: DiscreteMonoid
    mapping: dict

    def __call__(self, x):
        return self.mapping[x]


def monoid_map(source, target, mapping):
    if mapping[source.unit] != target.unit:
        return AxiomViolation("unit-preservation", (source.unit,))
    for a in source.elements:
        for b in source.elements:
            if mapping[source.mul(a, b)] != target.mul(mapping[a], mapping[b]):
                return AxiomViolation("multiplicativity", (a, b))
    return MonoidMap(source, target, dict(mapping))


@dataclass(frozen=True)
class TwoSidedAction:
    """Compatible left and right actions of a monoid on a finite carrier."""

    monoid: DiscreteMonoid
    carrier: tuple
    left: dict   # (g, x) -> x
    right: dict  # (x, g) -> x

    def l(self, g, x):
        return self.left[g, x]

    def r(self, x, g):
        return self.right[x, g]


def check_action(monoid, carrier, left, right):
    """Exhaustive two-sided action validation; returns action or witness."""
    carrier = tuple(carrier)
    cset = set(carrier)
    for g in monoid.elements:
        for x in carrier:
            if left.get((g, x)) not in cset:
                return AxiomViolation("left-totality", (g, x))
            if right.get((x, g)) not in cset:
                return AxiomViolation("right-totality", (x, g))
    for x in carrier:
        if left[monoid.unit, x] != x:
            return AxiomViolation("left-unit", (x,))
        if right[x, monoid.unit] != x:
            return AxiomViolation("right-unit", (x,))
    for g in monoid.elements:
        for h in monoid.elements:
            gh = monoid.mul(g, h)
            for x in carrier:
                if left[g, left[h, x]] != left[gh, x]:
                    return AxiomViolation("left-associativity", (g, h, x),
                                          f"g(hx) = {left[g, left[h, x]]}, (gh)x = {left[gh, x]}")
                if right[right[x, g], h] != right[x, gh]:
                    return AxiomViolation("right-associativity", (x, g, h),
                                          f"(xg)h = {right[right[x, g], h]}, x(gh) = {right[x, gh]}")
                if right[left[g, x], h] != left[g, right[x, h]]:
                    return AxiomViolation("compatibility", (g, x, h),
                                          f"(gx)h = {right[left[g, x], h]}, g(xh) = {left[g, right[x, h]]}")
    return TwoSidedAction(monoid, carrier, dict(left), dict(right))


def translation_action(m: DiscreteMonoid) -> TwoSidedAction:
    left = {(g, x): m.mul(g, x) for g in m.elements for x in m.elements}
    right = {(x, g): m.mul(x, g) for g in m.elements for x in m.elements}
    act = check_action(m, m.elements, left, right)
    assert isinstance(act, TwoSidedAction)  # monoid laws guarantee it
    return act


def trivial_action(m: DiscreteMonoid, carrier) -> TwoSidedAction:
    carrier = tuple(carrier)
    left = {(g, x): x for g in m.elements for x in carrier}
    right = {(x, g): x for g in m.elements for x in carrier}
    return TwoSidedAction(m, carrier, left, right)


class OperationSituation:
    """A monoid H acting two-sidedly on M, with an embedding of H into M.

    The basepoint of M is the image of the unit (a convention this artifact
    fixes); ``op`` resolves the overloaded product of two carrier elements by
    membership in the embedded copy of H.
    """

    def __init__(self, monoid, action, embedding, name=None):
        self.monoid = monoid          # H
        self.action = action          # H acting on M
        self.embedding = dict(embedding)  # H elements -> carrier
        self.carrier = action.carrier
        self.name = name or f"{monoid.name}Y{len(self.carrier)}"
        self.image = {self.embedding[h] for h in monoid.elements}
        self.unembed = {v: h for h, v in self.embedding.items()}
        self.basepoint = self.embedding[monoid.unit]

    def in_image(self, x):
        return x in self.image

    def op(self, u, v):
        """The overloaded product: H-multiplication or the action on M."""
        if u in self.image:
            if v in self.image:
                return self.embedding[self.monoid.mul(self.unembed[u], self.unembed[v])]
            return self.action.l(self.unembed[u], v)
        if v in self.image:
            return self.action.r(u, self.unembed[v])
        raise ValueError(f"product {u!r}*{v!r} undefined: both outside the submonoid")

    def __repr__(self):
        return f"OperationSituation({self.name})"


def operation_situation(monoid, action, embedding, name=None):
    """Validate (H, M, iota); returns the situation or a witness."""
    if action.monoid is not monoid and action.monoid != monoid:
        return AxiomViolation("action-monoid-mismatch", (monoid.name,))
    seen = {}
    for h in monoid.elements:
        v = embedding.get(h)
        if v is None or v not in set(action.carrier):
            return AxiomViolation("embedding-totality", (h,))
        if v in seen:
            return AxiomViolation("embedding-injectivity", (seen[v], h))
        seen[v] = h
    for h in monoid.elements:
        for k in monoid.elements:
            if action.l(h, embedding[k]) != embedding[monoid.mul(h, k)]:
                return AxiomViolation("embedding-left-intertwine", (h, k))
            if action.r(embedding[k], h) != embedding[monoid.mul(k, h)]:
                return AxiomViolation("embedding-right-intertwine", (k, h))
    return OperationSituation(monoid, action, embedding, name=name)


def trivial_situation(carrier, basepoint, name=None):
    """The situation * Y M: trivial monoid embedded at the basepoint."""
    triv = monoid_from_table("*", ("1",), "1", {("1", "1"): "1"})
    act = trivial_action(triv, carrier)
    sit = operation_situation(triv, act, {"1": basepoint}, name=name)
    assert isinstance(sit, OperationSituation)
    return sit


def submonoid_situation(m: DiscreteMonoid, sub_elements, name=None):
    """The situation A Y M for a submonoid A of M acting by multiplication."""
    sub = tuple(sub_elements)
    sset = set(sub)
    if m.unit not in sset:
        return AxiomViolation("submonoid-unit", (m.unit,))
    for a in sub:
        for b in sub:
            if m.mul(a, b) not in sset:
                return AxiomViolation("submonoid-closure", (a, b))
    subm = monoid_from_table(f"{m.name}|sub", sub, m.unit,
                             {(a, b): m.mul(a, b) for a in sub for b in sub})
    assert isinstance(subm, DiscreteMonoid)
    left = {(a, x): m.mul(a, x) for a in sub for x in m.elements}
    right = {(x, a): m.mul(x, a) for a in sub for x in m.elements}
    act = check_action(subm, m.elements, left, right)
    assert isinstance(act, TwoSidedAction)
    return operation_situation(subm, act, {a: a for a in sub}, name=name)


@dataclass(frozen=True)
class GAugmentedSituation:
    """A monoid G acting on an operation situation H Y M from both sides."""

    g_monoid: DiscreteMonoid
    sit: OperationSituation
    on_h: TwoSidedAction  # G acting on the elements of H
    on_m: TwoSidedAction  # G acting on the carrier of M


def augment_situation(g_monoid, sit, on_h, on_m):
    """Validate all compatibility clauses of a G-action on H Y M."""
    H = sit.monoid
    lM, rM = sit.action.l, sit.action.r
    lh, rh, lm, rm = on_h.l, on_h.r, on_m.l, on_m.r
    # G acts on H through monoid endomorphisms
    for g in g_monoid.elements:
        if lh(g, H.unit) != H.unit:
            return AxiomViolation("g-fixes-unit-left", (g,))
        if rh(H.unit, g) != H.unit:
            return AxiomViolation("g-fixes-unit-right", (g,))
        for h in H.elements:
            for k in H.elements:
                if lh(g, H.mul(h, k)) != H.mul(lh(g, h), lh(g, k)):
                    return AxiomViolation("left-distributivity", (g, h, k))
                if rh(H.mul(h, k), g) != H.mul(rh(h, g), rh(k, g)):
                    return AxiomViolation("right-distributivity", (h, k, g))
    # G intertwines the H-operation on M (all four mixed clauses)
    for g in g_monoid.elements:
        for h in H.elements:
            for m in sit.carrier:
                if lm(g, lM(h, m)) != lM(lh(g, h), lm(g, m)):
                    return AxiomViolation("mixed g(hm)=(gh)(gm)", (g, h, m))
                if lm(g, rM(m, h)) != rM(lm(g, m), lh(g, h)):
                    return AxiomViolation("mixed g(mh)=(gm)(gh)", (g, m, h))
                if rm(lM(h, m), g) != lM(rh(h, g), rm(m, g)):
                    return AxiomViolation("mixed (hm)g=(hg)(mg)", (h, m, g))
                if rm(rM(m, h), g) != rM(rm(m, g), rh(h, g)):
                    return AxiomViolation("mixed (mh)g=(mg)(hg)", (m, h, g))
    # G acts by endomorphisms of the situation, so it must respect the
    # embedding; dropping this clause lets instances through on which the
    # wedge and cyclic-bar face maps provably break the simplicial identities.
    for g in g_monoid.elements:
        for h in H.elements:
            if lm(g, sit.embedding[h]) != sit.embedding[lh(g, h)]:
                return AxiomViolation("embedding-equivariance-left", (g, h))
            if rm(sit.embedding[h], g) != sit.embedding[rh(h, g)]:
                return AxiomViolation("embedding-equivariance-right", (g, h))
    return GAugmentedSituation(g_monoid, sit, on_h, on_m)


def pair_name(a, b):
    return f"({a}.{b})"


def semidirect_monoid(g_monoid, h_monoid, on_h):
    """G x H with multiplication (g,h)(g',h') = (gg', (h.g')(g.h')).

    The precondition (G acts on H in the category of monoids) is checked; a
    post-hoc associativity failure would indicate invalid input actions and
    is raised as a hard error.
    """
    for g in g_monoid.elements:
        if on_h.l(g, h_monoid.unit) != h_monoid.unit or on_h.r(h_monoid.unit, g) != h_monoid.unit:
            return AxiomViolation("action-not-unital-in-monoids", (g,))
        for h in h_monoid.elements:
            for k in h_monoid.elements:
                if on_h.l(g, h_monoid.mul(h, k)) != h_monoid.mul(on_h.l(g, h), on_h.l(g, k)):
                    return AxiomViolation("left-distributivity", (g, h, k))
                if on_h.r(h_monoid.mul(h, k), g) != h_monoid.mul(on_h.r(h, g), on_h.r(k, g)):
                    return AxiomViolation("right-distributivity", (h, k, g))
    elements = tuple((g, h) for g in g_monoid.elements for h in h_monoid.elements)
    table = {}
    for (g, h) in elements:
        for (g2, h2) in elements:
            table[(g, h), (g2, h2)] = (g_monoid.mul(g, g2),
                                       h_monoid.mul(on_h.r(h, g2), on_h.l(g, h2)))
    got = monoid_from_table(f"({g_monoid.name}|x{h_monoid.name})", elements,
                            (g_monoid.unit, h_monoid.unit), table)
    if isinstance(got, AxiomViolation):
        raise RuntimeError(f"semidirect product not associative: {got}")
    return got


def semidirect_opsit(gsit: GAugmentedSituation) -> OperationSituation:
    """The semidirect operation situation (G |x H) Y (G x M)."""
    G, sit = gsit.g_monoid, gsit.sit
    H = sit.monoid
    lM, rM = sit.action.l, sit.action.r
    lh, rh, lm, rm = gsit.on_h.l, gsit.on_h.r, gsit.on_m.l, gsit.on_m.r
    gh = semidirect_monoid(G, H, gsit.on_h)
    if isinstance(gh, AxiomViolation):
        raise RuntimeError(f"invalid augmentation: {gh}")
    carrier = tuple((g, m) for g in G.elements for m in sit.carrier)
    left, right = {}, {}
    for (g, h) in gh.elements:
        for (g2, m) in carrier:
            # (g,h).(g2,m) = (g g2, (h.g2) . (g.m))
            left[(g, h), (g2, m)] = (G.mul(g, g2), lM(rh(h, g2), lm(g, m)))
    for (g2, m) in carrier:
        for (g, h) in gh.elements:
            # (g2,m).(g,h) = (g2 g, (m.g) . (g2.h))
            right[(g2, m), (g, h)] = (G.mul(g2, g), rM(rm(m, g), lh(g2, h)))
    act = check_action(gh, carrier, left, right)
    if isinstance(act, AxiomViolation):
        raise RuntimeError(f"semidirect actions invalid: {act}")
    embedding = {(g, h): (g, sit.embedding[h]) for (g, h) in gh.elements}
    out = operation_situation(gh, act, embedding,
                              name=f"({G.name}|x{sit.name})")
    if isinstance(out, AxiomViolation):
        raise RuntimeError(f"semidirect situation invalid: {out}")
    return out


def pointed_carrier(m: DiscreteMonoid, basepoint="*"):
    """The free pointed carrier m_+ (a disjoint basepoint adjoined),
    with the two-sided translation action fixing the basepoint."""
    assert basepoint not in set(m.elements)
    carrier = (basepoint,) + tuple(m.elements)
    left = {(g, x): (basepoint if x == basepoint else m.mul(g, x))
            for g in m.elements for x in carrier}
    right = {(x, g): (basepoint if x == basepoint else m.mul(x, g))
             for g in m.elements for x in carrier}
    act = check_action(m, carrier, left, right)
    assert isinstance(act, TwoSidedAction)
    return act


def pointed_translation_instance(g_monoid: DiscreteMonoid) -> GAugmentedSituation:
    """The standard comparison instance: H = *, M = G_+ with translation.

    The basepoint must be disjoint from G: translating a basepoint placed at
    the unit breaks the simplicial identities of the derived objects, so the
    free pointed object G_+ is the faithful finite model.
    """
    act = pointed_carrier(g_monoid)
    sit = trivial_situation(act.carrier, "*", name=f"*Y{g_monoid.name}+")
    on_h = trivial_action(g_monoid, sit.monoid.elements)
    aug = augment_situation(g_monoid, sit, on_h, act)
    assert isinstance(aug, GAugmentedSituation), aug
    return aug


# -- stock monoids ----------------------------------------------------------


def cyclic_monoid(n) -> DiscreteMonoid:
    elems = tuple(str(i) for i in range(n))
    table = {(str(a), str(b)): str((a + b) % n) for a in range(n) for b in range(n)}
    m = monoid_from_table(f"Z{n}", elems, "0", table)
    assert isinstance(m, DiscreteMonoid)
    return m


def symmetric_monoid(n=3) -> DiscreteMonoid:
    """S_n as strings of images; composition applies the right factor first."""
    perms = ["".join(map(str, p)) for p in permutations(range(n))]

    def compose(p, q):  # (p*q)(i) = p(q(i))
        return "".join(p[int(q[i])] for i in range(n))

    table = {(p, q): compose(p, q) for p in perms for q in perms}
    unit = "".join(map(str, range(n)))
    m = monoid_from_table(f"S{n}", tuple(perms), unit, table)
    assert isinstance(m, DiscreteMonoid)
    return m


def zero_monoid() -> DiscreteMonoid:
    """{1, x, 0} with x*x = 0 and 0 absorbing."""
    elems = ("1", "x", "0")
    table = {}
    for a in elems:
        for b in elems:
            if a == "1":
                table[a, b] = b
            elif b == "1":
                table[a, b] = a
            else:
                table[a, b] = "0"
    m = monoid_from_table("M0", elems, "1", table)
    assert isinstance(m, DiscreteMonoid)
    return m


def conjugacy_class_count(m: DiscreteMonoid) -> int:
    """Components of the relation xg ~ gx, by brute-force union-find.

    For a group this is the number of conjugacy classes.
    """
    parent = {x: x for x in m.elements}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for g in m.elements:
        for x in m.elements:
            a, b = find(m.mul(x, g)), find(m.mul(g, x))
            if a != b:
                parent[a] = b
    return len({find(v) for v in m.elements})


def lift_constant(m: DiscreteMonoid, trunc):
    """The constant simplicial monoid on m, as (simplicial set, level monoids)."""
    from .constructions import discrete_space
    space = discrete_space(m.elements, trunc, basepoint=m.unit, name=f"K({m.name})")
    space._monoid = m
    return space
