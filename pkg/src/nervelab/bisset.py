"""Bisimplicial and trisimplicial objects, diagonals, and row extraction.

Bisimplicial sets use the same canonical-form idea as simplicial sets, with
one degeneracy word per axis; the two axes commute, so faces push through one
word while the other rides along untouched.
"""

from __future__ import annotations

from dataclasses import dataclass

from .simplexes import apply_word, degeneracy_words, insert_degeneracy, push_face
from .sset import CapExceeded, SimplicialMap, SimplicialSet, Violation, _fmt_label


class BiSimplex:
    __slots__ = ("base", "hword", "vword", "_hash")

    def __init__(self, base, hword=(), vword=()):
        self.base = base
        self.hword = hword
        self.vword = vword
        self._hash = hash((base, hword, vword))

    def __eq__(self, other):
        return (self is other or
                (type(other) is BiSimplex and self._hash == other._hash
                 and self.base == other.base and self.hword == other.hword
                 and self.vword == other.vword))

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return self._hash

    def key(self):
        h = "h" + "h".join(map(str, self.hword)) if self.hword else ""
        v = "v" + "v".join(map(str, self.vword)) if self.vword else ""
        if not h and not v:
            return self.base
        return f"{h}{v}~{self.base}"

    def __repr__(self):
        return self.key()


class BisimplicialSet:
    """Truncated bisimplicial set in canonical form."""

    def __init__(self, name, trunc, rosters, hfaces, vfaces, basepoint=None):
        self.name = name
        self.trunc = trunc  # (N horizontal, M vertical)
        self.rosters = {bd: tuple(r) for bd, r in rosters.items()}
        self.hfaces = hfaces  # nondeg id -> tuple[BiSimplex] (p+1 entries)
        self.vfaces = vfaces  # nondeg id -> tuple[BiSimplex] (q+1 entries)
        self.basepoint = basepoint
        self.bidegree_of = {}
        for (p, q), roster in self.rosters.items():
            for x in roster:
                if x in self.bidegree_of:
                    raise ValueError(f"duplicate bisimplex id {x!r}")
                self.bidegree_of[x] = (p, q)
        self._all_cache = {}
        self._face_cache = {}
        self._labels = None
        self._label_of = None

    @classmethod
    def from_explicit(cls, name, trunc, rosters, hface_fn, vface_fn,
                      hdegen_fn, vdegen_fn, basepoint=None, cap=None):
        """Canonicalize explicit bidegree-wise labels.

        ``rosters[(p, q)]`` lists every (p,q)-bisimplex as a hashable label;
        the four callables take (p, q, label, i).
        """
        N, M = trunc
        index = {bd: {} for bd in rosters}
        nd = {bd: [] for bd in rosters}
        label_of_id = {}
        declared = {bd: set(r) for bd, r in rosters.items()}
        total = sum(len(r) for r in rosters.values())
        if cap is not None and total > cap:
            big = max(rosters, key=lambda bd: len(rosters[bd]))
            raise CapExceeded(name, big, total, cap)

        def decompose(p, q, label):
            got = index[p, q].get(label)
            if got is not None:
                return got
            for i in range(p - 1, -1, -1):  # peel horizontal degeneracies
                z = hface_fn(p, q, label, i + 1)
                if hdegen_fn(p - 1, q, z, i) == label:
                    if z not in declared[p - 1, q]:
                        raise ValueError(f"{name}: face of {label!r} leaves "
                                         f"the ({p - 1},{q}) roster")
                    inner = decompose(p - 1, q, z)
                    bs = BiSimplex(inner.base,
                                   insert_degeneracy(inner.hword, i), inner.vword)
                    index[p, q][label] = bs
                    return bs
            for i in range(q - 1, -1, -1):  # then vertical
                z = vface_fn(p, q, label, i + 1)
                if vdegen_fn(p, q - 1, z, i) == label:
                    if z not in declared[p, q - 1]:
                        raise ValueError(f"{name}: face of {label!r} leaves "
                                         f"the ({p},{q - 1}) roster")
                    inner = decompose(p, q - 1, z)
                    bs = BiSimplex(inner.base, inner.hword,
                                   insert_degeneracy(inner.vword, i))
                    index[p, q][label] = bs
                    return bs
            xid = _fmt_label(label)
            if xid in label_of_id:
                raise ValueError(f"{name}: id collision {xid!r}")
            label_of_id[xid] = (p, q, label)
            nd[p, q].append(xid)
            bs = BiSimplex(xid)
            index[p, q][label] = bs
            return bs

        for (p, q) in sorted(rosters):
            for label in rosters[p, q]:
                decompose(p, q, label)
        hfaces, vfaces = {}, {}
        for (p, q) in sorted(rosters):
            for xid in nd[p, q]:
                label = label_of_id[xid][2]
                if p >= 1:
                    targets = [hface_fn(p, q, label, i) for i in range(p + 1)]
                    if any(t not in index[p - 1, q] for t in targets):
                        raise ValueError(f"{name}: horizontal face of {xid} "
                                         f"leaves the ({p - 1},{q}) roster")
                    hfaces[xid] = tuple(index[p - 1, q][t] for t in targets)
                if q >= 1:
                    targets = [vface_fn(p, q, label, i) for i in range(q + 1)]
                    if any(t not in index[p, q - 1] for t in targets):
                        raise ValueError(f"{name}: vertical face of {xid} "
                                         f"leaves the ({p},{q - 1}) roster")
                    vfaces[xid] = tuple(index[p, q - 1][t] for t in targets)
        bp = index[0, 0][basepoint].base if basepoint is not None else None
        obj = cls(name, trunc, nd, hfaces, vfaces, basepoint=bp)
        obj._labels = index
        obj._label_of = {bd: {bs: lab for lab, bs in index[bd].items()}
                         for bd in index}
        return obj

    def label_of(self, bs):
        return self._label_of[self.bidegree(bs)][bs]

    def simplex_of_label(self, p, q, label):
        return self._labels[p, q][label]

    def bidegree(self, bs: BiSimplex):
        p0, q0 = self.bidegree_of[bs.base]
        return (p0 + len(bs.hword), q0 + len(bs.vword))

    def hface(self, bs: BiSimplex, i):
        key = (bs, i, "h")
        got = self._face_cache.get(key)
        if got is not None:
            return got
        kind, outer, rest = push_face(bs.hword, i)
        if kind == "deg":
            out = BiSimplex(bs.base, apply_word(tuple(rest), outer), bs.vword)
        else:
            t = self.hfaces[bs.base][rest]
            out = BiSimplex(t.base, apply_word(t.hword, outer),
                            apply_word(t.vword, bs.vword))
        self._face_cache[key] = out
        return out

    def vface(self, bs: BiSimplex, i):
        key = (bs, i, "v")
        got = self._face_cache.get(key)
        if got is not None:
            return got
        kind, outer, rest = push_face(bs.vword, i)
        if kind == "deg":
            out = BiSimplex(bs.base, bs.hword, apply_word(tuple(rest), outer))
        else:
            t = self.vfaces[bs.base][rest]
            out = BiSimplex(t.base, apply_word(t.hword, bs.hword),
                            apply_word(t.vword, outer))
        self._face_cache[key] = out
        return out

    def hdegen(self, bs, j):
        return BiSimplex(bs.base, insert_degeneracy(bs.hword, j), bs.vword)

    def vdegen(self, bs, j):
        return BiSimplex(bs.base, bs.hword, insert_degeneracy(bs.vword, j))

    def all_bisimplices(self, p, q):
        if (p, q) in self._all_cache:
            return self._all_cache[p, q]
        out = []
        for (p0, q0), roster in sorted(self.rosters.items()):
            if p0 > p or q0 > q:
                continue
            for x in roster:
                for hw in degeneracy_words(p - p0, p0):
                    for vw in degeneracy_words(q - q0, q0):
                        out.append(BiSimplex(x, hw, vw))
        self._all_cache[p, q] = tuple(out)
        return self._all_cache[p, q]

    def size(self, p, q):
        return len(self.all_bisimplices(p, q))

    def validate(self):
        """Identities along each axis plus cross-axis commutation."""
        N, M = self.trunc
        out = []
        for p in range(N + 1):
            for q in range(M + 1):
                for bs in self.all_bisimplices(p, q):
                    out.extend(self._validate_axis(bs, p, q, horizontal=True))
                    out.extend(self._validate_axis(bs, p, q, horizontal=False))
                    # horizontal ops commute with vertical ops
                    if p >= 1 and q >= 1:
                        for i in range(p + 1):
                            for j in range(q + 1):
                                a = self.vface(self.hface(bs, i), j)
                                b = self.hface(self.vface(bs, j), i)
                                if a != b:
                                    out.append(Violation(
                                        f"dh_{i} dv_{j} commute", (p, q), (bs,)))
                    if p >= 1 and q + 1 <= M:
                        for i in range(p + 1):
                            for j in range(q + 1):
                                a = self.vdegen(self.hface(bs, i), j)
                                b = self.hface(self.vdegen(bs, j), i)
                                if a != b:
                                    out.append(Violation(
                                        f"dh_{i} sv_{j} commute", (p, q), (bs,)))
                    if p + 1 <= N and q >= 1:
                        for i in range(p + 1):
                            for j in range(q + 1):
                                a = self.vface(self.hdegen(bs, i), j)
                                b = self.hdegen(self.vface(bs, j), i)
                                if a != b:
                                    out.append(Violation(
                                        f"sh_{i} dv_{j} commute", (p, q), (bs,)))
                    if p + 1 <= N and q + 1 <= M:
                        for i in range(p + 1):
                            for j in range(q + 1):
                                a = self.vdegen(self.hdegen(bs, i), j)
                                b = self.hdegen(self.vdegen(bs, j), i)
                                if a != b:
                                    out.append(Violation(
                                        f"sh_{i} sv_{j} commute", (p, q), (bs,)))
        return out

    def _validate_axis(self, bs, p, q, horizontal):
        face = self.hface if horizontal else self.vface
        degen = self.hdegen if horizontal else self.vdegen
        n = p if horizontal else q
        cap = self.trunc[0] if horizontal else self.trunc[1]
        tag = "h" if horizontal else "v"
        out = []
        if n >= 2:
            for j in range(n + 1):
                dj = face(bs, j)
                for i in range(j):
                    if face(dj, i) != face(face(bs, i), j - 1):
                        out.append(Violation(f"d{tag}_{i} d{tag}_{j}", (p, q), (bs,)))
        if n + 1 <= cap:
            for j in range(n + 1):
                sj = degen(bs, j)
                for i in range(n + 2):
                    lhs = face(sj, i)
                    if i == j or i == j + 1:
                        rhs = bs
                    elif i < j:
                        rhs = degen(face(bs, i), j - 1)
                    else:
                        rhs = degen(face(bs, i - 1), j)
                    if lhs != rhs:
                        out.append(Violation(f"d{tag}_{i} s{tag}_{j}", (p, q), (bs,)))
        return out

    def row(self, p) -> SimplicialSet:
        """The simplicial set in horizontal degree p (vertical structure)."""
        M = self.trunc[1]
        rosters = [self.all_bisimplices(p, q) for q in range(M + 1)]
        return SimplicialSet.from_explicit(
            f"{self.name}[row{p}]", M, rosters,
            lambda q, bs, i: self.vface(bs, i),
            lambda q, bs, i: self.vdegen(bs, i))

    def __repr__(self):
        return f"BisimplicialSet({self.name}, trunc={self.trunc})"


def diagonal(B: BisimplicialSet, name=None) -> SimplicialSet:
    """Diagonal simplicial set: degree n is bidegree (n, n), d_i = dh_i dv_i."""
    t = min(B.trunc)
    rosters = [B.all_bisimplices(n, n) for n in range(t + 1)]

    def face(n, bs, i):
        return B.vface(B.hface(bs, i), i)

    def degen(n, bs, i):
        return B.vdegen(B.hdegen(bs, i), i)

    bp = BiSimplex(B.basepoint) if B.basepoint is not None else None
    return SimplicialSet.from_explicit(name or f"diag({B.name})", t, rosters,
                                       face, degen, basepoint=bp)


def external_product(X, Y, name=None) -> BisimplicialSet:
    """X box Y: bidegree (p, q) is X_p x Y_q."""
    N, M = X.trunc, Y.trunc
    rosters = {(p, q): [(a, b) for a in X.all_simplices(p) for b in Y.all_simplices(q)]
               for p in range(N + 1) for q in range(M + 1)}

    def hface(p, q, lbl, i):
        return (X.face(lbl[0], i), lbl[1])

    def vface(p, q, lbl, i):
        return (lbl[0], Y.face(lbl[1], i))

    def hdegen(p, q, lbl, i):
        return (X.degeneracy(lbl[0], i), lbl[1])

    def vdegen(p, q, lbl, i):
        return (lbl[0], Y.degeneracy(lbl[1], i))

    bp = None
    if X.basepoint is not None and Y.basepoint is not None:
        from .simplexes import Simplex
        bp = (Simplex(X.basepoint), Simplex(Y.basepoint))
    return BisimplicialSet.from_explicit(name or f"({X.name}box{Y.name})",
                                         (N, M), rosters, hface, vface,
                                         hdegen, vdegen, basepoint=bp)


def constant_vertical(X, M, name=None) -> BisimplicialSet:
    """The bisimplicial set constant in the vertical axis on X."""
    rosters = {(p, q): [(a, q) for a in X.all_simplices(p)]
               for p in range(X.trunc + 1) for q in range(M + 1)}

    def hface(p, q, lbl, i):
        return (X.face(lbl[0], i), q)

    def vface(p, q, lbl, i):
        return (lbl[0], q - 1)

    def hdegen(p, q, lbl, i):
        return (X.degeneracy(lbl[0], i), q)

    def vdegen(p, q, lbl, i):
        return (lbl[0], q + 1)

    return BisimplicialSet.from_explicit(name or f"const({X.name})",
                                         (X.trunc, M), rosters,
                                         hface, vface, hdegen, vdegen)


class BisimplicialMap:
    """Map of bisimplicial sets stored on nondegenerate bisimplices."""

    def __init__(self, source, target, nd_images, name="F"):
        self.source, self.target = source, target
        self.nd_images = nd_images
        self.name = name
        self.depth = (min(source.trunc[0], target.trunc[0]),
                      min(source.trunc[1], target.trunc[1]))

    @classmethod
    def from_label_fn(cls, source, target, fn, name="F"):
        N, M = (min(source.trunc[0], target.trunc[0]),
                min(source.trunc[1], target.trunc[1]))
        images = {}
        for p in range(N + 1):
            for q in range(M + 1):
                for xid in source.rosters.get((p, q), ()):
                    lbl = source.label_of(BiSimplex(xid))
                    images[xid] = target.simplex_of_label(p, q, fn(p, q, lbl))
        return cls(source, target, images, name)

    def apply(self, bs: BiSimplex) -> BiSimplex:
        img = self.nd_images[bs.base]
        return BiSimplex(img.base, apply_word(img.hword, bs.hword),
                         apply_word(img.vword, bs.vword))

    def verify(self):
        out = []
        N, M = self.depth
        for p in range(N + 1):
            for q in range(M + 1):
                for bs in self.source.all_bisimplices(p, q):
                    fb = self.apply(bs)
                    if p >= 1:
                        for i in range(p + 1):
                            if self.apply(self.source.hface(bs, i)) != self.target.hface(fb, i):
                                out.append(Violation(f"{self.name} dh_{i}", (p, q), (bs,)))
                    if q >= 1:
                        for i in range(q + 1):
                            if self.apply(self.source.vface(bs, i)) != self.target.vface(fb, i):
                                out.append(Violation(f"{self.name} dv_{i}", (p, q), (bs,)))
        return out

    def row_map(self, p, source_row=None, target_row=None) -> SimplicialMap:
        """The induced map between the horizontal-degree-p rows."""
        src = source_row if source_row is not None else self.source.row(p)
        tgt = target_row if target_row is not None else self.target.row(p)
        return SimplicialMap.from_label_fn(
            src, tgt, lambda q, bs: self.apply(bs), name=f"{self.name}[row{p}]")

    def diagonal_map(self, source_diag=None, target_diag=None) -> SimplicialMap:
        src = source_diag if source_diag is not None else diagonal(self.source)
        tgt = target_diag if target_diag is not None else diagonal(self.target)
        return SimplicialMap.from_label_fn(
            src, tgt, lambda n, bs: self.apply(bs), name=f"diag({self.name})")


# -- trisimplicial plumbing ------------------------------------------------


@dataclass
class TrisimplicialRef:
    """Explicit three-axis object; used only as input to partial diagonals.

    ``face_fn(axis, degs, label, i)`` and ``degen_fn`` act on labels, where
    ``degs`` is the tridegree tuple.
    """

    name: str
    axis_names: tuple[str, str, str]
    trunc: tuple[int, int, int]
    rosters: dict
    face_fn: object
    degen_fn: object

    def sample_commutation(self, cells=None) -> list:
        """Check pairwise commutation of the three simplicial structures."""
        out = []
        for degs in (cells or sorted(self.rosters)):
            for label in self.rosters[degs]:
                for a in range(3):
                    for b in range(a + 1, 3):
                        if degs[a] < 1 or degs[b] < 1:
                            continue
                        for i in range(degs[a] + 1):
                            for j in range(degs[b] + 1):
                                da = self.face_fn(a, degs, label, i)
                                degs_a = _dec(degs, a)
                                lhs = self.face_fn(b, degs_a, da, j)
                                db = self.face_fn(b, degs, label, j)
                                degs_b = _dec(degs, b)
                                rhs = self.face_fn(a, degs_b, db, i)
                                if lhs != rhs:
                                    out.append(Violation(
                                        f"axes {a},{b} faces commute", degs, (label,)))
        return out


def _dec(degs, axis):
    out = list(degs)
    out[axis] -= 1
    return tuple(out)


def _inc(degs, axis):
    out = list(degs)
    out[axis] += 1
    return tuple(out)


def partial_diagonal(T: TrisimplicialRef, axes=(0, 1), cap=None) -> BisimplicialSet:
    """Diagonalize exactly the two named axes; the third is untouched."""
    a, b = axes
    if a == b:
        raise ValueError("the two diagonalized axes must differ")
    a, b = min(a, b), max(a, b)
    c = ({0, 1, 2} - {a, b}).pop()
    n_merge = min(T.trunc[a], T.trunc[b])
    n_rest = T.trunc[c]

    def tri_degs(n, q):
        degs = [0, 0, 0]
        degs[a] = degs[b] = n
        degs[c] = q
        return tuple(degs)

    rosters = {(n, q): T.rosters[tri_degs(n, q)]
               for n in range(n_merge + 1) for q in range(n_rest + 1)}

    def hface(n, q, lbl, i):
        degs = tri_degs(n, q)
        step = T.face_fn(a, degs, lbl, i)
        return T.face_fn(b, _dec(degs, a), step, i)

    def hdegen(n, q, lbl, i):
        degs = tri_degs(n, q)
        step = T.degen_fn(a, degs, lbl, i)
        return T.degen_fn(b, _inc(degs, a), step, i)

    def vface(n, q, lbl, i):
        return T.face_fn(c, tri_degs(n, q), lbl, i)

    def vdegen(n, q, lbl, i):
        return T.degen_fn(c, tri_degs(n, q), lbl, i)

    return BisimplicialSet.from_explicit(
        f"pdiag({T.name};{T.axis_names[a]}+{T.axis_names[b]})",
        (n_merge, n_rest), rosters, hface, vface, hdegen, vdegen, cap=cap)
