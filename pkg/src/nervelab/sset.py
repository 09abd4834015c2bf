"""Finite truncated simplicial sets, maps between them, and validation.

A SimplicialSet stores only nondegenerate simplices plus a face table whose
targets are canonical Simplex values; everything else is derived by the word
calculus in :mod:`nervelab.simplexes`.  Objects are immutable once built.

Most constructions go through :meth:`SimplicialSet.from_explicit`, which takes
degree-wise rosters of arbitrary hashable labels together with face/degeneracy
callables, peels degeneracies to find the canonical form, and remembers the
label <-> simplex correspondence so maps can be defined by label formulas.
"""

from __future__ import annotations

from dataclasses import dataclass

from .simplexes import (
    Simplex,
    apply_word,
    degeneracy_words,
    insert_degeneracy,
    push_face,
)


class CapExceeded(Exception):
    """A construction grew past the configured simplex-count cap."""

    def __init__(self, name, degree, count, cap):
        self.name, self.degree, self.count, self.cap = name, degree, count, cap
        super().__init__(f"{name}: {count} simplices at degree {degree} exceed cap {cap}")


@dataclass(frozen=True)
class Violation:
    """A failed identity, with enough data to locate it."""

    law: str
    degree: int
    witness: tuple
    detail: str = ""

    def __str__(self):
        extra = f" ({self.detail})" if self.detail else ""
        return f"{self.law} at degree {self.degree} on {self.witness}{extra}"


def _fmt_label(label) -> str:
    # ids feed the text format, so keep them free of ",", "|" and whitespace
    if isinstance(label, Simplex):
        if not label.word:
            return _fmt_label_str(label.base)
        return "s" + "s".join(str(i) for i in label.word) + "~" + _fmt_label_str(label.base)
    if isinstance(label, tuple):
        return "(" + ".".join(_fmt_label(x) for x in label) + ")"
    return _fmt_label_str(label)


def _fmt_label_str(s) -> str:
    out = str(s)
    for bad, repl in ((",", "."), ("|", "!"), (" ", "_"), ("=", "-")):
        out = out.replace(bad, repl)
    return out


class SimplicialSet:
    """Truncated simplicial set in canonical nondegenerate/word form."""

    def __init__(self, name, trunc, rosters, faces, basepoint=None):
        assert len(rosters) == trunc + 1
        self.name = name
        self.trunc = trunc
        self.rosters = tuple(tuple(r) for r in rosters)
        self.faces = faces  # nondegenerate id -> tuple[Simplex]
        self.basepoint = basepoint
        self.degree_of = {}
        for n, roster in enumerate(self.rosters):
            for x in roster:
                if x in self.degree_of:
                    raise ValueError(f"duplicate simplex id {x!r}")
                self.degree_of[x] = n
        for x, fs in faces.items():
            n = self.degree_of[x]
            assert len(fs) == n + 1, f"{x} needs {n + 1} faces"
            for f in fs:
                if f.base not in self.degree_of:
                    raise ValueError(f"face of {x} hits unknown id {f.base!r}")
        if basepoint is not None and self.degree_of.get(basepoint) != 0:
            raise ValueError("basepoint must be a vertex id")
        self._all_cache = {}
        self._face_cache = {}
        self._labels = None  # degree -> {label: Simplex}
        self._label_of = None  # degree -> {Simplex: label}

    # -- explicit-label construction ------------------------------------

    @classmethod
    def from_explicit(cls, name, trunc, rosters, face_fn, degen_fn,
                      basepoint=None, cap=None):
        """Build the canonical form from explicit degree-wise labels.

        ``rosters[n]`` lists every n-simplex (degenerate ones included) as a
        hashable label; ``face_fn(n, label, i)`` and ``degen_fn(n, label, i)``
        implement the structure maps on labels.
        """
        index = [dict() for _ in range(trunc + 1)]  # label -> Simplex
        nd = [[] for _ in range(trunc + 1)]
        label_of_id = {}
        declared = []
        total = 0
        for n in range(trunc + 1):
            seen = set()
            for label in rosters[n]:
                if label in seen:
                    raise ValueError(f"{name}: duplicate label {label!r} in degree {n}")
                seen.add(label)
            declared.append(seen)
            total += len(rosters[n])
            if cap is not None and total > cap:
                raise CapExceeded(name, n, total, cap)

        def decompose(n, label):
            got = index[n].get(label)
            if got is not None:
                return got
            # peel the largest degenerate direction: label = s_i z iff
            # s_i d_{i+1} label == label
            for i in range(n - 1, -1, -1):
                z = face_fn(n, label, i + 1)
                if degen_fn(n - 1, z, i) == label:
                    if z not in declared[n - 1]:
                        raise ValueError(
                            f"{name}: face of {label!r} leaves the degree-{n - 1} roster")
                    inner = decompose(n - 1, z)
                    sx = Simplex(inner.base, insert_degeneracy(inner.word, i))
                    index[n][label] = sx
                    return sx
            xid = _fmt_label(label)
            if xid in label_of_id:
                raise ValueError(f"{name}: id collision {xid!r}")
            label_of_id[xid] = label
            nd[n].append(xid)
            sx = Simplex(xid)
            index[n][label] = sx
            return sx

        for n in range(trunc + 1):
            for label in rosters[n]:
                decompose(n, label)
        faces = {}
        for n in range(1, trunc + 1):
            for xid in nd[n]:
                label = label_of_id[xid]
                fs = []
                for i in range(n + 1):
                    target = face_fn(n, label, i)
                    if target not in index[n - 1]:
                        raise ValueError(
                            f"{name}: face {i} of {xid} left the degree-{n - 1} roster")
                    fs.append(index[n - 1][target])
                faces[xid] = tuple(fs)
        bp = None
        if basepoint is not None:
            bp = index[0][basepoint].base
        obj = cls(name, trunc, nd, faces, basepoint=bp)
        obj._labels = index
        label_of = [dict() for _ in range(trunc + 1)]
        for n in range(trunc + 1):
            for label, sx in index[n].items():
                if sx in label_of[n]:
                    raise ValueError(f"{name}: labels {label!r} and "
                                     f"{label_of[n][sx]!r} collapse to {sx}")
            # second pass so the error above reports both labels
            for label, sx in index[n].items():
                label_of[n][sx] = label
        obj._label_of = label_of
        return obj

    def label_of(self, sx: Simplex):
        assert self._label_of is not None, f"{self.name} has no label index"
        return self._label_of[self.degree(sx)][sx]

    def simplex_of_label(self, n, label) -> Simplex:
        assert self._labels is not None, f"{self.name} has no label index"
        return self._labels[n][label]

    def has_labels(self):
        return self._labels is not None

    # -- structure maps ---------------------------------------------------

    def degree(self, sx: Simplex) -> int:
        return self.degree_of[sx.base] + len(sx.word)

    def face(self, sx: Simplex, i: int) -> Simplex:
        if not sx.word:
            return self.faces[sx.base][i]
        key = (sx, i)
        got = self._face_cache.get(key)
        if got is not None:
            return got
        assert 0 <= i <= self.degree(sx) <= self.trunc
        kind, outer, rest = push_face(sx.word, i)
        if kind == "deg":
            out = Simplex(sx.base, apply_word(tuple(rest), outer))
        else:
            target = self.faces[sx.base][rest]
            out = Simplex(target.base, apply_word(target.word, outer))
        self._face_cache[key] = out
        return out

    def degeneracy(self, sx: Simplex, j: int) -> Simplex:
        n = self.degree(sx)
        assert 0 <= j <= n and n + 1 <= self.trunc
        return Simplex(sx.base, insert_degeneracy(sx.word, j))

    def all_simplices(self, n: int):
        """Every simplex of degree n, degenerate ones included."""
        if n in self._all_cache:
            return self._all_cache[n]
        out = []
        for d in range(n + 1):
            for x in self.rosters[d]:
                for word in degeneracy_words(n - d, d):
                    out.append(Simplex(x, word))
        self._all_cache[n] = tuple(out)
        return self._all_cache[n]

    def size(self, n: int) -> int:
        return len(self.all_simplices(n))

    def nondegenerate_counts(self):
        return tuple(len(r) for r in self.rosters)

    def top_nondegenerate_degree(self):
        for n in range(self.trunc, -1, -1):
            if self.rosters[n]:
                return n
        return -1

    def euler_characteristic(self):
        return sum((-1) ** n * len(r) for n, r in enumerate(self.rosters))

    # -- verification ------------------------------------------------------

    def validate(self, max_degree=None):
        """Exhaustively check the simplicial identities up to the truncation.

        Returns a list of Violation records; empty means valid.  Violations
        are data, not errors.
        """
        N = self.trunc if max_degree is None else min(max_degree, self.trunc)
        out = []
        for n in range(N + 1):
            for sx in self.all_simplices(n):
                if n >= 2:
                    for j in range(n + 1):
                        dj = self.face(sx, j)
                        for i in range(j):
                            lhs = self.face(dj, i)
                            rhs = self.face(self.face(sx, i), j - 1)
                            if lhs != rhs:
                                out.append(Violation(
                                    f"d_{i} d_{j} = d_{{{j - 1}}} d_{i}", n, (sx,),
                                    f"{lhs} != {rhs}"))
                if n + 1 <= N:
                    for j in range(n + 1):
                        sj = self.degeneracy(sx, j)
                        for i in range(n + 2):
                            lhs = self.face(sj, i)
                            if i == j or i == j + 1:
                                rhs = sx
                            elif i < j:
                                rhs = self.degeneracy(self.face(sx, i), j - 1)
                            else:
                                rhs = self.degeneracy(self.face(sx, i - 1), j)
                            if lhs != rhs:
                                out.append(Violation(
                                    f"d_{i} s_{j}", n, (sx,), f"{lhs} != {rhs}"))
                if n + 2 <= N:
                    for j in range(n + 1):
                        sj = self.degeneracy(sx, j)
                        for i in range(j + 1):
                            lhs = self.degeneracy(sj, i)
                            rhs = self.degeneracy(self.degeneracy(sx, i), j + 1)
                            if lhs != rhs:
                                out.append(Violation(
                                    f"s_{i} s_{j} = s_{{{j + 1}}} s_{i}", n, (sx,),
                                    f"{lhs} != {rhs}"))
        return out

    # -- derived invariants --------------------------------------------

    def pi0(self) -> int:
        """Connected components of the 1-skeleton."""
        parent = {v: v for v in self.rosters[0]}

        def find(v):
            while parent[v] != v:
                parent[v] = parent[parent[v]]
                v = parent[v]
            return v

        if self.trunc >= 1:
            for e in self.rosters[1]:
                a = find(self.faces[e][0].base)
                b = find(self.faces[e][1].base)
                if a != b:
                    parent[a] = b
        return len({find(v) for v in self.rosters[0]})

    def __repr__(self):
        return f"SimplicialSet({self.name}, N={self.trunc}, nd={self.nondegenerate_counts()})"


class SimplicialMap:
    """A simplicial map, stored on nondegenerate simplices of the source.

    The action on degenerate simplices is the forced extension
    f(s_I x) = s_I f(x); ``verify`` checks face compatibility exhaustively.
    """

    def __init__(self, source, target, nd_images, name="f"):
        self.source = source
        self.target = target
        self.nd_images = nd_images  # nondeg id -> Simplex in target
        self.name = name
        self.depth = min(source.trunc, target.trunc)
        for xid, sx in nd_images.items():
            if source.degree_of[xid] != target.degree(sx):
                raise ValueError(f"{name}: image of {xid} has wrong degree")

    @classmethod
    def from_simplex_fn(cls, source, target, fn, name="f"):
        depth = min(source.trunc, target.trunc)
        images = {}
        for n in range(depth + 1):
            for xid in source.rosters[n]:
                images[xid] = fn(Simplex(xid))
        return cls(source, target, images, name)

    @classmethod
    def from_label_fn(cls, source, target, fn, name="f"):
        """Build from a function on explicit labels (degree, label) -> label."""
        depth = min(source.trunc, target.trunc)
        images = {}
        for n in range(depth + 1):
            for xid in source.rosters[n]:
                lbl = source.label_of(Simplex(xid))
                images[xid] = target.simplex_of_label(n, fn(n, lbl))
        return cls(source, target, images, name)

    @classmethod
    def identity(cls, X):
        return cls.from_simplex_fn(X, X, lambda sx: sx, name="id")

    def apply(self, sx: Simplex) -> Simplex:
        img = self.nd_images[sx.base]
        return Simplex(img.base, apply_word(img.word, sx.word))

    def apply_label(self, n, label):
        return self.target.label_of(self.apply(self.source.simplex_of_label(n, label)))

    def compose(self, inner: "SimplicialMap") -> "SimplicialMap":
        assert inner.target is self.source
        images = {xid: self.apply(sx) for xid, sx in inner.nd_images.items()}
        return SimplicialMap(inner.source, self.target, images,
                             name=f"{self.name}∘{inner.name}")

    def verify(self):
        """Check commutation with every face and degeneracy operator."""
        out = []
        for n in range(self.depth + 1):
            for sx in self.source.all_simplices(n):
                fx = self.apply(sx)
                if n >= 1:
                    for i in range(n + 1):
                        lhs = self.apply(self.source.face(sx, i))
                        rhs = self.target.face(fx, i)
                        if lhs != rhs:
                            out.append(Violation(f"{self.name} d_{i}", n, (sx,),
                                                 f"{lhs} != {rhs}"))
                if n + 1 <= self.depth:
                    for j in range(n + 1):
                        lhs = self.apply(self.source.degeneracy(sx, j))
                        rhs = self.target.degeneracy(fx, j)
                        if lhs != rhs:
                            out.append(Violation(f"{self.name} s_{j}", n, (sx,),
                                                 f"{lhs} != {rhs}"))
        return out

    def is_injective(self):
        for n in range(self.depth + 1):
            seen = set()
            for sx in self.source.all_simplices(n):
                fx = self.apply(sx)
                if fx in seen:
                    return False
                seen.add(fx)
        return True

    def is_bijective(self):
        for n in range(self.depth + 1):
            images = {self.apply(sx) for sx in self.source.all_simplices(n)}
            if len(images) != self.source.size(n) or images != set(self.target.all_simplices(n)):
                return False
        return True

    def is_isomorphism(self):
        return self.is_bijective() and not self.verify()

    def __repr__(self):
        return f"SimplicialMap({self.name}: {self.source.name} -> {self.target.name})"


def validate_identities(X):
    """Exhaustive identity check for simplicial or bisimplicial objects.

    Violations come back as data (an empty list means valid).
    """
    return X.validate()


# -- serialization (text format) -----------------------------------------


def serialize(X: SimplicialSet) -> str:
    """Render the canonical text format; stable under round-trips."""
    lines = [f"sset N={X.trunc}"]
    if X.basepoint is not None:
        lines.append(f"base {X.basepoint}")
    for n in range(X.trunc + 1):
        lines.append(f"deg {n}: " + ",".join(sorted(X.rosters[n])))
    for n in range(1, X.trunc + 1):
        for xid in sorted(X.rosters[n]):
            for i, f in enumerate(X.faces[xid]):
                word = ",".join(str(k) for k in f.word)
                lines.append(f"d {i} {xid} = {word}|{f.base}")
    return "\n".join(lines) + "\n"


def parse(text: str, name="parsed") -> SimplicialSet:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines or not lines[0].startswith("sset N="):
        raise ValueError("missing 'sset N=<trunc>' header")
    trunc = int(lines[0].split("=", 1)[1])
    rosters = [[] for _ in range(trunc + 1)]
    faces = {}
    basepoint = None
    for ln in lines[1:]:
        if ln.startswith("base "):
            basepoint = ln[5:].strip()
        elif ln.startswith("deg "):
            head, _, body = ln.partition(":")
            n = int(head[4:])
            ids = [s for s in (p.strip() for p in body.split(",")) if s]
            rosters[n].extend(ids)
        elif ln.startswith("d "):
            lhs, _, rhs = ln.partition("=")
            _, i, xid = lhs.split()
            word_s, _, base = rhs.strip().partition("|")
            word = tuple(int(w) for w in word_s.split(",") if w.strip() != "")
            faces.setdefault(xid, {})[int(i)] = Simplex(base, word)
    face_tuples = {}
    for xid, fmap in faces.items():
        face_tuples[xid] = tuple(fmap[i] for i in sorted(fmap))
    rosters = [sorted(r) for r in rosters]
    return SimplicialSet(name, trunc, rosters, face_tuples, basepoint=basepoint)
