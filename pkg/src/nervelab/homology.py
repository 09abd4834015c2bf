"""Integral homology of truncated simplicial sets via Smith normal form.

Normalized chains: the basis in degree n is the nondegenerate n-simplices,
and faces landing on degenerate simplices contribute zero to the boundary.
All arithmetic is exact (Python integers), with least-absolute-value pivoting
to limit entry growth.  Every homology answer carries a reliability flag:
H_n needs the boundary out of degree n+1, so it is only trusted strictly
below the truncation level.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .sset import SimplicialMap, SimplicialSet


@dataclass
class ChainComplex:
    """Boundary matrices over the nondegenerate bases of a truncated object.

    ``boundaries[n]`` is the matrix of d: C_n -> C_{n-1} (rows indexed by the
    degree n-1 basis), present for 1 <= n <= trunc.
    """

    bases: list
    boundaries: list  # boundaries[0] unused placeholder
    trunc: int

    def dim(self, n):
        if 0 <= n <= self.trunc:
            return len(self.bases[n])
        return 0

    def boundary(self, n):
        """The matrix of d_n, or None when n is out of the stored range."""
        if 1 <= n <= self.trunc:
            return self.boundaries[n]
        return None

    def check_dd_zero(self):
        bad = []
        for n in range(2, self.trunc + 1):
            prod = mat_mul(self.boundaries[n - 1], self.boundaries[n],
                           cols=self.dim(n))
            if any(any(row) for row in prod):
                bad.append(n)
        return bad


def normalized_chains(X: SimplicialSet) -> ChainComplex:
    bases = [list(X.rosters[n]) for n in range(X.trunc + 1)]
    index = [{x: i for i, x in enumerate(b)} for b in bases]
    boundaries = [None]
    for n in range(1, X.trunc + 1):
        rows, cols = len(bases[n - 1]), len(bases[n])
        mat = [[0] * cols for _ in range(rows)]
        for j, xid in enumerate(bases[n]):
            for i, f in enumerate(X.faces[xid]):
                if not f.word:  # degenerate faces vanish in normalized chains
                    mat[index[n - 1][f.base]][j] += (-1) ** i
        boundaries.append(mat)
    return ChainComplex(bases, boundaries, X.trunc)


# -- exact integer linear algebra ---------------------------------------------


def mat_mul(a, b, cols=None):
    """a @ b with explicit target width for the degenerate empty cases."""
    if cols is None:
        cols = len(b[0]) if b else 0
    out = [[0] * cols for _ in range(len(a))]
    if not a or not b or cols == 0:
        return out
    for i, ai in enumerate(a):
        oi = out[i]
        for t, x in enumerate(ai):
            if x:
                bt = b[t]
                for j in range(cols):
                    if bt[j]:
                        oi[j] += x * bt[j]
    return out


def smith_normal_form(matrix):
    """Invariant factors d_1 | d_2 | ... and the rank of an integer matrix.

    Row/column eliminations with least-absolute-value pivoting; exact
    arithmetic throughout (entries can grow, so machine integers would be a
    correctness bug, not a performance choice).
    """
    a = [list(row) for row in matrix]
    m = len(a)
    n = len(a[0]) if m else 0
    k = 0
    while k < min(m, n):
        # pick the nonzero entry of least absolute value in the free block
        piv = None
        best = None
        for i in range(k, m):
            row = a[i]
            for j in range(k, n):
                v = row[j]
                if v:
                    av = -v if v < 0 else v
                    if best is None or av < best:
                        best, piv = av, (i, j)
                        if av == 1:
                            break
            if best == 1:
                break
        if piv is None:
            break
        i0, j0 = piv
        if i0 != k:
            a[k], a[i0] = a[i0], a[k]
        if j0 != k:
            for row in a:
                row[k], row[j0] = row[j0], row[k]
        while True:
            # clear the column, then the row; a nonzero remainder is strictly
            # smaller than the pivot, so swapping it up terminates
            changed = False
            for i in range(k + 1, m):
                v = a[i][k]
                if v:
                    q = v // a[k][k]
                    if q:
                        rk, ri = a[k], a[i]
                        for j in range(k, n):
                            ri[j] -= q * rk[j]
                    if a[i][k]:
                        a[k], a[i] = a[i], a[k]
                        changed = True
            if changed:
                continue
            for j in range(k + 1, n):
                v = a[k][j]
                if v:
                    q = v // a[k][k]
                    if q:
                        for row in a:
                            row[j] -= q * row[k]
                    if a[k][j]:
                        for row in a:
                            row[k], row[j] = row[j], row[k]
                        changed = True
            if changed:
                continue  # column swaps can dirty the cleared column
            break
        k += 1
    diag = [abs(a[i][i]) for i in range(min(m, n)) if a[i][i]]
    rank = len(diag)
    # enforce the divisibility chain d_1 | d_2 | ...
    changed = True
    while changed:
        changed = False
        for i in range(rank):
            for j in range(i + 1, rank):
                if diag[i] and diag[j] % diag[i]:
                    g = gcd(diag[i], diag[j])
                    diag[i], diag[j] = g, diag[i] * diag[j] // g
                    changed = True
        diag.sort()
    return tuple(diag), rank


@dataclass(frozen=True)
class HomologyGroup:
    betti: int
    torsion: tuple  # invariant factors > 1, divisibility chain
    reliable: bool = True

    def __str__(self):
        parts = []
        if self.betti:
            parts.append("Z" if self.betti == 1 else f"Z^{self.betti}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        body = "+".join(parts) if parts else "0"
        return body + ("" if self.reliable else "?")

    def is_zero(self):
        return self.betti == 0 and not self.torsion


def homology(C: ChainComplex, n, reduced=False) -> HomologyGroup:
    """H_n = ker d_n / im d_{n+1}; flagged unreliable at the truncation edge."""
    if n < 0 or n > C.trunc:
        raise ValueError(f"degree {n} outside stored range 0..{C.trunc}")
    dim_n = C.dim(n)
    bn = C.boundary(n)
    rank_n = smith_normal_form(bn)[1] if bn and dim_n else 0
    bnext = C.boundary(n + 1)
    if bnext is not None and C.dim(n + 1):
        factors, rank_next = smith_normal_form(bnext)
    else:
        factors, rank_next = (), 0
    betti = dim_n - rank_n - rank_next
    torsion = tuple(d for d in factors if d > 1)
    if reduced and n == 0:
        betti -= 1
    return HomologyGroup(betti, torsion, reliable=(n < C.trunc))


def homology_table(X: SimplicialSet, upto=None, reduced=False):
    C = normalized_chains(X)
    top = C.trunc if upto is None else min(upto, C.trunc)
    return [homology(C, n, reduced=reduced) for n in range(top + 1)]


def cyclic_group_homology(order, n) -> HomologyGroup:
    """H_n of the classifying space of Z/order, from the standard periodic
    resolution (..., *order, 0, *order, augmentation): independent of the
    simplicial pipeline, used as an oracle against it."""
    if n == 0:
        return HomologyGroup(1, ())
    if n % 2 == 1:
        return HomologyGroup(0, (order,) if order > 1 else ())
    return HomologyGroup(0, ())


# -- chain maps, cones, connectivity ------------------------------------------


def chain_map(f: SimplicialMap):
    """Per-degree matrices of f on normalized chains.

    Images that are degenerate contribute zero.  Boundary commutation is
    verified; failure means f was not a simplicial map, a hard error.
    """
    CX = normalized_chains(f.source)
    CY = normalized_chains(f.target)
    depth = min(CX.trunc, CY.trunc)
    mats = []
    for n in range(depth + 1):
        rows = {y: i for i, y in enumerate(CY.bases[n])}
        mat = [[0] * len(CX.bases[n]) for _ in CY.bases[n]]
        for j, xid in enumerate(CX.bases[n]):
            img = f.nd_images[xid]
            if not img.word:
                mat[rows[img.base]][j] = 1
        mats.append(mat)
    for n in range(1, depth + 1):
        lhs = mat_mul(mats[n - 1], CX.boundaries[n], cols=CX.dim(n))
        rhs = mat_mul(CY.boundaries[n], mats[n], cols=CX.dim(n))
        if lhs != rhs:
            raise RuntimeError(f"chain map does not commute with d at degree {n}")
    return mats


def mapping_cone(f: SimplicialMap) -> ChainComplex:
    """Algebraic cone of the chain map of f: C(f)_n = X_{n-1} (+) Y_n,
    with differential (x, y) -> (-dx, f(x) + dy)."""
    CX = normalized_chains(f.source)
    CY = normalized_chains(f.target)
    fmats = chain_map(f)
    depth = min(CX.trunc + 1, CY.trunc)
    bases = []
    for n in range(depth + 1):
        xs = [("x", b) for b in (CX.bases[n - 1] if n >= 1 else [])]
        ys = [("y", b) for b in CY.bases[n]]
        bases.append(xs + ys)
    boundaries = [None]
    for n in range(1, depth + 1):
        xdim = len(CX.bases[n - 1])
        ydim = len(CY.bases[n])
        rx = len(CX.bases[n - 2]) if n >= 2 else 0
        ry = len(CY.bases[n - 1])
        mat = [[0] * (xdim + ydim) for _ in range(rx + ry)]
        if n >= 2:
            dX = CX.boundaries[n - 1]
            for i in range(rx):
                for j in range(xdim):
                    mat[i][j] = -dX[i][j]
        F = fmats[n - 1]
        for i in range(ry):
            for j in range(xdim):
                mat[rx + i][j] = F[i][j]
        dY = CY.boundaries[n]
        for i in range(ry):
            for j in range(ydim):
                mat[rx + i][xdim + j] = dY[i][j]
        boundaries.append(mat)
    return ChainComplex(bases, boundaries, depth)


@dataclass(frozen=True)
class Connectivity:
    """Least degree with nonvanishing (reduced) homology, minus one.

    ``value`` is None when no nonzero group was found in the reliable range;
    the connectivity is then at least ``bound``.
    """

    value: int | None
    bound: int

    def lower(self):
        return self.value if self.value is not None else self.bound

    def is_at_least(self, k):
        return self.lower() >= k

    def __str__(self):
        return str(self.value) if self.value is not None else f">={self.bound}"


def complex_connectivity(C: ChainComplex, reduced=True) -> Connectivity:
    top = C.trunc - 1  # H_q reliable only for q < trunc
    for q in range(top + 1):
        if not homology(C, q, reduced=reduced).is_zero():
            return Connectivity(q - 1, top)
    return Connectivity(None, top)


def homological_connectivity(X: SimplicialSet) -> Connectivity:
    """Connectivity surrogate of a pointed object: reduced homology."""
    assert X.basepoint is not None, "connectivity needs a pointed object"
    return complex_connectivity(normalized_chains(X), reduced=True)


def map_homological_connectivity(f: SimplicialMap) -> Connectivity:
    """Connectivity surrogate of a map: plain homology of the algebraic cone
    (which plays the role of reduced homology of the cofiber)."""
    return complex_connectivity(mapping_cone(f), reduced=False)
