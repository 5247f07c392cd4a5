"""Homological connectivity, expansion numbers, and Topological Hall.

eta_h(C) is 1 plus the least dimension with non-vanishing reduced
integral homology (infinity when everything vanishes, 0 for the
vertex-free complex).  Homology is computed from integer boundary
matrices via Smith diagonalization with smallest-entry pivoting.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import Complex, bit_count, iter_bits
from .errors import CapExceeded
from .extval import INF, XRat, xmax

HOMOLOGY_FACE_CAP = 1 << 20
SUBSET_CAP = 1 << 20


def snf_diagonal(mat: list[list[int]]) -> list[int]:
    """Diagonal of an integer diagonalization of mat (unimodular ops).

    The returned non-zero entries generate the cokernel torsion, so
    rank = number of non-zeros and torsion exists iff some |d| > 1.
    Pivots are chosen as the smallest non-zero entry in the working
    block to limit coefficient growth.
    """
    mat = [row[:] for row in mat]
    m = len(mat)
    n = len(mat[0]) if m else 0
    diag: list[int] = []
    r = 0
    while r < m and r < n:
        # Locate the smallest non-zero entry of the working block.
        bi = bj = -1
        babs = 0
        for i in range(r, m):
            row = mat[i]
            for j in range(r, n):
                v = row[j]
                if v:
                    a = v if v > 0 else -v
                    if babs == 0 or a < babs:
                        bi, bj, babs = i, j, a
                        if a == 1:
                            break
            if babs == 1:
                break
        if babs == 0:
            break
        if bi != r:
            mat[bi], mat[r] = mat[r], mat[bi]
        if bj != r:
            for row in mat:
                row[bj], row[r] = row[r], row[bj]
        if mat[r][r] < 0:
            mat[r] = [-v for v in mat[r]]
        while True:
            p = mat[r][r]
            dirty = False
            for i in range(r + 1, m):
                v = mat[i][r]
                if v:
                    q = v // p
                    if q:
                        prow = mat[r]
                        mat[i] = [a - q * b for a, b in zip(mat[i], prow)]
                    if mat[i][r]:
                        dirty = True
            if dirty:
                # A remainder strictly smaller than p appeared; adopt it.
                for i in range(r + 1, m):
                    if mat[i][r]:
                        mat[i], mat[r] = mat[r], mat[i]
                        break
                continue
            for j in range(r + 1, n):
                v = mat[r][j]
                if v:
                    q = v // p
                    if q:
                        for row in mat:
                            row[j] -= q * row[r]
                    if mat[r][j]:
                        dirty = True
            if dirty:
                for j in range(r + 1, n):
                    if mat[r][j]:
                        for row in mat:
                            row[j], row[r] = row[r], row[j]
                        break
                continue
            break
        diag.append(mat[r][r])
        r += 1
    return diag


@dataclass(frozen=True)
class HomologyProfile:
    """Reduced integral homology, one (free rank, torsion flag) per dim."""

    betti: tuple[int, ...]
    torsion: tuple[bool, ...]

    def is_zero(self, i: int) -> bool:
        if i >= len(self.betti):
            return True
        return self.betti[i] == 0 and not self.torsion[i]


def _faces_by_size(c: Complex, cap: int) -> list[list[int]]:
    faces = c.faces(cap)
    top = max(bit_count(f) for f in faces)
    by = [[] for _ in range(top + 1)]
    for f in faces:
        by[bit_count(f)].append(f)
    for lst in by:
        lst.sort()
    return by


def _boundary_matrix(lower: list[int], upper: list[int]) -> list[list[int]]:
    """Rows indexed by lower faces, columns by upper; alternating signs."""
    index = {f: i for i, f in enumerate(lower)}
    mat = [[0] * len(upper) for _ in lower]
    for j, f in enumerate(upper):
        for pos, v in enumerate(iter_bits(f)):  # ascending vertex order
            mat[index[f & ~(1 << v)]][j] = -1 if pos % 2 else 1
    return mat


def reduced_homology(c: Complex, cap: int = HOMOLOGY_FACE_CAP) -> HomologyProfile:
    by = _faces_by_size(c, cap)
    top = len(by) - 1  # largest face size; dims run 0..top-1
    if top == 0:
        return HomologyProfile(betti=(), torsion=())
    ranks = [0] * (top + 2)  # ranks[d] = rank of boundary map size d -> d-1
    tors = [False] * (top + 2)
    ranks[1] = 1 if by[1] else 0  # augmentation row of ones
    for d in range(2, top + 1):
        diag = snf_diagonal(_boundary_matrix(by[d - 1], by[d]))
        ranks[d] = sum(1 for v in diag if v)
        tors[d] = any(abs(v) > 1 for v in diag)
    betti = []
    torsion = []
    for i in range(top):  # dimension i = faces of size i+1
        ni = len(by[i + 1])
        betti.append(ni - ranks[i + 1] - ranks[i + 2])
        torsion.append(tors[i + 2])
    return HomologyProfile(betti=tuple(betti), torsion=tuple(torsion))


def eta_h(c: Complex, cap: int = HOMOLOGY_FACE_CAP):
    """1 + least i with nonzero reduced homology; inf if none; 0 if no
    vertices.  Early-exits dimension by dimension."""
    by = _faces_by_size(c, cap)
    top = len(by) - 1
    if top == 0:
        return 0
    rank_lower = 1  # rank of the augmentation map (one vertex at least)
    for i in range(top):
        ni = len(by[i + 1])
        if i + 2 <= top:
            diag = snf_diagonal(_boundary_matrix(by[i + 1], by[i + 2]))
            rank_upper = sum(1 for v in diag if v)
            torsion = any(abs(v) > 1 for v in diag)
        else:
            rank_upper = 0
            torsion = False
        if ni - rank_lower - rank_upper > 0 or torsion:
            return i + 1
        rank_lower = rank_upper
    return INF


@dataclass(frozen=True)
class ExpansionRecord:
    delta_r: XRat
    delta_eta: XRat
    delta: XRat
    delta_h: XRat


def _eta_of_induced(c: Complex, s: int, cache: dict[int, object], cap: int):
    v = cache.get(s)
    if v is None:
        sub, _ = c.induced(s)
        v = eta_h(sub, cap)
        cache[s] = v
    return v


def expansions(
    c: Complex,
    h: tuple[Fraction, ...] | None = None,
    subset_cap: int = SUBSET_CAP,
    homology_cap: int = HOMOLOGY_FACE_CAP,
) -> ExpansionRecord:
    """Exact expansion numbers, with eta taken homologically (eta_h).

    delta_r uses rank only; delta and delta_h use min(eta_h, rank);
    h = None means the all-ones weighting, for which delta_h == delta.
    """
    if (1 << c.n) > subset_cap:
        raise CapExceeded("too many subsets for expansion enumeration")
    if h is not None and len(h) != c.n:
        raise ValueError("weight vector length mismatch")
    cache: dict[int, object] = {}
    d_r = [XRat.of(0)]
    d_eta = [XRat.of(0)]
    d_bar = [XRat.of(0)]
    d_h = [XRat.of(0)]
    for s in range(1, 1 << c.n):
        size = bit_count(s)
        rank_s = c.rank_of(s)
        eta_s = _eta_of_induced(c, s, cache, homology_cap)
        ebar = rank_s if eta_s == INF else min(eta_s, rank_s)
        d_r.append(XRat.ratio(size, rank_s))
        d_eta.append(XRat.ratio(size, eta_s))
        d_bar.append(XRat.ratio(size, ebar))
        if h is not None:
            hs = sum((h[v] for v in iter_bits(s)), Fraction(0))
            d_h.append(XRat.ratio(hs, ebar))
    rec_r = xmax(d_r)
    rec_eta = xmax(d_eta)
    rec_bar = xmax(d_bar)
    rec_h = rec_bar if h is None else xmax(d_h)
    return ExpansionRecord(delta_r=rec_r, delta_eta=rec_eta, delta=rec_bar, delta_h=rec_h)


def delta_r(c: Complex, subset_cap: int = SUBSET_CAP) -> XRat:
    """Simplicial expansion number alone (no homology)."""
    if (1 << c.n) > subset_cap:
        raise CapExceeded("too many subsets for expansion enumeration")
    return xmax(
        XRat.ratio(bit_count(s), c.rank_of(s)) for s in range(1, 1 << c.n)
    )


@dataclass(frozen=True)
class HallRecord:
    hypothesis: bool
    conclusion: bool
    witness: tuple[int, ...] | None  # chosen vertex per index, or None


def topological_hall_check(
    c: Complex,
    subsets: list[int],
    homology_cap: int = HOMOLOGY_FACE_CAP,
) -> HallRecord:
    """Check the homological Hall hypothesis and search for a rainbow face.

    Hypothesis: eta_h(C[union of V_i, i in I]) >= |I| for every
    non-empty I.  Conclusion: a choice function phi with phi(i) in V_i
    and image a face.  The asserted implication is hypothesis =>
    conclusion.
    """
    m = len(subsets)
    if m > 12:
        raise CapExceeded("too many subsets for the Hall check")
    cache: dict[int, object] = {}
    hypothesis = True
    for imask in range(1, 1 << m):
        union = 0
        for i in iter_bits(imask):
            union |= subsets[i]
        eta = _eta_of_induced(c, union, cache, homology_cap)
        if eta != INF and eta < bit_count(imask):
            hypothesis = False
            break
    witness = _rainbow_face(c, subsets)
    return HallRecord(
        hypothesis=hypothesis,
        conclusion=witness is not None,
        witness=witness,
    )


def _rainbow_face(c: Complex, subsets: list[int]) -> tuple[int, ...] | None:
    m = len(subsets)
    seen: set[tuple[int, int]] = set()

    def dfs(i: int, image: int, picks: tuple[int, ...]):
        if i == m:
            return picks
        key = (i, image)
        if key in seen:
            return None
        seen.add(key)
        for v in iter_bits(subsets[i]):
            nxt = image | (1 << v)
            if c.is_face(nxt):
                got = dfs(i + 1, nxt, picks + (v,))
                if got is not None:
                    return got
        return None

    return dfs(0, 0, ())
