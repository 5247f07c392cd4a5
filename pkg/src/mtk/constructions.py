"""Generators for the extremal instances and the partition-matroid /
k-partite-hypergraph correspondence.

Projective and affine planes are built over the integers mod q for
prime q; labeling is deterministic (points sorted by normalized
homogeneous coordinates), so generated instance files are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .core import Complex, Hypergraph, bit_count, induced, iter_bits, mask_of
from .errors import DomainError, Unsupported
from .matroid import GenPartitionMatroid, MatroidSystem
from .polytopes import RatVec


@dataclass(frozen=True)
class Instance:
    """A named bundle of objects sharing one construction."""

    provenance: str
    hypergraph: Hypergraph | None = None
    parts: tuple[int, ...] | None = None  # vertex sides when k-partite
    complex_: Complex | None = None
    system: MatroidSystem | None = None
    weights: dict = field(default_factory=dict)
    expected: dict = field(default_factory=dict)


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    d = 2
    while d * d <= q:
        if q % d == 0:
            return False
        d += 1
    return True


def _normalized_points(q: int) -> list[tuple[int, int, int]]:
    """1-dimensional subspaces of F_q^3, first non-zero coordinate 1."""
    pts = set()
    for x in range(q):
        for y in range(q):
            for z in range(q):
                if x == y == z == 0:
                    continue
                for s in range(1, q):
                    sx, sy, sz = (s * x) % q, (s * y) % q, (s * z) % q
                    if sx == 1 or (sx == 0 and (sy == 1 or (sy == 0 and sz == 1))):
                        pts.add((sx, sy, sz))
                        break
    return sorted(pts)


def projective_plane(q: int) -> Hypergraph:
    """PG(2, q): points = 1-dim subspaces, lines = 2-dim subspaces."""
    if not _is_prime(q):
        raise Unsupported("plane construction implemented for prime q only")
    pts = _normalized_points(q)
    index = {p: i for i, p in enumerate(pts)}
    edges = []
    for a, b, c in pts:  # line coefficient vectors, same normalization
        edge = [
            index[(x, y, z)]
            for (x, y, z) in pts
            if (a * x + b * y + c * z) % q == 0
        ]
        edges.append(edge)
    return Hypergraph(len(pts), edges)


def truncated_projective_plane(q: int) -> tuple[Hypergraph, tuple[int, ...]]:
    """T_{q+1}: remove one point and all lines through it.

    Returns the hypergraph together with its canonical vertex sides:
    the surviving traces of the removed lines partition the points.
    """
    pg = projective_plane(q)
    removed = 0  # the lexicographically first point
    keep = ((1 << pg.n) - 1) & ~(1 << removed)
    through = [e for e in pg.edges if (e >> removed) & 1]
    t, new_to_old = induced(pg, keep)
    old_to_new = {old: new for new, old in enumerate(new_to_old)}
    parts = []
    for e in through:
        parts.append(mask_of(old_to_new[v] for v in iter_bits(e) if v != removed))
    return t, tuple(sorted(parts))


def q_k(q: int) -> tuple[Hypergraph, tuple[int, ...]]:
    """The affine plane of order q minus one parallel class of lines.

    Returns the k-partite hypergraph (k = q) and its sides: the point
    sets of the removed class's lines.
    """
    if not _is_prime(q):
        raise Unsupported("plane construction implemented for prime q only")
    pg = projective_plane(q)
    line_at_infinity = pg.edges[0]
    keep = ((1 << pg.n) - 1) & ~line_at_infinity
    affine, new_to_old = induced(pg, keep)
    old_to_new = {old: new for new, old in enumerate(new_to_old)}
    # Parallel classes: affine lines grouped by their infinite point.
    classes: dict[int, list[int]] = {}
    for e in pg.edges:
        if e == line_at_infinity:
            continue
        inf_pt = e & line_at_infinity
        rest = mask_of(old_to_new[v] for v in iter_bits(e & ~line_at_infinity))
        classes.setdefault(inf_pt, []).append(rest)
    removed_class = classes.pop(min(classes))
    edges = [e for group in classes.values() for e in group]
    return Hypergraph(affine.n, edges), tuple(sorted(removed_class))


def hypergraph_sides(h: Hypergraph, k: int) -> tuple[int, ...] | None:
    """Search for a k-partition with every edge transversal (small n)."""
    if not h.is_uniform(k):
        return None
    side = [-1] * h.n
    vertices = list(range(h.n))

    def ok(v: int, s: int) -> bool:
        for e in h.edges:
            if (e >> v) & 1:
                for u in iter_bits(e):
                    if u != v and side[u] == s:
                        return False
        return True

    def dfs(i: int) -> bool:
        if i == h.n:
            return True
        v = vertices[i]
        for s in range(1 if i == 0 else k):
            if ok(v, s):
                side[v] = s
                if dfs(i + 1):
                    return True
                side[v] = -1
        return False

    if not dfs(0):
        return None
    parts = [0] * k
    for v, s in enumerate(side):
        parts[s] |= 1 << v
    if any(p == 0 for p in parts):
        return None
    for e in h.edges:
        if any(bit_count(e & p) != 1 for p in parts):
            return None
    return tuple(parts)


def assoc_matroids(h: Hypergraph, parts: tuple[int, ...] | None = None) -> MatroidSystem:
    """The partition matroids L(H) on E(H): each side's vertex stars.

    parts: the k vertex sides; inferred by search when omitted.
    Vertices with no incident edge contribute no star.
    """
    if parts is None:
        sizes = {bit_count(e) for e in h.edges}
        if len(sizes) != 1:
            raise DomainError("edge sizes differ; pass the sides explicitly")
        parts = hypergraph_sides(h, sizes.pop())
        if parts is None:
            raise DomainError("no transversal k-partition found")
    cover = 0
    for p in parts:
        if cover & p:
            raise DomainError("sides overlap")
        cover |= p
    if cover != (1 << h.n) - 1:
        raise DomainError("sides must cover the vertex set")
    for e in h.edges:
        if any(bit_count(e & p) != 1 for p in parts):
            raise DomainError("some edge is not a transversal of the sides")
    m = len(h.edges)
    matroids = []
    for p in parts:
        stars = []
        for v in iter_bits(p):
            star = mask_of(i for i, e in enumerate(h.edges) if (e >> v) & 1)
            if star:
                stars.append(star)
        matroids.append(GenPartitionMatroid(m, stars, [1] * len(stars)))
    return MatroidSystem(matroids)


def assoc_hypergraph(system: MatroidSystem) -> Hypergraph:
    """K(L) for a system of partition matroids: vertices are the parts,
    element v becomes the edge of parts containing v."""
    for m in system:
        if not isinstance(m, GenPartitionMatroid) or not m.is_partition():
            raise Unsupported("K(L) needs partition matroids with caps 1")
    offsets = []
    total = 0
    for m in system:
        offsets.append(total)
        total += len(m.parts)
    edges = []
    for v in range(system.n):
        bit = 1 << v
        e = 0
        for mi, m in enumerate(system):
            for pi, p in enumerate(m.parts):
                if p & bit:
                    e |= 1 << (offsets[mi] + pi)
                    break
        edges.append(e)
    return Hypergraph(total, edges)


# -- canned instances ------------------------------------------------------


def canned(name: str, **params) -> Instance:
    """Named instances with their claimed attributes as annotations.

    Annotations are expectations for the verification suite, never
    trusted values: every consumer re-derives them.
    """
    if name == "ab":
        return _canned_ab(params.get("a", 1), params["m"])
    if name == "md_lower":
        return _canned_md_lower(params["n"])
    if name == "lambdaPnotQ":
        return _canned_lambda(params.get("k", 4))
    if name == "PnotQpartition":
        return _canned_pnotq_partition()
    if name == "truncated_plane":
        return _canned_truncated(params.get("q", 2))
    if name == "q_k":
        return _canned_qk(params.get("q", 2))
    raise Unsupported(f"unknown canned instance {name!r}")


def _canned_ab(a: int, m: int) -> Instance:
    if not 1 <= a <= m:
        raise DomainError("need 1 <= |A| <= |B|")
    amask = mask_of(range(a))
    bmask = mask_of(range(a, a + m))
    c = Complex(a + m, [amask, bmask])
    return Instance(
        provenance=f"ab(a={a}, m={m})",
        complex_=c,
        expected={"matdim": m},
    )


def _canned_md_lower(n: int) -> Instance:
    special = n - 1
    half = n // 2
    faces = [
        s
        for s in range(1 << n)
        if bit_count(s) <= half or not (s >> special) & 1
    ]
    c = Complex(n, faces)
    from math import comb

    return Instance(
        provenance=f"md_lower(n={n})",
        complex_=c,
        expected={"matdim_lower": comb(n - 1, half)},
    )


def _canned_lambda(k: int) -> Instance:
    if k < 2:
        raise DomainError("need k >= 2")
    v = []
    for i in range(2, k + 1):
        v.extend([Fraction(1, i)] * i)
    n = len(v)
    vec = RatVec(v)
    faces = [
        s
        for s in range(1 << n)
        if vec.sum_over(s) <= 1
    ]
    c = Complex(n, faces)
    vv = sum((x * x for x in vec), Fraction(0))
    return Instance(
        provenance=f"lambdaPnotQ(k={k})",
        complex_=c,
        weights={"v": vec},
        expected={"v_dot_v": vv, "in_q_not_p": vv > 1},
    )


def _canned_pnotq_partition() -> Instance:
    # x_1..x_9 -> 0..8, y_1..y_3 -> 9..11, z_1..z_3 -> 12..14
    faces = [[9, 10, 11], [12, 13, 14]]
    for i in range(1, 4):
        for j in range(1, 4):
            x = 3 * (i - 1) + (j - 1)
            faces.append([8 + i, x])
            faces.append([11 + j, x])
    c = Complex(15, faces)
    w = RatVec(
        [Fraction(1, 9)] * 9 + [Fraction(1, 4)] * 6
    )
    return Instance(
        provenance="PnotQpartition",
        complex_=c,
        weights={"w": w},
        expected={"in_q_not_p": True, "flag": True},
    )


def _canned_truncated(q: int) -> Instance:
    h, parts = truncated_projective_plane(q)
    k = q + 1
    system = assoc_matroids(h, parts)
    return Instance(
        provenance=f"truncated_plane(q={q})",
        hypergraph=h,
        parts=parts,
        system=system,
        expected={
            "k": k,
            "nu": 1,
            "nu_star": k - 1,
            "tau": k - 1,
            "part_size": k - 1,
            "degree": k - 1,
        },
    )


def _canned_qk(q: int) -> Instance:
    h, parts = q_k(q)
    system = assoc_matroids(h, parts)
    return Instance(
        provenance=f"q_k(q={q})",
        hypergraph=h,
        parts=parts,
        system=system,
        expected={
            "k": q,
            "edge_count": q * q,
            "regular": q,
            "delta_eta": q * q,
            "max_delta_r": q,
        },
    )
