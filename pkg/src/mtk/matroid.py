"""Matroid oracles, derived structure, and matroid intersection.

Every matroid lives on the ground set [0, n).  Derived quantities all
route through a single memoized rank oracle per instance.  Contraction
and restriction keep the ground-set size fixed; elements outside the
kept set become loops, which matches the convention that sets meeting
them are dependent.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable

from .core import (
    Complex,
    Hypergraph,
    _antichain_max,
    bit_count,
    iter_bits,
    mask_of,
    matching_complex,
    min_nonfaces,
)
from .errors import CapExceeded

ENUMERATION_CAP = 1 << 22


class Matroid:
    """Base class: subclasses implement _rank(mask)."""

    kind = "abstract"

    def __init__(self, n: int):
        self.n = n
        self.full = (1 << n) - 1
        self._rank_memo: dict[int, int] = {}
        self._flats_memo: list[int] | None = None

    # -- oracle ------------------------------------------------------

    def _rank(self, s: int) -> int:  # pragma: no cover - abstract
        raise NotImplementedError

    def rank(self, s: int) -> int:
        if s & ~self.full:
            raise ValueError("subset outside ground set")
        memo = self._rank_memo
        r = memo.get(s)
        if r is None:
            r = self._rank(s)
            memo[s] = r
        return r

    def is_independent(self, s: int) -> bool:
        return self.rank(s) == bit_count(s)

    def full_rank(self) -> int:
        return self.rank(self.full)

    def span(self, a: int) -> int:
        """a together with every x whose addition leaves the rank fixed."""
        ra = self.rank(a)
        out = a
        for x in iter_bits(self.full & ~a):
            if self.rank(a | (1 << x)) == ra:
                out |= 1 << x
        return out

    def loops(self) -> int:
        return self.span(0)

    def coloops(self) -> int:
        """Elements in every base: x with rank(V - x) < rank(V)."""
        r = self.full_rank()
        out = 0
        for x in iter_bits(self.full):
            if self.rank(self.full & ~(1 << x)) < r:
                out |= 1 << x
        return out

    # -- enumeration -------------------------------------------------

    def circuits(self) -> Hypergraph:
        """All containment-minimal dependent sets."""
        if (1 << self.n) > ENUMERATION_CAP:
            raise CapExceeded("ground set too large for circuit enumeration")
        out = []
        for s in range(1, 1 << self.n):
            if self.is_independent(s):
                continue
            if all(
                self.is_independent(s & ~(1 << v)) for v in iter_bits(s)
            ):
                out.append(s)
        return Hypergraph(self.n, out)

    def bases(self) -> list[int]:
        return [f for f in self.to_complex().maximal_faces]

    def to_complex(self) -> Complex:
        if (1 << self.n) > ENUMERATION_CAP:
            raise CapExceeded("ground set too large for base enumeration")
        ind = [s for s in range(1 << self.n) if self.is_independent(s)]
        return Complex(self.n, _antichain_max(ind))

    def flats(self) -> list[int]:
        """All closed sets, by one span computation per subset."""
        if self._flats_memo is None:
            if (1 << self.n) > ENUMERATION_CAP:
                raise CapExceeded("ground set too large for flat enumeration")
            self._flats_memo = sorted({self.span(s) for s in range(1 << self.n)})
        return self._flats_memo

    def oracle_equal(self, other: "Matroid") -> bool:
        """Exhaustive rank comparison (small ground sets only)."""
        if self.n != other.n:
            return False
        return all(self.rank(s) == other.rank(s) for s in range(1 << self.n))


class UniformMatroid(Matroid):
    kind = "uniform"

    def __init__(self, r: int, n: int):
        if not 0 <= r <= n:
            raise ValueError("uniform rank out of range")
        super().__init__(n)
        self.r = r

    def _rank(self, s: int) -> int:
        return min(bit_count(s), self.r)

    def __repr__(self):
        return f"UniformMatroid(r={self.r}, n={self.n})"


class GenPartitionMatroid(Matroid):
    """Disjoint parts covering [0, n), each with a cap on intersection size."""

    kind = "gen_partition"

    def __init__(self, n: int, parts: Iterable[int | Iterable[int]], caps: Iterable[int]):
        super().__init__(n)
        masks = [p if isinstance(p, int) else mask_of(p) for p in parts]
        caps = list(caps)
        if len(masks) != len(caps):
            raise ValueError("parts/caps length mismatch")
        union = 0
        for p in masks:
            if union & p:
                raise ValueError("parts overlap")
            union |= p
        if union != self.full:
            raise ValueError("parts must cover the ground set")
        for p, c in zip(masks, caps):
            if not 0 <= c <= bit_count(p):
                raise ValueError("cap out of range for its part")
        self.parts = tuple(masks)
        self.caps = tuple(caps)

    def _rank(self, s: int) -> int:
        return sum(
            min(bit_count(s & p), c) for p, c in zip(self.parts, self.caps)
        )

    def is_partition(self) -> bool:
        return all(c == 1 for c in self.caps)

    def __repr__(self):
        ps = [sorted(iter_bits(p)) for p in self.parts]
        return f"GenPartitionMatroid(n={self.n}, parts={ps}, caps={list(self.caps)})"


def nc_matroid(n: int, u: int) -> GenPartitionMatroid:
    """NC(U) = sets not containing U, as a generalized partition matroid."""
    if u == 0:
        raise ValueError("NC(U) needs a non-empty U")
    full = (1 << n) - 1
    rest = full & ~u
    parts = [u]
    caps = [bit_count(u) - 1]
    if rest:
        parts.append(rest)
        caps.append(bit_count(rest))
    return GenPartitionMatroid(n, parts, caps)


class GraphicMatroid(Matroid):
    """Elements are the edges of a multigraph; independent = acyclic."""

    kind = "graphic"

    def __init__(self, vertices: int, edge_list: Iterable[tuple[int, int]]):
        edge_list = [tuple(e) for e in edge_list]
        super().__init__(len(edge_list))
        for u, v in edge_list:
            if not (0 <= u < vertices and 0 <= v < vertices):
                raise ValueError("edge endpoint out of range")
        self.vertices = vertices
        self.edge_list = tuple(edge_list)

    def _rank(self, s: int) -> int:
        parent = list(range(self.vertices))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a

        r = 0
        for i in iter_bits(s):
            u, v = self.edge_list[i]
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
                r += 1
        return r

    def __repr__(self):
        return f"GraphicMatroid(vertices={self.vertices}, edges={list(self.edge_list)})"


class ExplicitMatroid(Matroid):
    """Given by its independent sets; the axioms are validated eagerly."""

    kind = "explicit"

    def __init__(self, complex_: Complex):
        super().__init__(complex_.n)
        if not check_matroid_axioms(complex_):
            raise ValueError("explicit family fails the matroid axioms")
        self.complex = complex_

    def _rank(self, s: int) -> int:
        return self.complex.rank_of(s)

    def __repr__(self):
        return f"ExplicitMatroid({self.complex!r})"


class DualMatroid(Matroid):
    kind = "dual"

    def __init__(self, inner: Matroid):
        super().__init__(inner.n)
        self.inner = inner

    def _rank(self, s: int) -> int:
        return (
            bit_count(s)
            + self.inner.rank(self.full & ~s)
            - self.inner.full_rank()
        )

    def __repr__(self):
        return f"DualMatroid({self.inner!r})"


class ContractionMatroid(Matroid):
    """Contract the set x away; elements of x become loops."""

    kind = "contraction"

    def __init__(self, inner: Matroid, x: int):
        super().__init__(inner.n)
        self.inner = inner
        self.x = x

    def _rank(self, s: int) -> int:
        return self.inner.rank((s & ~self.x) | self.x) - self.inner.rank(self.x)

    def __repr__(self):
        return f"ContractionMatroid({self.inner!r}, x={self.x:#b})"


class RestrictionMatroid(Matroid):
    """Restrict to the set u; elements outside u become loops."""

    kind = "restriction"

    def __init__(self, inner: Matroid, u: int):
        super().__init__(inner.n)
        self.inner = inner
        self.u = u

    def _rank(self, s: int) -> int:
        return self.inner.rank(s & self.u)

    def __repr__(self):
        return f"RestrictionMatroid({self.inner!r}, u={self.u:#b})"


def dual(m: Matroid) -> Matroid:
    return DualMatroid(m)


def contract_matroid(m: Matroid, x: int) -> Matroid:
    return ContractionMatroid(m, x)


def restrict_matroid(m: Matroid, u: int) -> Matroid:
    return RestrictionMatroid(m, u)


def check_matroid_axioms(c: Complex, cap_n: int = 12) -> bool:
    """True iff c is a matroid: downward-closed (built in) plus exchange.

    Uses the equivalent condition that every induced subcomplex is pure:
    all maximal faces of c[U] have size rank(U) for every U.
    """
    if c.n > cap_n:
        raise CapExceeded(f"axiom check limited to n <= {cap_n}")
    for u in range(1 << c.n):
        target = c.rank_of(u)
        # Greedy from every maximal-face trace; purity fails iff some
        # maximal face of c[U] is smaller than the rank.
        for f in c.maximal_faces:
            t = f & u
            # t is a face of c[U]; extend greedily inside U.
            size = bit_count(t)
            if size == target:
                continue
            grown = True
            while grown and size < target:
                grown = False
                for v in iter_bits(u & ~t):
                    if c.is_face(t | (1 << v)):
                        t |= 1 << v
                        size += 1
                        grown = True
                        break
            if size < target:
                return False
    return True


class MatroidSystem:
    """An ordered k-tuple of matroids sharing one ground set."""

    def __init__(self, matroids: Iterable[Matroid]):
        ms = list(matroids)
        if not ms:
            raise ValueError("a system needs at least one matroid")
        n = ms[0].n
        if any(m.n != n for m in ms):
            raise ValueError("matroids must share the ground-set size")
        self.matroids = tuple(ms)
        self.n = n
        self.k = len(ms)

    def __iter__(self):
        return iter(self.matroids)

    def __len__(self):
        return self.k

    def rank_intersection(self, s: int) -> int:
        """Rank of s in the intersection complex (size of a largest common
        independent subset of s), by brute force over submasks."""
        best = 0
        for sub in _submasks_desc(s):
            if bit_count(sub) > best and all(
                m.is_independent(sub) for m in self.matroids
            ):
                best = bit_count(sub)
        return best

    def intersection_complex(self) -> Complex:
        if (1 << self.n) > ENUMERATION_CAP:
            raise CapExceeded("ground set too large to materialize intersection")
        ind = [
            s
            for s in range(1 << self.n)
            if all(m.is_independent(s) for m in self.matroids)
        ]
        return Complex(self.n, _antichain_max(ind))

    def restricted(self, u: int) -> "MatroidSystem":
        """The system L_U: every matroid restricted to u (loops outside)."""
        return MatroidSystem([RestrictionMatroid(m, u) for m in self.matroids])

    def is_partition_system(self) -> bool:
        return all(
            isinstance(m, GenPartitionMatroid) and m.is_partition()
            for m in self.matroids
        )


def _submasks_desc(mask: int):
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def max_common_independent(m1: Matroid, m2: Matroid) -> int:
    """A maximum-cardinality common independent set, as a mask.

    Standard exchange-graph algorithm with shortest (BFS) augmenting
    paths.
    """
    if m1.n != m2.n:
        raise ValueError("ground sets differ")
    n = m1.n
    full = m1.full
    cur = 0
    while True:
        outside = full & ~cur
        x1 = [y for y in iter_bits(outside) if m1.is_independent(cur | (1 << y))]
        x2set = {
            y for y in iter_bits(outside) if m2.is_independent(cur | (1 << y))
        }
        direct = [y for y in x1 if y in x2set]
        if direct:
            cur |= 1 << direct[0]
            continue
        if not x1 or not x2set:
            return cur
        # BFS over the exchange digraph.
        parent: dict[int, int | None] = {y: None for y in x1}
        frontier = list(x1)
        found = -1
        while frontier and found < 0:
            nxt = []
            for node in frontier:
                nb = 1 << node
                if cur & nb:
                    # node in I: arcs to y outside with I - node + y in M1
                    base = cur & ~nb
                    for y in iter_bits(outside):
                        if y not in parent and m1.is_independent(base | (1 << y)):
                            parent[y] = node
                            if y in x2set:
                                found = y
                                break
                            nxt.append(y)
                else:
                    # node outside: arcs to x in I with I - x + node in M2
                    for x in iter_bits(cur):
                        if x not in parent and m2.is_independent(
                            (cur & ~(1 << x)) | nb
                        ):
                            parent[x] = node
                            nxt.append(x)
                if found >= 0:
                    break
            frontier = nxt
        if found < 0:
            return cur
        path = []
        node: int | None = found
        while node is not None:
            path.append(node)
            node = parent[node]
        for v in path:
            cur ^= 1 << v


def brute_max_common_independent(m1: Matroid, m2: Matroid) -> int:
    best = 0
    for s in range(1 << m1.n):
        if bit_count(s) > best and m1.is_independent(s) and m2.is_independent(s):
            best = bit_count(s)
    return best


def min_rank_partition(m1: Matroid, m2: Matroid) -> int:
    """min over partitions (X, V - X) of rank1(X) + rank2(V - X)."""
    full = m1.full
    return min(
        m1.rank(x) + m2.rank(full & ~x) for x in range(full + 1)
    )


# -- matdim --------------------------------------------------------------


def matdim_upper(c: Complex) -> tuple[int, list[GenPartitionMatroid]]:
    """Edge-chromatic bound: color min-nonfaces by matchings, one
    generalized partition matroid per color class.

    Returns the bound and the witness matroids (whose intersection is c).
    """
    from .coloring import chi  # local import to avoid a cycle

    nf = min_nonfaces(c)
    if not nf.edges:
        return 1, [UniformMatroid(c.n, c.n)]
    # Matchings of nf = independent sets of its line graph; an exact
    # minimum cover of E(nf) by matchings is chi of that complex.
    mc = matching_complex(nf)
    k, classes = chi(mc, return_cover=True)
    full = (1 << c.n) - 1
    witnesses = []
    for cls in classes:
        edges = [nf.edges[i] for i in iter_bits(cls)]
        parts = list(edges)
        caps = [bit_count(e) - 1 for e in edges]
        rest = full & ~mask_of_union(edges)
        if rest:
            parts.append(rest)
            caps.append(bit_count(rest))
        witnesses.append(GenPartitionMatroid(c.n, parts, caps))
    return k, witnesses


def mask_of_union(masks: Iterable[int]) -> int:
    out = 0
    for m in masks:
        out |= m
    return out


def _enumerate_matroid_coverages(c: Complex, nonfaces: list[int]) -> list[int]:
    """Coverage masks over min-nonfaces, one per matroid containing c.

    Matroids are enumerated by their basis families (equal-size families
    with the basis-exchange property).  Only the coverage profile of
    each matroid matters for the set-cover search, so profiles are
    deduplicated and dominated ones dropped.
    """
    n = c.n
    rank_c = c.rank()
    coverages: set[int] = set()
    for r in range(rank_c, n + 1):
        rsets = [mask_of(combo) for combo in itertools.combinations(range(n), r)]
        idx = {m: i for i, m in enumerate(rsets)}
        # Precompute exchange targets for pruning inside the DFS-free scan.
        for fam_bits in range(1, 1 << len(rsets)):
            fam = [rsets[i] for i in iter_bits(fam_bits)]
            # Containment of c first (cheap): every maximal face in a base.
            if not all(
                any(f & ~b == 0 for b in fam) for f in c.maximal_faces
            ):
                continue
            if not _is_basis_family(fam, idx, fam_bits):
                continue
            cov = 0
            for j, nf in enumerate(nonfaces):
                if not any(nf & ~b == 0 for b in fam):
                    cov |= 1 << j
            coverages.add(cov)
    # Drop dominated coverage profiles.
    out = []
    for cov in sorted(coverages, key=bit_count, reverse=True):
        if not any(cov & ~kept == 0 for kept in out):
            out.append(cov)
    return out


def _is_basis_family(fam: list[int], idx: dict[int, int], fam_bits: int) -> bool:
    """Basis exchange: for B1, B2 and x in B1-B2 some B1-x+y is present."""
    for b1 in fam:
        for b2 in fam:
            if b1 == b2:
                continue
            diff = b1 & ~b2
            for x in iter_bits(diff):
                ok = False
                for y in iter_bits(b2 & ~b1):
                    cand = (b1 & ~(1 << x)) | (1 << y)
                    j = idx.get(cand)
                    if j is not None and (fam_bits >> j) & 1:
                        ok = True
                        break
                if not ok:
                    return False
    return True


def matdim_exact(c: Complex, cap_n: int = 6) -> int:
    """Least k with c an intersection of k matroids (n <= cap_n).

    Searches a set cover of the minimal non-faces by candidate matroids
    containing c.
    """
    if c.n > cap_n:
        raise CapExceeded(f"matdim_exact limited to n <= {cap_n}")
    nf = min_nonfaces(c)
    if not nf.edges:
        return 1
    if check_matroid_axioms(c):
        return 1
    nonfaces = list(nf.edges)
    coverages = _enumerate_matroid_coverages(c, nonfaces)
    target = (1 << len(nonfaces)) - 1
    return _min_cover(coverages, target)


def matdim_gen_partition(c: Complex, cap_n: int = 6) -> int | None:
    """matdim restricted to generalized partition matroid candidates.

    Exploratory only; returns None when no cover exists.
    """
    if c.n > cap_n:
        raise CapExceeded(f"search limited to n <= {cap_n}")
    nf = min_nonfaces(c)
    if not nf.edges:
        return 1
    nonfaces = list(nf.edges)
    coverages: set[int] = set()
    for parts in _set_partitions(c.n):
        for caps in itertools.product(*[range(bit_count(p) + 1) for p in parts]):
            m = GenPartitionMatroid(c.n, parts, caps)
            if not all(m.is_independent(f) for f in c.maximal_faces):
                continue
            cov = 0
            for j, nfm in enumerate(nonfaces):
                if not m.is_independent(nfm):
                    cov |= 1 << j
            coverages.add(cov)
    kept = []
    for cov in sorted(coverages, key=bit_count, reverse=True):
        if not any(cov & ~k == 0 for k in kept):
            kept.append(cov)
    target = (1 << len(nonfaces)) - 1
    if not kept or mask_of_union(kept) != target:
        return None
    return _min_cover(kept, target)


def _set_partitions(n: int):
    """All partitions of [0, n) into non-empty masks."""
    if n == 0:
        yield []
        return
    first = 1 << 0
    rest = list(range(1, n))
    for sub_bits in range(1 << len(rest)):
        block = first | mask_of(rest[i] for i in iter_bits(sub_bits))
        remaining = [v for i, v in enumerate(rest) if not (sub_bits >> i) & 1]
        for tail in _set_partitions_over(remaining):
            yield [block] + tail


def _set_partitions_over(elems: list[int]):
    if not elems:
        yield []
        return
    first = 1 << elems[0]
    rest = elems[1:]
    for sub_bits in range(1 << len(rest)):
        block = first | mask_of(rest[i] for i in iter_bits(sub_bits))
        remaining = [v for i, v in enumerate(rest) if not (sub_bits >> i) & 1]
        for tail in _set_partitions_over(remaining):
            yield [block] + tail


def _min_cover(coverages: list[int], target: int) -> int:
    if mask_of_union(coverages) != target:
        raise ValueError("no cover exists")
    best = len(coverages)
    order = sorted(coverages, key=bit_count, reverse=True)

    def dfs(remaining: int, used: int) -> None:
        nonlocal best
        if remaining == 0:
            best = min(best, used)
            return
        if used + 1 >= best:
            return
        low = next(iter_bits(remaining))
        for cov in order:
            if (cov >> low) & 1:
                dfs(remaining & ~cov, used + 1)

    dfs(target, 0)
    return best
