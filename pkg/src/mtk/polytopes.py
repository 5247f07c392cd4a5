"""The polytopes P(C), Q(C), R(L): membership, gauge, vertices, ratios,
and the weighted matroidal / hypergraph matching and covering numbers.

P(C) is the convex hull of face indicators, Q(C) the rank-constraint
polytope, R(L) the intersection of the k matroids' rank polytopes.
All arithmetic is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import Complex, Hypergraph, bit_count, iter_bits
from .coloring import chi_star
from .errors import CapExceeded, DomainError, EmptyEdge, Infeasible
from .extval import INF
from .lp import LPProblem, solve, solve_max_slack
from .matroid import Matroid, MatroidSystem
from .topology import SUBSET_CAP

ZERO = Fraction(0)
ONE = Fraction(1)


class RatVec:
    """A ground-set-indexed vector of exact rationals."""

    __slots__ = ("values",)

    def __init__(self, values):
        object.__setattr__(
            self, "values", tuple(Fraction(v) for v in values)
        )

    def __setattr__(self, *a):
        raise AttributeError("RatVec is immutable")

    def __len__(self):
        return len(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def __iter__(self):
        return iter(self.values)

    def __eq__(self, other):
        return isinstance(other, RatVec) and self.values == other.values

    def __hash__(self):
        return hash(self.values)

    def __repr__(self):
        return f"RatVec([{', '.join(str(v) for v in self.values)}])"

    def sum_over(self, mask: int) -> Fraction:
        return sum((self.values[v] for v in iter_bits(mask)), ZERO)

    def total(self) -> Fraction:
        return sum(self.values, ZERO)

    def dot(self, other) -> Fraction:
        return sum((a * b for a, b in zip(self.values, other)), ZERO)

    def is_nonnegative(self) -> bool:
        return all(v >= 0 for v in self.values)

    @staticmethod
    def ones(n: int) -> "RatVec":
        return RatVec([ONE] * n)

    @staticmethod
    def zeros(n: int) -> "RatVec":
        return RatVec([ZERO] * n)

    @staticmethod
    def parse(items) -> "RatVec":
        return RatVec([Fraction(s) for s in items])

    def format(self) -> list[str]:
        return [str(v) for v in self.values]


@dataclass(frozen=True)
class PolytopeRef:
    kind: str  # "P" | "Q" | "R"
    complex_: Complex | None = None
    system: MatroidSystem | None = None

    @staticmethod
    def P(c: Complex) -> "PolytopeRef":
        return PolytopeRef(kind="P", complex_=c)

    @staticmethod
    def Q(c: Complex) -> "PolytopeRef":
        return PolytopeRef(kind="Q", complex_=c)

    @staticmethod
    def R(system: MatroidSystem) -> "PolytopeRef":
        return PolytopeRef(kind="R", system=system)

    @property
    def n(self) -> int:
        return self.complex_.n if self.complex_ is not None else self.system.n


# -- membership -----------------------------------------------------------


def member(z: PolytopeRef, x: RatVec) -> bool:
    if not x.is_nonnegative():
        raise DomainError("membership is defined on the non-negative orthant")
    if len(x) != z.n:
        raise DomainError("dimension mismatch")
    if z.kind == "P":
        try:
            return chi_star(z.complex_, list(x)) <= 1
        except Infeasible:
            return False
    if z.kind == "Q":
        return _q_member_complex(z.complex_, x)
    if z.kind == "R":
        return all(_q_member_matroid(m, x) for m in z.system)
    raise ValueError(f"unknown polytope kind {z.kind!r}")


def _subset_sums(x: RatVec) -> list[Fraction]:
    n = len(x)
    if (1 << n) > SUBSET_CAP:
        raise CapExceeded("too many subsets for membership enumeration")
    sums = [ZERO] * (1 << n)
    for s in range(1, 1 << n):
        low = s & -s
        sums[s] = sums[s ^ low] + x[low.bit_length() - 1]
    return sums


def _q_member_complex(c: Complex, x: RatVec) -> bool:
    sums = _subset_sums(x)
    return all(sums[s] <= c.rank_of(s) for s in range(1, len(sums)))


def _q_member_matroid(m: Matroid, x: RatVec) -> bool:
    sums = _subset_sums(x)
    return all(sums[s] <= m.rank(s) for s in range(1, len(sums)))


# -- gauge ----------------------------------------------------------------


def psi(z: PolytopeRef, h: RatVec):
    """Gauge: least t with h/t in Z (0 for h = 0, inf when unreachable)."""
    if not h.is_nonnegative():
        raise DomainError("gauge arguments live in the non-negative orthant")
    if all(v == 0 for v in h):
        return ZERO
    if z.kind == "P":
        return _psi_p(z.complex_, h)
    if z.kind == "Q":
        return _psi_q_rank(lambda s: z.complex_.rank_of(s), z.n, h)
    if z.kind == "R":
        vals = [_psi_q_rank(m.rank, z.n, h) for m in z.system]
        return INF if any(v == INF for v in vals) else max(vals)
    raise ValueError(f"unknown polytope kind {z.kind!r}")


def _psi_p(c: Complex, h: RatVec):
    """Primal covering LP: min sum of face weights with coverage >= h."""
    covered = c.vertices_mask()
    for v in range(c.n):
        if h[v] > 0 and not (covered >> v) & 1:
            return INF
    faces = list(c.maximal_faces)
    rows = []
    for v in range(c.n):
        coeffs = [ONE if (f >> v) & 1 else ZERO for f in faces]
        rows.append((coeffs, ">=", h[v]))
    res = solve(LPProblem.make("min", [ONE] * len(faces), rows))
    assert res.status == "optimal"
    return res.objective


def _psi_q_rank(rank, n: int, h: RatVec):
    sums = _subset_sums(h)
    best = ZERO
    for s in range(1, 1 << n):
        hs = sums[s]
        if hs == 0:
            continue
        r = rank(s)
        if r == 0:
            return INF
        v = hs / r
        if v > best:
            best = v
    return best


# -- vertex enumeration ---------------------------------------------------


def _reduced_rows_matroid(m: Matroid) -> list[tuple[int, int]]:
    """(mask, rank) rows sufficient to cut Q(M): non-trivial flats plus
    singletons."""
    rows = {}
    for f in m.flats():
        if f and m.rank(f) < bit_count(f):
            rows[f] = m.rank(f)
    for v in range(m.n):
        b = 1 << v
        rows.setdefault(b, m.rank(b))
        rows[b] = min(rows[b], m.rank(b))
    return sorted(rows.items())


def _reduced_rows_complex(c: Complex) -> list[tuple[int, int]]:
    """(mask, rank) rows sufficient to cut Q(C) for a general complex."""
    rows = {}
    for v in range(c.n):
        b = 1 << v
        rows[b] = c.rank_of(b)
    for s in range(1, 1 << c.n):
        if bit_count(s) < 2:
            continue
        r = c.rank_of(s)
        if r >= bit_count(s):
            continue
        reducible = False
        for v in iter_bits(s):
            if c.rank_of(s & ~(1 << v)) + c.rank_of(1 << v) <= r:
                reducible = True
                break
        if not reducible:
            rows[s] = r
    return sorted(rows.items())


def vertices(z: PolytopeRef, cap_n: int = 8) -> list[RatVec]:
    """All vertices of the polytope.

    P-kind: the face indicator vectors (exactly the vertices of a
    convex hull of 0/1 points).  Q/R-kind: double description over the
    reduced constraint system.
    """
    if z.kind == "P":
        return [
            RatVec([ONE if (f >> v) & 1 else ZERO for v in range(z.n)])
            for f in z.complex_.faces()
        ]
    if z.n > cap_n:
        raise CapExceeded(f"vertex enumeration limited to n <= {cap_n}")
    if z.kind == "Q":
        rows = _reduced_rows_complex(z.complex_)
    else:
        rows = []
        for m in z.system:
            rows.extend(_reduced_rows_matroid(m))
        merged: dict[int, int] = {}
        for mask, r in rows:
            if mask not in merged or r < merged[mask]:
                merged[mask] = r
        rows = sorted(merged.items())
    return [RatVec(v) for v in _dd_vertices(z.n, rows)]


def _dd_vertices(n: int, rows: list[tuple[int, int]]) -> list[tuple[Fraction, ...]]:
    """Double description for {x >= 0, x[mask] <= r}; returns vertices.

    Constraint normals are 0/1 mask rows plus the nonnegativity rows.
    The singleton rows bound the box, so the region is a polytope.
    """
    ubs = [None] * n
    for mask, r in rows:
        if bit_count(mask) == 1:
            v = mask.bit_length() - 1
            r = Fraction(r)
            if ubs[v] is None or r < ubs[v]:
                ubs[v] = r
    if any(u is None for u in ubs):
        raise ValueError("singleton bounds required for boundedness")
    # Constraint list: index 0..n-1 nonneg (-x_v <= 0), then upper rows.
    normals: list[tuple[Fraction, ...]] = []
    rhss: list[Fraction] = []
    for v in range(n):
        e = [ZERO] * n
        e[v] = -ONE
        normals.append(tuple(e))
        rhss.append(ZERO)
    box_rows = []
    other_rows = []
    for mask, r in rows:
        if bit_count(mask) == 1 and Fraction(r) == ubs[mask.bit_length() - 1]:
            box_rows.append((mask, Fraction(r)))
        else:
            other_rows.append((mask, Fraction(r)))
    seen_single = set()
    dedup_box = []
    for mask, r in box_rows:
        if mask not in seen_single:
            seen_single.add(mask)
            dedup_box.append((mask, r))
    for mask, r in dedup_box + other_rows:
        normals.append(
            tuple(ONE if (mask >> v) & 1 else ZERO for v in range(n))
        )
        rhss.append(r)
    nbox = n + len(dedup_box)

    # Box vertices with tight bitmasks over the first nbox constraints.
    verts: list[tuple[tuple[Fraction, ...], int]] = []
    for bits in range(1 << n):
        coords = tuple(
            ubs[v] if (bits >> v) & 1 else ZERO for v in range(n)
        )
        tight = 0
        for i in range(nbox):
            if _row_value(normals[i], coords) == rhss[i]:
                tight |= 1 << i
        verts.append((coords, tight))
    uniq = {}
    for coords, tight in verts:
        uniq[coords] = tight
    verts = list(uniq.items())

    processed = nbox
    for ridx in range(nbox, len(normals)):
        normal, rhs = normals[ridx], rhss[ridx]
        vals = [_row_value(normal, coords) - rhs for coords, _ in verts]
        keep = [i for i, s in enumerate(vals) if s <= 0]
        out = [i for i, s in enumerate(vals) if s > 0]
        if not out:
            verts = [
                (coords, tight | (1 << ridx) if vals[i] == 0 else tight)
                for i, (coords, tight) in enumerate(verts)
            ]
            processed += 1
            continue
        newpts: dict[tuple[Fraction, ...], int] = {}
        for i in keep:
            si = vals[i]
            if si == 0:
                continue  # already on the new hyperplane
            ci, ti = verts[i]
            for j in out:
                cj, tj = verts[j]
                common = ti & tj
                if bit_count(common) < n - 1:
                    continue
                if not _tight_rank_at_least(normals, common, n - 1):
                    continue
                sj = vals[j]
                t = si / (si - sj)  # si < 0 < sj
                coords = tuple(
                    a + t * (b - a) for a, b in zip(ci, cj)
                )
                tight = 1 << ridx
                for idx in range(processed):
                    if _row_value(normals[idx], coords) == rhss[idx]:
                        tight |= 1 << idx
                newpts.setdefault(coords, tight)
        keep_set = set(keep)
        verts = [
            (coords, tight | (1 << ridx) if vals[i] == 0 else tight)
            for i, (coords, tight) in enumerate(verts)
            if i in keep_set
        ] + list(newpts.items())
        processed += 1
    return [coords for coords, _ in verts]


def _row_value(normal: tuple[Fraction, ...], coords: tuple[Fraction, ...]) -> Fraction:
    return sum((a * b for a, b in zip(normal, coords) if a), ZERO)


def _tight_rank_at_least(normals, common: int, need: int) -> bool:
    mat = [list(normals[i]) for i in iter_bits(common)]
    if len(mat) < need:
        return False
    rank = 0
    ncols = len(normals[0])
    rowi = 0
    for col in range(ncols):
        piv = None
        for r in range(rowi, len(mat)):
            if mat[r][col]:
                piv = r
                break
        if piv is None:
            continue
        mat[rowi], mat[piv] = mat[piv], mat[rowi]
        inv = ONE / mat[rowi][col]
        mat[rowi] = [v * inv for v in mat[rowi]]
        for r in range(len(mat)):
            if r != rowi and mat[r][col]:
                f = mat[r][col]
                mat[r] = [a - f * b for a, b in zip(mat[r], mat[rowi])]
        rank += 1
        rowi += 1
        if rank >= need:
            return True
    return rank >= need


# -- ratios ---------------------------------------------------------------


def ratio(b: PolytopeRef, a: PolytopeRef, check_rq_theorem: bool = True):
    """B:A = least t with tA containing B; max of the A-gauge over B's
    vertices.

    For (B, A) = (R, Q) the value is recomputed through the restricted
    matching/cover identity max over U of nu*(L_U) / nu(L_U), and the
    two routes must agree.
    """
    if b.n != a.n:
        raise DomainError("dimension mismatch")
    best = ZERO
    for v in vertices(b):
        if all(x == 0 for x in v):
            continue
        g = psi(a, v)
        if g == INF:
            return INF
        if g > best:
            best = g
    if (
        check_rq_theorem
        and b.kind == "R"
        and a.kind == "Q"
        and a.complex_ == b.system.intersection_complex()
    ):
        via = ratio_rq_via_matchings(b.system)
        assert via == best, f"ratio routes disagree: {best} vs {via}"
    return best


def ratio_rq_via_matchings(system: MatroidSystem):
    """max over U of nu*(L_U) : nu(L_U) (0/0 skipped, x/0 infinite)."""
    best = ZERO
    for u in range(1, 1 << system.n):
        nu_star = nu_star_w(system.restricted(u), RatVec.ones(system.n))
        nu = Fraction(system.rank_intersection(u))
        if nu == 0:
            if nu_star > 0:
                return INF
            continue
        v = nu_star / nu
        if v > best:
            best = v
    return best


# -- matroidal matching and covering numbers -------------------------------


def nu_star_w(system: MatroidSystem, w: RatVec) -> Fraction:
    """LP max w.x over R(L), solved on the reduced constraint rows."""
    rows = []
    for m in system:
        rows.extend(_reduced_rows_matroid(m))
    merged: dict[int, int] = {}
    for mask, r in rows:
        if mask not in merged or r < merged[mask]:
            merged[mask] = r
    amat = []
    bvec = []
    for mask, r in sorted(merged.items()):
        amat.append([ONE if (mask >> v) & 1 else ZERO for v in range(system.n)])
        bvec.append(Fraction(r))
    value, _, _ = solve_max_slack(amat, bvec, list(w))
    return value


def tau_star_w(system: MatroidSystem, w: RatVec) -> Fraction:
    """The covering-side LP: weights y_i(U) on the flats of each matroid,
    minimizing the total rank mass subject to covering w."""
    cols: list[tuple[int, Fraction]] = []  # (mask, rank cost)
    for m in system:
        for f in m.flats():
            cols.append((f, Fraction(m.rank(f))))
    n = system.n
    rows = []
    for v in range(n):
        coeffs = [ONE if (mask >> v) & 1 else ZERO for mask, _ in cols]
        rows.append((coeffs, ">=", w[v]))
    res = solve(
        LPProblem.make("min", [cost for _, cost in cols], rows)
    )
    if res.status != "optimal":
        raise Infeasible("covering LP unexpectedly " + res.status)
    return res.objective


def nu_w(system: MatroidSystem, w: RatVec) -> Fraction:
    """Max weight of a common independent set, brute force."""
    if (1 << system.n) > SUBSET_CAP:
        raise CapExceeded("ground set too large for brute force")
    best = ZERO
    for s in range(1 << system.n):
        if all(m.is_independent(s) for m in system):
            val = w.sum_over(s)
            if val > best:
                best = val
    return best


def tau_w(system: MatroidSystem, w: RatVec) -> Fraction:
    """Minimum total size of an integral cover.

    Integral covers with demands at most one are exactly choices of one
    spanned set per matroid covering every positive-weight element, by
    the level-set decomposition of integral vectors; larger demands are
    out of scope here.
    """
    demands = 0
    for v in range(system.n):
        if w[v] > 1:
            raise CapExceeded("integral covers supported for w <= 1 only")
        if w[v] > 0:
            demands |= 1 << v
    if demands == 0:
        return ZERO
    options: list[tuple[int, int]] = []  # (covered mask, cost)
    for m in system:
        for f in m.flats():
            options.append((f & demands, m.rank(f)))
    # Pareto-prune: drop options covered more cheaply elsewhere.
    options.sort(key=lambda t: (t[1], -bit_count(t[0])))
    kept: list[tuple[int, int]] = []
    for cov, cost in options:
        if not any(cov & ~c2 == 0 and cost >= cost2 for c2, cost2 in kept):
            kept.append((cov, cost))
    best = [sum(cost for _, cost in kept) + 1]
    memo: dict[int, int] = {}

    def dfs(remaining: int, spent: int):
        if remaining == 0:
            best[0] = min(best[0], spent)
            return
        if spent >= best[0]:
            return
        seen = memo.get(remaining)
        if seen is not None and seen <= spent:
            return
        memo[remaining] = spent
        low = next(iter_bits(remaining))
        for cov, cost in kept:
            if (cov >> low) & 1:
                dfs(remaining & ~cov, spent + cost)

    dfs(demands, 0)
    return Fraction(best[0])


@dataclass(frozen=True)
class MatroidalNumbers:
    nu: Fraction
    nu_star: Fraction
    tau_star: Fraction
    tau: Fraction


def matroidal_numbers(system: MatroidSystem, w: RatVec) -> MatroidalNumbers:
    """All four weighted matroidal numbers; the LP pair must coincide."""
    if not w.is_nonnegative():
        raise DomainError("weights must be non-negative")
    ns = nu_star_w(system, w)
    ts = tau_star_w(system, w)
    assert ns == ts, f"LP duality violated: {ns} != {ts}"
    return MatroidalNumbers(
        nu=nu_w(system, w),
        nu_star=ns,
        tau_star=ts,
        tau=tau_w(system, w),
    )


def f_span(m: Matroid, f: RatVec) -> RatVec:
    """The spanned weight function, by a descending threshold sweep.

    f^M(v) = max over the values a of f with v in span({u : f(u) >= a}).
    """
    if not f.is_nonnegative():
        raise DomainError("f must be non-negative")
    values = sorted(set(f.values), reverse=True)
    out: list[Fraction | None] = [None] * m.n
    for a in values:
        s = 0
        for u in range(m.n):
            if f[u] >= a:
                s |= 1 << u
        sp = m.span(s)
        for v in iter_bits(sp):
            if out[v] is None:
                out[v] = a
    return RatVec([x if x is not None else ZERO for x in out])


# -- hypergraph numbers ----------------------------------------------------


@dataclass(frozen=True)
class HypergraphNumbers:
    nu: Fraction
    nu_star: Fraction
    tau_star: Fraction
    tau: Fraction
    w_star: Fraction | None  # None when some edge is empty


def hyper_nu_star_w(h: Hypergraph, w: RatVec) -> Fraction:
    if any(e == 0 for e in h.edges):
        raise EmptyEdge("fractional matching undefined with an empty edge")
    amat = []
    bvec = []
    for v in range(h.n):
        amat.append([ONE if (e >> v) & 1 else ZERO for e in h.edges])
        bvec.append(ONE)
    value, _, _ = solve_max_slack(amat, bvec, list(w))
    return value


def hyper_tau_star_w(h: Hypergraph, w: RatVec) -> Fraction:
    rows = []
    for i, e in enumerate(h.edges):
        coeffs = [ONE if (e >> v) & 1 else ZERO for v in range(h.n)]
        rows.append((coeffs, ">=", w[i]))
    res = solve(LPProblem.make("min", [ONE] * h.n, rows))
    if res.status != "optimal":
        raise Infeasible("fractional cover LP " + res.status)
    return res.objective


def hyper_nu_w(h: Hypergraph, w: RatVec) -> Fraction:
    """Max weight of a matching (integral fractional matching)."""
    edges = list(h.edges)
    best = [ZERO]

    def dfs(i: int, used: int, val: Fraction):
        if val > best[0]:
            best[0] = val
        if i == len(edges):
            return
        rest = sum((w[j] for j in range(i, len(edges)) if w[j] > 0), ZERO)
        if val + rest <= best[0]:
            return
        dfs(i + 1, used, val)
        if edges[i] & used == 0:
            dfs(i + 1, used | edges[i], val + w[i])

    dfs(0, 0, ZERO)
    return best[0]


def hyper_tau_w(h: Hypergraph, w: RatVec) -> Fraction:
    """Min size of an integral cover with multiplicities: t[e] >= ceil(w_e)."""
    demands = [max(0, -((-w[i].numerator) // w[i].denominator)) for i in range(len(h.edges))]
    if any(d > 0 and e == 0 for d, e in zip(demands, h.edges)):
        raise Infeasible("empty edge with positive demand")
    t = [0] * h.n
    # Greedy start for the incumbent.
    best = [sum(d * 1 for d in demands) * max(1, h.n)]

    def unmet():
        for i, e in enumerate(h.edges):
            have = sum(t[v] for v in iter_bits(e))
            if have < demands[i]:
                return i
        return -1

    def dfs(spent: int):
        if spent >= best[0]:
            return
        i = unmet()
        if i < 0:
            best[0] = spent
            return
        for v in iter_bits(h.edges[i]):
            t[v] += 1
            dfs(spent + 1)
            t[v] -= 1

    dfs(0)
    return Fraction(best[0])


def hyper_w_star(h: Hypergraph) -> Fraction:
    """Fractional width: min total f with sum_T f(T)|T & S| >= 1 per edge."""
    m = len(h.edges)
    amat = []
    bvec = []
    for i, s in enumerate(h.edges):
        amat.append([Fraction(bit_count(t & s)) for t in h.edges])
        bvec.append(ONE)
    # Dual form: max sum g with sum_S g_S |T & S| <= 1 for every T.
    value, _, _ = solve_max_slack(amat, bvec, [ONE] * m)
    return value


def hyper_numbers(h: Hypergraph, w: RatVec | None = None) -> HypergraphNumbers:
    if w is None:
        w = RatVec.ones(len(h.edges))
    if len(w) != len(h.edges):
        raise DomainError("one weight per edge required")
    if not w.is_nonnegative():
        raise DomainError("weights must be non-negative")
    ns = hyper_nu_star_w(h, w)
    ts = hyper_tau_star_w(h, w)
    assert ns == ts, f"LP duality violated: {ns} != {ts}"
    return HypergraphNumbers(
        nu=hyper_nu_w(h, w),
        nu_star=ns,
        tau_star=ts,
        tau=hyper_tau_w(h, w),
        w_star=hyper_w_star(h),
    )
