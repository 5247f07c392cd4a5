"""Domination lower bounds for the connectivity of independence complexes.

gamma_e_graph is the least number of edges whose union dominates every
vertex; gamma_e_hyper minimizes |union K| - |K| over edge sequences
that are frugal (every step contributes at least two new vertices) and
dominating (every leftover vertex is the sole remainder of some edge).
Both quantities bound eta_h of the independence complex from below.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Hypergraph, bit_count, iter_bits
from .errors import CapExceeded
from .extval import INF

GAME_EXHAUSTIVE_EDGES = 12
SEQUENCE_EDGE_CAP = 16


@dataclass(frozen=True)
class FrugalSequence:
    """An ordered frugal edge sequence with its domination value."""

    edges: tuple[int, ...]
    value: int

    def __post_init__(self):
        seen = 0
        total = 0
        for e in self.edges:
            new = e & ~seen
            if bit_count(new) <= 1:
                raise ValueError("sequence is not frugal")
            total += bit_count(new) - 1
            seen |= e
        if total != self.value:
            raise ValueError("value does not match the edge sequence")

    def union(self) -> int:
        out = 0
        for e in self.edges:
            out |= e
        return out


def is_dominating(h: Hypergraph, union_mask: int) -> bool:
    """Every vertex outside union_mask is the sole remainder of an edge."""
    full = (1 << h.n) - 1
    rest = full & ~union_mask
    for v in iter_bits(rest):
        bit = 1 << v
        if not any(e & ~union_mask == bit for e in h.edges):
            return False
    return True


def gamma_e_graph(g: Hypergraph):
    """Least |F| over edge sets F whose union dominates all of V(G).

    Open domination with T = V(G): every vertex needs a neighbor inside
    the union.  Returns inf when no dominating edge set exists.
    """
    if not g.is_uniform(2):
        raise ValueError("gamma_e_graph expects a 2-uniform hypergraph")
    n = g.n
    full = (1 << n) - 1
    nbr = [0] * n
    for e in g.edges:
        u, v = e.bit_length() - 1, (e & -e).bit_length() - 1
        nbr[u] |= 1 << v
        nbr[v] |= 1 << u
    dominated_by = []
    for e in g.edges:
        u, v = e.bit_length() - 1, (e & -e).bit_length() - 1
        dominated_by.append(nbr[u] | nbr[v])
    # BFS over dominated-vertex masks.
    dist = {0: 0}
    frontier = [0]
    steps = 0
    while frontier:
        if full in dist:
            break
        steps += 1
        nxt = []
        for mask in frontier:
            for d in dominated_by:
                new = mask | d
                if new not in dist:
                    dist[new] = steps
                    nxt.append(new)
        frontier = nxt
    if full not in dist:
        return INF
    return dist[full]


def gamma_e_hyper(h: Hypergraph):
    """Exact minimum of |union K| - |K| over frugal dominating sequences.

    DP over union masks: for a fixed union, the value is minimized by
    maximizing the number of steps, and a mask is reachable with p
    steps iff some frugal order exists, which depends only on the mask.
    """
    if len(h.edges) > SEQUENCE_EDGE_CAP:
        raise CapExceeded(f"sequence search limited to {SEQUENCE_EDGE_CAP} edges")
    steps = _frugal_steps(h)
    best = None
    for mask, p in steps.items():
        if is_dominating(h, mask):
            val = bit_count(mask) - p
            if best is None or val < best:
                best = val
    return INF if best is None else best


def _frugal_steps(h: Hypergraph) -> dict[int, int]:
    """Max number of frugal steps reaching each achievable union mask.

    Every step adds at least two vertices, so relaxing masks in
    ascending popcount order is a topological pass.
    """
    reachable = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for mask in frontier:
            for e in h.edges:
                if bit_count(e & ~mask) > 1:
                    new = mask | e
                    if new not in reachable:
                        reachable.add(new)
                        nxt.append(new)
        frontier = nxt
    steps = {0: 0}
    for mask in sorted(reachable, key=bit_count):
        p = steps[mask]
        for e in h.edges:
            if bit_count(e & ~mask) > 1:
                new = mask | e
                if steps.get(new, -1) < p + 1:
                    steps[new] = p + 1
    return steps


def frugal_certificate(h: Hypergraph):
    """A frugal dominating sequence attaining gamma_e_hyper, or None."""
    value = gamma_e_hyper(h)
    if value == INF:
        return None
    steps = _frugal_steps(h)
    target = None
    for mask, p in steps.items():
        if is_dominating(h, mask) and bit_count(mask) - p == value:
            target = (mask, p)
            break
    assert target is not None
    mask, p = target
    seq: list[int] = []
    while p > 0:
        for e in h.edges:
            prev = mask & ~e
            # e must contribute >= 2 new vertices on top of some
            # predecessor mask prev' with prev' | e == mask.
            found = False
            for cand, q in steps.items():
                if q == p - 1 and cand | e == mask and bit_count(e & ~cand) > 1:
                    seq.append(e)
                    mask, p = cand, q
                    found = True
                    break
            if found:
                break
        else:
            raise AssertionError("certificate reconstruction failed")
    seq.reverse()
    total = 0
    seen = 0
    for e in seq:
        total += bit_count(e & ~seen) - 1
        seen |= e
    return FrugalSequence(edges=tuple(seq), value=total)


# -- the delete/contract game ---------------------------------------------


def _reduce_singletons(vmask: int, edges: tuple[tuple[int, int], ...]):
    """Drop singleton edges together with their vertices (induced)."""
    while True:
        single = 0
        for cur, _ in edges:
            if bit_count(cur) == 1:
                single |= cur
        if not single:
            return vmask, edges
        vmask &= ~single
        edges = tuple((cur, orig) for cur, orig in edges if cur & single == 0)


def delete_contract_certificate(h: Hypergraph, strategy: str = "auto"):
    """Replay the delete/contract game and return (bound, sequence).

    The offering side proposes a containment-minimal edge; the replying
    side deletes it or contracts it, whichever minimizes the final
    value (that minimum is what makes the bound valid).  strategy
    selects the offering side's behavior: "exhaustive" maximizes over
    all minimal edges, "greedy" always offers the first one, "auto"
    picks exhaustive up to GAME_EXHAUSTIVE_EDGES edges.

    Returns the lower bound on eta_h(I(h)) (int or inf) and the frugal
    dominating sequence of original edges (None when the bound is inf
    or 0).
    """
    if strategy == "auto":
        strategy = (
            "exhaustive" if len(h.edges) <= GAME_EXHAUSTIVE_EDGES else "greedy"
        )
    if strategy not in ("exhaustive", "greedy"):
        raise ValueError(f"unknown strategy {strategy!r}")
    exhaustive = strategy == "exhaustive"
    full = (1 << h.n) - 1
    memo: dict[tuple[int, tuple[int, ...]], object] = {}

    def value(vmask: int, edges: tuple[tuple[int, int], ...]):
        vmask, edges = _reduce_singletons(vmask, edges)
        if not edges:
            return (INF if vmask else 0), vmask, edges
        key = (vmask, tuple(cur for cur, _ in edges))
        got = memo.get(key)
        if got is None:
            got = _best_over_offers(vmask, edges)
            memo[key] = got
        return got, vmask, edges

    def _minimal_edges(edges):
        out = []
        for cur, orig in edges:
            if not any(
                other & ~cur == 0 and other != cur for other, _ in edges
            ):
                out.append((cur, orig))
        return out

    def _contract_edges(edges, cur):
        seen: dict[int, int] = {}
        for c, o in edges:
            rem = c & ~cur
            if rem and rem not in seen:
                seen[rem] = o
        return tuple(seen.items())

    def _branch(vmask, edges, cur, orig):
        deleted = tuple((c, o) for c, o in edges if c != cur)
        del_val, _, _ = value(vmask, deleted)
        con_val, _, _ = value(vmask & ~cur, _contract_edges(edges, cur))
        gain = bit_count(cur) - 1
        con_total = con_val if con_val == INF else con_val + gain
        if del_val <= con_total:
            return del_val, "delete"
        return con_total, "contract"

    def _best_over_offers(vmask, edges):
        offers = _minimal_edges(edges)
        if not exhaustive:
            offers = offers[:1]
        best = None
        for cur, orig in offers:
            val, _ = _branch(vmask, edges, cur, orig)
            if best is None or val > best:
                best = val
        return best

    start = (full, tuple((e, e) for e in h.edges))
    bound, vmask, edges = value(*start)
    if bound == INF or bound == 0:
        return bound, None

    # Replay the optimal line of play to emit the contracted sequence.
    seq: list[int] = []
    while True:
        vmask, edges = _reduce_singletons(vmask, edges)
        if not edges:
            break
        offers = _minimal_edges(edges)
        if not exhaustive:
            offers = offers[:1]
        target, _, _ = value(vmask, edges)
        chosen = None
        for cur, orig in offers:
            val, move = _branch(vmask, edges, cur, orig)
            if val == target:
                chosen = (cur, orig, move)
                break
        assert chosen is not None
        cur, orig, move = chosen
        if move == "delete":
            edges = tuple((c, o) for c, o in edges if c != cur)
        else:
            seq.append(orig)
            vmask &= ~cur
            seen: dict[int, int] = {}
            for c, o in edges:
                rem = c & ~cur
                if rem and rem not in seen:
                    seen[rem] = o
            edges = tuple(seen.items())
    certificate = FrugalSequence(
        edges=tuple(seq),
        value=sum(
            bit_count(e & ~_union_prefix(seq, i)) - 1 for i, e in enumerate(seq)
        ),
    )
    assert certificate.value == bound
    return bound, certificate


def _union_prefix(seq: list[int], i: int) -> int:
    out = 0
    for e in seq[:i]:
        out |= e
    return out
