"""Checkers and exact solvers for domination, total domination, and
upper domination.

gamma_exact and gamma_total_exact treat the problem as minimum set cover
(universe = vertices, sets = closed / open neighborhoods) and run a
descending sequence of decision searches: a greedy incumbent first, then
"is there a cover one smaller?" until a search completes with no cover.
On bipartite graphs two shortcuts apply: total domination splits into
two independent one-sided covers, and a domination refutation can often
dismiss all ways of splitting k vertices across the two sides by
max-coverage counting, far faster than raw branching.

gamma_upper_exact maximizes |D| over minimal dominating sets with an
in/out decision search in index order, pruned by Ore feasibility (every
chosen vertex must still be able to end up lonely or privately
neighbored) and, when the caller supplies the clique size b of a clique
partition, by the packing inequality b*l + 2*s <= n.

gamma_oracle is an independent brute force over subsets, used as ground
truth in tests; it shares nothing with the branch-and-bound code paths
except the checkers.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .graphs import Graph, iter_bits

DEFAULT_MAX_NODES = 10_000_000
DEFAULT_TIME_LIMIT = 60.0

ORACLE_CAP = {"gamma": 20, "gamma_total": 20, "upper": 16}


class NotMinimalError(ValueError):
    """A social vertex of the set has no private neighbor."""

    def __init__(self, vertex: int):
        self.vertex = vertex
        super().__init__(f"vertex {vertex} is social but has no private neighbor")


class NoTotalDominationError(ValueError):
    """The graph has an isolated vertex, so no total dominating set exists."""


class OracleCapError(ValueError):
    """Graph too large for the brute-force oracle."""


class BudgetExhausted(Exception):
    """Internal: node or time budget ran out mid-search."""


@dataclass
class Budget:
    max_nodes: int = DEFAULT_MAX_NODES
    time_limit: float | None = DEFAULT_TIME_LIMIT


@dataclass
class SolveResult:
    """An invariant value with witness and provenance.

    lo/hi is the proven interval: for gamma and gamma_total the witness
    size is hi and lo is the best proven lower bound; for upper
    domination the witness size is lo.  optimal means lo == hi.
    """

    quantity: str
    value: int
    witness: tuple[int, ...]
    optimal: bool
    method: str
    lo: int
    hi: int
    nodes: int = 0
    elapsed: float = 0.0


@dataclass
class VertexClassification:
    lonely: tuple[int, ...]
    social: tuple[int, ...]
    private_neighbor: dict[int, int] = field(default_factory=dict)


class _SearchState:
    __slots__ = ("nodes", "max_nodes", "deadline")

    def __init__(self, budget: Budget):
        self.nodes = 0
        self.max_nodes = budget.max_nodes
        self.deadline = (
            None if budget.time_limit is None else time.monotonic() + budget.time_limit
        )

    def tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.max_nodes:
            raise BudgetExhausted
        if self.deadline is not None and self.nodes % 4096 == 0:
            if time.monotonic() > self.deadline:
                raise BudgetExhausted


# ==== checkers ====


def _mask_from(g: Graph, vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range for graph with {g.n} vertices")
        m |= 1 << v
    return m


def is_dominating(g: Graph, d: Iterable[int]) -> bool:
    dm = _mask_from(g, d)
    cover = 0
    for v in iter_bits(dm):
        cover |= g.adj[v]
    return (cover | dm) == g.full_mask()


def is_total_dominating(g: Graph, d: Iterable[int]) -> bool:
    dm = _mask_from(g, d)
    cover = 0
    for v in iter_bits(dm):
        cover |= g.adj[v]
    return cover == g.full_mask()


def classify(g: Graph, d: Iterable[int]) -> VertexClassification:
    """Split a dominating set into lonely and social vertices, recording a
    private neighbor (smallest index) for each social vertex.

    Raises NotMinimalError when a social vertex has no private neighbor,
    and ValueError when d is not dominating at all.
    """
    dm = _mask_from(g, d)
    if not is_dominating(g, d):
        raise ValueError("set is not dominating")
    lonely = []
    social = []
    private: dict[int, int] = {}
    for v in iter_bits(dm):
        if g.adj[v] & dm == 0:
            lonely.append(v)
            continue
        social.append(v)
        for p in iter_bits(g.adj[v] & ~dm):
            if g.adj[p] & dm == 1 << v:
                private[v] = p
                break
        else:
            raise NotMinimalError(v)
    return VertexClassification(tuple(lonely), tuple(social), private)


def is_minimal_dominating(g: Graph, d: Iterable[int]) -> bool:
    """Ore's criterion: d dominates and every member is lonely or has a
    private neighbor.  Agrees with the remove-one-element definition."""
    try:
        classify(g, d)
    except ValueError:  # not dominating, or NotMinimalError
        return False
    return True


def shrink_to_minimal(g: Graph, d: Iterable[int]) -> tuple[int, ...]:
    """Drop removable vertices (smallest first) until the set is minimal."""
    dm = _mask_from(g, d)
    if not is_dominating(g, iter_bits(dm)):
        raise ValueError("set is not dominating")
    for v in list(iter_bits(dm)):
        trial = dm & ~(1 << v)
        if is_dominating(g, iter_bits(trial)):
            dm = trial
    return tuple(iter_bits(dm))


# ==== brute-force oracle ====


def gamma_oracle(g: Graph, kind: str = "gamma") -> SolveResult:
    """Independent ground truth: subsets by increasing size for gamma and
    gamma_total, decreasing size with a minimality check for upper."""
    from itertools import combinations

    if kind not in ORACLE_CAP:
        raise ValueError(f"unknown oracle kind {kind!r}")
    if g.n > ORACLE_CAP[kind]:
        raise OracleCapError(f"{g.n} vertices exceeds oracle cap {ORACLE_CAP[kind]}")
    if g.n == 0:
        raise ValueError("empty graph")
    start = time.monotonic()
    if kind == "upper":
        for k in range(g.n, 0, -1):
            for combo in combinations(range(g.n), k):
                if is_minimal_dominating(g, combo):
                    return SolveResult(
                        kind, k, combo, True, "oracle", lo=k, hi=k,
                        elapsed=time.monotonic() - start,
                    )
        raise AssertionError("no minimal dominating set found")  # unreachable
    check = is_dominating if kind == "gamma" else is_total_dominating
    if kind == "gamma_total" and any(a == 0 for a in g.adj):
        raise NoTotalDominationError("graph has an isolated vertex")
    for k in range(1, g.n + 1):
        for combo in combinations(range(g.n), k):
            if check(g, combo):
                return SolveResult(
                    kind, k, combo, True, "oracle", lo=k, hi=k,
                    elapsed=time.monotonic() - start,
                )
    raise AssertionError("vertex set itself should dominate")  # unreachable


# ==== set-cover engine ====


class _CoverInstance:
    """A min-cover problem: cover `universe` with the given bit-vector
    sets.  ids maps set positions back to vertex indices."""

    __slots__ = ("universe", "covers", "ids", "elem")

    def __init__(self, universe: int, covers: Sequence[int], ids: Sequence[int]):
        self.universe = universe
        self.covers = list(covers)
        self.ids = list(ids)
        # elem[e] = bitmask over set positions whose cover contains e
        elem: dict[int, int] = {}
        for i, c in enumerate(self.covers):
            for e in iter_bits(c & universe):
                elem[e] = elem.get(e, 0) | (1 << i)
        self.elem = elem


def _greedy_cover(inst: _CoverInstance) -> list[int]:
    remaining = inst.universe
    chosen: list[int] = []
    while remaining:
        best_i = -1
        best_gain = 0
        for i, c in enumerate(inst.covers):
            gain = (c & remaining).bit_count()
            if gain > best_gain:
                best_gain, best_i = gain, i
        if best_gain == 0:
            raise ValueError("universe is not coverable")
        chosen.append(best_i)
        remaining &= ~inst.covers[best_i]
    return chosen


def _packing_lower(inst: _CoverInstance) -> int:
    """Count elements whose candidate sets are pairwise disjoint; each
    needs its own set in any cover."""
    order = sorted(inst.elem, key=lambda e: inst.elem[e].bit_count())
    blocked = 0
    lb = 0
    for e in order:
        if inst.elem[e] & blocked == 0:
            lb += 1
            blocked |= inst.elem[e]
    return lb


def _exists_cover(
    inst: _CoverInstance,
    k: int,
    state: _SearchState,
    *,
    remaining: int | None = None,
    banned: int = 0,
) -> list[int] | None:
    """Find set positions (at most k) covering `remaining`, or prove none
    exist among the non-banned sets.  Exact decision search."""
    covers = inst.covers
    elem = inst.elem

    def rec(remaining: int, banned: int, k: int, chosen: list[int]):
        state.tick()
        # unit propagation, zero-candidate pruning, branch-element choice
        while True:
            if not remaining:
                return chosen
            if k == 0:
                return None
            best_cands = 0
            best_cnt = 1 << 30
            forced = -1
            for e in iter_bits(remaining):
                cands = elem[e] & ~banned
                cnt = cands.bit_count()
                if cnt == 0:
                    return None
                if cnt == 1:
                    forced = cands.bit_length() - 1
                    break
                if cnt < best_cnt:
                    best_cnt, best_cands = cnt, cands
            if forced >= 0:
                remaining &= ~covers[forced]
                k -= 1
                chosen = chosen + [forced]
                continue
            break
        need = remaining.bit_count()
        gains = sorted(
            (
                (covers[i] & remaining).bit_count()
                for i in range(len(covers))
                if not banned >> i & 1
            ),
            reverse=True,
        )
        if sum(gains[:k]) < need:
            return None
        if k == 1:
            for i in iter_bits(best_cands):
                if covers[i] & remaining == remaining:
                    return chosen + [i]
            return None
        order = sorted(
            iter_bits(best_cands), key=lambda i: -(covers[i] & remaining).bit_count()
        )
        for i in order:
            res = rec(remaining & ~covers[i], banned, k - 1, chosen + [i])
            if res is not None:
                return res
            banned |= 1 << i  # anything through i is now fully refuted
        return None

    return rec(inst.universe if remaining is None else remaining, banned, k, [])


def _max_cover_atleast(
    sets: Sequence[int], universe: int, count: int, target: int, state: _SearchState
) -> bool:
    """Can `count` of the sets cover at least `target` universe elements?
    Exact include/exclude search with a top-marginal-sum bound."""
    if target <= 0:
        return True
    if count <= 0:
        return False
    pool = sorted((s & universe for s in sets if s & universe), key=int.bit_count)

    def rec(pool: list[int], covered: int, covered_cnt: int, left: int) -> bool:
        state.tick()
        if covered_cnt >= target:
            return True
        if left == 0 or not pool:
            return False
        ranked = sorted(pool, key=lambda s: (s & ~covered).bit_count())
        marg = [(ranked[i] & ~covered).bit_count() for i in range(len(ranked))]
        if covered_cnt + sum(marg[-left:]) < target:
            return False
        best = ranked[-1]
        rest = ranked[:-1]
        new_cov = covered | best
        if rec(rest, new_cov, new_cov.bit_count(), left - 1):
            return True
        return rec(rest, covered, covered_cnt, left)

    return rec(pool, 0, 0, count)


def _min_cover(
    inst: _CoverInstance,
    state: _SearchState,
    *,
    refuter=None,
    lb_floor: int = 0,
) -> tuple[list[int], int, bool]:
    """Minimum cover by descending decision probes.

    Returns (best set positions, proven lower bound, optimal).  The
    refuter, when given, may prove "no k-cover" cheaply; returning False
    just falls through to the exact search.
    """
    if inst.universe == 0:
        return [], 0, True
    best = _greedy_cover(inst)
    maxgain = max(c.bit_count() for c in inst.covers)
    need = inst.universe.bit_count()
    lb = max(lb_floor, -(-need // maxgain), _packing_lower(inst))
    try:
        while len(best) > lb:
            k = len(best) - 1
            if refuter is not None and refuter(k):
                lb = len(best)
                break
            found = _exists_cover(inst, k, state)
            if found is None:
                lb = len(best)
                break
            best = found
        return best, lb, True
    except BudgetExhausted:
        return best, lb, False


def _lexmin_cover(
    inst: _CoverInstance, size: int, state: _SearchState
) -> list[int]:
    """Lexicographically smallest cover of exactly `size` sets, found by
    forced-inclusion decision probes in position order."""
    chosen: list[int] = []
    remaining = inst.universe
    banned = 0
    for i in range(len(inst.covers)):
        if len(chosen) == size:
            break
        if banned >> i & 1:
            continue
        probe = _exists_cover(
            inst, size - len(chosen) - 1, state,
            remaining=remaining & ~inst.covers[i], banned=banned | (1 << i),
        )
        # position i itself is banned in the probe so the completion
        # cannot reuse it; the probe only checks the rest is finishable
        if probe is not None:
            chosen.append(i)
            remaining &= ~inst.covers[i]
        else:
            banned |= 1 << i
    if remaining or len(chosen) != size:
        raise AssertionError("lexmin pass lost the known cover size")
    return chosen


# ==== bipartite structure ====


def bipartition(g: Graph) -> tuple[int, int] | None:
    """(side0 mask, side1 mask) from BFS 2-coloring, or None if an odd
    cycle exists.  Isolated vertices land on side 0."""
    color = [-1] * g.n
    side = [0, 0]
    for start in range(g.n):
        if color[start] >= 0:
            continue
        color[start] = 0
        side[0] |= 1 << start
        queue = [start]
        while queue:
            v = queue.pop()
            for u in iter_bits(g.adj[v]):
                if color[u] < 0:
                    color[u] = 1 - color[v]
                    side[color[u]] |= 1 << u
                    queue.append(u)
                elif color[u] == color[v]:
                    return None
    return side[0], side[1]


def _bipartite_gamma_refuter(g: Graph, sides: tuple[int, int], state: _SearchState):
    """Closure proving "no dominating set of size k" on a bipartite graph.

    A k-set splits i|j across the sides.  Side B is covered only by open
    neighborhoods from side A plus the j self-covered members, so when no
    i neighborhoods reach |B|-j elements (and symmetrically), the split
    is impossible.  All splits impossible proves gamma > k.
    """
    mask_a, mask_b = sides
    a_sets = [g.adj[v] for v in iter_bits(mask_a)]
    b_sets = [g.adj[v] for v in iter_bits(mask_b)]
    na = mask_a.bit_count()
    nb = mask_b.bit_count()

    def refute(k: int) -> bool:
        for i in range(k + 1):
            j = k - i
            if not _max_cover_atleast(a_sets, mask_b, i, nb - j, state):
                continue
            if not _max_cover_atleast(b_sets, mask_a, j, na - i, state):
                continue
            return False  # split survives the relaxation: inconclusive
        return True

    return refute


# ==== gamma and gamma_total ====


def _finish(quantity, best_ids, lo, optimal, method, state, start):
    value = len(best_ids)
    return SolveResult(
        quantity,
        value,
        tuple(sorted(best_ids)),
        optimal and lo == value,
        method,
        lo=lo,
        hi=value,
        nodes=state.nodes,
        elapsed=time.monotonic() - start,
    )


def gamma_exact(
    g: Graph, budget: Budget | None = None, *, deterministic: bool = False
) -> SolveResult:
    """Exact domination number with witness; optimal=False only on budget
    exhaustion, in which case the witness is the best cover found."""
    if g.n == 0:
        raise ValueError("empty graph")
    start = time.monotonic()
    state = _SearchState(budget or Budget())
    inst = _CoverInstance(g.full_mask(), [g.closed(v) for v in range(g.n)], range(g.n))
    sides = bipartition(g)
    refuter = _bipartite_gamma_refuter(g, sides, state) if sides else None
    best, lb, complete = _min_cover(inst, state, refuter=refuter)
    if deterministic and complete:
        try:
            best = _lexmin_cover(inst, len(best), state)
        except BudgetExhausted:
            pass  # value stays proven; witness just is not the lex-min one
    return _finish("gamma", best, lb, complete, "branch-and-bound", state, start)


def gamma_total_exact(
    g: Graph, budget: Budget | None = None, *, deterministic: bool = False
) -> SolveResult:
    """Exact total domination number.  Errors on isolated vertices.  On
    bipartite graphs the problem splits into two independent one-sided
    covers, solved separately (method "reduction")."""
    if g.n == 0:
        raise ValueError("empty graph")
    for v in range(g.n):
        if g.adj[v] == 0:
            raise NoTotalDominationError(f"vertex {v} is isolated")
    start = time.monotonic()
    state = _SearchState(budget or Budget())
    sides = bipartition(g)
    if sides is not None:
        mask_a, mask_b = sides
        ids_a = list(iter_bits(mask_a))
        ids_b = list(iter_bits(mask_b))
        # D-members on side A are the only open coverage side B can get
        inst_b = _CoverInstance(mask_b, [g.adj[v] for v in ids_a], ids_a)
        inst_a = _CoverInstance(mask_a, [g.adj[v] for v in ids_b], ids_b)
        got_b, lo_b, ok_b = _min_cover(inst_b, state)
        got_a, lo_a, ok_a = _min_cover(inst_a, state)
        if deterministic and ok_a and ok_b:
            try:
                got_b = _lexmin_cover(inst_b, len(got_b), state)
                got_a = _lexmin_cover(inst_a, len(got_a), state)
            except BudgetExhausted:
                pass
        ids = [ids_a[i] for i in got_b] + [ids_b[i] for i in got_a]
        return _finish("gamma_total", ids, lo_a + lo_b, ok_a and ok_b,
                       "reduction", state, start)
    inst = _CoverInstance(g.full_mask(), list(g.adj), range(g.n))
    best, lb, complete = _min_cover(inst, state)
    if deterministic and complete:
        try:
            best = _lexmin_cover(inst, len(best), state)
        except BudgetExhausted:
            pass
    return _finish("gamma_total", best, lb, complete, "branch-and-bound", state, start)


# ==== upper domination ====


class _Done(Exception):
    pass


def _greedy_independent(g: Graph) -> int:
    """Ascending-index maximal independent set: always an (all-lonely)
    minimal dominating set, so a valid incumbent for upper domination."""
    m = 0
    for v in range(g.n):
        if g.adj[v] & m == 0:
            m |= 1 << v
    return m


def gamma_upper_exact(
    g: Graph,
    budget: Budget | None = None,
    *,
    clique_size: int | None = None,
    deterministic: bool = False,
) -> SolveResult:
    """Maximum size of a minimal dominating set.

    clique_size, when the graph has a partition into cliques of that
    size b, activates the packing bound b*l + 2*s <= n (l lonely members,
    s social), which in particular caps every minimal dominating set at
    n/2 vertices.
    """
    n = g.n
    if n == 0:
        raise ValueError("empty graph")
    start = time.monotonic()
    state = _SearchState(budget or Budget())
    adj = g.adj
    closed = [g.closed(v) for v in range(n)]
    full = g.full_mask()

    seed = _greedy_independent(g)
    best_mask = seed
    best_size = seed.bit_count()
    global_ub = n // 2 if clique_size is not None else n
    if best_size >= global_ub:
        witness = tuple(iter_bits(best_mask))
        return SolveResult("upper", best_size, witness, True, "reduction",
                           lo=best_size, hi=best_size, nodes=0,
                           elapsed=time.monotonic() - start)

    surcharge = clique_size - 2 if clique_size is not None else 0

    def feasible(in_mask: int, out_mask: int) -> bool:
        # every chosen vertex must still be able to satisfy Ore: pools
        # only shrink as IN grows, so a failure here is permanent
        for d in iter_bits(in_mask):
            if adj[d] & in_mask == 0:
                continue
            bit_d = 1 << d
            for p in iter_bits(adj[d] & ~in_mask):
                if adj[p] & in_mask == bit_d:
                    break
            else:
                return False
        return True

    def rec(idx: int, in_mask: int, out_mask: int, covered: int) -> None:
        nonlocal best_mask, best_size
        state.tick()
        in_cnt = in_mask.bit_count()
        if in_cnt + (n - idx) <= best_size:
            return
        if surcharge:
            perm_lonely = sum(
                1 for d in iter_bits(in_mask) if adj[d] & ~out_mask == 0
            )
            if (n - surcharge * perm_lonely) // 2 <= best_size:
                return
        for u in iter_bits(full & ~covered):
            if closed[u] & ~out_mask == 0:
                return  # u can never be dominated now
        if not feasible(in_mask, out_mask):
            return
        if idx == n:
            if covered == full and in_cnt > best_size:
                best_mask, best_size = in_mask, in_cnt
                if best_size >= global_ub:
                    raise _Done
            return
        bit = 1 << idx
        rec(idx + 1, in_mask | bit, out_mask, covered | closed[idx])
        rec(idx + 1, in_mask, out_mask | bit, covered)

    optimal = True
    try:
        rec(0, 0, 0, 0)
    except _Done:
        pass
    except BudgetExhausted:
        optimal = False
    if deterministic and optimal:
        try:
            best_mask = _lexmin_minimal_of_size(g, best_size, state, clique_size)
        except BudgetExhausted:
            pass
    witness = tuple(iter_bits(best_mask))
    hi = best_size if optimal else min(global_ub, n)
    return SolveResult(
        "upper", best_size, witness, optimal,
        "branch-and-bound", lo=best_size, hi=hi,
        nodes=state.nodes, elapsed=time.monotonic() - start,
    )


def _exists_minimal_of_size(
    g: Graph, size: int, prefix_in: int, prefix_out: int, start_idx: int,
    state: _SearchState,
) -> bool:
    """Decision probe: can the prefix decisions extend to a minimal
    dominating set with exactly `size` members?"""
    n = g.n
    adj = g.adj
    closed = [g.closed(v) for v in range(n)]
    full = g.full_mask()

    def rec(idx: int, in_mask: int, out_mask: int, covered: int) -> bool:
        state.tick()
        in_cnt = in_mask.bit_count()
        if in_cnt > size or in_cnt + (n - idx) < size:
            return False
        for u in iter_bits(full & ~covered):
            if closed[u] & ~out_mask == 0:
                return False
        for d in iter_bits(in_mask):
            if adj[d] & in_mask == 0:
                continue
            bit_d = 1 << d
            for p in iter_bits(adj[d] & ~in_mask):
                if adj[p] & in_mask == bit_d:
                    break
            else:
                return False
        if idx == n:
            return covered == full and in_cnt == size
        bit = 1 << idx
        return rec(idx + 1, in_mask | bit, out_mask, covered | closed[idx]) or rec(
            idx + 1, in_mask, out_mask | bit, covered
        )

    covered = 0
    for v in iter_bits(prefix_in):
        covered |= closed[v]
    return rec(start_idx, prefix_in, prefix_out, covered)


def _lexmin_minimal_of_size(
    g: Graph, size: int, state: _SearchState, clique_size: int | None
) -> int:
    """Lexicographically smallest minimal dominating set of the given
    (known-achievable) size, by forced-decision probes in index order."""
    in_mask = 0
    out_mask = 0
    for v in range(g.n):
        if in_mask.bit_count() == size:
            out_mask |= ((1 << g.n) - 1) & ~in_mask & ~out_mask
            break
        bit = 1 << v
        if _exists_minimal_of_size(g, size, in_mask | bit, out_mask, v + 1, state):
            in_mask |= bit
        else:
            out_mask |= bit
    if in_mask.bit_count() != size:
        raise AssertionError("lexmin pass lost the known witness size")
    return in_mask
