"""Exhaustive search for small ordered Ramsey and Turán numbers.

Both engines work over a fixed decision order of the pairs of ``[N]``.  Every
copy of the target path (one per n-subset) becomes a bitmask over decision
positions, filed under the position at which its last edge is decided, so a
new decision only has to look at the copies it completes.
"""
from __future__ import annotations

import enum
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from ._accel import kernel
from .containment import find_monochromatic, find_path
from .core import (Family, OrderedColoring, OrderedGraph, PathSpec, lex_edges, n_edges,
                   path_edges)
from .errors import InvalidSpec, InvariantViolation, ResourceLimit, SizeLimitExceeded, WindowMiss
from .ramsey import ramsey_upper_bound_ap, ramsey_upper_bound_other

DEFAULT_NODE_BUDGET = 10**9
BUDGET_ENV = "ORDEREDPATHS_NODE_BUDGET"
ORDERS = ("lex", "column", "diagonal")
TURAN_EXHAUSTIVE_EDGES = 15
TURAN_MAX_EDGES = 63


def node_budget(budget: int | None = None) -> int:
    """Explicit budget, else the environment override, else 10^9."""
    if budget is not None:
        return int(budget)
    env = os.environ.get(BUDGET_ENV)
    return int(float(env)) if env else DEFAULT_NODE_BUDGET


def decision_order(N: int, order: str = "lex") -> list[tuple[int, int]]:
    if order == "lex":
        return lex_edges(N)
    if order == "column":
        return [(i, j) for j in range(2, N + 1) for i in range(1, j)]
    if order == "diagonal":
        return [(i, i + d) for d in range(1, N) for i in range(1, N - d + 1)]
    raise ValueError(f"unknown decision order {order!r}; expected one of {ORDERS}")


@dataclass(frozen=True)
class CopyIndex:
    """Copy masks of ``spec`` in K_N, bucketed by last decided position."""
    spec: PathSpec
    N: int
    order: tuple[tuple[int, int], ...]
    start: np.ndarray     # (E+1,) offsets into masks
    masks: np.ndarray     # (copies, W) uint64, sorted by bucket

    @property
    def n_positions(self) -> int:
        return len(self.order)

    @property
    def n_words(self) -> int:
        return self.masks.shape[1]

    @property
    def n_copies(self) -> int:
        return self.masks.shape[0]


def copy_index(spec: PathSpec, N: int, order: str = "lex") -> CopyIndex:
    seq = decision_order(N, order)
    pos = {e: p for p, e in enumerate(seq)}
    E = len(seq)
    W = max(1, -(-E // 64))
    pattern = path_edges(spec)
    buckets: list[list[list[int]]] = [[] for _ in range(E)]
    for S in combinations(range(1, N + 1), spec.n):
        ps = [pos[(S[p - 1], S[q - 1])] for p, q in pattern]
        if ps:
            buckets[max(ps)].append(ps)
    start = np.zeros(E + 1, dtype=np.int64)
    flat: list[list[int]] = []
    for p in range(E):
        start[p] = len(flat)
        flat.extend(buckets[p])
    start[E] = len(flat)
    masks = np.zeros((len(flat), W), dtype=np.uint64)
    for r, ps in enumerate(flat):
        for p in ps:
            masks[r, p // 64] |= np.uint64(1) << np.uint64(p % 64)
    return CopyIndex(spec, N, tuple(seq), start, masks)


# --- Ramsey: two-color DFS -----------------------------------------------------

@kernel
def ramsey_dfs_kernel(E, start, masks, prefix, budget):
    """Color positions ``len(prefix)..E-1`` avoiding monochromatic copies.

    ``prefix`` fixes the first positions (0 red, 1 blue) and must already be
    copy-free.  With an empty prefix position 0 is forced red.  Returns
    ``(status, nodes, colors)`` with status 0 exhausted, 1 witness, 2 budget.
    """
    W = masks.shape[1]
    red = np.zeros(W, dtype=np.uint64)
    blue = np.zeros(W, dtype=np.uint64)
    col = np.full(E, -1, dtype=np.int64)
    P = prefix.shape[0]
    one = np.uint64(1)
    for p in range(P):
        col[p] = prefix[p]
        bit = one << np.uint64(p % 64)
        if prefix[p] == 0:
            red[p // 64] |= bit
        else:
            blue[p // 64] |= bit
    p = P
    nodes = 0
    while p >= P:
        if p == E:
            return 1, nodes, col
        c = col[p] + 1
        if p == 0 and c == 1:
            c = 2
        w = p // 64
        bit = one << np.uint64(p % 64)
        if c > 1:
            col[p] = -1
            red[w] &= ~bit
            blue[w] &= ~bit
            p -= 1
            continue
        col[p] = c
        nodes += 1
        if nodes > budget:
            return 2, nodes, col
        if c == 0:
            red[w] |= bit
            blue[w] &= ~bit
        else:
            blue[w] |= bit
            red[w] &= ~bit
        ok = True
        for q in range(start[p], start[p + 1]):
            hit = True
            for k in range(W):
                m = masks[q, k]
                have = red[k] if c == 0 else blue[k]
                if (have & m) != m:
                    hit = False
                    break
            if hit:
                ok = False
                break
        if ok:
            p += 1
    return 0, nodes, col


class Outcome(str, enum.Enum):
    WITNESS = "witness"
    EXHAUSTED = "exhausted"


@dataclass
class RamseySearchResult:
    spec: PathSpec
    N: int
    outcome: Outcome
    witness: OrderedColoring | None
    nodes_explored: int
    symmetry_mode: str = "color-swap"
    order: str = "lex"
    subtrees: int = 1

    @property
    def found(self) -> bool:
        return self.outcome is Outcome.WITNESS

    def summary(self) -> str:
        what = "witness coloring" if self.found else "no witness (exhausted)"
        return f"{self.spec} on K_{self.N}: {what}, {self.nodes_explored} nodes"


def _frontier(idx: CopyIndex, depth: int) -> list[np.ndarray]:
    """Copy-free colorings of the first ``depth`` positions, red first, position 0 red."""
    E = idx.n_positions
    depth = min(depth, E)
    out: list[np.ndarray] = []

    def completes(cols: list[int], p: int) -> bool:
        c = cols[p]
        for q in range(idx.start[p], idx.start[p + 1]):
            bits = [b for b in range(E) if idx.masks[q, b // 64] >> np.uint64(b % 64) & np.uint64(1)]
            if all(cols[b] == c for b in bits):
                return True
        return False

    def grow(cols: list[int]) -> None:
        p = len(cols)
        if p == depth:
            out.append(np.array(cols, dtype=np.int64))
            return
        for c in ((0,) if p == 0 else (0, 1)):
            cols.append(c)
            if not completes(cols, p):
                grow(cols)
            cols.pop()

    grow([])
    return out


def _coloring_from_positions(idx: CopyIndex, col: np.ndarray) -> OrderedColoring:
    red = [e for e, c in zip(idx.order, col) if c == 0]
    return OrderedColoring.from_red_edges(idx.N, red)


def search_ramsey_witness(spec: PathSpec, N: int, budget: int | None = None, threads: int = 1,
                          split_depth: int = 8, order: str = "lex") -> RamseySearchResult:
    """Look for a 2-coloring of K_N without a monochromatic copy of ``spec``.

    With ``threads > 1`` the tree is cut at ``split_depth`` decided edges and
    the subtrees are searched in waves of ``threads``; the witness from the
    lowest-numbered subtree wins, so results do not depend on scheduling.
    Raises :class:`ResourceLimit` once more than ``budget`` nodes are spent.
    """
    if N < 1:
        raise InvalidSpec(f"N must be positive (got {N})")
    limit = node_budget(budget)
    idx = copy_index(spec, N, order)
    E = idx.n_positions

    def finish(status: int, nodes: int, col: np.ndarray, subtrees: int) -> RamseySearchResult:
        if status == 2:
            raise ResourceLimit(f"{spec} on K_{N}: node budget {limit} exhausted", nodes=nodes)
        if status == 0:
            return RamseySearchResult(spec, N, Outcome.EXHAUSTED, None, nodes, order=order, subtrees=subtrees)
        witness = _coloring_from_positions(idx, col)
        if find_monochromatic(witness, spec) is not None:
            raise InvariantViolation(f"search returned a coloring of K_{N} containing a monochromatic {spec}")
        return RamseySearchResult(spec, N, Outcome.WITNESS, witness, nodes, order=order, subtrees=subtrees)

    if threads <= 1 or E <= split_depth:
        status, nodes, col = ramsey_dfs_kernel(E, idx.start, idx.masks, np.zeros(0, dtype=np.int64), limit)
        return finish(int(status), int(nodes), col, 1)

    prefixes = _frontier(idx, split_depth)
    total = 0
    with ThreadPoolExecutor(max_workers=threads) as pool:
        for lo in range(0, len(prefixes), threads):
            wave = prefixes[lo:lo + threads]
            remaining = max(limit - total, 0)
            runs = list(pool.map(lambda pre: ramsey_dfs_kernel(E, idx.start, idx.masks, pre, remaining), wave))
            total += sum(int(r[1]) for r in runs)
            for status, _, col in runs:
                if status == 1:
                    return finish(1, total, col, len(prefixes))
            if any(int(r[0]) == 2 for r in runs) or total > limit:
                return finish(2, total, runs[0][2], len(prefixes))
    return finish(0, total, np.zeros(0, dtype=np.int64), len(prefixes))


@dataclass
class RamseyValue:
    """Exact value with both certificates: a witness on value-1, exhaustion on value."""
    spec: PathSpec
    value: int
    witness: RamseySearchResult | None
    exhaustion: RamseySearchResult
    probes: list[RamseySearchResult] = field(default_factory=list)

    def __int__(self) -> int:
        return self.value


def default_window(spec: PathSpec) -> tuple[int, int]:
    n = spec.n
    if spec.family in (Family.AP, Family.PGL):
        return max(5 * (n // 2) - 4, n), ramsey_upper_bound_ap(n)
    if spec.family in (Family.PLL, Family.PGG):
        return n, ramsey_upper_bound_other(n)
    return n, (n - 1) ** 2 + 1


def compute_ramsey_exact(spec: PathSpec, N_lo: int | None = None, N_hi: int | None = None,
                         budget: int | None = None, threads: int = 1) -> RamseyValue:
    """Smallest N in the window whose search is exhausted, with the N-1 witness.

    The probe below the window's lower end is run too when the first probe is
    already exhausted, so the answer always carries both certificates.
    """
    lo, hi = default_window(spec)
    lo = lo if N_lo is None else N_lo
    hi = hi if N_hi is None else N_hi
    if lo > hi:
        raise InvalidSpec(f"empty window [{lo}, {hi}]")
    probes: list[RamseySearchResult] = []
    previous: RamseySearchResult | None = None
    for N in range(lo, hi + 1):
        res = search_ramsey_witness(spec, N, budget=budget, threads=threads)
        probes.append(res)
        if res.outcome is Outcome.EXHAUSTED:
            if previous is None:
                if N - 1 < 1:
                    return RamseyValue(spec, N, None, res, probes)
                previous = search_ramsey_witness(spec, N - 1, budget=budget, threads=threads)
                probes.insert(0, previous)
                if not previous.found:
                    raise WindowMiss(f"{spec}: already exhausted at N={N - 1}, below the window [{lo}, {hi}]")
            return RamseyValue(spec, N, previous, res, probes)
        previous = res
    raise WindowMiss(f"{spec}: every N in [{lo}, {hi}] admits a witness coloring")


# --- Turán: maximum copy-free edge sets ---------------------------------------

@kernel
def _popcount(x):
    c = 0
    while x:
        x &= x - np.uint64(1)
        c += 1
    return c


@kernel
def turan_bnb_kernel(E, start, masks, all_masks, budget):
    """Include-first branch and bound over single-word edge sets (E <= 63).

    The bound is (included) + (undecided) minus a greedy count of live copies
    whose undecided parts are pairwise disjoint, each of which must lose one
    undecided edge.  Returns ``(best, best_mask, nodes, status)`` with status 0
    done and 2 budget exhausted.
    """
    one = np.uint64(1)
    st = np.zeros(E + 1, dtype=np.int64)
    incl = np.uint64(0)
    excl = np.uint64(0)
    ninc = 0
    best = -1
    best_mask = np.uint64(0)
    p = 0
    nodes = 0
    full = (one << np.uint64(E)) - one
    while p >= 0:
        if p == E:
            if ninc > best:
                best = ninc
                best_mask = incl
            p -= 1
            continue
        bit = one << np.uint64(p)
        s = st[p]
        if s == 0:
            st[p] = 1
            cand = incl | bit
            ok = True
            for q in range(start[p], start[p + 1]):
                m = masks[q]
                if (cand & m) == m:
                    ok = False
                    break
            if not ok:
                continue
            incl = cand
            ninc += 1
        elif s == 1:
            st[p] = 2
            if incl & bit:
                incl &= ~bit
                ninc -= 1
            excl |= bit
        else:
            st[p] = 0
            excl &= ~bit
            if incl & bit:
                incl &= ~bit
                ninc -= 1
            p -= 1
            continue
        nodes += 1
        if nodes > budget:
            return best, best_mask, nodes, 2
        und = full & ~((bit << one) - one)
        bound = ninc + _popcount(und)
        if bound > best:
            used = np.uint64(0)
            for q in range(all_masks.shape[0]):
                m = all_masks[q]
                if m & excl:
                    continue
                u = m & und
                if u & used:
                    continue
                bound -= 1
                used |= u
        if bound <= best:
            continue
        p += 1
    return best, best_mask, nodes, 0


@dataclass
class TuranSearchResult:
    spec: PathSpec
    N: int
    max_edges: int
    witness: OrderedGraph
    proof_of_optimality: str      # "exhaustive" or "branch-and-bound"
    nodes_explored: int

    def summary(self) -> str:
        return (f"ex_<({self.N}, {self.spec}) = {self.max_edges} "
                f"({self.proof_of_optimality}, {self.nodes_explored} nodes)")


def _mask_to_graph(idx_order, N: int, mask: int) -> OrderedGraph:
    return OrderedGraph.from_edges(N, [e for p, e in enumerate(idx_order) if mask >> p & 1])


def _check_turan_witness(res: TuranSearchResult) -> TuranSearchResult:
    if res.witness.edge_count != res.max_edges or find_path(res.witness, res.spec) is not None:
        raise InvariantViolation(f"Turán witness for {res.spec} on {res.N} vertices does not check out")
    return res


def _enumerate_max(N: int, masks: np.ndarray, n_bits: int) -> tuple[int, int, int]:
    """Largest copy-free subset of ``n_bits`` positions by trying all of them."""
    graphs = np.arange(1 << n_bits, dtype=np.uint64)
    bad = np.zeros(graphs.shape, dtype=bool)
    for m in masks:
        bad |= (graphs & m) == m
    sizes = np.bitwise_count(graphs).astype(np.int64)
    sizes[bad] = -1
    best = int(np.argmax(sizes))
    return int(sizes[best]), best, len(graphs)


def search_turan_max(spec: PathSpec, N: int, budget: int | None = None,
                     method: str | None = None) -> TuranSearchResult:
    """ex_<(N, spec) with a witness graph.

    Enumerates all graphs when C(N, 2) <= 15, otherwise runs branch and bound
    (limited to C(N, 2) <= 63, i.e. N <= 11).
    """
    if N < spec.n:
        raise InvalidSpec(f"need N >= n (got N={N}, n={spec.n})")
    E = n_edges(N)
    if method is None:
        method = "exhaustive" if E <= TURAN_EXHAUSTIVE_EDGES else "branch-and-bound"
    if E > TURAN_MAX_EDGES or (method == "exhaustive" and E > 24):
        raise SizeLimitExceeded(f"Turán search supports N <= 11 (got N={N})")
    idx = copy_index(spec, N)
    masks = idx.masks[:, 0]
    if method == "exhaustive":
        best, mask, nodes = _enumerate_max(N, masks, E)
    else:
        limit = node_budget(budget)
        best, mask, nodes, status = turan_bnb_kernel(E, idx.start, masks, masks, limit)
        if status == 2:
            raise ResourceLimit(f"ex_<({N}, {spec}): node budget {limit} exhausted", nodes=int(nodes))
    res = TuranSearchResult(spec, N, int(best), _mask_to_graph(idx.order, N, int(mask)), method, int(nodes))
    return _check_turan_witness(res)


def search_bipartite_turan_max(N: int, n: int, family) -> TuranSearchResult:
    """Largest bipartite graph between [1, N/2] and [N/2+1, N] avoiding the path, by enumeration."""
    family = family if isinstance(family, Family) else Family.parse(family)
    if N % 2 or n % 2 or N < n:
        raise InvalidSpec(f"need even N >= n, both even (got N={N}, n={n})")
    M = N // 2
    if M * M > 24:
        raise SizeLimitExceeded(f"bipartite enumeration supports N <= 8 (got N={N})")
    spec = PathSpec(family, n)
    cells = [(x, y) for x in range(1, M + 1) for y in range(M + 1, N + 1)]
    pos = {e: p for p, e in enumerate(cells)}
    pattern = path_edges(spec)
    masks = []
    for S in combinations(range(1, N + 1), n):
        es = [(S[p - 1], S[q - 1]) for p, q in pattern]
        if all(e in pos for e in es):
            masks.append(sum(1 << pos[e] for e in es))
    best, mask, nodes = _enumerate_max(N, np.array(masks, dtype=np.uint64), len(cells))
    res = TuranSearchResult(spec, N, best, _mask_to_graph(cells, N, mask), "exhaustive", nodes)
    return _check_turan_witness(res)
