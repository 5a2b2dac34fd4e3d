"""Ordered Turán numbers of the alternating path and its bipartite relatives.

Covers the exact formula and finder for AP_n on ``[N]``, the two extremal
constructions (star and band), the bipartite formula with the four
family-specific constructions and finders, and the halving bound for
P^{<,<} / P^{>,>}.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

import numpy as np

from .core import Family, OrderedGraph, PathCertificate, PathSpec, path_edges, validate_certificate
from .deletion import DeletionTrace, backtrack, interleave, run_deletion
from .errors import InvalidCertificate, InvalidSpec, InvariantViolation, NotBipartite, TooSparse
from .ramsey import halves_steps

BIPARTITE_FAMILIES = (Family.AP, Family.PLL, Family.PGG, Family.PGL)


def _check_sizes(N: int, n: int) -> None:
    if n < 2:
        raise InvalidSpec(f"n must be at least 2 (got {n})")
    if N < n:
        raise InvalidSpec(f"need N >= n (got N={N}, n={n})")


def _check_even(N: int, n: int) -> None:
    _check_sizes(N, n)
    if N % 2 or n % 2:
        raise InvalidSpec(f"N and n must both be even (got N={N}, n={n})")


def _family(family) -> Family:
    return family if isinstance(family, Family) else Family.parse(family)


def turan_number_ap(N: int, n: int) -> int:
    """C(n-1, 2) + (n-2)(N-n+1)."""
    _check_sizes(N, n)
    return comb(n - 1, 2) + (n - 2) * (N - n + 1)


# --- AP_n on the whole of [N] -----------------------------------------------

def grey_edges_turan(N: int, n: int) -> frozenset[tuple[int, int]]:
    """Pairs near the two corners that no copy of AP_n in K_N can use."""
    _check_sizes(N, n)
    grey = {(i, j) for i in range(1, n // 2 + 1) for j in range(i + 1, n - i + 1)}
    grey |= {(N + 1 - j, N + 1 - i) for i in range(1, (n + 1) // 2) for j in range(i + 1, n - i)}
    return frozenset(grey)


def turan_steps(N: int, n: int):
    odd = [(n - i + 1, N - i + 1) for i in range(1, (n + 1) // 2)]
    even = [(i + 1, N - n + i + 1) for i in range(1, n // 2)]
    return interleave(odd, even, odd_leftmost=True, even_leftmost=False)


def _finish_single(trace: DeletionTrace, g: OrderedGraph, spec: PathSpec, last_is_smaller: bool,
                   best_effort: bool):
    if not trace.survivors:
        if trace.guaranteed:
            raise InvariantViolation(f"{trace.method}: no edge survived although the count guarantees one")
        return None, trace
    try:
        verts = backtrack(trace, trace.survivors[0], last_is_smaller)
        cert = PathCertificate(spec, tuple(verts))
        validate_certificate(cert, g)
    except (InvariantViolation, InvalidCertificate):
        if trace.guaranteed or not best_effort:
            raise
        return None, trace
    return cert, trace


def find_ap_in_dense(g: OrderedGraph, n: int, best_effort: bool = False):
    """AP_n certificate and deletion trace for a graph above the Turán threshold.

    Raises :class:`TooSparse` when ``e(g) <= turan_number_ap(N, n)`` unless
    ``best_effort`` is set.
    """
    N = g.n_vertices
    _check_sizes(N, n)
    spec = PathSpec(Family.AP, n)
    threshold = turan_number_ap(N, n)
    m = g.edge_count
    if m <= threshold and not best_effort:
        raise TooSparse(f"AP_{n} is only forced above {threshold} edges on {N} vertices; graph has {m}")
    adj = g.dense()
    grey = np.zeros((N, N), dtype=bool)
    for i, j in grey_edges_turan(N, n):
        grey[i - 1, j - 1] = True
    scope = np.triu(np.ones((N, N), dtype=bool), k=1)
    trace = run_deletion("turan-ap", n, scope, adj[None], grey, turan_steps(N, n),
                         guaranteed=m > threshold)
    return _finish_single(trace, g, spec, last_is_smaller=n % 2 == 0, best_effort=best_effort)


def extremal_star(N: int, n: int) -> OrderedGraph:
    """Every pair touching X = [1, ceil(n/2)-1] or Y = [N-floor(n/2)+2, N]."""
    _check_sizes(N, n)
    idx = np.arange(1, N + 1)
    hub = (idx <= (n + 1) // 2 - 1) | (idx >= N - n // 2 + 2)
    return OrderedGraph.from_dense(hub[:, None] | hub[None, :])


def extremal_band(N: int, n: int) -> OrderedGraph:
    """Every pair at distance at most n-2."""
    _check_sizes(N, n)
    idx = np.arange(N)
    return OrderedGraph.from_dense(np.abs(idx[:, None] - idx[None, :]) <= n - 2)


# --- bipartite hosts: A = [1, M], B = [M+1, 2M] ------------------------------

@dataclass(frozen=True)
class BipartiteConfig:
    N: int
    n: int
    family: Family

    @property
    def M(self) -> int:
        return self.N // 2

    @property
    def k(self) -> int:
        return self.n // 2

    def scope(self) -> np.ndarray:
        s = np.zeros((self.N, self.N), dtype=bool)
        s[: self.M, self.M:] = True
        return s


def bipartite_turan_number(N: int, n: int) -> int:
    """(n/2 - 1)(N - n/2 + 1), the same for all four families."""
    _check_even(N, n)
    return (n // 2 - 1) * (N - n // 2 + 1)


def bipartite_rank_pairs(family, n: int) -> list[tuple[int, int]]:
    """Path edges as (rank in A, rank in B) pairs, ranks 1..k."""
    spec = PathSpec(_family(family), n)
    k = n // 2
    return [(p, q - k) for p, q in path_edges(spec)]


def bipartite_grey(N: int, n: int, family) -> frozenset[tuple[int, int]]:
    """A-B pairs that cannot play any edge of a copy with its lower half in A.

    A vertex x of A can take rank p only if p-1 vertices of A lie left of it
    and k-p lie right of it, and likewise in B.
    """
    _check_even(N, n)
    family = _family(family)
    M, k = N // 2, n // 2
    pairs = bipartite_rank_pairs(family, n)
    grey = set()
    for x in range(1, M + 1):
        for y in range(M + 1, N + 1):
            yb = y - M
            if not any(p - 1 <= x - 1 and k - p <= M - x and q - 1 <= yb - 1 and k - q <= M - yb
                       for p, q in pairs):
                grey.add((x, y))
    return frozenset(grey)


def extremal_bipartite(N: int, n: int, family) -> OrderedGraph:
    """Bipartite graph with the maximum number of edges and no copy of the family's path."""
    _check_even(N, n)
    family = _family(family)
    if family not in BIPARTITE_FAMILIES:
        raise InvalidSpec(f"no bipartite construction for {family.value}")
    M, k = N // 2, n // 2
    low_a = set(range(1, k)) if family in (Family.PLL, Family.AP) else set(range(M - k + 2, M + 1))
    low_b = set(range(M + 1, M + k)) if family in (Family.PLL, Family.PGL) else set(range(N - k + 2, N + 1))
    edges = [(x, y) for x in range(1, M + 1) for y in range(M + 1, N + 1) if x in low_a or y in low_b]
    return OrderedGraph.from_edges(N, edges)


def is_bipartite_host(g: OrderedGraph) -> bool:
    N = g.n_vertices
    M = N // 2
    adj = g.dense()
    return N % 2 == 0 and not adj[:M, :M].any() and not adj[M:, M:].any()


def find_path_bipartite(g: OrderedGraph, family, n: int, best_effort: bool = False):
    """Certificate for the family's path in a dense bipartite host, plus the trace."""
    family = _family(family)
    if family not in BIPARTITE_FAMILIES:
        raise InvalidSpec(f"no bipartite finder for {family.value}")
    N = g.n_vertices
    _check_even(N, n)
    if not is_bipartite_host(g):
        raise NotBipartite(f"graph on {N} vertices has edges inside [1, {N // 2}] or [{N // 2 + 1}, {N}]")
    spec = PathSpec(family, n)
    threshold = bipartite_turan_number(N, n)
    m = g.edge_count
    if m <= threshold and not best_effort:
        raise TooSparse(f"{spec} is only forced above {threshold} bipartite edges; graph has {m}")
    cfg = BipartiteConfig(N, n, family)
    grey = np.zeros((N, N), dtype=bool)
    for x, y in bipartite_grey(N, n, family):
        grey[x - 1, y - 1] = True
    trace = run_deletion(f"bipartite-{family.value}", n, cfg.scope(), g.dense()[None], grey,
                         halves_steps(n, N, family), guaranteed=m > threshold)
    return _finish_single(trace, g, spec, last_is_smaller=True, best_effort=best_effort)


# --- halving bound for P^{<,<} and P^{>,>} ----------------------------------

def _log_t(N: int, n: int) -> int:
    # t = 1 + floor(log2(N / n)); floor(log2(x)) only depends on floor(x) for x >= 1
    return (N // n).bit_length()


def turan_log_bound(N: int, n: int) -> int:
    """2^(t-1) n^2 (t+1) with t = 1 + floor(log2(N/n)); at most nN(log2(N/n) + 2)."""
    _check_even(N, n)
    t = _log_t(N, n)
    return 2 ** (t - 1) * n * n * (t + 1)


def turan_log_bound_power_of_two(N: int, n: int) -> int:
    """(1/2) n N (log2(N/n) + 1) for N/n a power of two."""
    _check_even(N, n)
    ratio, rem = divmod(N, n)
    if rem or ratio & (ratio - 1):
        raise InvalidSpec(f"N/n must be a power of two (got N={N}, n={n})")
    return n * N * (ratio.bit_length()) // 2


@dataclass
class RecursionNode:
    """ex(N) <= 2 ex(N/2) + ex_bip(N/2, N/2), unrolled down to N = n."""
    N: int
    n: int
    value: int
    bipartite_term: int
    children: list["RecursionNode"] = field(default_factory=list)

    def walk(self):
        yield self
        for ch in self.children:
            yield from ch.walk()

    def render(self, indent: int = 0) -> str:
        pad = "  " * indent
        if not self.children:
            head = f"{pad}ex({self.N}) <= C({self.N},2) = {self.value}"
        else:
            head = f"{pad}ex({self.N}) <= 2*{self.children[0].value} + {self.bipartite_term} = {self.value}"
        return "\n".join([head] + [c.render(indent + 1) for c in self.children[:1]])


def turan_recursion_tree(N: int, n: int) -> RecursionNode:
    """Evaluation tree of the halving recursion for N/n a power of two."""
    _check_even(N, n)
    ratio, rem = divmod(N, n)
    if rem or ratio & (ratio - 1):
        raise InvalidSpec(f"N/n must be a power of two (got N={N}, n={n})")
    if N == n:
        return RecursionNode(N, n, comb(N, 2), 0)
    half = turan_recursion_tree(N // 2, n)
    bip = bipartite_turan_number(N, n)
    return RecursionNode(N, n, 2 * half.value + bip, bip, [half, half])
