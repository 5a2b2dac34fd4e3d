"""Ordered containment of path families.

``contains_path`` runs a per-family dynamic program over the cells of the
adjacency matrix; ``embed_generic`` and ``iter_copies`` are slow reference
oracles used to cross-check it.
"""
from __future__ import annotations

from itertools import combinations
from typing import Iterator

import numpy as np

from .core import (Color, Family, OrderedColoring, OrderedGraph, PathCertificate, PathSpec,
                   path_edges, reverse)
from .errors import SizeLimitExceeded

DEFAULT_EMBED_CAP = 16


def _shift_right(a: np.ndarray, axis: int) -> np.ndarray:
    """``out[..., x, ...] = a[..., x-1, ...]`` along ``axis``, zero filled."""
    out = np.zeros_like(a)
    src = [slice(None)] * a.ndim
    dst = [slice(None)] * a.ndim
    src[axis] = slice(None, -1)
    dst[axis] = slice(1, None)
    out[tuple(dst)] = a[tuple(src)]
    return out


def _prefix_before(a: np.ndarray, axis: int) -> np.ndarray:
    """``out[x] = any(a[:x])`` along ``axis`` (strictly before x)."""
    return _shift_right(np.logical_or.accumulate(a, axis=axis), axis)


def _suffix_after(a: np.ndarray, axis: int) -> np.ndarray:
    """``out[x] = any(a[x+1:])`` along ``axis``."""
    flipped = np.flip(a, axis=axis)
    return np.flip(_prefix_before(flipped, axis), axis=axis)


# --- alternating path: the copy grows outward from its middle edge ----------

def _ap_new_on_right(t: int, n: int) -> bool:
    # the t-th vertex (counted from the end of the traversal) is added
    # to the right of the current interval iff t + n is odd
    return (t + n) % 2 == 1


def _ap_search(adj: np.ndarray, n: int) -> list[int] | None:
    """0-based traversal of an AP_n copy in ``adj`` (upper triangular) or None."""
    layers = [adj]
    for t in range(3, n + 1):
        prev = layers[-1]
        if _ap_new_on_right(t, n):
            cur = adj & _prefix_before(prev, axis=1)
        else:
            cur = adj & _suffix_after(prev, axis=0)
        layers.append(cur)
        if not cur.any():
            return None
    final = layers[-1]
    hits = np.argwhere(final)
    if len(hits) == 0:
        return None
    l, r = (int(x) for x in hits[0])
    rev = []
    for t in range(n, 2, -1):
        prev = layers[t - 3]
        if _ap_new_on_right(t, n):
            rev.append(r)
            r = int(np.flatnonzero(prev[l, :r])[0])
        else:
            rev.append(l)
            l = l + 1 + int(np.flatnonzero(prev[l + 1:, r])[0])
    # two vertices left: the current end is the one added last
    if _ap_new_on_right(2, n):
        rev += [r, l]
    else:
        rev += [l, r]
    return rev


# --- P^{<,<} and P^{>,>}: two increasing chains split by a threshold --------

def _chain_search(adj: np.ndarray, k: int, a_first: bool) -> tuple[list[int], list[int]] | None:
    """Find a_1<..<a_k < b_1<..<b_k with edges a_t b_t and a zig-zag link.

    ``a_first`` (P^{<,<}): links a_{t+1} b_t.  Otherwise (P^{>,>}): links a_t b_{t+1}.
    Returns the two chains (0-based) or None.
    """
    N = adj.shape[0]
    idx = np.arange(N)
    # split s: every a <= s < every b
    splits = np.arange(k - 1, N - k)
    if len(splits) == 0:
        return None
    side = (idx[None, :, None] <= splits[:, None, None]) & (idx[None, None, :] > splits[:, None, None])
    base = adj[None, :, :] & side
    layers = [base]
    cur = base
    moves = ["a", "b"] if a_first else ["b", "a"]
    for _ in range(k - 1):
        for mv in moves:
            axis = 1 if mv == "a" else 2
            cur = base & _prefix_before(cur, axis=axis)
            layers.append(cur)
        if not cur.any():
            return None
    hits = np.argwhere(cur)
    if len(hits) == 0:
        return None
    s, a, b = (int(x) for x in hits[0])
    a_chain, b_chain = [a], [b]
    for li in range(len(layers) - 1, 0, -1):
        mv = moves[(li - 1) % 2]
        prev = layers[li - 1][s]
        if mv == "a":
            a = int(np.flatnonzero(prev[:a, b])[0])
            a_chain.append(a)
        else:
            b = int(np.flatnonzero(prev[a, :b])[0])
            b_chain.append(b)
    return a_chain[::-1], b_chain[::-1]


def _monotone_search(adj: np.ndarray, n: int) -> list[int] | None:
    N = adj.shape[0]
    length = np.ones(N, dtype=np.int64)
    parent = np.full(N, -1)
    for v in range(N):
        preds = np.flatnonzero(adj[:v, v])
        if len(preds):
            u = int(preds[np.argmax(length[preds])])
            length[v] = length[u] + 1
            parent[v] = u
    ends = np.flatnonzero(length >= n)
    if len(ends) == 0:
        return None
    v = int(ends[0])
    chain = [v]
    while len(chain) < n:
        v = int(parent[v])
        chain.append(v)
    return chain[::-1]


def find_path(g: OrderedGraph, spec: PathSpec) -> list[int] | None:
    """1-based traversal of some copy of ``spec`` in ``g``, or None."""
    N = g.n_vertices
    n = spec.n
    if n > N:
        return None
    fam = spec.family
    if fam is Family.PGL:
        hit = find_path(reverse(g), PathSpec(Family.AP, n))
        return None if hit is None else [N + 1 - v for v in reversed(hit)]
    adj = g.dense()
    if fam is Family.AP:
        trav = _ap_search(adj, n)
    elif fam is Family.MP:
        trav = _monotone_search(adj, n)
    else:
        chains = _chain_search(adj, n // 2, a_first=fam is Family.PLL)
        if chains is None:
            return None
        a_chain, b_chain = chains
        if fam is Family.PLL:
            trav = [x for pair in zip(a_chain, b_chain) for x in pair]
        else:
            trav = [x for pair in zip(a_chain[::-1], b_chain[::-1]) for x in pair]
    return None if trav is None else [v + 1 for v in trav]


def contains_path(g, spec: PathSpec, color: Color | None = None) -> PathCertificate | None:
    """Certificate for an order-preserving copy of ``spec`` in ``g`` or None.

    ``g`` may be an :class:`OrderedColoring`, in which case ``color`` selects
    the class to search.
    """
    if isinstance(g, OrderedColoring):
        if color is None:
            raise ValueError("pass color= when searching a coloring")
        hit = find_path(g.subgraph(color), spec)
        return None if hit is None else PathCertificate(spec, tuple(hit), Color(color))
    hit = find_path(g, spec)
    return None if hit is None else PathCertificate(spec, tuple(hit), color)


def find_monochromatic(c: OrderedColoring, spec: PathSpec) -> PathCertificate | None:
    for col in (Color.RED, Color.BLUE):
        cert = contains_path(c, spec, col)
        if cert is not None:
            return cert
    return None


# --- reference oracles -------------------------------------------------------

def embed_generic(g: OrderedGraph, h: OrderedGraph, cap: int = DEFAULT_EMBED_CAP) -> dict[int, int] | None:
    """Order-preserving embedding ``{h_vertex: g_vertex}`` of ``h`` into ``g`` by backtracking."""
    N, n = g.n_vertices, h.n_vertices
    if N > cap:
        raise SizeLimitExceeded(f"embed_generic is capped at {cap} host vertices (got {N})")
    if n > N:
        return None
    gs = g.symmetric()
    hd = h.dense()
    back = [np.flatnonzero(hd[:i, i]).tolist() for i in range(n)]
    image = [0] * n

    def place(i: int, lo: int) -> bool:
        if i == n:
            return True
        for x in range(lo, N - (n - i) + 1):
            if all(gs[image[j], x] for j in back[i]):
                image[i] = x
                if place(i + 1, x + 1):
                    return True
        return False

    if not place(0, 0):
        return None
    return {i + 1: image[i] + 1 for i in range(n)}


def iter_copies(g: OrderedGraph, spec: PathSpec) -> Iterator[tuple[int, ...]]:
    """Every copy of ``spec`` in ``g`` as a traversal, by enumerating vertex subsets."""
    pattern = path_edges(spec)
    trav = spec.traversal()
    gs = g.symmetric()
    for S in combinations(range(1, g.n_vertices + 1), spec.n):
        if all(gs[S[p - 1] - 1, S[q - 1] - 1] for p, q in pattern):
            yield tuple(S[t - 1] for t in trav)
