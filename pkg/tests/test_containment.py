from itertools import product

import numpy as np
import pytest
from hypothesis import given, strategies as st

from orderedpaths.containment import contains_path, embed_generic, find_monochromatic, find_path, iter_copies
from orderedpaths.core import Color, Family, OrderedColoring, OrderedGraph, PathSpec, is_valid_certificate
from orderedpaths.errors import SizeLimitExceeded


def _specs(max_n):
    for fam in Family:
        for n in range(2, max_n + 1):
            if fam.value in ("pll", "pgg", "pgl") and n % 2:
                continue
            yield PathSpec(fam, n)


def _check(g, spec):
    hit = find_path(g, spec)
    expected = next(iter_copies(g, spec), None) is not None
    assert (hit is not None) == expected, (g.edges(), spec)
    if hit is not None:
        assert contains_path(g, spec).vertices == tuple(hit)
        assert is_valid_certificate(contains_path(g, spec), g)


@pytest.mark.parametrize("N", [2, 3, 4])
def test_dynamic_program_matches_enumeration_on_all_small_graphs(N):
    pairs = N * (N - 1) // 2
    specs = [s for s in _specs(N)]
    for bits in product((0, 1), repeat=pairs):
        g = OrderedGraph.from_mask(N, int("".join(map(str, bits[::-1])), 2))
        for spec in specs:
            _check(g, spec)


@given(st.integers(5, 9), st.integers(0, 2**32 - 1), st.floats(0.3, 0.9))
def test_dynamic_program_matches_enumeration_on_random_graphs(N, seed, p):
    rng = np.random.default_rng(seed)
    g = OrderedGraph.from_dense(rng.random((N, N)) < p)
    for spec in _specs(min(N, 7)):
        _check(g, spec)


@given(st.integers(4, 8), st.integers(0, 2**32 - 1))
def test_generic_embedding_agrees(N, seed):
    rng = np.random.default_rng(seed)
    g = OrderedGraph.from_dense(rng.random((N, N)) < 0.6)
    for spec in _specs(min(N, 6)):
        emb = embed_generic(g, spec.graph())
        assert (emb is None) == (find_path(g, spec) is None)
        if emb is not None:
            assert all(g.has_edge(emb[a], emb[b]) for a, b in spec.edges())


def test_generic_embedding_is_capped():
    with pytest.raises(SizeLimitExceeded):
        embed_generic(OrderedGraph.complete(17), PathSpec("ap", 3).graph())


def test_paths_in_their_own_graph_and_too_small_hosts():
    for spec in _specs(10):
        assert find_path(spec.graph(), spec) == list(spec.traversal())
        assert find_path(OrderedGraph.complete(spec.n - 1), spec) is None


def test_monochromatic_search_and_color_argument():
    c = OrderedColoring.monochromatic(6, Color.BLUE)
    cert = find_monochromatic(c, PathSpec("ap", 6))
    assert cert.color is Color.BLUE
    assert contains_path(c, PathSpec("ap", 6), Color.RED) is None
    with pytest.raises(ValueError):
        contains_path(c, PathSpec("ap", 3))
