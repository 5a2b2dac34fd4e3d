"""Ordered graphs, red/blue colorings of K_N, path families and certificates.

Vertices are 1-based everywhere in the public API.  Internally a graph is an
upper-triangular bit matrix: row ``i-1`` holds bit ``j-1`` for every edge
``(i, j)`` with ``i < j``, packed into 64-bit words.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import InvalidCertificate, InvalidSpec

WORD = 64


class Color(str, enum.Enum):
    RED = "R"
    BLUE = "B"

    @property
    def other(self) -> "Color":
        return Color.BLUE if self is Color.RED else Color.RED


class Family(str, enum.Enum):
    AP = "ap"    # P^{<,>}
    PLL = "pll"  # P^{<,<}
    PGG = "pgg"  # P^{>,>}
    PGL = "pgl"  # P^{>,<}
    MP = "mp"    # monotone

    @classmethod
    def parse(cls, text: str) -> "Family":
        try:
            return cls(text.strip().lower())
        except ValueError:
            raise InvalidSpec(f"unknown path family {text!r}") from None


EVEN_ONLY = frozenset({Family.PLL, Family.PGG, Family.PGL})


def n_edges(N: int) -> int:
    return N * (N - 1) // 2


def edge_id(i: int, j: int, N: int) -> int:
    """0-based lexicographic id of the pair ``i < j`` (1-based labels)."""
    return (i - 1) * N - i * (i - 1) // 2 + (j - i) - 1


def lex_edges(N: int) -> list[tuple[int, int]]:
    return [(i, j) for i in range(1, N + 1) for j in range(i + 1, N + 1)]


def _words(N: int) -> int:
    return max(1, -(-N // WORD))


def _pack(dense: np.ndarray) -> np.ndarray:
    """Pack a boolean (N, N) matrix, keeping only the strict upper triangle."""
    N = dense.shape[0]
    W = _words(N)
    padded = np.zeros((N, W * WORD), dtype=bool)
    padded[:, :N] = np.triu(dense.astype(bool), k=1)
    packed = np.ascontiguousarray(np.packbits(padded, axis=1, bitorder="little"))
    return packed.view("<u8").astype(np.uint64)


def _unpack(rows: np.ndarray, N: int) -> np.ndarray:
    as_bytes = np.ascontiguousarray(rows.astype("<u8")).view(np.uint8)
    return np.unpackbits(as_bytes, axis=1, bitorder="little")[:, :N].astype(bool)


class OrderedGraph:
    """Immutable ordered graph on ``[N]`` stored as packed upper-triangular rows."""

    __slots__ = ("_n", "_rows")

    def __init__(self, n_vertices: int, rows: np.ndarray):
        if n_vertices < 1:
            raise ValueError("an ordered graph needs at least one vertex")
        self._n = int(n_vertices)
        if rows.shape != (self._n, _words(self._n)):
            raise ValueError("row array has the wrong shape")
        rows = np.array(rows, dtype=np.uint64)
        rows.setflags(write=False)
        self._rows = rows

    # construction -------------------------------------------------------
    @classmethod
    def from_dense(cls, adj) -> "OrderedGraph":
        adj = np.asarray(adj, dtype=bool)
        if adj.ndim != 2 or adj.shape[0] != adj.shape[1]:
            raise ValueError("adjacency must be square")
        return cls(adj.shape[0], _pack(adj))

    @classmethod
    def from_edges(cls, N: int, edges: Iterable[tuple[int, int]]) -> "OrderedGraph":
        adj = np.zeros((N, N), dtype=bool)
        for i, j in edges:
            i, j = (i, j) if i < j else (j, i)
            if i == j or i < 1 or j > N:
                raise ValueError(f"edge ({i}, {j}) is not a pair of distinct vertices of [{N}]")
            adj[i - 1, j - 1] = True
        return cls.from_dense(adj)

    @classmethod
    def empty(cls, N: int) -> "OrderedGraph":
        return cls(N, np.zeros((N, _words(N)), dtype=np.uint64))

    @classmethod
    def complete(cls, N: int) -> "OrderedGraph":
        return cls.from_dense(np.ones((N, N), dtype=bool))

    @classmethod
    def from_mask(cls, N: int, mask: int) -> "OrderedGraph":
        """Inverse of :meth:`to_mask` (bit k = lexicographic edge id k)."""
        return cls.from_edges(N, [e for k, e in enumerate(lex_edges(N)) if mask >> k & 1])

    # queries ------------------------------------------------------------
    @property
    def n_vertices(self) -> int:
        return self._n

    @property
    def rows(self) -> np.ndarray:
        return self._rows

    def dense(self) -> np.ndarray:
        """Boolean (N, N) matrix, upper triangle only, 0-based."""
        return _unpack(self._rows, self._n)

    def symmetric(self) -> np.ndarray:
        d = self.dense()
        return d | d.T

    def has_edge(self, i: int, j: int) -> bool:
        if i > j:
            i, j = j, i
        if i == j or i < 1 or j > self._n:
            return False
        c = j - 1
        return bool((int(self._rows[i - 1, c // WORD]) >> (c % WORD)) & 1)

    @property
    def edge_count(self) -> int:
        return int(np.bitwise_count(self._rows).sum())

    def edges(self) -> list[tuple[int, int]]:
        ii, jj = np.nonzero(self.dense())
        return [(int(i) + 1, int(j) + 1) for i, j in zip(ii, jj)]

    def to_mask(self) -> int:
        mask = 0
        for i, j in self.edges():
            mask |= 1 << edge_id(i, j, self._n)
        return mask

    # derived graphs -----------------------------------------------------
    def with_edges(self, edges: Iterable[tuple[int, int]]) -> "OrderedGraph":
        return OrderedGraph.from_edges(self._n, list(self.edges()) + list(edges))

    def without_edges(self, edges: Iterable[tuple[int, int]]) -> "OrderedGraph":
        drop = {(min(e), max(e)) for e in edges}
        return OrderedGraph.from_edges(self._n, [e for e in self.edges() if e not in drop])

    def induced(self, vertices: Sequence[int]) -> "OrderedGraph":
        """Subgraph induced on ``vertices`` relabelled to ``1..len(vertices)`` in order."""
        vs = sorted(vertices)
        d = self.dense()
        idx = np.array(vs) - 1
        return OrderedGraph.from_dense(d[np.ix_(idx, idx)])

    def __eq__(self, other) -> bool:
        return (isinstance(other, OrderedGraph) and self._n == other._n
                and bool(np.array_equal(self._rows, other._rows)))

    def __hash__(self) -> int:
        return hash((self._n, self._rows.tobytes()))

    def __repr__(self) -> str:
        return f"OrderedGraph(N={self._n}, edges={self.edge_count})"


class OrderedColoring:
    """Immutable red/blue coloring of every pair of ``K_N``; stores the red class."""

    __slots__ = ("_n", "_red")

    def __init__(self, red: OrderedGraph):
        self._n = red.n_vertices
        self._red = red

    @classmethod
    def from_red_edges(cls, N: int, red_edges: Iterable[tuple[int, int]]) -> "OrderedColoring":
        return cls(OrderedGraph.from_edges(N, red_edges))

    @classmethod
    def from_function(cls, N: int, fn) -> "OrderedColoring":
        """``fn(i, j)`` returns a :class:`Color` (or ``"R"``/``"B"``) for each ``i < j``."""
        red = [(i, j) for i, j in lex_edges(N) if Color(fn(i, j)) is Color.RED]
        return cls.from_red_edges(N, red)

    @classmethod
    def monochromatic(cls, N: int, color: Color = Color.RED) -> "OrderedColoring":
        red = OrderedGraph.complete(N) if Color(color) is Color.RED else OrderedGraph.empty(N)
        return cls(red)

    @classmethod
    def random(cls, N: int, rng: np.random.Generator, p_red: float = 0.5) -> "OrderedColoring":
        upper = np.triu(rng.random((N, N)) < p_red, k=1)
        return cls(OrderedGraph.from_dense(upper))

    @property
    def n_vertices(self) -> int:
        return self._n

    def color(self, i: int, j: int) -> Color:
        if i == j or min(i, j) < 1 or max(i, j) > self._n:
            raise ValueError(f"({i}, {j}) is not an edge of K_{self._n}")
        return Color.RED if self._red.has_edge(i, j) else Color.BLUE

    def red_subgraph(self) -> OrderedGraph:
        return self._red

    def blue_subgraph(self) -> OrderedGraph:
        comp = ~self._red.dense()
        return OrderedGraph.from_dense(comp)

    def subgraph(self, color: Color) -> OrderedGraph:
        return self.red_subgraph() if Color(color) is Color.RED else self.blue_subgraph()

    def __eq__(self, other) -> bool:
        return isinstance(other, OrderedColoring) and self._red == other._red

    def __hash__(self) -> int:
        return hash(("coloring", self._red))

    def __repr__(self) -> str:
        return f"OrderedColoring(N={self._n}, red={self._red.edge_count})"


@dataclass(frozen=True)
class PathSpec:
    family: Family
    n: int

    def __post_init__(self):
        if not isinstance(self.family, Family):
            object.__setattr__(self, "family", Family.parse(str(self.family)))
        if not isinstance(self.n, (int, np.integer)) or self.n < 2:
            raise InvalidSpec(f"path needs at least 2 vertices, got n={self.n}")
        object.__setattr__(self, "n", int(self.n))
        if self.family in EVEN_ONLY and self.n % 2:
            raise InvalidSpec(f"{self.family.value} paths are only defined for even n (got {self.n})")

    def traversal(self) -> tuple[int, ...]:
        return path_traversal(self)

    def edges(self) -> list[tuple[int, int]]:
        return path_edges(self)

    def graph(self) -> OrderedGraph:
        return OrderedGraph.from_edges(self.n, path_edges(self))

    def __str__(self) -> str:
        return f"{self.family.value.upper()}_{self.n}"


def path_traversal(spec: PathSpec) -> tuple[int, ...]:
    """Vertex labels of the canonical copy on ``[n]`` in traversal order."""
    n, fam = spec.n, spec.family
    if fam is Family.MP:
        return tuple(range(1, n + 1))
    if fam is Family.AP:
        out, lo, hi = [], 1, n
        while lo <= hi:
            out.append(lo)
            lo += 1
            if lo <= hi:
                out.append(hi)
                hi -= 1
        return tuple(out)
    k = n // 2
    lows = list(range(1, k + 1))
    highs = list(range(k + 1, n + 1))
    if fam in (Family.PGG, Family.PGL):
        lows.reverse()
    if fam is Family.PGG:
        highs.reverse()
    out = []
    for a, b in zip(lows, highs):
        out += [a, b]
    return tuple(out)


def path_edges(spec: PathSpec) -> list[tuple[int, int]]:
    """The ``n-1`` edges of the canonical copy, listed in traversal order."""
    t = path_traversal(spec)
    return [(min(a, b), max(a, b)) for a, b in zip(t, t[1:])]


@dataclass(frozen=True)
class PathCertificate:
    spec: PathSpec
    vertices: tuple[int, ...]
    color: Color | None = None

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(int(v) for v in self.vertices))
        if self.color is not None:
            object.__setattr__(self, "color", Color(self.color))

    def edges(self) -> list[tuple[int, int]]:
        v = self.vertices
        return [(min(a, b), max(a, b)) for a, b in zip(v, v[1:])]


def reverse(obj):
    """Relabel ``i -> N+1-i``; accepts an :class:`OrderedGraph` or :class:`OrderedColoring`."""
    if isinstance(obj, OrderedColoring):
        return OrderedColoring(reverse(obj.red_subgraph()))
    if isinstance(obj, OrderedGraph):
        d = obj.dense()
        return OrderedGraph.from_dense(d[::-1, ::-1].T)
    raise TypeError(f"cannot reverse {type(obj).__name__}")


def swap_colors(c: OrderedColoring) -> OrderedColoring:
    return OrderedColoring(c.blue_subgraph())


def host_graph(host, color: Color | None = None) -> OrderedGraph:
    if isinstance(host, OrderedColoring):
        if color is None:
            raise InvalidCertificate("a certificate against a coloring must carry a color")
        return host.subgraph(color)
    return host


def validate_certificate(cert: PathCertificate, host) -> None:
    """Raise :class:`InvalidCertificate` unless ``cert`` is a copy of its path in ``host``.

    Checks distinctness, range, the relative order pattern of the vertices and
    adjacency (within the certificate's color class when ``host`` is a coloring).
    """
    g = host_graph(host, cert.color)
    v = cert.vertices
    n = cert.spec.n
    if len(v) != n:
        raise InvalidCertificate(f"expected {n} vertices, got {len(v)}")
    if len(set(v)) != n:
        raise InvalidCertificate(f"repeated vertex in {v}")
    if min(v) < 1 or max(v) > g.n_vertices:
        raise InvalidCertificate(f"vertex outside [1, {g.n_vertices}] in {v}")
    rank = {x: r + 1 for r, x in enumerate(sorted(v))}
    if tuple(rank[x] for x in v) != path_traversal(cert.spec):
        raise InvalidCertificate(f"order pattern of {v} does not match {cert.spec}")
    for a, b in zip(v, v[1:]):
        if not g.has_edge(a, b):
            raise InvalidCertificate(f"({min(a, b)}, {max(a, b)}) is not an edge of the host")


def is_valid_certificate(cert: PathCertificate, host) -> bool:
    try:
        validate_certificate(cert, host)
    except InvalidCertificate:
        return False
    return True
