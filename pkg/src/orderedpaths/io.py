"""Line-based text formats for colorings, graphs, certificates and traces.

Matrix layout: the first line is N, then row i (i = 1..N-1) lists the cells
(i, i+1) .. (i, N), one character each: R/B for colorings, 1/0 for graphs.
Edge layout: the first line is ``N edges``, then one pair per line, ``i j``
for graphs and ``i j R|B`` for colorings (every pair must appear).
"""
from __future__ import annotations

from pathlib import Path

import numpy as np

from .core import Color, Family, OrderedColoring, OrderedGraph, PathCertificate, PathSpec, lex_edges
from .deletion import ABSENT, GREY, OUT_OF_SCOPE, SURVIVED, DeletionTrace
from .errors import InvalidSpec, ParseError

FORMATS = ("matrix", "edges")


def _lines(text: str) -> list[str]:
    return [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]


def _read_n(lines: list[str]) -> int:
    if not lines:
        raise ParseError("empty input")
    head = lines[0].split()
    if len(head) == 2 and head[1] == "edges":
        head = head[:1]
    try:
        if len(head) != 1:
            raise ValueError
        N = int(head[0])
    except ValueError:
        raise ParseError(f"first line must be the number of vertices, got {lines[0]!r}") from None
    if N < 1:
        raise ParseError(f"number of vertices must be positive, got {N}")
    return N


def _parse_matrix_rows(lines: list[str], N: int, alphabet: str) -> np.ndarray:
    """Boolean upper triangle, True where the cell holds ``alphabet[0]``."""
    rows = lines[1:]
    if len(rows) != N - 1:
        raise ParseError(f"expected {N - 1} rows after N={N}, found {len(rows)}")
    out = np.zeros((N, N), dtype=bool)
    for i, row in enumerate(rows, start=1):
        if len(row) != N - i:
            raise ParseError(f"row {i} should have {N - i} cells, has {len(row)}")
        bad = set(row) - set(alphabet)
        if bad:
            raise ParseError(f"row {i}: unexpected characters {''.join(sorted(bad))!r}")
        out[i - 1, i:] = np.frombuffer(row.encode(), dtype=np.uint8) == ord(alphabet[0])
    return out


def _is_edge_layout(lines: list[str]) -> bool:
    return lines[0].split()[1:] == ["edges"]


def _parse_pair(line: str, N: int, width: int) -> list[str]:
    tok = line.split()
    if len(tok) != width:
        raise ParseError(f"expected {width} fields, got {line!r}")
    try:
        i, j = int(tok[0]), int(tok[1])
    except ValueError:
        raise ParseError(f"bad vertex labels in {line!r}") from None
    if not (1 <= i < j <= N):
        raise ParseError(f"pair ({i}, {j}) is not i < j within [1, {N}]")
    return tok


# --- graphs ---------------------------------------------------------------------

def parse_graph(text: str) -> OrderedGraph:
    lines = _lines(text)
    N = _read_n(lines)
    if _is_edge_layout(lines):
        edges = [tuple(int(t) for t in _parse_pair(ln, N, 2)) for ln in lines[1:]]
        return OrderedGraph.from_edges(N, edges)
    return OrderedGraph.from_dense(_parse_matrix_rows(lines, N, "10"))


def format_graph(g: OrderedGraph, fmt: str = "matrix") -> str:
    N = g.n_vertices
    if fmt == "edges":
        return "\n".join([f"{N} edges"] + [f"{i} {j}" for i, j in g.edges()]) + "\n"
    if fmt != "matrix":
        raise ValueError(f"unknown format {fmt!r}")
    adj = g.dense()
    rows = ["".join("1" if adj[i, j] else "0" for j in range(i + 1, N)) for i in range(N - 1)]
    return "\n".join([str(N)] + rows) + "\n"


# --- colorings ------------------------------------------------------------------

def parse_coloring(text: str) -> OrderedColoring:
    lines = _lines(text)
    N = _read_n(lines)
    if _is_edge_layout(lines):
        seen = {}
        for ln in lines[1:]:
            i, j, c = _parse_pair(ln, N, 3)
            if c not in ("R", "B"):
                raise ParseError(f"color must be R or B, got {c!r}")
            seen[(int(i), int(j))] = c
        if len(seen) != N * (N - 1) // 2:
            raise ParseError(f"coloring lists {len(seen)} of {N * (N - 1) // 2} pairs")
        return OrderedColoring.from_red_edges(N, [e for e, c in seen.items() if c == "R"])
    return OrderedColoring(OrderedGraph.from_dense(_parse_matrix_rows(lines, N, "RB")))


def format_coloring(c: OrderedColoring, fmt: str = "matrix") -> str:
    N = c.n_vertices
    red = c.red_subgraph().dense()
    if fmt == "edges":
        body = [f"{i} {j} {'R' if red[i - 1, j - 1] else 'B'}" for i, j in lex_edges(N)]
        return "\n".join([f"{N} edges"] + body) + "\n"
    if fmt != "matrix":
        raise ValueError(f"unknown format {fmt!r}")
    rows = ["".join("R" if red[i, j] else "B" for j in range(i + 1, N)) for i in range(N - 1)]
    return "\n".join([str(N)] + rows) + "\n"


def parse_host(text: str) -> OrderedGraph | OrderedColoring:
    """Coloring if the cells are R/B, graph otherwise."""
    lines = _lines(text)
    _read_n(lines)
    body = " ".join(lines[1:])
    if "R" in body or "B" in body:
        return parse_coloring(text)
    return parse_graph(text)


def format_host(host, fmt: str = "matrix") -> str:
    if isinstance(host, OrderedColoring):
        return format_coloring(host, fmt)
    return format_graph(host, fmt)


# --- certificates ---------------------------------------------------------------

def format_certificate(cert: PathCertificate, N: int) -> str:
    head = f"certificate {cert.spec.family.value} {cert.spec.n} {N}"
    if cert.color is not None:
        head += f" {Color(cert.color).value}"
    return head + "\n" + " ".join(map(str, cert.vertices)) + "\n"


def parse_certificate(text: str) -> tuple[PathCertificate, int]:
    """Certificate and the host size it refers to."""
    lines = _lines(text)
    if len(lines) != 2:
        raise ParseError(f"certificate needs a header line and a vertex line, got {len(lines)} lines")
    head = lines[0].split()
    if len(head) not in (4, 5) or head[0] != "certificate":
        raise ParseError(f"bad certificate header {lines[0]!r}")
    try:
        family = Family.parse(head[1])
        n, N = int(head[2]), int(head[3])
        color = Color(head[4]) if len(head) == 5 else None
        verts = tuple(int(t) for t in lines[1].split())
        spec = PathSpec(family, n)
    except (ValueError, InvalidSpec) as exc:
        raise ParseError(f"bad certificate: {exc}") from None
    return PathCertificate(spec, verts, color), N


# --- traces ---------------------------------------------------------------------

def status_code(value: int) -> str:
    if value == GREY:
        return "grey"
    if value == SURVIVED:
        return "survived"
    if value == ABSENT:
        return "absent"
    if value == OUT_OF_SCOPE:
        return "out"
    return f"step{value}"


def format_trace(trace: DeletionTrace) -> str:
    """One line per in-scope cell: ``i j color status``; color is R, B or - for graphs."""
    lines = [f"# {trace.method} N={trace.N} n={trace.n} guaranteed={int(trace.guaranteed)}"]
    lines += [f"# {st.describe()}" for st in trace.steps]
    for i, j in trace.in_scope_cells():
        cls = "-" if trace.classes is None else "RB-"[int(trace.classes[i - 1, j - 1])]
        lines.append(f"{i} {j} {cls} {status_code(trace.status_of(i, j))}")
    return "\n".join(lines) + "\n"


def render_matrix(host, trace: DeletionTrace | None = None) -> str:
    """Upper-triangular text picture of a graph or coloring.

    Without a trace, cells are ``#``/``.`` for graphs and R/B for colorings.
    With a trace, in-scope cells show the step that removed them, ``g`` for
    grey, ``*`` for survivors and ``.`` for non-edges; out-of-scope cells show ``x``.
    """
    N = host.n_vertices
    if isinstance(host, OrderedColoring):
        red = host.red_subgraph().dense()
        base = np.where(red, "R", "B")
    else:
        base = np.where(host.dense(), "#", ".")
    cells = np.full((N, N), " ", dtype=object)
    iu = np.triu_indices(N, k=1)
    cells[iu] = base[iu]
    if trace is not None:
        st = trace.status
        for i, j in zip(*iu):
            v = int(st[i, j])
            if v == OUT_OF_SCOPE:
                cells[i, j] = "x"
            elif v == GREY:
                cells[i, j] = "g"
            elif v == SURVIVED:
                cells[i, j] = "*"
            elif v == ABSENT:
                cells[i, j] = "."
            else:
                cells[i, j] = str(v)
    width = max(len(str(N)), max((len(str(x)) for x in cells.flat), default=1))
    head = " " * width + " " + " ".join(str(j).rjust(width) for j in range(1, N + 1))
    out = [head]
    for i in range(N):
        out.append(str(i + 1).rjust(width) + " " + " ".join(str(x).rjust(width) for x in cells[i]))
    return "\n".join(line.rstrip() for line in out) + "\n"


def read_text(path: str | Path) -> str:
    return Path(path).read_text()


def write_text(path: str | Path, text: str) -> None:
    Path(path).write_text(text)
