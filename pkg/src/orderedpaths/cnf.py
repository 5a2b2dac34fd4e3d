"""DIMACS encoding of "K_N has a 2-coloring with no monochromatic copy".

Variable ``id + 1`` is the pair with lexicographic id ``id``; a positive
literal means red.  Each n-subset contributes one not-all-red and one
not-all-blue clause over the edges of its order-induced copy.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .containment import find_monochromatic
from .core import OrderedColoring, PathSpec, edge_id, lex_edges, n_edges, path_edges
from .errors import EncodingBug, IncompleteModel, InvalidSpec, ParseError


@dataclass(frozen=True)
class CNF:
    n_vars: int
    clauses: tuple[tuple[int, ...], ...]
    comment: str = ""

    @property
    def n_clauses(self) -> int:
        return len(self.clauses)

    def header(self) -> str:
        return f"p cnf {self.n_vars} {self.n_clauses}"

    def to_dimacs(self) -> str:
        lines = [f"c {line}" for line in self.comment.splitlines()]
        lines.append(self.header())
        lines += [" ".join(map(str, cl)) + " 0" for cl in self.clauses]
        return "\n".join(lines) + "\n"


def encode_cnf(spec: PathSpec, N: int) -> CNF:
    if N < spec.n:
        raise InvalidSpec(f"need N >= n (got N={N}, n={spec.n})")
    pattern = path_edges(spec)
    clauses = []
    for S in combinations(range(1, N + 1), spec.n):
        lits = [edge_id(S[p - 1], S[q - 1], N) + 1 for p, q in pattern]
        clauses.append(tuple(-v for v in lits))
        clauses.append(tuple(lits))
    note = f"{spec} on K_{N}: variable = lexicographic pair id + 1, positive = red"
    return CNF(n_edges(N), tuple(clauses), note)


def parse_model(text: str) -> list[int]:
    """Literals from solver output: ``v`` lines, a bare literal list, or both.

    Comment (``c``) and status (``s``) lines are skipped; the terminating 0 is dropped.
    """
    lits: list[int] = []
    for line in text.splitlines():
        tok = line.split()
        if not tok or tok[0] in ("c", "s"):
            continue
        if tok[0] == "v":
            tok = tok[1:]
        for t in tok:
            try:
                v = int(t)
            except ValueError:
                raise ParseError(f"bad literal {t!r} in model") from None
            if v:
                lits.append(v)
    return lits


def decode_cnf_model(spec: PathSpec, N: int, model: Iterable[int] | str, check: bool = True) -> OrderedColoring:
    """Coloring from a satisfying assignment, re-checked to be free of monochromatic copies.

    ``check=False`` skips the re-check, e.g. to turn a hand-written model into a coloring.
    """
    if isinstance(model, str):
        model = parse_model(model)
    E = n_edges(N)
    value: dict[int, bool] = {}
    for lit in model:
        v = abs(int(lit))
        if v > E:
            raise IncompleteModel(f"literal {lit} out of range for {E} variables")
        value[v] = lit > 0
    missing = [v for v in range(1, E + 1) if v not in value]
    if missing:
        raise IncompleteModel(f"model leaves {len(missing)} of {E} variables unassigned (first: {missing[0]})")
    red = [e for k, e in enumerate(lex_edges(N)) if value[k + 1]]
    coloring = OrderedColoring.from_red_edges(N, red)
    hit = find_monochromatic(coloring, spec) if check else None
    if hit is not None:
        raise EncodingBug(f"decoded coloring contains a monochromatic {spec}: {hit.vertices}")
    return coloring


def model_of(coloring: OrderedColoring) -> list[int]:
    N = coloring.n_vertices
    red = coloring.red_subgraph()
    return [(k + 1) if red.has_edge(*e) else -(k + 1) for k, e in enumerate(lex_edges(N))]
