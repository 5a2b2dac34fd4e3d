"""Step-scheduled edge deletion and certificate backtracking.

All four constructive proofs run the same machine: a list of steps, each
naming an interval of vertices, whether those vertices act as the right
(larger) or left (smaller) endpoint of their edges, and whether to drop the
leftmost or rightmost remaining edge per color class.  Edge ``t`` of the
final path is the one removed at step ``t`` by the path's vertex ``t+1``, so
recording, per step/vertex/color, which edge was dropped is enough to walk
back from any surviving edge.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from ._accel import kernel
from .errors import InvariantViolation

OUT_OF_SCOPE = -1
GREY = -2
ABSENT = -3
SURVIVED = 0


@dataclass(frozen=True)
class Step:
    index: int          # 1-based
    lo: int             # 1-based inclusive interval; empty when lo > hi
    hi: int
    right_end: bool     # vertices act as the larger endpoint of their edges
    leftmost: bool

    @property
    def size(self) -> int:
        return max(0, self.hi - self.lo + 1)

    def describe(self) -> str:
        side = "leftmost" if self.leftmost else "rightmost"
        role = "I" if self.right_end else "J"
        return f"step {self.index}: {role}=[{self.lo},{self.hi}] {side}"


def interleave(odd_steps: list[tuple[int, int]], even_steps: list[tuple[int, int]],
               odd_leftmost: bool, even_leftmost: bool) -> list[Step]:
    """Steps 2i-1 take ``odd_steps[i-1]`` (right-end role), steps 2i take ``even_steps[i-1]``."""
    steps = []
    total = len(odd_steps) + len(even_steps)
    for s in range(1, total + 1):
        i = (s + 1) // 2
        if s % 2:
            lo, hi = odd_steps[i - 1]
            steps.append(Step(s, lo, hi, True, odd_leftmost))
        else:
            lo, hi = even_steps[i - 1]
            steps.append(Step(s, lo, hi, False, even_leftmost))
    return steps


@kernel
def deletion_kernel(alive, lo, hi, right_end, leftmost):
    """Run the schedule in place on ``alive[c, x, y]`` (0-based, x < y).

    Returns ``removed_at[x, y]`` (step number, 0 = never) and
    ``pick[s, v, c]``, the other endpoint of the class-``c`` edge removed
    from ``v`` at step ``s`` (-1 if none).
    """
    C = alive.shape[0]
    N = alive.shape[1]
    S = lo.shape[0]
    removed_at = np.zeros((N, N), dtype=np.int32)
    pick = np.full((S, N, C), -1, dtype=np.int32)
    for s in range(S):
        for v in range(lo[s], hi[s] + 1):
            for c in range(C):
                if right_end[s]:
                    if leftmost[s]:
                        for u in range(0, v):
                            if alive[c, u, v]:
                                alive[c, u, v] = 0
                                removed_at[u, v] = s + 1
                                pick[s, v, c] = u
                                break
                    else:
                        for u in range(v - 1, -1, -1):
                            if alive[c, u, v]:
                                alive[c, u, v] = 0
                                removed_at[u, v] = s + 1
                                pick[s, v, c] = u
                                break
                else:
                    if leftmost[s]:
                        for w in range(v + 1, N):
                            if alive[c, v, w]:
                                alive[c, v, w] = 0
                                removed_at[v, w] = s + 1
                                pick[s, v, c] = w
                                break
                    else:
                        for w in range(N - 1, v, -1):
                            if alive[c, v, w]:
                                alive[c, v, w] = 0
                                removed_at[v, w] = s + 1
                                pick[s, v, c] = w
                                break
    return removed_at, pick


@dataclass
class DeletionTrace:
    """Outcome of one deletion run.

    ``status[x, y]`` (0-based, upper triangle) is ``OUT_OF_SCOPE``, ``GREY``,
    ``ABSENT`` (in scope but not an edge of the host), ``SURVIVED`` or the
    1-based step that removed the edge.  ``classes`` holds the color index of
    each cell for two-colored hosts (0 red, 1 blue) and is None otherwise.
    """
    method: str
    N: int
    n: int
    steps: list[Step]
    status: np.ndarray
    classes: np.ndarray | None
    picks: np.ndarray
    survivors: list[tuple[int, int]]
    guaranteed: bool
    notes: dict = field(default_factory=dict)

    def status_of(self, i: int, j: int) -> int:
        return int(self.status[min(i, j) - 1, max(i, j) - 1])

    @property
    def grey_count(self) -> int:
        return int((self.status == GREY).sum())

    @property
    def removed_count(self) -> int:
        return int((self.status > 0).sum())

    @property
    def survived_count(self) -> int:
        return len(self.survivors)

    def in_scope_cells(self) -> list[tuple[int, int]]:
        xs, ys = np.nonzero(np.triu(self.status != OUT_OF_SCOPE, k=1))
        return [(int(x) + 1, int(y) + 1) for x, y in zip(xs, ys)]


def run_deletion(method: str, n: int, scope: np.ndarray, present: np.ndarray,
                 grey: np.ndarray, steps: list[Step], guaranteed: bool) -> DeletionTrace:
    """Build the alive tensor, run the kernel and assemble a trace.

    ``scope`` and ``grey`` are (N, N) boolean; ``present`` is (C, N, N)
    boolean holding each class's edges.  All upper triangular, 0-based.
    """
    C, N, _ = present.shape
    upper = np.triu(np.ones((N, N), dtype=bool), k=1)
    scope = scope & upper
    grey = grey & scope
    alive = (present & (scope & ~grey)[None, :, :]).astype(np.int8)
    lo = np.array([max(st.lo, 1) - 1 for st in steps], dtype=np.int64)
    hi = np.array([min(st.hi, N) - 1 for st in steps], dtype=np.int64)
    right_end = np.array([st.right_end for st in steps], dtype=np.bool_)
    leftmost = np.array([st.leftmost for st in steps], dtype=np.bool_)
    removed_at, pick = deletion_kernel(alive, lo, hi, right_end, leftmost)

    any_present = present.any(axis=0)
    status = np.full((N, N), OUT_OF_SCOPE, dtype=np.int16)
    status[scope & ~any_present] = ABSENT
    status[scope & any_present] = SURVIVED
    status[grey & any_present] = GREY
    status[removed_at > 0] = removed_at[removed_at > 0]
    classes = None
    if C > 1:
        classes = np.argmax(present, axis=0).astype(np.int8)
        classes[~any_present] = -1
    xs, ys = np.nonzero(alive.any(axis=0))
    survivors = [(int(x) + 1, int(y) + 1) for x, y in zip(xs, ys)]
    return DeletionTrace(method, N, n, steps, status, classes, pick, survivors, guaranteed)


def backtrack(trace: DeletionTrace, edge: tuple[int, int], last_is_smaller: bool) -> list[int]:
    """Rebuild the traversal v_1..v_n ending in the surviving ``edge``.

    ``last_is_smaller`` says whether v_{n-1} is the smaller endpoint.  Raises
    :class:`InvariantViolation` if some step has no recorded removal to follow.
    """
    x, y = edge
    c = 0 if trace.classes is None else int(trace.classes[x - 1, y - 1])
    prev, last = (x, y) if last_is_smaller else (y, x)
    seq = [last, prev]
    cur = prev - 1
    for s in range(trace.n - 2, 0, -1):
        u = int(trace.picks[s - 1, cur, c])
        if u < 0:
            raise InvariantViolation(
                f"{trace.method}: no class-{c} edge removed from vertex {cur + 1} at step {s}")
        seq.append(u + 1)
        cur = u
    return seq[::-1]
