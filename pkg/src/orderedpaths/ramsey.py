"""Constructive monochromatic path finders for red/blue colorings of K_N.

``find_mono_ap`` runs the two-sided deletion schedule on the edges between
A = [1, a] and B = [n, N]; ``find_mono_other`` handles P^{<,<} and P^{>,>}
with disjoint halves.  Both return a certificate together with the full
deletion trace.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb, isqrt

import numpy as np

from .core import Color, Family, OrderedColoring, PathCertificate, PathSpec, validate_certificate
from .deletion import GREY, OUT_OF_SCOPE, DeletionTrace, Step, backtrack, interleave, run_deletion
from .errors import HostTooSmall, InvalidCertificate, InvalidSpec, InvariantViolation

CLASS_COLORS = (Color.RED, Color.BLUE)


def _ceil_half(n: int) -> int:
    return (n + 1) // 2


def ramsey_upper_bound_ap(n: int) -> int:
    """2n - 2 + floor((sqrt(2(n-2)^2 + (-1)^n) - 1) / 2), in exact integers."""
    if n < 2:
        raise InvalidSpec(f"n must be at least 2 (got {n})")
    radicand = 2 * (n - 2) ** 2 + (1 if n % 2 == 0 else -1)
    # floor((sqrt(x) - 1) / 2) == floor((isqrt(x) - 1) / 2)
    return 2 * n - 2 + (isqrt(radicand) - 1) // 2


def ramsey_upper_bound_other(n: int) -> int:
    if n < 2 or n % 2:
        raise InvalidSpec(f"P^{{<,<}} / P^{{>,>}} need even n >= 2 (got {n})")
    return 3 * n - 4


@dataclass(frozen=True)
class RamseyConfig:
    """Host size and the vertex classes the search is restricted to.

    For the alternating path A = [1, a] and B = [n, N] may overlap; for the
    two other paths A = [1, M] and B = [M+1, 2M] with k = n/2.
    """
    n: int
    N: int
    a: int
    b_lo: int
    family: Family

    @property
    def A(self) -> tuple[int, int]:
        return (1, self.a)

    @property
    def B(self) -> tuple[int, int]:
        return (self.b_lo, self.N)

    @property
    def k(self) -> int:
        return self.n // 2

    @property
    def M(self) -> int:
        return self.a

    @property
    def overlap(self) -> int:
        return max(0, self.a - self.b_lo + 1)

    def scope(self) -> np.ndarray:
        idx = np.arange(1, self.N + 1)
        return (idx[:, None] <= self.a) & (idx[None, :] >= self.b_lo) & (idx[:, None] < idx[None, :])


def ap_config(n: int, N: int | None = None) -> RamseyConfig:
    """A = [1, N-n+1] for even n, [1, N-n+2] for odd n; B = [n, N]."""
    if n < 2:
        raise InvalidSpec(f"n must be at least 2 (got {n})")
    if N is None:
        N = ramsey_upper_bound_ap(n)
    a = N - n + 1 if n % 2 == 0 else N - n + 2
    return RamseyConfig(n, N, a, n, Family.AP)


def e_AB(n: int, N: int, a: int) -> int:
    """Number of pairs x < y with x in [1, a] and y in [n, N]."""
    size_a, size_b = a, N - n + 1
    inter = max(0, a - n + 1)
    return size_a * size_b - inter - comb(inter, 2)


def grey_edges_thm1(n: int, N: int, a: int) -> frozenset[tuple[int, int]]:
    """Edges between A and B that no copy with its first ceil(n/2) vertices in A can use."""
    grey = set()
    fl, cl = n // 2, _ceil_half(n)
    for i in range(1, fl):
        for j in range(1, fl - i + 1):
            grey.add((i, n + j - 1))
    for i in range(1, cl - 1):
        for j in range(1, cl - i):
            grey.add((a - j + 1, N - i + 1))
    return frozenset(grey)


def ap_grey_count(n: int) -> int:
    return comb(n // 2, 2) + comb(_ceil_half(n) - 1, 2)


def ap_steps(n: int, N: int, a: int) -> list[Step]:
    cl, fl = _ceil_half(n), n // 2
    odd = [((3 * n) // 2 - i, N - i + 1) for i in range(1, cl)]
    even = [(i + 1, a - cl + i + 1) for i in range(1, fl)]
    return interleave(odd, even, odd_leftmost=True, even_leftmost=False)


def removed_bound_thm1(n: int, N: int, a: int | None = None) -> int:
    """2 * sum |I_i| + 2 * sum |J_i|: at most one red and one blue edge per vertex per step."""
    if a is None:
        a = ap_config(n, N).a
    return 2 * sum(st.size for st in ap_steps(n, N, a))


def ap_counting_inequality(n: int, N: int | None = None) -> tuple[int, int, int]:
    """(r_max, f, e(A,B)) at the given (default: tight) host size."""
    cfg = ap_config(n, N)
    return removed_bound_thm1(n, cfg.N, cfg.a), ap_grey_count(n), e_AB(n, cfg.N, cfg.a)


def _coloring_classes(c: OrderedColoring) -> np.ndarray:
    red = c.red_subgraph().dense()
    upper = np.triu(np.ones_like(red), k=1)
    return np.stack([red, upper & ~red])


def _finish(trace: DeletionTrace, c: OrderedColoring, spec: PathSpec, last_is_smaller: bool,
            best_effort: bool):
    if not trace.survivors:
        if trace.guaranteed:
            raise InvariantViolation(f"{trace.method}: no edge survived although the counting bound guarantees one")
        return None, trace
    edge = trace.survivors[0]
    try:
        verts = backtrack(trace, edge, last_is_smaller)
        cert = PathCertificate(spec, tuple(verts), CLASS_COLORS[int(trace.classes[edge[0] - 1, edge[1] - 1])])
        validate_certificate(cert, c)
    except (InvariantViolation, InvalidCertificate):
        if trace.guaranteed or not best_effort:
            raise
        return None, trace
    return cert, trace


def find_mono_ap(c: OrderedColoring, n: int, best_effort: bool = False):
    """Monochromatic AP_n certificate and deletion trace for a coloring of K_N.

    Raises :class:`HostTooSmall` below ``ramsey_upper_bound_ap(n)`` unless
    ``best_effort`` is set, in which case ``(None, trace)`` is returned when the
    schedule leaves nothing to backtrack from.
    """
    spec = PathSpec(Family.AP, n)
    N = c.n_vertices
    bound = ramsey_upper_bound_ap(n)
    if N < bound and not best_effort:
        raise HostTooSmall(f"AP_{n} needs N >= {bound}, host has {N}")
    if N < n:
        raise HostTooSmall(f"host on {N} vertices cannot hold AP_{n}")
    cfg = ap_config(n, N)
    grey = np.zeros((N, N), dtype=bool)
    for i, j in grey_edges_thm1(n, N, cfg.a):
        grey[i - 1, j - 1] = True
    trace = run_deletion("alternating", n, cfg.scope(), _coloring_classes(c), grey,
                         ap_steps(n, N, cfg.a), guaranteed=N >= bound)
    trace.notes.update(a=cfg.a, b_lo=cfg.b_lo)
    # even n: v_{n-1} in A is the smaller end; odd n: v_{n-1} in B is the larger end
    return _finish(trace, c, spec, last_is_smaller=n % 2 == 0, best_effort=best_effort)


def step_coverage(trace: DeletionTrace, step: int) -> bool:
    """After odd step 2i-1 every A-B edge leaving [1, i], after even step 2i
    every A-B edge entering [N-i+1, N], is grey or already removed."""
    st = trace.status
    done = (st == GREY) | ((st > 0) & (st <= step))
    in_scope = st != OUT_OF_SCOPE
    i = (step + 1) // 2
    N = trace.N
    region = np.zeros_like(in_scope)
    if step % 2:
        region[:i, :] = True
    else:
        region[:, N - i:] = True
    return bool(np.all(done[region & in_scope]))


# --- P^{<,<} and P^{>,>} ---------------------------------------------------------

def halves_config(n: int, N: int) -> RamseyConfig:
    M = N // 2
    return RamseyConfig(n, 2 * M, M, M + 1, Family.PLL)


def grey_edges_halves(n: int, N: int, family: Family) -> frozenset[tuple[int, int]]:
    family = Family(family)
    k, M = n // 2, N // 2
    N = 2 * M
    if family is Family.PLL:
        first, second = k - 1, k - 2
    elif family is Family.PGG:
        first, second = k - 2, k - 1
    else:
        raise InvalidSpec(f"grey sets for disjoint halves are given for pll/pgg, not {family.value}")
    grey = {(i, N + 1 - j) for i in range(1, first + 1) for j in range(1, k - i + (0 if family is Family.PGG else 1))}
    grey |= {(M + 1 - i, M + j) for i in range(1, second + 1)
             for j in range(1, k - i + (0 if family is Family.PLL else 1))}
    return frozenset(grey)


def halves_steps(n: int, N: int, family: Family) -> list[Step]:
    """Schedules for A = [1, M], B = [M+1, 2M], one family of the four.

    The interval for the B-side steps follows the order in which the path
    meets B, the removal side follows the order in which it meets A (and
    symmetrically for the A-side steps).
    """
    family = Family(family)
    k, M = n // 2, N // 2
    N = 2 * M
    a_inc = family in (Family.AP, Family.PLL)
    b_inc = family in (Family.PLL, Family.PGL)
    odd, even = [], []
    for i in range(1, k):
        odd.append((M + i, N - k + i) if b_inc else (M + k - i + 1, N - i + 1))
        even.append((i + 1, M - k + i + 1) if a_inc else (k - i, M - i))
    return interleave(odd, even, odd_leftmost=a_inc, even_leftmost=b_inc)


def halves_inequality(n: int, M: int) -> tuple[int, int, int]:
    """(r_max, f, e(A,B)) for disjoint halves of size M."""
    k = n // 2
    return 2 * (n - 2) * (M - k + 1), (k - 1) ** 2, M * M


def find_mono_other(c: OrderedColoring, family, n: int, best_effort: bool = False):
    """Monochromatic P^{<,<} or P^{>,>} certificate via the disjoint-halves schedule.

    Uses the first ``2 * (N // 2)`` vertices of the host.
    """
    family = Family(family) if not isinstance(family, Family) else family
    if family not in (Family.PLL, Family.PGG):
        raise InvalidSpec(f"find_mono_other handles pll and pgg, not {family.value}")
    spec = PathSpec(family, n)
    N = c.n_vertices
    bound = ramsey_upper_bound_other(n)
    if N < bound and not best_effort:
        raise HostTooSmall(f"{spec} needs N >= {bound}, host has {N}")
    cfg = halves_config(n, N)
    M, k = cfg.M, n // 2
    scope = np.zeros((N, N), dtype=bool)
    scope[:M, M:2 * M] = True
    grey = np.zeros((N, N), dtype=bool)
    for i, j in grey_edges_halves(n, N, family):
        grey[i - 1, j - 1] = True
    guaranteed = M >= 3 * k - 2
    trace = run_deletion(f"halves-{family.value}", n, scope, _coloring_classes(c), grey,
                         halves_steps(n, N, family), guaranteed=guaranteed)
    trace.notes.update(M=M, k=k)
    return _finish(trace, c, spec, last_is_smaller=True, best_effort=best_effort)
