"""Exhaustive solver for the eternal distance-k domination game.

Guards form a sorted multiset of vertices. A configuration answers an attack
on r by moving to another configuration that contains r, through a perfect
matching that pairs guards across a distance of at most k (staying put is
distance 0). The winning configurations of a fixed guard count m are the
greatest set W such that every member can answer every attack inside W;
they are computed by starting from all size-m multisets and deleting
violators until stable. The eternal number is the smallest m with W != {}.

This is exponential-state machinery guarded by instance-size rails; it is
the ground truth the fast tree algorithms are checked against.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Iterable, Optional, Sequence

from .domination import distance_domination_brute
from .errors import GuardRailError
from .graphs import Graph, distance_matrix, is_connected

GuardConfig = tuple[int, ...]


def guard_config(vertices: Iterable[int]) -> GuardConfig:
    """Canonical (sorted) multiset representation."""
    return tuple(sorted(vertices))


def configs_compatible(g: Graph, k: int, a: GuardConfig, b: GuardConfig) -> bool:
    """Whether a perfect guard matching within distance k links a and b."""
    if len(a) != len(b):
        raise ValueError(f"guard counts differ: {len(a)} vs {len(b)}")
    for v in tuple(a) + tuple(b):
        if not 0 <= v < g.n:
            raise ValueError(f"guard position {v} out of range")
    dist = distance_matrix(g)
    return _matchable(dist, k, guard_config(a), guard_config(b))


def _matchable(dist, k: int, a: GuardConfig, b: GuardConfig) -> bool:
    if a == b:
        return True
    m = len(a)
    rows = []
    for u in a:
        du = dist[u]
        row = [j for j in range(m) if du[b[j]] <= k]
        if not row:
            return False
        rows.append(row)
    match_of = [-1] * m

    def augment(i: int, seen: list[bool]) -> bool:
        for j in rows[i]:
            if not seen[j]:
                seen[j] = True
                if match_of[j] < 0 or augment(match_of[j], seen):
                    match_of[j] = i
                    return True
        return False

    for i in range(m):
        if not augment(i, [False] * m):
            return False
    return True


def _check_rails(g: Graph, m: int, max_n: int, max_m: int) -> None:
    if g.n > max_n:
        raise GuardRailError(f"oracle limited to n <= {max_n}, got {g.n}")
    if m > max_m:
        raise GuardRailError(f"oracle limited to m <= {max_m}, got {m}")


def winning_configs(
    g: Graph, k: int, m: int, *, max_n: int = 12, max_m: int = 5
) -> set[GuardConfig]:
    """Greatest set of size-m configurations that survive every attack."""
    configs, _ = _solve_fixed_point(g, k, m, max_n=max_n, max_m=max_m)
    return configs


def _solve_fixed_point(
    g: Graph, k: int, m: int, *, max_n: int = 12, max_m: int = 5
) -> tuple[set[GuardConfig], int]:
    if k < 1 or m < 1:
        raise ValueError("k and m must be >= 1")
    if not is_connected(g):
        raise ValueError("oracle requires a connected graph")
    _check_rails(g, m, max_n, max_m)
    n = g.n
    dist = distance_matrix(g)

    balls = []
    for v in range(n):
        mask = 0
        dv = dist[v]
        for u in range(n):
            if dv[u] <= k:
                mask |= 1 << u
        balls.append(mask)
    full = (1 << n) - 1

    cfgs = list(combinations_with_replacement(range(n), m))
    # A configuration that leaves some vertex out of reach can never answer
    # an attack there, so it dies in the first sweep; drop it up front.
    alive: list[int] = []
    for i, c in enumerate(cfgs):
        mask = 0
        for v in set(c):
            mask |= balls[v]
        if mask == full:
            alive.append(i)
    alive_set = set(alive)

    contains: list[list[int]] = [[] for _ in range(n)]
    for i in alive:
        for v in set(cfgs[i]):
            contains[v].append(i)

    memo: dict[tuple[int, int], bool] = {}

    def compatible(i: int, j: int) -> bool:
        if i == j:
            return True
        key = (i, j) if i < j else (j, i)
        hit = memo.get(key)
        if hit is None:
            hit = _matchable(dist, k, cfgs[i], cfgs[j])
            memo[key] = hit
        return hit

    sweeps = 0
    changed = True
    while changed:
        changed = False
        sweeps += 1
        for i in sorted(alive_set):
            ci = set(cfgs[i])
            defended = True
            for r in range(n):
                if r in ci:
                    continue
                ok = False
                for j in contains[r]:
                    if j in alive_set and compatible(i, j):
                        ok = True
                        break
                if not ok:
                    defended = False
                    break
            if not defended:
                alive_set.discard(i)
                changed = True
    return {cfgs[i] for i in alive_set}, sweeps


@dataclass(frozen=True)
class OracleResult:
    k: int
    m_min: int
    winning: tuple[GuardConfig, ...]
    iterations: dict[int, int]  # guard count tried -> fixed-point sweeps


def eternal_number(
    g: Graph, k: int, *, max_n: int = 12, max_m: int = 5
) -> OracleResult:
    """Smallest guard count with a non-empty winning set, searched upward.

    The search starts at the distance-k domination number and is capped by
    the distance-floor(k/2) domination number for k >= 2 (by n for k = 1),
    which bounds the answer from above.
    """
    if not is_connected(g):
        raise ValueError("oracle requires a connected graph")
    _check_rails(g, 1, max_n, max_m)
    lo = distance_domination_brute(g, k).value
    if k == 1:
        hi = g.n
    else:
        half = k // 2
        hi = distance_domination_brute(g, half).value if half >= 1 else g.n
    iterations: dict[int, int] = {}
    for m in range(lo, hi + 1):
        configs, sweeps = _solve_fixed_point(g, k, m, max_n=max_n, max_m=max_m)
        iterations[m] = sweeps
        if configs:
            return OracleResult(k, m, tuple(sorted(configs)), iterations)
    raise AssertionError(
        f"no winning configuration up to the upper bound m={hi}; "
        "this contradicts the domination sandwich"
    )


@dataclass(frozen=True)
class DefenseTranscript:
    configs: tuple[GuardConfig, ...]
    failed_at: Optional[int]  # index of the first unanswerable attack


def replay_defense(
    g: Graph,
    k: int,
    start: GuardConfig,
    attacks: Sequence[int],
    *,
    max_n: int = 12,
    max_m: int = 5,
) -> DefenseTranscript:
    """Replay attacks from a configuration, answering deterministically.

    Each response is the lexicographically smallest winning configuration
    that contains the attacked vertex and is reachable from the current one.
    A winning start never fails; otherwise the index of the first stuck
    attack is reported.
    """
    start = guard_config(start)
    winners = sorted(winning_configs(g, k, len(start), max_n=max_n, max_m=max_m))
    dist = distance_matrix(g)
    history = [start]
    current = start
    for idx, r in enumerate(attacks):
        if not 0 <= r < g.n:
            raise ValueError(f"attack target {r} out of range")
        answer = None
        for cand in winners:
            if r in cand and _matchable(dist, k, current, cand):
                answer = cand
                break
        if answer is None:
            return DefenseTranscript(tuple(history), idx)
        history.append(answer)
        current = answer
    return DefenseTranscript(tuple(history), None)
