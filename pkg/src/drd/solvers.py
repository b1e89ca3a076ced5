"""Exact solvers for domination, Roman domination and double Roman domination.

Each invariant gets a branch-and-bound solver plus an independent exhaustive
oracle (`brute_force`). The two routes share nothing beyond the graph type,
so agreement between them is meaningful evidence of correctness.

Search-space note: the double Roman solver branches over {0,2,3} only. A
minimum-weight labeling never needs the value 1 (any 1 can be folded into a
neighboring 2 or 3 without increasing weight), so the reduced space always
contains an optimum; `brute_force(..., space="full")` re-checks that claim
exhaustively on small graphs.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from typing import Iterator, Union

from .errors import DrdError, InvalidArgumentsError, ResourceLimitError
from .graph import Graph
from .labeling import (
    DRLabeling,
    RomanLabeling,
    VertexSet,
    is_dominating,
    is_valid_drdf,
    is_valid_rdf,
)

DEFAULT_MAX_N = 30
MAX_N_ENV = "DRD_MAX_N"

BRUTE_MAX_N_REDUCED = 12
BRUTE_MAX_N_FULL = 8
MINIMA_MAX_N = 10
MINIMA_MAX_N_FULL = 8

INVARIANTS = ("domination", "roman", "double_roman")

Witness = Union[DRLabeling, RomanLabeling, VertexSet]


@dataclass(frozen=True)
class SolveResult:
    value: int
    witness: Witness
    nodes_explored: int
    method: str  # branch_and_bound | brute_force


def _solver_cap(max_n: int | None) -> int:
    if max_n is not None:
        return max_n
    raw = os.environ.get(MAX_N_ENV)
    if raw is None:
        return DEFAULT_MAX_N
    try:
        return int(raw)
    except ValueError:
        raise InvalidArgumentsError(f"{MAX_N_ENV} must be an integer, got {raw!r}") from None


def _check_cap(n: int, cap: int, what: str):
    if n > cap:
        raise ResourceLimitError(f"{what} supports n <= {cap}, got n = {n}")


def greedy_dominating_set(g: Graph) -> frozenset[int]:
    """Pick the vertex covering the most uncovered vertices until done.

    Ties break toward the lowest index, so the result is deterministic.
    """
    uncovered = set(range(g.n))
    chosen = []
    while uncovered:
        best_v, best_gain = -1, 0
        for v in range(g.n):
            gain = (v in uncovered) + sum(1 for u in g.adj[v] if u in uncovered)
            if gain > best_gain:
                best_v, best_gain = v, gain
        chosen.append(best_v)
        uncovered.discard(best_v)
        uncovered -= g.adj[best_v]
    return frozenset(chosen)


# ---------------------------------------------------------------------------
# Branch-and-bound engines
#
# The labeling engines keep, per vertex, the number of already-assigned
# neighbors valued 2 and 3 and the number of still-unassigned neighbors.
# That is enough to detect irreparable vertices on the fly and to price
# vertices that can no longer be saved by a neighbor.


def _dr_search(
    adj: tuple[tuple[int, ...], ...],
    order: list[int],
    value_order: tuple[int, ...],
    best_w: int,
    best_vals: list[int] | None,
    stop_on_improve: bool,
) -> tuple[int, list[int] | None, int]:
    """DFS over {0,2,3} assignments in `order`, pruning against best_w.

    With stop_on_improve the search halts at the first assignment strictly
    beating best_w; seeding best_w = opt + 1 and assigning values in
    ascending order therefore returns the lexicographically least optimum.
    """
    n = len(adj)
    vals = [-1] * n
    cnt2 = [0] * n
    cnt3 = [0] * n
    un = [len(a) for a in adj]
    nodes = 0
    done = False
    rng = range(n)

    def assign(w: int, x: int) -> bool:
        vals[w] = x
        ok = not (x == 0 and cnt3[w] == 0 and cnt2[w] < 2 and un[w] == 0)
        for u in adj[w]:
            un[u] -= 1
            if x == 2:
                cnt2[u] += 1
            elif x == 3:
                cnt3[u] += 1
            if vals[u] == 0 and cnt3[u] == 0 and cnt2[u] < 2 and un[u] == 0:
                ok = False
        return ok

    def unassign(w: int, x: int):
        vals[w] = -1
        for u in adj[w]:
            un[u] += 1
            if x == 2:
                cnt2[u] -= 1
            elif x == 3:
                cnt3[u] -= 1

    def rec(depth: int, wgt: int):
        nonlocal best_w, best_vals, nodes, done
        nodes += 1
        if depth == n:
            if wgt < best_w:
                best_w = wgt
                best_vals = vals.copy()
                if stop_on_improve:
                    done = True
            return
        # every unassigned vertex with no unassigned neighbor, no 3-neighbor
        # and at most one 2-neighbor must itself take a value >= 2
        lb = 0
        for v in rng:
            if vals[v] < 0 and un[v] == 0 and cnt3[v] == 0 and cnt2[v] <= 1:
                lb += 2
        if wgt + lb >= best_w:
            return
        w = order[depth]
        for x in value_order:
            if wgt + x >= best_w:
                continue
            if assign(w, x):
                rec(depth + 1, wgt + x)
                if done:
                    vals[w] = -1  # counters no longer needed
                    return
            unassign(w, x)

    rec(0, 0)
    return best_w, best_vals, nodes


def _roman_search(
    adj: tuple[tuple[int, ...], ...],
    order: list[int],
    value_order: tuple[int, ...],
    best_w: int,
    best_vals: list[int] | None,
    stop_on_improve: bool,
) -> tuple[int, list[int] | None, int]:
    """Same engine shape as _dr_search over {0,1,2} with the Roman condition."""
    n = len(adj)
    vals = [-1] * n
    cnt2 = [0] * n
    un = [len(a) for a in adj]
    nodes = 0
    done = False
    rng = range(n)

    def assign(w: int, x: int) -> bool:
        vals[w] = x
        ok = not (x == 0 and cnt2[w] == 0 and un[w] == 0)
        for u in adj[w]:
            un[u] -= 1
            if x == 2:
                cnt2[u] += 1
            if vals[u] == 0 and cnt2[u] == 0 and un[u] == 0:
                ok = False
        return ok

    def unassign(w: int, x: int):
        vals[w] = -1
        for u in adj[w]:
            un[u] += 1
            if x == 2:
                cnt2[u] -= 1

    def rec(depth: int, wgt: int):
        nonlocal best_w, best_vals, nodes, done
        nodes += 1
        if depth == n:
            if wgt < best_w:
                best_w = wgt
                best_vals = vals.copy()
                if stop_on_improve:
                    done = True
            return
        # vertices no 2-neighbor can ever reach must pay at least 1 themselves
        lb = 0
        for v in rng:
            if vals[v] < 0 and un[v] == 0 and cnt2[v] == 0:
                lb += 1
        if wgt + lb >= best_w:
            return
        w = order[depth]
        for x in value_order:
            if wgt + x >= best_w:
                continue
            if assign(w, x):
                rec(depth + 1, wgt + x)
                if done:
                    vals[w] = -1
                    return
            unassign(w, x)

    rec(0, 0)
    return best_w, best_vals, nodes


def _dom_branch_and_bound(g: Graph, best: frozenset[int]) -> tuple[frozenset[int], int]:
    """Branch on the lowest-indexed undominated vertex over its closed
    neighborhood; vertices tried earlier at a node are banned below it."""
    n = g.n
    closed = [sorted(g.adj[v] | {v}) for v in range(n)]
    covered = [0] * n
    ncov = 0
    chosen: list[int] = []
    banned = [False] * n
    best_set = best
    nodes = 0

    def rec():
        nonlocal ncov, best_set, nodes
        nodes += 1
        if ncov == n:
            if len(chosen) < len(best_set):
                best_set = frozenset(chosen)
            return
        if len(chosen) + 1 >= len(best_set):
            return
        v = next(i for i in range(n) if not covered[i])
        newly_banned = []
        for u in closed[v]:
            if banned[u]:
                continue
            chosen.append(u)
            for y in closed[u]:
                if covered[y] == 0:
                    ncov += 1
                covered[y] += 1
            rec()
            for y in closed[u]:
                covered[y] -= 1
                if covered[y] == 0:
                    ncov -= 1
            chosen.pop()
            banned[u] = True
            newly_banned.append(u)
        for u in newly_banned:
            banned[u] = False

    rec()
    return best_set, nodes


def _dom_lex_first(g: Graph, opt: int) -> tuple[frozenset[int], int]:
    """First dominating set of size opt in characteristic-vector order
    (exclusion tried before inclusion at every index)."""
    n = g.n
    closed = [sorted(g.adj[v] | {v}) for v in range(n)]
    last_decider = [max(c) for c in closed]
    covered = [0] * n
    ncov = 0
    chosen: list[int] = []
    found: frozenset[int] | None = None
    nodes = 0

    def rec(i: int):
        nonlocal ncov, found, nodes
        if found is not None:
            return
        nodes += 1
        if i == n:
            if ncov == n and len(chosen) == opt:
                found = frozenset(chosen)
            return
        for v in range(n):
            if covered[v] == 0 and last_decider[v] < i:
                return
        if len(chosen) == opt and ncov < n:
            return
        if len(chosen) + (n - i) < opt:
            return
        rec(i + 1)  # leave i out
        if found is not None or len(chosen) >= opt:
            return
        chosen.append(i)
        for y in closed[i]:
            if covered[y] == 0:
                ncov += 1
            covered[y] += 1
        rec(i + 1)
        for y in closed[i]:
            covered[y] -= 1
            if covered[y] == 0:
                ncov -= 1
        chosen.pop()

    rec(0)
    if found is None:
        raise DrdError("lexicographic pass failed to rediscover the optimum")
    return found, nodes


def _sorted_adj(g: Graph) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(sorted(s)) for s in g.adj)


def _degree_order(g: Graph) -> list[int]:
    return sorted(range(g.n), key=lambda v: (-len(g.adj[v]), v))


def solve_domination(g: Graph, canonical: bool = False, max_n: int | None = None) -> SolveResult:
    """Minimum dominating set size with a witness set.

    With canonical=True the witness is the one whose characteristic vector
    is lexicographically least among all minimum dominating sets.
    """
    _check_cap(g.n, _solver_cap(max_n), "solve_domination")
    best, nodes = _dom_branch_and_bound(g, greedy_dominating_set(g))
    if canonical:
        best, extra = _dom_lex_first(g, len(best))
        nodes += extra
    if not is_dominating(g, best):
        raise DrdError("solver produced a non-dominating witness")
    return SolveResult(len(best), frozenset(best), nodes, "branch_and_bound")


def solve_roman(g: Graph, canonical: bool = False, max_n: int | None = None) -> SolveResult:
    """Minimum Roman dominating function weight with a witness labeling."""
    _check_cap(g.n, _solver_cap(max_n), "solve_roman")
    adj = _sorted_adj(g)
    greedy = greedy_dominating_set(g)
    if 2 * len(greedy) < g.n:
        inc_w = 2 * len(greedy)
        inc_vals = [2 if v in greedy else 0 for v in range(g.n)]
    else:
        inc_w, inc_vals = g.n, [1] * g.n
    best_w, best_vals, nodes = _roman_search(
        adj, list(range(g.n)), (2, 0, 1), inc_w, inc_vals, False
    )
    if canonical:
        best_w, best_vals, extra = _roman_search(
            adj, list(range(g.n)), (0, 1, 2), best_w + 1, None, True
        )
        nodes += extra
    if best_vals is None:
        raise DrdError("canonical pass failed to rediscover the optimum")
    witness = RomanLabeling(tuple(best_vals))
    if witness.weight != best_w or not is_valid_rdf(g, witness):
        raise DrdError("solver produced an invalid Roman witness")
    return SolveResult(best_w, witness, nodes, "branch_and_bound")


def solve_double_roman(g: Graph, canonical: bool = False, max_n: int | None = None) -> SolveResult:
    """Minimum double Roman dominating function weight with a witness.

    Branches in descending-degree order trying values 3, 2, 0; the witness
    therefore never uses the value 1. The initial incumbent puts 3 on every
    vertex of a greedy dominating set. With canonical=True a second pass
    returns the lexicographically least optimal labeling over {0,2,3}.
    """
    _check_cap(g.n, _solver_cap(max_n), "solve_double_roman")
    adj = _sorted_adj(g)
    greedy = greedy_dominating_set(g)
    inc_w = 3 * len(greedy)
    inc_vals = [3 if v in greedy else 0 for v in range(g.n)]
    best_w, best_vals, nodes = _dr_search(
        adj, _degree_order(g), (3, 2, 0), inc_w, inc_vals, False
    )
    if canonical:
        best_w, best_vals, extra = _dr_search(
            adj, list(range(g.n)), (0, 2, 3), best_w + 1, None, True
        )
        nodes += extra
    if best_vals is None:
        raise DrdError("canonical pass failed to rediscover the optimum")
    witness = DRLabeling(tuple(best_vals))
    if witness.weight != best_w or not is_valid_drdf(g, witness):
        raise DrdError("solver produced an invalid double Roman witness")
    return SolveResult(best_w, witness, nodes, "branch_and_bound")


# ---------------------------------------------------------------------------
# Exhaustive oracles

def _brute_cap(space: str, max_n: int | None) -> int:
    if max_n is not None:
        return max_n
    return BRUTE_MAX_N_FULL if space == "full" else BRUTE_MAX_N_REDUCED


def brute_force(
    g: Graph, invariant: str, space: str = "reduced", max_n: int | None = None
) -> SolveResult:
    """Plain enumeration of the whole candidate space, written independently
    of the branch-and-bound code path.

    For double_roman, space="reduced" enumerates {0,2,3}^n and space="full"
    all of {0,1,2,3}^n; the other invariants have a single natural space.
    The witness is the lexicographically least optimum in the enumerated
    space (characteristic vectors for domination).
    """
    if invariant not in INVARIANTS:
        raise InvalidArgumentsError(f"unknown invariant {invariant!r}")
    if space not in ("reduced", "full"):
        raise InvalidArgumentsError(f"unknown space {space!r}")
    cap = _brute_cap(space, max_n)
    _check_cap(g.n, cap, f"brute_force({invariant}, {space})")
    n = g.n
    adj = _sorted_adj(g)
    best_w: int | None = None
    best_t: tuple[int, ...] | None = None
    count = 0

    if invariant == "domination":
        for t in itertools.product((0, 1), repeat=n):
            count += 1
            w = sum(t)
            if best_w is not None and w >= best_w:
                continue
            if all(t[v] or any(t[u] for u in adj[v]) for v in range(n)):
                best_w, best_t = w, t
        assert best_w is not None and best_t is not None  # all-ones dominates
        members = frozenset(v for v in range(n) if best_t[v])
        return SolveResult(best_w, members, count, "brute_force")

    if invariant == "roman":
        values: tuple[int, ...] = (0, 1, 2)
    elif space == "full":
        values = (0, 1, 2, 3)
    else:
        values = (0, 2, 3)

    for t in itertools.product(values, repeat=n):
        count += 1
        w = sum(t)
        if best_w is not None and w >= best_w:
            continue
        if invariant == "roman":
            good = all(t[v] != 0 or any(t[u] == 2 for u in adj[v]) for v in range(n))
        else:
            good = True
            for v in range(n):
                x = t[v]
                if x == 0:
                    if not (
                        any(t[u] == 3 for u in adj[v])
                        or sum(1 for u in adj[v] if t[u] == 2) >= 2
                    ):
                        good = False
                        break
                elif x == 1:
                    if not any(t[u] >= 2 for u in adj[v]):
                        good = False
                        break
        if good:
            best_w, best_t = w, t
    assert best_w is not None and best_t is not None  # the all-max labeling is valid
    if invariant == "roman":
        return SolveResult(best_w, RomanLabeling(best_t), count, "brute_force")
    return SolveResult(best_w, DRLabeling(best_t), count, "brute_force")


def enumerate_min_drdfs(
    g: Graph, full_space: bool = False, max_n: int | None = None
) -> Iterator[DRLabeling]:
    """Yield every minimum-weight DRDF in lexicographic order.

    The default space is {0,2,3}^V, which by the one-elimination argument
    reaches the same minimum weight as the full space; full_space=True
    enumerates {0,1,2,3}^V instead (smaller size cap).
    """
    cap = max_n if max_n is not None else (MINIMA_MAX_N_FULL if full_space else MINIMA_MAX_N)
    _check_cap(g.n, cap, "enumerate_min_drdfs")
    space = "full" if full_space else "reduced"
    opt = brute_force(g, "double_roman", space=space, max_n=g.n).value
    values = (0, 1, 2, 3) if full_space else (0, 2, 3)

    def gen() -> Iterator[DRLabeling]:
        for t in itertools.product(values, repeat=g.n):
            if sum(t) != opt:
                continue
            f = DRLabeling(t)
            if is_valid_drdf(g, f):
                yield f

    return gen()
