"""Inequality checkers, realization constructions and exhaustive pair scans.

Every checker computes both sides of its inequality with the exact solvers
and reports whether the stated relation holds; nothing is taken on faith
from the closed forms. Realization builders return the graph together with
the value the construction promises, leaving confirmation to the caller.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .errors import InvalidArgumentsError, ResourceLimitError
from .graph import (
    FamilySpec,
    Graph,
    MAX_ENUMERATION_N,
    add_false_twin,
    add_true_twin,
    cartesian_product,
    corona,
    edge_positions,
    generate,
    graph_from_edge_mask,
    is_connected,
    trivial,
)
from .labeling import DRLabeling, partition
from .solvers import (
    enumerate_min_drdfs,
    solve_domination,
    solve_double_roman,
    solve_roman,
)

RELATIONS = ("le", "ge", "lt", "gt", "eq", "between", "strictly_between")


@dataclass(frozen=True)
class BoundReport:
    bound_id: str
    lhs: int
    rhs: int | tuple[int, int]
    relation: str
    holds: bool | None  # None when the check was skipped
    context: str
    note: str = ""
    skipped: str | None = None


def evaluate_relation(relation: str, lhs: int, rhs: int | tuple[int, int]) -> bool:
    if relation == "le":
        return lhs <= rhs
    if relation == "ge":
        return lhs >= rhs
    if relation == "lt":
        return lhs < rhs
    if relation == "gt":
        return lhs > rhs
    if relation == "eq":
        return lhs == rhs
    if relation == "between":
        lo, hi = rhs
        return lo <= lhs <= hi
    if relation == "strictly_between":
        lo, hi = rhs
        return lo < lhs < hi
    raise InvalidArgumentsError(f"unknown relation {relation!r}")


def _report(
    bound_id: str,
    lhs: int,
    rhs: int | tuple[int, int],
    relation: str,
    context: str,
    note: str = "",
) -> BoundReport:
    return BoundReport(
        bound_id, lhs, rhs, relation, evaluate_relation(relation, lhs, rhs), context, note
    )


def _ctx(g: Graph) -> str:
    return g.name if g.name else f"graph on {g.n} vertices"


def check_fundamental(g: Graph) -> list[BoundReport]:
    """The two sandwiches tying gamma_dR to gamma and gamma_R.

    2*gamma <= gamma_dR <= 3*gamma holds for every graph; the strict
    Roman sandwich gamma_R < gamma_dR < 2*gamma_R only for nontrivial
    connected graphs, so it is reported as skipped elsewhere.
    """
    gdr = solve_double_roman(g).value
    gam = solve_domination(g).value
    out = [_report("double_vs_domination", gdr, (2 * gam, 3 * gam), "between", _ctx(g))]
    if g.n >= 2 and is_connected(g):
        gr = solve_roman(g).value
        out.append(
            _report("double_vs_roman_strict", gdr, (gr, 2 * gr), "strictly_between", _ctx(g))
        )
    else:
        out.append(
            BoundReport(
                "double_vs_roman_strict",
                gdr,
                (0, 0),
                "strictly_between",
                None,
                _ctx(g),
                skipped="requires a nontrivial connected graph",
            )
        )
    return out


def check_min_drdf_partition(g: Graph, mode: str = "witness_only") -> list[BoundReport]:
    """Size bounds on the 3- and 2-classes of minimum labelings:
    |V3| <= gamma_dR - 2*gamma and |V2| >= 3*gamma - gamma_dR.

    witness_only checks the solver's witness; all_minima checks every
    minimum labeling (small graphs only) and reports the worst case.
    """
    if mode not in ("witness_only", "all_minima"):
        raise InvalidArgumentsError(f"unknown mode {mode!r}")
    res = solve_double_roman(g)
    gam = solve_domination(g).value
    gdr = res.value
    if mode == "witness_only":
        assert isinstance(res.witness, DRLabeling)
        labelings = [res.witness]
    else:
        labelings = list(enumerate_min_drdfs(g))
    v3_max = max(len(partition(f)[3]) for f in labelings)
    v2_min = min(len(partition(f)[2]) for f in labelings)
    context = f"{_ctx(g)}, {len(labelings)} minimum labeling(s)"
    return [
        _report("v3_at_most_slack", v3_max, gdr - 2 * gam, "le", context),
        _report("v2_at_least_coslack", v2_min, 3 * gam - gdr, "ge", context),
    ]


def check_cartesian(g: Graph, h: Graph) -> list[BoundReport]:
    """All product bounds at once, solved exactly on g x h.

    Lower bounds: half of gamma(one factor) times gamma_dR(the other), in
    both orders, and a sixth of gamma_dR(g)*gamma_dR(h); upper bound:
    min(n2*gamma_dR(g), n1*gamma_dR(h)); plus strictness over
    gamma(g)*gamma(h). Ratios are compared in exact integer form.
    """
    prod = cartesian_product(g, h)
    gdr_prod = solve_double_roman(prod).value
    gam_g = solve_domination(g).value
    gam_h = solve_domination(h).value
    gdr_g = solve_double_roman(g).value
    gdr_h = solve_double_roman(h).value
    context = f"{_ctx(g)} x {_ctx(h)}"
    return [
        _report(
            "product_lower_half_gh", gdr_prod, (gam_g * gdr_h + 1) // 2, "ge", context
        ),
        _report(
            "product_lower_half_hg", gdr_prod, (gam_h * gdr_g + 1) // 2, "ge", context
        ),
        _report(
            "product_lower_sixth", gdr_prod, (gdr_g * gdr_h + 5) // 6, "ge", context
        ),
        _report(
            "product_upper_min",
            gdr_prod,
            min(h.n * gdr_g, g.n * gdr_h),
            "le",
            context,
        ),
        _report(
            "product_above_domination_product",
            gdr_prod,
            gam_g * gam_h,
            "gt",
            context,
            note="follows from two earlier published bounds",
        ),
    ]


def check_twin(g: Graph, u: int, kind: str) -> BoundReport:
    """Adding a twin never lowers the value and raises it by at most 1
    (true twin, adjacent to the vertex too) or 2 (false twin)."""
    if kind == "true_twin":
        h = add_true_twin(g, u)
        width = 1
    elif kind == "false_twin":
        h = add_false_twin(g, u)
        width = 2
    else:
        raise InvalidArgumentsError(f"unknown twin kind {kind!r}")
    base = solve_double_roman(g).value
    grown = solve_double_roman(h).value
    return _report(
        f"{kind}_sandwich", grown, (base, base + width), "between", f"{_ctx(g)}, vertex {u}"
    )


def build_corona_realization(n: int, m: int) -> tuple[Graph, int]:
    """A base graph whose pendant corona hits exactly 3n - m: a star with
    m leaves plus n-m-1 isolated vertices, all given pendants.

    Sweeping m from 0 to n-1 realizes every value from 3n down to 2n+1.
    """
    if n < 1:
        raise InvalidArgumentsError(f"need n >= 1, got {n}")
    if not 0 <= m <= n - 1:
        raise InvalidArgumentsError(f"need 0 <= m <= n-1, got m={m} for n={n}")
    parts = [FamilySpec("star", (m,))]
    if n - m - 1 > 0:
        parts.append(FamilySpec("trivial", (n - m - 1,)))
    if len(parts) == 1:
        base = generate(parts[0])
    else:
        base = generate(FamilySpec("disjoint_union", parts=tuple(parts)))
    return corona(base, trivial(1)), 3 * n - m


def build_roman_pair_graph(b: int, i: int) -> tuple[Graph, tuple[int, int]]:
    """Bipartite graph realizing the pair (floor(b/2) + i, b).

    Side X has floor(b/2) vertices (indices 0..h-1). For every pair
    (x_j, x_k) with j <= i and j < k, two Y-vertices are joined to both;
    odd b adds two pendant Y-vertices on x_1.
    """
    h = b // 2
    if h < 2:
        raise InvalidArgumentsError(f"need floor(b/2) >= 2, got b={b}")
    if not 1 <= i <= h - 1:
        raise InvalidArgumentsError(f"need 1 <= i <= {h - 1}, got i={i}")
    edges = []
    nxt = h
    for j in range(1, i + 1):
        for k in range(j + 1, h + 1):
            for _ in range(2):
                edges.append((j - 1, nxt))
                edges.append((k - 1, nxt))
                nxt += 1
    if b % 2 == 1:
        for _ in range(2):
            edges.append((0, nxt))
            nxt += 1
    name = f"pair({h + i},{b})"
    return Graph.from_edges(nxt, edges, name), (h + i, b)


# ---------------------------------------------------------------------------
# Exhaustive pair scans

@dataclass(frozen=True)
class PairScanResult:
    a: int
    b: int
    n_max: int
    found: Graph | None
    graphs_scanned: int
    connected_only: bool


def _pair_hit(g: Graph, a: int, b: int) -> bool:
    # Roman first: it is cheaper and usually rules the graph out
    return solve_roman(g).value == a and solve_double_roman(g).value == b


def _scan_chunk(args: tuple[int, int, int, int, int, bool]) -> tuple[int, int | None]:
    n, start, stop, a, b, connected_only = args
    pairs = edge_positions(n)
    scanned = 0
    for mask in range(start, stop):
        g = graph_from_edge_mask(n, mask, pairs)
        if connected_only and not is_connected(g):
            continue
        scanned += 1
        if _pair_hit(g, a, b):
            return scanned, mask
    return scanned, None


def scan_pair_realizability(
    a: int,
    b: int,
    n_max: int = 6,
    connected_only: bool = True,
    processes: int = 1,
) -> PairScanResult:
    """Search all labeled graphs up to n_max vertices for one with Roman
    number a and double Roman number b.

    Enumeration order is ascending vertex count, then ascending edge
    bitmask; the reported graph and scan count are those of the first hit
    in that order no matter how many worker processes run.
    """
    if n_max > MAX_ENUMERATION_N:
        raise ResourceLimitError(
            f"pair scans support n_max <= {MAX_ENUMERATION_N}, got {n_max}"
        )
    if n_max < 1:
        raise InvalidArgumentsError(f"need n_max >= 1, got {n_max}")
    if processes < 1:
        raise InvalidArgumentsError(f"need processes >= 1, got {processes}")

    chunks = []
    for n in range(1, n_max + 1):
        total = 1 << len(edge_positions(n))
        step = total if processes == 1 else max(1024, -(-total // (processes * 8)))
        for start in range(0, total, step):
            chunks.append((n, start, min(start + step, total), a, b, connected_only))

    scanned = 0
    hit: tuple[int, int] | None = None
    if processes == 1:
        for chunk in chunks:
            part, mask = _scan_chunk(chunk)
            scanned += part
            if mask is not None:
                hit = (chunk[0], mask)
                break
    else:
        with ProcessPoolExecutor(max_workers=processes) as pool:
            for chunk, (part, mask) in zip(chunks, pool.map(_scan_chunk, chunks)):
                scanned += part
                if mask is not None:
                    hit = (chunk[0], mask)
                    break

    found = None
    if hit is not None:
        found = graph_from_edge_mask(hit[0], hit[1])
    return PairScanResult(a, b, n_max, found, scanned, connected_only)
