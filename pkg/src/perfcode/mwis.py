"""Maximum weight independent set solvers.

Two routes: a linear-scan greedy for chordal graphs driven by a perfect
elimination order, and an exact branch-and-bound used on arbitrary graphs
(standing in, at desk scale, for polynomial perfect-graph machinery).
Weights are nonnegative integers; zero-weight vertices are never put into
result sets, so optima are canonical and deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import Graph, _mask_to_tuple
from .recognition import is_perfect_elimination_order


@dataclass(frozen=True)
class MwisResult:
    vertices: tuple[int, ...]
    value: int
    method: str  # "chordal-greedy" | "branch-and-bound"


def _check_weights(g: Graph, weights: Sequence[int]) -> tuple[int, ...]:
    w = tuple(weights)
    if len(w) != g.n:
        raise ValueError(f"weight vector has length {len(w)}, expected {g.n}")
    for v, wv in enumerate(w):
        if wv < 0:
            raise ValueError(f"negative weight {wv} at vertex {v}")
    return w


def mwis_chordal(g: Graph, weights: Sequence[int], peo: Sequence[int]) -> MwisResult:
    """Maximum weight independent set of a chordal graph.

    Two passes over a verified perfect elimination order: scan forward
    keeping residual weights, marking each vertex whose residual is still
    positive and charging that residual to its later neighbors; then scan
    the marked vertices backward, keeping each one with no kept neighbor.
    """
    w = _check_weights(g, weights)
    order = tuple(peo)
    if not is_perfect_elimination_order(g, order):
        raise ValueError("order is not a perfect elimination order of the graph")
    position = [0] * g.n
    for i, v in enumerate(order):
        position[v] = i
    residual = list(w)
    marked: list[int] = []
    for v in order:
        if residual[v] <= 0:
            continue
        marked.append(v)
        r = residual[v]
        for u in g.neighbors(v):
            if position[u] > position[v]:
                residual[u] -= r
    chosen_mask = 0
    for v in reversed(marked):
        if not g.neighbor_mask(v) & chosen_mask:
            chosen_mask |= 1 << v
    vertices = _mask_to_tuple(chosen_mask)
    return MwisResult(vertices, sum(w[v] for v in vertices), "chordal-greedy")


def _clique_cover_bound(g: Graph, remaining: int, w: Sequence[int]) -> int:
    """Upper bound: strip greedy maximal cliques, sum each clique's max weight.

    Cliques are seeded at the smallest uncovered vertex and grown by
    ascending id; any independent set takes at most one vertex per clique.
    """
    bound = 0
    uncovered = remaining
    while uncovered:
        low = uncovered & -uncovered
        seed = low.bit_length() - 1
        clique_best = w[seed]
        common = g.neighbor_mask(seed) & uncovered
        uncovered ^= low
        while common:
            lo = common & -common
            x = lo.bit_length() - 1
            if w[x] > clique_best:
                clique_best = w[x]
            uncovered &= ~lo
            common &= g.neighbor_mask(x)
        bound += clique_best
    return bound


def mwis_exact(g: Graph, weights: Sequence[int]) -> MwisResult:
    """Provably optimal maximum weight independent set by branch-and-bound.

    Branches on the highest-degree remaining vertex (smallest id on ties),
    include branch first, pruning with the greedy clique-cover bound; the
    returned set is the first optimum met in that fixed order. Exponential
    worst case.
    """
    w = _check_weights(g, weights)
    # Zero-weight vertices never enter an optimum here; drop them up front.
    pool = 0
    for v in range(g.n):
        if w[v] > 0:
            pool |= 1 << v
    best_value = 0
    best_mask = 0

    def branch(remaining: int, current_mask: int, current_value: int) -> None:
        nonlocal best_value, best_mask
        if not remaining:
            if current_value > best_value:
                best_value = current_value
                best_mask = current_mask
            return
        if current_value + _clique_cover_bound(g, remaining, w) <= best_value:
            return
        pick = -1
        pick_deg = -1
        m = remaining
        while m:
            low = m & -m
            v = low.bit_length() - 1
            deg = (g.neighbor_mask(v) & remaining).bit_count()
            if deg > pick_deg:
                pick_deg = deg
                pick = v
            m ^= low
        branch(remaining & ~g.closed_mask(pick), current_mask | (1 << pick), current_value + w[pick])
        branch(remaining & ~(1 << pick), current_mask, current_value)

    branch(pool, 0, 0)
    vertices = _mask_to_tuple(best_mask)
    return MwisResult(vertices, best_value, "branch-and-bound")


def wed_weights(
    g_square: Graph, nbh: Sequence[int], user: Sequence[int]
) -> tuple[tuple[int, ...], int]:
    """Combine closed-neighborhood and user weights for the WED reduction.

    With M = 1 + sum(user), the combined weight M*nbh(v) - user(v) makes
    every efficient dominating set outscore every other independent set of
    the square, and ranks efficient dominating sets by ascending user
    weight. nbh must come from the original graph (every entry >= 1), so
    all combined weights are positive. Returns (weights, M).
    """
    nbh = _check_weights(g_square, nbh)
    user = _check_weights(g_square, user)
    if any(x < 1 for x in nbh):
        raise ValueError("closed-neighborhood weights must be >= 1")
    scale = 1 + sum(user)
    return tuple(scale * nbh[v] - user[v] for v in range(g_square.n)), scale
