"""Bounded bidirectional breadth-first search over rewrite moves.

States are opaque hashables (packed bytes in practice).  A neighbor
function yields ``(label, position, before, after, next_state)`` tuples in
a fixed order, so runs are deterministic for a given budget.  The move set
must be closed under inversion: swapping ``before`` and ``after`` of any
move is again a legal move.  That lets the backward frontier grow with the
same neighbor function.
"""

from __future__ import annotations

from typing import Callable, Hashable, NamedTuple


class SearchStats(NamedTuple):
    nodes: int
    depth_forward: int
    depth_backward: int


Move = tuple  # (label, position, before, after)


def bidirectional_search(
    start: Hashable,
    goal: Hashable,
    rules,
    *,
    max_nodes: int,
    max_len: int,
    max_moves: int | None = None,
    neighbors: Callable | None = None,
) -> list[Move] | SearchStats:
    """Search from both ends; a list of moves transforms start into goal.

    ``rules`` and ``max_len`` feed the default byte-rewrite neighbor
    function; pass ``neighbors`` to search a different move system.
    Returns SearchStats instead of a path when the node budget, the move
    cap, or frontier exhaustion stops the search.
    """
    if neighbors is None:
        from .words import _byte_neighbors

        def neighbors(state):
            return _byte_neighbors(state, rules, max_len)

    if start == goal:
        return []

    seen_f: dict = {start: None}
    seen_b: dict = {goal: None}
    frontier_f = [start]
    frontier_b = [goal]
    depth_f = depth_b = 0

    def stitch(meet) -> list[Move]:
        fwd = []
        state = meet
        while seen_f[state] is not None:
            parent, move = seen_f[state]
            fwd.append(move)
            state = parent
        fwd.reverse()
        state = meet
        while seen_b[state] is not None:
            parent, move = seen_b[state]
            label, pos, before, after = move
            fwd.append((label, pos, after, before))
            state = parent
        return fwd

    while frontier_f and frontier_b:
        if max_moves is not None and depth_f + depth_b >= max_moves:
            break
        forward = len(frontier_f) <= len(frontier_b)
        frontier = frontier_f if forward else frontier_b
        seen, other = (seen_f, seen_b) if forward else (seen_b, seen_f)
        new_frontier = []
        for state in frontier:
            for label, pos, before, after, child in neighbors(state):
                if child in seen:
                    continue
                seen[child] = (state, (label, pos, before, after))
                if child in other:
                    return stitch(child)
                if len(seen_f) + len(seen_b) > max_nodes:
                    return SearchStats(len(seen_f) + len(seen_b), depth_f, depth_b)
                new_frontier.append(child)
        if forward:
            frontier_f = new_frontier
            depth_f += 1
        else:
            frontier_b = new_frontier
            depth_b += 1
    return SearchStats(len(seen_f) + len(seen_b), depth_f, depth_b)
