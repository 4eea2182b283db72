"""Ordering of the plan set: precedence layering plus priority sorting.

Plans are first layered by their precedence DAG: the frontier index of a plan
is the longest edge distance from any root (a plan nobody precedes).  Every
edge therefore crosses from a lower frontier to a strictly higher one, so
concatenating the frontiers yields a topological order.  Within one frontier
plans are mutually unordered and get sorted by priority instead.
"""

from __future__ import annotations

from dataclasses import dataclass

from .model import Instance, Plan


@dataclass(frozen=True)
class FrontierPartition:
    """Plans grouped by longest distance from the DAG roots.

    ``frontiers[i]`` lists the plan ids at distance ``i`` (input order
    preserved); ``frontier_of`` maps every plan id to its frontier index.
    """

    frontiers: tuple[tuple[int, ...], ...]
    frontier_of: dict[int, int]


def topological_sort(instance: Instance) -> tuple[list[int], FrontierPartition]:
    """Order plan ids so that every precedence edge points forward.

    Returns the order (frontier by frontier, input order within a frontier)
    together with the :class:`FrontierPartition`.  Cycles cannot occur here:
    instance construction rejects them.
    """
    ids = [p.id for p in instance.plans]
    preds: dict[int, list[int]] = {i: [] for i in ids}
    succs: dict[int, list[int]] = {i: [] for i in ids}
    for a, b in instance.plan_dag:
        preds[b].append(a)
        succs[a].append(b)

    # Longest distance from any root, by propagating along a Kahn traversal.
    depth = {i: 0 for i in ids}
    remaining = {i: len(preds[i]) for i in ids}
    queue = [i for i in ids if remaining[i] == 0]
    while queue:
        node = queue.pop()
        for succ in succs[node]:
            depth[succ] = max(depth[succ], depth[node] + 1)
            remaining[succ] -= 1
            if remaining[succ] == 0:
                queue.append(succ)

    n_frontiers = max(depth.values(), default=-1) + 1
    layers: list[list[int]] = [[] for _ in range(n_frontiers)]
    for i in ids:  # input order within each layer
        layers[depth[i]].append(i)
    partition = FrontierPartition(tuple(tuple(layer) for layer in layers), dict(depth))
    order = [i for layer in layers for i in layer]
    return order, partition


def sort_plans(instance: Instance, *, descending: bool = True) -> list[Plan]:
    """Plans in scheduling order: by frontier, then by priority within it.

    Higher priority means scheduled first by default; ``descending=False``
    inverts that for experiments.  The sort is stable, so equal-priority plans
    keep their input order and runs are reproducible.
    """
    _, partition = topological_sort(instance)
    by_id = {p.id: p for p in instance.plans}
    out: list[Plan] = []
    for layer in partition.frontiers:
        plans = [by_id[i] for i in layer]
        plans.sort(key=lambda p: -p.priority if descending else p.priority)
        out.extend(plans)
    return out
