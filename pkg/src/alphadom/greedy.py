"""Deterministic greedy construction of a low-weight coverage set.

Three vertex-ordering strategies are supported; all ranking is done with
exact rationals so two keys are equal only when they are mathematically
equal, and ties always fall back to the vertex index.
"""
from __future__ import annotations

from enum import Enum
from fractions import Fraction

from .graph import DominatingSet, DominationInstance, WeightedGraph


class Strategy(Enum):
    """How candidate vertices are ranked when coverage must grow.

    S1 ranks by plain vertex weight; S2 by weight over closed degree,
    balancing weight against how much coverage the vertex brings; S3 by
    weight over the summed weight of the closed neighborhood, preferring
    light vertices sitting in heavy surroundings.
    """

    S1 = "s1"
    S2 = "s2"
    S3 = "s3"


SortKey = tuple[Fraction, int]


def sort_key(strategy: Strategy, g: WeightedGraph, v: int) -> SortKey:
    """Ranking key of v under the strategy; lower is picked first."""
    w = g.weights[v]
    if strategy is Strategy.S1:
        value = Fraction(w)
    elif strategy is Strategy.S2:
        value = Fraction(w, g.degree(v) + 1)
    else:
        nbhd = w + sum(g.weights[u] for u in g.adjacency[v])
        value = Fraction(w, nbhd)  # nbhd >= w >= 1, never zero
    return (value, v)


def greedy_dominate(inst: DominationInstance, strategy: Strategy) -> DominatingSet:
    """Grow a feasible coverage set by fixing violated vertices in index order.

    For each vertex v whose closed neighborhood holds fewer members than its
    demand, the missing count is filled with the best-ranked non-members of
    N[v].  Coverage only ever grows, so one ascending scan settles every
    vertex; the result is always feasible.
    """
    g = inst.graph
    n = g.n
    keys = [sort_key(strategy, g, v) for v in range(n)]

    in_set = bytearray(n)
    cover = [0] * n
    members: list[int] = []

    for v in range(n):
        need = inst.demands[v] - cover[v]
        if need <= 0:
            continue
        candidates = [u for u in g.adjacency[v] if not in_set[u]]
        if not in_set[v]:
            candidates.append(v)
        candidates.sort(key=keys.__getitem__)
        for u in candidates[:need]:
            in_set[u] = 1
            members.append(u)
            cover[u] += 1
            for t in g.adjacency[u]:
                cover[t] += 1

    return DominatingSet.from_members(g, members)
