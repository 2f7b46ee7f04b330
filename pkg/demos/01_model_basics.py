"""Tour of the core model: graphs, demands, feasibility, and the exact oracle.

A set D alpha-rate dominates a graph when every vertex v, including members
of D, sees at least ceil(alpha * (deg(v) + 1)) vertices of its closed
neighborhood inside D.  This walkthrough builds a tiny weighted path and
inspects every moving part on it.
"""
from fractions import Fraction

from alphadom import (DominatingSet, DominationInstance, WeightedGraph,
                      brute_force_opt, coverage_count, deficiency, is_feasible)

# a path a-b-c with weights 5, 1, 3
g = WeightedGraph.from_edges(3, [(0, 1), (1, 2)], [5, 1, 3], labels=["a", "b", "c"])
inst = DominationInstance(g, Fraction(1, 2))

print("graph:", g)
for v in range(g.n):
    print(f"  {g.label_of(v)}: weight={g.weights[v]} closed_degree={g.degree(v)+1} "
          f"demand={inst.demand(v)}")

candidate = DominatingSet.from_members(g, [1, 2])  # {b, c}
print("\ncandidate {b, c}: weight", candidate.total_weight)
for v in range(g.n):
    print(f"  coverage({g.label_of(v)}) = {coverage_count(g, candidate, v)}"
          f" (needs {inst.demand(v)})")
print("feasible:", is_feasible(inst, candidate))

too_small = DominatingSet.from_members(g, [1])
report = deficiency(inst, too_small)
print("\ncandidate {b} shortfalls:",
      {g.label_of(v): l for v, l in report.shortfalls.items()})

best = brute_force_opt(inst)
print("\nexact optimum: weight", best.opt_weight, "set",
      [g.label_of(v) for v in best.opt_set.as_sorted_tuple()])

# raising the coverage rate to 1 forces every closed neighborhood entirely in
inst_full = DominationInstance(g, 1)
print("\nalpha=1 demands:", [inst_full.demand(v) for v in range(g.n)])
print("only feasible set is V:", brute_force_opt(inst_full).opt_set.as_sorted_tuple())
