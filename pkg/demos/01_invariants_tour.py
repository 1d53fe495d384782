"""A tour of the six chained invariants.

For any graph the six numbers obey

    alpha(G^2) <= theta(G^2) <= gamma(G) <= idom(G) <= alpha(G) <= theta(G)

and the 12-cycle shows that equality of a single adjacent pair in the middle
of the chain does not propagate outward.
"""

from squarestable import (
    complete_graph,
    cycle_graph,
    invariant_chain,
    parse_edge_list,
    path_graph,
    star_graph,
)


def show(name, g):
    record = invariant_chain(g)
    print(f"{name:<14} n={record.n:<3} "
          f"alpha_sq={record.alpha_sq} theta_sq={record.theta_sq} "
          f"gamma={record.gamma} idom={record.idom} "
          f"alpha={record.alpha} theta={record.theta}  mu={record.mu}")


print("The chain on familiar graphs")
print("-" * 60)
show("path P4", path_graph(4))
show("cycle C6", cycle_graph(6))
show("cycle C12", cycle_graph(12))
show("complete K5", complete_graph(5))
show("star K1,4", star_graph(4))

print()
print("C12 is the interesting one: alpha_sq = theta_sq = gamma = idom = 4")
print("all coincide, yet alpha = theta = 6.  Middle equalities alone do not")
print("collapse the chain; only alpha = alpha_sq (or theta = theta_sq) does.")

print()
print("Graphs also load from edge-list text:")
g = parse_edge_list("""
# a triangle with a tail
n 5
0 1
1 2
2 0
2 3
3 4
""")
show("triangle+tail", g)
