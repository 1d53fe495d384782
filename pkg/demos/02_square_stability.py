"""What square-stability looks like.

A graph is square-stable when its stability number survives squaring
(an edge is added between every pair at distance two).  The witness
structure is a maximum stable set whose vertices are pairwise at distance
at least three.
"""

from squarestable import (
    classify,
    corona_with_k1,
    cycle_graph,
    distance_matrix,
    named_fixture,
    path_graph,
    square,
    square_stable_witness,
    stability_number,
    star_graph,
    to_graph6,
)


def describe(name, g):
    sq = square(g)
    a, a2 = stability_number(g), stability_number(sq)
    verdict = "square-stable" if a == a2 else "NOT square-stable"
    print(f"{name:<22} alpha={a} alpha_sq={a2}  -> {verdict}")


print("Squaring can crush the stability number or leave it alone")
print("-" * 64)
describe("path P4", path_graph(4))
describe("star K1,5", star_graph(5))
describe("cycle C5", cycle_graph(5))
describe("cycle C12", cycle_graph(12))
describe("corona of C5", corona_with_k1(cycle_graph(5)))

print()
g = corona_with_k1(cycle_graph(5))
w = sorted(square_stable_witness(g))
d = distance_matrix(g)
print(f"corona of C5 ({to_graph6(g)}): witness stable set {w}")
print("pairwise distances inside the witness:",
      sorted({d[a][b] for a in w for b in w if a < b}))
print("every pendant vertex sits at distance >= 3 from every other, which")
print("is exactly why attaching a pendant to every vertex forces stability.")

print()
print("A full classification report, on the odd-order square-stable example:")
report = classify(named_fixture("fig_ss_not_vwc"))
for key, value in report.as_dict().items():
    if key != "witnesses":
        print(f"  {key:<22} {value}")
print("  (square-stable and well-covered, but with 5 vertices it cannot be")
print("   very well-covered: that needs n = 2*alpha)")
