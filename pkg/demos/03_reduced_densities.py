"""
Triad densities and the majority-colored reduced hypergraph
===========================================================

A triad is a tripartite graph on three vertex classes; the density of a
hypergraph with respect to it is the fraction of the triad's triangles that
are edges.  Densities here are exact fractions, so the majority rule
(red iff density >= 1/2) has a bit-exact boundary.
"""

from fractions import Fraction

from rcover import Color, build_reduced, density, triangles
from rcover.generators import uniform_instance
from rcover.reduced import Triad

col = uniform_instance(12, 0.5, seed=5)
h_red = col.subhypergraph(Color.RED)
h_blue = col.subhypergraph(Color.BLUE)

# Three classes of four vertices each, fully joined.
classes = (tuple(range(4)), tuple(range(4, 8)), tuple(range(8, 12)))
triad = Triad.complete(classes)
print("triangles:", len(triangles(triad)))

d_red = density(h_red, triad)
d_blue = density(h_blue, triad)
print(f"red density  {d_red} = {float(d_red):.4f}")
print(f"blue density {d_blue} = {float(d_blue):.4f}")
print("complement identity holds exactly:", d_red + d_blue == Fraction(1))

# The reduced hypergraph lives on class indices.  With six classes of two
# vertices over the same host, each index triple is colored by majority.
small_classes = [tuple(range(2 * i, 2 * i + 2)) for i in range(6)]
bip = {
    (i, j): [(x, y) for x in small_classes[i] for y in small_classes[j]]
    for i in range(6)
    for j in range(i + 1, 6)
}
reduced = build_reduced(small_classes, bip, h_red)
print("reduced edges:", len(reduced.edges), "on", reduced.t, "classes")
for e in reduced.edges[:5]:
    print(f"  {e}: {reduced.colors[e].value} at density {reduced.densities[e]}")
