"""
Even complexes and circlets
===========================

Build a few small complexes, test evenness and strong connectivity, and
split an even complex into circlets.
"""

from circlet import (circlet_decomposition, degrees, is_circlet, is_even,
                     is_strongly_connected, kernel_dimension, simplex_skeleton,
                     simplex_sphere_decomposition, subcomplex)

# The 2-skeleton of the 5-simplex: every edge sits on four triangles.
K = simplex_skeleton(5)
print(K, "edge degrees:", degrees(K).profile())
print("even:", is_even(K), " strongly connected:", is_strongly_connected(K))

# Even face sets form a GF(2) vector space; a circlet has only two of them.
print("kernel dimension:", kernel_dimension(K), " circlet:", is_circlet(K))

# The kernel-driven split is one valid decomposition ...
for part in circlet_decomposition(K):
    print("  circlet with", len(part), "faces")

# ... and the octahedron/tetrahedra recipe is another.
for part in simplex_sphere_decomposition(5):
    sub = subcomplex(K, part.ids)
    print("  recipe part", sub, "circlet:", is_circlet(sub))

# The 4-simplex has odd edge degrees, so it is not even.
print("4-simplex even:", is_even(simplex_skeleton(4)))
