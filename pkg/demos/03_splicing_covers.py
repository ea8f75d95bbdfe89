"""
Splicing covers together
========================

Cover each circlet separately, then swap partners at shared edges until one
connected surface covers every face exactly once.
"""

from circlet import (build_cover, canonical_assignment, circlet_decomposition, classify,
                     components, euler_characteristic, euler_cover, find_splice_edge,
                     report_classification, serialize_surface, simplex_skeleton, splice,
                     two_tetra_shared_edge)

# Two tetrahedra glued along one edge: even, but not a circlet.
K = two_tetra_shared_edge()
parts = [p.ids for p in circlet_decomposition(K)]
A = canonical_assignment(K, parts)
M = build_cover(K, A).surface
print("per-part cover:", classify(M).name, "p =", M.p)

site = find_splice_edge(K, A, components(M))
print("splice at", site.edge, site.pair1, site.pair2)
M2 = build_cover(K, splice(A, *site)).surface
print("after splice:", classify(M2).name, "p =", M2.p, "chi =", euler_characteristic(M2))

# The whole pipeline on the 5-simplex: four sphere circlets, three splices.
cover = euler_cover(simplex_skeleton(5), trace=print)
print(report_classification(cover))
print(serialize_surface(cover.surface).splitlines()[0])
