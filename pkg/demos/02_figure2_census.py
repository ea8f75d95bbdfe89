"""
Every Euler cover of the four-hub-edge complex
==============================================

The complex has 40 square faces and four edges of degree 4, so there are
3**4 = 81 ways to glue it into a surface.  Classify all of them.
"""

from collections import Counter

from circlet import assignment_count, census, figure2_complex

K = figure2_complex()
print(K, "gluings:", assignment_count(K))

result = census(K)
print(f"vertex count p ranges over [{result.p_min}, {result.p_max}]")
for (ncomp, names), count in sorted(result.histogram.items()):
    print(f"  {count:3d} x {' + '.join(names)}")

# p = 36 + (number of consecutive hub edges glued the same way).  Three
# equalities around a 4-cycle force the fourth, so p = 39 never occurs and
# the Euler characteristic -1 (three cross-caps) is missing.
print("p values:", dict(sorted(Counter(r.p for r in result.records).items())))
