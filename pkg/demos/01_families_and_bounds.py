"""
Families over a perfect matching, and their exact bounds
========================================================

A walk through the first layer of matchwise: the matching graph M_n,
its r-uniform families, stars, k-wise intersection, and the
closed-form bounds, all in exact integer arithmetic.
"""

from matchwise import (MatchingGraph, UniformFamily, binomial,
                       is_k_wise_intersecting, kwise_witness, mask_of,
                       matching_star_bound, matching_universe, vertices_of)

# The host graph: n disjoint edges {i, i+n} on vertices 1..2n.
graph = MatchingGraph(3)
print("edges of M_3:", graph.edges())
print("partner of 2:", graph.partner(2))

# Vertex sets are bitmasks; bit i-1 encodes vertex i.
s = mask_of({1, 2, 6})
print("mask", bin(s), "unpacks to", vertices_of(s))
print("independent?", graph.is_independent(s))

# The union family at cardinality r: independent sets below r = n,
# covering sets above, the maximum independent sets at r = n.
for r in (2, 3, 4):
    fam = matching_universe(3, r)
    print(f"union family at r={r}: {len(fam)} sets; first:",
          fam.vertex_sets()[0])

# Stars: all members through one vertex.  Their size is the exact
# extremal bound for k-wise intersecting subfamilies.
fam = matching_universe(4, 5)
star = fam.star(8)
bound = matching_star_bound(4, 5)
print(f"\nstar at vertex 8 of the r=5 family over M_4: {len(star)} sets")
print(f"closed form gives {bound.value} via the {bound.branch} branch")

# Stars intersect k-wise for every k; generic families need not.
print("star 3-wise intersecting?", is_k_wise_intersecting(star, 3))

trio = UniformFamily.from_vertex_sets(6, 3, [{1, 2, 6}, {1, 5, 3}, {4, 2, 3}])
print("trio 2-wise intersecting?", is_k_wise_intersecting(trio, 2))
witness = kwise_witness(trio, 3)
print("3-wise witness (empty common intersection):",
      [vertices_of(w) for w in witness])

# The two bound branches, spelled out.
print("\nbounds across r for n = 4:")
for r in range(1, 8):
    b = matching_star_bound(4, r)
    print(f"  r={r}: {b.value:>3}  ({b.branch})")

# The r > n branch arises from an exact division; the quotient
# r (n-1)! 2^(n-1) / ((2n-r)! (r-n)! 2^(r-n)) is an integer for every
# n < r < 2n, e.g.:
import math
n, r = 9, 13
num = r * math.factorial(n - 1) * 2 ** (n - 1)
den = math.factorial(2 * n - r) * math.factorial(r - n) * 2 ** (r - n)
print(f"\nexact quotient at n={n}, r={r}: {num} / {den} =", num // den,
      "remainder", num % den)
print("closed form:", matching_star_bound(n, r).value)
print("binomial support: C(64, 32) =", binomial(64, 32))
