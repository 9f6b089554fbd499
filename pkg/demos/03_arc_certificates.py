"""
Arc families on a circle: certificates either way
=================================================

The engine behind the window analysis works on an abstract circle of N
positions.  For a family of length-r arcs and an arity k with
k*r <= (k-1)*N, the end-index assignment always produces one of two
certificates: a "bounded" report forcing at most r arcs, or k
complement arcs covering the whole circle, which exhibits k members
with empty common intersection.
"""

import json

from matchwise import (IntervalFamily, assign_indices, common_index,
                       construct_order_containing, identity_order, is_interval,
                       mask_of, matching_universe, saturation,
                       saturation_preserved_under_move, vertices_of)

# Four arcs of length 4 through position 1 on a 6-circle: k-wise
# intersecting, so the procedure certifies the size cap.
fam = IntervalFamily.from_starts(6, 4, [4, 5, 6, 1])
report = assign_indices(fam, 3)
print("arcs through position 1:", report.outcome)
print("unassigned indices:", report.unassigned, "(one per residue class)")

# Three disjoint arcs of length 2: the procedure finds a fully
# assigned residue class and emits the covering witness.
bad = IntervalFamily.from_starts(6, 2, [1, 3, 5])
report = assign_indices(bad, 3)
print("\ndisjoint arcs:", report.outcome)
print("witness complements:", report.witness_complements)
print("as JSON:", json.dumps(report.to_json_obj()))

# When a k-wise family has size exactly r (strict regime), it must be
# the full family of arcs through one position, and that position is
# recovered and verified.
star = IntervalFamily.from_starts(7, 3, [3, 4, 5])
print("\ncommon position of the three arcs:", common_index(star, 3))

# Back on the matching: an order is saturated by a family when r of
# its members appear as windows; the common position machinery then
# pins them all to one vertex.
star5 = matching_universe(4, 5).star(8)
status = saturation(identity_order(4), star5, 3)
print("\nsaturation of the identity order by the star at 8:", status)

# Saturation at vertex 2n survives the moves.
rep = saturation_preserved_under_move(identity_order(4), ("T", 1), star5, 3)
print("after T_1:", rep.after)
rep = saturation_preserved_under_move(identity_order(4), ("W", 3), star5, 3)
print("after W_3:", rep.after)

# Every star member admits an explicitly constructed order containing
# it as a window.
member = mask_of({5, 1, 3, 6})
order = construct_order_containing(3, 4, member)
print(f"\norder containing {vertices_of(member)} as a window:",
      order.serialize(), "-> window starts at", is_interval(order, member))
