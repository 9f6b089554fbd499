"""
Good cyclic orders and the double counting behind the bound
===========================================================

A good cyclic order places the 2n vertices of M_n on a circle with
partners exactly n apart.  Every length-r window of such an order is a
member of the union family, and counting (order, window) incidences in
two ways reproduces the extremal bound.
"""

from collections import Counter

from matchwise import (connectivity_check, counting_bound,
                       enumerate_good_orders, good_order_count, identity_order,
                       intervals, is_interval, mask_of, matching_star_bound,
                       orders_containing_count, swap_halves, transpose,
                       vertices_of)

# There are 2^(n-1) (n-1)! normalized good orders (vertex 2n pinned at
# position 2n).
for n in (2, 3, 4, 5):
    print(f"n={n}: {good_order_count(n)} good cyclic orders")

orders = list(enumerate_good_orders(3))
print("\nall 8 orders of M_3:")
for o in orders:
    print(" ", o.serialize())

# Windows of one order, and the inverse query.
order = identity_order(3)
print("\nwindows of length 2 of the identity order:",
      [(s, vertices_of(m)) for s, m in intervals(order, 2)])
print("is {6,1,2} a window?", is_interval(order, mask_of({6, 1, 2})))
print("is {1,3} a window?", is_interval(order, mask_of({1, 3})))

# Double counting: each member of the union family is a window of the
# same number of orders, given by a closed form.
n, r = 3, 4
expected = orders_containing_count(n, r)
counts = Counter()
for o in enumerate_good_orders(n):
    for _, mask in intervals(o, r):
        counts[mask] += 1
print(f"\neach r={r} member appears in {expected} orders; enumerated:",
      sorted(set(counts.values())))

# Any admissible family has at most r windows per order, so the family
# size is bounded by r * #orders / #orders-per-member -- an exact
# division that equals the closed-form bound.
print("counting bound at (n=16, r=23):", counting_bound(16, 23))
print("closed form:            ", matching_star_bound(16, 23).value)

# Two involutive moves connect all normalized orders: adjacent
# transpositions away from the pinned positions, and one partner swap.
moved = transpose(order, 1)
print("\nT_1 applied to the identity:", moved.serialize())
print("T_1 twice restores it:", transpose(moved, 1) == order)
print("W_2 applied to the identity:", swap_halves(order, 2).serialize())

report = connectivity_check(4)
print(f"moves reach {report.orbit_size}/{report.expected} orders "
      f"(connected: {report.connected})")
