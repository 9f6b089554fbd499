"""Independent brute-force oracles.

Everything here recomputes expected values straight from definitions
(subset filters, Pascal's triangle, permutation filters, exhaustive
subfamily scans) without touching the production code paths it is used
to check.
"""

from itertools import combinations, permutations, product


def pascal_triangle(limit: int) -> list[list[int]]:
    rows = [[1]]
    for a in range(1, limit + 1):
        prev = rows[-1]
        row = [1] + [prev[b - 1] + (prev[b] if b < len(prev) else 0)
                     for b in range(1, a)] + [1]
        rows.append(row)
    return rows


def pascal_binomial(a: int, b: int, _cache={}) -> int:
    if b > a:
        return 0
    if "rows" not in _cache or len(_cache["rows"]) <= a:
        _cache["rows"] = pascal_triangle(max(a, 64))
    return _cache["rows"][a][b]


# -- matching families from definitions -------------------------------------

def edges_of_matching(n: int) -> list[tuple[int, int]]:
    return [(i, i + n) for i in range(1, n + 1)]


def is_independent_set(n: int, vertices: frozenset[int]) -> bool:
    return not any(a in vertices and b in vertices
                   for a, b in edges_of_matching(n))


def transversals(n: int) -> list[frozenset[int]]:
    """All maximum independent sets: one endpoint from every edge."""
    return [frozenset(choice) for choice in product(*edges_of_matching(n))]


def contains_transversal(n: int, vertices: frozenset[int]) -> bool:
    return any(t <= vertices for t in transversals(n))


def brute_family(n: int, r: int, kind: str) -> set[frozenset[int]]:
    """Filter all r-subsets of 1..2n by the definition of the kind."""
    out = set()
    for combo in combinations(range(1, 2 * n + 1), r):
        s = frozenset(combo)
        independent = is_independent_set(n, s)
        covering = contains_transversal(n, s)
        if kind == "independent" and independent:
            out.add(s)
        elif kind == "max_containing" and covering:
            out.add(s)
        elif kind == "union" and (independent or covering):
            out.add(s)
    return out


# -- k-wise intersection from the definition ---------------------------------

def kwise_ok(members: list[frozenset[int]], k: int) -> bool:
    if not members:
        return True
    depth = min(k, len(members))
    for combo in combinations(members, depth):
        common = set(combo[0])
        for s in combo[1:]:
            common &= s
            if not common:
                break
        if not common:
            return False
    return True


def brute_max_kwise(members: list[frozenset[int]], k: int
                    ) -> tuple[int, list[frozenset[frozenset[int]]]]:
    """Exhaustive maximum by descending-size subfamily scan.

    Returns the maximum size together with every subfamily achieving
    it (as frozensets of member sets).
    """
    for size in range(len(members), 0, -1):
        hits = [frozenset(combo) for combo in combinations(members, size)
                if kwise_ok(list(combo), k)]
        if hits:
            return size, hits
    return 0, [frozenset()]


def kwise_ok_masks(members: tuple[int, ...], k: int) -> bool:
    if not members:
        return True
    depth = min(k, len(members))
    for combo in combinations(members, depth):
        common = combo[0]
        for m in combo[1:]:
            common &= m
            if not common:
                break
        if not common:
            return False
    return True


def brute_max_kwise_masks(members: tuple[int, ...], k: int
                          ) -> tuple[int, list[tuple[int, ...]]]:
    """Same exhaustive scan on bitmask members (fast enough for 2^16)."""
    for size in range(len(members), 0, -1):
        hits = [combo for combo in combinations(members, size)
                if kwise_ok_masks(combo, k)]
        if hits:
            return size, hits
    return 0, [()]


# -- good cyclic orders from the definition ----------------------------------

def brute_good_orders(n: int) -> list[tuple[int, ...]]:
    """Filter all (2n)! arrangements; feasible up to n = 4."""
    size = 2 * n

    def partner(v: int) -> int:
        return v + n if v <= n else v - n

    out = []
    for seq in permutations(range(1, size + 1)):
        if seq[size - 1] != size:
            continue
        if all(seq[(p + n) % size] == partner(seq[p]) for p in range(size)):
            out.append(seq)
    return out


def windows_of(seq: tuple[int, ...], r: int) -> set[frozenset[int]]:
    size = len(seq)
    return {frozenset(seq[(s + j) % size] for j in range(r))
            for s in range(size)}
