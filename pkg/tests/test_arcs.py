from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from matchwise import (IntegrityError, IntervalFamily, ParameterError,
                       UniformFamily, assign_indices, common_index,
                       is_k_wise_intersecting)

from oracles import kwise_ok


def arcs_as_family(fam: IntervalFamily) -> UniformFamily:
    return UniformFamily.from_masks(fam.size, fam.length,
                                    (fam.mask(s) for s in fam.starts))


def arcs_as_sets(fam: IntervalFamily) -> list[frozenset[int]]:
    return [frozenset(fam.positions(s)) for s in fam.starts]


# ---------------------------------------------------------------------------
# the arc family type
# ---------------------------------------------------------------------------

def test_positions_and_wraparound():
    fam = IntervalFamily(6, 4, ())
    assert fam.positions(5) == (5, 6, 1, 2)
    assert fam.end(5) == 2
    assert fam.mask(5) == 0b110011
    assert fam.starts_through(1) == (1, 4, 5, 6)


def test_validation():
    with pytest.raises(ParameterError):
        IntervalFamily(6, 6, ())       # length must stay below the size
    with pytest.raises(ParameterError):
        IntervalFamily(6, 0, ())
    with pytest.raises(ParameterError):
        IntervalFamily(6, 2, (0,))
    with pytest.raises(ParameterError):
        IntervalFamily(6, 2, (3, 3))


# ---------------------------------------------------------------------------
# the assignment procedure
# ---------------------------------------------------------------------------

def test_bounded_for_arcs_through_one_position():
    fam = IntervalFamily.from_starts(6, 4, [4, 5, 6, 1])
    report = assign_indices(fam, 3)
    assert report.bounded
    assert report.unassigned == (1, 2)           # one per class, N - r of them
    assert len(report.classes) == 2
    for cls in report.classes:
        assert any(x not in report.assigned for x in cls)


def test_covering_witness_for_disjoint_arcs():
    fam = IntervalFamily.from_starts(6, 2, [1, 3, 5])
    report = assign_indices(fam, 3)
    assert report.outcome == "covering_witness"
    assert len(report.witness_members) == 3
    covered = set()
    for arc in report.witness_complements:
        covered.update(arc)
    assert covered == set(range(1, 7))
    # the witness members really have empty common intersection
    common = set(range(1, 7))
    for s in report.witness_members:
        common &= set(fam.positions(s))
    assert not common


def test_singleton_family_is_bounded():
    report = assign_indices(IntervalFamily.from_starts(4, 2, [1]), 2)
    assert report.bounded


def test_precondition_errors():
    with pytest.raises(ParameterError):
        assign_indices(IntervalFamily.from_starts(6, 5, [1]), 3)  # k*r > (k-1)*N
    with pytest.raises(ParameterError):
        assign_indices(IntervalFamily.from_starts(6, 2, []), 3)
    with pytest.raises(ParameterError):
        assign_indices(IntervalFamily.from_starts(6, 2, [1]), 1)


def test_report_is_deterministic_and_serializable():
    fam = IntervalFamily.from_starts(9, 4, [2, 5, 8])
    a = assign_indices(fam, 3)
    b = assign_indices(fam, 3)
    assert a.to_json_obj() == b.to_json_obj()
    obj = a.to_json_obj()
    assert obj["N"] == 9 and obj["r"] == 4 and obj["k"] == 3
    assert obj["outcome"] in ("bounded", "covering_witness")
    assert obj["unassigned"] == sorted(obj["unassigned"])
    if obj["outcome"] == "covering_witness":
        assert "witness" in obj


def test_exhaustive_soundness_small_circles():
    # every k-wise intersecting arc family within the size regime must
    # come out bounded with at most r members; every covering witness
    # from the rest must genuinely cover
    for size in range(3, 8):
        all_starts = range(1, size + 1)
        for k in (2, 3, 4):
            for length in range(1, ((k - 1) * size) // k + 1):
                fam_all = IntervalFamily(size, length, ())
                for m in range(1, size + 1):
                    for starts in combinations(all_starts, m):
                        fam = IntervalFamily(size, length, starts)
                        conforming = kwise_ok(arcs_as_sets(fam), k)
                        report = assign_indices(fam, k)
                        if conforming:
                            assert report.bounded
                            assert len(fam) <= length
                        elif not report.bounded:
                            covered = set()
                            for arc in report.witness_complements:
                                covered.update(arc)
                            assert covered == set(all_starts)


# ---------------------------------------------------------------------------
# common-index extraction
# ---------------------------------------------------------------------------

def test_common_index_examples():
    assert common_index(IntervalFamily.from_starts(7, 3, [3, 4, 5]), 3) == 5
    assert common_index(IntervalFamily.from_starts(5, 1, [2]), 2) == 2
    assert common_index(IntervalFamily.from_starts(6, 2, [1, 2]), 3) == 2


def test_common_index_preconditions():
    with pytest.raises(ParameterError):
        common_index(IntervalFamily.from_starts(6, 4, [4, 5, 6, 1]), 3)  # not strict
    with pytest.raises(ParameterError):
        common_index(IntervalFamily.from_starts(7, 3, [3, 4]), 3)  # |fam| != r


def test_common_index_rejects_precondition_violations():
    # size r, strict regime, but not k-wise intersecting: three disjoint
    # arcs must be rejected with an integrity error, not silently mapped
    # to a position
    fam = IntervalFamily.from_starts(9, 3, [1, 4, 7])
    assert not is_k_wise_intersecting(arcs_as_family(fam), 2)
    with pytest.raises(IntegrityError):
        common_index(fam, 2)
    # size r and pairwise intersecting, but the arcs are not the full
    # set through one position: {1,2},{2,3} plus {1,2} is impossible,
    # so use a gap: {1,2},{3,4} on an 8-circle (size 2 = r, disjoint)
    fam2 = IntervalFamily.from_starts(8, 2, [1, 3])
    with pytest.raises(IntegrityError):
        common_index(fam2, 2)


def test_common_index_exhaustive_small_circles():
    # over every size-r k-wise intersecting arc family in the strict
    # regime, extraction succeeds and both inclusions hold
    for size in range(4, 10):
        for k in (2, 3, 4):
            max_len = ((k - 1) * size - 1) // k
            for length in range(1, max_len + 1):
                helper = IntervalFamily(size, length, ())
                stars = {x: set(helper.starts_through(x))
                         for x in range(1, size + 1)}
                for starts in combinations(range(1, size + 1), length):
                    fam = IntervalFamily(size, length, starts)
                    if not kwise_ok(arcs_as_sets(fam), k):
                        continue
                    x = common_index(fam, k)
                    assert set(starts) == stars[x]


@settings(max_examples=200)
@given(st.data())
def test_random_kwise_families_never_yield_witness(data):
    size = data.draw(st.integers(min_value=3, max_value=16))
    k = data.draw(st.integers(min_value=2, max_value=5))
    length = data.draw(st.integers(min_value=1, max_value=((k - 1) * size) // k))
    helper = IntervalFamily(size, length, ())
    x = data.draw(st.integers(min_value=1, max_value=size))
    through = helper.starts_through(x)
    m = data.draw(st.integers(min_value=1, max_value=len(through)))
    starts = data.draw(st.permutations(list(through)))[:m]
    fam = IntervalFamily.from_starts(size, length, starts)
    report = assign_indices(fam, k)
    assert report.bounded
    assert len(fam) <= length
