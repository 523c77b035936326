import pytest

from meandre import (
    analyze,
    build_graph_a,
    build_graph_c,
    canonical_pair,
    embed_up,
    explicit_fn1_element,
    frobenius_census,
    frobenius_seaweeds,
    hat_map,
    index_a_gl,
    index_c,
    make_seaweed_a,
    make_seaweed_c,
    to_type_a,
)

TABLE = {
    1: (1,),
    2: (1, 1),
    3: (2, 2, 1),
    4: (4, 4, 2, 1),
    5: (8, 10, 5, 2, 1),
    6: (15, 20, 13, 5, 2, 1),
    7: (28, 44, 28, 14, 5, 2, 1),
}


def test_census_rows_match_reference_table():
    for n, expected in TABLE.items():
        row = frobenius_census(n)
        assert row.by_k == expected
        assert row.total == sum(expected)


def test_census_ordered_counts_are_doubled():
    row = frobenius_census(5, ordered=True)
    assert row.by_k == tuple(2 * v for v in TABLE[5])


def test_census_rejects_nonpositive_rank():
    with pytest.raises(ValueError):
        frobenius_census(0)


def test_frobenius_seaweeds_are_canonical_index_zero():
    for n in range(1, 6):
        for k in range(1, n + 1):
            for q in frobenius_seaweeds(n, k):
                assert index_c(q) == 0
                assert canonical_pair(q) == q
                assert n - min(q.top.total, q.bottom.total) == k
    assert len(frobenius_seaweeds(5)) == frobenius_census(5).total
    with pytest.raises(ValueError, match="k must lie"):
        frobenius_seaweeds(3, 4)


def test_explicit_single_arc_family():
    assert explicit_fn1_element(4) == make_seaweed_c(4, "2,2", "1,2")
    assert explicit_fn1_element(2) == make_seaweed_c(2, "2", "1")
    assert explicit_fn1_element(1) == make_seaweed_c(1, "", "1")
    for n in range(1, 10):
        q = explicit_fn1_element(n)
        assert index_c(q) == 0
        assert q.top_defect + q.bottom_defect == 1


def test_embed_up_examples():
    assert embed_up(make_seaweed_c(1, "", "1")) == make_seaweed_c(2, "", "1,1")
    assert embed_up(make_seaweed_c(4, "2,2", "1,2")) == make_seaweed_c(5, "2,2,1", "1,2")


def test_embed_up_rejects_nonzero_index():
    with pytest.raises(ValueError, match="index-0"):
        embed_up(make_seaweed_c(1, "1", "1"))


def test_embed_up_lands_one_k_higher():
    for n in range(1, 6):
        for k in range(1, n + 1):
            targets = set(frobenius_seaweeds(n + 1, k + 1))
            for q in frobenius_seaweeds(n, k):
                image = embed_up(q)
                assert index_c(image) == 0
                assert canonical_pair(image) in targets


def test_hat_map_examples():
    assert hat_map(make_seaweed_c(1, "", "1")) == make_seaweed_c(2, "2", "1")
    # the deficient side is found after the swap normalisation
    assert hat_map(make_seaweed_c(2, "2", "1")) == make_seaweed_c(3, "1,2", "2")
    assert index_c(make_seaweed_c(3, "1,2", "2")) == 0


def test_hat_map_image_shape():
    image = hat_map(make_seaweed_c(4, "2,2", "1,2"))
    assert image == make_seaweed_c(5, "1,2,2", "2,2")
    assert index_c(image) == 0
    # the grown side is full, ends in 2, and the single central arc remains
    assert image.top.total == image.rank and image.top.parts[-1] == 2
    assert image.top_defect + image.bottom_defect == 1


def test_hat_map_rejects_bad_inputs():
    with pytest.raises(ValueError, match="index-0"):
        hat_map(make_seaweed_c(2, "", ""))
    with pytest.raises(ValueError, match="one central arc"):
        hat_map(make_seaweed_c(2, "", "1,1"))  # two central arcs


def test_to_type_a_examples():
    image = to_type_a(make_seaweed_c(4, "2,2", "1,2"))
    assert image == make_seaweed_a("1,2,1", "2,2")
    report = analyze(build_graph_a(image))
    assert len(report.components) == 1 and report.cycles == 0
    assert index_a_gl(image) == 1

    image = to_type_a(make_seaweed_c(1, "", "1"))
    assert image == make_seaweed_a("1", "1")
    assert index_a_gl(image) == 1


def test_to_type_a_unsupported_beyond_two_arcs():
    for q in frobenius_seaweeds(5, 3):
        with pytest.raises(ValueError, match="unsupported"):
            to_type_a(q)


def test_to_type_a_rejects_nonzero_index():
    with pytest.raises(ValueError, match="index-0"):
        to_type_a(make_seaweed_c(3, "", ""))


def test_component_structure_of_census_elements():
    # k mirror-stable segments, no cycles, 2n-k arcs in total
    for n in range(1, 6):
        for k in range(1, n + 1):
            for q in frobenius_seaweeds(n, k):
                report = analyze(build_graph_c(q))
                assert report.cycles == 0
                assert len(report.components) == k
                assert report.sigma_stable_segments == k
                assert report.total_arcs == 2 * n - k
