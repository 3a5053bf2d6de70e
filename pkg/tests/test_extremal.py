"""Canonical forms, exhaustive class generation, and bound scans."""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from misbench.extremal import (
    canonical_form,
    canonical_key,
    generate_all,
    graph_from_key,
    is_clique_union,
    load_class_list,
    mibs_extremes,
    nielsen_violations,
    tightness_scan,
    verify_degree2_constants,
    verify_equality_scan,
    write_class_list,
)
from misbench.graphs import (
    complete_graph,
    cycle_graph,
    degree_histogram,
    disjoint_union,
    empty_graph,
    path_graph,
    relabel,
)

from test_graphs import random_graph_strategy

# Unlabeled simple graph counts by order (independent reference sequence).
CLASS_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156}


class TestCanonicalForm:
    @settings(max_examples=100, deadline=None)
    @given(random_graph_strategy(max_n=7), st.randoms(use_true_random=False))
    def test_relabel_invariance(self, g, rnd):
        perm = list(range(g.n))
        rnd.shuffle(perm)
        assert canonical_key(relabel(g, perm)) == canonical_key(g)

    @settings(max_examples=60, deadline=None)
    @given(random_graph_strategy(max_n=7))
    def test_reconstruction_roundtrip(self, g):
        key = canonical_key(g)
        rebuilt = graph_from_key(g.n, key)
        assert canonical_key(rebuilt) == key
        assert rebuilt.edge_count() == g.edge_count()
        assert degree_histogram(rebuilt) == degree_histogram(g)

    def test_idempotent(self):
        g = disjoint_union(cycle_graph(5), path_graph(3))
        c = canonical_form(g)
        assert canonical_form(c) == c

    def test_distinguishes_nonisomorphic(self):
        assert canonical_key(path_graph(4)) != canonical_key(cycle_graph(4))
        # Same degree sequence, different graphs: C6 vs two triangles.
        assert canonical_key(cycle_graph(6)) != canonical_key(
            disjoint_union(complete_graph(3), complete_graph(3))
        )


class TestGeneration:
    def test_unfiltered_class_counts(self):
        for n, expected in CLASS_COUNTS.items():
            assert len(generate_all(n, "none")) == expected

    def test_no_duplicate_classes(self):
        reps = generate_all(6, "none")
        assert len({canonical_key(g) for g in reps}) == len(reps)

    def test_k4free_counts(self):
        # All 11 classes on 4 vertices except K4 itself; on 5 vertices the
        # 5 supergraphs of K4 drop out of 34.
        assert len(generate_all(4, "k4free")) == 10
        assert len(generate_all(5, "k4free")) == 29

    def test_maxdeg3_on_four_vertices_is_everything(self):
        assert len(generate_all(4, "maxdeg3")) == 11

    def test_filters_are_hereditary_consistent(self):
        for g in generate_all(5, "both"):
            from misbench.graphs import is_k4_free, max_degree

            assert is_k4_free(g) and max_degree(g) <= 3

    def test_unknown_filter(self):
        with pytest.raises(ValueError):
            generate_all(3, "bogus")

    def test_generation_cap(self):
        from misbench.graphs import GuardError

        with pytest.raises(GuardError):
            generate_all(9, "none")

    def test_class_list_roundtrip(self, tmp_path):
        reps = generate_all(5, "k4free")
        path = tmp_path / "classes.g6"
        write_class_list(str(path), reps)
        loaded = load_class_list(str(path))
        assert [canonical_key(g) for g in loaded] == [canonical_key(g) for g in reps]


class TestEqualityScan:
    def test_clique_union_detector(self):
        assert is_clique_union(disjoint_union(complete_graph(3), complete_graph(4))) == (True, 2)
        assert is_clique_union(complete_graph(4)) == (True, 1)
        assert is_clique_union(cycle_graph(4))[0] is False
        assert is_clique_union(complete_graph(5))[0] is False
        assert is_clique_union(disjoint_union(complete_graph(3), path_graph(2)))[0] is False

    def test_small_orders_no_violations(self):
        for n in range(1, 6):
            for row in verify_equality_scan(n):
                assert row.violations == (), (
                    f"n={row.n} k={row.k}: {row.violations}"
                )

    def test_attainers_at_triangle(self):
        rows = verify_equality_scan(3)
        by_k = {row.k: row for row in rows}
        assert len(by_k[1].attainers) == 1  # K3 is the unique attainer
        assert by_k[1].bound == 3

    def test_attainers_at_order_four(self):
        by_k = {row.k: row for row in verify_equality_scan(4)}
        assert by_k[1].bound == 4
        assert len(by_k[1].attainers) == 1  # K4

    def test_nielsen_report_empty_small(self):
        for n in range(1, 6):
            assert nielsen_violations(n) == []


class TestDegreeTwoSlack:
    def test_no_violations_small(self):
        for n in range(1, 7):
            _, bad = verify_degree2_constants(n)
            assert bad == []

    def test_p2_tight_for_degree1(self):
        rows, _ = verify_degree2_constants(2)
        hits = [
            r
            for r in rows
            if r.factor_name == "degree1" and r.k == 1 and r.tight
        ]
        assert hits, "P2 must attain the 8/9 allowance at k=1"
        assert hits[0].count == 2

    def test_k1_tight_for_isolated(self):
        rows, _ = verify_degree2_constants(1)
        hits = [r for r in rows if r.factor_name == "isolated" and r.k == 1 and r.tight]
        assert hits, "K1 must attain the 16/27 allowance at k=1"
        assert hits[0].count == 1


class TestScans:
    def test_tightness_scan_attainer(self):
        rows = tightness_scan(6, "none", "eppstein")
        by_k = {row["k"]: row for row in rows}
        # Two triangles: 9 maximal independent sets of size 2 meet 3^2.
        assert by_k[2]["max_mis_k"] == 9
        assert by_k[2]["ratio"] == pytest.approx(1.0, rel=1e-12)

    def test_tightness_scan_accepts_preloaded_reps(self):
        reps = generate_all(5, "k4free")
        rows = tightness_scan(5, "k4free", "nielsen", reps=reps)
        assert len(rows) == 6

    def test_tightness_scan_rejects_unknown_selector(self):
        with pytest.raises(ValueError):
            tightness_scan(4, "none", "bogus")

    def test_mibs_extremes(self):
        report = mibs_extremes(4, "none")
        # K4 maximizes at order 4 with its six edges.
        assert report["max_mibs"] == 6
