import itertools

import networkx as nx
import pytest
from hypothesis import given, settings

from peeliso.fixtures import (
    fixture,
    neighborhood_component_counts,
    rook_graph,
    shrikhande_graph,
)
from peeliso.graph import Graph, degree_vector, parse_edge_list, permute, read_edge_list
from peeliso.matcher import Mode, Status, run, verify_mapping
from peeliso.oracle import (
    OracleCapExceeded,
    exact_isomorphism,
    fuzz_agreement,
    regular_fixture_report,
)

from conftest import graphs, graphs_with_permutation


def brute_force(g, h):
    """Try every bijection; the reference the backtracking oracle is checked against."""
    if g.n != h.n or g.m != h.m:
        return False
    for images in itertools.permutations(h.vertices):
        if verify_mapping(g, h, dict(zip(g.vertices, images))):
            return True
    return False


def to_nx(g):
    G = nx.Graph()
    G.add_nodes_from(g.vertices)
    G.add_edges_from(g.edges)
    return G


class TestExact:
    def test_fig(self):
        res = exact_isomorphism(fixture("fig1"), fixture("fig2"))
        assert res.isomorphic
        assert verify_mapping(fixture("fig1"), fixture("fig2"), res.mapping)

    def test_c6_vs_two_triangles(self):
        assert brute_force(fixture("c6"), fixture("2c3")) is False
        res = exact_isomorphism(fixture("c6"), fixture("2c3"))
        assert not res.isomorphic and res.nodes_explored > 0

    def test_self(self):
        g = fixture("appendix-g")
        assert exact_isomorphism(g, g).isomorphic

    def test_cap(self):
        with pytest.raises(OracleCapExceeded):
            exact_isomorphism(rook_graph(4), shrikhande_graph())
        assert exact_isomorphism(fixture("fig1"), fixture("fig2"), cap=7).isomorphic

    def test_mismatched_sizes(self):
        assert not exact_isomorphism(Graph([1]), Graph([1, 2])).isomorphic


@settings(max_examples=500, deadline=None)
@given(graphs(max_n=6), graphs(max_n=6))
def test_oracle_matches_brute_force(g, h):
    res = exact_isomorphism(g, h)
    assert res.isomorphic == brute_force(g, h)
    if res.isomorphic:
        assert verify_mapping(g, h, res.mapping)


@settings(max_examples=500, deadline=None)
@given(graphs(min_n=5, max_n=9), graphs(min_n=5, max_n=9))
def test_oracle_matches_networkx(g, h):
    assert exact_isomorphism(g, h).isomorphic == nx.is_isomorphic(to_nx(g), to_nx(h))


@settings(max_examples=500, deadline=None)
@given(graphs_with_permutation(), graphs())
def test_oracle_permutation_invariant(case, h):
    g, pi = case
    if g.n != h.n:
        h = g
    assert exact_isomorphism(g, h).isomorphic == exact_isomorphism(permute(g, pi), h).isomorphic


class TestRegularFixtures:
    def test_same_parameters(self):
        rook, shri = rook_graph(4), shrikhande_graph()
        assert (rook.n, rook.m) == (shri.n, shri.m) == (16, 48)
        assert degree_vector(rook) == degree_vector(shri) == (6,) * 16

    def test_distinguisher(self):
        assert neighborhood_component_counts(rook_graph(4)) == (2,) * 16
        assert neighborhood_component_counts(shrikhande_graph()) == (1,) * 16
        assert not nx.is_isomorphic(to_nx(rook_graph(4)), to_nx(shrikhande_graph()))

    def test_report(self, tmp_path):
        report = regular_fixture_report(5, dump_dir=tmp_path)
        kinds = {r.kind: r for r in report.rows}
        assert kinds["rook-vs-shrikhande"].oracle is Status.NOT_ISOMORPHIC
        assert kinds["rook-relabelled"].oracle is Status.ISOMORPHIC
        assert report.soundness_violations == 0
        text = report.format()
        assert "rook-vs-shrikhande" in text
        assert regular_fixture_report(5, dump_dir=tmp_path).format() == text


class TestFuzz:
    def test_trivial(self):
        report = fuzz_agreement(100, 1, 0.0, seed=3)
        assert len(report.rows) == 100
        assert all(r.oracle is Status.ISOMORPHIC for r in report.rows)
        for tally in report.tallies.values():
            assert tally.true_positives == 100

    def test_deterministic_and_sound(self):
        a = fuzz_agreement(500, 8, 0.5, seed=7)
        b = fuzz_agreement(500, 8, 0.5, seed=7)
        assert a.format() == b.format()
        assert a.soundness_violations == 0

    def test_cap_guard(self):
        with pytest.raises(OracleCapExceeded):
            fuzz_agreement(1, 13, 0.5, seed=0)

    def test_counterexamples_are_dumped_and_replayable(self, tmp_path):
        report = fuzz_agreement(200, 8, 0.5, seed=7, dump_dir=tmp_path)
        missed = {m: t.false_negatives for m, t in report.tallies.items()}
        assert len(report.counterexamples) >= max(missed.values())
        for seed, gpath, hpath in report.counterexamples:
            g, h = read_edge_list(gpath), read_edge_list(hpath)
            assert exact_isomorphism(g, h).isomorphic
            assert any(run(g, h, mode).status is not Status.ISOMORPHIC for mode in Mode)

    def test_report_columns(self):
        text = fuzz_agreement(4, 5, 0.5, seed=1).format()
        head = text.splitlines()[0].split()
        assert head == ["seed", "kind", "n", "m", "oracle", "faithful", "cautious", "retry", "verified", "rounds"]
        assert "soundness-violations=0" in text


def test_parse_dumped_format_is_edge_list():
    g = parse_edge_list("3 2\n1 2\n2 3\n")
    assert exact_isomorphism(g, g).mapping == {1: 1, 2: 2, 3: 3}
