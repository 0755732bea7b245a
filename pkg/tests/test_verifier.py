import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from helpers import random_graph
from tuttelab import (
    Graph,
    GroupSpec,
    InputError,
    Window,
    cayley_ball,
    check_tutte_eps_k,
    edge_boundary,
    epsilon_from_delta,
    expansion_constant,
    fixture,
    has_perfect_matching,
    hull_report,
    tutte_berge_deficiency,
    verify_expansion_lemma,
)


@st.composite
def graphs(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = list(itertools.combinations(range(n), 2))
    edges = draw(st.sets(st.sampled_from(pairs))) if pairs else set()
    return Graph.from_edges(n, sorted(edges))


class TestHullReport:
    def test_path_center(self):
        w = Window.closed(fixture("path(3)"))
        rep = hull_report(w, {1})
        assert rep.odd_components == ((0,), (2,))
        assert rep.hull_odd == frozenset({0, 1, 2})

    def test_complete4(self):
        w = Window.closed(fixture("complete(4)"))
        rep = hull_report(w, {0})
        assert rep.odd_components == ((1, 2, 3),)
        assert rep.hull_odd == frozenset({0, 1, 2, 3})

    def test_ball_center_has_no_finite_components(self):
        w = cayley_ball(GroupSpec.free(2), 2)
        rep = hull_report(w, {0})
        assert rep.odd_components == ()
        assert rep.hull_odd == frozenset({0})

    @given(graphs(), st.data())
    @settings(max_examples=60, deadline=None)
    def test_hull_containments(self, g, data):
        w = Window.closed(g)
        x = data.draw(st.sets(st.integers(0, g.vertex_count - 1)))
        rep = hull_report(w, x)
        assert rep.hull_odd <= rep.hull_fin
        assert len(rep.odd_components) <= len(rep.finite_components)
        odd_as_sets = {frozenset(c) for c in rep.odd_components}
        fin_as_sets = {frozenset(c) for c in rep.finite_components}
        assert odd_as_sets <= fin_as_sets


class TestCheckTutte:
    def test_star3_fails_classically(self):
        w = Window.closed(fixture("star(3)"))
        rep = check_tutte_eps_k(w, 0, 1, 2)
        assert not rep.passed
        tutte_violations = [v for v in rep.violations if v.kind == "tutte"]
        assert any(v.x == (0,) and v.count == 3 for v in tutte_violations)

    def test_complete4_fails_quantitatively(self):
        w = Window.closed(fixture("complete(4)"))
        rep = check_tutte_eps_k(w, Fraction(1, 4), 1, 2)
        assert not rep.passed
        v = next(v for v in rep.violations if v.kind == "quantitative")
        assert v.x == (0,)
        assert v.count == 1 and v.hull_size == 4

    def test_free_ball_passes(self):
        w = cayley_ball(GroupSpec.free(2), 3)
        rep = check_tutte_eps_k(w, Fraction(1, 2), 1, 4)
        assert rep.passed

    def test_bad_parameters(self):
        w = Window.closed(fixture("cycle(4)"))
        with pytest.raises(InputError):
            check_tutte_eps_k(w, Fraction(-1, 2), 1, 2)
        with pytest.raises(InputError):
            check_tutte_eps_k(w, 0, 0, 2)

    @given(graphs(min_n=1, max_n=8))
    @settings(max_examples=40, deadline=None)
    def test_zero_epsilon_matches_deficiency_oracle(self, g):
        w = Window.closed(g)
        n = g.vertex_count
        rep = check_tutte_eps_k(w, 0, 1, n)
        assert rep.passed == (tutte_berge_deficiency(g, n).deficiency == 0)
        assert rep.passed == has_perfect_matching(g)

    @given(graphs(min_n=1, max_n=7), st.data())
    @settings(max_examples=40, deadline=None)
    def test_monotone_in_epsilon_and_k(self, g, data):
        w = Window.closed(g)
        n = g.vertex_count
        eps = Fraction(data.draw(st.integers(0, 8)), 8)
        k = data.draw(st.integers(1, 4))
        if check_tutte_eps_k(w, eps, k, n).passed:
            assert check_tutte_eps_k(w, eps / 2, k + 2, n).passed


class TestEdgeBoundary:
    def test_cycle_arc(self):
        w = Window.closed(fixture("cycle(8)"))
        assert edge_boundary(w, {0, 1, 2, 3}) == 2

    def test_ball_center(self):
        w = cayley_ball(GroupSpec.free(2), 1)
        assert edge_boundary(w, {0}) == 4

    def test_ball_center_plus_sphere(self):
        w = cayley_ball(GroupSpec.free(2), 2)
        assert edge_boundary(w, {0, 1, 2, 3, 4}) == 12

    @given(graphs(min_n=1), st.data())
    @settings(max_examples=60, deadline=None)
    def test_handshake_identity(self, g, data):
        w = Window.closed(g)
        f = data.draw(st.sets(st.integers(0, g.vertex_count - 1)))
        inside = sum(1 for e in g.edges() if e.u in f and e.v in f)
        degree_sum = sum(g.degree(v) for v in f)
        assert edge_boundary(w, f) + 2 * inside == degree_sum


class TestExpansionConstant:
    def test_cycle8(self):
        w = Window.closed(fixture("cycle(8)"))
        rep = expansion_constant(w, 4)
        assert rep.delta_lower == Fraction(1, 2)
        assert len(rep.delta_witness) == 4

    def test_free_ball(self):
        w = cayley_ball(GroupSpec.free(2), 2)
        rep = expansion_constant(w, 5)
        assert rep.delta_lower == Fraction(12, 5)
        assert rep.witness_boundary == 12

    def test_complete4(self):
        # Any 3 vertices of K4 send 3 edges to the remaining vertex.
        w = Window.closed(fixture("complete(4)"))
        rep = expansion_constant(w, 3)
        assert rep.delta_lower == Fraction(1)
        assert len(rep.delta_witness) == 3
        assert rep.witness_boundary == 3

    def test_connected_restriction_is_lossless(self):
        rng = random.Random(9)
        for _ in range(20):
            g = random_graph(rng, rng.randint(2, 8), 0.5)
            w = Window.closed(g)
            a = expansion_constant(w, 4, connected_only=True)
            b = expansion_constant(w, 4, connected_only=False)
            assert a.delta_lower == b.delta_lower
            assert b.exhaustive and not a.exhaustive

    def test_bad_max_f(self):
        with pytest.raises(InputError):
            expansion_constant(Window.closed(fixture("cycle(4)")), 0)

    def test_regular_window_bounds(self):
        w = cayley_ball(GroupSpec.free(2), 2)
        rep = expansion_constant(w, 4)
        assert rep.delta_lower <= 4
        assert epsilon_from_delta(rep.delta_lower, 4) <= 1


class TestEpsilonFromDelta:
    def test_four_regular_tree_value(self):
        assert epsilon_from_delta(2, 4) == Fraction(1, 2)

    def test_zero(self):
        assert epsilon_from_delta(0, 7) == 0

    def test_arithmetic(self):
        assert epsilon_from_delta(1, 6) == Fraction(1, 6)

    def test_zero_degree_rejected(self):
        with pytest.raises(InputError):
            epsilon_from_delta(1, 0)


class TestExpansionLemma:
    def test_free_ball_passes(self):
        w = cayley_ball(GroupSpec.free(2), 3)
        rep = verify_expansion_lemma(w, 4, 2, 3)
        assert rep.passed
        assert rep.epsilon == Fraction(1, 2)

    def test_closed_complete4_fails(self):
        w = Window.closed(fixture("complete(4)"))
        rep = verify_expansion_lemma(w, 3, Fraction(2, 3), 2)
        assert not rep.passed
        assert any(
            v.kind == "expansion" and v.x == (0,) for v in rep.violations
        )

    def test_max_x_zero_is_vacuous(self):
        w = Window.closed(fixture("complete(4)"))
        rep = verify_expansion_lemma(w, 3, Fraction(2, 3), 0)
        assert rep.passed
        assert rep.candidates == 0

    def test_non_regular_rejected(self):
        w = Window.closed(fixture("path(3)"))
        with pytest.raises(InputError):
            verify_expansion_lemma(w, 2, 1, 2)

    def test_boundary_bound_is_checked(self):
        # Closed cycle(4) with d=2: at X = {} the whole graph is a finite
        # component with empty boundary, so the per-component bound fires
        # there; removing one vertex leaves a path with boundary exactly 2,
        # which satisfies the bound.
        w = Window.closed(fixture("cycle(4)"))
        rep = verify_expansion_lemma(w, 2, Fraction(1, 2), 1)
        boundary_violations = [v for v in rep.violations if v.kind == "boundary"]
        assert [v.x for v in boundary_violations] == [()]
        assert boundary_violations[0].component == (0, 1, 2, 3)
        assert any(v.kind == "expansion" for v in rep.violations)
