import math
import random

import pytest

from truncdim import (BudgetExceededError, Graph, all_pairs_distances,
                      beta_1_tree, beta_k_exact, diameter, dp_tables,
                      exterior_major_vertices, is_truncated_resolving,
                      leaf_groups, locating_dominating_number,
                      locating_dominating_set, root_tree, tk_all_peel_totals,
                      tk_beta_k, tk_membership, tree_metric_dimension,
                      tree_resolving_set)
from truncdim.families import all_labeled_trees, cycle, path, random_tree, star

from oracles import is_ld_set, ld_number, naive_beta_k

INF = math.inf


def D(g):
    return all_pairs_distances(g)


def spider_3x2():
    # center 0 with three legs of length two
    return Graph(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])


def two_stars():
    # three leaves on each of two adjacent centers; no degree-2 vertices
    return Graph(8, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 5), (1, 6), (1, 7)])


class TestExteriorMajorVertices:
    def test_spider(self):
        assert exterior_major_vertices(spider_3x2()) == (0,)
        assert leaf_groups(spider_3x2()) == {0: (2, 4, 6)}

    def test_path_has_none(self):
        assert exterior_major_vertices(path(7)) == ()

    def test_star(self):
        assert leaf_groups(star(5)) == {0: (1, 2, 3, 4)}

    def test_rejects_non_tree(self):
        with pytest.raises(ValueError):
            leaf_groups(cycle(4))


class TestClassicDimension:
    def test_star5(self):
        assert tree_metric_dimension(star(5)) == 3

    def test_spider(self):
        assert tree_metric_dimension(spider_3x2()) == 2

    def test_path_special_case(self):
        assert tree_metric_dimension(path(9)) == 1
        assert tree_resolving_set(path(9)) == (0,)

    def test_witness_resolves_at_full_distance(self):
        rng = random.Random(3)
        for _ in range(40):
            t = random_tree(rng.randrange(2, 12), rng)
            R = tree_resolving_set(t)
            dm = D(t)
            assert len(R) == tree_metric_dimension(t)
            assert is_truncated_resolving(dm, R, diameter(t)).resolving

    def test_formula_equals_stabilized_dimension(self):
        for n in range(2, 8):
            for t in all_labeled_trees(n):
                assert tree_metric_dimension(t) == beta_k_exact(D(t), diameter(t))[0]

    def test_rejects_non_tree(self):
        with pytest.raises(ValueError):
            tree_metric_dimension(cycle(5))


class TestDpTables:
    def test_leaf_bases(self):
        tables = dp_tables(root_tree(path(2), 0))
        # vertex 1 is a childless leaf
        assert tables.full[1] == 1 and tables.skip_dom[1] == 1
        assert tables.skip[1] == 0 and tables.avoid[1] == INF

    def test_single_edge(self):
        assert dp_tables(root_tree(path(2), 0)).full[0] == 1

    def test_path4_from_endpoint(self):
        assert dp_tables(root_tree(path(4), 0)).full[0] == 2

    def test_star5_from_center(self):
        # brute force over all subsets puts the star's value at 4
        assert ld_number(star(5)) == 4
        assert dp_tables(root_tree(star(5), 0)).full[0] == 4

    def test_value_chain(self):
        rng = random.Random(9)
        for _ in range(30):
            t = random_tree(rng.randrange(2, 11), rng)
            tables = dp_tables(root_tree(t, 0))
            for v in range(t.n):
                assert tables.skip[v] <= tables.skip_dom[v]
                assert tables.skip[v] <= tables.full[v]
                assert tables.skip_dom[v] <= tables.full[v] + 1

    def test_witness_sets_match_values(self):
        rng = random.Random(10)
        for _ in range(20):
            t = random_tree(rng.randrange(2, 10), rng)
            tables = dp_tables(root_tree(t, 0))
            w = tables.witness(0, "full")
            assert len(w) == tables.full[0]
            assert is_ld_set(t, w)

    def test_rejects_unknown_indexing(self):
        with pytest.raises(ValueError):
            dp_tables(root_tree(path(3), 0), "sideways")


class TestLocatingDominating:
    @pytest.mark.parametrize("g,want", [
        (path(2), 1),
        (path(4), 2),
        (path(5), 2),
        (star(5), 4),
    ])
    def test_known_values(self, g, want):
        assert locating_dominating_number(g) == want

    def test_matches_oracle(self):
        for n in range(2, 8):
            for t in all_labeled_trees(n):
                assert locating_dominating_number(t) == ld_number(t)

    def test_root_invariant(self):
        rng = random.Random(4)
        for _ in range(25):
            t = random_tree(rng.randrange(2, 10), rng)
            values = {locating_dominating_number(t, root=r) for r in range(t.n)}
            assert len(values) == 1

    def test_witness_is_ld_set(self):
        s = locating_dominating_set(spider_3x2())
        assert len(s) == locating_dominating_number(spider_3x2())
        assert is_ld_set(spider_3x2(), s)

    def test_rejects_non_tree_and_tiny(self):
        with pytest.raises(ValueError):
            locating_dominating_number(cycle(4))
        with pytest.raises(ValueError):
            locating_dominating_number(path(1))


class TestPairIndexingVariants:
    def test_literal_reading_contradicts_oracle(self):
        # as printed, the two-chosen-children case sums the first child's
        # children inside the second child's minimization; on this tree the
        # symmetric reading matches brute force and the literal one does not
        t = Graph(5, [(0, 1), (0, 2), (1, 3), (2, 4)])
        sym = dp_tables(root_tree(t, 0), "symmetric").full[0]
        lit = dp_tables(root_tree(t, 0), "literal").full[0]
        assert sym == ld_number(t) == 2
        assert lit == 3

    def test_symmetric_matches_oracle_everywhere(self):
        for n in range(2, 7):
            for t in all_labeled_trees(n):
                got = dp_tables(root_tree(t, 0), "symmetric").full[0]
                assert got == ld_number(t)


class TestBeta1Tree:
    @pytest.mark.parametrize("g,want", [
        (path(1), 1),
        (path(2), 1),
        (path(4), 2),
        (path(9), 4),
        (star(7), 5),
        (spider_3x2(), 3),
    ])
    def test_known_values(self, g, want):
        size, witness = beta_1_tree(g)
        assert size == want
        assert len(witness) == want

    def test_witness_verified(self):
        size, witness = beta_1_tree(spider_3x2())
        assert is_truncated_resolving(D(spider_3x2()), witness, 1).resolving

    def test_matches_oracle_exhaustive(self):
        for n in range(3, 8):
            for t in all_labeled_trees(n):
                assert beta_1_tree(t)[0] == naive_beta_k(D(t).dist, 1)[0]

    def test_never_exceeds_ld_number(self):
        rng = random.Random(6)
        for _ in range(40):
            t = random_tree(rng.randrange(2, 12), rng)
            assert beta_1_tree(t)[0] <= locating_dominating_number(t)

    def test_rejects_non_tree(self):
        with pytest.raises(ValueError):
            beta_1_tree(cycle(5))


class TestTkMembership:
    def test_star_is_member(self):
        assert tk_membership(star(6), 1).member is True

    def test_path_fails_degree_condition(self):
        res = tk_membership(path(5), 1)
        assert res.member is False and res.failed_condition == 2

    def test_two_stars_fail_residual_condition(self):
        res = tk_membership(two_stars(), 1)
        assert res.member is False and res.failed_condition == 4

    def test_empty_tree_is_member(self):
        assert tk_membership(Graph(0), 1).member is True

    def test_tiny_trees_are_members(self):
        assert tk_membership(path(1), 1).member is True
        assert tk_membership(path(2), 1).member is True

    def test_budget_yields_undecided(self):
        res = tk_membership(two_stars(), 1, budget=1)
        assert res.member is None

    def test_rejects_non_tree(self):
        with pytest.raises(ValueError):
            tk_membership(cycle(4), 1)


class TestTkPeeling:
    def test_star5_single_round(self):
        size, witness, steps = tk_beta_k(star(5), 1)
        assert size == 3 and witness == (2, 3, 4)
        assert len(steps) == 1
        assert steps[0].landmarks == (2, 3, 4)

    def test_star6_k2(self):
        assert tk_beta_k(star(6), 2)[0] == 4

    def test_tiny_trees(self):
        assert tk_beta_k(path(1), 2)[:2] == (1, (0,))
        assert tk_beta_k(path(2), 1)[:2] == (1, (0,))

    def test_rejects_non_member(self):
        with pytest.raises(ValueError):
            tk_beta_k(path(5), 1)

    def test_budget_raises(self):
        with pytest.raises(BudgetExceededError):
            tk_beta_k(star(9), 1, budget=1)

    def test_members_match_oracle_small(self):
        for n in range(1, 8):
            for t in all_labeled_trees(n):
                if any(t.degree(v) == 2 for v in range(t.n)):
                    continue
                for k in (1, 2):
                    if not tk_membership(t, k):
                        continue
                    want = naive_beta_k(D(t).dist, k)[0] if t.n > 0 else 0
                    size, witness, _ = tk_beta_k(t, k)
                    assert size == want
                    assert tk_all_peel_totals(t, k) == {want}

    def test_stars_are_members_with_value_n_minus_2(self):
        for n in range(4, 10):
            for k in (1, 2):
                assert tk_membership(star(n), k)
                assert tk_beta_k(star(n), k)[0] == n - 2
