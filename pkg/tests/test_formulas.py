import pytest

from truncdim import (all_pairs_distances, beta_k_cycle, beta_k_exact,
                      beta_k_path, diameter, diameter_upper_bound,
                      enumerate_connected_graphs, has_beta_k_n_minus_1,
                      has_beta_k_n_minus_2, has_beta_k_one,
                      is_truncated_resolving, n_minus_2_family,
                      order_upper_bound, path_resolving_set)
from truncdim.families import (complete, complete_bipartite, cycle,
                               disjoint_union, edgeless, join, path, star)


def D(g):
    return all_pairs_distances(g)


class TestPathFormula:
    @pytest.mark.parametrize("n,k,want", [
        (7, 1, 3),    # remainder 2 falls in the middle band
        (20, 1, 8),   # remainder 0: two landmarks per block
        (10, 2, 3),
        (1, 5, 1),
        (2, 1, 1),
        (4, 1, 2),
        (5, 1, 2),
    ])
    def test_values(self, n, k, want):
        assert beta_k_path(n, k) == want

    def test_rejects_k0(self):
        with pytest.raises(ValueError):
            beta_k_path(5, 0)

    def test_rejects_bad_order(self):
        with pytest.raises(ValueError):
            beta_k_path(0, 1)

    def test_agrees_with_oracle(self):
        for n in range(1, 11):
            dm = D(path(n))
            for k in range(1, 4):
                assert beta_k_path(n, k) == beta_k_exact(dm, k)[0]


class TestPathConstruction:
    @pytest.mark.parametrize("n,k,want", [
        (5, 1, (1, 3)),      # block landmarks at offsets k+1, 2(k+1)
        (7, 1, (1, 3, 6)),   # remainder 2 adds the far endpoint
        (4, 1, (1, 3)),      # remainder in the top band, two-landmark tail
        (1, 1, (0,)),
        (9, 1, (1, 3, 6, 8)),
    ])
    def test_positions(self, n, k, want):
        assert path_resolving_set(n, k) == want

    def test_size_and_resolving(self):
        for n in range(1, 31):
            for k in range(1, 5):
                R = path_resolving_set(n, k)
                assert len(R) == beta_k_path(n, k)
                assert is_truncated_resolving(D(path(n)), R, k).resolving


class TestCycleFormula:
    @pytest.mark.parametrize("n,k,want", [
        (6, 1, 2),   # boundary order 3k+3
        (7, 1, 3),
        (3, 5, 2),
        (12, 2, 3),
    ])
    def test_values(self, n, k, want):
        assert beta_k_cycle(n, k) == want

    def test_rejects_small(self):
        with pytest.raises(ValueError):
            beta_k_cycle(2, 1)

    def test_agrees_with_oracle(self):
        for n in range(3, 12):
            dm = D(cycle(n))
            for k in range(1, 4):
                assert beta_k_cycle(n, k) == beta_k_exact(dm, k)[0]


class TestDimensionOne:
    def test_examples(self):
        assert has_beta_k_one(path(3), 1)
        assert not has_beta_k_one(path(4), 1)
        assert not has_beta_k_one(cycle(3), 9)

    def test_matches_oracle(self):
        for n in range(1, 6):
            for g in enumerate_connected_graphs(n):
                dm = D(g)
                for k in (1, 2, 3):
                    assert has_beta_k_one(g, k) == (beta_k_exact(dm, k)[0] == 1)


class TestTopDimension:
    def test_examples(self):
        assert has_beta_k_n_minus_1(complete(4), 2)
        assert not has_beta_k_n_minus_1(cycle(4), 1)
        assert has_beta_k_n_minus_1(complete(2), 1)

    def test_matches_oracle(self):
        for n in range(2, 6):
            for g in enumerate_connected_graphs(n):
                dm = D(g)
                for k in (1, 2):
                    assert (has_beta_k_n_minus_1(g, k)
                            == (beta_k_exact(dm, k)[0] == n - 1))


class TestNearTopDimension:
    def test_complete_bipartite_tagged(self):
        assert n_minus_2_family(complete_bipartite(2, 3), 1) == "complete-bipartite"

    def test_path4_only_at_k1(self):
        assert has_beta_k_n_minus_2(path(4), 1)
        assert not has_beta_k_n_minus_2(path(4), 2)

    def test_cycle6_not_in_family(self):
        assert not has_beta_k_n_minus_2(cycle(6), 1)

    def test_clique_plus_edgeless(self):
        g = join(complete(2), edgeless(3))
        assert n_minus_2_family(g, 1) == "clique-plus-edgeless"

    def test_clique_plus_point_and_clique(self):
        g = join(complete(2), disjoint_union(complete(1), complete(2)))
        assert n_minus_2_family(g, 2) == "clique-plus-point-and-clique"

    def test_star_is_complete_bipartite(self):
        assert n_minus_2_family(star(6), 1) == "complete-bipartite"

    def test_small_orders_rejected(self):
        with pytest.raises(ValueError):
            n_minus_2_family(path(3), 1)

    def test_matches_oracle(self):
        for n in (4, 5):
            for g in enumerate_connected_graphs(n):
                dm = D(g)
                for k in (1, 2):
                    assert (has_beta_k_n_minus_2(g, k)
                            == (beta_k_exact(dm, k)[0] == n - 2)), g.edges()


class TestBounds:
    def test_order_bound_values(self):
        assert order_upper_bound(2, 1) == 6
        assert order_upper_bound(1, 3) == 5
        assert order_upper_bound(1, 0) == 2

    def test_order_bound_attained(self):
        assert beta_k_exact(D(cycle(6)), 1)[0] == 2      # n = 6 = 2^2 + 2
        assert beta_k_exact(D(path(5)), 3)[0] == 1       # n = 5 = 4^1 + 1

    def test_order_bound_is_exact_bigint(self):
        assert order_upper_bound(100, 10) == 11 ** 100 + 100

    def test_diameter_bound_values(self):
        assert diameter_upper_bound(6, 3, 1) == 4
        assert diameter_upper_bound(9, 5, 1) == 5
        assert diameter_upper_bound(7, 6, 1) == beta_k_path(7, 1)

    def test_diameter_bound_rejects_bad_delta(self):
        with pytest.raises(ValueError):
            diameter_upper_bound(5, 5, 1)

    def test_bounds_hold_on_enumeration(self):
        for n in range(2, 6):
            for g in enumerate_connected_graphs(n):
                dm = D(g)
                delta = diameter(g)
                for k in (1, 2, 3):
                    b = beta_k_exact(dm, k)[0]
                    assert n <= order_upper_bound(b, k)
                    if delta >= 1:
                        assert b <= diameter_upper_bound(n, delta, k)
