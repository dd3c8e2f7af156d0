import itertools

import pytest

import goldens
from ranktwo.algebras import ALPHA, BETA, Algebra
from ranktwo.build import (fundamental_poset, semistandard_poset,
                           semistandard_poset_oracle)
from ranktwo.grid import decompose, has_max_property, total_order, validate_grid
from ranktwo.lattice import order_ideals
from ranktwo.poset import are_vertex_color_isomorphic, vertex_color_isomorphism

VERTEX_COUNTS = {
    (Algebra.A1A1, "alpha_fund"): 1, (Algebra.A1A1, "beta_fund"): 1,
    (Algebra.A2, "alpha_fund"): 2, (Algebra.A2, "beta_fund"): 2,
    (Algebra.C2, "alpha_fund"): 3, (Algebra.C2, "beta_fund"): 4,
    (Algebra.G2, "alpha_fund"): 6, (Algebra.G2, "beta_fund"): 10,
}
IDEAL_COUNTS = {
    (Algebra.A1A1, "alpha_fund"): 2, (Algebra.A1A1, "beta_fund"): 2,
    (Algebra.A2, "alpha_fund"): 3, (Algebra.A2, "beta_fund"): 3,
    (Algebra.C2, "alpha_fund"): 4, (Algebra.C2, "beta_fund"): 5,
    (Algebra.G2, "alpha_fund"): 7, (Algebra.G2, "beta_fund"): 14,
}


def chain_colors(p):
    """Bottom-to-top color word when the poset is a chain, else None."""
    base = p.base
    order = base.linear_extension
    if any(len(base.upper_covers[v]) > 1 or len(base.lower_covers[v]) > 1
           for v in base.ids):
        return None
    if len(base.covers) != len(base) - 1:
        return None
    return tuple(base.color_of[v] for v in order)


class TestFundamentalPosets:
    @pytest.mark.parametrize("key", sorted(VERTEX_COUNTS, key=repr))
    def test_sizes(self, key):
        p = fundamental_poset(*key)
        assert len(p) == VERTEX_COUNTS[key]
        assert len(order_ideals(p)) == IDEAL_COUNTS[key]
        assert validate_grid(p) == []

    def test_chain_color_words(self):
        A, B = ALPHA, BETA
        assert chain_colors(fundamental_poset(Algebra.A2, "alpha_fund")) == (B, A)
        assert chain_colors(fundamental_poset(Algebra.A2, "beta_fund")) == (A, B)
        assert chain_colors(fundamental_poset(Algebra.C2, "alpha_fund")) == (A, B, A)
        assert chain_colors(fundamental_poset(Algebra.C2, "beta_fund")) == (B, A, A, B)
        assert chain_colors(fundamental_poset(Algebra.G2, "alpha_fund")) == (A, B, A, A, B, A)
        assert chain_colors(fundamental_poset(Algebra.A1A1, "alpha_fund")) == (A,)

    def test_g2_second_fundamental_is_not_a_chain(self):
        p = fundamental_poset(Algebra.G2, "beta_fund")
        assert chain_colors(p) is None
        assert len(p) == 10

    def test_g2_second_fundamental_ideal_count_from_columns(self):
        # independent count: two-entry columns over 1..7, minus the forbidden seven
        from ranktwo.tableaux import allowed_columns

        assert len(allowed_columns(Algebra.G2, 2)) == 21 - 7
        assert len(order_ideals(fundamental_poset(Algebra.G2, "beta_fund"))) == 14

    def test_max_property_and_indecomposable(self):
        for key in VERTEX_COUNTS:
            p = fundamental_poset(*key)
            assert has_max_property(p)
            if len(p):
                assert len(decompose(p)) == 1


class TestSemistandardPosets:
    def test_empty_weight(self):
        sp = semistandard_poset(Algebra.G2, "beta_alpha", (0, 0))
        assert len(sp.grid) == 0
        assert len(order_ideals(sp)) == 1

    def test_fundamental_weights_reduce_to_fixtures(self):
        for algebra in Algebra:
            for order in ("beta_alpha", "alpha_beta"):
                one = semistandard_poset(algebra, order, (1, 0)).grid
                assert are_vertex_color_isomorphic(
                    one.base, fundamental_poset(algebra, "alpha_fund").base)
                other = semistandard_poset(algebra, order, (0, 1)).grid
                assert are_vertex_color_isomorphic(
                    other.base, fundamental_poset(algebra, "beta_fund").base)

    @pytest.mark.parametrize("algebra,golden", [
        (Algebra.A2, "A2_22"), (Algebra.C2, "C2_22"), (Algebra.G2, "G2_22")])
    def test_matches_golden_posets(self, algebra, golden):
        fig = getattr(goldens, golden)
        built = semistandard_poset(algebra, "beta_alpha", (2, 2)).grid
        phi = vertex_color_isomorphism(built.base, fig.base)
        assert phi is not None
        assert all(fig.chain_of[phi[v]] == built.chain_of[v] for v in built.base.ids)
        # the golden numbering is the grid total order of the built poset
        assert total_order(fig) == tuple(range(1, len(fig) + 1))

    def test_c2_11_matches_golden_poset(self):
        built = semistandard_poset(Algebra.C2, "beta_alpha", (1, 1)).grid
        phi = vertex_color_isomorphism(built.base, goldens.C2_11.base)
        assert phi is not None
        assert all(goldens.C2_11.chain_of[phi[v]] == built.chain_of[v]
                   for v in built.base.ids)

    def test_decomposition_into_pieces(self):
        sp = semistandard_poset(Algebra.C2, "beta_alpha", (2, 2))
        dec = decompose(sp.grid)
        assert dec.labels == ("c2(0,1)",) * 2 + ("c2(1,0)",) * 2
        sp = semistandard_poset(Algebra.C2, "alpha_beta", (2, 2))
        dec = decompose(sp.grid)
        assert dec.labels == ("c2(1,0)",) * 2 + ("c2(0,1)",) * 2

    def test_all_built_posets_are_valid_grids_with_max_property(self):
        for algebra in Algebra:
            for order in ("beta_alpha", "alpha_beta"):
                for a, b in itertools.product(range(4), repeat=2):
                    grid = semistandard_poset(algebra, order, (a, b)).grid
                    assert validate_grid(grid) == []
                    assert has_max_property(grid)

    def test_piece_spans_partition_ids(self):
        sp = semistandard_poset(Algebra.G2, "beta_alpha", (3, 2))
        ids = [v for span in sp.pieces for v in span.vertex_ids]
        assert sorted(ids) == sorted(sp.grid.base.ids)
        assert [span.kind for span in sp.pieces] == ["beta_fund"] * 2 + ["alpha_fund"] * 3

    def test_negative_weight_rejected(self):
        with pytest.raises(ValueError):
            semistandard_poset(Algebra.A2, "beta_alpha", (-1, 0))


class TestOracle:
    @pytest.mark.parametrize("algebra", list(Algebra))
    def test_matches_builder(self, algebra):
        for a, b in itertools.product(range(3), repeat=2):
            built = semistandard_poset(algebra, "beta_alpha", (a, b)).grid.base
            oracle = semistandard_poset_oracle(algebra, (a, b))
            assert are_vertex_color_isomorphic(built, oracle), (algebra, a, b)

    def test_c2_11_oracle_shape(self):
        oracle = semistandard_poset_oracle(Algebra.C2, (1, 1))
        assert len(oracle) == 7
        assert are_vertex_color_isomorphic(oracle, goldens.C2_11.base)

    def test_a2_fundamental_oracle(self):
        oracle = semistandard_poset_oracle(Algebra.A2, (1, 0))
        assert are_vertex_color_isomorphic(
            oracle, fundamental_poset(Algebra.A2, "alpha_fund").base)

    def test_g2_second_fundamental_oracle(self):
        oracle = semistandard_poset_oracle(Algebra.G2, (0, 1))
        assert are_vertex_color_isomorphic(
            oracle, fundamental_poset(Algebra.G2, "beta_fund").base)
