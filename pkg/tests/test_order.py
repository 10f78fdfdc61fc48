import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ordfact.order import (
    Cone,
    ConeError,
    HomCompare,
    MonotoneMap,
    NotAPosetError,
    OrderError,
    PosetWitness,
    all_monotone_maps,
    bang,
    compose,
    equalizer,
    hom_compare,
    identity,
    is_poset,
    isomorphic,
    make_preorder,
    map_from_json,
    map_to_json,
    mediator,
    opposite,
    poset_to_dot,
    preorder_from_json,
    preorder_to_json,
    product,
    pullback,
    quotient,
    terminal,
    transitive_reduction,
)

from conftest import antichain, chain


class TestMakePreorder:
    def test_singleton(self):
        P = make_preorder(["a"])
        assert P.leq == ((True,),)

    def test_transitive_closure_inferred(self):
        P = make_preorder(["x", "y", "z"], [("x", "y"), ("y", "z")])
        assert P.le(0, 2)
        assert not P.le(2, 0)

    def test_indiscrete_two(self):
        P = make_preorder(["p", "q"], [("p", "q"), ("q", "p")])
        assert all(all(row) for row in P.leq)

    def test_duplicate_label_rejected(self):
        with pytest.raises(OrderError):
            make_preorder(["a", "a"])

    def test_unknown_label_rejected(self):
        with pytest.raises(OrderError):
            make_preorder(["a"], [("a", "b")])

    @given(
        st.integers(1, 5),
        st.lists(st.tuples(st.integers(0, 4), st.integers(0, 4)), max_size=12),
    )
    def test_closure_is_fixed_point(self, n, raw_pairs):
        labels = [str(i) for i in range(n)]
        pairs = [(str(a % n), str(b % n)) for a, b in raw_pairs]
        P = make_preorder(labels, pairs)
        # rebuilding from the closed relation changes nothing
        closed_pairs = [
            (labels[i], labels[j]) for i in range(n) for j in range(n) if P.leq[i][j]
        ]
        assert make_preorder(labels, closed_pairs) == P


class TestPosets:
    def test_chain_is_poset(self):
        assert is_poset(chain(3))

    def test_indiscrete_not_poset(self, indiscrete2):
        assert not is_poset(indiscrete2)
        with pytest.raises(NotAPosetError):
            PosetWitness(indiscrete2)

    def test_antichain_is_poset(self):
        assert is_poset(antichain(2))


class TestQuotient:
    def test_indiscrete_collapses(self, indiscrete2):
        pw, canon = quotient(indiscrete2)
        assert pw.preorder.n == 1
        assert pw.preorder.elements == ("{p,q}",)
        assert canon.map == (0, 0)

    def test_poset_unchanged_up_to_relabel(self):
        P = chain(3)
        pw, canon = quotient(P)
        assert pw.preorder.leq == P.leq
        assert sorted(canon.map) == [0, 1, 2]

    def test_two_cycles_make_two_chain(self):
        # a == b below c == d
        P = make_preorder(
            ["a", "b", "c", "d"],
            [("a", "b"), ("b", "a"), ("c", "d"), ("d", "c"), ("a", "c")],
        )
        pw, canon = quotient(P)
        assert pw.preorder.elements == ("{a,b}", "{c,d}")
        assert pw.preorder.leq == ((True, True), (False, True))
        assert canon.map == (0, 0, 1, 1)

    def test_canon_order_reflecting(self):
        P = make_preorder(
            ["a", "b", "c"], [("a", "b"), ("b", "a"), ("b", "c")]
        )
        pw, canon = quotient(P)
        for i in range(P.n):
            for j in range(P.n):
                assert P.leq[i][j] == pw.preorder.leq[canon.map[i]][canon.map[j]]


class TestHomCompare:
    def test_id_below_constant_top(self, chain2):
        f = identity(chain2)
        g = MonotoneMap(chain2, chain2, (1, 1))
        assert hom_compare(f, g) is HomCompare.BELOW
        assert hom_compare(g, f) is HomCompare.ABOVE

    def test_reflexive(self, chain3):
        f = MonotoneMap(chain3, chain3, (0, 0, 2))
        assert hom_compare(f, f) is HomCompare.EQUIVALENT

    def test_different_profile(self, chain2, chain3):
        assert (
            hom_compare(identity(chain2), identity(chain3))
            is HomCompare.DIFFERENT_PROFILE
        )

    def test_incomparable(self):
        A = antichain(2)
        f = MonotoneMap(A, A, (0, 1))
        g = MonotoneMap(A, A, (1, 0))
        assert hom_compare(f, g) is HomCompare.INCOMPARABLE

    def test_transitive_sampled(self):
        rng = random.Random(7)
        P = chain(3)
        maps = list(all_monotone_maps(P, P))
        for _ in range(200):
            f, g, h = rng.choice(maps), rng.choice(maps), rng.choice(maps)
            if hom_compare(f, g) in (
                HomCompare.BELOW,
                HomCompare.EQUIVALENT,
            ) and hom_compare(g, h) in (HomCompare.BELOW, HomCompare.EQUIVALENT):
                assert hom_compare(f, h) in (
                    HomCompare.BELOW,
                    HomCompare.EQUIVALENT,
                )


class TestCompose:
    def test_identity_laws(self, chain3):
        f = MonotoneMap(chain3, chain3, (0, 0, 2))
        assert compose(f, identity(chain3)) == f
        assert compose(identity(chain3), f) == f

    def test_collapse_then_include(self, chain3, chain2):
        collapse = MonotoneMap(chain3, chain2, (0, 0, 1))
        include = MonotoneMap(chain2, chain3, (0, 2))
        assert compose(collapse, include).map == (0, 0, 2)

    def test_non_composable(self, chain2, chain3):
        with pytest.raises(OrderError):
            compose(identity(chain2), identity(chain3))

    def test_composition_monotone_in_both_arguments(self):
        rng = random.Random(3)
        P = chain(2)
        Q = chain(3)
        fs = list(all_monotone_maps(P, Q))
        gs = list(all_monotone_maps(Q, Q))
        below = (HomCompare.BELOW, HomCompare.EQUIVALENT)
        for _ in range(300):
            f1, f2 = rng.choice(fs), rng.choice(fs)
            g1, g2 = rng.choice(gs), rng.choice(gs)
            if hom_compare(f1, f2) in below and hom_compare(g1, g2) in below:
                assert hom_compare(compose(f1, g1), compose(f2, g2)) in below


class TestLimits:
    def test_product_of_chains_is_square(self, chain2):
        lim = product(chain2, chain2)
        assert lim.apex.n == 4
        pw = PosetWitness(lim.apex)
        assert len(transitive_reduction(pw)) == 4

    def test_product_with_terminal(self, chain3):
        lim = product(chain3, terminal().preorder)
        assert isomorphic(lim.apex, chain3)

    def test_antichain_times_chain(self, chain2):
        lim = product(antichain(2), chain2)
        assert lim.apex.n == 4
        # two disjoint 2-chains: four cover pairs minus cross edges
        assert len(transitive_reduction(PosetWitness(lim.apex))) == 2

    def test_bang(self, chain3):
        assert bang(chain3).map == (0, 0, 0)
        empty = make_preorder([])
        assert bang(empty).map == ()

    def test_equalizer_whole_source(self, chain3):
        f = MonotoneMap(chain3, chain3, (0, 0, 2))
        lim = equalizer(f, f)
        assert lim.apex == chain3

    def test_equalizer_fixed_points(self, chain2):
        f = identity(chain2)
        g = MonotoneMap(chain2, chain2, (1, 1))
        lim = equalizer(f, g)
        assert lim.apex.elements == ("1",)

    def test_equalizer_of_closure(self, chain3):
        clo = MonotoneMap(chain3, chain3, (0, 2, 2))
        lim = equalizer(identity(chain3), clo)
        assert lim.apex.elements == ("0", "2")
        assert lim.apex.leq == ((True, True), (False, True))

    def test_pullback_of_identities_is_diagonal(self, chain3):
        lim = pullback(identity(chain3), identity(chain3))
        assert isomorphic(lim.apex, chain3)

    def test_pullback_over_terminal_is_product(self, chain2):
        lim = pullback(bang(chain2), bang(chain2))
        assert lim.apex.leq == product(chain2, chain2).apex.leq

    def test_pullback_of_disjoint_constants_empty(self, chain2, chain3):
        c0 = MonotoneMap(chain2, chain3, (0, 0))
        c2 = MonotoneMap(chain2, chain3, (2, 2))
        assert pullback(c0, c2).apex.n == 0


class TestMediator:
    def test_projections_give_identity(self, chain2):
        lim = product(chain2, chain2)
        cone = Cone(lim.apex, lim.projections)
        assert mediator(cone, lim) == identity(lim.apex)

    def test_pairing(self, chain2, chain3):
        lim = product(chain2, chain3)
        f = MonotoneMap(chain2, chain2, (0, 1))
        g = MonotoneMap(chain2, chain3, (0, 2))
        med = mediator(Cone(chain2, (f, g)), lim)
        assert compose(med, lim.projections[0]) == f
        assert compose(med, lim.projections[1]) == g

    def test_corestriction_into_equalizer(self, chain3):
        clo = MonotoneMap(chain3, chain3, (0, 2, 2))
        lim = equalizer(identity(chain3), clo)
        h = MonotoneMap(chain3, chain3, clo.map)  # lands in fixed points
        med = mediator(Cone(chain3, (h,)), lim)
        assert med.map == (0, 1, 1)

    def test_non_commuting_cone_rejected(self, chain2):
        f = identity(chain2)
        g = MonotoneMap(chain2, chain2, (1, 1))
        lim = equalizer(f, g)
        stray = MonotoneMap(chain2, chain2, (0, 1))  # misses the carrier
        with pytest.raises(ConeError):
            mediator(Cone(chain2, (stray,)), lim)


class TestOppositeAndReduction:
    def test_opposite_reverses(self, chain2):
        assert opposite(chain2).leq == ((True, False), (True, True))

    def test_opposite_involutive(self, chain3):
        assert opposite(opposite(chain3)) == chain3

    def test_opposite_antichain(self):
        A = antichain(3)
        assert opposite(A) == A

    def test_chain_covers(self):
        assert transitive_reduction(PosetWitness(chain(3))) == [(0, 1), (1, 2)]

    def test_antichain_covers(self):
        assert transitive_reduction(PosetWitness(antichain(2))) == []

    def test_boolean_square_covers(self, chain2):
        lim = product(chain2, chain2)
        covers = transitive_reduction(PosetWitness(lim.apex))
        assert covers == [(0, 1), (0, 2), (1, 3), (2, 3)]


class TestLaxMonoProjections:
    def test_projections_jointly_reflect_order(self):
        rng = random.Random(11)
        P, Q = chain(2), chain(3)
        lim = product(P, Q)
        maps = list(all_monotone_maps(P, lim.apex))
        below = (HomCompare.BELOW, HomCompare.EQUIVALENT)
        for _ in range(200):
            f, g = rng.choice(maps), rng.choice(maps)
            if all(
                hom_compare(compose(f, p), compose(g, p)) in below
                for p in lim.projections
            ):
                assert hom_compare(f, g) in below


class TestSerialization:
    def test_preorder_round_trip(self, chain3):
        assert preorder_from_json(preorder_to_json(chain3)) == chain3

    def test_map_round_trip(self, chain3, chain2):
        f = MonotoneMap(chain3, chain2, (0, 0, 1))
        assert map_from_json(map_to_json(f)) == f

    def test_dot_counts(self, chain3):
        dot = poset_to_dot(PosetWitness(chain3))
        assert dot.count("label=") == 3
        assert dot.count("->") == 2
