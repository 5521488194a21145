import random

import pytest
from helpers import all_binary_erst, brute_force_coloring, exhaustive_two_colorable

from dualramsey.arrows import (
    ArrowProblem,
    check_arrow,
    composite_edges,
    is_k_colorable,
    object_generator,
    search_ramsey_object,
    verify_verdict,
)
from dualramsey.constructions import (
    build_named,
    empty_reflexive_binary,
    tensor_erst,
    uniform_metric,
)
from dualramsey.orders import Chain, InputError

FANO = [
    (0, 1, 2),
    (0, 3, 4),
    (0, 5, 6),
    (1, 3, 5),
    (1, 4, 6),
    (2, 3, 6),
    (2, 4, 5),
]


class TestColorability:
    def test_single_edge_two_colors(self):
        col = is_k_colorable(3, [(0, 1, 2)], 2)
        assert col is not None and len(set(col)) >= 2

    def test_singleton_edge_never_colorable(self):
        assert is_k_colorable(2, [(0,)], 5) is None

    def test_one_color_with_edges(self):
        assert is_k_colorable(3, [(0, 1)], 1) is None

    def test_no_edges(self):
        assert is_k_colorable(4, [], 1) == [1, 1, 1, 1]

    def test_fano_plane(self):
        assert is_k_colorable(7, FANO, 2) is None
        col = is_k_colorable(7, FANO, 3)
        assert col is not None
        assert all(len({col[v] for v in e}) >= 2 for e in FANO)

    def test_duplicate_edges_collapse(self):
        once = is_k_colorable(3, [(0, 1)], 2)
        twice = is_k_colorable(3, [(0, 1), (1, 0)], 2)
        assert once == twice

    def test_deterministic_and_seed_invariant_verdict(self):
        rng = random.Random(5)
        for _ in range(60):
            n = rng.randint(2, 8)
            edges = [
                tuple(sorted(rng.sample(range(n), rng.randint(2, min(3, n)))))
                for _ in range(rng.randint(1, 8))
            ]
            k = rng.randint(1, 3)
            base = is_k_colorable(n, edges, k)
            again = is_k_colorable(n, edges, k)
            assert base == again
            for seed in (1, 2, 3):
                shuffled = is_k_colorable(n, edges, k, seed=seed)
                assert (shuffled is None) == (base is None)
                if shuffled is not None:
                    assert all(len({shuffled[v] for v in e}) >= 2 for e in edges)

    def test_agrees_with_brute_force(self):
        rng = random.Random(99)
        for _ in range(150):
            n = rng.randint(1, 8)
            k = rng.randint(1, 3)
            edges = [
                tuple(sorted(rng.sample(range(n), rng.randint(1, min(4, n)))))
                for _ in range(rng.randint(0, 10))
            ]
            assert (is_k_colorable(n, edges, k) is None) == (
                brute_force_coloring(n, edges, k) is None
            )


class TestCheckArrow:
    def test_one_color_holds(self):
        p = ArrowProblem(Chain(4), Chain(3), Chain(2), 1, "rigid-surjection")
        assert check_arrow(p).holds

    def test_single_morphism_vertex_set_holds(self):
        # only one morphism to color: every composite set is monochromatic
        p = ArrowProblem(Chain(2), Chain(2), Chain(2), 3, "rigid-surjection")
        assert check_arrow(p).holds

    def test_ill_posed_raises(self):
        with pytest.raises(InputError):
            check_arrow(ArrowProblem(Chain(4), Chain(2), Chain(3), 2, "rigid-surjection"))

    def test_degenerate_when_no_factorization(self):
        p = ArrowProblem(Chain(2), Chain(3), Chain(2), 2, "rigid-surjection")
        v = check_arrow(p)
        assert not v.holds and v.degenerate
        assert verify_verdict(p, v)

    def test_chain_instance_with_oracle_ladder(self):
        for n, expected in ((3, False), (4, False), (5, False), (6, True)):
            p = ArrowProblem(Chain(n), Chain(3), Chain(2), 2, "rigid-surjection")
            v = check_arrow(p)
            assert v.holds == expected, n
            assert verify_verdict(p, v)
            hom_ca, _, _, edges = composite_edges(p)
            assert exhaustive_two_colorable(len(hom_ca), edges) == (not expected)

    def test_tournament_counterexample_instance(self):
        big = build_named("thm7-B")
        small = build_named("thm7-A")
        p = ArrowProblem(big, big, small, 2, "rigid-surjective-homomorphism")
        v = check_arrow(p)
        assert not v.holds
        assert verify_verdict(p, v)

    def test_erst_and_hypergraph_instances_match_oracle(self):
        kinds = []
        for a in all_binary_erst(2):
            for b in all_binary_erst(3):
                for c in all_binary_erst(4):
                    kinds.append((c, b, a, "strong-rigid-quotient"))
        rng = random.Random(17)
        for c, b, a, kind in rng.sample(kinds, 30):
            try:
                p = ArrowProblem(c, b, a, 2, kind)
                v = check_arrow(p)
            except InputError:
                continue
            hom_ca, hom_cb, _, edges = composite_edges(p)
            if len(hom_ca) > 16:
                continue
            want = (
                brute_force_coloring(len(hom_ca), edges, 2) is None
                if hom_cb
                else False
            )
            assert v.holds == want
            assert verify_verdict(p, v)

    def test_monotone_in_colors(self):
        # holding for k implies holding for every smaller k
        p2 = ArrowProblem(Chain(6), Chain(3), Chain(2), 2, "rigid-surjection")
        p1 = ArrowProblem(Chain(6), Chain(3), Chain(2), 1, "rigid-surjection")
        assert check_arrow(p2).holds and check_arrow(p1).holds
        b = tensor_erst(2, 2)
        held = [
            k
            for k in (4, 3, 2, 1)
            if check_arrow(ArrowProblem(b, b, b, k, "strong-rigid-quotient")).holds
        ]
        assert held == sorted(held, reverse=True)
        assert 4 in held  # singleton hom-set holds for every color count

    def test_transfer_to_targets_of_onto_maps(self):
        # an arrow that holds transfers along any onto map out of the object
        assert check_arrow(
            ArrowProblem(Chain(6), Chain(3), Chain(2), 2, "rigid-surjection")
        ).holds
        for bigger in (7, 8):
            assert check_arrow(
                ArrowProblem(Chain(bigger), Chain(3), Chain(2), 2, "rigid-surjection")
            ).holds


class TestSearch:
    def test_returns_middle_when_hom_is_singleton(self):
        b = tensor_erst(2, 2)
        res = search_ramsey_object(
            b, b, 5, "strong-rigid-quotient", iter([b]), 1
        )
        assert res.found == b and res.index == 0

    def test_chain_search_hits_pinned_size(self):
        res = search_ramsey_object(
            Chain(3), Chain(2), 2, "rigid-surjection", object_generator("chains"), 10
        )
        assert res.found == Chain(6)

    def test_empty_reflexive_family_matches_chains(self):
        res = search_ramsey_object(
            empty_reflexive_binary(3),
            empty_reflexive_binary(2),
            2,
            "rigid-surjective-homomorphism",
            object_generator("empty-reflexive"),
            10,
        )
        assert res.found.size == 6

    def test_metric_family_matches_chains(self):
        res = search_ramsey_object(
            uniform_metric(3, 2.5),
            uniform_metric(2, 2.5),
            2,
            "nonexpansive-rigid-surjection",
            object_generator("uniform-metric", delta=2.5),
            10,
        )
        assert res.found.size == 6

    def test_exhaustion(self):
        res = search_ramsey_object(
            Chain(3), Chain(2), 2, "rigid-surjection", object_generator("chains"), 3
        )
        assert res.found is None and res.index == 3
