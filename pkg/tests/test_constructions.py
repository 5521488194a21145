import random

import pytest
from helpers import all_binary_erst, all_maps, random_hypergraph, random_reflexive_structure

from dualramsey.constructions import (
    boxtensor_hypergraph,
    build_named,
    dagger,
    decode_quasiorder,
    empty_reflexive_binary,
    empty_structure,
    encode_quasiorder,
    erst_to_hypergraph,
    glue_cone,
    graph_to_hypergraph,
    hypergraph_to_erst,
    preadjoint,
    quotient_language,
    sal_relation_order,
    star,
    tensor_erst,
    tensor_vertex,
    uniform_metric,
)
from dualramsey.orders import Chain, ChainMap, InputError, enum_rigid_surjections
from dualramsey.structures import (
    BINARY_EDGE,
    Morphism,
    Signature,
    Structure,
    check_morphism,
    enum_morphisms,
    validate,
)
from dualramsey.tuplecalc import all_total_quasiorders, sal_tuple_key


class TestBuilders:
    def test_empty_reflexive(self):
        assert empty_reflexive_binary(2).relation("edge") == {(1, 1), (2, 2)}
        assert empty_reflexive_binary(1).relation("edge") == {(1, 1)}

    def test_empty_structure(self):
        sig = Signature((("t", 3),))
        f3 = empty_structure(sig, 3)
        assert f3.relation("t") == frozenset()

    def test_uniform_metric(self):
        m = uniform_metric(3, 1.0)
        assert all(m.d(x, y) == 1.0 for x in range(1, 4) for y in range(1, 4) if x != y)
        assert uniform_metric(1, 5.0).spectrum == frozenset()
        assert uniform_metric(2, 0.5).spectrum == frozenset({0.5})

    def test_tensor(self):
        t = tensor_erst(2, 2)
        assert t.size == 4
        nondiag = {x for x in t.relation("edge") if len(set(x)) > 1}
        assert nondiag == {(1, 2), (3, 4)}
        assert validate(t, "erst") is None

    def test_boxtensor(self):
        h = boxtensor_hypergraph(3, 1)
        assert h.edges == frozenset(
            {frozenset({1}), frozenset({2}), frozenset({3}), frozenset({1, 2, 3})}
        )
        assert validate(boxtensor_hypergraph(2, 3), "hypergraph") is None

    def test_tensor_vertex_layout(self):
        assert [tensor_vertex(3, i, 2) for i in (1, 2, 3)] == [4, 5, 6]

    def test_named_tournaments(self):
        c3p = build_named("tournament-c3plus")
        nontrivial = {t for t in c3p.relation("edge") if t[0] != t[1]}
        assert nontrivial == {(1, 2), (2, 3), (3, 1), (1, 4), (2, 4), (3, 4)}
        big = build_named("thm7-B")
        assert validate(big, "tournament") is None
        assert build_named("thm7-A").relation("edge") == {(1, 1), (2, 2), (1, 2)}

    def test_unknown_name(self):
        with pytest.raises(InputError):
            build_named("nonesuch")


class TestPreadjoint:
    def test_sal_relation_order_example(self):
        A = Structure.make(BINARY_EDGE, 2, {"edge": {(1, 1), (2, 2), (1, 2)}})
        assert sal_relation_order(A) == [(1, 1), (2, 2), (1, 2)]

    def test_identity_enumeration_example(self):
        A = Structure.make(BINARY_EDGE, 2, {"edge": {(1, 1), (2, 2), (1, 2)}})
        phi = preadjoint(ChainMap(Chain(3), Chain(3), (1, 2, 3)), A)
        assert phi.map == (1, 1, 2, 2, 1, 2)
        assert check_morphism(phi, "strong-rigid-quotient") is None

    def test_rejects_non_rigid(self):
        A = Structure.make(BINARY_EDGE, 2, {"edge": {(1, 1), (2, 2), (1, 2)}})
        with pytest.raises(InputError):
            preadjoint(ChainMap(Chain(3), Chain(3), (2, 1, 3)), A)

    def test_rejects_wrong_codomain(self):
        A = Structure.make(BINARY_EDGE, 2, {"edge": {(1, 1), (2, 2), (1, 2)}})
        with pytest.raises(InputError):
            preadjoint(ChainMap(Chain(3), Chain(2), (1, 2, 2)), A)

    def test_least_preimage_formulas(self):
        # least preimage of each relation tuple: the full run of the least
        # level hitting it, or that level's first vertex repeated
        A = Structure.make(
            BINARY_EDGE, 3, {"edge": {(1, 1), (2, 2), (3, 3), (1, 2), (2, 3)}}
        )
        rel = sal_relation_order(A)
        q = len(rel)
        for u in enum_rigid_surjections(q + 1, q):
            phi = preadjoint(u, A)
            r = 2
            carrier_rel = sorted(phi.dom.relation("edge"), key=sal_tuple_key)
            for k, e in enumerate(rel, start=1):
                t = min(s for s in range(1, u.dom.size + 1) if u(s) == k)
                pre = [x for x in carrier_rel if phi.tuple_image(x) == e]
                least = min(pre, key=sal_tuple_key)
                first = tensor_vertex(r, 1, t)
                if len(set(e)) == 1:
                    assert least == (first,) * r
                else:
                    assert least == tuple(tensor_vertex(r, i, t) for i in (1, 2))

    def test_naturality_square(self):
        A = Structure.make(BINARY_EDGE, 3, {"edge": {(1, 1), (2, 2), (3, 3), (1, 2), (1, 3)}})
        rel_a = sal_relation_order(A)
        for B in all_binary_erst(2):
            for f in enum_morphisms(A, B, "strong-rigid-quotient"):
                rel_b = sal_relation_order(B)
                pos_b = {e: i + 1 for i, e in enumerate(rel_b)}
                fhat = tuple(pos_b[f.tuple_image(e)] for e in rel_a)
                for u in enum_rigid_surjections(len(rel_a) + 1, len(rel_a)):
                    lhs = f.after(preadjoint(u, A))
                    composed = ChainMap(
                        u.dom, Chain(len(rel_b)), tuple(fhat[v - 1] for v in u.map)
                    )
                    rhs = preadjoint(composed, B)
                    assert lhs.map == rhs.map


class TestHypergraphErstFunctors:
    def test_tensor_pair(self):
        for r, n in ((2, 1), (2, 3), (3, 2)):
            assert hypergraph_to_erst(boxtensor_hypergraph(r, n)) == tensor_erst(r, n)
            assert erst_to_hypergraph(tensor_erst(r, n)) == boxtensor_hypergraph(r, n)

    def test_cycle_roundtrip(self):
        c4 = graph_to_hypergraph(build_named("cycle4"))
        assert erst_to_hypergraph(hypergraph_to_erst(c4)) == c4

    def test_orients_increasingly(self):
        oriented = hypergraph_to_erst(build_named("cycle3"))
        nondiag = {t for t in oriented.relation("edge") if len(set(t)) > 1}
        assert nondiag == {(1, 2), (2, 3), (1, 3)}

    def test_random_roundtrips(self):
        rng = random.Random(7)
        for _ in range(60):
            h = random_hypergraph(rng)
            assert erst_to_hypergraph(hypergraph_to_erst(h)) == h

    def test_verdict_preservation_all_maps(self):
        rng = random.Random(11)
        pairs = 0
        while pairs < 8:
            h1, h2 = random_hypergraph(rng, 4), random_hypergraph(rng, 3)
            if h1.uniformity != h2.uniformity:
                continue
            pairs += 1
            s1, s2 = hypergraph_to_erst(h1), hypergraph_to_erst(h2)
            for m in all_maps(h1.size, h2.size):
                hv = check_morphism(Morphism(h1, h2, m), "hypergraph-strong-rigid-quotient")
                sv = check_morphism(Morphism(s1, s2, m), "strong-rigid-quotient")
                assert (hv is None) == (sv is None), (h1, h2, m, hv, sv)

    def test_invalid_source_rejected(self):
        with pytest.raises(InputError):
            erst_to_hypergraph(build_named("tournament-c3"))


class TestDaggerStar:
    def test_quotient_language_arities(self):
        lang = quotient_language(BINARY_EDGE)
        assert sorted(a for _, a in lang.symbols) == [1, 2, 2]
        for name, _ in lang.symbols:
            base, enc = name.split("/", 1)
            assert base == "edge"
            decode_quasiorder(enc)

    def test_encoding_roundtrip(self):
        for r in range(1, 5):
            for sigma in all_total_quasiorders(r):
                assert decode_quasiorder(encode_quasiorder(sigma)) == sigma

    def test_reversed_pair_example(self):
        a = Structure.make(BINARY_EDGE, 2, {"edge": {(1, 1), (2, 2), (2, 1)}})
        d = dagger(a)
        assert d.relation("edge/2|1") == {(1, 1), (2, 2), (1, 2)}
        assert d.relation("edge/1|2") == {(1, 1), (2, 2)}
        assert star(d) == a

    def test_diagonal_only_dagger(self):
        e3 = empty_reflexive_binary(3)
        d = dagger(e3)
        for name, arity in d.sig.symbols:
            diag = {(v,) * arity for v in range(1, 4)}
            assert d.relation(name) == diag

    def test_dagger_output_is_erst(self):
        rng = random.Random(23)
        for _ in range(20):
            a = random_reflexive_structure(rng)
            assert validate(dagger(a), "erst") is None, a

    def test_random_roundtrips(self):
        rng = random.Random(31)
        for _ in range(60):
            a = random_reflexive_structure(rng)
            d = dagger(a)
            assert star(d) == a
            assert dagger(star(d)) == d

    def test_verdict_preservation(self):
        rng = random.Random(41)
        pairs = 0
        while pairs < 6:
            a = random_reflexive_structure(rng, 3)
            b = random_reflexive_structure(rng, 2)
            pairs += 1
            da, db = dagger(a), dagger(b)
            for m in all_maps(a.size, b.size):
                sv = check_morphism(
                    Morphism(a, b, m), "strong-rigid-quotient-of-structures"
                )
                dv = check_morphism(Morphism(da, db, m), "strong-rigid-quotient")
                assert (sv is None) == (dv is None), (a, b, m, sv, dv)

    def test_star_requires_complete_family(self):
        partial = Structure.make(
            Signature((("edge/1.2", 1),)), 2, {"edge/1.2": {(1,), (2,)}}
        )
        with pytest.raises(InputError):
            star(partial)


class TestGlueCone:
    def _component(self, n, pairs, symbol):
        rel = {(a, a) for a in range(1, n + 1)} | set(pairs)
        return Structure.make(Signature((symbol,)), n, {symbol[0]: rel})

    def test_single_symbol_degenerate(self):
        b = Structure.make(BINARY_EDGE, 2, {"edge": {(1, 1), (2, 2), (1, 2)}})
        c = self._component(2, [(1, 2)], ("edge", 2))
        d, phis = glue_cone([(c, [(1, 2)])], b)
        assert d == c
        assert phis[0].map == (1, 2)

    def test_two_binary_symbols(self):
        sig = Signature((("r1", 2), ("r2", 2)))
        b = Structure.make(
            sig, 2, {"r1": {(1, 1), (2, 2), (1, 2)}, "r2": {(1, 1), (2, 2), (1, 2)}}
        )
        c1 = self._component(2, [(1, 2)], ("r1", 2))
        c2 = self._component(3, [(1, 2), (1, 3)], ("r2", 2))
        d, phis = glue_cone([(c1, [(1, 2)]), (c2, [(1, 2, 2)])], b)
        assert d.size == 5
        assert {t for t in d.relation("r1") if len(set(t)) > 1} == {(1, 2)}
        assert {t for t in d.relation("r2") if len(set(t)) > 1} == {(3, 4), (3, 5)}
        assert validate(d, "erst") is None
        for phi in phis:
            assert check_morphism(phi, "strong-rigid-quotient") is None

    def test_diagonal_only_components(self):
        sig = Signature((("r1", 2), ("r2", 2)))
        b = Structure.make(sig, 1, {"r1": {(1, 1)}, "r2": {(1, 1)}})
        c1 = self._component(2, [], ("r1", 2))
        c2 = self._component(2, [], ("r2", 2))
        d, phis = glue_cone([(c1, [(1, 1)]), (c2, [(1, 1)])], b)
        assert d.size == 4
        for phi in phis:
            assert check_morphism(phi, "strong-rigid-quotient") is None

    def test_compatibility_transfer(self):
        # if two cone maps agree after composing with maps out of the target,
        # the glued maps agree the same way
        sig = Signature((("r1", 2), ("r2", 2)))
        b = Structure.make(
            sig, 2, {"r1": {(1, 1), (2, 2), (1, 2)}, "r2": {(1, 1), (2, 2)}}
        )
        c1 = self._component(3, [(1, 2), (1, 3)], ("r1", 2))
        c2 = self._component(2, [], ("r2", 2))
        q1 = [(1, 2, 2), (1, 2, 2)]
        q2 = [(1, 2), (1, 2)]
        d, phis = glue_cone([(c1, q1), (c2, q2)], b)
        for u in enum_morphisms(b, b, "strong-rigid-quotient"):
            for i in range(2):
                for j in range(2):
                    agree_on_cone = all(
                        u.map[q1[i][x] - 1] == u.map[q1[j][x] - 1] for x in range(3)
                    ) and all(
                        u.map[q2[i][x] - 1] == u.map[q2[j][x] - 1] for x in range(2)
                    )
                    if agree_on_cone:
                        assert u.after(phis[i]).map == u.after(phis[j]).map

    def test_shape_mismatch_rejected(self):
        b = Structure.make(BINARY_EDGE, 2, {"edge": {(1, 1), (2, 2), (1, 2)}})
        c = self._component(2, [(1, 2)], ("edge", 2))
        with pytest.raises(InputError):
            glue_cone([(c, [(1, 2), (1, 2)]), (c, [(1, 2)])], b)
        with pytest.raises(InputError):
            glue_cone([], b)

    def test_non_quotient_component_rejected(self):
        b = Structure.make(BINARY_EDGE, 2, {"edge": {(1, 1), (2, 2), (1, 2)}})
        c = self._component(2, [], ("edge", 2))
        with pytest.raises(InputError):
            glue_cone([(c, [(1, 2)])], b)  # misses the (1,2) tuple
