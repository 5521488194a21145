"""Named objects, product-style carriers, the pre-adjunction witness map,
the hypergraph/structure functor pair, the quotient-language functor pair,
and the multi-symbol gluing construction.
"""

from __future__ import annotations

from collections.abc import Sequence

from .orders import Chain, ChainMap, InputError, is_rigid_surjection
from .structures import (
    BINARY_EDGE,
    Hypergraph,
    MetricSpace,
    Morphism,
    Signature,
    Structure,
    check_morphism,
    reduct,
    validate,
)
from .tuplecalc import (
    TotalQuasiorder,
    all_total_quasiorders,
    mat,
    sal_sorted_tuples,
    tp,
    tup,
)

__all__ = [
    "empty_reflexive_binary",
    "empty_structure",
    "uniform_metric",
    "tensor_erst",
    "boxtensor_hypergraph",
    "tensor_vertex",
    "build_named",
    "NAMED_OBJECTS",
    "preadjoint",
    "sal_relation_order",
    "hypergraph_to_erst",
    "erst_to_hypergraph",
    "graph_to_hypergraph",
    "quotient_language",
    "encode_quasiorder",
    "decode_quasiorder",
    "dagger",
    "star",
    "glue_cone",
]


def _diagonal(n: int, r: int) -> set[tuple[int, ...]]:
    return {(a,) * r for a in range(1, n + 1)}


def empty_reflexive_binary(n: int) -> Structure:
    """The diagonal-only reflexive binary structure on n vertices."""
    if n < 1:
        raise InputError("size must be positive")
    return Structure.make(BINARY_EDGE, n, {"edge": _diagonal(n, 2)})


def empty_structure(sig: Signature, n: int) -> Structure:
    """The structure on n vertices with every relation empty."""
    if n < 1:
        raise InputError("size must be positive")
    return Structure.make(sig, n, {})


def uniform_metric(n: int, delta: float) -> MetricSpace:
    """The metric space on 1..n in which every pair of distinct points is at
    distance delta."""
    if n < 1:
        raise InputError("size must be positive")
    if not delta > 0:
        raise InputError("delta must be positive")
    rows = tuple(
        tuple(0.0 if x == y else float(delta) for y in range(1, n + 1))
        for x in range(1, n + 1)
    )
    return MetricSpace(n, rows)


def tensor_vertex(r: int, i: int, level: int) -> int:
    """Canonical position of row i at the given level: levels are laid out
    consecutively, rows ascending inside a level."""
    return (level - 1) * r + i


def tensor_erst(r: int, levels: int) -> Structure:
    """The structure on r*levels vertices whose only non-diagonal tuples are the
    increasing runs of the levels; the canonical order is level-major."""
    if r < 2:
        raise InputError("arity must be at least 2")
    if levels < 1:
        raise InputError("level count must be positive")
    n = r * levels
    rel = _diagonal(n, r) | {
        tuple(tensor_vertex(r, i, lv) for i in range(1, r + 1))
        for lv in range(1, levels + 1)
    }
    return Structure.make(Signature((("edge", r),)), n, {"edge": rel})


def boxtensor_hypergraph(r: int, levels: int) -> Hypergraph:
    """The hypergraph companion of tensor_erst: all singletons plus one r-edge
    per level."""
    if r < 2:
        raise InputError("uniformity must be at least 2")
    if levels < 1:
        raise InputError("level count must be positive")
    n = r * levels
    edges = {frozenset({v}) for v in range(1, n + 1)} | {
        frozenset(tensor_vertex(r, i, lv) for i in range(1, r + 1))
        for lv in range(1, levels + 1)
    }
    return Hypergraph(n, r, frozenset(edges))


def _symmetric_graph(n: int, edges: Sequence[tuple[int, int]]) -> Structure:
    rel = _diagonal(n, 2)
    for x, y in edges:
        rel |= {(x, y), (y, x)}
    return Structure.make(BINARY_EDGE, n, {"edge": rel})


def _tournament(n: int, arcs: Sequence[tuple[int, int]]) -> Structure:
    rel = _diagonal(n, 2) | set(arcs)
    s = Structure.make(BINARY_EDGE, n, {"edge": rel})
    bad = validate(s, "tournament")
    if bad is not None:
        raise InputError(f"not a tournament: {bad}")
    return s


_C3_ARCS = ((1, 2), (2, 3), (3, 1))
_C3PLUS_ARCS = _C3_ARCS + ((1, 4), (2, 4), (3, 4))
# 7-vertex tournament pinned for the no-arrow argument: 1..3 carry the 3-cycle,
# vertex 4 is beaten by all of them, everything points rightward into 5..7,
# and 5..7 is transitive.
_BIG_ARCS = (
    _C3PLUS_ARCS
    + tuple((i, j) for i in range(1, 5) for j in range(5, 8))
    + ((5, 6), (6, 7), (5, 7))
)

NAMED_OBJECTS: dict[str, object] = {}


def _register(name: str, builder) -> None:
    NAMED_OBJECTS[name] = builder


_register("cycle3", lambda: _symmetric_graph(3, ((1, 2), (2, 3), (1, 3))))
_register("cycle4", lambda: _symmetric_graph(4, ((1, 2), (2, 3), (3, 4), (1, 4))))
_register("tournament-c3", lambda: _tournament(3, _C3_ARCS))
_register("tournament-c3plus", lambda: _tournament(4, _C3PLUS_ARCS))
_register("thm7-A", lambda: _tournament(2, ((1, 2),)))
_register("thm7-B", lambda: _tournament(7, _BIG_ARCS))


def build_named(name: str) -> Structure:
    """A named fixture object; see NAMED_OBJECTS for the accepted names."""
    try:
        builder = NAMED_OBJECTS[name]
    except KeyError:
        raise InputError(
            f"unknown object name {name!r}; known: {sorted(NAMED_OBJECTS)}"
        ) from None
    return builder()


# ---------------------------------------------------------------------------
# pre-adjunction witness
# ---------------------------------------------------------------------------


def sal_relation_order(A: Structure) -> list[tuple[int, ...]]:
    """The single relation of A listed in sal order."""
    if len(A.sig.symbols) != 1:
        raise InputError("expected a structure with a single relation symbol")
    return sal_sorted_tuples(A.relations[0])


def preadjoint(u: ChainMap | Sequence[int], A: Structure) -> Morphism:
    """Expand a rigid surjection onto the sal-ordered relation of A into a
    morphism from the level carrier.

    Level s of the carrier is sent coordinatewise onto the relation tuple
    u(s) picks out; the result is always a strong rigid quotient map, and the
    least preimage of the k-th relation tuple is the full run (or the first
    vertex, for a diagonal tuple) of the least level mapped to it.
    """
    bad = validate(A, "erst")
    if bad is not None:
        raise InputError(f"target is not a structure with a linear extension: {bad}")
    rel = sal_relation_order(A)
    q = len(rel)
    r = A.sig.symbols[0][1]
    if not isinstance(u, ChainMap):
        u = ChainMap(Chain(len(tuple(u))), Chain(q), tuple(u))
    if u.cod.size != q:
        raise InputError(f"u must map onto the {q} relation tuples, got {u.cod.size}")
    if not is_rigid_surjection(u):
        raise InputError("u is not a rigid surjection onto the relation order")
    levels = u.dom.size
    carrier = tensor_erst(r, levels)
    image = [0] * (r * levels)
    for s in range(1, levels + 1):
        e = rel[u(s) - 1]
        for i in range(1, r + 1):
            image[tensor_vertex(r, i, s) - 1] = e[i - 1]
    return Morphism(carrier, A, tuple(image))


# ---------------------------------------------------------------------------
# hypergraphs versus single-relation structures with linear extensions
# ---------------------------------------------------------------------------


def graph_to_hypergraph(s: Structure) -> Hypergraph:
    """Read a reflexive symmetric binary structure as a 2-uniform hypergraph."""
    bad = validate(s, "graph")
    if bad is not None:
        raise InputError(f"not a reflexive graph: {bad}")
    edges = {frozenset({v}) for v in range(1, s.size + 1)} | {
        frozenset(t) for t in s.relations[0] if len(set(t)) == 2
    }
    return Hypergraph(s.size, 2, frozenset(edges))


def hypergraph_to_erst(h: Hypergraph | Structure) -> Structure:
    """Orient every non-singleton edge along the chain order.

    Accepts a hypergraph, or a reflexive symmetric graph which is first read as
    a 2-uniform hypergraph.  Morphism verdicts are preserved: a map passes the
    hypergraph quotient check exactly when it passes the structure one.
    """
    if isinstance(h, Structure):
        h = graph_to_hypergraph(h)
    bad = validate(h, "hypergraph")
    if bad is not None:
        raise InputError(f"invalid hypergraph: {bad}")
    r = h.uniformity
    rel = _diagonal(h.size, r) | {
        tuple(sorted(e)) for e in h.edges if len(e) == r
    }
    return Structure.make(Signature((("edge", r),)), h.size, {"edge": rel})


def erst_to_hypergraph(s: Structure) -> Hypergraph:
    """Forget the orientation of the relation tuples."""
    bad = validate(s, "erst")
    if bad is not None:
        raise InputError(f"invalid source: {bad}")
    if len(s.sig.symbols) != 1:
        raise InputError("expected a structure with a single relation symbol")
    r = s.sig.symbols[0][1]
    if r < 2:
        raise InputError("uniformity must be at least 2")
    edges = {frozenset({v}) for v in range(1, s.size + 1)} | {
        frozenset(t) for t in s.relations[0] if len(set(t)) == r
    }
    return Hypergraph(s.size, r, frozenset(edges))


# ---------------------------------------------------------------------------
# the quotient-language functor pair
# ---------------------------------------------------------------------------


def encode_quasiorder(sigma: TotalQuasiorder) -> str:
    """Stable text form of an ordered partition: classes in class order joined
    by '|', elements inside a class ascending joined by '.'."""
    return "|".join(".".join(str(v) for v in sorted(c)) for c in sigma.classes)


def decode_quasiorder(text: str) -> TotalQuasiorder:
    try:
        classes = tuple(
            frozenset(int(v) for v in part.split(".")) for part in text.split("|")
        )
    except ValueError:
        raise InputError(f"malformed quasiorder encoding {text!r}") from None
    arity = sum(len(c) for c in classes)
    return TotalQuasiorder(arity, classes)


def quotient_language(sig: Signature) -> Signature:
    """One symbol per (symbol, total quasiorder on its positions) pair; the
    derived symbol's arity is the number of classes."""
    symbols: list[tuple[str, int]] = []
    for name, arity in sig.symbols:
        if "/" in name:
            raise InputError(f"symbol name {name!r} may not contain '/'")
        for sigma in all_total_quasiorders(arity):
            symbols.append((f"{name}/{encode_quasiorder(sigma)}", len(sigma.classes)))
    return Signature(tuple(symbols))


def dagger(s: Structure) -> Structure:
    """Split every relation by tuple type: the derived symbol for (theta, sigma)
    holds the diagonal plus the value tuples of the type-sigma members of theta."""
    bad = validate(s, "reflexive")
    if bad is not None:
        raise InputError(f"source must be reflexive: {bad}")
    out_sig = quotient_language(s.sig)
    relations: dict[str, set[tuple[int, ...]]] = {}
    for name, arity in s.sig.symbols:
        by_type: dict[TotalQuasiorder, set[tuple[int, ...]]] = {}
        for t in s.relation(name):
            by_type.setdefault(tp(t), set()).add(mat(t))
        for sigma in all_total_quasiorders(arity):
            rel = _diagonal(s.size, len(sigma.classes))
            rel |= by_type.get(sigma, set())
            relations[f"{name}/{encode_quasiorder(sigma)}"] = rel
    return Structure.make(out_sig, s.size, relations)


def _split_derived_name(name: str) -> tuple[str, TotalQuasiorder]:
    if "/" not in name:
        raise InputError(f"symbol {name!r} is not of the derived name/quasiorder form")
    base, enc = name.split("/", 1)
    return base, decode_quasiorder(enc)


def star(s: Structure) -> Structure:
    """Reassemble a structure over the base language from its type-split form."""
    bases: dict[str, int] = {}
    seen: dict[str, set[str]] = {}
    for name, arity in s.sig.symbols:
        base, sigma = _split_derived_name(name)
        if len(sigma.classes) != arity:
            raise InputError(f"symbol {name!r} arity {arity} does not match its encoding")
        bases.setdefault(base, sigma.arity)
        if bases[base] != sigma.arity:
            raise InputError(f"inconsistent base arity for {base!r}")
        seen.setdefault(base, set()).add(encode_quasiorder(sigma))
    for base, arity in bases.items():
        expected = {encode_quasiorder(q) for q in all_total_quasiorders(arity)}
        if seen[base] != expected:
            raise InputError(f"incomplete quasiorder family for base symbol {base!r}")
    bad = validate(s, "erst")
    if bad is not None:
        raise InputError(f"source must carry a linear extension: {bad}")
    out_sig = Signature(tuple((base, arity) for base, arity in bases.items()))
    relations: dict[str, set[tuple[int, ...]]] = {base: set() for base in bases}
    for name, _ in s.sig.symbols:
        base, sigma = _split_derived_name(name)
        for values in s.relation(name):
            relations[base].add(tup(sigma, values, strict=False))
    return Structure.make(out_sig, s.size, relations)


# ---------------------------------------------------------------------------
# gluing of per-symbol cones
# ---------------------------------------------------------------------------


def glue_cone(
    components: Sequence[tuple[Structure, Sequence[Sequence[int]]]],
    B: Structure,
) -> tuple[Structure, list[Morphism]]:
    """Combine per-symbol cone components into one structure mapping onto B.

    components[s] is a pair (C_s, maps) where C_s is a structure with the s-th
    symbol of B and every map in maps is a strong rigid quotient from C_s onto
    the matching single-symbol restriction of B.  The result places the carriers
    side by side (labels offset block by block, the order concatenated), takes
    the diagonal plus the s-th block's tuples for the s-th relation, and glues
    the i-th maps of all blocks into one morphism onto B.
    """
    if not components:
        raise InputError("at least one component is required")
    if len(components) != len(B.sig.symbols):
        raise InputError(
            f"{len(B.sig.symbols)} components required, got {len(components)}"
        )
    bad = validate(B, "erst")
    if bad is not None:
        raise InputError(f"target must carry a linear extension: {bad}")
    counts = {len(maps) for _, maps in components}
    if len(counts) != 1:
        raise InputError(f"component map counts differ: {sorted(counts)}")
    k = counts.pop()
    if k < 1:
        raise InputError("each component needs at least one map")

    offsets: list[int] = []
    total = 0
    for s, (c, maps) in enumerate(components):
        symbol = B.sig.symbols[s]
        if c.sig.symbols != (symbol,):
            raise InputError(
                f"component {s} must carry exactly the symbol {symbol}, got {c.sig.symbols}"
            )
        bad = validate(c, "erst")
        if bad is not None:
            raise InputError(f"component {s} lacks a linear extension: {bad}")
        target = reduct(B, symbol[0])
        for i, m in enumerate(maps):
            f = Morphism(c, target, tuple(m))
            fail = check_morphism(f, "strong-rigid-quotient")
            if fail is not None:
                raise InputError(
                    f"component {s} map {i} is not a strong rigid quotient: {fail}"
                )
        offsets.append(total)
        total += c.size

    relations: dict[str, set[tuple[int, ...]]] = {}
    for s, (c, _) in enumerate(components):
        name, arity = B.sig.symbols[s]
        rel = _diagonal(total, arity)
        off = offsets[s]
        for t in c.relations[0]:
            if len(set(t)) > 1:
                rel.add(tuple(v + off for v in t))
        relations[name] = rel
    glued = Structure.make(B.sig, total, relations)

    morphisms = []
    for i in range(k):
        image: list[int] = []
        for c, maps in components:
            image.extend(maps[i])
        morphisms.append(Morphism(glued, B, tuple(image)))
    return glued, morphisms
