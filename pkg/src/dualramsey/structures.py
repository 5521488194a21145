"""Finite relational structures over the canonical chain, class validators,
morphism predicates with failure witnesses, and pruned morphism enumeration.

Objects carry their linear order implicitly: the universe is always 1..n with
the natural order.  Relations are stored as explicit tuple sets, including the
diagonal; reflexivity is data, not convention.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass

from .orders import Chain, InputError
from .tuplecalc import sal_sorted_edges, sal_sorted_tuples

__all__ = [
    "BINARY_EDGE",
    "Signature",
    "Structure",
    "Hypergraph",
    "MetricSpace",
    "Morphism",
    "Violation",
    "Failure",
    "CLASS_TAGS",
    "MORPHISM_KINDS",
    "universe_size",
    "identity",
    "validate",
    "is_reflexive",
    "induced_tuple_map",
    "induced_edge_map",
    "check_morphism",
    "passes",
    "enum_morphisms",
    "automorphisms",
    "reduct",
    "induced_substructure",
]


@dataclass(frozen=True)
class Signature:
    """A finite list of relational symbols with arities, in a fixed order."""

    symbols: tuple[tuple[str, int], ...]

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "symbols", tuple((str(n), int(a)) for n, a in self.symbols)
        )
        names = [n for n, _ in self.symbols]
        if len(set(names)) != len(names):
            raise InputError("symbol names must be unique")
        for n, a in self.symbols:
            if a < 1:
                raise InputError(f"symbol {n!r} has arity {a}, must be >= 1")

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(n for n, _ in self.symbols)

    def arity(self, name: str) -> int:
        for n, a in self.symbols:
            if n == name:
                return a
        raise InputError(f"unknown symbol {name!r}")

    def index(self, name: str) -> int:
        for i, (n, _) in enumerate(self.symbols):
            if n == name:
                return i
        raise InputError(f"unknown symbol {name!r}")


BINARY_EDGE = Signature((("edge", 2),))


@dataclass(frozen=True)
class Structure:
    """A finite relational structure on the universe 1..size.

    Relations are aligned with the signature's symbol order so that structures
    are hashable values; use Structure.make to build one from a name mapping.
    """

    sig: Signature
    size: int
    relations: tuple[frozenset[tuple[int, ...]], ...]

    def __post_init__(self) -> None:
        if self.size < 1:
            raise InputError("universe size must be positive")
        rels = []
        if len(self.relations) != len(self.sig.symbols):
            raise InputError("one relation required per signature symbol")
        for (name, arity), rel in zip(self.sig.symbols, self.relations):
            frozen = frozenset(tuple(t) for t in rel)
            for t in frozen:
                if len(t) != arity:
                    raise InputError(f"{name!r} expects {arity}-tuples, got {t}")
                if any(not 1 <= v <= self.size for v in t):
                    raise InputError(f"tuple {t} of {name!r} is outside 1..{self.size}")
            rels.append(frozen)
        object.__setattr__(self, "relations", tuple(rels))

    @classmethod
    def make(
        cls,
        sig: Signature,
        size: int,
        relations: Mapping[str, Iterable[Sequence[int]]],
    ) -> "Structure":
        unknown = set(relations) - set(sig.names)
        if unknown:
            raise InputError(f"relations given for unknown symbols {sorted(unknown)}")
        rels = tuple(
            frozenset(tuple(t) for t in relations.get(name, ()))
            for name in sig.names
        )
        return cls(sig, size, rels)

    def relation(self, name: str) -> frozenset[tuple[int, ...]]:
        return self.relations[self.sig.index(name)]


@dataclass(frozen=True)
class Hypergraph:
    """A reflexive uniform hypergraph: singleton edges plus edges of one fixed size."""

    size: int
    uniformity: int
    edges: frozenset[frozenset[int]]

    def __post_init__(self) -> None:
        if self.size < 1:
            raise InputError("vertex count must be positive")
        if self.uniformity < 2:
            raise InputError("uniformity must be at least 2")
        edges = frozenset(frozenset(e) for e in self.edges)
        for e in edges:
            if not e:
                raise InputError("edges must be nonempty")
            if any(not 1 <= v <= self.size for v in e):
                raise InputError(f"edge {sorted(e)} is outside 1..{self.size}")
        object.__setattr__(self, "edges", edges)


@dataclass(frozen=True)
class MetricSpace:
    """A finite linearly ordered metric space given by its distance matrix."""

    size: int
    dist: tuple[tuple[float, ...], ...]

    def __post_init__(self) -> None:
        if self.size < 1:
            raise InputError("size must be positive")
        rows = tuple(tuple(float(v) for v in row) for row in self.dist)
        if len(rows) != self.size or any(len(r) != self.size for r in rows):
            raise InputError(f"distance matrix must be {self.size}x{self.size}")
        object.__setattr__(self, "dist", rows)

    def d(self, x: int, y: int) -> float:
        return self.dist[x - 1][y - 1]

    @property
    def spectrum(self) -> frozenset[float]:
        """The set of nonzero distances."""
        return frozenset(
            self.dist[i][j]
            for i in range(self.size)
            for j in range(self.size)
            if i != j
        )


Object = Chain | Structure | Hypergraph | MetricSpace


def universe_size(obj: Object) -> int:
    return obj.size


def _sorted_rel(rel: frozenset[tuple[int, ...]]) -> list[tuple[int, ...]]:
    return sorted(rel)


@dataclass(frozen=True)
class Morphism:
    """A total map between the universes of two objects of the same kind."""

    dom: Object
    cod: Object
    map: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "map", tuple(self.map))
        n, m = universe_size(self.dom), universe_size(self.cod)
        if len(self.map) != n:
            raise InputError(f"map has {len(self.map)} entries for a universe of size {n}")
        for v in self.map:
            if not isinstance(v, int) or not 1 <= v <= m:
                raise InputError(f"image value {v!r} is outside 1..{m}")

    def __call__(self, x: int) -> int:
        return self.map[x - 1]

    def after(self, other: "Morphism") -> "Morphism":
        """Composition self(other(x)); other is applied first."""
        if other.cod != self.dom:
            raise InputError("morphisms are not composable")
        return Morphism(other.dom, self.cod, tuple(self.map[v - 1] for v in other.map))

    def tuple_image(self, t: Sequence[int]) -> tuple[int, ...]:
        return tuple(self.map[v - 1] for v in t)

    def set_image(self, e: Iterable[int]) -> frozenset[int]:
        return frozenset(self.map[v - 1] for v in e)

    def is_bijective(self) -> bool:
        return (
            universe_size(self.dom) == universe_size(self.cod)
            and len(set(self.map)) == len(self.map)
        )

    def inverse(self) -> "Morphism":
        if not self.is_bijective():
            raise InputError("only bijective morphisms can be inverted")
        inv = [0] * len(self.map)
        for x, v in enumerate(self.map, start=1):
            inv[v - 1] = x
        return Morphism(self.cod, self.dom, tuple(inv))


def identity(obj: Object) -> Morphism:
    n = universe_size(obj)
    return Morphism(obj, obj, tuple(range(1, n + 1)))


# ---------------------------------------------------------------------------
# class validators
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Violation:
    """The first violated invariant of a class check, with a concrete witness."""

    rule: str
    witness: tuple


def _diag(a: int, r: int) -> tuple[int, ...]:
    return (a,) * r


def is_reflexive(s: Structure) -> bool:
    return _validate_reflexive(s) is None


def _require_structure(obj: Object) -> Violation | None:
    if not isinstance(obj, Structure):
        return Violation("object kind", (type(obj).__name__,))
    return None


def _require_single_binary(s: Structure) -> Violation | None:
    if len(s.sig.symbols) != 1 or s.sig.symbols[0][1] != 2:
        return Violation("signature must be a single binary symbol", tuple(s.sig.symbols))
    return None


def _validate_reflexive(s: Structure) -> Violation | None:
    for name, arity in s.sig.symbols:
        rel = s.relation(name)
        for a in range(1, s.size + 1):
            if _diag(a, arity) not in rel:
                return Violation("missing diagonal tuple", (name, _diag(a, arity)))
    return None


def _validate_erst(s: Structure) -> Violation | None:
    bad = _validate_reflexive(s)
    if bad is not None:
        return bad
    for name, _ in s.sig.symbols:
        for t in _sorted_rel(s.relation(name)):
            if len(set(t)) == 1:
                continue
            if any(t[i] >= t[i + 1] for i in range(len(t) - 1)):
                return Violation("non-diagonal tuple not strictly increasing", (name, t))
    return None


def _binary_rel(s: Structure) -> frozenset[tuple[int, ...]]:
    return s.relations[0]


def _validate_graph(s: Structure) -> Violation | None:
    bad = _require_single_binary(s) or _validate_reflexive(s)
    if bad is not None:
        return bad
    rel = _binary_rel(s)
    for x, y in sorted(rel):
        if (y, x) not in rel:
            return Violation("relation not symmetric", ((x, y),))
    return None


def _validate_oriented(s: Structure) -> Violation | None:
    bad = _require_single_binary(s) or _validate_reflexive(s)
    if bad is not None:
        return bad
    rel = _binary_rel(s)
    for x, y in sorted(rel):
        if x != y and (y, x) in rel:
            return Violation("relation not antisymmetric", ((x, y), (y, x)))
    return None


def _validate_acyclic(s: Structure) -> Violation | None:
    bad = _require_single_binary(s) or _validate_reflexive(s)
    if bad is not None:
        return bad
    rel = _binary_rel(s)
    succ = {x: sorted(y for (u, y) in rel if u == x and y != x) for x in range(1, s.size + 1)}
    state = {x: 0 for x in succ}  # 0 unseen, 1 on stack, 2 done

    def find_cycle(x: int, path: list[int]) -> tuple[int, ...] | None:
        state[x] = 1
        path.append(x)
        for y in succ[x]:
            if state[y] == 1:
                return tuple(path[path.index(y) :])
            if state[y] == 0:
                cyc = find_cycle(y, path)
                if cyc is not None:
                    return cyc
        path.pop()
        state[x] = 2
        return None

    for x in range(1, s.size + 1):
        if state[x] == 0:
            cyc = find_cycle(x, [])
            if cyc is not None:
                return Violation("directed cycle", cyc)
    return None


def _validate_linear_extension(s: Structure) -> Violation | None:
    for name, _ in s.sig.symbols:
        for t in _sorted_rel(s.relation(name)):
            if len(set(t)) > 1 and any(t[i] >= t[i + 1] for i in range(len(t) - 1)):
                return Violation("tuple not increasing along the order", (name, t))
    return None


def _validate_digraph_linext(s: Structure) -> Violation | None:
    return (
        _require_single_binary(s)
        or _validate_reflexive(s)
        or _validate_linear_extension(s)
    )


def _validate_poset(s: Structure) -> Violation | None:
    bad = _validate_oriented(s)
    if bad is not None:
        return bad
    rel = _binary_rel(s)
    for x, y in sorted(rel):
        for y2, z in sorted(rel):
            if y2 == y and (x, z) not in rel:
                return Violation("relation not transitive", ((x, y), (y, z)))
    return None


def _validate_poset_linext(s: Structure) -> Violation | None:
    return _validate_poset(s) or _validate_linear_extension(s)


def _validate_tournament(s: Structure) -> Violation | None:
    bad = _require_single_binary(s) or _validate_reflexive(s)
    if bad is not None:
        return bad
    rel = _binary_rel(s)
    for x in range(1, s.size + 1):
        for y in range(x + 1, s.size + 1):
            fwd, back = (x, y) in rel, (y, x) in rel
            if fwd and back:
                return Violation("both directions present", ((x, y), (y, x)))
            if not fwd and not back:
                return Violation("no direction present", (x, y))
    return None


def _validate_hypergraph(h: Hypergraph) -> Violation | None:
    if not isinstance(h, Hypergraph):
        return Violation("object kind", (type(h).__name__,))
    for v in range(1, h.size + 1):
        if frozenset({v}) not in h.edges:
            return Violation("missing singleton edge", (v,))
    for e in sal_sorted_edges(h.edges):
        if len(e) not in (1, h.uniformity):
            return Violation("edge of wrong size", tuple(sorted(e)))
    return None


def _validate_metric(m: MetricSpace) -> Violation | None:
    if not isinstance(m, MetricSpace):
        return Violation("object kind", (type(m).__name__,))
    n = m.size
    for x in range(1, n + 1):
        if m.d(x, x) != 0.0:
            return Violation("nonzero self-distance", (x,))
    for x in range(1, n + 1):
        for y in range(x + 1, n + 1):
            if m.d(x, y) != m.d(y, x):
                return Violation("asymmetric distance", (x, y))
            if m.d(x, y) <= 0.0:
                return Violation("nonpositive distance between distinct points", (x, y))
    for x in range(1, n + 1):
        for y in range(1, n + 1):
            for z in range(1, n + 1):
                if m.d(x, y) > m.d(x, z) + m.d(z, y):
                    return Violation("triangle inequality fails", (x, y, z))
    return None


def _validate_chain(obj: Object) -> Violation | None:
    if not isinstance(obj, Chain):
        return Violation("object kind", (type(obj).__name__,))
    return None


def _validate_any_structure(obj: Object) -> Violation | None:
    return _require_structure(obj)


CLASS_TAGS: dict[str, object] = {
    "structure": _validate_any_structure,
    "reflexive": lambda s: _require_structure(s) or _validate_reflexive(s),
    "erst": lambda s: _require_structure(s) or _validate_erst(s),
    "r-erst": lambda s: _require_structure(s) or _validate_erst(s),
    "theta-erst": lambda s: _require_structure(s) or _validate_erst(s),
    "graph": lambda s: _require_structure(s) or _validate_graph(s),
    "oriented-graph": lambda s: _require_structure(s) or _validate_oriented(s),
    "acyclic-digraph": lambda s: _require_structure(s) or _validate_acyclic(s),
    "digraph-with-linear-extension": lambda s: _require_structure(s) or _validate_digraph_linext(s),
    "poset": lambda s: _require_structure(s) or _validate_poset(s),
    "poset-with-linear-extension": lambda s: _require_structure(s) or _validate_poset_linext(s),
    "tournament": lambda s: _require_structure(s) or _validate_tournament(s),
    "hypergraph": _validate_hypergraph,
    "metric": _validate_metric,
    "chain": _validate_chain,
}


def validate(obj: Object, tag: str) -> Violation | None:
    """Check the class invariants of tag; None means the object is valid.

    Violations are results, not errors: the first broken invariant is returned
    together with a concrete witness.
    """
    try:
        checker = CLASS_TAGS[tag]
    except KeyError:
        raise InputError(f"unknown class tag {tag!r}") from None
    return checker(obj)


# ---------------------------------------------------------------------------
# induced maps and morphism predicates
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Failure:
    """The first violated clause of a morphism check, with a minimal witness."""

    clause: str
    witness: tuple


def induced_tuple_map(
    f: Morphism, theta: str
) -> dict[tuple[int, ...], tuple[int, ...]] | Failure:
    """The coordinatewise action of f restricted to the tuples of one relation.

    Returns the map as a dict in sal order of the domain relation, or the
    sal-least tuple whose image escapes the codomain relation.
    """
    if not isinstance(f.dom, Structure) or not isinstance(f.cod, Structure):
        raise InputError("induced tuple maps require structure objects")
    target = f.cod.relation(theta)
    out: dict[tuple[int, ...], tuple[int, ...]] = {}
    for t in sal_sorted_tuples(f.dom.relation(theta)):
        img = f.tuple_image(t)
        if img not in target:
            return Failure("tuple image escapes the codomain relation", (theta, t, img))
        out[t] = img
    return out


def induced_edge_map(f: Morphism) -> dict[frozenset[int], frozenset[int]] | Failure:
    """The elementwise action of f on hypergraph edges, in sal order of the domain."""
    if not isinstance(f.dom, Hypergraph) or not isinstance(f.cod, Hypergraph):
        raise InputError("induced edge maps require hypergraph objects")
    out: dict[frozenset[int], frozenset[int]] = {}
    for e in sal_sorted_edges(f.dom.edges):
        img = f.set_image(e)
        if img not in f.cod.edges:
            return Failure(
                "edge image escapes the codomain edge set",
                (tuple(sorted(e)), tuple(sorted(img))),
            )
        out[e] = img
    return out


def _surjective_failure(f: Morphism) -> Failure | None:
    missing = set(range(1, universe_size(f.cod) + 1)) - set(f.map)
    if missing:
        return Failure("not surjective", (min(missing),))
    return None


def _chain_rigid_failure(f: Morphism) -> Failure | None:
    bad = _surjective_failure(f)
    if bad is not None:
        return bad
    first_hit: dict[int, int] = {}
    for x, v in enumerate(f.map, start=1):
        first_hit.setdefault(v, x)
    for v in range(1, universe_size(f.cod)):
        if first_hit[v] > first_hit[v + 1]:
            return Failure(
                "min-preimages out of order on the chain",
                (v, v + 1, first_hit[v], first_hit[v + 1]),
            )
    return None


def _induced_rigid_failure(domain, codomain, image, label: str) -> Failure | None:
    """Rigid-surjection check for an induced map between two sal-sorted finite orders.

    domain and codomain are listed in their linear order; the witnesses are the
    least missing target and the least adjacent pair whose min-preimages are
    mis-ordered."""
    pos = {e: i for i, e in enumerate(codomain)}
    min_pre: list[object] = [None] * len(codomain)
    for rank, x in enumerate(domain):
        j = pos[image(x)]
        if min_pre[j] is None:
            min_pre[j] = (rank, x)
    for j, e in enumerate(codomain):
        if min_pre[j] is None:
            return Failure(f"induced map on {label} not surjective", (e,))
    for j in range(len(codomain) - 1):
        if min_pre[j][0] > min_pre[j + 1][0]:
            return Failure(
                f"min-preimages out of order on {label}",
                (codomain[j], codomain[j + 1], min_pre[j][1], min_pre[j + 1][1]),
            )
    return None


def _structure_hom_failure(f: Morphism) -> Failure | None:
    for name, _ in f.dom.sig.symbols:
        res = induced_tuple_map(f, name)
        if isinstance(res, Failure):
            return Failure("not a homomorphism", res.witness)
    return None


def _hypergraph_hom_failure(f: Morphism) -> Failure | None:
    res = induced_edge_map(f)
    if isinstance(res, Failure):
        return Failure("not a hypergraph homomorphism", res.witness)
    return None


def _order_compat_failure(f: Morphism, entries: Sequence[int], context: tuple) -> Failure | None:
    # a non-constant restriction must be strictly order preserving on the entries
    values = sorted(set(entries))
    images = [f(v) for v in values]
    if len(set(images)) == 1:
        return None
    for i in range(len(values) - 1):
        if images[i] >= images[i + 1]:
            return Failure(
                "non-constant restriction not order preserving",
                context + ((values[i], values[i + 1]),),
            )
    return None


def _same_kind(f: Morphism, *kinds) -> None:
    if not isinstance(f.dom, kinds) or not isinstance(f.cod, kinds):
        raise InputError(
            f"morphism kind check requires objects of kind {[k.__name__ for k in kinds]}"
        )
    if type(f.dom) is not type(f.cod):
        raise InputError("domain and codomain must be objects of the same kind")
    if isinstance(f.dom, Structure) and f.dom.sig != f.cod.sig:
        raise InputError("domain and codomain signatures differ")
    if isinstance(f.dom, Hypergraph) and f.dom.uniformity != f.cod.uniformity:
        raise InputError("domain and codomain uniformities differ")


def _check_homomorphism(f: Morphism) -> Failure | None:
    _same_kind(f, Structure, Hypergraph, Chain)
    if isinstance(f.dom, Structure):
        return _structure_hom_failure(f)
    if isinstance(f.dom, Hypergraph):
        return _hypergraph_hom_failure(f)
    return None


def _check_embedding(f: Morphism) -> Failure | None:
    _same_kind(f, Structure, Hypergraph, Chain)
    if len(set(f.map)) != len(f.map):
        dup = next(v for v in f.map if f.map.count(v) > 1)
        return Failure("not injective", (dup,))
    for x in range(1, universe_size(f.dom)):
        if f(x) >= f(x + 1):
            return Failure("does not preserve the chain order", (x, x + 1))
    bad = _check_homomorphism(f)
    if bad is not None:
        return bad
    if isinstance(f.dom, Structure):
        image = set(f.map)
        inv = {f(x): x for x in range(1, universe_size(f.dom) + 1)}
        for name, _ in f.dom.sig.symbols:
            rel_a = f.dom.relation(name)
            for t in _sorted_rel(f.cod.relation(name)):
                if all(v in image for v in t):
                    pre = tuple(inv[v] for v in t)
                    if pre not in rel_a:
                        return Failure("image relation not reflected", (name, t))
    elif isinstance(f.dom, Hypergraph):
        image = set(f.map)
        inv = {f(x): x for x in range(1, universe_size(f.dom) + 1)}
        for e in sal_sorted_edges(f.cod.edges):
            if all(v in image for v in e):
                pre = frozenset(inv[v] for v in e)
                if pre not in f.dom.edges:
                    return Failure("image edge not reflected", (tuple(sorted(e)),))
    return None


def _check_quotient(f: Morphism) -> Failure | None:
    _same_kind(f, Structure, Chain)
    bad = _surjective_failure(f)
    if bad is not None:
        return bad
    bad = _check_homomorphism(f)
    if bad is not None:
        return bad
    if isinstance(f.dom, Structure):
        for name, _ in f.dom.sig.symbols:
            images = {f.tuple_image(t) for t in f.dom.relation(name)}
            for t in sal_sorted_tuples(f.cod.relation(name)):
                if t not in images:
                    return Failure("codomain tuple without preimage tuple", (name, t))
    return None


def _check_rigid_surjection(f: Morphism) -> Failure | None:
    return _chain_rigid_failure(f)


def _check_rsh(f: Morphism) -> Failure | None:
    bad = _check_homomorphism(f)
    if bad is not None:
        return bad
    return _chain_rigid_failure(f)


def _check_srq(f: Morphism) -> Failure | None:
    _same_kind(f, Structure)
    bad = _structure_hom_failure(f)
    if bad is not None:
        return bad
    for name, _ in f.dom.sig.symbols:
        bad = _induced_rigid_failure(
            sal_sorted_tuples(f.dom.relation(name)),
            sal_sorted_tuples(f.cod.relation(name)),
            f.tuple_image,
            f"relation {name!r}",
        )
        if bad is not None:
            return bad
    return None


def _check_srq_structures(f: Morphism) -> Failure | None:
    bad = _check_srq(f)
    if bad is not None:
        return bad
    for name, _ in f.dom.sig.symbols:
        for t in sal_sorted_tuples(f.dom.relation(name)):
            bad = _order_compat_failure(f, t, (name, t))
            if bad is not None:
                return bad
    return None


def _check_hgr_srq(f: Morphism) -> Failure | None:
    _same_kind(f, Hypergraph)
    bad = _hypergraph_hom_failure(f)
    if bad is not None:
        return bad
    bad = _induced_rigid_failure(
        sal_sorted_edges(f.dom.edges),
        sal_sorted_edges(f.cod.edges),
        f.set_image,
        "edges",
    )
    if bad is not None:
        return bad
    for e in sal_sorted_edges(f.dom.edges):
        bad = _order_compat_failure(f, tuple(sorted(e)), (tuple(sorted(e)),))
        if bad is not None:
            return bad
    return None


def _check_ners(f: Morphism) -> Failure | None:
    _same_kind(f, MetricSpace)
    n = universe_size(f.dom)
    for x in range(1, n + 1):
        for y in range(x + 1, n + 1):
            if f.cod.d(f(x), f(y)) > f.dom.d(x, y):
                return Failure("expanded pair", (x, y, f.dom.d(x, y), f.cod.d(f(x), f(y))))
    return _chain_rigid_failure(f)


MORPHISM_KINDS: dict[str, object] = {
    "homomorphism": _check_homomorphism,
    "embedding": _check_embedding,
    "quotient-map": _check_quotient,
    "rigid-surjection": _check_rigid_surjection,
    "rigid-surjective-homomorphism": _check_rsh,
    "strong-rigid-quotient": _check_srq,
    "strong-rigid-quotient-of-structures": _check_srq_structures,
    "hypergraph-strong-rigid-quotient": _check_hgr_srq,
    "nonexpansive-rigid-surjection": _check_ners,
}


def check_morphism(f: Morphism, kind: str) -> Failure | None:
    """Check the morphism laws of the requested kind; None means f passes.

    Failures report the first violated clause with a deterministic witness
    (clauses are scanned in definition order and relation sets in sal order).
    """
    try:
        checker = MORPHISM_KINDS[kind]
    except KeyError:
        raise InputError(f"unknown morphism kind {kind!r}") from None
    return checker(f)


def passes(f: Morphism, kind: str) -> bool:
    return check_morphism(f, kind) is None


# ---------------------------------------------------------------------------
# morphism enumeration
# ---------------------------------------------------------------------------

_SURJECTIVE_KINDS = {
    "quotient-map",
    "rigid-surjection",
    "rigid-surjective-homomorphism",
    "strong-rigid-quotient",
    "strong-rigid-quotient-of-structures",
    "hypergraph-strong-rigid-quotient",
    "nonexpansive-rigid-surjection",
}

# Kinds whose underlying chain map must be a rigid surjection.  For the two
# strong quotient kinds this relies on the objects being reflexive (diagonal
# tuples act like the chain), so the pruning is only applied in that case.
_RIGID_KINDS = {
    "rigid-surjection",
    "rigid-surjective-homomorphism",
    "nonexpansive-rigid-surjection",
}
_RIGID_IF_REFLEXIVE_KINDS = {
    "strong-rigid-quotient",
    "strong-rigid-quotient-of-structures",
    "hypergraph-strong-rigid-quotient",
}


_HOM_CLAUSE_KINDS = {
    "homomorphism",
    "embedding",
    "quotient-map",
    "rigid-surjective-homomorphism",
    "strong-rigid-quotient",
    "strong-rigid-quotient-of-structures",
    "hypergraph-strong-rigid-quotient",
}


def _prefix_constraints(A: Object, B: Object, kind: str):
    """Per-position checks used to cut partial maps during enumeration.

    Only kinds with a homomorphism clause admit relation pruning; the bare
    rigid-surjection kind ignores relations entirely."""
    n = universe_size(A)
    by_pos: list[list] = [[] for _ in range(n + 1)]
    if kind in _HOM_CLAUSE_KINDS and isinstance(A, Structure) and isinstance(B, Structure):
        for idx, (name, _) in enumerate(A.sig.symbols):
            rel_b = B.relations[idx]
            for t in A.relations[idx]:
                by_pos[max(t)].append(("tuple", t, rel_b))
    elif kind in _HOM_CLAUSE_KINDS and isinstance(A, Hypergraph):
        for e in A.edges:
            by_pos[max(e)].append(("edge", tuple(sorted(e)), B.edges))
    elif kind == "nonexpansive-rigid-surjection" and isinstance(A, MetricSpace):
        for p in range(1, n + 1):
            by_pos[p].append(("metric", p, None))
    for slot in by_pos:
        slot.sort(key=lambda item: (item[0], item[1]))
    return by_pos


def _prefix_ok(item, buf: list[int], pos: int, A: Object, B: Object, kind: str) -> bool:
    tag, data, target = item
    if tag == "tuple":
        img = tuple(buf[v - 1] for v in data)
        if img not in target:
            return False
        if kind == "strong-rigid-quotient-of-structures":
            return _prefix_order_compat(buf, data)
        return True
    if tag == "edge":
        img = frozenset(buf[v - 1] for v in data)
        if img not in target:
            return False
        if kind == "hypergraph-strong-rigid-quotient":
            return _prefix_order_compat(buf, data)
        return True
    # metric pair checks for the freshly assigned point
    p = data
    for q in range(1, p):
        if B.d(buf[q - 1], buf[p - 1]) > A.d(q, p):
            return False
    return True


def _prefix_order_compat(buf: list[int], entries: Sequence[int]) -> bool:
    values = sorted(set(entries))
    images = [buf[v - 1] for v in values]
    if len(set(images)) == 1:
        return True
    return all(images[i] < images[i + 1] for i in range(len(values) - 1))


def enum_morphisms(A: Object, B: Object, kind: str) -> list[Morphism]:
    """All morphisms of the given kind from A to B, in lexicographic map order.

    Backtracking over positions with three cuts: the rigid initial-segment
    bound on candidate values, counting of still-uncovered codomain elements,
    and per-prefix relation/edge/distance checks.  Leaves are confirmed with
    check_morphism, so the output is exactly the passing maps.
    """
    if kind not in MORPHISM_KINDS:
        raise InputError(f"unknown morphism kind {kind!r}")
    if type(A) is not type(B):
        raise InputError("enumeration requires objects of the same kind")
    if isinstance(A, Structure) and A.sig != B.sig:
        raise InputError("enumeration requires equal signatures")
    if isinstance(A, Hypergraph) and A.uniformity != B.uniformity:
        raise InputError("enumeration requires equal uniformities")
    n, m = universe_size(A), universe_size(B)
    surjective = kind in _SURJECTIVE_KINDS
    rigid = kind in _RIGID_KINDS or (
        kind in _RIGID_IF_REFLEXIVE_KINDS
        and (isinstance(A, Hypergraph) or (isinstance(A, Structure) and is_reflexive(A)))
    )
    injective = kind == "embedding"
    if surjective and m > n:
        return []
    if injective and n > m:
        return []
    by_pos = _prefix_constraints(A, B, kind)
    out: list[Morphism] = []
    buf = [0] * n
    covered = [0] * (m + 1)
    num_covered = 0

    def extend(pos: int, top: int) -> None:
        nonlocal num_covered
        if pos == n:
            cand = Morphism(A, B, tuple(buf))
            if check_morphism(cand, kind) is None:
                out.append(cand)
            return
        if rigid:
            candidates = range(1, min(top + 1, m) + 1)
        elif injective:
            candidates = [v for v in range(1, m + 1) if covered[v] == 0]
        else:
            candidates = range(1, m + 1)
        for v in candidates:
            new_top = max(top, v)
            if surjective:
                uncovered = (m - new_top) if rigid else (m - num_covered - (covered[v] == 0))
                if uncovered > n - pos - 1:
                    continue
            buf[pos] = v
            if all(_prefix_ok(item, buf, pos, A, B, kind) for item in by_pos[pos + 1]):
                covered[v] += 1
                num_covered += covered[v] == 1
                extend(pos + 1, new_top)
                covered[v] -= 1
                num_covered -= covered[v] == 0
        buf[pos] = 0

    extend(0, 0)
    return out


def automorphisms(A: Object, kind: str) -> list[Morphism]:
    """The invertible self-morphisms of A: bijections whose inverse also passes."""
    out = []
    for f in enum_morphisms(A, A, kind):
        if f.is_bijective() and check_morphism(f.inverse(), kind) is None:
            out.append(f)
    return out


# ---------------------------------------------------------------------------
# derived objects
# ---------------------------------------------------------------------------


def reduct(s: Structure, name: str) -> Structure:
    """The structure with the single named symbol of s."""
    idx = s.sig.index(name)
    return Structure(Signature((s.sig.symbols[idx],)), s.size, (s.relations[idx],))


def induced_substructure(s: Structure, vertices: Iterable[int]) -> Structure:
    """The substructure induced by a vertex set, relabeled to 1..m in chain order."""
    keep = sorted(set(vertices))
    for v in keep:
        if not 1 <= v <= s.size:
            raise InputError(f"vertex {v} is outside 1..{s.size}")
    if not keep:
        raise InputError("induced substructure needs at least one vertex")
    relabel = {v: i for i, v in enumerate(keep, start=1)}
    rels = tuple(
        frozenset(
            tuple(relabel[v] for v in t) for t in rel if all(v in relabel for v in t)
        )
        for rel in s.relations
    )
    return Structure(s.sig, len(keep), rels)
