"""Total quasiorders on tuple positions and the special anti-lexicographic orders.

A tuple over a chain determines a total quasiorder on its positions (group
positions carrying equal values, order the groups by the values) together with
the increasing tuple of distinct values.  These two pieces of data determine
the tuple, and the "sal" orders below compare tuples by quasiorder first and
value set second.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from .orders import Chain, InputError, _cmp, subset_alex_key

__all__ = [
    "TotalQuasiorder",
    "tp",
    "mat",
    "tup",
    "all_total_quasiorders",
    "triangle_key",
    "cmp_triangle",
    "cmp_triangle_detailed",
    "sal_tuple_key",
    "cmp_sal_tuples",
    "sal_edge_key",
    "cmp_sal_edges",
    "sal_sorted_tuples",
    "sal_sorted_edges",
]


@dataclass(frozen=True)
class TotalQuasiorder:
    """An ordered partition of the positions {1..arity}; earlier classes come first."""

    arity: int
    classes: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "classes", tuple(frozenset(c) for c in self.classes))
        if self.arity < 1:
            raise InputError("arity must be at least 1")
        seen: set[int] = set()
        for c in self.classes:
            if not c:
                raise InputError("classes must be nonempty")
            if c & seen:
                raise InputError("classes must be disjoint")
            seen |= c
        if seen != set(range(1, self.arity + 1)):
            raise InputError(f"classes must partition 1..{self.arity}")

    def class_index(self, i: int) -> int:
        for idx, c in enumerate(self.classes):
            if i in c:
                return idx
        raise InputError(f"position {i} is outside 1..{self.arity}")

    def leq(self, i: int, j: int) -> bool:
        """The quasiorder relation itself: i comes no later than j."""
        return self.class_index(i) <= self.class_index(j)


def tp(a: Sequence[int]) -> TotalQuasiorder:
    """The total quasiorder on positions induced by comparing the tuple's entries."""
    a = tuple(a)
    if not a:
        raise InputError("tuple must be nonempty")
    classes = tuple(
        frozenset(i for i, x in enumerate(a, start=1) if x == v) for v in sorted(set(a))
    )
    return TotalQuasiorder(len(a), classes)


def mat(a: Sequence[int]) -> tuple[int, ...]:
    """The strictly increasing tuple of distinct values of a."""
    if not a:
        raise InputError("tuple must be nonempty")
    return tuple(sorted(set(a)))


def tup(
    sigma: TotalQuasiorder, values: Sequence[int], *, strict: bool = True
) -> tuple[int, ...]:
    """Place values[x] on every position of the x-th class of sigma.

    With strict=True (the default) the values must be strictly increasing, which
    makes tup the inverse of the (tp, mat) pair.  Internal callers that build
    image tuples under arbitrary maps pass strict=False.
    """
    values = tuple(values)
    if len(values) != len(sigma.classes):
        raise InputError(
            f"got {len(values)} values for {len(sigma.classes)} classes"
        )
    if strict and any(values[i] >= values[i + 1] for i in range(len(values) - 1)):
        raise InputError(f"values {values} are not strictly increasing")
    out = [0] * sigma.arity
    for v, cls in zip(values, sigma.classes):
        for pos in cls:
            out[pos - 1] = v
    return tuple(out)


def all_total_quasiorders(r: int) -> list[TotalQuasiorder]:
    """All ordered partitions of {1..r}, sorted by the triangle order below."""
    if r < 1:
        raise InputError("arity must be at least 1")

    def ordered_partitions(items: tuple[int, ...]) -> list[tuple[frozenset[int], ...]]:
        if not items:
            return [()]
        first, rest = items[0], items[1:]
        out: list[tuple[frozenset[int], ...]] = []
        # choose the class of the first item, then order-partition the rest around it
        for tail in ordered_partitions(rest):
            for slot in range(len(tail) + 1):
                out.append(tail[:slot] + (frozenset({first}),) + tail[slot:])
            for slot, cls in enumerate(tail):
                out.append(tail[:slot] + (cls | {first},) + tail[slot + 1 :])
        return out

    seen = {parts for parts in ordered_partitions(tuple(range(1, r + 1)))}
    qos = [TotalQuasiorder(r, parts) for parts in seen]
    qos.sort(key=triangle_key)
    return qos


def _class_seq_key(classes: Sequence[frozenset[int]]) -> tuple[int, ...]:
    # anti-lexicographic comparison of a sequence of subsets: last class decides first
    return tuple(subset_alex_key(c) for c in reversed(classes))


def triangle_key(sigma: TotalQuasiorder) -> tuple:
    """Sort key realizing the triangle order on total quasiorders of one arity.

    Fewer classes come first; ties compare the classes sorted anti-lexicographically,
    again anti-lexicographically.  Quasiorders with the same underlying partition but
    different class orders are separated by a final comparison of the class sequence
    in class order; see cmp_triangle_detailed for auditing when that tie-break fires.
    """
    masks = sorted(subset_alex_key(c) for c in sigma.classes)
    return (len(sigma.classes), tuple(reversed(masks)), _class_seq_key(sigma.classes))


def cmp_triangle_detailed(
    sigma: TotalQuasiorder, tau: TotalQuasiorder
) -> tuple[int, bool]:
    """Triangle comparison plus a flag marking decisions made by the tie-break rule.

    The flag is True exactly when the two quasiorders share class count and
    underlying partition (so only the three-way class-order comparison separates
    them); such comparisons never occur between relation tuples of structures
    with linear extensions, where only diagonal and strictly increasing types arise.
    """
    if sigma.arity != tau.arity:
        raise InputError(f"arity mismatch: {sigma.arity} vs {tau.arity}")
    ks, kt = triangle_key(sigma), triangle_key(tau)
    decided_by_tiebreak = ks[:2] == kt[:2] and sigma != tau
    return _cmp(ks, kt), decided_by_tiebreak


def cmp_triangle(sigma: TotalQuasiorder, tau: TotalQuasiorder) -> int:
    """Strict total order on total quasiorders of equal arity; fewest classes first."""
    return cmp_triangle_detailed(sigma, tau)[0]


def sal_tuple_key(a: Sequence[int]) -> tuple:
    """Sort key for the special anti-lexicographic order on tuples over a chain."""
    return (triangle_key(tp(a)), subset_alex_key(set(a)))


def cmp_sal_tuples(a: Sequence[int], b: Sequence[int], chain: Chain | None = None) -> int:
    """Special anti-lexicographic comparison: triangle order on types first, then
    anti-lexicographic order on value sets.  Equal type and equal value set force
    equal tuples, so this is a strict total order on the tuples of one length."""
    a, b = tuple(a), tuple(b)
    if len(a) != len(b):
        raise InputError(f"tuples have different lengths {len(a)} and {len(b)}")
    if chain is not None:
        for v in a + b:
            if v not in chain:
                raise InputError(f"entry {v} is outside the chain 1..{chain.size}")
    return _cmp(sal_tuple_key(a), sal_tuple_key(b))


def sal_edge_key(xs: Iterable[int]) -> tuple[int, int]:
    """Sort key for the special anti-lexicographic order on subsets of a chain:
    the empty set first, then singletons by element, then larger sets
    anti-lexicographically."""
    xs = frozenset(xs)
    if not xs:
        return (0, 0)
    if len(xs) == 1:
        return (1, next(iter(xs)))
    return (2, subset_alex_key(xs))


def cmp_sal_edges(x: Iterable[int], y: Iterable[int], chain: Chain | None = None) -> int:
    x, y = frozenset(x), frozenset(y)
    if chain is not None:
        for v in x | y:
            if v not in chain:
                raise InputError(f"element {v} is outside the chain 1..{chain.size}")
    return _cmp(sal_edge_key(x), sal_edge_key(y))


def sal_sorted_tuples(tuples: Iterable[Sequence[int]]) -> list[tuple[int, ...]]:
    return sorted((tuple(t) for t in tuples), key=sal_tuple_key)


def sal_sorted_edges(edges: Iterable[Iterable[int]]) -> list[frozenset[int]]:
    return sorted((frozenset(e) for e in edges), key=sal_edge_key)
