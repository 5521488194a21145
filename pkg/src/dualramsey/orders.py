"""Finite chains, rigid surjections between them, and anti-lexicographic orders.

Every chain is canonically the set {1, ..., n} with the natural order; objects
arriving with other label sets are relabeled at the parse boundary.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

LT, EQ, GT = -1, 0, 1


class InputError(ValueError):
    """A structurally invalid input (bad sizes, out-of-range entries, ...)."""


def _cmp(a, b) -> int:
    return LT if a < b else GT if a > b else EQ


@dataclass(frozen=True)
class Chain:
    """The chain 1 < 2 < ... < size."""

    size: int

    def __post_init__(self) -> None:
        if not isinstance(self.size, int) or self.size < 1:
            raise InputError(f"chain size must be a positive integer, got {self.size!r}")

    @property
    def elements(self) -> range:
        return range(1, self.size + 1)

    def __contains__(self, x: object) -> bool:
        return isinstance(x, int) and 1 <= x <= self.size


@dataclass(frozen=True)
class ChainMap:
    """A total map between chains, stored as the image array (1-based values)."""

    dom: Chain
    cod: Chain
    map: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "map", tuple(self.map))
        if len(self.map) != self.dom.size:
            raise InputError(
                f"map has {len(self.map)} entries for a domain of size {self.dom.size}"
            )
        for i, v in enumerate(self.map, start=1):
            if not isinstance(v, int) or not 1 <= v <= self.cod.size:
                raise InputError(f"image of {i} is {v!r}, outside 1..{self.cod.size}")

    def __call__(self, x: int) -> int:
        if x not in self.dom:
            raise InputError(f"{x} is not an element of the domain chain")
        return self.map[x - 1]

    def after(self, other: "ChainMap") -> "ChainMap":
        """Composition self(other(x)); other is applied first."""
        if other.cod != self.dom:
            raise InputError("chain maps are not composable")
        return ChainMap(other.dom, self.cod, tuple(self.map[v - 1] for v in other.map))


def _check_tuple(a: Sequence[int], chain: Chain | None) -> tuple[int, ...]:
    a = tuple(a)
    if not a:
        raise InputError("tuple must be nonempty")
    for v in a:
        if not isinstance(v, int) or v < 1:
            raise InputError(f"entry {v!r} is not a positive chain element")
        if chain is not None and v not in chain:
            raise InputError(f"entry {v} is outside the chain 1..{chain.size}")
    return a


def _check_subset(xs: Iterable[int], chain: Chain | None) -> frozenset[int]:
    xs = frozenset(xs)
    for v in xs:
        if not isinstance(v, int) or v < 1:
            raise InputError(f"element {v!r} is not a positive chain element")
        if chain is not None and v not in chain:
            raise InputError(f"element {v} is outside the chain 1..{chain.size}")
    return xs


def cmp_alex_tuples(a: Sequence[int], b: Sequence[int], chain: Chain | None = None) -> int:
    """Anti-lexicographic comparison of equal-length tuples.

    The largest position at which the tuples differ decides.
    """
    a, b = _check_tuple(a, chain), _check_tuple(b, chain)
    if len(a) != len(b):
        raise InputError(f"tuples have different lengths {len(a)} and {len(b)}")
    return _cmp(a[::-1], b[::-1])


def subset_alex_key(xs: Iterable[int]) -> int:
    """Characteristic vector of a subset read as a binary number (bit i-1 for element i).

    Numeric order of these keys is exactly the anti-lexicographic order on subsets.
    """
    key = 0
    for x in xs:
        key |= 1 << (x - 1)
    return key


def cmp_alex_subsets(x: Iterable[int], y: Iterable[int], chain: Chain | None = None) -> int:
    """Anti-lexicographic comparison of subsets via their characteristic vectors.

    Equivalently: X comes first iff X is a proper subset of Y, or
    max(X \\ Y) < max(Y \\ X) when the sets are incomparable.
    """
    x, y = _check_subset(x, chain), _check_subset(y, chain)
    return _cmp(subset_alex_key(x), subset_alex_key(y))


def _is_rigid_array(values: Sequence[int], cod_size: int) -> bool:
    # Initial-segment characterization, O(n): every prefix of the domain must map
    # onto a prefix {1..t} of the codomain, i.e. each new value is at most top+1.
    top = 0
    for v in values:
        if v > top + 1:
            return False
        if v > top:
            top = v
    return top == cod_size


def is_rigid_surjection(f: ChainMap) -> bool:
    """Whether f maps each initial segment of its domain onto an initial segment.

    Equivalent to: f is surjective and min f^-1(x) < min f^-1(y) whenever x < y.
    """
    return _is_rigid_array(f.map, f.cod.size)


def enum_rigid_surjections(n: int, k: int) -> list[ChainMap]:
    """All rigid surjections from the n-chain onto the k-chain.

    Emitted in lexicographic order of the image arrays; empty when k > n.
    """
    if n < 1 or k < 1:
        raise InputError("chain sizes must be positive")
    if k > n:
        return []
    dom, cod = Chain(n), Chain(k)
    out: list[ChainMap] = []
    buf = [0] * n

    def extend(pos: int, top: int) -> None:
        if pos == n:
            if top == k:
                out.append(ChainMap(dom, cod, tuple(buf)))
            return
        for v in range(1, min(top + 1, k) + 1):
            new_top = max(top, v)
            # the remaining positions must still be able to reach value k
            if k - new_top <= n - pos - 1:
                buf[pos] = v
                extend(pos + 1, new_top)

    extend(0, 0)
    return out
