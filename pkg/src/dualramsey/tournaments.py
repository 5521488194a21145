"""Inflations and siblings of reflexive tournaments, critical-pair extraction,
the 0/1-matrix exhaustion behind the non-siblings argument, and the driver
showing that no linearly ordered reflexive tournament has the two-color arrow
property over the pinned seven/two-vertex pair.
"""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass

from .arrows import ArrowProblem, ArrowVerdict, check_arrow, hom_set
from .constructions import build_named
from .orders import InputError
from .structures import (
    BINARY_EDGE,
    Morphism,
    Structure,
    check_morphism,
    induced_substructure,
    validate,
)

__all__ = [
    "BudgetError",
    "CriticalPair",
    "is_inflation_of",
    "critical_pairs",
    "matrix_scan",
    "all_tournaments",
    "siblings_witness_search",
    "CounterexampleReport",
    "verify_tournament_counterexample",
]


class BudgetError(InputError):
    """A search exceeded its configured resource budget."""


def _require_tournament(t: Structure, label: str) -> None:
    bad = validate(t, "tournament")
    if bad is not None:
        raise InputError(f"{label} is not a reflexive tournament: {bad}")


def _arcs(t: Structure) -> frozenset[tuple[int, int]]:
    return t.relations[0]


def is_inflation_of(big: Structure, small: Structure) -> Morphism | None:
    """A surjective homomorphism witnessing that big inflates small, or None.

    Plain homomorphisms of the arc relation; neither the linear orders nor
    rigidity play a role here.  Backtracking with surjectivity counting over
    the |small| ** |big| candidate maps, in lexicographic order.
    """
    _require_tournament(big, "the big tournament")
    _require_tournament(small, "the small tournament")
    n, m = big.size, small.size
    if m > n:
        return None
    arcs_small = _arcs(small)
    arcs_by_max: list[list[tuple[int, int]]] = [[] for _ in range(n + 1)]
    for x, y in _arcs(big):
        arcs_by_max[max(x, y)].append((x, y))
    buf = [0] * n
    covered = [0] * (m + 1)
    num_covered = 0

    def extend(pos: int) -> Morphism | None:
        nonlocal num_covered
        if pos == n:
            return Morphism(big, small, tuple(buf))
        for v in range(1, m + 1):
            if m - num_covered - (covered[v] == 0) > n - pos - 1:
                continue
            buf[pos] = v
            if all(
                (buf[x - 1], buf[y - 1]) in arcs_small for x, y in arcs_by_max[pos + 1]
            ):
                covered[v] += 1
                num_covered += covered[v] == 1
                found = extend(pos + 1)
                covered[v] -= 1
                num_covered -= covered[v] == 0
                if found is not None:
                    return found
        return None

    return extend(0)


@dataclass(frozen=True)
class CriticalPair:
    """Cell pair ((i, j), (u, v)) that cannot both be populated when one map
    sends a common refinement onto the first tournament and another onto the
    second: i beats u in the first, v beats j in the second."""

    ij: tuple[int, int]
    uv: tuple[int, int]


def critical_pairs(first: Structure, second: Structure) -> list[CriticalPair]:
    """All critical cell pairs, each written smaller cell first and sorted.

    The cells (i, j) and (u, v) form a critical pair when i beats u in the
    first tournament while v beats j in the second (for distinct i, u and
    distinct j, v).  The obstruction is symmetric in the two cells, so pairs
    are normalized to the lexicographically smaller cell first and
    deduplicated; the result is sorted by (i, j, u, v)."""
    _require_tournament(first, "the first tournament")
    _require_tournament(second, "the second tournament")
    arcs1, arcs2 = _arcs(first), _arcs(second)
    found: set[tuple[tuple[int, int], tuple[int, int]]] = set()
    for i in range(1, first.size + 1):
        for j in range(1, second.size + 1):
            for u in range(1, first.size + 1):
                for v in range(1, second.size + 1):
                    if i != u and v != j and (i, u) in arcs1 and (v, j) in arcs2:
                        cells = ((i, j), (u, v))
                        found.add((min(cells), max(cells)))
    return [CriticalPair(ij, uv) for ij, uv in sorted(found)]


def matrix_scan(
    pairs: Iterable[CriticalPair | tuple], rows: int, cols: int
) -> list[tuple[tuple[int, ...], ...]]:
    """All 0/1 matrices with a 1 in every row, a 1 in every column, and at most
    one populated cell per critical pair; the scan is exhaustive over all
    2**(rows*cols) matrices."""
    if rows < 1 or cols < 1:
        raise InputError("matrix dimensions must be positive")
    cells = rows * cols
    if cells > 24:
        raise BudgetError(f"scan over 2^{cells} matrices exceeds the supported size")

    def flat(i: int, j: int) -> int:
        if not (1 <= i <= rows and 1 <= j <= cols):
            raise InputError(f"cell ({i}, {j}) is outside the {rows}x{cols} matrix")
        return (i - 1) * cols + (j - 1)

    pair_bits = []
    for p in pairs:
        ij, uv = (p.ij, p.uv) if isinstance(p, CriticalPair) else (tuple(p[0]), tuple(p[1]))
        pair_bits.append((flat(*ij), flat(*uv)))
    row_masks = [sum(1 << flat(i, j) for j in range(1, cols + 1)) for i in range(1, rows + 1)]
    col_masks = [sum(1 << flat(i, j) for i in range(1, rows + 1)) for j in range(1, cols + 1)]

    out = []
    for bits in range(1 << cells):
        if any(not bits & mask for mask in row_masks):
            continue
        if any(not bits & mask for mask in col_masks):
            continue
        if any(bits >> a & 1 and bits >> b & 1 for a, b in pair_bits):
            continue
        out.append(
            tuple(
                tuple((bits >> flat(i, j)) & 1 for j in range(1, cols + 1))
                for i in range(1, rows + 1)
            )
        )
    return out


def all_tournaments(n: int) -> Iterable[Structure]:
    """All labeled reflexive tournaments on 1..n, by orientation bitmask order."""
    if n < 1:
        raise InputError("size must be positive")
    pairs = [(x, y) for x in range(1, n + 1) for y in range(x + 1, n + 1)]
    loops = {(v, v) for v in range(1, n + 1)}
    for bits in range(1 << len(pairs)):
        arcs = set(loops)
        for idx, (x, y) in enumerate(pairs):
            arcs.add((x, y) if not bits >> idx & 1 else (y, x))
        yield Structure.make(BINARY_EDGE, n, {"edge": arcs})


def siblings_witness_search(
    first: Structure, second: Structure, max_n: int
) -> Structure | None:
    """A tournament inflating both inputs, with at most max_n vertices, or None
    after exhausting every labeled tournament up to that size."""
    _require_tournament(first, "the first tournament")
    _require_tournament(second, "the second tournament")
    low = max(first.size, second.size)
    if max_n < low:
        raise InputError(f"max_n must be at least {low}")
    for n in range(low, max_n + 1):
        for t in all_tournaments(n):
            # the larger target prunes faster, so test against it first
            a, b = (first, second) if first.size >= second.size else (second, first)
            if is_inflation_of(t, a) is not None and is_inflation_of(t, b) is not None:
                return t
    return None


@dataclass(frozen=True)
class CounterexampleReport:
    """Outcome of replaying the no-arrow argument on one tournament."""

    completion: str
    num_colorings: int  # size of hom(T, two-vertex target)
    num_factorizations: int  # size of hom(T, seven-vertex middle)
    rows: tuple[tuple[tuple[int, ...], int, int], ...]  # (w.map, color(phi.w), color(psi.w))
    every_factorization_bichromatic: bool
    arrow_verdict: ArrowVerdict | None
    degenerate: bool = False

    @property
    def passed(self) -> bool:
        if self.degenerate:
            return self.arrow_verdict is not None and not self.arrow_verdict.holds
        return (
            self.every_factorization_bichromatic
            and self.arrow_verdict is not None
            and not self.arrow_verdict.holds
        )


_COMPLETION_NOTE = (
    "seven-vertex middle object: 3-cycle on 1..3, vertex 4 beaten by 1..3, "
    "all arcs from 1..4 into 5..7, and 5..7 transitive"
)

PHI = (1, 1, 1, 2, 2, 2, 2)
PSI = (1, 1, 1, 1, 2, 2, 2)

KIND = "rigid-surjective-homomorphism"


def _chi(f: Morphism, cycle: Structure) -> int:
    """Color 1 when the sub-tournament over the preimage of 1 inflates the
    3-cycle, color 2 otherwise."""
    pre = [x for x in range(1, f.dom.size + 1) if f(x) == 1]
    sub = induced_substructure(f.dom, pre)
    return 1 if is_inflation_of(sub, cycle) is not None else 2


def verify_tournament_counterexample(
    t: Structure, max_size: int = 10
) -> CounterexampleReport:
    """Replay the no-arrow argument on t.

    Colors hom(t, A) by whether the preimage of 1 inflates the 3-cycle, then
    checks that composing each factorization through the seven-vertex middle
    object with the two pinned onto-maps yields both colors; cross-checks that
    the arrow checker reports FAILS on the same instance.
    """
    _require_tournament(t, "the tournament")
    small = build_named("thm7-A")
    middle = build_named("thm7-B")
    if t.size > max_size:
        raise BudgetError(
            f"tournament has {t.size} vertices, over the budget of {max_size}; "
            "raise max_size to search anyway"
        )
    cycle = build_named("tournament-c3")
    phi = Morphism(middle, small, PHI)
    psi = Morphism(middle, small, PSI)
    for name, m in (("phi", phi), ("psi", psi)):
        fail = check_morphism(m, KIND)
        if fail is not None:
            raise RuntimeError(f"pinned map {name} is not a morphism: {fail}")

    hom_ta = hom_set(t, small, KIND)
    hom_tb = hom_set(t, middle, KIND)
    problem = ArrowProblem(t, middle, small, 2, KIND)
    verdict = check_arrow(problem)
    if not hom_tb:
        return CounterexampleReport(
            completion=_COMPLETION_NOTE,
            num_colorings=len(hom_ta),
            num_factorizations=0,
            rows=(),
            every_factorization_bichromatic=True,
            arrow_verdict=verdict,
            degenerate=True,
        )
    rows = []
    all_bichromatic = True
    for w in hom_tb:
        c_phi = _chi(phi.after(w), cycle)
        c_psi = _chi(psi.after(w), cycle)
        rows.append((w.map, c_phi, c_psi))
        if not (c_phi == 1 and c_psi == 2):
            all_bichromatic = False
    return CounterexampleReport(
        completion=_COMPLETION_NOTE,
        num_colorings=len(hom_ta),
        num_factorizations=len(hom_tb),
        rows=tuple(rows),
        every_factorization_bichromatic=all_bichromatic,
        arrow_verdict=verdict,
    )
