"""Arrow checking over hom-sets of surjective morphisms, backed by a
backtracking hypergraph-coloring solver.

An arrow instance asks: can the hom-set from the big object to the small one
be k-colored so that no middle-object factorization has a monochromatic set of
composites?  If no such coloring exists the arrow HOLDS; otherwise the found
coloring is a re-checkable FAILS witness.
"""

from __future__ import annotations

import random
from collections.abc import Iterable, Iterator
from dataclasses import dataclass

from .constructions import empty_reflexive_binary, tensor_erst, uniform_metric
from .orders import Chain, InputError
from .structures import Morphism, Object, enum_morphisms

__all__ = [
    "ArrowProblem",
    "ArrowVerdict",
    "is_k_colorable",
    "check_arrow",
    "verify_verdict",
    "search_ramsey_object",
    "object_generator",
    "GENERATOR_NAMES",
    "clear_hom_cache",
]


@dataclass(frozen=True)
class ArrowProblem:
    """The data of one arrow instance: color hom(big, small), look for a
    factorization through middle whose composites are monochromatic."""

    big: Object
    middle: Object
    small: Object
    colors: int
    kind: str

    def __post_init__(self) -> None:
        if self.colors < 1:
            raise InputError("color count must be at least 1")


@dataclass(frozen=True)
class ArrowVerdict:
    holds: bool
    coloring: tuple[int, ...] | None = None  # colors 1..k over hom(big, small)
    degenerate: bool = False
    detail: str = ""


_hom_cache: dict[tuple, list[Morphism]] = {}


def hom_set(A: Object, B: Object, kind: str) -> list[Morphism]:
    """Morphisms A -> B of the kind, cached by the objects' canonical values."""
    key = (A, B, kind)
    if key not in _hom_cache:
        _hom_cache[key] = enum_morphisms(A, B, kind)
    return _hom_cache[key]


def clear_hom_cache() -> None:
    _hom_cache.clear()


# ---------------------------------------------------------------------------
# coloring solver
# ---------------------------------------------------------------------------


@dataclass
class _SolverStats:
    nodes: int = 0


def _normalize_edges(num_vertices: int, edges: Iterable[Iterable[int]]) -> list[tuple[int, ...]]:
    seen: set[frozenset[int]] = set()
    for e in edges:
        fe = frozenset(e)
        if not fe:
            raise InputError("edges must be nonempty")
        for v in fe:
            if not 0 <= v < num_vertices:
                raise InputError(f"vertex {v} is outside 0..{num_vertices - 1}")
        seen.add(fe)
    return sorted(tuple(sorted(e)) for e in seen)


def is_k_colorable(
    num_vertices: int,
    edges: Iterable[Iterable[int]],
    k: int,
    seed: int | None = None,
    stats: _SolverStats | None = None,
) -> list[int] | None:
    """A k-coloring (colors 1..k) with no monochromatic edge, or None.

    Backtracking with unit propagation on nearly-complete edges, a first-fail
    vertex choice (most edges about to become critical), and color symmetry
    breaking: a fresh color may be used only when all smaller colors already
    appear.  The seed shuffles tie-breaking only, so the verdict is seed
    independent; with seed None the search is canonical and deterministic.
    """
    if k < 1:
        raise InputError("color count must be at least 1")
    edge_list = _normalize_edges(num_vertices, edges)
    if any(len(e) == 1 for e in edge_list):
        return None  # a one-vertex edge is monochromatic under every coloring
    if not edge_list:
        return [1] * num_vertices
    if k == 1:
        return None
    if stats is None:
        stats = _SolverStats()

    rng = random.Random(seed) if seed is not None else None
    full = (1 << k) - 1
    color = [0] * num_vertices  # 0 = unassigned, else 1..k
    domain = [full] * num_vertices
    member: list[list[int]] = [[] for _ in range(num_vertices)]
    for idx, e in enumerate(edge_list):
        for v in e:
            member[v].append(idx)
    used_mask = [0] * len(edge_list)  # colors present among assigned vertices
    open_count = [len(e) for e in edge_list]
    order = list(range(num_vertices))
    if rng is not None:
        rng.shuffle(order)

    trail: list[tuple[int, int]] = []  # (vertex, previous domain) for undo

    def set_domain(v: int, new: int) -> bool:
        trail.append((v, domain[v]))
        domain[v] = new
        return new != 0

    def assign(v: int, c: int, queue: list[tuple[int, int]]) -> bool:
        # counters must be updated for every incident edge even after a conflict,
        # so that the uniform undo in undo_to stays exact
        color[v] = c
        set_domain(v, 1 << (c - 1))
        bit = 1 << (c - 1)
        ok = True
        for idx in member[v]:
            used_mask[idx] |= bit
            open_count[idx] -= 1
            if not ok:
                continue
            mask = used_mask[idx]
            if mask & (mask - 1) == 0:  # all assigned vertices share one color
                if open_count[idx] == 0:
                    ok = False
                elif open_count[idx] == 1:
                    w = next(u for u in edge_list[idx] if color[u] == 0)
                    if not set_domain(w, domain[w] & ~mask):
                        ok = False
                    elif domain[w] & (domain[w] - 1) == 0:
                        queue.append((w, domain[w].bit_length()))
        return ok

    def recompute_used(idx: int) -> None:
        mask = 0
        for u in edge_list[idx]:
            if color[u]:
                mask |= 1 << (color[u] - 1)
        used_mask[idx] = mask

    def undo_to(mark: int, assigned: list[tuple[int, int]]) -> None:
        touched: set[int] = set()
        for v, _ in reversed(assigned):
            color[v] = 0
            for idx in member[v]:
                open_count[idx] += 1
                touched.add(idx)
        while len(trail) > mark:
            v, prev = trail.pop()
            domain[v] = prev
        for idx in touched:
            recompute_used(idx)

    def propagate(v: int, c: int) -> tuple[bool, list[tuple[int, int]]]:
        queue: list[tuple[int, int]] = [(v, c)]
        assigned: list[tuple[int, int]] = []
        while queue:
            w, cw = queue.pop()
            if color[w]:
                if color[w] != cw:
                    return False, assigned
                continue
            assigned.append((w, cw))
            if not assign(w, cw, queue):
                return False, assigned
        return True, assigned

    def pick_vertex() -> int | None:
        best, best_score = None, None
        for v in order:
            if color[v]:
                continue
            critical = 0
            for idx in member[v]:
                mask = used_mask[idx]
                if open_count[idx] <= 2 and mask and mask & (mask - 1) == 0:
                    critical += 1
            score = (critical, len(member[v]))
            if best_score is None or score > best_score:
                best, best_score = v, score
        return best

    def solve(assigned_total: int, max_used: int) -> bool:
        stats.nodes += 1
        if assigned_total == num_vertices:
            return True
        v = pick_vertex()
        if v is None:
            return True
        limit = min(max_used + 1, k)
        for c in range(1, limit + 1):
            if not domain[v] & (1 << (c - 1)):
                continue
            mark = len(trail)
            ok, assigned = propagate(v, c)
            if ok:
                new_used = max(max_used, c, *(cc for _, cc in assigned))
                if solve(assigned_total + len(assigned), new_used):
                    return True
            undo_to(mark, assigned)
        return False

    if solve(0, 0):
        return [color[v] for v in range(num_vertices)]
    return None


# ---------------------------------------------------------------------------
# arrow checking
# ---------------------------------------------------------------------------


def composite_edges(
    problem: ArrowProblem,
) -> tuple[list[Morphism], list[Morphism], list[Morphism], list[tuple[int, ...]]]:
    """The three hom-sets of an instance and, per factorization w, the set of
    indices of its composites inside hom(big, small); duplicate sets are merged."""
    hom_ba = hom_set(problem.middle, problem.small, problem.kind)
    if not hom_ba:
        raise InputError("ill-posed instance: no morphisms from middle to small")
    hom_ca = hom_set(problem.big, problem.small, problem.kind)
    hom_cb = hom_set(problem.big, problem.middle, problem.kind)
    index = {f.map: i for i, f in enumerate(hom_ca)}
    edges: set[frozenset[int]] = set()
    for w in hom_cb:
        edge = set()
        for g in hom_ba:
            composite = g.after(w)
            if composite.map not in index:
                raise RuntimeError(
                    f"composition escaped the hom-set for kind {problem.kind!r}: "
                    f"{g.map} after {w.map}"
                )
            edge.add(index[composite.map])
        edges.add(frozenset(edge))
    return hom_ca, hom_cb, hom_ba, sorted(tuple(sorted(e)) for e in edges)


def check_arrow(problem: ArrowProblem, seed: int | None = None) -> ArrowVerdict:
    """Decide the arrow by reduction to hypergraph colorability.

    HOLDS when no proper coloring of hom(big, small) exists; otherwise FAILS
    with the found coloring, under which every factorization's composite set
    meets at least two color classes.
    """
    hom_ca, hom_cb, hom_ba, edges = composite_edges(problem)
    if not hom_cb:
        return ArrowVerdict(
            holds=False,
            coloring=(1,) * len(hom_ca),
            degenerate=True,
            detail="no factorizations through the middle object",
        )
    stats = _SolverStats()
    coloring = is_k_colorable(len(hom_ca), edges, problem.colors, seed=seed, stats=stats)
    if coloring is None:
        return ArrowVerdict(
            holds=True,
            detail=(
                f"exhausted {stats.nodes} nodes over {len(hom_ca)} morphisms "
                f"and {len(edges)} composite sets"
            ),
        )
    return ArrowVerdict(holds=False, coloring=tuple(coloring))


def verify_verdict(problem: ArrowProblem, verdict: ArrowVerdict, seed: int | None = None) -> bool:
    """Re-check a verdict from its witness data.

    A FAILS witness must color every composite set with at least two colors; a
    HOLDS verdict is re-validated by a second exhaustion with shuffled branching.
    """
    hom_ca, hom_cb, hom_ba, edges = composite_edges(problem)
    if verdict.holds:
        return is_k_colorable(len(hom_ca), edges, problem.colors, seed=seed) is None
    coloring = verdict.coloring
    if coloring is None or len(coloring) != len(hom_ca):
        return False
    if any(not 1 <= c <= problem.colors for c in coloring):
        return False
    if not hom_cb:
        return verdict.degenerate
    return all(len({coloring[i] for i in e}) >= 2 for e in edges)


# ---------------------------------------------------------------------------
# object streams and Ramsey-object search
# ---------------------------------------------------------------------------


def chain_stream(start: int = 1) -> Iterator[Chain]:
    n = start
    while True:
        yield Chain(n)
        n += 1


def empty_reflexive_stream(start: int = 1) -> Iterator:
    n = start
    while True:
        yield empty_reflexive_binary(n)
        n += 1


def uniform_metric_stream(delta: float, start: int = 1) -> Iterator:
    n = start
    while True:
        yield uniform_metric(n, delta)
        n += 1


def tensor_stream(r: int, start: int = 1) -> Iterator:
    n = start
    while True:
        yield tensor_erst(r, n)
        n += 1


GENERATOR_NAMES = ("chains", "empty-reflexive", "uniform-metric", "tensor")


def object_generator(name: str, start: int = 1, delta: float = 1.0, r: int = 2) -> Iterator:
    """A stream of candidate objects of one family, by increasing size."""
    if name == "chains":
        return chain_stream(start)
    if name == "empty-reflexive":
        return empty_reflexive_stream(start)
    if name == "uniform-metric":
        return uniform_metric_stream(delta, start)
    if name == "tensor":
        return tensor_stream(r, start)
    raise InputError(f"unknown generator {name!r}; known: {GENERATOR_NAMES}")


@dataclass(frozen=True)
class SearchResult:
    found: Object | None
    index: int  # candidates consumed (index of the hit, or the bound)
    verdict: ArrowVerdict | None


def search_ramsey_object(
    middle: Object,
    small: Object,
    colors: int,
    kind: str,
    generator: Iterable[Object],
    bound: int,
    seed: int | None = None,
) -> SearchResult:
    """Scan a stream of candidates for the first object whose arrow HOLDS."""
    for idx, candidate in enumerate(generator):
        if idx >= bound:
            break
        verdict = check_arrow(ArrowProblem(candidate, middle, small, colors, kind), seed=seed)
        if verdict.holds:
            return SearchResult(candidate, idx, verdict)
    return SearchResult(None, bound, None)
