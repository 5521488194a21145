"""Pinned reference facts and the driver that replays them.

These are the worked fixtures the library is calibrated against: the
quotient-map pair on the reflexive 3- and 4-cycles with its induced edge
tables, the eighteen critical cell pairs of the two pinned tournaments, the
emptiness of the 3x4 matrix scan, and the no-arrow tournament argument.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .constructions import build_named, graph_to_hypergraph
from .structures import Failure, Morphism, check_morphism, induced_edge_map
from .tournaments import (
    CriticalPair,
    critical_pairs,
    matrix_scan,
    verify_tournament_counterexample,
)
from .tuplecalc import mat, sal_sorted_edges, tp, tup

__all__ = [
    "F_MAP",
    "G_MAP",
    "EDGE_TABLE_F",
    "EDGE_TABLE_G",
    "EXPECTED_CRITICAL_PAIRS",
    "render_edge_table",
    "Check",
    "Report",
    "verify_paper",
]

F_MAP = (1, 1, 2, 3)
G_MAP = (1, 2, 3, 3)

# induced edge maps on the 4-cycle's edges in sal order (1 2 3 4 12 23 14 34)
EDGE_TABLE_F = ("1->1", "2->1", "3->2", "4->3", "12->1", "23->12", "14->13", "34->23")
EDGE_TABLE_G = ("1->1", "2->2", "3->3", "4->3", "12->12", "23->23", "14->13", "34->3")

EXPECTED_CRITICAL_PAIRS = tuple(
    CriticalPair(ij, uv)
    for ij, uv in (
        ((1, 1), (2, 3)),
        ((1, 1), (3, 2)),
        ((1, 1), (3, 4)),
        ((1, 2), (2, 1)),
        ((1, 2), (3, 3)),
        ((1, 2), (3, 4)),
        ((1, 3), (2, 2)),
        ((1, 3), (3, 1)),
        ((1, 3), (3, 4)),
        ((1, 4), (2, 1)),
        ((1, 4), (2, 2)),
        ((1, 4), (2, 3)),
        ((2, 1), (3, 3)),
        ((2, 2), (3, 1)),
        ((2, 3), (3, 2)),
        ((2, 4), (3, 1)),
        ((2, 4), (3, 2)),
        ((2, 4), (3, 3)),
    )
)


def _render_edge(e: frozenset[int]) -> str:
    return "".join(str(v) for v in sorted(e))


def render_edge_table(f: Morphism) -> tuple[str, ...]:
    """The induced edge map as 'edge->image' rows, domain edges in sal order."""
    table = induced_edge_map(f)
    if isinstance(table, Failure):
        raise RuntimeError(f"not a hypergraph homomorphism: {table}")
    return tuple(
        f"{_render_edge(e)}->{_render_edge(table[e])}"
        for e in sal_sorted_edges(f.dom.edges)
    )


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class Report:
    checks: tuple[Check, ...]

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)


def _check_tuple_roundtrip() -> Check:
    count = 0
    for size in range(1, 5):
        chain = range(1, size + 1)
        for n in range(1, 4):
            for a in itertools.product(chain, repeat=n):
                if tup(tp(a), mat(a)) != a:
                    return Check("tuple-roundtrip", False, f"failed on {a}")
                count += 1
    return Check("tuple-roundtrip", True, f"{count} tuples")


def verify_paper() -> Report:
    """Recompute every pinned reference fact and report pass/fail per fact."""
    checks = [_check_tuple_roundtrip()]

    c3 = graph_to_hypergraph(build_named("cycle3"))
    c4 = graph_to_hypergraph(build_named("cycle4"))
    f = Morphism(c4, c3, F_MAP)
    g = Morphism(c4, c3, G_MAP)
    kind = "hypergraph-strong-rigid-quotient"

    fail_f = check_morphism(f, kind)
    checks.append(
        Check("quotient-example-pass", fail_f is None, str(fail_f or "strong rigid quotient"))
    )
    fail_g = check_morphism(g, kind)
    expected_witness = (frozenset({1, 3}), frozenset({2, 3}))
    g_ok = (
        fail_g is not None
        and fail_g.clause == "min-preimages out of order on edges"
        and fail_g.witness[:2] == expected_witness
    )
    checks.append(Check("quotient-example-fail", g_ok, str(fail_g)))

    table_f = render_edge_table(f)
    checks.append(Check("edge-table-f", table_f == EDGE_TABLE_F, " ".join(table_f)))
    table_g = render_edge_table(g)
    checks.append(Check("edge-table-g", table_g == EDGE_TABLE_G, " ".join(table_g)))

    pairs = critical_pairs(build_named("tournament-c3"), build_named("tournament-c3plus"))
    checks.append(
        Check(
            "critical-pairs",
            tuple(pairs) == EXPECTED_CRITICAL_PAIRS,
            f"{len(pairs)} pairs",
        )
    )

    matrices = matrix_scan(EXPECTED_CRITICAL_PAIRS, 3, 4)
    checks.append(
        Check("matrix-scan-empty", matrices == [], f"{len(matrices)} matrices satisfied")
    )

    report = verify_tournament_counterexample(build_named("thm7-B"))
    checks.append(
        Check(
            "no-arrow-tournament",
            report.passed,
            f"{report.num_factorizations} factorizations, "
            f"arrow holds={report.arrow_verdict.holds}",
        )
    )
    return Report(tuple(checks))
