"""Shared brute-force oracles and small-object generators for the test suite.

Oracles here are deliberately dumb and independent of the library's search
paths: plain filters over full map spaces and full coloring spaces.
"""

from __future__ import annotations

import itertools
import random

import numpy as np

from dualramsey.structures import (
    BINARY_EDGE,
    Hypergraph,
    Morphism,
    Signature,
    Structure,
    check_morphism,
)


def all_maps(n: int, m: int):
    """Every map array from an n-universe into an m-universe."""
    return itertools.product(range(1, m + 1), repeat=n)


def naive_enum_morphisms(A, B, kind: str) -> list[tuple[int, ...]]:
    """Filter the full |B|^|A| map space through check_morphism."""
    out = []
    for m in all_maps(A.size, B.size):
        if check_morphism(Morphism(A, B, m), kind) is None:
            out.append(m)
    return out


def all_binary_erst(n: int, sig: Signature = BINARY_EDGE) -> list[Structure]:
    """Every structure on 1..n whose binary relation is the diagonal plus some
    set of strictly increasing pairs."""
    name = sig.symbols[0][0]
    incr = [(x, y) for x in range(1, n + 1) for y in range(x + 1, n + 1)]
    diag = {(a, a) for a in range(1, n + 1)}
    out = []
    for bits in range(1 << len(incr)):
        rel = set(diag)
        for i, p in enumerate(incr):
            if bits >> i & 1:
                rel.add(p)
        out.append(Structure.make(sig, n, {name: rel}))
    return out


def all_reflexive_binary(n: int) -> list[Structure]:
    """Every reflexive binary structure on 1..n (loops plus any off-diagonal set)."""
    offdiag = [(x, y) for x in range(1, n + 1) for y in range(1, n + 1) if x != y]
    diag = {(a, a) for a in range(1, n + 1)}
    out = []
    for bits in range(1 << len(offdiag)):
        rel = set(diag)
        for i, p in enumerate(offdiag):
            if bits >> i & 1:
                rel.add(p)
        out.append(Structure.make(BINARY_EDGE, n, {"edge": rel}))
    return out


def random_hypergraph(rng: random.Random, max_size: int = 6) -> Hypergraph:
    n = rng.randint(2, max_size)
    r = rng.randint(2, min(3, n))
    edges = {frozenset({v}) for v in range(1, n + 1)}
    pool = [frozenset(c) for c in itertools.combinations(range(1, n + 1), r)]
    for e in pool:
        if rng.random() < 0.5:
            edges.add(e)
    return Hypergraph(n, r, frozenset(edges))


def random_reflexive_structure(rng: random.Random, max_size: int = 4) -> Structure:
    n = rng.randint(1, max_size)
    rel = {(a, a) for a in range(1, n + 1)}
    for x in range(1, n + 1):
        for y in range(1, n + 1):
            if x != y and rng.random() < 0.4:
                rel.add((x, y))
    return Structure.make(BINARY_EDGE, n, {"edge": rel})


def brute_force_coloring(num_vertices: int, edges, k: int):
    """First proper coloring in lexicographic order, by scanning all k^V maps."""
    edge_list = [tuple(e) for e in edges]
    for col in itertools.product(range(1, k + 1), repeat=num_vertices):
        if all(len({col[v] for v in e}) >= 2 for e in edge_list):
            return col
    return None


def exhaustive_two_colorable(num_vertices: int, edges) -> bool:
    """Whether any 2-coloring is proper, by enumerating all 2^V bitmask
    colorings (vectorized; the top vertex's color is fixed, a pure symmetry)."""
    masks = [sum(1 << v for v in e) for e in edges]
    if any(len(tuple(e)) == 1 for e in edges):
        return False
    if not masks:
        return True
    low_bits = min(16, num_vertices)
    hi_bits = num_vertices - low_bits
    xl = np.arange(1 << low_bits, dtype=np.uint32)
    lowmask = (1 << low_bits) - 1

    iszero, isfull = {}, {}
    for m in masks:
        ml = m & lowmask
        if ml and ml not in iszero:
            iszero[ml] = (xl & ml) == 0
            isfull[ml] = (xl & ml) == ml

    base = np.ones(1 << low_bits, dtype=bool)
    cross, upper_only = [], []
    for m in masks:
        ml, mu = m & lowmask, m >> low_bits
        if mu == 0:
            base &= ~(iszero[ml] | isfull[ml])
        elif ml == 0:
            upper_only.append(mu)
        else:
            cross.append((ml, mu))
    if hi_bits == 0:
        if num_vertices == low_bits and num_vertices > 0:
            # fix the top vertex's color to halve the space
            keep = (xl >> (num_vertices - 1)) == 0
            return bool((base & keep).any())
        return bool(base.any())

    for xu in range(1 << (hi_bits - 1)):
        if any((xu & mu) in (0, mu) for mu in upper_only):
            continue
        alive = base.copy()
        for ml, mu in cross:
            p = xu & mu
            if p == 0:
                alive &= ~iszero[ml]
            elif p == mu:
                alive &= ~isfull[ml]
            if not alive.any():
                break
        if alive.any():
            return True
    return False
