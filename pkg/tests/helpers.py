"""Shared test utilities: random graphs and independent oracles.

Everything here is deliberately naive so it cannot share bugs with the
library code it checks.
"""

from __future__ import annotations

import itertools
import random

import evenfactor as ef


def random_graph(rng: random.Random, n: int, p: float) -> ef.Graph:
    return ef.build_graph(
        n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def random_graph_edge_capped(rng: random.Random, n: int, p: float,
                             cap: int) -> ef.Graph:
    g = random_graph(rng, n, p)
    if g.m <= cap:
        return g
    kept = rng.sample(sorted(g.edges), cap)
    return ef.build_graph(n, kept)


def exhaustive_matching_size(n: int, edges: list[tuple[int, int]]) -> int:
    """Maximum matching cardinality by memoized recursion over free-vertex sets."""
    adjmask = [0] * n
    for u, v in edges:
        adjmask[u] |= 1 << v
        adjmask[v] |= 1 << u
    memo: dict[int, int] = {}

    def best(free: int) -> int:
        if not free:
            return 0
        cached = memo.get(free)
        if cached is not None:
            return cached
        low = free & -free
        v = low.bit_length() - 1
        rest = free & ~low
        res = best(rest)  # leave v unmatched
        nbrs = adjmask[v] & rest
        while nbrs:
            w = nbrs & -nbrs
            res = max(res, 1 + best(rest & ~w))
            nbrs ^= w
        memo[free] = res
        return res

    return best((1 << n) - 1)


def brute_max_deficiency(g: ef.Graph, a: int, b: int):
    """Independent maximizer over all 3^n disjoint (S, T) assignments.

    Returns (value, S, T) with the same tie-break the library promises:
    lexicographically smallest (|S|, |T|, S, T) among maximizers.
    """
    best = None
    for assign in itertools.product(range(3), repeat=g.n):
        s = tuple(v for v in range(g.n) if assign[v] == 1)
        t = tuple(v for v in range(g.n) if assign[v] == 2)
        val = ef.even_factor_deficiency(g, a, b, s, t)
        key = (-val, len(s), len(t), s, t)
        if best is None or key < best:
            best = key
    return -best[0], best[3], best[4]


def encode_factor_as_perfect_matching(g: ef.Graph, a: int, b: int,
                                      factor: ef.Factor) -> set[tuple[int, int]]:
    """Build the gadget matching that an even [a,b]-factor induces.

    Chosen host edges match their twin gadget edge, (b - d_F(v))/2 loops per
    vertex match their own pair, and the leftover ports pair off with cores.
    The result must be a perfect matching of the instance.
    """
    mg = ef.loop_augment(g, a, b)
    inst = ef.tutte_gadget(mg, b)
    twin = {}
    loop_edges: dict[int, list[tuple[int, int]]] = {v: [] for v in range(g.n)}
    for e, info in inst.decode.items():
        if info[0] == "edge":
            twin[info[1]] = e
        else:
            loop_edges[info[1]].append(e)
    matched: set[tuple[int, int]] = set()
    used: set[int] = set()

    def take(e: tuple[int, int]) -> None:
        assert e[0] not in used and e[1] not in used
        matched.add(e)
        used.update(e)

    for host_edge in sorted(factor.edges):
        take(twin[host_edge])
    for v in range(g.n):
        needed = (b - factor.degrees[v]) // 2
        for e in sorted(loop_edges[v])[:needed]:
            take(e)
        free_ports = [p for p in inst.ports[v] if p not in used]
        assert len(free_ports) == len(inst.cores[v])
        for p, c in zip(free_ports, inst.cores[v]):
            take((min(p, c), max(p, c)))

    edge_set = set(inst.edges)
    assert matched <= edge_set
    assert len(used) == inst.n_nodes
    return matched
