"""Brute-force reference implementations used only by the tests.

None of these share code with the library beyond the plain data types.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction
from math import factorial

from tournament_limits.kernel import StepKernel
from tournament_limits.tournament import Digraph, Tournament


def arcs_of(F) -> set:
    if isinstance(F, Tournament):
        return {(i, j) for i in range(F.n) for j in range(F.n) if F.beats[i][j]}
    return set(F.arcs)


def brute_counts(F, G) -> tuple:
    """(hom, inj, ind) by enumerating every map V(F) -> V(G)."""
    fa, ga = arcs_of(F), arcs_of(G)
    k, n = F.n, G.n
    hom = inj = ind = 0
    for phi in itertools.product(range(n), repeat=k):
        if not all((phi[i], phi[j]) in ga for i, j in fa):
            continue
        hom += 1
        if len(set(phi)) < k:
            continue
        inj += 1
        if all(((i, j) in fa) == ((phi[i], phi[j]) in ga) for i in range(k) for j in range(k)):
            ind += 1
    return hom, inj, ind


def falling(n: int, k: int) -> int:
    return factorial(n) // factorial(n - k) if k <= n else 0


def brute_t_ind(F, G) -> Fraction:
    """Induced density by enumerating injections only."""
    fa, ga = arcs_of(F), arcs_of(G)
    k = F.n
    hits = 0
    for phi in itertools.permutations(range(G.n), k):
        if all(((i, j) in fa) == ((phi[i], phi[j]) in ga) for i in range(k) for j in range(k)):
            hits += 1
    return Fraction(hits, falling(G.n, k))


def reachability_classes(G: Tournament) -> list:
    """Mutual-reachability classes ordered by how many vertices they reach (most first)."""
    n = G.n
    reach = [{v} for v in range(n)]
    changed = True
    while changed:
        changed = False
        for v in range(n):
            new = set(reach[v])
            for w in range(n):
                if G.beats[v][w]:
                    new |= reach[w]
            if new != reach[v]:
                reach[v] = new
                changed = True
    classes = {}
    for v in range(n):
        key = frozenset(w for w in reach[v] if v in reach[w])
        classes[key] = None
    return sorted((sorted(c) for c in classes), key=lambda c: -len(reach[c[0]]))


def brute_t_step(F, W: StepKernel) -> Fraction:
    """Sum over all block maps, straight from the integral formula."""
    total = Fraction(0)
    arcs = arcs_of(F)
    for phi in itertools.product(range(W.m), repeat=F.n):
        term = Fraction(1)
        for v in range(F.n):
            term *= W.weights[phi[v]]
        for i, j in arcs:
            term *= W.values[phi[i]][phi[j]]
        total += term
    return total


def lagrange_at_zero(points) -> Fraction:
    total = Fraction(0)
    for i, (hi, vi) in enumerate(points):
        term = Fraction(vi)
        for j, (hj, _) in enumerate(points):
            if i != j:
                term *= Fraction(-hj) / (hi - hj)
        total += term
    return total


def kernel_closed_subsets(W: StepKernel) -> list:
    """Proper block subsets B with zero value from B to its complement."""
    out = []
    for size in range(1, W.m):
        for B in itertools.combinations(range(W.m), size):
            if all(W.values[i][j] == 0 for i in B for j in range(W.m) if j not in B):
                out.append(frozenset(B))
    return out


def random_pattern(k: int, rng: random.Random, p_arc: float = 0.7) -> Digraph:
    """Loop-free digraph without 2-cycles."""
    arcs = set()
    for i in range(k):
        for j in range(i + 1, k):
            if rng.random() < p_arc:
                arcs.add((i, j) if rng.random() < 0.5 else (j, i))
    return Digraph(k, frozenset(arcs))


def random_digraph(k: int, rng: random.Random) -> Digraph:
    """Arbitrary digraph, loops and 2-cycles allowed."""
    arcs = {(i, j) for i in range(k) for j in range(k) if rng.random() < 0.35}
    return Digraph(k, frozenset(arcs))
