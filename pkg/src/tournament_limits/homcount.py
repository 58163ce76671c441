"""Exact homomorphism counts and densities for finite digraphs.

``F`` (pattern) and ``G`` (target) are anything exposing ``n``,
``adjacency`` and ``arcs``: :class:`~.tournament.Digraph` or
:class:`~.tournament.Tournament`.  All densities are :class:`fractions.Fraction`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Sequence

from .errors import NotAPartition, PatternTooLarge
from .tournament import (
    Digraph,
    Tournament,
    cycle_digraph,
    falling_factorial,
    path_digraph,
    scores,
    tournament_completions,
    transitive,
)


def _search_order(F) -> list:
    # visit vertices so that each new one touches already placed ones when possible
    n = F.n
    nbrs = [set() for _ in range(n)]
    for i, j in F.arcs:
        nbrs[i].add(j)
        nbrs[j].add(i)
    order, seen = [], set()
    for start in range(n):
        if start in seen:
            continue
        stack = [start]
        while stack:
            v = stack.pop()
            if v in seen:
                continue
            seen.add(v)
            order.append(v)
            stack.extend(sorted(nbrs[v] - seen, reverse=True))
    return order


def _count(F, G, injective: bool, induced: bool) -> int:
    fa, ga = F.adjacency, G.adjacency
    k, n = F.n, G.n
    if k == 0:
        return 1
    full = (1 << n) - 1
    out_mask = [sum(1 << x for x in range(n) if ga[y][x]) for y in range(n)]
    in_mask = [sum(1 << x for x in range(n) if ga[x][y]) for y in range(n)]
    loops = sum(1 << x for x in range(n) if ga[x][x])
    order = _search_order(F)
    # per position: (earlier position, arc earlier->v, arc v->earlier) and loop flag
    links, loop_flag = [], []
    for p, v in enumerate(order):
        links.append([(q, fa[order[q]][v], fa[v][order[q]]) for q in range(p)])
        loop_flag.append(fa[v][v])
    phi = [0] * k

    def candidates(p, used):
        mask = full & ~used if injective else full
        if loop_flag[p]:
            mask &= loops
        elif induced:
            mask &= ~loops
        for q, fwd, back in links[p]:
            y = phi[q]
            if fwd:
                mask &= out_mask[y]
            elif induced:
                mask &= ~out_mask[y]
            if back:
                mask &= in_mask[y]
            elif induced:
                mask &= ~in_mask[y]
            if not mask:
                break
        return mask

    def rec(p, used):
        mask = candidates(p, used)
        if p == k - 1:
            return bin(mask).count("1")
        total = 0
        while mask:
            low = mask & -mask
            phi[p] = low.bit_length() - 1
            total += rec(p + 1, used | low)
            mask ^= low
        return total

    return rec(0, 0)


def hom_count(F, G) -> int:
    """Number of maps ``V(F) -> V(G)`` sending arcs to arcs."""
    return _count(F, G, injective=False, induced=False)


def inj_count(F, G) -> int:
    return _count(F, G, injective=True, induced=False)


def ind_count(F, G) -> int:
    """Injective maps that preserve both arcs and non-arcs (loops included)."""
    return _count(F, G, injective=True, induced=True)


@dataclass(frozen=True)
class DensityTriple:
    t: Fraction
    t_inj: Fraction
    t_ind: Fraction


def densities(F, G) -> DensityTriple:
    k, n = F.n, G.n
    if k > n:
        raise PatternTooLarge(f"pattern has {k} vertices but target only {n}")
    ff = falling_factorial(n, k)
    return DensityTriple(
        t=Fraction(hom_count(F, G), n**k),
        t_inj=Fraction(inj_count(F, G), ff),
        t_ind=Fraction(ind_count(F, G), ff),
    )


def quotient(F, partition: Sequence[Sequence[int]]) -> Digraph:
    """Quotient digraph: one vertex per block, in the order the blocks are given."""
    blocks = [list(b) for b in partition]
    flat = [v for b in blocks for v in b]
    if any(not b for b in blocks) or sorted(flat) != list(range(F.n)):
        raise NotAPartition(f"{partition} is not a partition of 0..{F.n - 1}")
    where = {v: bi for bi, b in enumerate(blocks) for v in b}
    return Digraph(len(blocks), frozenset((where[i], where[j]) for i, j in F.arcs))


def set_partitions(items: Sequence) -> list:
    """All set partitions of ``items`` (Bell number many)."""
    items = list(items)
    if not items:
        return [[]]
    first, rest = items[0], items[1:]
    out = []
    for part in set_partitions(rest):
        out.append([[first]] + part)
        for i in range(len(part)):
            out.append(part[:i] + [[first] + part[i]] + part[i + 1 :])
    return out


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    lhs: Fraction
    rhs: Fraction
    ok: bool


@dataclass(frozen=True)
class CountIdentityReport:
    checks: tuple

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def __getitem__(self, name: str) -> IdentityCheck:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)


# general-digraph superset enumeration is 2**(k*k - |E|); keep it small
SUPERSET_CAP = 3


def _supersets(F, tournament_target: bool):
    if tournament_target:
        yield from tournament_completions(F)
        return
    if F.n > SUPERSET_CAP:
        raise PatternTooLarge(
            f"superset enumeration over general digraphs is capped at {SUPERSET_CAP} vertices"
        )
    missing = [(i, j) for i in range(F.n) for j in range(F.n) if (i, j) not in F.arcs]
    for mask in range(1 << len(missing)):
        extra = {missing[b] for b in range(len(missing)) if mask >> b & 1}
        yield Digraph(F.n, F.arcs | extra)


def verify_count_identities(F, G) -> CountIdentityReport:
    """Check the superset and partition identities relating t, t_inj and t_ind.

    ``injective-vs-induced``: t_inj(F,G) equals the sum of t_ind(F',G) over
    supersets F' of F on the same vertex set (tournaments only when G is one).
    ``partition``: hom(F,G) equals the sum of inj(F/P,G) over set partitions P.
    ``hom-vs-inj``: |t_inj - t| is at most C(k,2)/v(G); lhs holds the exact
    difference, rhs the bound.
    """
    k, n = F.n, G.n
    d = densities(F, G)
    is_tour = isinstance(G, Tournament) or G.is_tournament()
    sup = sum((densities(Fp, G).t_ind for Fp in _supersets(F, is_tour)), Fraction(0))
    part_sum = sum(inj_count(quotient(F, P), G) for P in set_partitions(range(k)))
    hom = hom_count(F, G)
    diff = d.t_inj - d.t
    bound = Fraction(comb(k, 2), n) if n else Fraction(0)
    return CountIdentityReport(
        (
            IdentityCheck("injective-vs-induced", d.t_inj, sup, d.t_inj == sup),
            IdentityCheck("partition", Fraction(hom), Fraction(part_sum), hom == part_sum),
            IdentityCheck("hom-vs-inj", diff, bound, abs(diff) <= bound),
        )
    )


@dataclass(frozen=True)
class TransitivityReport:
    """Nine equivalent characterisations of transitivity, each evaluated on its own."""

    n: int
    transitive: bool
    acyclic: bool
    no_c3: bool
    orderable: bool
    score_criterion: bool
    paths_all_k: bool
    paths_p3: bool
    transitive_all_k: bool
    transitive_t3: bool
    c3_count: int
    score_sum: int
    score_target: int
    intransitive_triple: tuple | None = None
    cycle: tuple | None = None
    order: tuple | None = None
    path_copies: tuple = ()
    transitive_copies: tuple = ()
    note: str = ""

    CRITERIA = (
        "transitive",
        "acyclic",
        "no_c3",
        "orderable",
        "score_criterion",
        "paths_all_k",
        "paths_p3",
        "transitive_all_k",
        "transitive_t3",
    )

    @property
    def verdicts(self) -> dict:
        return {c: getattr(self, c) for c in self.CRITERIA}

    @property
    def all_agree(self) -> bool:
        return len(set(self.verdicts.values())) == 1

    @property
    def verdict(self) -> bool:
        return self.transitive


def _find_intransitive_triple(G: Tournament):
    b = G.beats
    for i in range(G.n):
        for j in range(G.n):
            if not b[i][j]:
                continue
            for k in range(G.n):
                if b[j][k] and not b[i][k]:
                    return (i, j, k)
    return None


def find_cycle(G) -> tuple | None:
    """Some directed cycle in ``G`` (as a vertex tuple), or None if acyclic."""
    adj = G.adjacency
    n = G.n
    colour = [0] * n  # 0 new, 1 on stack, 2 done
    parent = [-1] * n
    for s in range(n):
        if colour[s]:
            continue
        stack = [(s, 0)]
        colour[s] = 1
        while stack:
            v, nxt = stack[-1]
            for w in range(nxt, n):
                if adj[v][w]:
                    stack[-1] = (v, w + 1)
                    if colour[w] == 1:
                        cyc = [v]
                        while cyc[-1] != w:
                            cyc.append(parent[cyc[-1]])
                        return tuple(reversed(cyc))
                    if colour[w] == 0:
                        colour[w] = 1
                        parent[w] = v
                        stack.append((w, 0))
                        break
            else:
                colour[v] = 2
                stack.pop()
    return None


#: the P_k / T_k criteria enumerate every k up to n only for n up to this size
ALL_K_CAP = 8
#: above :data:`ALL_K_CAP` they are evaluated for k up to this value
LARGE_N_K = 4


def transitivity_report(G: Tournament, k_cap: int | None = None) -> TransitivityReport:
    """Evaluate all nine criteria independently.

    Counting copies of ``P_k`` and ``T_k`` costs about ``2**n`` in a
    transitive tournament, so by default every ``k`` is covered only for
    ``n <= ALL_K_CAP``; larger tournaments use ``k <= LARGE_N_K`` (recorded in
    ``note``).  Pass ``k_cap`` to override.
    """
    n = G.n
    if k_cap is None:
        k_cap = n if n <= ALL_K_CAP else LARGE_N_K
    kmax = min(n, max(k_cap, 3))
    triple = _find_intransitive_triple(G)
    cycle = find_cycle(G)

    c3 = cycle_digraph(3)
    c3_count = inj_count(c3, G) // 3 if n >= 3 else 0

    d = scores(G)
    order = tuple(sorted(range(n), key=lambda v: -d[v]))
    orderable = all(
        G.beats[order[a]][order[b]] for a in range(n) for b in range(a + 1, n)
    )

    score_sum = sum(x * x for x in d)
    score_target = n * (n - 1) * (2 * n - 1) // 6

    # P_k and T_k have trivial automorphism groups: copies == injective homs
    path_copies = tuple(inj_count(path_digraph(k), G) for k in range(1, kmax + 1))
    trans_copies = tuple(inj_count(transitive(k), G) for k in range(1, kmax + 1))
    target = tuple(comb(n, k) for k in range(1, kmax + 1))
    p3 = path_copies[2] if n >= 3 else 0
    t3 = trans_copies[2] if n >= 3 else 0

    if n < 3:
        note = "n < 3: every criterion holds trivially"
    elif kmax < n:
        note = f"P_k/T_k counts evaluated for k <= {kmax} only"
    else:
        note = "P_k/T_k counts evaluated for every k although the P3/T3 items already imply them"

    return TransitivityReport(
        n=n,
        transitive=triple is None,
        acyclic=cycle is None,
        no_c3=c3_count == 0,
        orderable=orderable,
        score_criterion=score_sum == score_target,
        paths_all_k=path_copies == target,
        paths_p3=p3 == comb(n, 3),
        transitive_all_k=trans_copies == target,
        transitive_t3=t3 == comb(n, 3),
        c3_count=c3_count,
        score_sum=score_sum,
        score_target=score_target,
        intransitive_triple=triple,
        cycle=cycle,
        order=order if orderable else None,
        path_copies=path_copies,
        transitive_copies=trans_copies,
        note=note,
    )
