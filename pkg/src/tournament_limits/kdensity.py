"""Exact homomorphism densities against step and segment kernels."""

from __future__ import annotations

import functools
import math
import warnings
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import CapExceeded, NotATournamentWarning, UnsupportedPattern
from .kernel import (
    Atom,
    SegmentKernel,
    StepKernel,
    TransitiveSeg,
    as_segment_kernel,
)
from .tdecomp import Kind, _runs_dp, decompose
from .tournament import (
    Digraph,
    Tournament,
    cycle_digraph,
    induced,
    path_digraph,
    tournament_completions,
    transitive,
)

#: largest pattern accepted by :func:`t_step`
MAX_PATTERN_VERTICES = 7
#: upper bound on the number of block assignments ``m ** v(F)`` t_step will enumerate
MAX_ASSIGNMENTS = 20_000_000
#: largest k for the P_k / T_k criteria of the kernel transitivity report
DEFAULT_K_CAP = 5


def _check_pattern(F):
    if F.has_loop():
        raise UnsupportedPattern("pattern has a loop; its density needs the full quintuple")
    if F.has_two_cycle():
        raise UnsupportedPattern("pattern has a 2-cycle; its density needs the full quintuple")


def _lcm_den(values) -> int:
    d = 1
    for x in values:
        d = math.lcm(d, x.denominator)
    return d


def t_step(F, W: StepKernel) -> Fraction:
    """``sum over block maps phi`` of prod weight[phi(v)] * prod_{arcs} C[phi(i)][phi(j)]."""
    _check_pattern(F)
    k, m = F.n, W.m
    if k > MAX_PATTERN_VERTICES:
        raise CapExceeded(f"pattern has {k} vertices; cap is {MAX_PATTERN_VERTICES}")
    if m**k > MAX_ASSIGNMENTS:
        raise CapExceeded(f"{m}**{k} block assignments exceed the cap {MAX_ASSIGNMENTS}")
    if k == 0:
        return Fraction(1)

    # integer arithmetic on a common denominator
    dw = _lcm_den(W.weights)
    dc = _lcm_den(x for row in W.values for x in row)
    iw = [int(w * dw) for w in W.weights]
    ic = [[int(x * dc) for x in row] for row in W.values]

    order = []
    remaining = set(range(k))
    nbrs = {v: set() for v in range(k)}
    for i, j in F.arcs:
        nbrs[i].add(j)
        nbrs[j].add(i)
    while remaining:
        # prefer vertices tied to already placed ones
        best = max(sorted(remaining), key=lambda v: len(nbrs[v] & set(order)))
        order.append(best)
        remaining.discard(best)
    pos = {v: p for p, v in enumerate(order)}
    # arcs checked when the later endpoint (in search order) is placed
    out_back = [[] for _ in range(k)]  # (earlier vertex position) for arcs later -> earlier
    in_back = [[] for _ in range(k)]  # arcs earlier -> later
    for i, j in F.arcs:
        if pos[i] > pos[j]:
            out_back[pos[i]].append(pos[j])
        else:
            in_back[pos[j]].append(pos[i])

    phi = [0] * k

    def rec(p: int) -> int:
        if p == k:
            return 1
        total = 0
        ob, ib = out_back[p], in_back[p]
        for b in range(m):
            prod = iw[b]
            for q in ob:
                prod *= ic[b][phi[q]]
                if not prod:
                    break
            if prod:
                for q in ib:
                    prod *= ic[phi[q]][b]
                    if not prod:
                        break
            if not prod:
                continue
            phi[p] = b
            total += prod * rec(p + 1)
        return total

    return Fraction(rec(0), dw**k * dc ** len(F.arcs))


def _as_tournament(F):
    if isinstance(F, Tournament):
        return F
    if F.is_tournament():
        return F.as_tournament()
    return None


def t_ind_segment(F, W) -> Fraction:
    """Induced density of a tournament ``F`` in a segment kernel.

    Runs of consecutive irreducible components of ``F`` are assigned, in
    order, to the segments of ``W``.  An atom of weight ``a`` receiving a run
    spanning ``r`` vertices contributes ``a**r * t(run, inner)``; a transitive
    segment of weight ``w`` contributes ``w**r / r!`` when the run consists of
    singletons and 0 otherwise.  Non-tournament digraphs get 0 and a
    :class:`NotATournamentWarning`.
    """
    T = _as_tournament(F)
    if T is None:
        warnings.warn(
            "pattern is not a tournament; induced density against a tournament kernel is 0",
            NotATournamentWarning,
            stacklevel=2,
        )
        return Fraction(0)
    W = as_segment_kernel(W)
    comps = decompose(T).components
    segs = W.segments
    cache = {}

    def weight(lo, hi, j):
        if lo == hi:
            return 1
        key = (lo, hi, j)
        if key in cache:
            return cache[key]
        run = comps[lo:hi]
        size = sum(len(c) for c in run)
        s = segs[j]
        if isinstance(s, TransitiveSeg):
            if all(c.kind is Kind.SINGLETON for c in run):
                val = s.weight**size / math.factorial(size)
            else:
                val = Fraction(0)
        else:
            verts = sorted(v for c in run for v in c.vertices)
            val = s.weight**size * t_step(induced(T, verts), s.inner)
        cache[key] = val
        return val

    return Fraction(_runs_dp(list(comps), len(segs), weight))


def t_general_segment(F, W) -> Fraction:
    """Homomorphism density of a loop-free, 2-cycle-free pattern.

    Each unordered vertex pair without an arc is expanded via
    ``W(x,y) + W(y,x) = 1`` into both orientations, giving a sum of induced
    densities over tournament completions of ``F``.
    """
    _check_pattern(F)
    W = as_segment_kernel(W)
    return sum((t_ind_segment(Fp, W) for Fp in tournament_completions(F)), Fraction(0))


def t_kernel(F, W) -> Fraction:
    """Homomorphism density against either kernel representation."""
    if isinstance(W, StepKernel):
        return t_step(F, W)
    return t_general_segment(F, W)


def score_integral(W) -> Fraction:
    """Integral over x of (integral over y of W(x, y))**2."""
    if isinstance(W, StepKernel):
        return sum(
            (
                wi * sum((wj * c for wj, c in zip(W.weights, row)), Fraction(0)) ** 2
                for wi, row in zip(W.weights, W.values)
            ),
            Fraction(0),
        )
    W = as_segment_kernel(W)
    total = Fraction(0)
    after = Fraction(1)
    for s in W.segments:
        after -= s.weight
        if isinstance(s, Atom):
            K = s.inner
            for wb, row in zip(K.weights, K.values):
                r = after + s.weight * sum((wj * c for wj, c in zip(K.weights, row)), Fraction(0))
                total += s.weight * wb * r**2
        else:
            # out-mass at offset t from the segment end is after + t
            total += ((after + s.weight) ** 3 - after**3) / 3
    return total


@dataclass(frozen=True)
class KernelTransitivityReport:
    t_c3: Fraction
    t_p3: Fraction
    t_t3: Fraction
    score_integral: Fraction
    path_densities: tuple  # t(P_k, W) for k = 1..k_cap
    transitive_densities: tuple  # t(T_k, W) for k = 1..k_cap
    c3_zero: bool
    p3_sixth: bool
    t3_sixth: bool
    score_third: bool
    paths_all_k: bool
    transitive_all_k: bool
    identity_difference: bool  # t(C3) == t(P3) - t(T3)
    identity_affine: bool  # t(C3) == -1/4 + 3/2 t(P3)

    CRITERIA = (
        "c3_zero",
        "p3_sixth",
        "t3_sixth",
        "score_third",
        "paths_all_k",
        "transitive_all_k",
    )

    @property
    def verdicts(self) -> dict:
        return {c: getattr(self, c) for c in self.CRITERIA}

    @property
    def all_agree(self) -> bool:
        return len(set(self.verdicts.values())) == 1

    @property
    def identities_hold(self) -> bool:
        return self.identity_difference and self.identity_affine

    @property
    def transitive(self) -> bool:
        return self.c3_zero


def kernel_transitivity_report(W, k_cap: int = DEFAULT_K_CAP) -> KernelTransitivityReport:
    if isinstance(W, StepKernel):
        dens = functools.partial(t_step, W=W)
    else:
        W = as_segment_kernel(W)
        dens = functools.partial(t_general_segment, W=W)
    t_c3 = dens(cycle_digraph(3))
    t_p3 = dens(path_digraph(3))
    t_t3 = dens(transitive(3))
    si = score_integral(W)
    paths = tuple(dens(path_digraph(k)) for k in range(1, k_cap + 1))
    trans = tuple(dens(transitive(k)) for k in range(1, k_cap + 1))
    inv = tuple(Fraction(1, math.factorial(k)) for k in range(1, k_cap + 1))
    sixth = Fraction(1, 6)
    return KernelTransitivityReport(
        t_c3=t_c3,
        t_p3=t_p3,
        t_t3=t_t3,
        score_integral=si,
        path_densities=paths,
        transitive_densities=trans,
        c3_zero=t_c3 == 0,
        p3_sixth=t_p3 == sixth,
        t3_sixth=t_t3 == sixth,
        score_third=si == Fraction(1, 3),
        paths_all_k=paths == inv,
        transitive_all_k=trans == inv,
        identity_difference=t_c3 == t_p3 - t_t3,
        identity_affine=t_c3 == Fraction(-1, 4) + Fraction(3, 2) * t_p3,
    )
