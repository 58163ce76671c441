"""Self-check suites run by ``tournament-limits verify``.

Each check recomputes a quantity two independent ways (or against a closed
form) at desk-scale sizes and reports pass/fail.  The full-size versions
live in the test suite.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from . import kdecomp, kdensity, kernel, sampler, tdecomp
from .homcount import ind_count, transitivity_report, verify_count_identities
from .tournament import (
    all_tournaments,
    cyclic,
    cycle_digraph,
    direct_sum,
    falling_factorial,
    induced,
    is_isomorphic,
    path_digraph,
    random_tournament,
    singleton,
    transitive,
)

SUITES = ("identities", "decomposition", "sampling")


@dataclass(frozen=True)
class CheckResult:
    suite: str
    name: str
    ok: bool
    detail: str = ""


def _random_digraph_pattern(k: int, rng: random.Random):
    from .tournament import Digraph

    arcs = set()
    for i in range(k):
        for j in range(i + 1, k):
            r = rng.random()
            if r < 0.35:
                arcs.add((i, j))
            elif r < 0.7:
                arcs.add((j, i))
    return Digraph(k, frozenset(arcs))


def extrapolate_to_zero(points) -> Fraction:
    """Value at ``h = 0`` of the polynomial through ``(h, value)`` points (Lagrange)."""
    total = Fraction(0)
    for i, (hi, vi) in enumerate(points):
        term = Fraction(vi)
        for j, (hj, _) in enumerate(points):
            if i != j:
                term *= Fraction(-hj) / (hi - hj)
        total += term
    return total


def _identities(rng) -> list:
    out = []
    ok = True
    for _ in range(30):
        F = _random_digraph_pattern(rng.randint(1, 3), rng)
        G = random_tournament(rng.randint(F.n, 6), rng)
        ok &= verify_count_identities(F, G).ok
    out.append(CheckResult("identities", "injective/induced and partition identities", ok))

    ok = all(transitivity_report(G).all_agree for n in range(1, 5) for G in all_tournaments(n))
    out.append(CheckResult("identities", "nine transitivity criteria agree (n <= 4)", ok))

    bad = [n for n in range(1, 11) if kdensity.t_step(cycle_digraph(3), kernel.staircase(n)) != Fraction(1, 8 * n * n)]
    out.append(CheckResult("identities", "t(C3, staircase(n)) = 1/(8n^2)", not bad, f"failures at {bad}" if bad else ""))

    ok = True
    for _ in range(15):
        W = kernel.random_step_kernel(rng.randint(1, 4), rng)
        r = kdensity.kernel_transitivity_report(W, k_cap=3)
        ok &= r.all_agree and r.identities_hold
    out.append(CheckResult("identities", "kernel transitivity criteria and C3 identities", ok))

    ok = True
    for _ in range(30):
        parts = [random_tournament(rng.randint(1, 3), rng) for _ in range(rng.randint(1, 3))]
        G = direct_sum(parts)
        F = random_tournament(rng.randint(1, min(4, G.n)), rng)
        brute = Fraction(ind_count(F, G), falling_factorial(G.n, F.n))
        ok &= tdecomp.t_ind_direct_sum(F, parts) == brute
    ok &= tdecomp.t_ind_direct_sum(cyclic(3), [cyclic(3), cyclic(3)]) == Fraction(1, 20)
    out.append(CheckResult("identities", "direct-sum induced density formula", ok))
    return out


def _decomposition(rng) -> list:
    out = []
    ok = all(
        tdecomp.decompose(G).reassemble(G) == induced(G, tdecomp.decompose(G).order)
        for n in range(1, 5)
        for G in all_tournaments(n)
    )
    out.append(CheckResult("decomposition", "tournament decomposition reassembles (n <= 4)", ok))

    ok = True
    for _ in range(20):
        G = random_tournament(rng.randint(1, 6), rng)
        perm = list(range(G.n))
        rng.shuffle(perm)
        H = G.relabel(perm)
        a, b = tdecomp.decompose(G), tdecomp.decompose(H)
        ok &= [len(c) for c in a.components] == [len(c) for c in b.components]
        ok &= all(is_isomorphic(x, y) for x, y in zip(a.parts(G), b.parts(H)))
    out.append(CheckResult("decomposition", "decomposition invariant under relabelling", ok))

    ok = True
    for _ in range(20):
        W = kernel.random_step_kernel(rng.randint(1, 7), rng)
        irr = kdecomp.is_irreducible_kernel(W)
        wit = kdecomp.reducibility_witness(W)
        ok &= irr == (wit is None) and (wit is None or wit.holds)
        dec = kdecomp.decompose_kernel(W)
        ok &= all(kdecomp.is_irreducible_kernel(a.inner) for a in dec.result.segments)
        ok &= kernel.flatten(dec.result) == W.permute(dec.block_order)
    out.append(CheckResult("decomposition", "kernel irreducibility, witnesses and round trip", ok))

    ok = True
    pats = [singleton(), transitive(2), transitive(3), cyclic(3)]
    for d in range(3):
        W = kernel.cantor_truncation(d, kernel.quasi_random())
        canon = kdecomp.decompose_segment_kernel(W)
        ok &= kdecomp.decompose_segment_kernel(canon) == canon
        ok &= all(kdensity.t_ind_segment(F, canon) == kdensity.t_ind_segment(F, W) for F in pats)
    out.append(CheckResult("decomposition", "segment canonical form idempotent and density-preserving", ok))

    W = kernel.kernel_direct_sum(
        [kernel.Atom(Fraction(1, 2), kernel.quasi_random()), kernel.TransitiveSeg(Fraction(1, 2))]
    )
    for F, want in ((transitive(3), Fraction(31, 192)), (cyclic(3), Fraction(1, 64))):
        exact = kdensity.t_ind_segment(F, W)
        pts = [(Fraction(1, n), kdensity.t_step(F, kernel.discretize(W, n))) for n in (1, 2, 3, 4)]
        limit = extrapolate_to_zero(pts)
        out.append(
            CheckResult(
                "decomposition",
                f"segment density of {'T3' if F.n == 3 and F == transitive(3) else 'C3'}",
                exact == want == limit,
                f"formula {exact}, discretisation limit {limit}",
            )
        )
    return out


def _sampling(rng) -> list:
    out = []
    T = kernel.transitive_kernel()
    samples = sampler.sample_tournaments(T, sampler.SampleConfig(20, 7, 200))
    ok = all(transitivity_report(G).transitive for G in samples)
    out.append(CheckResult("sampling", "samples of the transitive kernel are transitive", ok))

    ok = True
    W = kernel.random_segment_kernel(rng)
    for seed in range(10):
        big = sampler.sample_tournament(W, sampler.SampleConfig(10, seed))
        small = sampler.sample_tournament(W, sampler.SampleConfig(5, seed))
        ok &= induced(big, range(5)) == small
    out.append(CheckResult("sampling", "prefix property", ok))

    W = kernel.kernel_direct_sum(
        [kernel.Atom(Fraction(1, 2), kernel.quasi_random()), kernel.TransitiveSeg(Fraction(1, 2))]
    )
    for F in (transitive(2), transitive(3), cyclic(3)):
        exact = kdensity.t_ind_segment(F, W)
        rep = sampler.mc_density(F, W, sampler.SampleConfig(F.n, 11, 20_000), exact)
        out.append(
            CheckResult("sampling", f"Monte Carlo density within 4 sigma (v(F)={F.n}, {exact})", abs(rep.z) <= 4, f"z = {rep.z:.3f}")
        )

    two = kernel.kernel_direct_sum([kernel.Atom(Fraction(1, 2), kernel.quasi_random())] * 2)
    rate = sampler.reducibility_rate(two, 10, 1000, seed=3)
    out.append(CheckResult("sampling", "reducible kernel gives reducible samples", rate >= 0.99, f"rate {rate}"))
    rate = sampler.reducibility_rate(kernel.adjacency_kernel(cyclic(3)), 3, 1000, seed=3)
    out.append(CheckResult("sampling", "irreducible C3 kernel still yields reducible samples", rate > 0, f"rate {rate}"))
    return out


def run_suites(suite: str = "all", seed: int = 2024) -> list:
    names = SUITES if suite == "all" else (suite,)
    runners = {"identities": _identities, "decomposition": _decomposition, "sampling": _sampling}
    results = []
    for name in names:
        results.extend(runners[name](random.Random(seed)))
    return results
