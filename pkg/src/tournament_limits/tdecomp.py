"""Decomposition of finite tournaments into ordered irreducible components."""

from __future__ import annotations

import enum
import functools
import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence

from ._scc import strongly_connected
from .errors import InternalInconsistency, PatternTooLarge
from .homcount import ind_count
from .tournament import Tournament, direct_sum, falling_factorial, induced, scores

#: exhaustive subset cross-check in :func:`is_irreducible` runs up to this size
EXHAUSTIVE_IRREDUCIBILITY_CAP = 10


class Kind(str, enum.Enum):
    IRREDUCIBLE = "irreducible"
    TRANSITIVE = "transitive"
    SINGLETON = "singleton"


@dataclass(frozen=True)
class Component:
    vertices: tuple
    kind: Kind

    def __len__(self):
        return len(self.vertices)


def _order_classes(G: Tournament, classes: list) -> list:
    def cmp(a, b):
        return -1 if G.beats[a[0]][b[0]] else 1

    ordered = sorted(classes, key=functools.cmp_to_key(cmp))
    # every cross arc must point forward
    for i, a in enumerate(ordered):
        for b in ordered[i + 1 :]:
            if not all(G.beats[x][y] for x in a for y in b):
                raise InternalInconsistency(
                    f"classes {a} and {b} are not uniformly ordered"
                )
    return ordered


def strong_components(G: Tournament) -> list:
    """Mutual-reachability classes, earlier classes beating later ones."""
    classes = strongly_connected(G.beats)
    return [tuple(c) for c in _order_classes(G, classes)]


def score_components(G: Tournament) -> list:
    """Same partition as :func:`strong_components`, found from the score sequence.

    Sort by ascending score; the weakest ``k`` vertices lose to everyone else
    exactly when their score sum is ``C(k, 2)``.
    """
    d = scores(G)
    asc = sorted(range(G.n), key=lambda v: d[v])
    cuts, running = [], 0
    for k, v in enumerate(asc, start=1):
        running += d[v]
        if running == comb(k, 2):
            cuts.append(k)
    classes, prev = [], 0
    for c in cuts:
        classes.append(tuple(sorted(asc[prev:c])))
        prev = c
    return classes[::-1]


def _reachability(G: Tournament) -> list:
    n = G.n
    reach = [[G.beats[i][j] or i == j for j in range(n)] for i in range(n)]
    for k in range(n):
        for i in range(n):
            if reach[i][k]:
                rk = reach[k]
                ri = reach[i]
                for j in range(n):
                    if rk[j]:
                        ri[j] = True
    return reach


def _closed_subset(G: Tournament):
    """Smallest nonempty proper X with N(X) inside X, or None."""
    n = G.n
    for size in range(1, n):
        for X in itertools.combinations(range(n), size):
            xs = set(X)
            if all(w in xs for v in X for w in range(n) if G.beats[v][w]):
                return frozenset(X)
    return None


@dataclass(frozen=True)
class IrreducibilityReport:
    irreducible: bool
    scc_verdict: bool
    path_verdict: bool
    subset_verdict: bool | None  # None when above the exhaustive cap
    witness: frozenset | None  # nonempty proper X with N(X) inside X

    def __bool__(self):
        return self.irreducible


def is_irreducible(G: Tournament, cap: int = EXHAUSTIVE_IRREDUCIBILITY_CAP) -> IrreducibilityReport:
    scc = len(strongly_connected(G.beats)) <= 1
    reach = _reachability(G)
    paths = all(all(row) for row in reach)
    subset = witness = None
    if G.n <= cap:
        witness = _closed_subset(G)
        subset = witness is None
    verdicts = {scc, paths} | ({subset} if subset is not None else set())
    if len(verdicts) != 1:
        raise InternalInconsistency(
            f"irreducibility criteria disagree: scc={scc} paths={paths} subset={subset}"
        )
    return IrreducibilityReport(scc, scc, paths, subset, witness)


@dataclass(frozen=True)
class TournamentDecomposition:
    components: tuple
    coarse: tuple

    @property
    def order(self) -> tuple:
        """Vertex order that lists components consecutively."""
        return tuple(v for c in self.components for v in c.vertices)

    def parts(self, G: Tournament, coarse: bool = False) -> list:
        comps = self.coarse if coarse else self.components
        return [induced(G, c.vertices) for c in comps]

    def reassemble(self, G: Tournament, coarse: bool = False) -> Tournament:
        return direct_sum(self.parts(G, coarse))

    def records(self, coarse: bool = True) -> list:
        comps = self.coarse if coarse else self.components
        return [{"kind": c.kind.value, "vertices": list(c.vertices)} for c in comps]


def _merge_singletons(components: list) -> list:
    out, run = [], []

    def flush():
        if len(run) >= 2:
            out.append(Component(tuple(v for c in run for v in c.vertices), Kind.TRANSITIVE))
        else:
            out.extend(run)
        run.clear()

    for c in components:
        if c.kind is Kind.SINGLETON:
            run.append(c)
        else:
            flush()
            out.append(c)
    flush()
    return out


def decompose(G: Tournament) -> TournamentDecomposition:
    comps = [
        Component(c, Kind.SINGLETON if len(c) == 1 else Kind.IRREDUCIBLE)
        for c in strong_components(G)
    ]
    return TournamentDecomposition(tuple(comps), tuple(_merge_singletons(comps)))


def _runs_dp(components: list, parts_count: int, weight) -> object:
    """Sum over monotone assignments of consecutive component runs to parts.

    ``weight(lo, hi, j)`` scores assigning components ``lo..hi-1`` to part
    ``j``; an empty run (lo == hi) must score 1.
    """
    r = len(components)

    @functools.lru_cache(maxsize=None)
    def f(i, j):
        if j == parts_count - 1:
            return weight(i, r, j)
        total = 0
        for hi in range(i, r + 1):
            w = weight(i, hi, j)
            if w:
                total += w * f(hi, j + 1)
        return total

    return f(0, 0)


def t_ind_direct_sum(F: Tournament, parts: Sequence[Tournament]) -> Fraction:
    """Induced density of ``F`` in the direct sum of ``parts``, via the run formula."""
    parts = list(parts)
    total_n = sum(p.n for p in parts)
    if F.n > total_n:
        raise PatternTooLarge(f"pattern has {F.n} vertices, direct sum only {total_n}")
    comps = decompose(F).components
    cache = {}

    def weight(lo, hi, j):
        if lo == hi:
            return 1
        key = (lo, hi, j)
        if key not in cache:
            verts = sorted(v for c in comps[lo:hi] for v in c.vertices)
            # (v(G_j))_{v(F_i)} t_ind(F_i, G_j) is just the induced count
            cache[key] = ind_count(induced(F, verts), parts[j])
        return cache[key]

    count = _runs_dp(list(comps), len(parts), weight)
    return Fraction(count, falling_factorial(total_n, F.n))
