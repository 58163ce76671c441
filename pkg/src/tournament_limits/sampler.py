"""W-random tournaments and Monte Carlo density estimates.

Random numbers come from a counter-based SplitMix64 hash: every draw is
``hash(seed, tag, rep, i, j)`` for a fixed tag per purpose (segment choice,
block choice, position, pair coin).  No generator state is carried between
draws, so

* results are identical on every platform (pure 64-bit integer arithmetic);
* the first ``k`` vertices of an ``n``-sample equal the ``k``-sample with the
  same seed, because vertex ``i`` and pair ``(i, j)`` always read the same
  counters;
* reps are independent streams and can be evaluated in any order.

A probability ``p`` is compared as ``(u >> 1) < floor(p * 2**63)``, which is
exact for ``p = 0`` and ``p = 1``.  Positions inside a transitive segment are
the raw 64-bit words, i.e. points of the ``2**-64`` dyadic grid.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import InvalidSize, NotATournamentWarning
from .kernel import Atom, as_segment_kernel
from .tournament import Tournament

_GOLDEN = np.uint64(0x9E3779B97F4A7C15)
_M1 = np.uint64(0xBF58476D1CE4E5B9)
_M2 = np.uint64(0x94D049BB133111EB)
_ONE_BIT = 2**63
_BATCH = 20_000

TAG_SEGMENT = 1
TAG_BLOCK = 2
TAG_POSITION = 3
TAG_PAIR = 4


def _mix(z):
    z = z + _GOLDEN
    z = (z ^ (z >> np.uint64(30))) * _M1
    z = (z ^ (z >> np.uint64(27))) * _M2
    return z ^ (z >> np.uint64(31))


def draw(seed: int, tag: int, *counters):
    """Hash of ``(seed, tag, *counters)``; counters may be broadcastable arrays."""
    with np.errstate(over="ignore"):
        h = _mix(np.asarray([seed], dtype=np.uint64))
        h = _mix(h ^ np.uint64(tag))
        for c in counters:
            h = _mix(h ^ np.asarray(c, dtype=np.uint64))
    return h


def _threshold(p: Fraction) -> int:
    return (p.numerator * _ONE_BIT) // p.denominator


def _cumulative_thresholds(weights) -> np.ndarray:
    acc, out = Fraction(0), []
    for w in weights:
        acc += w
        out.append(_threshold(acc))
    return np.array(out, dtype=np.uint64)


@dataclass(frozen=True)
class SampleConfig:
    n: int
    seed: int = 0
    reps: int = 1

    def __post_init__(self):
        if self.n < 0:
            raise InvalidSize(f"n must be >= 0, got {self.n}")
        if self.reps < 1:
            raise InvalidSize(f"reps must be >= 1, got {self.reps}")
        if not 0 <= self.seed < 2**64:
            raise InvalidSize("seed must fit in 64 unsigned bits")


@dataclass(frozen=True)
class EstimateReport:
    estimate: float
    std_error: float
    reps: int
    hits: int
    exact: Fraction | None = None
    z: float | None = None


class _Layout:
    """Global block table of a segment kernel with pairwise coin thresholds."""

    def __init__(self, W):
        W = as_segment_kernel(W)
        self.kernel = W
        self.seg_cum = _cumulative_thresholds([s.weight for s in W.segments])
        self.block_cum = []  # per segment: thresholds, or None for transitive
        self.offset = []  # global id of the segment's first block
        self.transitive_ids = []
        owner = []
        for k, s in enumerate(W.segments):
            self.offset.append(len(owner))
            if isinstance(s, Atom):
                self.block_cum.append(_cumulative_thresholds(s.inner.weights))
                owner.extend((k, b) for b in range(s.inner.m))
            else:
                self.block_cum.append(None)
                self.transitive_ids.append(len(owner))
                owner.append((k, None))
        g = len(owner)
        thr = np.zeros((g, g), dtype=np.uint64)
        for x, (k, a) in enumerate(owner):
            for y, (l, b) in enumerate(owner):
                if k < l:
                    thr[x, y] = _ONE_BIT
                elif k == l and a is not None:
                    thr[x, y] = _threshold(W.segments[k].inner.values[a][b])
        self.thresholds = thr
        self.is_transitive = np.array([a is None for _, a in owner])


def _sample_batch(layout: _Layout, n: int, seed: int, reps) -> np.ndarray:
    """Beats arrays of shape ``(len(reps), n, n)`` for the given rep indices."""
    reps = np.asarray(reps, dtype=np.uint64)[:, None]
    verts = np.arange(n, dtype=np.uint64)[None, :]
    u = draw(seed, TAG_SEGMENT, reps, verts) >> np.uint64(1)
    seg = np.searchsorted(layout.seg_cum, u, side="right")
    ub = draw(seed, TAG_BLOCK, reps, verts) >> np.uint64(1)
    gid = np.empty(seg.shape, dtype=np.int64)
    for k, cum in enumerate(layout.block_cum):
        mask = seg == k
        if not mask.any():
            continue
        if cum is None:
            gid[mask] = layout.offset[k]
        else:
            gid[mask] = layout.offset[k] + np.searchsorted(cum, ub[mask], side="right")
    pos = draw(seed, TAG_POSITION, reps, verts)

    ii = np.arange(n, dtype=np.uint64)[:, None]
    jj = np.arange(n, dtype=np.uint64)[None, :]
    lo, hi = np.minimum(ii, jj), np.maximum(ii, jj)
    coin = draw(seed, TAG_PAIR, reps[:, :, None], lo[None], hi[None]) >> np.uint64(1)

    gi, gj = gid[:, :, None], gid[:, None, :]
    # for i < j the coin decides "i beats j"; the lower triangle is its mirror
    upper = coin < layout.thresholds[gi, gj]
    same_trans = (gi == gj) & layout.is_transitive[gi]
    if same_trans.any():
        pi, pj = pos[:, :, None], pos[:, None, :]
        off_diag = ~np.eye(n, dtype=bool)[None]
        if (same_trans & (pi == pj) & off_diag).any():
            warnings.warn("equal transitive positions; tie broken by vertex index", RuntimeWarning)
        by_pos = (pi < pj) | ((pi == pj) & (ii < jj)[None])
        upper = np.where(same_trans, by_pos, upper)
    tri = (ii < jj)[None]
    wins = tri & upper
    losses = tri & ~upper
    return wins | np.swapaxes(losses, 1, 2)


def _batches(reps: int):
    for start in range(0, reps, _BATCH):
        yield np.arange(start, min(reps, start + _BATCH))


def sample_tournament(W, cfg: SampleConfig, rep: int = 0) -> Tournament:
    """One draw of G(n, W); ``rep`` selects an independent stream."""
    layout = _Layout(W)
    beats = _sample_batch(layout, cfg.n, cfg.seed, [rep])[0]
    return Tournament(cfg.n, tuple(tuple(bool(x) for x in row) for row in beats))


def sample_tournaments(W, cfg: SampleConfig) -> list:
    layout = _Layout(W)
    out = []
    for idx in _batches(cfg.reps):
        for beats in _sample_batch(layout, cfg.n, cfg.seed, idx):
            out.append(Tournament(cfg.n, tuple(tuple(bool(x) for x in row) for row in beats)))
    return out


def _report(hits: int, reps: int, exact) -> EstimateReport:
    p = hits / reps
    se = math.sqrt(p * (1 - p) / reps)
    z = None
    if exact is not None:
        exact = Fraction(exact)
        diff = p - float(exact)
        if se > 0:
            z = diff / se
        else:
            z = 0.0 if Fraction(hits, reps) == exact else math.copysign(math.inf, diff)
    return EstimateReport(p, se, reps, hits, exact, z)


def mc_density(F, W, cfg: SampleConfig, exact=None) -> EstimateReport:
    """Fraction of draws of G(v(F), W) equal to ``F`` as labelled tournaments.

    ``cfg.n`` is ignored; the sample size is ``v(F)``.
    """
    if not isinstance(F, Tournament):
        if not F.is_tournament():
            warnings.warn(
                "pattern is not a tournament; it never equals a sample", NotATournamentWarning
            )
            return _report(0, cfg.reps, exact)
        F = F.as_tournament()
    layout = _Layout(W)
    target = np.array(F.beats, dtype=bool)
    hits = 0
    for idx in _batches(cfg.reps):
        beats = _sample_batch(layout, F.n, cfg.seed, idx)
        hits += int((beats == target).all(axis=(1, 2)).sum())
    return _report(hits, cfg.reps, exact)


def _reducible_mask(beats: np.ndarray) -> np.ndarray:
    """A tournament splits iff its ``k`` lowest scores sum to ``C(k, 2)`` for some ``k < n``."""
    n = beats.shape[1]
    if n < 2:
        return np.zeros(beats.shape[0], dtype=bool)
    sc = np.sort(beats.sum(axis=2), axis=1)
    prefix = np.cumsum(sc, axis=1)[:, :-1]
    k = np.arange(1, n)
    return (prefix == k * (k - 1) // 2).any(axis=1)


def reducibility_rate(W, n: int, reps: int, seed: int = 0) -> float:
    """Fraction of sampled G(n, W) with more than one strong component."""
    cfg = SampleConfig(n, seed, reps)
    layout = _Layout(W)
    count = 0
    for idx in _batches(cfg.reps):
        count += int(_reducible_mask(_sample_batch(layout, n, seed, idx)).sum())
    return count / reps
