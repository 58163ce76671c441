"""Tournament kernels with exact rational data.

Two representations:

* :class:`StepKernel`: ``m`` blocks with positive weights and a value matrix
  ``C`` satisfying ``C + C.T == 1``.
* :class:`SegmentKernel`: an ordered direct sum of :class:`Atom` segments
  (each carrying a step kernel) and :class:`TransitiveSeg` segments.

Order convention everywhere: a point in an earlier segment beats a point in
a later one (kernel value 1), and inside a transitive segment the smaller
position beats the larger, i.e. ``W(x, y) = 1{x <= y}``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .errors import (
    BadDiagonal,
    EmptyKernel,
    InvalidSize,
    NotComplementary,
    ValueOutOfRange,
    WeightsNotNormalized,
)
from .tournament import Tournament

HALF = Fraction(1, 2)


def as_fraction(x) -> Fraction:
    """Exact conversion; strings like ``"3/8"`` or ``"0.375"`` and ints are exact.

    Floats are converted through ``repr`` so ``0.1`` becomes ``1/10``.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        return Fraction(int(x))
    if isinstance(x, float):
        return Fraction(repr(x))
    if isinstance(x, str):
        return Fraction(x.strip())
    return Fraction(x)


@dataclass(frozen=True)
class StepKernel:
    weights: tuple
    values: tuple

    def __post_init__(self):
        w = tuple(as_fraction(x) for x in self.weights)
        v = tuple(tuple(as_fraction(x) for x in row) for row in self.values)
        object.__setattr__(self, "weights", w)
        object.__setattr__(self, "values", v)
        m = len(w)
        if m == 0:
            raise EmptyKernel("step kernel needs at least one block")
        if any(x <= 0 for x in w):
            raise WeightsNotNormalized(f"block weights must be positive, got {w}")
        if sum(w) != 1:
            raise WeightsNotNormalized(f"block weights sum to {sum(w)}, not 1")
        if len(v) != m or any(len(row) != m for row in v):
            raise InvalidSize(f"value matrix must be {m}x{m}")
        for i in range(m):
            if v[i][i] != HALF:
                raise BadDiagonal(f"C[{i}][{i}] = {v[i][i]}, must be 1/2")
        for i in range(m):
            for j in range(i + 1, m):
                if v[i][j] + v[j][i] != 1:
                    raise NotComplementary(
                        f"C[{i}][{j}] + C[{j}][{i}] = {v[i][j] + v[j][i]}, must be 1"
                    )
                if not 0 <= v[i][j] <= 1:
                    raise ValueOutOfRange(f"C[{i}][{j}] = {v[i][j]} outside [0, 1]")

    @property
    def m(self) -> int:
        return len(self.weights)

    def submatrix(self, blocks: Sequence[int]) -> "StepKernel":
        """Restriction to ``blocks`` with renormalised weights."""
        mass = sum(self.weights[b] for b in blocks)
        return StepKernel(
            tuple(self.weights[b] / mass for b in blocks),
            tuple(tuple(self.values[a][b] for b in blocks) for a in blocks),
        )

    def permute(self, order: Sequence[int]) -> "StepKernel":
        """Block ``order[k]`` of this kernel becomes block ``k``."""
        return StepKernel(
            tuple(self.weights[b] for b in order),
            tuple(tuple(self.values[a][b] for b in order) for a in order),
        )


def step_kernel(weights, values) -> StepKernel:
    return StepKernel(tuple(weights), tuple(tuple(r) for r in values))


def quasi_random() -> StepKernel:
    """The constant-1/2 kernel U."""
    return StepKernel((Fraction(1),), ((HALF,),))


def adjacency_kernel(G: Tournament) -> StepKernel:
    """Equal blocks per vertex, 0/1 off the diagonal, 1/2 on it."""
    n = G.n
    if n < 1:
        raise InvalidSize("adjacency_kernel needs at least one vertex")
    vals = tuple(
        tuple(HALF if i == j else Fraction(int(G.beats[i][j])) for j in range(n))
        for i in range(n)
    )
    return StepKernel((Fraction(1, n),) * n, vals)


def staircase(n: int) -> StepKernel:
    if n < 1:
        raise InvalidSize("staircase(n) needs n >= 1")
    vals = tuple(
        tuple(HALF if i == j else Fraction(int(i < j)) for j in range(n)) for i in range(n)
    )
    return StepKernel((Fraction(1, n),) * n, vals)


def tournament_blowup(G: Tournament, inners: Sequence[StepKernel]) -> StepKernel:
    """Replace vertex ``i`` of ``G`` by a copy of ``inners[i]`` at mass ``1/n``.

    Between copies the kernel is 1 along arcs of ``G`` and 0 against them.
    Irreducible ``G`` gives an irreducible kernel.
    """
    n = G.n
    if len(inners) != n:
        raise InvalidSize(f"need {n} inner kernels, got {len(inners)}")
    weights, owner = [], []
    for i, K in enumerate(inners):
        for b, w in enumerate(K.weights):
            weights.append(w / n)
            owner.append((i, b))
    vals = []
    for i, a in owner:
        row = []
        for j, b in owner:
            if i == j:
                row.append(inners[i].values[a][b])
            else:
                row.append(Fraction(int(G.beats[i][j])))
        vals.append(tuple(row))
    return StepKernel(tuple(weights), tuple(vals))


@dataclass(frozen=True)
class Atom:
    weight: Fraction
    inner: StepKernel

    def __post_init__(self):
        object.__setattr__(self, "weight", as_fraction(self.weight))
        if self.weight <= 0:
            raise WeightsNotNormalized(f"segment weight must be positive, got {self.weight}")


@dataclass(frozen=True)
class TransitiveSeg:
    weight: Fraction

    def __post_init__(self):
        object.__setattr__(self, "weight", as_fraction(self.weight))
        if self.weight <= 0:
            raise WeightsNotNormalized(f"segment weight must be positive, got {self.weight}")


Segment = Union[Atom, TransitiveSeg]


@dataclass(frozen=True)
class SegmentKernel:
    segments: tuple

    def __post_init__(self):
        segs = tuple(self.segments)
        if not segs:
            raise EmptyKernel("segment kernel needs at least one segment")
        total = sum(s.weight for s in segs)
        if total != 1:
            raise WeightsNotNormalized(f"segment weights sum to {total}, not 1")
        object.__setattr__(self, "segments", segs)

    @property
    def atom_mass(self) -> Fraction:
        return sum((s.weight for s in self.segments if isinstance(s, Atom)), Fraction(0))

    @property
    def is_atomic(self) -> bool:
        return all(isinstance(s, Atom) for s in self.segments)


def kernel_direct_sum(segments: Sequence[Segment]) -> SegmentKernel:
    """Ordered direct sum; adjacent transitive segments are merged."""
    merged = []
    for s in segments:
        if merged and isinstance(s, TransitiveSeg) and isinstance(merged[-1], TransitiveSeg):
            merged[-1] = TransitiveSeg(merged[-1].weight + s.weight)
        else:
            merged.append(s)
    return SegmentKernel(tuple(merged))


def transitive_kernel() -> SegmentKernel:
    return SegmentKernel((TransitiveSeg(Fraction(1)),))


def as_segment_kernel(W) -> SegmentKernel:
    if isinstance(W, SegmentKernel):
        return W
    if isinstance(W, StepKernel):
        return SegmentKernel((Atom(Fraction(1), W),))
    raise TypeError(f"expected StepKernel or SegmentKernel, got {type(W).__name__}")


def scale_into(W, weight) -> list:
    """Segments of ``W`` rescaled to total mass ``weight`` (for building sums)."""
    weight = as_fraction(weight)
    W = as_segment_kernel(W)
    out = []
    for s in W.segments:
        if isinstance(s, Atom):
            out.append(Atom(s.weight * weight, s.inner))
        else:
            out.append(TransitiveSeg(s.weight * weight))
    return out


def eta(W) -> list:
    """Cumulative-weight embedding: ``(segment index, start, width)`` per segment."""
    W = as_segment_kernel(W)
    out, start = [], Fraction(0)
    for k, s in enumerate(W.segments):
        out.append((k, start, s.weight))
        start += s.weight
    return out


def eta_from_lambda(W) -> list:
    """The same embedding recomputed from the out-mass function.

    For a point ``x`` the out-mass is the transitive mass it beats plus the
    atom masses it beats; an atom's embedding point is one minus its average
    out-mass minus its own weight, and a transitive segment starts at one
    minus the out-mass of its first point.
    """
    W = as_segment_kernel(W)
    segs = W.segments
    out = []
    for k, s in enumerate(segs):
        later_trans = sum(
            (t.weight for t in segs[k + 1 :] if isinstance(t, TransitiveSeg)), Fraction(0)
        )
        later_atoms = sum((a.weight for a in segs[k + 1 :] if isinstance(a, Atom)), Fraction(0))
        if isinstance(s, Atom):
            lam = later_trans + later_atoms
            out.append((k, 1 - lam - s.weight, s.weight))
        else:
            # leftmost point of the segment beats the whole segment and everything later
            lam = s.weight + later_trans + later_atoms
            out.append((k, 1 - lam, s.weight))
    return out


def cantor_truncation(depth: int, inner: StepKernel) -> SegmentKernel:
    """Level-``depth`` truncation of the fat-Cantor direct sum.

    Starting from [0, 1], step ``s`` (1-based) removes an open middle interval
    of width ``4**-s`` from each of the ``2**(s-1)`` surviving intervals.
    Removed intervals become atoms carrying ``inner``; survivors become
    transitive segments.  Atom mass totals ``1/2 - 2**-(depth+1)``.
    """
    if depth < 0:
        raise InvalidSize("depth must be >= 0")

    def build(length: Fraction, level: int) -> list:
        # an interval surviving ``level`` removals, to be refined down to ``depth``
        if level == depth:
            return [TransitiveSeg(length)]
        gap = Fraction(1, 4 ** (level + 1))
        side = (length - gap) / 2
        return build(side, level + 1) + [Atom(gap, inner)] + build(side, level + 1)

    return SegmentKernel(tuple(build(Fraction(1), 0)))


def flatten(W) -> StepKernel:
    """Step kernel of an all-atom segment kernel (blocks listed segment by segment)."""
    W = as_segment_kernel(W)
    if not W.is_atomic:
        raise ValueError("kernel has transitive segments; use discretize()")
    return discretize(W, 1)


def discretize(W, n: int) -> StepKernel:
    """Replace each transitive segment by an ``n``-block staircase."""
    if n < 1:
        raise InvalidSize("n must be >= 1")
    W = as_segment_kernel(W)
    weights, owner = [], []  # owner: (segment index, local block, local value matrix)
    for k, s in enumerate(W.segments):
        if isinstance(s, Atom):
            for b, w in enumerate(s.inner.weights):
                weights.append(s.weight * w)
                owner.append((k, b))
        else:
            for b in range(n):
                weights.append(s.weight / n)
                owner.append((k, b))
    vals = []
    for k, a in owner:
        row = []
        for l, b in owner:
            if k < l:
                row.append(Fraction(1))
            elif k > l:
                row.append(Fraction(0))
            else:
                s = W.segments[k]
                if isinstance(s, Atom):
                    row.append(s.inner.values[a][b])
                else:
                    row.append(HALF if a == b else Fraction(int(a < b)))
        vals.append(tuple(row))
    return StepKernel(tuple(weights), tuple(vals))


def random_step_kernel(
    m: int, rng: random.Random, p_extreme: float = 0.5, denominator: int = 8
) -> StepKernel:
    """Random step kernel with rational data.

    Each off-diagonal pair is 0/1 with probability ``p_extreme`` (so that
    reducible kernels are common for small ``m``), otherwise ``k/denominator``.
    """
    raw = [rng.randint(1, 6) for _ in range(m)]
    weights = [Fraction(r, sum(raw)) for r in raw]
    vals = [[HALF] * m for _ in range(m)]
    for i in range(m):
        for j in range(i + 1, m):
            if rng.random() < p_extreme:
                x = Fraction(rng.randint(0, 1))
            else:
                x = Fraction(rng.randint(1, denominator - 1), denominator)
            vals[i][j], vals[j][i] = x, 1 - x
    return step_kernel(weights, vals)


def random_segment_kernel(rng: random.Random, max_segments: int = 4, max_blocks: int = 3) -> SegmentKernel:
    """Random ordered sum of atoms (random step kernels) and transitive segments."""
    count = rng.randint(1, max_segments)
    raw = [rng.randint(1, 4) for _ in range(count)]
    segs = []
    for r in raw:
        w = Fraction(r, sum(raw))
        if rng.random() < 0.4:
            segs.append(TransitiveSeg(w))
        else:
            segs.append(Atom(w, random_step_kernel(rng.randint(1, max_blocks), rng)))
    return kernel_direct_sum(segs)
