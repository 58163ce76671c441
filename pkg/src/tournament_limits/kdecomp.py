"""Irreducibility and canonical decomposition of step and segment kernels."""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from fractions import Fraction

from ._scc import strongly_connected
from .errors import InconsistentCrossValues, InternalInconsistency
from .kernel import (
    Atom,
    SegmentKernel,
    StepKernel,
    TransitiveSeg,
    as_segment_kernel,
    kernel_direct_sum,
)
from .tournament import Digraph

#: exhaustive subset search over blocks runs up to this many blocks
EXHAUSTIVE_BLOCK_CAP = 12


def support_digraph(W: StepKernel) -> Digraph:
    """Arc ``i -> j`` (``i != j``) whenever ``C[i][j] > 0``."""
    m = W.m
    return Digraph(
        m, frozenset((i, j) for i in range(m) for j in range(m) if i != j and W.values[i][j] > 0)
    )


def _support_matrix(W: StepKernel):
    return [[i != j and W.values[i][j] > 0 for j in range(W.m)] for i in range(W.m)]


def _closed_under_out_neighbourhood(W: StepKernel, B) -> bool:
    # mu(N(B) \ B) == 0 at block level: no positive value from B to outside
    return all(W.values[i][j] == 0 for i in B for j in range(W.m) if j not in B)


def _out_integral(W: StepKernel, B) -> Fraction:
    w = W.weights
    return sum((w[i] * w[j] * W.values[i][j] for i in B for j in range(W.m)), Fraction(0))


def _proper_subsets(m: int):
    for size in range(1, m):
        yield from (frozenset(c) for c in itertools.combinations(range(m), size))


def is_irreducible_kernel(W: StepKernel, cap: int = EXHAUSTIVE_BLOCK_CAP) -> bool:
    """Strong connectivity of the support digraph, cross-checked by subset search."""
    scc = len(strongly_connected(_support_matrix(W))) == 1
    if W.m <= cap:
        closed = any(_closed_under_out_neighbourhood(W, B) for B in _proper_subsets(W.m))
        if closed == scc:
            raise InternalInconsistency(
                f"strong connectivity ({scc}) disagrees with closed-subset search ({closed})"
            )
    return scc


@dataclass(frozen=True)
class ReducibilityWitness:
    blocks: frozenset
    mass: Fraction
    integral: Fraction  # sum over i in B, all j of w_i w_j C[i][j]

    @property
    def holds(self) -> bool:
        return self.integral == self.mass**2 / 2


def _ordered_components(W: StepKernel) -> list:
    comps = strongly_connected(_support_matrix(W))

    def cmp(a, b):
        return -1 if W.values[a[0]][b[0]] == 1 else 1

    ordered = sorted(comps, key=functools.cmp_to_key(cmp))
    for i, a in enumerate(ordered):
        for b in ordered[i + 1 :]:
            for x in a:
                for y in b:
                    if W.values[x][y] != 1:
                        raise InconsistentCrossValues(
                            f"C[{x}][{y}] = {W.values[x][y]} between components {a} and {b}"
                        )
    return ordered


def reducibility_witness(W: StepKernel, cap: int = EXHAUSTIVE_BLOCK_CAP):
    """A block set beaten by everything outside it, with the half-square identity.

    Returns the last component of the condensation order, or None when ``W``
    is irreducible.  Up to ``cap`` blocks every subset is also tested against
    the identity and the result is checked for consistency.
    """
    comps = _ordered_components(W)
    found = None
    if len(comps) > 1:
        B = frozenset(comps[-1])
        mass = sum(W.weights[b] for b in B)
        found = ReducibilityWitness(B, mass, _out_integral(W, B))
        if not found.holds:
            raise InternalInconsistency(f"last component {sorted(B)} fails the identity")
    if W.m <= cap:
        hits = []
        for B in _proper_subsets(W.m):
            mass = sum(W.weights[b] for b in B)
            if _out_integral(W, B) == mass**2 / 2:
                hits.append(B)
        if found is None and hits:
            raise InternalInconsistency(f"irreducible kernel but subsets {hits} satisfy the identity")
        if found is not None and found.blocks not in hits:
            raise InternalInconsistency("exhaustive search missed the condensation witness")
    return found


@dataclass(frozen=True)
class KernelDecomposition:
    result: SegmentKernel
    block_map: tuple  # input block -> (segment index, inner block index)

    @property
    def block_order(self) -> tuple:
        """Input blocks listed in the order they appear in the flattened result."""
        inv = sorted(range(len(self.block_map)), key=lambda b: self.block_map[b])
        return tuple(inv)


def decompose_kernel(W: StepKernel) -> KernelDecomposition:
    comps = _ordered_components(W)
    segments, block_map = [], [None] * W.m
    for k, comp in enumerate(comps):
        mass = sum(W.weights[b] for b in comp)
        segments.append(Atom(mass, W.submatrix(comp)))
        for local, b in enumerate(comp):
            block_map[b] = (k, local)
    return KernelDecomposition(SegmentKernel(tuple(segments)), tuple(block_map))


def decompose_segment_kernel(W) -> SegmentKernel:
    """Split every atom into irreducible atoms and merge adjacent transitive parts."""
    W = as_segment_kernel(W)
    out = []
    for s in W.segments:
        if isinstance(s, TransitiveSeg):
            out.append(s)
            continue
        for a in decompose_kernel(s.inner).result.segments:
            out.append(Atom(s.weight * a.weight, a.inner))
    return kernel_direct_sum(out)


def is_irreducible_segment_kernel(W) -> bool:
    """A segment kernel is irreducible iff it is a single irreducible atom."""
    if isinstance(W, StepKernel):
        return is_irreducible_kernel(W)
    canon = decompose_segment_kernel(W)
    return len(canon.segments) == 1 and isinstance(canon.segments[0], Atom)
