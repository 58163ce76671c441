"""Finite digraphs and tournaments.

Vertices are ``0..n-1``.  A :class:`Tournament` stores its ``beats`` matrix,
row ``i`` column ``j`` true iff ``i`` beats ``j``.  A :class:`Digraph` is a
general pattern graph (loops and 2-cycles allowed) used on the left side of
density computations.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import (
    DuplicateVertex,
    InvalidArc,
    InvalidSize,
    LoopPresent,
    NotAntisymmetric,
    NotATournament,
    OutOfRange,
    TooLarge,
)

#: permutation search in :func:`is_isomorphic` refuses larger inputs
ISOMORPHISM_CAP = 8


@dataclass(frozen=True)
class Digraph:
    n: int
    arcs: frozenset

    def __post_init__(self):
        if self.n < 0:
            raise InvalidSize(f"vertex count must be nonnegative, got {self.n}")
        arcs = frozenset((int(i), int(j)) for i, j in self.arcs)
        for i, j in arcs:
            if not (0 <= i < self.n and 0 <= j < self.n):
                raise InvalidArc(f"arc ({i},{j}) has an endpoint outside 0..{self.n - 1}")
        object.__setattr__(self, "arcs", arcs)

    @property
    def adjacency(self) -> tuple:
        rows = [[False] * self.n for _ in range(self.n)]
        for i, j in self.arcs:
            rows[i][j] = True
        return tuple(tuple(r) for r in rows)

    def has_arc(self, i: int, j: int) -> bool:
        return (i, j) in self.arcs

    def has_loop(self) -> bool:
        return any(i == j for i, j in self.arcs)

    def has_two_cycle(self) -> bool:
        return any(i != j and (j, i) in self.arcs for i, j in self.arcs)

    def is_tournament(self) -> bool:
        if self.has_loop():
            return False
        return all(
            ((i, j) in self.arcs) != ((j, i) in self.arcs)
            for i, j in itertools.combinations(range(self.n), 2)
        )

    def as_tournament(self) -> "Tournament":
        if not self.is_tournament():
            raise NotATournament("digraph is not a tournament")
        return tournament_from_matrix(self.adjacency)


@dataclass(frozen=True)
class Tournament:
    n: int
    beats: tuple

    def __post_init__(self):
        _validate_beats(self.n, self.beats)

    @property
    def adjacency(self) -> tuple:
        return self.beats

    @property
    def arcs(self) -> frozenset:
        return frozenset(
            (i, j) for i in range(self.n) for j in range(self.n) if self.beats[i][j]
        )

    def has_arc(self, i: int, j: int) -> bool:
        return self.beats[i][j]

    def as_digraph(self) -> Digraph:
        return Digraph(self.n, self.arcs)

    def is_tournament(self) -> bool:
        return True

    def has_loop(self) -> bool:
        return False

    def has_two_cycle(self) -> bool:
        return False

    def relabel(self, perm: Sequence[int]) -> "Tournament":
        """Vertex ``perm[i]`` of the result plays the role of vertex ``i`` here."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("perm must be a permutation of range(n)")
        new = [[False] * self.n for _ in range(self.n)]
        for i in range(self.n):
            for j in range(self.n):
                new[perm[i]][perm[j]] = self.beats[i][j]
        return tournament_from_matrix(new)

    def __str__(self) -> str:
        from .formats import tournament_to_text

        return tournament_to_text(self)


def _validate_beats(n, beats):
    if n < 0:
        raise InvalidSize(f"vertex count must be nonnegative, got {n}")
    if len(beats) != n or any(len(row) != n for row in beats):
        raise InvalidSize(f"beats must be a {n}x{n} matrix")
    for i in range(n):
        if beats[i][i]:
            raise LoopPresent(f"vertex {i} has a loop (induced C1)")
    for i in range(n):
        for j in range(i + 1, n):
            if beats[i][j] == beats[j][i]:
                what = "both directions (induced C2)" if beats[i][j] else "no arc (induced E2)"
                raise NotAntisymmetric(f"pair ({i},{j}) has {what}")


def tournament_from_matrix(bits) -> Tournament:
    """Validate a square 0/1 matrix and return it as a tournament."""
    rows = [list(r) for r in bits]
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise InvalidSize("matrix is not square")
    beats = tuple(tuple(bool(x) for x in r) for r in rows)
    return Tournament(n, beats)


def tournament_from_arcs(n: int, arcs: Iterable) -> Tournament:
    rows = [[False] * n for _ in range(n)]
    for i, j in arcs:
        rows[i][j] = True
    return tournament_from_matrix(rows)


def transitive(k: int) -> Tournament:
    """T_k: ``i`` beats ``j`` iff ``i < j``."""
    if k < 1:
        raise InvalidSize("transitive(k) needs k >= 1")
    return tournament_from_matrix([[i < j for j in range(k)] for i in range(k)])


def cyclic(k: int = 3) -> Tournament:
    """The cyclic triangle; C_k is a tournament only for k == 3."""
    if k < 1:
        raise InvalidSize("cyclic(k) needs k >= 1")
    if k != 3:
        raise NotATournament(f"C_{k} is not a tournament; use cycle_digraph({k})")
    return tournament_from_arcs(3, [(0, 1), (1, 2), (2, 0)])


def singleton() -> Tournament:
    return transitive(1)


def empty_tournament() -> Tournament:
    return Tournament(0, ())


def path_digraph(k: int) -> Digraph:
    if k < 1:
        raise InvalidSize("path_digraph(k) needs k >= 1")
    return Digraph(k, frozenset((i, i + 1) for i in range(k - 1)))


def cycle_digraph(k: int) -> Digraph:
    """C_k as a pattern; C_1 is a loop and C_2 a 2-cycle."""
    if k < 1:
        raise InvalidSize("cycle_digraph(k) needs k >= 1")
    return Digraph(k, frozenset((i, (i + 1) % k) for i in range(k)))


def empty_digraph(k: int) -> Digraph:
    if k < 1:
        raise InvalidSize("empty_digraph(k) needs k >= 1")
    return Digraph(k, frozenset())


def direct_sum(parts: Sequence[Tournament]) -> Tournament:
    """Concatenate vertex sets; every vertex of an earlier part beats every later one."""
    parts = list(parts)
    if not parts:
        raise InvalidSize("direct_sum needs at least one part")
    n = sum(p.n for p in parts)
    rows = [[False] * n for _ in range(n)]
    offset = 0
    for p in parts:
        for i in range(p.n):
            for j in range(p.n):
                rows[offset + i][offset + j] = p.beats[i][j]
            for j in range(offset + p.n, n):
                rows[offset + i][j] = True
        offset += p.n
    return tournament_from_matrix(rows)


def induced(G: Tournament, vertices: Sequence[int]) -> Tournament:
    """Restriction to ``vertices``, relabelled ``0..k-1`` in the given order."""
    vertices = list(vertices)
    if len(set(vertices)) != len(vertices):
        raise DuplicateVertex(f"repeated vertex in {vertices}")
    for v in vertices:
        if not 0 <= v < G.n:
            raise OutOfRange(f"vertex {v} not in 0..{G.n - 1}")
    return Tournament(
        len(vertices), tuple(tuple(G.beats[u][v] for v in vertices) for u in vertices)
    )


def scores(G: Tournament) -> list:
    """Out-degrees."""
    return [sum(row) for row in G.beats]


def is_isomorphic(G: Tournament, H: Tournament, cap: int = ISOMORPHISM_CAP) -> bool:
    if G.n != H.n:
        return False
    if G.n > cap:
        raise TooLarge(f"isomorphism search capped at n={cap}, got {G.n}")
    sg, sh = scores(G), scores(H)
    if sorted(sg) != sorted(sh):
        return False
    n = G.n
    # only try maps that preserve scores
    for perm in itertools.permutations(range(n)):
        if any(sg[i] != sh[perm[i]] for i in range(n)):
            continue
        if all(
            G.beats[i][j] == H.beats[perm[i]][perm[j]]
            for i in range(n)
            for j in range(i + 1, n)
        ):
            return True
    return False


def all_tournaments(n: int) -> Iterator[Tournament]:
    """All ``2**(n choose 2)`` labelled tournaments on ``n`` vertices."""
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        rows = [[False] * n for _ in range(n)]
        for bit, (i, j) in enumerate(pairs):
            if mask >> bit & 1:
                rows[i][j] = True
            else:
                rows[j][i] = True
        yield Tournament(n, tuple(tuple(r) for r in rows))


def random_tournament(n: int, rng: random.Random | None = None) -> Tournament:
    rng = rng or random.Random()
    rows = [[False] * n for _ in range(n)]
    for i, j in itertools.combinations(range(n), 2):
        if rng.random() < 0.5:
            rows[i][j] = True
        else:
            rows[j][i] = True
    return Tournament(n, tuple(tuple(r) for r in rows))


def tournament_completions(F) -> Iterator[Tournament]:
    """Tournaments on ``V(F)`` containing every arc of ``F``.

    Yields nothing when ``F`` has a loop or a 2-cycle.
    """
    if F.has_loop() or F.has_two_cycle():
        return
    n = F.n
    forced = [[False] * n for _ in range(n)]
    free = []
    for i, j in itertools.combinations(range(n), 2):
        if F.has_arc(i, j):
            forced[i][j] = True
        elif F.has_arc(j, i):
            forced[j][i] = True
        else:
            free.append((i, j))
    for mask in range(1 << len(free)):
        rows = [r[:] for r in forced]
        for bit, (i, j) in enumerate(free):
            if mask >> bit & 1:
                rows[j][i] = True
            else:
                rows[i][j] = True
        yield Tournament(n, tuple(tuple(r) for r in rows))


def falling_factorial(n: int, k: int) -> int:
    """``n (n-1) ... (n-k+1)``, with ``(n)_0 = 1``."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return math.perm(n, k) if k <= n else 0
