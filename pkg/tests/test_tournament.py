import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tournament_limits.errors import (
    DuplicateVertex,
    InvalidArc,
    InvalidSize,
    LoopPresent,
    NotAntisymmetric,
    NotATournament,
    OutOfRange,
    TooLarge,
)
from tournament_limits.tournament import (
    Digraph,
    Tournament,
    all_tournaments,
    cycle_digraph,
    cyclic,
    direct_sum,
    empty_digraph,
    empty_tournament,
    falling_factorial,
    induced,
    is_isomorphic,
    path_digraph,
    random_tournament,
    scores,
    singleton,
    tournament_completions,
    tournament_from_arcs,
    tournament_from_matrix,
    transitive,
)


@st.composite
def tournaments(draw, max_n=7):
    n = draw(st.integers(0, max_n))
    bits = draw(st.lists(st.booleans(), min_size=n * (n - 1) // 2, max_size=n * (n - 1) // 2))
    rows = [[False] * n for _ in range(n)]
    for b, (i, j) in zip(bits, itertools.combinations(range(n), 2)):
        rows[i][j], rows[j][i] = b, not b
    return tournament_from_matrix(rows)


def test_single_vertex_matrix():
    G = tournament_from_matrix([[False]])
    assert G.n == 1 and G == singleton()


def test_upper_triangular_matrix_is_transitive():
    bits = [[i < j for j in range(3)] for i in range(3)]
    assert tournament_from_matrix(bits) == transitive(3)


def test_two_cycle_rejected():
    with pytest.raises(NotAntisymmetric):
        tournament_from_matrix([[False, True], [True, False]])


def test_missing_pair_rejected():
    with pytest.raises(NotAntisymmetric):
        tournament_from_matrix([[False, False], [False, False]])


def test_loop_rejected():
    with pytest.raises(LoopPresent):
        tournament_from_matrix([[True]])


def test_non_square_rejected():
    with pytest.raises(InvalidSize):
        tournament_from_matrix([[False, True]])


def test_named_families():
    assert transitive(3).arcs == {(0, 1), (0, 2), (1, 2)}
    assert cyclic(3).arcs == {(0, 1), (1, 2), (2, 0)}
    assert path_digraph(3).arcs == {(0, 1), (1, 2)}
    assert empty_digraph(4).arcs == frozenset()
    assert cycle_digraph(4).arcs == {(0, 1), (1, 2), (2, 3), (3, 0)}


@pytest.mark.parametrize("k", [1, 2, 4, 5])
def test_cyclic_only_for_three(k):
    with pytest.raises(NotATournament):
        cyclic(k)


@pytest.mark.parametrize("make", [transitive, path_digraph, empty_digraph])
def test_zero_size_rejected(make):
    with pytest.raises(InvalidSize):
        make(0)


def test_digraph_arc_range():
    with pytest.raises(InvalidArc):
        Digraph(2, frozenset({(0, 2)}))


def test_digraph_tournament_conversion():
    D = Digraph(3, frozenset({(0, 1), (1, 2), (2, 0)}))
    assert D.is_tournament()
    assert D.as_tournament() == cyclic(3)
    assert not path_digraph(3).is_tournament()
    with pytest.raises(NotATournament):
        path_digraph(3).as_tournament()


def test_from_arcs():
    assert tournament_from_arcs(3, [(0, 1), (1, 2), (2, 0)]) == cyclic(3)


def test_direct_sum_of_transitive():
    assert direct_sum([transitive(2), transitive(3)]) == transitive(5)


def test_direct_sum_of_two_cycles():
    G = direct_sum([cyclic(3), cyclic(3)])
    assert len(G.arcs) == 15
    assert all(G.beats[i][j] for i in range(3) for j in range(3, 6))


def test_direct_sum_needs_parts():
    with pytest.raises(InvalidSize):
        direct_sum([])


def test_induced_examples():
    assert induced(transitive(5), [1, 3, 4]) == transitive(3)
    two = induced(cyclic(3), [0, 1])
    assert two.n == 2 and two.beats[0][1]
    assert induced(cyclic(3), []) == empty_tournament()


def test_induced_errors():
    with pytest.raises(DuplicateVertex):
        induced(transitive(3), [0, 0])
    with pytest.raises(OutOfRange):
        induced(transitive(3), [3])


def test_scores_examples():
    assert scores(transitive(4)) == [3, 2, 1, 0]
    assert scores(cyclic(3)) == [1, 1, 1]
    assert scores(direct_sum([cyclic(3), cyclic(3)])) == [4, 4, 4, 1, 1, 1]


def test_isomorphism_examples():
    assert not is_isomorphic(transitive(3), cyclic(3))
    for perm in itertools.permutations(range(3)):
        assert is_isomorphic(cyclic(3), cyclic(3).relabel(perm))


def test_four_vertex_isomorphism_classes():
    reps = []
    for G in all_tournaments(4):
        if not any(is_isomorphic(G, H) for H in reps):
            reps.append(G)
    assert len(reps) == 4


def test_isomorphism_cap():
    G = transitive(9)
    with pytest.raises(TooLarge):
        is_isomorphic(G, G)


def test_all_tournaments_counts():
    assert [sum(1 for _ in all_tournaments(n)) for n in range(1, 6)] == [1, 2, 8, 64, 1024]


def test_completions():
    comps = list(tournament_completions(path_digraph(3)))
    assert len(comps) == 2
    assert all({(0, 1), (1, 2)} <= c.arcs for c in comps)
    assert list(tournament_completions(Digraph(2, frozenset({(0, 1), (1, 0)})))) == []


def test_falling_factorial():
    assert falling_factorial(6, 3) == 120
    assert falling_factorial(3, 0) == 1
    assert falling_factorial(2, 3) == 0


@given(tournaments())
def test_arc_count(G):
    assert sum(map(sum, G.beats)) == G.n * (G.n - 1) // 2
    assert sum(scores(G)) == G.n * (G.n - 1) // 2


@settings(max_examples=60)
@given(tournaments(max_n=3), tournaments(max_n=3), tournaments(max_n=2))
def test_direct_sum_associative(A, B, C):
    if A.n + B.n + C.n == 0:
        return
    left = direct_sum([direct_sum([A, B]), C])
    assert left == direct_sum([A, B, C])
    assert is_isomorphic(left, direct_sum([A, B, C]))


@given(tournaments(max_n=4), tournaments(max_n=4))
def test_induced_recovers_first_part(A, B):
    G = direct_sum([A, B])
    assert induced(G, range(A.n)) == A
    assert induced(G, range(A.n, A.n + B.n)) == B


@given(tournaments(max_n=6), st.randoms(use_true_random=False))
def test_relabel_is_isomorphic(G, r):
    perm = list(range(G.n))
    r.shuffle(perm)
    assert is_isomorphic(G, G.relabel(perm))


def test_random_tournament_valid():
    rng = random.Random(1)
    for n in range(8):
        G = random_tournament(n, rng)
        assert isinstance(G, Tournament) and G.n == n
