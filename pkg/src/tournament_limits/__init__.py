"""Finite tournaments, tournament kernels and their limits.

Exact rational homomorphism densities, transitivity and irreducibility
tests, ordered decompositions into irreducible parts, direct sums, and
W-random tournament sampling.
"""

from .errors import (
    CapExceeded,
    InternalInconsistency,
    NotATournamentWarning,
    ParseError,
    ValidationError,
)
from .formats import kernel_from_json, kernel_to_json, tournament_from_text, tournament_to_text
from .homcount import (
    densities,
    hom_count,
    ind_count,
    inj_count,
    quotient,
    transitivity_report,
    verify_count_identities,
)
from .kdecomp import (
    decompose_kernel,
    decompose_segment_kernel,
    is_irreducible_kernel,
    reducibility_witness,
    support_digraph,
)
from .kdensity import kernel_transitivity_report, score_integral, t_general_segment, t_ind_segment, t_kernel, t_step
from .kernel import (
    Atom,
    SegmentKernel,
    StepKernel,
    TransitiveSeg,
    adjacency_kernel,
    cantor_truncation,
    discretize,
    eta,
    flatten,
    kernel_direct_sum,
    quasi_random,
    random_segment_kernel,
    random_step_kernel,
    staircase,
    step_kernel,
    tournament_blowup,
    transitive_kernel,
)
from .sampler import EstimateReport, SampleConfig, mc_density, reducibility_rate, sample_tournament, sample_tournaments
from .tdecomp import decompose, is_irreducible, strong_components, t_ind_direct_sum
from .tournament import (
    Digraph,
    Tournament,
    all_tournaments,
    cycle_digraph,
    cyclic,
    direct_sum,
    empty_digraph,
    induced,
    is_isomorphic,
    path_digraph,
    random_tournament,
    scores,
    singleton,
    tournament_from_arcs,
    tournament_from_matrix,
    transitive,
)

__version__ = "0.1.0"
