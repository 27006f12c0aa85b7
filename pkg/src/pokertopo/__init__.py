"""Exhaustive Texas Hold'em equities and the topology of the beats relation.

The pipeline: exact matchup counts over all 1,712,304 boards -> an
antisymmetric "beats" tournament at a probability threshold -> its order
complex -> integer homology via Smith normal form, with persistence over
the threshold filtration.  Penney's game gets the same treatment via
exact word-occurrence odds.
"""

from .cards import (
    Card,
    CardParseError,
    HolePair,
    OverlappingCardsError,
    SuitPermutation,
    all_hole_pairs,
    all_suit_permutations,
    apply_suit_permutation,
    canonical_matchup,
    card_from_text,
    pair_index,
    parse_hand_list,
)
from .complexes import (
    SimplicialComplex,
    Tournament,
    f_vector,
    is_simplex,
    join,
    join_many,
    order_complex,
)
from .equity import (
    BOARDS_PER_MATCHUP,
    CountsProvider,
    LiveCounts,
    MatchupCount,
    TieConvention,
    beats,
    beats_counts,
    matchup_counts,
    relation_at,
    win_probability,
)
from .evaluator import (
    CATEGORY_NAMES,
    HandValue,
    five_card_census,
    rank5,
    rank7,
    rank7_oracle,
)
from .explore import (
    SearchConfig,
    SearchHit,
    SplitMix64,
    evaluate_hand_set,
    sample_hand_set,
    search,
    sphere_like,
)
from .homology import (
    BoundaryMatrix,
    HomologyReport,
    SmithNormalForm,
    betti_numbers_mod2,
    boundary_matrices,
    homology,
    smith_normal_form,
)
from .matrix import (
    CountsMatrix,
    canonical_class_keys,
    closest_call,
    count_canonical_classes,
    full_matrix,
)
from .penney import (
    BinaryWord,
    correlation,
    first_occurrence_probability,
    markov_first_occurrence_probability,
    penney_homology,
    penney_tournament,
)
from .persistence import (
    SENTINEL,
    PersistenceDiagram,
    PersistencePoint,
    filtration_from_matrix,
    filtration_from_tournament,
    persistence,
)

__version__ = "0.1.0"
