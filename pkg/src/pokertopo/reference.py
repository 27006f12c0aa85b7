"""Frozen reference values for the verification suite.

Two kinds of constants live here: published approximate values the
artifact must reproduce (classic category frequencies, the intransitive
triangle equities, the closest-call matchup, the length-6 word-complex
homology), and exact goldens frozen from this artifact's own first
verified runs (matchup counts, f-vectors, canonical class count).  The
exact counts were cross-checked against the published approximations and
against independent oracle enumerations before freezing.
"""

from __future__ import annotations

from fractions import Fraction

# classic 5-card category frequencies over all C(52,5) hands, categories 0..8
FIVE_CARD_CATEGORY_CENSUS = (
    1_302_540,  # high card
    1_098_240,  # pair
    123_552,    # two pair
    54_912,     # three of a kind
    10_200,     # straight
    5_108,      # flush
    3_744,      # full house
    624,        # four of a kind
    40,         # straight flush
)

# the intransitive triangle: exact (wins, ties, losses) per ordered matchup,
# with the published approximate split-tie equities they must reproduce
TRIANGLE_MATCHUPS = (
    ("Ac2c", "3c5c", (1_005_468, 12_168, 694_668), 0.591),
    ("3c5c", "2d2h", (832_236, 59_972, 820_096), 0.504),
    ("2d2h", "Ac2c", (1_048_744, 26_994, 636_566), 0.620),
)
TRIANGLE_TOLERANCE = 0.0015

# the closest decided matchup: a low pair against suited overcards sharing
# one suit, e.g. 3c3d vs AcTc, split-tie probability just above 1/2
CLOSEST_MATCHUP = ("3c3d", "AcTc", (851_290, 9_966, 851_048))
CLOSEST_PROBABILITY = 0.50007
CLOSEST_TOLERANCE = 0.00002

# the two disjoint ace pairs are symmetric: equal wins both ways, no edge
ACES_MATCHUP = ("AcAd", "AhAs", (37_210, 1_637_884, 37_210))

# the 8-hand set whose order complex is a 4-sphere
EIGHT_HANDS = ("AcAd", "AhAs", "6d6s", "JsQd", "ThJh", "2h2s", "7sTc", "4c6c")

# expected digraph on EIGHT_HANDS (indices into the tuple above): both ace
# pairs beat all six lower hands, each middle-row hand beats each bottom-row
# hand, and each row of three forms a directed 3-cycle; the ace pairs are
# incomparable.
EIGHT_HAND_EDGES = frozenset(
    [(0, j) for j in range(2, 8)]
    + [(1, j) for j in range(2, 8)]
    + [(i, j) for i in (2, 3, 4) for j in (5, 6, 7)]
    + [(2, 3), (3, 4), (4, 2), (5, 6), (6, 7), (7, 5)]
)

EIGHT_HAND_F_VECTOR = (8, 27, 48, 45, 18)

# weakest edge of the 4-sphere: 2h2s beats 7sTc; this is where the
# degree-4 persistent class is born
S4_MIN_EDGE_PROBABILITY = Fraction(573_019, 1_141_536)

# Penney's game: the famous length-3 cycle and known/frozen reduced Betti
# numbers of the full word complexes (all torsion-free)
PENNEY3_CYCLE = ("011", "110", "100", "001")
PENNEY_REDUCED_BETTI = {
    3: (0, 3, 0),
    4: (0, 0, 1, 2, 0, 0),
    5: (0, 0, 0, 0, 15, 0, 0, 0, 0),
    6: (0, 0, 0, 0, 0, 38, 149, 12, 0, 0, 0, 0, 0),
}
PENNEY_F_VECTORS = {
    3: (8, 18, 8),
    6: (64, 1538, 16652, 94050, 303858, 591754, 713572, 538240,
        252908, 72206, 11728, 914, 20),
}

# suit-symmetry classes among all 1,624,350 ordered disjoint matchups
CANONICAL_MATCHUP_CLASSES = 93_769
