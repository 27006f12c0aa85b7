"""The reproduction suite behind the ``verify-paper`` subcommand.

Each check re-derives one headline result from scratch (exact enumeration,
independent oracles) and compares against the frozen reference values.
Checks return (passed, detail) so the CLI can print one line per item.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Callable

import numpy as np

from . import _tables, reference
from .cards import Card, HolePair, all_suit_permutations
from .complexes import SimplicialComplex, join_many, order_complex
from .equity import (
    BOARDS_PER_MATCHUP,
    LiveCounts,
    TieConvention,
    matchup_counts,
    relation_at,
    win_probability,
)
from .evaluator import five_card_census, rank7_oracle
from .explore import sphere_like
from .homology import betti_numbers_mod2, homology
from .matrix import CountsMatrix, closest_call, full_matrix
from .penney import (
    all_words,
    first_occurrence_probability,
    markov_first_occurrence_probability,
    penney_homology,
    penney_tournament,
)
from .persistence import filtration_from_matrix, persistence

PAPER_CONVENTION = TieConvention.SPLIT_TIE  # the convention the goldens pin down
DEFAULT_SEED = 171_2304


@dataclass
class VerifyContext:
    seed: int = DEFAULT_SEED
    jobs: int = 1
    matrix_path: str | None = None
    counts: LiveCounts = field(default_factory=LiveCounts)
    matrix: CountsMatrix | None = None

    def eight_hands(self) -> list[HolePair]:
        return [HolePair.from_text(t) for t in reference.EIGHT_HANDS]


CheckResult = tuple[bool, str]
Check = Callable[[VerifyContext], CheckResult]


def check_evaluator_oracle(ctx: VerifyContext) -> CheckResult:
    """rank7 equals the naive 21-subset oracle on 100,000 seeded draws."""
    rng = np.random.default_rng(ctx.seed)
    n = 100_000
    hands = np.empty((n, 7), dtype=np.int64)
    for i in range(n):
        hands[i] = rng.choice(52, size=7, replace=False)
    fast = _tables.eval_cards(hands)
    for i in range(n):
        cards = [Card.from_index(int(c)) for c in hands[i]]
        if int(fast[i]) != rank7_oracle(cards).packed:
            return False, f"mismatch on draw {i}: {' '.join(map(str, cards))}"
    directed = [
        "Ah 2d 3c 4s 5h Kd Kc",   # wheel beats the pair
        "Ah 2h 3h 4h 5h Kd Kc",   # steel wheel
        "2c 3c 4c 5c 6c 7d 8d",   # straight flush under a longer straight
        "Ah Kh Qh Jh 9h Td Tc",   # flush on a near-straight board
        "2c 2d 8h 8s 9c 9d Ah",   # counterfeited two pair
        "As Ks Qs Js Ts 2c 3c",   # royal flush
    ]
    for text in directed:
        cards = [Card.from_text(t) for t in text.split()]
        fast_v = int(_tables.eval_scalar(tuple(c.index for c in cards)))
        if fast_v != rank7_oracle(cards).packed:
            return False, f"mismatch on directed case {text}"
    return True, f"{n} random draws + {len(directed)} directed cases agree"


def check_census(ctx: VerifyContext) -> CheckResult:
    """Exhaustive 5-card census equals the classic frequencies, both paths."""
    expected = reference.FIVE_CARD_CATEGORY_CENSUS
    naive = five_card_census()
    if naive != expected:
        return False, f"rank5 census {naive} != {expected}"
    combos = np.fromiter(
        (c for combo in combinations(range(52), 5) for c in combo),
        dtype=np.int64,
        count=5 * 2_598_960,
    ).reshape(-1, 5)
    packed = _tables.eval_cards(combos)
    table_census = tuple(
        int(np.count_nonzero((packed >> _tables.CATEGORY_SHIFT) == cat))
        for cat in range(9)
    )
    if table_census != expected:
        return False, f"table census {table_census} != {expected}"
    return True, f"both evaluation paths reproduce {expected}"


def _random_disjoint_matchups(seed: int, count: int) -> list[tuple[HolePair, HolePair]]:
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        cards = rng.sample(range(52), 4)
        a = HolePair.of(Card.from_index(cards[0]), Card.from_index(cards[1]))
        b = HolePair.of(Card.from_index(cards[2]), Card.from_index(cards[3]))
        out.append((a, b))
    return out


def check_matchup_totals(ctx: VerifyContext) -> CheckResult:
    """wins+ties+losses over all boards is C(48,5) for random matchups."""
    for a, b in _random_disjoint_matchups(ctx.seed, 100):
        counts = matchup_counts(a, b)
        if counts.total != BOARDS_PER_MATCHUP:
            return False, f"{a} vs {b}: total {counts.total}"
    return True, f"100 random matchups all total {BOARDS_PER_MATCHUP}"


def check_triangle(ctx: VerifyContext) -> CheckResult:
    """The classic intransitive triple: exact counts, equities, 3-cycle."""
    details = []
    for a_text, b_text, golden, approx in reference.TRIANGLE_MATCHUPS:
        a, b = HolePair.from_text(a_text), HolePair.from_text(b_text)
        counts = ctx.counts.counts(a, b)
        if (counts.wins, counts.ties, counts.losses) != golden:
            return False, f"{a_text} vs {b_text}: counts {counts} != {golden}"
        prob = win_probability(counts, PAPER_CONVENTION)
        if abs(float(prob) - approx) > reference.TRIANGLE_TOLERANCE:
            return False, f"{a_text} vs {b_text}: {float(prob):.6f} not near {approx}"
        details.append(f"{float(prob):.4f}")
    hands = [HolePair.from_text(t) for t, _, _, _ in reference.TRIANGLE_MATCHUPS]
    tournament = relation_at(ctx.counts, hands, PAPER_CONVENTION)
    labels = [str(h) for h in hands]
    cycle = all(
        tournament.beats(labels[i], labels[(i + 1) % 3]) for i in range(3)
    )
    if not cycle:
        return False, f"directed 3-cycle missing: edges {sorted(tournament.edges)}"
    return True, f"split-tie equities {', '.join(details)}; 3-cycle holds"


def check_closest(ctx: VerifyContext) -> CheckResult:
    """A low pair against same-suit overcards wins by 7e-5 over a coin flip."""
    a_text, b_text, golden = reference.CLOSEST_MATCHUP
    counts = ctx.counts.counts(HolePair.from_text(a_text), HolePair.from_text(b_text))
    if (counts.wins, counts.ties, counts.losses) != golden:
        return False, f"counts {counts} != {golden}"
    prob = win_probability(counts, PAPER_CONVENTION)
    if abs(float(prob) - reference.CLOSEST_PROBABILITY) > reference.CLOSEST_TOLERANCE:
        return False, f"probability {float(prob):.6f} not within tolerance"
    return True, f"{a_text} vs {b_text}: {float(prob):.5f}"


def check_four_sphere(ctx: VerifyContext) -> CheckResult:
    """The 8-hand set: digraph, H4 = Z, and the S0 * S1 * S1 join structure."""
    hands = ctx.eight_hands()
    labels = [str(h) for h in hands]
    tournament = relation_at(ctx.counts, hands, PAPER_CONVENTION)
    expected = {
        (labels[i], labels[j]) for i, j in reference.EIGHT_HAND_EDGES
    }
    if set(tournament.edges) != expected:
        missing = expected - set(tournament.edges)
        extra = set(tournament.edges) - expected
        return False, f"digraph differs: missing {missing}, extra {extra}"
    complex_ = order_complex(tournament)
    if complex_.f_vector() != reference.EIGHT_HAND_F_VECTOR:
        return False, f"f-vector {complex_.f_vector()}"
    report = homology(complex_, reduced=True)
    if report.betti != (0, 0, 0, 0, 1) or any(report.torsion):
        return False, f"homology {report.betti}, torsion {report.torsion}"
    rows = [
        SimplicialComplex(labels[0:2], [[labels[0]], [labels[1]]]),
        SimplicialComplex(
            labels[2:5],
            [[labels[2], labels[3]], [labels[3], labels[4]], [labels[2], labels[4]]],
        ),
        SimplicialComplex(
            labels[5:8],
            [[labels[5], labels[6]], [labels[6], labels[7]], [labels[5], labels[7]]],
        ),
    ]
    if join_many(rows) != complex_:
        return False, "join of the three rows differs from the order complex"
    return True, "digraph, reduced H4 = Z, and join decomposition all verified"


def check_penney3(ctx: VerifyContext) -> CheckResult:
    """Length-3 game: the classic 4-cycle and a bouquet of three circles."""
    tournament = penney_tournament(3)
    cycle = reference.PENNEY3_CYCLE
    for a, b in zip(cycle, cycle[1:] + cycle[:1]):
        if not tournament.beats(a, b):
            return False, f"missing edge {a} -> {b}"
    report = penney_homology(3)
    if report.betti != reference.PENNEY_REDUCED_BETTI[3] or any(report.torsion):
        return False, f"homology {report.betti}"
    return True, "4-cycle present; reduced homology Z^3 in degree 1"


def check_penney6(ctx: VerifyContext) -> CheckResult:
    """Length-6 game: reduced integer homology of the full 64-word complex."""
    report = penney_homology(6)
    expected = reference.PENNEY_REDUCED_BETTI[6]
    if report.betti != expected:
        return False, f"betti {report.betti} != {expected}"
    if any(report.torsion):
        return False, f"unexpected torsion {report.torsion}"
    return True, "reduced betti (0,0,0,0,0,38,149,12,0,...), torsion-free"


def check_penney_odds(ctx: VerifyContext) -> CheckResult:
    """Correlation-formula odds equal the Markov-chain solve exactly."""
    for n in (3, 4):
        for a, b in combinations([w.bits for w in all_words(n)], 2):
            if first_occurrence_probability(a, b) != markov_first_occurrence_probability(a, b):
                return False, f"disagreement at n={n}: {a} vs {b}"
    rng = random.Random(ctx.seed)
    for n in (5, 6):
        words = [w.bits for w in all_words(n)]
        for _ in range(500):
            a, b = rng.sample(words, 2)
            if first_occurrence_probability(a, b) != markov_first_occurrence_probability(a, b):
                return False, f"disagreement at n={n}: {a} vs {b}"
    return True, "exact agreement on all pairs (n=3,4) and 500 random pairs (n=5,6)"


def check_persistence(ctx: VerifyContext) -> CheckResult:
    """Threshold filtration of the 8-hand set against direct Betti numbers."""
    hands = ctx.eight_hands()
    filtration = filtration_from_matrix(ctx.counts, hands, PAPER_CONVENTION)
    diagram = persistence(filtration)
    for p, complex_ in filtration:
        alive = diagram.alive_counts(p)
        direct = {
            d: b for d, b in enumerate(betti_numbers_mod2(complex_)) if b
        }
        if alive != direct:
            return False, f"at p={p}: alive {alive} != betti {direct}"
    points4 = diagram.points_of_dimension(4)
    if len(points4) != 1:
        return False, f"expected one degree-4 class, got {len(points4)}"
    point = points4[0]
    if point.birth != reference.S4_MIN_EDGE_PROBABILITY or point.death is not None:
        return False, f"degree-4 class born {point.birth}, death {point.death}"
    return True, (
        f"alive counts match at all {len(filtration)} stages; degree-4 class "
        f"born at {point.birth} (~{float(point.birth):.5f}) and persists"
    )


def check_full_matrix(ctx: VerifyContext) -> CheckResult:
    """The full job: antisymmetry, suit invariance, global closest call."""
    if ctx.matrix is not None:
        matrix = ctx.matrix
    elif ctx.matrix_path is not None:
        try:
            matrix = CountsMatrix.load(ctx.matrix_path)
        except (OSError, ValueError):
            matrix = full_matrix(jobs=ctx.jobs, checkpoint=str(ctx.matrix_path) + ".checkpoint")
            matrix.save(ctx.matrix_path)
        ctx.matrix = matrix
    else:
        return False, "no matrix file provided (pass --matrix)"
    w = matrix.data[:, :, 0]
    t = matrix.data[:, :, 1]
    l = matrix.data[:, :, 2]
    if not (np.array_equal(w, l.T) and np.array_equal(t, t.T)):
        return False, "global antisymmetry violated"
    rng = random.Random(ctx.seed)
    sigmas = all_suit_permutations()
    for a, b in _random_disjoint_matchups(ctx.seed + 1, 20):
        sigma = rng.choice(sigmas)
        direct = matrix.counts(a, b)
        mapped = matrix.counts(sigma.apply_to_pair(a), sigma.apply_to_pair(b))
        if direct != mapped:
            return False, f"suit invariance broken at {a} vs {b} under {sigma}"
        if direct != matchup_counts(a, b):
            return False, f"matrix entry {a} vs {b} differs from direct enumeration"
    a, b, prob = closest_call(matrix, PAPER_CONVENTION)
    expect_a, expect_b, _ = reference.CLOSEST_MATCHUP
    from .cards import canonical_matchup

    found = canonical_matchup(a, b)[:2]
    expected = canonical_matchup(
        HolePair.from_text(expect_a), HolePair.from_text(expect_b)
    )[:2]
    if found != expected:
        return False, f"closest call {a} vs {b} not in the expected suit class"
    if abs(float(prob) - reference.CLOSEST_PROBABILITY) > reference.CLOSEST_TOLERANCE:
        return False, f"closest probability {float(prob)}"
    return True, f"antisymmetry, suit invariance, closest call {a} vs {b} = {float(prob):.5f}"


@dataclass(frozen=True)
class VerifyItem:
    number: int
    name: str
    needs_matrix: bool
    slow: bool
    run: Check


ALL_CHECKS: tuple[VerifyItem, ...] = (
    VerifyItem(1, "evaluator vs oracle (100k draws)", False, False, check_evaluator_oracle),
    VerifyItem(2, "five-card category census", False, False, check_census),
    VerifyItem(3, "matchup totals = C(48,5)", False, False, check_matchup_totals),
    VerifyItem(4, "intransitive triangle equities", False, False, check_triangle),
    VerifyItem(5, "closest-call matchup", False, False, check_closest),
    VerifyItem(6, "8-hand set is a 4-sphere", False, False, check_four_sphere),
    VerifyItem(7, "Penney n=3 cycle and bouquet", False, False, check_penney3),
    VerifyItem(8, "Penney n=6 homology", False, True, check_penney6),
    VerifyItem(9, "Penney odds formula vs Markov solve", False, False, check_penney_odds),
    VerifyItem(10, "persistence of the 4-sphere filtration", False, False, check_persistence),
    VerifyItem(11, "full matrix reproduction", True, True, check_full_matrix),
)
