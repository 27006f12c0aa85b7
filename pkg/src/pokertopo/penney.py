"""Exact winning probabilities for Penney's game and the word-complex homology.

Two players pick distinct binary words of the same length; a fair bit
stream is drawn and the first word to appear wins.  The definitional
computation is an exact rational absorption solve on the prefix-matching
Markov chain; the Conway leading-number formula is the fast path and the
two are asserted equal in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product

from .complexes import Tournament, order_complex
from .homology import HomologyReport, homology

HALF = Fraction(1, 2)


@dataclass(frozen=True, slots=True)
class BinaryWord:
    """A nonempty word over {0, 1}, e.g. BinaryWord("011")."""

    bits: str

    def __post_init__(self) -> None:
        if not self.bits or any(ch not in "01" for ch in self.bits):
            raise ValueError(f"not a binary word: {self.bits!r}")

    def __len__(self) -> int:
        return len(self.bits)

    def __str__(self) -> str:
        return self.bits

    def complement(self) -> "BinaryWord":
        return BinaryWord("".join("1" if ch == "0" else "0" for ch in self.bits))


def _as_bits(word: BinaryWord | str) -> str:
    bits = word.bits if isinstance(word, BinaryWord) else word
    BinaryWord(bits)  # validate
    return bits


def correlation(a: BinaryWord | str, b: BinaryWord | str) -> int:
    """Conway leading number: sum of 2**(k-1) over the lengths k for which
    the last k bits of ``a`` equal the first k bits of ``b``."""
    x, y = _as_bits(a), _as_bits(b)
    if len(x) != len(y):
        raise ValueError(f"length mismatch: {len(x)} vs {len(y)}")
    n = len(x)
    return sum(1 << (k - 1) for k in range(1, n + 1) if x[n - k :] == y[:k])


def first_occurrence_probability(a: BinaryWord | str, b: BinaryWord | str) -> Fraction:
    """P(``a`` appears strictly before ``b``) in an i.i.d. fair bit stream.

    Uses the correlation odds  (corr(b,b)-corr(b,a)) : (corr(a,a)-corr(a,b));
    the direction is pinned against the Markov solve by the test suite.
    """
    x, y = _as_bits(a), _as_bits(b)
    if x == y:
        raise ValueError("words must differ")
    num = correlation(y, y) - correlation(y, x)
    den = num + correlation(x, x) - correlation(x, y)
    return Fraction(num, den)


def markov_first_occurrence_probability(
    a: BinaryWord | str, b: BinaryWord | str
) -> Fraction:
    """Definitional oracle: absorption probability of the prefix automaton.

    States are the proper prefixes of either word; from state s reading bit
    c, the next state is the longest suffix of s+c that is again a proper
    prefix, with s+c equal to a full word absorbing the game.  The linear
    system is solved exactly over the rationals.
    """
    x, y = _as_bits(a), _as_bits(b)
    if len(x) != len(y):
        raise ValueError(f"length mismatch: {len(x)} vs {len(y)}")
    if x == y:
        raise ValueError("words must differ")
    states = sorted({x[:k] for k in range(len(x))} | {y[:k] for k in range(len(y))})
    index = {s: i for i, s in enumerate(states)}
    n = len(states)

    def advance(state: str, bit: str) -> str | None:
        t = state + bit
        if t == x:
            return "WIN_A"
        if t == y:
            return "WIN_B"
        for length in range(len(t), -1, -1):
            suffix = t[len(t) - length :]
            if suffix in index:
                return suffix
        raise AssertionError("empty prefix is always a state")

    # rows: P[s] - 1/2 P[next0] - 1/2 P[next1] = 1/2 [next0 wins] + 1/2 [next1 wins]
    matrix = [[Fraction(0)] * n for _ in range(n)]
    rhs = [Fraction(0)] * n
    for s, i in index.items():
        matrix[i][i] += 1
        for bit in "01":
            target = advance(s, bit)
            if target == "WIN_A":
                rhs[i] += HALF
            elif target == "WIN_B":
                pass
            else:
                matrix[i][index[target]] -= HALF
    solution = _solve_exact(matrix, rhs)
    return solution[index[""]]


def _solve_exact(matrix: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    n = len(matrix)
    a = [row[:] + [rhs[i]] for i, row in enumerate(matrix)]
    for col in range(n):
        pivot_row = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[pivot_row] = a[pivot_row], a[col]
        inv = 1 / a[col][col]
        a[col] = [v * inv for v in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                factor = a[r][col]
                a[r] = [v - factor * w for v, w in zip(a[r], a[col])]
    return [a[r][n] for r in range(n)]


def all_words(n: int) -> list[BinaryWord]:
    """All 2**n words of length n in binary order."""
    if n < 1:
        raise ValueError(f"word length must be >= 1, got {n}")
    return [BinaryWord("".join(bits)) for bits in product("01", repeat=n)]


@lru_cache(maxsize=None)
def penney_tournament(n: int) -> Tournament:
    """Beats relation on all words of length n: a -> b iff P(a before b) > 1/2."""
    words = all_words(n)
    labels = [w.bits for w in words]
    edges = []
    probabilities = {}
    for i in range(len(labels)):
        for j in range(i + 1, len(labels)):
            p = first_occurrence_probability(labels[i], labels[j])
            if p > HALF:
                edges.append((labels[i], labels[j]))
                probabilities[(labels[i], labels[j])] = p
            elif p < HALF:
                edges.append((labels[j], labels[i]))
                probabilities[(labels[j], labels[i])] = 1 - p
    return Tournament(labels, edges, probabilities)


def penney_homology(n: int) -> HomologyReport:
    """Reduced integer homology of the order complex of the length-n game."""
    return homology(order_complex(penney_tournament(n)), reduced=True)
