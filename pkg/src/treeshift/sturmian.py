"""Sturmian words and Sturmian-driven labelings of the binary tree.

A slope alpha in (0,1) and intercept rho define the mechanical word
s(n) = floor((n+1) alpha + rho) - floor(n alpha + rho), n >= 1. Slopes
enter as exact fractions with a stated error bound (continued-fraction
convergents preferred); every floor is evaluated in exact rational
arithmetic and certified against the error bound, so a word is either
correct or the computation refuses with PrecisionExhausted.

Factors are harvested from a long prefix into a FactorOracle that knows
every factor up to a length bound and its valid successor symbols. For
an irrational slope the factor counts must hit p(n) = n + 1 exactly,
with exactly one right-special factor (two successors) per length; any
deviation raises ComplexityViolation, which is also how rational slopes
and too-small harvest windows are caught.

The tree labelings follow one growth rule: the root carries the first
symbol of the lexicographically minimal sequence of the system (0
followed by the rho=0 word), and below a node whose root-to-node path
spells a non-right-special factor both children copy the unique
successor. At a right-special node the two successors are split across
the children: the lexicographic variant puts 0 left and 1 right, the
random variant flips a seeded fair coin per such node in breadth-first
order. Every root-to-node path is a factor by construction. Levels are
processed through small per-level factor-id tables, so trees up to the
depth cap stay cheap even though they have millions of nodes.
"""

from __future__ import annotations

import random
from array import array
from dataclasses import dataclass, field
from fractions import Fraction

from .oracle import LabeledTree, blocks_in_tree

MAX_TREE_DEPTH = 24
MIN_HARVEST_WINDOW = 1000


class PrecisionExhausted(ArithmeticError):
    """A floor could not be certified at the stated slope precision."""


class ComplexityViolation(ValueError):
    """Harvested factor counts are not those of a Sturmian word."""


@dataclass(frozen=True)
class SturmianParams:
    """Slope, intercept and working length of one Sturmian system."""

    alpha: Fraction
    alpha_error: Fraction
    rho: Fraction = Fraction(0)
    max_len: int = 30
    approximate: bool = False

    def __post_init__(self):
        if not 0 < self.alpha < 1:
            raise ValueError("alpha must lie strictly between 0 and 1")
        if self.alpha_error < 0:
            raise ValueError("alpha_error must be nonnegative")
        if not 0 <= self.rho < 1:
            raise ValueError("rho must lie in [0, 1)")
        if self.max_len < 1:
            raise ValueError("max_len must be at least 1")

    @classmethod
    def from_continued_fraction(
        cls, terms, rho: Fraction = Fraction(0), max_len: int = 30
    ) -> "SturmianParams":
        """Convergent of [a0; a1, a2, ...] with the 1/q^2 error bound."""
        terms = list(terms)
        if len(terms) < 2:
            raise ValueError("need at least two continued-fraction terms")
        if terms[0] != 0:
            raise ValueError("first term must be 0 for a slope in (0, 1)")
        if any(t < 1 for t in terms[1:]):
            raise ValueError("continued-fraction terms after the first must be >= 1")
        p_prev, p_cur = 1, terms[0]
        q_prev, q_cur = 0, 1
        for a in terms[1:]:
            p_prev, p_cur = p_cur, a * p_cur + p_prev
            q_prev, q_cur = q_cur, a * q_cur + q_prev
        alpha = Fraction(p_cur, q_cur)
        return cls(alpha, Fraction(1, q_cur * q_cur), rho, max_len)

    @classmethod
    def from_decimal(
        cls, text: str, rho: Fraction = Fraction(0), max_len: int = 30
    ) -> "SturmianParams":
        """Decimal slope, trusted to half its last printed place."""
        alpha = Fraction(text)
        places = len(text.partition(".")[2])
        error = Fraction(1, 2 * 10**places)
        return cls(alpha, error, rho, max_len, approximate=True)

    @classmethod
    def fibonacci(cls, max_len: int = 30) -> "SturmianParams":
        """Slope 1/golden^2 = [0; 2, 1, 1, ...], intercept 0."""
        return cls.from_continued_fraction([0, 2] + [1] * 78, max_len=max_len)


def _guarded_floor(value: Fraction, error: Fraction, index: int) -> int:
    base = value.numerator // value.denominator
    frac = value - base
    if frac < error or 1 - frac <= error:
        raise PrecisionExhausted(
            f"floor at position {index} is ambiguous within the slope error; "
            "supply more continued-fraction terms or decimal places"
        )
    return base


def mechanical_word(params: SturmianParams, length: int) -> str:
    """First `length` symbols s(1) .. s(length) of the mechanical word."""
    if length < 1:
        raise ValueError("length must be at least 1")
    out = []
    prev = _guarded_floor(params.alpha + params.rho, params.alpha_error, 1)
    for n in range(1, length + 1):
        value = (n + 1) * params.alpha + params.rho
        cur = _guarded_floor(value, (n + 1) * params.alpha_error, n + 1)
        out.append(str(cur - prev))
        prev = cur
    return "".join(out)


def characteristic_word(params: SturmianParams, length: int) -> str:
    """The intercept-0 word of the same slope."""
    zero = SturmianParams(
        params.alpha, params.alpha_error, Fraction(0), params.max_len, params.approximate
    )
    return mechanical_word(zero, length)


def minimal_sequence(params: SturmianParams, length: int) -> str:
    """Lexicographically minimal sequence of the system: 0 then the rho=0 word."""
    if length < 1:
        raise ValueError("length must be at least 1")
    if length == 1:
        return "0"
    return "0" + characteristic_word(params, length - 1)


@dataclass(frozen=True)
class FactorOracle:
    """Factors up to max_len with their valid successor symbols.

    table[n] maps each length-n factor to its successors as a sorted
    string ("0", "1" or "01"); the empty factor at n = 0 is included.
    """

    max_len: int
    table: tuple[dict, ...] = field(repr=False)

    def complexity(self, n: int) -> int:
        return len(self.table[n])

    def factors(self, n: int) -> list[str]:
        return sorted(self.table[n])

    def successors(self, w: str) -> str:
        return self.table[len(w)][w]

    def right_special(self, n: int) -> str:
        for w, succ in self.table[n].items():
            if len(succ) == 2:
                return w
        raise LookupError(f"no right-special factor of length {n}")

    def is_factor(self, w: str) -> bool:
        if len(w) > self.max_len:
            raise ValueError(f"oracle only covers lengths up to {self.max_len}")
        return w in self.table[len(w)]


def build_factor_oracle(params: SturmianParams, max_len: int | None = None) -> FactorOracle:
    """Harvest and validate the factor language up to max_len."""
    m = params.max_len if max_len is None else max_len
    if m < 1:
        raise ValueError("max_len must be at least 1")
    window = max(10 * m, MIN_HARVEST_WINDOW)
    word = mechanical_word(params, window)
    by_length = []
    for n in range(1, m + 2):
        found = {word[i : i + n] for i in range(len(word) - n + 1)}
        if len(found) != n + 1:
            raise ComplexityViolation(
                f"found {len(found)} factors of length {n}, expected {n + 1}; "
                "the slope may be rational or the harvest window too small"
            )
        by_length.append(found)
    table = [{"": "01"}]
    for n in range(1, m + 1):
        longer = by_length[n]
        entry = {}
        for w in sorted(by_length[n - 1]):
            succ = "".join(c for c in "01" if w + c in longer)
            entry[w] = succ
        table.append(entry)
    for n in range(m + 1):
        special = [w for w, succ in table[n].items() if len(succ) == 2]
        if len(special) != 1:
            raise ComplexityViolation(
                f"{len(special)} right-special factors of length {n}, expected 1"
            )
    return FactorOracle(m, tuple(table))


def label_tree_lex(params: SturmianParams, depth: int) -> LabeledTree:
    """Label the binary tree, splitting right-special nodes as 0 left, 1 right."""
    return _fill_tree(params, depth, chooser=None)


def label_tree_random(params: SturmianParams, depth: int, seed: int = 0) -> LabeledTree:
    """Label the binary tree, splitting right-special nodes by a seeded coin.

    One fair bit is drawn per right-special node in breadth-first
    order; bit 0 assigns (0 left, 1 right), bit 1 the reverse. The
    same seed always reproduces the same tree.
    """
    rng = random.Random(seed)
    return _fill_tree(params, depth, chooser=lambda: rng.getrandbits(1))


def _fill_tree(params: SturmianParams, depth: int, chooser) -> LabeledTree:
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    if depth > MAX_TREE_DEPTH:
        raise ValueError(f"depth {depth} is above the cap of {MAX_TREE_DEPTH}")
    oracle = build_factor_oracle(params, max(depth, params.max_len, 1))
    root = minimal_sequence(params, 1)
    labels = bytearray([int(root)])
    words = [root]
    ids = array("i", [0])
    for level in range(depth):
        last = level == depth - 1
        next_words: list[str] = []
        next_index: dict[str, int] = {}
        moves = {}
        for f, w in enumerate(words):
            succ = oracle.successors(w)
            pair = []
            for c in succ:
                target = -1
                if not last:
                    key = w + c
                    target = next_index.get(key)
                    if target is None:
                        target = next_index[key] = len(next_words)
                        next_words.append(key)
                pair.append((int(c), target))
            moves[f] = pair
        next_ids = array("i") if last else array("i", [0]) * (2 * len(ids))
        for v, f in enumerate(ids):
            pair = moves[f]
            if len(pair) == 1:
                left = right = pair[0]
            elif chooser is not None and chooser():
                right, left = pair
            else:
                left, right = pair
            labels.append(left[0])
            labels.append(right[0])
            if not last:
                next_ids[2 * v] = left[1]
                next_ids[2 * v + 1] = right[1]
        words = next_words
        ids = next_ids
    return LabeledTree(2, depth, bytes(labels))


def path_words(tree: LabeledTree, level: int) -> list[str]:
    """Root-to-node words of one level, left to right."""
    if level < 0 or level > tree.depth:
        raise ValueError("level must lie within the tree depth")
    words = [str(tree.labels[0])]
    start = 0
    for _ in range(level):
        start = 2 * start + 1
        width = (start + 1) // 2
        words = [
            words[(v - start) // 2] + str(tree.labels[v])
            for v in range(start, start + 2 * width)
        ]
    return words


def left_edge_word(tree: LabeledTree) -> str:
    out = []
    v = 0
    for _ in range(tree.depth + 1):
        out.append(str(tree.labels[v]))
        v = tree.arity * v + 1
    return "".join(out)


def tree_complexity(tree: LabeledTree, n_max: int) -> list[int]:
    """p(n) of the tree for n = 0 .. n_max via exhaustive block collection."""
    return [blocks_in_tree(tree, n).count for n in range(n_max + 1)]
