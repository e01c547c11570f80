"""Exhaustive ground truth at small depth.

Everything here works on explicit labelings laid out breadth first:
index 0 is the root and the children of index i are k*i+1 .. k*i+k, so
a depth-n tree over arity k occupies (k^(n+1)-1)/(k-1) consecutive
labels and the level-l slice sits between node_count(k, l-1) and
node_count(k, l). Blocks are encoded as the bytes of that layout, one
symbol index per byte: fixed length, hashable, and lexicographic order
on the encoding is the canonical census order.

enumerate_configs builds every valid labeling by level composition: a
depth-(n+1) block is a root symbol over k independently chosen valid
depth-n blocks whose roots follow it, which also makes the construction
emit each block exactly once. Materialization is refused above
MATERIALIZE_CAP nodes; the counting mode runs the same composition as a
per-symbol dynamic program over exact integers and has no cap.

The census supports two checks of the counting algebra. The extension
identity says the number of depth-(n+1) blocks equals, summed over
depth-n blocks, the product over leaf symbols a of t_a^k with t_a the
row sum, since each leaf extends independently. The submultiplicative
inequalities bound p(m+n) by p(m) p(n)^(k^m) (cut at level m) and, for
m dividing the total depth, by the telescoped power of p(m).
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass

from .matrix import TransitionMatrix

MATERIALIZE_CAP = 40


class TooLarge(ValueError):
    """Materialization was requested past the node-count cap."""


class DepthExceeded(ValueError):
    """A block depth larger than the host tree depth was requested."""


def node_count(arity: int, depth: int) -> int:
    """Nodes in a depth-`depth` initial subtree; 0 when depth is -1."""
    return (arity ** (depth + 1) - 1) // (arity - 1)


def level_bounds(arity: int, level: int) -> tuple[int, int]:
    """Half-open index range of one level in the breadth-first layout."""
    return node_count(arity, level - 1), node_count(arity, level)


@dataclass(frozen=True)
class LabeledTree:
    """A fully labeled initial subtree, labels as symbol indices."""

    arity: int
    depth: int
    labels: bytes

    def __post_init__(self):
        if self.arity < 2:
            raise ValueError("arity must be at least 2")
        if self.depth < 0:
            raise ValueError("depth must be nonnegative")
        if len(self.labels) != node_count(self.arity, self.depth):
            raise ValueError(
                f"expected {node_count(self.arity, self.depth)} labels, "
                f"got {len(self.labels)}"
            )

    @classmethod
    def from_labels(cls, arity: int, depth: int, labels) -> "LabeledTree":
        return cls(arity, depth, bytes(labels))

    @property
    def size(self) -> int:
        return len(self.labels)

    def children(self, i: int) -> range:
        return range(self.arity * i + 1, self.arity * i + self.arity + 1)

    def internal_nodes(self) -> range:
        return range(node_count(self.arity, self.depth - 1))

    def is_valid_for(self, M: TransitionMatrix) -> bool:
        for u in self.internal_nodes():
            row = M.rows[self.labels[u]]
            for w in self.children(u):
                if not row[self.labels[w]]:
                    return False
        return True


@dataclass(frozen=True)
class BlockCensus:
    """All distinct blocks of one depth, sorted by encoding."""

    arity: int
    depth: int
    alphabet_size: int
    blocks: tuple[bytes, ...]

    def __post_init__(self):
        for prev, cur in zip(self.blocks, self.blocks[1:]):
            if prev >= cur:
                raise ValueError("census blocks must be strictly ascending")

    @property
    def count(self) -> int:
        return len(self.blocks)

    def terminal_counts(self, block: bytes) -> tuple[int, ...]:
        """Per-symbol counts over the deepest level of one block."""
        lo, hi = level_bounds(self.arity, self.depth)
        counts = [0] * self.alphabet_size
        for b in block[lo:hi]:
            counts[b] += 1
        return tuple(counts)

    def to_json(self) -> str:
        payload = {
            "n": self.depth,
            "count": self.count,
            "blocks": ["".join(str(b) for b in blk) for blk in self.blocks],
        }
        return json.dumps(payload, indent=2) + "\n"


@dataclass(frozen=True)
class EnumerationResult:
    arity: int
    depth: int
    counts: tuple[int, ...]
    total: int
    census: BlockCensus | None


def enumerate_configs(
    M: TransitionMatrix, arity: int = 2, depth: int = 0, materialize: bool = True
) -> EnumerationResult:
    """Count, and optionally list, every valid depth-`depth` labeling."""
    if depth < 0:
        raise ValueError("depth must be nonnegative")
    succ = M.successor_table()
    if materialize:
        if node_count(arity, depth) > MATERIALIZE_CAP:
            raise TooLarge(
                f"depth {depth} at arity {arity} has {node_count(arity, depth)} "
                f"nodes, past the cap of {MATERIALIZE_CAP}"
            )
        per_symbol = [[bytes([i])] for i in range(M.d)]
        for level in range(depth):
            per_symbol = _compose_blocks(succ, per_symbol, level, arity)
        counts = tuple(len(blocks) for blocks in per_symbol)
        blocks = sorted(b for blocks in per_symbol for b in blocks)
        census = BlockCensus(arity, depth, M.d, tuple(blocks))
    else:
        counts = [1] * M.d
        for _ in range(depth):
            counts = _count_blocks(succ, counts, arity)
        counts = tuple(counts)
        census = None
    return EnumerationResult(arity, depth, counts, sum(counts), census)


def _compose_blocks(succ, per_symbol, prev_depth: int, arity: int):
    """Extend per-root-symbol block lists from prev_depth to prev_depth+1."""
    bounds = [level_bounds(arity, l) for l in range(prev_depth + 1)]
    out = []
    for i, s in enumerate(succ):
        root = bytes([i])
        candidates = [b for j in s for b in per_symbol[j]]
        blocks = []
        for combo in itertools.product(candidates, repeat=arity):
            parts = [root]
            for lo, hi in bounds:
                for child in combo:
                    parts.append(child[lo:hi])
            blocks.append(b"".join(parts))
        out.append(blocks)
    return out


def _count_blocks(succ, counts, arity: int):
    return [sum(counts[j] for j in s) ** arity for s in succ]


def blocks_in_tree(tree: LabeledTree, n: int) -> BlockCensus:
    """Census of the depth-n blocks visible inside a labeled tree."""
    if n > tree.depth:
        raise DepthExceeded(f"block depth {n} exceeds tree depth {tree.depth}")
    if n < 0:
        raise ValueError("block depth must be nonnegative")
    k = tree.arity
    seen = set()
    for root in range(node_count(k, tree.depth - n)):
        level = [root]
        window = bytearray([tree.labels[root]])
        for _ in range(n):
            level = [c for v in level for c in range(k * v + 1, k * v + k + 1)]
            window.extend(tree.labels[v] for v in level)
        seen.add(bytes(window))
    alphabet = max(tree.labels) + 1
    return BlockCensus(k, n, alphabet, tuple(sorted(seen)))


@dataclass(frozen=True)
class IdentityReport:
    """Both sides of the leaf-extension count identity at one depth."""

    depth: int
    lhs: int
    rhs: int

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs


def verify_phi_identity(M: TransitionMatrix, n: int, arity: int = 2) -> IdentityReport:
    """Check that extending every depth-n block leafwise counts depth n+1.

    The left side is the exact number of depth-(n+1) blocks (counting
    mode, no cap); the right side sums, over the materialized depth-n
    census, the product of t_a^arity over terminal symbols.
    """
    lhs = enumerate_configs(M, arity, n + 1, materialize=False).total
    census = enumerate_configs(M, arity, n).census
    sums = M.row_sums()
    rhs = 0
    for block in census.blocks:
        term = 1
        for a, s_a in enumerate(census.terminal_counts(block)):
            term *= (sums[a] ** arity) ** s_a
        rhs += term
    return IdentityReport(n + 1, lhs, rhs)


@dataclass(frozen=True)
class SubadditivityReport:
    """Exact counts against the two submultiplicative bounds."""

    m: int
    n: int
    p_m: int
    p_n: int
    p_total: int
    split_bound: int
    fold_exponent: int | None
    fold_bound: int | None

    @property
    def split_holds(self) -> bool:
        return self.p_total <= self.split_bound

    @property
    def fold_holds(self) -> bool | None:
        if self.fold_bound is None:
            return None
        return self.p_total <= self.fold_bound


def check_subadditivity(
    M: TransitionMatrix, m: int, n: int, arity: int = 2
) -> SubadditivityReport:
    """Evaluate p(m+n) against its cut and fold bounds, all exact."""
    if m < 1 or n < 1:
        raise ValueError("both depths must be at least 1")
    p_m = enumerate_configs(M, arity, m, materialize=False).total
    p_n = enumerate_configs(M, arity, n, materialize=False).total
    p_total = enumerate_configs(M, arity, m + n, materialize=False).total
    split_bound = p_m * p_n ** (arity**m)
    fold_exponent = None
    fold_bound = None
    if (m + n) % m == 0:
        fold_exponent = (arity ** (m + n) - 1) // (arity**m - 1)
        fold_bound = p_m**fold_exponent
    return SubadditivityReport(
        m, n, p_m, p_n, p_total, split_bound, fold_exponent, fold_bound
    )
