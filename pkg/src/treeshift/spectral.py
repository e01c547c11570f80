"""Perron data of a 0/1 transition matrix.

The matrix is read as a directed graph on the symbols, with an edge
i -> j when entry (i, j) = 1. Strong connectivity of that graph gives
irreducibility, and the gcd of its cycle lengths gives the period. The
spectral radius lambda with its left and right eigenvectors comes from
power iteration; when the period exceeds 1 the iteration runs on M + I,
which shifts the spectrum by exactly 1 and opens a spectral gap.

For reducible matrices the limiting eigenvectors can have zero entries.
Which entries vanish is a graph property: a right entry is positive iff
its symbol can reach a basic component (one whose own spectral radius
attains lambda), and a left entry is positive iff its symbol is
reachable from a basic component. Those supports are computed exactly
from the graph and the numeric iterates are clipped to them, so the
max/min ratio of the right eigenvector degrades to +inf honestly
instead of blowing up to an iteration-dependent garbage value.

All logarithms are natural.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .matrix import TransitionMatrix


class NoConvergence(RuntimeError):
    """Power iteration failed to meet tolerance within the iteration cap."""

    def __init__(self, iterations: int, residual: float):
        super().__init__(
            f"power iteration stalled after {iterations} iterations (relative residual {residual:.3e})"
        )
        self.iterations = iterations
        self.residual = residual


class UndefinedForReducible(ValueError):
    """The requested quantity needs Parry weights, hence irreducibility."""


@dataclass(frozen=True)
class SpectralData:
    """Spectral summary of one transition matrix.

    `left` is normalized to sum 1 and `right` to maximum entry 1.
    `ratio` is max(right)/min(right), +inf when some right entry is 0
    (possible only for reducible matrices). `max_entropy_weights` holds
    the Parry weights v_i r_i / (v . r), None when reducible.
    """

    spectral_radius: float
    sft_entropy: float
    left: tuple[float, ...]
    right: tuple[float, ...]
    ratio: float
    max_entropy_weights: tuple[float, ...] | None
    irreducible: bool
    primitive: bool
    period: int
    row_sums: tuple[int, ...]


def analyze_matrix(M: TransitionMatrix, tol: float = 1e-12, max_iter: int = 10**6) -> SpectralData:
    """Full spectral analysis of a transition matrix.

    Raises NoConvergence when power iteration cannot reach the relative
    tolerance within the cap, which signals a pathological (defective)
    input rather than a tuning problem at this scale.
    """
    succ = M.successor_table()
    comps = strong_components(succ)
    irreducible = len(comps) == 1
    period = graph_period(succ, comps)

    a = np.array(M.rows, dtype=float)
    shift = period > 1
    b = a + np.eye(M.d) if shift else a
    lam, right = _power_iteration(b, tol, max_iter)
    _, left = _power_iteration(b.T, tol, max_iter)
    if shift:
        lam -= 1.0

    if not irreducible:
        right_support, left_support = _eigenvector_supports(a, succ, comps, tol, max_iter)
        right[[i for i in range(M.d) if i not in right_support]] = 0.0
        left[[i for i in range(M.d) if i not in left_support]] = 0.0

    right = right / right.max()
    left = left / left.sum()

    rmin = right.min()
    ratio = math.inf if rmin == 0.0 else float(right.max() / rmin)

    weights = None
    if irreducible:
        w = left * right
        weights = tuple(float(x) for x in w / w.sum())

    return SpectralData(
        spectral_radius=float(lam),
        sft_entropy=math.log(lam),
        left=tuple(float(x) for x in left),
        right=tuple(float(x) for x in right),
        ratio=ratio,
        max_entropy_weights=weights,
        irreducible=irreducible,
        primitive=irreducible and period == 1,
        period=period,
        row_sums=M.row_sums(),
    )


def upper_bound(S: SpectralData) -> float:
    """Entropy upper bound (1/2) log(ratio) + log(spectral radius).

    +inf when the eigenvector ratio is infinite.
    """
    if math.isinf(S.ratio):
        return math.inf
    return 0.5 * math.log(S.ratio) + S.sft_entropy


def certified_radius_lower(M: TransitionMatrix, tol: float = 1e-12, max_iter: int = 10**6) -> Fraction:
    """Exact rational lower bound on the spectral radius.

    For any positive vector w, min_i (M w)_i / w_i never exceeds the
    radius, so evaluating that minimum in exact arithmetic over a
    converged iterate turns the float eigenvector into a certificate.
    The bound is tight to the iteration tolerance, and exactly equal to
    the radius for matrices with constant row sums.
    """
    succ = M.successor_table()
    period = graph_period(succ, strong_components(succ))
    a = np.array(M.rows, dtype=float)
    b = a + np.eye(M.d) if period > 1 else a
    _, x = _power_iteration(b, tol, max_iter)
    if x.min() <= 0.0:
        raise ValueError("certificate needs a strictly positive iterate")
    w = [Fraction(float(v)) for v in x]
    return min(
        sum(w[j] for j in row) / w[i] for i, row in enumerate(succ)
    )


def row_sum_heuristic(S: SpectralData) -> float:
    """Parry-weighted average of the log row sums.

    A plausibility estimate only; no inequality against the tree
    entropy is claimed for it anywhere in this package.
    """
    if S.max_entropy_weights is None:
        raise UndefinedForReducible("max-entropy weights need an irreducible matrix")
    return sum(w * math.log(t) for w, t in zip(S.max_entropy_weights, S.row_sums))


# ---------------------------------------------------------------------------
# graph structure


def strong_components(succ) -> list[list[int]]:
    """Strongly connected components (Tarjan, iterative), each sorted."""
    d = len(succ)
    index = [-1] * d
    low = [0] * d
    on_stack = [False] * d
    stack: list[int] = []
    comps: list[list[int]] = []
    counter = 0

    for root in range(d):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        while work:
            v, ptr = work.pop()
            if ptr == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            advanced = False
            for k in range(ptr, len(succ[v])):
                w = succ[v][k]
                if index[w] == -1:
                    work.append((v, k + 1))
                    work.append((w, 0))
                    advanced = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                comps.append(sorted(comp))
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
    return comps


def graph_period(succ, comps) -> int:
    """gcd of all cycle lengths, computed per component from BFS levels.

    Components without an internal edge carry no cycle and contribute
    nothing. A valid matrix always has at least one cycle, but the
    fallback answer for a cycle-free graph would be 1.
    """
    g = 0
    for comp in comps:
        members = set(comp)
        level = {comp[0]: 0}
        queue = deque([comp[0]])
        while queue:
            u = queue.popleft()
            for v in succ[u]:
                if v in members and v not in level:
                    level[v] = level[u] + 1
                    queue.append(v)
        for u in comp:
            for v in succ[u]:
                if v in members:
                    g = math.gcd(g, level[u] + 1 - level[v])
    return g if g else 1


def _reachable(succ, starts) -> set[int]:
    seen = set(starts)
    queue = deque(starts)
    while queue:
        u = queue.popleft()
        for v in succ[u]:
            if v not in seen:
                seen.add(v)
                queue.append(v)
    return seen


def _eigenvector_supports(a, succ, comps, tol, max_iter):
    """Exact positivity patterns of the Perron eigenvectors.

    Basic components are those whose own spectral radius attains the
    global one (compared with a small relative margin, safe because the
    per-component radii are isolated numbers at this scale).
    """
    radii = [_component_radius(a, comp, tol, max_iter) for comp in comps]
    lam = max(radii)
    basic = [comp for comp, rad in zip(comps, radii) if rad >= lam * (1.0 - 1e-8)]
    basic_nodes = [v for comp in basic for v in comp]

    left_support = _reachable(succ, basic_nodes)
    pred = [[] for _ in succ]
    for u, out in enumerate(succ):
        for v in out:
            pred[v].append(u)
    right_support = _reachable(pred, basic_nodes)
    return right_support, left_support


def _component_radius(a, comp, tol, max_iter) -> float:
    if len(comp) == 1 and a[comp[0], comp[0]] == 0.0:
        return 0.0
    sub = a[np.ix_(comp, comp)]
    # the +I shift makes the submatrix primitive, so iteration always converges
    lam, _ = _power_iteration(sub + np.eye(len(comp)), tol, max_iter)
    return lam - 1.0


# ---------------------------------------------------------------------------
# power iteration


def _power_iteration(b, tol, max_iter):
    """Dominant eigenpair of a nonnegative matrix with a spectral gap.

    Returns (lambda, vector) with the vector normalized to sum 1;
    convergence is declared on the relative residual |b x - lambda x|.
    """
    d = b.shape[0]
    x = np.full(d, 1.0 / d)
    lam = 1.0
    residual = math.inf
    for _ in range(max_iter):
        y = b @ x
        lam = y.sum()  # x sums to 1, so this is the Rayleigh-like quotient
        x = y / lam
        residual = float(np.max(np.abs(b @ x - lam * x)))
        if residual <= tol * lam:
            return float(lam), x
    raise NoConvergence(max_iter, residual / lam)
