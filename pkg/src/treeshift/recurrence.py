"""Counting engine for k-ary tree shifts.

For a d-symbol matrix with successor sets S_i, the number x_i(n) of
valid labelings of the depth-n initial subtree carrying symbol i at the
root satisfies

    x_i(0) = 1,    x_i(n+1) = (sum_{j in S_i} x_j(n)) ** k,

because the k child subtrees are filled independently, each by any
valid labeling whose root symbol follows i. Totals p(n) = sum_i x_i(n)
grow doubly exponentially, so next to the exact big-integer form the
same recurrence runs in the log domain, y_i(n+1) = k * logsumexp of the
selected y_j(n), whose additive float error stays far below the
divisors used for entropy.

Entropy estimates divide log p(n) by the size scale of the depth-n
subtree: the dyadic convention uses 2^(n+1) and higher arities use the
node count (k^(n+1) - 1)/(k - 1); the two scalings agree in the limit.
Writing log p(n) ~ H * k^(n+1)/(k-1) + beta, the increment
a(n) = log p(n) - k log p(n-1) tends to beta(1 - k), so

    h_acc(n) = (log p(n) + a(n)/(k-1)) * (k-1) / k^(n+1)

cancels the constant-offset bias and converges an order faster than the
plain quotient. The diagnostic h2(n) = log log p(n) / n tracks the
doubly exponential growth rate itself. All logarithms are natural.

The module also carries the scalar specials of the golden mean shift
(adjacent 1s forbidden), whose totals and 0-rooted counts close into
one-dimensional recurrences, and the sandwich bounds for the k-ary
entropy of a shift with maximum row sum s.
"""

from __future__ import annotations

import json
import math
import os
from dataclasses import dataclass
from typing import Sequence

import mpmath

from .matrix import TransitionMatrix

PRECISION_ENV = "TREESHIFT_PRECISION"


class EmptySuccessorSet(ValueError):
    """A row with no successors reached the stepper (normally impossible)."""


@dataclass(frozen=True)
class TreeParams:
    """Arity of the tree and the deepest level to compute."""

    arity: int = 2
    n_max: int = 15

    def __post_init__(self):
        if self.arity < 2:
            raise ValueError("arity must be at least 2")
        if self.n_max < 0:
            raise ValueError("n_max must be nonnegative")

    def node_count(self, n: int) -> int:
        """Nodes in the depth-n initial subtree."""
        k = self.arity
        return (k ** (n + 1) - 1) // (k - 1)


@dataclass(frozen=True)
class CountVector:
    """Per-root-symbol counts at one level, exact or in logs."""

    level: int
    exact: tuple[int, ...] | None = None
    logs: tuple[float, ...] | None = None

    def __post_init__(self):
        if (self.exact is None) == (self.logs is None):
            raise ValueError("exactly one of exact and logs must be set")

    @classmethod
    def initial(cls, d: int, mode: str = "logdomain") -> "CountVector":
        if mode == "exact":
            return cls(0, exact=(1,) * d)
        if mode == "logdomain":
            return cls(0, logs=(0.0,) * d)
        raise ValueError(f"unknown mode {mode!r}")

    @property
    def mode(self) -> str:
        return "exact" if self.exact is not None else "logdomain"

    @property
    def dimension(self) -> int:
        vec = self.exact if self.exact is not None else self.logs
        return len(vec)

    def log_values(self) -> tuple[float, ...]:
        if self.logs is not None:
            return self.logs
        return tuple(math.log(x) for x in self.exact)


def _logsumexp(values) -> float:
    top = max(values)
    return top + math.log(sum(math.exp(v - top) for v in values))


def step(x: CountVector, M: TransitionMatrix, arity: int = 2) -> CountVector:
    """Advance the counts one level deeper."""
    succ = M.successor_table()
    if x.dimension != len(succ):
        raise ValueError("count vector dimension does not match the matrix")
    for i, s in enumerate(succ):
        if not s:
            raise EmptySuccessorSet(f"row {i + 1} admits no successor")
    if x.exact is not None:
        nxt = tuple(sum(x.exact[j] for j in s) ** arity for s in succ)
        return CountVector(x.level + 1, exact=nxt)
    nxt = tuple(arity * _logsumexp([x.logs[j] for j in s]) for s in succ)
    return CountVector(x.level + 1, logs=nxt)


def power_scaled(p_log: float, n: int, arity: int) -> float:
    """log p(n) scaled by the pure power k^(n+1)."""
    return p_log * (arity - 1) / arity ** (n + 1)


def node_scaled(p_log: float, n: int, arity: int) -> float:
    """log p(n) divided by the node count of the depth-n subtree."""
    return p_log * (arity - 1) / (arity ** (n + 1) - 1)


def level_entropy(p_log: float, n: int, arity: int) -> float:
    """The h(n) convention: power scaling for arity 2, node count above."""
    if arity == 2:
        return power_scaled(p_log, n, arity)
    return node_scaled(p_log, n, arity)


def accelerated_entropy(p_log: float, a: float, n: int, arity: int) -> float:
    """Bias-cancelled estimate (log p(n) + a(n)/(k-1)) (k-1)/k^(n+1)."""
    return (p_log + a / (arity - 1)) * (arity - 1) / arity ** (n + 1)


@dataclass
class EntropySeries:
    """Per-level entropy estimates from one recurrence run.

    Lists are indexed by level; a, h_acc and h2 hold None where the
    quantity is undefined (level 0, or log p(n) <= 0 for h2). In exact
    mode `exact` keeps the per-symbol big integers, otherwise it is
    None. `symbol_logs` always carries log x_i(n).
    """

    arity: int
    mode: str
    symbols: tuple[str, ...]
    p_log: list[float]
    h: list[float]
    a: list[float | None]
    h_acc: list[float | None]
    h2: list[float | None]
    symbol_logs: list[tuple[float, ...]]
    exact: list[tuple[int, ...]] | None = None

    @property
    def n_max(self) -> int:
        return len(self.p_log) - 1

    def final_h(self) -> float:
        return self.h[-1]

    def final_h_acc(self) -> float:
        return self.h_acc[-1] if self.h_acc[-1] is not None else self.h[-1]

    def normalized_symbol_logs(self, n: int) -> tuple[float, ...]:
        """log x_i(n) / k^(n+1) for each symbol."""
        scale = self.arity ** (n + 1)
        return tuple(y / scale for y in self.symbol_logs[n])

    def spread(self, n: int) -> float:
        norm = self.normalized_symbol_logs(n)
        return max(norm) - min(norm)

    def to_csv(self) -> str:
        header = ["n", "p_log", "h_n", "a_n", "h_acc", "h2_n"]
        header += [f"log_x_{s}" for s in self.symbols]
        lines = [",".join(header)]
        for n in range(len(self.p_log)):
            cells = [
                str(n),
                _csv_float(self.p_log[n]),
                _csv_float(self.h[n]),
                _csv_float(self.a[n]),
                _csv_float(self.h_acc[n]),
                _csv_float(self.h2[n]),
            ]
            cells += [_csv_float(y) for y in self.symbol_logs[n]]
            lines.append(",".join(cells))
        return "\n".join(lines) + "\n"

    def as_dict(self) -> dict:
        return {
            "arity": self.arity,
            "mode": self.mode,
            "symbols": list(self.symbols),
            "p_log": self.p_log,
            "h": self.h,
            "a": self.a,
            "h_acc": self.h_acc,
            "h2": self.h2,
            "symbol_logs": [list(row) for row in self.symbol_logs],
            "exact": None
            if self.exact is None
            else [[str(x) for x in row] for row in self.exact],
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2) + "\n"


def _csv_float(x) -> str:
    return "" if x is None else format(x, ".12g")


def run(M: TransitionMatrix, params: TreeParams | None = None, mode: str = "logdomain") -> EntropySeries:
    """Iterate the recurrence from the all-ones start and collect the series."""
    params = params or TreeParams()
    k = params.arity
    x = CountVector.initial(M.d, mode)
    series = EntropySeries(
        arity=k,
        mode=mode,
        symbols=M.symbols,
        p_log=[],
        h=[],
        a=[],
        h_acc=[],
        h2=[],
        symbol_logs=[],
        exact=[] if mode == "exact" else None,
    )
    _append_level(series, x, k)
    for _ in range(params.n_max):
        x = step(x, M, k)
        _append_level(series, x, k)
    return series


def _append_level(series: EntropySeries, x: CountVector, k: int) -> None:
    n = x.level
    logs = x.log_values()
    if x.exact is not None:
        p_log = math.log(sum(x.exact))
        series.exact.append(x.exact)
    else:
        p_log = _logsumexp(logs)
    series.symbol_logs.append(logs)
    series.p_log.append(p_log)
    series.h.append(level_entropy(p_log, n, k))
    if n == 0:
        series.a.append(None)
        series.h_acc.append(None)
        series.h2.append(None)
        return
    a = p_log - k * series.p_log[n - 1]
    series.a.append(a)
    series.h_acc.append(accelerated_entropy(p_log, a, n, k))
    series.h2.append(math.log(p_log) / n if p_log > 0 else None)


def log_deviation(exact: EntropySeries, approx: EntropySeries) -> float:
    """Largest relative gap between exact log counts and log-domain ones.

    Components with log x = 0 are compared absolutely (the log-domain
    recurrence keeps them at exactly 0, so any gap there is a bug).
    """
    if exact.exact is None:
        raise ValueError("first series must come from an exact run")
    worst = 0.0
    for n in range(min(exact.n_max, approx.n_max) + 1):
        for truth, y in zip(exact.symbol_logs[n], approx.symbol_logs[n]):
            gap = abs(y - truth)
            if truth != 0.0:
                gap /= abs(truth)
            worst = max(worst, gap)
    return worst


def auto_depth(arity: int, min_nodes: int = 10**4) -> int:
    """Smallest n whose depth-n subtree has at least min_nodes nodes."""
    params = TreeParams(arity, 0)
    n = 0
    while params.node_count(n) < min_nodes:
        n += 1
    return n


def kary_bounds(s: int, arity: int) -> tuple[float, float]:
    """Sandwich ((k-1)/k log s, log s) for the k-ary entropy at max row sum s."""
    if s < 1:
        raise ValueError("maximum row sum must be at least 1")
    if arity < 2:
        raise ValueError("arity must be at least 2")
    log_s = math.log(s)
    return ((arity - 1) / arity * log_s, log_s)


# ---------------------------------------------------------------------------
# golden mean specials


def golden_counts(n_max: int) -> list[int]:
    """Exact totals p(n) for the dyadic golden mean tree shift.

    A depth-(n+1) labeling is either a root 0 over two independent
    valid subtrees, or a root 1 over two subtrees rooted at 0 whose own
    children subtrees are again free, hence

        p(0) = 2, p(1) = 5, p(n+1) = p(n)^2 + p(n-1)^4.
    """
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    p = [2, 5]
    while len(p) <= n_max:
        p.append(p[-1] ** 2 + p[-2] ** 4)
    return p


def golden_ratios(p: Sequence[int]) -> list[float | None]:
    """q(n) = p(n)/p(n-1)^2, the per-level multiplicative correction.

    Computed from the exact integers (big-int division rounds
    correctly); q(0) is undefined and held as None.
    """
    out: list[float | None] = [None]
    for n in range(1, len(p)):
        out.append(p[n] / p[n - 1] ** 2)
    return out


def supergolden_root() -> float:
    """The real root of x = 1 + 1/x^2, the limit of the q ratios."""
    x = 1.5
    for _ in range(60):
        nxt = x - (x**3 - x**2 - 1) / (3 * x**2 - 2 * x)
        if nxt == x:
            break
        x = nxt
    return x


def golden_zero_rooted_counts(n_max: int) -> list[int]:
    """Exact golden mean counts with the root forced to 0.

    With A(n) the number of such depth-n labelings, each child is a 0
    rooting a free subtree or a 1 whose children must again be 0-rooted,
    giving A(0) = 1, A(1) = 4, A(n+1) = (A(n) + A(n-1)^2)^2.
    """
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    a = [1, 4]
    while len(a) <= n_max:
        a.append((a[-1] + a[-2] ** 2) ** 2)
    return a


@dataclass(frozen=True)
class PowerBoundCheck:
    """One verdict of A(n) >= gamma^(2^(n+1) - 1)."""

    level: int
    exponent: int
    holds: bool
    log_margin: float
    precision_bits: int


def golden_power_bounds(a_seq: Sequence[int], precision_bits: int | None = None) -> list[PowerBoundCheck]:
    """Compare each A(n), n >= 4, against gamma^(2^(n+1) - 1).

    The comparison runs in mpmath with at least 2^(n+1) bits (plus a
    guard), enough that A(n) is represented exactly and the rounding of
    the gamma power cannot flip the verdict. The TREESHIFT_PRECISION
    environment variable or the precision_bits argument overrides the
    bit count (argument wins).
    """
    env = os.environ.get(PRECISION_ENV)
    override = precision_bits if precision_bits is not None else (int(env) if env else None)
    checks = []
    for n in range(4, len(a_seq)):
        exponent = 2 ** (n + 1) - 1
        bits = override if override is not None else 2 ** (n + 1)
        bits = max(bits, 64) + 64
        with mpmath.workprec(bits):
            gamma = (1 + mpmath.sqrt(5)) / 2
            power = gamma**exponent
            value = mpmath.mpf(a_seq[n])
            holds = value >= power
            log_margin = float(mpmath.log(value) - exponent * mpmath.log(gamma))
        checks.append(PowerBoundCheck(n, exponent, bool(holds), log_margin, bits))
    return checks
