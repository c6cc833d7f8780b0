"""Special functions and series acceleration kernels.

Everything lives in ordinary double precision.  The pieces here are the
numerical bedrock for the spiral modules: compensated harmonic numbers,
digamma (and through it the real continuation of harmonic numbers),
Hurwitz zeta for s > 1, and an Euler transform for alternating complex
series whose "not converged" outcome is a value, never an exception.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from enum import Enum
from itertools import islice
from typing import Iterable, Sequence

__all__ = [
    "EULER_GAMMA",
    "TWO_PI",
    "AccelerationSettings",
    "CompensatedSum",
    "Strategy",
    "SummationResult",
    "accelerated_alternating_sum",
    "digamma",
    "euler_transform_sum",
    "harmonic_continued",
    "harmonic_number",
    "harmonic_real",
    "hurwitz_zeta",
    "richardson",
]

EULER_GAMMA = 0.5772156649015328606
TWO_PI = 2.0 * math.pi


class Strategy(Enum):
    """How an alternating series gets summed."""

    DIRECT_PARTIAL_SUMS = "direct"
    PAIRED_TERMS = "paired"
    EULER_TRANSFORM = "euler"


@dataclass(frozen=True)
class AccelerationSettings:
    """Tolerance, term budget and strategy for series summation.

    ``target_tolerance`` is absolute, measured on the complex modulus of the
    correction being monitored.
    """

    target_tolerance: float = 1e-10
    max_terms: int = 4000
    strategy: Strategy = Strategy.EULER_TRANSFORM

    def __post_init__(self) -> None:
        if not self.target_tolerance > 0.0:
            raise ValueError("target_tolerance must be positive")
        if self.max_terms < 4:
            raise ValueError("max_terms must be at least 4")


@dataclass(frozen=True)
class SummationResult:
    """Outcome of an accelerated summation.

    ``converged`` is False when the term budget ran out before the tolerance
    was met; ``value`` then carries the best estimate seen, so callers can
    degrade gracefully instead of catching exceptions.
    """

    value: complex
    error_estimate: float
    converged: bool
    terms_used: int


class CompensatedSum:
    """Neumaier compensated accumulator for long float sums."""

    __slots__ = ("_s", "_c")

    def __init__(self, start: float = 0.0) -> None:
        self._s = start
        self._c = 0.0

    def add(self, x: float) -> None:
        s = self._s
        t = s + x
        if abs(s) >= abs(x):
            self._c += (s - t) + x
        else:
            self._c += (x - t) + s
        self._s = t

    @property
    def value(self) -> float:
        return self._s + self._c


# Harmonic numbers up to this index are memoized; the table behaves exactly
# like a fresh compensated sum because it is built from one.
_HARMONIC_TABLE_CAP = 100_000
_harmonic_table: list[float] = [0.0, 1.0]
_harmonic_state = CompensatedSum(1.0)
_harmonic_lock = threading.Lock()


def harmonic_number(n: int) -> float:
    """H_n = sum_{k<=n} 1/k by compensated summation.

    Absolute error stays below 1e-14 up to n = 1e7.  Raises for n < 1.
    """
    if n < 1:
        raise ValueError(f"harmonic_number requires n >= 1, got {n}")
    n = int(n)
    if n <= _HARMONIC_TABLE_CAP:
        if n >= len(_harmonic_table):
            with _harmonic_lock:
                for k in range(len(_harmonic_table), n + 1):
                    _harmonic_state.add(1.0 / k)
                    _harmonic_table.append(_harmonic_state.value)
        return _harmonic_table[n]
    acc = CompensatedSum()
    for k in range(1, n + 1):
        acc.add(1.0 / k)
    return acc.value


# psi(x) ~ ln x - 1/(2x) - sum B_{2k}/(2k x^{2k}); coefficients of u = x^{-2}.
_DIGAMMA_SHIFT = 12.0
_DIGAMMA_ASYMPTOTIC = (
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32760.0,
    1.0 / 12.0,
)


def digamma(x: float) -> float:
    """psi(x) for x > 0, absolute error below 1e-13.

    Upward recurrence psi(x+1) = psi(x) + 1/x shifts the argument to at
    least 12, after which a seven-term Bernoulli asymptotic series applies.
    """
    if not x > 0.0:
        raise ValueError(f"digamma requires x > 0, got {x}")
    shift = 0.0
    while x < _DIGAMMA_SHIFT:
        shift -= 1.0 / x
        x += 1.0
    u = 1.0 / (x * x)
    tail = 0.0
    for c in reversed(_DIGAMMA_ASYMPTOTIC):
        tail = tail * u + c
    return shift + math.log(x) - 0.5 / x - u * tail


def harmonic_continued(x: float) -> float:
    """Real continuation of the harmonic numbers, gamma + psi(x+1).

    Defined for x > -1 and matching harmonic_number at positive integers
    to better than 1e-12.
    """
    if not x > -1.0:
        raise ValueError(f"harmonic_continued requires x > -1, got {x}")
    return EULER_GAMMA + digamma(x + 1.0)


def harmonic_real(x: float) -> float:
    """H_x for real x > 0: the memoized compensated value at moderate
    integers, the digamma continuation everywhere else."""
    if float(x).is_integer() and 1.0 <= x <= _HARMONIC_TABLE_CAP:
        return harmonic_number(int(x))
    return harmonic_continued(x)


def hurwitz_zeta(s: float, a: float) -> float:
    """Hurwitz zeta(s, a) = sum_{j>=0} (j+a)^-s for s > 1, a > 0.

    Direct summation of an initial block, then an Euler-Maclaurin tail
    (integral, half term, and three Bernoulli corrections).  Absolute error
    is comfortably below 1e-10 for moderate s.
    """
    if not s > 1.0:
        raise ValueError(f"hurwitz_zeta requires s > 1, got s={s}")
    if not a > 0.0:
        raise ValueError(f"hurwitz_zeta requires a > 0, got a={a}")
    # Block length keeps the tail expansion point x = N + a at 24 or above.
    n_block = max(16, int(math.ceil(24.0 - a)) + 1)
    acc = CompensatedSum()
    for j in range(n_block):
        acc.add((j + a) ** (-s))
    x = n_block + a
    tail = x ** (1.0 - s) / (s - 1.0)
    tail += 0.5 * x ** (-s)
    tail += s * x ** (-s - 1.0) / 12.0
    tail -= s * (s + 1.0) * (s + 2.0) * x ** (-s - 3.0) / 720.0
    tail += s * (s + 1.0) * (s + 2.0) * (s + 3.0) * (s + 4.0) * x ** (-s - 5.0) / 30240.0
    return acc.value + tail


def euler_transform_sum(
    terms: Iterable[complex], settings: AccelerationSettings
) -> SummationResult:
    """Euler transform of the alternating series sum_{j>=0} (-1)^j a_j.

    ``terms`` yields the a_j with the alternating sign already extracted.
    The transform accumulates forward-difference corrections
    (-1)^j D^j a_0 / 2^(j+1); the reported error estimate is the modulus of
    the last correction.  Exhausting ``max_terms`` before the tolerance is
    reached produces a not-converged result carrying the best estimate.
    """
    tol = settings.target_tolerance
    diag: list[complex] = []
    total = 0j
    best = 0j
    best_err = math.inf
    last_err = math.inf
    used = 0
    for j, a in enumerate(islice(terms, settings.max_terms)):
        a = complex(a)
        new_diag = [a]
        prev = diag
        for p in range(1, j + 1):
            new_diag.append(new_diag[p - 1] - prev[p - 1])
        diag = new_diag
        head = diag[j]
        if not (math.isfinite(head.real) and math.isfinite(head.imag)):
            break
        correction = head * math.ldexp(1.0, -(j + 1))
        if j % 2:
            correction = -correction
        total += correction
        last_err = abs(correction)
        used = j + 1
        if last_err < best_err:
            best_err = last_err
            best = total
        if used >= 4 and last_err <= tol:
            return SummationResult(total, last_err, True, used)
    return SummationResult(best, best_err, False, used)


def _direct_alternating_sum(
    terms: Iterable[complex], settings: AccelerationSettings
) -> SummationResult:
    """Plain partial sums of sum (-1)^j a_j; stops on three small terms."""
    tol = settings.target_tolerance
    re = CompensatedSum()
    im = CompensatedSum()
    small = 0
    last = math.inf
    used = 0
    for j, a in enumerate(islice(terms, settings.max_terms)):
        a = complex(a)
        if j % 2:
            a = -a
        re.add(a.real)
        im.add(a.imag)
        last = abs(a)
        used = j + 1
        small = small + 1 if last <= tol else 0
        if small >= 3:
            return SummationResult(complex(re.value, im.value), last, True, used)
    return SummationResult(complex(re.value, im.value), last, False, used)


def _paired_alternating_sum(
    terms: Iterable[complex], settings: AccelerationSettings
) -> SummationResult:
    """Sums consecutive pairs a_{2m} - a_{2m+1}; stops after three paired
    partial sums agree within tolerance."""
    tol = settings.target_tolerance
    re = CompensatedSum()
    im = CompensatedSum()
    agree = 0
    last = math.inf
    used = 0
    it = iter(terms)
    while used + 2 <= settings.max_terms:
        try:
            a = complex(next(it))
            b = complex(next(it))
        except StopIteration:
            break
        pair = a - b
        re.add(pair.real)
        im.add(pair.imag)
        last = abs(pair)
        used += 2
        agree = agree + 1 if last <= tol else 0
        if agree >= 3:
            return SummationResult(complex(re.value, im.value), last, True, used)
    return SummationResult(complex(re.value, im.value), last, False, used)


def accelerated_alternating_sum(
    terms: Iterable[complex], settings: AccelerationSettings
) -> SummationResult:
    """Dispatch sum_{j>=0} (-1)^j a_j to the configured strategy."""
    if settings.strategy is Strategy.EULER_TRANSFORM:
        return euler_transform_sum(terms, settings)
    if settings.strategy is Strategy.PAIRED_TERMS:
        return _paired_alternating_sum(terms, settings)
    return _direct_alternating_sum(terms, settings)


def richardson(values: Sequence[complex], ratio: float = 10.0) -> complex:
    """Richardson extrapolation of approximations with step ratio ``ratio``.

    ``values`` are ordered from the coarsest step to the finest; the error
    is assumed to expand in integer powers of the step.  Returns the fully
    extrapolated estimate.
    """
    if len(values) < 2:
        raise ValueError("richardson needs at least two values")
    v = [complex(x) for x in values]
    stage = 1
    while len(v) > 1:
        factor = ratio**stage
        v = [(factor * v[i + 1] - v[i]) / (factor - 1.0) for i in range(len(v) - 1)]
        stage += 1
    return v[0]
