"""Geometric core of the n-gon spiral.

The construction places a regular n-gon for every n >= 3 so that
consecutive polygons share a vertex and touch along a side.  The heading
followed from one shared vertex to the next has the closed form

    theta_n = 2 pi (n/2 + 1/n - 2 H_n),     theta_2 = -3 pi,

and the shared vertices are the running sums V(n) = sum l(k) e^{i theta_k}
from k = 3, with V(2) = 0 seeding the spiral at the origin.  For integer k
the phase reduces to (-1)^k e^{2 pi i (1/k - 2 H_k)}, which is the form the
hot loops use: the reduced angle stays O(log k) instead of O(k), dodging
the argument-reduction error of the raw closed form.

Fractional powers (-1)^x are always read as e^{i pi x}, the continuous
branch; that is the only choice under which the analytic continuations in
the telescoping module are smooth.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .lengthfns import LengthFunction
from .numerics import (
    TWO_PI,
    AccelerationSettings,
    CompensatedSum,
    SummationResult,
    accelerated_alternating_sum,
    harmonic_continued,
    harmonic_number,
    harmonic_real,
)

__all__ = [
    "PolygonGeometry",
    "SpiralSample",
    "center",
    "convex_intersection_area",
    "interpolated_vertex",
    "phase_of_turns",
    "polygon",
    "polygon_area",
    "q_term",
    "sample",
    "signed_phase",
    "theta",
    "unit_phase",
    "vertex",
    "vertex_at",
]

# Side lengths at or below this are treated as a degenerate (point) polygon.
DEGENERATE_SIDE = 1e-13


def theta(n: float) -> float:
    """Heading angle theta_n = 2 pi (n/2 + 1/n - 2 H_n) for real n > 1.

    theta(2) = -3 pi fixes the canonical orientation (no constant net
    rotation of the whole construction).
    """
    if not n > 1.0:
        raise ValueError(f"theta requires n > 1, got {n}")
    return TWO_PI * (0.5 * n + 1.0 / n - 2.0 * harmonic_real(n))


def phase_of_turns(t: float) -> complex:
    """e^{2 pi i t} with t in turns, reduced mod 1 before the trig call.

    The reduction t - round(t) is exact in IEEE double, so phases built
    from large angle budgets (the harmonic sums) keep full precision and
    independently derived phases agree to a few ulps.
    """
    t = t - round(t)
    ang = TWO_PI * t
    return complex(math.cos(ang), math.sin(ang))


def unit_phase(k: float, harmonic_k: float) -> complex:
    """e^{2 pi i (1/k - 2 H_k)} given H_k; the sign-reduced phase factor."""
    return phase_of_turns(1.0 / k - 2.0 * harmonic_k)


def half_angle(n: float) -> tuple[float, float]:
    """(sin, cos) of pi/n for n > 1, accurate through both endpoints.

    Near n = 1 the angle approaches pi, where direct evaluation loses the
    tiny sine to argument rounding; reducing through pi (n-1)/n keeps full
    relative accuracy, which the center-offset denominator needs.
    """
    if n < 2.0:
        y = math.pi * (n - 1.0) / n  # pi - pi/n, small when n ~ 1
        return math.sin(y), -math.cos(y)
    x = math.pi / n
    return math.sin(x), math.cos(x)


def signed_phase(n: float) -> complex:
    """(-1)^n on the continuous branch e^{i pi n}; exact +-1 at integers."""
    if float(n).is_integer():
        return complex(-1.0 if int(n) % 2 else 1.0, 0.0)
    return cmath.exp(1j * math.pi * n)


class _ComplexAccumulator:
    """Compensated accumulator for complex sums."""

    __slots__ = ("re", "im")

    def __init__(self) -> None:
        self.re = CompensatedSum()
        self.im = CompensatedSum()

    def add(self, z: complex) -> None:
        self.re.add(z.real)
        self.im.add(z.imag)

    @property
    def value(self) -> complex:
        return complex(self.re.value, self.im.value)


def vertex_at(f: LengthFunction, indices: Iterable[int]) -> dict[int, complex]:
    """Shared vertices V_f(n) for several indices in one streaming pass.

    V_f(2) = 0 and V_f(n) = sum_{k=3}^{n} (-1)^k l(k) e^{2 pi i (1/k - 2H_k)},
    accumulated left to right with compensated complex summation and an
    incrementally compensated harmonic number.
    """
    wanted = sorted(set(int(n) for n in indices))
    if wanted and wanted[0] < 2:
        raise ValueError(f"vertex indices must be >= 2, got {wanted[0]}")
    out: dict[int, complex] = {}
    if not wanted:
        return out
    if wanted[0] == 2:
        out[2] = 0j
        wanted = wanted[1:]
    if not wanted:
        return out
    lf = f.as_callable()
    h = CompensatedSum(1.0 + 0.5)  # H_2
    acc = _ComplexAccumulator()
    targets = iter(wanted)
    target = next(targets)
    for k in range(3, wanted[-1] + 1):
        h.add(1.0 / k)
        t = 1.0 / k - 2.0 * h.value
        ang = TWO_PI * (t - round(t))
        scale = lf(float(k))
        if k % 2:
            scale = -scale
        acc.add(complex(scale * math.cos(ang), scale * math.sin(ang)))
        if k == target:
            out[k] = acc.value
            target = next(targets, None)
    return out


def vertex(f: LengthFunction, n: int) -> complex:
    """Shared vertex V_f(n) of the n-gon and (n+1)-gon, n >= 2."""
    if n < 2:
        raise ValueError(f"vertex requires n >= 2, got {n}")
    return vertex_at(f, (n,))[n]


def q_term(f: LengthFunction, n: float) -> complex:
    """Center-minus-vertex offset Q_f(n) of the n-gon, for real n > 1.

    Q_f(n) = (-1)^n l(n) e^{2 pi i (1/n - 2 H_n)} / (e^{2 pi i / n} - 1),
    with (-1)^n = e^{i pi n} off the integers.  Its modulus is the
    circumradius |l(n)| / (2 sin(pi/n)).
    """
    if not n > 1.0:
        raise ValueError(f"q_term requires n > 1, got {n}")
    h = harmonic_real(n)
    num = signed_phase(n) * f(n) * unit_phase(n, h)
    # e^{2 pi i / n} - 1 = 2 sin(pi/n) (-sin(pi/n) + i cos(pi/n)), which
    # avoids the cos - 1 cancellation at both ends of the domain
    s, c = half_angle(n)
    den = (2.0 * s) * complex(-s, c)
    return num / den


def center(f: LengthFunction, n: int) -> complex:
    """Center C_f(n) = V_f(n) + Q_f(n) of the n-gon, n >= 3."""
    if n < 3:
        raise ValueError(f"center requires n >= 3, got {n}")
    return vertex(f, n) + q_term(f, n)


@dataclass(frozen=True)
class SpiralSample:
    """One polygon's worth of spiral data; center = vertex + q holds by
    construction."""

    index: float
    theta: float
    vertex: complex
    q: complex
    center: complex


def sample(f: LengthFunction, n: int) -> SpiralSample:
    """Assemble index, heading, vertex, correction and center for the n-gon."""
    v = vertex(f, n)
    q = q_term(f, n)
    return SpiralSample(float(n), theta(n), v, q, v + q)


@dataclass(frozen=True)
class PolygonGeometry:
    """A fully enumerated regular n-gon of the construction.

    vertices[0] is the shared vertex V(n) (shared with the (n+1)-gon) and
    vertices[1] is V(n-1) (shared with the (n-1)-gon); the remaining
    vertices follow counterclockwise.  ``degenerate`` marks zero side
    length, where every vertex collapses onto the center.
    """

    n: int
    side_length: float
    interior_angle: float
    center: complex
    vertices: tuple[complex, ...]
    degenerate: bool
    shared_prev_index: int = 1
    shared_next_index: int = 0

    @property
    def circumradius(self) -> float:
        return abs(self.side_length) / (2.0 * math.sin(math.pi / self.n))


def polygon(f: LengthFunction, n: int) -> PolygonGeometry:
    """Enumerate the n-gon: vertices C + (V(n) - C) e^{2 pi i k / n}."""
    if n < 3:
        raise ValueError(f"polygon requires n >= 3, got {n}")
    side = f(float(n))
    v = vertex(f, n)
    c = v + q_term(f, n)
    spoke = v - c
    verts = tuple(
        c + spoke * cmath.exp(2j * math.pi * k / n) for k in range(n)
    )
    return PolygonGeometry(
        n=n,
        side_length=side,
        interior_angle=math.pi * (n - 2) / n,
        center=c,
        vertices=verts,
        degenerate=abs(side) <= DEGENERATE_SIDE,
    )


def polygon_area(vertices: Sequence[complex]) -> float:
    """Unsigned shoelace area of a simple polygon."""
    total = 0.0
    m = len(vertices)
    for i in range(m):
        a = vertices[i]
        b = vertices[(i + 1) % m]
        total += a.real * b.imag - b.real * a.imag
    return abs(total) / 2.0


def _clip_convex(subject: Sequence[complex], clip: Sequence[complex]) -> list[complex]:
    """Sutherland-Hodgman clip of ``subject`` by convex ``clip`` (CCW)."""
    output = list(subject)
    m = len(clip)
    for i in range(m):
        if not output:
            return []
        a = clip[i]
        b = clip[(i + 1) % m]
        edge = b - a
        inputs = output
        output = []
        prev = inputs[-1]
        prev_in = (edge.real * (prev.imag - a.imag) - edge.imag * (prev.real - a.real)) >= 0.0
        for cur in inputs:
            cur_in = (edge.real * (cur.imag - a.imag) - edge.imag * (cur.real - a.real)) >= 0.0
            if cur_in != prev_in:
                d = cur - prev
                denom = edge.real * d.imag - edge.imag * d.real
                if denom != 0.0:
                    t = (edge.real * (a.imag - prev.imag) - edge.imag * (a.real - prev.real)) / denom
                    output.append(prev + t * d)
            if cur_in:
                output.append(cur)
            prev = cur
            prev_in = cur_in
    return output


def convex_intersection_area(
    a: Sequence[complex], b: Sequence[complex]
) -> float:
    """Area of the intersection of two convex polygons (CCW vertex lists)."""
    clipped = _clip_convex(a, b)
    if len(clipped) < 3:
        return 0.0
    return polygon_area(clipped)


def _interpolant_terms(
    f: LengthFunction, n: float, start: int
) -> Iterator[complex]:
    """Unsigned magnitudes g(k) of the interpolant series from k = start.

    The series is sum_{k>=3} (-1)^k g(k) with
    g(k) = l(k) e^{2 pi i (1/k - 2 H_k)}
           - e^{i pi (n-2)} l(k-2+n) e^{2 pi i (1/x - 2 H_x)},  x = k-2+n;
    both harmonic arguments advance by one per term, so a single digamma
    evaluation seeds each side and compensated increments do the rest.
    """
    lf = f.as_callable()
    offset_phase = signed_phase(n - 2.0)
    h_int = CompensatedSum(harmonic_number(start - 1))
    h_real = CompensatedSum(harmonic_continued(start - 2.0 + n))
    k = start
    while True:
        x = k - 2.0 + n
        h_int.add(1.0 / k)
        if k > start:
            h_real.add(1.0 / x)
        a = lf(float(k)) * unit_phase(float(k), h_int.value)
        b = offset_phase * lf(x) * unit_phase(x, h_real.value)
        yield a - b
        k += 1


def interpolated_vertex(
    f: LengthFunction,
    n: float,
    settings: AccelerationSettings | None = None,
) -> SummationResult:
    """Smooth continuation of the vertex sequence at real n > 1.

    Evaluates sum_{k>=3} [ l(k) e^{i theta_k} - l(k-2+n) e^{i theta_{k-2+n}} ]
    by the configured acceleration; at integers with vanishing side lengths
    this reproduces vertex(f, n).  Length functions whose sides grow
    (negative asymptotic exponent) are refused outright.
    """
    if not n > 1.0:
        raise ValueError(f"interpolated_vertex requires n > 1, got {n}")
    if f.asymptote().exponent < 0.0:
        raise ValueError(
            f"interpolant refused: {f} diverges (growing side lengths)"
        )
    settings = settings or AccelerationSettings()
    head_stop = 48  # direct head; even so the tail carries sign +1
    acc = _ComplexAccumulator()
    terms = _interpolant_terms(f, n, 3)
    for k in range(3, head_stop):
        g = next(terms)
        acc.add(-g if k % 2 else g)
    tail = accelerated_alternating_sum(terms, settings)
    return SummationResult(
        value=acc.value + tail.value,
        error_estimate=tail.error_estimate,
        converged=tail.converged,
        terms_used=(head_stop - 3) + tail.terms_used,
    )
