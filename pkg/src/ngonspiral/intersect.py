"""Self-intersection finder for parametric curves in the complex plane.

Used on the telescoping centers curve C_L(n) (golden-ratio crossing at
(phi, phi+1)) and on Q_L(n) (which passes through the origin at both of
its zeros, n = 4/3 and n = 4).  The method is plain: sample the curve into
a polyline, scan segment pairs for crossings with numpy, then polish each
candidate with a damped two-variable Newton iteration using a central
finite-difference Jacobian, falling back to subdivision of the bracketing
segments when Newton misbehaves.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

__all__ = ["Intersection", "self_intersections"]

# Newton finite-difference step and iteration limits.
_FD_STEP = 1e-6
_NEWTON_ITERS = 60
_SUBDIVIDE_ROUNDS = 80

# Rows of the segment-pair scan processed per numpy block.
_SCAN_BLOCK = 256


@dataclass(frozen=True)
class Intersection:
    """A parameter pair (a < b) where the curve meets itself.

    ``residual`` is |curve(a) - curve(b)| re-evaluated at the reported
    parameters.
    """

    a: float
    b: float
    point: complex
    residual: float


def _sample(
    curve: Callable[[float], complex], lo: float, hi: float, step: float
) -> tuple[np.ndarray, np.ndarray]:
    count = max(2, int(math.ceil((hi - lo) / step)) + 1)
    ts = np.linspace(lo, hi, count)
    pts = np.empty(count, dtype=complex)
    for i, t in enumerate(ts):
        z = curve(float(t))
        if not (math.isfinite(z.real) and math.isfinite(z.imag)):
            raise ValueError(f"curve is not finite at parameter {t!r}: {z!r}")
        pts[i] = z
    return ts, pts


def _crossing_candidates(pts: np.ndarray) -> list[tuple[int, int]]:
    """Index pairs (i, j), j > i + 1, whose segments may cross.

    Orientation tests are run inclusively (touching counts) so crossings
    that pass exactly through a sample point are not lost; duplicates are
    cleaned up after refinement.
    """
    x = pts.real
    y = pts.imag
    ax, ay = x[:-1], y[:-1]
    bx, by = x[1:], y[1:]
    n_seg = len(ax)
    out: list[tuple[int, int]] = []
    for i0 in range(0, n_seg, _SCAN_BLOCK):
        i1 = min(i0 + _SCAN_BLOCK, n_seg)
        rows = slice(i0, i1)
        pax, pay = ax[rows, None], ay[rows, None]
        pbx, pby = bx[rows, None], by[rows, None]
        rx, ry = pbx - pax, pby - pay
        # candidate columns must be beyond the adjacent segment
        d1 = rx * (ay[None, :] - pay) - ry * (ax[None, :] - pax)
        d2 = rx * (by[None, :] - pay) - ry * (bx[None, :] - pax)
        sx, sy = bx[None, :] - ax[None, :], by[None, :] - ay[None, :]
        d3 = sx * (pay - ay[None, :]) - sy * (pax - ax[None, :])
        d4 = sx * (pby - ay[None, :]) - sy * (pbx - ax[None, :])
        hit = (d1 * d2 <= 0.0) & (d3 * d4 <= 0.0)
        ii, jj = np.nonzero(hit)
        for di, j in zip(ii, jj):
            i = i0 + int(di)
            j = int(j)
            if j > i + 1:
                out.append((i, j))
    return out


def _segment_params(
    p0: complex, p1: complex, q0: complex, q1: complex
) -> tuple[float, float]:
    """Parameters (t, u) in [0,1] of the crossing of segments p and q;
    falls back to midpoints when the segments are near-parallel."""
    r = p1 - p0
    s = q1 - q0
    denom = r.real * s.imag - r.imag * s.real
    if denom == 0.0:
        return 0.5, 0.5
    w = q0 - p0
    t = (w.real * s.imag - w.imag * s.real) / denom
    u = (w.real * r.imag - w.imag * r.real) / denom
    return min(max(t, 0.0), 1.0), min(max(u, 0.0), 1.0)


def _newton_refine(
    curve: Callable[[float], complex],
    a: float,
    b: float,
    lo: float,
    hi: float,
    tolerance: float,
) -> tuple[float, float, complex, float] | None:
    """Drive curve(a) - curve(b) to zero by damped Newton; None on failure."""
    h = _FD_STEP

    def gap(u: float, v: float) -> complex:
        return curve(u) - curve(v)

    g = gap(a, b)
    for _ in range(_NEWTON_ITERS):
        if abs(g) <= tolerance:
            pa = curve(a)
            pb = curve(b)
            return a, b, 0.5 * (pa + pb), abs(pa - pb)
        da = (curve(min(a + h, hi)) - curve(max(a - h, lo))) / (
            min(a + h, hi) - max(a - h, lo)
        )
        db = (curve(min(b + h, hi)) - curve(max(b - h, lo))) / (
            min(b + h, hi) - max(b - h, lo)
        )
        # solve [da, -db] [sa, sb]^T = -g as a real 2x2 system
        j11, j21 = da.real, da.imag
        j12, j22 = -db.real, -db.imag
        det = j11 * j22 - j12 * j21
        if det == 0.0 or not math.isfinite(det):
            return None
        sa = (-g.real * j22 + g.imag * j12) / det
        sb = (-j11 * g.imag + j21 * g.real) / det
        stepped = False
        damp = 1.0
        for _ in range(20):
            na = min(max(a + damp * sa, lo), hi)
            nb = min(max(b + damp * sb, lo), hi)
            ng = gap(na, nb)
            if abs(ng) < abs(g):
                a, b, g = na, nb, ng
                stepped = True
                break
            damp *= 0.5
        if not stepped:
            return None
    if abs(g) <= tolerance:
        pa = curve(a)
        pb = curve(b)
        return a, b, 0.5 * (pa + pb), abs(pa - pb)
    return None


def _subdivide_refine(
    curve: Callable[[float], complex],
    ta0: float,
    ta1: float,
    tb0: float,
    tb1: float,
    tolerance: float,
) -> tuple[float, float, complex, float] | None:
    """Bisection fallback: repeatedly split both bracketing segments and
    keep the sub-pair that still crosses."""

    def crosses(p0, p1, q0, q1) -> bool:
        r = p1 - p0
        s = q1 - q0
        d1 = r.real * (q0.imag - p0.imag) - r.imag * (q0.real - p0.real)
        d2 = r.real * (q1.imag - p0.imag) - r.imag * (q1.real - p0.real)
        d3 = s.real * (p0.imag - q0.imag) - s.imag * (p0.real - q0.real)
        d4 = s.real * (p1.imag - q0.imag) - s.imag * (p1.real - q0.real)
        return d1 * d2 <= 0.0 and d3 * d4 <= 0.0

    pa0, pa1 = curve(ta0), curve(ta1)
    pb0, pb1 = curve(tb0), curve(tb1)
    for _ in range(_SUBDIVIDE_ROUNDS):
        tam = 0.5 * (ta0 + ta1)
        tbm = 0.5 * (tb0 + tb1)
        pam = curve(tam)
        pbm = curve(tbm)
        found = False
        for a0, a1, qa0, qa1 in ((ta0, tam, pa0, pam), (tam, ta1, pam, pa1)):
            for b0, b1, qb0, qb1 in ((tb0, tbm, pb0, pbm), (tbm, tb1, pbm, pb1)):
                if crosses(qa0, qa1, qb0, qb1):
                    ta0, ta1, pa0, pa1 = a0, a1, qa0, qa1
                    tb0, tb1, pb0, pb1 = b0, b1, qb0, qb1
                    found = True
                    break
            if found:
                break
        if not found:
            return None
        if ta1 - ta0 < 1e-15 and tb1 - tb0 < 1e-15:
            break
    a = 0.5 * (ta0 + ta1)
    b = 0.5 * (tb0 + tb1)
    pa, pb = curve(a), curve(b)
    res = abs(pa - pb)
    if res <= tolerance:
        return a, b, 0.5 * (pa + pb), res
    return None


def self_intersections(
    curve: Callable[[float], complex],
    lo: float,
    hi: float,
    step: float = 1e-3,
    tolerance: float = 1e-10,
    separation: float = 1e-3,
) -> list[Intersection]:
    """All detected self-intersections of ``curve`` on [lo, hi].

    The curve is sampled every ``step`` in parameter, crossing segment
    pairs seed Newton refinement, and results are deduplicated, filtered by
    the parameter ``separation`` (nearby parameters always nearly intersect
    on a continuous curve) and returned sorted by the first parameter.
    Raises if the curve is non-finite anywhere on the sample grid.
    """
    if not hi > lo:
        raise ValueError(f"need hi > lo, got [{lo}, {hi}]")
    if step <= 0.0 or tolerance <= 0.0:
        raise ValueError("step and tolerance must be positive")
    ts, pts = _sample(curve, lo, hi, step)
    found: list[Intersection] = []
    for i, j in _crossing_candidates(pts):
        t0, u0 = _segment_params(pts[i], pts[i + 1], pts[j], pts[j + 1])
        a0 = float(ts[i] + t0 * (ts[i + 1] - ts[i]))
        b0 = float(ts[j] + u0 * (ts[j + 1] - ts[j]))
        refined = _newton_refine(curve, a0, b0, lo, hi, tolerance)
        if refined is None:
            refined = _subdivide_refine(
                curve, float(ts[i]), float(ts[i + 1]), float(ts[j]), float(ts[j + 1]), tolerance
            )
        if refined is None:
            continue
        a, b, point, residual = refined
        if a > b:
            a, b = b, a
        if b - a < separation:
            continue
        duplicate = False
        for idx, known in enumerate(found):
            if abs(known.a - a) < separation and abs(known.b - b) < separation:
                duplicate = True
                if residual < known.residual:
                    found[idx] = Intersection(a, b, point, residual)
                break
        if not duplicate:
            found.append(Intersection(a, b, point, residual))
    found.sort(key=lambda it: (it.a, it.b))
    return found
