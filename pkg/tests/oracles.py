"""Independent brute-force oracles used to cross-check the library.

These deliberately avoid the library's interval mapping: window queries are
decided by sampling the closed look-back interval on a grid finer than every
denominator in play, so a disagreement can only come from a library bug, not
from a shared assumption.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from siglim import Signal

Time = Fraction


def lcm_many(values: list[int]) -> int:
    out = 1
    for v in values:
        out = out * v // gcd(out, v)
    return out


def denominator_lcm(x: Signal, *extra: Fraction) -> int:
    dens = [Fraction(t).denominator for t, _ in x.transitions]
    dens += [Fraction(e).denominator for e in extra]
    return lcm_many(dens or [1])


def sample_points(a: Fraction, b: Fraction, den: int) -> list[Fraction]:
    """All multiples of 1/(2 den) in [a, b], plus both endpoints."""
    step = Fraction(1, 2 * den)
    k0 = -((-a) // step)  # ceil(a / step)
    pts = [a]
    t = k0 * step
    while t <= b:
        pts.append(t)
        t += step
    pts.append(b)
    return pts


def interval_points(x: Signal, a: Fraction, b: Fraction) -> list[Fraction]:
    """Finitely many points of [a, b] that decide pointwise claims about x.

    Every maximal value piece of x meeting [a, b] contains its own left
    endpoint clipped to a, and that clipped endpoint is either a or a
    transition time, so these points (plus midpoints for good measure) see
    every value x takes on the interval.
    """
    pts = [a] + [t for t, _ in x.transitions if a < t < b]
    if b > a:
        pts.append(b)
    out: list[Fraction] = []
    for p, q in zip(pts, pts[1:]):
        out += [p, (p + q) / 2]
    out.append(pts[-1])
    return out


def window_all_bit(x: Signal, d: Fraction, m: Fraction, t: Fraction) -> int:
    """1 iff x is 1 everywhere on the closed interval [t - d, t - d + m]."""
    a, b = t - d, t - d + m
    return int(all(x.value_at(p) == 1 for p in interval_points(x, a, b)))


def window_any_bit(x: Signal, d: Fraction, m: Fraction, t: Fraction) -> int:
    """1 iff x is 1 somewhere on the closed interval [t - d, t - d + m]."""
    a, b = t - d, t - d + m
    return int(any(x.value_at(p) == 1 for p in interval_points(x, a, b)))


def window_all_bit_grid(x: Signal, d: Fraction, m: Fraction, t: Fraction) -> int:
    """window_all_bit by blind grid sampling; slower, zero shared reasoning."""
    a, b = t - d, t - d + m
    den = denominator_lcm(x, a, b)
    return int(all(x.value_at(p) == 1 for p in sample_points(a, b, den)))


def window_any_bit_grid(x: Signal, d: Fraction, m: Fraction, t: Fraction) -> int:
    """window_any_bit by blind grid sampling; slower, zero shared reasoning."""
    a, b = t - d, t - d + m
    den = denominator_lcm(x, a, b)
    return int(any(x.value_at(p) == 1 for p in sample_points(a, b, den)))


def window_probe_times(x: Signal, d: Fraction, m: Fraction) -> list[Fraction]:
    """Times that decide equality of any signal whose switches sit on the
    shifted breakpoints: the candidate switch times themselves, a point inside
    every cell between them, and a point on each unbounded side."""
    cand = sorted({t + d for t, _ in x.transitions}
                  | {t + d - m for t, _ in x.transitions})
    if not cand:
        return [Fraction(0)]
    probes = [cand[0] - 1]
    for left, right in zip(cand, cand[1:]):
        probes += [left, (left + right) / 2]
    probes += [cand[-1], cand[-1] + 1]
    return probes


def eventual_bit(x: Signal) -> int:
    last = x.transitions[-1][0] if x.transitions else Fraction(0)
    return x.value_at(last + 1)


def aic_bit(x: Signal, delta_r: Fraction, delta_f: Fraction) -> int:
    """1 iff after every transition the new value persists through the closed
    dwell interval, decided by pointwise evaluation on that interval."""
    for t, v in x.transitions:
        need = delta_r if v == 1 else delta_f
        if any(x.value_at(p) != v for p in interval_points(x, t, t + need)):
            return 0
    return 1
