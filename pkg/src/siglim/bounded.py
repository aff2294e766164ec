"""Bounded limit conditions: outputs pinned between two sliding-window envelopes.

The lower envelope demands 1 wherever the lower bound function held over a
whole look-back window; the upper envelope allows 1 wherever the upper bound
function held somewhere in its window.  Everything here is exact signal
algebra, so membership, determinism, inclusion and composition are decided
without search.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .boolfn import BoolFn, and_fn, apply_fn, fn_compose, fn_props, is_monotone, or_fn
from .conditions import DEFAULT_BUDGET, LimitCondition, SearchBudget, _rng
from .errors import InvalidBlc, MonotonyViolated, DistributivityUnverified, PreconditionViolated
from .signals import (
    Bit,
    MultiSignal,
    Signal,
    Time,
    as_time,
    breakpoints,
    constant,
    first_one_time,
    make_signal,
    pulse,
    signal_leq,
    window_all,
    window_any,
)


@dataclass(frozen=True)
class BlcParams:
    """Window widths and depths (m_r, d_r) for rises and (m_f, d_f) for falls."""

    m_r: Time
    d_r: Time
    m_f: Time
    d_f: Time

    def __post_init__(self) -> None:
        for name in ("m_r", "d_r", "m_f", "d_f"):
            object.__setattr__(self, name, as_time(getattr(self, name)))
        if not (0 <= self.m_r <= self.d_r and 0 <= self.m_f <= self.d_f):
            raise PreconditionViolated("window parameters need 0 <= m <= d on both sides")

    def __add__(self, other: "BlcParams") -> "BlcParams":
        return BlcParams(self.m_r + other.m_r, self.d_r + other.d_r,
                         self.m_f + other.m_f, self.d_f + other.d_f)


def params(m_r, d_r, m_f, d_f) -> BlcParams:
    return BlcParams(as_time(m_r), as_time(d_r), as_time(m_f), as_time(d_f))


def lower_envelope(f: BoolFn, u: MultiSignal, p: BlcParams) -> Signal:
    """Least admissible output: 1 where f held throughout [t-d_r, t-d_r+m_r]."""
    return window_all(apply_fn(f, u), p.d_r, p.m_r)


def upper_envelope(g: BoolFn, u: MultiSignal, p: BlcParams) -> Signal:
    """Greatest admissible output: 1 where g held somewhere in [t-d_f, t-d_f+m_f]."""
    return window_any(apply_fn(g, u), p.d_f, p.m_f)


def envelopes(f: BoolFn, g: BoolFn, p: BlcParams, u: MultiSignal) -> tuple[Signal, Signal]:
    return lower_envelope(f, u, p), upper_envelope(g, u, p)


def blc_valid(f: BoolFn, g: BoolFn, p: BlcParams) -> Bit:
    """1 iff the envelope pair is ordered for every input.

    Either the windows overlap enough (neither look-back fully precedes the
    other) or the bound functions are separated by constants.
    """
    if not fn_props(f, g).leq_fg:
        raise PreconditionViolated("need f <= g pointwise")
    overlap = p.d_r - p.m_r <= p.d_f and p.d_f - p.m_f <= p.d_r
    separated = max(f.table) <= min(g.table)
    return int(overlap or separated)


def blc(f: BoolFn, g: BoolFn, p: BlcParams, budget: SearchBudget | None = None) -> LimitCondition:
    """Bounded limit condition with membership lower <= x <= upper, exactly."""
    budget = budget or DEFAULT_BUDGET
    if not blc_valid(f, g, p):
        raise InvalidBlc(
            "neither the window-overlap inequalities nor the constant-separation "
            "condition holds; the envelopes would cross"
        )
    det, fixed = blc_is_deterministic(f, g, p)

    def env(u: MultiSignal) -> tuple[Signal, Signal]:
        return envelopes(f, g, p, u)

    def contains(u: MultiSignal, x: Signal) -> Bit:
        lo, hi = env(u)
        return int(signal_leq(lo, x) and signal_leq(x, hi))

    def sample(u: MultiSignal, count: int, seed: int) -> list[Signal]:
        lo, hi = env(u)
        out = [lo, hi]
        rng = _rng(seed, "blc")
        pool = breakpoints(lo, hi) or [Fraction(0)]
        while len(out) < count + 2:
            times = sorted(rng.sample(pool, rng.randint(0, min(4, len(pool)))))
            r = make_signal(rng.randint(0, 1), [(t, rng.randint(0, 1)) for t in times])
            out.append(lo | (r & hi))
        uniq: list[Signal] = []
        for x in out:
            if x not in uniq:
                uniq.append(x)
        return uniq[: max(count, 1)]

    return LimitCondition(
        f.arity, f, g, "blc", contains, sample,
        meta={"params": p, "deterministic": bool(det), "fixed_delay": fixed,
              "envelopes": env},
    )


def blc_is_deterministic(f: BoolFn, g: BoolFn, p: BlcParams) -> tuple[Bit, Time | None]:
    """(flag, fixed delay): the envelopes coincide for every input iff flag.

    This happens exactly when the bounds are one constant function, or one
    non-constant function with zero-width windows; in the latter case the
    model is a pure delay whose amount is returned.
    """
    if not blc_valid(f, g, p):
        raise InvalidBlc("determinism is only defined for valid parameter tuples")
    if f.table != g.table:
        return 0, None
    if min(f.table) == max(f.table):
        return 1, None
    if p.m_r == 0 and p.m_f == 0:
        # validity forces the two depths to agree here
        return 1, p.d_r
    return 0, None


def blc_included(
    f: BoolFn, g: BoolFn, p: BlcParams,
    f2: BoolFn, g2: BoolFn, p2: BlcParams,
) -> Bit:
    """1 iff every admissible output of (f, g, p) is admissible for (f2, g2, p2).

    Requires the bound functions to nest pointwise and, on each side, either a
    constant separation or the window chain of the tighter model to sit inside
    the looser one.
    """
    for pair in ((f, g), (f2, g2)):
        if not fn_props(*pair).leq_fg:
            raise PreconditionViolated("need f <= g pointwise in both models")
    fn_nested = all(
        f2(*a) <= f(*a) and g(*a) <= g2(*a) for a in f.inputs()
    )
    rise_ok = max(f2.table) <= min(f.table) or (
        p2.d_r - p2.m_r <= p.d_r - p.m_r and p.d_r <= p2.d_r
    )
    fall_ok = max(g.table) <= min(g2.table) or (
        p2.d_f - p2.m_f <= p.d_f - p.m_f and p.d_f <= p2.d_f
    )
    return int(fn_nested and rise_ok and fall_ok)


def blc_symmetric_usual(f: BoolFn, g: BoolFn) -> Bit:
    """1 iff membership is invariant under every permutation of the inputs."""
    props = fn_props(f, g)
    return props.usual_symmetric


def blc_symmetric_rf(f: BoolFn, g: BoolFn, p: BlcParams) -> Bit:
    """1 iff complementing inputs and output preserves membership: equal
    windows on both sides and complement-dual bound functions."""
    props = fn_props(f, g)
    return int(p.d_r == p.d_f and p.m_r == p.m_f and props.rf_dual == 1)


# --- input families used by the behavioural checks --------------------------

def pattern_input(m: int, a0: tuple[Bit, ...], a1: tuple[Bit, ...], s: Signal) -> MultiSignal:
    """Inputs that hold a1 where s is 1 and a0 elsewhere, one signal per coordinate."""
    out = []
    for p_ in range(m):
        if a0[p_] == a1[p_]:
            out.append(constant(a0[p_]))
        elif a1[p_] == 1:
            out.append(s)
        else:
            out.append(~s)
    return tuple(out)


def probe_inputs(f: BoolFn, g: BoolFn, p: BlcParams) -> list[MultiSignal]:
    """Constants plus pulse patterns that expose any envelope disagreement."""
    m = f.arity
    out: list[MultiSignal] = [tuple(constant(b) for b in a) for a in f.inputs()]
    for h in (f, g):
        ones = [a for a in h.inputs() if h(*a) == 1]
        zeros = [a for a in h.inputs() if h(*a) == 0]
        if ones and zeros:
            a1, a0 = ones[0], zeros[0]
            for w in (p.m_r + 1, p.m_r + p.m_f + 1):
                out.append(pattern_input(m, a0, a1, pulse(0, w)))
            break
    return out


def envelope_violation(f: BoolFn, g: BoolFn, p: BlcParams) -> tuple[MultiSignal, Time] | None:
    """Search pulse and step inputs for a point where lower exceeds upper.

    Returns (input, witness time) or None.  For invalid parameter tuples with
    max f > min g a violating input always exists among these patterns.
    """
    m = f.arity
    ones = [a for a in f.inputs() if f(*a) == 1]
    zeros = [a for a in g.inputs() if g(*a) == 0]
    widths = [p.m_r + Fraction(1, 2), p.m_r + 1, p.m_r + p.m_f + 1]
    gap = p.d_r - p.m_r - p.d_f
    if gap > 0:
        widths.insert(0, p.m_r + gap / 2)
    shapes = [pulse(0, w) for w in widths if w > 0]
    shapes.append(make_signal(0, [(Fraction(0), 1)]))
    for a1 in ones:
        for a0 in zeros:
            for s in shapes:
                u = pattern_input(m, a0, a1, s)
                lo, hi = envelopes(f, g, p, u)
                bad = lo & ~hi
                t = first_one_time(bad)
                if t is not None:
                    return u, t
    return None


# --- closed-form serial composition -----------------------------------------

def _random_multisignal(rng: random.Random, m: int) -> MultiSignal:
    out = []
    for _ in range(m):
        times = sorted({Fraction(rng.randint(-8, 24), rng.choice((1, 2, 4)))
                        for _ in range(rng.randint(0, 4))})
        out.append(make_signal(rng.randint(0, 1),
                               [(t, rng.randint(0, 1)) for t in times]))
    return tuple(out)


def _distributes(h: BoolFn, windows: list[tuple[Time, Time]], mode: str,
                 budget: SearchBudget) -> bool:
    """Sampled check that h commutes with the window operator, exactly.

    AND with the all-window and OR with the any-window commute structurally;
    anything else is tried on random inputs for every window in play.
    """
    if mode == "all" and h.table == and_fn(h.arity).table:
        return True
    if mode == "any" and h.table == or_fn(h.arity).table:
        return True
    op = window_all if mode == "all" else window_any
    rng = _rng(0, f"distr:{mode}:{h.bits()}")
    for _ in range(budget.cases):
        u = _random_multisignal(rng, h.arity)
        for d, m_ in windows:
            if m_ == 0:
                continue  # point windows always commute
            lhs = apply_fn(h, tuple(op(up, d, m_) for up in u))
            rhs = op(apply_fn(h, u), d, m_)
            if lhs != rhs:
                return False
    return True


def blc_compose(
    f: BoolFn, g: BoolFn, p: BlcParams,
    inner: list[tuple[BoolFn, BoolFn]], p_inner: BlcParams,
    budget: SearchBudget | None = None,
) -> LimitCondition:
    """Chain of bounded conditions with one shared inner parameter tuple.

    Valid when the outer bounds are monotone and commute with the windows in
    play; the result is again a bounded condition whose parameters are the
    component-wise sums.
    """
    budget = budget or DEFAULT_BUDGET
    if len(inner) != f.arity:
        raise PreconditionViolated("need one inner bound pair per outer input")
    if not (is_monotone(f) and is_monotone(g)):
        raise MonotonyViolated("closed-form chain needs monotone outer bounds")
    rise_windows = [(p.d_r, p.m_r), (p_inner.d_r, p_inner.m_r)]
    fall_windows = [(p.d_f, p.m_f), (p_inner.d_f, p_inner.m_f)]
    if not _distributes(f, rise_windows, "all", budget):
        raise DistributivityUnverified("outer lower bound does not pass through the all-window")
    if not _distributes(g, fall_windows, "any", budget):
        raise DistributivityUnverified("outer upper bound does not pass through the any-window")
    F = fn_compose(f, [fi for fi, _ in inner])
    G = fn_compose(g, [gi for _, gi in inner])
    return blc(F, G, p + p_inner, budget)
