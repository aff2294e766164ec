"""Fixed delays and inertial dwell conditions.

A fixed condition forces the output to be a delayed pointwise function of the
inputs.  An absolute inertial condition constrains the output alone: after a
rise it must dwell at 1 strictly longer than delta_r before switching again,
and symmetrically after a fall.  Combining the inertial constraint with a
bounded condition gives the bounded-plus-inertial models, whose emptiness has
a closed criterion checked here against an explicit witness search.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .boolfn import BoolFn, apply_fn, fn_compose
from .bounded import BlcParams, blc, blc_compose, blc_valid, envelopes
from .conditions import (
    DEFAULT_BUDGET,
    LimitCondition,
    SearchBudget,
    SignalSet,
    _rng,
)
from .errors import EmptyBailc, InvalidBlc, NegativeDelay, PreconditionViolated
from .signals import (
    Bit,
    MultiSignal,
    Signal,
    Time,
    as_time,
    breakpoints,
    make_signal,
    signal_leq,
    translate_all,
)


def flc(h: BoolFn, d: Time | int) -> LimitCondition:
    """Fixed limit condition: the output is exactly h of the inputs d ago."""
    d = as_time(d)
    if d < 0:
        raise NegativeDelay(f"delay must be non-negative, got {d}")

    def output(u: MultiSignal) -> Signal:
        return apply_fn(h, translate_all(u, d))

    def env(u: MultiSignal) -> tuple[Signal, Signal]:
        y = output(u)
        return y, y

    return LimitCondition(
        h.arity, h, h, "flc",
        lambda u, x: int(x == output(u)),
        lambda u, count, seed: [output(u)],
        meta={"fn": h, "delay": d, "deterministic": True, "envelopes": env},
    )


@dataclass(frozen=True)
class AicParams:
    """Minimum dwell after a rise (delta_r) and after a fall (delta_f)."""

    delta_r: Time
    delta_f: Time

    def __post_init__(self) -> None:
        object.__setattr__(self, "delta_r", as_time(self.delta_r))
        object.__setattr__(self, "delta_f", as_time(self.delta_f))
        if self.delta_r < 0 or self.delta_f < 0:
            raise NegativeDelay("dwell times must be non-negative")


def aic_params(delta_r, delta_f) -> AicParams:
    return AicParams(as_time(delta_r), as_time(delta_f))


def aic_contains(x: Signal, a: AicParams) -> Bit:
    """1 iff every value of x persists strictly longer than its dwell time.

    Only the gap to the next transition matters, so a final edge always
    passes; a pulse of width exactly delta fails.
    """
    trans = x.transitions
    for k in range(len(trans) - 1):
        t, v = trans[k]
        gap = trans[k + 1][0] - t
        need = a.delta_r if v == 1 else a.delta_f
        if gap <= need:
            return 0
    return 1


def aic_set(a: AicParams) -> SignalSet:
    """The set of signals whose runs respect the dwell times."""

    def sample(count: int, seed: int) -> list[Signal]:
        rng = _rng(seed, "aic")
        floor = max(a.delta_r, a.delta_f)
        out: list[Signal] = []
        for _ in range(count):
            t = Fraction(rng.randint(-8, 8), 2)
            pairs = []
            v = rng.randint(0, 1)
            for _ in range(rng.randint(0, 4)):
                v = 1 - v
                pairs.append((t, v))
                t = t + floor + Fraction(rng.randint(1, 8), 4)
            x = make_signal(pairs[0][1] ^ 1 if pairs else rng.randint(0, 1), pairs)
            out.append(x)
        return out

    return SignalSet(
        description=f"signals with dwell > ({a.delta_r}, {a.delta_f})",
        kind="aic",
        _contains=lambda x: aic_contains(x, a),
        _sample=sample,
        meta={"params": a},
    )


def bailc_nonempty(f: BoolFn, g: BoolFn, p: BlcParams, a: AicParams) -> Bit:
    """Closed emptiness criterion for the bounded-plus-inertial combination.

    With separated bound constants every input admits a constant witness;
    otherwise the dwell budget must fit inside the combined window widths and
    neither look-back may fully precede the other.
    """
    if not blc_valid(f, g, p):
        raise InvalidBlc("criterion is stated for valid window parameters")
    if max(f.table) <= min(g.table):
        return 1
    return int(
        p.d_r >= p.d_f - p.m_f
        and p.d_f >= p.d_r - p.m_r
        and a.delta_r + a.delta_f <= p.m_r + p.m_f
    )


class _Budget:
    __slots__ = ("left",)

    def __init__(self, n: int) -> None:
        self.left = n

    def spend(self) -> bool:
        self.left -= 1
        return self.left >= 0


def _dwell_dfs(
    lo: Signal, hi: Signal, a: AicParams, grid: list[Time],
    budget: _Budget, rng: random.Random | None,
) -> Signal | None:
    """Depth-first construction of a signal between lo and hi respecting dwells.

    Cells are the pieces cut by the grid; edges may only sit on grid points,
    which include every envelope breakpoint, so lo and hi are constant per
    cell.  Free cells prefer keeping the current value, which finds witnesses
    with the fewest switches first.
    """
    if not grid:
        v = lo.initial
        return Signal(v) if lo.initial <= v <= hi.initial else None
    reprs = [grid[0] - 1] + list(grid)
    lo_vals = [lo.value_at(t) for t in reprs]
    hi_vals = [hi.value_at(t) for t in reprs]
    n = len(reprs)

    def rec(idx: int, value: Bit, last_edge: Time | None,
            edges: list[tuple[Time, Bit]]) -> Signal | None:
        if not budget.spend():
            return None
        if idx == n:
            return Signal(edges[0][1] ^ 1 if edges else value, tuple(edges))
        choices = [value, 1 - value] if idx else [0, 1]
        if rng is not None and rng.random() < 0.25:
            choices.reverse()
        for v in choices:
            if v < lo_vals[idx] or v > hi_vals[idx]:
                continue
            if idx == 0:
                out = rec(1, v, None, edges)
            elif v == value:
                out = rec(idx + 1, v, last_edge, edges)
            else:
                t = grid[idx - 1]
                if last_edge is not None:
                    need = a.delta_r if value == 1 else a.delta_f
                    if t - last_edge <= need:
                        continue
                edges.append((t, v))
                out = rec(idx + 1, v, t, edges)
                if out is None:
                    edges.pop()
            if out is not None:
                return out
        return None

    return rec(0, 0, None, [])


def _dwell_grid(lo: Signal, hi: Signal, a: AicParams, refined: bool) -> list[Time]:
    # envelope breakpoints are mandatory: cells must see lo and hi constant;
    # only the dwell shifts and midpoints may be capped
    base = set(breakpoints(lo, hi))
    shifts = {
        i * a.delta_r + j * a.delta_f
        for i in range(4) for j in range(4) if 0 < i + j <= 3
    }
    extras: set[Time] = set()
    for s in shifts:
        extras |= {t + s for t in base}
    if refined:
        coarse = sorted(base | extras)
        extras |= {(x + y) / 2 for x, y in zip(coarse, coarse[1:])}
    extras -= base
    room = max(0, 96 - len(base))
    return sorted(base | set(sorted(extras)[:room]))


def search_between(
    lo: Signal, hi: Signal, a: AicParams,
    budget: SearchBudget | None = None, seed: int = 0,
) -> Signal | None:
    """Find a signal between two envelopes that respects the dwell times."""
    budget = budget or DEFAULT_BUDGET
    if not signal_leq(lo, hi):
        return None
    rng = _rng(seed, "dwell") if seed else None
    for attempt in range(budget.refinements + 1):
        grid = _dwell_grid(lo, hi, a, attempt > 0)
        x = _dwell_dfs(lo, hi, a, grid, _Budget(budget.max_nodes), rng)
        if x is not None:
            if signal_leq(lo, x) and signal_leq(x, hi) and aic_contains(x, a):
                return x
            raise AssertionError("witness construction produced an invalid signal")
    return None


def bailc_witness_search(
    f: BoolFn, g: BoolFn, p: BlcParams, a: AicParams, u: MultiSignal,
    budget: SearchBudget | None = None, seed: int = 0,
) -> Signal | None:
    """Member of the bounded-plus-inertial set for input u, or None.

    A None is a semi-decision: the grid search ran out of candidates within
    its budget after one refinement round.
    """
    lo, hi = envelopes(f, g, p, u)
    return search_between(lo, hi, a, budget, seed)


def bailc(
    f: BoolFn, g: BoolFn, p: BlcParams, a: AicParams,
    budget: SearchBudget | None = None,
) -> LimitCondition:
    """Bounded limit condition intersected with the inertial dwell constraint."""
    budget = budget or DEFAULT_BUDGET
    if not bailc_nonempty(f, g, p, a):
        raise EmptyBailc("dwell times exceed the combined window widths")
    base = blc(f, g, p, budget)

    def contains(u: MultiSignal, x: Signal) -> Bit:
        return base.contains(u, x) & aic_contains(x, a)

    def sample(u: MultiSignal, count: int, seed: int) -> list[Signal]:
        out: list[Signal] = []
        for x in base.sample(u, count + 2, seed):
            if aic_contains(x, a) and x not in out:
                out.append(x)
        s = 0
        while len(out) < count and s < count + 4:
            x = bailc_witness_search(f, g, p, a, u, budget, seed=seed + s)
            if x is None:
                break
            if x not in out:
                out.append(x)
            s += 1
        if not out:
            raise EmptyBailc(f"no inertial witness found for this input within budget")
        return out[:count]

    def dwell_search(u: MultiSignal, lo2: Signal | None, hi2: Signal | None,
                     seed: int) -> Signal | None:
        lo, hi = envelopes(f, g, p, u)
        if lo2 is not None:
            lo = lo | lo2
        if hi2 is not None:
            hi = hi & hi2
        return search_between(lo, hi, a, budget, seed)

    return LimitCondition(
        f.arity, f, g, "bailc", contains, sample,
        meta={"params": p, "aic": a, "envelopes": base.meta["envelopes"],
              "dwell_search": dwell_search},
    )


def bailc_compose(
    f: BoolFn, g: BoolFn, p: BlcParams, a: AicParams,
    inner: list[tuple[BoolFn, BoolFn]], p_inner: BlcParams, a_inner: AicParams,
    budget: SearchBudget | None = None,
) -> LimitCondition:
    """Chain of bounded-plus-inertial stages with shared inner parameters.

    The bounded parts compose with summed parameters; the dwell constraint of
    the whole chain is the outer one, because only the last stage shapes the
    final output.
    """
    budget = budget or DEFAULT_BUDGET
    if not bailc_nonempty(f, g, p, a):
        raise EmptyBailc("outer stage is empty")
    for fi, gi in inner:
        if not bailc_nonempty(fi, gi, p_inner, a_inner):
            raise EmptyBailc("an inner stage is empty")
    composed = blc_compose(f, g, p, inner, p_inner, budget)
    return bailc(composed.f, composed.g, composed.meta["params"], a, budget)
