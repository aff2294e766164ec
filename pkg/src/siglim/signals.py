"""Piecewise-constant Boolean signals over exact rational time.

A signal is a function from the rational line to {0, 1} that is constant
before its first transition, switches at finitely many times, and holds each
value on a left-closed right-open piece.  The representation is canonical:
transition times are strictly increasing and consecutive values alternate, so
two signals are equal as functions iff they are equal as values.

All times are `fractions.Fraction`, so every operation here is exact; nothing
in this module ever rounds.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Callable, Iterable, Sequence

from .errors import (
    ArityMismatch,
    DuplicateTransitionTime,
    InvalidWindow,
    OverlappingIntervals,
    PreconditionViolated,
)

Bit = int
Time = Fraction

# Interval bounds use None for an infinite endpoint.
Interval = tuple[Time | None, Time | None]


def as_time(value: Time | int) -> Time:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise PreconditionViolated(f"time must be Fraction or int, got {type(value).__name__}")


def _as_bit(value: int) -> Bit:
    if value in (0, 1):
        return int(value)
    raise PreconditionViolated(f"bit must be 0 or 1, got {value!r}")


@dataclass(frozen=True)
class Signal:
    """Canonical piecewise-constant Boolean signal.

    `initial` is the value on the unbounded left piece; `transitions` lists
    (time, new value) pairs with strictly increasing times and alternating
    values.  Instances are immutable and compare exactly.
    """

    initial: Bit
    transitions: tuple[tuple[Time, Bit], ...] = ()

    def __post_init__(self) -> None:
        _as_bit(self.initial)
        prev_t: Time | None = None
        prev_v = self.initial
        for t, v in self.transitions:
            if not isinstance(t, Fraction):
                raise PreconditionViolated("transition times must be Fraction")
            _as_bit(v)
            if prev_t is not None and t <= prev_t:
                raise PreconditionViolated("transition times must be strictly increasing")
            if v == prev_v:
                raise PreconditionViolated("consecutive transition values must alternate")
            prev_t, prev_v = t, v

    @cached_property
    def _times(self) -> tuple[Time, ...]:
        return tuple(t for t, _ in self.transitions)

    def value_at(self, t: Time | int) -> Bit:
        """Value of the signal at time t (right-continuous convention)."""
        t = as_time(t)
        i = bisect_right(self._times, t) - 1
        return self.transitions[i][1] if i >= 0 else self.initial

    def left_limit(self, t: Time | int) -> Bit:
        """Value held immediately before time t."""
        t = as_time(t)
        i = bisect_left(self._times, t) - 1
        return self.transitions[i][1] if i >= 0 else self.initial

    def eventual_value(self) -> Bit:
        """Value held from the last transition onward."""
        return self.transitions[-1][1] if self.transitions else self.initial

    def edges(self) -> tuple[tuple[Time, ...], tuple[Time, ...]]:
        """(rising times, falling times); in canonical form every transition
        is an edge."""
        rising = tuple(t for t, v in self.transitions if v == 1)
        falling = tuple(t for t, v in self.transitions if v == 0)
        return rising, falling

    def one_intervals(self) -> list[Interval]:
        """Maximal intervals where the signal is 1, as (start, end) with None
        for an unbounded endpoint.  Disjoint, ordered, separated by gaps."""
        out: list[Interval] = []
        start: Time | None = None
        running = self.initial == 1
        for t, v in self.transitions:
            if v == 1:
                start, running = t, True
            else:
                out.append((start, t))
                running = False
        if running:
            out.append((start, None))
        return out

    def __invert__(self) -> "Signal":
        return Signal(1 - self.initial, tuple((t, 1 - v) for t, v in self.transitions))

    def __and__(self, other: "Signal") -> "Signal":
        return combine(lambda a, b: a & b, self, other)

    def __or__(self, other: "Signal") -> "Signal":
        return combine(lambda a, b: a | b, self, other)

    def __xor__(self, other: "Signal") -> "Signal":
        return combine(lambda a, b: a ^ b, self, other)


MultiSignal = tuple[Signal, ...]


def make_signal(initial: int, transitions: Iterable[tuple[Time | int, int]] = ()) -> Signal:
    """Build a canonical signal from an unordered transition list.

    Entries that repeat the current value are dropped; two entries at the same
    time are rejected rather than reordered.
    """
    initial = _as_bit(initial)
    items = sorted((as_time(t), _as_bit(v)) for t, v in transitions)
    for (t1, _), (t2, _) in zip(items, items[1:]):
        if t1 == t2:
            raise DuplicateTransitionTime(f"two transitions at t = {t1}")
    return _canonical(initial, items)


def _canonical(initial: Bit, pairs: Sequence[tuple[Time, Bit]]) -> Signal:
    out: list[tuple[Time, Bit]] = []
    cur = initial
    for t, v in pairs:
        if v != cur:
            out.append((t, v))
            cur = v
    return Signal(initial, tuple(out))


def constant(bit: int) -> Signal:
    return Signal(_as_bit(bit))


def pulse(start: Time | int, end: Time | int) -> Signal:
    """Characteristic signal of the single interval [start, end)."""
    return charfn([(start, end)])


def charfn(intervals: Iterable[tuple[Time | int, Time | int]]) -> Signal:
    """Characteristic signal of a finite union of disjoint [a, b) intervals."""
    spans = sorted((as_time(a), as_time(b)) for a, b in intervals)
    for a, b in spans:
        if a > b:
            raise PreconditionViolated(f"interval [{a}, {b}) has negative length")
    merged: list[tuple[Time, Time]] = []
    for a, b in spans:
        if a == b:
            continue
        if merged and a < merged[-1][1]:
            raise OverlappingIntervals(f"intervals overlap at t = {a}")
        if merged and a == merged[-1][1]:
            merged[-1] = (merged[-1][0], b)
        else:
            merged.append((a, b))
    pairs: list[tuple[Time, Bit]] = []
    for a, b in merged:
        pairs.append((a, 1))
        pairs.append((b, 0))
    return _canonical(0, pairs)


def combine(op: Callable[..., int], *signals: Signal) -> Signal:
    """Pointwise combination of signals under a Boolean operation."""
    if not signals:
        raise ArityMismatch("combine needs at least one signal")
    times = sorted({t for x in signals for t in x._times})
    initial = _as_bit(op(*(x.initial for x in signals)))
    pairs = [(t, _as_bit(op(*(x.value_at(t) for x in signals)))) for t in times]
    return _canonical(initial, pairs)


_UNARY = {"not": lambda a: 1 - a}
_BINARY = {
    "and": lambda a, b: a & b,
    "or": lambda a, b: a | b,
    "xor": lambda a, b: a ^ b,
}


def pointwise(op: str, x: Signal, y: Signal | None = None) -> Signal:
    """Named pointwise operation: "not", "and", "or" or "xor"."""
    if op in _UNARY:
        if y is not None:
            raise ArityMismatch(f"{op!r} takes one signal")
        return combine(_UNARY[op], x)
    if op in _BINARY:
        if y is None:
            raise ArityMismatch(f"{op!r} takes two signals")
        return combine(_BINARY[op], x, y)
    raise PreconditionViolated(f"unknown pointwise operation {op!r}")


def translate(x: Signal, d: Time | int) -> Signal:
    """Retard x by d: the result at t equals x at t - d.  d may be negative."""
    d = as_time(d)
    return Signal(x.initial, tuple((t + d, v) for t, v in x.transitions))


def translate_all(u: MultiSignal, d: Time | int) -> MultiSignal:
    return tuple(translate(x, d) for x in u)


def values_at(u: MultiSignal, t: Time | int) -> tuple[Bit, ...]:
    return tuple(x.value_at(t) for x in u)


def _check_window(d: Time | int, m: Time | int) -> tuple[Time, Time]:
    d, m = as_time(d), as_time(m)
    if m < 0 or m > d:
        raise InvalidWindow(f"window needs 0 <= m <= d, got m = {m}, d = {d}")
    return d, m


def window_all(x: Signal, d: Time | int, m: Time | int) -> Signal:
    """1 at t iff x is 1 throughout the closed window [t - d, t - d + m].

    The window looks back between d and d - m time units; with m = 0 this is
    exactly translate(x, d).
    """
    d, m = _check_window(d, m)
    return _erode(x, d, m)


def window_any(x: Signal, d: Time | int, m: Time | int) -> Signal:
    """1 at t iff x is 1 somewhere in the closed window [t - d, t - d + m]."""
    d, m = _check_window(d, m)
    return _dilate(x, d, m)


def _erode(x: Signal, d: Time, m: Time) -> Signal:
    """Windowed conjunction without the 0 <= m <= d validation.

    A maximal 1-interval [a, b) contains the closed window [t-d, t-d+m] iff
    a + d <= t < b + d - m, so each interval shrinks by m and shifts by d.
    """
    spans: list[Interval] = []
    for a, b in x.one_intervals():
        a2 = None if a is None else a + d
        b2 = None if b is None else b + d - m
        if a2 is not None and b2 is not None and a2 >= b2:
            continue
        spans.append((a2, b2))
    return _from_intervals(spans)


def _dilate(x: Signal, d: Time, m: Time) -> Signal:
    """Windowed disjunction without validation; intervals grow by m, shift by d."""
    grown: list[Interval] = []
    for a, b in x.one_intervals():
        a2 = None if a is None else a + d - m
        b2 = None if b is None else b + d
        grown.append((a2, b2))
    merged: list[Interval] = []
    for a, b in grown:
        if merged:
            pa, pb = merged[-1]
            if pb is None or (a is not None and a <= pb):
                if pb is not None and (b is None or b > pb):
                    merged[-1] = (pa, b)
                continue
        merged.append((a, b))
    return _from_intervals(merged)


def _from_intervals(spans: Sequence[Interval]) -> Signal:
    """Signal that is 1 exactly on the given ordered, separated intervals."""
    if not spans:
        return Signal(0)
    initial = 1 if spans[0][0] is None else 0
    pairs: list[tuple[Time, Bit]] = []
    for a, b in spans:
        if a is not None:
            pairs.append((a, 1))
        if b is not None:
            pairs.append((b, 0))
    return _canonical(initial, pairs)


def signal_leq(x: Signal, y: Signal) -> bool:
    """True iff x(t) <= y(t) for every t."""
    return combine(lambda a, b: int(a <= b), x, y) == constant(1)


def is_constant(x: Signal) -> bool:
    return not x.transitions


def breakpoints(*signals: Signal) -> list[Time]:
    """Sorted union of all transition times of the given signals."""
    return sorted({t for x in signals for t in x._times})


def first_one_time(x: Signal) -> Time | None:
    """A representative time where x is 1, preferring the earliest.

    When x is 1 on an unbounded left piece there is no earliest time; the
    convention is one unit before the first transition (time 0 if there is
    none), which is enough for diagnostics.
    """
    if x.initial == 1:
        return x.transitions[0][0] - 1 if x.transitions else Fraction(0)
    for t, v in x.transitions:
        if v == 1:
            return t
    return None
