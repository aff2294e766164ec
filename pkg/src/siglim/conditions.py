"""Limit conditions: input-indexed sets of admissible output signals.

A limit condition of arity m assigns to every m-tuple of input signals a set
of outputs lying between two eventual bounds f and g.  Sets are represented
intensionally by a membership predicate plus a seeded witness sampler, so
combinators (meet, join, product, serial) stay cheap and emptiness is only
ever detected lazily, when a sampler runs out of candidates.

The serial combinator also carries a generic witness search over a finite
candidate grid; closed-form compositions elsewhere in the package are checked
against that search, never the other way around.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from typing import Callable, Sequence

from .boolfn import BoolFn, apply_fn, fn_compose, fn_props
from .errors import (
    ArityMismatch,
    BlockArityMismatch,
    EmptyMeet,
    HypothesisViolated,
    PreconditionViolated,
)
from .signals import (
    Bit,
    MultiSignal,
    Signal,
    Time,
    _dilate,
    _erode,
    as_time,
    breakpoints,
    constant,
    make_signal,
    signal_leq,
    translate,
    translate_all,
)


@dataclass(frozen=True)
class SearchBudget:
    """Caps for all witness searches; exceeding them is inconclusive, never wrong."""

    max_nodes: int = 2000
    max_transitions: int = 12
    refinements: int = 1
    samples: int = 6
    cases: int = 50

    def __post_init__(self) -> None:
        if self.max_nodes < 1 or self.samples < 1 or self.cases < 1:
            raise PreconditionViolated("budget counts must be positive")
        if self.refinements < 0 or self.max_transitions < 0:
            raise PreconditionViolated("budget limits must be non-negative")


DEFAULT_BUDGET = SearchBudget()


@dataclass(frozen=True, eq=False)
class SignalSet:
    """A set of signals given by a membership predicate and a sampler."""

    description: str
    kind: str
    _contains: Callable[[Signal], Bit]
    _sample: Callable[[int, int], list[Signal]]
    meta: dict = field(default_factory=dict, repr=False)

    def contains(self, x: Signal) -> Bit:
        return self._contains(x)

    def sample(self, count: int = 3, seed: int = 0) -> list[Signal]:
        return self._sample(count, seed)


@dataclass(frozen=True, eq=False)
class LimitCondition:
    """Arity, bound pair, membership predicate and witness sampler.

    `meta` carries kind-specific data (delay parameters, component models,
    envelope builders) used by combinators and by the CLI; it never affects
    membership semantics.
    """

    input_arity: int
    f: BoolFn
    g: BoolFn
    kind: str
    _contains: Callable[[MultiSignal, Signal], Bit]
    _sample: Callable[[MultiSignal, int, int], list[Signal]]
    meta: dict = field(default_factory=dict, repr=False)

    def __post_init__(self) -> None:
        if self.f.arity != self.input_arity or self.g.arity != self.input_arity:
            raise ArityMismatch("bound functions must match the input arity")
        if not fn_props(self.f, self.g).leq_fg:
            raise PreconditionViolated("lower bound function must be <= upper bound")

    def _check_input(self, u: MultiSignal) -> MultiSignal:
        u = tuple(u)
        if len(u) != self.input_arity:
            raise ArityMismatch(f"expected {self.input_arity} input signals, got {len(u)}")
        return u

    def contains(self, u: MultiSignal, x: Signal) -> Bit:
        return self._contains(self._check_input(u), x)

    def membership(self, u: MultiSignal, x: Signal) -> tuple[Bit, bool]:
        """(bit, inconclusive): inconclusive marks a search that hit its budget."""
        probe = self.meta.get("membership")
        if probe is not None:
            return probe(self._check_input(u), x)
        return self.contains(u, x), False

    def sample(self, u: MultiSignal, count: int = 3, seed: int = 0) -> list[Signal]:
        return self._sample(self._check_input(u), count, seed)


def sol_contains(f: BoolFn, g: BoolFn, u: MultiSignal, x: Signal) -> Bit:
    """Eventual-value sandwich: f's settled output <= x's <= g's.

    For finitely-switching signals this is exactly membership in the loosest
    condition with bounds (f, g); tighter models refine it pointwise.
    """
    lam = apply_fn(f, u).eventual_value()
    mu = apply_fn(g, u).eventual_value()
    return int(lam <= x.eventual_value() <= mu)


def _rng(seed: int, tag: str) -> random.Random:
    return random.Random(f"{tag}:{seed}")


def _force_eventual(x: Signal, value: Bit) -> Signal:
    if x.eventual_value() == value:
        return x
    last = x.transitions[-1][0] if x.transitions else Fraction(0)
    return make_signal(x.initial, list(x.transitions) + [(last + 1, value)])


def _sol_sampler(f: BoolFn, g: BoolFn):
    def sample(u: MultiSignal, count: int, seed: int) -> list[Signal]:
        lo, hi = apply_fn(f, u), apply_fn(g, u)
        lam, mu = lo.eventual_value(), hi.eventual_value()
        out = [lo, hi, constant(lam), constant(mu)]
        rng = _rng(seed, "sol")
        pool = breakpoints(*u) or [Fraction(0)]
        while len(out) < count + 4:
            times = sorted(rng.sample(pool, rng.randint(0, min(3, len(pool)))))
            base = make_signal(rng.randint(0, 1), [(t, rng.randint(0, 1)) for t in times])
            out.append(_force_eventual(base, rng.choice((lam, mu))))
        uniq: list[Signal] = []
        for x in out:
            if x not in uniq:
                uniq.append(x)
        return uniq[: max(count, 2)]

    return sample


def _sol_like(f: BoolFn, g: BoolFn, kind: str) -> LimitCondition:
    if not fn_props(f, g).leq_fg:
        raise PreconditionViolated("need f <= g pointwise")
    return LimitCondition(
        input_arity=f.arity,
        f=f,
        g=g,
        kind=kind,
        _contains=lambda u, x: sol_contains(f, g, u, x),
        _sample=_sol_sampler(f, g),
    )


def sol(f: BoolFn, g: BoolFn) -> LimitCondition:
    """Loosest condition with bound pair (f, g): only eventual values are constrained."""
    return _sol_like(f, g, "sol")


def sc() -> LimitCondition:
    """Stability condition: the output eventually copies a settled input."""
    from .boolfn import identity_fn

    return _sol_like(identity_fn(), identity_fn(), "sc")


def mc(m: int) -> LimitCondition:
    """Muller condition: output settles between the AND and OR of the inputs."""
    from .boolfn import and_fn, or_fn

    return _sol_like(and_fn(m), or_fn(m), "mc")


def scf(f: BoolFn) -> LimitCondition:
    """Stability of the computed value f(u): the output settles to it exactly."""
    return _sol_like(f, f, "scf")


def _same_bounds(i: LimitCondition, j: LimitCondition) -> None:
    if i.input_arity != j.input_arity:
        raise ArityMismatch("components must share arity")
    if i.f.table != j.f.table or i.g.table != j.g.table:
        raise PreconditionViolated("components must share the bound pair (f, g)")


def lc_meet(i: LimitCondition, j: LimitCondition, budget: SearchBudget | None = None) -> LimitCondition:
    """Intersection of two conditions with the same bound pair.

    Non-emptiness is checked lazily: sampling raises EmptyMeet when no common
    witness is found within the budget.
    """
    _same_bounds(i, j)
    budget = budget or DEFAULT_BUDGET

    def contains(u: MultiSignal, x: Signal) -> Bit:
        return i.contains(u, x) & j.contains(u, x)

    def sample(u: MultiSignal, count: int, seed: int) -> list[Signal]:
        pool: list[Signal] = []
        for s in range(3):
            pool += i.sample(u, budget.samples, seed + s)
            pool += j.sample(u, budget.samples, seed + s)
        pool += [constant(0), constant(1)]
        out: list[Signal] = []
        for x in pool:
            if x not in out and i.contains(u, x) and j.contains(u, x):
                out.append(x)
        if not out:
            raise EmptyMeet("no common witness found within budget")
        return out[:count]

    return LimitCondition(i.input_arity, i.f, i.g, "meet", contains, sample,
                          meta={"parts": (i, j)})


def lc_meet_set(i: LimitCondition, v: SignalSet, budget: SearchBudget | None = None) -> LimitCondition:
    """Restrict the admissible outputs of i to members of the signal set v."""
    budget = budget or DEFAULT_BUDGET

    def contains(u: MultiSignal, x: Signal) -> Bit:
        return i.contains(u, x) & v.contains(x)

    def sample(u: MultiSignal, count: int, seed: int) -> list[Signal]:
        pool: list[Signal] = []
        for s in range(3):
            pool += i.sample(u, budget.samples, seed + s)
        pool += [constant(0), constant(1)]
        out: list[Signal] = []
        for x in pool:
            if x not in out and i.contains(u, x) and v.contains(x):
                out.append(x)
        if len(out) < count and i.kind in ("blc", "bailc") and v.kind == "aic":
            from .inertial import bailc_witness_search

            p = i.meta["params"]
            y = bailc_witness_search(i.f, i.g, p, v.meta["params"], u, budget, seed=seed)
            if y is not None and y not in out:
                out.append(y)
        if not out:
            raise EmptyMeet("no witness inside the signal set found within budget")
        return out[:count]

    return LimitCondition(i.input_arity, i.f, i.g, "meet", contains, sample,
                          meta={"parts": (i,), "set": v})


def lc_join(i: LimitCondition, j: LimitCondition) -> LimitCondition:
    """Union of two conditions with the same bound pair."""
    _same_bounds(i, j)

    def contains(u: MultiSignal, x: Signal) -> Bit:
        return i.contains(u, x) | j.contains(u, x)

    def sample(u: MultiSignal, count: int, seed: int) -> list[Signal]:
        out: list[Signal] = []
        for x in i.sample(u, count, seed) + j.sample(u, count, seed):
            if x not in out:
                out.append(x)
        return out[:count]

    return LimitCondition(i.input_arity, i.f, i.g, "join", contains, sample,
                          meta={"parts": (i, j)})


def lc_restrict(i: LimitCondition, sets: Sequence[SignalSet]) -> LimitCondition:
    """Partial condition defined only where every input lies in its set.

    Outside the domain the membership predicate answers 0; sampling there is
    an error because no witness set exists.
    """
    if len(sets) != i.input_arity:
        raise ArityMismatch("need one input set per coordinate")
    sets = tuple(sets)

    def in_domain(u: MultiSignal) -> bool:
        return all(v.contains(up) for v, up in zip(sets, u))

    def contains(u: MultiSignal, x: Signal) -> Bit:
        return i.contains(u, x) if in_domain(u) else 0

    def sample(u: MultiSignal, count: int, seed: int) -> list[Signal]:
        if not in_domain(u):
            raise PreconditionViolated("input outside the restriction domain")
        return i.sample(u, count, seed)

    return LimitCondition(i.input_arity, i.f, i.g, "restrict", contains, sample,
                          meta={"base": i, "sets": sets})


@dataclass(frozen=True, eq=False)
class DirectProduct:
    """Independent components answering on disjoint blocks of the inputs."""

    components: tuple[LimitCondition, ...]

    @property
    def block_arities(self) -> tuple[int, ...]:
        return tuple(j.input_arity for j in self.components)

    def split(self, u: MultiSignal) -> list[MultiSignal]:
        total = sum(self.block_arities)
        if len(u) != total:
            raise BlockArityMismatch(f"expected {total} signals, got {len(u)}")
        blocks, pos = [], 0
        for j in self.components:
            blocks.append(tuple(u[pos : pos + j.input_arity]))
            pos += j.input_arity
        return blocks

    def __call__(self, u: MultiSignal) -> list[SignalSet]:
        blocks = self.split(tuple(u))
        out = []
        for j, blk in zip(self.components, blocks):
            out.append(
                SignalSet(
                    description=f"component {j.kind} on its block",
                    kind="product",
                    _contains=lambda x, j=j, blk=blk: j.contains(blk, x),
                    _sample=lambda count, seed, j=j, blk=blk: j.sample(blk, count, seed),
                    meta={"component": j, "block": blk},
                )
            )
        return out


def direct_product(components: Sequence[LimitCondition]) -> DirectProduct:
    if not components:
        raise ArityMismatch("need at least one component")
    return DirectProduct(tuple(components))


# --- serial connection ------------------------------------------------------

def _split_blocks(js: Sequence[LimitCondition], u: MultiSignal) -> list[MultiSignal]:
    total = sum(j.input_arity for j in js)
    if len(u) != total:
        raise BlockArityMismatch(f"expected {total} signals, got {len(u)}")
    blocks, pos = [], 0
    for j in js:
        blocks.append(tuple(u[pos : pos + j.input_arity]))
        pos += j.input_arity
    return blocks


def _composed_bounds(i: LimitCondition, js: Sequence[LimitCondition]) -> tuple[BoolFn, BoolFn]:
    if len(js) != i.input_arity:
        raise ArityMismatch(f"outer arity {i.input_arity} needs as many inner models")
    F = fn_compose(i.f, [j.f for j in js])
    G = fn_compose(i.g, [j.g for j in js])
    if not fn_props(F, G).leq_fg:
        raise HypothesisViolated("composed lower bound exceeds composed upper bound")
    return F, G


def _model_deltas(lc: LimitCondition) -> set[Time]:
    """Delay-like quantities of a model, used to seed candidate grids."""
    out: set[Time] = set()
    meta = lc.meta
    if "delay" in meta:
        out.add(as_time(meta["delay"]))
    p = meta.get("params")
    if p is not None:
        out |= {p.d_r, p.d_r - p.m_r, p.d_f, p.d_f - p.m_f}
    a = meta.get("aic")
    if a is not None:
        out |= {a.delta_r, a.delta_f}
    for part in meta.get("parts", ()):  # meets and joins
        out |= _model_deltas(part)
    if "outer" in meta:
        out |= _model_deltas(meta["outer"])
        for j in meta["inners"]:
            out |= _model_deltas(j)
    return out


def _grid_times(base: Sequence[Time], deltas: set[Time], refined: bool) -> list[Time]:
    times = set(base) | {Fraction(0)}
    for d in deltas | {-d for d in deltas}:
        times |= {t + d for t in base}
    grid = sorted(times)
    if refined and len(grid) >= 2:
        mids = [(a + b) / 2 for a, b in zip(grid, grid[1:])]
        grid = sorted(set(grid) | set(mids))
    return grid[:64]


def _clamp(x: Signal, lo: Signal, hi: Signal) -> Signal:
    return combine_or(lo, combine_and(x, hi))


def combine_and(a: Signal, b: Signal) -> Signal:
    return a & b


def combine_or(a: Signal, b: Signal) -> Signal:
    return a | b


def _constructed_candidates(
    j: LimitCondition, blk: MultiSignal, outer: LimitCondition, x: Signal
) -> list[Signal]:
    """Likely intermediate witnesses, derived from the query rather than the grid.

    For window-bounded outers the exact adjoints of the two windows bracket
    every admissible intermediate signal, so clamping them against the inner
    envelopes hits most members in one shot.
    """
    cands: list[Signal] = [x, ~x]
    p = outer.meta.get("params")
    if p is not None:
        ymin = _erode(x, p.m_f - p.d_f, p.m_f)
        ymax = _dilate(x, p.m_r - p.d_r, p.m_r)
        cands += [ymin, ymax]
        env = j.meta.get("envelopes")
        if env is not None:
            lo, hi = env(blk)
            for z in (ymin, ymax, x, translate(x, -p.d_r), translate(x, -p.d_f)):
                cands.append(_clamp(z, lo, hi))
            cands += [lo, hi]
    d = outer.meta.get("delay")
    if d is not None:
        cands += [translate(x, -d), ~translate(x, -d)]
        env = j.meta.get("envelopes")
        if env is not None:
            lo, hi = env(blk)
            cands += [lo, hi, _clamp(translate(x, -d), lo, hi)]
    if not p and d is None:
        env = j.meta.get("envelopes")
        if env is not None:
            cands += list(env(blk))
    cands += [apply_fn(j.f, blk), apply_fn(j.g, blk), constant(0), constant(1)]
    return cands


def _grid_candidates(
    j: LimitCondition, blk: MultiSignal, x: Signal,
    deltas: set[Time], budget: SearchBudget, refined: bool,
) -> list[Signal]:
    base = breakpoints(*(list(blk) + [x]))
    grid = _grid_times(base, deltas, refined)
    out: list[Signal] = []
    for t in grid:
        out.append(make_signal(0, [(t, 1)]))
        out.append(make_signal(1, [(t, 0)]))
    for t1, t2 in combinations(grid, 2):
        out.append(make_signal(0, [(t1, 1), (t2, 0)]))
        out.append(make_signal(1, [(t1, 0), (t2, 1)]))
        if len(out) > 4 * budget.max_nodes:
            break
    return out


def _deterministic_outputs(
    j: LimitCondition, blk: MultiSignal, seed: int
) -> list[Signal] | None:
    """Complete witness list when j admits at most finitely many outputs.

    Deterministic stages have a unique member per input; meets and joins of
    such stages admit only members drawn from their parts' outputs.  Returns
    None when no such finite description applies.
    """
    if j.meta.get("deterministic") == 1:
        try:
            return j.sample(blk, 1, seed)
        except SiglimError:
            return []
    parts = j.meta.get("parts")
    if parts is not None:
        outs: list[Signal] = []
        for part in parts:
            sub = _deterministic_outputs(part, blk, seed)
            if sub is None:
                return None
            outs += sub
        return [y for y in outs if j.contains(blk, y)]
    base = j.meta.get("base")
    if base is not None:
        sub = _deterministic_outputs(base, blk, seed)
        if sub is None:
            return None
        return [y for y in sub if j.contains(blk, y)]
    return None


def _witness_candidates(
    j: LimitCondition, blk: MultiSignal, outer: LimitCondition, x: Signal,
    deltas: set[Time], budget: SearchBudget, seed: int, refined: bool, cap: int,
) -> list[Signal]:
    finite = _deterministic_outputs(j, blk, seed)
    if finite is not None:
        out: list[Signal] = []
        for y in finite:
            if y not in out:
                out.append(y)
        return out
    raw: list[Signal] = []
    try:
        raw += j.sample(blk, budget.samples, seed)
    except EmptyMeet:
        pass
    raw += _constructed_candidates(j, blk, outer, x)
    dwell = j.meta.get("dwell_search")
    if dwell is not None:
        targets: list[tuple[Signal | None, Signal | None]] = [(None, None)]
        p = outer.meta.get("params")
        if p is not None:
            ymin = _erode(x, p.m_f - p.d_f, p.m_f)
            ymax = _dilate(x, p.m_r - p.d_r, p.m_r)
            targets += [(ymin, ymax), (ymin, None), (None, ymax)]
        d = outer.meta.get("delay")
        if d is not None:
            z = translate(x, -d)
            targets.append((z, z))
        for lo2, hi2 in targets:
            y = dwell(blk, lo2, hi2, seed)
            if y is not None:
                raw.append(y)
    raw += _grid_candidates(j, blk, x, deltas, budget, refined)
    out: list[Signal] = []
    for y in raw:
        if len(out) >= cap:
            break
        if y not in out and j.contains(blk, y):
            out.append(y)
    return out


def serial_membership(
    i: LimitCondition,
    js: Sequence[LimitCondition],
    u: MultiSignal,
    x: Signal,
    budget: SearchBudget | None = None,
    seed: int = 0,
) -> tuple[Bit, bool]:
    """Search for intermediate signals proving x admissible for the chain.

    Returns (1, False) on success; (0, exhausted) otherwise, where exhausted
    flags that the budget cut the enumeration short, making the 0 a
    semi-decision rather than a proof of absence.
    """
    budget = budget or DEFAULT_BUDGET
    blocks = _split_blocks(js, u)
    deltas = _model_deltas(i)
    for j in js:
        deltas |= _model_deltas(j)
    m = len(js)
    cap = max(4, int(round(budget.max_nodes ** (1.0 / m))))
    exhausted = False
    for attempt in range(budget.refinements + 1):
        lists = [
            _witness_candidates(j, blk, i, x, deltas, budget, seed, attempt > 0, cap)
            for j, blk in zip(js, blocks)
        ]
        nodes = 0
        for combo in product(*lists):
            nodes += 1
            if nodes > budget.max_nodes:
                exhausted = True
                break
            if i.contains(tuple(combo), x):
                return 1, False
        if any(len(lst) >= cap for lst in lists):
            exhausted = True
    return 0, exhausted


def serial_search(
    i: LimitCondition, js: Sequence[LimitCondition], budget: SearchBudget | None = None
) -> LimitCondition:
    """Serial connection that always decides membership by witness search."""
    budget = budget or DEFAULT_BUDGET
    js = tuple(js)
    F, G = _composed_bounds(i, js)

    def membership(u: MultiSignal, x: Signal) -> tuple[Bit, bool]:
        return serial_membership(i, js, u, x, budget)

    def contains(u: MultiSignal, x: Signal) -> Bit:
        return membership(u, x)[0]

    def sample(u: MultiSignal, count: int, seed: int) -> list[Signal]:
        blocks = _split_blocks(js, u)
        out: list[Signal] = []
        for s in range(count):
            ys = tuple(j.sample(blk, 1 + s % 2, seed + s)[-1] for j, blk in zip(js, blocks))
            for x in i.sample(ys, 1 + s % 2, seed + s):
                if x not in out:
                    out.append(x)
        return out[:count]

    return LimitCondition(
        sum(j.input_arity for j in js), F, G, "serial", contains, sample,
        meta={"outer": i, "inners": js, "budget": budget, "membership": membership},
    )


def serial(
    i: LimitCondition, js: Sequence[LimitCondition], budget: SearchBudget | None = None
) -> LimitCondition:
    """Serial connection of an outer model with one inner model per input.

    Dispatches to a closed form when one is known (fixed delays with a common
    inner delay; bounded or bounded-plus-inertial chains with common inner
    parameters); falls back to direct evaluation when every stage is
    deterministic, and to the witness search otherwise.
    """
    budget = budget or DEFAULT_BUDGET
    js = tuple(js)
    F, G = _composed_bounds(i, js)

    if i.kind == "flc" and all(j.kind == "flc" for j in js):
        delays = {j.meta["delay"] for j in js}
        if len(delays) == 1:
            from .inertial import flc

            return flc(fn_compose(i.meta["fn"], [j.meta["fn"] for j in js]),
                       i.meta["delay"] + delays.pop())

    if i.kind == "blc" and all(j.kind == "blc" for j in js):
        inner_params = {j.meta["params"] for j in js}
        if len(inner_params) == 1:
            from .bounded import blc_compose
            from .errors import DistributivityUnverified, MonotonyViolated

            try:
                return blc_compose(
                    i.f, i.g, i.meta["params"],
                    [(j.f, j.g) for j in js], inner_params.pop(), budget,
                )
            except (MonotonyViolated, DistributivityUnverified):
                pass

    if i.kind == "bailc" and all(j.kind == "bailc" for j in js):
        inner_params = {j.meta["params"] for j in js}
        inner_aic = {j.meta["aic"] for j in js}
        if len(inner_params) == 1 and len(inner_aic) == 1:
            from .errors import DistributivityUnverified, MonotonyViolated
            from .inertial import bailc_compose

            try:
                return bailc_compose(
                    i.f, i.g, i.meta["params"], i.meta["aic"],
                    [(j.f, j.g) for j in js], inner_params.pop(), inner_aic.pop(), budget,
                )
            except (MonotonyViolated, DistributivityUnverified):
                pass

    if i.meta.get("deterministic") and all(j.meta.get("deterministic") for j in js):
        def contains(u: MultiSignal, x: Signal) -> Bit:
            blocks = _split_blocks(js, u)
            ys = tuple(j.sample(blk, 1, 0)[0] for j, blk in zip(js, blocks))
            return i.contains(ys, x)

        def sample(u: MultiSignal, count: int, seed: int) -> list[Signal]:
            blocks = _split_blocks(js, u)
            ys = tuple(j.sample(blk, 1, 0)[0] for j, blk in zip(js, blocks))
            return i.sample(ys, count, seed)

        return LimitCondition(
            sum(j.input_arity for j in js), F, G, "serial", contains, sample,
            meta={"outer": i, "inners": js, "budget": budget, "deterministic": True},
        )

    return serial_search(i, js, budget)


# --- behavioural checkers ---------------------------------------------------

def check_deterministic(
    i: LimitCondition, us: Sequence[MultiSignal], budget: SearchBudget | None = None
) -> Bit:
    """Semi-decision: 0 iff two distinct witnesses are found for some input.

    The answer 1 only says the sampled family exposed no choice; for
    window-bounded models the envelope samples make it exact on a suitable
    input family.
    """
    budget = budget or DEFAULT_BUDGET
    for u in us:
        found: list[Signal] = []
        pool: list[Signal] = []
        for s in range(3):
            try:
                pool += i.sample(tuple(u), budget.samples, s)
            except EmptyMeet:
                continue
        pool += [constant(0), constant(1)]
        for x in pool:
            if x not in found and i.contains(tuple(u), x):
                found.append(x)
                if len(found) >= 2:
                    return 0
    return 1


def check_time_invariance(i: LimitCondition, u: MultiSignal, x: Signal, d: Time | int) -> Bit:
    """1 iff membership of (u, x) matches membership of both retarded by d."""
    d = as_time(d)
    return int(i.contains(u, x) == i.contains(translate_all(tuple(u), d), translate(x, d)))


def check_constancy(
    u: MultiSignal, x: Signal, f: BoolFn, g: BoolFn,
    d_r: Time | int, d_f: Time | int,
) -> Bit:
    """Every switch of x must have been anticipated by the bounds on u.

    A rise at t needs the upper bound g true d_r earlier; a fall at t needs
    the lower bound f false d_f earlier.
    """
    d_r, d_f = as_time(d_r), as_time(d_f)
    rising, falling = x.edges()
    for t in rising:
        if g(*(up.value_at(t - d_r) for up in u)) != 1:
            return 0
    for t in falling:
        if f(*(up.value_at(t - d_f) for up in u)) != 0:
            return 0
    return 1


def check_symmetry_usual(
    i: LimitCondition, u: MultiSignal, x: Signal, sigma: Sequence[int]
) -> Bit:
    """1 iff permuting the inputs by sigma leaves membership unchanged."""
    u = tuple(u)
    if sorted(sigma) != list(range(len(u))):
        raise PreconditionViolated(f"{sigma!r} is not a permutation of the inputs")
    permuted = tuple(u[sigma[p]] for p in range(len(u)))
    return int(i.contains(u, x) == i.contains(permuted, x))


def check_symmetry_rf(i: LimitCondition, u: MultiSignal, x: Signal) -> Bit:
    """1 iff complementing all inputs and the output preserves membership."""
    u = tuple(u)
    flipped = tuple(~up for up in u)
    return int(i.contains(u, x) == i.contains(flipped, ~x))
