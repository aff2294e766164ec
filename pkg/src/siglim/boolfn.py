"""Boolean functions as explicit truth tables.

A function of arity m is stored as a table of 2**m bits where the argument
tuple (a_1, ..., a_m) indexes with a_1 most significant.  Tables serialize as
bit strings in that same order ("0001" is the two-input AND).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product

from .errors import ArityMismatch, PreconditionViolated
from .signals import Bit, MultiSignal, Signal, combine

MAX_ARITY = 16


@dataclass(frozen=True)
class BoolFn:
    arity: int
    table: tuple[Bit, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.arity <= MAX_ARITY:
            raise ArityMismatch(f"arity must be in 1..{MAX_ARITY}, got {self.arity}")
        if len(self.table) != 1 << self.arity:
            raise PreconditionViolated(
                f"table for arity {self.arity} needs {1 << self.arity} entries"
            )
        if any(v not in (0, 1) for v in self.table):
            raise PreconditionViolated("table entries must be 0 or 1")

    def __call__(self, *bits: Bit) -> Bit:
        if len(bits) != self.arity:
            raise ArityMismatch(f"expected {self.arity} arguments, got {len(bits)}")
        idx = 0
        for b in bits:
            idx = (idx << 1) | b
        return self.table[idx]

    def bits(self) -> str:
        return "".join(str(v) for v in self.table)

    def inputs(self):
        """All argument tuples in table order."""
        return product((0, 1), repeat=self.arity)

    def __str__(self) -> str:  # pragma: no cover
        return f"BoolFn({self.arity}, {self.bits()!r})"


def fn_from_bits(arity: int, bits: str) -> BoolFn:
    if len(bits) != 1 << arity or any(c not in "01" for c in bits):
        raise PreconditionViolated(f"bad table string {bits!r} for arity {arity}")
    return BoolFn(arity, tuple(int(c) for c in bits))


def identity_fn() -> BoolFn:
    return BoolFn(1, (0, 1))


def not_fn() -> BoolFn:
    return BoolFn(1, (1, 0))


def and_fn(m: int) -> BoolFn:
    return BoolFn(m, tuple(int(all(a)) for a in product((0, 1), repeat=m)))


def or_fn(m: int) -> BoolFn:
    return BoolFn(m, tuple(int(any(a)) for a in product((0, 1), repeat=m)))


def xor_fn() -> BoolFn:
    return BoolFn(2, (0, 1, 1, 0))


def const_fn(m: int, value: int) -> BoolFn:
    return BoolFn(m, (value,) * (1 << m))


def proj_fn(m: int, p: int) -> BoolFn:
    """Projection onto coordinate p (0-based)."""
    if not 0 <= p < m:
        raise ArityMismatch(f"projection index {p} out of range for arity {m}")
    return BoolFn(m, tuple(a[p] for a in product((0, 1), repeat=m)))


def apply_fn(f: BoolFn, u: MultiSignal) -> Signal:
    """Pointwise image f(u_1(t), ..., u_m(t)) as a canonical signal."""
    if len(u) != f.arity:
        raise ArityMismatch(f"function of arity {f.arity} applied to {len(u)} signals")
    return combine(f, *u)


def fn_compose(f: BoolFn, inner: list[BoolFn] | tuple[BoolFn, ...]) -> BoolFn:
    """f applied to the outputs of the inner functions on disjoint blocks.

    The result has arity sum(n_p); argument blocks appear in inner order.
    """
    if len(inner) != f.arity:
        raise ArityMismatch(f"need {f.arity} inner functions, got {len(inner)}")
    total = sum(h.arity for h in inner)
    if total > MAX_ARITY:
        raise ArityMismatch(f"composed arity {total} exceeds {MAX_ARITY}")
    table: list[Bit] = []
    for a in product((0, 1), repeat=total):
        args, pos = [], 0
        for h in inner:
            args.append(h(*a[pos : pos + h.arity]))
            pos += h.arity
        table.append(f(*args))
    return BoolFn(total, tuple(table))


@dataclass(frozen=True)
class FnProps:
    leq_fg: Bit
    max_f: Bit
    min_g: Bit
    monotone: Bit
    usual_symmetric: Bit
    rf_dual: Bit


def is_monotone(f: BoolFn) -> bool:
    """Order preserving: raising any argument never lowers the output."""
    for a in f.inputs():
        fa = f(*a)
        for p in range(f.arity):
            if a[p] == 0:
                b = a[:p] + (1,) + a[p + 1 :]
                if fa > f(*b):
                    return False
    return True


def is_permutation_symmetric(f: BoolFn) -> bool:
    for sigma in permutations(range(f.arity)):
        for a in f.inputs():
            if f(*a) != f(*(a[sigma[p]] for p in range(f.arity))):
                return False
    return True


def fn_props(f: BoolFn, g: BoolFn | None = None) -> FnProps:
    """Joint order and symmetry facts about a bound pair; g defaults to f.

    rf_dual holds when complementing all inputs and the output swaps the two
    functions: not f(a) == g(not a) for every a.
    """
    if g is None:
        g = f
    if g.arity != f.arity:
        raise ArityMismatch("f and g must share arity")
    leq = all(f(*a) <= g(*a) for a in f.inputs())
    max_f = max(f.table)
    min_g = min(g.table)
    mono = is_monotone(f) and is_monotone(g)
    sym = is_permutation_symmetric(f) and is_permutation_symmetric(g)
    dual = all(1 - f(*a) == g(*(1 - b for b in a)) for a in f.inputs())
    return FnProps(int(leq), max_f, min_g, int(mono), int(sym), int(dual))
