"""Signal and model documents: structured text with exact rational times.

Times serialize as strings "p" or "p/q", never floats, so parsing and
serializing round-trip bit-exactly.  Model documents name a model kind plus
its bound functions and parameters; combinators carry their children inline.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Any

from .boolfn import BoolFn, fn_from_bits
from .bounded import BlcParams, blc
from .conditions import LimitCondition, lc_join, lc_meet, mc, sc, scf, serial, sol
from .errors import InvalidDocument, SiglimError
from .inertial import AicParams, bailc, flc
from .signals import Signal, Time, make_signal

MODEL_KINDS = ("flc", "blc", "bailc", "sol", "sc", "mc", "scf",
               "serial", "meet", "join")

_TIME_RE = re.compile(r"^[+-]?\d+(/[1-9]\d*)?$")


def format_time(t: Time) -> str:
    t = Fraction(t)
    if t.denominator == 1:
        return str(t.numerator)
    return f"{t.numerator}/{t.denominator}"


def parse_time(s: Any) -> Fraction:
    if not isinstance(s, str) or not _TIME_RE.match(s):
        raise InvalidDocument(
            f"time must be a string 'p' or 'p/q' with integers, got {s!r}"
        )
    return Fraction(s)


def _require(doc: Any, key: str, context: str) -> Any:
    if not isinstance(doc, dict):
        raise InvalidDocument(f"{context} must be a mapping, got {type(doc).__name__}")
    if key not in doc:
        raise InvalidDocument(f"{context} is missing the key {key!r}")
    return doc[key]


def _known_keys(doc: dict, allowed: set[str], context: str) -> None:
    extra = set(doc) - allowed
    if extra:
        raise InvalidDocument(f"{context} has unknown keys {sorted(extra)}")


# --- signals -------------------------------------------------------------------

def signal_to_doc(x: Signal) -> dict:
    return {
        "initial": x.initial,
        "transitions": [[format_time(t), v] for t, v in x.transitions],
    }


def signal_from_doc(doc: Any) -> Signal:
    initial = _require(doc, "initial", "signal document")
    raw = _require(doc, "transitions", "signal document")
    _known_keys(doc, {"initial", "transitions"}, "signal document")
    if initial not in (0, 1):
        raise InvalidDocument(f"initial must be 0 or 1, got {initial!r}")
    if not isinstance(raw, list):
        raise InvalidDocument("transitions must be a list of [time, value] pairs")
    pairs: list[tuple[Fraction, int]] = []
    for entry in raw:
        if not (isinstance(entry, list) and len(entry) == 2):
            raise InvalidDocument(f"transition entry {entry!r} is not a [time, value] pair")
        t, v = entry
        if v not in (0, 1):
            raise InvalidDocument(f"transition value must be 0 or 1, got {v!r}")
        pairs.append((parse_time(t), v))
    try:
        return make_signal(initial, pairs)
    except SiglimError as e:
        raise InvalidDocument(f"transitions do not form a canonical signal: {e}") from e


def write_signal_file(path: str, x: Signal) -> None:
    with open(path, "w") as fh:
        json.dump(signal_to_doc(x), fh, indent=2, sort_keys=True)
        fh.write("\n")


def read_signal_file(path: str) -> Signal:
    with open(path) as fh:
        try:
            doc = json.load(fh)
        except ValueError as e:
            raise InvalidDocument(f"{path}: not valid structured text: {e}") from e
    return signal_from_doc(doc)


# --- bound functions -----------------------------------------------------------

def fn_to_doc(f: BoolFn) -> dict:
    return {"arity": f.arity, "table": f.bits()}


def fn_from_doc(doc: Any, context: str) -> BoolFn:
    arity = _require(doc, "arity", context)
    table = _require(doc, "table", context)
    _known_keys(doc, {"arity", "table"}, context)
    if not isinstance(arity, int) or not isinstance(table, str):
        raise InvalidDocument(f"{context} needs an integer arity and a table string")
    try:
        return fn_from_bits(arity, table)
    except SiglimError as e:
        raise InvalidDocument(f"{context}: {e}") from e


def _params_from_doc(doc: Any, keys: tuple[str, ...], context: str) -> list[Fraction]:
    if not isinstance(doc, dict):
        raise InvalidDocument(f"{context} params must be a mapping")
    _known_keys(doc, set(keys), f"{context} params")
    return [parse_time(_require(doc, k, f"{context} params")) for k in keys]


# --- models ---------------------------------------------------------------------

def model_to_doc(i: LimitCondition) -> dict:
    """Document for a model; only the named file kinds are representable."""
    kind = i.kind
    if kind == "sc":
        return {"kind": "sc"}
    if kind == "mc":
        return {"kind": "mc", "arity": i.input_arity}
    if kind == "scf":
        return {"kind": "scf", "f": fn_to_doc(i.f)}
    if kind == "sol":
        return {"kind": "sol", "f": fn_to_doc(i.f), "g": fn_to_doc(i.g)}
    if kind == "flc":
        return {
            "kind": "flc",
            "f": fn_to_doc(i.meta["fn"]),
            "params": {"delay": format_time(i.meta["delay"])},
        }
    if kind == "blc":
        p = i.meta["params"]
        return {
            "kind": "blc",
            "f": fn_to_doc(i.f),
            "g": fn_to_doc(i.g),
            "params": {
                "m_r": format_time(p.m_r), "d_r": format_time(p.d_r),
                "m_f": format_time(p.m_f), "d_f": format_time(p.d_f),
            },
        }
    if kind == "bailc":
        p, a = i.meta["params"], i.meta["aic"]
        return {
            "kind": "bailc",
            "f": fn_to_doc(i.f),
            "g": fn_to_doc(i.g),
            "params": {
                "m_r": format_time(p.m_r), "d_r": format_time(p.d_r),
                "m_f": format_time(p.m_f), "d_f": format_time(p.d_f),
                "delta_r": format_time(a.delta_r), "delta_f": format_time(a.delta_f),
            },
        }
    if kind in ("meet", "join"):
        parts = i.meta.get("parts")
        if parts is None or len(parts) != 2 or i.meta.get("set") is not None:
            raise InvalidDocument(f"this {kind} model has no file representation")
        return {"kind": kind, "children": [model_to_doc(c) for c in parts]}
    if kind == "serial":
        outer, inners = i.meta["outer"], i.meta["inners"]
        return {
            "kind": "serial",
            "children": [model_to_doc(outer)] + [model_to_doc(j) for j in inners],
        }
    raise InvalidDocument(f"model kind {kind!r} has no file representation")


def model_from_doc(doc: Any) -> LimitCondition:
    kind = _require(doc, "kind", "model document")
    if kind not in MODEL_KINDS:
        raise InvalidDocument(
            f"unknown model kind {kind!r}; expected one of {', '.join(MODEL_KINDS)}"
        )
    if kind == "sc":
        _known_keys(doc, {"kind"}, "sc document")
        return sc()
    if kind == "mc":
        arity = _require(doc, "arity", "mc document")
        _known_keys(doc, {"kind", "arity"}, "mc document")
        if not isinstance(arity, int) or arity < 1:
            raise InvalidDocument(f"mc arity must be a positive integer, got {arity!r}")
        return mc(arity)
    if kind == "scf":
        f = fn_from_doc(_require(doc, "f", "scf document"), "scf bound function")
        _known_keys(doc, {"kind", "f"}, "scf document")
        return scf(f)
    if kind == "sol":
        f = fn_from_doc(_require(doc, "f", "sol document"), "sol lower bound")
        g = fn_from_doc(_require(doc, "g", "sol document"), "sol upper bound")
        _known_keys(doc, {"kind", "f", "g"}, "sol document")
        return sol(f, g)
    if kind == "flc":
        f = fn_from_doc(_require(doc, "f", "flc document"), "flc function")
        (d,) = _params_from_doc(_require(doc, "params", "flc document"),
                                ("delay",), "flc")
        _known_keys(doc, {"kind", "f", "params"}, "flc document")
        return flc(f, d)
    if kind == "blc":
        f = fn_from_doc(_require(doc, "f", "blc document"), "blc lower bound")
        g = fn_from_doc(_require(doc, "g", "blc document"), "blc upper bound")
        vals = _params_from_doc(_require(doc, "params", "blc document"),
                                ("m_r", "d_r", "m_f", "d_f"), "blc")
        _known_keys(doc, {"kind", "f", "g", "params"}, "blc document")
        return blc(f, g, BlcParams(*vals))
    if kind == "bailc":
        f = fn_from_doc(_require(doc, "f", "bailc document"), "bailc lower bound")
        g = fn_from_doc(_require(doc, "g", "bailc document"), "bailc upper bound")
        vals = _params_from_doc(
            _require(doc, "params", "bailc document"),
            ("m_r", "d_r", "m_f", "d_f", "delta_r", "delta_f"), "bailc",
        )
        _known_keys(doc, {"kind", "f", "g", "params"}, "bailc document")
        return bailc(f, g, BlcParams(*vals[:4]), AicParams(*vals[4:]))
    children_doc = _require(doc, "children", f"{kind} document")
    _known_keys(doc, {"kind", "children"}, f"{kind} document")
    if not isinstance(children_doc, list):
        raise InvalidDocument(f"{kind} children must be a list of model documents")
    children = [model_from_doc(c) for c in children_doc]
    if kind in ("meet", "join"):
        if len(children) != 2:
            raise InvalidDocument(f"{kind} needs exactly two children")
        return lc_meet(*children) if kind == "meet" else lc_join(*children)
    if len(children) < 2:
        raise InvalidDocument("serial needs an outer child plus one inner per input")
    outer, inners = children[0], children[1:]
    if len(inners) != outer.input_arity:
        raise InvalidDocument(
            f"serial outer has arity {outer.input_arity} but {len(inners)} inners given"
        )
    return serial(outer, inners)


def write_model_file(path: str, i: LimitCondition) -> None:
    with open(path, "w") as fh:
        json.dump(model_to_doc(i), fh, indent=2, sort_keys=True)
        fh.write("\n")


def read_model_file(path: str) -> LimitCondition:
    with open(path) as fh:
        try:
            doc = json.load(fh)
        except ValueError as e:
            raise InvalidDocument(f"{path}: not valid structured text: {e}") from e
    return model_from_doc(doc)
