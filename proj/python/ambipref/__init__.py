"""Exact generalized Bewley preferences: evaluation, axiom audits, collection
analysis, slices and verification suites.

Every function takes and returns plain Python data. Rationals come back as
``fractions.Fraction``; instances can be given as dicts, JSON text or a path.
"""

from __future__ import annotations

import json
import os
import re
from fractions import Fraction
from typing import Any, Iterable, Optional, Union

from . import _core
from ._core import AmbiprefError

__all__ = [
    "AmbiprefError",
    "analyze",
    "audit",
    "evaluate",
    "generate",
    "load",
    "slice_profile",
    "verify",
]

_RATIONAL = re.compile(r"^-?\d+(/\d+)?$")

InstanceLike = Union[dict, str, os.PathLike]


def _text(instance: InstanceLike) -> str:
    if isinstance(instance, dict):
        return json.dumps(instance)
    if isinstance(instance, os.PathLike) or (isinstance(instance, str) and not instance.lstrip().startswith("{")):
        with open(instance, encoding="utf-8") as fh:
            return fh.read()
    return instance


def _exact(value: Any) -> Any:
    # "num/den" strings become Fractions; everything else is left alone
    if isinstance(value, str) and _RATIONAL.match(value):
        return Fraction(value)
    if isinstance(value, list):
        return [_exact(v) for v in value]
    if isinstance(value, dict):
        return {k: _exact(v) for k, v in value.items()}
    return value


def _q(value: Union[Fraction, int, str]) -> str:
    return str(Fraction(value)) if not isinstance(value, str) else value


def load(instance: InstanceLike) -> dict:
    """Validate an instance and return its canonical document."""
    return json.loads(_core.validate(_text(instance)))


def evaluate(instance: InstanceLike, left: str, right: str, model: str = "gb") -> dict:
    return _exact(json.loads(_core.evaluate(_text(instance), model, left, right)))


def audit(
    instance: InstanceLike,
    model: str = "gb",
    axioms: Iterable[str] = (),
    resolution: int = 2,
    radius: Union[Fraction, int, str] = 1,
    max_witnesses: int = 32,
) -> dict:
    doc = _core.audit(_text(instance), model, list(axioms), resolution, _q(radius), max_witnesses)
    return _exact(json.loads(doc))


def analyze(instance: InstanceLike) -> dict:
    return _exact(json.loads(_core.analyze(_text(instance))))


def slice_profile(
    instance: InstanceLike,
    direction: Iterable[Union[Fraction, int, str]],
    samples: int = 64,
    alpha: Optional[Union[Fraction, int, str]] = None,
    fmt: str = "json",
) -> Union[dict, str]:
    out = _core.slice(_text(instance), [_q(d) for d in direction], samples, None if alpha is None else _q(alpha), fmt)
    return _exact(json.loads(out)) if fmt == "json" else out


def generate(seed: int, states: int = 3, sets: int = 3, vertices: int = 3, denominator: int = 10) -> dict:
    return json.loads(_core.generate(seed, states, sets, vertices, denominator))


def verify(
    suites: str = "all",
    seeds: tuple = (0, 99),
    states: int = 3,
    sets: int = 3,
    vertices: int = 3,
    denominator: int = 10,
    resolution: int = 2,
    radius: Union[Fraction, int, str] = 1,
    hand_built: bool = True,
    threads: int = 0,
) -> dict:
    first, last = seeds
    doc = _core.verify(
        suites, first, last, states, sets, vertices, denominator, resolution, _q(radius), hand_built, threads
    )
    return _exact(json.loads(doc))
