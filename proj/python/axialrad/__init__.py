"""Radicals and structure of primitive axial algebras, computed exactly.

Algebra files and reports are JSON; this wrapper decodes them to dicts.
"""

import json
from dataclasses import dataclass
from pathlib import Path

from . import _core
from ._core import AxialError, BoundExceeded, ParseError

__all__ = [
    "AxialError",
    "BoundExceeded",
    "ParseError",
    "Result",
    "analyze",
    "construct",
    "corpus",
    "corpus_member",
    "oracle",
]


@dataclass(frozen=True)
class Result:
    exit_code: int
    report: dict

    @property
    def ok(self) -> bool:
        return self.exit_code == 0


def _text(algebra) -> str:
    if isinstance(algebra, dict):
        return json.dumps(algebra)
    if isinstance(algebra, Path):
        return algebra.read_text()
    return algebra


def construct(name: str, eta: str = "1/2", group: str = "s3", field: str = "Q") -> dict:
    return json.loads(_core.construct(name, eta, group, str(field)))


def analyze(algebra, form_policy: str = "solve", oracle_bound: int = 0) -> Result:
    """`algebra` is a dict, JSON text or a Path to an algebra file."""
    code, report = _core.analyze(_text(algebra), form_policy, oracle_bound)
    return Result(code, json.loads(report))


def oracle(algebra, bound: int = 1_000_000) -> Result:
    code, report = _core.oracle(_text(algebra), bound)
    return Result(code, json.loads(report))


def corpus(field: str = "Q") -> list:
    return _core.corpus_names(str(field))


def corpus_member(name: str, field: str = "Q") -> dict:
    return json.loads(_core.corpus_member(str(field), name))
