"""Experiment descriptions and the small parsers the CLI feeds them with."""

import hashlib
import json
import os
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from certilab.errors import InputMismatchError, ParameterError

CHECKS = ("certified", "diameter", "closure", "witness", "cover", "schedule", "complexity")

_TRUE = {"true", "yes", "y", "on"}
_FALSE = {"false", "no", "n", "off"}


def parse_value(raw: str) -> Any:
    """int, then float, then boolean words, else the string itself."""
    text = raw.strip()
    for convert in (int, float):
        try:
            return convert(text)
        except ValueError:
            pass
    if text.lower() in _TRUE:
        return True
    if text.lower() in _FALSE:
        return False
    return text


def parse_params(text: Optional[str]) -> Dict[str, Any]:
    """Parse "k=v,k2=v2" into a dict with typed values."""
    params: Dict[str, Any] = {}
    if not text:
        return params
    for item in text.split(","):
        if not item.strip():
            continue
        if "=" not in item:
            raise ParameterError(f"parameter {item!r} is not of the form key=value")
        key, value = item.split("=", 1)
        params[key.strip()] = parse_value(value)
    return params


def parse_seeds(text: Optional[str]) -> List[int]:
    """Parse "0,3,5-8" into [0, 3, 5, 6, 7, 8]; duplicates are rejected."""
    if not text:
        return [0]
    seeds: List[int] = []
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        try:
            if "-" in item:
                lo, hi = item.split("-", 1)
                seeds.extend(range(int(lo), int(hi) + 1))
            else:
                seeds.append(int(item))
        except ValueError:
            raise ParameterError(f"cannot parse seed list entry {item!r}")
    if len(set(seeds)) != len(seeds):
        raise ParameterError(f"seed list {text!r} repeats a seed")
    return seeds


def parse_checks(text: Optional[str]) -> List[str]:
    """Parse a comma list of check names, keeping the canonical order."""
    if not text:
        return ["certified"]
    requested = [c.strip() for c in text.split(",") if c.strip()]
    unknown = [c for c in requested if c not in CHECKS]
    if unknown:
        raise ParameterError(f"unknown checks: {', '.join(unknown)} (choose from {', '.join(CHECKS)})")
    return [c for c in CHECKS if c in requested]


def payload_digest(payload: Any) -> str:
    """sha256 of the canonical JSON form, used to tie results to their instance."""
    text = json.dumps(payload, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


@dataclass
class ExperimentSpec:
    """One batch of runs: an instance file, an algorithm with parameters, and seeds."""

    instance_path: str
    algo: str
    params: Dict[str, Any] = field(default_factory=dict)
    seeds: List[int] = field(default_factory=lambda: [0])
    checks: List[str] = field(default_factory=list)
    out_path: Optional[str] = None
    record_timing: bool = True

    def validate(self) -> None:
        if not os.path.exists(self.instance_path):
            raise InputMismatchError(f"instance file {self.instance_path} does not exist")
        if len(set(self.seeds)) != len(self.seeds):
            raise ParameterError("seeds must be distinct")
        unknown = [c for c in self.checks if c not in CHECKS]
        if unknown:
            raise ParameterError(f"unknown checks: {', '.join(unknown)}")
