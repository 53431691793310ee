"""Exception types shared across the package, plus the size caps for brute-force searches."""

import json
import os


class HGraphError(Exception):
    exit_code = 2


class InputError(HGraphError):
    """Malformed input: unknown ids, wrong shapes, unsupported base graphs."""

    exit_code = 2


class ValidationError(HGraphError):
    """A representation or certificate fails a structural requirement."""

    exit_code = 1


class ResourceLimitError(HGraphError):
    exit_code = 3


class GenerationError(HGraphError):
    exit_code = 1


class BuilderError(HGraphError):
    """Internal inconsistency in a construction; never expected on valid input."""

    exit_code = 1


DEFAULT_LIMITS = {
    "mis": 20,
    "thinness": 8,
    "twinwidth": 8,
    "grid_cells": 400,
    "fo_budget": 10**8,
}


def limits() -> dict:
    """Current caps, with overrides from HGRAPH_LIMITS.

    The variable accepts either a JSON object or ``key=value`` pairs separated by commas,
    for example ``HGRAPH_LIMITS="thinness=9,mis=22"``.
    """
    out = dict(DEFAULT_LIMITS)
    raw = os.environ.get("HGRAPH_LIMITS", "").strip()
    if not raw:
        return out
    if raw.startswith("{"):
        pairs = json.loads(raw).items()
    else:
        pairs = [item.split("=", 1) for item in raw.split(",") if item.strip()]
    for key, value in pairs:
        key = str(key).strip()
        if key not in out:
            raise InputError(f"unknown limit {key!r} in HGRAPH_LIMITS")
        out[key] = int(value)
    return out


def check_limit(name: str, value: int) -> None:
    cap = limits()[name]
    if value > cap:
        raise ResourceLimitError(f"{name} limit exceeded: {value} > {cap}")
