"""Enumeration caps, overridable through environment variables."""
from __future__ import annotations

import os
from dataclasses import dataclass

from .errors import ResourceLimitError

ENV_MAX_DEGREE = "WEYL_EULERIAN_MAX_DEGREE"
ENV_CAP_A = "WEYL_EULERIAN_CAP_A"
ENV_CAP_BD = "WEYL_EULERIAN_CAP_BD"
ENV_CAP_BERNOULLI = "WEYL_EULERIAN_CAP_BERNOULLI"


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got {raw!r}") from None


@dataclass(frozen=True)
class Caps:
    max_degree: int = 16
    brute_a: int = 10
    brute_bd: int = 8
    bernoulli: int = 200

    @classmethod
    def from_env(cls) -> "Caps":
        return cls(
            max_degree=_env_int(ENV_MAX_DEGREE, cls.max_degree),
            brute_a=_env_int(ENV_CAP_A, cls.brute_a),
            brute_bd=_env_int(ENV_CAP_BD, cls.brute_bd),
            bernoulli=_env_int(ENV_CAP_BERNOULLI, cls.bernoulli),
        )


def caps() -> Caps:
    # read on every call so tests and the CLI can adjust the environment
    return Caps.from_env()


def check_brute_cap(n: int, type_a: bool) -> None:
    c = caps()
    limit = c.brute_a if type_a else c.brute_bd
    if n > limit:
        kind = "type A" if type_a else "type B/D"
        raise ResourceLimitError(
            f"n={n} exceeds the {kind} brute-force cap {limit} "
            f"(set {ENV_CAP_A if type_a else ENV_CAP_BD} to override)"
        )
