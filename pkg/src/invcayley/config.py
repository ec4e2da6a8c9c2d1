"""Resource caps.

Every cap can be overridden through an environment variable so that the CLI can
be pushed past (or pulled below) the defaults without code changes. Caps bound
memory and search effort, not correctness: an operation that would exceed its
cap raises CapExceeded instead of degrading silently.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, fields

from .errors import DomainError

_ENV_PREFIX = "INVCAYLEY_"

_ENV_NAMES = {
    "vertex": "VERTEX_CAP",
    "edge": "EDGE_CAP",
    "brute_force": "BRUTE_FORCE_CAP",
    "zn_brute_force": "ZN_BRUTE_FORCE_CAP",
    "exact_solver": "EXACT_SOLVER_CAP",
    "planarity_edges": "PLANARITY_EDGE_CAP",
    "self_complement": "SELF_COMPLEMENT_CAP",
}


@dataclass(frozen=True)
class Caps:
    vertex: int = 200_000
    edge: int = 2_000_000
    brute_force: int = 50_000
    zn_brute_force: int = 1_000_000
    exact_solver: int = 64
    planarity_edges: int = 5_000
    self_complement: int = 12

    def __post_init__(self) -> None:
        for f in fields(self):
            value = getattr(self, f.name)
            if not isinstance(value, int) or value < 1:
                raise DomainError(f"cap {f.name!r} must be a positive integer, got {value!r}")

    @classmethod
    def from_env(cls, env: os._Environ | dict | None = None) -> "Caps":
        """Build caps from the environment, falling back to defaults."""
        env = os.environ if env is None else env
        overrides = {}
        for field_name, suffix in _ENV_NAMES.items():
            raw = env.get(_ENV_PREFIX + suffix)
            if raw is None:
                continue
            try:
                overrides[field_name] = int(raw)
            except ValueError:
                raise DomainError(
                    f"environment variable {_ENV_PREFIX + suffix} must be an integer, got {raw!r}"
                ) from None
        return cls(**overrides)


DEFAULT_CAPS = Caps()
