"""Runtime limits shared by the enumeration oracles and closed-form sums."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Limits:
    """Safety bounds for exponential-cost code paths.

    oracle_cap: largest n the brute-force partition enumerators accept.
    composition_budget: largest floor(n / 4t) (resp. floor(n / (2t+1)))
        the literal signed-composition sums will expand.
    """

    oracle_cap: int = 200
    composition_budget: int = 12


DEFAULT_LIMITS = Limits()
