"""Solution comparison by the standard feasibility rules.

A feasible solution always beats an infeasible one; two feasible solutions
compare by objective value; two infeasible solutions compare by total
constraint violation. Ties on the deciding key are explicit so callers can
implement stable, deterministic tie-breaking.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

A_BETTER = -1
TIE = 0
B_BETTER = 1


@dataclass(frozen=True)
class RankedSolution:
    f: float
    violation: float

    def __post_init__(self):
        if self.violation < 0:
            raise ValueError("violation must be non-negative")


class InvalidSolution(ValueError):
    pass


def deb_compare(a: RankedSolution, b: RankedSolution) -> int:
    """Return A_BETTER, B_BETTER, or TIE."""
    if math.isnan(a.f) or math.isnan(a.violation) or math.isnan(b.f) or math.isnan(b.violation):
        raise InvalidSolution("NaN objective or violation")
    a_feas = a.violation == 0.0
    b_feas = b.violation == 0.0
    if a_feas and not b_feas:
        return A_BETTER
    if b_feas and not a_feas:
        return B_BETTER
    key_a, key_b = (a.f, b.f) if a_feas else (a.violation, b.violation)
    if key_a < key_b:
        return A_BETTER
    if key_b < key_a:
        return B_BETTER
    return TIE


def better_or_tie(a: RankedSolution, b: RankedSolution) -> bool:
    return deb_compare(a, b) != B_BETTER


def rank_population(items: list[RankedSolution]) -> list[int]:
    """Indices sorted best-first; equal items keep their input order."""
    if not items:
        raise ValueError("cannot rank an empty population")
    import functools
    return sorted(range(len(items)),
                  key=functools.cmp_to_key(lambda i, j: deb_compare(items[i], items[j])))
