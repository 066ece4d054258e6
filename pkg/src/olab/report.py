"""Best-constant tracking over widening parameter ranges.

Every boundedness condition in the toolkit is probed the same way: the
empirical best constant C is recomputed while the probed range widens on a
doubling schedule, and the trend of the C-sequence decides the verdict.
A genuine power-law blow-up keeps growing as the range widens; a bounded
condition plateaus.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

HOLDS_STABLE = "holds-stable"
DIVERGES = "diverges"
INCONCLUSIVE = "inconclusive"

# Cumulative growth of the best constant across the schedule that counts as
# divergence, provided the constant is still growing in the last two steps.
DIVERGENCE_FACTOR = 1.3
# Per-step growth below this is treated as a plateau.
STABILITY_TOL = 0.05
# Per-step growth above this counts as "still growing".
GROWTH_TOL = 0.005


@dataclass
class ConditionReport:
    """Best-constant sequence for one condition plus the final verdict.

    ``schedule`` and ``constants`` are parallel: constants[i] is the best
    constant with the range truncated at schedule[i].  The sequence is
    nondecreasing (suprema over growing sets).  ``witness`` records where
    the final constant was attained.
    """

    condition: str
    params: dict = field(default_factory=dict)
    schedule: list = field(default_factory=list)
    constants: list = field(default_factory=list)
    verdict: str = INCONCLUSIVE
    witness: float | None = None
    details: dict = field(default_factory=dict)

    @property
    def constant(self) -> float:
        """Best constant at the widest probed range."""
        return self.constants[-1] if self.constants else float("nan")


def assess(constants) -> str:
    """Classify a nondecreasing best-constant sequence.

    ``diverges``: the constant grew by at least DIVERGENCE_FACTOR across the
    schedule and was still growing over the last two steps.  ``holds-stable``:
    the last two steps are within STABILITY_TOL (a plateau).  Anything else
    (including growth that stopped mid-schedule) is ``inconclusive``.
    """
    cs = np.asarray(constants, dtype=float)
    if cs.size == 0 or np.isnan(cs).any():
        return INCONCLUSIVE
    if np.isinf(cs[-1]):
        # no finite constant exists at the widest truncation
        return DIVERGES
    # leading zeros are empty probe windows, not evidence
    positive = np.nonzero(cs > 0)[0]
    if positive.size == 0:
        return HOLDS_STABLE
    cs = cs[positive[0] :]
    if cs.size == 1:
        return INCONCLUSIVE
    total = cs[-1] / cs[0]
    steps = cs[1:] / cs[:-1]
    tail = steps[-2:] if steps.size >= 2 else steps
    if total >= DIVERGENCE_FACTOR and np.all(tail > 1.0 + GROWTH_TOL):
        return DIVERGES
    if np.all(tail <= 1.0 + STABILITY_TOL):
        return HOLDS_STABLE
    return INCONCLUSIVE


def doubling_schedule(start: float = 2.0**4, stop: float = 2.0**10) -> list[float]:
    """Default truncation schedule {start, 2*start, ..., stop}."""
    out = []
    r = float(start)
    while r <= stop * (1 + 1e-12):
        out.append(r)
        r *= 2.0
    return out
