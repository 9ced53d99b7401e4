"""Associative learning between neutral features and the two drives.

When a salient event fires (food or predator), every neutral feature
present at that moment gains weight toward the drive that event is wired
to: food events strengthen feature -> excitatory links, predator events
strengthen feature -> inhibitory links. The increment is the learning
rate times the absolute post-clamp change of that drive's activation, so
associations form in proportion to how strongly the event moved the
agent. Increments are never negative and there is no decay, so weights
are monotone over a run: once formed, an association is never unlearned.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .dynamics import NEUTRAL_FEATURES, EXCITATORY, Params, Percepts


@dataclass(frozen=True)
class AssociativeWeights:
    """Learned weights from the three neutral features to the two drives.

    Field order matches the trace column order.
    """

    tree_ex: float = 0.0
    tree_in: float = 0.0
    rock_ex: float = 0.0
    rock_in: float = 0.0
    sun_ex: float = 0.0
    sun_in: float = 0.0

    def weight(self, feature: str, subsystem: str) -> float:
        suffix = "ex" if subsystem == EXCITATORY else "in"
        return getattr(self, f"{feature}_{suffix}")

    def as_tuple(self) -> tuple[float, ...]:
        return (self.tree_ex, self.tree_in, self.rock_ex,
                self.rock_in, self.sun_ex, self.sun_in)


def apply_learning(
    weights: AssociativeWeights,
    percepts: Percepts,
    delta_s0: float,
    delta_s1: float,
    params: Params,
) -> AssociativeWeights:
    """One learning step; deltas are this iteration's post-clamp changes.

    Returns the input unchanged when no salient event fired. Food and
    predator events update their own channel independently, so an
    iteration with both applies both increments.
    """
    if not (percepts.food or percepts.predator):
        return weights
    updates: dict[str, float] = {}
    food_inc = params.eta * abs(delta_s0)
    pred_inc = params.eta * abs(delta_s1)
    for feature in NEUTRAL_FEATURES:
        if not getattr(percepts, feature):
            continue
        if percepts.food:
            updates[f"{feature}_ex"] = weights.weight(feature, "excitatory") + food_inc
        if percepts.predator:
            updates[f"{feature}_in"] = weights.weight(feature, "inhibitory") + pred_inc
    if not updates:
        return weights
    return replace(weights, **updates)
