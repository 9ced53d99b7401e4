"""Core motivational dynamics: exploration output, drive updates, adaptive caution.

The agent carries two competing drives. The excitatory subsystem tracks
the need for energy: its activation compounds geometrically each
iteration (hunger grows) and exploration feeds back negatively on it
(fatigue). The inhibitory subsystem tracks the need to avoid predators:
its activation decays geometrically (caution fades while nothing bad
happens) and receives the same negative exploration feedback, since
moving about without incident is itself evidence of safety.

The scalar exploration output is a logistic function of the weighted
drive activations, hard-gated to zero whenever the excitatory activation
does not exceed the inhibitory one. On the exploring branch the default
weights put the output strictly inside (0.5, 1), so the gate introduces a
deliberate discontinuity: the agent is either still or visibly moving.

The inhibitory decay factor is itself adaptive. It rises in proportion to
jumps in caution (a predator scare) and drifts back toward a hard floor
while caution decays, making repeated scares durably slow the fading of
caution.

Everything here is pure and works on immutable values; the engine module
owns sequencing, randomness, and trace recording.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import TYPE_CHECKING

if TYPE_CHECKING:  # avoid a runtime cycle; learning imports these types
    from .learning import AssociativeWeights

EXCITATORY = "excitatory"
INHIBITORY = "inhibitory"

#: Stimuli with no direct survival effect, in fixed processing order.
NEUTRAL_FEATURES = ("tree", "rock", "sun")


class ParameterError(ValueError):
    """A model parameter violates its documented range."""


@dataclass(frozen=True)
class Params:
    """Fixed model constants; defaults are the canonical configuration."""

    w_excit_motor: float = 0.5     # excitatory drive -> motor unit, positive
    w_inhib_motor: float = -0.5    # inhibitory drive -> motor unit, negative
    w_feedback: float = -0.1       # motor -> both drives (fatigue), negative
    k0: float = 1.05               # hunger growth factor per iteration
    k1_init: float = 0.5           # initial caution decay factor
    k1_min: float = 0.5            # floor under the caution decay factor
    delta_caution: float = 0.2     # adaptation rate of the caution decay factor
    eta: float = 0.05              # associative learning rate
    w_food_excit: float = -0.5     # food percept -> excitatory drive (satiety)
    w_pred_inhib: float = 0.9      # predator percept -> inhibitory drive
    s0_init: float = 0.9           # initial excitatory activation
    s1_init: float = 0.9           # initial inhibitory activation

    def validate(self) -> None:
        """Raise ParameterError naming the offending field(s)."""
        if not self.k0 > 0:
            raise ParameterError(f"k0 must be > 0, got {self.k0}")
        if not self.k1_min > 0:
            raise ParameterError(f"k1_min must be > 0, got {self.k1_min}")
        if self.k1_init < self.k1_min:
            raise ParameterError(
                f"k1_init must be >= k1_min, got k1_init={self.k1_init} "
                f"with k1_min={self.k1_min}"
            )
        if self.eta < 0:
            raise ParameterError(f"eta must be >= 0, got {self.eta}")
        if self.delta_caution < 0:
            raise ParameterError(
                f"delta_caution must be >= 0, got {self.delta_caution}"
            )
        if not self.w_excit_motor > 0:
            raise ParameterError(
                f"w_excit_motor must be > 0, got {self.w_excit_motor}"
            )
        if not self.w_inhib_motor < 0:
            raise ParameterError(
                f"w_inhib_motor must be < 0, got {self.w_inhib_motor}"
            )
        if not self.w_feedback < 0:
            raise ParameterError(f"w_feedback must be < 0, got {self.w_feedback}")
        if not self.w_food_excit < 0:
            raise ParameterError(
                f"w_food_excit must be < 0, got {self.w_food_excit}"
            )
        if not self.w_pred_inhib > 0:
            raise ParameterError(
                f"w_pred_inhib must be > 0, got {self.w_pred_inhib}"
            )
        if self.s0_init < 0:
            raise ParameterError(f"s0_init must be >= 0, got {self.s0_init}")
        if self.s1_init < 0:
            raise ParameterError(f"s1_init must be >= 0, got {self.s1_init}")


@dataclass(frozen=True)
class MotivationalState:
    """Evolving drive state: activations plus the current caution decay factor."""

    s0: float  # excitatory (hunger) activation, >= 0
    s1: float  # inhibitory (caution) activation, >= 0
    k1: float  # current caution decay factor, >= Params.k1_min


@dataclass(frozen=True)
class Percepts:
    """The five binary perception-unit activations for one iteration.

    Food can only be detected alongside its predictive feature (tree),
    and a predator only alongside its lair feature (rock).
    """

    food: int = 0
    predator: int = 0
    tree: int = 0
    rock: int = 0
    sun: int = 0

    def validate(self) -> None:
        for name in ("food", "predator", "tree", "rock", "sun"):
            if getattr(self, name) not in (0, 1):
                raise ValueError(f"percept {name} must be 0 or 1")
        if self.food and not self.tree:
            raise ValueError("food percept requires tree present")
        if self.predator and not self.rock:
            raise ValueError("predator percept requires rock present")


def compute_exploration(state: MotivationalState, params: Params) -> float:
    """Motor output: 0 when the excitatory drive does not dominate,
    otherwise the logistic of the weighted drive activations."""
    if state.s0 <= state.s1:
        return 0.0
    net = params.w_excit_motor * state.s0 + params.w_inhib_motor * state.s1
    return 1.0 / (1.0 + math.exp(-net))


def net_input(
    subsystem: str,
    percepts: Percepts,
    learned: "AssociativeWeights",
    params: Params,
) -> float:
    """Summed perceptual input to one drive.

    Fixed wiring: food feeds the excitatory drive (negatively: satiety)
    and predator feeds the inhibitory drive (positively). The three
    neutral features contribute through their learned weights; every
    other fixed weight is zero.
    """
    if subsystem == EXCITATORY:
        total = params.w_food_excit * percepts.food
    elif subsystem == INHIBITORY:
        total = params.w_pred_inhib * percepts.predator
    else:
        raise ValueError(f"unknown subsystem {subsystem!r}")
    for feature in NEUTRAL_FEATURES:
        if getattr(percepts, feature):
            total += learned.weight(feature, subsystem)
    return total


def update_excitatory(s0_prev: float, exploration: float, net: float,
                      params: Params) -> float:
    """Next excitatory activation: growth factor times (previous activation
    plus fatigue feedback plus perceptual input), clamped at zero."""
    return max(0.0, params.k0 * (s0_prev + params.w_feedback * exploration + net))


def update_inhibitory(s1_prev: float, exploration: float, net: float,
                      k1: float, params: Params) -> float:
    """Next inhibitory activation: decay factor times (previous activation
    plus fatigue feedback plus perceptual input), clamped at zero."""
    return max(0.0, k1 * (s1_prev + params.w_feedback * exploration + net))


def update_caution(k1_prev: float, s1_new: float, s1_prev: float,
                   params: Params) -> float:
    """Adapt the caution decay factor from the post-clamp change in s1.

    Rises after a caution jump (predator scare), drifts back toward the
    floor while caution decays; never falls below k1_min.
    """
    return max(params.k1_min,
               k1_prev + params.delta_caution * (s1_new - s1_prev))
