"""Stochastic world model plus deterministic scripted-event schedules.

The world holds three neutral features (tree, rock, sun). Each iteration,
every feature independently flips presence with probability c1 times the
previous iteration's exploration: a moving agent encounters change, an
immobile one does not. Food can then appear only where a tree is present
and only if the agent explored (probability c2 * E_prev, clamped to 1);
a predator can appear wherever a rock is present, at probability c3
regardless of exploration.

Every iteration consumes exactly five uniform draws, in the fixed order
tree-toggle, rock-toggle, sun-toggle, food, predator, no matter which
outcomes occur and no matter what a schedule later overrides. That makes
traces bit-reproducible under schedule edits that do not change draw
order.

Schedules exist for testing: they force events at chosen iterations,
pin features, or suppress the stochastic outcomes of a single iteration
entirely (draws still consumed). Directives are applied after sampling,
in the order suppress, set-feature, force-food/force-predator, and the
result must still satisfy the gating constraints (food needs tree,
predator needs rock) or the run aborts.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Iterable, Optional, Union

from .rng import RandomStream

FORCE_FOOD = "force-food"
FORCE_PREDATOR = "force-predator"
SET_FEATURE = "set-feature"
SUPPRESS_STOCHASTIC = "suppress-stochastic"

DIRECTIVE_ACTIONS = (FORCE_FOOD, FORCE_PREDATOR, SET_FEATURE, SUPPRESS_STOCHASTIC)

FEATURES = ("tree", "rock", "sun")

RANDOM_FEATURES = "random"


class EnvironmentConfigError(ValueError):
    """An environment constant or schedule fails validation."""


class ScheduleError(RuntimeError):
    """A schedule directive conflicts with the world state at run time."""


@dataclass(frozen=True)
class EnvState:
    """Presence bits for the three neutral features."""

    tree: int = 0
    rock: int = 0
    sun: int = 0

    def validate(self) -> None:
        for name in FEATURES:
            if getattr(self, name) not in (0, 1):
                raise ValueError(f"feature {name} must be 0 or 1")


@dataclass(frozen=True)
class Directive:
    """One scheduled intervention at iteration ``at``."""

    at: int
    action: str
    feature: Optional[str] = None  # set-feature only
    value: Optional[int] = None    # set-feature only

    def validate(self) -> None:
        if self.at < 1:
            raise EnvironmentConfigError(
                f"schedule iteration must be >= 1, got {self.at}"
            )
        if self.action not in DIRECTIVE_ACTIONS:
            raise EnvironmentConfigError(
                f"unknown schedule action {self.action!r}; "
                f"expected one of {', '.join(DIRECTIVE_ACTIONS)}"
            )
        if self.action == SET_FEATURE:
            if self.feature not in FEATURES:
                raise EnvironmentConfigError(
                    f"set-feature needs feature in {FEATURES}, got {self.feature!r}"
                )
            if self.value not in (0, 1):
                raise EnvironmentConfigError(
                    f"set-feature value must be 0 or 1, got {self.value!r}"
                )
        elif self.feature is not None or self.value is not None:
            raise EnvironmentConfigError(
                f"{self.action} takes no feature/value arguments"
            )


@dataclass(frozen=True)
class EventSchedule:
    """Ordered scripted interventions, validated at construction.

    Iterations must be strictly increasing within each directive kind
    (per feature for set-feature), so a kind cannot fire twice in one
    iteration; different kinds may share an iteration.
    """

    directives: tuple[Directive, ...] = ()

    def validate(self) -> None:
        last_at: dict[tuple, int] = {}
        for d in self.directives:
            d.validate()
            key = (d.action, d.feature)
            if key in last_at and d.at <= last_at[key]:
                label = d.action if d.feature is None else f"{d.action}({d.feature})"
                raise EnvironmentConfigError(
                    f"schedule iterations for {label} must be strictly "
                    f"increasing; {d.at} follows {last_at[key]}"
                )
            last_at[key] = d.at

    def at(self, t: int) -> list[Directive]:
        return [d for d in self.directives if d.at == t]

    def __bool__(self) -> bool:
        return bool(self.directives)


@dataclass(frozen=True)
class EnvConfig:
    """World constants and the initial feature arrangement."""

    c1: float = 0.75   # feature toggle coefficient, probability is c1 * E_prev
    c2: float = 0.0    # food coefficient, probability is c2 * E_prev where tree
    c3: float = 0.0    # predator coefficient, probability is c3 where rock
    initial_features: Union[str, tuple[int, int, int]] = RANDOM_FEATURES

    def validate(self) -> None:
        if not 0.0 <= self.c1 <= 1.0:
            raise EnvironmentConfigError(f"c1 must be in [0, 1], got {self.c1}")
        if self.c2 < 0.0:
            raise EnvironmentConfigError(f"c2 must be >= 0, got {self.c2}")
        if not 0.0 <= self.c3 <= 1.0:
            raise EnvironmentConfigError(f"c3 must be in [0, 1], got {self.c3}")
        if self.initial_features != RANDOM_FEATURES:
            feats = self.initial_features
            if (not isinstance(feats, tuple) or len(feats) != 3
                    or any(b not in (0, 1) for b in feats)):
                raise EnvironmentConfigError(
                    "initial_features must be 'random' or three 0/1 bits "
                    f"(tree, rock, sun), got {feats!r}"
                )


def initial_env(config: EnvConfig, stream: RandomStream) -> EnvState:
    """Starting feature arrangement; 'random' spends three setup draws
    (present iff draw < 0.5), fixed bits spend none."""
    if config.initial_features == RANDOM_FEATURES:
        bits = [1 if stream.next_float() < 0.5 else 0 for _ in FEATURES]
        return EnvState(*bits)
    return EnvState(*config.initial_features)


def toggle_neutral_features(env: EnvState, e_prev: float, c1: float,
                            stream: RandomStream) -> EnvState:
    """Flip each feature independently with probability c1 * E_prev.

    Always consumes exactly three draws, in tree, rock, sun order.
    """
    p = c1 * e_prev
    bits = []
    for name in FEATURES:
        u = stream.next_float()
        bit = getattr(env, name)
        bits.append(1 - bit if u < p else bit)
    return EnvState(*bits)


def sample_food(env: EnvState, e_prev: float, c2: float,
                stream: RandomStream) -> int:
    """Food appears with probability min(1, c2 * E_prev) where a tree is
    present, never otherwise. Exactly one draw consumed either way."""
    u = stream.next_float()
    if not env.tree:
        return 0
    return 1 if u < min(1.0, c2 * e_prev) else 0


def sample_predator(env: EnvState, c3: float, stream: RandomStream) -> int:
    """A predator appears with probability c3 where a rock is present,
    independent of exploration. Exactly one draw consumed either way."""
    u = stream.next_float()
    if not env.rock:
        return 0
    return 1 if u < c3 else 0


def apply_schedule(
    env: EnvState,
    food: int,
    predator: int,
    schedule: EventSchedule,
    t: int,
    env_before_toggle: EnvState,
) -> tuple[EnvState, int, int]:
    """Apply iteration ``t``'s directives on top of the sampled outcomes.

    suppress-stochastic discards this iteration's sampled outcomes (the
    feature toggles are reverted to ``env_before_toggle`` and food and
    predator reset to 0) while the draws stay consumed. Forced events
    must be consistent with the features after overrides, otherwise the
    run is aborted with a ScheduleError.
    """
    todays = schedule.at(t) if schedule else []
    if not todays:
        return env, food, predator

    if any(d.action == SUPPRESS_STOCHASTIC for d in todays):
        env, food, predator = env_before_toggle, 0, 0
    for d in todays:
        if d.action == SET_FEATURE:
            env = replace(env, **{d.feature: d.value})
    for d in todays:
        if d.action == FORCE_FOOD:
            food = 1
        elif d.action == FORCE_PREDATOR:
            predator = 1

    if food and not env.tree:
        raise ScheduleError(
            f"iteration {t}: food forced or sampled with no tree present"
        )
    if predator and not env.rock:
        raise ScheduleError(
            f"iteration {t}: predator forced or sampled with no rock present"
        )
    return env, food, predator
