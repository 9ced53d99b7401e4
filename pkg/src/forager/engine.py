"""Deterministic simulation loop: one fixed phase order, one random stream.

Each iteration runs exactly six phases:

1. environment, using the previous iteration's exploration: toggle the
   neutral features, sample food, sample predator (five draws, always),
   then apply any scheduled overrides for this iteration;
2. exploration: compute this iteration's motor output from the previous
   drive state;
3. drive updates: both subsystem activations advance using this
   iteration's exploration for the fatigue feedback and the phase-1
   percepts for the net inputs;
4. caution: the inhibitory decay factor adapts to the post-clamp change
   in the inhibitory activation (skipped when frozen by config);
5. learning: associative weights update from the post-clamp deltas
   (skipped when learning is disabled);
6. record: one trace row of post-iteration values.

The phase order is part of the bit-exactness contract: a run is a pure
function of (config, seed), and replaying it reproduces every float.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .config import RunConfig
from .dynamics import (
    EXCITATORY,
    INHIBITORY,
    MotivationalState,
    Percepts,
    compute_exploration,
    net_input,
    update_caution,
    update_excitatory,
    update_inhibitory,
)
from .environment import EnvState, apply_schedule, initial_env, sample_food, \
    sample_predator, toggle_neutral_features
from .learning import AssociativeWeights, apply_learning
from .rng import RandomStream

#: Uniform draws consumed by every iteration's environment phase.
DRAWS_PER_ITERATION = 5


@dataclass(frozen=True)
class WorldState:
    """Complete simulation state between iterations."""

    t: int
    motivational: MotivationalState
    env: EnvState
    percepts: Percepts
    weights: AssociativeWeights
    e_prev: float


@dataclass(frozen=True)
class TraceRow:
    """Post-iteration values, one row per iteration; field order is the
    trace column order."""

    t: int
    E: float
    s0: float
    s1: float
    k1: float
    food: int
    predator: int
    tree: int
    rock: int
    sun: int
    w_tree_ex: float
    w_tree_in: float
    w_rock_ex: float
    w_rock_in: float
    w_sun_ex: float
    w_sun_in: float


Trace = list[TraceRow]


def init_world(config: RunConfig, stream: RandomStream) -> WorldState:
    """Iteration-zero state; spends setup draws only for random features."""
    config.validate()
    p = config.params
    return WorldState(
        t=0,
        motivational=MotivationalState(s0=p.s0_init, s1=p.s1_init, k1=p.k1_init),
        env=initial_env(config.env, stream),
        percepts=Percepts(),
        weights=AssociativeWeights(),
        e_prev=0.0,
    )


def step(world: WorldState, config: RunConfig,
         stream: RandomStream) -> tuple[WorldState, TraceRow]:
    """Advance one iteration; returns the new state and its trace row."""
    params = config.params
    t = world.t + 1

    # phase 1: environment, driven by the previous iteration's exploration
    env_before = world.env
    env = toggle_neutral_features(env_before, world.e_prev, config.env.c1, stream)
    food = sample_food(env, world.e_prev, config.env.c2, stream)
    predator = sample_predator(env, config.env.c3, stream)
    env, food, predator = apply_schedule(
        env, food, predator, config.schedule, t, env_before)
    percepts = Percepts(food=food, predator=predator,
                        tree=env.tree, rock=env.rock, sun=env.sun)

    # phase 2: exploration from the previous drive state
    prev = world.motivational
    exploration = compute_exploration(prev, params)

    # phase 3: drive updates
    net0 = net_input(EXCITATORY, percepts, world.weights, params)
    net1 = net_input(INHIBITORY, percepts, world.weights, params)
    s0 = update_excitatory(prev.s0, exploration, net0, params)
    s1 = update_inhibitory(prev.s1, exploration, net1, prev.k1, params)

    # phase 4: caution adaptation
    if config.freeze_k1:
        k1 = prev.k1
    else:
        k1 = update_caution(prev.k1, s1, prev.s1, params)

    # phase 5: learning from post-clamp deltas
    weights = world.weights
    if config.learning_enabled:
        weights = apply_learning(weights, percepts, s0 - prev.s0, s1 - prev.s1,
                                 params)

    # phase 6: record
    row = TraceRow(
        t=t, E=exploration, s0=s0, s1=s1, k1=k1,
        food=food, predator=predator,
        tree=env.tree, rock=env.rock, sun=env.sun,
        w_tree_ex=weights.tree_ex, w_tree_in=weights.tree_in,
        w_rock_ex=weights.rock_ex, w_rock_in=weights.rock_in,
        w_sun_ex=weights.sun_ex, w_sun_in=weights.sun_in,
    )
    new_world = WorldState(
        t=t,
        motivational=MotivationalState(s0=s0, s1=s1, k1=k1),
        env=env,
        percepts=percepts,
        weights=weights,
        e_prev=exploration,
    )
    return new_world, row


def run(config: RunConfig, stream: Optional[RandomStream] = None) -> list[TraceRow]:
    """Full run: exactly config.iterations rows, a pure function of
    (config, seed). A pre-positioned stream may be supplied for tests."""
    if stream is None:
        stream = RandomStream(config.seed)
    world = init_world(config, stream)
    trace: list[TraceRow] = []
    for _ in range(config.iterations):
        world, row = step(world, config, stream)
        trace.append(row)
    return trace
