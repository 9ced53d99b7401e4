import dataclasses

import pytest

from forager import (
    AssociativeWeights,
    EnvConfig,
    EnvState,
    MotivationalState,
    Params,
    Percepts,
    RandomStream,
    RunConfig,
    WorldState,
)
from forager.engine import step
from forager.rng import derive_seed


def make_config(**kwargs) -> RunConfig:
    """RunConfig with keyword overrides reaching into nested sections."""
    params_kw = kwargs.pop("params", {})
    env_kw = kwargs.pop("env", {})
    config = RunConfig(
        params=Params(**params_kw),
        env=EnvConfig(**env_kw),
        **kwargs,
    )
    config.validate()
    return config


def random_world(gen: RandomStream, with_weights: bool = True) -> WorldState:
    """A structurally valid random WorldState for equivalence testing."""
    s0 = 3.0 * gen.next_float()
    s1 = 3.0 * gen.next_float()
    k1 = 0.5 + gen.next_float()
    bits = [1 if gen.next_float() < 0.5 else 0 for _ in range(3)]
    w = AssociativeWeights(*(
        (0.4 * gen.next_float() if with_weights else 0.0) for _ in range(6)
    ))
    e_prev = gen.next_float() * 0.999
    return WorldState(
        t=0,
        motivational=MotivationalState(s0=s0, s1=s1, k1=k1),
        env=EnvState(*bits),
        percepts=Percepts(),
        weights=w,
        e_prev=e_prev,
    )


def world_to_naive(world: WorldState) -> dict:
    w = world.weights
    return {
        "s0": world.motivational.s0,
        "s1": world.motivational.s1,
        "k1": world.motivational.k1,
        "tree": world.env.tree,
        "rock": world.env.rock,
        "sun": world.env.sun,
        "e_prev": world.e_prev,
        "weights": {
            ("tree", "ex"): w.tree_ex, ("tree", "in"): w.tree_in,
            ("rock", "ex"): w.rock_ex, ("rock", "in"): w.rock_in,
            ("sun", "ex"): w.sun_ex, ("sun", "in"): w.sun_in,
        },
    }


def config_to_naive(config: RunConfig) -> dict:
    return {
        "c1": config.env.c1,
        "c2": config.env.c2,
        "c3": config.env.c3,
        "freeze_k1": config.freeze_k1,
        "learning_enabled": config.learning_enabled,
        "params": {
            f.name: getattr(config.params, f.name)
            for f in dataclasses.fields(config.params)
        },
    }
