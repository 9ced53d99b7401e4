"""Run configuration: a strict, human-editable YAML tree.

An empty document is a complete, valid configuration (every field has
the canonical default). Parsing is strict: unknown keys are rejected
rather than ignored, range violations name the offending field and its
legal range, and YAML syntax errors carry line/column positions.

Layout of the tree (all keys optional):

    seed: 42                  # 64-bit unsigned integer
    iterations: 200           # run length, >= 1
    params:                   # model constants, see dynamics.Params
      k0: 1.05
      ...
    env:                      # world constants, see environment.EnvConfig
      c1: 0.75
      c2: 0.5
      c3: 0.25
      initial_features: random        # or [tree, rock, sun] bits
    schedule:                 # scripted interventions, optional
      - {at: 24, do: force-food}
      - {at: 30, do: set-feature, feature: sun, value: 1}
      - {at: 3, do: suppress-stochastic}
    flags:
      freeze_k1: false
      learning_enabled: true

`render_config` emits the fully explicit tree; parse(render(c)) == c.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass, field, replace
from typing import Any, Optional

import yaml

from .dynamics import ParameterError, Params
from .environment import (
    Directive,
    EnvConfig,
    EnvironmentConfigError,
    EventSchedule,
    FEATURES,
    RANDOM_FEATURES,
    SET_FEATURE,
)

MAX_SEED = (1 << 64) - 1

_PARAM_FIELDS = tuple(f.name for f in dataclasses.fields(Params))
_ENV_FIELDS = ("c1", "c2", "c3", "initial_features")
_FLAG_FIELDS = ("freeze_k1", "learning_enabled")
_TOP_FIELDS = ("seed", "iterations", "params", "env", "schedule", "flags")


class ConfigError(ValueError):
    """Configuration text failed to parse or validate."""


@dataclass(frozen=True)
class RunConfig:
    """Everything a run depends on; equal configs produce equal traces."""

    seed: int = 0
    iterations: int = 200
    params: Params = field(default_factory=Params)
    env: EnvConfig = field(default_factory=EnvConfig)
    schedule: EventSchedule = field(default_factory=EventSchedule)
    freeze_k1: bool = False
    learning_enabled: bool = True

    def validate(self) -> None:
        if not isinstance(self.seed, int) or not 0 <= self.seed <= MAX_SEED:
            raise ConfigError(
                f"seed must be an integer in [0, 2^64), got {self.seed!r}"
            )
        if not isinstance(self.iterations, int) or self.iterations < 1:
            raise ConfigError(
                f"iterations must be an integer >= 1, got {self.iterations!r}"
            )
        try:
            self.params.validate()
            self.env.validate()
            self.schedule.validate()
        except (ParameterError, EnvironmentConfigError) as exc:
            raise ConfigError(str(exc)) from exc

    def with_seed(self, seed: int) -> "RunConfig":
        return replace(self, seed=seed)


def _reject_unknown(mapping: dict, allowed: tuple, where: str) -> None:
    for key in mapping:
        if key not in allowed:
            raise ConfigError(
                f"unknown key {key!r} in {where}; allowed keys: "
                + ", ".join(allowed)
            )


def _require_mapping(node: Any, where: str) -> dict:
    if node is None:
        return {}
    if not isinstance(node, dict):
        raise ConfigError(f"{where} must be a mapping, got {type(node).__name__}")
    return node


def _number(value: Any, where: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(f"{where} must be a number, got {value!r}")
    return float(value)


def _parse_initial_features(node: Any) -> Any:
    if node is None or node == RANDOM_FEATURES:
        return RANDOM_FEATURES
    if isinstance(node, list):
        if len(node) != 3 or any(b not in (0, 1) for b in node):
            raise ConfigError(
                "env.initial_features list must be three 0/1 bits "
                f"(tree, rock, sun), got {node!r}"
            )
        return tuple(node)
    if isinstance(node, dict):
        _reject_unknown(node, FEATURES, "env.initial_features")
        bits = []
        for name in FEATURES:
            bit = node.get(name, 0)
            if bit not in (0, 1):
                raise ConfigError(
                    f"env.initial_features.{name} must be 0 or 1, got {bit!r}"
                )
            bits.append(bit)
        return tuple(bits)
    raise ConfigError(
        f"env.initial_features must be 'random', a 3-bit list, or a mapping, "
        f"got {node!r}"
    )


def _parse_schedule(node: Any) -> EventSchedule:
    if node is None:
        return EventSchedule()
    if not isinstance(node, list):
        raise ConfigError("schedule must be a list of directives")
    directives = []
    for i, entry in enumerate(node):
        where = f"schedule[{i}]"
        entry = _require_mapping(entry, where)
        _reject_unknown(entry, ("at", "do", "feature", "value"), where)
        if "at" not in entry or "do" not in entry:
            raise ConfigError(f"{where} needs both 'at' and 'do'")
        at = entry["at"]
        if isinstance(at, bool) or not isinstance(at, int):
            raise ConfigError(f"{where}.at must be an integer, got {at!r}")
        action = entry["do"]
        directives.append(Directive(
            at=at,
            action=action,
            feature=entry.get("feature"),
            value=entry.get("value"),
        ))
        if action != SET_FEATURE and ("feature" in entry or "value" in entry):
            raise ConfigError(
                f"{where}: {action!r} takes no feature/value arguments"
            )
    return EventSchedule(tuple(directives))


def config_from_tree(tree: Any) -> RunConfig:
    """Build and validate a RunConfig from a parsed YAML tree."""
    tree = _require_mapping(tree, "configuration")
    _reject_unknown(tree, _TOP_FIELDS, "configuration")

    seed = tree.get("seed", 0)
    if isinstance(seed, bool) or not isinstance(seed, int):
        raise ConfigError(f"seed must be an integer, got {seed!r}")
    iterations = tree.get("iterations", 200)
    if isinstance(iterations, bool) or not isinstance(iterations, int):
        raise ConfigError(f"iterations must be an integer, got {iterations!r}")

    params_node = _require_mapping(tree.get("params"), "params")
    _reject_unknown(params_node, _PARAM_FIELDS, "params")
    params = Params(**{
        name: _number(value, f"params.{name}")
        for name, value in params_node.items()
    })

    env_node = _require_mapping(tree.get("env"), "env")
    _reject_unknown(env_node, _ENV_FIELDS, "env")
    env_kwargs: dict[str, Any] = {
        name: _number(env_node[name], f"env.{name}")
        for name in ("c1", "c2", "c3") if name in env_node
    }
    if "initial_features" in env_node:
        env_kwargs["initial_features"] = _parse_initial_features(
            env_node["initial_features"])
    env = EnvConfig(**env_kwargs)

    flags_node = _require_mapping(tree.get("flags"), "flags")
    _reject_unknown(flags_node, _FLAG_FIELDS, "flags")
    for name, value in flags_node.items():
        if not isinstance(value, bool):
            raise ConfigError(f"flags.{name} must be a boolean, got {value!r}")

    config = RunConfig(
        seed=seed,
        iterations=iterations,
        params=params,
        env=env,
        schedule=_parse_schedule(tree.get("schedule")),
        freeze_k1=flags_node.get("freeze_k1", False),
        learning_enabled=flags_node.get("learning_enabled", True),
    )
    config.validate()
    return config


def parse_config(text: str) -> RunConfig:
    """Parse configuration text; raises ConfigError with a line/column
    position on malformed YAML and a field diagnostic on bad values."""
    try:
        tree = yaml.safe_load(text)
    except yaml.MarkedYAMLError as exc:
        mark = exc.problem_mark or exc.context_mark
        if mark is not None:
            raise ConfigError(
                f"syntax error at line {mark.line + 1}, column {mark.column + 1}: "
                f"{exc.problem or exc}"
            ) from exc
        raise ConfigError(f"syntax error: {exc}") from exc
    except yaml.YAMLError as exc:
        raise ConfigError(f"syntax error: {exc}") from exc
    return config_from_tree(tree)


def config_to_tree(config: RunConfig) -> dict:
    """Fully explicit tree for a config (no defaults elided)."""
    feats = config.env.initial_features
    return {
        "seed": config.seed,
        "iterations": config.iterations,
        "params": {
            name: getattr(config.params, name) for name in _PARAM_FIELDS
        },
        "env": {
            "c1": config.env.c1,
            "c2": config.env.c2,
            "c3": config.env.c3,
            "initial_features": (
                RANDOM_FEATURES if feats == RANDOM_FEATURES else list(feats)
            ),
        },
        "schedule": [
            {
                "at": d.at, "do": d.action,
                **({"feature": d.feature, "value": d.value}
                   if d.action == SET_FEATURE else {}),
            }
            for d in config.schedule.directives
        ],
        "flags": {
            "freeze_k1": config.freeze_k1,
            "learning_enabled": config.learning_enabled,
        },
    }


def render_config(config: RunConfig) -> str:
    """YAML text that parses back to an equal RunConfig."""
    return yaml.safe_dump(config_to_tree(config), sort_keys=False,
                          default_flow_style=False)
