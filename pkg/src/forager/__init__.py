"""forager: a deterministic simulator of a two-drive exploring animat.

A hunger drive excites exploration and a caution drive inhibits it; the
environment supplies food, predators, and neutral features that acquire
motivational weight by association. Runs are pure functions of
(configuration, seed).
"""

from .config import ConfigError, RunConfig, parse_config, render_config
from .dynamics import (
    EXCITATORY,
    INHIBITORY,
    NEUTRAL_FEATURES,
    MotivationalState,
    ParameterError,
    Params,
    Percepts,
    compute_exploration,
    net_input,
    update_caution,
    update_excitatory,
    update_inhibitory,
)
from .engine import DRAWS_PER_ITERATION, TraceRow, WorldState, init_world, run, step
from .environment import (
    Directive,
    EnvConfig,
    EnvState,
    EventSchedule,
    ScheduleError,
    sample_food,
    sample_predator,
    toggle_neutral_features,
)
from .learning import AssociativeWeights, apply_learning
from .presets import PRESET_NAMES, run_preset
from .rng import RandomStream, derive_seed
from .sweep import SweepSpec, parse_sweep_spec, run_sweep
from .traceio import read_trace, trace_to_csv, write_plotdata, write_trace

__version__ = "0.1.0"

__all__ = [
    "AssociativeWeights",
    "ConfigError",
    "Directive",
    "DRAWS_PER_ITERATION",
    "EnvConfig",
    "EnvState",
    "EventSchedule",
    "EXCITATORY",
    "INHIBITORY",
    "MotivationalState",
    "NEUTRAL_FEATURES",
    "ParameterError",
    "Params",
    "Percepts",
    "PRESET_NAMES",
    "RandomStream",
    "RunConfig",
    "ScheduleError",
    "SweepSpec",
    "TraceRow",
    "WorldState",
    "apply_learning",
    "compute_exploration",
    "derive_seed",
    "init_world",
    "net_input",
    "parse_config",
    "parse_sweep_spec",
    "read_trace",
    "render_config",
    "run",
    "run_preset",
    "run_sweep",
    "sample_food",
    "sample_predator",
    "step",
    "toggle_neutral_features",
    "trace_to_csv",
    "update_caution",
    "update_excitatory",
    "update_inhibitory",
    "write_plotdata",
    "write_trace",
]
