"""The five canonical experiment presets and their scripted twins.

Each preset runs 200 iterations with the canonical model constants and a
documented choice of environment coefficients. The magnitudes are
choices of this artifact, recorded in every summary so no hidden
parameters exist:

fig2  high food (c2 = 0.5), no predators, learning off: satiety only.
fig3  no food, sustained predation (c3 = 0.15), learning off:
      escalating caution.
fig4  high food (c2 = 0.5), no predators, learning on: food
      associations form, including a spurious sun link.
fig5  high food (c2 = 0.5) and high predation (c3 = 0.25), learning on,
      caution decay frozen at its initial value: association-driven
      response to predation.
fig6  high food (c2 = 0.5) and sparse predation (c3 = 0.04), learning
      on: both association kinds form.

Predation rates are deliberately conservative where the caution decay
factor adapts (fig3, fig6): the adaptation has no upper bound, so
sustained dense predation can compound the inhibitory activation past
floating-point range within a run. The frozen rates keep every
canonical scenario in the numerically sane regime across the documented
seed sets while preserving the qualitative behavior. fig5 freezes the
decay factor, which removes that hazard, so it keeps a dense rate.

The ``--scripted`` twin of each preset replaces stochastic sampling with
a fixed event schedule (stochastic outcomes suppressed every iteration,
draws still consumed), making the trace identical for every seed. The
scripted timings are frozen so documented properties of each scenario
can be asserted exactly: periodic food with equal post-event exploration
minima (fig2), three predator encounters with growing responses followed
by cessation (fig3), association formation with a spurious sun link and
a late sun window at iterations 176-183 (fig4), exploration stopping at
iteration 179 without resuming (fig5), and both association kinds with
the rock link dominating the inhibitory column (fig6).

Summaries report the constants, the schedule, event iterations, the
exploration extrema, and the final learned weights.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .config import RunConfig, config_to_tree
from .engine import TraceRow, run
from .environment import (
    Directive,
    EnvConfig,
    EventSchedule,
    FORCE_FOOD,
    FORCE_PREDATOR,
    SET_FEATURE,
    SUPPRESS_STOCHASTIC,
)

PRESET_NAMES = ("fig2", "fig3", "fig4", "fig5", "fig6")

ITERATIONS = 200

#: Default seeds for the sampled variants, frozen after checking that the
#: documented scenario properties hold on the resulting traces (for fig2:
#: several food events, each landing on a strictly falling stretch of E).
DEFAULT_SEEDS = {
    "fig2": 1,
    "fig3": 1,
    "fig4": 1,
    "fig5": 1,
    "fig6": 1,
}

#: Environment coefficients per preset, (c2, c3); see module docstring.
PRESET_RATES = {
    "fig2": (0.5, 0.0),
    "fig3": (0.0, 0.15),
    "fig4": (0.5, 0.0),
    "fig5": (0.5, 0.25),
    "fig6": (0.5, 0.04),
}


class PresetError(ValueError):
    """Unknown preset name."""


@dataclass(frozen=True)
class PresetResult:
    name: str
    scripted: bool
    config: RunConfig
    trace: list
    summary: dict


def _suppress_all(n: int = ITERATIONS) -> list[Directive]:
    return [Directive(at=t, action=SUPPRESS_STOCHASTIC) for t in range(1, n + 1)]


def _food(at: int) -> Directive:
    return Directive(at=at, action=FORCE_FOOD)


def _predator(at: int) -> Directive:
    return Directive(at=at, action=FORCE_PREDATOR)


def _set(at: int, feature: str, value: int) -> Directive:
    return Directive(at=at, action=SET_FEATURE, feature=feature, value=value)


#: Scripted event timings, frozen (see module docstring).
FIG2_FOOD_ITERATIONS = (6, 36, 66, 96, 126, 156, 186)
FIG3_PREDATOR_ITERATIONS = (6, 12, 33)
FIG4_FOOD_ITERATIONS = (24, 80, 195)
FIG5_PREDATOR_BUILDUP = tuple(range(4, 173, 4))
FIG5_FEATURES_HOLD_AT = 178
FIG6_FOOD_ITERATIONS = (7, 30)
FIG6_PREDATOR_ITERATIONS = (12, 18, 45, 60)
FIG6_FEATURES_OFF_AT = 44
FIG6_FEATURES_ON_AT = 70


def _scripted_schedule(name: str) -> tuple[EventSchedule, tuple[int, int, int]]:
    """Fixed schedule and initial features for a preset's scripted twin."""
    directives = _suppress_all()
    if name == "fig2":
        initial = (1, 0, 0)
        directives += [_food(t) for t in FIG2_FOOD_ITERATIONS]
    elif name == "fig3":
        initial = (0, 1, 0)
        directives += [_predator(t) for t in FIG3_PREDATOR_ITERATIONS]
    elif name == "fig4":
        initial = (1, 1, 1)
        directives += [
            _set(10, "rock", 0),
            _food(24),
            _set(80, "sun", 0), _food(80),
            _set(84, "tree", 0),
            _set(155, "rock", 1),
            _set(176, "sun", 1), _set(184, "sun", 0),
            _set(193, "tree", 1),
            _food(195),
        ]
    elif name == "fig5":
        # Predator encounters happen beside a transient rock-and-sun pair,
        # so both features accumulate inhibitory weight without feeding the
        # inhibitory drive between encounters. Once the pair is pinned
        # present near the end of the run, the learned weights alone hold
        # the inhibitory activation above the excitatory one: exploration
        # stops at iteration 179 and does not resume.
        initial = (0, 0, 0)
        for t in FIG5_PREDATOR_BUILDUP:
            directives += [_set(t, "rock", 1), _set(t, "sun", 1), _predator(t),
                           _set(t + 1, "rock", 0), _set(t + 1, "sun", 0)]
        directives += [_set(FIG5_FEATURES_HOLD_AT, "rock", 1),
                       _set(FIG5_FEATURES_HOLD_AT, "sun", 1)]
    elif name == "fig6":
        # Tree and sun disappear before the later predator encounters, so
        # the rock association ends strictly ahead of every other
        # inhibitory weight.
        initial = (1, 1, 1)
        directives += [_food(t) for t in FIG6_FOOD_ITERATIONS]
        directives += [_predator(t) for t in FIG6_PREDATOR_ITERATIONS]
        directives += [_set(FIG6_FEATURES_OFF_AT, "tree", 0),
                       _set(FIG6_FEATURES_OFF_AT, "sun", 0),
                       _set(FIG6_FEATURES_ON_AT, "tree", 1),
                       _set(FIG6_FEATURES_ON_AT, "sun", 1)]
    else:
        raise PresetError(f"unknown preset {name!r}")
    directives.sort(key=lambda d: (d.at, d.action, d.feature or ""))
    return EventSchedule(tuple(directives)), initial


def preset_config(name: str, seed: Optional[int] = None,
                  scripted: bool = False) -> RunConfig:
    """The full run configuration behind a preset."""
    if name not in PRESET_NAMES:
        raise PresetError(
            f"unknown preset {name!r}; expected one of {', '.join(PRESET_NAMES)}"
        )
    c2, c3 = PRESET_RATES[name]
    learning = name in ("fig4", "fig5", "fig6")
    freeze_k1 = name == "fig5"
    if seed is None:
        seed = DEFAULT_SEEDS[name]

    if scripted:
        schedule, initial = _scripted_schedule(name)
        env = EnvConfig(c1=0.75, c2=c2, c3=c3, initial_features=initial)
    else:
        schedule = EventSchedule()
        env = EnvConfig(c1=0.75, c2=c2, c3=c3)

    config = RunConfig(
        seed=seed,
        iterations=ITERATIONS,
        env=env,
        schedule=schedule,
        freeze_k1=freeze_k1,
        learning_enabled=learning,
    )
    config.validate()
    return config


def _notes(name: str, scripted: bool) -> list[str]:
    notes = [
        "event-rate magnitudes (c2, c3) are documented choices of this "
        "artifact, not measured values",
    ]
    if scripted:
        notes.append(
            "scripted variant: stochastic outcomes suppressed every "
            "iteration (draws still consumed); the trace is identical for "
            "every seed"
        )
    if name == "fig5":
        notes.append(
            "caution decay factor frozen at its initial value for this "
            "scenario; predation is active (c3 = 0.25) even though the "
            "otherwise-similar fig4 scenario is predator-free, so the two "
            "scenarios differ only in predation and the frozen decay"
        )
    return notes


def summarize(name: str, scripted: bool, config: RunConfig,
              trace: list) -> dict:
    rows: list[TraceRow] = trace
    final = rows[-1]
    max_row = max(rows, key=lambda r: r.E)
    first_zero = next((r.t for r in rows if r.E == 0.0), None)
    return {
        "preset": name,
        "variant": "scripted" if scripted else "sampled",
        "seed": config.seed,
        "iterations": config.iterations,
        "constants": {"c1": config.env.c1, "c2": config.env.c2,
                      "c3": config.env.c3},
        "initial_features": (
            config.env.initial_features
            if isinstance(config.env.initial_features, str)
            else list(config.env.initial_features)
        ),
        "flags": {"freeze_k1": config.freeze_k1,
                  "learning_enabled": config.learning_enabled},
        "schedule": config_to_tree(config)["schedule"],
        "events": {
            "food_iterations": [r.t for r in rows if r.food],
            "predator_iterations": [r.t for r in rows if r.predator],
        },
        "exploration": {
            "max": max_row.E,
            "max_at": max_row.t,
            "final": final.E,
            "first_zero_at": first_zero,
        },
        "final_weights": {
            "w_tree_ex": final.w_tree_ex, "w_tree_in": final.w_tree_in,
            "w_rock_ex": final.w_rock_ex, "w_rock_in": final.w_rock_in,
            "w_sun_ex": final.w_sun_ex, "w_sun_in": final.w_sun_in,
        },
        "notes": _notes(name, scripted),
    }


def run_preset(name: str, seed: Optional[int] = None,
               scripted: bool = False) -> PresetResult:
    """Run a preset and return its trace plus the summary block."""
    config = preset_config(name, seed=seed, scripted=scripted)
    trace = run(config)
    summary = summarize(name, scripted, config, trace)
    return PresetResult(name=name, scripted=scripted, config=config,
                        trace=trace, summary=summary)
