"""Deliberately naive single-iteration reference, free of simulator code.

Implements one whole iteration straight from the model's update rules on
plain dicts, with the five uniforms passed in explicitly. The engine must
match this bit-for-bit on scheduleless steps.
"""

import math

FEATURES = ("tree", "rock", "sun")


def naive_step(state, settings, draws):
    """state: dict with s0, s1, k1, tree, rock, sun, e_prev, weights
    (dict keyed (feature, "ex"|"in")); settings: dict with c1, c2, c3,
    params dict, freeze_k1, learning_enabled; draws: five uniforms in
    tree, rock, sun, food, predator order."""
    u_tree, u_rock, u_sun, u_food, u_pred = draws
    p = settings["params"]

    # each neutral feature flips with probability c1 * previous exploration
    flip_p = settings["c1"] * state["e_prev"]
    tree = (1 - state["tree"]) if u_tree < flip_p else state["tree"]
    rock = (1 - state["rock"]) if u_rock < flip_p else state["rock"]
    sun = (1 - state["sun"]) if u_sun < flip_p else state["sun"]

    # food needs a tree and previous exploration; predators only need a rock
    food = 1 if (tree and u_food < min(1.0, settings["c2"] * state["e_prev"])) else 0
    predator = 1 if (rock and u_pred < settings["c3"]) else 0

    # exploration: gated logistic of the previous activations
    s0_prev, s1_prev, k1_prev = state["s0"], state["s1"], state["k1"]
    if s0_prev <= s1_prev:
        e = 0.0
    else:
        e = 1.0 / (1.0 + math.exp(-(p["w_excit_motor"] * s0_prev
                                    + p["w_inhib_motor"] * s1_prev)))

    # net perceptual input to each drive, fixed weights plus learned ones
    weights = dict(state["weights"])
    net0 = p["w_food_excit"] * food
    net1 = p["w_pred_inhib"] * predator
    for feat, bit in (("tree", tree), ("rock", rock), ("sun", sun)):
        if bit:
            net0 += weights[(feat, "ex")]
            net1 += weights[(feat, "in")]

    s0 = max(0.0, p["k0"] * (s0_prev + p["w_feedback"] * e + net0))
    s1 = max(0.0, k1_prev * (s1_prev + p["w_feedback"] * e + net1))

    if settings["freeze_k1"]:
        k1 = k1_prev
    else:
        k1 = max(p["k1_min"], k1_prev + p["delta_caution"] * (s1 - s1_prev))

    if settings["learning_enabled"] and (food or predator):
        inc_ex = p["eta"] * abs(s0 - s0_prev)
        inc_in = p["eta"] * abs(s1 - s1_prev)
        for feat, bit in (("tree", tree), ("rock", rock), ("sun", sun)):
            if bit:
                if food:
                    weights[(feat, "ex")] = weights[(feat, "ex")] + inc_ex
                if predator:
                    weights[(feat, "in")] = weights[(feat, "in")] + inc_in

    return {
        "s0": s0, "s1": s1, "k1": k1,
        "tree": tree, "rock": rock, "sun": sun,
        "food": food, "predator": predator,
        "e": e, "e_prev": e, "weights": weights,
    }
