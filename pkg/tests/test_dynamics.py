"""Drive dynamics: worked examples and invariants."""

import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from forager import (
    EXCITATORY,
    INHIBITORY,
    AssociativeWeights,
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
from forager.rng import RandomStream

P = Params()

activations = st.floats(min_value=0.0, max_value=50.0,
                        allow_nan=False, allow_infinity=False)


def state(s0, s1, k1=0.5):
    return MotivationalState(s0=s0, s1=s1, k1=k1)


class TestComputeExploration:
    def test_threshold_case_initial_state(self):
        assert compute_exploration(state(0.9, 0.9), P) == 0.0

    def test_logistic_value_no_inhibition(self):
        expected = 1.0 / (1.0 + math.exp(-0.45))
        got = compute_exploration(state(0.9, 0.0), P)
        assert got == pytest.approx(expected, abs=1e-12)
        assert got == pytest.approx(0.610639, abs=5e-7)

    def test_logistic_value_mixed(self):
        expected = 1.0 / (1.0 + math.exp(-0.5))
        got = compute_exploration(state(2.0, 1.0), P)
        assert got == pytest.approx(expected, abs=1e-12)
        assert got == pytest.approx(0.622459, abs=5e-7)

    @given(s0=activations, s1=activations)
    def test_threshold_equivalence_and_range(self, s0, s1):
        e = compute_exploration(state(s0, s1), P)
        if s0 <= s1:
            assert e == 0.0
        else:
            assert 0.5 < e < 1.0

    def test_range_on_bulk_random_states(self):
        gen = RandomStream(314159)
        for _ in range(10_000):
            s0 = 10.0 * gen.next_float()
            s1 = 10.0 * gen.next_float()
            e = compute_exploration(state(s0, s1), P)
            assert (e == 0.0) == (s0 <= s1)
            assert e == 0.0 or 0.5 < e < 1.0

    @given(s0=st.floats(min_value=0.0, max_value=20.0, allow_nan=False),
           s1=st.floats(min_value=0.0, max_value=20.0, allow_nan=False),
           bump=st.floats(min_value=1e-6, max_value=5.0, allow_nan=False))
    def test_monotone_in_each_drive(self, s0, s1, bump):
        base = compute_exploration(state(s0, s1), P)
        assert compute_exploration(state(s0 + bump, s1), P) >= base
        if s0 > s1 + bump:  # stay on the exploring branch
            assert compute_exploration(state(s0, s1 + bump), P) <= base


class TestNetInput:
    def test_food_only(self):
        p = Percepts(food=1, tree=1)
        assert net_input(EXCITATORY, p, AssociativeWeights(), P) == \
            pytest.approx(-0.5 + 0.0, abs=0)
        # the learned tree weight is zero, so the fixed food weight is all
        assert net_input(EXCITATORY, p, AssociativeWeights(), P) == -0.5

    def test_predator_only(self):
        p = Percepts(predator=1, rock=1)
        assert net_input(INHIBITORY, p, AssociativeWeights(), P) == 0.9

    def test_empty_sum(self):
        assert net_input(EXCITATORY, Percepts(), AssociativeWeights(), P) == 0.0

    def test_learned_rock_weight(self):
        w = AssociativeWeights(rock_in=0.170)
        assert net_input(INHIBITORY, Percepts(rock=1), w, P) == 0.170

    def test_unknown_subsystem_rejected(self):
        with pytest.raises(ValueError):
            net_input("lateral", Percepts(), AssociativeWeights(), P)


class TestUpdateExcitatory:
    def test_pure_growth(self):
        assert update_excitatory(0.9, 0.0, 0.0, P) == pytest.approx(0.945, abs=1e-12)

    def test_fatigue(self):
        assert update_excitatory(0.9, 0.6, 0.0, P) == pytest.approx(0.882, abs=1e-12)

    def test_satiety_drop(self):
        assert update_excitatory(0.9, 0.0, -0.5, P) == pytest.approx(0.42, abs=1e-12)

    def test_clamp_at_zero(self):
        assert update_excitatory(0.1, 0.0, -0.5, P) == 0.0

    @given(s0=activations,
           e=st.floats(min_value=0.0, max_value=0.999999, allow_nan=False),
           net=st.floats(min_value=-100.0, max_value=100.0, allow_nan=False))
    def test_never_negative(self, s0, e, net):
        assert update_excitatory(s0, e, net, P) >= 0.0

    @given(s0=st.floats(min_value=0.5, max_value=10.0, allow_nan=False),
           e1=st.floats(min_value=0.0, max_value=0.5, allow_nan=False),
           e2=st.floats(min_value=0.500001, max_value=0.999, allow_nan=False))
    def test_strictly_decreasing_in_exploration(self, s0, e1, e2):
        # unclamped region: more exploration means more fatigue
        assert update_excitatory(s0, e2, 0.0, P) < update_excitatory(s0, e1, 0.0, P)


class TestUpdateInhibitory:
    def test_pure_decay(self):
        assert update_inhibitory(0.9, 0.0, 0.0, 0.5, P) == pytest.approx(0.45, abs=1e-12)

    def test_predator_spike(self):
        assert update_inhibitory(0.45, 0.0, 0.9, 0.5, P) == pytest.approx(0.675, abs=1e-12)

    def test_zero_fixed_point(self):
        assert update_inhibitory(0.0, 0.0, 0.0, 0.5, P) == 0.0

    @given(s1=activations,
           e=st.floats(min_value=0.0, max_value=0.999999, allow_nan=False),
           net=st.floats(min_value=-100.0, max_value=100.0, allow_nan=False),
           k1=st.floats(min_value=0.5, max_value=2.0, allow_nan=False))
    def test_never_negative(self, s1, e, net, k1):
        assert update_inhibitory(s1, e, net, k1, P) >= 0.0


class TestUpdateCaution:
    def test_no_change(self):
        assert update_caution(0.5, 0.45, 0.45, P) == 0.5

    def test_rise_after_spike(self):
        assert update_caution(0.5, 0.9, 0.45, P) == pytest.approx(0.59, abs=1e-12)

    def test_clamp_at_floor(self):
        assert update_caution(0.55, 0.5, 0.9, P) == 0.5

    @given(k1=st.floats(min_value=0.5, max_value=3.0, allow_nan=False),
           s1_new=activations, s1_prev=activations)
    def test_floor_always_respected(self, k1, s1_new, s1_prev):
        assert update_caution(k1, s1_new, s1_prev, P) >= P.k1_min


class TestGeometricRegimes:
    def test_hunger_grows_by_exact_factor_when_idle(self):
        # no exploration, no percepts: pure geometric growth and decay
        s0, s1, k1 = 0.9, 0.9, 0.5
        for _ in range(20):
            new_s0 = update_excitatory(s0, 0.0, 0.0, P)
            new_s1 = update_inhibitory(s1, 0.0, 0.0, k1, P)
            assert new_s0 == P.k0 * s0
            assert new_s1 == k1 * s1
            s0, s1 = new_s0, new_s1


class TestParamsValidation:
    def test_defaults_valid(self):
        Params().validate()

    @pytest.mark.parametrize("field,value", [
        ("k0", 0.0),
        ("k0", -1.0),
        ("k1_min", 0.0),
        ("eta", -0.01),
        ("delta_caution", -0.2),
        ("w_excit_motor", -0.5),
        ("w_excit_motor", 0.0),
        ("w_inhib_motor", 0.5),
        ("w_feedback", 0.1),
        ("w_food_excit", 0.5),
        ("w_pred_inhib", -0.9),
        ("s0_init", -0.1),
        ("s1_init", -0.1),
    ])
    def test_rejects_out_of_range(self, field, value):
        with pytest.raises(ParameterError, match=field):
            Params(**{field: value}).validate()

    def test_k1_init_below_floor_names_both_fields(self):
        with pytest.raises(ParameterError) as err:
            Params(k1_init=0.4).validate()
        assert "k1_init" in str(err.value) and "k1_min" in str(err.value)


class TestPercepts:
    def test_gating_constraints(self):
        Percepts(food=1, tree=1).validate()
        Percepts(predator=1, rock=1).validate()
        with pytest.raises(ValueError):
            Percepts(food=1).validate()
        with pytest.raises(ValueError):
            Percepts(predator=1).validate()
        with pytest.raises(ValueError):
            Percepts(sun=2).validate()
