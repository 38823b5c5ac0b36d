import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gaussbalance.correlations import ORDERED_PAIRS, full_report
from gaussbalance.noise import (
    ChannelParams,
    asymptotic_cm,
    evolve_cm,
    lambda_tilde_at,
    separability_time,
)
from gaussbalance.states import TripartiteParams, build_cm
from gaussbalance.symplectic import is_entangled, partial_trace, symplectic_eigenvalues

P = TripartiteParams(1.0, 0.5)


class TestEvolve:
    def test_zero_time_identity(self):
        cm = build_cm(P)
        assert evolve_cm(cm, ChannelParams(0.2, 0.0)) == cm

    def test_long_time_fixed_point(self):
        out = evolve_cm(build_cm(P), ChannelParams(0.2, 50.0))
        assert np.max(np.abs(out.matrix - asymptotic_cm(3, 0.2).matrix)) < 1e-20

    def test_interpolated_entry(self):
        out = evolve_cm(build_cm(P), ChannelParams(0.2, math.log(2.0)))
        assert out.matrix[0, 0] == pytest.approx(1.35, abs=1e-14)
        want = 0.5 * build_cm(P).matrix + 0.5 * 0.7 * np.eye(6)
        np.testing.assert_allclose(out.matrix, want, atol=1e-14)

    def test_negative_tau(self):
        with pytest.raises(ValueError):
            ChannelParams(0.2, -1.0)

    def test_two_mode_input_keeps_dimension(self):
        s = partial_trace(build_cm(P), ("A", "B"))
        assert evolve_cm(s, ChannelParams(0.1, 1.0)).matrix.shape == (4, 4)

    def test_reduce_and_evolve_commute(self):
        ch = ChannelParams(0.3, 0.8)
        a = partial_trace(evolve_cm(build_cm(P), ch), ("A", "C"))
        b = evolve_cm(partial_trace(build_cm(P), ("A", "C")), ch)
        np.testing.assert_allclose(a.matrix, b.matrix, atol=1e-15)

    @given(st.floats(0.0, 3.0), st.floats(0.0, 3.0), st.floats(0.0, 2.0))
    @settings(max_examples=60)
    def test_semigroup(self, t1, t2, nth):
        cm = build_cm(P)
        two = evolve_cm(evolve_cm(cm, ChannelParams(nth, t1)), ChannelParams(nth, t2))
        one = evolve_cm(cm, ChannelParams(nth, t1 + t2))
        assert np.max(np.abs(two.matrix - one.matrix)) < 1e-12

    @given(st.floats(0.0, 5.0), st.floats(0.0, 5.0), st.floats(0.0, 10.0), st.floats(0.0, 2.0))
    @settings(max_examples=60)
    def test_physical(self, nb, nc, tau, nth):
        out = evolve_cm(build_cm(TripartiteParams(nb, nc)), ChannelParams(nth, tau))
        assert symplectic_eigenvalues(out)[0] >= 0.5 - 1e-9


class TestSeparabilityTime:
    def test_bc_zero(self):
        assert separability_time(P, 0.2, "BC") == 0.0
        assert separability_time(TripartiteParams(3, 0.1), 0.0, "CB") == 0.0

    def test_vacuum_zero(self):
        assert separability_time(TripartiteParams(0, 0), 0.2, "AB") == 0.0

    @pytest.mark.parametrize("pair", ["AB", "AC", "BA"])
    def test_root(self, pair):
        p = TripartiteParams(1.0, 1.0)
        ts = separability_time(p, 0.2, pair)
        assert 0 < ts < 20
        assert abs(lambda_tilde_at(p, 0.2, pair, ts) - 0.5) < 1e-8

    @pytest.mark.parametrize("nb, nc", [(1.0, 4.0), (1.0, 1.0), (1.0, 0.2), (3.0, 0.5)])
    def test_bracketing(self, nb, nc):
        p = TripartiteParams(nb, nc)
        cm = build_cm(p)
        for pair in ("AB", "AC"):
            ts = separability_time(p, 0.2, pair)
            for tau, want in [(0.5 * ts, True), (ts - 1e-3, True), (ts + 1e-3, False), (2 * ts, False)]:
                s = partial_trace(evolve_cm(cm, ChannelParams(0.2, tau)), tuple(pair))
                assert is_entangled(s) is want

    def test_pure_loss_stays_entangled(self):
        assert separability_time(P, 0.0, "AB") == math.inf
        assert lambda_tilde_at(P, 0.0, "AB", 15.0) < 0.5

    def test_more_noise_separates_sooner(self):
        times = [separability_time(P, nth, "AB") for nth in (0.05, 0.2, 1.0)]
        assert times[0] > times[1] > times[2]


class TestResidualContinuity:
    PARAMS = [(1.0, 0.5), (1.0, 3.0), (2.0, 2.0)]

    @pytest.mark.parametrize("nb, nc", PARAMS)
    def test_sqrt_onset(self, nb, nc):
        # EoF enters through sqrt(J~) and J~ grows linearly in tau, so the
        # residuals leave zero like sqrt(tau), not tau
        p = TripartiteParams(nb, nc)
        for tau in np.geomspace(1e-10, 1e-2, 9):
            rep = full_report(p, ChannelParams(0.2, tau))
            worst = max(max(map(abs, rep.delta.values())), max(map(abs, rep.delta_kw.values())))
            assert worst <= 5.0 * math.sqrt(tau)

    @pytest.mark.parametrize("nb, nc", PARAMS)
    def test_linear_bound_on_sweep_grid(self, nb, nc):
        p = TripartiteParams(nb, nc)
        taus = np.linspace(0.02, 0.2, 10)
        for tau in taus:
            rep = full_report(p, ChannelParams(0.2, tau))
            for pair in ORDERED_PAIRS:
                assert abs(rep.delta[pair]) <= 20.0 * tau
                assert abs(rep.delta_kw[pair]) <= 20.0 * tau
