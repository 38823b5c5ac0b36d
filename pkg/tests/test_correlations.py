import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gaussbalance.correlations import (
    ORDERED_PAIRS,
    balance_delta,
    balance_delta_kw,
    eof_argument,
    full_report,
    gaussian_discord,
    gaussian_eof,
)
from gaussbalance.noise import ChannelParams
from gaussbalance.states import TripartiteParams, reduce, remaining_mode
from gaussbalance.symplectic import CovMat, entropy_fn, two_mode_invariants

from conftest import THERMAL_ENTROPY

P = TripartiteParams(1.0, 0.5)
VAC2 = CovMat(0.5 * np.eye(4))


def y_closed(p, pair):
    if set(pair) == {"A", "B"}:
        return 0.5 + p.n_b / (1 + p.n_c)
    if set(pair) == {"A", "C"}:
        return 0.5 + p.n_c / (1 + p.n_b)
    return 0.5


class TestEof:
    def test_ab_value(self):
        assert eof_argument(reduce(P, "AB")) == pytest.approx(7 / 6, abs=1e-12)
        assert gaussian_eof(reduce(P, "AB")) == pytest.approx(THERMAL_ENTROPY[2 / 3], abs=1e-10)

    @given(st.floats(0.0, 5.0), st.floats(0.0, 5.0))
    @settings(max_examples=40)
    def test_bc_zero(self, nb, nc):
        assert gaussian_eof(reduce(TripartiteParams(nb, nc), "BC")) == 0.0

    def test_vacuum(self):
        assert gaussian_eof(VAC2) == 0.0

    def test_closed_forms(self, grid200):
        for p in grid200:
            for pair in ("AB", "BA", "AC", "CA"):
                assert abs(eof_argument(reduce(p, pair)) - y_closed(p, pair)) < 1e-10


class TestDiscord:
    def test_ab_value(self):
        want = THERMAL_ENTROPY[1.5] - THERMAL_ENTROPY[0.5]
        assert gaussian_discord(reduce(P, "AB"), "first") == pytest.approx(want, abs=1e-10)

    def test_direction(self):
        s = reduce(P, "AB")
        assert gaussian_discord(s, "second") == pytest.approx(
            gaussian_discord(reduce(P, "BA"), "first"), abs=1e-14)

    def test_vacuum(self):
        assert gaussian_discord(VAC2) == 0.0

    def test_conditional_argument_is_eof_argument(self, grid200):
        # √I_h - 2|I_hk|/(1 + 2√I_k) = y_hj
        for p in grid200:
            for pair in ORDERED_PAIRS:
                h, k = pair
                j = remaining_mode(h, k)
                inv = two_mode_invariants(reduce(p, pair))
                lhs = math.sqrt(inv.i_h) - 2 * abs(inv.i_hk) / (1 + 2 * math.sqrt(inv.i_k))
                assert abs(lhs - y_closed(p, h + j)) < 1e-10

    def test_nonnegative(self, grid200):
        for p in grid200:
            rep = full_report(p)
            assert min(rep.discord.values()) >= -1e-10
            assert min(rep.eof.values()) >= -1e-10

    def test_rejects_unequal_offdiagonal(self):
        sigma = np.diag([2.0, 2.0, 1.5, 1.5])
        sigma[0, 2] = sigma[2, 0] = 0.7
        sigma[1, 3] = sigma[3, 1] = -0.2
        with pytest.raises(ValueError):
            gaussian_discord(CovMat(sigma))

    def test_rejects_bad_direction(self):
        with pytest.raises(ValueError):
            gaussian_discord(VAC2, "left")


class TestPartialTransposeClosedForms:
    @staticmethod
    def ab(na, nb, nc):
        inner = ((na + 0.5) ** 2 + 2 * nb * (na + 1) + (nb + 0.5) ** 2
                 - (na + nb + 1) * math.sqrt(4 * nb * (na + 1) + nc ** 2))
        return math.sqrt(inner / 2)

    @staticmethod
    def bc_printed(na, nb, nc):
        return math.sqrt((nb - nc) ** 2 + nb + nc + 0.5
                         - abs(nb - nc) * math.sqrt((na + 1) ** 2 - 4 * nb * nc))

    def lt(self, p, pair):
        return full_report(p).lambda_tilde_minus[pair]

    def test_ab(self, grid200):
        for p in grid200:
            assert abs(self.lt(p, "AB") - self.ab(p.n_a, p.n_b, p.n_c)) < 1e-10

    def test_ac_is_ab_with_b_c_swapped(self, grid200):
        for p in grid200:
            assert abs(self.lt(p, "AC") - self.ab(p.n_a, p.n_c, p.n_b)) < 1e-10

    def test_ac_printed_swap_does_not_hold(self):
        assert abs(self.lt(P, "AC") - self.ab(P.n_b, P.n_a, P.n_c)) > 0.1

    def test_bc_with_prefactor(self, grid200):
        for p in grid200:
            assert abs(self.lt(p, "BC") - self.bc_printed(p.n_a, p.n_b, p.n_c) / math.sqrt(2)) < 1e-10

    def test_bc_verbatim_is_sqrt2_larger(self):
        ratio = self.bc_printed(P.n_a, P.n_b, P.n_c) / self.lt(P, "BC")
        assert ratio == pytest.approx(math.sqrt(2), rel=1e-12)


class TestBalance:
    def test_conservation_laws(self, grid200):
        for p in grid200:
            rep = full_report(p)
            for pair in ORDERED_PAIRS:
                assert abs(rep.delta[pair]) < 1e-9
                assert abs(rep.delta_kw[pair]) < 1e-9

    def test_vacuum_report_all_zero(self):
        rep = full_report(TripartiteParams(0, 0))
        for name in ("s_single", "s_pair", "discord", "eof", "delta", "delta_kw"):
            assert all(v == 0.0 for v in getattr(rep, name).values()), name

    def test_report_single_and_pair_entropies(self):
        rep = full_report(P)
        assert rep.s_single["A"] == pytest.approx(THERMAL_ENTROPY[1.5], abs=1e-12)
        assert rep.s_single["B"] == pytest.approx(entropy_fn(1.5), abs=1e-15)
        assert rep.s_single["C"] == pytest.approx(THERMAL_ENTROPY[0.5], abs=1e-12)
        assert rep.s_pair["AB"] == pytest.approx(rep.s_single["C"], abs=1e-10)

    def test_residuals_recomputable(self):
        rep = full_report(P, ChannelParams(0.2, 0.7))
        for pair in ORDERED_PAIRS:
            h, k = pair
            j = remaining_mode(h, k)
            ekj = rep.eof["".join(sorted(k + j))]
            want = rep.discord[pair] + rep.s_single[j] - rep.s_single[h] - ekj
            assert rep.delta[pair] == pytest.approx(want, abs=1e-15)
            assert rep.delta[pair] == balance_delta(rep, pair)
            want_kw = rep.discord[pair] + rep.s_pair["".join(sorted(h + k))] - rep.s_single[h] - ekj
            assert rep.delta_kw[pair] == pytest.approx(want_kw, abs=1e-15)
            assert rep.delta_kw[pair] == balance_delta_kw(rep, pair)

    def test_noisy_delta_ab_negative(self):
        rep = full_report(TripartiteParams(1.0, 0.5), ChannelParams(0.2, 0.5))
        assert rep.delta["AB"] < 0

    def test_noisy_kw_nonnegative(self):
        for delta in np.linspace(-3, 1, 9):
            for tau in np.linspace(0, 3, 13):
                rep = full_report(TripartiteParams(1.0, 1.0 - delta), ChannelParams(0.2, tau))
                assert min(rep.delta_kw.values()) >= -1e-9

    @pytest.mark.parametrize("tau", [0.1, 0.5, 1.0, 2.0])
    def test_symmetric_inequalities(self, tau):
        rep = full_report(TripartiteParams(1.0, 1.0), ChannelParams(0.2, tau))
        D, S, E = rep.discord, rep.s_single, rep.eof
        slack = 1e-9
        assert D["AB"] + S["C"] <= S["A"] + slack
        assert D["BA"] + S["C"] >= S["B"] + E["AC"] - slack
        assert D["AC"] + S["B"] <= S["A"] + slack
        assert D["CA"] + S["B"] >= S["C"] + E["AB"] - slack
        assert D["BC"] + S["A"] >= S["B"] + E["AC"] - slack
        assert D["CB"] + S["A"] >= S["C"] + E["AB"] - slack
