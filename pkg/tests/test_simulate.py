import math
from dataclasses import replace

import numpy as np
import pytest

from twistcar import dynamics as dyn
from twistcar import kinematics as kin
from twistcar.params import InputSignal, nondimensionalize
from twistcar.simulate import simulate, simulate_reduced


def total_energy_residual(traj, p):
    """Integrated defect of d(T+V)/dt = tau*phidot - 2R over the whole run.

    The injected power is co-integrated by the solver, so this measures the
    model's energy bookkeeping, not output-grid quadrature.  The running
    profile stays within interpolation accuracy of the same bound.
    """
    rep = dyn.energy_report(traj, p)
    total = rep.kinetic + rep.potential
    running = total - total[0] - traj.energy_in
    assert np.max(np.abs(running)) < 100 * (np.abs(running[-1]) + 1e-9)
    return abs(running[-1])


class TestConstrainedSimulation:
    def test_zero_amplitude_stays_at_rest(self, baseline_params):
        u = InputSignal(phi0=0.0, eps=0.0, omega=15.0)
        traj = simulate(baseline_params, u, t_end=1.0, dt_out=0.01)
        np.testing.assert_allclose(traj.qdot, 0.0, atol=1e-12)
        np.testing.assert_allclose(traj.q[:, :3], 0.0, atol=1e-12)
        np.testing.assert_allclose(traj.tau, 0.0, atol=1e-12)

    def test_constraint_drift_small(self, baseline_params, baseline_input):
        traj = simulate(baseline_params, baseline_input, t_end=10 * baseline_input.period)
        for i in range(0, len(traj.t), 50):
            w = kin.constraint_matrix(traj.q[i], baseline_params)
            assert np.max(np.abs(w @ traj.qdot[i])) <= 1e-8
        # v_perp is the first constraint row contracted with qdot
        assert np.max(np.abs(traj.v_perp)) <= 1e-8

    def test_deterministic(self, baseline_params, baseline_input):
        a = simulate(baseline_params, baseline_input, t_end=2.0)
        b = simulate(baseline_params, baseline_input, t_end=2.0)
        np.testing.assert_array_equal(a.q, b.q)
        np.testing.assert_array_equal(a.tau, b.tau)

    def test_bounded_vs_unbounded_envelope(self, baseline_params, baseline_input):
        period = baseline_input.period
        spp = 200
        traj = simulate(baseline_params, baseline_input, t_end=16 * period,
                        rtol=1e-8, atol=1e-10)
        xdot = traj.qdot[:, 0]
        per_cycle = [np.max(np.abs(xdot[i * spp:(i + 1) * spp]))
                     for i in range(16)]
        late = per_cycle[12:]
        assert (max(late) - min(late)) / max(late) < 0.02

        free = replace(baseline_params, c=0.0)
        traj0 = simulate(free, baseline_input, t_end=16 * period,
                         rtol=1e-8, atol=1e-10)
        xdot0 = traj0.qdot[:, 0]
        per_cycle0 = [np.max(np.abs(xdot0[i * spp:(i + 1) * spp]))
                      for i in range(16)]
        assert all(b > a for a, b in zip(per_cycle0, per_cycle0[1:]))


class TestDualFormulation:
    def test_dae_matches_reduced(self, baseline_params, baseline_input):
        nd, u_nd = nondimensionalize(baseline_params, baseline_input)
        n_periods = 10
        t_end = n_periods * baseline_input.period
        traj = simulate(baseline_params, baseline_input, t_end=t_end)
        red = simulate_reduced(nd, u_nd, t_end=n_periods * u_nd.period)
        v_dae_nd = traj.v_par * nd.t_c / baseline_params.l1
        assert len(v_dae_nd) == len(red.v)
        assert np.max(np.abs(v_dae_nd - red.v)) < 1e-6
        # orientation angle agrees too
        assert np.max(np.abs(traj.q[:, 2] - red.theta)) < 1e-6


class TestEnergyBalance:
    RTOL, ATOL = 1e-12, 1e-10

    def test_constrained(self, baseline_params, baseline_input):
        traj = simulate(baseline_params, baseline_input, t_end=2 * baseline_input.period,
                        rtol=self.RTOL, atol=self.ATOL, track_energy=True)
        assert total_energy_residual(traj, baseline_params) <= 10 * self.ATOL

    def test_conservative_limit(self, baseline_params, baseline_input):
        free = replace(baseline_params, c=0.0)
        traj = simulate(free, baseline_input, t_end=2 * baseline_input.period,
                        rtol=self.RTOL, atol=self.ATOL, track_energy=True)
        rep = dyn.energy_report(traj, free)
        np.testing.assert_allclose(rep.dissipation_power, 0.0, atol=1e-14)
        assert total_energy_residual(traj, free) <= 10 * self.ATOL

    def test_skid(self, baseline_params, baseline_input):
        p = replace(baseline_params, c_perp=2.0)
        traj = simulate(p, baseline_input, t_end=2 * baseline_input.period,
                        model="skid", rtol=self.RTOL, atol=self.ATOL,
                        track_energy=True)
        assert total_energy_residual(traj, p) <= 10 * self.ATOL

    def test_slope(self, baseline_params, baseline_input):
        p = replace(baseline_params, slope=math.radians(1.0))
        traj = simulate(p, baseline_input, t_end=2 * baseline_input.period,
                        rtol=self.RTOL, atol=self.ATOL, track_energy=True)
        rep = dyn.energy_report(traj, p)
        assert np.max(np.abs(rep.potential)) > 0  # gravity active
        assert total_energy_residual(traj, p) <= 10 * self.ATOL

    def test_pure_decay_with_zero_input(self, baseline_params):
        u = InputSignal(phi0=0.0, eps=0.0, omega=15.0)
        qdot0 = kin.reduction_matrix(0.0, baseline_params) @ np.array([0.4, 0.0])
        traj = simulate(baseline_params, u, t_end=3.0, dt_out=0.01,
                        qdot0=qdot0[:3])
        rep = dyn.energy_report(traj, baseline_params)
        assert np.all(np.diff(rep.kinetic) <= 1e-12)
        assert rep.kinetic[-1] < 1e-3 * rep.kinetic[0]


class TestSkidModel:
    def test_requires_c_perp(self, baseline_params, baseline_input):
        with pytest.raises(Exception, match="c_perp"):
            simulate(baseline_params, baseline_input, t_end=1.0, model="skid")

    def test_large_lateral_damping_approaches_constrained(self, baseline_params,
                                                          baseline_input):
        t_end = 2 * baseline_input.period
        ref = simulate(baseline_params, baseline_input, t_end=t_end)
        gaps = []
        for c_perp in (20.0, 100.0, 500.0):
            p = replace(baseline_params, c_perp=c_perp)
            traj = simulate(p, baseline_input, t_end=t_end, model="skid",
                            rtol=1e-8, atol=1e-10)
            gaps.append(np.max(np.abs(traj.v_par - ref.v_par)))
        assert gaps[0] > gaps[1] > gaps[2]

    def test_fitted_coefficients_keep_skid_an_order_below_forward(self, nominal_robot_params):
        p = replace(nominal_robot_params, c=0.095, c_perp=4.0)
        u = InputSignal(phi0=0.0, eps=math.radians(23.75), omega=12.36)
        traj_skid = simulate(p, u, t_end=14.0, model="skid",
                             rtol=1e-8, atol=1e-10)
        half = len(traj_skid.t) // 2
        ratio = (np.max(np.abs(traj_skid.v_perp[half:]))
                 / np.max(np.abs(traj_skid.v_par[half:])))
        assert ratio < 0.2


class TestTrajectoryRecord:
    def test_metadata(self, baseline_params, baseline_input):
        traj = simulate(baseline_params, baseline_input, t_end=1.0)
        assert traj.model == "constrained"
        assert traj.lam is not None and traj.lam.shape == (len(traj.t), 2)
        assert len(traj.params_hash) == 16
        assert traj.stats.n_accepted > 0
        dt = np.diff(traj.t)
        np.testing.assert_allclose(dt, dt[0], rtol=1e-9)

    def test_skid_has_no_constraint_forces(self, baseline_params, baseline_input):
        p = replace(baseline_params, c_perp=2.0)
        traj = simulate(p, baseline_input, t_end=0.5, model="skid")
        assert traj.lam is None
