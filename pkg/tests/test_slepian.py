import math

import numpy as np
import pytest

from diskslepian import operators as ops
from diskslepian import slepian as sl
from diskslepian.orthopoly import TBasisIndex, t_basis, t_norm_sq
from diskslepian.quadrature import disk_rule, radial_rule
from diskslepian.slepian import RadialMode, SlepianParams, TruncationError


class TestChi0:
    def test_paper_display_values(self):
        assert sl.chi0(0, 0, 0.0) == pytest.approx(0.75)
        assert sl.chi0(1, 0, 0.0) == pytest.approx(15 / 4)
        assert sl.chi0(0, 1, 0.0) == pytest.approx(35 / 4)
        assert sl.chi0(0, 0, 1.0) == pytest.approx(7 / 4)


class TestSpectralMatrix:
    def test_zero_bandwidth_is_diagonal(self):
        p = SlepianParams(nu=0.7, c=0.0, N=2)
        T = sl.build_spectral_matrix(p, 6)
        assert np.all(T.offdiag == 0)
        assert T.diag == pytest.approx([sl.chi0(2, k, 0.7) for k in range(6)])

    def test_hand_computed_entries(self):
        p = SlepianParams(nu=0.0, c=1.0, N=0)
        T = sl.build_spectral_matrix(p, 2)
        assert T.diag[0] == pytest.approx(0.75 + 0.5, abs=1e-15)
        assert T.offdiag[0] == pytest.approx(-0.5 * math.sqrt(1 / 3), rel=1e-14)

    @pytest.mark.parametrize("nu,c,N", [(0.0, 1.0, 0), (1.0, 3.0, 2), (2.5, 0.5, 1)])
    def test_offdiagonal_symmetry_both_ways(self, nu, c, N):
        # e_k via a_k sqrt(h_{k+1}/h_k) must equal c_{k+1} sqrt(h_k/h_{k+1})
        from diskslepian.orthopoly import x2_recurrence_coeffs
        p = SlepianParams(nu=nu, c=c, N=N)
        T = sl.build_spectral_matrix(p, 10)
        for k in range(9):
            h_k = t_norm_sq(TBasisIndex(N, k, nu))
            h_k1 = t_norm_sq(TBasisIndex(N, k + 1, nu))
            _, _, c_next = x2_recurrence_coeffs(TBasisIndex(N, k + 1, nu))
            other = c * c * c_next * math.sqrt(h_k / h_k1)
            assert abs(T.offdiag[k] - other) <= 1e-12 * max(1.0, abs(other))


class TestSolveModes:
    def test_zero_bandwidth_modes(self):
        p = SlepianParams(nu=0.5, c=0.0, N=2)
        modes = sl.solve_modes(p, 4)
        for m in modes:
            assert m.chi == pytest.approx(sl.chi0(2, m.n, 0.5), rel=1e-14)
            assert m.mu == 0.0
            e = np.zeros(m.truncation)
            e[m.n] = 1.0
            assert np.max(np.abs(m.coeffs - e)) <= 1e-12

    def test_chi_strictly_increasing_and_coeffs_unit(self):
        p = SlepianParams(nu=1.0, c=3.0, N=1)
        modes = sl.solve_modes(p, 6)
        chis = [m.chi for m in modes]
        assert np.all(np.diff(chis) > 0)
        for m in modes:
            assert np.linalg.norm(m.coeffs) == pytest.approx(1.0, abs=1e-12)
            tail = np.abs(m.coeffs[-1])
            assert tail <= p.tolerance * np.max(np.abs(m.coeffs))

    def test_cross_method_single_case(self):
        p = SlepianParams(nu=0.0, c=1.0, N=0)
        modes = sl.solve_modes(p, 3)
        oracle = ops.nystrom_hankel_eigs(0.0, 1.0, 0, 200, 3)
        for m, q in zip(modes, oracle):
            assert math.sqrt(1.0) * m.mu == pytest.approx(q.value, rel=1e-8)

    def test_lambda_limit_small_bandwidth(self):
        p = SlepianParams(nu=0.7, c=1e-3, N=0)
        lam = sl.solve_modes(p, 1)[0].lam
        assert abs(lam - 1.0) <= 1e-4

    def test_lambda_phase_factor(self):
        for N in range(5):
            p = SlepianParams(nu=0.5, c=0.8, N=N)
            m = sl.solve_modes(p, 1)[0]
            expect = 2 * 1.5 * (1j ** (N % 4)) * m.mu
            assert m.lam == expect

    def test_truncation_cap(self):
        with pytest.raises(TruncationError):
            sl.solve_modes(SlepianParams(nu=0.0, c=1e9, N=0), 1)

    def test_weyl_style_perturbation_bound(self):
        # |chi(c) - chi(0)| <= c^2 * (inf-norm bound of the x^2 block)
        from diskslepian.orthopoly import x2_recurrence_coeffs
        for (nu, c, N) in [(0.0, 1.0, 0), (1.0, 2.0, 1), (2.5, 0.5, 3)]:
            p = SlepianParams(nu=nu, c=c, N=N)
            modes = sl.solve_modes(p, 6)
            T = sl.build_spectral_matrix(p, modes[0].truncation)
            T0 = sl.build_spectral_matrix(SlepianParams(nu=nu, c=0.0, N=N),
                                          modes[0].truncation)
            bound = np.max(np.abs(T.diag - T0.diag)) + 2 * np.max(np.abs(T.offdiag))
            for m in modes:
                assert abs(m.chi - sl.chi0(N, m.n, nu)) <= bound + 1e-12

    def test_tail_decay_monotone_above_noise_floor(self):
        # |A_k| decays monotonically over the last quarter of the window once
        # entries below the eigensolver noise floor (~1e-13 relative) are
        # clipped to the floor
        p = SlepianParams(nu=1.0, c=4.0, N=1)
        for m in sl.solve_modes(p, 4):
            a = np.abs(m.coeffs)
            floor = 1e-13 * np.max(a)
            tail = np.maximum(a[3 * len(a) // 4:], floor)
            assert np.all(np.diff(tail) <= 1e-30 + 0 * tail[1:])


class TestEvaluation:
    def test_phi_reproduces_basis_at_zero_bandwidth(self):
        p = SlepianParams(nu=0.5, c=0.0, N=1)
        modes = sl.solve_modes(p, 3)
        xs = np.linspace(0.05, 1.0, 9)
        for m in modes:
            idx = TBasisIndex(1, m.n, 0.5)
            that = t_basis(idx, xs) / math.sqrt(t_norm_sq(idx))
            assert np.max(np.abs(sl.eval_phi(m, p, xs) - that)) <= 1e-12

    def test_phi_normalized(self):
        p = SlepianParams(nu=1.0, c=2.0, N=1)
        rule = radial_rule(200, 1.0)
        for m in sl.solve_modes(p, 3):
            val = rule.integrate(sl.eval_phi(m, p, rule.nodes) ** 2)
            assert val == pytest.approx(1.0, abs=1e-10)

    def test_hankel_eigenrelation(self):
        p = SlepianParams(nu=0.0, c=1.0, N=0)
        rule = radial_rule(240, 0.0)
        modes = sl.solve_modes(p, 3)
        xs = np.linspace(0.05, 0.95, 10)
        for m in modes:
            resid = [ops.apply_finite_hankel(0.0, 1.0, 0,
                                             lambda t: sl.eval_phi(m, p, t), x, rule)
                     - math.sqrt(1.0) * m.mu * sl.eval_phi(m, p, x) for x in xs]
            scale = max(abs(math.sqrt(1.0) * m.mu * sl.eval_phi(m, p, x)) for x in xs)
            assert max(abs(r) for r in resid) <= 1e-7 * scale

    def test_R_and_psi_shapes(self):
        p = SlepianParams(nu=0.0, c=0.0, N=0)
        m = sl.solve_modes(p, 1)[0]
        # T-hat_{0,0} = sqrt(x)/sqrt(1/2): R = sqrt(2)
        assert sl.eval_R(m, p, 0.3) == pytest.approx(math.sqrt(2), rel=1e-13)
        assert sl.eval_R(m, p, 1.0) == pytest.approx(math.sqrt(2), rel=1e-13)
        pN = SlepianParams(nu=0.5, c=1.0, N=3)
        mN = sl.solve_modes(pN, 1)[0]
        rs = np.array([1e-3, 2e-3])
        ratio = sl.eval_R(mN, pN, rs[1]) / sl.eval_R(mN, pN, rs[0])
        assert ratio == pytest.approx(2.0 ** 3, rel=1e-4)  # R ~ r^N
        assert sl.eval_R(mN, pN, 0.0) == 0.0
        assert np.isfinite(sl.eval_R(mN, pN, 1.0))

    def test_psi_angular_structure(self):
        p = SlepianParams(nu=1.0, c=1.0, N=0)
        m = sl.solve_modes(p, 1)[0]
        v = sl.eval_psi(m, p, 0.5, 1.234)
        assert v.imag == 0.0
        p2 = SlepianParams(nu=1.0, c=1.0, N=2)
        m2 = sl.solve_modes(p2, 1)[0]
        mags = [abs(sl.eval_psi(m2, p2, 0.5, th)) for th in (0.0, 0.9, 2.2, 5.5)]
        assert np.ptp(mags) <= 1e-14

    def test_radial_orthonormality_matrix(self):
        p = SlepianParams(nu=1.0, c=2.0, N=0)
        modes = sl.solve_modes(p, 11)
        rule = radial_rule(300, 1.0)
        vals = np.array([sl.eval_phi(m, p, rule.nodes) for m in modes])
        gram = (vals * rule.weights) @ vals.T
        assert np.max(np.abs(gram - np.eye(11))) <= 1e-9

    def test_disk_double_orthogonality(self):
        nu, c = 0.5, 1.0
        rule = disk_rule(100, 96, nu)
        fam = []
        for N in (0, 1, 3):
            p = SlepianParams(nu=nu, c=c, N=N)
            fam.extend((m, p) for m in sl.solve_modes(p, 2))
        vals = np.array([sl.eval_psi(m, p, rule.rs, rule.angles) for (m, p) in fam])
        gram = (vals * rule.weights) @ vals.conj().T
        assert np.max(np.abs(gram - np.eye(len(fam)))) <= 1e-8

    def test_iterated_transform_squared_modulus(self):
        # F* F psi = |lambda|^2 psi (the printed unsquared right side is
        # inconsistent with iterating the eigenrelation and is not asserted)
        nu, c = 1.0, 1.0
        p = SlepianParams(nu=nu, c=c, N=1)
        m = sl.solve_modes(p, 1)[0]
        rule = disk_rule(60, 64, nu)
        psi_vals = sl.eval_psi(m, p, rule.rs, rule.angles)
        # F psi on every rule node, chunked matrix-vector products
        src = rule.weights * psi_vals
        f_nodes = np.empty(len(rule.xs), dtype=complex)
        for j0 in range(0, len(rule.xs), 512):
            j1 = min(j0 + 512, len(rule.xs))
            phase = np.exp(1j * c * (np.outer(rule.xs[j0:j1], rule.xs)
                                     + np.outer(rule.ys[j0:j1], rule.ys)))
            f_nodes[j0:j1] = phase @ src
        worst = 0.0
        for y0 in [(0.3, 0.2), (0.5, -0.4), (-0.6, 0.1)]:
            val = np.sum(rule.weights * np.exp(-1j * c * (rule.xs * y0[0] + rule.ys * y0[1]))
                         * f_nodes)
            ref = abs(m.lam) ** 2 * sl.eval_psi(m, p, math.hypot(*y0), math.atan2(y0[1], y0[0]))
            worst = max(worst, abs(val - ref))
        assert worst <= 1e-6

    def test_lambda_magnitude_ordering_merged(self):
        nu, c = 1.0, 2.0
        lams = []
        for N in range(4):
            p = SlepianParams(nu=nu, c=c, N=N)
            lams.extend(abs(m.lam) for m in sl.solve_modes(p, 6))
        merged = sorted(lams, reverse=True)
        assert all(a >= b for a, b in zip(merged, merged[1:]))
        assert merged[-1] >= 0.0


class TestParamsValidation:
    def test_invalid_params(self):
        with pytest.raises(ValueError):
            SlepianParams(nu=-1.0, c=1.0, N=0)
        with pytest.raises(ValueError):
            SlepianParams(nu=0.0, c=-0.1, N=0)
        with pytest.raises(ValueError):
            SlepianParams(nu=0.0, c=1.0, N=-1)
        with pytest.raises(ValueError):
            SlepianParams(nu=0.0, c=1.0, N=0, truncation=1)
        with pytest.raises(ValueError):
            sl.solve_modes(SlepianParams(nu=0.0, c=1.0, N=0), 0)
