import numpy as np
import pytest

from lie2 import su2grid as sg
from lie2.liealg import InputError
from lie2.paths import LOOP, TWO_PI, PolyPath, derivative, integral_pairing, random_path


def test_generator_commutators(g):
    x = sg.GENERATORS
    for i, j, k in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
        assert np.allclose(x[i] @ x[j] - x[j] @ x[i], x[k])


def test_pairing_scale_matches_form(g):
    sg.validate_pairing_scale(g)
    with pytest.raises(InputError):
        sg.validate_pairing_scale(g, scale=-1.0)


def test_embed_respects_bracket(g, rng):
    a, b = rng.uniform(-1, 1, (2, 3))
    lhs = sg.embed(g.bracket(a, b))
    rhs = sg.embed(a) @ sg.embed(b) - sg.embed(b) @ sg.embed(a)
    assert np.abs(lhs - rhs).max() <= 1e-14


def test_exp_su2_is_group_valued(rng):
    v = rng.uniform(-2, 2, (40, 3))
    u = sg.exp_su2(v)
    assert sg.unitary_drift(u) <= 1e-13
    assert np.abs(u @ sg.exp_su2(-v) - np.eye(2)).max() <= 1e-13


def test_exp_su2_half_turn():
    # exp(pi * X3) = -i sigma3: purely imaginary diagonal
    u = sg.exp_su2(np.array([0.0, 0.0, np.pi]))
    assert np.allclose(u, np.diag([-1.0j, 1.0j]), atol=1e-15)


def test_unitarize_recovers_from_drift(rng):
    u = sg.exp_su2(rng.uniform(-1, 1, (10, 3)))
    drifted = u + 1e-8 * (rng.uniform(-1, 1, (10, 2, 2))
                          + 1j * rng.uniform(-1, 1, (10, 2, 2)))
    fixed = sg.unitarize(drifted)
    assert sg.unitary_drift(fixed) <= 1e-12
    assert np.abs(fixed - u).max() <= 1e-7


def test_unitary_drift_after_products(rng):
    spec1 = sg.random_loop_field_coeffs(rng, amplitude=0.8)
    spec2 = sg.random_loop_field_coeffs(rng, amplitude=0.8)
    f, h = spec1.sample(48, 48), spec2.sample(48, 48)
    prod = sg.product_field(f, h)
    assert sg.unitary_drift(prod.grid) <= 1e-9


def test_group_path_validation(rng):
    samples = sg.exp_su2(rng.uniform(-1, 1, (33, 3)))
    with pytest.raises(InputError):
        sg.SampledGroupPath(samples)  # does not start at the identity


def test_maurer_cartan_constant_grid_is_zero():
    grid = np.broadcast_to(np.eye(2, dtype=complex), (17, 17, 2, 2)).copy()
    f = sg.SampledPathOfLoops(grid)
    assert np.abs(sg.maurer_cartan_t(f)).max() == 0.0


def test_maurer_cartan_linear_in_t_oracle(rng):
    # v(t, theta) = (t / 2pi) w(theta): single direction along t, so the
    # t-form is exactly embed(w(theta)) / 2pi; stencils converge at order 2
    spec = sg.LoopFieldCoeffs(0.4 * rng.uniform(-1, 1, (3, 1, 2)))
    errs = []
    for n_t in (16, 32, 64):
        f = spec.sample(n_t, 24)
        theta = np.linspace(0.0, TWO_PI, 25)
        w = np.einsum("kmn,jn->jk", spec.coeffs, sg._theta_loop_basis(theta, 2))
        exact = sg.embed(w) / TWO_PI
        errs.append(np.abs(sg.maurer_cartan_t(f) - exact[None]).max())
    assert errs[0] / errs[1] == pytest.approx(4.0, rel=0.3)
    assert errs[1] / errs[2] == pytest.approx(4.0, rel=0.3)


def test_maurer_cartan_skew_projection_residual(rng):
    spec = sg.random_loop_field_coeffs(rng, amplitude=0.5)
    f = spec.sample(64, 16)
    h = TWO_PI / 64
    raw = sg.dagger(f.grid) @ sg._diff(f.grid, axis=0, h=h)
    assert np.abs(raw - sg.skew_project(raw)).max() <= 5e-3  # O(h^2) before projection


def test_beta_p_trivial_cases(g, rng):
    n = 64
    ident = sg.SampledGroupPath(
        np.broadcast_to(np.eye(2, dtype=complex), (n + 1, 2, 2)).copy())
    xi = sg.sample_loop_matrices(random_path(g, rng, 4, LOOP), n)
    assert sg.beta_p(ident, xi) == pytest.approx(0.0, abs=1e-14)
    zero = np.zeros((n + 1, 2, 2), dtype=complex)
    p = sg.random_group_path_coeffs(rng, amplitude=0.5).sample(n)
    assert sg.beta_p(p, zero) == 0.0


def test_beta_p_closed_form_oracle(g, rng):
    # p = exp(s(theta) X0) gives p^-1 p' = s'(theta) X0 exactly
    n = 512
    s_poly = 0.2 * rng.uniform(-1, 1, 5)
    s_poly[0] = 0.0
    x0 = rng.uniform(-1, 1, 3)
    x0 /= np.linalg.norm(x0)
    u = np.linspace(0.0, 1.0, n + 1)
    s_val = (u[:, None] ** np.arange(5)[None, :]) @ s_poly
    p = sg.SampledGroupPath(sg.exp_su2(s_val[:, None] * x0[None, :]))
    xi = 0.3 * random_path(g, rng, 4, LOOP)
    numeric = sg.beta_p(p, sg.sample_loop_matrices(xi, n))
    s_prime_u = s_poly[1:] * np.arange(1, 5)
    oracle = -2.0 * integral_pairing(
        xi, PolyPath(g, np.outer(x0, s_prime_u) / TWO_PI))
    assert numeric == pytest.approx(oracle, abs=1e-6)


def test_kappa_trivial_inputs(rng):
    n = 32
    ident = sg.SampledPathOfLoops(
        np.broadcast_to(np.eye(2, dtype=complex), (n + 1, n + 1, 2, 2)).copy())
    f = sg.random_loop_field_coeffs(rng, amplitude=0.8).sample(n, n)
    assert sg.kappa(f, ident, 1.0) == pytest.approx(1.0)
    assert sg.kappa(ident, f, 1.0) == pytest.approx(1.0)
    assert sg.kappa(f, f, 0.0) == pytest.approx(1.0)


def test_kappa_matches_refined_grid(rng):
    specs = [sg.random_loop_field_coeffs(rng, amplitude=0.5) for _ in range(2)]
    coarse = sg.kappa(specs[0].sample(192, 192), specs[1].sample(192, 192), 1.0)
    fine = sg.kappa(specs[0].sample(768, 768), specs[1].sample(768, 768), 1.0)
    assert abs(coarse - fine) <= 1e-4


def test_kappa_grid_mismatch(rng):
    f = sg.random_loop_field_coeffs(rng).sample(16, 16)
    h = sg.random_loop_field_coeffs(rng).sample(16, 32)
    with pytest.raises(InputError):
        sg.kappa(f, h, 1.0)


def test_kappa_cocycle_second_order(rng):
    specs = [sg.random_loop_field_coeffs(rng, amplitude=0.8) for _ in range(3)]
    res = [sg.kappa_cocycle_residual(*(s.sample(n, n) for s in specs), 1.0)
           for n in (64, 128, 256)]
    assert 3.0 <= res[0] / res[1] <= 5.0
    assert 3.0 <= res[1] / res[2] <= 5.0


def test_kappa_cocycle_trivial_entry(rng):
    n = 32
    ident = sg.SampledPathOfLoops(
        np.broadcast_to(np.eye(2, dtype=complex), (n + 1, n + 1, 2, 2)).copy())
    f = sg.random_loop_field_coeffs(rng, amplitude=0.8).sample(n, n)
    h = sg.random_loop_field_coeffs(rng, amplitude=0.8).sample(n, n)
    assert sg.kappa_cocycle_residual(f, ident, h, 1.0) <= 1e-12


def test_ad_omega_trivial_cases(g, rng):
    n = 64
    ident = sg.SampledGroupPath(
        np.broadcast_to(np.eye(2, dtype=complex), (n + 1, 2, 2)).copy())
    xi = random_path(g, rng, 4, LOOP)
    eta = random_path(g, rng, 4, LOOP)
    assert sg.ad_omega_identity_residual(ident, xi, eta, 1.0) <= 1e-14
    p = sg.random_group_path_coeffs(rng, amplitude=0.5).sample(n)
    assert sg.ad_omega_identity_residual(p, xi, xi, 1.0) <= 1e-14


def test_ad_omega_second_order(g, rng):
    spec = sg.random_group_path_coeffs(rng, amplitude=0.5)
    xi = 0.6 * random_path(g, rng, 4, LOOP)
    eta = 0.6 * random_path(g, rng, 4, LOOP)
    res = [sg.ad_omega_identity_residual(spec.sample(n), xi, eta, 1.0)
           for n in (128, 256, 512)]
    assert 3.0 <= res[0] / res[1] <= 5.0
    assert 3.0 <= res[1] / res[2] <= 5.0
    assert res[2] <= 1e-5


def test_kappa_conjugation_trivial_conjugator(rng):
    n = 32
    ident = sg.SampledGroupPath(
        np.broadcast_to(np.eye(2, dtype=complex), (n + 1, 2, 2)).copy())
    f1 = sg.random_loop_field_coeffs(rng, amplitude=0.8).sample(n, n)
    f2 = sg.random_loop_field_coeffs(rng, amplitude=0.8).sample(n, n)
    assert sg.kappa_conjugation_identity_residual(ident, f1, f2, 1.0) <= 1e-12


def test_kappa_conjugation_trivial_field(rng):
    n = 32
    ident_field = sg.SampledPathOfLoops(
        np.broadcast_to(np.eye(2, dtype=complex), (n + 1, n + 1, 2, 2)).copy())
    p = sg.random_group_path_coeffs(rng, amplitude=0.6).sample(n)
    f1 = sg.random_loop_field_coeffs(rng, amplitude=0.8).sample(n, n)
    assert sg.kappa_conjugation_identity_residual(p, f1, ident_field, 1.0) <= 1e-12


def test_kappa_conjugation_second_order(rng):
    pspec = sg.random_group_path_coeffs(rng, amplitude=0.6)
    fspecs = [sg.random_loop_field_coeffs(rng, amplitude=0.8) for _ in range(2)]
    res = []
    for n in (64, 128, 256):
        p = pspec.sample(n)
        f1, f2 = (s.sample(n, n) for s in fspecs)
        res.append(sg.kappa_conjugation_identity_residual(p, f1, f2, 1.0))
    assert 3.0 <= res[0] / res[1] <= 5.0
    assert 3.0 <= res[1] / res[2] <= 5.0


def test_embedding_consistency_small_amplitude(g, rng):
    # group loops exp(eps * eta): the grid cocycle on (eps xi, mc of exp(eps
    # eta)) reproduces eps^2 times the exact polynomial value, with the
    # deviation controlled by eps^2 * (C eps + quadrature)
    xi = random_path(g, rng, 4, LOOP)
    eta = random_path(g, rng, 4, LOOP)
    exact = 2.0 * integral_pairing(xi, derivative(eta))
    n = 1024
    h = TWO_PI / n
    u = np.linspace(0.0, 1.0, n + 1)
    for eps in (0.1, 0.05):
        gamma = sg.exp_su2(eps * eta.eval_grid(u))
        c_form = sg.maurer_cartan_theta_right(gamma, h)
        grid_value = float(2.0 * sg._trapz(
            sg.pair_fields(eps * sg.sample_loop_matrices(xi, n), c_form), h, axis=-1))
        assert abs(grid_value - eps**2 * exact) <= 0.2 * eps**3 + 1e-8
