"""Sampled SU(2)-valued paths and paths of loops: Maurer-Cartan forms, the
exponentiated double-integral cocycle, the boundary 1-form of the conjugation
lift, and their defining identities by second-order quadrature.

Grids are uniform on [0, 2*pi] with N + 1 samples including both ends.
Derivatives use central differences with one-sided second-order stencils at
the boundaries; integrals use the trapezoid rule.  Both are O(h^2), which the
convergence suites verify by refinement.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .liealg import InputError, LieAlgebraPresentation
from .paths import LOOP, TWO_PI, PolyPath, pointwise_bracket

_SIGMA = np.array([
    [[0.0, 1.0], [1.0, 0.0]],
    [[0.0, -1.0j], [1.0j, 0.0]],
    [[1.0, 0.0], [0.0, -1.0]],
], dtype=complex)

# generators X_i = -(i/2) sigma_i satisfy [X_i, X_j] = eps_ijk X_k
GENERATORS = -0.5j * _SIGMA

DEFAULT_PAIRING_SCALE = -2.0  # <A, B> = -2 Re tr(AB) makes the X_i orthonormal


def embed(v: np.ndarray) -> np.ndarray:
    """Coordinates (..., 3) -> traceless skew-Hermitian matrices (..., 2, 2)."""
    return np.einsum("...k,kij->...ij", np.asarray(v, dtype=float), GENERATORS)


def exp_su2(v: np.ndarray) -> np.ndarray:
    """Closed-form exponential of embed(v): (v . sigma)^2 = |v|^2 gives
    exp = cos(|v|/2) I - i sin(|v|/2) (unit v . sigma)."""
    v = np.asarray(v, dtype=float)
    alpha = np.linalg.norm(v, axis=-1)
    half = 0.5 * alpha
    coef = np.where(alpha > 1e-12, np.sin(half) / np.where(alpha > 0, alpha, 1.0), 0.5)
    out = np.zeros(v.shape[:-1] + (2, 2), dtype=complex)
    out[..., 0, 0] = np.cos(half)
    out[..., 1, 1] = np.cos(half)
    out += -1.0j * coef[..., None, None] * np.einsum("...k,kij->...ij", v, _SIGMA)
    return out


def dagger(m: np.ndarray) -> np.ndarray:
    return np.conjugate(np.swapaxes(m, -1, -2))


def unitarize(m: np.ndarray) -> np.ndarray:
    """Snap near-SU(2) matrices back onto the group: keep the (normalized)
    first column, rebuild the second from it."""
    a = m[..., 0, 0]
    b = m[..., 1, 0]
    norm = np.sqrt(np.abs(a) ** 2 + np.abs(b) ** 2)
    a, b = a / norm, b / norm
    out = np.empty_like(m)
    out[..., 0, 0] = a
    out[..., 1, 0] = b
    out[..., 0, 1] = -np.conjugate(b)
    out[..., 1, 1] = np.conjugate(a)
    return out


def unitary_drift(m: np.ndarray) -> float:
    """max of |U+ U - I| and |det U - 1| over all samples."""
    gram = np.einsum("...ij,...ik->...jk", np.conjugate(m), m)
    gram[..., 0, 0] -= 1.0
    gram[..., 1, 1] -= 1.0
    det = m[..., 0, 0] * m[..., 1, 1] - m[..., 0, 1] * m[..., 1, 0]
    return float(max(np.abs(gram).max(), np.abs(det - 1.0).max()))


def skew_project(m: np.ndarray) -> np.ndarray:
    """Project onto traceless skew-Hermitian matrices."""
    a = 0.5 * (m - dagger(m))
    trace = (a[..., 0, 0] + a[..., 1, 1]).copy()
    a[..., 0, 0] -= 0.5 * trace
    a[..., 1, 1] -= 0.5 * trace
    return a


def pair_fields(a: np.ndarray, b: np.ndarray,
                scale: float = DEFAULT_PAIRING_SCALE) -> np.ndarray:
    """Pointwise invariant pairing scale * Re tr(a b)."""
    return scale * np.real(np.einsum("...ij,...ji->...", a, b))


def validate_pairing_scale(g: LieAlgebraPresentation,
                           scale: float = DEFAULT_PAIRING_SCALE,
                           tol: float = 1e-12) -> None:
    """The matrix pairing must reproduce the algebra form on embedded basis
    vectors; the scale is configuration, not a hardcoded constant."""
    basis = embed(np.eye(3))
    got = np.array([[pair_fields(basis[i], basis[j], scale) for j in range(3)]
                    for i in range(3)])
    if np.abs(got - g.form).max() > tol:
        raise InputError(
            f"pairing scale {scale} does not match the form of {g.name}"
        )


def _diff(samples: np.ndarray, axis: int, h: float) -> np.ndarray:
    """Second-order derivative along an axis: central interior, one-sided ends."""
    s = np.moveaxis(samples, axis, 0)
    out = np.empty_like(s)
    out[1:-1] = (s[2:] - s[:-2]) / (2.0 * h)
    out[0] = (-3.0 * s[0] + 4.0 * s[1] - s[2]) / (2.0 * h)
    out[-1] = (3.0 * s[-1] - 4.0 * s[-2] + s[-3]) / (2.0 * h)
    return np.moveaxis(out, 0, axis)


def _trapz(values: np.ndarray, h: float, axis: int = -1) -> np.ndarray:
    v = np.moveaxis(values, axis, -1)
    return h * (v[..., 1:-1].sum(axis=-1) + 0.5 * (v[..., 0] + v[..., -1]))


# ---------------------------------------------------------------------------
# sampled carriers
# ---------------------------------------------------------------------------

@dataclass(eq=False)
class SampledGroupPath:
    """Matrices at theta_j = 2*pi*j/N, based at the identity."""

    samples: np.ndarray  # (N + 1, 2, 2) complex

    def __post_init__(self):
        s = np.asarray(self.samples, dtype=complex)
        if s.ndim != 3 or s.shape[1:] != (2, 2) or s.shape[0] < 5:
            raise InputError("group path needs at least 5 samples of 2x2 matrices")
        if np.abs(s[0] - np.eye(2)).max() != 0.0:
            raise InputError("group path must start exactly at the identity")
        if unitary_drift(s) > 1e-10:
            raise InputError("group path samples drift off the unitary group")
        object.__setattr__(self, "samples", s)

    @property
    def n_theta(self) -> int:
        return self.samples.shape[0] - 1


@dataclass(eq=False)
class SampledPathOfLoops:
    """Grid f[i, j] = f(t_i, theta_j), the identity along t = 0 and theta = 0."""

    grid: np.ndarray  # (Nt + 1, Ntheta + 1, 2, 2) complex

    def __post_init__(self):
        f = np.asarray(self.grid, dtype=complex)
        if f.ndim != 4 or f.shape[2:] != (2, 2) or min(f.shape[:2]) < 5:
            raise InputError("loop field needs at least a 5x5 grid of 2x2 matrices")
        if np.abs(f[0] - np.eye(2)).max() != 0.0:
            raise InputError("loop field must be the identity at t = 0")
        if np.abs(f[:, 0] - np.eye(2)).max() != 0.0:
            raise InputError("loop field must be the identity at theta = 0")
        if unitary_drift(f) > 1e-10:
            raise InputError("loop field samples drift off the unitary group")
        object.__setattr__(self, "grid", f)

    @property
    def n_t(self) -> int:
        return self.grid.shape[0] - 1

    @property
    def n_theta(self) -> int:
        return self.grid.shape[1] - 1


def product_field(a: SampledPathOfLoops, b: SampledPathOfLoops) -> SampledPathOfLoops:
    if a.grid.shape != b.grid.shape:
        raise InputError("grid mismatch in pointwise product")
    return SampledPathOfLoops(unitarize(a.grid @ b.grid))


def conjugate_field(p: SampledGroupPath, f: SampledPathOfLoops) -> SampledPathOfLoops:
    """p f p^-1 pointwise in theta, constant in t; p must share the theta grid."""
    if p.n_theta != f.n_theta:
        raise InputError("grid mismatch between conjugator and field")
    q = p.samples[None, :, :, :]
    grid = unitarize(q @ f.grid @ dagger(q))
    # the boundaries are the identity up to roundoff; snap them exactly
    grid[0] = np.eye(2)
    grid[:, 0] = np.eye(2)
    return SampledPathOfLoops(grid)


# ---------------------------------------------------------------------------
# Maurer-Cartan data and the two defining integrals
# ---------------------------------------------------------------------------

def maurer_cartan_t(f: SampledPathOfLoops) -> np.ndarray:
    """f^-1 df/dt on the grid, projected to the traceless skew-Hermitian
    subspace (second-order stencils)."""
    if f.n_t < 4:
        raise InputError("need at least 5 samples along t")
    h = TWO_PI / f.n_t
    df = _diff(f.grid, axis=0, h=h)
    return skew_project(dagger(f.grid) @ df)


def maurer_cartan_theta_right(f: np.ndarray, h: float) -> np.ndarray:
    """(d f / d theta) f^-1 along the last grid axis."""
    df = _diff(f, axis=-3, h=h)
    return skew_project(df @ dagger(f))


def kappa(f: SampledPathOfLoops, g: SampledPathOfLoops, k: float,
          pairing_scale: float = DEFAULT_PAIRING_SCALE) -> complex:
    """exp(2ik * double integral of <f^-1 df/dt, (dg/dtheta) g^-1>)."""
    if f.grid.shape != g.grid.shape:
        raise InputError("grid mismatch in cocycle evaluation")
    ht = TWO_PI / f.n_t
    htheta = TWO_PI / f.n_theta
    a = maurer_cartan_t(f)
    c = maurer_cartan_theta_right(g.grid, htheta)
    integrand = pair_fields(a, c, pairing_scale)
    total = _trapz(_trapz(integrand, htheta, axis=1), ht, axis=0)
    return complex(np.exp(2.0j * k * total))


def kappa_cocycle_residual(f: SampledPathOfLoops, g: SampledPathOfLoops,
                           h: SampledPathOfLoops, k: float,
                           pairing_scale: float = DEFAULT_PAIRING_SCALE) -> float:
    """|kappa(f,g) kappa(fg,h) - kappa(g,h) kappa(f,gh)|."""
    fg = product_field(f, g)
    gh = product_field(g, h)
    lhs = kappa(f, g, k, pairing_scale) * kappa(fg, h, k, pairing_scale)
    rhs = kappa(g, h, k, pairing_scale) * kappa(f, gh, k, pairing_scale)
    return abs(lhs - rhs)


def beta_p(p: SampledGroupPath, xi: np.ndarray,
           pairing_scale: float = DEFAULT_PAIRING_SCALE) -> float | np.ndarray:
    """-2 * integral over theta of <xi(theta), p^-1 p'(theta)>.

    xi may carry leading batch axes (e.g. one loop per t sample).
    """
    xi = np.asarray(xi, dtype=complex)
    if xi.shape[-3] != p.n_theta + 1:
        raise InputError("grid mismatch between 1-form argument and base path")
    h = TWO_PI / p.n_theta
    dp = _diff(p.samples, axis=0, h=h)
    a = skew_project(dagger(p.samples) @ dp)
    integrand = pair_fields(xi, a, pairing_scale)
    value = -2.0 * _trapz(integrand, h, axis=-1)
    return float(value) if np.ndim(value) == 0 else value


def sample_loop_matrices(xi: PolyPath, n_theta: int) -> np.ndarray:
    """Evaluate a polynomial loop on the grid and embed it into matrices."""
    if xi.kind != LOOP:
        raise InputError("expected a loop")
    u = np.linspace(0.0, 1.0, n_theta + 1)
    return embed(xi.eval_grid(u))


def omega_quadrature(xi: np.ndarray, eta: np.ndarray, k: float, h: float,
                     pairing_scale: float = DEFAULT_PAIRING_SCALE) -> float:
    """2k * integral of <xi, d eta / d theta> by trapezoid + stencils."""
    deta = _diff(eta, axis=-3, h=h)
    return float(2.0 * k * _trapz(pair_fields(xi, deta, pairing_scale), h, axis=-1))


def ad_omega_identity_residual(p: SampledGroupPath, xi: PolyPath, eta: PolyPath,
                               k: float,
                               pairing_scale: float = DEFAULT_PAIRING_SCALE) -> float:
    """Quadrature defect of the conjugation-invariance identity of the loop
    cocycle: omega(Ad(p) xi, Ad(p) eta) - omega(xi, eta) = k * beta_p([xi, eta]).

    The boundary 1-form convention: for a left-invariant 1-form the exterior
    derivative pairs as d beta (xi, eta) = -beta([xi, eta]), which fixes the
    sign of the right-hand side; the refinement suite confirms the orientation
    by convergence to zero.
    """
    n = p.n_theta
    h = TWO_PI / n
    xi_m = sample_loop_matrices(xi, n)
    eta_m = sample_loop_matrices(eta, n)
    q = p.samples
    ad_xi = q @ xi_m @ dagger(q)
    ad_eta = q @ eta_m @ dagger(q)
    lhs = omega_quadrature(ad_xi, ad_eta, k, h, pairing_scale) \
        - omega_quadrature(xi_m, eta_m, k, h, pairing_scale)
    bracket_m = sample_loop_matrices(pointwise_bracket(xi, eta), n)
    rhs = k * beta_p(p, bracket_m, pairing_scale)
    return abs(lhs - rhs)


def kappa_conjugation_identity_residual(
    p: SampledGroupPath,
    f1: SampledPathOfLoops,
    f2: SampledPathOfLoops,
    k: float,
    pairing_scale: float = DEFAULT_PAIRING_SCALE,
) -> float:
    """Defect of the conjugation rule for the exponentiated cocycle:

    kappa(p f1 p^-1, p f2 p^-1)
        = kappa(f1, f2) * exp(ik * integral over t of
              beta_p(mc(f1 f2)) - beta_p(mc(f1)) - beta_p(mc(f2)))

    where mc is the t-direction Maurer-Cartan form.
    """
    if f1.grid.shape != f2.grid.shape:
        raise InputError("grid mismatch between the two loop fields")
    ht = TWO_PI / f1.n_t
    f12 = product_field(f1, f2)
    lhs = kappa(conjugate_field(p, f1), conjugate_field(p, f2), k, pairing_scale)
    correction = (
        beta_p(p, maurer_cartan_t(f12), pairing_scale)
        - beta_p(p, maurer_cartan_t(f1), pairing_scale)
        - beta_p(p, maurer_cartan_t(f2), pairing_scale)
    )
    rhs = kappa(f1, f2, k, pairing_scale) * np.exp(1.0j * k * _trapz(correction, ht))
    return abs(lhs - complex(rhs))


# ---------------------------------------------------------------------------
# compact smooth fixtures (coefficients, samplable at any resolution)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GroupPathCoeffs:
    """w_k(u) = sum_m coeffs[k, m] u^(m+1); path exp(w(u) . X)."""

    coeffs: np.ndarray  # (3, modes)

    def sample(self, n_theta: int) -> SampledGroupPath:
        u = np.linspace(0.0, 1.0, n_theta + 1)
        modes = self.coeffs.shape[1]
        powers = u[:, None] ** (np.arange(modes)[None, :] + 1)
        w = powers @ np.asarray(self.coeffs, dtype=float).T
        samples = exp_su2(w)
        samples[0] = np.eye(2)
        return SampledGroupPath(samples)


def _theta_loop_basis(theta: np.ndarray, modes: int) -> np.ndarray:
    """Smooth functions vanishing at both ends of [0, 2*pi], alternating
    between even and odd symmetry about theta = pi so that generic fields
    have no accidental parity (an all-even basis would make the
    double-integral cocycle vanish identically)."""
    cols = []
    for j in range(modes):
        n = j // 2 + 1
        if j % 2 == 0:
            cols.append(np.sin(n * theta / 2.0) ** 2)
        else:
            cols.append(np.sin(n * theta) * np.sin(theta / 2.0) ** 2)
    return np.stack(cols, axis=1)


@dataclass(frozen=True)
class LoopFieldCoeffs:
    """v_k(t, theta) = sum_{m,n} coeffs[k, m, n] (t/2pi)^(m+1) B_n(theta)
    with the loop basis B of ``_theta_loop_basis``.

    Every t-slice is a smooth loop based at the identity and the field is
    pinned at t = 0.
    """

    coeffs: np.ndarray  # (3, t_modes, theta_modes)

    def sample(self, n_t: int, n_theta: int) -> SampledPathOfLoops:
        c = np.asarray(self.coeffs, dtype=float)
        _, mt, mn = c.shape
        s = np.linspace(0.0, 1.0, n_t + 1)
        theta = np.linspace(0.0, TWO_PI, n_theta + 1)
        t_basis = s[:, None] ** (np.arange(mt)[None, :] + 1)  # (Nt+1, mt)
        th_basis = _theta_loop_basis(theta, mn)
        v = np.einsum("kmn,im,jn->ijk", c, t_basis, th_basis)
        grid = exp_su2(v)
        grid[0] = np.eye(2)
        grid[:, 0] = np.eye(2)
        return SampledPathOfLoops(grid)


def random_group_path_coeffs(rng: np.random.Generator, modes: int = 3,
                             amplitude: float = 1.0) -> GroupPathCoeffs:
    return GroupPathCoeffs(amplitude * rng.uniform(-1.0, 1.0, size=(3, modes)))


def random_loop_field_coeffs(rng: np.random.Generator, t_modes: int = 2,
                             theta_modes: int = 2,
                             amplitude: float = 1.0) -> LoopFieldCoeffs:
    return LoopFieldCoeffs(
        amplitude * rng.uniform(-1.0, 1.0, size=(3, t_modes, theta_modes))
    )
