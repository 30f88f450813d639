"""Exact polynomial model of based paths and loops on [0, 2*pi].

A path is a coefficient matrix over the rescaled variable u = theta / (2*pi),
coordinate i being sum_d coeffs[i, d] * u**d.  All factors of 2*pi live in the
derivative (1 / 2*pi) and the definite integral (* 2*pi); products and
brackets grow the degree and are never truncated, so every algebraic identity
below holds to floating-point roundoff.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .liealg import InputError, LieAlgebraPresentation

TWO_PI = 2.0 * np.pi

# kind lattice: a loop is in particular based, a based path is a path
BASED = "based"
LOOP = "loop"
FREE = "free"


def _join_kind(a: str, b: str) -> str:
    if a == LOOP and b == LOOP:
        return LOOP
    if a in (BASED, LOOP) and b in (BASED, LOOP):
        return BASED
    return FREE


@dataclass(frozen=True, eq=False)
class PolyPath:
    algebra: LieAlgebraPresentation
    coeffs: np.ndarray  # (dim, degree + 1)
    kind: str = FREE

    def __post_init__(self):
        coeffs = np.atleast_2d(np.asarray(self.coeffs, dtype=float))
        if coeffs.shape[0] != self.algebra.dim:
            raise InputError(
                f"path has {coeffs.shape[0]} coordinates, algebra has {self.algebra.dim}"
            )
        object.__setattr__(self, "coeffs", coeffs)
        if self.kind not in (BASED, LOOP, FREE):
            raise InputError(f"unknown path kind {self.kind!r}")
        if self.kind in (BASED, LOOP) and np.abs(coeffs[:, 0]).max(initial=0.0) > 1e-12:
            raise InputError("based path must vanish at theta = 0")
        if self.kind == LOOP and np.abs(coeffs.sum(axis=1)).max(initial=0.0) > 1e-12:
            raise InputError("loop must vanish at theta = 2*pi")

    @property
    def degree(self) -> int:
        return self.coeffs.shape[1] - 1

    def eval(self, u: float) -> np.ndarray:
        powers = u ** np.arange(self.coeffs.shape[1])
        return self.coeffs @ powers

    def eval_grid(self, u: np.ndarray) -> np.ndarray:
        """Values at many u's at once, shape (len(u), dim)."""
        powers = np.asarray(u)[:, None] ** np.arange(self.coeffs.shape[1])[None, :]
        return powers @ self.coeffs.T

    def endpoint(self) -> np.ndarray:
        return self.coeffs.sum(axis=1)

    def __add__(self, other: "PolyPath") -> "PolyPath":
        if other.algebra != self.algebra:
            raise InputError("path addition across different algebras")
        d = max(self.degree, other.degree)
        c = np.zeros((self.algebra.dim, d + 1))
        c[:, : self.degree + 1] += self.coeffs
        c[:, : other.degree + 1] += other.coeffs
        return PolyPath(self.algebra, c, _join_kind(self.kind, other.kind))

    def __neg__(self) -> "PolyPath":
        return PolyPath(self.algebra, -self.coeffs, self.kind)

    def __sub__(self, other: "PolyPath") -> "PolyPath":
        return self + (-other)

    def __mul__(self, scalar: float) -> "PolyPath":
        return PolyPath(self.algebra, float(scalar) * self.coeffs, self.kind)

    __rmul__ = __mul__

    def times_scalar_poly(self, poly: np.ndarray) -> "PolyPath":
        """Multiply every coordinate by a scalar polynomial in u."""
        poly = np.atleast_1d(np.asarray(poly, dtype=float))
        c = np.array([np.convolve(row, poly) for row in self.coeffs])
        # zero endpoints of self survive multiplication by any polynomial
        return PolyPath(self.algebra, c, self.kind)

    def l2_norm_sq(self) -> float:
        """Integral over u in [0,1] of |p(u)|^2 (coordinate-wise squares)."""
        d = self.degree
        hilbert = 1.0 / (np.arange(d + 1)[:, None] + np.arange(d + 1)[None, :] + 1.0)
        val = float(np.einsum("ia,ab,ib->", self.coeffs, hilbert, self.coeffs))
        return max(val, 0.0)

    def norm(self) -> float:
        return float(np.sqrt(self.l2_norm_sq()))


def zero_path(algebra: LieAlgebraPresentation, kind: str = LOOP) -> PolyPath:
    return PolyPath(algebra, np.zeros((algebra.dim, 1)), kind)


def derivative(p: PolyPath) -> PolyPath:
    """d/d theta: differentiate in u and divide by 2*pi.  No endpoint guarantees."""
    if p.degree == 0:
        return PolyPath(p.algebra, np.zeros((p.algebra.dim, 1)), FREE)
    c = p.coeffs[:, 1:] * np.arange(1, p.degree + 1)[None, :] / TWO_PI
    return PolyPath(p.algebra, c, FREE)


def pointwise_bracket(p: PolyPath, q: PolyPath) -> PolyPath:
    """[p, q](theta) = [p(theta), q(theta)]; degree adds, based/loop preserved."""
    if p.algebra != q.algebra:
        raise InputError("pointwise bracket across different algebras")
    g = p.algebra
    # contract q with the structure tensor first, then convolve coordinates
    t = np.einsum("ijk,jb->ikb", g.structure, q.coeffs)
    out = np.zeros((g.dim, p.degree + q.degree + 1))
    for i in range(g.dim):
        for k in range(g.dim):
            if np.any(t[i, k]):
                out[k] += np.convolve(p.coeffs[i], t[i, k])
    if p.kind in (BASED, LOOP) and q.kind in (BASED, LOOP):
        kind = LOOP if LOOP in (p.kind, q.kind) else BASED
    else:
        kind = FREE
    return PolyPath(g, out, kind)


def integral_pairing(p: PolyPath, q: PolyPath) -> float:
    """Exact integral over [0, 2*pi] of B(p(theta), q(theta))."""
    if p.algebra != q.algebra:
        raise InputError("integral pairing across different algebras")
    dp, dq = p.degree, q.degree
    moments = TWO_PI / (np.arange(dp + 1)[:, None] + np.arange(dq + 1)[None, :] + 1.0)
    return float(np.einsum("ia,ij,jb,ab->", p.coeffs, p.algebra.form, q.coeffs, moments))


def endpoint(p: PolyPath) -> np.ndarray:
    return p.endpoint()


# ---------------------------------------------------------------------------
# scalar polynomials (splitting functions)
# ---------------------------------------------------------------------------

SCALAR_LINE = LieAlgebraPresentation(
    "scalar", 1, np.zeros((1, 1, 1)), np.eye(1)
)


def scalar_path(poly, kind: str = BASED) -> PolyPath:
    """Wrap 1-d u-coefficients as a path in the abelian line."""
    return PolyPath(SCALAR_LINE, np.atleast_2d(np.asarray(poly, dtype=float)), kind)


def validate_splitting(poly: np.ndarray, tol: float = 1e-12) -> np.ndarray:
    """A splitting function interpolates 0 -> 1 across the interval."""
    poly = np.atleast_1d(np.asarray(poly, dtype=float))
    if abs(poly[0]) > tol:
        raise InputError("splitting function must vanish at theta = 0")
    if abs(poly.sum() - 1.0) > tol:
        raise InputError("splitting function must equal 1 at theta = 2*pi")
    return poly


def universal_integral(f) -> float:
    """Exact integral over [0, 2*pi] of f * (f - f^2)' for admissible f.

    f may be 1-d u-coefficients or a scalar PolyPath; its endpoints must be
    f(0) = 0 and f(2*pi) = 1.  The value is -1/6 for every admissible f, but
    it is computed here directly from the monomial rule rather than assumed,
    so universality stays a checkable claim.
    """
    if isinstance(f, PolyPath):
        if f.algebra.dim != 1:
            raise InputError("universal integral expects a scalar path")
        poly = f.coeffs[0]
    else:
        poly = np.atleast_1d(np.asarray(f, dtype=float))
    validate_splitting(poly)
    g = np.zeros(2 * len(poly) - 1)
    g[: len(poly)] += poly
    g -= np.convolve(poly, poly)
    gp = g[1:] * np.arange(1, len(g))  # d/du; the 2*pi's cancel against d theta
    integrand = np.convolve(poly, gp)
    return float((integrand / (np.arange(len(integrand)) + 1.0)).sum())


def random_path(
    algebra: LieAlgebraPresentation,
    rng: np.random.Generator,
    degree: int,
    kind: str = BASED,
) -> PolyPath:
    """Coefficients iid uniform on [-1, 1], projected to the endpoint constraints."""
    c = rng.uniform(-1.0, 1.0, size=(algebra.dim, degree + 1))
    if kind in (BASED, LOOP):
        c[:, 0] = 0.0
    if kind == LOOP:
        c[:, 1] -= c.sum(axis=1)
    return PolyPath(algebra, c, kind)


def random_splitting(rng: np.random.Generator, degree: int) -> np.ndarray:
    """Random admissible splitting polynomial of the given degree."""
    poly = rng.uniform(-1.0, 1.0, size=degree + 1)
    poly[0] = 0.0
    poly[1] += 1.0 - poly.sum()
    return poly


# ---------------------------------------------------------------------------
# central extension carrier
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class CentralVector:
    """A loop together with a central coordinate."""

    loop: PolyPath
    c: float

    def __post_init__(self):
        if self.loop.kind != LOOP:
            raise InputError("central vector requires a loop component")
        object.__setattr__(self, "c", float(self.c))

    def __add__(self, other: "CentralVector") -> "CentralVector":
        return CentralVector(self.loop + other.loop, self.c + other.c)

    def __neg__(self) -> "CentralVector":
        return CentralVector(-self.loop, -self.c)

    def __sub__(self, other: "CentralVector") -> "CentralVector":
        return self + (-other)

    def __mul__(self, scalar: float) -> "CentralVector":
        return CentralVector(self.loop * scalar, self.c * float(scalar))

    __rmul__ = __mul__

    def norm(self) -> float:
        return float(np.hypot(self.loop.norm(), self.c))


def zero_central(algebra: LieAlgebraPresentation) -> CentralVector:
    return CentralVector(zero_path(algebra, LOOP), 0.0)
