"""Two-term strongly-homotopy Lie algebras and their morphisms.

The graded Jacobi checker below evaluates the generalized identity

    sum_{i+j=n+1} sum_sigma chi(sigma) (-1)^(i(j-1))
        l_j(l_i(x_sigma(1), ..., x_sigma(i)), x_sigma(i+1), ..., x_sigma(n)) = 0

verbatim, with sigma running over (i, n-i)-unshuffles, and specializes it to
the two-term situation purely by degree bookkeeping: l_1 on degree 0 is zero
(there is no degree -1), l_2 on two degree-1 arguments is zero (no degree 2),
l_3 with any degree-1 argument is zero, and l_4 is identically zero.  No
hand-derived specialization of the identity is transcribed anywhere.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any, Callable, Sequence

import numpy as np

from .liealg import InputError, LieAlgebraPresentation
from .paths import (
    BASED,
    LOOP,
    CentralVector,
    PolyPath,
    random_path,
    zero_central,
    zero_path,
)

Graded = tuple[int, Any]


# ---------------------------------------------------------------------------
# element spaces
# ---------------------------------------------------------------------------

class CoordSpace:
    """R^n with the euclidean norm."""

    def __init__(self, dim: int):
        self.dim = dim

    def zero(self):
        return np.zeros(self.dim)

    def norm(self, v) -> float:
        return float(np.linalg.norm(v))

    def random(self, rng: np.random.Generator):
        return rng.uniform(-1.0, 1.0, self.dim)

    def basis(self):
        return list(np.eye(self.dim))


class RealLine:
    def zero(self):
        return 0.0

    def norm(self, v) -> float:
        return abs(float(v))

    def random(self, rng: np.random.Generator):
        return float(rng.uniform(-1.0, 1.0))


class PathSpace:
    def __init__(self, algebra: LieAlgebraPresentation, kind: str = BASED, degree: int = 4):
        self.algebra = algebra
        self.kind = kind
        self.degree = degree

    def zero(self):
        return zero_path(self.algebra, self.kind)

    def norm(self, v: PolyPath) -> float:
        return v.norm()

    def random(self, rng: np.random.Generator):
        return random_path(self.algebra, rng, self.degree, self.kind)


class CentralSpace:
    def __init__(self, algebra: LieAlgebraPresentation, degree: int = 4):
        self.algebra = algebra
        self.degree = degree

    def zero(self):
        return zero_central(self.algebra)

    def norm(self, v: CentralVector) -> float:
        return v.norm()

    def random(self, rng: np.random.Generator):
        return CentralVector(
            random_path(self.algebra, rng, self.degree, LOOP),
            float(rng.uniform(-1.0, 1.0)),
        )


def relative(residual_norm: float, input_norms: Sequence[float]) -> float:
    """Residual scaled by 1 + prod(1 + |x_i|), stable under degree growth."""
    denom = 1.0
    for nv in input_norms:
        denom *= 1.0 + nv
    return residual_norm / (1.0 + denom)


# ---------------------------------------------------------------------------
# the structure itself
# ---------------------------------------------------------------------------

@dataclass(eq=False)
class TwoTermLInfinity:
    """Chain complex space1 -> space0 with a graded bracket and Jacobiator.

    All maps act on raw elements; degree dispatch happens in the checker.
    ``l3 = None`` means the structure is strict.
    """

    name: str
    space0: Any
    space1: Any
    d: Callable[[Any], Any]
    l2_00: Callable[[Any, Any], Any]
    l2_01: Callable[[Any, Any], Any]
    l3: Callable[[Any, Any, Any], Any] | None = None
    level: float = 0.0

    def space(self, degree: int):
        if degree == 0:
            return self.space0
        if degree == 1:
            return self.space1
        raise InputError(f"no element space in degree {degree}")

    @property
    def strict(self) -> bool:
        return self.l3 is None

    def l3_or_zero(self, x, y, z):
        if self.l3 is None:
            return self.space1.zero()
        return self.l3(x, y, z)

    # graded dispatch; None encodes a term that vanishes by degree reasons
    def apply_l1(self, a: Graded) -> Graded | None:
        deg, v = a
        if deg == 1:
            return (0, self.d(v))
        return None

    def apply_l2(self, a: Graded, b: Graded) -> Graded | None:
        (da, va), (db, vb) = a, b
        if da == 0 and db == 0:
            return (0, self.l2_00(va, vb))
        if da == 0 and db == 1:
            return (1, self.l2_01(va, vb))
        if da == 1 and db == 0:
            # graded antisymmetry: swapping a degree-1 past a degree-0 flips sign
            return (1, -1.0 * self.l2_01(vb, va))
        return None

    def apply_l3(self, a: Graded, b: Graded, c: Graded) -> Graded | None:
        if self.l3 is None:
            return None
        if a[0] == 0 and b[0] == 0 and c[0] == 0:
            return (1, self.l3(a[1], b[1], c[1]))
        return None

    def apply_l(self, arity: int, args: Sequence[Graded]) -> Graded | None:
        if arity == 1:
            return self.apply_l1(args[0])
        if arity == 2:
            return self.apply_l2(args[0], args[1])
        if arity == 3:
            return self.apply_l3(args[0], args[1], args[2])
        return None  # arity >= 4 vanishes in a two-term structure


def generalized_jacobi_residual(L: TwoTermLInfinity, inputs: Sequence[Graded]) -> float:
    """Relative norm of the generalized Jacobi expression on graded inputs.

    Accepts 1 <= n <= 4 inputs tagged with degrees in {0, 1}.  Signatures for
    which every term necessarily lands outside degrees {0, 1} return 0.
    """
    from .signs import chi, unshuffles

    n = len(inputs)
    if not 1 <= n <= 4:
        raise InputError("generalized Jacobi checker accepts 1..4 inputs")
    degrees = [a[0] for a in inputs]
    if any(d not in (0, 1) for d in degrees):
        raise InputError("degree tags must be 0 or 1")
    target = sum(degrees) + n - 3
    if target not in (0, 1):
        return 0.0
    space = L.space(target)
    acc = space.zero()
    for i in range(1, n + 1):
        j = n + 1 - i
        if i > 3 or j > 3:
            continue  # quaternary and higher operations vanish here
        for sigma in unshuffles(i, n):
            first = L.apply_l(i, [inputs[s] for s in sigma[:i]])
            if first is None:
                continue
            term = L.apply_l(j, [first] + [inputs[s] for s in sigma[i:]])
            if term is None:
                continue
            deg, val = term
            assert deg == target
            coeff = float(chi(degrees, sigma)) * (-1.0) ** (i * (j - 1))
            acc = acc + coeff * val
    norms = [L.space(d).norm(v) for d, v in inputs]
    return relative(space.norm(acc), norms)


def all_signatures(max_n: int = 4) -> list[tuple[int, ...]]:
    """Every degree signature of length 1..max_n over {0, 1}."""
    out: list[tuple[int, ...]] = []
    for n in range(1, max_n + 1):
        for mask in range(2**n):
            out.append(tuple((mask >> a) & 1 for a in range(n)))
    return out


def jacobi_sweep(
    L: TwoTermLInfinity,
    rng: np.random.Generator,
    trials: int,
    max_n: int = 4,
) -> tuple[float, list[Graded]]:
    """Max relative Jacobi residual over random trials of every signature."""
    worst = 0.0
    worst_inputs: list[Graded] = []
    signatures = all_signatures(max_n)
    for _ in range(trials):
        for sig in signatures:
            inputs = [(d, L.space(d).random(rng)) for d in sig]
            r = generalized_jacobi_residual(L, inputs)
            if r > worst:
                worst, worst_inputs = r, inputs
    return worst, worst_inputs


# ---------------------------------------------------------------------------
# homomorphisms
# ---------------------------------------------------------------------------

@dataclass(eq=False)
class LInftyHom:
    """A chain map (phi0, phi1) plus a skew bilinear phi2 measuring the
    failure of phi0 to preserve brackets."""

    src: TwoTermLInfinity
    dst: TwoTermLInfinity
    phi0: Callable[[Any], Any]
    phi1: Callable[[Any], Any]
    phi2: Callable[[Any, Any], Any]
    name: str = ""


def identity_hom(L: TwoTermLInfinity) -> LInftyHom:
    return LInftyHom(L, L, lambda x: x, lambda h: h,
                     lambda x, y: L.space1.zero(), name=f"id[{L.name}]")


def compose(outer: LInftyHom, inner: LInftyHom) -> LInftyHom:
    """Composite with (outer o inner)_2 = outer2(inner0 x, inner0 y) + outer1(inner2(x, y))."""
    if inner.dst is not outer.src:
        raise InputError("homomorphisms are not composable")

    def phi2(x, y):
        return outer.phi2(inner.phi0(x), inner.phi0(y)) + outer.phi1(inner.phi2(x, y))

    return LInftyHom(
        inner.src,
        outer.dst,
        lambda x: outer.phi0(inner.phi0(x)),
        lambda h: outer.phi1(inner.phi1(h)),
        phi2,
        name=f"{outer.name}*{inner.name}",
    )


def zeroed_phi2(hom: LInftyHom) -> LInftyHom:
    """Mutation control: same chain map with the bracket corrector removed."""
    return LInftyHom(hom.src, hom.dst, hom.phi0, hom.phi1,
                     lambda x, y: hom.dst.space1.zero(), name=f"{hom.name}[phi2=0]")


def hom_residuals_once(hom: LInftyHom, x, y, z, h) -> dict[str, float]:
    """Relative residuals of the chain-map square and the three coherence laws
    on one sample (x, y, z in degree 0, h in degree 1)."""
    src, dst = hom.src, hom.dst
    n0, n1 = dst.space0.norm, dst.space1.norm
    nx, ny, nz = (src.space0.norm(v) for v in (x, y, z))
    nh = src.space1.norm(h)

    chain = dst.d(hom.phi1(h)) - hom.phi0(src.d(h))
    r_chain = relative(n0(chain), [nh])

    one = dst.d(hom.phi2(x, y)) - hom.phi0(src.l2_00(x, y)) \
        + dst.l2_00(hom.phi0(x), hom.phi0(y))
    r_one = relative(n0(one), [nx, ny])

    two = hom.phi2(x, src.d(h)) - hom.phi1(src.l2_01(x, h)) \
        + dst.l2_01(hom.phi0(x), hom.phi1(h))
    r_two = relative(n1(two), [nx, nh])

    lhs = dst.l3_or_zero(hom.phi0(x), hom.phi0(y), hom.phi0(z)) \
        - hom.phi1(src.l3_or_zero(x, y, z))
    rhs = hom.phi2(x, src.l2_00(y, z)) \
        + hom.phi2(y, src.l2_00(z, x)) \
        + hom.phi2(z, src.l2_00(x, y)) \
        + dst.l2_01(hom.phi0(x), hom.phi2(y, z)) \
        + dst.l2_01(hom.phi0(y), hom.phi2(z, x)) \
        + dst.l2_01(hom.phi0(z), hom.phi2(x, y))
    r_three = relative(n1(lhs - rhs), [nx, ny, nz])

    return {"chain": r_chain, "homo1": r_one, "homo2": r_two, "homo3": r_three}


@dataclass
class HomReport:
    chain: float = 0.0
    homo1: float = 0.0
    homo2: float = 0.0
    homo3: float = 0.0
    worst_inputs: dict = field(default_factory=dict)

    @property
    def max_residual(self) -> float:
        return max(self.chain, self.homo1, self.homo2, self.homo3)


def hom_residuals(hom: LInftyHom, rng: np.random.Generator, trials: int) -> HomReport:
    report = HomReport()
    for _ in range(trials):
        x = hom.src.space0.random(rng)
        y = hom.src.space0.random(rng)
        z = hom.src.space0.random(rng)
        h = hom.src.space1.random(rng)
        res = hom_residuals_once(hom, x, y, z, h)
        for key, value in res.items():
            if value > getattr(report, key):
                setattr(report, key, value)
                report.worst_inputs[key] = (x, y, z, h)
    return report


# ---------------------------------------------------------------------------
# 2-homomorphisms (chain homotopies between homomorphisms)
# ---------------------------------------------------------------------------

@dataclass(eq=False)
class ChainHomotopy:
    """Degree-raising map tau witnessing from_hom => to_hom.

    Orientation: d o tau = to0 - from0 and tau o d = to1 - from1, paired with
    the coherence law

        from2(x,y) - to2(x,y)
            = l2(from0 x, tau y) + l2(tau x, to0 y) - tau(l2(x, y)).

    The two conventions must be taken together: flipping only the homotopy
    direction breaks the coherence law for the concrete retraction homotopy
    certified by this package.
    """

    from_hom: LInftyHom
    to_hom: LInftyHom
    tau: Callable[[Any], Any]
    name: str = ""

    def __post_init__(self):
        if self.from_hom.src is not self.to_hom.src or self.from_hom.dst is not self.to_hom.dst:
            raise InputError("2-homomorphism requires parallel homomorphisms")


def two_hom_residuals_once(homotopy: ChainHomotopy, x, y, h) -> dict[str, float]:
    phi, psi = homotopy.from_hom, homotopy.to_hom
    src, dst = phi.src, phi.dst
    tau = homotopy.tau
    nx, ny = src.space0.norm(x), src.space0.norm(y)
    nh = src.space1.norm(h)

    h0 = dst.d(tau(x)) - (psi.phi0(x) - phi.phi0(x))
    r0 = relative(dst.space0.norm(h0), [nx])

    h1 = tau(src.d(h)) - (psi.phi1(h) - phi.phi1(h))
    r1 = relative(dst.space1.norm(h1), [nh])

    lhs = phi.phi2(x, y) - psi.phi2(x, y)
    rhs = dst.l2_01(phi.phi0(x), tau(y)) \
        - dst.l2_01(psi.phi0(y), tau(x)) \
        - tau(src.l2_00(x, y))
    r2 = relative(dst.space1.norm(lhs - rhs), [nx, ny])

    return {"homotopy0": r0, "homotopy1": r1, "coherence": r2}


@dataclass
class TwoHomReport:
    homotopy0: float = 0.0
    homotopy1: float = 0.0
    coherence: float = 0.0
    worst_inputs: dict = field(default_factory=dict)

    @property
    def max_residual(self) -> float:
        return max(self.homotopy0, self.homotopy1, self.coherence)


def two_hom_residual(homotopy: ChainHomotopy, rng: np.random.Generator,
                     trials: int) -> TwoHomReport:
    report = TwoHomReport()
    src = homotopy.from_hom.src
    for _ in range(trials):
        x = src.space0.random(rng)
        y = src.space0.random(rng)
        h = src.space1.random(rng)
        res = two_hom_residuals_once(homotopy, x, y, h)
        for key, value in res.items():
            if value > getattr(report, key):
                setattr(report, key, value)
                report.worst_inputs[key] = (x, y, h)
    return report


# ---------------------------------------------------------------------------
# the categorical (2-vector-space) view of a strict structure
# ---------------------------------------------------------------------------

def categorical_view_check(L: TwoTermLInfinity, rng: np.random.Generator,
                           trials: int = 20) -> float:
    """Rebuild the category structure from the chain complex and measure how
    far composition, units, and the bracket functor are from their laws.

    Morphisms are pairs (source object, arrow part); the bracket of an
    identity morphism on z with a morphism f is
    (l2(z, source f), l2(z, arrow f)).  Exact for strict structures.
    """
    s0, s1 = L.space0, L.space1

    def src(m):
        return m[0]

    def tgt(m):
        return m[0] + L.d(m[1])

    def ident(x):
        return (x, s1.zero())

    def comp(g, f):
        # defined when src(g) = tgt(f); composite keeps f's source
        return (f[0], f[1] + g[1])

    def bracket_with_identity(z, m):
        return (L.l2_00(z, m[0]), L.l2_01(z, m[1]))

    def mor_norm(m):
        return math.hypot(s0.norm(m[0]), s1.norm(m[1]))

    def mor_sub(a, b):
        return (a[0] - b[0], a[1] - b[1])

    worst = 0.0
    for _ in range(trials):
        x = s0.random(rng)
        z = s0.random(rng)
        fv, gv, hv = (s1.random(rng) for _ in range(3))
        f = (x, fv)
        g = (tgt(f), gv)
        k = (tgt(g), hv)
        norms = [s0.norm(x), s0.norm(z), s1.norm(fv), s1.norm(gv), s1.norm(hv)]

        checks = [
            mor_sub(comp(f, ident(src(f))), f),
            mor_sub(comp(ident(tgt(f)), f), f),
            mor_sub(comp(k, comp(g, f)), comp(comp(k, g), f)),
            mor_sub(
                bracket_with_identity(z, comp(g, f)),
                comp(bracket_with_identity(z, g), bracket_with_identity(z, f)),
            ),
        ]
        for m in checks:
            worst = max(worst, relative(mor_norm(m), norms))

        # source/target are bracket homomorphisms
        bm = bracket_with_identity(z, f)
        worst = max(worst, relative(s0.norm(src(bm) - L.l2_00(z, src(f))), norms))
        worst = max(worst, relative(s0.norm(tgt(bm) - L.l2_00(z, tgt(f))), norms))
    return worst
