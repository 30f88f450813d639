"""Central extension of the loop algebra: the 2-cocycle, the twisted bracket,
and the lifted action of based paths, all in the exact polynomial model."""

from __future__ import annotations

import numpy as np

from .liealg import InputError
from .linfty import relative
from .paths import (
    BASED,
    LOOP,
    CentralVector,
    PolyPath,
    derivative,
    integral_pairing,
    pointwise_bracket,
)


def omega(f: PolyPath, g: PolyPath, k: float) -> float:
    """Level-k loop cocycle 2k * integral of B(f, g'); antisymmetric because
    the boundary term B(f, g) vanishes at both ends of a loop."""
    if f.kind != LOOP or g.kind != LOOP:
        raise InputError("the loop cocycle is defined on loops")
    if f.algebra != g.algebra:
        raise InputError("loop cocycle across different algebras")
    return 2.0 * k * integral_pairing(f, derivative(g))


def omega_cocycle_residual(f: PolyPath, g: PolyPath, h: PolyPath, k: float) -> float:
    """Relative size of omega([f,g],h) + omega([g,h],f) + omega([h,f],g)."""
    total = (
        omega(pointwise_bracket(f, g), h, k)
        + omega(pointwise_bracket(g, h), f, k)
        + omega(pointwise_bracket(h, f), g, k)
    )
    return relative(abs(total), [f.norm(), g.norm(), h.norm()])


def extended_bracket(a: CentralVector, b: CentralVector, k: float) -> CentralVector:
    """Bracket on loops + center: ([f, g], omega_k(f, g)); central elements
    bracket to zero."""
    if a.loop.algebra != b.loop.algebra:
        raise InputError("extended bracket across different algebras")
    return CentralVector(pointwise_bracket(a.loop, b.loop), omega(a.loop, b.loop, k))


def extended_jacobi_residual(a: CentralVector, b: CentralVector,
                             c: CentralVector, k: float) -> float:
    """Jacobi defect of the twisted bracket; equals the cocycle defect on the
    central coordinate and the pointwise Jacobi defect on the loop part."""
    total = (
        extended_bracket(extended_bracket(a, b, k), c, k)
        + extended_bracket(extended_bracket(b, c, k), a, k)
        + extended_bracket(extended_bracket(c, a, k), b, k)
    )
    return relative(total.norm(), [a.norm(), b.norm(), c.norm()])


def dalpha(p: PolyPath, v: CentralVector, k: float) -> CentralVector:
    """Differential of the conjugation action of based paths on the central
    extension: ([p, l], 2k * integral of B(p, l'))."""
    if p.kind not in (BASED, LOOP):
        raise InputError("the action is defined for based paths")
    return CentralVector(
        pointwise_bracket(p, v.loop),
        2.0 * k * integral_pairing(p, derivative(v.loop)),
    )


def dalpha_action_residual(p1: PolyPath, p2: PolyPath, v: CentralVector,
                           k: float) -> float:
    """How far dalpha is from a Lie algebra action:
    dalpha([p1, p2]) v - (dalpha(p1) dalpha(p2) - dalpha(p2) dalpha(p1)) v."""
    lhs = dalpha(pointwise_bracket(p1, p2), v, k)
    rhs = dalpha(p1, dalpha(p2, v, k), k) - dalpha(p2, dalpha(p1, v, k), k)
    return relative((lhs - rhs).norm(), [p1.norm(), p2.norm(), v.norm()])


def dalpha_derivation_residual(p: PolyPath, a: CentralVector, b: CentralVector,
                               k: float) -> float:
    """How far dalpha(p) is from a derivation of the twisted bracket."""
    lhs = dalpha(p, extended_bracket(a, b, k), k)
    rhs = extended_bracket(dalpha(p, a, k), b, k) \
        + extended_bracket(a, dalpha(p, b, k), k)
    return relative((lhs - rhs).norm(), [p.norm(), a.norm(), b.norm()])


def dalpha_equivariance_residual(p: PolyPath, v: CentralVector, k: float) -> float:
    """Projecting to the loop then acting by the pointwise bracket agrees with
    acting first and then projecting (infinitesimal compatibility of the
    action with the projection)."""
    lhs = dalpha(p, v, k).loop
    rhs = pointwise_bracket(p, v.loop)
    return relative((lhs - rhs).norm(), [p.norm(), v.norm()])


def dalpha_matches_central_bracket_residual(l: PolyPath, v: CentralVector,
                                            k: float) -> float:
    """For a loop acting, the action coincides with the twisted bracket
    against the zero-center lift (infinitesimal form of letting the extension
    act on itself through the projection)."""
    if l.kind != LOOP:
        raise InputError("expected a loop")
    lhs = dalpha(l, v, k)
    rhs = extended_bracket(CentralVector(l, 0.0), v, k)
    return relative((lhs - rhs).norm(), [l.norm(), v.norm()])
