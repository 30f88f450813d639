"""Finite-dimensional real Lie algebras given by structure constants.

A presentation is the tensor c with [e_i, e_j] = sum_k c[i, j, k] e_k together
with an invariant symmetric bilinear form B.  The canonical 3-form is
nu(x, y, z) = B(x, [y, z]); invariance of B makes nu totally antisymmetric and
closed for the alternating-sum differential implemented below.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np


class InputError(ValueError):
    """Bad user-supplied data (dimensions, files, configuration)."""


@dataclass(frozen=True, eq=False)
class LieAlgebraPresentation:
    name: str
    dim: int
    structure: np.ndarray  # (n, n, n), c[i, j, k]
    form: np.ndarray  # (n, n), symmetric invariant

    def __eq__(self, other):
        # structural: two loads of the same table interoperate (names aside)
        if self is other:
            return True
        if not isinstance(other, LieAlgebraPresentation):
            return NotImplemented
        return (self.dim == other.dim
                and np.array_equal(self.structure, other.structure)
                and np.array_equal(self.form, other.form))

    def __hash__(self):
        return object.__hash__(self)

    def __post_init__(self):
        structure = np.asarray(self.structure, dtype=float)
        form = np.asarray(self.form, dtype=float)
        if structure.shape != (self.dim,) * 3:
            raise InputError(f"structure tensor must be {(self.dim,) * 3}")
        if form.shape != (self.dim, self.dim):
            raise InputError(f"form must be {(self.dim, self.dim)}")
        object.__setattr__(self, "structure", structure)
        object.__setattr__(self, "form", form)

    def validate(self, tol: float = 0.0) -> None:
        """Check antisymmetry, Jacobi, and invariance of the form.

        tol=0 demands exact equality, which the bundled integer /
        half-integer tables satisfy.
        """
        c, b = self.structure, self.form
        anti = np.abs(c + c.transpose(1, 0, 2)).max()
        if anti > tol:
            raise InputError(f"{self.name}: bracket not antisymmetric (max {anti})")
        jacobi = np.abs(
            np.einsum("ijm,mlk->ijlk", c, c)
            + np.einsum("jlm,mik->ijlk", c, c)
            + np.einsum("lim,mjk->ijlk", c, c)
        ).max()
        if jacobi > tol:
            raise InputError(f"{self.name}: Jacobi identity fails (max {jacobi})")
        if np.abs(b - b.T).max() > tol:
            raise InputError(f"{self.name}: form not symmetric")
        # B([x,y],z) + B(y,[x,z]) = 0 on basis triples <=> nu totally antisymmetric
        t = np.einsum("ijm,mk->ijk", c, b)
        if np.abs(t + t.transpose(0, 2, 1)).max() > tol:
            raise InputError(f"{self.name}: form not invariant")

    def bracket(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        x = np.asarray(x, dtype=float)
        y = np.asarray(y, dtype=float)
        if x.shape != (self.dim,) or y.shape != (self.dim,):
            raise InputError(f"bracket arguments must have length {self.dim}")
        return np.einsum("ijk,i,j->k", self.structure, x, y)

    def pair(self, x: np.ndarray, y: np.ndarray) -> float:
        x = np.asarray(x, dtype=float)
        y = np.asarray(y, dtype=float)
        if x.shape != (self.dim,) or y.shape != (self.dim,):
            raise InputError(f"pairing arguments must have length {self.dim}")
        return float(x @ self.form @ y)

    def nu(self, x, y, z) -> float:
        """Canonical 3-form B(x, [y, z])."""
        return self.pair(np.asarray(x, dtype=float), self.bracket(y, z))

    def scaled(self, form_scale: float) -> "LieAlgebraPresentation":
        """Same bracket with the invariant form multiplied by form_scale."""
        return LieAlgebraPresentation(
            name=f"{self.name}*{form_scale:g}",
            dim=self.dim,
            structure=self.structure,
            form=form_scale * self.form,
        )


def bracket(g: LieAlgebraPresentation, x, y):
    return g.bracket(x, y)


def nu(g: LieAlgebraPresentation, x, y, z) -> float:
    return g.nu(x, y, z)


def ce_three_cocycle_residual(g: LieAlgebraPresentation, w, x, y, z) -> float:
    """Absolute value of the alternating-sum differential of nu on (w,x,y,z).

    Convention: d nu (v1..v4) = sum_{i<j} (-1)^(i+j) nu([v_i, v_j], rest...),
    with 1-based exponents and the remaining arguments kept in order.
    Vanishes whenever the form is invariant.
    """
    v = [np.asarray(a, dtype=float) for a in (w, x, y, z)]
    total = 0.0
    for i, j in itertools.combinations(range(4), 2):
        rest = [v[m] for m in range(4) if m not in (i, j)]
        sign = -1.0 if (i + j + 2) % 2 else 1.0  # (i+1)+(j+1)
        total += sign * g.nu(g.bracket(v[i], v[j]), rest[0], rest[1])
    return abs(total)


def _cyclic_structure(n: int = 3) -> np.ndarray:
    c = np.zeros((n, n, n))
    for i, j, k in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
        c[i, j, k] = 1.0
        c[j, i, k] = -1.0
    return c


def su2() -> LieAlgebraPresentation:
    """[e1,e2] = e3 cyclically, with the identity form."""
    return LieAlgebraPresentation("su2", 3, _cyclic_structure(), np.eye(3))


def so3() -> LieAlgebraPresentation:
    """Rotation generators; same epsilon table as su2 (isomorphic real forms)."""
    return LieAlgebraPresentation("so3", 3, _cyclic_structure(), np.eye(3))


def sl2() -> LieAlgebraPresentation:
    """Basis (h, e, f) with [h,e]=2e, [h,f]=-2f, [e,f]=h and the trace form.

    Exercises a non-identity (indefinite) invariant form with exact
    integer entries.
    """
    c = np.zeros((3, 3, 3))
    c[0, 1, 1], c[1, 0, 1] = 2.0, -2.0
    c[0, 2, 2], c[2, 0, 2] = -2.0, 2.0
    c[1, 2, 0], c[2, 1, 0] = 1.0, -1.0
    b = np.array([[2.0, 0.0, 0.0], [0.0, 0.0, 1.0], [0.0, 1.0, 0.0]])
    return LieAlgebraPresentation("sl2", 3, c, b)


_BUNDLED = {"su2": su2, "so3": so3, "sl2": sl2}


def load_presentation(source: str | Path, form_scale: float = 1.0,
                      tol: float = 1e-12) -> LieAlgebraPresentation:
    """Resolve a bundled name or load a JSON structure-constants file.

    File schema: ``name``, ``dim``, ``structure`` as a list of
    [i, j, k, value] with 1-based indices (only i < j entries required; the
    loader antisymmetrizes), optional ``form`` as an n x n row-major array
    (default identity).
    """
    key = str(source)
    if key in _BUNDLED:
        g = _BUNDLED[key]()
        if form_scale != 1.0:
            g = g.scaled(form_scale)
        g.validate(tol=0.0)
        return g
    path = Path(source)
    if not path.is_file():
        raise InputError(f"unknown algebra {source!r}: not bundled and not a file")
    try:
        doc = json.loads(path.read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read algebra file {path}: {exc}") from exc
    try:
        name = str(doc["name"])
        n = int(doc["dim"])
        entries = doc["structure"]
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed algebra file {path}: {exc}") from exc
    if n <= 0:
        raise InputError("dim must be positive")
    c = np.zeros((n, n, n))
    for entry in entries:
        try:
            i, j, k, value = entry
        except (TypeError, ValueError) as exc:
            raise InputError(f"bad structure entry {entry!r}") from exc
        i, j, k = int(i) - 1, int(j) - 1, int(k) - 1
        if not (0 <= i < n and 0 <= j < n and 0 <= k < n):
            raise InputError(f"structure entry {entry!r} out of range")
        c[i, j, k] = float(value)
        c[j, i, k] = -float(value)
    form = np.asarray(doc.get("form", np.eye(n)), dtype=float)
    if form.shape != (n, n):
        raise InputError(f"form must be {n}x{n}")
    form = 0.5 * (form + form.T) * form_scale
    g = LieAlgebraPresentation(name, n, c, form)
    g.validate(tol=tol)
    return g
