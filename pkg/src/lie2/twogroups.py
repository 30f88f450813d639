"""Finite crossed modules and the strict 2-groups they generate.

Everything here is exact integer table arithmetic: groups are multiplication
tables, morphisms of the 2-group are pairs (object, direction) indexed as
p * |H| + h, and every axiom - homomorphism properties of source / target /
identity, composability, associativity, units, interchange, kernel exactness -
is checked exhaustively with zero tolerance.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .liealg import InputError


# ---------------------------------------------------------------------------
# finite groups as multiplication tables
# ---------------------------------------------------------------------------

@dataclass(eq=False)
class FiniteGroup:
    name: str
    table: np.ndarray  # table[a, b] = a * b

    def __post_init__(self):
        t = np.asarray(self.table, dtype=int)
        n = t.shape[0]
        if t.shape != (n, n) or n == 0:
            raise InputError("group table must be square and non-empty")
        if t.min() < 0 or t.max() >= n:
            raise InputError("group table entries out of range")
        object.__setattr__(self, "table", t)
        ident = [e for e in range(n) if all(t[e, x] == x and t[x, e] == x for x in range(n))]
        if len(ident) != 1:
            raise InputError(f"{self.name}: table has no unique identity")
        self.identity = ident[0]
        inv = np.full(n, -1, dtype=int)
        for a in range(n):
            where = np.nonzero(t[a] == self.identity)[0]
            if len(where) != 1 or t[where[0], a] != self.identity:
                raise InputError(f"{self.name}: element {a} lacks a two-sided inverse")
            inv[a] = where[0]
        self.inverse = inv
        # associativity, exhaustive
        for a, b in itertools.product(range(n), repeat=2):
            if not np.array_equal(t[t[a, b]], t[a, t[b]]):
                raise InputError(f"{self.name}: associativity fails at ({a}, {b})")

    @property
    def order(self) -> int:
        return self.table.shape[0]

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def conj(self, g: int, x: int) -> int:
        return self.mul(self.mul(g, x), int(self.inverse[g]))


def cyclic_group(n: int) -> FiniteGroup:
    idx = np.arange(n)
    return FiniteGroup(f"Z{n}", (idx[:, None] + idx[None, :]) % n)


def symmetric_group_3() -> FiniteGroup:
    perms = sorted(itertools.permutations(range(3)))
    index = {p: i for i, p in enumerate(perms)}
    table = np.zeros((6, 6), dtype=int)
    for a, pa in enumerate(perms):
        for b, pb in enumerate(perms):
            table[a, b] = index[tuple(pa[pb[i]] for i in range(3))]
    return FiniteGroup("S3", table)


def quaternion_group() -> FiniteGroup:
    """Units {1, -1, i, -i, j, -j, k, -k} in that order."""
    names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]

    def mul(a: str, b: str) -> str:
        sign = 1
        if a.startswith("-"):
            sign, a = -sign, a[1:]
        if b.startswith("-"):
            sign, b = -sign, b[1:]
        rules = {
            ("1", "1"): (1, "1"),
            ("1", "i"): (1, "i"), ("i", "1"): (1, "i"),
            ("1", "j"): (1, "j"), ("j", "1"): (1, "j"),
            ("1", "k"): (1, "k"), ("k", "1"): (1, "k"),
            ("i", "i"): (-1, "1"), ("j", "j"): (-1, "1"), ("k", "k"): (-1, "1"),
            ("i", "j"): (1, "k"), ("j", "i"): (-1, "k"),
            ("j", "k"): (1, "i"), ("k", "j"): (-1, "i"),
            ("k", "i"): (1, "j"), ("i", "k"): (-1, "j"),
        }
        s, unit = rules[(a, b)]
        sign *= s
        return unit if sign == 1 else "-" + unit

    table = np.zeros((8, 8), dtype=int)
    for a in range(8):
        for b in range(8):
            table[a, b] = names.index(mul(names[a], names[b]))
    return FiniteGroup("Q8", table)


def load_group(path: str | Path) -> FiniteGroup:
    """Read a {order, table} JSON document (row-major, 0-based)."""
    path = Path(path)
    try:
        doc = json.loads(path.read_text(encoding="utf-8"))
        order = int(doc["order"])
        table = np.asarray(doc["table"], dtype=int).reshape(order, order)
    except (OSError, KeyError, ValueError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read group table {path}: {exc}") from exc
    return FiniteGroup(doc.get("name", path.stem), table)


def dump_group(g: FiniteGroup) -> dict:
    return {"name": g.name, "order": g.order, "table": g.table.reshape(-1).tolist()}


# ---------------------------------------------------------------------------
# crossed modules
# ---------------------------------------------------------------------------

@dataclass(eq=False)
class FiniteCrossedModule:
    """(G, H, partial: H -> G, alpha: G acting on H) with the two
    compatibility laws checked exhaustively by ``violations``."""

    name: str
    G: FiniteGroup
    H: FiniteGroup
    partial: np.ndarray  # (|H|,) values in G
    alpha: np.ndarray  # (|G|, |H|) values in H

    def __post_init__(self):
        partial = np.asarray(self.partial, dtype=int)
        alpha = np.asarray(self.alpha, dtype=int)
        if partial.shape != (self.H.order,):
            raise InputError("partial must list one image per element of H")
        if alpha.shape != (self.G.order, self.H.order):
            raise InputError("alpha must be a |G| x |H| table")
        object.__setattr__(self, "partial", partial)
        object.__setattr__(self, "alpha", alpha)

    def violations(self) -> list[str]:
        out = []
        G, H, d, a = self.G, self.H, self.partial, self.alpha
        for h1, h2 in itertools.product(range(H.order), repeat=2):
            if d[H.mul(h1, h2)] != G.mul(int(d[h1]), int(d[h2])):
                out.append(f"partial not a homomorphism at ({h1}, {h2})")
        for g in range(G.order):
            if sorted(a[g]) != list(range(H.order)):
                out.append(f"alpha({g}) is not a bijection")
            for h1, h2 in itertools.product(range(H.order), repeat=2):
                if a[g, H.mul(h1, h2)] != H.mul(int(a[g, h1]), int(a[g, h2])):
                    out.append(f"alpha({g}) not a homomorphism at ({h1}, {h2})")
                    break
        for g1, g2 in itertools.product(range(G.order), repeat=2):
            if not np.array_equal(a[G.mul(g1, g2)], a[g1][a[g2]]):
                out.append(f"alpha not an action at ({g1}, {g2})")
        if not np.array_equal(a[G.identity], np.arange(H.order)):
            out.append("alpha(identity) is not the identity")
        for g in range(G.order):
            for h in range(H.order):
                if d[a[g, h]] != G.conj(g, int(d[h])):
                    out.append(f"equivariance fails at (g={g}, h={h})")
        for h1 in range(H.order):
            for h2 in range(H.order):
                if a[int(d[h1]), h2] != H.conj(h1, h2):
                    out.append(f"conjugation law fails at (h1={h1}, h2={h2})")
        return out

    def validate(self) -> None:
        bad = self.violations()
        if bad:
            raise InputError(f"{self.name}: {bad[0]} (+{len(bad) - 1} more)"
                             if len(bad) > 1 else f"{self.name}: {bad[0]}")


def conjugation_module(G: FiniteGroup) -> FiniteCrossedModule:
    """(G, G, identity, conjugation): generates the 2-group with exactly one
    morphism between any two objects."""
    alpha = np.array([[G.conj(g, h) for h in range(G.order)] for g in range(G.order)])
    return FiniteCrossedModule(f"conj[{G.name}]", G, G,
                               np.arange(G.order), alpha)


def trivial_action_module(G: FiniteGroup, H: FiniteGroup) -> FiniteCrossedModule:
    """Trivial boundary and trivial action; requires H abelian."""
    for a, b in itertools.product(range(H.order), repeat=2):
        if H.mul(a, b) != H.mul(b, a):
            raise InputError("trivial-action module needs an abelian direction group")
    return FiniteCrossedModule(
        f"trivial[{G.name},{H.name}]", G, H,
        np.full(H.order, G.identity, dtype=int),
        np.tile(np.arange(H.order), (G.order, 1)),
    )


def inclusion_module(G: FiniteGroup, members: list[int],
                     name: str = "") -> FiniteCrossedModule:
    """Normal subgroup inclusion with the conjugation action."""
    members = list(members)
    pos = {m: i for i, m in enumerate(members)}
    if G.identity not in pos:
        raise InputError("subgroup must contain the identity")
    sub_table = np.zeros((len(members), len(members)), dtype=int)
    for i, a in enumerate(members):
        for j, b in enumerate(members):
            prod = G.mul(a, b)
            if prod not in pos:
                raise InputError("member list is not closed under the product")
            sub_table[i, j] = pos[prod]
    H = FiniteGroup(name or f"sub[{G.name}]", sub_table)
    alpha = np.zeros((G.order, H.order), dtype=int)
    for g in range(G.order):
        for i, h in enumerate(members):
            c = G.conj(g, h)
            if c not in pos:
                raise InputError("subgroup is not normal")
            alpha[g, i] = pos[c]
    return FiniteCrossedModule(
        f"incl[{H.name}<{G.name}]", G, H,
        np.array(members, dtype=int), alpha,
    )


def load_crossed_module(path: str | Path) -> FiniteCrossedModule:
    """Read a {G, H, partial, alpha} JSON fixture."""
    path = Path(path)
    try:
        doc = json.loads(path.read_text(encoding="utf-8"))
        G = FiniteGroup(doc["G"].get("name", "G"),
                        np.asarray(doc["G"]["table"], dtype=int).reshape(
                            int(doc["G"]["order"]), -1))
        H = FiniteGroup(doc["H"].get("name", "H"),
                        np.asarray(doc["H"]["table"], dtype=int).reshape(
                            int(doc["H"]["order"]), -1))
        partial = np.asarray(doc["partial"], dtype=int)
        alpha = np.asarray(doc["alpha"], dtype=int)
    except (OSError, KeyError, ValueError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read crossed module {path}: {exc}") from exc
    cm = FiniteCrossedModule(doc.get("name", path.stem), G, H, partial, alpha)
    cm.validate()
    return cm


def dump_crossed_module(cm: FiniteCrossedModule) -> dict:
    return {
        "name": cm.name,
        "G": dump_group(cm.G),
        "H": dump_group(cm.H),
        "partial": cm.partial.tolist(),
        "alpha": cm.alpha.tolist(),
    }


# ---------------------------------------------------------------------------
# the 2-group of a crossed module
# ---------------------------------------------------------------------------

@dataclass(eq=False)
class FiniteTwoGroup:
    """Objects G; morphisms G x H indexed p * |H| + h with the twisted
    product; source p, target partial(h) p, identities (p, 1); composition
    (p1, h1) o (p2, h2) = (p2, h1 h2) exactly when p1 = partial(h2) p2."""

    cm: FiniteCrossedModule
    obj_table: np.ndarray = field(init=False)
    mor_table: np.ndarray = field(init=False)
    source: np.ndarray = field(init=False)
    target: np.ndarray = field(init=False)
    unit: np.ndarray = field(init=False)

    def __post_init__(self):
        cm = self.cm
        nG, nH = cm.G.order, cm.H.order
        self.obj_table = cm.G.table
        p = np.repeat(np.arange(nG), nH)
        h = np.tile(np.arange(nH), nG)
        self.source = p
        self.target = cm.G.table[cm.partial[h], p]
        self.unit = np.arange(nG) * nH + cm.H.identity
        # (p1, h1)(p2, h2) = (p1 p2, h1 * alpha(p1)(h2))
        pp = cm.G.table[p[:, None], p[None, :]]
        hh = cm.H.table[h[:, None], cm.alpha[p[:, None], h[None, :]]]
        self.mor_table = pp * nH + hh

    @property
    def n_objects(self) -> int:
        return self.cm.G.order

    @property
    def n_morphisms(self) -> int:
        return self.cm.G.order * self.cm.H.order

    def pair(self, m: int) -> tuple[int, int]:
        return divmod(int(m), self.cm.H.order)

    def morphism(self, p: int, h: int) -> int:
        return p * self.cm.H.order + h

    def composable(self, m1: int, m2: int) -> bool:
        return bool(self.source[m1] == self.target[m2])

    def compose(self, m1: int, m2: int) -> int:
        """m1 o m2 (m2 first); defined iff source(m1) = target(m2)."""
        if not self.composable(m1, m2):
            raise InputError(f"morphisms {m1}, {m2} are not composable")
        p1, h1 = self.pair(m1)
        p2, h2 = self.pair(m2)
        return self.morphism(p2, self.cm.H.mul(h1, h2))

    def mor_identity(self) -> int:
        return self.morphism(self.cm.G.identity, self.cm.H.identity)

    def mor_inverse(self, m: int) -> int:
        inv = np.nonzero(self.mor_table[m] == self.mor_identity())[0]
        return int(inv[0])

    # -- exhaustive axioms ---------------------------------------------------

    def violations(self) -> list[str]:
        out = []
        cm = self.cm
        nM = self.n_morphisms
        s, t, table = self.source, self.target, self.mor_table

        st_prod = cm.G.table[s[:, None], s[None, :]]
        if not np.array_equal(s[table], st_prod):
            out.append("source is not a homomorphism")
        tt_prod = cm.G.table[t[:, None], t[None, :]]
        if not np.array_equal(t[table], tt_prod):
            out.append("target is not a homomorphism")
        if not np.array_equal(self.unit[cm.G.table],
                              table[self.unit[:, None], self.unit[None, :]]):
            out.append("identity-assignment is not a homomorphism")

        comp_pairs = [(m1, m2) for m1 in range(nM) for m2 in range(nM)
                      if s[m1] == t[m2]]
        for m1, m2 in comp_pairs:
            c = self.compose(m1, m2)
            if s[c] != s[m2] or t[c] != t[m1]:
                out.append(f"composite of ({m1}, {m2}) has wrong endpoints")
                break
        for m in range(nM):
            if self.compose(m, int(self.unit[s[m]])) != m:
                out.append(f"right unit law fails at {m}")
                break
            if self.compose(int(self.unit[t[m]]), m) != m:
                out.append(f"left unit law fails at {m}")
                break
        for m1, m2 in comp_pairs:
            for m3 in range(nM):
                if s[m2] == t[m3]:
                    if self.compose(self.compose(m1, m2), m3) != \
                            self.compose(m1, self.compose(m2, m3)):
                        out.append("composition is not associative")
                        break

        # interchange, vectorized over all pairs of composable pairs
        a1 = np.array([m1 for m1, _ in comp_pairs])
        a2 = np.array([m2 for _, m2 in comp_pairs])
        comp_of = np.array([self.compose(m1, m2) for m1, m2 in comp_pairs])
        left = table[comp_of[:, None], comp_of[None, :]]
        prod1 = table[a1[:, None], a1[None, :]]
        prod2 = table[a2[:, None], a2[None, :]]
        if not np.array_equal(s[prod1], t[prod2]):
            out.append("products of composable pairs fail to stay composable")
        else:
            p2, _ = np.divmod(prod2, cm.H.order)
            h1 = np.mod(prod1, cm.H.order)
            h2 = np.mod(prod2, cm.H.order)
            right = p2 * cm.H.order + cm.H.table[h1, h2]
            if not np.array_equal(left, right):
                out.append("interchange law fails")
        return out

    def validate(self) -> None:
        bad = self.violations()
        if bad:
            raise InputError(f"2-group of {self.cm.name}: {bad[0]}")


def build_two_group(cm: FiniteCrossedModule) -> FiniteTwoGroup:
    """Validate the crossed module, construct its 2-group, and verify every
    category and interchange axiom exhaustively."""
    cm.validate()
    grp = FiniteTwoGroup(cm)
    grp.validate()
    return grp


def unique_morphism_count_violations(grp: FiniteTwoGroup) -> list[str]:
    """For the conjugation module there is exactly one morphism between any
    ordered pair of objects."""
    counts = np.zeros((grp.n_objects, grp.n_objects), dtype=int)
    for m in range(grp.n_morphisms):
        counts[grp.source[m], grp.target[m]] += 1
    if np.all(counts == 1):
        return []
    return [f"morphism count matrix is not constant 1 (min {counts.min()}, max {counts.max()})"]


# ---------------------------------------------------------------------------
# strict homomorphisms, kernels, exactness
# ---------------------------------------------------------------------------

@dataclass(eq=False)
class TwoGroupHom:
    src: FiniteTwoGroup
    dst: FiniteTwoGroup
    obj_map: np.ndarray
    mor_map: np.ndarray
    name: str = ""

    def __post_init__(self):
        obj_map = np.asarray(self.obj_map, dtype=int)
        mor_map = np.asarray(self.mor_map, dtype=int)
        if obj_map.shape != (self.src.n_objects,):
            raise InputError("object map has the wrong length")
        if mor_map.shape != (self.src.n_morphisms,):
            raise InputError("morphism map has the wrong length")
        object.__setattr__(self, "obj_map", obj_map)
        object.__setattr__(self, "mor_map", mor_map)

    def violations(self) -> list[str]:
        out = []
        src, dst, f0, f1 = self.src, self.dst, self.obj_map, self.mor_map
        if not np.array_equal(f0[src.obj_table], dst.obj_table[f0[:, None], f0[None, :]]):
            out.append("object map is not a homomorphism")
        if not np.array_equal(f1[src.mor_table], dst.mor_table[f1[:, None], f1[None, :]]):
            out.append("morphism map is not a homomorphism")
        if not np.array_equal(f0[src.source], dst.source[f1]):
            out.append("source squares do not commute")
        if not np.array_equal(f0[src.target], dst.target[f1]):
            out.append("target squares do not commute")
        if not np.array_equal(f1[src.unit], dst.unit[f0]):
            out.append("identity squares do not commute")
        for m1 in range(src.n_morphisms):
            for m2 in range(src.n_morphisms):
                if src.source[m1] == src.target[m2]:
                    if f1[src.compose(m1, m2)] != dst.compose(int(f1[m1]), int(f1[m2])):
                        out.append("composition is not preserved")
                        return out
        return out

    def validate(self) -> None:
        bad = self.violations()
        if bad:
            raise InputError(f"2-group homomorphism {self.name}: {bad[0]}")


def strict_kernel(pi: TwoGroupHom) -> tuple[set[int], set[int]]:
    """Objects and morphisms mapped to the identity object / morphism."""
    e_obj = pi.dst.cm.G.identity
    e_mor = pi.dst.mor_identity()
    objs = {p for p in range(pi.src.n_objects) if pi.obj_map[p] == e_obj}
    mors = {m for m in range(pi.src.n_morphisms) if pi.mor_map[m] == e_mor}
    return objs, mors


@dataclass
class ExactnessRecord:
    kernel_objects: int
    kernel_morphisms: int
    image_objects: int
    image_morphisms: int
    objects_exact: bool
    morphisms_exact: bool

    @property
    def passed(self) -> bool:
        return self.objects_exact and self.morphisms_exact


def strict_kernel_exactness(iota: TwoGroupHom, pi: TwoGroupHom) -> ExactnessRecord:
    """For a composable pair iota, pi of strict homomorphisms, check
    image(iota) = kernel(pi) on objects and on morphisms, exactly."""
    if iota.dst is not pi.src:
        raise InputError("homomorphisms are not composable")
    iota.validate()
    pi.validate()
    ker_obj, ker_mor = strict_kernel(pi)
    im_obj = {int(v) for v in iota.obj_map}
    im_mor = {int(v) for v in iota.mor_map}
    return ExactnessRecord(
        kernel_objects=len(ker_obj),
        kernel_morphisms=len(ker_mor),
        image_objects=len(im_obj),
        image_morphisms=len(im_mor),
        objects_exact=im_obj == ker_obj,
        morphisms_exact=im_mor == ker_mor,
    )


# ---------------------------------------------------------------------------
# standard exact sequences at finite scale
# ---------------------------------------------------------------------------

def trivial_two_group() -> FiniteTwoGroup:
    return build_two_group(conjugation_module(cyclic_group(1)))


def quotient_group(G: FiniteGroup, members: list[int]) -> tuple[FiniteGroup, np.ndarray]:
    """G / N for a normal subgroup given by its member list; returns the
    quotient and the projection map."""
    members_set = set(members)
    cosets: list[set[int]] = []
    proj = np.full(G.order, -1, dtype=int)
    for g in range(G.order):
        if proj[g] >= 0:
            continue
        coset = {G.mul(g, n) for n in members_set}
        for x in coset:
            if proj[x] >= 0:
                raise InputError("member list does not induce a partition")
            proj[x] = len(cosets)
        cosets.append(coset)
    reps = [min(c) for c in cosets]
    table = np.zeros((len(cosets), len(cosets)), dtype=int)
    for a, ra in enumerate(reps):
        for b, rb in enumerate(reps):
            table[a, b] = proj[G.mul(ra, rb)]
    q = FiniteGroup(f"{G.name}/N", table)
    return q, proj


def kernel_inclusion_pair(G: FiniteGroup, members: list[int]
                          ) -> tuple[TwoGroupHom, TwoGroupHom]:
    """The finite analogue of loops -> paths -> group: a 2-group built on a
    normal-subgroup inclusion, projected onto the discrete quotient; its
    strict kernel is the sub-2-group on the subgroup's objects."""
    cm = inclusion_module(G, members)
    total = build_two_group(cm)

    q, proj = quotient_group(G, members)
    discrete = build_two_group(trivial_action_module(q, cyclic_group(1)))
    obj_map = proj.copy()
    mor_map = np.array([
        discrete.morphism(int(proj[total.pair(m)[0]]), 0)
        for m in range(total.n_morphisms)
    ])
    pi = TwoGroupHom(total, discrete, obj_map, mor_map, name="quotient")

    # kernel sub-2-group: same direction group over the subgroup's objects
    sub_alpha = cm.alpha[np.array(members, dtype=int)]
    pos = {m: i for i, m in enumerate(members)}
    sub_objects = FiniteGroup(
        f"N<{G.name}>",
        np.array([[pos[G.mul(a, b)] for b in members] for a in members]),
    )
    sub_partial = np.array([pos[int(cm.partial[h])] for h in range(cm.H.order)])
    kernel_cm = FiniteCrossedModule(
        f"kernel[{cm.name}]", sub_objects, cm.H, sub_partial, sub_alpha,
    )
    kernel = build_two_group(kernel_cm)
    members_arr = np.array(members, dtype=int)
    k_obj_map = members_arr.copy()
    k_mor_map = np.array([
        total.morphism(int(members_arr[kernel.pair(m)[0]]), kernel.pair(m)[1])
        for m in range(kernel.n_morphisms)
    ])
    iota = TwoGroupHom(kernel, total, k_obj_map, k_mor_map, name="kernel-inclusion")
    return iota, pi


def indiscrete_collapse_pair(G: FiniteGroup) -> tuple[TwoGroupHom, TwoGroupHom]:
    """Identity into the indiscrete 2-group followed by the collapse onto the
    one-object, one-morphism 2-group; the kernel of the collapse is everything."""
    total = build_two_group(conjugation_module(G))
    point = trivial_two_group()
    pi = TwoGroupHom(
        total, point,
        np.zeros(total.n_objects, dtype=int),
        np.zeros(total.n_morphisms, dtype=int),
        name="collapse",
    )
    iota = TwoGroupHom(
        total, total,
        np.arange(total.n_objects),
        np.arange(total.n_morphisms),
        name="identity",
    )
    return iota, pi


def identity_kernel_pair(G: FiniteGroup) -> tuple[TwoGroupHom, TwoGroupHom]:
    """Trivial 2-group into any 2-group followed by its identity; the kernel
    of the identity is trivial."""
    total = build_two_group(conjugation_module(G))
    point = trivial_two_group()
    iota = TwoGroupHom(
        point, total,
        np.array([total.cm.G.identity]),
        np.array([total.mor_identity()]),
        name="unit",
    )
    pi = TwoGroupHom(
        total, total,
        np.arange(total.n_objects),
        np.arange(total.n_morphisms),
        name="identity",
    )
    return iota, pi
