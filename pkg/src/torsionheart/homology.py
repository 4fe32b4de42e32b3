"""Hom and Ext computations, extensions, approximations, envelopes.

Ext^1(M, N) is presented against the syzygy 0 -> K -> P0 -> M -> 0 of a
minimal projective cover: classes are morphisms K -> N modulo restrictions of
morphisms P0 -> N.  Realization is the pushout of the syzygy inclusion along
a cocycle; the round trip class_of(realize(c)) == c is a tested identity.

Minimal right/left approximations are built as full approximations and then
minimized.  Minimality is certified, not assumed: a right approximation
f: Y -> M is minimal iff the annihilator {u in End(Y) : u.then(f) = 0}
contains no nonzero idempotent, and a finite-dimensional algebra without
nonzero idempotents is nilpotent, which we check by iterating products.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .algebra import BoundQuiverAlgebra
from .config import DEFAULT_CAPS
from .exceptions import ResourceLimitError
from .modules import (
    Module, Morphism, cokernel, direct_sum, dual_module, identity_morphism,
    injective_module, kernel, projective_module, quotient_by_rows,
    submodule_from_rows, unvec_morphism, zero_module, zero_morphism,
)

_HOM_CACHE: dict[tuple[str, str], "HomSpace"] = {}
_EXT_CACHE: dict[tuple[str, str], "Ext1Space"] = {}
_SYZYGY_CACHE: dict[str, tuple] = {}


@dataclass(frozen=True)
class HomSpace:
    source: Module
    target: Module
    basis: tuple[Morphism, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def matrix(self) -> np.ndarray:
        n = sum(self.source.dims[v] * self.target.dims[v]
                for v in range(self.source.algebra.quiver.n))
        if not self.basis:
            return linalg.zeros(0, n)
        return np.stack([f.vec() for f in self.basis], axis=0)

    def coords_of(self, f: Morphism) -> np.ndarray:
        p = self.source.algebra.field.p
        sol = linalg.solve_left(self.matrix(), f.vec().reshape(1, -1), p)
        if sol is None:
            raise ValueError("morphism is not in the hom space")
        return sol[0]

    def from_coords(self, coords) -> Morphism:
        p = self.source.algebra.field.p
        n = sum(self.source.dims[v] * self.target.dims[v]
                for v in range(self.source.algebra.quiver.n))
        flat = np.zeros(n, dtype=np.int64)
        for c, f in zip(coords, self.basis):
            if c % p:
                flat = (flat + (c % p) * f.vec()) % p
        return unvec_morphism(self.source, self.target, flat)


def _hom_system(m: Module, n: Module) -> np.ndarray:
    """Coefficient matrix of the intertwining equations in vec(f)."""
    q = m.algebra.quiver
    offs, total = [], 0
    for v in range(q.n):
        offs.append(total)
        total += m.dims[v] * n.dims[v]
    rows = []
    for ai, arrow in enumerate(q.arrows):
        v, w = arrow.source, arrow.target
        r = m.dims[v] * n.dims[w]
        if r == 0:
            continue
        block = linalg.zeros(r, total)
        if m.dims[v] and n.dims[v]:
            block[:, offs[v]:offs[v] + m.dims[v] * n.dims[v]] = np.kron(
                linalg.eye(m.dims[v]), n.maps[ai].T
            )
        if m.dims[w] and n.dims[w]:
            block[:, offs[w]:offs[w] + m.dims[w] * n.dims[w]] -= np.kron(
                m.maps[ai], linalg.eye(n.dims[w])
            )
        rows.append(block % m.algebra.field.p)
    if not rows:
        return linalg.zeros(0, total)
    return np.concatenate(rows, axis=0)


def hom_space(m: Module, n: Module) -> HomSpace:
    key = (m.key, n.key)
    got = _HOM_CACHE.get(key)
    if got is not None:
        return got
    p = m.algebra.field.p
    system = _hom_system(m, n)
    if system.shape[1] == 0:
        basis = ()
    else:
        basis = tuple(unvec_morphism(m, n, row)
                      for row in linalg.nullspace(system, p))
    out = HomSpace(m, n, basis)
    _HOM_CACHE[key] = out
    return out


def hom_dim(m: Module, n: Module) -> int:
    return hom_space(m, n).dim


def _affine_solve(a: np.ndarray, b: np.ndarray, p: int):
    if a.shape[1] == 0:
        return np.zeros(0, dtype=np.int64) if not (b % p).any() else None
    aug = np.concatenate([a % p, (b % p).reshape(-1, 1)], axis=1)
    r, pivots = linalg.rref(aug, p)
    if pivots and pivots[-1] == a.shape[1]:
        return None
    x = np.zeros(a.shape[1], dtype=np.int64)
    for i, col in enumerate(pivots):
        x[col] = r[i, -1]
    return x


def constrained_morphism(source: Module, target: Module, conditions):
    """One intertwiner f: source -> target with L @ f_v @ R == rhs for each
    condition (v, L, R, rhs); None in place of L or R means the identity.
    Returns None when unsolvable; free coordinates are zeroed, so the result
    is deterministic."""
    p = source.algebra.field.p
    q = source.algebra.quiver
    offs, total = [], 0
    for v in range(q.n):
        offs.append(total)
        total += source.dims[v] * target.dims[v]
    sys_rows = [_hom_system(source, target)]
    rhs_rows = [np.zeros(sys_rows[0].shape[0], dtype=np.int64)]
    for v, left, right, rhs in conditions:
        left_m = linalg.eye(source.dims[v]) if left is None else np.asarray(left) % p
        right_m = linalg.eye(target.dims[v]) if right is None else np.asarray(right) % p
        r = left_m.shape[0] * right_m.shape[1]
        if r == 0:
            continue
        block = linalg.zeros(r, total)
        if source.dims[v] and target.dims[v]:
            block[:, offs[v]:offs[v] + source.dims[v] * target.dims[v]] = np.kron(
                left_m, right_m.T
            )
        sys_rows.append(block % p)
        rhs_rows.append(np.asarray(rhs, dtype=np.int64).reshape(-1) % p)
    big = np.concatenate(sys_rows, axis=0)
    rhs = np.concatenate(rhs_rows)
    sol = _affine_solve(big, rhs, p)
    if sol is None:
        return None
    return unvec_morphism(source, target, sol)


def factor_through(f: Morphism, g: Morphism):
    """h: f.target -> g.target with g == f.then(h); None if impossible."""
    conditions = [
        (v, f.maps[v], None, g.maps[v])
        for v in range(f.source.algebra.quiver.n)
    ]
    return constrained_morphism(f.target, g.target, conditions)


def factor_over(f: Morphism, g: Morphism):
    """h: g.source -> f.source with g == h.then(f); None if impossible."""
    conditions = [
        (v, None, f.maps[v], g.maps[v])
        for v in range(f.source.algebra.quiver.n)
    ]
    return constrained_morphism(g.source, f.source, conditions)


def has_retraction(f: Morphism) -> bool:
    """True iff f: X -> Y is a split mono (some r with f.then(r) == id)."""
    return factor_through(f, identity_morphism(f.source)) is not None


def has_section(f: Morphism) -> bool:
    """True iff f: X -> Y is a split epi."""
    return factor_over(f, identity_morphism(f.target)) is not None


# -- short exact sequences ----------------------------------------------------

@dataclass(frozen=True)
class SES:
    left: Module
    middle: Module
    right: Module
    inject: Morphism
    surject: Morphism

    def validate(self) -> bool:
        if not (self.inject.is_mono() and self.surject.is_epi()
                and self.inject.then(self.surject).is_zero()):
            return False
        return all(
            self.middle.dims[v] == self.left.dims[v] + self.right.dims[v]
            for v in range(self.middle.algebra.quiver.n)
        )

    def is_split(self) -> bool:
        return has_section(self.surject)


def split_ses(left: Module, right: Module) -> SES:
    total, incs, prjs = direct_sum([left, right], left.algebra)
    return SES(left, total, right, incs[0], prjs[1])


def pushout(f: Morphism, g: Morphism):
    """Pushout of f: X -> Y and g: X -> Z; returns (W, from_Y, from_Z)."""
    y, z = f.target, g.target
    p = f.source.algebra.field.p
    total, (iy, iz), _ = direct_sum([y, z], y.algebra)
    h = f.then(iy).add(g.then(iz).scale(p - 1))
    rows = [linalg.row_space(h.maps[v], p) for v in range(y.algebra.quiver.n)]
    w, proj = quotient_by_rows(total, rows)
    return w, iy.then(proj), iz.then(proj)


def pullback(f: Morphism, g: Morphism):
    """Pullback of f: X -> Z and g: Y -> Z; returns (W, to_X, to_Y)."""
    x, y = f.source, g.source
    p = x.algebra.field.p
    total, _, (px, py) = direct_sum([x, y], x.algebra)
    h = px.then(f).add(py.then(g).scale(p - 1))
    w, incl = kernel(h)
    return w, incl.then(px), incl.then(py)


# -- projective covers and syzygies --------------------------------------------

def projective_cover(m: Module):
    """Minimal projective cover.  Returns (P, cover, vertices, incs, prjs)."""
    algebra = m.algebra
    p = algebra.field.p
    rad = m.radical_rows()
    gens: list[tuple[int, np.ndarray]] = []
    for v in range(algebra.quiver.n):
        r, pivots = linalg.rref(rad[v], p)
        for j in range(m.dims[v]):
            if j not in pivots:
                e = np.zeros(m.dims[v], dtype=np.int64)
                e[j] = 1
                gens.append((v, e))
    summands = [projective_module(algebra, v) for v, _ in gens]
    total, incs, prjs = direct_sum(summands, algebra)
    comps = []
    for (v, x), proj_mod in zip(gens, summands):
        maps = []
        for w in range(algebra.quiver.n):
            bucket = algebra.basis_paths_between(v, w)
            rows = [
                linalg.matmul(x.reshape(1, -1),
                              m.path_matrix(algebra.basis[bi]), p)[0]
                for bi in bucket
            ]
            maps.append(np.stack(rows, axis=0) if rows
                        else linalg.zeros(0, m.dims[w]))
        comps.append(Morphism(proj_mod, m, maps))
    cover_maps = []
    for v in range(algebra.quiver.n):
        acc = linalg.zeros(total.dims[v], m.dims[v])
        for prj, comp in zip(prjs, comps):
            acc = (acc + linalg.matmul(prj.maps[v], comp.maps[v], p)) % p
        cover_maps.append(acc)
    cover = Morphism(total, m, cover_maps)
    if not cover.is_epi():
        raise AssertionError("projective cover is not epi")
    return total, cover, [v for v, _ in gens], incs, prjs


def syzygy(m: Module):
    """(K, incl: K -> P0, cover: P0 -> M) for a minimal cover; cached."""
    cached = _SYZYGY_CACHE.get(m.key)
    if cached is not None:
        return cached
    p0, cover, _, _, _ = projective_cover(m)
    k, incl = kernel(cover)
    out = (k, incl, cover)
    _SYZYGY_CACHE[m.key] = out
    return out


def is_projective(m: Module) -> bool:
    return syzygy(m)[0].is_zero()


# -- Ext^1 ----------------------------------------------------------------------

class Ext1Space:
    """Ext^1(M, N) = Hom(K, N) / res Hom(P0, N) for the minimal syzygy of M."""

    def __init__(self, m: Module, n: Module):
        self.m = m
        self.n = n
        self.p = m.algebra.field.p
        self.k, self.incl, self.cover = syzygy(m)
        self.hom_kn = hom_space(self.k, n)
        hom_p0n = hom_space(self.cover.source, n)
        coords = [self.hom_kn.coords_of(self.incl.then(g)) for g in hom_p0n.basis]
        mat = (np.stack(coords, axis=0) if coords
               else linalg.zeros(0, self.hom_kn.dim))
        r, pivots = linalg.rref(mat, self.p)
        self.image_r = r[: len(pivots)]
        self.image_pivots = pivots
        self.rep_indices = [i for i in range(self.hom_kn.dim) if i not in pivots]

    @property
    def dim(self) -> int:
        return len(self.rep_indices)

    def cocycle(self, coeffs) -> Morphism:
        flat = np.zeros(self.hom_kn.dim, dtype=np.int64)
        for c, idx in zip(coeffs, self.rep_indices):
            flat[idx] = c % self.p
        return self.hom_kn.from_coords(flat)

    def realize(self, coeffs) -> SES:
        """The extension 0 -> N -> E -> M -> 0 in the given class."""
        h = self.cocycle(coeffs)
        w, from_p0, from_n = pushout(self.incl, h)
        maps = []
        for v in range(self.m.algebra.quiver.n):
            dom = np.concatenate([from_p0.maps[v], from_n.maps[v]], axis=0)
            rhs = np.concatenate(
                [self.cover.maps[v], linalg.zeros(self.n.dims[v], self.m.dims[v])],
                axis=0,
            )
            sol = linalg.solve_right(dom, rhs, self.p)
            if sol is None:
                raise AssertionError("pushout mediator failed")
            maps.append(sol)
        surject = Morphism(w, self.m, maps)
        ses = SES(self.n, w, self.m, from_n, surject)
        if not ses.validate():
            raise AssertionError("realized extension is not exact")
        return ses

    def class_of(self, ses: SES) -> np.ndarray:
        """Coordinates (in the representative basis) of 0 -> N -> E -> M -> 0."""
        lift = factor_over(ses.surject, self.cover)
        if lift is None:
            raise AssertionError("projective lift along the epi failed")
        g = self.incl.then(lift)
        maps = []
        for v in range(self.k.algebra.quiver.n):
            sol = linalg.solve_left(ses.inject.maps[v], g.maps[v], self.p)
            if sol is None:
                raise AssertionError("cocycle does not land in the subobject")
            maps.append(sol)
        c = Morphism(self.k, self.n, maps)
        coords = self.hom_kn.coords_of(c)
        resid = linalg.reduce_against(coords, self.image_r, self.image_pivots,
                                      self.p)
        return np.array([resid[i] for i in self.rep_indices], dtype=np.int64)

    def all_classes(self, caps=DEFAULT_CAPS):
        """(coeffs, SES) for every class, zero class included."""
        d = self.dim
        if d > caps.ext_dim_cap or self.p ** d > caps.scan_count_cap:
            raise ResourceLimitError(f"ext scan of size {self.p}^{d} exceeds cap")
        for coeffs in linalg.vectors(d, self.p):
            yield coeffs, self.realize(coeffs)


def ext1(m: Module, n: Module) -> Ext1Space:
    key = (m.key, n.key)
    got = _EXT_CACHE.get(key)
    if got is None:
        got = Ext1Space(m, n)
        _EXT_CACHE[key] = got
    return got


def ext_dim(m: Module, n: Module) -> int:
    return ext1(m, n).dim


# -- minimality machinery --------------------------------------------------------

def _annihilator(f: Morphism, side: str) -> list[Morphism]:
    """Basis of {u in End(Y) : u.then(f) == 0} (side='right', f: Y -> M) or
    {u in End(Y) : f.then(u) == 0} (side='left', f: M -> Y)."""
    y = f.source if side == "right" else f.target
    p = y.algebra.field.p
    end = hom_space(y, y)
    if end.dim == 0:
        return []
    rows = [
        (u.then(f) if side == "right" else f.then(u)).vec()
        for u in end.basis
    ]
    comp = np.stack(rows, axis=0)
    if comp.shape[1] == 0:
        return list(end.basis)
    ker = linalg.left_nullspace(comp, p)
    return [end.from_coords(c) for c in ker]


def _find_idempotent(basis: list[Morphism], p: int):
    """None when span(basis) generates a nilpotent algebra, else a nonzero
    idempotent inside the generated algebra."""
    if not basis:
        return None
    from .krull import operator_min_poly, poly_idempotent

    y = basis[0].source
    current = list(basis)
    prev_dim = None
    for _ in range(200):
        vecs = [m.vec() for m in current if not m.is_zero()]
        if not vecs:
            return None
        span = linalg.row_space(np.stack(vecs, axis=0), p)
        if span.shape[0] == 0:
            return None
        if prev_dim == span.shape[0]:
            current = [unvec_morphism(y, y, r) for r in span]
            break
        prev_dim = span.shape[0]
        current = [unvec_morphism(y, y, r) for r in span]
        current = [a.then(b) for a in basis for b in current]
    candidates = list(current)
    candidates += [a.add(b) for i, a in enumerate(current)
                   for b in current[i + 1:]]
    for x in candidates:
        mp = operator_min_poly(x, p)
        if mp[0] % p:  # invertible element: the identity lies in the algebra
            return identity_morphism(y)
        e = poly_idempotent(x, p, zero_constant=True)
        if e is not None and not e.is_zero():
            return e
    d = len(current)
    if p ** d <= DEFAULT_CAPS.scan_count_cap:
        mat = np.stack([m.vec() for m in current], axis=0)
        for coeffs in linalg.nonzero_vectors(d, p):
            x = unvec_morphism(y, y, (coeffs @ mat) % p)
            mp = operator_min_poly(x, p)
            if mp[0] % p:
                return identity_morphism(y)
            e = poly_idempotent(x, p, zero_constant=True)
            if e is not None and not e.is_zero():
                return e
        return None
    raise ResourceLimitError("idempotent search space too large")


def right_minimize(f: Morphism) -> Morphism:
    """Split off source summands killed by f until it is right minimal."""
    p = f.source.algebra.field.p
    while not f.source.is_zero():
        e = _find_idempotent(_annihilator(f, "right"), p)
        if e is None:
            return f
        rows = [linalg.left_nullspace(e.maps[v], p)
                for v in range(f.source.algebra.quiver.n)]
        _, incl = submodule_from_rows(f.source, rows)
        f = incl.then(f)
    return f


def left_minimize(f: Morphism) -> Morphism:
    """Split off target summands missed by f until it is left minimal."""
    p = f.source.algebra.field.p
    while not f.target.is_zero():
        e = _find_idempotent(_annihilator(f, "left"), p)
        if e is None:
            return f
        rows = [linalg.left_nullspace(e.maps[v], p)
                for v in range(f.target.algebra.quiver.n)]
        sub, incl = submodule_from_rows(f.target, rows)
        core_maps = []
        for v in range(f.target.algebra.quiver.n):
            one_minus_e = (linalg.eye(f.target.dims[v]) - e.maps[v]) % p
            sol = linalg.solve_left(incl.maps[v], one_minus_e, p)
            if sol is None:
                raise AssertionError("complement of the idempotent image failed")
            core_maps.append(sol)
        core = Morphism(f.target, sub, core_maps, check=False)
        f = f.then(core)
    return f


def is_right_minimal(f: Morphism) -> bool:
    p = f.source.algebra.field.p
    return _find_idempotent(_annihilator(f, "right"), p) is None


def is_left_minimal(f: Morphism) -> bool:
    p = f.source.algebra.field.p
    return _find_idempotent(_annihilator(f, "left"), p) is None


# -- approximations ----------------------------------------------------------------

def full_right_approximation(m: Module, gens: list[Module]) -> Morphism:
    algebra = m.algebra
    p = algebra.field.p
    comps = [(g, b) for g in gens if not g.is_zero()
             for b in hom_space(g, m).basis]
    total, _, prjs = direct_sum([g for g, _ in comps], algebra)
    maps = []
    for v in range(algebra.quiver.n):
        acc = linalg.zeros(total.dims[v], m.dims[v])
        for prj, (_, b) in zip(prjs, comps):
            acc = (acc + linalg.matmul(prj.maps[v], b.maps[v], p)) % p
        maps.append(acc)
    return Morphism(total, m, maps, check=False)


def full_left_approximation(m: Module, gens: list[Module]) -> Morphism:
    algebra = m.algebra
    p = algebra.field.p
    comps = [(g, b) for g in gens if not g.is_zero()
             for b in hom_space(m, g).basis]
    total, incs, _ = direct_sum([g for g, _ in comps], algebra)
    maps = []
    for v in range(algebra.quiver.n):
        acc = linalg.zeros(m.dims[v], total.dims[v])
        for inc, (_, b) in zip(incs, comps):
            acc = (acc + linalg.matmul(b.maps[v], inc.maps[v], p)) % p
        maps.append(acc)
    return Morphism(m, total, maps, check=False)


def is_right_approximation(f: Morphism, gens: list[Module]) -> bool:
    """Every map from add(gens) into f's target factors through f."""
    for g in gens:
        if g.is_zero():
            continue
        for b in hom_space(g, f.target).basis:
            if factor_over(f, b) is None:
                return False
    return True


def is_left_approximation(f: Morphism, gens: list[Module]) -> bool:
    for g in gens:
        if g.is_zero():
            continue
        for b in hom_space(f.source, g).basis:
            if factor_through(f, b) is None:
                return False
    return True


def _strip_right_components(m: Module, gens: list[Module]):
    """Greedy pre-pass: keep a small set of component maps G_j -> M whose
    Hom-images still cover every Hom(G_i, M); minimality is certified later."""
    p = m.algebra.field.p
    comps = [(g, b) for g in gens for b in hom_space(g, m).basis]
    if not comps:
        return comps
    blocks: list[list[np.ndarray]] = []  # blocks[i][j]: rows for gen i, comp j
    full_dims = []
    for gi in gens:
        hi_dim = hom_space(gi, m).dim
        full_dims.append(hi_dim)
        row_blocks = []
        for gj, bj in comps:
            rows = [h.then(bj).vec() for h in hom_space(gi, gj).basis]
            amb = sum(gi.dims[v] * m.dims[v]
                      for v in range(m.algebra.quiver.n))
            row_blocks.append(np.stack(rows, axis=0) if rows
                              else linalg.zeros(0, amb))
        blocks.append(row_blocks)

    def covers(subset: list[int]) -> bool:
        for i, gi in enumerate(gens):
            if full_dims[i] == 0:
                continue
            stacked = np.concatenate([blocks[i][j] for j in subset], axis=0) \
                if subset else blocks[i][0][:0]
            if linalg.rank(stacked, p) < full_dims[i]:
                return False
        return True

    keep = list(range(len(comps)))
    for j in reversed(range(len(comps))):
        trial = [k for k in keep if k != j]
        if covers(trial):
            keep = trial
    return [comps[j] for j in keep]


def _strip_left_components(m: Module, gens: list[Module]):
    p = m.algebra.field.p
    comps = [(g, b) for g in gens for b in hom_space(m, g).basis]
    if not comps:
        return comps
    blocks: list[list[np.ndarray]] = []
    full_dims = []
    for gi in gens:
        hi_dim = hom_space(m, gi).dim
        full_dims.append(hi_dim)
        row_blocks = []
        for gj, bj in comps:
            rows = [bj.then(h).vec() for h in hom_space(gj, gi).basis]
            amb = sum(m.dims[v] * gi.dims[v]
                      for v in range(m.algebra.quiver.n))
            row_blocks.append(np.stack(rows, axis=0) if rows
                              else linalg.zeros(0, amb))
        blocks.append(row_blocks)

    def covers(subset: list[int]) -> bool:
        for i, gi in enumerate(gens):
            if full_dims[i] == 0:
                continue
            stacked = np.concatenate([blocks[i][j] for j in subset], axis=0) \
                if subset else blocks[i][0][:0]
            if linalg.rank(stacked, p) < full_dims[i]:
                return False
        return True

    keep = list(range(len(comps)))
    for j in reversed(range(len(comps))):
        trial = [k for k in keep if k != j]
        if covers(trial):
            keep = trial
    return [comps[j] for j in keep]


def _assemble_right(m: Module, comps) -> Morphism:
    algebra = m.algebra
    p = algebra.field.p
    total, _, prjs = direct_sum([g for g, _ in comps], algebra)
    maps = []
    for v in range(algebra.quiver.n):
        acc = linalg.zeros(total.dims[v], m.dims[v])
        for prj, (_, b) in zip(prjs, comps):
            acc = (acc + linalg.matmul(prj.maps[v], b.maps[v], p)) % p
        maps.append(acc)
    return Morphism(total, m, maps, check=False)


def _assemble_left(m: Module, comps) -> Morphism:
    algebra = m.algebra
    p = algebra.field.p
    total, incs, _ = direct_sum([g for g, _ in comps], algebra)
    maps = []
    for v in range(algebra.quiver.n):
        acc = linalg.zeros(m.dims[v], total.dims[v])
        for inc, (_, b) in zip(incs, comps):
            acc = (acc + linalg.matmul(b.maps[v], inc.maps[v], p)) % p
        maps.append(acc)
    return Morphism(m, total, maps, check=False)


def minimal_right_approx(m: Module, gens: list[Module]) -> Morphism:
    """Right minimal add(gens)-approximation Y -> M."""
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return zero_morphism(zero_module(m.algebra), m)
    comps = _strip_right_components(m, gens)
    if not comps:
        return zero_morphism(zero_module(m.algebra), m)
    return right_minimize(_assemble_right(m, comps))


def minimal_left_approx(m: Module, gens: list[Module]) -> Morphism:
    """Left minimal add(gens)-approximation M -> Y."""
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return zero_morphism(m, zero_module(m.algebra))
    comps = _strip_left_components(m, gens)
    if not comps:
        return zero_morphism(m, zero_module(m.algebra))
    return left_minimize(_assemble_left(m, comps))


# -- injective envelopes -------------------------------------------------------------

def injective_envelope(m: Module) -> Morphism:
    """Essential mono M -> E(M) into the injective hull built on the socle."""
    algebra = m.algebra
    soc = m.socle_rows()
    copies = [(v, row) for v in range(algebra.quiver.n) for row in soc[v]]
    summands = [injective_module(algebra, v) for v, _ in copies]
    total, incs, _ = direct_sum(summands, algebra)
    conditions = []
    for (v, row), inc in zip(copies, incs):
        bucket = algebra.basis_paths_between(v, v)
        triv = bucket.index(algebra.basis_index[(v, ())])
        conditions.append((v, row.reshape(1, -1), None,
                           inc.maps[v][triv].reshape(1, -1)))
    f = constrained_morphism(m, total, conditions)
    if f is None or not f.is_mono():
        raise AssertionError("socle extension to the injective hull failed")
    return f


def is_injective(m: Module) -> bool:
    return injective_envelope(m).is_iso()


def injective_dimension(m: Module, cap: int = 64) -> int:
    x = m
    d = 0
    while not x.is_zero():
        env = injective_envelope(x)
        if env.is_iso():
            return d
        x = cokernel(env)[0]
        d += 1
        if d > cap:
            raise ResourceLimitError(f"injective dimension exceeds {cap}")
    return d


# -- transpose and AR translate --------------------------------------------------------

def _left_mult_morphism(algebra: BoundQuiverAlgebra, coeffs: dict[int, int],
                        v: int, w: int) -> Morphism:
    """P(v) -> P(w) given by left multiplication with an element supported on
    basis paths w -> v."""
    p = algebra.field.p
    pv = projective_module(algebra, v)
    pw = projective_module(algebra, w)
    maps = []
    for u in range(algebra.quiver.n):
        bucket_v = algebra.basis_paths_between(v, u)
        bucket_w = algebra.basis_paths_between(w, u)
        pos_w = {bi: k for k, bi in enumerate(bucket_w)}
        mat = linalg.zeros(len(bucket_v), len(bucket_w))
        for i, bi in enumerate(bucket_v):
            for xj, c in coeffs.items():
                for bk, c2 in algebra.multiply_basis(xj, bi).items():
                    mat[i, pos_w[bk]] = (mat[i, pos_w[bk]] + c * c2) % p
        maps.append(mat)
    return Morphism(pv, pw, maps)


def _path_coordinates(algebra: BoundQuiverAlgebra, f: Morphism,
                      v: int, w: int) -> dict[int, int]:
    """Express f: P(v) -> P(w) as an element on basis paths w -> v."""
    p = algebra.field.p
    basis_paths = algebra.basis_paths_between(w, v)
    if not basis_paths:
        if f.is_zero():
            return {}
        raise AssertionError("nonzero projective map with empty path basis")
    mats = [_left_mult_morphism(algebra, {bi: 1}, v, w) for bi in basis_paths]
    stack = np.stack([m.vec() for m in mats], axis=0)
    sol = linalg.solve_left(stack, f.vec().reshape(1, -1), p)
    if sol is None:
        raise AssertionError("projective morphism outside the path span")
    return {bi: int(c) for bi, c in zip(basis_paths, sol[0]) if c % p}


def transpose(m: Module) -> Module:
    """Tr M over the opposite algebra, from a minimal projective presentation."""
    algebra = m.algebra
    op = algebra.op()
    p = algebra.field.p
    p0, cover0, p0_vertices, p0_incs, p0_prjs = projective_cover(m)
    k, incl = kernel(cover0)
    p1, cover1, p1_vertices, p1_incs, p1_prjs = projective_cover(k)
    d = cover1.then(incl)
    op_p0 = [projective_module(op, w) for w in p0_vertices]
    op_p1 = [projective_module(op, v) for v in p1_vertices]
    total0, incs0, _ = direct_sum(op_p0, op)
    total1, _, prjs1 = direct_sum(op_p1, op)
    t_maps = [linalg.zeros(total0.dims[u], total1.dims[u])
              for u in range(op.quiver.n)]
    for j, vj in enumerate(p1_vertices):
        for i, wi in enumerate(p0_vertices):
            comp = p1_incs[j].then(d).then(p0_prjs[i])
            coords = _path_coordinates(algebra, comp, vj, wi)
            if not coords:
                continue
            rev: dict[int, int] = {}
            for bi, c in coords.items():
                rpath = algebra.reverse_path(algebra.basis[bi])
                for bo, c2 in op.reduce_path(rpath).items():
                    rev[bo] = (rev.get(bo, 0) + c * c2) % p
            comp_op = _left_mult_morphism(op, rev, wi, vj)
            for u in range(op.quiver.n):
                t_maps[u] = (
                    t_maps[u]
                    + incs0[i].maps[u].T @ comp_op.maps[u] @ prjs1[j].maps[u].T
                ) % p
    t = Morphism(total0, total1, t_maps)
    return cokernel(t)[0]


def ar_translate(m: Module) -> Module:
    """tau M = D Tr M; raises on projective input."""
    if is_projective(m):
        raise ValueError("AR translate undefined for projective modules")
    return dual_module(transpose(m))


def ar_translate_inverse(m: Module) -> Module:
    """tau^{-1} M = Tr D M; raises on injective input."""
    if is_injective(m):
        raise ValueError("inverse AR translate undefined for injective modules")
    return transpose(dual_module(m))
