"""Cotilting modules from torsion pairs, and the special approximation
sequences of the associated cotorsion pair.

Detection is construct-then-verify: the candidate C is the sum of the
Ext-injective indecomposables of the torsion-free class, and the three
defining conditions (injective dimension at most one, self-orthogonality,
an add(C)-coresolution of the injective cogenerator) plus the class equality
Cogen(C) = {X : Ext^1(X, C) = 0} = F are all checked explicitly; any failure
reports the failing condition.

Prod is read as add throughout: over a finite-dimensional algebra at desk
scale the two closures agree on finite-dimensional modules.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .exceptions import NotCotiltingError
from .homology import (
    SES, cokernel, hom_space, injective_envelope, is_injective,
    minimal_left_approx, minimal_right_approx,
)
from .modules import Module, direct_sum, injective_module, kernel
from .torsion import TorsionPair
from .universe import bit_indices


@dataclass
class CotiltingData:
    pair: TorsionPair
    cotilting: Module          # C, multiplicity-free sum of indec summands
    add_c_bits: int            # indec summands of C
    c_class_bits: int          # Cogen(C) = perp_1(C); equals the torsion-free bits
    perp_class_bits: int       # (cotilting class)^{perp_1}
    c0: Module
    c1: Module
    injective_cover: SES       # 0 -> C1 -> C0 -> I -> 0

    @property
    def universe(self):
        return self.pair.universe

    def c_class_members(self) -> list[Module]:
        return self.universe.members(self.c_class_bits)

    def perp_members(self) -> list[Module]:
        return self.universe.members(self.perp_class_bits)

    def add_c_members(self) -> list[Module]:
        return self.universe.members(self.add_c_bits)


def cogenerated_bits(u, c: Module) -> int:
    """Bitset of indecomposables X admitting a mono X -> C^k (joint kernel of
    all morphisms X -> C is zero)."""
    p = c.algebra.field.p
    bits = 0
    for i, x in enumerate(u.indecs):
        basis = hom_space(x, c).basis
        mono = True
        for v in range(x.algebra.quiver.n):
            if x.dims[v] == 0:
                continue
            stacked = (
                np.concatenate([f.maps[v] for f in basis], axis=1)
                if basis else linalg.zeros(x.dims[v], 0)
            )
            if linalg.rank(stacked, p) < x.dims[v]:
                mono = False
                break
        if mono:
            bits |= 1 << i
    return bits


def injective_cogenerator(algebra) -> Module:
    return direct_sum(
        [injective_module(algebra, v) for v in range(algebra.quiver.n)],
        algebra,
    )[0]


def cotilting_from_pair(pair: TorsionPair) -> CotiltingData:
    """Build and verify the cotilting structure of a torsion pair."""
    u = pair.universe
    u.require_complete()
    f_bits = pair.torsion_free_bits
    ext_inj = 0
    for i in bit_indices(f_bits):
        if all(u.ext_table[j, i] == 0 for j in bit_indices(f_bits)):
            ext_inj |= 1 << i
    if ext_inj == 0:
        raise NotCotiltingError("the torsion-free class has no Ext-injectives")
    summands = u.members(ext_inj)
    c = direct_sum(summands, u.algebra)[0]

    # condition (1): injective dimension at most one
    env = injective_envelope(c)
    if not env.is_iso():
        cosyzygy = cokernel(env)[0]
        if not is_injective(cosyzygy):
            raise NotCotiltingError("injective dimension of C exceeds 1")
    # condition (2): self-orthogonality, on indecomposable summands
    for i in bit_indices(ext_inj):
        for j in bit_indices(ext_inj):
            if u.ext_table[i, j]:
                raise NotCotiltingError("Ext^1(C, C) != 0")
    # class equality Cogen(C) = perp_1(C) = torsion-free class
    cogen = cogenerated_bits(u, c)
    perp1_of_c = 0
    for x in range(u.n):
        if all(u.ext_table[x, i] == 0 for i in bit_indices(ext_inj)):
            perp1_of_c |= 1 << x
    if cogen != perp1_of_c:
        raise NotCotiltingError("Cogen(C) != perp(C)")
    if cogen != f_bits:
        raise NotCotiltingError("cotilting class differs from the torsion-free class")
    # perpendicular class of the cotilting class
    perp_bits = 0
    for x in range(u.n):
        if all(u.ext_table[i, x] == 0 for i in bit_indices(f_bits)):
            perp_bits |= 1 << x
    if ext_inj != (f_bits & perp_bits):
        raise NotCotiltingError("add(C) differs from C-class intersect perp")

    # condition (3): special cover of the injective cogenerator
    inj = injective_cogenerator(u.algebra)
    g = minimal_right_approx(inj, summands)
    if not g.is_epi():
        raise NotCotiltingError(
            "the add(C)-approximation of the injective cogenerator is not onto"
        )
    c1, incl = kernel(g)
    if u.summand_bitset(c1) & ~ext_inj:
        raise NotCotiltingError(
            "kernel of the injective-cogenerator cover leaves add(C)"
        )
    cover = SES(c1, g.source, inj, incl, g)
    if not cover.validate():
        raise AssertionError("injective cover sequence is not exact")

    return CotiltingData(
        pair=pair,
        cotilting=c,
        add_c_bits=ext_inj,
        c_class_bits=f_bits,
        perp_class_bits=perp_bits,
        c0=g.source,
        c1=c1,
        injective_cover=cover,
    )


def special_cover(m: Module, data: CotiltingData) -> SES:
    """0 -> X -> Y -> M -> 0 with Y in the cotilting class, X in its perp,
    and the epi right minimal."""
    u = data.universe
    f = minimal_right_approx(m, data.c_class_members())
    if not f.is_epi():
        raise AssertionError("cotilting-class approximation is not onto")
    x, incl = kernel(f)
    if u.summand_bitset(x) & ~data.perp_class_bits:
        raise AssertionError("special cover kernel leaves the perp class")
    if u.in_class(m, data.pair.torsion_bits):
        if u.summand_bitset(x) & ~data.add_c_bits:
            raise AssertionError("cover kernel of a torsion module leaves add(C)")
    ses = SES(x, f.source, m, incl, f)
    if not ses.validate():
        raise AssertionError("special cover is not exact")
    return ses


def special_envelope(m: Module, data: CotiltingData) -> SES:
    """0 -> M -> X' -> Y' -> 0 with X' in the perp class, Y' in the cotilting
    class, and the mono left minimal."""
    u = data.universe
    f = minimal_left_approx(m, data.perp_members())
    if not f.is_mono():
        raise AssertionError("perp-class approximation is not mono")
    y, proj = cokernel(f)
    if u.summand_bitset(y) & ~data.c_class_bits:
        raise AssertionError("special envelope cokernel leaves the cotilting class")
    if u.in_class(m, data.c_class_bits):
        if u.summand_bitset(f.target) & ~data.add_c_bits:
            raise AssertionError("envelope of a cotilting-class module leaves add(C)")
    ses = SES(m, f.target, y, f, proj)
    if not ses.validate():
        raise AssertionError("special envelope is not exact")
    return ses


def c0_c1(data: CotiltingData) -> tuple[Module, Module]:
    """Middle and kernel of the special cover of the injective cogenerator."""
    return data.c0, data.c1


def minimal_cotilting(data: CotiltingData, envelope_modules: list[Module]) -> Module:
    """Special perp-envelope target of the sum of the heart-simple injective
    envelopes; verified cotilting with the same class."""
    u = data.universe
    total = direct_sum(list(envelope_modules), u.algebra)[0]
    ses = special_envelope(total, data)
    tilde = ses.middle
    if cogenerated_bits(u, tilde) != data.c_class_bits:
        raise AssertionError("minimal cotilting module has a different class")
    if u.summand_bitset(tilde) & ~data.add_c_bits:
        raise AssertionError("minimal cotilting module leaves add(C)")
    return tilde
