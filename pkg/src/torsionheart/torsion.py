"""Torsion pairs over a complete universe of indecomposables.

Classes are bitsets over universe indices.  The closure operator iterates two
precomputed tables, indecomposable summands of quotients of single members and
of middle terms of extensions between pairs of members; iterated to a
fixpoint this generates the torsion class (any finite filtration is built
from two-step extensions), and the tests discharge the closure axioms against
arbitrary members by the brute-force oracles.
"""

from __future__ import annotations

from dataclasses import dataclass

from .homology import SES, hom_space
from .modules import Module, cokernel, submodule_from_rows
from .universe import IndecUniverse, bit_indices

from . import linalg


_QUOT_CACHE_ATTR = "_quotient_summand_bits"
_SUB_CACHE_ATTR = "_submodule_summand_bits"
_MID_CACHE_ATTR = "_ext_middle_union_bits"


def quotient_summand_bits(u: IndecUniverse, i: int) -> int:
    cache = getattr(u, _QUOT_CACHE_ATTR, None)
    if cache is None:
        cache = {}
        setattr(u, _QUOT_CACHE_ATTR, cache)
    got = cache.get(i)
    if got is None:
        bits = 0
        for quot, _ in u.all_quotients(u.indecs[i]):
            bits |= u.summand_bitset(quot)
        cache[i] = got = bits
    return got


def submodule_summand_bits(u: IndecUniverse, i: int) -> int:
    cache = getattr(u, _SUB_CACHE_ATTR, None)
    if cache is None:
        cache = {}
        setattr(u, _SUB_CACHE_ATTR, cache)
    got = cache.get(i)
    if got is None:
        bits = 0
        for sub, _ in u.all_submodules(u.indecs[i]):
            bits |= u.summand_bitset(sub)
        cache[i] = got = bits
    return got


def ext_middle_union_bits(u: IndecUniverse, i: int, j: int) -> int:
    cache = getattr(u, _MID_CACHE_ATTR, None)
    if cache is None:
        cache = {}
        setattr(u, _MID_CACHE_ATTR, cache)
    got = cache.get((i, j))
    if got is None:
        bits = 0
        for _, middle_bits, _ in u.ext_middle_bitsets(i, j):
            bits |= middle_bits
        cache[(i, j)] = got = bits
    return got


@dataclass(frozen=True)
class TorsionPair:
    universe: IndecUniverse
    torsion_bits: int
    torsion_free_bits: int

    def torsion_members(self) -> list[Module]:
        return self.universe.members(self.torsion_bits)

    def torsion_free_members(self) -> list[Module]:
        return self.universe.members(self.torsion_free_bits)

    def is_torsion(self, m: Module) -> bool:
        return self.universe.in_class(m, self.torsion_bits)

    def is_torsion_free(self, m: Module) -> bool:
        return self.universe.in_class(m, self.torsion_free_bits)

    def __repr__(self):
        return (f"TorsionPair(T={sorted(bit_indices(self.torsion_bits))}, "
                f"F={sorted(bit_indices(self.torsion_free_bits))})")


def torsion_closure(gens, u: IndecUniverse) -> int:
    """Smallest torsion class containing the generators (modules or bitset)."""
    u.require_complete()
    if isinstance(gens, int):
        bits = gens
    else:
        bits = 0
        for g in gens:
            bits |= u.summand_bitset(g)
    while True:
        new = bits
        for i in bit_indices(bits):
            new |= quotient_summand_bits(u, i)
        for i in bit_indices(bits):
            for j in bit_indices(bits):
                new |= ext_middle_union_bits(u, i, j)
        if new == bits:
            return bits
        bits = new


def is_torsion_class(u: IndecUniverse, bits: int) -> bool:
    return torsion_closure(bits, u) == bits


def pair_from_torsion_class(t_bits: int, u: IndecUniverse) -> TorsionPair:
    """The pair (T, T^{perp_0}); raises when T is not closed."""
    u.require_complete()
    if not is_torsion_class(u, t_bits):
        raise ValueError("the given class is not closed under quotients and "
                         "extensions")
    f_bits = 0
    for x in range(u.n):
        if all(u.hom_table[t, x] == 0 for t in bit_indices(t_bits)):
            f_bits |= 1 << x
    pair = TorsionPair(u, t_bits, f_bits)
    _validate_pair(pair)
    return pair


def _validate_pair(pair: TorsionPair):
    u = pair.universe
    for t in bit_indices(pair.torsion_bits):
        for f in bit_indices(pair.torsion_free_bits):
            if u.hom_table[t, f]:
                raise AssertionError("Hom(T, F) != 0 in a torsion pair")
    for i in bit_indices(pair.torsion_free_bits):
        if submodule_summand_bits(u, i) & ~pair.torsion_free_bits:
            raise AssertionError("torsion-free class not closed under submodules")
        for j in bit_indices(pair.torsion_free_bits):
            if ext_middle_union_bits(u, i, j) & ~pair.torsion_free_bits:
                raise AssertionError("torsion-free class not closed under extensions")


def torsion_part(x: Module, pair: TorsionPair):
    """(t(X), inclusion, canonical SES 0 -> t(X) -> X -> X/t(X) -> 0)."""
    u = pair.universe
    p = x.algebra.field.p
    rows = [linalg.zeros(0, x.dims[v]) for v in range(x.algebra.quiver.n)]
    mats = [[] for _ in range(x.algebra.quiver.n)]
    for t in bit_indices(pair.torsion_bits):
        for f in hom_space(u.indecs[t], x).basis:
            for v in range(x.algebra.quiver.n):
                mats[v].append(f.maps[v])
    rows = [
        linalg.sum_row_spaces(mats[v], x.dims[v], p)
        for v in range(x.algebra.quiver.n)
    ]
    t_x, incl = submodule_from_rows(x, rows)
    quot, proj = cokernel(incl)
    if not u.in_class(t_x, pair.torsion_bits):
        raise AssertionError("trace is not torsion")
    if not u.in_class(quot, pair.torsion_free_bits):
        raise AssertionError("canonical quotient is not torsion-free")
    return t_x, incl, SES(t_x, x, quot, incl, proj)


def is_hereditary(pair: TorsionPair) -> bool:
    """Torsion class closed under submodules (checked by the oracle)."""
    u = pair.universe
    return all(
        submodule_summand_bits(u, i) & ~pair.torsion_bits == 0
        for i in bit_indices(pair.torsion_bits)
    )
