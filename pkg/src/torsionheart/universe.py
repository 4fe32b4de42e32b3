"""Enumerate all indecomposables under a dimension bound and certify that the
collection is closed under the operations the torsion-theoretic layers need.

The enumeration is a plain scan over arrow-matrix tuples in deterministic
lexicographic order, pruned by two exact decomposability filters (a detached
simple summand at a vertex, and a disconnected support graph) before the full
idempotent test.  Completeness is a certificate for representation-finite
algebras with a big enough bound, not a decision procedure.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

import numpy as np

from . import linalg
from .algebra import BoundQuiverAlgebra
from .config import DEFAULT_CAPS, ResourceCaps
from .exceptions import IncompleteUniverseError, ResourceLimitError
from .homology import (
    ar_translate, ar_translate_inverse, ext1, hom_dim,
    is_injective, is_projective,
)
from .krull import decompose, is_indecomposable, is_isomorphic
from .modules import (
    Module, direct_sum, quotient_by_rows, simple_module,
    submodule_from_rows,
)


def _dim_vectors(bound: tuple[int, ...]):
    """Nonzero dimension vectors <= bound in graded lexicographic order."""
    all_vecs = [v for v in product(*(range(b + 1) for b in bound)) if sum(v)]
    return sorted(all_vecs, key=lambda v: (sum(v), v))


def _support_connected(m: Module) -> bool:
    q = m.algebra.quiver
    supp = [v for v in range(q.n) if m.dims[v]]
    if len(supp) <= 1:
        return True
    parent = {v: v for v in supp}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for ai, arrow in enumerate(q.arrows):
        if m.dims[arrow.source] and m.dims[arrow.target] and m.maps[ai].any():
            a, b = find(arrow.source), find(arrow.target)
            parent[a] = b
    return len({find(v) for v in supp}) == 1


def _detached_simple(m: Module) -> bool:
    """True when some S(v) splits off: socle not inside the radical at v."""
    if m.total_dim <= 1:
        return False
    p = m.algebra.field.p
    rad = m.radical_rows()
    soc = m.socle_rows()
    for v in range(m.algebra.quiver.n):
        if soc[v].shape[0] == 0:
            continue
        joint = np.concatenate([rad[v], soc[v]], axis=0)
        if linalg.rank(joint, p) > linalg.rank(rad[v], p):
            return True
    return False


@dataclass
class IndecUniverse:
    algebra: BoundQuiverAlgebra
    dim_bound: tuple[int, ...]
    indecs: tuple[Module, ...]
    hom_table: np.ndarray
    ext_table: np.ndarray
    complete: bool
    witness: str | None
    caps: ResourceCaps = DEFAULT_CAPS
    _index_cache: dict = field(default_factory=dict, repr=False)
    _bitset_cache: dict = field(default_factory=dict, repr=False)
    _submodule_cache: dict = field(default_factory=dict, repr=False)
    _ext_middle_cache: dict = field(default_factory=dict, repr=False)
    _max_sub_cache: dict = field(default_factory=dict, repr=False)
    _simple_quot_cache: dict = field(default_factory=dict, repr=False)

    @property
    def n(self) -> int:
        return len(self.indecs)

    @property
    def all_bits(self) -> int:
        return (1 << self.n) - 1

    def require_complete(self):
        if not self.complete:
            raise IncompleteUniverseError(self.witness or "closure failed")

    # -- membership -----------------------------------------------------

    def index_of(self, m: Module):
        """Universe index of the iso class of an indecomposable, or None."""
        if m.is_zero():
            return None
        cached = self._index_cache.get(m.key, "?")
        if cached != "?":
            return cached
        out = None
        for i, x in enumerate(self.indecs):
            if x.dims == m.dims and is_isomorphic(m, x, self.caps):
                out = i
                break
        self._index_cache[m.key] = out
        return out

    def summand_bitset(self, m: Module) -> int:
        """Bitset of the iso classes of the indecomposable summands of M.

        Raises IncompleteUniverseError when a summand escapes the universe.
        """
        if m.is_zero():
            return 0
        cached = self._bitset_cache.get(m.key)
        if cached is not None:
            return cached
        bits = 0
        for piece, _ in decompose(m, self.caps):
            idx = self.index_of(piece)
            if idx is None:
                raise IncompleteUniverseError(
                    f"summand of dims {piece.dims} is outside the universe"
                )
            bits |= 1 << idx
        self._bitset_cache[m.key] = bits
        return bits

    def in_class(self, m: Module, bits: int) -> bool:
        """Module lies in add of the members flagged by bits."""
        return self.summand_bitset(m) & ~bits == 0

    def members(self, bits: int) -> list[Module]:
        return [self.indecs[i] for i in bit_indices(bits)]

    def sum_module(self, counts: dict[int, int]) -> Module:
        parts = []
        for i in sorted(counts):
            parts.extend([self.indecs[i]] * counts[i])
        return direct_sum(parts, self.algebra)[0]

    # -- oracles ----------------------------------------------------------

    def all_submodules(self, m: Module):
        key = m.key
        got = self._submodule_cache.get(key)
        if got is None:
            got = all_submodules(m, self.caps)
            self._submodule_cache[key] = got
        return got

    def all_quotients(self, m: Module):
        return all_quotients(m, self.caps)

    def maximal_submodules(self, i: int) -> list[Module]:
        got = self._max_sub_cache.get(i)
        if got is None:
            got = maximal_submodules(self.indecs[i])
            self._max_sub_cache[i] = got
        return got

    def simple_socle_quotients(self, i: int) -> list[Module]:
        got = self._simple_quot_cache.get(i)
        if got is None:
            got = simple_socle_quotients(self.indecs[i])
            self._simple_quot_cache[i] = got
        return got

    def ext_middle_bitsets(self, i: int, j: int):
        """[(coeffs, middle bitset, middle)] over all classes in
        Ext^1(indec_i, indec_j)."""
        key = (i, j)
        got = self._ext_middle_cache.get(key)
        if got is None:
            got = []
            space = ext1(self.indecs[i], self.indecs[j])
            for coeffs, ses in space.all_classes(self.caps):
                got.append((tuple(int(c) for c in coeffs),
                            self.summand_bitset(ses.middle), ses))
            self._ext_middle_cache[key] = got
        return got


def bit_indices(bits: int) -> list[int]:
    out = []
    i = 0
    while bits:
        if bits & 1:
            out.append(i)
        bits >>= 1
        i += 1
    return out


def popcount(bits: int) -> int:
    return bin(bits).count("1")


def enumerate_indecomposables(algebra: BoundQuiverAlgebra,
                              dim_bound,
                              caps: ResourceCaps = DEFAULT_CAPS,
                              check_completeness: bool = True) -> IndecUniverse:
    bound = tuple(int(b) for b in dim_bound)
    q = algebra.quiver
    if len(bound) != q.n:
        raise ValueError("dimension bound length does not match the vertex count")
    if any(b > caps.dim_bound_cap for b in bound):
        raise ResourceLimitError(
            f"dimension bound exceeds the per-vertex cap {caps.dim_bound_cap}"
        )
    p = algebra.field.p
    found: list[Module] = []
    fingerprints: list[tuple] = []
    simples = [simple_module(algebra, v) for v in range(q.n)]
    for dims in _dim_vectors(bound):
        shapes = [(dims[a.source], dims[a.target]) for a in q.arrows]
        entries = sum(r * c for r, c in shapes)
        if p ** entries > caps.candidate_cap:
            raise ResourceLimitError(
                f"candidate scan at dims {dims} needs {p}^{entries} tuples"
            )
        for flat in product(range(p), repeat=entries):
            maps = []
            off = 0
            for r, c in shapes:
                maps.append(np.array(flat[off:off + r * c],
                                     dtype=np.int64).reshape(r, c))
                off += r * c
            try:
                cand = Module(algebra, dims, maps, check=True)
            except ValueError:
                continue
            if not _support_connected(cand) or _detached_simple(cand):
                continue
            if not is_indecomposable(cand, caps):
                continue
            fp = _fingerprint(cand, simples)
            is_new = True
            for i, other_fp in enumerate(fingerprints):
                if fp == other_fp and is_isomorphic(cand, found[i], caps):
                    is_new = False
                    break
            if is_new:
                found.append(cand)
                fingerprints.append(fp)
    n = len(found)
    hom_table = np.zeros((n, n), dtype=np.int64)
    ext_table = np.zeros((n, n), dtype=np.int64)
    for i in range(n):
        for j in range(n):
            hom_table[i, j] = hom_dim(found[i], found[j])
            ext_table[i, j] = ext1(found[i], found[j]).dim
    universe = IndecUniverse(algebra, bound, tuple(found), hom_table,
                             ext_table, complete=False, witness=None, caps=caps)
    if check_completeness:
        ok, witness = completeness_check(universe)
        universe.complete = ok
        universe.witness = witness
    return universe


def _fingerprint(m: Module, simples: list[Module]) -> tuple:
    return (
        m.dims,
        hom_dim(m, m),
        tuple(hom_dim(m, s) for s in simples),
        tuple(hom_dim(s, m) for s in simples),
    )


def completeness_check(universe: IndecUniverse) -> tuple[bool, str | None]:
    """Closure of the universe under kernels, cokernels, images of all
    morphisms between members, middle-term summands of all Ext classes, AR
    translates where defined, and socles and tops."""
    from .modules import cokernel, image, kernel

    u = universe
    p = u.algebra.field.p

    def check_member(m: Module, what: str):
        if m.is_zero():
            return None
        for piece, _ in decompose(m, u.caps):
            idx = None
            for i, x in enumerate(u.indecs):
                if x.dims == piece.dims and is_isomorphic(piece, x, u.caps):
                    idx = i
                    break
            if idx is None:
                return f"{what} has summand of dims {piece.dims} outside"
        return None

    from .homology import hom_space
    for i, x in enumerate(u.indecs):
        for j, y in enumerate(u.indecs):
            h = hom_space(x, y)
            d = h.dim
            if d == 0:
                continue
            if p ** d > u.caps.scan_count_cap:
                raise ResourceLimitError("morphism scan too large")
            mat = np.stack([b.vec() for b in h.basis], axis=0)
            from .modules import unvec_morphism
            for coeffs in linalg.nonzero_vectors(d, p):
                f = unvec_morphism(x, y, (coeffs @ mat) % p)
                for m, what in ((kernel(f)[0], f"kernel of map {i}->{j}"),
                                (image(f)[0], f"image of map {i}->{j}"),
                                (cokernel(f)[0], f"cokernel of map {i}->{j}")):
                    w = check_member(m, what)
                    if w:
                        return False, w
    for i in range(u.n):
        for j in range(u.n):
            space = ext1(u.indecs[i], u.indecs[j])
            if space.dim == 0:
                continue
            try:
                for coeffs, ses in space.all_classes(u.caps):
                    w = check_member(ses.middle, f"ext middle {i} by {j}")
                    if w:
                        return False, w
            except ResourceLimitError:
                return False, f"ext scan {i},{j} exceeds caps"
    for i, x in enumerate(u.indecs):
        if not is_projective(x):
            w = check_member(ar_translate(x), f"AR translate of {i}")
            if w:
                return False, w
        if not is_injective(x):
            w = check_member(ar_translate_inverse(x), f"inverse AR translate of {i}")
            if w:
                return False, w
    for i, x in enumerate(u.indecs):
        soc = x.socle_rows()
        top_dims = []
        rad = x.radical_rows()
        for v in range(u.algebra.quiver.n):
            if soc[v].shape[0] and u.index_of(simple_module(u.algebra, v)) is None:
                return False, f"socle simple at vertex {v} outside"
            if x.dims[v] - linalg.rank(rad[v], p) > 0 \
                    and u.index_of(simple_module(u.algebra, v)) is None:
                return False, f"top simple at vertex {v} outside"
    return True, None


# -- brute-force oracles ------------------------------------------------------

def all_submodules(m: Module, caps: ResourceCaps = DEFAULT_CAPS):
    """Every subrepresentation exactly once, as (module, inclusion)."""
    if m.total_dim > caps.submodule_dim_cap:
        raise ResourceLimitError(
            f"submodule scan gate: total dim {m.total_dim} > "
            f"{caps.submodule_dim_cap}"
        )
    p = m.algebra.field.p
    q = m.algebra.quiver
    per_vertex = [list(linalg.subspace_bases(m.dims[v], p)) for v in range(q.n)]
    out = []
    for choice in product(*per_vertex):
        stable = True
        for ai, arrow in enumerate(q.arrows):
            v, w = arrow.source, arrow.target
            if choice[v].shape[0] == 0:
                continue
            img = linalg.matmul(choice[v], m.maps[ai], p)
            if linalg.solve_left(choice[w], img, p) is None:
                stable = False
                break
        if stable:
            out.append(submodule_from_rows(m, list(choice)))
    return out


def all_quotients(m: Module, caps: ResourceCaps = DEFAULT_CAPS):
    """Every quotient exactly once, as (module, projection)."""
    out = []
    p = m.algebra.field.p
    for sub, incl in all_submodules(m, caps):
        rows = [incl.maps[v] for v in range(m.algebra.quiver.n)]
        out.append(quotient_by_rows(m, rows))
    return out


def maximal_submodules(m: Module) -> list[Module]:
    """Maximal submodules = preimages of top hyperplanes at single vertices."""
    p = m.algebra.field.p
    q = m.algebra.quiver
    rad = m.radical_rows()
    out = []
    for v in range(q.n):
        r, pivots = linalg.rref(rad[v], p)
        lifts = [j for j in range(m.dims[v]) if j not in pivots]
        t = len(lifts)
        if t == 0:
            continue
        lift_mat = linalg.zeros(t, m.dims[v])
        for k, j in enumerate(lifts):
            lift_mat[k, j] = 1
        for hyper in linalg.subspace_bases(t, p):
            if hyper.shape[0] != t - 1:
                continue
            rows_v = np.concatenate(
                [rad[v], linalg.matmul(hyper, lift_mat, p)], axis=0,
            ) if hyper.shape[0] else rad[v]
            rows = [
                linalg.eye(m.dims[w]) if w != v else rows_v
                for w in range(q.n)
            ]
            out.append(submodule_from_rows(m, rows)[0])
    return out


def simple_socle_quotients(m: Module) -> list[Module]:
    """Quotients M/S over all simple submodules S (lines in the socle)."""
    p = m.algebra.field.p
    q = m.algebra.quiver
    soc = m.socle_rows()
    out = []
    for v in range(q.n):
        s = soc[v].shape[0]
        if s == 0:
            continue
        for line in linalg.subspace_bases(s, p):
            if line.shape[0] != 1:
                continue
            rows = [
                linalg.zeros(0, m.dims[w]) if w != v
                else linalg.matmul(line, soc[v], p)
                for w in range(q.n)
            ]
            out.append(quotient_by_rows(m, rows)[0])
    return out
