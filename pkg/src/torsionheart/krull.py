"""Krull-Schmidt decomposition, isomorphism testing and brick detection.

Idempotents are found by factoring minimal polynomials of endomorphisms: any
element whose minimal polynomial splits into two coprime parts yields a
nontrivial idempotent by CRT, and a decomposable module always exposes one
(its projections are endomorphisms with minimal polynomial t(t-1)).  The
search scans the basis, pairwise sums, seeded random combinations, and falls
back to exhaustive enumeration while p^dim stays below the cap; beyond that
it raises UndeterminedError rather than guessing.

Brick detection is fully deterministic: a finite division ring is a field
(Wedderburn), so End(M) is a division ring iff it is commutative, has zero
nilradical, and the Frobenius fixed space ker(x -> x^p - x) is one
dimensional.  Both kernels are F_p-linear in the commutative case.
"""

from __future__ import annotations

import random

import numpy as np
import sympy

from . import linalg
from .config import DEFAULT_CAPS, ResourceCaps
from .exceptions import UndeterminedError
from .homology import HomSpace, hom_space
from .modules import (
    Module, Morphism, identity_morphism, submodule_from_rows, unvec_morphism,
)

_T = sympy.Symbol("t")


def operator_matrix(f: Morphism) -> np.ndarray:
    """Block diagonal matrix of an endomorphism acting on the total space."""
    n = sum(f.source.dims)
    out = linalg.zeros(n, n)
    off = 0
    for v in range(f.source.algebra.quiver.n):
        d = f.source.dims[v]
        out[off:off + d, off:off + d] = f.maps[v]
        off += d
    return out


def operator_min_poly(f: Morphism, p: int) -> list[int]:
    """Minimal polynomial of the endomorphism, low-degree-first coefficients."""
    return linalg.minimal_polynomial(operator_matrix(f), p)


def _endo_from_poly(coeffs: list[int], f: Morphism, p: int) -> Morphism:
    maps = [linalg.poly_eval_matrix(coeffs, f.maps[v], p)
            for v in range(f.source.algebra.quiver.n)]
    return Morphism(f.source, f.source, maps, check=False)


def _low_coeffs(poly: sympy.Poly, p: int) -> list[int]:
    return [int(c) % p for c in reversed(poly.all_coeffs())]


def _poly_from_low(coeffs: list[int], p: int) -> sympy.Poly:
    return sympy.Poly(list(reversed(coeffs)), _T, modulus=p)


def _crt_idempotent_poly(f1: sympy.Poly, f2: sympy.Poly, p: int) -> list[int]:
    """Low-first coefficients of u*f1 where u*f1 + v*f2 == 1."""
    u, v, h = f1.gcdex(f2)
    if h.degree() != 0:
        raise AssertionError("expected coprime factors")
    c = int(h.all_coeffs()[0]) % p
    u = u * linalg.inv_mod(c, p)
    return _low_coeffs(u * f1, p)


def poly_idempotent(f: Morphism, p: int, zero_constant: bool = False):
    """A nontrivial idempotent in k[f], or None when the minimal polynomial is
    primary.  With zero_constant=True the split is (t^s, rest), so the result
    has no constant term and stays inside any ideal containing f."""
    mp = operator_min_poly(f, p)
    if zero_constant:
        deg = len(mp) - 1
        s = 0
        while s < len(mp) and mp[s] % p == 0:
            s += 1
        if s == 0 or s >= deg:
            # s == 0: f invertible (caller's business); s == deg: f nilpotent
            return None
        f1 = _poly_from_low([0] * s + [1], p)
        f2 = _poly_from_low(mp[s:], p)
    else:
        poly = _poly_from_low(mp, p)
        _, factors = poly.factor_list()
        if len(factors) < 2:
            return None
        base, mult = factors[0]
        f1 = base ** mult
        f2 = poly.div(f1)[0]
    e_coeffs = _crt_idempotent_poly(f1, f2, p)
    e = _endo_from_poly(e_coeffs, f, p)
    if e.then(e) != e:
        raise AssertionError("CRT element is not idempotent")
    return e


def _seeded_rng(m: Module) -> random.Random:
    return random.Random(int(m.key[:12], 16))


def _idempotent_candidates(end: HomSpace, m: Module, p: int,
                           caps: ResourceCaps):
    """Yield nonzero elements of End(M) in a deterministic order: basis,
    pairwise sums, seeded random combinations, then exhaustive if feasible."""
    basis = list(end.basis)
    for b in basis:
        yield b, False
    for i, a in enumerate(basis):
        for b in basis[i + 1:]:
            yield a.add(b), False
    d = len(basis)
    exhaustible = p ** d <= caps.scan_count_cap
    if not exhaustible:
        rng = _seeded_rng(m)
        mat = np.stack([b.vec() for b in basis], axis=0)
        for _ in range(caps.random_tries):
            coeffs = np.array([rng.randrange(p) for _ in range(d)],
                              dtype=np.int64)
            if not coeffs.any():
                continue
            yield unvec_morphism(m, m, (coeffs @ mat) % p), False
    else:
        mat = np.stack([b.vec() for b in basis], axis=0)
        for coeffs in linalg.nonzero_vectors(d, p):
            yield unvec_morphism(m, m, (coeffs @ mat) % p), True


def nontrivial_idempotent(m: Module, caps: ResourceCaps = DEFAULT_CAPS):
    """A nontrivial idempotent endomorphism, or None when End(M) is local.

    Raises UndeterminedError when neither a witness nor an exhaustive
    certificate is reachable within the caps.
    """
    if m.is_zero():
        return None
    p = m.algebra.field.p
    end = hom_space(m, m)
    if end.dim == 1:
        return None
    ident = identity_morphism(m)
    exhausted = False
    for x, from_exhaustive in _idempotent_candidates(end, m, p, caps):
        exhausted = from_exhaustive
        e = poly_idempotent(x, p, zero_constant=False)
        if e is not None and not e.is_zero() and e != ident:
            return e
    if exhausted or p ** end.dim <= caps.scan_count_cap:
        return None
    if _is_commutative(end, p):
        return _commutative_idempotent(end, m, p)
    raise UndeterminedError(
        "idempotent search exhausted its budget on a non-commutative "
        "endomorphism algebra"
    )


def _is_commutative(end: HomSpace, p: int) -> bool:
    for i, a in enumerate(end.basis):
        for b in end.basis[i + 1:]:
            if a.then(b) != b.then(a):
                return False
    return True


def _endo_power(f: Morphism, e: int, p: int) -> Morphism:
    result = identity_morphism(f.source)
    base = f
    while e:
        if e & 1:
            result = result.then(base)
        base = base.then(base)
        e >>= 1
    return result


def _frobenius_matrix(end: HomSpace, p: int) -> np.ndarray:
    """Matrix of x -> x^p in basis coordinates (commutative End only)."""
    rows = [end.coords_of(_endo_power(b, p, p)) for b in end.basis]
    return np.stack(rows, axis=0)


def _nilradical_dim(end: HomSpace, p: int) -> int:
    """Dimension of the nilradical of a commutative End via iterated Frobenius."""
    total = sum(end.source.dims)
    frob = _frobenius_matrix(end, p)
    power = linalg.eye(end.dim)
    steps = 1
    while p ** steps < max(total, 2):
        steps += 1
    for _ in range(steps):
        power = linalg.matmul(power, frob, p)
    return end.dim - linalg.rank(power, p)


def _commutative_idempotent(end: HomSpace, m: Module, p: int):
    """Deterministic idempotent search in a commutative End(M)."""
    frob = _frobenius_matrix(end, p)
    fixed = linalg.left_nullspace((frob - linalg.eye(end.dim)) % p, p)
    if fixed.shape[0] <= 1:
        return None  # local: the fixed space is spanned by the identity
    id_coords = end.coords_of(identity_morphism(m)).reshape(1, -1)
    for row in fixed:
        stacked = np.concatenate([id_coords, row.reshape(1, -1)], axis=0)
        if linalg.rank(stacked, p) == 2:
            u = end.from_coords(row)
            e = poly_idempotent(u, p, zero_constant=False)
            if e is not None and not e.is_zero() and e != identity_morphism(m):
                return e
    raise AssertionError("commutative split promised but not found")


def is_indecomposable(m: Module, caps: ResourceCaps = DEFAULT_CAPS) -> bool:
    if m.is_zero():
        return False
    return nontrivial_idempotent(m, caps) is None


def _split_by_idempotent(m: Module, e: Morphism):
    """M = ker(e) + im(e) with inclusion morphisms."""
    p = m.algebra.field.p
    ker_rows = [linalg.left_nullspace(e.maps[v], p)
                for v in range(m.algebra.quiver.n)]
    im_rows = [linalg.row_space(e.maps[v], p)
               for v in range(m.algebra.quiver.n)]
    k, ik = submodule_from_rows(m, ker_rows)
    i, ii = submodule_from_rows(m, im_rows)
    return (k, ik), (i, ii)


def indecomposable_summands(m: Module, caps: ResourceCaps = DEFAULT_CAPS):
    """List of (indecomposable piece, inclusion into M)."""
    if m.is_zero():
        return []
    e = nontrivial_idempotent(m, caps)
    if e is None:
        return [(m, identity_morphism(m))]
    (k, ik), (i, ii) = _split_by_idempotent(m, e)
    out = []
    for piece, incl in indecomposable_summands(k, caps):
        out.append((piece, incl.then(ik)))
    for piece, incl in indecomposable_summands(i, caps):
        out.append((piece, incl.then(ii)))
    return out


def decompose_with_iso(m: Module, caps: ResourceCaps = DEFAULT_CAPS):
    """(pieces, iso) with iso: (+) pieces -> M an explicit isomorphism."""
    from .modules import direct_sum

    parts = indecomposable_summands(m, caps)
    pieces = [piece for piece, _ in parts]
    total, _, prjs = direct_sum(pieces, m.algebra)
    p = m.algebra.field.p
    maps = []
    for v in range(m.algebra.quiver.n):
        acc = linalg.zeros(total.dims[v], m.dims[v])
        for prj, (_, incl) in zip(prjs, parts):
            acc = (acc + linalg.matmul(prj.maps[v], incl.maps[v], p)) % p
        maps.append(acc)
    iso = Morphism(total, m, maps, check=False)
    if not iso.is_iso():
        raise AssertionError("decomposition glue map is not an isomorphism")
    return pieces, iso


def decompose(m: Module, caps: ResourceCaps = DEFAULT_CAPS):
    """List of (indecomposable, multiplicity), grouped up to isomorphism."""
    pieces, _ = decompose_with_iso(m, caps)
    groups: list[tuple[Module, int]] = []
    for piece in pieces:
        for idx, (rep, mult) in enumerate(groups):
            if is_isomorphic(piece, rep, caps):
                groups[idx] = (rep, mult + 1)
                break
        else:
            groups.append((piece, 1))
    return groups


def is_brick(m: Module) -> bool:
    """True iff End(M) is a division ring; deterministic, no sampling."""
    if m.is_zero():
        raise ValueError("the zero module is not a brick")
    p = m.algebra.field.p
    end = hom_space(m, m)
    if end.dim == 1:
        return True
    if not _is_commutative(end, p):
        return False  # finite division rings are commutative
    if _nilradical_dim(end, p) > 0:
        return False
    frob = _frobenius_matrix(end, p)
    fixed = linalg.left_nullspace((frob - linalg.eye(end.dim)) % p, p)
    return fixed.shape[0] == 1


def isomorphism(m: Module, n: Module, caps: ResourceCaps = DEFAULT_CAPS):
    """An isomorphism M -> N, or None; UndeterminedError above the caps."""
    if m.dims != n.dims:
        return None
    if m.is_zero():
        from .modules import zero_morphism
        return zero_morphism(m, n)
    p = m.algebra.field.p
    h = hom_space(m, n)
    if h.dim == 0 or hom_dim_pair_mismatch(m, n):
        return None
    for b in h.basis:
        if b.is_iso():
            return b
    d = h.dim
    mat = np.stack([b.vec() for b in h.basis], axis=0)
    rng = random.Random(int(m.key[:8] + n.key[:8], 16))
    for _ in range(caps.random_tries):
        coeffs = np.array([rng.randrange(p) for _ in range(d)], dtype=np.int64)
        if not coeffs.any():
            continue
        f = unvec_morphism(m, n, (coeffs @ mat) % p)
        if f.is_iso():
            return f
    if p ** d <= caps.scan_count_cap:
        for coeffs in linalg.nonzero_vectors(d, p):
            f = unvec_morphism(m, n, (coeffs @ mat) % p)
            if f.is_iso():
                return f
        return None
    raise UndeterminedError("isomorphism search exhausted its budget")


def hom_dim_pair_mismatch(m: Module, n: Module) -> bool:
    return (hom_space(m, m).dim != hom_space(n, n).dim
            or hom_space(m, n).dim != hom_space(n, m).dim)


def is_isomorphic(m: Module, n: Module, caps: ResourceCaps = DEFAULT_CAPS) -> bool:
    return isomorphism(m, n, caps) is not None
