"""The lattice of torsion classes: enumeration, Hasse covers, brick labels.

Every subset of the universe is closed to a torsion class and the distinct
results form the lattice; covers come from the inclusion order.  A cover
T > U is labelled by the unique torsion almost torsion-free module S of the
pair attached to T with U = T intersect perp(S); the correspondence between
labels incident to a cotilting class and its heart simples is a tested
property, not an assumption.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .exceptions import ResourceLimitError
from .heart import heart_simples
from .krull import is_brick
from .modules import Module
from .torsion import TorsionPair, pair_from_torsion_class, torsion_closure
from .universe import IndecUniverse, bit_indices, popcount


@dataclass(frozen=True)
class Cover:
    upper: int          # index into TorsLattice.classes
    lower: int
    label_index: int    # universe index of the labelling brick


@dataclass
class TorsLattice:
    universe: IndecUniverse
    classes: list[int]               # bitsets, sorted by (popcount, value)
    covers: list[Cover]
    _pair_cache: dict = None

    def __post_init__(self):
        if self._pair_cache is None:
            self._pair_cache = {}

    @property
    def n(self) -> int:
        return len(self.classes)

    def class_index(self, bits: int) -> int:
        try:
            return self.classes.index(bits)
        except ValueError:
            raise ValueError("torsion class not present in the lattice") from None

    def pair_of(self, idx: int) -> TorsionPair:
        got = self._pair_cache.get(idx)
        if got is None:
            got = pair_from_torsion_class(self.classes[idx], self.universe)
            self._pair_cache[idx] = got
        return got

    def leq(self, i: int, j: int) -> bool:
        return self.classes[i] & ~self.classes[j] == 0

    def covers_of(self, idx: int):
        """(down covers with idx on top, up covers with idx at bottom)."""
        down = [c for c in self.covers if c.upper == idx]
        up = [c for c in self.covers if c.lower == idx]
        return down, up


def enumerate_torsion_classes(u: IndecUniverse) -> TorsLattice:
    """All torsion classes as closures of all subsets, with Hasse covers."""
    u.require_complete()
    if u.n > u.caps.lattice_indec_cap:
        raise ResourceLimitError(
            f"lattice scan gate: {u.n} indecomposables exceed the cap"
        )
    seen: set[int] = set()
    for r in range(u.n + 1):
        for subset in combinations(range(u.n), r):
            bits = 0
            for i in subset:
                bits |= 1 << i
            seen.add(torsion_closure(bits, u))
    classes = sorted(seen, key=lambda b: (popcount(b), b))
    lattice = TorsLattice(u, classes, [])
    lattice.covers.extend(_hasse_covers(lattice))
    return lattice


def _hasse_covers(lattice: TorsLattice):
    classes = lattice.classes
    n = len(classes)
    out = []
    for i in range(n):
        for j in range(n):
            if i == j or classes[j] & ~classes[i]:
                continue
            # classes[j] strictly below classes[i]?
            if classes[i] == classes[j]:
                continue
            between = any(
                k not in (i, j)
                and classes[j] & ~classes[k] == 0
                and classes[k] & ~classes[i] == 0
                and classes[k] not in (classes[i], classes[j])
                for k in range(n)
            )
            if not between:
                label = _cover_label(lattice, classes[i], classes[j])
                out.append(Cover(upper=i, lower=j, label_index=label))
    out.sort(key=lambda c: (c.upper, c.lower))
    return out


def _cover_label(lattice: TorsLattice, upper_bits: int, lower_bits: int) -> int:
    """The unique torsion almost torsion-free module S of the upper pair with
    lower = upper intersect perp(S)."""
    u = lattice.universe
    pair = lattice.pair_of(lattice.class_index(upper_bits))
    candidates = []
    for simple in heart_simples(pair):
        if not simple.shifted:
            continue
        s = simple.index
        perp = 0
        for x in range(u.n):
            if u.hom_table[x, s] == 0:
                perp |= 1 << x
        if upper_bits & perp == lower_bits:
            candidates.append(s)
    if len(candidates) != 1:
        raise AssertionError(
            f"cover label not unique: {candidates} for "
            f"{bit_indices(upper_bits)} > {bit_indices(lower_bits)}"
        )
    label = candidates[0]
    if not is_brick(u.indecs[label]):
        raise AssertionError("cover label is not a brick")
    return label


def brick_labels(lattice: TorsLattice) -> list[Cover]:
    """Recompute and validate the label of every Hasse cover.

    The labels are already attached during enumeration; this re-derives each
    one from its defining property and checks existence and uniqueness again,
    so it doubles as a consistency audit of the lattice."""
    out = []
    u = lattice.universe
    for cover in lattice.covers:
        label = _cover_label(lattice, lattice.classes[cover.upper],
                             lattice.classes[cover.lower])
        if label != cover.label_index:
            raise AssertionError(
                f"label of cover {cover.upper} > {cover.lower} changed on "
                f"recomputation: {label} vs {cover.label_index}")
        out.append(Cover(cover.upper, cover.lower, label))
    return out


@dataclass(frozen=True)
class IncidenceReport:
    torsion_class_index: int
    down_labels: tuple[int, ...]          # labels of covers leaving the class
    up_labels: tuple[int, ...]            # labels of covers arriving from above
    shifted_simples: tuple[int, ...]      # torsion almost torsion-free indices
    plain_simples: tuple[int, ...]        # torsion-free almost torsion indices

    @property
    def ok(self) -> bool:
        return (sorted(self.down_labels) == sorted(self.shifted_simples)
                and sorted(self.up_labels) == sorted(self.plain_simples))


def incident_arrows_vs_heart(pair: TorsionPair, lattice: TorsLattice) -> IncidenceReport:
    """Compare the multiset of Hasse labels incident to the torsion class with
    the heart simples of the pair: arrows going down from the class carry the
    shifted simples, arrows coming down into the class carry the plain ones."""
    idx = lattice.class_index(pair.torsion_bits)
    down, up = lattice.covers_of(idx)
    simples = heart_simples(pair)
    return IncidenceReport(
        torsion_class_index=idx,
        down_labels=tuple(sorted(c.label_index for c in down)),
        up_labels=tuple(sorted(c.label_index for c in up)),
        shifted_simples=tuple(sorted(s.index for s in simples if s.shifted)),
        plain_simples=tuple(sorted(s.index for s in simples if not s.shifted)),
    )
