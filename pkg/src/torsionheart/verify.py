"""Property suites run by the CLI verify command and the acceptance tests.

Each suite returns (name, passed, detail); a failing suite carries a
counterexample witness in the detail string.  All suites are deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cotilting import CotiltingData, cotilting_from_pair, minimal_cotilting
from .exceptions import NotCotiltingError
from .heart import (
    NegIsolatedValue, classify_neg_isolated, embedding_into_criticals,
    heart_simples, hereditary_cover_check, is_almost_torsion,
    is_almost_torsion_free, is_split_injective, is_strong_las,
    is_strong_las_fast, strong_las_uniqueness_scan,
)
from .homology import hom_space
from .krull import is_brick
from .modules import simple_module
from .torsion import is_hereditary
from .torslattice import TorsLattice, enumerate_torsion_classes, incident_arrows_vs_heart
from .universe import IndecUniverse, bit_indices


@dataclass(frozen=True)
class VerifyResult:
    name: str
    passed: bool
    detail: str

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.name}: {self.detail}"


@dataclass
class AnalysisContext:
    universe: IndecUniverse
    lattice: TorsLattice
    cotilting_pairs: list[CotiltingData]
    not_cotilting: list[tuple[int, str]]      # (class bitset, reason)
    _classified: dict = None

    def classified(self, data: CotiltingData):
        if self._classified is None:
            self._classified = {}
        key = data.pair.torsion_bits
        got = self._classified.get(key)
        if got is None:
            got = classify_neg_isolated(data)
            self._classified[key] = got
        return got


def build_context(universe: IndecUniverse) -> AnalysisContext:
    lattice = enumerate_torsion_classes(universe)
    pairs: list[CotiltingData] = []
    rejected: list[tuple[int, str]] = []
    for i in range(lattice.n):
        pair = lattice.pair_of(i)
        try:
            pairs.append(cotilting_from_pair(pair))
        except NotCotiltingError as exc:
            rejected.append((lattice.classes[i], exc.reason))
    return AnalysisContext(universe, lattice, pairs, rejected)


def suite_oracle_equivalence(ctx: AnalysisContext) -> VerifyResult:
    """fast ATF/AT verdicts match the literal-definition oracle everywhere,
    and the fast strong-las criterion matches the brute uniqueness scan."""
    u = ctx.universe
    checked = 0
    for data in ctx.cotilting_pairs:
        pair = data.pair
        for m in u.indecs:
            if pair.is_torsion(m):
                fast = is_almost_torsion_free(m, pair, "fast")
                oracle = is_almost_torsion_free(m, pair, "oracle")
                if fast != oracle:
                    return VerifyResult(
                        "oracle-equivalence", False,
                        f"ATF mismatch at dims {m.dims}, pair {pair}")
                checked += 1
            if pair.is_torsion_free(m):
                fast = is_almost_torsion(m, pair, "fast")
                oracle = is_almost_torsion(m, pair, "oracle")
                if fast != oracle:
                    return VerifyResult(
                        "oracle-equivalence", False,
                        f"AT mismatch at dims {m.dims}, pair {pair}")
                checked += 1
        criticals, specials = ctx.classified(data)
        for seq in criticals + specials:
            f = (seq.sequence.surject
                 if seq.kind.value is NegIsolatedValue.CRITICAL
                 else seq.sequence.inject)
            fast = is_strong_las_fast(f, data)
            linear = is_strong_las(f, data.c_class_bits, u)
            brute = strong_las_uniqueness_scan(f, data.c_class_bits, u)
            if not (fast == linear == brute):
                return VerifyResult(
                    "oracle-equivalence", False,
                    f"strong-las disagreement on sequence of {seq.simple.module.dims}")
            checked += 1
    return VerifyResult("oracle-equivalence", True,
                        f"{checked} verdicts agree across "
                        f"{len(ctx.cotilting_pairs)} cotilting pairs")


def suite_brick_property(ctx: AnalysisContext) -> VerifyResult:
    """Heart simples are bricks; nonzero maps between two torsion almost
    torsion-free modules of one pair are isomorphisms."""
    u = ctx.universe
    checked = 0
    for data in ctx.cotilting_pairs:
        simples = heart_simples(data.pair)
        for s in simples:
            if not is_brick(s.module):
                return VerifyResult("brick-property", False,
                                    f"heart simple {s.module.dims} is not a brick")
            checked += 1
        shifted = [s for s in simples if s.shifted]
        for a in shifted:
            for b in shifted:
                h = hom_space(a.module, b.module)
                for f in h.basis:
                    if not f.is_zero() and not f.is_iso():
                        return VerifyResult(
                            "brick-property", False,
                            f"non-iso map between torsion ATF modules "
                            f"{a.module.dims} -> {b.module.dims}")
                if a.index != b.index and h.dim:
                    return VerifyResult(
                        "brick-property", False,
                        f"hom between distinct torsion ATF modules "
                        f"{a.index} -> {b.index}")
    return VerifyResult("brick-property", True, f"{checked} heart simples checked")


def suite_dichotomy(ctx: AnalysisContext) -> VerifyResult:
    """Strong las morphisms are mono or epi; criticals and specials are
    disjoint and together exhaust the summands of the cotilting module."""
    u = ctx.universe
    for data in ctx.cotilting_pairs:
        criticals, specials = ctx.classified(data)
        for seq in criticals + specials:
            f = (seq.sequence.surject
                 if seq.kind.value is NegIsolatedValue.CRITICAL
                 else seq.sequence.inject)
            if not (f.is_mono() or f.is_epi()):
                return VerifyResult("dichotomy", False,
                                    "strong las morphism neither mono nor epi")
        crit_idx = {s.envelope_index for s in criticals}
        spec_idx = {s.envelope_index for s in specials}
        if crit_idx & spec_idx:
            return VerifyResult("dichotomy", False,
                                f"E and M sets intersect for pair {data.pair}")
        if crit_idx | spec_idx != set(bit_indices(data.add_c_bits)):
            return VerifyResult(
                "dichotomy", False,
                f"envelope set differs from the summands of C for {data.pair}")
    return VerifyResult("dichotomy", True,
                        f"{len(ctx.cotilting_pairs)} pairs checked")


def suite_c0_c1_summands(ctx: AnalysisContext) -> VerifyResult:
    """Criticals are summands of C0 and specials are summands of C1."""
    u = ctx.universe
    for data in ctx.cotilting_pairs:
        criticals, specials = ctx.classified(data)
        c0_bits = u.summand_bitset(data.c0)
        c1_bits = u.summand_bitset(data.c1)
        for seq in criticals:
            if not (c0_bits >> seq.envelope_index) & 1:
                return VerifyResult(
                    "c0-c1-summands", False,
                    f"critical {seq.envelope.dims} not a summand of C0")
        for seq in specials:
            if not (c1_bits >> seq.envelope_index) & 1:
                return VerifyResult(
                    "c0-c1-summands", False,
                    f"special {seq.envelope.dims} not a summand of C1")
    return VerifyResult("c0-c1-summands", True,
                        f"{len(ctx.cotilting_pairs)} pairs checked")


def suite_split_injectivity(ctx: AnalysisContext) -> VerifyResult:
    """C0 is split injective in the cotilting class and add(C0) is exactly
    add of the criticals."""
    u = ctx.universe
    for data in ctx.cotilting_pairs:
        if not is_split_injective(data.c0, data.c_class_bits, u):
            return VerifyResult("split-injectivity", False,
                                f"C0 of {data.pair} is not split injective")
        criticals, _ = ctx.classified(data)
        crit_bits = 0
        for seq in criticals:
            crit_bits |= 1 << seq.envelope_index
        if u.summand_bitset(data.c0) != crit_bits:
            return VerifyResult(
                "split-injectivity", False,
                f"add(C0) differs from add(criticals) for {data.pair}")
    return VerifyResult("split-injectivity", True,
                        f"{len(ctx.cotilting_pairs)} pairs checked")


def suite_cogeneration(ctx: AnalysisContext) -> VerifyResult:
    """Every indecomposable of the cotilting class embeds into a sum of at
    most length-many criticals, with the witness mono verified."""
    u = ctx.universe
    count = 0
    for data in ctx.cotilting_pairs:
        criticals, _ = ctx.classified(data)
        crit_modules = [seq.envelope for seq in criticals]
        for i in bit_indices(data.c_class_bits):
            witness = embedding_into_criticals(u.indecs[i], crit_modules, u)
            if witness is None:
                return VerifyResult(
                    "cogeneration-by-criticals", False,
                    f"indec {u.indecs[i].dims} of {data.pair} has no embedding")
            count += 1
    return VerifyResult("cogeneration-by-criticals", True,
                        f"{count} witness monomorphisms built")


def suite_hereditary_pullback(ctx: AnalysisContext) -> VerifyResult:
    """Pullback description of simple covers over hereditary cotilting pairs."""
    u = ctx.universe
    checked = 0
    for data in ctx.cotilting_pairs:
        if not is_hereditary(data.pair):
            continue
        for i in bit_indices(data.pair.torsion_bits):
            q = u.indecs[i]
            if q.total_dim != 1:
                continue
            report = hereditary_cover_check(q, data)
            if not report.ok:
                return VerifyResult(
                    "hereditary-pullback", False,
                    f"failure at simple {q.dims} of {data.pair}: {report}")
            checked += 1
    return VerifyResult("hereditary-pullback", True,
                        f"{checked} simple covers verified")


def suite_brick_labels(ctx: AnalysisContext) -> VerifyResult:
    """Label incidence matches heart simples for every cotilting pair; labels
    are dually consistent (torsion ATF above, torsion-free AT below); the
    maximal class has one down-arrow per simple module."""
    u = ctx.universe
    lat = ctx.lattice
    for data in ctx.cotilting_pairs:
        report = incident_arrows_vs_heart(data.pair, lat)
        if not report.ok:
            return VerifyResult("brick-labels", False,
                                f"incidence mismatch at {data.pair}: {report}")
    for cover in lat.covers:
        label = u.indecs[cover.label_index]
        upper_pair = lat.pair_of(cover.upper)
        lower_pair = lat.pair_of(cover.lower)
        if not (upper_pair.is_torsion(label)
                and is_almost_torsion_free(label, upper_pair)):
            return VerifyResult("brick-labels", False,
                                f"label {label.dims} not torsion-ATF above")
        if not (lower_pair.is_torsion_free(label)
                and is_almost_torsion(label, lower_pair)):
            return VerifyResult("brick-labels", False,
                                f"label {label.dims} not torsion-free-AT below")
    top = lat.class_index(u.all_bits)
    down, _ = lat.covers_of(top)
    n_simples = sum(
        1 for v in range(u.algebra.quiver.n)
        if u.index_of(simple_module(u.algebra, v)) is not None
    )
    if len(down) != n_simples:
        return VerifyResult(
            "brick-labels", False,
            f"maximal class has {len(down)} covers, expected {n_simples}")
    return VerifyResult(
        "brick-labels", True,
        f"{len(lat.covers)} covers consistent, {len(ctx.cotilting_pairs)} "
        f"incidences match")


def suite_minimal_cotilting(ctx: AnalysisContext) -> VerifyResult:
    """The perp-envelope of the sum of all heart envelopes is a cotilting
    module equivalent to C whose summands are exactly those of C."""
    u = ctx.universe
    for data in ctx.cotilting_pairs:
        criticals, specials = ctx.classified(data)
        mods = [s.envelope for s in criticals] + [s.envelope for s in specials]
        tilde = minimal_cotilting(data, mods)
        if u.summand_bitset(tilde) != data.add_c_bits:
            return VerifyResult(
                "minimal-cotilting", False,
                f"summands of the minimal cotilting module differ for {data.pair}")
    return VerifyResult("minimal-cotilting", True,
                        f"{len(ctx.cotilting_pairs)} pairs checked")


ALL_SUITES = [
    suite_oracle_equivalence,
    suite_brick_property,
    suite_dichotomy,
    suite_c0_c1_summands,
    suite_split_injectivity,
    suite_cogeneration,
    suite_hereditary_pullback,
    suite_brick_labels,
    suite_minimal_cotilting,
]


def run_all_suites(ctx: AnalysisContext) -> list[VerifyResult]:
    return [suite(ctx) for suite in ALL_SUITES]
