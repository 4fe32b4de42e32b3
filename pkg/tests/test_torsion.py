from itertools import combinations

import pytest

from torsionheart import modules as mo
from torsionheart import torsion as to
from torsionheart.universe import bit_indices

from conftest import module_by_dims


@pytest.fixture(scope="module")
def idx(a2_universe):
    u = a2_universe
    return {
        "S1": u.index_of(module_by_dims(u, (1, 0))),
        "S2": u.index_of(module_by_dims(u, (0, 1))),
        "P1": u.index_of(module_by_dims(u, (1, 1))),
    }


def bits(idx, *names):
    out = 0
    for n in names:
        out |= 1 << idx[n]
    return out


def test_torsion_closures_a2(a2_universe, idx):
    u = a2_universe
    p1 = module_by_dims(u, (1, 1))
    s1 = module_by_dims(u, (1, 0))
    assert to.torsion_closure([p1], u) == bits(idx, "P1", "S1")
    assert to.torsion_closure([s1], u) == bits(idx, "S1")
    assert to.torsion_closure([], u) == 0


def test_all_torsion_classes_a2(a2_universe, idx):
    u = a2_universe
    classes = set()
    for r in range(u.n + 1):
        for sub in combinations(range(u.n), r):
            classes.add(to.torsion_closure(sum(1 << i for i in sub), u))
    expected = {
        0, bits(idx, "S1"), bits(idx, "S2"), bits(idx, "S1", "P1"),
        bits(idx, "S1", "S2", "P1"),
    }
    assert classes == expected


def test_closure_operator_properties(a2_universe):
    # extensive, monotone, idempotent over all subsets
    u = a2_universe
    subsets = range(1 << u.n)
    closures = {s: to.torsion_closure(s, u) for s in subsets}
    for s in subsets:
        assert closures[s] & ~closures[s] == 0
        assert s & ~closures[s] == 0  # extensive
        assert closures[closures[s]] == closures[s]  # idempotent
        for t in subsets:
            if s & ~t == 0:
                assert closures[s] & ~closures[t] == 0  # monotone


def test_closure_under_pair_sum_extensions(a2_universe):
    # scanning extensions between sums of <= 2 members adds nothing beyond
    # the single-member fixpoint
    from torsionheart.heart import _ext_middles_sum
    u = a2_universe
    for s in range(1 << u.n):
        closed = to.torsion_closure(s, u)
        members = bit_indices(closed)
        descs = [((i, 1),) for i in members] + [((i, 2),) for i in members] + [
            ((i, 1), (j, 1)) for i in members for j in members if i < j
        ]
        for right in descs:
            for left in descs:
                for mid_bits in _ext_middles_sum(u, right, left):
                    assert mid_bits & ~closed == 0


def test_pair_from_torsion_class(a2_universe, idx):
    pair = to.pair_from_torsion_class(bits(idx, "S1"), a2_universe)
    assert pair.torsion_free_bits == bits(idx, "S2", "P1")
    pair0 = to.pair_from_torsion_class(0, a2_universe)
    assert pair0.torsion_free_bits == a2_universe.all_bits
    pair_all = to.pair_from_torsion_class(a2_universe.all_bits, a2_universe)
    assert pair_all.torsion_free_bits == 0
    with pytest.raises(ValueError):
        to.pair_from_torsion_class(bits(idx, "P1"), a2_universe)  # not closed


def test_torsion_part_a2(a2_universe, idx):
    u = a2_universe
    pair = to.pair_from_torsion_class(bits(idx, "S1"), u)
    p1 = module_by_dims(u, (1, 1))
    t, incl, ses = to.torsion_part(p1, pair)
    assert t.is_zero()
    assert ses.validate()
    s1 = module_by_dims(u, (1, 0))
    t2, _, _ = to.torsion_part(s1, pair)
    assert t2.dims == (1, 0)
    both = mo.direct_sum([p1, s1])[0]
    t3, _, ses3 = to.torsion_part(both, pair)
    assert t3.dims == (1, 0)
    assert ses3.right.dims == (1, 1)


def test_torsion_part_idempotent(a2_universe, idx):
    u = a2_universe
    pair = to.pair_from_torsion_class(bits(idx, "S1"), u)
    for m in list(u.indecs) + [mo.direct_sum(list(u.indecs))[0]]:
        t, _, _ = to.torsion_part(m, pair)
        if not t.is_zero():
            tt, _, _ = to.torsion_part(t, pair)
            assert tt.dims == t.dims
        quot = to.torsion_part(m, pair)[2].right
        if not quot.is_zero():
            tq, _, _ = to.torsion_part(quot, pair)
            assert tq.is_zero()


def test_canonical_sequence_unique(a2_universe, idx):
    # the canonical SES is the unique submodule with torsion left part and
    # torsion-free quotient
    u = a2_universe
    pair = to.pair_from_torsion_class(bits(idx, "S1"), u)
    for m in u.indecs:
        t, _, _ = to.torsion_part(m, pair)
        count = 0
        for sub, incl in u.all_submodules(m):
            if not u.in_class(sub, pair.torsion_bits):
                continue
            quot = mo.cokernel(incl)[0]
            if u.in_class(quot, pair.torsion_free_bits):
                count += 1
                assert sub.dims == t.dims
        assert count == 1


def test_is_hereditary(a2_universe, idx):
    u = a2_universe
    assert to.is_hereditary(to.pair_from_torsion_class(bits(idx, "S1"), u))
    assert to.is_hereditary(to.pair_from_torsion_class(0, u))
    # the class {S1, P1} is not closed under submodules (S2 sits in P1)
    pair = to.pair_from_torsion_class(bits(idx, "S1", "P1"), u)
    assert not to.is_hereditary(pair)


def test_hereditary_on_a3(a3_universe):
    u = a3_universe
    p1 = module_by_dims(u, (1, 1, 1))
    t_bits = to.torsion_closure([p1], u)
    pair = to.pair_from_torsion_class(t_bits, u)
    # the submodule (0,1,1) of P(1) leaves the closure of {P(1)}
    assert not to.is_hereditary(pair)


def test_all_subset_closures_are_torsion_classes_a3(a3_universe):
    # exhaustive over the 64 subsets: every closure validates as a pair and
    # every universe member gets a canonical sequence
    u = a3_universe
    seen = set()
    for s in range(1 << u.n):
        seen.add(to.torsion_closure(s, u))
    assert len(seen) == 14
    for bits in seen:
        pair = to.pair_from_torsion_class(bits, u)
        for m in u.indecs:
            t, _, ses = to.torsion_part(m, pair)
            assert ses.validate()
