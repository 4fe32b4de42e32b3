import pytest

from torsionheart import cotilting as co
from torsionheart import heart as he
from torsionheart import torsion as to
from torsionheart import torslattice as tl
from torsionheart.exceptions import NotCotiltingError
from torsionheart.krull import is_brick

from conftest import module_by_dims


@pytest.fixture(scope="module")
def a2_lattice(a2_universe):
    return tl.enumerate_torsion_classes(a2_universe)


def test_a2_lattice_shape(a2_universe, a2_lattice):
    assert a2_lattice.n == 5
    assert len(a2_lattice.covers) == 5


def test_a1_lattice():
    from torsionheart.algebra import parse_algebra
    from torsionheart.universe import enumerate_indecomposables
    alg = parse_algebra("field 2\nvertices v\n")
    u = enumerate_indecomposables(alg, (2,))
    lat = tl.enumerate_torsion_classes(u)
    assert lat.n == 2
    assert len(lat.covers) == 1


def test_a3_lattice_node_count(a3_universe):
    lat = tl.enumerate_torsion_classes(a3_universe)
    assert lat.n == 14


def test_a2_cover_labels(a2_universe, a2_lattice):
    u = a2_universe
    lat = a2_lattice
    s1 = u.index_of(module_by_dims(u, (1, 0)))
    s2 = u.index_of(module_by_dims(u, (0, 1)))
    p1 = u.index_of(module_by_dims(u, (1, 1)))
    all_bits = u.all_bits
    expected = {
        (all_bits, (1 << s1) | (1 << p1)): s2,
        (all_bits, 1 << s2): s1,
        ((1 << s1) | (1 << p1), 1 << s1): p1,
        (1 << s1, 0): s1,
        (1 << s2, 0): s2,
    }
    got = {
        (lat.classes[c.upper], lat.classes[c.lower]): c.label_index
        for c in lat.covers
    }
    assert got == expected


def test_labels_are_bricks(a2_universe, a2_lattice):
    for c in a2_lattice.covers:
        assert is_brick(a2_universe.indecs[c.label_index])


def test_label_dual_consistency(a3_universe):
    # the label of T > U is torsion ATF for the pair of T and torsion-free AT
    # for the pair of U, on every cover of the lattice
    u = a3_universe
    lat = tl.enumerate_torsion_classes(u)
    for cover in lat.covers:
        label = u.indecs[cover.label_index]
        upper = lat.pair_of(cover.upper)
        lower = lat.pair_of(cover.lower)
        assert upper.is_torsion(label)
        assert he.is_almost_torsion_free(label, upper, "fast")
        assert lower.is_torsion_free(label)
        assert he.is_almost_torsion(label, lower, "fast")


def test_incidence_a2(a2_universe, a2_lattice):
    u = a2_universe
    s1_bits = 1 << u.index_of(module_by_dims(u, (1, 0)))
    pair = to.pair_from_torsion_class(s1_bits, u)
    report = tl.incident_arrows_vs_heart(pair, a2_lattice)
    assert report.ok
    p1 = u.index_of(module_by_dims(u, (1, 1)))
    s1 = u.index_of(module_by_dims(u, (1, 0)))
    assert report.down_labels == (s1,)
    assert report.up_labels == (p1,)


def test_incidence_trivial_pair(a2_universe, a2_lattice):
    u = a2_universe
    pair = to.pair_from_torsion_class(0, u)
    report = tl.incident_arrows_vs_heart(pair, a2_lattice)
    assert report.ok
    assert report.down_labels == ()
    assert len(report.up_labels) == 2


def test_incidence_all_cotilting_pairs_a3(a3_universe):
    u = a3_universe
    lat = tl.enumerate_torsion_classes(u)
    n_cotilting = 0
    for i in range(lat.n):
        pair = lat.pair_of(i)
        try:
            co.cotilting_from_pair(pair)
        except NotCotiltingError:
            continue
        n_cotilting += 1
        assert tl.incident_arrows_vs_heart(pair, lat).ok
    assert n_cotilting == 5


def test_maximal_class_covers_count(a3_universe):
    # down-arrows from the maximal class are labelled by the simple modules
    u = a3_universe
    lat = tl.enumerate_torsion_classes(u)
    top = lat.class_index(u.all_bits)
    down, _ = lat.covers_of(top)
    labels = sorted(u.indecs[c.label_index].dims for c in down)
    assert labels == [(0, 0, 1), (0, 1, 0), (1, 0, 0)]


def test_class_absent_raises(a2_universe, a2_lattice):
    with pytest.raises(ValueError):
        a2_lattice.class_index(0b111111)


def test_incidence_single_vertex_algebra():
    from torsionheart.algebra import parse_algebra
    from torsionheart.universe import enumerate_indecomposables
    alg = parse_algebra("field 2\nvertices v\n")
    u = enumerate_indecomposables(alg, (2,))
    lat = tl.enumerate_torsion_classes(u)
    pair = to.pair_from_torsion_class(0, u)
    report = tl.incident_arrows_vs_heart(pair, lat)
    assert report.ok
    assert len(report.up_labels) == 1 and report.down_labels == ()


def test_brick_labels_recompute(a2_universe, a2_lattice):
    covers = tl.brick_labels(a2_lattice)
    assert [(c.upper, c.lower, c.label_index) for c in covers] == \
        [(c.upper, c.lower, c.label_index) for c in a2_lattice.covers]
