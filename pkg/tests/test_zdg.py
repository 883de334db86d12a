import pytest

from czdglab.errors import EmptyGraphUndefined
from czdglab.ringspec import build_ring
from czdglab.zdg import build_czdg, build_zdg


def test_zdg_z6_shape():
    zdg = build_zdg(build_ring("Z6"))
    assert zdg.labels() == ["2", "3", "4"]
    by_label = {lab: i for i, lab in enumerate(zdg.labels())}
    edges = {frozenset((u, v)) for u, v in zdg.graph.edges()}
    assert edges == {
        frozenset((by_label["2"], by_label["3"])),
        frozenset((by_label["3"], by_label["4"])),
    }


def test_zdg_vertices_are_nonzero_zero_divisors():
    zdg = build_zdg(build_ring("Z16"))
    assert zdg.labels() == ["2", "4", "6", "8", "10", "12", "14"]
    ring = zdg.ring
    idx = {lab: i for i, lab in enumerate(ring.labels)}
    for u, v in zdg.graph.edges():
        a = idx[zdg.labels()[u]]
        b = idx[zdg.labels()[v]]
        assert ring.mul(a, b) == ring.zero


def test_zdg_single_vertex():
    zdg = build_zdg(build_ring("Z4"))
    assert zdg.graph.n == 1
    assert zdg.labels() == ["2"]
    assert zdg.graph.edge_count() == 0


def test_integral_domains_are_undefined():
    for spec in ("Z2", "Z7", "GF(9)", "GF(8)"):
        ring = build_ring(spec)
        with pytest.raises(EmptyGraphUndefined):
            build_zdg(ring)
        with pytest.raises(EmptyGraphUndefined):
            build_czdg(ring)


def test_czdg_z6_classes():
    czdg = build_czdg(build_ring("Z6"))
    assert czdg.labels() == ["[2]", "[3]"]
    assert czdg.member_labels() == ["2, 4", "3"]
    assert czdg.graph.edge_count() == 1


def test_czdg_classes_share_annihilator():
    ring = build_ring("Z16")
    czdg = build_czdg(ring)
    assert czdg.labels() == ["[2]", "[4]", "[8]"]
    for cls in czdg.partition.classes:
        anns = {ring.annihilator(m) for m in cls.members}
        assert len(anns) == 1


def test_czdg_edges_respect_representative_products():
    ring = build_ring("Z12")
    czdg = build_czdg(ring)
    for u, v in czdg.graph.edges():
        rep_u = czdg.partition.classes[u].rep
        rep_v = czdg.partition.classes[v].rep
        assert ring.mul(rep_u, rep_v) == ring.zero


def test_boolean_compression_is_identity():
    ring = build_ring("Z2 x Z2 x Z2")
    zdg = build_zdg(ring)
    czdg = build_czdg(ring)
    assert all(len(cls.members) == 1 for cls in czdg.partition.classes)
    assert czdg.graph.n == zdg.graph.n
    assert czdg.graph.edge_count() == zdg.graph.edge_count()


def test_czdg_diameter_never_exceeds_zdg():
    for spec in ("Z12", "Z16", "Z24", "Z30", "Z2 x Z4"):
        ring = build_ring(spec)
        zd = build_zdg(ring).graph.diameter()
        cd = build_czdg(ring).graph.diameter()
        assert cd <= zd


def test_compressed_path_example():
    czdg = build_czdg(build_ring("Z2 x Z4"))
    assert czdg.graph.n == 4
    assert "Path(4)" in czdg.graph.classify_family()


def test_zdg_dot_contains_ring_labels():
    dot = build_zdg(build_ring("Z6")).to_dot()
    assert 'label="3"' in dot
    cdot = build_czdg(build_ring("Z6")).to_dot()
    assert 'label="[2]"' in cdot
    assert 'tooltip="2, 4"' in cdot
