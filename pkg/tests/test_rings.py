import random

import pytest

from czdglab.errors import NotPrime, OrderOutOfRange
from czdglab.rings import (
    ElementSet,
    build_gf,
    build_product,
    build_zn,
    is_prime,
    iter_bits,
    prime_power,
    ring_order_cap,
)


def test_build_zn_tables_and_labels():
    ring = build_zn(6)
    assert ring.order == 6
    assert ring.labels == ["0", "1", "2", "3", "4", "5"]
    assert ring.zero == 0 and ring.one == 1
    for a in range(6):
        for b in range(6):
            assert ring.add(a, b) == (a + b) % 6
            assert ring.mul(a, b) == (a * b) % 6


def test_build_zn_rejects_out_of_range():
    with pytest.raises(OrderOutOfRange):
        build_zn(1)
    with pytest.raises(OrderOutOfRange):
        build_zn(0)
    with pytest.raises(OrderOutOfRange):
        build_zn(ring_order_cap() + 1)


def test_ring_order_cap_env_override(monkeypatch):
    monkeypatch.setenv("CZDG_CAP", "32")
    assert ring_order_cap() == 32
    with pytest.raises(OrderOutOfRange):
        build_zn(33)
    build_zn(32)
    monkeypatch.delenv("CZDG_CAP")
    assert ring_order_cap() == 4096


def test_units_zero_divisors_annihilator():
    ring = build_zn(12)
    assert ring.units().labels() == ("1", "5", "7", "11")
    # zero-divisor set excludes 0; annihilators include 0
    assert ring.zero_divisors().labels() == ("2", "3", "4", "6", "8", "9", "10")
    assert ring.annihilator(6).labels() == ("0", "2", "4", "6", "8", "10")
    assert ring.annihilator(0).labels() == tuple(str(k) for k in range(12))


def test_element_set_behaviour():
    ring = build_zn(8)
    s = ElementSet.from_indices(ring, [2, 4, 6])
    assert s.indices() == (2, 4, 6)
    assert 4 in s and 3 not in s
    assert len(s) == 3
    assert s == ring.element_set([6, 2, 4])


def test_predicates_span_the_ring_zoo():
    assert build_zn(7).predicates() == {
        "is_field": True,
        "is_local": True,
        "is_reduced": True,
        "is_boolean": False,
        "is_vnr": True,
    }
    assert build_zn(6).predicates() == {
        "is_field": False,
        "is_local": False,
        "is_reduced": True,
        "is_boolean": False,
        "is_vnr": True,
    }
    assert build_zn(4).predicates() == {
        "is_field": False,
        "is_local": True,
        "is_reduced": False,
        "is_boolean": False,
        "is_vnr": False,
    }
    b = build_product(build_zn(2), build_zn(2))
    assert b.predicates()["is_boolean"] is True
    assert b.predicates()["is_vnr"] is True
    assert b.predicates()["is_local"] is False


def test_build_gf_field_structure():
    gf4 = build_gf(2, 2)
    assert gf4.order == 4
    assert gf4.is_field()
    assert gf4.zero_divisors().indices() == ()
    # every nonzero element is invertible
    for a in range(1, 4):
        assert any(gf4.mul(a, b) == gf4.one for b in range(1, 4))
    # k=1 coincides with modular arithmetic
    gf5 = build_gf(5, 1)
    z5 = build_zn(5)
    assert gf5.add_table.tolist() == z5.add_table.tolist()
    assert gf5.mul_table.tolist() == z5.mul_table.tolist()


def test_build_gf_rejects_bad_base():
    with pytest.raises(NotPrime):
        build_gf(4, 1)
    with pytest.raises(NotPrime):
        build_gf(6, 2)
    with pytest.raises(OrderOutOfRange):
        build_gf(2, 13)


def test_build_product_componentwise():
    left, right = build_zn(2), build_zn(3)
    ring = build_product(left, right)
    assert ring.order == 6
    assert ring.labels[0] == "(0,0)"
    assert not ring.is_local()
    assert ring.is_reduced()
    idx = {lab: i for i, lab in enumerate(ring.labels)}
    a, b = idx["(1,1)"], idx["(1,2)"]
    assert ring.labels[ring.mul(a, b)] == "(1,2)"
    assert ring.labels[ring.add(a, b)] == "(0,0)"


def test_verify_axioms_accepts_constructions():
    for ring in (build_zn(12), build_gf(3, 2), build_product(build_zn(4), build_zn(3))):
        ring.verify_axioms()


def test_prime_helpers():
    assert [n for n in range(2, 20) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]
    assert prime_power(8) == (2, 3)
    assert prime_power(9) == (3, 2)
    assert prime_power(7) == (7, 1)
    assert prime_power(12) is None
    assert prime_power(1) is None


def test_iter_bits_round_trip():
    rng = random.Random(11)
    for _ in range(50):
        picks = {rng.randrange(200) for _ in range(rng.randrange(20))}
        bits = 0
        for p in picks:
            bits |= 1 << p
        assert set(iter_bits(bits)) == picks
