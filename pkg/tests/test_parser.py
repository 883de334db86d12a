import pytest

from czdglab.errors import (
    NonOrientableRelation,
    NonPrimePowerGF,
    NonTerminating,
    OrderOutOfRange,
    SpecSyntaxError,
    UnknownVariable,
)
from czdglab.ringspec import build_ring


def test_modular_and_field_specs():
    assert build_ring("Z4").order == 4
    assert build_ring(" Z4 ").order == 4
    assert build_ring("GF(9)").order == 9
    assert build_ring("GF(9)").is_field()
    assert build_ring("GF(7)").mul_table.tolist() == build_ring("Z7").mul_table.tolist()


def test_product_specs():
    ring = build_ring("GF(4) x Z2")
    assert ring.order == 8
    assert ring.source_spec == "GF(4) x Z2"
    triple = build_ring("Z2 x Z2 x Z2")
    assert triple.order == 8
    assert triple.is_boolean()


def test_quotient_specs_and_canonical_form():
    ring = build_ring("Z4[x]/(2x, x^2-2)")
    assert ring.order == 8
    # canonical text: spaces dropped, coefficients reduced mod the base
    assert ring.source_spec == "Z4[x]/(2x,x^2+2)"
    assert build_ring("Z4[x]/(2x,x^2+2)").source_spec == ring.source_spec


def test_ideal_power_shorthand_expands():
    ring = build_ring("Z2[x,y]/((x,y)^2)")
    assert ring.order == 8
    assert ring.source_spec == "Z2[x,y]/(x^2,xy,y^2)"
    cubic = build_ring("Z2[x,y,z]/((x,y,z)^2)")
    assert cubic.order == 16


def test_known_quotient_orders():
    for spec, order in [
        ("Z2[x]/(x^3)", 8),
        ("Z9[x]/(3x,x^2-3)", 27),
        ("Z8[x]/(2x,x^2)", 16),
        ("Z4[x]/(x^2-2x-2)", 16),
        ("Z8[x,y]/(x^2,y^2,4x,4y,2xy)", 256),
    ]:
        assert build_ring(spec).order == order


def test_field_base_quotients():
    ring = build_ring("GF(4)[x]/(x^2)")
    assert ring.order == 16
    assert ring.is_local()
    assert not ring.is_reduced()


def test_syntax_errors():
    for bad in ("", "Z", "Z4[x]/", "Z4[", "GF(9", "Z4 x", "Q7", "Z4[x]/(x^2) junk"):
        with pytest.raises(SpecSyntaxError):
            build_ring(bad)


def test_semantic_errors():
    with pytest.raises(NonPrimePowerGF):
        build_ring("GF(6)")
    with pytest.raises(NonPrimePowerGF):
        build_ring("GF(1)")
    with pytest.raises(UnknownVariable):
        build_ring("Z4[x]/(y)")
    with pytest.raises(OrderOutOfRange):
        build_ring("Z1")
    with pytest.raises(OrderOutOfRange):
        build_ring("Z9999")
    with pytest.raises(NonTerminating):
        build_ring("Z4[x]/(2x)")  # infinite quotient, completion caps out


def test_non_orientable_relation_rejected():
    # a relation whose leading monomial has a non-invertible, non-annihilating
    # coefficient cannot be oriented into a rewrite rule
    with pytest.raises((NonOrientableRelation, NonTerminating)):
        build_ring("Z4[x]/(2x-1,x^3)")


def test_cache_returns_equal_rings():
    a = build_ring("Z4[x]/(2x, x^2-2)")
    b = build_ring("Z4[x]/(2x,x^2+2)")
    assert a is b  # same canonical text, same cached object


def test_cap_parameter_respected():
    with pytest.raises(OrderOutOfRange):
        build_ring("Z64", cap=32)
