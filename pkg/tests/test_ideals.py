"""Ideal construction, arithmetic and enumeration against naive oracles."""

from __future__ import annotations

from fractions import Fraction

import pytest

from spectop import (
    EventuallyConstantBitsRing,
    LocalizedIntegerRing,
    ModularRing,
    UnsupportedForPresentation,
    annihilator,
    enumerate_ideals,
    finite_support_ideal,
    ideal_from_generators,
    ideal_intersection,
    ideal_sum,
    is_prime_ideal,
    parse_ring,
    principal_ideal,
    radical,
    saturation_kernel,
    unit_ideal,
    zero_ideal,
)
from spectop.ideals import BoolPrincipalIdeal, ExplicitIdeal, LocalIdeal

from conftest import brute_force_generated, brute_force_ideals, brute_force_is_prime


def _values(ideal):
    return sorted(e.value for e in ideal.elements)


def test_generated_ideal_frozen_examples():
    z6 = ModularRing(6)
    assert _values(ideal_from_generators(z6, [z6.element(2)])) == [0, 2, 4]
    z12 = ModularRing(12)
    assert _values(ideal_from_generators(z12, [])) == [0]
    zl = LocalizedIntegerRing(2)
    four_thirds = ideal_from_generators(zl, [zl.element(Fraction(4, 3))])
    assert isinstance(four_thirds, LocalIdeal) and four_thirds.level == 2
    assert four_thirds.contains(zl.element(4))
    assert four_thirds.contains(zl.element(Fraction(8, 5)))
    assert not four_thirds.contains(zl.element(2))


def test_generated_ideal_matches_minimal_closed_superset(finite_ring):
    elements = list(finite_ring.elements())
    seeds = [[], [elements[-1]], elements[1:3], [elements[-1], elements[1]]]
    for gens in seeds:
        computed = ideal_from_generators(finite_ring, gens)
        oracle = brute_force_generated(finite_ring, gens)
        assert computed.elements == oracle


def test_explicit_ideal_rejects_unclosed_sets():
    z6 = ModularRing(6)
    with pytest.raises(ValueError):
        ExplicitIdeal(z6, {z6.element(0), z6.element(2)})  # 2+2=4 missing
    with pytest.raises(ValueError):
        ExplicitIdeal(z6, {z6.element(2), z6.element(4)})  # no zero


def test_annihilator_frozen_examples():
    z6 = ModularRing(6)
    assert _values(annihilator(z6.element(2))) == [0, 3]
    z12 = ModularRing(12)
    assert annihilator(z12.element(0)).is_whole()
    z4 = ModularRing(4)
    assert _values(annihilator(z4.element(2))) == [0, 2]


def test_annihilator_is_exact(finite_ring):
    zero = finite_ring.zero
    for f in finite_ring.elements():
        ann = annihilator(f)
        for x in finite_ring.elements():
            assert ann.contains(x) == (x * f == zero)


def test_annihilator_symbolic_presentations():
    zl = LocalizedIntegerRing(2)
    assert annihilator(zl.element(0)).is_whole()
    assert annihilator(zl.element(Fraction(3, 5))).is_zero()
    bits = EventuallyConstantBitsRing()
    f = bits.indicator({1, 4})
    ann = annihilator(f)
    assert isinstance(ann, BoolPrincipalIdeal)
    assert ann.generator == bits.one - f
    assert ann.contains(bits.indicator({2, 3}))
    assert not ann.contains(bits.indicator({1}))


def test_radical_frozen_examples():
    z12 = ModularRing(12)
    assert _values(radical(principal_ideal(z12, z12.element(4)))) == [0, 2, 4, 6, 8, 10]
    assert _values(radical(zero_ideal(z12))) == [0, 6]
    assert radical(unit_ideal(z12)).is_whole()


def test_radical_is_idempotent_and_monotone(finite_ring):
    for ideal in enumerate_ideals(finite_ring):
        root = radical(ideal)
        assert ideal.issubset(root)
        assert radical(root) == root
    assert radical(unit_ideal(finite_ring)).is_whole()


def test_radical_symbolic():
    zl = LocalizedIntegerRing(2)
    assert radical(LocalIdeal(zl, 3)) == LocalIdeal(zl, 1)
    assert radical(LocalIdeal(zl, None)).is_zero()
    assert radical(LocalIdeal(zl, 0)).is_whole()
    bits = EventuallyConstantBitsRing()
    g = bits.indicator({2})
    assert radical(BoolPrincipalIdeal(bits, g)) == BoolPrincipalIdeal(bits, g)
    assert radical(finite_support_ideal(bits)) == finite_support_ideal(bits)


def test_saturation_kernel_frozen_examples():
    z12 = ModularRing(12)
    two = principal_ideal(z12, z12.element(2))
    assert _values(saturation_kernel(two)) == [0, 4, 8]
    assert _values(saturation_kernel(zero_ideal(z12))) == [0]
    four = principal_ideal(z12, z12.element(4))
    assert _values(saturation_kernel(four)) == [0, 4, 8]


def test_saturation_kernel_is_exact(finite_ring):
    zero = finite_ring.zero
    one = finite_ring.one
    for ideal in enumerate_ideals(finite_ring):
        kernel = saturation_kernel(ideal)
        s = [one + i for i in ideal.elements]
        for r in finite_ring.elements():
            expected = any(x * r == zero for x in s)
            assert kernel.contains(r) == expected


def test_saturation_kernel_symbolic():
    zl = LocalizedIntegerRing(2)
    assert saturation_kernel(LocalIdeal(zl, 2)).is_zero()
    assert saturation_kernel(LocalIdeal(zl, None)).is_zero()
    assert saturation_kernel(LocalIdeal(zl, 0)).is_whole()
    with pytest.raises(UnsupportedForPresentation):
        saturation_kernel(finite_support_ideal(EventuallyConstantBitsRing()))


def test_ideal_sum_and_intersection(finite_ring):
    ideals = enumerate_ideals(finite_ring)
    for a in ideals:
        for b in ideals:
            total = ideal_sum(a, b)
            meet = ideal_intersection(a, b)
            assert total.elements == {x + y for x in a.elements for y in b.elements}
            assert meet.elements == a.elements & b.elements


def test_local_lattice_operations():
    zl = LocalizedIntegerRing(3)
    a, b = LocalIdeal(zl, 2), LocalIdeal(zl, 5)
    assert ideal_sum(a, b) == LocalIdeal(zl, 2)
    assert ideal_intersection(a, b) == LocalIdeal(zl, 5)
    zero = LocalIdeal(zl, None)
    assert ideal_sum(zero, a) == a
    assert ideal_intersection(zero, a) == zero
    assert a.issubset(LocalIdeal(zl, 1))
    assert not LocalIdeal(zl, 1).issubset(a)


def test_bool_ideal_operations():
    bits = EventuallyConstantBitsRing()
    g = bits.indicator({1})
    h = bits.indicator({2, 3})
    joined = ideal_from_generators(bits, [g, h])
    assert isinstance(joined, BoolPrincipalIdeal)
    assert joined.generator == bits.indicator({1, 2, 3})
    fin = finite_support_ideal(bits)
    assert ideal_sum(BoolPrincipalIdeal(bits, g), fin) == fin
    cofinite = bits.element(({4}, 1))
    assert ideal_sum(BoolPrincipalIdeal(bits, cofinite), fin).is_whole()
    assert ideal_intersection(BoolPrincipalIdeal(bits, g), fin) == BoolPrincipalIdeal(bits, g)
    assert BoolPrincipalIdeal(bits, g).issubset(fin)
    assert not fin.issubset(BoolPrincipalIdeal(bits, g))
    assert fin.issubset(BoolPrincipalIdeal(bits, bits.one))


def test_enumerate_ideals_matches_brute_force():
    for text in ("Z/4", "Z/6", "Z/12", "GF(4)", "Z/2[x]/(x^2+x)"):
        ring = parse_ring(text)
        computed = {i.elements for i in enumerate_ideals(ring)}
        oracle = set(brute_force_ideals(ring))
        assert computed == oracle, text


def test_enumerate_ideals_counts():
    assert len(enumerate_ideals(parse_ring("Z/12"))) == 6
    assert len(enumerate_ideals(parse_ring("Z/6"))) == 4
    assert len(enumerate_ideals(parse_ring("GF(4)"))) == 2
    zl = parse_ring("Zloc(2)")
    found = enumerate_ideals(zl, local_level_bound=4)
    assert [i.label() for i in found] == ["(0)", "(1)", "(2)", "(2^2)", "(2^3)", "(2^4)"]


def test_prime_ideals_match_definition(finite_ring):
    for ideal in enumerate_ideals(finite_ring):
        assert is_prime_ideal(ideal) == brute_force_is_prime(finite_ring, ideal.elements)


def test_prime_ideals_symbolic():
    zl = LocalizedIntegerRing(2)
    assert is_prime_ideal(LocalIdeal(zl, None))
    assert is_prime_ideal(LocalIdeal(zl, 1))
    assert not is_prime_ideal(LocalIdeal(zl, 0))
    assert not is_prime_ideal(LocalIdeal(zl, 2))


def test_product_ideal_componentwise():
    mixed = parse_ring("Zloc(2) * Z/3")
    one = unit_ideal(mixed)
    assert one.is_whole()
    gen = ideal_from_generators(mixed, [mixed.element((Fraction(2), 0))])
    assert gen.label() == "(2) x (0)"
    assert gen.contains(mixed.element((Fraction(4), 0)))
    assert not gen.contains(mixed.element((Fraction(1), 0)))
    assert not gen.contains(mixed.element((Fraction(2), 1)))
    assert radical(gen).label() == "(2) x (0)"
    kernel = saturation_kernel(gen)
    assert kernel.label() == "(0) x (0)"


def test_ideal_labels_round_trip_principal():
    z12 = parse_ring("Z/12")
    for ideal in enumerate_ideals(z12):
        label = ideal.label()
        assert label.startswith("(") and label.endswith(")")
    assert principal_ideal(z12, z12.element(3)).label() == "(3)"
    assert zero_ideal(z12).label() == "(0)"
    assert unit_ideal(z12).label() == "(1)"
