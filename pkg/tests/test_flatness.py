"""Flatness certificates, witnesses and the idempotent-generator oracle."""

from __future__ import annotations

from fractions import Fraction

import pytest

from spectop import (
    EventuallyConstantBitsRing,
    NotFlat,
    NotGenStable,
    NotZariskiClosed,
    common_multiplier,
    enumerate_ideals,
    enumerate_spectrum,
    finite_support_ideal,
    flat_ideal_from_closed_set,
    flat_witness,
    idempotent_generator,
    ideal_from_generators,
    idempotents,
    is_cyclic_flat,
    is_cyclic_projective,
    is_stable_generalization,
    parse_ring,
    principal_ideal,
    radical,
    support_of_ideal,
    unit_ideal,
    vanishing_locus,
    zero_ideal,
)
from spectop.ideals import LocalIdeal


def test_flat_frozen_examples():
    z6 = parse_ring("Z/6")
    cert = is_cyclic_flat(principal_ideal(z6, z6.element(2)))
    assert cert.verdict and cert.verify()
    two = z6.element(2)
    triple = next(w for w in cert.witnesses if w[0] == two)
    f, a, b = triple
    assert a * f == z6.zero and a + b == z6.one and cert.ideal.contains(b)

    z4 = parse_ring("Z/4")
    bad = is_cyclic_flat(principal_ideal(z4, z4.element(2)))
    assert not bad.verdict and bad.failing == z4.element(2) and bad.verify()

    z12 = parse_ring("Z/12")
    assert is_cyclic_flat(zero_ideal(z12)).verdict


def test_flat_exhaustive_pair_search(finite_ring):
    """The certificate verdict agrees with a direct exhaustive search."""
    one = finite_ring.one
    zero = finite_ring.zero
    for ideal in enumerate_ideals(finite_ring):
        expected = all(
            any(a * f == zero and ideal.contains(one - a) for a in finite_ring.elements())
            for f in ideal.elements)
        cert = is_cyclic_flat(ideal)
        assert cert.verdict == expected
        assert cert.verify()


def test_flat_against_idempotent_oracle(finite_ring):
    """flat <=> the ideal is generated by a single idempotent."""
    for ideal in enumerate_ideals(finite_ring):
        by_idempotent = any(
            frozenset(r * e for r in finite_ring.elements()) == ideal.elements
            for e in idempotents(finite_ring))
        assert is_cyclic_flat(ideal).verdict == by_idempotent
        assert is_cyclic_projective(ideal) == by_idempotent


def test_flat_local_ring():
    zl = parse_ring("Zloc(2)")
    assert is_cyclic_flat(LocalIdeal(zl, None)).verdict
    assert is_cyclic_flat(LocalIdeal(zl, 0)).verdict
    cert = is_cyclic_flat(LocalIdeal(zl, 2))
    assert not cert.verdict
    assert cert.failing == zl.element(4)
    assert cert.verify()


def test_flat_bits_ring():
    bits = EventuallyConstantBitsRing()
    fin = finite_support_ideal(bits)
    cert = is_cyclic_flat(fin)
    assert cert.verdict and cert.verify()
    f = bits.indicator({2, 5})
    a, b = flat_witness(fin, f)
    assert a == bits.one - f and b == f
    small = principal_ideal(bits, bits.indicator({1, 2}))
    assert is_cyclic_flat(small).verdict
    assert is_cyclic_projective(small)
    assert not is_cyclic_projective(fin)
    assert idempotent_generator(fin) is None


def test_flat_mixed_product():
    mixed = parse_ring("Zloc(2) * Z/3")
    flat = ideal_from_generators(mixed, [mixed.element((Fraction(0), 1))])
    cert = is_cyclic_flat(flat)
    assert cert.verdict and cert.verify()
    bad = ideal_from_generators(mixed, [mixed.element((Fraction(2), 1))])
    cert2 = is_cyclic_flat(bad)
    assert not cert2.verdict and cert2.verify()
    assert bad.contains(cert2.failing)


def test_flat_witness_requires_membership():
    z6 = parse_ring("Z/6")
    ideal = principal_ideal(z6, z6.element(2))
    with pytest.raises(ValueError):
        flat_witness(ideal, z6.element(1))


def test_common_multiplier_frozen_examples():
    z6 = parse_ring("Z/6")
    g = common_multiplier(principal_ideal(z6, z6.element(2)),
                          [z6.element(2), z6.element(4)])
    assert g == z6.element(4)

    z12 = parse_ring("Z/12")
    g12 = common_multiplier(principal_ideal(z12, z12.element(4)),
                            [z12.element(4), z12.element(8)])
    assert g12 == z12.element(4)

    assert common_multiplier(zero_ideal(z12), [z12.zero]) == z12.zero


def test_common_multiplier_property(finite_ring):
    for ideal in enumerate_ideals(finite_ring):
        if not is_cyclic_flat(ideal).verdict:
            with pytest.raises(NotFlat):
                common_multiplier(ideal, list(ideal.elements)[:2])
            continue
        fs = ideal.sorted_elements()
        g = common_multiplier(ideal, fs)
        assert ideal.contains(g)
        for f in fs:
            assert f * g == f


def test_idempotent_generator_frozen_examples():
    z12 = parse_ring("Z/12")
    assert idempotent_generator(principal_ideal(z12, z12.element(3))) == z12.element(9)
    assert idempotent_generator(zero_ideal(z12)) == z12.zero
    z4 = parse_ring("Z/4")
    assert idempotent_generator(principal_ideal(z4, z4.element(2))) is None
    assert is_cyclic_projective(unit_ideal(z4))


def test_support_frozen_examples():
    z6 = parse_ring("Z/6")
    supp = support_of_ideal(principal_ideal(z6, z6.element(2)))
    assert sorted(p.label() for p in supp) == ["(3)"]
    z12 = parse_ring("Z/12")
    assert support_of_ideal(zero_ideal(z12)) == frozenset()
    z4 = parse_ring("Z/4")
    supp4 = support_of_ideal(principal_ideal(z4, z4.element(2)))
    assert sorted(p.label() for p in supp4) == ["(2)"]


def test_support_contains_complement_of_locus(corpus_ring):
    try:
        ideals = enumerate_ideals(corpus_ring)
    except Exception:
        return
    sp = enumerate_spectrum(corpus_ring)
    for ideal in ideals:
        supp = support_of_ideal(ideal)
        outside = sp.as_set() - vanishing_locus(corpus_ring, ideal)
        assert outside <= supp
        if is_cyclic_flat(ideal).verdict:
            assert supp == outside


def test_flat_loci_are_generalization_stable(finite_ring):
    for ideal in enumerate_ideals(finite_ring):
        if is_cyclic_flat(ideal).verdict:
            assert is_stable_generalization(
                finite_ring, vanishing_locus(finite_ring, ideal))


def test_flat_radical_forces_equality(finite_ring):
    # holds on every finite ring, reduced or not
    for ideal in enumerate_ideals(finite_ring):
        root = radical(ideal)
        if is_cyclic_flat(root).verdict:
            assert ideal == root


def test_flat_ideal_from_closed_set_examples():
    z12 = parse_ring("Z/12")
    sp = enumerate_spectrum(z12)
    pts = {p.label(): p for p in sp.points}
    kernel = flat_ideal_from_closed_set(z12, {pts["(2)"]})
    assert kernel.label() == "(4)"
    assert flat_ideal_from_closed_set(z12, sp.as_set()).is_zero()
    assert flat_ideal_from_closed_set(z12, frozenset()).is_whole()

    mixed = parse_ring("Zloc(2) * Z/3")
    spm = enumerate_spectrum(mixed)
    mpts = {p.label(): p for p in spm.points}
    kernel2 = flat_ideal_from_closed_set(
        mixed, {mpts["(0) x (1)"], mpts["(2) x (1)"]})
    assert kernel2.label() == "(0) x (1)"
    assert vanishing_locus(mixed, kernel2) == frozenset(
        {mpts["(0) x (1)"], mpts["(2) x (1)"]})


def test_flat_ideal_from_closed_set_rejections():
    zl = parse_ring("Zloc(2)")
    sp = enumerate_spectrum(zl)
    zero, two = sp.points
    with pytest.raises(NotGenStable):
        flat_ideal_from_closed_set(zl, {two})
    with pytest.raises(NotZariskiClosed):
        flat_ideal_from_closed_set(zl, {zero})
    with pytest.raises(ValueError):
        z12 = parse_ring("Z/12")
        flat_ideal_from_closed_set(z12, {zero})
