"""Shared fixtures and independent brute-force oracles.

The oracles here are deliberately naive: ideals by scanning all subsets,
primality straight from the definition, generated ideals as the smallest
closed superset.  They stay independent of the production code paths they
are used to check.
"""

from __future__ import annotations

import itertools

import pytest

from spectop import parse_ring

CORPUS_TEXTS = (
    "Z/4",
    "Z/6",
    "Z/12",
    "GF(4)",
    "Z/2[x]/(x^2+x)",
    "Zloc(2)",
    "Zloc(2) * Z/3",
)

FINITE_CORPUS_TEXTS = tuple(t for t in CORPUS_TEXTS if "Zloc" not in t)


@pytest.fixture(params=CORPUS_TEXTS, ids=CORPUS_TEXTS)
def corpus_ring(request):
    return parse_ring(request.param)


@pytest.fixture(params=FINITE_CORPUS_TEXTS, ids=FINITE_CORPUS_TEXTS)
def finite_ring(request):
    return parse_ring(request.param)


def is_ideal_subset(ring, subset) -> bool:
    """Definition check: nonempty, closed under + and under r*."""
    subset = set(subset)
    if ring.zero not in subset:
        return False
    for a in subset:
        for b in subset:
            if a + b not in subset:
                return False
        for r in ring.elements():
            if r * a not in subset:
                return False
    return True


def brute_force_ideals(ring):
    """Every ideal of a small finite ring, by scanning all subsets."""
    elements = list(ring.elements())
    out = []
    for size in range(1, len(elements) + 1):
        for combo in itertools.combinations(elements, size):
            if is_ideal_subset(ring, combo):
                out.append(frozenset(combo))
    return out


def brute_force_generated(ring, gens):
    """The smallest ideal-subset containing the generators."""
    best = None
    for candidate in brute_force_ideals(ring):
        if all(g in candidate for g in gens):
            if best is None or len(candidate) < len(best):
                best = candidate
    return best


def brute_force_is_prime(ring, subset) -> bool:
    """Primality from the definition: proper and ab in I => a or b in I."""
    subset = set(subset)
    if ring.one in subset:
        return False
    for a in ring.elements():
        for b in ring.elements():
            if a * b in subset and a not in subset and b not in subset:
                return False
    return True
