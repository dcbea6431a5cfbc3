"""Corpus-driven verification of the library's structural claims.

Every check ties one mathematical statement to an executable, exhaustive
test over one ring: the topology characterizations, the closure operators
on closed sets, the bijection between flat-quotient ideals and closed
generalization-stable sets, the radical rigidity corollaries on reduced
rings, the S-ring equivalences, the modular CRT decomposition, the
covering chain conditions, and the bits-ring witness of a flat cyclic
quotient that is not projective.

Checks are pure: they return plain-data :class:`TheoremReport` values and
perform no I/O; serialization lives in the command line layer.  A failing
report always carries a counterexample payload that reproduces the
failure when re-run.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .dsl import parse_ring
from .errors import (
    CorpusError,
    HypothesisViolated,
    SpectopError,
    SpectrumTooLarge,
    UnsupportedForPresentation,
)
from .flatness import (
    flat_ideal_from_closed_set,
    is_cyclic_flat,
    is_cyclic_projective,
    support_of_ideal,
)
from .ideals import (
    enumerate_ideals,
    finite_support_ideal,
    principal_ideal,
    radical,
    zero_ideal,
)
from .rings import (
    EventuallyConstantBitsRing,
    ModularRing,
    ProductRing,
    Ring,
    idempotents,
)
from .spectrum import (
    FLAT,
    PATCH,
    ZARISKI,
    closed_family,
    enumerate_spectrum,
    generalization_closure,
    is_stable_generalization,
    is_stable_specialization,
    specialization_closure,
    vanishing_locus,
)
from .sring import (
    chain_condition_check,
    check_chain_stabilization,
    growing_indicator_chain,
    sring_certificate,
    stabilization_graph_check,
)

__all__ = [
    "CHECK_NAMES",
    "DEFAULT_CORPUS",
    "CorpusEntry",
    "CorpusReport",
    "TheoremReport",
    "applicable_checks",
    "corpus_from_document",
    "run_check",
    "run_corpus",
    "run_ring_checks",
]


@dataclass(frozen=True)
class CorpusEntry:
    """One ring of the corpus: its description plus optional expected facts."""

    ring_text: str
    expect: dict = field(default_factory=dict)


@dataclass(frozen=True)
class TheoremReport:
    """Outcome of one check on one ring; plain data, JSON-friendly."""

    check: str
    ring: str
    verdict: str  # "pass" | "fail" | "skipped"
    details: dict = field(default_factory=dict)
    counterexample: dict | None = None

    @property
    def failed(self) -> bool:
        return self.verdict == "fail"


def _labels(points) -> list[str]:
    return sorted(p.label() for p in points)


def _family_labels(sets) -> list[list[str]]:
    return sorted((_labels(s) for s in sets), key=lambda ls: (len(ls), ls))


def _spectrum_enumerable(ring: Ring) -> bool:
    try:
        enumerate_spectrum(ring)
        return True
    except (UnsupportedForPresentation, SpectrumTooLarge):
        return False


def _is_reduced(ring: Ring) -> bool:
    return radical(zero_ideal(ring)).is_zero()


# ---------------------------------------------------------------------------
# individual checks


def check_topology_characterization(ring: Ring, entry=None) -> TheoremReport:
    """Flat closed = patch closed + generalization stable, and dually.

    Also asserts that the patch family is the full power set of the
    spectrum and that the V(f) sub-basis and the V(I) basis generate the
    same flat and Zariski families.
    """
    name = "topology-characterization"
    zfam = closed_family(ring, ZARISKI)
    ffam = closed_family(ring, FLAT)
    pfam = closed_family(ring, PATCH)
    full = pfam.spectrum.as_set()

    expect_flat = frozenset(s for s in pfam.sets if is_stable_generalization(ring, s))
    expect_zar = frozenset(s for s in pfam.sets if is_stable_specialization(ring, s))
    problems = []
    if ffam.sets != expect_flat:
        problems.append("flat family differs from patch-closed gen-stable sets")
    if zfam.sets != expect_zar:
        problems.append("zariski family differs from patch-closed spec-stable sets")
    if not (zfam.sets <= pfam.sets and ffam.sets <= pfam.sets):
        problems.append("patch family does not refine the other two")
    if len(pfam.sets) != 2 ** len(full):
        problems.append("patch family is not the full power set")
    if closed_family(ring, FLAT, use_ideal_basis=True).sets != ffam.sets:
        problems.append("flat families from V(f) and V(I) bases disagree")
    if closed_family(ring, ZARISKI, use_ideal_basis=True).sets != zfam.sets:
        problems.append("zariski families from V(f) and V(I) bases disagree")

    details = {
        "points": len(full),
        "zariski_closed": len(zfam.sets),
        "flat_closed": len(ffam.sets),
        "patch_closed": len(pfam.sets),
    }
    if problems:
        return TheoremReport(name, ring.describe(), "fail", details,
                             {"problems": problems})
    return TheoremReport(name, ring.describe(), "pass", details)


def check_closure_operators(ring: Ring, entry=None) -> TheoremReport:
    """Generalization closures of Zariski closed sets are flat closed,
    specialization closures of patch closed sets are Zariski closed, and
    every closed generalization-stable set is V(J) for a flat kernel J."""
    name = "closure-operators"
    zfam = closed_family(ring, ZARISKI)
    ffam = closed_family(ring, FLAT)
    pfam = closed_family(ring, PATCH)

    for E in zfam.sets:
        if generalization_closure(ring, E) not in ffam.sets:
            return TheoremReport(
                name, ring.describe(), "fail", {},
                {"operator": "generalization", "set": _labels(E)})
    for E in pfam.sets:
        if specialization_closure(ring, E) not in zfam.sets:
            return TheoremReport(
                name, ring.describe(), "fail", {},
                {"operator": "specialization", "set": _labels(E)})

    kernels = []
    for E in sorted(zfam.sets, key=lambda s: (len(s), _labels(s))):
        if not is_stable_generalization(ring, E):
            continue
        kernel = flat_ideal_from_closed_set(ring, E)
        if vanishing_locus(ring, kernel) != E or not is_cyclic_flat(kernel).verdict:
            return TheoremReport(
                name, ring.describe(), "fail", {},
                {"operator": "flat-kernel", "set": _labels(E),
                 "kernel": kernel.label()})
        kernels.append({"set": _labels(E), "kernel": kernel.label()})

    return TheoremReport(name, ring.describe(), "pass",
                         {"flat_kernels": kernels,
                          "zariski_closed": len(zfam.sets),
                          "patch_closed": len(pfam.sets)})


def check_flat_ideal_bijection(ring: Ring, entry=None) -> TheoremReport:
    """I -> V(I) is a bijection from flat-quotient ideals onto the Zariski
    closed generalization-stable sets, verified against full enumeration."""
    name = "flat-ideal-bijection"
    ideals = enumerate_ideals(ring)
    flats = [i for i in ideals if is_cyclic_flat(i).verdict]
    image = {}
    for i in flats:
        image.setdefault(vanishing_locus(ring, i), []).append(i)
    zfam = closed_family(ring, ZARISKI)
    codomain = {s for s in zfam.sets if is_stable_generalization(ring, s)}

    problems = []
    for locus, sources in image.items():
        if len(sources) > 1:
            problems.append({"kind": "not-injective",
                             "ideals": [i.label() for i in sources],
                             "set": _labels(locus)})
        if locus not in codomain:
            problems.append({"kind": "not-well-defined",
                             "ideal": sources[0].label(), "set": _labels(locus)})
    for s in codomain:
        if s not in image:
            problems.append({"kind": "not-surjective", "set": _labels(s)})

    details = {
        "ideals": len(ideals),
        "flat_ideals": len(flats),
        "flat_ideal_labels": sorted(i.label() for i in flats),
        "closed_genstable_sets": len(codomain),
        "image": _family_labels(image.keys()),
    }
    if problems:
        return TheoremReport(name, ring.describe(), "fail", details,
                             {"problems": problems})
    return TheoremReport(name, ring.describe(), "pass", details)


def check_radical_rigidity(ring: Ring, entry=None) -> TheoremReport:
    """On a reduced ring: flat radicals force equality (I = sqrt I when the
    quotient by sqrt I is flat), flat-quotient ideals are radical, and a
    flat-quotient ideal is determined by its vanishing locus."""
    name = "radical-rigidity"
    if not ring.is_finite:
        return TheoremReport(name, ring.describe(), "skipped",
                             {"reason": "only finite rings are checked here"})
    nil = radical(zero_ideal(ring))
    if not nil.is_zero():
        return TheoremReport(
            name, ring.describe(), "skipped",
            {"reason": f"not reduced: nilradical is {nil.label()}"})
    ideals = enumerate_ideals(ring)
    for i in ideals:
        root = radical(i)
        if is_cyclic_flat(root).verdict and i != root:
            return TheoremReport(
                name, ring.describe(), "fail", {},
                {"kind": "flat-radical", "ideal": i.label(), "radical": root.label()})
        if is_cyclic_flat(i).verdict and i != root:
            return TheoremReport(
                name, ring.describe(), "fail", {},
                {"kind": "flat-not-radical", "ideal": i.label()})
    for i in ideals:
        if not is_cyclic_flat(i).verdict:
            continue
        vi = vanishing_locus(ring, i)
        for j in ideals:
            if vanishing_locus(ring, j) == vi and i != j:
                return TheoremReport(
                    name, ring.describe(), "fail", {},
                    {"kind": "locus-collision", "ideals": [i.label(), j.label()]})
    return TheoremReport(name, ring.describe(), "pass", {"ideals": len(ideals)})


def check_sring_equivalences(ring: Ring, entry=None) -> TheoremReport:
    """The open/closed S-ring characterizations, including the double-closed
    to idempotent correspondence and the patch clopen condition."""
    name = "sring-equivalences"
    cert = sring_certificate(ring)
    pfam = closed_family(ring, PATCH)
    patch_ok = True
    for E in pfam.sets:
        if is_stable_generalization(ring, E) and is_stable_specialization(ring, E):
            if pfam.spectrum.as_set() - E not in pfam.sets:
                patch_ok = False
    details = {
        "double_closed": [
            {"set": _labels(s), "idempotent": str(e)}
            for s, e in cert.double_closed_matches
        ],
        "idempotents": [str(e) for e in idempotents(ring)],
    }
    if not (cert.passed and patch_ok):
        return TheoremReport(name, ring.describe(), "fail", details,
                             {"failures": list(cert.failures),
                              "patch_clopen_ok": patch_ok})
    return TheoremReport(name, ring.describe(), "pass", details)


def check_crt_decomposition(ring: Ring, entry=None) -> TheoremReport:
    """Z/n with several prime power factors splits through orthogonal
    idempotents into projective summands that are all too small to be free."""
    name = "crt-decomposition"
    if not isinstance(ring, ModularRing):
        return TheoremReport(name, ring.describe(), "skipped",
                             {"reason": "only modular rings decompose here"})
    n = ring.modulus
    factors = _prime_power_factors(n)
    if len(factors) < 2:
        return TheoremReport(name, ring.describe(), "skipped",
                             {"reason": "modulus is a prime power; the ring is local"})

    idems = []
    for q in factors:
        m = n // q
        inv = pow(m, -1, q)
        idems.append(ring.element(m * inv))
    total = ring.zero
    problems = []
    for e in idems:
        if e * e != e:
            problems.append(f"{e} is not idempotent")
        total = total + e
    if total != ring.one:
        problems.append("idempotents do not sum to 1")
    for i, a in enumerate(idems):
        for b in idems[i + 1:]:
            if a * b != ring.zero:
                problems.append(f"{a} and {b} are not orthogonal")

    summands = []
    for q, e in zip(factors, idems):
        span = {r * e for r in ring.elements()}
        card = len(span)
        summands.append({"idempotent": str(e), "cardinality": card})
        if card != q:
            problems.append(f"summand of {e} has {card} elements, expected {q}")
        if not is_cyclic_projective(principal_ideal(ring, e)):
            problems.append(f"summand of {e} is not projective")
        # a nonzero free module over Z/n has at least n elements
        if not card < n:
            problems.append(f"summand of {e} is not smaller than the ring")

    details = {"factors": factors, "summands": summands,
               "min_free_cardinality": n}
    if problems:
        return TheoremReport(name, ring.describe(), "fail", details,
                             {"problems": problems})
    return TheoremReport(name, ring.describe(), "pass", details)


def _prime_power_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            q = 1
            while n % d == 0:
                q *= d
                n //= d
            out.append(q)
        d += 1
    if n > 1:
        out.append(n)
    return sorted(out)


def check_flat_not_projective(ring: Ring, entry=None) -> TheoremReport:
    """The bits-ring witness: the indicator chain never stabilizes and the
    finitely supported ideal is cyclic-flat but not cyclic-projective."""
    name = "flat-not-projective"
    if not isinstance(ring, EventuallyConstantBitsRing):
        return TheoremReport(name, ring.describe(), "skipped",
                             {"reason": "the witness lives in the bits ring"})
    budget = 100
    chain = growing_indicator_chain(ring, budget)
    report = check_chain_stabilization(chain)
    ideal = finite_support_ideal(ring)
    cert = is_cyclic_flat(ideal)
    problems = []
    if report.stabilized:
        problems.append("the indicator chain stabilized")
    if report.last_index != budget:
        problems.append("the chain was not materialized to the budget")
    if not (cert.verdict and cert.verify()):
        problems.append("the finitely supported ideal is not certified flat")
    if is_cyclic_projective(ideal):
        problems.append("the finitely supported ideal claims to be projective")
    details = {"budget": budget, "ideal": ideal.label(),
               "flat": cert.verdict,
               "projective": is_cyclic_projective(ideal),
               "reason_not_projective":
                   "no single generator: the ideal is a strictly increasing union"}
    if problems:
        return TheoremReport(name, ring.describe(), "fail", details,
                             {"problems": problems})
    return TheoremReport(name, ring.describe(), "pass", details)


def check_chain_conditions(ring: Ring, entry=None) -> TheoremReport:
    """The covering chain condition with X the minimal primes and X the
    maximal ideals; both families are finite, so both conditions hold."""
    name = "chain-conditions"
    sp = enumerate_spectrum(ring)
    details = {}
    for tag, X in (("min", sp.minimal_points()), ("max", sp.maximal_points())):
        try:
            trace = chain_condition_check(ring, X)
        except HypothesisViolated as exc:
            return TheoremReport(name, ring.describe(), "fail", details,
                                 {"X": tag, "uncovered": exc.witness.label()})
        if not (trace.acc_holds and trace.dcc_holds and trace.conclusion.passed):
            return TheoremReport(name, ring.describe(), "fail", details,
                                 {"X": tag, "family": _family_labels(trace.family)})
        details[tag] = {"meet_ideal": trace.meet_ideal.label(),
                        "family_size": len(trace.family)}
    return TheoremReport(name, ring.describe(), "pass", details)


def check_stabilization_graph(ring: Ring, entry=None) -> TheoremReport:
    """On a finite ring, the relation f -> f' iff f = f*f' has no cycles
    besides self-loops at idempotents."""
    name = "stabilization-graph"
    if not ring.is_finite or len(ring.elements()) > 64:
        return TheoremReport(name, ring.describe(), "skipped",
                             {"reason": "cycle search is run for finite rings up to 64 elements"})
    ok, cycle = stabilization_graph_check(ring)
    if not ok:
        return TheoremReport(name, ring.describe(), "fail", {},
                             {"cycle": [str(e) for e in cycle]})
    return TheoremReport(name, ring.describe(), "pass",
                         {"elements": len(ring.elements())})


def check_support_consistency(ring: Ring, entry=None) -> TheoremReport:
    """Supp(I) always contains the complement of V(I), with equality for
    flat quotients."""
    name = "support-consistency"
    sp = enumerate_spectrum(ring)
    for ideal in enumerate_ideals(ring):
        supp = support_of_ideal(ideal)
        outside = sp.as_set() - vanishing_locus(ring, ideal)
        if not outside <= supp:
            return TheoremReport(name, ring.describe(), "fail", {},
                                 {"ideal": ideal.label(), "kind": "containment"})
        if is_cyclic_flat(ideal).verdict and supp != outside:
            return TheoremReport(name, ring.describe(), "fail", {},
                                 {"ideal": ideal.label(), "kind": "flat-equality"})
    return TheoremReport(name, ring.describe(), "pass", {})


def check_expected_facts(ring: Ring, entry: CorpusEntry | None = None) -> TheoremReport:
    """Compare computed spectrum size, flat ideal count and reducedness with
    the expectations recorded in the corpus entry."""
    name = "expected-facts"
    expect = dict(entry.expect) if entry is not None else {}
    if not expect:
        return TheoremReport(name, ring.describe(), "skipped",
                             {"reason": "no expected facts recorded"})
    computed = {}
    if "spectrum_size" in expect:
        computed["spectrum_size"] = len(enumerate_spectrum(ring))
    if "flat_ideals" in expect:
        computed["flat_ideals"] = sum(
            1 for i in enumerate_ideals(ring) if is_cyclic_flat(i).verdict)
    if "reduced" in expect:
        computed["reduced"] = _is_reduced(ring)
    mismatches = [
        {"field": key, "expected": expect[key], "computed": computed[key]}
        for key in computed if computed[key] != expect[key]
    ]
    if mismatches:
        return TheoremReport(name, ring.describe(), "fail",
                             {"computed": computed}, {"mismatches": mismatches})
    return TheoremReport(name, ring.describe(), "pass", {"computed": computed})


# ---------------------------------------------------------------------------
# registry and corpus driver


_SPECTRAL = "spectral"        # needs an enumerable, family-sized spectrum
_IDEALS = "ideals"            # additionally needs full ideal enumeration
_ANY = "any"

_CHECKS = {
    "topology-characterization": (check_topology_characterization, _SPECTRAL),
    "closure-operators": (check_closure_operators, _SPECTRAL),
    "flat-ideal-bijection": (check_flat_ideal_bijection, _IDEALS),
    "support-consistency": (check_support_consistency, _IDEALS),
    "radical-rigidity": (check_radical_rigidity, _ANY),
    "sring-equivalences": (check_sring_equivalences, _SPECTRAL),
    "crt-decomposition": (check_crt_decomposition, _ANY),
    "chain-conditions": (check_chain_conditions, _SPECTRAL),
    "stabilization-graph": (check_stabilization_graph, _ANY),
    "flat-not-projective": (check_flat_not_projective, _ANY),
    "expected-facts": (check_expected_facts, _ANY),
}

CHECK_NAMES = tuple(_CHECKS)


def applicable_checks(ring: Ring) -> tuple[str, ...]:
    names = []
    for name, (_, need) in _CHECKS.items():
        if need == _ANY:
            names.append(name)
            continue
        if not _spectrum_enumerable(ring):
            continue
        if len(enumerate_spectrum(ring)) > 16:
            continue
        if need == _IDEALS:
            if isinstance(ring, ProductRing) and not ring.is_finite:
                continue
            if isinstance(ring, EventuallyConstantBitsRing):
                continue
        names.append(name)
    return tuple(names)


def run_check(name: str, ring: Ring, entry: CorpusEntry | None = None) -> TheoremReport:
    if name not in _CHECKS:
        raise KeyError(f"unknown check {name!r}; known: {', '.join(CHECK_NAMES)}")
    fn, _ = _CHECKS[name]
    try:
        return fn(ring, entry)
    except (UnsupportedForPresentation, SpectrumTooLarge) as exc:
        return TheoremReport(name, ring.describe(), "skipped", {"reason": str(exc)})


def run_ring_checks(ring: Ring, entry: CorpusEntry | None = None) -> list[TheoremReport]:
    return [run_check(name, ring, entry) for name in applicable_checks(ring)]


@dataclass(frozen=True)
class CorpusReport:
    """Aggregated reports over one corpus run; sorted canonically."""

    reports: tuple[TheoremReport, ...]
    elapsed_seconds: float

    @property
    def failures(self) -> int:
        return sum(1 for r in self.reports if r.verdict == "fail")

    @property
    def passed(self) -> int:
        return sum(1 for r in self.reports if r.verdict == "pass")

    @property
    def skipped(self) -> int:
        return sum(1 for r in self.reports if r.verdict == "skipped")

    @property
    def all_passed(self) -> bool:
        return self.failures == 0


DEFAULT_CORPUS: tuple[CorpusEntry, ...] = (
    CorpusEntry("Z/4", {"spectrum_size": 1, "flat_ideals": 2, "reduced": False}),
    CorpusEntry("Z/6", {"spectrum_size": 2, "flat_ideals": 4, "reduced": True}),
    CorpusEntry("Z/12", {"spectrum_size": 2, "flat_ideals": 4, "reduced": False}),
    CorpusEntry("GF(4)", {"spectrum_size": 1, "flat_ideals": 2, "reduced": True}),
    CorpusEntry("Z/2[x]/(x^2+x)", {"spectrum_size": 2, "flat_ideals": 4, "reduced": True}),
    CorpusEntry("Zloc(2)", {"spectrum_size": 2, "flat_ideals": 2, "reduced": True}),
    CorpusEntry("Zloc(2) * Z/3", {"spectrum_size": 3, "reduced": True}),
    CorpusEntry("EvBits", {"reduced": True}),
)


def run_corpus(entries=None) -> CorpusReport:
    """Run every applicable check on every corpus entry."""
    if entries is None:
        entries = DEFAULT_CORPUS
    started = time.perf_counter()
    reports: list[TheoremReport] = []
    for index, entry in enumerate(entries):
        try:
            ring = parse_ring(entry.ring_text)
        except SpectopError as exc:
            raise CorpusError(str(exc), index=index) from exc
        reports.extend(run_ring_checks(ring, entry))
    reports.sort(key=lambda r: (r.ring, r.check))
    return CorpusReport(tuple(reports), time.perf_counter() - started)


def corpus_from_document(document) -> tuple[CorpusEntry, ...]:
    """Build corpus entries from a parsed JSON document.

    The document is an object with an ``entries`` array; each entry has a
    ``ring`` string and an optional ``expect`` object with any of the keys
    spectrum_size, flat_ideals, reduced.
    """
    if not isinstance(document, dict) or "entries" not in document:
        raise CorpusError("a corpus document is an object with an 'entries' array")
    raw = document["entries"]
    if not isinstance(raw, list):
        raise CorpusError("'entries' must be an array")
    entries = []
    allowed = {"spectrum_size", "flat_ideals", "reduced"}
    for index, item in enumerate(raw):
        if not isinstance(item, dict) or "ring" not in item:
            raise CorpusError("each entry is an object with a 'ring' string", index)
        expect = item.get("expect", {})
        if not isinstance(expect, dict) or not set(expect) <= allowed:
            raise CorpusError(
                f"expected facts may only use {sorted(allowed)}", index)
        entries.append(CorpusEntry(item["ring"], dict(expect)))
    return tuple(entries)
