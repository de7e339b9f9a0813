import pytest

from sringlab.ring import validate_ring_axioms
from sringlab.spec import build_ring
from sringlab.survey import (
    FAULT_RING,
    INVARIANTS,
    SurveyConfig,
    boolean_family,
    cyclic_family,
    idealization_family,
    inject_fault,
    normalize_invariant,
    product_family,
    quotient_family,
    ring_family,
    run_survey,
    sweep_ring,
)

SMALL = ["Z4", "Z6", "Z12", "Z2xZ2", "Z2(+)self", "Z8/(4)"]


class TestFamilies:
    def test_cyclic(self):
        assert cyclic_family(6) == ["Z2", "Z3", "Z4", "Z5", "Z6"]

    def test_families_build_within_bounds(self):
        for fam in (product_family(16), idealization_family(16), quotient_family(16), boolean_family()):
            for spec in fam:
                R = build_ring(spec)
                assert R.order <= 16 and validate_ring_axioms(R) is None

    def test_standard_has_no_duplicates(self):
        specs = ring_family()
        assert len(specs) == len(set(specs))
        assert "Z24" in specs and "Z2xZ2xZ2" in specs

    def test_unknown_family(self):
        with pytest.raises(ValueError):
            ring_family("mystery")


class TestInvariantNames:
    @pytest.mark.parametrize("raw,name", [("s-domain<=>cancellation", "s-domain<=>cancellation"),
                                          ("s-domain ⟺ cancellation", "s-domain<=>cancellation"),
                                          ("s-field ⇒ s-domain", "s-field=>s-domain")])  # fmt: skip
    def test_normalize(self, raw, name):
        assert normalize_invariant(raw) == name

    def test_unknown(self):
        with pytest.raises(KeyError):
            normalize_invariant("everything<=>nothing")


class TestSweep:
    @pytest.mark.parametrize("spec", SMALL)
    def test_clean_rings_have_no_counterexamples(self, spec):
        sw = sweep_ring(build_ring(spec), spec)
        assert sw.errors == []
        assert all(not t.counterexamples for t in sw.tallies.values())
        assert sw.tallies["s-domain<=>cancellation"].checked == sw.mult_sets

    def test_fault_is_named_as_axiom_failure(self):
        R = inject_fault(build_ring(FAULT_RING))
        sw = sweep_ring(R, FAULT_RING)
        assert sw.tallies["ring-axioms"].counterexamples

    def test_fault_visible_without_axiom_check(self):
        R = inject_fault(build_ring(FAULT_RING))
        names = tuple(n for n in INVARIANTS if n != "ring-axioms")
        sw = sweep_ring(R, FAULT_RING, names)
        found = sum(len(t.counterexamples) for t in sw.tallies.values()) + len(sw.errors)
        assert found > 0


class TestRunSurvey:
    def test_parallel_matches_sequential(self):
        seq = run_survey(SurveyConfig(jobs=1), rings=SMALL)
        par = run_survey(SurveyConfig(jobs=2), rings=SMALL)
        assert seq.rings == par.rings
        assert {k: v.checked for k, v in seq.tallies.items()} == {k: v.checked for k, v in par.tallies.items()}
        assert seq.counterexample_count == par.counterexample_count == 0

    def test_fault_injection(self):
        res = run_survey(SurveyConfig(inject_fault=True), rings=["Z6", FAULT_RING])
        assert res.counterexample_count > 0
        assert all(c["ring"] == FAULT_RING for t in res.tallies.values() for c in t.counterexamples)
