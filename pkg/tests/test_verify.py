import pytest

from polycyclic.verify import PROPERTIES, Outcome, run_suite

# Properties whose literal statements have counterexamples on the small grid, with the
# observed counts.  Each has a corrected companion in HOLDING.
COUNTEREXAMPLES = {
    "ms.homomorphism": (1503, 2000),
    "ms.paths.shift": (154, 200),
    "ms.paths.scale_literal": (34, 150),
    "ms.well_defined": (90, 120),
    "ms.det_formula": (2, 4),
    "ms.jordan": (3, 4),
    "idem.complement_literal": (75, 105),
    "mp.structure_literal": (112, 226),
    "mp.distance_literal": (154, 192),
    "mp.dual_cyc_general": (29, 68),
    "mp.sigma_dual": (112, 226),
}

HOLDING = sorted(set(PROPERTIES) - set(COUNTEREXAMPLES))


@pytest.mark.parametrize("name", HOLDING)
def test_holds_on_small_grid(name):
    o = PROPERTIES[name]("small")
    assert o.ok, f"{name}: {o.passed}/{o.total} {o.note}"


@pytest.mark.parametrize("name", sorted(COUNTEREXAMPLES))
def test_known_counterexample_counts(name):
    o = PROPERTIES[name]("small")
    assert (o.passed, o.total) == COUNTEREXAMPLES[name]


def test_field_contexts_are_homomorphic():
    note = PROPERTIES["ms.homomorphism"]("small").note
    assert "F2 n=2 m=2: 500/500" in note and "F4 n=3 m=2: 500/500" in note
    assert "Z4->Z16 n=2 m=3: 3/500" in note


def test_outcome_ok():
    assert Outcome(3, 3).ok and not Outcome(2, 3).ok and not Outcome(0, 0).ok


def test_run_suite_filter():
    names = [n for n, _ in run_suite("small", only=["hasse."])]
    assert names == [n for n in PROPERTIES if n.startswith("hasse.")]
    with pytest.raises(ValueError):
        list(run_suite("huge"))
