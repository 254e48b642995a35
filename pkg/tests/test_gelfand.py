"""The Gelfand criteria engine: fourteen independently computed
characterizations that must agree, plus the soft/Hausdorff batteries."""

import pytest

from reslat import catalog, gelfand as gf
from reslat.errors import EquivalenceViolation

CRITERIA = (
    "unique_maximal",
    "contessa",
    "maximal_battery",
    "normal_filter_lattice",
    "spectral_separation",
    "max_retract",
    "spectrum_normal",
    "comaximal_classes",
    "dpart_classes",
    "topologies_match_on_max",
    "pure_spectrum_homeo",
    "sigma_battery",
    "rho_battery",
    "rho_rad_adjoint",
)

BATTERY_KEYS = (
    "separating_join",
    "dpart_comaximal",
    "dpart_negation_witness",
    "dpart_prime_inclusion",
    "dpart_proper_inclusion",
    "comaximal_transfer",
    "dpart_unique_maximal",
    "generalization_is_hull",
    "dpart_quotient_local",
    "power_negation_join",
)

# name -> (gelfand, soft, local, semisimple, rickart, baer)
CLASSIFICATION = {
    "A6": (False, False, False, False, True, True),
    "A8": (True, False, True, False, False, False),
    "chain2": (True, True, True, True, True, True),
    "chain3": (True, False, True, False, True, True),
    "chain4": (True, False, True, False, True, True),
    "chain5": (True, False, True, False, True, True),
    "chain6": (True, False, True, False, True, True),
    "cube1": (True, True, True, True, True, True),
    "cube2": (True, True, False, True, True, True),
    "cube3": (True, True, False, True, True, True),
    "MV3": (True, True, True, True, True, True),
}


def test_criteria_tuple_is_frozen():
    assert gf.CRITERIA == CRITERIA


def test_a6_fails_every_criterion():
    v = gf.gelfand_verdict(catalog.get("A6"))
    assert v.verdict is False
    assert set(v.criteria) == set(CRITERIA)
    assert set(v.criteria.values()) == {False}


def test_a6_witnesses():
    v = gf.gelfand_verdict(catalog.get("A6"))
    assert v.witnesses["unique_maximal"] == (
        "prime {1} lies under {c,d,1} and {a,b,d,1}"
    )
    assert v.witnesses["contessa"] == (
        "a*c = 0 but no powers have negations joining to 1"
    )


def test_a8_satisfies_every_criterion():
    v = gf.gelfand_verdict(catalog.get("A8"))
    assert v.verdict is True
    assert set(v.criteria.values()) == {True}
    assert v.witnesses == {}


@pytest.mark.parametrize("name", sorted(CLASSIFICATION))
def test_verdicts_are_unanimous_across_the_catalog(name):
    v = gf.gelfand_verdict(catalog.get(name))
    assert set(v.criteria) == set(CRITERIA)
    assert set(v.criteria.values()) == {v.verdict}


def test_unique_maximal_over_primes():
    ok6, wit6 = gf.unique_maximal_over_primes(catalog.get("A6"))
    ok8, wit8 = gf.unique_maximal_over_primes(catalog.get("A8"))
    assert not ok6 and wit6
    assert ok8 and wit8 is None


def test_contessa_check():
    ok6, pair6 = gf.contessa_check(catalog.get("A6"))
    ok8, pair8 = gf.contessa_check(catalog.get("A8"))
    assert not ok6 and pair6 is not None
    a6 = catalog.get("A6")
    x, y = pair6
    assert a6.mul[x][y] == a6.zero
    assert ok8 and pair8 is None


def test_maximal_battery_values():
    b6 = gf.maximal_battery(catalog.get("A6"))
    b8 = gf.maximal_battery(catalog.get("A8"))
    assert tuple(b6) == BATTERY_KEYS and set(b6.values()) == {False}
    assert tuple(b8) == BATTERY_KEYS and set(b8.values()) == {True}


def test_normality_and_separation_leaves():
    a6, a8 = catalog.get("A6"), catalog.get("A8")
    assert gf.normal_filter_lattice(a6) == {
        "all_filters": False, "principal_filters": False,
    }
    assert gf.normal_filter_lattice(a8) == {
        "all_filters": True, "principal_filters": True,
    }
    assert gf.spectral_separation(a6) == {
        "maximal_pairs_separated": False, "generalizations_closed": False,
    }
    assert gf.spectral_separation(a8) == {
        "maximal_pairs_separated": True, "generalizations_closed": True,
    }


def test_retractions():
    assert gf.retractions(catalog.get("A6")) == (0, None)
    assert gf.retractions(catalog.get("A8")) == (1, (0, 0, 0))
    assert gf.retractions(catalog.get("cube2")) == (1, (0, 1))


def test_relation_closures_merge_inseparable_primes():
    a6, a8 = catalog.get("A6"), catalog.get("A8")
    for kind in ("comaximal", "dpart"):
        assert gf.relation_closure(a6, kind) == (0b111,)
        assert gf.relation_closure(a8, kind) == (0b111,)
    assert not gf.relation_class_condition(a6, "comaximal")
    assert gf.relation_class_condition(a8, "comaximal")
    assert not gf.quotient_space_homeo(a6, "dpart")
    assert gf.quotient_space_homeo(a8, "dpart")


@pytest.mark.parametrize("name", sorted(CLASSIFICATION))
def test_hausdorff_battery_is_unanimous(name):
    battery = gf.hausdorff_battery(catalog.get(name))
    assert set(battery) == {
        "max_hausdorff", "radical_hull_unique_maximal",
        "max_retract_of_radical_hull", "radical_hull_normal",
        "generalizations_closed_in_radical_hull", "negation_joins_in_radical",
    }
    assert len(set(battery.values())) == 1


def test_hausdorff_battery_holds_on_both_flagships():
    """A6 fails Gelfand yet its maximal spectrum is still Hausdorff."""
    assert set(gf.hausdorff_battery(catalog.get("A6")).values()) == {True}
    assert set(gf.hausdorff_battery(catalog.get("A8")).values()) == {True}


@pytest.mark.parametrize("name", sorted(CLASSIFICATION))
def test_softness_routes_agree(name):
    soft, routes = gf.is_soft(catalog.get(name))
    assert set(routes) == {
        "semisimple_with_unique_maximals_over_radical",
        "max_hausdorff_and_dense",
        "gelfand_and_trivial_radical",
    }
    assert set(routes.values()) == {soft}
    assert soft is CLASSIFICATION[name][1]


@pytest.mark.parametrize("name", sorted(CLASSIFICATION))
def test_classification_flags(name):
    flags = gf.classification(catalog.get(name))
    assert (
        flags["gelfand"], flags["soft"], flags["local"],
        flags["semisimple"], flags["rickart"], flags["baer"],
    ) == CLASSIFICATION[name]


def test_forced_disagreement_raises(monkeypatch):
    """Sabotage one route; the engine must refuse to pick a side."""
    monkeypatch.setattr(gf, "contessa_check", lambda a: (False, (0, 0)))
    with pytest.raises(EquivalenceViolation, match="criteria disagree"):
        gf.gelfand_verdict(catalog.get("A8"))
