"""Carrier-level checks: validation, residuum derivation, element classes,
products, quotients, isomorphism."""

import pytest

from reslat import catalog, core, fileformat as ff
from reslat.errors import (
    AdjunctionFails,
    CarrierTooLarge,
    NotAFilter,
    NotALattice,
    NotCommutativeMonoid,
    UsageError,
)

CATALOG_NAMES = (
    "A6", "A8", "chain2", "chain3", "chain4", "chain5", "chain6",
    "cube1", "cube2", "cube3", "MV3",
)

PRELINEAR = {
    "A6": False, "A8": False,
    "chain2": True, "chain3": True, "chain4": True, "chain5": True,
    "chain6": True, "cube1": True, "cube2": True, "cube3": True, "MV3": True,
}


def test_catalog_names():
    assert catalog.catalog_names() == CATALOG_NAMES


def test_catalog_lookup_is_case_insensitive():
    assert catalog.get("a6") is catalog.get("A6")
    assert catalog.get("mv3") is catalog.get("MV3")
    assert catalog.get("nosuchthing") is None


@pytest.mark.parametrize("name", CATALOG_NAMES)
def test_catalog_entries_validate(name):
    a = catalog.get(name)
    rebuilt = core.validate(a.names, a.mul, covers=ff.cover_pairs(a), label=a.label)
    assert rebuilt.up == a.up
    assert rebuilt.res == a.res


@pytest.mark.parametrize("name", CATALOG_NAMES)
def test_derived_residuum_matches_stored_tables(name):
    a = catalog.get(name)
    assert core.derive_residuum(a) == a.res


def test_validate_rejects_broken_product():
    a = catalog.get("A6")
    mul = [list(r) for r in a.mul]
    mul[1][3] = mul[3][1] = 4  # a*c := d destroys the adjunction
    with pytest.raises(AdjunctionFails):
        core.validate(a.names, mul, covers=ff.cover_pairs(a))


def test_validate_rejects_noncommutative_product():
    a = catalog.get("A6")
    mul = [list(r) for r in a.mul]
    mul[1][2] = 0  # a*b != b*a
    with pytest.raises(NotCommutativeMonoid, match="not commutative at a,b"):
        core.validate(a.names, mul, covers=ff.cover_pairs(a))


def test_validate_rejects_non_lattice_order():
    # two incomparable atoms with two incomparable coatoms: ab has no join
    names = ("0", "a", "b", "c", "d", "1")
    covers = [(0, 1), (0, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 5), (4, 5)]
    mul = [[min(i, j) for j in range(6)] for i in range(6)]
    with pytest.raises(NotALattice):
        core.validate(names, mul, covers=covers)


def test_validate_respects_size_bound(monkeypatch):
    monkeypatch.setenv("RESLAT_MAX_SIZE", "4")
    a = catalog.get("chain5")
    with pytest.raises(CarrierTooLarge):
        core.validate(a.names, a.mul, covers=ff.cover_pairs(a))


def test_size_bound_rejects_garbage_env(monkeypatch):
    monkeypatch.setenv("RESLAT_MAX_SIZE", "banana")
    with pytest.raises(UsageError, match="RESLAT_MAX_SIZE must be an integer, got 'banana'"):
        core.size_bound()


def test_classify_elements_a6():
    a = catalog.get("A6")
    cls = core.classify_elements(a)
    assert a.set_repr(cls.nilpotents) == "{0}"
    assert a.set_repr(cls.interior) == "{a,b,c,d,1}"
    assert a.set_repr(cls.boolean_center) == "{0,1}"
    assert a.set_repr(cls.idempotents) == "{0,a,c,d,1}"


def test_classify_elements_a8():
    a = catalog.get("A8")
    cls = core.classify_elements(a)
    assert a.set_repr(cls.nilpotents) == "{0,b}"
    assert a.set_repr(cls.interior) == "{a,c,d,e,f,1}"
    assert a.set_repr(cls.boolean_center) == "{0,1}"
    assert a.set_repr(cls.idempotents) == "{0,a,c,f,1}"


def test_nilpotence_orders_a8():
    a = catalog.get("A8")
    cls = core.classify_elements(a)
    assert cls.nilpotence_order == ((0, 1), (2, 2))  # 0^1 = 0, b^2 = 0
    assert cls.order_of(0) == 1
    assert cls.order_of(2) == 2
    assert cls.order_of(a.one) is None


@pytest.mark.parametrize("name", CATALOG_NAMES)
def test_prelinearity(name):
    assert core.is_prelinear(catalog.get(name)) is PRELINEAR[name]


def test_direct_product_of_chains_is_the_square():
    p = core.direct_product(catalog.get("chain2"), catalog.get("chain2"))
    assert p.n == 4
    assert p.label == "chain2xchain2"
    assert p.names == ("(0,0)", "(0,1)", "(1,0)", "(1,1)")
    assert core.is_isomorphic(p, catalog.get("cube2"))


def test_direct_product_respects_size_bound(monkeypatch):
    monkeypatch.setenv("RESLAT_MAX_SIZE", "4")
    with pytest.raises(CarrierTooLarge):
        core.direct_product(catalog.get("chain2"), catalog.get("chain3"))


def test_quotient_by_principal_filter():
    a = catalog.get("A6")
    fd = 0b110000  # {d,1}
    q, proj = core.quotient(a, fd)
    assert q.n == 4
    assert q.label == "A6/{d,1}"
    assert proj == (0, 1, 1, 2, 3, 3)
    # projection is a homomorphism for the three operations
    for x in range(a.n):
        for y in range(a.n):
            assert proj[a.mul[x][y]] == q.mul[proj[x]][proj[y]]
            assert proj[a.join[x][y]] == q.join[proj[x]][proj[y]]
            assert proj[a.meet[x][y]] == q.meet[proj[x]][proj[y]]


def test_quotient_by_improper_filter_is_trivial():
    a = catalog.get("A6")
    q, proj = core.quotient(a, a.full)
    assert q.n == 1
    assert proj == (0,) * 6


def test_quotient_rejects_non_filter():
    a = catalog.get("A6")
    with pytest.raises(NotAFilter):
        core.quotient(a, 0b000101)  # {0,b}


def test_find_isomorphism_distinguishes_same_size_algebras():
    # both have three elements, but the middle of MV3 is nilpotent
    assert core.find_isomorphism(catalog.get("chain3"), catalog.get("MV3")) is None
    assert not core.is_isomorphic(catalog.get("chain3"), catalog.get("MV3"))


def test_find_isomorphism_inverts_a_relabeling():
    a = catalog.get("A8")
    perm = (0, 3, 1, 5, 2, 6, 4, 7)  # reshuffle the middle elements
    names = tuple(f"e{i}" for i in range(8))
    mul = [[0] * 8 for _ in range(8)]
    for x in range(8):
        for y in range(8):
            mul[perm[x]][perm[y]] = perm[a.mul[x][y]]
    covers = [(perm[lo], perm[hi]) for lo, hi in ff.cover_pairs(a)]
    b = core.validate(names, mul, covers=covers, label="shuffled")
    iso = core.find_isomorphism(a, b)
    assert iso is not None
    for x in range(8):
        for y in range(8):
            assert iso[a.mul[x][y]] == b.mul[iso[x]][iso[y]]


def test_set_repr_and_masks():
    a = catalog.get("A6")
    assert a.set_repr(0) == "{}"
    assert a.set_repr(a.full) == "{0,a,b,c,d,1}"
    assert core.mask_of([0, 2, 4]) == 0b10101
    assert list(core.bits(0b10101)) == [0, 2, 4]
