import pytest

from qcisyz.catalog import (
    builtin_catalog,
    catalog_entry,
    random_qci,
    search_tau_plus,
)
from qcisyz.fields import QQ, PrimeField
from qcisyz.pipeline import analyze, chern_and_formulas
from qcisyz.theorems import check_all

F = PrimeField(32003)

EXPECTED_NAMES = {
    "nodal-cubic",
    "nodal-quartic",
    "cubic-plus-line",
    "two-conics",
    "triangle",
    "lines-4",
    "lines-5",
    "lines-6",
}


def test_catalog_contents():
    names = {e.name for e in builtin_catalog()}
    assert EXPECTED_NAMES <= names
    with pytest.raises(KeyError):
        catalog_entry("no-such-entry")


@pytest.mark.parametrize("entry", builtin_catalog(), ids=lambda e: e.name)
def test_catalog_entries_verify_over_prime_field(entry):
    assert entry.verify(F) == {}


@pytest.mark.parametrize("name", ["nodal-cubic", "triangle", "two-conics"])
def test_small_entries_verify_over_rationals(name):
    assert catalog_entry(name).verify(QQ) == {}


def test_line_arrangements_have_nodal_tau():
    # generic arrangements: tau = number of intersection points = binom(d,2)
    for name, d in [("lines-4", 4), ("lines-5", 5), ("lines-6", 6)]:
        assert catalog_entry(name).expected["tau"] == d * (d - 1) // 2


def test_random_qci_is_valid_and_deterministic():
    a = random_qci(2, F, seed=1)
    b = random_qci(2, F, seed=1)
    assert [p.terms for p in a.polys] == [p.terms for p in b.polys]
    assert all(p.degree() == 2 and p.is_homogeneous() for p in a.polys)
    res = analyze(a)
    assert res.tau >= 1


def test_random_qci_different_seeds_differ():
    a = random_qci(3, F, seed=1)
    b = random_qci(3, F, seed=2)
    assert [p.terms for p in a.polys] != [p.terms for p in b.polys]


def test_random_qci_rejects_degree_one():
    with pytest.raises(ValueError):
        random_qci(1, F, seed=0)


def test_search_tau_plus_immediate_hit():
    hit = search_tau_plus(3, 2, budget=10, seed=1, field=F)
    assert hit is not None
    a = analyze(hit)
    assert a.tau == chern_and_formulas(3, 0, 2)["tau_plus"] == 1
    assert a.exponents[0] == 2
    rep = check_all(a, statements=("T14", "T15"), lift_retry=False)
    assert all(r.holds for r in rep.results)


def test_search_tau_plus_rejects_bad_range():
    from qcisyz.pipeline import InputError

    with pytest.raises(InputError):
        search_tau_plus(4, 1, budget=1, seed=0, field=F)
