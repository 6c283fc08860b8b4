import itertools
import json

import pytest

from slab import harness
from slab.harness import (COUNTEREXAMPLE, EXHAUSTED, PASS, PROP_IDS, Report, UnknownProposition,
                          direct_summands, enumerate_modules, hunt, parse_predicate, recheck_report, verify)
from slab.modules import direct_sum, from_invariants, is_isomorphic
from slab.mutations import MUTANTS, corrupted
from slab.ring import Ring, mult_set

Z12 = Ring(12)


def chains_oracle(n, k):
    divs = [d for d in range(2, n + 1) if n % d == 0]
    out = {()}
    for r in range(1, k + 1):
        for c in itertools.product(divs, repeat=r):
            if all(c[i + 1] % c[i] == 0 for i in range(r - 1)):
                out.add(c)
    return out


@pytest.mark.parametrize("n, k", [(4, 1), (6, 2), (12, 3), (8, 2), (30, 2), (7, 0)])
def test_enumerate_modules_is_exactly_the_chains(n, k):
    fam = enumerate_modules(Ring(n), k)
    got = [m.factors for m in fam.modules]
    assert len(got) == len(set(got))
    assert set(got) == chains_oracle(n, k)


def test_enumerate_examples():
    assert [str(m) for m in enumerate_modules(Ring(4), 1).modules] == ["0", "Z/2", "Z/4"]
    assert [m.factors for m in enumerate_modules(Ring(5), 0).modules] == [()]


def test_direct_summands_are_summands():
    m = from_invariants(Z12, [2, 12])
    subs = direct_summands(m)
    for a in subs:
        # a summand has a complement: m ~ a + b for some b in the list
        assert any(is_isomorphic(direct_sum([a, b]).module, m) for b in subs)
    assert {x.factors for x in subs} >= {(), (2,), (3,), (4,), (12,), (2, 12)}


@pytest.mark.parametrize("expr, out", [
    ("s-injective,!injective", [("s-injective", True), ("injective", False)]),
    ("s_flat & ~flat", [("s-flat", True), ("flat", False)]),
])
def test_parse_predicate(expr, out):
    assert parse_predicate(expr) == out


@pytest.mark.parametrize("bad", ["", "projective", ",,"])
def test_parse_predicate_rejects(bad):
    with pytest.raises(ValueError):
        parse_predicate(bad)


def test_hunt_examples():
    s2 = mult_set(Z12, [2])
    r = hunt(Z12, s2, "s-injective,!injective")
    assert r.witness.factors == (2,)
    r = hunt(Z12, s2, "s-flat,!flat")
    assert r.witness.factors == (2,)
    r = hunt(Z12, mult_set(Z12, []), "s-injective,!injective")
    assert r.witness is None and not r.exhausted_budget
    r = hunt(Z12, s2, "!s-injective", budget=5)
    assert r.witness is None and r.exhausted_budget


@pytest.mark.parametrize("n, gens", [(12, [2]), (12, [3]), (12, []), (8, [3]), (36, [2])])
@pytest.mark.parametrize("prop", PROP_IDS)
def test_all_propositions_pass_on_small_families(n, gens, prop):
    ring = Ring(n)
    r = verify(prop, ring, mult_set(ring, gens), max_factors=2, budget=30)
    assert r.verdict == PASS, r.counterexample
    assert r.instances_checked > 0


def test_verify_examples_default_budget():
    s2 = mult_set(Z12, [2])
    assert verify("LAMBEK", Z12, s2).passed
    assert verify("CHAR_THEOREM", Z12, s2).passed


def test_unknown_proposition():
    with pytest.raises(UnknownProposition):
        verify("NOPE", Z12, mult_set(Z12, []))


def test_budget_exhausted_is_distinct_from_pass():
    r = verify("LAMBEK", Z12, mult_set(Z12, [2]), max_instances=3)
    assert r.verdict == EXHAUSTED and r.instances_checked == 3 and not r.passed


def test_reports_are_reproducible():
    s = mult_set(Z12, [3])
    for prop in ("EXACT_HOM_SEQ", "FINITE_SUM_CLOSURE", "LAMBEK"):
        a = verify(prop, Z12, s, max_factors=2, budget=40, seed=5)
        b = verify(prop, Z12, s, max_factors=2, budget=40, seed=5)
        assert json.dumps(a.to_dict(), sort_keys=True) == json.dumps(b.to_dict(), sort_keys=True)
        assert Report.from_dict(json.loads(json.dumps(a.to_dict()))).to_dict() == a.to_dict()


@pytest.mark.parametrize("name, gens, props", [
    ("character", [3], ["LAMBEK", "CHAR_THEOREM"]),
    ("localize_module", [2], ["LAMBEK", "EXACT_HOM_SEQ", "COLOCALIZATION"]),
    ("ext1", [2], ["EXT_CRITERION"]),
])
def test_mutants_are_caught(name, gens, props):
    s = mult_set(Z12, gens)
    with corrupted(name):
        for prop in props:
            r = verify(prop, Z12, s, max_factors=2, budget=30)
            assert r.verdict == COUNTEREXAMPLE, (name, prop)
            assert recheck_report(r)
    # with the real constructions restored the counterexample no longer fails
    for prop in props:
        assert verify(prop, Z12, s, max_factors=2, budget=30).passed


def test_some_check_catches_each_mutant_on_z12_at_2():
    # the character mutant is invisible here: R_S = Z/3 is a field, so every
    # module is both S-flat and S-injective whatever the character functor does
    s = mult_set(Z12, [2])
    caught = {}
    for name in MUTANTS:
        with corrupted(name):
            caught[name] = [p for p in PROP_IDS
                            if verify(p, Z12, s, max_factors=2, budget=20).verdict == COUNTEREXAMPLE]
    assert caught["localize_module"] and caught["ext1"]
    assert caught["character"] == []


def test_unknown_mutant():
    with pytest.raises(KeyError):
        with corrupted("tensor"):
            pass
