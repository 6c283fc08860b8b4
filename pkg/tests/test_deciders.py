import pytest

from oracles import injective_oracle, s_injective_oracle
from slab.deciders import (ROUTES, RouteDisagreement, is_flat, is_injective, is_s_flat, is_s_injective,
                           is_sigma_s_injective_finite, recheck)
from slab.harness import enumerate_modules
from slab.modules import RingMismatch, from_invariants
from slab.ring import Ring, localize_ring, mult_set

Z12 = Ring(12)
S2 = mult_set(Z12, [2])


def m12(*fs):
    return from_invariants(Z12, fs)


def test_injective_examples():
    assert is_injective(m12(12)).value
    v = is_injective(from_invariants(Ring(4), [2]))
    assert not v.value and v.route == "classical_baer"
    assert v.certificate["ideal"] == 2 and v.certificate["hom"] == [[1]]
    assert is_injective(m12()).value


def test_s_injective_examples():
    v = is_s_injective(m12(2), S2)
    assert v.value and v.route == "s_baer"
    assert v.certificate["routes"] == {r: True for r in ROUTES}
    for route in ROUTES:
        assert is_s_injective(m12(2), S2, route).value
    assert not is_injective(m12(2)).value


def test_flat_examples():
    assert is_flat(m12(4)).value
    v = is_flat(m12(2))
    assert not v.value and v.certificate["ideal"] == 2 and v.certificate["tor"] == [2]
    assert is_flat(m12(12)).value
    assert is_s_flat(m12(2), S2).value
    assert not is_s_flat(m12(2), mult_set(Z12, [])).value


def test_sigma_examples():
    assert is_sigma_s_injective_finite(m12(2), S2, 3).value
    s3 = mult_set(Z12, [3])
    for m in enumerate_modules(Z12, 2).modules:
        one = is_s_injective(m, s3).value
        assert is_sigma_s_injective_finite(m, s3, 1).value == one
        if not one:
            assert not is_sigma_s_injective_finite(m, s3, 2).value
    with pytest.raises(ValueError):
        is_sigma_s_injective_finite(m12(2), S2, 0)


def test_bad_inputs():
    with pytest.raises(ValueError):
        is_s_injective(m12(2), S2, "nope")
    with pytest.raises(RingMismatch):
        is_s_injective(from_invariants(Ring(6), [2]), S2)


@pytest.mark.parametrize("n", [4, 6, 8, 12])
def test_injective_matches_enumeration_oracle(n):
    for m in enumerate_modules(Ring(n), 2).modules:
        assert is_injective(m).value == injective_oracle(n, m.factors), m


CASES = [(12, [2]), (12, [3]), (12, []), (8, [3]), (36, [2]), (24, [3]), (30, [2]), (18, [2])]


@pytest.mark.parametrize("n, gens", CASES)
def test_routes_oracle_certificates_and_implications(n, gens):
    ring = Ring(n)
    s = mult_set(ring, gens)
    m = localize_ring(ring, s).target.n
    for e in enumerate_modules(ring, 2).modules:
        v = is_s_injective(e, s)  # raises on route disagreement
        assert v.value == s_injective_oracle(n, e.factors, s.elements, m), e
        assert recheck(v, ring, s)
        for route in ROUTES:
            assert recheck(is_s_injective(e, s, route), ring, s)
        inj = is_injective(e)
        assert recheck(inj, ring)
        fl, sfl = is_flat(e), is_s_flat(e, s)
        assert recheck(fl, ring) and recheck(sfl, ring, s)
        if inj.value:
            assert v.value
        if fl.value:
            assert sfl.value
        if not gens:
            assert v.value == inj.value and sfl.value == fl.value


def test_tampered_certificates_fail_recheck():
    ring = Ring(4)
    v = is_injective(from_invariants(ring, [2]))
    forged = type(v)(v.value, v.route, {**v.certificate, "hom": [[0]]})
    assert not recheck(forged, ring)
    f = is_flat(m12(2))
    forged = type(f)(f.value, f.route, {**f.certificate, "element": [0]})
    assert not recheck(forged, Z12)


def test_route_disagreement_is_raised(monkeypatch):
    import slab.deciders as dec
    flipped = lambda e, s: dec.Verdict(False, "colocalization", {})
    monkeypatch.setitem(dec._ROUTE_FNS, "colocalization", flipped)
    with pytest.raises(RouteDisagreement):
        is_s_injective(m12(2), S2)
