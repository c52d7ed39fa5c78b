"""Acceptance suite: end-to-end checks with explicit time budgets.

Each test states its own scope; oracles are independent of the code
paths they check (direct factorization, naive order loops, symbolic
polynomial products).
"""

import itertools
import json
import math
import time

import pytest
from sympy import factorint

from excdeg.catalog import FAMILIES, load_catalog, sporadic_pairs
from excdeg.cyclotomic import (factor_pow_minus_one, phi_at, poly_mul,
                               pow_minus_one_poly, cyclotomic)
from excdeg.degree_algebra import PrimePower, p_part, prime_powers
from excdeg.verifier import (FAIL, PASS, Clause, clauses_for, global_clauses,
                             nagell_search, reports_to_json, verify_clause,
                             verify_family, verify_table2,
                             verify_torus_quotients)
from excdeg.zsigmondy import all_ppds, mult_order, ppd

_Q_MAX = 64


def _naive_order(q: int, ell: int) -> int:
    acc, k = q % ell, 1
    while acc != 1:
        acc = acc * q % ell
        k += 1
    return k


# ---------------------------------------------------------------- criterion 1

def test_c1_cyclotomic_products():
    t0 = time.monotonic()
    for n in range(1, 65):
        prod = (1,)
        for d in factor_pow_minus_one(n):
            prod = poly_mul(prod, cyclotomic(d))
        assert prod == pow_minus_one_poly(n)
        for q in (2, 3, 10):
            assert math.prod(phi_at(d, q) for d in factor_pow_minus_one(n)) \
                == q ** n - 1
    assert time.monotonic() - t0 < 1.0


# ---------------------------------------------------------------- criterion 2

def test_c2_zsigmondy_sweep():
    t0 = time.monotonic()
    for n in range(3, 37):
        for q in range(2, 65):
            res = ppd(n, q)
            if (q, n) == (2, 6):
                assert res.is_exception
                continue
            ell = res.unwrap()
            assert ell % n == 1
            assert mult_order(q, ell) == n
            assert (q ** n - 1) % ell == 0
            for k in range(1, n):
                if n % k == 0:
                    assert (q ** k - 1) % ell != 0
    # independent-oracle agreement on the dense corner
    for n in range(3, 21):
        for q in range(2, 17):
            if (q, n) == (2, 6):
                continue
            v = q ** n - 1
            primes = set()
            d = 2
            while d * d <= v and d < 10 ** 6:
                while v % d == 0:
                    primes.add(d)
                    v //= d
                d += 1
            if v > 1:
                primes.update(int(p) for p in factorint(v))
            oracle = min(p for p in primes if _naive_order(q, p) == n)
            assert ppd(n, q).unwrap() == oracle
    assert time.monotonic() - t0 < 30.0


# ---------------------------------------------------------------- criterion 3

_CAPS = {"F4": ("odd", 16, "even", 13), "E6": (None, 25, None, 25),
         "2E6": (None, 25, None, 25), "E7": (None, 46, None, 46),
         "E8": (None, 91, None, 91)}

_SMALLEST = {
    "F4": {"odd": "Phi3 Phi6 Phi12", "even": "1/2 q Phi1^2 Phi3^2 Phi8"},
    "E6": "phi_{6,1}", "2E6": "phi_{2,4}'", "E7": "phi_{7,1}", "E8": "phi_{8,1}",
}


@pytest.mark.parametrize("family", FAMILIES)
def test_c3_full_family_sweep(family):
    t0 = time.monotonic()
    reports = verify_family(family, _Q_MAX)
    for r in reports:
        assert r.verdict != FAIL, (r.clause,
                                   [(s.q.value, s.witnesses)
                                    for s in r.samples if s.verdict == FAIL])
    # every clause must actually bite somewhere in the range
    assert all(any(s.verdict == PASS for s in r.samples) for r in reports)
    assert time.monotonic() - t0 < 300.0


@pytest.mark.parametrize("family", FAMILIES)
def test_c3_coprime_pairs_exact(family):
    cat = load_catalog(family)
    for q in cat.admissible_q(_Q_MAX):
        degs = [(lab, v) for lab, v in cat.degrees_at(q)
                if lab not in ("1", "Steinberg")]
        coprime = {frozenset((la, lb))
                   for (la, va), (lb, vb) in itertools.combinations(degs, 2)
                   if va != vb and math.gcd(va, vb) == 1}
        if q.p == 3 and cat.exceptional_pair is not None:
            assert coprime == {frozenset(cat.exceptional_pair)}, q.value
        else:
            assert coprime == set(), q.value


@pytest.mark.parametrize("family", FAMILIES)
def test_c3_no_consecutive_and_caps_and_minimum(family):
    cat = load_catalog(family)
    oddexp = {"F4": 16, "E6": 25, "2E6": 25, "E7": 46, "E8": 91}[family]
    for q in cat.admissible_q(_Q_MAX):
        vals = sorted(v for _, v in cat.degrees_at(q))
        assert all(b - a != 1 for a, b in zip(vals, vals[1:]))
        cap = (q.value ** 13 // 2 if family == "F4" and q.value % 2 == 0
               else q.value ** oddexp)
        for lab, v in cat.degrees_at(q):
            if lab in ("1", "Steinberg"):  # cap is for the remaining degrees
                continue
            assert p_part(v, q.p) <= cap, (lab, q.value)
        spec = _SMALLEST[family]
        label = spec["odd" if q.value % 2 else "even"] \
            if isinstance(spec, dict) else spec
        expected_min = cat.entry(label).degree.evaluate(q)
        nontrivial = [v for lab, v in cat.degrees_at(q) if lab != "1"]
        assert min(nontrivial) == expected_min, q.value


# ---------------------------------------------------------------- criterion 4

def test_c4_nagell():
    t0 = time.monotonic()
    assert nagell_search(100_000, 30, prime_power_only=True) == []
    unfiltered = nagell_search(100_000, 30, prime_power_only=False)
    assert (18, 7, 3) in unfiltered
    assert time.monotonic() - t0 < 10.0


# ---------------------------------------------------------------- criterion 5

def test_c5_sporadic_pairs():
    pairs = sporadic_pairs()
    assert len(pairs) == 27
    for sp in pairs:
        a, b = sp.values()
        assert math.gcd(a, b) == 1, sp.group
    assert verify_table2().verdict == PASS


# ---------------------------------------------------------------- criterion 6

@pytest.mark.parametrize("family", FAMILIES)
def test_c6_torus_quotients(family):
    cat = load_catalog(family)
    qs = cat.admissible_q(_Q_MAX)[:3]
    assert len(qs) == 3
    report = verify_torus_quotients(family, qs[-1].value)
    assert report.verdict == PASS
    assert cat.torus_orders  # the identity set is nonempty


# ---------------------------------------------------------------- criterion 7

_DIMENSIONS = {"F4": 52, "E6": 78, "2E6": 78, "E7": 133, "E8": 248}


@pytest.mark.parametrize("family", FAMILIES)
def test_c7_orders(family):
    cat = load_catalog(family)
    dim = cat.order.q_exp + sum(e * (len(cyclotomic(k)) - 1)
                                for k, e in cat.order.cyclo_exps)
    assert dim == _DIMENSIONS[family]
    for q in cat.admissible_q(_Q_MAX):
        order = cat.order_at(q)
        degs = cat.degrees_at(q)
        for lab, v in degs:
            assert order % v == 0, (lab, q.value)
        assert max(v for _, v in degs) ** 2 <= order


# ---------------------------------------------------------------- criterion 8

def test_c8_f4_divisibility_at_3_9_27():
    cat = load_catalog("F4")
    entry = cat.entry("1/3 q^4 Phi1^4 Phi2^4 Phi4^2 Phi8")
    for qv in (3, 9, 27):
        v = entry.degree.evaluate(PrimePower.from_value(qv))
        assert v % (2 ** 5 * 3 * 5 * 41) == 0, qv


def test_c8_alternating_prime_power():
    hits = [n for n in range(7, 1001)
            if len(factorint(n * (n - 3) // 2)) == 1]
    assert hits == [9]
    clause = next(c for c in global_clauses()
                  if c.category == "alternating-prime-power")
    assert verify_clause(clause, PrimePower(2, 1)).verdict == PASS


def test_c8_exponent_thresholds():
    expected_k0 = {"F4": 3, "E6": 3, "2E6": 3, "E7": 3, "E8": 4}
    for fam in FAMILIES:
        cat = load_catalog(fam)
        k0 = expected_k0[fam]
        a, b = cat.a_H, cat.b_H
        assert all(a * (k - 1) <= k * b for k in range(1, k0 + 1)), fam
        assert a * k0 > (k0 + 1) * b, fam
        clause = next(c for c in clauses_for(fam)
                      if c.id == f"arith.{fam}.k0")
        assert clause.payload["k0"] == k0
        assert verify_clause(clause,
                             PrimePower.from_value(cat.q_floor)).verdict == PASS


# ---------------------------------------------------------------- criterion 9

def test_c9_reports_byte_identical():
    for fam in ("F4", "E8"):
        a = reports_to_json(verify_family(fam, 16))
        b = reports_to_json(verify_family(fam, 16))
        c = reports_to_json(verify_family(fam, 16, jobs=4))
        assert a == b == c
        data = json.loads(a)
        for rep in data:
            assert set(rep) == {"clause", "source", "family",
                                "samples", "scope_note"}
            for s in rep["samples"]:
                # no timing or other nondeterministic fields
                assert set(s) == {"q", "verdict", "witnesses"}
