"""Executable clause registry and report generation.

Each clause is a checkable reformulation of one claim about the degree
data: conditional classifications under coprimality hypotheses, p-part
caps, minimum degrees, isolation, absence of consecutive degrees,
torus-quotient identities, and standalone arithmetic claims.  Clauses
quantify over the embedded catalog degree list (a subset of the full
degree set); reports record this scope explicitly.
"""

from __future__ import annotations

import itertools
import json
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

import gmpy2
from sympy import isprime

from .catalog import FAMILIES, FamilyCatalog, load_catalog, sporadic_pairs
from .cyclotomic import phi_at
from .degree_algebra import (FactoredDegree, PrimePower, p_part,
                             p_prime_part, prime_powers)
from .zsigmondy import all_ppds

SCOPE_NOTE = ("quantified over the embedded catalog degree list, "
              "a subset of the full character degree set")

PASS, FAIL, VACUOUS = "pass", "fail", "vacuous"

#: claims recorded but not executable as degree arithmetic
OUT_OF_SCOPE = {
    "2E6.x.multiplicity": "character-theoretic, not degree-arithmetic",
    "E6.x.multiplicity": "character-theoretic, not degree-arithmetic",
    "E7.x.multiplicity": "character-theoretic, not degree-arithmetic",
}


@dataclass(frozen=True)
class Clause:
    id: str
    category: str
    source: str
    family: str | None = None
    payload: dict = field(default_factory=dict)


@dataclass(frozen=True)
class Sample:
    q: PrimePower
    verdict: str
    witnesses: tuple = ()

    def to_json(self):
        return {"q": {"p": self.q.p, "f": self.q.f},
                "verdict": self.verdict,
                "witnesses": [list(w) if isinstance(w, tuple) else w
                              for w in self.witnesses]}


@dataclass(frozen=True)
class VerificationReport:
    clause: str
    source: str
    family: str | None
    samples: tuple[Sample, ...]
    scope_note: str = SCOPE_NOTE

    @property
    def verdict(self) -> str:
        if any(s.verdict == FAIL for s in self.samples):
            return FAIL
        if any(s.verdict == PASS for s in self.samples):
            return PASS
        return VACUOUS

    def to_json(self):
        return {"clause": self.clause, "source": self.source,
                "family": self.family,
                "samples": [s.to_json() for s in self.samples],
                "scope_note": self.scope_note}


# ---------------------------------------------------------------------------
# clause registry


def _cond(id_, fam, indices, expected, *, include_p=False, escape=None):
    return Clause(id_, "conditional-equality", id_, fam,
                  {"indices": tuple(indices), "expected": tuple(expected),
                   "include_p": include_p, "escape": tuple(escape or ())})


def clauses_for(family: str) -> tuple[Clause, ...]:
    cat = load_catalog(family)
    mk = lambda suffix: f"{family}.{suffix}"
    out: list[Clause] = []
    if family == "F4":
        out += [
            _cond(mk("i"), family, (12, 8), ("1/4 q^4 Phi1^4 Phi2^4 Phi3^2 Phi6^2",)),
            _cond(mk("ii"), family, (12,), ("semisimple:Phi12-torus",), include_p=False),
            _cond(mk("iii"), family, (8,), ("Phi3 Phi6 Phi12", "semisimple:Phi8-torus")),
            _cond(mk("iv"), family, (6, 3),
                  ("phi_{2,4}'", "q^3 Phi4^2 Phi8 Phi12",
                   "1/3 q^4 Phi1^4 Phi2^4 Phi4^2 Phi8",
                   "q^9 Phi4^2 Phi8 Phi12", "1/2 q^13 Phi4 Phi8 Phi12")),
        ]
        # (ii)/(iii) allow the escape "p divides x"
        out[1] = Clause(mk("ii"), "conditional-equality", mk("ii"), family,
                        {**out[1].payload, "allow_p": True})
        out[2] = Clause(mk("iii"), "conditional-equality", mk("iii"), family,
                        {**out[2].payload, "allow_p": True})
    elif family == "2E6":
        out += [
            _cond(mk("i"), family, (18, 12), ("2E6[theta^i]",)),
            _cond(mk("ii"), family, (12, 8), ("phi_{8,3}'", "phi_{8,9}''")),
            _cond(mk("iii-a"), family, (18, 8), ()),
            _cond(mk("iii-b"), family, (18, 10), (), include_p=True),
            _cond(mk("iv"), family, (8, 10), ("Phi3 Phi6^2 Phi12 Phi18",),
                  include_p=True),
        ]
    elif family == "E6":
        out += [
            _cond(mk("i"), family, (12, 9), ("E6[theta^i]",)),
            _cond(mk("ii"), family, (9, 8), ()),
            _cond(mk("iii"), family, (12, 8), ("(D4,1)", "(D4,eps)")),
            _cond(mk("iv-a"), family, (9, 5), (), include_p=True),
            _cond(mk("iv-b"), family, (8, 5), ("Phi3^2 Phi6 Phi9 Phi12",),
                  include_p=True),
        ]
    elif family == "E7":
        out += [
            _cond(mk("i"), family, (18, 14), ("E7[+-xi]",)),
            _cond(mk("ii"), family, (14, 12), ("(D4,eps1)", "(D4,eps2)")),
            _cond(mk("iii"), family, (18, 12),
                  ("(E6[theta^i],1)", "(E6[theta^i],eps)"), escape=(9, 7)),
            _cond(mk("iv-a"), family, (14, 7), (), include_p=True),
            _cond(mk("iv-b"), family, (9, 7), ("phi_{512,11/12}",)),
        ]
    elif family == "E8":
        out += [
            _cond(mk("i"), family, (30, 24), ("E8[-theta^i]",)),
            _cond(mk("ii"), family, (24, 20), ("E8[+-i]",)),
            _cond(mk("iii"), family, (30, 20),
                  ("E8[zeta^k]", "(D4,phi_{1,0})", "(D4,phi_{1,24})")),
            _cond(mk("iv-a"), family, (15, 14), (), include_p=True),
            _cond(mk("iv-b"), family, (24, 14), (), include_p=True),
        ]
    out += [
        Clause(mk("v"), "isolation", mk("v"), family),
        Clause(mk("vi"), "ppart-bound", mk("vi"), family),
        Clause(mk("vii"), "minimum-degree", mk("vii"), family),
        Clause(mk("viii"), "coprime-classification", mk("viii"), family),
        Clause(mk("ix"), "no-consecutive", mk("ix"), family),
        Clause(f"torus.{family}", "torus-quotient", mk("v"), family),
    ]
    if any(e.version in ("sc", "ad") for e in cat.entries):
        out.append(Clause(mk("x"), "version-extra", mk("x"), family))
    out += arith_clauses(family)
    return tuple(out)


def arith_clauses(family: str) -> list[Clause]:
    out = []
    if family == "F4":
        out.append(Clause("arith.F4.vii-lt-q10", "inequality-claim", "F4.vii", family,
                          {"lhs": {"t": 2, "a": 0, "exps": {4: 1, 8: 1, 12: 1}}, "exp": 10}))
        out.append(Clause("arith.F4.iii-lt-viii", "inequality-claim", "F4.ix", family,
                          {"lhs": {"t": 1, "a": 0, "exps": {3: 1, 6: 1, 12: 1}},
                           "rhs": {"t": 3, "a": 4, "exps": {1: 4, 2: 4, 4: 2, 8: 1}}}))
        out.append(Clause("arith.F4.div3", "divisibility-claim", "F4.viii", family,
                          {"dividend": {"t": 1, "a": 0, "exps": {3: 1, 6: 1, 12: 1}},
                           "divisor": 3, "p_ne": 3}))
        out.append(Clause("arith.F4.div-2^5-3-5-41", "divisibility-claim", "F4.viii", family,
                          {"dividend": {"t": 3, "a": 4, "exps": {1: 4, 2: 4, 4: 2, 8: 1}},
                           "divisor": 2 ** 5 * 3 * 5 * 41, "p_eq": 3}))
    elif family == "2E6":
        out.append(Clause("arith.2E6.min-lt-q15", "inequality-claim", "2E6.vii", family,
                          {"lhs": {"t": 1, "a": 0, "exps": {8: 1, 18: 1}}, "exp": 15}))
    elif family == "E6":
        out.append(Clause("arith.E6.min-lt-q15", "inequality-claim", "E6.vii", family,
                          {"lhs": {"t": 1, "a": 0, "exps": {8: 1, 9: 1}}, "exp": 15}))
    elif family == "E7":
        out.append(Clause("arith.E7.min-lt-q30", "inequality-claim", "E7.vii", family,
                          {"lhs": {"t": 1, "a": 0, "exps": {7: 1, 12: 1, 14: 1}}, "exp": 30}))
    elif family == "E8":
        out.append(Clause("arith.E8.min-lt-q30", "inequality-claim", "E8.vii", family,
                          {"lhs": {"t": 1, "a": 0, "exps": {4: 2, 8: 1, 12: 1, 20: 1, 24: 1}},
                           "exp": 30}))
    k0 = {"F4": 3, "E6": 3, "2E6": 3, "E7": 3, "E8": 4}[family]
    out.append(Clause(f"arith.{family}.k0", "inequality-claim", f"{family}.exponents", family,
                      {"k0": k0}))
    out.append(Clause(f"arith.{family}.wedge", "inequality-claim", f"{family}.exponents", family,
                      {"wedge": True}))
    return out


def global_clauses() -> tuple[Clause, ...]:
    return (
        Clause("arith.altn-prime-power", "alternating-prime-power",
               "alternating-helper", None, {"n_min": 7, "n_max": 1000, "only_n": 9}),
        Clause("dioph.nagell", "diophantine", "nagell-equation", None,
               {"x_max": 100_000, "m_max": 30, "prime_power_only": True}),
        Clause("table2.coprime", "sporadic-coprime", "sporadic-table", None),
    )


def all_clauses() -> tuple[Clause, ...]:
    out: list[Clause] = []
    for fam in FAMILIES:
        out.extend(clauses_for(fam))
    out.extend(global_clauses())
    return tuple(out)


# ---------------------------------------------------------------------------
# clause engines


def _degree_list(cat: FamilyCatalog, q: PrimePower):
    return cat.degrees_at(q, versions=("simple",))


def _nontrivial(degs, steinberg):
    return [(lab, v) for lab, v in degs if lab != "1" and lab != "Steinberg"]


def _check_conditional(cat: FamilyCatalog, q: PrimePower, payload) -> Sample:
    degs = _nontrivial(_degree_list(cat, q), None)
    expected_vals = set()
    for label in payload["expected"]:
        entry = cat.entry(label)
        if entry.admits(q):
            expected_vals.add(entry.degree.evaluate(q))
    ppd_choices = []
    for idx in payload["indices"]:
        ppds = all_ppds(idx, q.value)
        if not ppds:
            return Sample(q, VACUOUS, (f"no ppd for index {idx}",))
        ppd_choices.append(ppds)
    escape_ppds = [all_ppds(idx, q.value) for idx in payload["escape"]]
    allow_p = payload.get("allow_p", False)
    witnesses = []
    selected_any = False
    for combo in itertools.product(*ppd_choices):
        primes = set(combo)
        if payload["include_p"]:
            primes.add(q.p)
        for lab, v in degs:
            if any(v % ell == 0 for ell in primes):
                continue
            selected_any = True
            if v in expected_vals:
                continue
            if allow_p and v % q.p == 0:
                continue
            if escape_ppds and all(v % ell == 0 for grp in escape_ppds for ell in grp):
                continue
            witnesses.append((lab, str(v), [str(ell) for ell in combo]))
    if witnesses:
        return Sample(q, FAIL, tuple(witnesses))
    if not payload["expected"]:
        # nonexistence claim: pass means nothing was coprime to the set
        return Sample(q, PASS if not selected_any else FAIL)
    return Sample(q, PASS if selected_any else VACUOUS)


def _check_coprime_classification(cat: FamilyCatalog, q: PrimePower) -> Sample:
    degs = _nontrivial(_degree_list(cat, q), None)
    coprime = set()
    for (la, va), (lb, vb) in itertools.combinations(degs, 2):
        if va != vb and math.gcd(va, vb) == 1:
            coprime.add(frozenset((la, lb)))
    if q.p != 3 or cat.exceptional_pair is None:
        if coprime:
            return Sample(q, FAIL, tuple(sorted(tuple(sorted(c)) for c in coprime)))
        return Sample(q, PASS)
    expected = {frozenset(cat.exceptional_pair)}
    if coprime == expected:
        return Sample(q, PASS, (tuple(sorted(cat.exceptional_pair)),))
    return Sample(q, FAIL, tuple(sorted(tuple(sorted(c)) for c in coprime ^ expected)))


def _check_ppart_bound(cat: FamilyCatalog, q: PrimePower) -> Sample:
    cap = cat.cap_at(q)
    witnesses = []
    for lab, v in _nontrivial(_degree_list(cat, q), None):
        if p_part(v, q.p) > cap:
            witnesses.append((lab, str(p_part(v, q.p)), str(cap)))
    return Sample(q, FAIL if witnesses else PASS, tuple(witnesses))


def _check_minimum(cat: FamilyCatalog, q: PrimePower) -> Sample:
    named = cat.entry(cat.smallest["odd" if q.value % 2 else "even"])
    expected = named.degree.evaluate(q)
    degs = [(lab, v) for lab, v in _degree_list(cat, q) if lab != "1"]
    mn_lab, mn = min(degs, key=lambda kv: kv[1])
    if mn == expected:
        return Sample(q, PASS, ((named.label, str(expected)),))
    return Sample(q, FAIL, ((mn_lab, str(mn)), (named.label, str(expected))))


def _check_isolation(cat: FamilyCatalog, q: PrimePower) -> Sample:
    degs = _degree_list(cat, q)
    witnesses = []
    for label in cat.isolated_labels:
        base = cat.entry(label).degree.evaluate(q)
        for lab, v in degs:
            if v != base and v % base == 0:
                witnesses.append((label, lab, str(v)))
    return Sample(q, FAIL if witnesses else PASS, tuple(witnesses))


def _check_no_consecutive(cat: FamilyCatalog, q: PrimePower) -> Sample:
    vals = sorted({v for _, v in _degree_list(cat, q)})
    witnesses = [(str(a), str(b)) for a, b in zip(vals, vals[1:]) if b - a == 1]
    return Sample(q, FAIL if witnesses else PASS, tuple(witnesses))


def _check_torus(cat: FamilyCatalog, q: PrimePower) -> Sample:
    order_pp = p_prime_part(cat.order_at(q), q.p)
    witnesses = []
    for t in cat.torus_orders:
        torus = t.torus.evaluate(q)
        expected = cat.entry(t.entry_label).degree.evaluate(q)
        if order_pp % torus != 0 or order_pp // torus != expected:
            witnesses.append((t.entry_label, str(torus), str(order_pp % torus)))
    return Sample(q, FAIL if witnesses else PASS, tuple(witnesses))


def _check_version_extra(cat: FamilyCatalog, q: PrimePower) -> Sample:
    simple_vals = [v for _, v in _degree_list(cat, q)]
    witnesses = []
    active = False
    for e in cat.entries:
        if e.version == "simple" or not e.admits(q):
            continue
        active = True
        v = e.degree.evaluate(q)
        if e.version == "sc":
            bad = [lab for lab, d in _degree_list(cat, q) if d % v == 0]
        else:  # ad: the value must not itself be a degree
            bad = [lab for lab, d in _degree_list(cat, q) if d == v]
        if bad:
            witnesses.append((e.label, str(v), bad))
    if not active:
        return Sample(q, VACUOUS)
    return Sample(q, FAIL if witnesses else PASS, tuple(witnesses))


def _check_inequality(cat: FamilyCatalog, q: PrimePower, payload) -> Sample:
    if "k0" in payload:
        a, b, k0 = cat.a_H, cat.b_H, payload["k0"]
        holds = all(a * (k - 1) <= k * b for k in range(1, k0 + 1))
        stops = a * k0 > (k0 + 1) * b  # k0+1 violates a(k-1) <= kb
        return Sample(q, PASS if holds and stops else FAIL, ((str(k0),),))
    if payload.get("wedge"):
        ok = q.value ** (cat.a_H // 2) > q.value ** cat.c_H
        return Sample(q, PASS if ok else FAIL)
    # inequalities compare exact rationals; the sides need not be integral
    def side(spec) -> Fraction:
        fd = FactoredDegree.make(spec["t"], spec["a"], spec["exps"])
        num = q.value ** fd.q_exp
        for k, e in fd.cyclo_exps:
            num *= phi_at(k, q.value) ** e
        return Fraction(num, fd.denom)

    lhs = side(payload["lhs"])
    if "rhs" in payload:
        rhs = side(payload["rhs"])
    else:
        rhs = Fraction(q.value ** payload["exp"])
    return Sample(q, PASS if lhs < rhs else FAIL, ((str(lhs), str(rhs)),))


def _check_divisibility(cat: FamilyCatalog, q: PrimePower, payload) -> Sample:
    if "p_ne" in payload and q.p == payload["p_ne"]:
        return Sample(q, VACUOUS)
    if "p_eq" in payload and q.p != payload["p_eq"]:
        return Sample(q, VACUOUS)
    v = FactoredDegree.make(payload["dividend"]["t"], payload["dividend"]["a"],
                            payload["dividend"]["exps"]).evaluate(q)
    ok = v % payload["divisor"] == 0
    return Sample(q, PASS if ok else FAIL, ((str(payload["divisor"]), str(v)),))


def nagell_search(x_max: int, m_max: int, prime_power_only: bool):
    """All (x, y, m) with x^2 + x + 1 = y^m, 2 <= x <= x_max,
    2 <= m <= m_max, y >= 2; optionally only prime-power x."""
    if x_max < 2 or m_max < 2:
        raise ValueError("x_max and m_max must both be >= 2")
    spf = None
    if prime_power_only:
        # smallest-prime-factor sieve: x is a prime power iff dividing out
        # its smallest prime factor repeatedly reaches 1
        spf = list(range(x_max + 1))
        for d in range(2, math.isqrt(x_max) + 1):
            if spf[d] == d:
                for mult in range(d * d, x_max + 1, d):
                    if spf[mult] == mult:
                        spf[mult] = d
    sols = []
    for x in range(2, x_max + 1):
        if prime_power_only:
            r, xx = spf[x], x
            while xx % r == 0:
                xx //= r
            if xx != 1:
                continue
        v = x * x + x + 1
        top = min(m_max, v.bit_length() - 1)
        for m in range(2, top + 1):
            root, exact = gmpy2.iroot(v, m)
            if exact and root >= 2:
                sols.append((x, int(root), m))
    return sols


def _check_nagell(payload) -> Sample:
    sols = nagell_search(payload["x_max"], payload["m_max"],
                         payload["prime_power_only"])
    q = PrimePower(2, 1)  # placeholder sample point; the claim is q-free
    if payload["prime_power_only"]:
        return Sample(q, FAIL if sols else PASS,
                      tuple((str(x), str(y), str(m)) for x, y, m in sols))
    return Sample(q, PASS if sols else FAIL,
                  tuple((str(x), str(y), str(m)) for x, y, m in sols))


def _check_alternating(payload) -> Sample:
    hits = []
    for n in range(payload["n_min"], payload["n_max"] + 1):
        v = n * (n - 3) // 2
        if v >= 2 and _is_prime_power_int(v):
            hits.append(n)
    q = PrimePower(2, 1)
    ok = hits == [payload["only_n"]]
    return Sample(q, PASS if ok else FAIL, tuple(str(n) for n in hits))


def _is_prime_power_int(v: int) -> bool:
    from sympy import factorint
    return len(factorint(v)) == 1


def verify_table2() -> VerificationReport:
    pairs = sporadic_pairs()
    witnesses = []
    for sp in pairs:
        a, b = sp.values()
        if math.gcd(a, b) != 1:
            witnesses.append((sp.group, str(a), str(b)))
        for fac in sp.degrees:
            for p in fac:
                if not isprime(p):
                    witnesses.append((sp.group, f"nonprime factor {p}"))
    verdict = FAIL if witnesses or len(pairs) != 27 else PASS
    if len(pairs) != 27:
        witnesses.append(("count", str(len(pairs))))
    sample = Sample(PrimePower(2, 1), verdict, tuple(witnesses))
    return VerificationReport("table2.coprime", "sporadic-table", None, (sample,),
                              scope_note="all embedded sporadic pairs")


# ---------------------------------------------------------------------------
# dispatch


def verify_clause(clause: Clause, q: PrimePower) -> Sample:
    if clause.family is None:
        if clause.category == "diophantine":
            return _check_nagell(clause.payload)
        if clause.category == "alternating-prime-power":
            return _check_alternating(clause.payload)
        if clause.category == "sporadic-coprime":
            return verify_table2().samples[0]
        raise ValueError(f"unknown global clause {clause.id}")
    cat = load_catalog(clause.family)
    cat.check_admissible(q)
    match clause.category:
        case "conditional-equality":
            return _check_conditional(cat, q, clause.payload)
        case "coprime-classification":
            return _check_coprime_classification(cat, q)
        case "ppart-bound":
            return _check_ppart_bound(cat, q)
        case "minimum-degree":
            return _check_minimum(cat, q)
        case "isolation":
            return _check_isolation(cat, q)
        case "no-consecutive":
            return _check_no_consecutive(cat, q)
        case "torus-quotient":
            return _check_torus(cat, q)
        case "version-extra":
            return _check_version_extra(cat, q)
        case "inequality-claim":
            return _check_inequality(cat, q, clause.payload)
        case "divisibility-claim":
            return _check_divisibility(cat, q, clause.payload)
    raise ValueError(f"unknown clause category {clause.category}")


def verify_family(family: str, q_max: int, clause_filter: str | None = None,
                  jobs: int = 1) -> list[VerificationReport]:
    cat = load_catalog(family)
    if q_max < cat.q_floor:
        raise ValueError(
            f"{family}: q_max {q_max} is below the family floor {cat.q_floor}")
    clauses = [c for c in clauses_for(family)
               if clause_filter is None or c.id == clause_filter]
    qs = cat.admissible_q(q_max)
    work = [(c, q) for c in clauses for q in qs]
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(lambda cq: verify_clause(*cq), work))
    else:
        results = [verify_clause(c, q) for c, q in work]
    by_clause: dict[str, list[Sample]] = {c.id: [] for c in clauses}
    for (c, _q), sample in zip(work, results):
        by_clause[c.id].append(sample)
    reports = []
    for c in clauses:
        samples = tuple(sorted(by_clause[c.id], key=lambda s: s.q.value))
        reports.append(VerificationReport(c.id, c.source, family, samples))
    return sorted(reports, key=lambda r: r.clause)


def verify_arith_claims(family: str, q_max: int) -> list[VerificationReport]:
    cat = load_catalog(family)
    qs = cat.admissible_q(q_max)
    reports = []
    for c in arith_clauses(family):
        samples = tuple(verify_clause(c, q) for q in qs)
        reports.append(VerificationReport(c.id, c.source, family, samples))
    return sorted(reports, key=lambda r: r.clause)


def verify_torus_quotients(family: str, q_max: int) -> VerificationReport:
    cat = load_catalog(family)
    samples = tuple(_check_torus(cat, q) for q in cat.admissible_q(q_max))
    return VerificationReport(f"torus.{family}", f"{family}.v", family, samples)


def reports_to_json(reports) -> str:
    return json.dumps([r.to_json() for r in reports], indent=2, sort_keys=True)
