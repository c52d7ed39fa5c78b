"""Factored degree expressions and their numeric semantics.

A ``FactoredDegree`` is (1/t) * q^a * prod Phi_k(q)^{e_k}.  All
coprimality, divisibility and gcd questions about degrees are decided
NUMERICALLY at each concrete prime power q — never by comparing
cyclotomic exponent vectors, because distinct Phi_k(q) share prime
factors (e.g. 3 divides both Phi_1(4) and Phi_3(4)).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from sympy import factorint

from .cyclotomic import phi_at


@dataclass(frozen=True)
class PrimePower:
    """q = p^f with p prime and f >= 1."""

    p: int
    f: int

    def __post_init__(self):
        if self.f < 1:
            raise ValueError(f"exponent must be >= 1, got {self.f}")
        fs = factorint(self.p)
        if len(fs) != 1 or list(fs.values()) != [1]:
            raise ValueError(f"{self.p} is not prime")

    @property
    def value(self) -> int:
        return self.p ** self.f

    @classmethod
    def from_value(cls, q: int) -> "PrimePower":
        fs = factorint(q)
        if len(fs) != 1:
            raise ValueError(f"{q} is not a prime power")
        (p, f), = fs.items()
        return cls(int(p), int(f))

    def __str__(self) -> str:
        return str(self.value)


def is_prime_power(q: int) -> bool:
    return q >= 2 and len(factorint(q)) == 1


def prime_powers(lo: int, hi: int) -> list[PrimePower]:
    """All prime powers q with lo <= q <= hi, ascending."""
    return [PrimePower.from_value(q) for q in range(max(lo, 2), hi + 1)
            if is_prime_power(q)]


class IntegralityViolation(ValueError):
    """The rational prefactor of a degree failed to cancel at q —
    signals a catalog entry evaluated outside its q-constraints."""


@dataclass(frozen=True)
class FactoredDegree:
    """(1/denom) * q^q_exp * prod Phi_k(q)^e_k with denom in 1..6."""

    denom: int = 1
    q_exp: int = 0
    cyclo_exps: tuple[tuple[int, int], ...] = field(default=())

    def __post_init__(self):
        if not 1 <= self.denom <= 6:
            raise ValueError(f"denominator must be in 1..6, got {self.denom}")
        if self.q_exp < 0:
            raise ValueError(f"q exponent must be >= 0, got {self.q_exp}")
        exps = tuple(sorted((int(k), int(e)) for k, e in dict(self.cyclo_exps).items()))
        for k, e in exps:
            if not 1 <= k <= 30:
                raise ValueError(f"cyclotomic index {k} outside 1..30")
            if e < 1:
                raise ValueError(f"exponent for index {k} must be >= 1")
        object.__setattr__(self, "cyclo_exps", exps)

    @classmethod
    def make(cls, denom: int = 1, q_exp: int = 0,
             exps: dict[int, int] | None = None) -> "FactoredDegree":
        return cls(denom, q_exp, tuple((exps or {}).items()))

    def exps_dict(self) -> dict[int, int]:
        return dict(self.cyclo_exps)

    def evaluate(self, q: PrimePower | int) -> int:
        qv = q.value if isinstance(q, PrimePower) else q
        num = qv ** self.q_exp
        for k, e in self.cyclo_exps:
            num *= phi_at(k, qv) ** e
        if num % self.denom != 0:
            raise IntegralityViolation(
                f"1/{self.denom} does not cancel at q={qv} for {self}")
        return num // self.denom

    def mul(self, other: "FactoredDegree") -> "FactoredDegree":
        exps = self.exps_dict()
        for k, e in other.cyclo_exps:
            exps[k] = exps.get(k, 0) + e
        return FactoredDegree.make(self.denom * other.denom,
                                   self.q_exp + other.q_exp, exps)

    def __str__(self) -> str:
        parts = []
        if self.denom != 1:
            parts.append(f"1/{self.denom}")
        if self.q_exp:
            parts.append("q" if self.q_exp == 1 else f"q^{self.q_exp}")
        for k, e in self.cyclo_exps:
            parts.append(f"Phi_{k}" + (f"^{e}" if e > 1 else ""))
        return " ".join(parts) if parts else "1"


def evaluate(d: FactoredDegree, q: PrimePower | int) -> int:
    return d.evaluate(q)


def p_part(v: int, p: int) -> int:
    """Largest power of p dividing v."""
    if v < 1:
        raise ValueError(f"value must be >= 1, got {v}")
    out = 1
    while v % p == 0:
        v //= p
        out *= p
    return out


def p_prime_part(v: int, p: int) -> int:
    """v divided by its p-part."""
    return v // p_part(v, p)


def gcd_at(d1: FactoredDegree, d2: FactoredDegree, q: PrimePower | int) -> int:
    return math.gcd(d1.evaluate(q), d2.evaluate(q))


def divides_at(d1: FactoredDegree, d2: FactoredDegree, q: PrimePower | int) -> bool:
    return d2.evaluate(q) % d1.evaluate(q) == 0


def coprime_to_at(d: FactoredDegree, q: PrimePower | int, primes) -> bool:
    """True iff no prime in ``primes`` divides the evaluated degree."""
    v = d.evaluate(q)
    return all(v % ell != 0 for ell in primes)
