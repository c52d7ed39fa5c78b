"""Primitive prime divisors (ppds) of q^n - 1.

A ppd of q^n - 1 is a prime dividing q^n - 1 but no q^k - 1 with k < n.
Every ppd satisfies l = 1 (mod n), and every prime factor of Phi_n(q)
is either a ppd or a prime dividing n.  ``ppd`` returns the smallest
ppd, or a tagged exception value for the two cases where none exists.
"""

from __future__ import annotations

import functools
import importlib.resources
import json
from dataclasses import dataclass

from sympy import factorint, isprime

from .cyclotomic import phi_at

SMALL_N = "small-n"
PAIR_2_6 = "pair-2-6"

#: trial-division ceiling before consulting certificates / factorint
_TRIAL_BOUND = 200_000


@dataclass(frozen=True)
class PpdResult:
    """Either a prime ppd, or a tagged exception (no ppd exists)."""

    prime: int | None
    exception: str | None = None

    @property
    def is_exception(self) -> bool:
        return self.exception is not None

    def unwrap(self) -> int:
        if self.prime is None:
            raise ValueError(f"no primitive prime divisor: {self.exception}")
        return self.prime

    def __str__(self) -> str:
        if self.prime is not None:
            return str(self.prime)
        if self.exception == PAIR_2_6:
            return "none: Zsigmondy exception (2,6)"
        return f"none: Zsigmondy exception ({self.exception})"


def mult_order(q: int, ell: int) -> int:
    """Multiplicative order of q modulo the prime ell."""
    if q % ell == 0:
        raise ValueError(f"{ell} divides {q}; order undefined")
    if ell == 2:
        return 1
    n = ell - 1
    for p in factorint(ell - 1):
        p = int(p)
        while n % p == 0 and pow(q, n // p, ell) == 1:
            n //= p
    return n


@functools.cache
def _certificates() -> dict[tuple[int, int], tuple[int, ...]]:
    """Frozen full factorizations of the ppd-part of Phi_n(q) for the
    few (n, q) pairs whose smallest ppd is too large for trial division.
    Each certificate is re-verified at load: factors must be prime and
    must multiply back to the ppd-part."""
    text = (
        importlib.resources.files("excdeg.data")
        .joinpath("ppd_certificates.json")
        .read_text("utf-8")
    )
    out: dict[tuple[int, int], tuple[int, ...]] = {}
    for key, factors in json.loads(text).items():
        n_s, q_s = key.split(",")
        out[(int(n_s), int(q_s))] = tuple(int(f) for f in factors)
    return out


def _ppd_part(n: int, q: int) -> int:
    """Phi_n(q) with the prime factors dividing n removed; every
    remaining prime factor is a ppd of q^n - 1."""
    v = phi_at(n, q)
    for r in factorint(n):
        r = int(r)
        while v % r == 0:
            v //= r
    return v


def _verify_certificate(n: int, q: int, factors: tuple[int, ...], v: int) -> None:
    prod = 1
    for f in factors:
        if not isprime(f):
            raise ValueError(f"certificate for ({n},{q}): {f} is not prime")
        prod *= f
    if v % prod != 0:
        raise ValueError(f"certificate for ({n},{q}) does not divide target")
    rest = v // prod
    # any cofactor must consist of repeats of certified primes
    for f in factors:
        while rest % f == 0:
            rest //= f
    if rest != 1:
        raise ValueError(f"certificate for ({n},{q}) is incomplete")


def _smallest_prime_factor(n: int, q: int, v: int) -> int:
    """Smallest prime factor of v, where v is the ppd-part of Phi_n(q)
    (so every prime factor is = 1 mod n and exceeds n)."""
    ell = n + 1
    while ell * ell <= v and ell <= _TRIAL_BOUND:
        if v % ell == 0:
            return ell
        ell += n
    if ell * ell > v or isprime(v):
        return v
    cert = _certificates().get((n, q))
    if cert is not None:
        _verify_certificate(n, q, cert, v)
        return min(cert)
    return min(int(p) for p in factorint(v))


@functools.cache
def ppd(n: int, q: int) -> PpdResult:
    """Smallest primitive prime divisor of q^n - 1, or an exception tag
    when none exists (n < 3, or (q, n) = (2, 6))."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if q < 2:
        raise ValueError(f"q must be >= 2, got {q}")
    if n < 3:
        return PpdResult(None, SMALL_N)
    if (q, n) == (2, 6):
        return PpdResult(None, PAIR_2_6)
    v = _ppd_part(n, q)
    if v == 1:
        raise ArithmeticError(f"no primitive prime divisor found for ({n},{q})")
    return PpdResult(_smallest_prime_factor(n, q, v))


def ppd_neg(n: int, q: int) -> PpdResult:
    """Smallest primitive prime divisor of q^{2n} - 1 for odd n >= 3.

    Invalid for even n and for (q, n) = (2, 3), where q^6 - 1 has no
    primitive prime divisor.
    """
    if n % 2 == 0 or n < 3:
        raise ValueError(f"n must be odd and >= 3, got {n}")
    if (q, n) == (2, 3):
        raise ValueError("(q, n) = (2, 3) has no primitive prime divisor")
    return ppd(2 * n, q)


def is_ppd(ell: int, n: int, q: int) -> bool:
    """True iff ell divides Phi_n(q) and divides no q^k - 1 with k < n,
    i.e. the multiplicative order of q mod ell is exactly n."""
    if phi_at(n, q) % ell != 0:
        return False
    return q % ell != 0 and mult_order(q, ell) == n


def all_ppds(n: int, q: int) -> tuple[int, ...]:
    """All primitive prime divisors of q^n - 1, ascending.  Intended
    for the moderate cyclotomic indices appearing in the degree data
    (n <= 30), where the ppd-part factors quickly."""
    if n < 3 or (q, n) == (2, 6):
        return ()
    v = _ppd_part(n, q)
    if v == 1:
        return ()
    cert = _certificates().get((n, q))
    if cert is not None:
        _verify_certificate(n, q, cert, v)
        return tuple(sorted(set(cert)))
    return tuple(sorted(int(p) for p in factorint(v)))
