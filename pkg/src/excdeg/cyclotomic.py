"""Exact integer-polynomial arithmetic and cyclotomic polynomials.

Polynomials are immutable tuples of arbitrary-precision integer
coefficients, constant term first (index = power of q).  Everything here
is exact integer arithmetic; no floating point is used anywhere.
"""

from __future__ import annotations

import functools

IntPoly = tuple[int, ...]

#: the polynomial q^0 = 1
ONE: IntPoly = (1,)


def normalize(coeffs) -> IntPoly:
    """Drop trailing zero coefficients; the zero polynomial is ()."""
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def poly_mul(a: IntPoly, b: IntPoly) -> IntPoly:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return normalize(out)


def poly_divexact(a: IntPoly, b: IntPoly) -> IntPoly:
    """Exact division of a by b in Z[q]; raises if the division leaves
    a remainder (which would indicate corrupted inputs)."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if not a:
        return ()
    rem = list(a)
    out = [0] * (len(a) - len(b) + 1)
    for i in range(len(out) - 1, -1, -1):
        c, r = divmod(rem[i + len(b) - 1], b[-1])
        if r:
            raise ValueError("inexact polynomial division")
        out[i] = c
        for j, cb in enumerate(b):
            rem[i + j] -= c * cb
    if any(rem):
        raise ValueError("inexact polynomial division")
    return tuple(out)


def pow_minus_one_poly(n: int) -> IntPoly:
    """The polynomial q^n - 1."""
    coeffs = [0] * (n + 1)
    coeffs[0] = -1
    coeffs[n] = 1
    return tuple(coeffs)


@functools.cache
def cyclotomic(n: int) -> IntPoly:
    """The n-th cyclotomic polynomial, built by iterated exact division
    of q^n - 1 by the lower-index cyclotomic polynomials."""
    if n < 1:
        raise ValueError(f"cyclotomic index must be >= 1, got {n}")
    poly = pow_minus_one_poly(n)
    for d in range(1, n):
        if n % d == 0:
            poly = poly_divexact(poly, cyclotomic(d))
    return poly


def factor_pow_minus_one(n: int) -> dict[int, int]:
    """Divisor map realizing q^n - 1 = prod over d | n of cyclotomic(d)."""
    if n < 1:
        raise ValueError(f"exponent must be >= 1, got {n}")
    return {d: 1 for d in range(1, n + 1) if n % d == 0}


def eval_poly(p: IntPoly, x: int) -> int:
    """Exact Horner evaluation of p at x."""
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def phi_at(n: int, x: int) -> int:
    """Value of the n-th cyclotomic polynomial at the integer x."""
    return eval_poly(cyclotomic(n), x)


def poly_str(p: IntPoly, var: str = "q") -> str:
    """Human-readable form, highest power first, e.g. 'q^4-q^2+1'."""
    if not p:
        return "0"
    parts = []
    for i in range(len(p) - 1, -1, -1):
        c = p[i]
        if c == 0:
            continue
        sign = "-" if c < 0 else ("+" if parts else "")
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            pw = var if i == 1 else f"{var}^{i}"
            body = pw if mag == 1 else f"{mag}{pw}"
        parts.append(sign + body)
    return "".join(parts) or "0"
