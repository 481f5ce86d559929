"""Closed-form product evaluators, all in exact arithmetic.

Products with rational factors are accumulated as Fractions and converted
to integers at the end; a non-integral result raises, since every formula
here is a count.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb


def _as_integer(value: Fraction, label: str) -> int:
    if value.denominator != 1:
        raise ArithmeticError(f"{label} evaluated to non-integer {value}")
    return value.numerator


def catalan(i: int) -> int:
    """The i-th Catalan number binom(2i, i) / (i+1)."""
    if i < 0:
        raise ValueError(f"catalan needs i >= 0, got {i}")
    q, r = divmod(comb(2 * i, i), i + 1)
    assert r == 0
    return q


def narayana(n: int, k: int) -> int:
    """The Narayana number binom(n, k) * binom(n, k-1) / n."""
    if not 1 <= k <= n:
        raise ValueError(f"narayana needs 1 <= k <= n, got k={k}, n={n}")
    return _as_integer(Fraction(comb(n, k) * comb(n, k - 1), n), f"narayana({n},{k})")


def cry_product(n: int) -> int:
    """Product of Catalan numbers C_1 ... C_{n-1}: the volume of the
    complete-graph flow polytope on n vertices (extended)."""
    if n < 2:
        raise ValueError(f"cry_product needs n >= 2, got {n}")
    out = 1
    for i in range(1, n):
        out *= catalan(i)
    return out


def pmn_product(m: int, n: int) -> int:
    """The product formula for the volume of the multiplicity-m
    complete-graph family on [n]:

        prod_{i=m+1}^{m+n-2}  binom(m+n+i, 2i) / (2i+1)

    Empty ranges give 1.
    """
    if m < 0:
        raise ValueError(f"pmn_product needs m >= 0, got {m}")
    if n < 2:
        raise ValueError(f"pmn_product needs n >= 2, got {n}")
    out = Fraction(1)
    for i in range(m + 1, m + n - 1):
        out *= Fraction(comb(m + n + i, 2 * i), 2 * i + 1)
    return _as_integer(out, f"pmn_product({m},{n})")


def kirillov_alternate(m: int, n: int) -> int:
    """Alternate form of pmn_product:

        prod_{p=1}^{n-2} C_p  *  prod_{1<=i<j<=n-1} (2(m+1)+i+j-1) / (i+j-1)
    """
    if m < 0:
        raise ValueError(f"kirillov_alternate needs m >= 0, got {m}")
    if n < 2:
        raise ValueError(f"kirillov_alternate needs n >= 2, got {n}")
    out = Fraction(1)
    for p in range(1, n - 1):
        out *= catalan(p)
    for i in range(1, n - 1):
        for j in range(i + 1, n):
            out *= Fraction(2 * (m + 1) + i + j - 1, i + j - 1)
    return _as_integer(out, f"kirillov_alternate({m},{n})")


def rary_count(r: int, n: int) -> int:
    """Number of (r+2)-ary trees with n+1 internal nodes:

        binom((r+2)(n+1), n+1) / ((r+1)(n+1) + 1)
    """
    if r < 0 or n < 0:
        raise ValueError(f"rary_count needs r, n >= 0, got r={r}, n={n}")
    return _as_integer(
        Fraction(comb((r + 2) * (n + 1), n + 1), (r + 1) * (n + 1) + 1),
        f"rary_count({r},{n})",
    )
