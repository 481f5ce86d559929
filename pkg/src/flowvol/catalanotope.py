"""The generalized Catalanotope: volumes of extended multipath graphs.

f(c_1, ..., c_n) is the normalized volume of the flow polytope of the
extended path with c_i parallel copies of edge (i, i+1).  Two exact
evaluations are provided: the two-edge contraction recurrence

    f(c_1, c_2, ...) = sum_{i=0}^{c_1} binom(c_1+c_2-1-i, c_2-1)
                                        * f(c_1+c_2-i, c_3, ...)

and the closed form summing rising-factorial terms over the index set
K(c).  The chain defining K(c) is ill-typed for n = 2 (it references
k_1); we adopt k_1 = 0, which gives K(c_1, c_2) = {(c_1,)} and a closed
form binom(c_1+c_2, c_1), matching the reduction-tree values.

With all multiplicities 1 the volume is the Catalan number C_n; the
index set itself has C_{n-1} members (the published claim of C_n does
not match its own defining chain, so the observed index is reported, not
silently shifted).
"""

from __future__ import annotations

from math import comb, factorial


def rising_factorial(a: int, b: int) -> int:
    """(a)^(b) = a (a+1) ... (a+b-1), with (a)^(0) = 1."""
    if b < 0:
        raise ValueError(f"rising factorial length must be nonnegative, got {b}")
    out = 1
    for j in range(b):
        out *= a + j
    return out


def _exact_div(num: int, den: int, label: str) -> int:
    q, r = divmod(num, den)
    if r != 0:
        raise ArithmeticError(f"{label}: {num}/{den} is not an integer")
    return q


def _validate(c) -> tuple[int, ...]:
    c = tuple(c)
    if not c:
        raise ValueError("multiplicity vector must be nonempty")
    if any(not isinstance(x, int) or x < 1 for x in c):
        raise ValueError(f"multiplicities must be positive integers, got {c}")
    return c


def k_set(c) -> list[tuple[int, ...]]:
    """Members (k_2, ..., k_n) of the index set K(c), lexicographic:

        0 <= k_2 <= c_1,
        0 <= k_i <= c_{i-1} + k_{i-1}   for 3 <= i <= n-1,
        k_n = c_{n-1} + k_{n-1}.

    For n = 1 the set is {()}; for n = 2 the k_1 = 0 convention forces
    the single member (c_1,).
    """
    c = _validate(c)
    n = len(c)
    if n == 1:
        return [()]
    if n == 2:
        return [(c[0],)]
    out: list[tuple[int, ...]] = []

    def extend(prefix: tuple[int, ...], i: int) -> None:
        if i == n:
            out.append(prefix + (c[n - 2] + prefix[-1],))
            return
        for k in range(c[i - 2] + prefix[-1] + 1):
            extend(prefix + (k,), i + 1)

    for k2 in range(c[0] + 1):
        extend((k2,), 3)
    return out


def f_closed(c) -> int:
    """Closed-form volume: sum over K(c) of
    prod_{i=2}^{n-1} (c_i)^(k_i)/k_i!  *  (c_n+1)^(k_n)/k_n!."""
    c = _validate(c)
    n = len(c)
    total = 0
    for ks in k_set(c):
        term = 1
        for i in range(2, n):
            k = ks[i - 2]
            term *= _exact_div(rising_factorial(c[i - 1], k), factorial(k), f"term factor i={i}")
        if n >= 2:
            k = ks[n - 2]
            term *= _exact_div(rising_factorial(c[n - 1] + 1, k), factorial(k), "final term factor")
        total += term
    return total


def f_recurrence(c) -> int:
    """Recurrence volume, memoized on the multiplicity tuple."""
    c = _validate(c)
    memo: dict[tuple[int, ...], int] = {}

    def f(t: tuple[int, ...]) -> int:
        if len(t) == 1:
            return 1
        cached = memo.get(t)
        if cached is not None:
            return cached
        c1, c2 = t[0], t[1]
        total = 0
        for i in range(c1 + 1):
            total += comb(c1 + c2 - 1 - i, c2 - 1) * f((c1 + c2 - i,) + t[2:])
        memo[t] = total
        return total

    return f(c)


def catalan_kset_count(n: int) -> int:
    """|K(1, ..., 1)| with n ones; observed to be C_{n-1}."""
    if n < 2:
        raise ValueError(f"catalan_kset_count needs n >= 2, got {n}")
    return len(k_set((1,) * n))
