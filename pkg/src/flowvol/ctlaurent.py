"""Volumes as constant terms of truncated Laurent expansions.

For a graph on [n+1] the volume of the extended flow polytope is the
constant term, extracted variable by variable (x_1 innermost), of

    prod_{i=1}^{n} (1-x_i)^{-1}
  * prod_{(i,n+1) in E} (1-x_i)^{-1}
  * prod_{i=2}^{n} x_i^{-c_{i-1}}
  * prod_{(i,j) in E, j<=n} (1 - x_i/x_j)^{-1}

with edge factors repeated per multiplicity and c_i the indegree of
vertex i+1.  Every inverse factor expands in nonnegative powers of its
numerator monomial, so all arithmetic happens on integer coefficients
over a bounded exponent window.

The window bound B truncates each factor's expansion and clips how far
any variable may dip below zero.  A factor's exponent in any term that
survives to the constant slice is bounded by the edge count, so B =
|E(g)| is the safe default; stability_check guards the bound empirically
by recomputing at B+1 and B+2.

Elimination is ordered: a factor enters at the step of its smallest
variable, the step's lone negative monomial is multiplied first, and the
variable being eliminated is pruned above exponent 0 (no later factor
can lower it).  This keeps live polynomials small and low-dimensional.
"""

from __future__ import annotations

from typing import Iterator

from .errors import TruncationUnstable
from .multigraph import Multigraph, indegree_profile

Factor = tuple
# ("geom", i)      -> (1 - x_i)^{-1}
# ("ratio", i, j)  -> (1 - x_i/x_j)^{-1},  i < j
# ("mono", i, e)   -> x_i^e with e <= 0


def build_factors(g: Multigraph) -> list[Factor]:
    """The ordered factor list of the constant-term product for g."""
    n = g.vertex_count - 1
    if n < 0:
        raise ValueError("graph must have at least one vertex")
    factors: list[Factor] = []
    for i in range(1, n + 1):
        factors.append(("geom", i))
    for i in range(1, n + 1):
        factors.extend(("geom", i) for _ in range(g.mult(i, n + 1)))
    indeg = indegree_profile(g)
    for i in range(2, n + 1):
        factors.append(("mono", i, -indeg[i - 2]))
    for (u, v), m in g.edges():
        if v <= n:
            factors.extend(("ratio", u, v) for _ in range(m))
    return factors


def _step_factors(factors: list[Factor], n: int) -> list[list[Factor]]:
    """Group factors by elimination step (their smallest variable), with
    each step's monomial placed first."""
    steps: list[list[Factor]] = [[] for _ in range(n + 1)]
    for f in factors:
        steps[f[1]].append(f)
    for group in steps:
        group.sort(key=lambda f: 0 if f[0] == "mono" else 1)
    return steps


def _mul_geom(poly: dict, ax: int, bound: int) -> dict:
    out: dict = {}
    for exps, coeff in poly.items():
        e = exps[ax]
        for t in range(min(bound, -e) + 1):
            key = exps[:ax] + (e + t,) + exps[ax + 1:]
            out[key] = out.get(key, 0) + coeff
    return out


def _mul_ratio(poly: dict, ax: int, ax2: int, bound: int) -> dict:
    out: dict = {}
    for exps, coeff in poly.items():
        e, e2 = exps[ax], exps[ax2]
        for t in range(min(bound, -e, e2 + bound) + 1):
            key = list(exps)
            key[ax] = e + t
            key[ax2] = e2 - t
            key = tuple(key)
            out[key] = out.get(key, 0) + coeff
    return out


def _mul_mono(poly: dict, ax: int, shift: int) -> dict:
    if shift == 0:
        return poly
    out: dict = {}
    for exps, coeff in poly.items():
        out[exps[:ax] + (exps[ax] + shift,) + exps[ax + 1:]] = coeff
    return out


def ct_volume(g: Multigraph, bound: int | None = None, *,
              check_stability: bool = False,
              trace: list | None = None) -> int:
    """Constant-term volume of g at the given window bound (default the
    edge count).

    With check_stability the value is recomputed at bound+1 and bound+2
    and a disagreement raises TruncationUnstable instead of returning a
    silently wrong number.  A trace list, if given, receives one
    (step, factors, live_terms) tuple per eliminated variable.
    """
    if check_stability:
        b = g.edge_count if bound is None else bound
        value, again, third = (ct_volume(g, b + d, trace=trace if d == 0 else None) for d in (0, 1, 2))
        if not value == again == third:
            raise TruncationUnstable(
                f"constant term changed under a larger window ({value}, {again}, {third}); "
                f"bound {b} is too small"
            )
        return value

    n = g.vertex_count - 1
    if n == 0:
        return 1
    b = g.edge_count if bound is None else bound
    if b < 0:
        raise ValueError(f"window bound must be nonnegative, got {b}")
    steps = _step_factors(build_factors(g), n)
    poly: dict = {(0,) * n: 1}
    for i in range(1, n + 1):
        ax = i - 1
        for factor in steps[i]:
            if factor[0] == "mono":
                poly = _mul_mono(poly, ax, factor[2])
            elif factor[0] == "geom":
                poly = _mul_geom(poly, ax, b)
            else:
                poly = _mul_ratio(poly, ax, factor[2] - 1, b)
        poly = {exps: c for exps, c in poly.items() if exps[ax] == 0}
        if trace is not None:
            trace.append((i, len(steps[i]), len(poly)))
    return poly.get((0,) * n, 0)


def stability_check(g: Multigraph, bound: int) -> bool:
    """True iff the constant term agrees at bounds B, B+1 and B+2."""
    if bound < 0:
        raise ValueError(f"window bound must be nonnegative, got {bound}")
    values = {ct_volume(g, bound + d) for d in range(3)}
    return len(values) == 1
