"""Exact lattice-flow counting and the volume-as-flow-count formula.

kostant(g, v) counts assignments of nonnegative integers to the edge
copies of g whose per-vertex net outflow is v.  Parallel copies of an
edge are distinguishable coordinates, so a bundle of m copies carrying
total flow F contributes a factor binom(F+m-1, m-1) rather than a branch
per copy.

The volume of the flow polytope of the extension of g is this count on
the extended graph at the netflow (0, d_2, ..., d_{M-1}, -sum d), where
d_i is one less than the indegree of internal vertex i.
"""

from __future__ import annotations

import logging
from math import comb
from typing import NamedTuple, Sequence

from .formulas import cry_product, kirillov_alternate, pmn_product
from .families import complete
from .multigraph import Multigraph, tilde_extend

logger = logging.getLogger(__name__)


def kostant(g: Multigraph, netflow: Sequence[int]) -> int:
    """Number of nonnegative integer flows on g with the given net
    outflow per vertex.  A vector that cannot balance gives 0, never an
    error."""
    v = tuple(netflow)
    if len(v) != g.vertex_count:
        raise ValueError(f"netflow length {len(v)} does not match vertex count {g.vertex_count}")
    if sum(v) != 0:
        return 0
    n = g.vertex_count
    out_edges = {u: g.out_neighbors(u) for u in range(1, n + 1)}
    memo: dict[tuple[int, tuple[int, ...]], int] = {}

    def process(u: int, inflow: tuple[int, ...]) -> int:
        # inflow[w - u] is the flow already routed into vertex w, w >= u
        if u > n:
            return 1
        key = (u, inflow)
        cached = memo.get(key)
        if cached is not None:
            return cached
        required = v[u - 1] + inflow[0]
        targets = out_edges[u]
        if required < 0:
            result = 0
        elif not targets:
            result = process(u + 1, inflow[1:]) if required == 0 else 0
        else:
            rest = list(inflow[1:])

            def split(t: int, remaining: int) -> int:
                if t == len(targets):
                    return process(u + 1, tuple(rest)) if remaining == 0 else 0
                w, m = targets[t]
                total = 0
                for flow in range(remaining + 1):
                    ways = comb(flow + m - 1, m - 1)
                    rest[w - u - 1] += flow
                    total += ways * split(t + 1, remaining - flow)
                    rest[w - u - 1] -= flow
                return total

            result = split(0, required)
        memo[key] = result
        return result

    return process(1, (0,) * n)


def lidskii_vector(h: Multigraph) -> tuple[int, ...]:
    """Netflow vector (0, d_2, ..., d_{M-1}, -sum d) with d_i one less
    than the indegree of vertex i, for the volume evaluation on an
    extended graph.

    A negative d_i (an interior vertex with no incoming edge) makes the
    flow count trivially 0; it is logged, not fatal.
    """
    m = h.vertex_count
    if m < 2:
        raise ValueError(f"lidskii_vector needs at least 2 vertices, got {m}")
    ds = [h.indegree(i) - 1 for i in range(2, m)]
    for i, d in enumerate(ds, start=2):
        if d < 0:
            logger.warning("vertex %d has indegree 0; the flow count at this vector is 0", i)
    return (0, *ds, -sum(ds))


def volume_via_kostant(g: Multigraph) -> int:
    """Normalized volume of the flow polytope of the extension of g."""
    extended = tilde_extend(g)
    return kostant(extended, lidskii_vector(extended))


class EqAReport(NamedTuple):
    n: int
    kostant_value: int
    product: int
    match: bool


class KirillovReport(NamedTuple):
    m: int
    n: int
    kostant_value: int
    product: int
    alternate: int
    match: bool


def identity_eq_a(n: int) -> EqAReport:
    """Check the Catalan-product flow identity on the complete graph:
    kostant(K_{n+1}, (1, ..., n, -binom(n+1,2))) against C_1 ... C_n."""
    if n < 1:
        raise ValueError(f"identity_eq_a needs n >= 1, got {n}")
    vector = tuple(range(1, n + 1)) + (-comb(n + 1, 2),)
    value = kostant(complete(n + 1), vector)
    product = cry_product(n + 1)
    return EqAReport(n, value, product, value == product)


def identity_kirillov(m: int, n: int) -> KirillovReport:
    """The shifted variant: kostant(K_{n+1}, (m+1, ..., m+n, sink))
    against the closed product and its alternate form.

    The sink entry is the balancing one, -(nm + binom(n+1,2)); the
    as-published sink -(nm + binom(n,2)) does not cancel the positive
    entries and would make the count trivially 0.
    """
    if m < 0 or n < 1:
        raise ValueError(f"identity_kirillov needs m >= 0 and n >= 1, got m={m}, n={n}")
    vector = tuple(m + i for i in range(1, n + 1)) + (-(n * m + comb(n + 1, 2)),)
    value = kostant(complete(n + 1), vector)
    product = pmn_product(m, n + 1)
    alternate = kirillov_alternate(m, n + 1)
    return KirillovReport(m, n, value, product, alternate, value == product == alternate)
