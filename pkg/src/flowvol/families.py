"""Constructors for the named graph families.

Vertex-set convention: the multiplicity-m complete-graph family
``cry_graph(m, N)`` lives on [N], i.e. ``cry_graph(0, N)`` is exactly the
complete graph K_N.  (Its closed-form volume ``pmn_product(m, N)`` in the
formulas module uses the same N.)
"""

from __future__ import annotations

from itertools import combinations

from .multigraph import Multigraph


def complete(n: int) -> Multigraph:
    """The complete graph K_n, every forward pair once."""
    if n < 1:
        raise ValueError(f"complete graph needs n >= 1, got {n}")
    return Multigraph(n, {(u, v): 1 for u in range(1, n) for v in range(u + 1, n + 1)})


def cry_graph(m: int, n: int) -> Multigraph:
    """K_n with every edge leaving vertex 1 repeated m+1 times."""
    if m < 0:
        raise ValueError(f"cry_graph needs m >= 0, got {m}")
    if n < 2:
        raise ValueError(f"cry_graph needs n >= 2, got {n}")
    mult = {(u, v): 1 for u in range(1, n) for v in range(u + 1, n + 1)}
    for v in range(2, n + 1):
        mult[(1, v)] = m + 1
    return Multigraph(n, mult)


def narayana_family(n: int, k: int) -> list[Multigraph]:
    """All graphs of the Narayana decomposition family on [n+1].

    One graph per (k-1)-subset S of {2..n}: edge (1, n+1) with
    multiplicity n, edge (1, l) for l in S, edge (l, n+1) for l not in S,
    and every edge between interior vertices.  Each member has exactly
    binom(n+1, 2) edges, and the members across all k tile the complete
    graph's reduction outcomes on the pairs (1, l), (l, n+1).
    """
    if not 1 <= k <= n:
        raise ValueError(f"narayana_family needs 1 <= k <= n, got k={k}, n={n}")
    members = []
    for subset in combinations(range(2, n + 1), k - 1):
        chosen = set(subset)
        mult = {(1, n + 1): n}
        for l in range(2, n + 1):
            if l in chosen:
                mult[(1, l)] = 1
            else:
                mult[(l, n + 1)] = 1
        for u in range(2, n):
            for v in range(u + 1, n + 1):
                mult[(u, v)] = 1
        members.append(Multigraph(n + 1, mult))
    return members


def rary_graph(r: int, n: int) -> Multigraph:
    """Graph on [n+2] whose volume counts (r+2)-ary trees.

    r+1 edges (1,2), r edges (1,i) for 3 <= i <= n+2, and a single path
    edge (i-1, i) for 3 <= i <= n+2.  With r = 0 this is the path P_{n+2}.
    """
    if r < 0:
        raise ValueError(f"rary_graph needs r >= 0, got {r}")
    if n < 0:
        raise ValueError(f"rary_graph needs n >= 0, got {n}")
    mult = {(1, 2): r + 1}
    for i in range(3, n + 3):
        if r > 0:
            mult[(1, i)] = r
        mult[(i - 1, i)] = mult.get((i - 1, i), 0) + 1
    return Multigraph(n + 2, mult)


def multipath(mults) -> Multigraph:
    """Path graph on [n+1] with multiplicity mults[i-1] on edge (i, i+1)."""
    c = tuple(mults)
    if not c:
        raise ValueError("multipath needs at least one multiplicity")
    if any(m < 1 for m in c):
        raise ValueError(f"multipath multiplicities must be positive, got {c}")
    return Multigraph(len(c) + 1, {(i, i + 1): m for i, m in enumerate(c, start=1)})


def path(n: int) -> Multigraph:
    """The path P_n on n vertices."""
    if n < 1:
        raise ValueError(f"path needs n >= 1, got {n}")
    if n == 1:
        return Multigraph(1)
    return multipath((1,) * (n - 1))
