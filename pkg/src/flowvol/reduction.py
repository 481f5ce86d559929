"""Reduction-step rewriting of multigraphs and reduction-tree leaf counts.

A reduction picks vertices i < j < k with one edge (i, j) and one edge
(j, k) present and replaces the graph by the two outcomes

    child 1:  remove one copy of (j, k), add one copy of (i, k)
    child 2:  remove one copy of (i, j), add one copy of (i, k)

Iterating to exhaustion yields a binary tree of graphs whose leaf count
does not depend on the choice of pair at each node and equals the
normalized volume of the flow polytope of the source/sink extension.
The pair choice here is deterministic so runs are reproducible; a second
strategy exists purely so tests can confirm the invariance.
"""

from __future__ import annotations

from collections import Counter
from typing import Iterator

from .errors import MultiplicityViolation, NodeCapExceeded
from .multigraph import Multigraph

DEFAULT_NODE_CAP = 1_000_000

_STRATEGIES = ("lex", "revlex")


def valid_pairs(g: Multigraph) -> list[tuple[int, int, int]]:
    """All reducible triples (i, j, k), sorted by (j, k, i)."""
    out: list[tuple[int, int, int]] = []
    for j in range(2, g.vertex_count):
        ins = [u for (u, v) in g.multiplicity if v == j]
        if not ins:
            continue
        outs = [k for (u, k) in g.multiplicity if u == j]
        for k in sorted(outs):
            for i in sorted(ins):
                out.append((i, j, k))
    out.sort(key=lambda t: (t[1], t[2], t[0]))
    return out


def reduce_pair(g: Multigraph, pair: tuple[int, int, int]) -> tuple[Multigraph, Multigraph]:
    """Apply one reduction step, consuming one copy of each edge."""
    i, j, k = pair
    if not (1 <= i < j < k <= g.vertex_count):
        raise ValueError(f"reduction pair {pair} is not an increasing triple in range")
    if g.mult(i, j) < 1 or g.mult(j, k) < 1:
        raise ValueError(f"reduction pair {pair} needs edges ({i},{j}) and ({j},{k}) present")
    child1 = g.replace({(j, k): -1, (i, k): +1})
    child2 = g.replace({(i, j): -1, (i, k): +1})
    return child1, child2


def _select_pair(mult: dict, vertex_count: int, strategy: str):
    """Deterministic pair choice on a raw multiplicity dict, or None."""
    best = None
    for j in range(2, vertex_count):
        ins = [u for (u, v) in mult if v == j]
        if not ins:
            continue
        outs = [k for (u, k) in mult if u == j]
        if not outs:
            continue
        if strategy == "lex":
            cand = (j, min(outs), min(ins))
            if best is None or cand < best:
                best = cand
        else:
            cand = (j, max(outs), max(ins))
            if best is None or cand > best:
                best = cand
    if best is None:
        return None
    j, k, i = best
    return (i, j, k)


def leaf_count(g: Multigraph, *, strategy: str = "lex", node_cap: int = DEFAULT_NODE_CAP) -> int:
    """Number of leaves of the reduction tree of g.

    Depth-first with an apply/undo delta stack, so memory stays
    proportional to the tree depth.  Raises NodeCapExceeded once more
    than node_cap tree nodes have been visited.
    """
    if strategy not in _STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}; expected one of {_STRATEGIES}")
    mult = dict(g.multiplicity)
    n = g.vertex_count
    nodes = 0

    def walk() -> int:
        nonlocal nodes
        nodes += 1
        if nodes > node_cap:
            raise NodeCapExceeded(node_cap)
        pair = _select_pair(mult, n, strategy)
        if pair is None:
            return 1
        i, j, k = pair
        total = 0
        for removed in ((j, k), (i, j)):
            mult[removed] -= 1
            if mult[removed] == 0:
                del mult[removed]
            mult[(i, k)] = mult.get((i, k), 0) + 1
            total += walk()
            mult[(i, k)] -= 1
            if mult[(i, k)] == 0:
                del mult[(i, k)]
            mult[removed] = mult.get(removed, 0) + 1
        return total

    return walk()


def iter_leaves(g: Multigraph, *, strategy: str = "lex", node_cap: int = DEFAULT_NODE_CAP) -> Iterator[Multigraph]:
    """The leaf graphs of the reduction tree, in traversal order."""
    if strategy not in _STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}; expected one of {_STRATEGIES}")
    mult = dict(g.multiplicity)
    n = g.vertex_count
    nodes = 0

    def walk() -> Iterator[Multigraph]:
        nonlocal nodes
        nodes += 1
        if nodes > node_cap:
            raise NodeCapExceeded(node_cap)
        pair = _select_pair(mult, n, strategy)
        if pair is None:
            yield Multigraph(n, dict(mult))
            return
        i, j, k = pair
        for removed in ((j, k), (i, j)):
            mult[removed] -= 1
            if mult[removed] == 0:
                del mult[removed]
            mult[(i, k)] = mult.get((i, k), 0) + 1
            yield from walk()
            mult[(i, k)] -= 1
            if mult[(i, k)] == 0:
                del mult[(i, k)]
            mult[removed] = mult.get(removed, 0) + 1

    return walk()


def require_multiplicity_form(g: Multigraph) -> None:
    """Check the standing restriction: repeated edges only at vertex 1."""
    for (u, v), m in g.multiplicity.items():
        if u >= 2 and m >= 2:
            raise MultiplicityViolation(
                f"edge ({u}, {v}) has multiplicity {m}; repeated edges must start at vertex 1"
            )


def inseq_algorithm1(g: Multigraph) -> Counter:
    """Multiset of leaf indegree sequences, built vertex by vertex.

    Grows the graph one vertex at a time.  When vertex t arrives, each
    existing leaf sequence branches at every interior vertex v < t that
    sends an edge to t: if v currently holds a incoming edges, the
    reductions at v redistribute them into (a+1-s, s) across (v, t) for
    s = 1..a+1.  Edges from vertex 1 to t never branch (vertex 1 has no
    incoming edges) and contribute their multiplicity directly.

    Each key is the indegree tuple of vertices 2..N at a leaf; counts are
    leaf multiplicities.  The total count equals leaf_count(g).
    """
    require_multiplicity_form(g)
    n = g.vertex_count
    if n == 1:
        return Counter({(): 1})
    seqs: Counter = Counter({(g.mult(1, 2),): 1})
    for t in range(3, n + 1):
        base = g.mult(1, t)
        branch_vertices = [v for v in range(2, t) if g.mult(v, t) >= 1]
        grown: Counter = Counter()
        for seq, count in seqs.items():
            partial = [(seq, base)]
            for v in branch_vertices:
                idx = v - 2
                nxt = []
                for vals, acc in partial:
                    a = vals[idx]
                    for s in range(1, a + 2):
                        nxt.append((vals[:idx] + (a + 1 - s,) + vals[idx + 1:], acc + s))
                partial = nxt
            for vals, acc in partial:
                grown[vals + (acc,)] += count
        seqs = grown
    return seqs


def inseq_parallel(c1: int, c2: int) -> Counter:
    """Leaf indegree multiset of the two-edge bundle graph on [3] with
    c1 copies of (1,2) and c2 copies of (2,3):

        binom(c1+c2-1-i, c2-1) copies of (i, c1+c2-i) for i = 0..c1.
    """
    if c1 < 1 or c2 < 1:
        raise ValueError(f"inseq_parallel needs c1, c2 >= 1, got {c1}, {c2}")
    from math import comb

    out: Counter = Counter()
    for i in range(c1 + 1):
        copies = comb(c1 + c2 - 1 - i, c2 - 1)
        if copies:
            out[(i, c1 + c2 - i)] = copies
    return out
