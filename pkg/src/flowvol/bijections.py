"""Constructive bijections behind the counting identities.

* Step sequences <-> (r+2)-ary trees: a sequence (b_1, ..., b_n) with
  b_1 <= r+1 and b_{i+1} <= r+1 + b_i drives a marked-frontier tree
  construction; trees are nested tuples of child lists, a leaf being ().

* b-arrays with a forced-zero pattern <-> arrays of the budget-i system
  whose tight rows are exactly the pattern.

The frontier after marking position b keeps only the b entries to the
left of the mark plus the mark's new children; this is the reading under
which the frontier size is exactly r+2+b at every step (asserted during
construction) and the map inverts.
"""

from __future__ import annotations

from typing import Iterator

from . import arrays

Tree = tuple  # nested tuples; () is a leaf


def enumerate_step_sequences(r: int, n: int) -> Iterator[tuple[int, ...]]:
    """All valid step sequences of length n, lexicographic."""
    if r < 0 or n < 0:
        raise ValueError(f"need r, n >= 0, got r={r}, n={n}")

    def extend(prefix: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        if len(prefix) == n:
            yield prefix
            return
        top = r + 1 + (prefix[-1] if prefix else 0)
        for b in range(top + 1):
            yield from extend(prefix + (b,))

    return extend(())


def seq_count(r: int, n: int) -> int:
    """Number of valid step sequences, by direct dynamic programming."""
    if r < 0 or n < 0:
        raise ValueError(f"need r, n >= 0, got r={r}, n={n}")
    # counts[b] = number of length-i prefixes ending in b
    counts = {0: 1}
    for _ in range(n):
        grown: dict[int, int] = {}
        for prev, ways in counts.items():
            for b in range(r + 1 + prev + 1):
                grown[b] = grown.get(b, 0) + ways
        counts = grown
    return sum(counts.values())


def _check_sequence(b: tuple[int, ...], r: int) -> None:
    prev = 0
    for i, value in enumerate(b):
        if value < 0 or value > r + 1 + prev:
            raise ValueError(f"step {i + 1} holds {value}, outside 0..{r + 1 + prev}")
        prev = value


def seq_to_tree(b, r: int) -> Tree:
    """Build the (r+2)-ary tree of a step sequence.

    Step i marks the (b_i+1)-st frontier vertex, gives it r+2 children,
    and the new frontier is everything left of the mark plus those
    children."""
    if r < 0:
        raise ValueError(f"need r >= 0, got r={r}")
    b = tuple(b)
    _check_sequence(b, r)
    arity = r + 2
    root: list = []

    def sprout(node: list) -> list:
        kids: list = [[] for _ in range(arity)]
        node.extend(kids)
        return kids

    frontier = sprout(root)
    for i, mark in enumerate(b):
        expected = arity + (b[i - 1] if i >= 1 else 0)
        assert len(frontier) == expected, "frontier size drifted from r+2+b"
        frontier = frontier[:mark] + sprout(frontier[mark])

    def freeze(node: list) -> Tree:
        return tuple(freeze(child) for child in node)

    return freeze(root)


def tree_to_seq(t: Tree) -> tuple[int, ...]:
    """Recover the step sequence of a tree built by seq_to_tree.

    At each step the mark must be the rightmost frontier vertex that is
    internal in the target: anything to its right is discarded for good,
    so a different choice would strand an internal node."""
    if not isinstance(t, tuple) or len(t) == 0:
        raise ValueError("the root must be an internal node")
    arity = len(t)
    if arity < 2:
        raise ValueError(f"internal nodes need at least 2 children, got {arity}")

    stack = [t]
    internals = 0
    while stack:
        node = stack.pop()
        if len(node) == 0:
            continue
        if len(node) != arity:
            raise ValueError(f"internal node with {len(node)} children in an arity-{arity} tree")
        internals += 1
        stack.extend(node)
    n = internals - 1

    def subtree(path: tuple[int, ...]) -> Tree:
        node = t
        for index in path:
            node = node[index]
        return node

    frontier = [(j,) for j in range(arity)]
    b: list[int] = []
    for _ in range(n):
        mark = None
        for pos in range(len(frontier) - 1, -1, -1):
            if len(subtree(frontier[pos])) > 0:
                mark = pos
                break
        if mark is None:
            raise ValueError("tree is not reachable by the frontier construction")
        b.append(mark)
        w = frontier[mark]
        frontier = frontier[:mark] + [w + (j,) for j in range(arity)]
    if any(len(subtree(p)) > 0 for p in frontier):
        raise ValueError("unreachable internal nodes remain")
    return tuple(b)


def format_tree(t: Tree) -> str:
    """Canonical parenthesized serialization."""
    return "(" + "".join(format_tree(child) for child in t) + ")"


def b_to_btilde(b_arr: arrays.BArray, n: int, zero_rows) -> arrays.BArray:
    """Map an array of the forced-zero system for pattern J to the
    budget-i system array whose tight rows are exactly J.

    Rows outside J are copied; for j in J the last-row entry is raised
    from its pinned 0 to the value that makes row j tight:

        btilde[(n, j)] = j + sum_{k<j} b[(j, k)] - sum_{j<m<n} b[(m, j)]
    """
    pattern = frozenset(zero_rows)
    source = arrays.narayana_system(n, pattern)
    arrays.check_system(source, b_arr)
    out = dict(b_arr)
    for j in sorted(pattern):
        out[(n, j)] = (
            j
            + sum(b_arr[(j, k)] for k in range(1, j))
            - sum(b_arr[(m, j)] for m in range(j + 1, n))
        )
    target = arrays.btilde_system(n)
    arrays.check_system(target, out)
    got = arrays.tight_rows(target, out)
    if got != pattern:
        raise AssertionError(f"image tight rows {sorted(got)} differ from the pattern {sorted(pattern)}")
    return out
