"""Triangular-array constraint systems and their exact counts.

For a graph on [n+1] whose repeated edges all start at vertex 1, the
normalized volume of the extended flow polytope equals the number of
integer solutions of two triangular systems:

* a-arrays: entries a[i][j] (1 <= j <= i <= n), read as the indegree of
  vertex j+1 after the first i+1 vertices have been processed.  Each row
  is pinned to the previous one entrywise (drop when an edge allows it,
  copy when not) and the diagonal absorbs the remaining edge count.

* b-arrays: off-diagonal entries b[(j, i)] (i < j <= n) with the column
  sums bounded by a budget that grows with entries in the same row:

      sum_{m > i} b[(m, i)]  <=  c_i + sum_{k < i} b[(i, k)]

  where c_i is the indegree of vertex i+1.  Entries whose mirrored edge
  (i+1, j+1) is absent are pinned to zero.

The two encodings are linked by b[(j, i)] = a[j-1][i] - a[j][i] and have
the same cardinality.  Counting is plain DFS with per-column pruning;
enumeration and validation are kept separate from counting so tests can
cross-check every enumerated array against the constraints.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import MultiplicityViolation, NodeCapExceeded
from .multigraph import Multigraph, indegree_profile
from .reduction import require_multiplicity_form

DEFAULT_NODE_CAP = 50_000_000

AArray = dict[tuple[int, int], int]
BArray = dict[tuple[int, int], int]


@dataclass(frozen=True)
class BSystem:
    """A b-array constraint system of dimension n.

    budgets holds c_1..c_{n-1}; zeros is the set of entries (j, i) pinned
    to 0 (graph-derived and forced alike).
    """

    n: int
    budgets: tuple[int, ...]
    zeros: frozenset[tuple[int, int]]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"b-system dimension must be >= 1, got {self.n}")
        if len(self.budgets) != self.n - 1:
            raise ValueError(f"expected {self.n - 1} budgets, got {len(self.budgets)}")
        for j, i in self.zeros:
            if not 1 <= i < j <= self.n:
                raise ValueError(f"zero entry ({j}, {i}) outside the triangular index range")

    def entries(self) -> Iterator[tuple[int, int]]:
        """All entry indices (j, i), column by column, top to bottom."""
        for i in range(1, self.n):
            for j in range(i + 1, self.n + 1):
                yield (j, i)


def _dimension(g: Multigraph) -> int:
    n = g.vertex_count - 1
    if n < 1:
        raise ValueError("array systems need a graph on at least 2 vertices")
    return n


def b_system(g: Multigraph, forced_zeros: Iterable[tuple[int, int]] = ()) -> BSystem:
    """The b-system of a graph, with optional extra entries pinned to 0."""
    require_multiplicity_form(g)
    n = _dimension(g)
    budgets = indegree_profile(g)[: n - 1]
    zeros = {(j, i) for i in range(1, n) for j in range(i + 1, n + 1) if g.mult(i + 1, j + 1) == 0}
    for j, i in forced_zeros:
        if not 1 <= i < j <= n:
            raise ValueError(f"forced zero ({j}, {i}) outside the triangular index range")
        zeros.add((j, i))
    return BSystem(n, tuple(budgets), frozenset(zeros))


def narayana_system(n: int, zero_rows: Iterable[int]) -> BSystem:
    """The b-system counted by one forced-zero pattern of the Narayana
    decomposition: budget i for rows in the pattern and i-1 otherwise,
    with the last-row entry of each pattern row pinned to 0.

    Identical to b_system(member) for the corresponding family graph.
    """
    rows = frozenset(zero_rows)
    if not rows <= set(range(1, n)):
        raise ValueError(f"zero rows {sorted(rows)} must lie in 1..{n - 1}")
    budgets = tuple(i if i in rows else i - 1 for i in range(1, n))
    return BSystem(n, budgets, frozenset((n, j) for j in rows))


def btilde_system(n: int) -> BSystem:
    """The unrestricted system with budget i in row i (the complete
    graph's b-system); the b~ arrays live here."""
    return BSystem(n, tuple(range(1, n)), frozenset())


def count_system(system: BSystem, node_cap: int = DEFAULT_NODE_CAP) -> int:
    """Number of solutions of a b-system, by column-wise DFS.

    The last row of each column never feeds a later budget, so it is
    summed in closed form instead of being branched on.
    """
    n = system.n
    row_sums = [0] * n  # row_sums[i-1] accumulates sum_k b[(i, k)] over earlier columns
    nodes = 0

    def column(i: int) -> int:
        nonlocal nodes
        if i == n:
            return 1

        budget = system.budgets[i - 1] + row_sums[i - 1]

        def entry(j: int, remaining: int) -> int:
            nonlocal nodes
            nodes += 1
            if nodes > node_cap:
                raise NodeCapExceeded(node_cap)
            if j == n:
                return column(i + 1) * (1 if (n, i) in system.zeros else remaining + 1)
            if (j, i) in system.zeros:
                return entry(j + 1, remaining)
            total = 0
            for value in range(remaining + 1):
                row_sums[j - 1] += value
                total += entry(j + 1, remaining - value)
                row_sums[j - 1] -= value
            return total

        return entry(i + 1, budget)

    return column(1)


def enumerate_system(system: BSystem, node_cap: int = DEFAULT_NODE_CAP) -> Iterator[BArray]:
    """All solutions of a b-system, zeros included, in column-major order."""
    n = system.n
    row_sums = [0] * n
    arr: BArray = {}
    nodes = 0

    def column(i: int) -> Iterator[BArray]:
        nonlocal nodes
        if i == n:
            yield dict(arr)
            return
        budget = system.budgets[i - 1] + row_sums[i - 1]

        def entry(j: int, remaining: int) -> Iterator[BArray]:
            nonlocal nodes
            nodes += 1
            if nodes > node_cap:
                raise NodeCapExceeded(node_cap)
            if j > n:
                yield from column(i + 1)
                return
            top = 0 if (j, i) in system.zeros else remaining
            for value in range(top + 1):
                arr[(j, i)] = value
                if j <= n - 1:
                    row_sums[j - 1] += value
                yield from entry(j + 1, remaining - value)
                if j <= n - 1:
                    row_sums[j - 1] -= value
            del arr[(j, i)]

        yield from entry(i + 1, budget)

    return column(1)


def check_system(system: BSystem, arr: BArray) -> None:
    """Validate an array against a system; raises ValueError on any
    violated constraint.  Deliberately independent of the enumerator."""
    n = system.n
    expected = set(system.entries())
    if set(arr) != expected:
        raise ValueError(f"array entries {sorted(arr)} do not match the index range for n={n}")
    for (j, i), value in arr.items():
        if value < 0:
            raise ValueError(f"entry ({j}, {i}) is negative: {value}")
        if (j, i) in system.zeros and value != 0:
            raise ValueError(f"entry ({j}, {i}) is pinned to 0 but holds {value}")
    for i in range(1, n):
        column_sum = sum(arr[(j, i)] for j in range(i + 1, n + 1))
        budget = system.budgets[i - 1] + sum(arr[(i, k)] for k in range(1, i))
        if column_sum > budget:
            raise ValueError(f"column {i} sums to {column_sum}, exceeding its budget {budget}")


def tight_rows(system: BSystem, arr: BArray) -> frozenset[int]:
    """Rows whose column-sum constraint holds with equality."""
    n = system.n
    out = set()
    for i in range(1, n):
        column_sum = sum(arr[(j, i)] for j in range(i + 1, n + 1))
        budget = system.budgets[i - 1] + sum(arr[(i, k)] for k in range(1, i))
        if column_sum == budget:
            out.add(i)
    return frozenset(out)


def count_b(g: Multigraph, forced_zeros: Iterable[tuple[int, int]] = (), *,
            node_cap: int = DEFAULT_NODE_CAP) -> int:
    """Number of b-arrays of g (with optional extra zero entries)."""
    return count_system(b_system(g, forced_zeros), node_cap)


def enumerate_b(g: Multigraph, forced_zeros: Iterable[tuple[int, int]] = ()) -> Iterator[BArray]:
    return enumerate_system(b_system(g, forced_zeros))


def check_b(arr: BArray, g: Multigraph, forced_zeros: Iterable[tuple[int, int]] = ()) -> None:
    check_system(b_system(g, forced_zeros), arr)


def count_btilde(n: int, k: int, node_cap: int = DEFAULT_NODE_CAP) -> int:
    """Number of arrays in the budget-i system with exactly k-1 tight rows."""
    if not 1 <= k <= n:
        raise ValueError(f"count_btilde needs 1 <= k <= n, got k={k}, n={n}")
    system = btilde_system(n)
    total = 0
    for arr in enumerate_system(system, node_cap):
        if len(tight_rows(system, arr)) == k - 1:
            total += 1
    return total


# a-arrays.  Entries (i, j) with j <= i <= n, diagonal included.

def _edge_cumulative(g: Multigraph) -> list[int]:
    """cum[i] = edge count of the restriction to [i+1], for i = 0..n."""
    n = _dimension(g)
    cum = [0]
    for c in indegree_profile(g):
        cum.append(cum[-1] + c)
    assert len(cum) == n + 1
    return cum


def enumerate_a(g: Multigraph, node_cap: int = DEFAULT_NODE_CAP) -> Iterator[AArray]:
    """All a-arrays of g, row by row."""
    require_multiplicity_form(g)
    n = _dimension(g)
    cum = _edge_cumulative(g)
    arr: AArray = {(1, 1): cum[1]}
    nodes = 0

    def row(i: int) -> Iterator[AArray]:
        nonlocal nodes
        if i > n:
            yield dict(arr)
            return

        def fill(j: int, partial: int) -> Iterator[AArray]:
            nonlocal nodes
            nodes += 1
            if nodes > node_cap:
                raise NodeCapExceeded(node_cap)
            if j == i:
                diagonal = cum[i] - partial
                assert diagonal >= 0
                arr[(i, i)] = diagonal
                yield from row(i + 1)
                del arr[(i, i)]
                return
            above = arr[(i - 1, j)]
            if g.mult(j + 1, i + 1) >= 1:
                for value in range(above + 1):
                    arr[(i, j)] = value
                    yield from fill(j + 1, partial + value)
                del arr[(i, j)]
            else:
                arr[(i, j)] = above
                yield from fill(j + 1, partial + above)
                del arr[(i, j)]

        yield from fill(1, 0)

    return row(2)


def count_a(g: Multigraph, node_cap: int = DEFAULT_NODE_CAP) -> int:
    """Number of a-arrays of g, counted without materializing them."""
    require_multiplicity_form(g)
    n = _dimension(g)
    cum = _edge_cumulative(g)
    prev_rows: list[list[int]] = [[cum[1]]]
    nodes = 0

    def row(i: int) -> int:
        nonlocal nodes
        if i > n:
            return 1
        above = prev_rows[-1]
        current: list[int] = []
        prev_rows.append(current)

        def fill(j: int, partial: int) -> int:
            nonlocal nodes
            nodes += 1
            if nodes > node_cap:
                raise NodeCapExceeded(node_cap)
            if j == i:
                current.append(cum[i] - partial)
                result = row(i + 1)
                current.pop()
                return result
            total = 0
            if g.mult(j + 1, i + 1) >= 1:
                for value in range(above[j - 1] + 1):
                    current.append(value)
                    total += fill(j + 1, partial + value)
                    current.pop()
            else:
                value = above[j - 1]
                current.append(value)
                total = fill(j + 1, partial + value)
                current.pop()
            return total

        result = fill(1, 0)
        prev_rows.pop()
        return result

    if n == 1:
        return 1
    return row(2)


def check_a(arr: AArray, g: Multigraph) -> None:
    """Validate an a-array against its system."""
    require_multiplicity_form(g)
    n = _dimension(g)
    cum = _edge_cumulative(g)
    expected = {(i, j) for i in range(1, n + 1) for j in range(1, i + 1)}
    if set(arr) != expected:
        raise ValueError(f"array entries do not match the index range for n={n}")
    if arr[(1, 1)] != cum[1]:
        raise ValueError(f"a[1][1] must be {cum[1]}, got {arr[(1, 1)]}")
    for i in range(2, n + 1):
        for j in range(1, i):
            value, above = arr[(i, j)], arr[(i - 1, j)]
            if g.mult(j + 1, i + 1) >= 1:
                if not 0 <= value <= above:
                    raise ValueError(f"a[{i}][{j}] = {value} outside 0..{above}")
            elif value != above:
                raise ValueError(f"a[{i}][{j}] = {value} must copy a[{i-1}][{j}] = {above}")
        diagonal = cum[i] - sum(arr[(i, k)] for k in range(1, i))
        if arr[(i, i)] != diagonal:
            raise ValueError(f"a[{i}][{i}] must be {diagonal}, got {arr[(i, i)]}")
        if diagonal < 0:
            raise ValueError(f"a[{i}][{i}] is negative")


def a_to_b(arr: AArray, g: Multigraph) -> BArray:
    """Map an a-array to its b-array: b[(j, i)] = a[j-1][i] - a[j][i]."""
    check_a(arr, g)
    n = _dimension(g)
    return {(j, i): arr[(j - 1, i)] - arr[(j, i)] for i in range(1, n) for j in range(i + 1, n + 1)}


def b_to_a(arr: BArray, g: Multigraph) -> AArray:
    """Inverse of a_to_b, rebuilding rows top-down with the diagonal rule."""
    check_b(arr, g)
    n = _dimension(g)
    cum = _edge_cumulative(g)
    out: AArray = {(1, 1): cum[1]}
    for i in range(2, n + 1):
        for j in range(1, i):
            out[(i, j)] = out[(i - 1, j)] - arr[(i, j)]
        out[(i, i)] = cum[i] - sum(out[(i, k)] for k in range(1, i))
    check_a(out, g)
    return out
