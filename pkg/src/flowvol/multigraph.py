"""Directed multigraphs on a labeled vertex range.

Vertices are the integers 1..N and every edge points forward (u < v),
with an integer multiplicity.  This is the one graph representation used
by every algorithm in the package: the source/sink extension is itself a
plain multigraph after relabeling, so nothing downstream needs a second
representation.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping

from .errors import GraphFormatError

EdgeMap = Mapping[tuple[int, int], int]


class Multigraph:
    """Immutable multigraph on the vertex set {1, ..., vertex_count}.

    Edges are stored as a mapping (u, v) -> multiplicity with u < v.
    Zero multiplicities are normalized away so equality is canonical.
    """

    __slots__ = ("vertex_count", "multiplicity", "_key")

    def __init__(self, vertex_count: int, multiplicity: EdgeMap | Iterable = ()):
        if not isinstance(vertex_count, int) or vertex_count < 1:
            raise ValueError(f"vertex_count must be a positive integer, got {vertex_count!r}")
        items = multiplicity.items() if isinstance(multiplicity, Mapping) else multiplicity
        mult: dict[tuple[int, int], int] = {}
        for (u, v), m in items:
            if not (isinstance(u, int) and isinstance(v, int) and isinstance(m, int)):
                raise ValueError(f"edge entries must be integers, got (({u!r}, {v!r}), {m!r})")
            if not (1 <= u < v <= vertex_count):
                raise ValueError(
                    f"edge ({u}, {v}) out of range for vertex count {vertex_count}; "
                    "edges must be forward pairs u < v"
                )
            if m < 0:
                raise ValueError(f"multiplicity of edge ({u}, {v}) is negative: {m}")
            if m > 0:
                mult[(u, v)] = mult.get((u, v), 0) + m
        object.__setattr__(self, "vertex_count", vertex_count)
        object.__setattr__(self, "multiplicity", mult)
        object.__setattr__(self, "_key", (vertex_count, tuple(sorted(mult.items()))))

    def __setattr__(self, name, value):
        raise AttributeError("Multigraph is immutable")

    def mult(self, u: int, v: int) -> int:
        return self.multiplicity.get((u, v), 0)

    @property
    def edge_count(self) -> int:
        """Total edge count, multiplicities included."""
        return sum(self.multiplicity.values())

    def edges(self) -> Iterator[tuple[tuple[int, int], int]]:
        """All (edge, multiplicity) pairs in sorted edge order."""
        return iter(sorted(self.multiplicity.items()))

    def out_neighbors(self, u: int) -> list[tuple[int, int]]:
        """Sorted (target, multiplicity) pairs of edges leaving u."""
        return sorted((v, m) for (a, v), m in self.multiplicity.items() if a == u)

    def in_neighbors(self, v: int) -> list[tuple[int, int]]:
        """Sorted (source, multiplicity) pairs of edges entering v."""
        return sorted((u, m) for (u, b), m in self.multiplicity.items() if b == v)

    def indegree(self, v: int) -> int:
        return sum(m for (u, b), m in self.multiplicity.items() if b == v)

    def replace(self, changes: Mapping[tuple[int, int], int]) -> "Multigraph":
        """New graph with multiplicities adjusted by the given deltas."""
        mult = dict(self.multiplicity)
        for edge, delta in changes.items():
            mult[edge] = mult.get(edge, 0) + delta
            if mult[edge] == 0:
                del mult[edge]
        return Multigraph(self.vertex_count, mult)

    def __eq__(self, other) -> bool:
        return isinstance(other, Multigraph) and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        edges = ", ".join(
            f"({u},{v})" + (f"x{m}" if m > 1 else "")
            for (u, v), m in sorted(self.multiplicity.items())
        )
        return f"Multigraph([{self.vertex_count}], {{{edges}}})"


def tilde_extend(g: Multigraph) -> Multigraph:
    """Adjoin a global source and sink.

    The source becomes vertex 1 and the sink vertex N+2; the original
    vertex i is relabeled i+1.  One new edge runs from the source to each
    original vertex and one from each original vertex to the sink.
    """
    n = g.vertex_count
    mult = {(u + 1, v + 1): m for (u, v), m in g.multiplicity.items()}
    for i in range(1, n + 1):
        mult[(1, i + 1)] = mult.get((1, i + 1), 0) + 1
        mult[(i + 1, n + 2)] = mult.get((i + 1, n + 2), 0) + 1
    return Multigraph(n + 2, mult)


def restrict(g: Multigraph, i: int) -> Multigraph:
    """The induced subgraph on vertices {1, ..., i}."""
    if not 1 <= i <= g.vertex_count:
        raise ValueError(f"restriction index {i} out of range 1..{g.vertex_count}")
    return Multigraph(i, {e: m for e, m in g.multiplicity.items() if e[1] <= i})


def indegree_profile(g: Multigraph) -> tuple[int, ...]:
    """Multiplicity-weighted indegrees of vertices 2..N.

    Entry i-2 is the indegree of vertex i, which also equals the edge
    count of the restriction to [i] minus that of the restriction to
    [i-1] (the row constant of the triangular-array systems).
    """
    indeg = [0] * (g.vertex_count + 1)
    for (u, v), m in g.multiplicity.items():
        indeg[v] += m
    return tuple(indeg[2:])


# Text graph format: optional '#' comment lines, one 'vertices N' header,
# then 'edge u v m' lines; repeated 'edge u v' lines accumulate.

def parse_graph(text: str) -> Multigraph:
    """Parse a single graph document."""
    vertex_count = None
    mult: dict[tuple[int, int], int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if tokens[0] == "vertices":
            if vertex_count is not None:
                raise GraphFormatError(f"line {lineno}: duplicate 'vertices' header")
            if len(tokens) != 2:
                raise GraphFormatError(f"line {lineno}: expected 'vertices N'")
            try:
                vertex_count = int(tokens[1])
            except ValueError:
                raise GraphFormatError(f"line {lineno}: vertex count {tokens[1]!r} is not an integer") from None
            if vertex_count < 1:
                raise GraphFormatError(f"line {lineno}: vertex count must be positive")
        elif tokens[0] == "edge":
            if vertex_count is None:
                raise GraphFormatError(f"line {lineno}: 'edge' before 'vertices' header")
            if len(tokens) != 4:
                raise GraphFormatError(f"line {lineno}: expected 'edge u v m'")
            try:
                u, v, m = (int(t) for t in tokens[1:])
            except ValueError:
                raise GraphFormatError(f"line {lineno}: non-integer edge fields") from None
            if not (1 <= u < v <= vertex_count):
                raise GraphFormatError(f"line {lineno}: edge ({u}, {v}) must satisfy 1 <= u < v <= {vertex_count}")
            if m < 1:
                raise GraphFormatError(f"line {lineno}: multiplicity must be at least 1")
            mult[(u, v)] = mult.get((u, v), 0) + m
        else:
            raise GraphFormatError(f"line {lineno}: unrecognized directive {tokens[0]!r}")
    if vertex_count is None:
        raise GraphFormatError("missing 'vertices N' header")
    return Multigraph(vertex_count, mult)


def parse_graphs(text: str) -> list[Multigraph]:
    """Parse a stream of graph documents separated by '---' lines."""
    documents = [[]]
    for raw in text.splitlines():
        if raw.strip() == "---":
            documents.append([])
        else:
            documents[-1].append(raw)
    chunks = ["\n".join(doc) for doc in documents]
    chunks = [c for c in chunks if any(line.strip() and not line.strip().startswith("#") for line in c.splitlines())]
    if not chunks:
        raise GraphFormatError("no graph documents found")
    return [parse_graph(c) for c in chunks]


def format_graph(g: Multigraph) -> str:
    lines = [f"vertices {g.vertex_count}"]
    for (u, v), m in sorted(g.multiplicity.items()):
        lines.append(f"edge {u} {v} {m}")
    return "\n".join(lines) + "\n"


def format_graphs(graphs: Iterable[Multigraph]) -> str:
    return "---\n".join(format_graph(g) for g in graphs)


def load_graph(path) -> Multigraph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_graph(fh.read())
