"""Finite directed multigraphs and the graph conditions used by the classifier.

A :class:`Graph` is immutable.  Vertices and edges keep their declaration
order, and that order is what "lexicographic" means everywhere in the
package: paths are compared by the declaration indices of their edges.
"""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import CyclicGraph, GraphError


@dataclass(frozen=True)
class Edge:
    id: str
    source: str
    range: str


@dataclass(frozen=True)
class Path:
    """A finite path.  Length-0 paths are vertices (``edges == ()``).

    Build paths through :meth:`Graph.path` or :meth:`Graph.vertex_path` so
    that composability is checked; ``end`` is derived data and does not
    take part in equality.
    """

    base: str
    edges: tuple[str, ...] = ()
    end: str = field(default="", compare=False)

    def __post_init__(self):
        if not self.edges and not self.end:
            object.__setattr__(self, "end", self.base)

    @property
    def source(self) -> str:
        return self.base

    @property
    def range(self) -> str:
        return self.end

    def __len__(self) -> int:
        return len(self.edges)

    def is_vertex(self) -> bool:
        return not self.edges

    def then(self, other: "Path") -> "Path":
        """Concatenate ``self`` followed by ``other``."""
        if self.end != other.base:
            raise GraphError(f"cannot compose path ending at {self.end} with path from {other.base}")
        return Path(self.base, self.edges + other.edges, other.end)

    def is_prefix_of(self, other: "Path") -> bool:
        n = len(self.edges)
        return self.base == other.base and other.edges[:n] == self.edges

    def __str__(self) -> str:
        return " ".join(self.edges) if self.edges else self.base


class Graph:
    """E = (E0, E1, r, s) for a finite multigraph."""

    def __init__(
        self,
        vertices: Iterable[str],
        edges: Iterable[Edge | tuple[str, str, str]] = (),
        name: str = "",
    ):
        self.name = name
        self._vertices = tuple(vertices)
        self._edges = tuple(e if isinstance(e, Edge) else Edge(*e) for e in edges)

        self._vindex = {}
        for i, v in enumerate(self._vertices):
            if v in self._vindex:
                raise GraphError(f"duplicate vertex id {v!r}")
            self._vindex[v] = i
        self._edge = {}
        self._eindex = {}
        out: dict[str, list[str]] = {v: [] for v in self._vertices}
        inc: dict[str, list[str]] = {v: [] for v in self._vertices}
        for i, e in enumerate(self._edges):
            if e.id in self._edge:
                raise GraphError(f"duplicate edge id {e.id!r}")
            if e.id in self._vindex:
                raise GraphError(f"id {e.id!r} used for both a vertex and an edge")
            for end in (e.source, e.range):
                if end not in self._vindex:
                    raise GraphError(f"edge {e.id!r} refers to unknown vertex {end!r}")
            self._edge[e.id] = e
            self._eindex[e.id] = i
            out[e.source].append(e.id)
            inc[e.range].append(e.id)
        self._out = {v: tuple(es) for v, es in out.items()}
        self._in = {v: tuple(es) for v, es in inc.items()}

    # -- basic accessors -------------------------------------------------
    @property
    def vertices(self) -> tuple[str, ...]:
        return self._vertices

    @property
    def edges(self) -> tuple[Edge, ...]:
        return self._edges

    @property
    def edge_ids(self) -> tuple[str, ...]:
        return tuple(e.id for e in self._edges)

    def edge(self, eid: str) -> Edge:
        try:
            return self._edge[eid]
        except KeyError:
            raise GraphError(f"unknown edge {eid!r}") from None

    def has_vertex(self, v: str) -> bool:
        return v in self._vindex

    def has_edge(self, eid: str) -> bool:
        return eid in self._edge

    def s(self, eid: str) -> str:
        return self.edge(eid).source

    def r(self, eid: str) -> str:
        return self.edge(eid).range

    def out_edges(self, v: str) -> tuple[str, ...]:
        return self._out[v]

    def in_edges(self, v: str) -> tuple[str, ...]:
        return self._in[v]

    def out_degree(self, v: str) -> int:
        return len(self._out[v])

    def in_degree(self, v: str) -> int:
        return len(self._in[v])

    def vertex_index(self, v: str) -> int:
        return self._vindex[v]

    def edge_index(self, eid: str) -> int:
        return self._eindex[eid]

    # -- paths -----------------------------------------------------------
    def vertex_path(self, v: str) -> Path:
        if v not in self._vindex:
            raise GraphError(f"unknown vertex {v!r}")
        return Path(v, (), v)

    def path(self, edges: Sequence[str] | str, base: str | None = None) -> Path:
        """Path from a sequence of edge ids (or a whitespace separated string)."""
        if isinstance(edges, str):
            edges = edges.split()
        edges = tuple(edges)
        if not edges:
            if base is None:
                raise GraphError("a length-0 path needs its base vertex")
            return self.vertex_path(base)
        for a, b in zip(edges, edges[1:]):
            if self.r(a) != self.s(b):
                raise GraphError(f"edges {a!r} and {b!r} do not compose")
        start = self.s(edges[0])
        if base is not None and base != start:
            raise GraphError(f"path {' '.join(edges)} does not start at {base!r}")
        return Path(start, edges, self.r(edges[-1]))

    def extend(self, p: Path, eid: str) -> Path:
        e = self.edge(eid)
        if e.source != p.end:
            raise GraphError(f"edge {eid!r} does not start at {p.end!r}")
        return Path(p.base, p.edges + (eid,), e.range)

    def path_key(self, p: Path) -> tuple:
        """Sort key: length first, then declaration order of the edges."""
        if not p.edges:
            return (0, (self._vindex[p.base],))
        return (len(p.edges), tuple(self._eindex[e] for e in p.edges))

    # -- value semantics -------------------------------------------------
    def _key(self):
        return (self.name, self._vertices, self._edges)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"Graph({self.name or '?'}: {len(self._vertices)} vertices, {len(self._edges)} edges)"

    def relabel(self, prefix: str, name: str = "") -> "Graph":
        """Copy with every vertex and edge id prefixed (used by truncations)."""
        return Graph(
            (prefix + v for v in self._vertices),
            (Edge(prefix + e.id, prefix + e.source, prefix + e.range) for e in self._edges),
            name=name,
        )


def disjoint_union(graphs: Iterable[Graph], name: str = "") -> Graph:
    vertices: list[str] = []
    edges: list[Edge] = []
    for g in graphs:
        vertices.extend(g.vertices)
        edges.extend(g.edges)
    return Graph(vertices, edges, name=name)


# -- vertex classes --------------------------------------------------------
def sinks(g: Graph) -> set[str]:
    return {v for v in g.vertices if g.out_degree(v) == 0}


def regular_vertices(g: Graph) -> set[str]:
    # finite graphs have no infinite emitters, so every non-sink is regular
    return {v for v in g.vertices if g.out_degree(v) > 0}


def infinite_emitters(g: Graph) -> set[str]:
    return set()


def bifurcations(g: Graph) -> set[str]:
    return {v for v in g.vertices if g.out_degree(v) >= 2}


def is_row_finite(g: Graph) -> bool:
    return True


def is_column_finite(g: Graph) -> bool:
    return True


# -- reachability and cycles -------------------------------------------------
def tree(g: Graph, v: str) -> set[str]:
    """T(v): every vertex reachable from v, v included."""
    seen = {v}
    todo = [v]
    while todo:
        u = todo.pop()
        for e in g.out_edges(u):
            w = g.r(e)
            if w not in seen:
                seen.add(w)
                todo.append(w)
    return seen


def ancestors(g: Graph, v: str) -> set[str]:
    """Every vertex with a path to v, v included."""
    seen = {v}
    todo = [v]
    while todo:
        u = todo.pop()
        for e in g.in_edges(u):
            w = g.s(e)
            if w not in seen:
                seen.add(w)
                todo.append(w)
    return seen


def _topological_order(g: Graph, within: set[str] | None = None) -> list[str] | None:
    """Kahn's algorithm on the induced subgraph; ``None`` when it has a cycle."""
    verts = [v for v in g.vertices if within is None or v in within]
    member = set(verts)
    indeg = {v: 0 for v in verts}
    for v in verts:
        for e in g.out_edges(v):
            w = g.r(e)
            if w in member:
                indeg[w] += 1
    queue = deque(v for v in verts if indeg[v] == 0)
    order = []
    while queue:
        u = queue.popleft()
        order.append(u)
        for e in g.out_edges(u):
            w = g.r(e)
            if w in member:
                indeg[w] -= 1
                if indeg[w] == 0:
                    queue.append(w)
    return order if len(order) == len(verts) else None


def is_acyclic(g: Graph) -> bool:
    return _topological_order(g) is not None


def vertices_on_cycles(g: Graph) -> set[str]:
    """Vertices lying on at least one cycle (loops included)."""
    on_cycle = set()
    for v in g.vertices:
        succ = {g.r(e) for e in g.out_edges(v)}
        if v in succ:
            on_cycle.add(v)
            continue
        for w in succ:
            if v in tree(g, w):
                on_cycle.add(v)
                break
    return on_cycle


def has_infinite_path(g: Graph) -> bool:
    """A finite graph has a right infinite path iff it has a cycle."""
    return not is_acyclic(g)


def has_left_infinite_path(g: Graph) -> bool:
    """Backward infinite edge chains also exist iff there is a cycle."""
    return not is_acyclic(g)


# -- closed simple paths and the cycle conditions ---------------------------
def _closed_simple_support(g: Graph, v: str) -> set[str]:
    # intermediate vertices of closed simple paths at v: reachable from v and
    # reaching v without passing through v
    fwd: set[str] = set()
    todo = [g.r(e) for e in g.out_edges(v)]
    while todo:
        u = todo.pop()
        if u == v or u in fwd:
            continue
        fwd.add(u)
        todo.extend(g.r(e) for e in g.out_edges(u))
    bwd: set[str] = set()
    todo = [g.s(e) for e in g.in_edges(v)]
    while todo:
        u = todo.pop()
        if u == v or u in bwd:
            continue
        bwd.add(u)
        todo.extend(g.s(e) for e in g.in_edges(u))
    return fwd & bwd


def count_closed_simple_paths(g: Graph, v: str) -> int | float:
    """Number of closed simple paths based at v; ``math.inf`` when unbounded."""
    support = _closed_simple_support(g, v)
    order = _topological_order(g, support)
    if order is None:
        return math.inf
    ways: dict[str, int] = {}
    for u in reversed(order):
        total = 0
        for e in g.out_edges(u):
            w = g.r(e)
            if w == v:
                total += 1
            elif w in support:
                total += ways[w]
        ways[u] = total
    count = 0
    for e in g.out_edges(v):
        w = g.r(e)
        if w == v:
            count += 1
        elif w in support:
            count += ways[w]
    return count


def iter_closed_simple_paths(g: Graph, v: str) -> Iterator[Path]:
    """Closed simple paths at v in (length, lexicographic) order.

    Infinite when some cycle avoiding v sits between v and itself.
    """
    support = _closed_simple_support(g, v)
    level = [g.vertex_path(v)]
    while level:
        nxt = []
        for p in level:
            for e in g.out_edges(p.end):
                w = g.r(e)
                q = g.extend(p, e)
                if w == v:
                    yield q
                elif w in support:
                    nxt.append(q)
        level = nxt


def closed_simple_paths_at(g: Graph, v: str, limit: int | None = None) -> list[Path]:
    """All closed simple paths at v, or the first ``limit`` of them.

    Raises ``ValueError`` if there are infinitely many and no limit is given.
    """
    if limit is None:
        if count_closed_simple_paths(g, v) == math.inf:
            raise ValueError(f"infinitely many closed simple paths at {v!r}; pass a limit")
        return list(iter_closed_simple_paths(g, v))
    out = []
    for p in iter_closed_simple_paths(g, v):
        if len(out) >= limit:
            break
        out.append(p)
    return out


def condition_K(g: Graph) -> bool:
    return all(count_closed_simple_paths(g, v) != 1 for v in g.vertices)


def _exitless_cycle_vertices(g: Graph) -> set[str]:
    # a cycle uses one out-edge per vertex, so it lacks an exit exactly when
    # all of its vertices have out-degree 1
    found = set()
    for v in g.vertices:
        u, walked = v, set()
        while g.out_degree(u) == 1 and u not in walked:
            walked.add(u)
            u = g.r(g.out_edges(u)[0])
            if u == v:
                found.add(v)
                break
    return found


def condition_L(g: Graph) -> bool:
    return not _exitless_cycle_vertices(g)


def condition_NE(g: Graph) -> bool:
    return all(g.out_degree(v) == 1 for v in vertices_on_cycles(g))


def line_points(g: Graph) -> set[str]:
    bad = bifurcations(g) | vertices_on_cycles(g)
    return {v for v in g.vertices if not (tree(g, v) & bad)}


# -- path enumeration ----------------------------------------------------------
def paths_ending_at(g: Graph, v: str) -> list[Path]:
    """Every path with range v, the vertex v itself first."""
    upstream = ancestors(g, v)
    if _topological_order(g, upstream) is None:
        raise CyclicGraph(f"a cycle reaches {v!r}; infinitely many paths end there")
    result = []
    level = [g.vertex_path(v)]
    while level:
        level.sort(key=g.path_key)
        result.extend(level)
        level = [
            Path(g.s(e), (e,) + p.edges, p.end)
            for p in level
            for e in g.in_edges(p.base)
        ]
    return result


def all_paths(g: Graph) -> list[Path]:
    """Every path of an acyclic graph in canonical order."""
    if not is_acyclic(g):
        raise CyclicGraph("a graph with a cycle has infinitely many paths")
    result = []
    level = [g.vertex_path(v) for v in g.vertices]
    while level:
        level.sort(key=g.path_key)
        result.extend(level)
        level = [g.extend(p, e) for p in level for e in g.out_edges(p.end)]
    return result
