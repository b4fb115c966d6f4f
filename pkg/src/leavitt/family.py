"""Finitely described row-finite infinite graphs.

Three shapes are supported:

* ``Finite(g)``: an ordinary finite graph.
* ``OmegaUnion(rule)``: the disjoint union of components G_1, G_2, ...
  produced by a :class:`Periodic` or :class:`LinearLine` rule.
* ``DecoratedRay(orientation, period)``: an infinite spine
  L1 -> L2 -> ... (``"right"``) or ... -> L2 -> L1 (``"left"``) whose level i
  carries a copy of ``period[(i - 1) % len(period)]`` glued at its attach
  vertex.

Every predicate below is decided exactly from the finite description.
:func:`truncate` produces the finite subgraph on the first N
components or levels; it is the bridge to the brute-force checks.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from . import graph as gr
from .errors import GraphError, NotAcyclic
from .graph import Edge, Graph

SPINE = "spine"


@dataclass(frozen=True)
class Periodic:
    templates: tuple[Graph, ...]

    def __post_init__(self):
        object.__setattr__(self, "templates", tuple(self.templates))
        if not self.templates:
            raise GraphError("a periodic rule needs at least one template")
        for t in self.templates:
            if not t.vertices:
                raise GraphError("component templates must have at least one vertex")


@dataclass(frozen=True)
class LinearLine:
    """Component i is the line graph on ``a*i + b`` vertices."""

    a: int
    b: int

    def __post_init__(self):
        if self.a < 0 or self.b < 0:
            raise GraphError("linear_line needs a >= 0 and b >= 0")
        if self.a == 0 and self.b == 0:
            raise GraphError("linear_line with a = 0 and b = 0 has empty components")

    def size(self, i: int) -> int:
        return self.a * i + self.b


ComponentRule = Union[Periodic, LinearLine]


@dataclass(frozen=True)
class Decoration:
    graph: Graph
    attach: str

    def __post_init__(self):
        if not self.graph.has_vertex(self.attach):
            raise GraphError(f"attach vertex {self.attach!r} is not a vertex of the decoration")
        if not gr.is_acyclic(self.graph):
            raise GraphError("decorations must be acyclic")
        if self.graph.has_edge(SPINE) or self.graph.has_vertex(SPINE):
            raise GraphError(f"{SPINE!r} is reserved for the ray's spine edges")

    @property
    def is_empty(self) -> bool:
        """True when nothing of the decoration is reachable from the spine."""
        return self.graph.out_degree(self.attach) == 0


@dataclass(frozen=True)
class Finite:
    graph: Graph

    def __post_init__(self):
        if not self.graph.vertices:
            raise GraphError("the empty graph is not supported")


@dataclass(frozen=True)
class OmegaUnion:
    rule: ComponentRule


@dataclass(frozen=True)
class DecoratedRay:
    orientation: str
    period: tuple[Decoration, ...]

    def __post_init__(self):
        object.__setattr__(self, "period", tuple(self.period))
        if self.orientation not in ("right", "left"):
            raise GraphError("ray orientation must be 'right' or 'left'")
        if not self.period:
            raise GraphError("a decorated ray needs a nonempty period")

    def decoration(self, i: int) -> Decoration:
        return self.period[(i - 1) % len(self.period)]


GraphFamily = Union[Finite, OmegaUnion, DecoratedRay]


@dataclass(frozen=True)
class Bounded:
    m: int


@dataclass(frozen=True)
class Unbounded:
    pass


@dataclass(frozen=True)
class NoSinks:
    pass


SinkProfile = Union[Bounded, Unbounded, NoSinks]


# -- concrete pieces ---------------------------------------------------------
def component(f: OmegaUnion, i: int) -> Graph:
    """Component G_i (1-based) with its local, unprefixed ids."""
    if i < 1:
        raise ValueError("components are indexed from 1")
    rule = f.rule
    if isinstance(rule, LinearLine):
        n = rule.size(i)
        return Graph(
            [f"v{k}" for k in range(1, n + 1)],
            [(f"e{k}", f"v{k}", f"v{k + 1}") for k in range(1, n)],
        )
    return rule.templates[(i - 1) % len(rule.templates)]


def _spine_vertex(f: DecoratedRay, i: int) -> str:
    return f"L{i}.{f.decoration(i).attach}"


def truncate(f: GraphFamily, n: int) -> Graph:
    """The finite subgraph on the first ``n`` components or ray levels."""
    if n < 1:
        raise ValueError("truncation depth must be at least 1")
    if isinstance(f, Finite):
        return f.graph
    if isinstance(f, OmegaUnion):
        return gr.disjoint_union(component(f, i).relabel(f"c{i}.") for i in range(1, n + 1))
    vertices: list[str] = []
    edges: list[Edge] = []
    for i in range(1, n + 1):
        d = f.decoration(i).graph.relabel(f"L{i}.")
        vertices.extend(d.vertices)
        edges.extend(d.edges)
    for i in range(1, n):
        lo, hi = _spine_vertex(f, i), _spine_vertex(f, i + 1)
        if f.orientation == "right":
            edges.append(Edge(f"L{i}.{SPINE}", lo, hi))
        else:
            edges.append(Edge(f"L{i + 1}.{SPINE}", hi, lo))
    return Graph(vertices, edges)


def _templates(f: OmegaUnion) -> tuple[Graph, ...]:
    if isinstance(f.rule, Periodic):
        return f.rule.templates
    return ()


# -- predicates --------------------------------------------------------------
def has_finitely_many_vertices(f: GraphFamily) -> bool:
    return isinstance(f, Finite)


def is_row_finite(f: GraphFamily) -> bool:
    return True


def is_column_finite(f: GraphFamily) -> bool:
    # each component or level is finite and a spine adds one incoming edge
    return True


def is_acyclic_family(f: GraphFamily) -> bool:
    if isinstance(f, Finite):
        return gr.is_acyclic(f.graph)
    if isinstance(f, OmegaUnion):
        return all(gr.is_acyclic(t) for t in _templates(f))
    return True


def condition_K_family(f: GraphFamily) -> bool:
    if isinstance(f, Finite):
        return gr.condition_K(f.graph)
    if isinstance(f, OmegaUnion):
        return all(gr.condition_K(t) for t in _templates(f))
    return True


def condition_L_family(f: GraphFamily) -> bool:
    if isinstance(f, Finite):
        return gr.condition_L(f.graph)
    if isinstance(f, OmegaUnion):
        return all(gr.condition_L(t) for t in _templates(f))
    return True


def has_right_infinite_path(f: GraphFamily) -> bool:
    if not is_acyclic_family(f):
        return True
    if isinstance(f, DecoratedRay):
        return f.orientation == "right"
    return False


def has_left_infinite_path(f: GraphFamily) -> bool:
    if not is_acyclic_family(f):
        return True
    if isinstance(f, DecoratedRay):
        return f.orientation == "left"
    return False


def every_infinite_path_ends_in_sink(f: GraphFamily) -> bool:
    """Every right infinite path eventually passes through a line point."""
    if not is_acyclic_family(f):
        raise NotAcyclic("only decided for acyclic families")
    if isinstance(f, DecoratedRay) and f.orientation == "right":
        # the only infinite paths are spine tails; a tail vertex is a line
        # point iff no later level bifurcates, i.e. no decoration leaves the spine
        return all(d.is_empty for d in f.period)
    return True


def _bounded_or_none(counts: list[int]) -> SinkProfile:
    return Bounded(max(counts)) if counts else NoSinks()


def _sink_counts(g: Graph) -> list[int]:
    return [len(gr.paths_ending_at(g, s)) for s in g.vertices if g.out_degree(s) == 0]


def sink_path_count_profile(f: GraphFamily) -> SinkProfile:
    """Supremum over sinks of the number of paths ending at the sink."""
    if not is_acyclic_family(f):
        raise NotAcyclic("path counts are infinite once a cycle is present")
    if isinstance(f, Finite):
        return _bounded_or_none(_sink_counts(f.graph))
    if isinstance(f, OmegaUnion):
        if isinstance(f.rule, LinearLine):
            return Unbounded() if f.rule.a >= 1 else Bounded(f.rule.b)
        return _bounded_or_none([c for t in f.rule.templates for c in _sink_counts(t)])

    counts = []
    for level, d in enumerate(f.period, start=1):
        dg = d.graph
        reach = gr.tree(dg, d.attach)
        for s in dg.vertices:
            if dg.out_degree(s) != 0:
                continue
            if s == d.attach:
                # left rays: only L1 lacks an outgoing spine edge, and it is
                # reached from every level above it
                if f.orientation == "left" and level == 1:
                    return Unbounded()
                continue
            if s in reach:
                # reached through the spine from arbitrarily many levels
                return Unbounded()
            counts.append(len(gr.paths_ending_at(dg, s)))
    return _bounded_or_none(counts)
