"""Exact arithmetic in the Leavitt path algebra L_K(E) of a finite graph.

Elements are finite linear combinations of monomials ``p q*`` where p and q
are paths with the same range.  Products use the CK-1 contraction

    (p q*)(r s*) = p t s*      if r = q t
                 = p (s t)*    if q = r t
                 = 0           otherwise

and the CK-2 relation is oriented as a rewrite rule.  Each regular vertex v
has a *special* edge g, and ``(p g)(q g)*`` rewrites to
``p q* - sum((p e)(q e)* for e != g with s(e) = v)``.  Every rewrite removes
the trailing special edge, so normalization terminates; the irreducible
monomials form a basis.

>>> from leavitt.catalog import line_graph
>>> A = LeavittPathAlgebra(line_graph(2))
>>> str(A.edge("e1") * A.ghost("e1"))
'v1'
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from . import graph as gr
from .errors import GraphError, GraphMismatch, InfiniteDimensional
from .fields import QQ, Field, ModP
from .graph import Graph, Path


@dataclass(frozen=True)
class Monomial:
    """The product p q*.  A vertex v is ``Monomial(v, v)``."""

    p: Path
    q: Path

    def __post_init__(self):
        if self.p.end != self.q.end:
            raise GraphError(f"r({self.p}) != r({self.q}); p q* would be zero")

    @property
    def degree(self) -> int:
        return len(self.p) - len(self.q)

    def star(self) -> "Monomial":
        return Monomial(self.q, self.p)

    def __str__(self) -> str:
        if self.p.is_vertex() and self.q.is_vertex():
            return self.p.base
        factors = list(self.p.edges) + [f"{e}^*" for e in reversed(self.q.edges)]
        return " ".join(factors)


def mono_mul(m1: Monomial, m2: Monomial) -> Monomial | None:
    """(p q*)(r s*) by comparing q with r; ``None`` is the zero product."""
    q, r = m1.q, m2.p
    if q.base != r.base:
        return None
    nq, nr = len(q.edges), len(r.edges)
    if nr >= nq:
        if r.edges[:nq] != q.edges:
            return None
        t = r.edges[nq:]
        return Monomial(Path(m1.p.base, m1.p.edges + t, r.end), m2.q)
    if q.edges[:nr] != r.edges:
        return None
    t = q.edges[nr:]
    return Monomial(m1.p, Path(m2.q.base, m2.q.edges + t, q.end))


class SpecialEdgeChoice(Mapping[str, str]):
    """One outgoing edge per regular vertex, used to orient CK-2."""

    def __init__(self, g: Graph, choices: Mapping[str, str] | None = None):
        chosen = {}
        choices = dict(choices or {})
        for v in g.vertices:
            out = g.out_edges(v)
            if not out:
                continue
            e = choices.pop(v, out[-1])
            if e not in out:
                raise GraphError(f"special edge {e!r} is not emitted by {v!r}")
            chosen[v] = e
        if choices:
            raise GraphError(f"special edges given for non-regular vertices: {sorted(choices)}")
        self._choice = chosen

    @classmethod
    def default(cls, g: Graph) -> "SpecialEdgeChoice":
        return cls(g)

    @classmethod
    def all_choices(cls, g: Graph) -> Iterator["SpecialEdgeChoice"]:
        regular = [v for v in g.vertices if g.out_degree(v)]
        for combo in itertools.product(*(g.out_edges(v) for v in regular)):
            yield cls(g, dict(zip(regular, combo)))

    def __getitem__(self, v: str) -> str:
        return self._choice[v]

    def __iter__(self):
        return iter(self._choice)

    def __len__(self):
        return len(self._choice)

    def __eq__(self, other):
        if isinstance(other, SpecialEdgeChoice):
            return self._choice == other._choice
        return NotImplemented

    def __hash__(self):
        return hash(tuple(sorted(self._choice.items())))

    def __repr__(self):
        return f"SpecialEdgeChoice({self._choice})"


class LeavittPathAlgebra:
    """L_K(E) for a finite graph E over an exact field K."""

    def __init__(self, graph: Graph, field: Field = QQ, choice: SpecialEdgeChoice | Mapping | None = None):
        if not graph.vertices:
            raise GraphError("the empty graph has the zero algebra")
        self.graph = graph
        self.field = field
        if not isinstance(choice, SpecialEdgeChoice):
            choice = SpecialEdgeChoice(graph, choice)
        self.choice = choice
        self._nf_cache: dict[Monomial, tuple[tuple[Monomial, object], ...]] = {}

    def __eq__(self, other):
        if not isinstance(other, LeavittPathAlgebra):
            return NotImplemented
        return (self.graph, self.field, self.choice) == (other.graph, other.field, other.choice)

    def __hash__(self):
        return hash((self.graph, self.field, self.choice))

    def __repr__(self):
        return f"LeavittPathAlgebra({self.graph!r}, {self.field!r})"

    # -- constructors ------------------------------------------------------
    def zero(self) -> "Element":
        return Element(self, {})

    def monomial(self, p: Path, q: Path, coeff=1) -> "Element":
        return self.normal_form(Element(self, {Monomial(p, q): self.field(coeff)}))

    def vertex(self, v: str) -> "Element":
        vp = self.graph.vertex_path(v)
        return Element(self, {Monomial(vp, vp): self.field.one})

    def edge(self, eid: str) -> "Element":
        e = self.graph.edge(eid)
        return Element(self, {Monomial(self.graph.path([eid]), self.graph.vertex_path(e.range)): self.field.one})

    def ghost(self, eid: str) -> "Element":
        return self.edge(eid).star()

    def path(self, edges, base: str | None = None) -> "Element":
        p = self.graph.path(edges, base)
        return self.monomial(p, self.graph.vertex_path(p.end))

    def raw(self, terms: Mapping[Monomial, object] | Iterable[tuple[Monomial, object]]) -> "Element":
        """An element from explicit terms, *not* normalized."""
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Monomial, object] = {}
        for m, c in items:
            acc[m] = acc.get(m, self.field.zero) + self.field(c)
        return Element(self, acc)

    def one(self) -> "Element":
        """The unit: the sum of all vertices (the graph is finite)."""
        return self.local_unit_of_vertices(self.graph.vertices)

    def local_unit_of_vertices(self, vertices: Iterable[str]) -> "Element":
        terms = {}
        for v in sorted(set(vertices), key=self.graph.vertex_index):
            vp = self.graph.vertex_path(v)
            terms[Monomial(vp, vp)] = self.field.one
        return Element(self, terms)

    def parse(self, text: str) -> "Element":
        from .dsl import parse_element

        return parse_element(text, self)

    # -- rewriting ------------------------------------------------------------
    def special_edge_at(self, m: Monomial) -> str | None:
        """The special edge ending both paths of ``m``, if the rule applies."""
        pe, qe = m.p.edges, m.q.edges
        if pe and qe and pe[-1] == qe[-1]:
            e = pe[-1]
            if self.choice[self.graph.s(e)] == e:
                return e
        return None

    def is_reducible(self, m: Monomial) -> bool:
        return self.special_edge_at(m) is not None

    def rewrite_once(self, m: Monomial) -> list[tuple[Monomial, int]]:
        """One CK-2 step on a reducible monomial, as (monomial, sign) pairs."""
        e = self.special_edge_at(m)
        if e is None:
            raise ValueError(f"{m} is already irreducible")
        g = self.graph
        v = g.s(e)
        p0 = Path(m.p.base, m.p.edges[:-1], v)
        q0 = Path(m.q.base, m.q.edges[:-1], v)
        out = [(Monomial(p0, q0), 1)]
        for f in g.out_edges(v):
            if f != e:
                w = g.r(f)
                out.append((Monomial(Path(p0.base, p0.edges + (f,), w), Path(q0.base, q0.edges + (f,), w)), -1))
        return out

    def _normal_monomial(self, m: Monomial):
        cached = self._nf_cache.get(m)
        if cached is not None:
            return cached
        acc: dict[Monomial, object] = {}
        stack = [(m, self.field.one)]
        while stack:
            mono, c = stack.pop()
            if self.is_reducible(mono):
                stack.extend((m2, c * s) for m2, s in self.rewrite_once(mono))
            else:
                acc[mono] = acc.get(mono, self.field.zero) + c
        result = tuple((k, c) for k, c in acc.items() if c != 0)
        self._nf_cache[m] = result
        return result

    def normal_form(self, x: "Element", rng: random.Random | None = None) -> "Element":
        """CK-2 normal form.  With ``rng`` the rewrite order is randomized."""
        self._check(x)
        if rng is not None:
            return self._normal_form_randomized(x, rng)
        acc: dict[Monomial, object] = {}
        zero = self.field.zero
        for m, c in x.terms.items():
            for m2, c2 in self._normal_monomial(m):
                acc[m2] = acc.get(m2, zero) + c * c2
        return Element(self, acc)

    def _normal_form_randomized(self, x: "Element", rng: random.Random) -> "Element":
        terms = dict(x.terms)
        zero = self.field.zero
        while True:
            redexes = [m for m in terms if self.is_reducible(m)]
            if not redexes:
                return Element(self, terms)
            redexes.sort(key=self.monomial_key)
            m = rng.choice(redexes)
            c = terms.pop(m)
            for m2, s in self.rewrite_once(m):
                val = terms.get(m2, zero) + c * s
                if val == 0:
                    terms.pop(m2, None)
                else:
                    terms[m2] = val

    # -- operations -------------------------------------------------------------
    def _check(self, *xs: "Element"):
        for x in xs:
            if x.algebra != self:
                raise GraphMismatch("element belongs to a different algebra")

    def mono_mul(self, m1: Monomial, m2: Monomial) -> "Element":
        """Product of two monomials before CK-2 normalization."""
        m = mono_mul(m1, m2)
        return self.zero() if m is None else Element(self, {m: self.field.one})

    def mul(self, x: "Element", y: "Element") -> "Element":
        self._check(x, y)
        acc: dict[Monomial, object] = {}
        zero = self.field.zero
        for m1, c1 in x.terms.items():
            for m2, c2 in y.terms.items():
                m = mono_mul(m1, m2)
                if m is not None:
                    acc[m] = acc.get(m, zero) + c1 * c2
        return self.normal_form(Element(self, acc))

    def involution(self, x: "Element") -> "Element":
        self._check(x)
        return self.normal_form(Element(self, {m.star(): c for m, c in x.terms.items()}))

    def graded_component(self, x: "Element", n: int) -> "Element":
        self._check(x)
        return Element(self, {m: c for m, c in x.terms.items() if m.degree == n})

    def local_unit(self, xs: Iterable["Element"]) -> "Element":
        xs = list(xs)
        if not xs:
            raise ValueError("local_unit needs at least one element")
        self._check(*xs)
        verts = set()
        for x in xs:
            for m in x.terms:
                verts.add(m.p.base)
                verts.add(m.q.base)
        return self.local_unit_of_vertices(verts)

    def basis(self) -> list[Monomial]:
        """The irreducible monomials; a K-basis when the graph is acyclic."""
        g = self.graph
        if not gr.is_acyclic(g):
            raise InfiniteDimensional(f"graph {g.name!r} has a cycle; the algebra is infinite dimensional")
        by_end: dict[str, list[Path]] = {v: [] for v in g.vertices}
        for p in gr.all_paths(g):
            by_end[p.end].append(p)
        out = []
        for v in g.vertices:
            for p in by_end[v]:
                for q in by_end[v]:
                    m = Monomial(p, q)
                    if not self.is_reducible(m):
                        out.append(m)
        out.sort(key=self.monomial_key)
        return out

    def dimension(self) -> int:
        return len(self.basis())

    def monomial_key(self, m: Monomial) -> tuple:
        g = self.graph
        return (len(m.p) + len(m.q), g.path_key(m.p), g.path_key(m.q))

    def coordinates(self, x: "Element", basis: list[Monomial] | None = None) -> list:
        """Coefficient vector of the normal form of ``x`` in ``basis``."""
        basis = self.basis() if basis is None else basis
        nf = self.normal_form(x).terms
        index = {m: i for i, m in enumerate(basis)}
        vec = [self.field.zero] * len(basis)
        for m, c in nf.items():
            vec[index[m]] = c
        return vec


class Element:
    """A finite linear combination of monomials p q*.

    Arithmetic operators build new elements; ``*`` between elements is the
    algebra product (normalized).  ``==`` compares normal forms.
    """

    __slots__ = ("algebra", "_terms")

    def __init__(self, algebra: LeavittPathAlgebra, terms: Mapping[Monomial, object]):
        self.algebra = algebra
        self._terms = {m: c for m, c in terms.items() if c != 0}

    @property
    def terms(self) -> dict[Monomial, object]:
        return dict(sorted(self._terms.items(), key=lambda mc: self.algebra.monomial_key(mc[0])))

    @property
    def graph(self) -> Graph:
        return self.algebra.graph

    def __len__(self):
        return len(self._terms)

    def is_zero(self) -> bool:
        return self.algebra.normal_form(self)._terms == {}

    def is_normal(self) -> bool:
        return not any(self.algebra.is_reducible(m) for m in self._terms)

    def coefficient(self, m: Monomial):
        return self._terms.get(m, self.algebra.field.zero)

    def normal_form(self, rng: random.Random | None = None) -> "Element":
        return self.algebra.normal_form(self, rng)

    def star(self) -> "Element":
        return self.algebra.involution(self)

    def component(self, n: int) -> "Element":
        return self.algebra.graded_component(self, n)

    def degrees(self) -> set[int]:
        return {m.degree for m in self._terms}

    # -- arithmetic -------------------------------------------------------------
    def _combine(self, other: "Element", sign: int) -> "Element":
        if not isinstance(other, Element):
            return NotImplemented
        if other.algebra != self.algebra:
            raise GraphMismatch("element belongs to a different algebra")
        acc = dict(self._terms)
        zero = self.algebra.field.zero
        for m, c in other._terms.items():
            acc[m] = acc.get(m, zero) + (c if sign > 0 else -c)
        return Element(self.algebra, acc)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return Element(self.algebra, {m: -c for m, c in self._terms.items()})

    def _scale(self, k):
        k = self.algebra.field(k)
        return Element(self.algebra, {m: k * c for m, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, Element):
            return self.algebra.mul(self, other)
        if isinstance(other, (int, ModP)) or hasattr(other, "denominator"):
            return self._scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, ModP)) or hasattr(other, "denominator"):
            return self._scale(other)
        return NotImplemented

    def __pow__(self, n: int):
        if n < 1:
            raise ValueError("only positive powers exist without a unit")
        result = self
        for _ in range(n - 1):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, Element):
            return NotImplemented
        if other.algebra != self.algebra:
            return False
        return self.algebra.normal_form(self - other)._terms == {}

    def __hash__(self):
        nf = self.algebra.normal_form(self)
        return hash(frozenset(nf._terms.items()))

    def __str__(self):
        return format_element(self)

    def __repr__(self):
        return f"Element({format_element(self)!r})"


def format_element(x: Element) -> str:
    """Deterministic text in the element grammar accepted by the parser."""
    field = x.algebra.field
    parts: list[str] = []
    for m, c in x.terms.items():
        negative = field.characteristic == 0 and c < 0
        mag = -c if negative else c
        text = str(m) if mag == 1 else f"{mag}*{m}"
        if not parts:
            parts.append(f"-{text}" if negative else text)
        else:
            parts.append(f"- {text}" if negative else f"+ {text}")
    return " ".join(parts) if parts else "0"
