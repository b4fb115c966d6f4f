"""Text formats: the graph/family document language and the element language.

Graph documents::

    graph T {
      vertices: v w;
      edges:
        l: v -> v;
        x: v -> w;
    }

    family staircase {
      omega_union;
      linear_line a=1 b=0;
    }

    family comb {
      decorated_ray right;
      period {
        decoration attach=a {
          vertices: a s;
          edges:
            d: a -> s;
        }
      }
    }

``omega_union`` also accepts ``periodic { graph NAME { ... } ... }``.
``#`` starts a comment.  :func:`print_document` emits the canonical layout
above, and ``parse_document(print_document(d)) == d``.

Elements are sums of terms ``[scalar[*]] factor factor ...`` where a factor
is a vertex id, an edge id, or a ghost edge ``e^*``.
"""
from __future__ import annotations

import re
import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING

from .errors import DSLSyntaxError, GraphError, SemanticError
from .family import (
    Decoration,
    DecoratedRay,
    Finite,
    GraphFamily,
    LinearLine,
    OmegaUnion,
    Periodic,
)
from .graph import Graph

if TYPE_CHECKING:
    from .algebra import Element, LeavittPathAlgebra


class ZeroProductWarning(UserWarning):
    """A term of a parsed element multiplied out to zero."""


@dataclass(frozen=True)
class GraphDocument:
    name: str
    family: GraphFamily

    @property
    def kind(self) -> str:
        if isinstance(self.family, Finite):
            return "finite"
        if isinstance(self.family, OmegaUnion):
            return "omega_union"
        return "decorated_ray"


# -- tokenizer ------------------------------------------------------------------
_TOKEN = re.compile(
    r"(?P<ws>[ \t\r]+)|(?P<nl>\n)|(?P<comment>#[^\n]*)"
    r"|(?P<arrow>->)|(?P<num>\d+)|(?P<id>[A-Za-z_][A-Za-z0-9_.']*)"
    r"|(?P<sym>[{}:;=])"
)


@dataclass
class _Tok:
    kind: str
    text: str
    line: int
    col: int


def _tokenize(text: str) -> list[_Tok]:
    toks = []
    pos, line, line_start = 0, 1, 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise DSLSyntaxError(f"unexpected character {text[pos]!r}", line, pos - line_start + 1)
        kind = m.lastgroup
        if kind == "nl":
            line += 1
            line_start = m.end()
        elif kind not in ("ws", "comment"):
            toks.append(_Tok(kind, m.group(), line, pos - line_start + 1))
        pos = m.end()
    toks.append(_Tok("eof", "", line, pos - line_start + 1))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self) -> _Tok:
        return self.toks[self.i]

    def next(self) -> _Tok:
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def fail(self, message: str, tok: _Tok | None = None):
        tok = tok or self.peek()
        found = tok.text or "end of input"
        raise DSLSyntaxError(f"{message}, found {found!r}", tok.line, tok.col)

    def expect(self, text: str) -> _Tok:
        tok = self.peek()
        if tok.text != text or tok.kind == "eof":
            self.fail(f"expected {text!r}")
        return self.next()

    def ident(self, what: str = "identifier") -> _Tok:
        tok = self.peek()
        if tok.kind != "id":
            self.fail(f"expected {what}")
        return self.next()

    def integer(self) -> int:
        tok = self.peek()
        if tok.kind != "num":
            self.fail("expected an integer")
        return int(self.next().text)

    # document := ('graph' ID graph_body | 'family' ID '{' family_body '}') EOF
    def document(self) -> GraphDocument:
        head = self.ident("'graph' or 'family'")
        name = self.ident("document name").text
        if head.text == "graph":
            g = self.graph_body(name)
            doc = GraphDocument(name, self._semantic(lambda: Finite(g), head))
        elif head.text == "family":
            self.expect("{")
            fam = self.family_body(head)
            self.expect("}")
            doc = GraphDocument(name, fam)
        else:
            self.fail("expected 'graph' or 'family'", head)
        if self.peek().kind != "eof":
            self.fail("expected end of input")
        return doc

    def _semantic(self, build, tok: _Tok):
        try:
            return build()
        except GraphError as exc:
            raise SemanticError(f"{exc} (line {tok.line}, column {tok.col})") from None

    def graph_body(self, name: str = "") -> Graph:
        start = self.expect("{")
        self.expect("vertices")
        self.expect(":")
        vertices = []
        while self.peek().kind == "id":
            vertices.append(self.next().text)
        self.expect(";")
        edges = []
        if self.peek().text == "edges":
            self.next()
            self.expect(":")
            while self.peek().kind == "id":
                eid = self.next().text
                self.expect(":")
                src = self.ident("source vertex").text
                self.expect("->")
                rng = self.ident("range vertex").text
                self.expect(";")
                edges.append((eid, src, rng))
        self.expect("}")
        if not vertices:
            raise SemanticError(f"graph {name!r} has no vertices (line {start.line}, column {start.col})")
        return self._semantic(lambda: Graph(vertices, edges, name=name), start)

    def family_body(self, head: _Tok) -> GraphFamily:
        kind = self.ident("'omega_union' or 'decorated_ray'")
        if kind.text == "omega_union":
            self.expect(";")
            rule_tok = self.ident("'linear_line' or 'periodic'")
            if rule_tok.text == "linear_line":
                self.expect("a")
                self.expect("=")
                a = self.integer()
                self.expect("b")
                self.expect("=")
                b = self.integer()
                self.expect(";")
                return self._semantic(lambda: OmegaUnion(LinearLine(a, b)), rule_tok)
            if rule_tok.text == "periodic":
                self.expect("{")
                templates = []
                while self.peek().text == "graph":
                    self.next()
                    tname = self.ident("template name").text
                    templates.append(self.graph_body(tname))
                self.expect("}")
                return self._semantic(lambda: OmegaUnion(Periodic(tuple(templates))), rule_tok)
            self.fail("expected 'linear_line' or 'periodic'", rule_tok)
        if kind.text == "decorated_ray":
            orient = self.ident("'right' or 'left'")
            if orient.text not in ("right", "left"):
                self.fail("expected 'right' or 'left'", orient)
            self.expect(";")
            self.expect("period")
            self.expect("{")
            decorations = []
            while self.peek().text == "decoration":
                tok = self.next()
                self.expect("attach")
                self.expect("=")
                attach = self.ident("attach vertex").text
                g = self.graph_body()
                decorations.append(self._semantic(lambda: Decoration(g, attach), tok))
            self.expect("}")
            return self._semantic(lambda: DecoratedRay(orient.text, tuple(decorations)), orient)
        self.fail("expected 'omega_union' or 'decorated_ray'", kind)


def parse_document(text: str) -> GraphDocument:
    return _Parser(text).document()


def parse_graph(text: str) -> GraphFamily:
    """Parse a graph or family document into a validated family."""
    return parse_document(text).family


# -- printer ----------------------------------------------------------------------
def _print_graph_body(g: Graph, indent: str) -> list[str]:
    inner = indent + "  "
    lines = [f"{inner}vertices: {' '.join(g.vertices)};"]
    if g.edges:
        lines.append(f"{inner}edges:")
        lines.extend(f"{inner}  {e.id}: {e.source} -> {e.range};" for e in g.edges)
    lines.append(f"{indent}}}")
    return lines


def print_document(doc: GraphDocument) -> str:
    f = doc.family
    if isinstance(f, Finite):
        lines = [f"graph {doc.name} {{"] + _print_graph_body(f.graph, "")
        return "\n".join(lines) + "\n"
    lines = [f"family {doc.name} {{"]
    if isinstance(f, OmegaUnion):
        lines.append("  omega_union;")
        if isinstance(f.rule, LinearLine):
            lines.append(f"  linear_line a={f.rule.a} b={f.rule.b};")
        else:
            lines.append("  periodic {")
            for t in f.rule.templates:
                lines.append(f"    graph {t.name} {{")
                lines.extend(_print_graph_body(t, "    "))
            lines.append("  }")
    else:
        lines.append(f"  decorated_ray {f.orientation};")
        lines.append("  period {")
        for d in f.period:
            lines.append(f"    decoration attach={d.attach} {{")
            lines.extend(_print_graph_body(d.graph, "    "))
        lines.append("  }")
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- elements ---------------------------------------------------------------------
_ELEM_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<id>[A-Za-z_][A-Za-z0-9_.']*)(?P<ghost>\^\*)?|(?P<op>[-+*]))"
)


def _element_tokens(text: str):
    pos = 0
    toks = []
    while True:
        m = _ELEM_TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            rest = text[pos:].lstrip()
            if not rest:
                break
            col = len(text) - len(rest) + 1
            raise DSLSyntaxError(f"unexpected character {rest[0]!r}", 1, col)
        col = m.start(m.lastgroup) + 1
        if m.group("num") is not None:
            toks.append(("num", m.group("num"), col))
        elif m.group("id") is not None:
            toks.append(("ghost" if m.group("ghost") else "id", m.group("id"), col))
        else:
            toks.append(("op", m.group("op"), col))
        pos = m.end()
    return toks


def parse_element(text: str, algebra: "LeavittPathAlgebra") -> "Element":
    """Parse and normalize an element of ``algebra``.

    A term whose factors multiply to zero contributes nothing and triggers a
    :class:`ZeroProductWarning`.
    """
    g = algebra.graph
    toks = _element_tokens(text)
    if not toks:
        raise DSLSyntaxError("empty element", 1, 1)
    if len(toks) == 1 and toks[0][:2] == ("num", "0"):
        return algebra.zero()
    i = 0
    total = algebra.zero()
    sign = 1
    if toks[0] == ("op", "-", toks[0][2]):
        sign, i = -1, 1
    while True:
        if i >= len(toks):
            raise DSLSyntaxError("expected a term", 1, len(text) + 1)
        coeff = Fraction(1)
        if toks[i][0] == "num":
            coeff = Fraction(toks[i][1])
            i += 1
            if i < len(toks) and toks[i][:2] == ("op", "*"):
                i += 1
        factors = []
        while i < len(toks) and toks[i][0] in ("id", "ghost"):
            kind, name, col = toks[i]
            if kind == "ghost":
                if not g.has_edge(name):
                    raise SemanticError(f"unknown edge {name!r} (column {col})")
                factors.append(algebra.ghost(name))
            elif g.has_edge(name):
                factors.append(algebra.edge(name))
            elif g.has_vertex(name):
                factors.append(algebra.vertex(name))
            else:
                raise SemanticError(f"unknown vertex or edge {name!r} (column {col})")
            i += 1
        if not factors:
            col = toks[i][2] if i < len(toks) else len(text) + 1
            raise DSLSyntaxError("expected a vertex or edge", 1, col)
        term = factors[0]
        for fac in factors[1:]:
            term = term * fac
        if len(term) == 0:
            warnings.warn(f"term {coeff} * {' '.join(str(f) for f in factors)} is zero", ZeroProductWarning, stacklevel=2)
        total = total + term * algebra.field(sign * coeff)
        if i >= len(toks):
            break
        kind, op, col = toks[i]
        if kind != "op" or op not in "+-":
            raise DSLSyntaxError(f"expected '+' or '-', found {op!r}", 1, col)
        sign = 1 if op == "+" else -1
        i += 1
    return algebra.normal_form(total)
