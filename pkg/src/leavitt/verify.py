"""Random samplers and property suites shared by the CLI and the test suite."""
from __future__ import annotations

import random
from dataclasses import dataclass, field

from . import family as fam
from . import graph as gr
from . import oracle
from .algebra import Element, LeavittPathAlgebra, Monomial, SpecialEdgeChoice
from .family import DecoratedRay, Finite, GraphFamily, OmegaUnion
from .fields import Field, QQ
from .graph import Graph, Path
from .structure import classify, implication_audit, matrix_decomposition


# -- samplers ----------------------------------------------------------------------
def random_graph(
    rng: random.Random,
    max_vertices: int = 5,
    max_edges: int = 8,
    acyclic: bool = False,
    min_vertices: int = 1,
) -> Graph:
    """A random multigraph; with ``acyclic`` every edge goes forward in vertex order."""
    n = rng.randint(min_vertices, max_vertices)
    vertices = [f"v{i}" for i in range(1, n + 1)]
    edges = []
    for k in range(rng.randint(0, max_edges)):
        if acyclic:
            if n < 2:
                break
            i = rng.randrange(n - 1)
            j = rng.randrange(i + 1, n)
        else:
            i, j = rng.randrange(n), rng.randrange(n)
        edges.append((f"e{k + 1}", vertices[i], vertices[j]))
    return Graph(vertices, edges, name="random")


def random_path_to(rng: random.Random, g: Graph, v: str, max_len: int) -> Path:
    """Walk backwards from v for a random number of steps."""
    p = g.vertex_path(v)
    for _ in range(rng.randint(0, max_len)):
        incoming = g.in_edges(p.base)
        if not incoming:
            break
        e = rng.choice(incoming)
        p = Path(g.s(e), (e,) + p.edges, p.end)
    return p


def random_monomial(rng: random.Random, g: Graph, max_len: int = 4) -> Monomial:
    v = rng.choice(g.vertices)
    return Monomial(random_path_to(rng, g, v, max_len), random_path_to(rng, g, v, max_len))


def random_scalar(rng: random.Random, field: Field):
    c = 0
    while c == 0:
        c = rng.randint(-3, 3)
    return field(c)


def random_element(rng: random.Random, algebra: LeavittPathAlgebra, max_terms: int = 4, max_len: int = 4) -> Element:
    """A raw (unnormalized) random element."""
    terms = [
        (random_monomial(rng, algebra.graph, max_len), random_scalar(rng, algebra.field))
        for _ in range(rng.randint(1, max_terms))
    ]
    return algebra.raw(terms)


def random_homogeneous(rng: random.Random, algebra: LeavittPathAlgebra, degree: int, tries: int = 50) -> Element:
    for _ in range(tries):
        x = random_element(rng, algebra).component(degree)
        if len(x):
            return x
    return algebra.zero()


def expand_randomly(rng: random.Random, x: Element, steps: int = 3) -> Element:
    """Same element, different raw terms: run CK-2 backwards on random terms."""
    algebra = x.algebra
    g = algebra.graph
    terms = dict(x.terms)
    zero = algebra.field.zero
    for _ in range(steps):
        candidates = [m for m in terms if g.out_degree(m.p.end)]
        if not candidates:
            break
        m = rng.choice(sorted(candidates, key=algebra.monomial_key))
        c = terms.pop(m)
        for e in g.out_edges(m.p.end):
            new = Monomial(g.extend(m.p, e), g.extend(m.q, e))
            terms[new] = terms.get(new, zero) + c
    return algebra.raw({m: c for m, c in terms.items() if c != 0})


# -- suites ------------------------------------------------------------------------
@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, message: str):
        if len(self.failures) < 5:
            self.failures.append(message)
        else:
            self.failures[-1] = f"... more failures (last: {message})"

    def to_json(self) -> dict:
        return {"suite": self.name, "passed": self.passed, "checked": self.checked, "failures": list(self.failures)}


def ck_relations(algebra: LeavittPathAlgebra) -> SuiteResult:
    """Vertex orthogonality, the edge/vertex identities, CK-1 and CK-2."""
    res = SuiteResult("ck_relations")
    g = algebra.graph
    V = {v: algebra.vertex(v) for v in g.vertices}
    E = {e: algebra.edge(e) for e in g.edge_ids}
    G = {e: algebra.ghost(e) for e in g.edge_ids}
    zero = algebra.zero()

    def check(ok: bool, message: str):
        res.checked += 1
        if not ok:
            res.fail(message)

    for u in g.vertices:
        for v in g.vertices:
            check(V[u] * V[v] == (V[u] if u == v else zero), f"{u}*{v}")
    for e in g.edge_ids:
        s, r = V[g.s(e)], V[g.r(e)]
        check(s * E[e] == E[e] and E[e] * r == E[e], f"s(e)e = e = er(e) for {e}")
        check(r * G[e] == G[e] and G[e] * s == G[e], f"r(e)e* = e* = e*s(e) for {e}")
        for f in g.edge_ids:
            check(G[e] * E[f] == (r if e == f else zero), f"{e}^* {f}")
    for v in g.vertices:
        out = g.out_edges(v)
        if out:
            total = zero
            for e in out:
                total = total + E[e] * G[e]
            check(total == V[v], f"CK-2 at {v}")
    return res


def associativity(algebra: LeavittPathAlgebra, rng: random.Random, samples: int) -> SuiteResult:
    res = SuiteResult("associativity")
    for _ in range(samples):
        x, y, z = (random_element(rng, algebra) for _ in range(3))
        res.checked += 1
        lhs, rhs = (x * y) * z, x * (y * z)
        if lhs.terms != rhs.terms:
            res.fail(f"({x})({y})({z})")
    return res


def confluence(algebra: LeavittPathAlgebra, rng: random.Random, samples: int) -> SuiteResult:
    """Normal forms do not depend on the order rewrites are applied in."""
    res = SuiteResult("confluence")
    for _ in range(samples):
        x = expand_randomly(rng, random_element(rng, algebra), rng.randint(0, 3))
        a = algebra.normal_form(x, random.Random(rng.random()))
        b = algebra.normal_form(x, random.Random(rng.random()))
        c = algebra.normal_form(x)
        res.checked += 1
        if not (a.terms == b.terms == c.terms):
            res.fail(str(x))
        elif not c.is_normal() or algebra.normal_form(c).terms != c.terms:
            res.fail(f"normal form of {x} is not idempotent")
    return res


def involution(algebra: LeavittPathAlgebra, rng: random.Random, samples: int) -> SuiteResult:
    res = SuiteResult("involution")
    for _ in range(samples):
        x, y = random_element(rng, algebra), random_element(rng, algebra)
        res.checked += 1
        if (x * y).star().terms != (y.star() * x.star()).terms:
            res.fail(f"(xy)* != y*x* for {x}, {y}")
        if x.star().star().terms != algebra.normal_form(x).terms:
            res.fail(f"x** != x for {x}")
    return res


def grading(algebra: LeavittPathAlgebra, rng: random.Random, samples: int) -> SuiteResult:
    res = SuiteResult("grading")
    for _ in range(samples):
        a, b = rng.randint(-2, 2), rng.randint(-2, 2)
        x, y = random_homogeneous(rng, algebra, a), random_homogeneous(rng, algebra, b)
        res.checked += 1
        prod = x * y
        if prod.degrees() - {a + b}:
            res.fail(f"degrees {prod.degrees()} for {x} (deg {a}) times {y} (deg {b})")
        z = random_element(rng, algebra)
        total = algebra.zero()
        for n in z.degrees():
            total = total + z.component(n)
        if total.terms != z.terms:
            res.fail(f"graded components of {z} do not sum back")
    return res


def homomorphism(algebra: LeavittPathAlgebra, rng: random.Random, samples: int) -> SuiteResult:
    res = SuiteResult("homomorphism")
    g, f = algebra.graph, algebra.field
    model = oracle.model_for(g, f)
    for _ in range(samples):
        x, y = random_element(rng, algebra), random_element(rng, algebra)
        res.checked += 1
        if model.rep(x * y) != model.rep(x).matmul(model.rep(y), f):
            res.fail(f"rep(xy) != rep(x)rep(y) for {x}, {y}")
        if model.rep(x.star()) != model.rep(x).transpose():
            res.fail(f"rep(x*) != rep(x)^T for {x}")
    return res


def faithfulness(algebra: LeavittPathAlgebra, rng: random.Random, samples: int) -> SuiteResult:
    """Normal-form equality coincides with matrix equality (half the pairs are equal)."""
    res = SuiteResult("faithfulness")
    g = algebra.graph
    model = oracle.model_for(g, algebra.field)
    for _ in range(samples):
        x = random_element(rng, algebra)
        if rng.random() < 0.5:
            y = expand_randomly(rng, x, rng.randint(1, 4))
        else:
            y = random_element(rng, algebra)
        res.checked += 1
        nf_equal = algebra.normal_form(x).terms == algebra.normal_form(y).terms
        rep_equal = model.rep(x) == model.rep(y)
        if nf_equal != rep_equal:
            res.fail(f"nf {nf_equal} vs matrix {rep_equal} for {x} / {y}")
    return res


def dimension_identity(algebra: LeavittPathAlgebra) -> SuiteResult:
    res = SuiteResult("dimension_identity")
    res.checked = 1
    dim = len(algebra.basis())
    blocks = matrix_decomposition(algebra.graph).entries
    total = sum(n * n for _, n in blocks)
    if dim != total:
        res.fail(f"|basis| = {dim} but sum n_i^2 = {total}")
    return res


def regularity(algebra: LeavittPathAlgebra, rng: random.Random, samples: int) -> SuiteResult:
    res = SuiteResult("regularity")
    g = algebra.graph
    for _ in range(samples):
        x = random_element(rng, algebra)
        res.checked += 1
        try:
            b = oracle.vn_regular_witness(g, x)
        except Exception as exc:  # report, do not abort the suite
            res.fail(f"{x}: {exc}")
            continue
        if x * b * x != x:
            res.fail(f"x b x != x for {x}")
    return res


def radical(algebra: LeavittPathAlgebra) -> SuiteResult:
    res = SuiteResult("radical")
    res.checked = 1
    d = oracle.radical_dimension(algebra)
    if d:
        res.fail(f"trace form kernel has dimension {d}")
    return res


def audit(f: GraphFamily) -> SuiteResult:
    res = SuiteResult("implication_audit")
    res.checked = 1
    for v in implication_audit(classify(f)):
        res.fail(v)
    return res


def truncation_agreement(f: GraphFamily, depths=range(1, 7)) -> SuiteResult:
    """Family-level answers agree with the graph module on truncations."""
    res = SuiteResult("truncation_agreement")
    acyclic = fam.is_acyclic_family(f)
    for n in depths:
        t = fam.truncate(f, n)
        res.checked += 1
        if gr.is_acyclic(t) != acyclic:
            res.fail(f"acyclicity differs at depth {n}")
            continue
        if isinstance(f, OmegaUnion) and acyclic:
            expected = {}
            for i in range(1, n + 1):
                comp = fam.component(f, i)
                for s in sorted(gr.sinks(comp), key=comp.vertex_index):
                    expected[f"c{i}.{s}"] = len(gr.paths_ending_at(comp, s))
            got = {s: len(gr.paths_ending_at(t, s)) for s in gr.sinks(t)}
            if got != expected:
                res.fail(f"sink path counts differ at depth {n}")
            from itertools import islice

            blocks = dict(islice(matrix_decomposition(f), len(expected)))
            if blocks != expected:
                res.fail(f"decomposition differs from truncation at depth {n}")
        if isinstance(f, DecoratedRay) and f.orientation == "right":
            period = len(f.period)
            if n >= 2 * period:
                ends = fam.every_infinite_path_ends_in_sink(f)
                lp = gr.line_points(t)
                for i in range(1, n - period + 1):
                    spine = f"L{i}.{f.decoration(i).attach}"
                    if (spine in lp) != ends:
                        res.fail(f"line point status of {spine} at depth {n} disagrees")
    return res


def run_finite_suites(
    algebra: LeavittPathAlgebra, rng: random.Random, samples: int, regular_samples: int | None = None
) -> list[SuiteResult]:
    """Every suite that applies to one finite graph."""
    results = [
        ck_relations(algebra),
        associativity(algebra, rng, samples),
        confluence(algebra, rng, samples),
        involution(algebra, rng, samples),
        grading(algebra, rng, samples),
    ]
    if gr.is_acyclic(algebra.graph):
        results += [
            homomorphism(algebra, rng, samples),
            faithfulness(algebra, rng, samples),
            dimension_identity(algebra),
            regularity(algebra, rng, regular_samples or samples),
        ]
        if algebra.field.characteristic == 0:
            results.append(radical(algebra))
    return results


def run_all(f: GraphFamily, rng: random.Random, samples: int = 50, field: Field = QQ) -> list[SuiteResult]:
    results = [audit(f), truncation_agreement(f)]
    g = f.graph if isinstance(f, Finite) else fam.truncate(f, 3)
    results += run_finite_suites(LeavittPathAlgebra(g, field), rng, samples)
    return results


def basis_invariance(g: Graph, field: Field = QQ) -> SuiteResult:
    """The basis size does not depend on the special-edge choice."""
    res = SuiteResult("basis_invariance")
    sizes = set()
    for choice in SpecialEdgeChoice.all_choices(g):
        res.checked += 1
        sizes.add(len(LeavittPathAlgebra(g, field, choice).basis()))
    if len(sizes) > 1:
        res.fail(f"basis sizes {sorted(sizes)} for {g}")
    return res
