import random

import pytest
from hypothesis import given, strategies as st

from leavitt import catalog, verify
from leavitt.algebra import LeavittPathAlgebra, Monomial, SpecialEdgeChoice, mono_mul
from leavitt.errors import GraphMismatch, InfiniteDimensional
from leavitt.fields import GF, QQ
from leavitt.graph import Graph

L2 = catalog.line_graph(2)
FORK = catalog.fork()


def mono(g, p, q):
    def path(x):
        return g.vertex_path(x) if x in g.vertices else g.path(x.split())
    return Monomial(path(p), path(q))


# -- monomial multiplication ---------------------------------------------------------

def test_mono_mul_examples():
    assert mono_mul(mono(L2, "e1", "v2"), mono(L2, "v2", "e1")) == mono(L2, "e1", "e1")
    assert mono_mul(mono(L2, "v2", "e1"), mono(L2, "e1", "v2")) == mono(L2, "v2", "v2")
    rose = catalog.rose(2)
    assert mono_mul(mono(rose, "v", "e1"), mono(rose, "e2", "v")) is None


def test_mono_mul_prefix_cases():
    g = catalog.line_graph(3)
    # q1 = e1, p2 = e1 e2: extra e2 goes to the left path
    assert mono_mul(mono(g, "v2", "e1"), mono(g, "e1 e2", "v3")) == mono(g, "e2", "v3")
    # q1 = e1 e2, p2 = e1: extra e2 goes to the right ghost path
    assert mono_mul(mono(g, "v3", "e1 e2"), mono(g, "e1", "v2")) == mono(g, "v3", "e2")
    assert mono_mul(mono(g, "v1", "v1"), mono(g, "v2", "v2")) is None
    assert mono_mul(mono(g, "v2", "e1"), mono(g, "e2", "v3")) is None


# -- normal forms ---------------------------------------------------------------------

def test_ck2_on_single_edge():
    A = LeavittPathAlgebra(L2)
    assert A.edge("e1") * A.ghost("e1") == A.vertex("v1")
    assert (A.edge("e1") * A.ghost("e1")).terms == A.vertex("v1").terms


def test_fork_with_special_edge_e2():
    A = LeavittPathAlgebra(FORK, choice={"v1": "e2"})
    x = A.edge("e2") * A.ghost("e2")
    assert x.terms == (A.vertex("v1") - A.edge("e1") * A.ghost("e1")).terms
    assert str(x) == "v1 - e1 e1^*"
    assert A.vertex("v1").is_normal()


def test_vertices_and_orthogonality():
    A = LeavittPathAlgebra(catalog.line_graph(3))
    for u in ("v1", "v2", "v3"):
        assert A.vertex(u) * A.vertex(u) == A.vertex(u)
        for w in ("v1", "v2", "v3"):
            if u != w:
                assert (A.vertex(u) * A.vertex(w)).is_zero()


def test_square_of_e1_plus_ghost():
    A = LeavittPathAlgebra(L2)
    x = A.edge("e1") + A.ghost("e1")
    assert x * x == A.vertex("v1") + A.vertex("v2")


def test_involution_examples():
    A = LeavittPathAlgebra(catalog.line_graph(3))
    p = A.path(["e1", "e2"])
    assert p.star() == A.ghost("e2") * A.ghost("e1")
    assert A.vertex("v2").star() == A.vertex("v2")
    assert (2 * A.edge("e1")).star() == 2 * A.ghost("e1")


def test_graded_components():
    A = LeavittPathAlgebra(L2)
    e, v1 = A.edge("e1"), A.vertex("v1")
    assert (e + v1).component(1) == e
    assert e.component(0).is_zero()
    ee = A.raw({mono(L2, "e1", "e1"): 1})
    assert ee.component(0) == ee


def test_local_units():
    g = Graph(["v1", "v2", "v3"], [("e1", "v1", "v2")])
    A = LeavittPathAlgebra(g)
    assert A.local_unit([A.edge("e1")]) == A.vertex("v1") + A.vertex("v2")
    assert A.local_unit([A.vertex("v3")]) == A.vertex("v3")
    x = A.edge("e1") + A.vertex("v3")
    u = A.local_unit([x])
    assert u == A.vertex("v1") + A.vertex("v2") + A.vertex("v3")
    assert u * x == x == x * u


def test_basis_examples():
    assert len(LeavittPathAlgebra(L2).basis()) == 4
    assert len(LeavittPathAlgebra(catalog.line_graph(3)).basis()) == 9
    assert len(LeavittPathAlgebra(FORK).basis()) == 8
    with pytest.raises(InfiniteDimensional):
        LeavittPathAlgebra(catalog.single_loop()).basis()


def test_elements_from_different_graphs_do_not_mix():
    A, B = LeavittPathAlgebra(L2), LeavittPathAlgebra(FORK)
    with pytest.raises(GraphMismatch):
        A.vertex("v1") * B.vertex("v1")


def test_gf5_coefficients_wrap():
    A = LeavittPathAlgebra(L2, GF(5))
    x = 3 * A.vertex("v1") + 2 * A.vertex("v1")
    assert x.is_zero()


def test_special_edge_choices_enumerate():
    choices = list(SpecialEdgeChoice.all_choices(catalog.rose(3)))
    assert len(choices) == 3
    assert SpecialEdgeChoice.default(FORK)["v1"] == "e2"


def test_docstring_example_prints():
    A = LeavittPathAlgebra(catalog.toeplitz())
    assert str(A.ghost("x") * A.edge("x")) == "w"
    assert str(A.zero()) == "0"


# -- sampled properties ----------------------------------------------------------------

SAMPLE_GRAPHS = [
    catalog.fork(),
    catalog.line_graph(4),
    catalog.toeplitz(),
    catalog.rose(2),
    catalog.line_into_rose(2, 2),
]


@pytest.mark.parametrize("g", SAMPLE_GRAPHS, ids=lambda g: g.name)
@pytest.mark.parametrize("field", [QQ, GF(5)], ids=["QQ", "GF5"])
def test_ck_relations(g, field):
    assert verify.ck_relations(LeavittPathAlgebra(g, field)).passed


@pytest.mark.parametrize("g", SAMPLE_GRAPHS, ids=lambda g: g.name)
def test_associativity_on_catalog(g):
    res = verify.associativity(LeavittPathAlgebra(g), random.Random(1), 200)
    assert res.passed, res.failures


def test_associativity_random_graphs():
    rng = random.Random(2)
    total = 0
    for _ in range(20):
        A = LeavittPathAlgebra(verify.random_graph(rng, 4, 6))
        res = verify.associativity(A, rng, 50)
        total += res.checked
        assert res.passed, res.failures
    assert total >= 1000


def test_confluence_random_graphs():
    rng = random.Random(3)
    total = 0
    for _ in range(20):
        A = LeavittPathAlgebra(verify.random_graph(rng, 4, 6))
        res = verify.confluence(A, rng, 50)
        total += res.checked
        assert res.passed, res.failures
    assert total >= 1000


@pytest.mark.parametrize("g", SAMPLE_GRAPHS, ids=lambda g: g.name)
def test_involution_and_grading(g):
    A = LeavittPathAlgebra(g)
    rng = random.Random(4)
    assert verify.involution(A, rng, 100).passed
    assert verify.grading(A, rng, 100).passed


seeds = st.integers(0, 10**9)


@given(seeds)
def test_normal_form_is_idempotent_and_normal(seed):
    rng = random.Random(seed)
    A = LeavittPathAlgebra(verify.random_graph(rng, 4, 6))
    x = verify.random_element(rng, A)
    n = A.normal_form(x)
    assert n.is_normal()
    assert A.normal_form(n).terms == n.terms


@given(seeds)
def test_expansion_preserves_normal_form(seed):
    rng = random.Random(seed)
    A = LeavittPathAlgebra(verify.random_graph(rng, 4, 6))
    x = A.normal_form(verify.random_element(rng, A))
    assert A.normal_form(verify.expand_randomly(rng, x, 4)) == x


@given(seeds)
def test_star_is_antimultiplicative(seed):
    rng = random.Random(seed)
    A = LeavittPathAlgebra(verify.random_graph(rng, 4, 6))
    x, y = verify.random_element(rng, A), verify.random_element(rng, A)
    assert (x * y).star() == y.star() * x.star()
    assert x.star().star() == x


@given(seeds)
def test_degree_is_additive(seed):
    rng = random.Random(seed)
    A = LeavittPathAlgebra(verify.random_graph(rng, 4, 6))
    x = verify.random_homogeneous(rng, A, rng.randint(-2, 2))
    y = verify.random_homogeneous(rng, A, rng.randint(-2, 2))
    xy = x * y
    if x.is_zero() or y.is_zero() or xy.is_zero():
        return
    (dx,), (dy,) = x.degrees(), y.degrees()
    assert xy.degrees() == {dx + dy}
