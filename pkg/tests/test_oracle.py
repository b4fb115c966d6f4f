import random
import pytest

from leavitt import catalog, linalg, verify
from leavitt import family as fam
from leavitt.algebra import LeavittPathAlgebra, Monomial
from leavitt.errors import BoundedFamily, CyclicGraph
from leavitt.family import LinearLine, OmegaUnion, Periodic
from leavitt.fields import GF, QQ
from leavitt.oracle import (
    jordan_block,
    matrix_rep,
    model_for,
    oracle_equivalence,
    pi_index,
    radical_dimension,
    strong_pi_witness,
    vn_regular_witness,
)

L2 = catalog.line_graph(2)
FORK = catalog.fork()


def unit(n, i, j):
    m = linalg.zeros(n, n, QQ)
    m[i][j] = QQ.one
    return m


def test_line2_matrix_units():
    A = LeavittPathAlgebra(L2)
    # rows/columns indexed by (v2, e1)
    assert matrix_rep(L2, A.vertex("v1")).blocks == {"v2": unit(2, 1, 1)}
    assert matrix_rep(L2, A.edge("e1")).blocks == {"v2": unit(2, 1, 0)}
    assert matrix_rep(L2, A.vertex("v2")).blocks == {"v2": unit(2, 0, 0)}
    assert matrix_rep(L2, A.zero()).is_zero()


def test_fork_vertex_splits_across_blocks():
    A = LeavittPathAlgebra(FORK)
    rep = matrix_rep(FORK, A.vertex("v1"))
    assert rep.blocks == {"v2": unit(2, 1, 1), "v3": unit(2, 1, 1)}


def test_oracle_equivalence_examples():
    A = LeavittPathAlgebra(L2)
    e, g, v1 = A.edge("e1"), A.ghost("e1"), A.vertex("v1")
    ee = A.raw({Monomial(L2.path(["e1"]), L2.path(["e1"])): 1})
    assert oracle_equivalence(L2, ee, v1)
    assert not oracle_equivalence(L2, e, g)
    assert oracle_equivalence(L2, v1 - e * g, A.zero())


def test_cyclic_graph_has_no_model():
    A = LeavittPathAlgebra(catalog.toeplitz())
    with pytest.raises(CyclicGraph):
        matrix_rep(catalog.toeplitz(), A.vertex("v"))


def test_witness_examples():
    A = LeavittPathAlgebra(L2)
    v = A.vertex("v1")
    assert vn_regular_witness(L2, v) == v
    assert vn_regular_witness(L2, A.zero()).is_zero()
    # block [[1, 1], [0, 0]] in the (v2, e1) basis is v2 + e1^*
    x = A.vertex("v2") + A.ghost("e1")
    assert matrix_rep(L2, x).blocks["v2"] == [[1, 1], [0, 0]]
    b = vn_regular_witness(L2, x)
    assert matrix_rep(L2, b).blocks["v2"] == [[1, 0], [0, 0]]
    assert x * b * x == x


def test_pullback_inverts_rep():
    rng = random.Random(8)
    for _ in range(30):
        g = verify.random_graph(rng, 5, 7, acyclic=True)
        A = LeavittPathAlgebra(g)
        x = A.normal_form(verify.random_element(rng, A))
        assert model_for(g, QQ).element(matrix_rep(g, x), A) == x


@pytest.mark.parametrize("field", [QQ, GF(5)], ids=["QQ", "GF5"])
def test_homomorphism_and_transpose(field):
    rng = random.Random(9)
    for _ in range(10):
        g = verify.random_graph(rng, 6, 8, acyclic=True)
        A = LeavittPathAlgebra(g, field)
        res = verify.homomorphism(A, rng, 50)
        assert res.passed, res.failures
        x = verify.random_element(rng, A)
        assert matrix_rep(g, x.star()) == matrix_rep(g, x).transpose()


def test_dimension_identity_and_radical():
    rng = random.Random(10)
    for _ in range(25):
        g = verify.random_graph(rng, 5, 7, acyclic=True)
        A = LeavittPathAlgebra(g)
        sizes = model_for(g, QQ).block_sizes()
        assert A.dimension() == sum(n * n for n in sizes.values())
        assert radical_dimension(A) == 0


def test_radical_needs_characteristic_zero():
    with pytest.raises(ValueError):
        radical_dimension(LeavittPathAlgebra(FORK, GF(5)))


def test_jordan_block_index():
    for n in range(1, 7):
        f = jordan_block(n, QQ)
        k, a = pi_index(f, QQ)
        assert k == n
        assert linalg.matpow(f, n - 1, QQ) != linalg.zeros(n, n, QQ)
        assert linalg.matpow(f, n, QQ) == linalg.zeros(n, n, QQ)


def test_strong_pi_witness_growing_lines():
    seq = strong_pi_witness(OmegaUnion(LinearLine(1, 1)), 5)
    assert seq.sizes == (2, 3, 4, 5, 6)
    assert seq.k_profile == (2, 3, 4, 5, 6)
    assert seq.strictly_increasing
    for m in range(1, 6):
        assert seq.exponent_failure(m) is not None
    assert seq.exponent_failure(6) is None


def test_strong_pi_witness_single_block_and_bounded():
    seq = strong_pi_witness(OmegaUnion(LinearLine(1, 1)), 1)
    assert seq.sizes == (2,) and seq.k_profile == (2,)
    with pytest.raises(BoundedFamily):
        strong_pi_witness(OmegaUnion(Periodic((L2,))), 3)


def test_witness_sizes_match_truncation():
    f = OmegaUnion(LinearLine(1, 0))
    seq = strong_pi_witness(f, 5)
    g = fam.truncate(f, 5)
    assert sorted(seq.sizes) == sorted(model_for(g, QQ).block_sizes().values())
