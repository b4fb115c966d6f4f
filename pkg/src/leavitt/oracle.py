"""Brute-force matrix model of L_K(E) for finite acyclic graphs.

For a finite acyclic graph the CK-2 relation can be expanded until every
path ends at a sink.  A monomial ``p q*`` ending at a sink s then becomes
the matrix unit E[p, q] in an n_s x n_s block, where n_s is the number of
paths ending at s.  This gives an isomorphism of L_K(E) onto a direct sum
of full matrix algebras that never touches the rewriting code, so it is
used to cross-check normal forms, products and regularity witnesses.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import graph as gr
from . import linalg
from .algebra import Element, LeavittPathAlgebra, Monomial
from .errors import BoundedFamily, CyclicGraph, GraphMismatch, WitnessSearchFailed
from .family import Bounded, GraphFamily, NoSinks
from .fields import Field
from .graph import Graph, Path
from .linalg import Matrix
from .structure import matrix_decomposition


class MatrixModel:
    """The block matrix picture of L_K(E) for one finite acyclic graph."""

    def __init__(self, g: Graph, field: Field):
        if not gr.is_acyclic(g):
            raise CyclicGraph(f"graph {g.name!r} has a cycle; no finite matrix model")
        self.graph = g
        self.field = field
        self.sinks = [v for v in g.vertices if g.out_degree(v) == 0]
        self.paths = {s: gr.paths_ending_at(g, s) for s in self.sinks}
        self.index = {s: {(p.base, p.edges): i for i, p in enumerate(ps)} for s, ps in self.paths.items()}
        self._suffixes: dict[str, list[Path]] = {}

    def block_sizes(self) -> dict[str, int]:
        return {s: len(ps) for s, ps in self.paths.items()}

    def suffixes(self, v: str) -> list[Path]:
        """Every path from v to a sink."""
        cached = self._suffixes.get(v)
        if cached is None:
            g = self.graph
            if g.out_degree(v) == 0:
                cached = [g.vertex_path(v)]
            else:
                cached = []
                for e in g.out_edges(v):
                    head = g.path([e])
                    cached.extend(head.then(t) for t in self.suffixes(g.r(e)))
            self._suffixes[v] = cached
        return cached

    def zero(self) -> "BlockMatrixRep":
        return BlockMatrixRep({s: linalg.zeros(n, n, self.field) for s, n in self.block_sizes().items()})

    def rep(self, x: Element) -> "BlockMatrixRep":
        if x.graph != self.graph or x.algebra.field != self.field:
            raise GraphMismatch("element does not live over this graph and field")
        out = self.zero()
        for m, c in x.terms.items():
            for t in self.suffixes(m.p.end):
                s = t.end
                i = self.index[s][(m.p.base, m.p.edges + t.edges)]
                j = self.index[s][(m.q.base, m.q.edges + t.edges)]
                block = out.blocks[s]
                block[i][j] = block[i][j] + c
        return out

    def element(self, rep: "BlockMatrixRep", algebra: LeavittPathAlgebra) -> Element:
        """Pull a block matrix back to L_K(E): E[p, q] becomes p q*."""
        terms = {}
        for s, block in rep.blocks.items():
            ps = self.paths[s]
            for i, row in enumerate(block):
                for j, c in enumerate(row):
                    if c != 0:
                        terms[Monomial(ps[i], ps[j])] = c
        return algebra.normal_form(algebra.raw(terms))


@lru_cache(maxsize=256)
def _model(g: Graph, field: Field) -> MatrixModel:
    return MatrixModel(g, field)


def model_for(g: Graph, field: Field) -> MatrixModel:
    return _model(g, field)


@dataclass
class BlockMatrixRep:
    """One square matrix per sink, rows and columns indexed by paths into it."""

    blocks: dict[str, Matrix]

    def __eq__(self, other):
        if not isinstance(other, BlockMatrixRep):
            return NotImplemented
        return self.blocks == other.blocks

    def matmul(self, other: "BlockMatrixRep", field: Field) -> "BlockMatrixRep":
        return BlockMatrixRep({s: linalg.matmul(b, other.blocks[s], field) for s, b in self.blocks.items()})

    def transpose(self) -> "BlockMatrixRep":
        return BlockMatrixRep({s: linalg.transpose(b) for s, b in self.blocks.items()})

    def is_zero(self) -> bool:
        return all(c == 0 for b in self.blocks.values() for row in b for c in row)


def _check_graph(g: Graph, x: Element):
    if x.graph != g:
        raise GraphMismatch("element lives over a different graph")


def matrix_rep(g: Graph, x: Element) -> BlockMatrixRep:
    _check_graph(g, x)
    return model_for(g, x.algebra.field).rep(x)


def oracle_equivalence(g: Graph, x: Element, y: Element) -> bool:
    """Do x and y have the same matrix image?"""
    return matrix_rep(g, x) == matrix_rep(g, y)


def vn_regular_witness(g: Graph, x: Element) -> Element:
    """Some b with x b x = x, built blockwise from a rank factorization."""
    _check_graph(g, x)
    algebra = x.algebra
    field = algebra.field
    model = model_for(g, field)
    rep = model.rep(x)
    blocks = {}
    for s, m in rep.blocks.items():
        n = len(m)
        if all(c == 0 for row in m for c in row):
            blocks[s] = linalg.zeros(n, n, field)
            continue
        c, r = linalg.rank_factorization(m, field)
        blocks[s] = linalg.matmul(linalg.right_inverse(r, field), linalg.left_inverse(c, field), field)
    b = model.element(BlockMatrixRep(blocks), algebra)
    if x * b * x != x:
        raise WitnessSearchFailed(f"x b x != x for x = {x}")
    return b


def radical_dimension(algebra: LeavittPathAlgebra) -> int:
    """Dimension of the kernel of the trace form of the regular representation.

    Over a field of characteristic 0 this kernel is the Jacobson radical, so
    it is 0 exactly when the algebra is semisimple.
    """
    if algebra.field.characteristic != 0:
        raise ValueError("the trace form criterion needs characteristic 0")
    field = algebra.field
    basis = algebra.basis()
    index = {m: i for i, m in enumerate(basis)}
    dim = len(basis)
    # structure constants: b_i b_j = sum_l c[i][j][l] b_l
    const = [[algebra.mul(Element(algebra, {bi: field.one}), Element(algebra, {bj: field.one})).terms
              for bj in basis] for bi in basis]
    # trace of left multiplication by b_l
    trace = [field.zero] * dim
    for l in range(dim):
        for k in range(dim):
            trace[l] = trace[l] + const[l][k].get(basis[k], field.zero)
    form = [[sum((c * trace[index[m]] for m, c in const[i][j].items()), field.zero)
             for j in range(dim)] for i in range(dim)]
    return dim - linalg.rank(form, field)


@dataclass
class EndoSequence:
    """Blocks f_i acting componentwise, with their pi-regularity indices.

    ``k_profile[i]`` is the least k with f_i^k = f_i^(k+1) a solvable and
    ``witnesses[i]`` is such an a.
    """

    field: Field
    sizes: tuple[int, ...]
    blocks: tuple[Matrix, ...]
    k_profile: tuple[int, ...]
    witnesses: tuple[Matrix, ...]

    @property
    def strictly_increasing(self) -> bool:
        return all(a < b for a, b in zip(self.k_profile, self.k_profile[1:]))

    def exponent_failure(self, m: int) -> int | None:
        """Index of a block where f^m = f^(m+1) a has no solution, else ``None``."""
        for i, f in enumerate(self.blocks):
            if linalg.solve(linalg.matpow(f, m + 1, self.field), linalg.matpow(f, m, self.field), self.field) is None:
                return i
        return None


def jordan_block(n: int, field: Field) -> Matrix:
    """Nilpotent Jordan block: ones on the superdiagonal."""
    m = linalg.zeros(n, n, field)
    for i in range(n - 1):
        m[i][i + 1] = field.one
    return m


def pi_index(f: Matrix, field: Field) -> tuple[int, Matrix]:
    """Least k with f^k = f^(k+1) a solvable, together with a solution a."""
    n = len(f)
    power = linalg.identity(n, field)
    for k in range(n + 2):
        nxt = linalg.matmul(power, f, field)
        a = linalg.solve(nxt, power, field)
        if a is not None:
            return k, a
        power = nxt
    raise WitnessSearchFailed("no pi-regularity index found; impossible for a square matrix")


def strong_pi_witness(f: GraphFamily, depth: int, field: Field | None = None) -> EndoSequence:
    """Jordan blocks on the first ``depth`` matrix blocks of an unbounded family."""
    from .fields import QQ

    field = field or QQ
    if depth < 1:
        raise ValueError("depth must be at least 1")
    desc = matrix_decomposition(f)
    if isinstance(desc.boundedness, (Bounded, NoSinks)):
        raise BoundedFamily(f"block sizes are {desc.boundedness}; no unbounded witness exists")
    sizes = tuple(n for _, n in desc.take(depth))
    blocks = tuple(jordan_block(n, field) for n in sizes)
    ks, witnesses = zip(*(pi_index(b, field) for b in blocks))
    return EndoSequence(field, sizes, blocks, tuple(ks), tuple(witnesses))
