"""Leavitt path algebras: exact normal forms, graph criteria for ring
properties of L_K(E) and End(L_K(E)), and a matrix oracle for finite
acyclic graphs."""
from .algebra import Element, LeavittPathAlgebra, Monomial, SpecialEdgeChoice, mono_mul
from .dsl import GraphDocument, parse_document, parse_element, parse_graph, print_document
from .family import (
    Bounded,
    Decoration,
    DecoratedRay,
    Finite,
    LinearLine,
    NoSinks,
    OmegaUnion,
    Periodic,
    Unbounded,
    truncate,
)
from .fields import GF, QQ
from .graph import Graph, Path
from .oracle import matrix_rep, oracle_equivalence, strong_pi_witness, vn_regular_witness
from .structure import ClassificationReport, Undecided, classify, implication_audit, matrix_decomposition

__version__ = "0.1.0"
