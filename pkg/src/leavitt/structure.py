"""Ring-theoretic verdicts for L = L_K(E) and A = End(L_L), read off the graph.

Every verdict comes from a graph criterion:

=========================  ===================================================
verdict                    criterion
=========================  ===================================================
exchange                   Condition (K)
cyclic_as_module           finitely many vertices
L_vn_regular               acyclic
A_vn_regular, semisimple,  acyclic and every infinite path ends in a sink
automorphism_invariant,
continuous
A_strongly_pi_regular      acyclic, no left/right infinite path, paths into
                           sinks bounded by some m
A_left_self_injective      row- and column-finite, acyclic, no left/right
                           infinite path
=========================  ===================================================

Nothing here multiplies algebra elements; :mod:`leavitt.oracle` checks the
finite cases independently.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator, Union

from . import family as fam
from . import graph as gr
from .errors import NotSemisimpleShape
from .family import Bounded, Finite, GraphFamily, NoSinks, OmegaUnion, SinkProfile, Unbounded
from .graph import Graph


@dataclass(frozen=True)
class Undecided:
    reason: str


Verdict = Union[bool, Undecided]

CITATIONS = {
    "acyclic": "graph: no cycles",
    "condition_K": "graph: each vertex has zero or at least two closed simple paths",
    "condition_L": "graph: every cycle has an exit",
    "exchange": "exchange criterion: Condition (K)",
    "cyclic_as_module": "cyclic criterion: finitely many vertices",
    "L_vn_regular": "regularity of L: acyclic",
    "semisimple": "regular endomorphism criterion: acyclic, infinite paths end in sinks",
    "A_vn_regular": "regular endomorphism criterion: acyclic, infinite paths end in sinks",
    "automorphism_invariant": "regular endomorphism criterion: acyclic, infinite paths end in sinks",
    "continuous": "regular endomorphism criterion: acyclic, infinite paths end in sinks",
    "A_strongly_pi_regular": "strong pi-regularity criterion: acyclic, no infinite paths, sink path counts bounded",
    "A_left_self_injective": "self-injectivity criterion: row/column-finite, acyclic, no infinite paths",
    "decomposition": "socle decomposition: one matrix block per sink, size = paths ending there",
}


class DecompositionDescriptor:
    """Blocks (sink label, n) of L = direct sum of n x n matrix algebras.

    Finite graphs give a finite list; omega unions give an infinite stream,
    iterate lazily or use :meth:`take`.
    """

    def __init__(self, boundedness: SinkProfile, source: GraphFamily):
        self.boundedness = boundedness
        self._source = source

    @property
    def is_finite(self) -> bool:
        return isinstance(self._source, Finite)

    def __iter__(self) -> Iterator[tuple[str, int]]:
        f = self._source
        if isinstance(f, Finite):
            yield from _sink_blocks(f.graph, "")
            return
        for i in itertools.count(1):
            yield from _sink_blocks(fam.component(f, i), f"c{i}.")

    def take(self, k: int) -> list[tuple[str, int]]:
        return list(itertools.islice(self, k))

    @property
    def entries(self) -> list[tuple[str, int]]:
        if not self.is_finite:
            raise ValueError("infinitely many blocks; use take(k)")
        return list(self)

    def to_json(self, preview: int = 8):
        if self.is_finite:
            return [[label, n] for label, n in self]
        return {
            "infinite": True,
            "first": [[label, n] for label, n in self.take(preview)],
            "boundedness": profile_to_json(self.boundedness),
        }

    def __repr__(self):
        shown = self.entries if self.is_finite else self.take(4) + ["..."]
        return f"DecompositionDescriptor({shown}, {self.boundedness})"


def _sink_blocks(g: Graph, prefix: str) -> Iterator[tuple[str, int]]:
    for v in g.vertices:
        if g.out_degree(v) == 0:
            yield prefix + v, len(gr.paths_ending_at(g, v))


def profile_to_json(p: SinkProfile):
    if isinstance(p, Bounded):
        return {"bounded": p.m}
    if isinstance(p, Unbounded):
        return "unbounded"
    return "no_sinks"


def _as_family(f: GraphFamily | Graph) -> GraphFamily:
    return Finite(f) if isinstance(f, Graph) else f


def matrix_decomposition(f: GraphFamily | Graph) -> DecompositionDescriptor:
    f = _as_family(f)
    if isinstance(f, fam.DecoratedRay) or not fam.is_acyclic_family(f):
        raise NotSemisimpleShape("needs an acyclic graph or omega union without infinite paths")
    return DecompositionDescriptor(fam.sink_path_count_profile(f), f)


@dataclass
class ClassificationReport:
    acyclic: bool
    condition_K: bool
    condition_L: bool
    exchange: bool
    cyclic_as_module: bool
    L_vn_regular: Verdict
    semisimple: Verdict
    A_vn_regular: Verdict
    A_strongly_pi_regular: Verdict
    A_left_self_injective: Verdict
    automorphism_invariant: Verdict
    continuous: Verdict
    strong_pi_bound: int | None = None
    sink_profile: SinkProfile | None = None
    decomposition: DecompositionDescriptor | None = None
    citations: dict[str, str] = field(default_factory=lambda: dict(CITATIONS))

    VERDICTS = (
        "L_vn_regular",
        "semisimple",
        "A_vn_regular",
        "A_strongly_pi_regular",
        "A_left_self_injective",
        "automorphism_invariant",
        "continuous",
    )

    def to_json(self) -> dict:
        out: dict = {
            "acyclic": self.acyclic,
            "condition_K": self.condition_K,
            "condition_L": self.condition_L,
            "exchange": self.exchange,
            "cyclic_as_module": self.cyclic_as_module,
        }
        for name in self.VERDICTS:
            out[name] = verdict_to_json(getattr(self, name))
        out["strong_pi_bound"] = self.strong_pi_bound
        out["sink_profile"] = None if self.sink_profile is None else profile_to_json(self.sink_profile)
        out["decomposition"] = None if self.decomposition is None else self.decomposition.to_json()
        out["citations"] = dict(self.citations)
        return out


def verdict_to_json(v: Verdict):
    if isinstance(v, Undecided):
        return {"undecided": v.reason}
    return "true" if v else "false"


def classify(f: GraphFamily | Graph) -> ClassificationReport:
    f = _as_family(f)
    acyclic = fam.is_acyclic_family(f)
    cond_k = fam.condition_K_family(f)
    right = fam.has_right_infinite_path(f)
    left = fam.has_left_infinite_path(f)
    row_finite = fam.is_row_finite(f)

    if not row_finite:
        regular: Verdict = Undecided("graph is not row-finite")
    else:
        regular = acyclic and fam.every_infinite_path_ends_in_sink(f)

    no_infinite_paths = acyclic and not right and not left
    profile = fam.sink_path_count_profile(f) if acyclic else None
    bound = None
    if not row_finite:
        spi: Verdict = Undecided("graph is not row-finite")
    elif not no_infinite_paths:
        spi = False
    elif isinstance(profile, Bounded):
        spi, bound = True, profile.m
    elif isinstance(profile, Unbounded):
        spi = False
    else:
        spi = Undecided("no sinks and no infinite paths")

    self_injective = row_finite and fam.is_column_finite(f) and no_infinite_paths
    decomposition = matrix_decomposition(f) if no_infinite_paths else None

    return ClassificationReport(
        acyclic=acyclic,
        condition_K=cond_k,
        condition_L=fam.condition_L_family(f),
        exchange=cond_k,
        cyclic_as_module=fam.has_finitely_many_vertices(f),
        L_vn_regular=acyclic,
        semisimple=regular,
        A_vn_regular=regular,
        A_strongly_pi_regular=spi,
        A_left_self_injective=self_injective,
        automorphism_invariant=regular,
        continuous=regular,
        strong_pi_bound=bound,
        sink_profile=profile,
        decomposition=decomposition,
    )


def _decided(*vs: Verdict) -> bool:
    return not any(isinstance(v, Undecided) for v in vs)


def implication_audit(r: ClassificationReport) -> list[str]:
    """Implications between verdicts that every correct report satisfies."""
    violations = []

    def implies(a: str, b: str):
        va, vb = getattr(r, a), getattr(r, b)
        if _decided(va, vb) and va and not vb:
            violations.append(f"{a} holds but {b} does not")

    def same(a: str, b: str):
        va, vb = getattr(r, a), getattr(r, b)
        if _decided(va, vb) and bool(va) != bool(vb):
            violations.append(f"{a} = {va} disagrees with {b} = {vb}")

    implies("A_vn_regular", "L_vn_regular")
    implies("A_strongly_pi_regular", "A_left_self_injective")
    implies("A_left_self_injective", "A_vn_regular")
    same("A_vn_regular", "semisimple")
    same("A_vn_regular", "automorphism_invariant")
    same("A_vn_regular", "continuous")
    same("exchange", "condition_K")
    if r.A_strongly_pi_regular is True and r.strong_pi_bound is None:
        violations.append("A_strongly_pi_regular holds without a bound m")
    return violations
