"""Acceptance criteria 1-8.

Each test prints one ``PASS``/``FAIL`` line with its measured runtime and
then asserts.  Arithmetic is exact everywhere, so every comparison is an
exact equality; the only tolerances are the wall-clock limits below.

Run standalone with ``python tests/test_acceptance.py`` for just the lines.
"""
from __future__ import annotations

import random
import sys
import time

import pytest

from leavitt import catalog, verify
from leavitt import family as fam
from leavitt.algebra import LeavittPathAlgebra
from leavitt.errors import InfiniteDimensional
from leavitt.family import LinearLine, OmegaUnion, Unbounded
from leavitt.fields import GF, QQ
from leavitt.oracle import model_for, strong_pi_witness
from leavitt.structure import classify, implication_audit

from conftest import corpus_documents

# wall-clock limits in seconds
LIMITS = {1: 1.0, 2: 1.0, 3: 60.0, 4: 30.0, 5: 5.0, 6: 30.0, 7: 5.0, 8: 30.0}
SEED = 20240601


def report(n: int, title: str, ok: bool, elapsed: float, detail: str = "") -> bool:
    within = elapsed < LIMITS[n]
    status = "PASS" if ok and within else "FAIL"
    line = f"{status} criterion {n}: {title} ({elapsed:.2f}s, limit {LIMITS[n]:g}s)"
    if detail:
        line += f" [{detail}]"
    print(line, flush=True)
    return ok and within


def _random_acyclic(rng, max_vertices):
    while True:
        g = verify.random_graph(rng, max_vertices, 2 * max_vertices, acyclic=True, min_vertices=2)
        if g.edges:
            return g


# -- the criteria -------------------------------------------------------------------

def criterion_1():
    t = time.perf_counter()
    dims = {n: LeavittPathAlgebra(catalog.line_graph(n)).dimension() for n in range(2, 7)}
    ok = all(d == n * n for n, d in dims.items())
    infinite = 0
    for g in (catalog.single_loop(), catalog.rose(2), catalog.rose(3), catalog.rose(5)):
        try:
            LeavittPathAlgebra(g).basis()
        except InfiniteDimensional:
            infinite += 1
    ok = ok and infinite == 4
    return report(1, "line graph bases have n^2 elements; loop and roses infinite",
                  ok, time.perf_counter() - t, f"dims {list(dims.values())}, infinite {infinite}/4")


def criterion_2():
    t = time.perf_counter()
    graphs = []
    for doc in corpus_documents():
        f = doc.family
        graphs.append(f.graph if doc.kind == "finite" else fam.truncate(f, 3))
    failures = []
    checked = 0
    for g in graphs:
        for field in (QQ, GF(5)):
            res = verify.ck_relations(LeavittPathAlgebra(g, field))
            checked += res.checked
            failures += res.failures
    return report(2, "CK relations on the corpus over QQ and GF(5)", not failures,
                  time.perf_counter() - t, f"{len(graphs)} graphs, {checked} identities, {len(failures)} failures")


def criterion_3():
    rng = random.Random(SEED + 3)
    t = time.perf_counter()
    pairs = failures = equal = 0
    for _ in range(20):
        A = LeavittPathAlgebra(_random_acyclic(rng, 7))
        res = verify.faithfulness(A, rng, 500)
        pairs += res.checked
        failures += len(res.failures)
    ok = failures == 0 and pairs >= 20 * 500
    return report(3, "normal-form equality matches matrix equality", ok,
                  time.perf_counter() - t, f"{pairs} pairs on 20 graphs, {failures} disagreements")


def criterion_4():
    rng = random.Random(SEED + 4)
    t = time.perf_counter()
    checked = failures = 0
    for _ in range(10):
        A = LeavittPathAlgebra(_random_acyclic(rng, 6))
        res = verify.regularity(A, rng, 100)
        checked += res.checked
        failures += len(res.failures)
    ok = failures == 0 and checked >= 1000
    return report(4, "von Neumann witnesses satisfy a b a = a", ok,
                  time.perf_counter() - t, f"{checked} elements on 10 graphs, {failures} failures")


def criterion_5():
    t = time.perf_counter()
    a_verdicts = ("A_vn_regular", "A_strongly_pi_regular", "A_left_self_injective",
                  "automorphism_invariant", "continuous", "semisimple")
    main = a_verdicts + ("L_vn_regular",)
    problems = []

    loop = classify(catalog.single_loop())
    if any(getattr(loop, k) is not False for k in a_verdicts) or loop.condition_K:
        problems.append("loop")
    toe = classify(catalog.toeplitz())
    if not (toe.condition_L is True and toe.condition_K is False and toe.exchange is False):
        problems.append("toeplitz")
    for n in range(2, 7):
        r = classify(catalog.line_graph(n))
        if any(getattr(r, k) is not True for k in main) or r.strong_pi_bound != n:
            problems.append(f"line{n}")
    st = classify(OmegaUnion(LinearLine(1, 0)))
    if not (st.A_left_self_injective is True and st.A_vn_regular is True
            and st.A_strongly_pi_regular is False and st.sink_profile == Unbounded()):
        problems.append("staircase")
    return report(5, "classification fixed points", not problems,
                  time.perf_counter() - t, "mismatch: " + ", ".join(problems) if problems else "exact match")


def criterion_6():
    rng = random.Random(SEED + 6)
    t = time.perf_counter()
    violations = []
    for _ in range(300):
        g = verify.random_graph(rng, 6, 10)
        violations += implication_audit(classify(g))
    families = [d.family for d in corpus_documents()]
    for f in families:
        violations += implication_audit(classify(f))
    return report(6, "implication audit on random graphs and the corpus", not violations,
                  time.perf_counter() - t, f"300 graphs + {len(families)} corpus entries, {len(violations)} violations")


def criterion_7():
    t = time.perf_counter()
    f = OmegaUnion(LinearLine(1, 0))
    seq = strong_pi_witness(f, 8)
    truncated = sorted(model_for(fam.truncate(f, 8), QQ).block_sizes().values())
    uniform_m_fails = all(seq.exponent_failure(m) is not None for m in range(1, 8))
    ok = (seq.k_profile == seq.sizes and seq.strictly_increasing
          and list(seq.sizes) == truncated and uniform_m_fails)
    return report(7, "staircase k-profile equals block sizes", ok,
                  time.perf_counter() - t, f"sizes {list(seq.sizes)}, k {list(seq.k_profile)}")


def criterion_8():
    rng = random.Random(SEED + 8)
    t = time.perf_counter()
    samples = failures = 0
    while samples < 1000:
        A = LeavittPathAlgebra(verify.random_graph(rng, 5, 8))
        res = verify.confluence(A, rng, 50)
        samples += res.checked
        failures += len(res.failures)
    graphs = choices = bad = 0
    for _ in range(60):
        g = verify.random_graph(rng, 4, 7, acyclic=True)
        res = verify.basis_invariance(g)
        graphs += 1
        choices += res.checked
        bad += len(res.failures)
    ok = failures == 0 and bad == 0
    return report(8, "confluence under random rule orders; basis size independent of special edges",
                  ok, time.perf_counter() - t,
                  f"{samples} elements, {failures} disagreements; {graphs} graphs / {choices} choices, {bad} mismatches")


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4,
            criterion_5, criterion_6, criterion_7, criterion_8]


@pytest.mark.parametrize("criterion", CRITERIA, ids=[f"criterion_{i}" for i in range(1, 9)])
def test_criterion(criterion, capsys):
    with capsys.disabled():
        print()
        ok = criterion()
    assert ok


if __name__ == "__main__":
    results = [c() for c in CRITERIA]
    print(f"{sum(results)}/{len(results)} criteria passed")
    sys.exit(0 if all(results) else 1)
