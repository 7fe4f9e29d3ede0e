"""Acceptance criteria, one test each, with wall-clock budgets.

Each test records a single ``ACCEPTANCE <n> PASS|FAIL`` line; the lines are
printed in the terminal summary of any pytest run that includes this module
(also ``python3 tests/test_acceptance.py``).
"""

from __future__ import annotations

import sys
import time
from contextlib import contextmanager
from fractions import Fraction

import pytest

from gfr.distinguish import Basis, Kind, audit, classify_catalog, distinguish
from gfr.factors import FGF, R, Free, Tensor, amplify_fgf, graph_to_expression, simplify
from gfr.families import complete, complete_bipartite, cycle, graph_catalog, line, random_tree, star
from gfr.internal import internal_vertices, is_h_rigid
from gfr.sampling import random_h_rigid_pair, sample_rng
from gfr.verify import check_oracle, run_suite


RESULTS: list[str] = []


@contextmanager
def criterion(number: int, title: str, budget: float):
    start = time.perf_counter()
    ok, detail = False, ""
    try:
        yield
        elapsed = time.perf_counter() - start
        ok = elapsed < budget
        detail = f"{elapsed:.2f}s (budget {budget:g}s)"
        assert ok, f"took {elapsed:.2f}s, budget {budget:g}s"
    except AssertionError as exc:
        if not detail:
            detail = f"{exc}".splitlines()[0] if str(exc) else "assertion failed"
        raise
    finally:
        RESULTS.append(f"ACCEPTANCE {number} {'PASS' if ok else 'FAIL'}: {title} [{detail}]")


def test_criterion_1_internal_vertices():
    with criterion(1, "internal vertices of l_5 and Z_5", 1):
        assert internal_vertices(line(5)) == (2, 3, 4)
        assert internal_vertices(cycle(5)) == (1, 2, 3, 4, 5)


def test_criterion_2_h_rigidity_battery():
    with criterion(2, "H-rigidity battery with the Z_4 exception", 30):
        for n in range(2, 11):
            assert is_h_rigid(line(n)).h_rigid, f"line({n})"
        for n in (3, 5, 6, 7, 8, 9, 10):
            assert is_h_rigid(cycle(n)).h_rigid, f"cycle({n})"
        for i in range(500):
            rng = sample_rng(0, "acceptance-trees", i)
            n = rng.randint(1, 14)
            assert is_h_rigid(random_tree(n, rng.randrange(2**32))).h_rigid, f"tree #{i}"
        z4 = is_h_rigid(cycle(4))
        assert not z4.h_rigid
        assert z4.internal_set_witness == frozenset({2, 4})
        assert len(z4.notes) == 1 and "Z_4" in z4.notes[0] and "H-rigid" in z4.notes[0]


def test_criterion_3_oracle_equivalence():
    with criterion(3, "fast paths agree with subset enumeration on all graphs with <= 7 vertices", 300):
        catalog = graph_catalog(7)
        assert len(catalog) == 1 + 1 + 2 + 4 + 11 + 34 + 156 + 1044
        disagreements = [g for g in catalog if check_oracle(g) is not None]
        assert not disagreements, f"{len(disagreements)} disagreements"


def test_criterion_4_external_adjacency_and_radius_bound():
    with criterion(4, "external adjacency and radius bound on 300 samples each", 60):
        for suite in ("prop42", "lemma43"):
            res = run_suite(suite, samples=300, seed=0)
            assert res.checked == 300 and res.passed, [f.render() for f in res.failures[:3]]


def test_criterion_5_factor_identities():
    with criterion(5, "factor calculus identities", 1):
        for n in range(2, 7):
            assert simplify(Free((R,) * n)).expr == FGF(n)
        assert graph_to_expression(line(3)) == Tensor((R, FGF(2)))
        a, b = amplify_fgf(3, 2), amplify_fgf(3, Fraction(1, 2))
        assert (a, b) == (2, 5)
        assert isinstance(a, Fraction) and isinstance(b, Fraction)


def _criterion_6_verdicts():
    out = []
    k33, k25 = complete_bipartite(3, 3), complete_bipartite(2, 5)
    out.append((distinguish(k33, k25), k33, k25, "bipartite"))
    for n in range(2, 9):
        for m in range(n + 1, 9):
            out.append((distinguish(line(n), line(m)), line(n), line(m), "line"))
    for n in range(5, 10):
        for m in range(n + 1, 10):
            out.append((distinguish(cycle(n), cycle(m)), cycle(n), cycle(m), "cycle"))
    for i in range(1, 8):
        for j in range(1, 8):
            out.append((distinguish(complete(i), complete(j)), complete(i), complete(j), "complete"))
    return out


def test_criterion_6_distinguisher():
    with criterion(6, "distinguisher on bipartite, line, cycle and complete pairs", 10):
        for v, g1, g2, tag in _criterion_6_verdicts():
            if tag == "bipartite":
                assert v.kind is Kind.ISOMORPHIC_FACTORS and v.basis is Basis.FACTOR_CALCULUS
                assert v.certificate is not None and v.certificate.validates()
            elif tag == "line":
                assert (v.kind, v.basis) == (Kind.NOT_ISOMORPHIC, Basis.THEOREM_4_7), (g1, g2)
            elif tag == "cycle":
                assert v.kind is Kind.NOT_ISOMORPHIC, (g1, g2)
            else:
                assert v.kind is Kind.ISOMORPHIC_FACTORS, (g1, g2)


def _criterion_7_pairs():
    return [random_h_rigid_pair(sample_rng(0, "cor411", i)) for i in range(200)]


def test_criterion_7_radius_consistency():
    with criterion(7, "radius gap <= 1 for 200 H-rigid pairs with isomorphic internal graphs", 120):
        res = run_suite("cor411", samples=200, seed=0)
        assert res.checked == 200 and res.passed, [f.render() for f in res.failures[:3]]


def test_criterion_8_soundness_audits():
    with criterion(8, "soundness audits and the K_{1,3} / K_{1,4} UNKNOWN verdict", 180):
        verdicts = [(v, g1, g2) for v, g1, g2, _ in _criterion_6_verdicts()]
        verdicts += [(distinguish(g1, g2), g1, g2) for g1, g2 in _criterion_7_pairs()]
        for v, g1, g2 in verdicts:
            if v.kind is Kind.NOT_ISOMORPHIC:
                assert v.reports is not None and all(r.h_rigid for r in v.reports)
            if v.kind is Kind.ISOMORPHIC_FACTORS and v.basis is Basis.FACTOR_CALCULUS:
                assert v.certificate.validates()
            assert audit(v, g1, g2) == []
        for strict in (False, True):
            v = distinguish(star(3), star(4), strict=strict)
            assert (v.kind, v.basis) == (Kind.UNKNOWN, Basis.NONE)
        rep = classify_catalog([star(3), star(4)])
        assert rep.classes == ((0,), (1,)) and rep.separations() == []


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
