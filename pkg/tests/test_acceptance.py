"""Acceptance criteria, one group of test functions per criterion.

Functions are named ``test_criterion_<N>_<what>``.  The terminal summary
(see ``conftest.py``) prints one PASS/FAIL line per criterion: a criterion
passes when all of its functions pass.  Run just this file with::

    pytest tests/test_acceptance.py -v
"""

import contextlib
import io
import itertools
import time

import numpy as np
import pytest

from conftest import P
from semidim.campaign import OK, default_campaign, verify_campaign
from semidim.cli import main
from semidim.graph import (
    UNREACHABLE,
    TotalGraph,
    build_total_graph,
    diameter,
    is_connected,
    twin_partition,
    twin_pattern_mismatches,
)
from semidim.metric import is_resolving, metric_dimension_exact, metric_dimension_oracle
from semidim.formats import load_semiring
from semidim.product import product_zero_divisors
from semidim.semiring import catalog, verify_axioms
from semidim.theory import Case, classify_product, construct_witness, lower_bound, predict_dimension

CRITERIA = {
    1: "Boolean powers: exact dim of B^n is 1,3,4,5 for n=2..5 within 60 s",
    2: "Generic case: [L3,L3]->2, [BXMODX2]->1, [L3,T3]->2, each equal to the oracle",
    3: "HAUPT1: [B,T3]->3 and [B,B,T3] formula value equal the oracle",
    4: "HAUPT2: [L3,B]->2 equals the oracle; [L3,T3] classifies GENERIC",
    5: "Lower bound holds on every campaign product",
    6: "Witness constructions resolve and have the predicted size",
    7: "Oracle and pruned solver agree on 200 random graphs and campaign graphs",
    8: "Structure: diameter <= 2, universal zero, isolated units",
    9: "Twin conformance of witnesses; pattern/graph mismatches only flagged",
    10: "Enumeration sanity: contents, admissibility and determinism",
}

CAMPAIGN = default_campaign()


@contextlib.contextmanager
def budget(seconds):
    start = time.perf_counter()
    yield
    elapsed = time.perf_counter() - start
    assert elapsed <= seconds, f"took {elapsed:.2f} s, budget {seconds} s"


def oracle_checked(names, expected):
    p = P(*names)
    predicted = predict_dimension(p)
    oracle = metric_dimension_oracle(build_total_graph(p)).dimension
    assert predicted == expected, f"{names}: predicted {predicted}, expected {expected}"
    assert oracle == predicted, f"{names}: oracle {oracle} != predicted {predicted}"


# 1 -------------------------------------------------------------------------

def test_criterion_1_boolean_powers():
    sizes, dims = [], []
    with budget(60):
        for n in range(2, 6):
            g = build_total_graph(P(*["BOOL"] * n))
            sizes.append(len(g))
            dims.append(metric_dimension_exact(g).dimension)
    assert sizes == [3, 7, 15, 31]
    assert dims == [1, 3, 4, 5]


# 2 -------------------------------------------------------------------------

def test_criterion_2_chain_squared():
    with budget(5):
        assert classify_product(P("CHAIN_3", "CHAIN_3")).case is Case.GENERIC
        oracle_checked(("CHAIN_3", "CHAIN_3"), 2)


def test_criterion_2_bxmodx2():
    with budget(5):
        assert classify_product(P("BXMODX2")).case is Case.GENERIC
        oracle_checked(("BXMODX2",), 1)


def test_criterion_2_chain_t3():
    # Stated expectation: predicted 2 from |Z| = 9 - 2*2 = 5.  T3 has a single
    # unit, so |Z(L3 x T3)| = 9 - 2*1 = 7; the exact answer is checked too.
    with budget(5):
        oracle_checked(("CHAIN_3", "T3"), 2)


# 3 -------------------------------------------------------------------------

def test_criterion_3_haupt1():
    with budget(10):
        c = classify_product(P("BOOL", "T3"))
        assert c.case is Case.HAUPT1 and (c.m, c.n_z) == (1, 1)
        oracle_checked(("BOOL", "T3"), 3)

        p = P("BOOL", "BOOL", "T3")
        c = classify_product(p)
        assert c.case is Case.HAUPT1 and (c.m, c.n_z) == (2, 1)
        formula = c.zs - 2 ** (c.m + c.n_z) + c.m + 1
        g = build_total_graph(p)
        assert len(g) == 11
        assert c.predicted_dim == formula == metric_dimension_oracle(g).dimension


# 4 -------------------------------------------------------------------------

def test_criterion_4_chain_bool():
    with budget(5):
        c = classify_product(P("CHAIN_3", "BOOL"))
        assert c.case is Case.HAUPT2 and (c.m, c.n_z, c.zs) == (1, 0, 4)
        oracle_checked(("CHAIN_3", "BOOL"), 2)


def test_criterion_4_chain_t3_is_generic():
    with budget(5):
        c = classify_product(P("CHAIN_3", "T3"))
        assert c.case is Case.GENERIC, (
            f"classified {c.case.value} (|Z|={c.zs}, kinds="
            + ", ".join(f"{k.kind.value}(z={k.z},u={k.u})" for k in c.kinds) + ")"
        )


# 5 -------------------------------------------------------------------------

def test_criterion_5_lower_bound():
    assert len(CAMPAIGN) == 23
    violations = []
    for p in CAMPAIGN:
        _, zs = product_zero_divisors(p)
        assert zs <= 20
        exact = metric_dimension_exact(build_total_graph(p)).dimension
        if exact < lower_bound(p):
            violations.append(p.name)
    assert violations == []


# 6 -------------------------------------------------------------------------

def test_criterion_6_witness_constructions():
    failures = []
    for p in CAMPAIGN:
        c = classify_product(p)
        assert c.supported, p.name
        w = construct_witness(p, c)
        if not (is_resolving(build_total_graph(p), w.W) and len(w.W) == c.predicted_dim):
            failures.append(p.name)
    assert failures == []


# 7 -------------------------------------------------------------------------

def test_criterion_7_random_graphs():
    rng = np.random.default_rng(20240611)
    disagreements = []
    for k in range(200):
        n = int(rng.integers(1, 15))
        density = float(rng.choice([0.2, 0.35, 0.5, 0.65, 0.8]))
        edges = [e for e in itertools.combinations(range(n), 2) if rng.random() < density]
        g = TotalGraph.from_edges(n, edges)
        if metric_dimension_exact(g).dimension != metric_dimension_oracle(g).dimension:
            disagreements.append(k)
    assert disagreements == []


def test_criterion_7_campaign_graphs():
    checked, disagreements = 0, []
    for p in CAMPAIGN:
        g = build_total_graph(p)
        if len(g) > 24:
            continue
        checked += 1
        if metric_dimension_exact(g).dimension != metric_dimension_oracle(g).dimension:
            disagreements.append(p.name)
    assert checked == len(CAMPAIGN)
    assert disagreements == []


# 8 -------------------------------------------------------------------------

def test_criterion_8_structure():
    violations = []
    for p in CAMPAIGN:
        g = build_total_graph(p)
        zero = g.position(tuple(0 for _ in p.factors))
        if not (is_connected(g) and diameter(g) != UNREACHABLE and diameter(g) <= 2):
            violations.append((p.name, "diameter"))
        if g.degree(zero) != len(g) - 1:
            violations.append((p.name, "zero not universal"))
        full = build_total_graph(p, restricted=False)
        zset = set(product_zero_divisors(p)[0])
        for i, v in enumerate(full.vertices):
            if v not in zset and full.degree(i) != 0:
                violations.append((p.name, f"unit {v} not isolated"))
    assert violations == []


# 9 -------------------------------------------------------------------------

def test_criterion_9_witness_twin_conformance():
    bad = []
    for p in CAMPAIGN:
        g = build_total_graph(p)
        w = {g.position(v) for v in metric_dimension_exact(g).witness}
        if any(len(set(cl) - w) > 1 for cl in twin_partition(g).blocks()):
            bad.append(p.name)
    assert bad == []


def test_criterion_9_pattern_partition_flagged():
    mismatched = [p.name for p in CAMPAIGN if twin_pattern_mismatches(p, build_total_graph(p))]
    assert all(len(p.split(" x ")) == 2 for p in mismatched), mismatched
    assert mismatched == ["BOOL x BOOL"]
    report = verify_campaign(CAMPAIGN)
    assert report.exit_code == 0
    for row in report.rows:
        assert row.status == OK, (row.product, row.status, row.notes)
        flagged = any(n.startswith("FLAG twin classes") for n in row.notes)
        assert flagged == (row.product in mismatched)
        assert row.twin_ok == (row.product not in mismatched)
    text = report.to_text()
    assert "FLAG twin classes" in text and "(0,1), (1,0)" in text


# 10 ------------------------------------------------------------------------

def _enumerate(tmp_path, order):
    out = tmp_path / f"o{order}"
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = main(["enumerate", str(order), "--all-filters", "--out", str(out)])
    assert code == 0
    files = sorted(out.glob("*.json"))
    return buf.getvalue().strip(), [f.read_text() for f in files], [load_semiring(f) for f in files]


def test_criterion_10_enumeration(tmp_path):
    line2, _, t2 = _enumerate(tmp_path / "a", 2)
    line3, raw3, t3 = _enumerate(tmp_path / "a", 3)
    assert catalog("BOOL") in t2
    assert catalog("T3") in t3 and catalog("CHAIN_3") in t3
    assert all(verify_axioms(t).is_semiring for t in t2 + t3)
    again2, _, _ = _enumerate(tmp_path / "b", 2)
    again3, raw3b, _ = _enumerate(tmp_path / "b", 3)
    assert (line2, line3) == (again2, again3)
    assert line3 == f"order=3 count={len(t3)}"
    assert raw3 == raw3b


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q"]))
