"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Run with ``pytest tests/test_acceptance.py -s`` to see the per-criterion
lines, or via ``hopftrees verify all``.
"""

import time

from hopftrees import combinat as C, hopf as H, verify as V


def _gate(name: str, report, budget: float, elapsed: float) -> None:
    status = "PASS" if report.passed else "FAIL"
    print(f"[acceptance] {name}: {status} ({elapsed:.1f}s)")
    for entry in report.entries:
        if entry.status != "pass":
            print(f"    failing check: {entry.check} degree {entry.degree}: {entry.witness}")
    assert report.passed
    assert elapsed < budget, f"{name} exceeded its {budget}s budget"


def test_criterion_1_counts():
    t0 = time.time()
    report = V.verify_counts(5)
    assert [len(C.enumerate_objects("ptree", n)) for n in range(6)] == [1, 1, 3, 11, 45, 197]
    assert len(C.enumerate_objects("pf", 3)) == 16
    _gate("1 counts", report, 5.0, time.time() - t0)


def test_criterion_2_hopf_axioms():
    t0 = time.time()
    report = V.Report()
    for alg in ("YSym", "TSymA", "TSymB"):
        report.extend(V.verify_hopf(alg, 5))
    for alg in ("SSym", "STSym", "PSym", "NCQSym_Q"):
        report.extend(V.verify_hopf(alg, 4))
    _gate("2 hopf axioms", report, 180.0, time.time() - t0)


def test_criterion_3_tsym_isomorphism():
    t0 = time.time()
    report = V.verify_iso(5)
    _gate("3 tsym isomorphism", report, 60.0, time.time() - t0)


def test_criterion_4_interval_dual_products():
    t0 = time.time()
    report = V.verify_intervals(3)
    _gate("4 interval dual products", report, 120.0, time.time() - t0)


def test_criterion_5_monomial_coproduct():
    t0 = time.time()
    report = V.Report()
    for entry in V.verify_monomials(
        4,
        product_degree={a: 0 for a in V.ORDERED_ALGEBRAS},
        antipode_degree={a: 0 for a in V.ORDERED_ALGEBRAS},
    ).entries:
        if entry.check.startswith("monomials/coproduct"):
            report.entries.append(entry)
    _gate("5 monomial coproduct", report, 120.0, time.time() - t0)


def test_criterion_6_monomial_product():
    t0 = time.time()
    report = V.Report()
    full = V.verify_monomials(
        0,
        product_degree={"SSym": 5, "YSym": 5, "TSymB": 4, "STSym": 4, "PSym": 4},
        antipode_degree={a: 0 for a in V.ORDERED_ALGEBRAS},
    )
    for entry in full.entries:
        if entry.check.startswith(("monomials/product", "monomials/golden-alpha")):
            report.entries.append(entry)
    assert H.monomial_product_coeff("SSym", "21", "12", "3421") == 1
    _gate("6 monomial product", report, 300.0, time.time() - t0)


def test_criterion_7_antipode():
    t0 = time.time()
    report = V.Report()
    full = V.verify_monomials(
        0,
        product_degree={a: 0 for a in V.ORDERED_ALGEBRAS},
        antipode_degree={"SSym": 4, "PSym": 4, "YSym": 3, "TSymB": 3, "STSym": 3},
    )
    for entry in full.entries:
        if entry.check.startswith(("monomials/antipode", "monomials/golden-beta")):
            report.entries.append(entry)
    assert H.monomial_antipode_coeff("SSym", "4231", "2134") == 2
    _gate("7 antipode", report, 300.0, time.time() - t0)


def test_criterion_8_galois_and_quotient_monomials():
    t0 = time.time()
    report = V.verify_galois(4)
    for entry in V.verify_morphisms(4).entries:
        if "monomial" in entry.check:
            report.entries.append(entry)
    _gate("8 galois connections", report, 300.0, time.time() - t0)


def test_criterion_9_planar_weak_structure():
    t0 = time.time()
    report = V.verify_planar_weak(4)
    _gate("9 planar weak structure", report, 300.0, time.time() - t0)


def test_criterion_10_bidendriform():
    t0 = time.time()
    report = V.verify_bidendriform(4)
    _gate("10 bidendriform relations", report, 300.0, time.time() - t0)


def test_criterion_11_ncqsym_embedding():
    t0 = time.time()
    report = V.verify_embedding(4, noncrossing_degree=5)
    _gate("11 ncqsym embedding", report, 300.0, time.time() - t0)


def test_criterion_12_axiom_suites():
    t0 = time.time()
    report = V.Report()
    for alg in ("SSym", "STSym", "PSym", "YSym", "TSymB"):
        report.extend(V.verify_axioms(alg, 4))
    _gate("12 section-3 axioms", report, 600.0, time.time() - t0)
