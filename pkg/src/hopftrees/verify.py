"""Verification suites: Hopf axioms, monomial-basis axioms, interval dual
products, bidendriform relations, morphisms, Galois connections, the TSym
isomorphism and enumeration counts.

Each suite returns a :class:`Report` whose entries carry a check name, the
degree scope, a status and (on failure) a witness; suites never raise on a
mathematical failure.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from . import hopf, ops, posets
from .combinat import (
    avoids,
    delrpt,
    enumerate_objects,
    inv_packed,
    is_noncrossing,
    nested_trace,
    render,
    setpar,
    word_inverse,
)
from .hopf import (
    ALGEBRA_KIND,
    ALGEBRA_ORDER,
    Element,
    TensorElement,
    basis_keys,
    change_basis,
    coproduct,
    coproduct_plus,
    counit,
    degree_of_key,
    dendriform,
    dual_coproduct,
    dual_product,
    monomial_antipode_row,
    monomial_coproduct,
    morphism,
    morphism_key,
    parse_key,
    product,
    antipode,
    unit,
    unit_key,
)


@dataclass
class CheckResult:
    check: str
    degree: int
    status: str  # "pass" | "fail"
    witness: str | None = None

    def to_json(self) -> dict:
        out = {"check": self.check, "degree": self.degree, "status": self.status}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


@dataclass
class Report:
    entries: list[CheckResult] = field(default_factory=list)

    def record(self, check: str, degree: int, ok: bool, witness: str | None = None) -> None:
        self.entries.append(CheckResult(check, degree, "pass" if ok else "fail", None if ok else witness))

    def extend(self, other: "Report") -> None:
        self.entries.extend(other.entries)

    @property
    def passed(self) -> bool:
        return all(e.status == "pass" for e in self.entries)

    def to_json(self) -> list[dict]:
        return [e.to_json() for e in self.entries]


def _felem(alg: str, key: str) -> Element:
    basis = "Q" if alg == "NCQSym_Q" else "F"
    return Element(alg, basis, {key: 1})


def _tensor_eq(a: TensorElement, b: TensorElement) -> bool:
    return a.terms == b.terms


def _tensor_mult(alg: str, a: TensorElement, b: TensorElement) -> TensorElement:
    out: dict[tuple[str, ...], int] = {}
    for (a1, a2), ca in a.terms.items():
        for (b1, b2), cb in b.terms.items():
            left = product(alg, _felem(alg, a1), _felem(alg, b1))
            right = product(alg, _felem(alg, a2), _felem(alg, b2))
            for k1, c1 in left.terms.items():
                for k2, c2 in right.terms.items():
                    key = (k1, k2)
                    out[key] = out.get(key, 0) + ca * cb * c1 * c2
    return TensorElement(alg, a.basis, out)


# ---------------------------------------------------------------------------
# counts


def _catalan(n: int) -> int:
    c = [1]
    for m in range(1, n + 1):
        c.append(sum(c[i] * c[m - 1 - i] for i in range(m)))
    return c[n]


def _schroeder(n: int) -> int:
    # little Schroeder numbers: (n+1) s_n = (6n-3) s_{n-1} - (n-2) s_{n-2}
    s = [1, 1]
    for m in range(2, n + 1):
        s.append(((6 * m - 3) * s[m - 1] - (m - 2) * s[m - 2]) // (m + 1))
    return s[n]


def _ordered_bell(n: int) -> int:
    b = [1]
    for m in range(1, n + 1):
        b.append(sum(_binom(m, k) * b[m - k] for k in range(1, m + 1)))
    return b[n]


def _binom(n: int, k: int) -> int:
    out = 1
    for i in range(k):
        out = out * (n - i) // (i + 1)
    return out


def _factorial(n: int) -> int:
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


COUNT_ORACLES = {
    "pbt": _catalan,
    "ptree": _schroeder,
    "perm": _factorial,
    "pw": _ordered_bell,
    "gsp": lambda n: 1 if n == 0 else _factorial(n + 1) // 2,
    "pf": lambda n: (n + 1) ** max(0, n - 1),
}


def verify_counts(max_degree: int) -> Report:
    report = Report()
    for kind, oracle in COUNT_ORACLES.items():
        cap = max_degree if kind != "pf" else min(max_degree, 5)
        for n in range(cap + 1):
            got = len(enumerate_objects(kind, n))
            want = oracle(n)
            report.record(f"counts/{kind}", n, got == want, f"got {got}, oracle {want}")
    return report


# ---------------------------------------------------------------------------
# Hopf axioms


def _positive_keys(alg: str, n: int) -> list[str]:
    return basis_keys(alg, n)


def verify_hopf(alg: str, max_degree: int) -> Report:
    report = Report()
    basis = "Q" if alg == "NCQSym_Q" else "F"
    kind = ALGEBRA_KIND[alg]

    # unit and counit
    one = unit(alg)
    for n in range(0, max_degree + 1):
        ok = True
        witness = None
        for k in basis_keys(alg, n):
            x = _felem(alg, k)
            if not (product(alg, one, x).terms == x.terms == product(alg, x, one).terms):
                ok, witness = False, f"unit {k}"
                break
            d = coproduct(alg, x)
            left = Element(alg, basis, {})
            right = Element(alg, basis, {})
            for (a, b), c in d.terms.items():
                if a == unit_key(alg):
                    right = right + Element(alg, basis, {b: c})
                if b == unit_key(alg):
                    left = left + Element(alg, basis, {a: c})
            if not (left.terms == x.terms == right.terms):
                ok, witness = False, f"counit {k}"
                break
        report.record(f"hopf/{alg}/unit-counit", n, ok, witness)

    # associativity over positive-degree triples
    for total in range(3, max_degree + 1):
        ok = True
        witness = None
        for a_deg in range(1, total - 1):
            for b_deg in range(1, total - a_deg):
                c_deg = total - a_deg - b_deg
                for ka, kb, kc in itertools.product(
                    basis_keys(alg, a_deg), basis_keys(alg, b_deg), basis_keys(alg, c_deg)
                ):
                    x, y, z = _felem(alg, ka), _felem(alg, kb), _felem(alg, kc)
                    lhs = product(alg, product(alg, x, y), z)
                    rhs = product(alg, x, product(alg, y, z))
                    if lhs.terms != rhs.terms:
                        ok, witness = False, f"{ka},{kb},{kc}"
                        break
        report.record(f"hopf/{alg}/assoc", total, ok, witness)

    # coassociativity
    for n in range(2, max_degree + 1):
        ok = True
        witness = None
        for k in basis_keys(alg, n):
            left: dict[tuple[str, str, str], int] = {}
            right: dict[tuple[str, str, str], int] = {}
            for (a, b), c in hopf._coproduct_keys(alg, k):
                for (a1, a2), c2 in hopf._coproduct_keys(alg, a):
                    left[(a1, a2, b)] = left.get((a1, a2, b), 0) + c * c2
                for (b1, b2), c2 in hopf._coproduct_keys(alg, b):
                    right[(a, b1, b2)] = right.get((a, b1, b2), 0) + c * c2
            if left != right:
                ok, witness = False, k
                break
        report.record(f"hopf/{alg}/coassoc", n, ok, witness)

    # compatibility Delta(xy) = Delta(x) Delta(y)
    for total in range(2, max_degree + 1):
        ok = True
        witness = None
        for a_deg in range(1, total):
            b_deg = total - a_deg
            for ka, kb in itertools.product(basis_keys(alg, a_deg), basis_keys(alg, b_deg)):
                x, y = _felem(alg, ka), _felem(alg, kb)
                lhs = coproduct(alg, product(alg, x, y))
                rhs = _tensor_mult(alg, coproduct(alg, x), coproduct(alg, y))
                if not _tensor_eq(lhs, rhs):
                    ok, witness = False, f"{ka},{kb}"
                    break
            if not ok:
                break
        report.record(f"hopf/{alg}/compat", total, ok, witness)

    # antipode identity
    for n in range(0, max_degree + 1):
        ok = True
        witness = None
        for k in basis_keys(alg, n):
            x = _felem(alg, k)
            acc = Element(alg, basis, {})
            for (a, b), c in coproduct(alg, x).terms.items():
                acc = acc + product(alg, antipode(alg, _felem(alg, a)), _felem(alg, b)).scale(c)
            want = unit(alg).scale(counit(x))
            if acc.terms != want.terms:
                ok, witness = False, k
                break
        report.record(f"hopf/{alg}/antipode-identity", n, ok, witness)

    # grading (and the internal bigrading where it applies)
    bigraded = alg in ("TSymB", "STSym")
    for total in range(2, max_degree + 1):
        ok = True
        witness = None
        for a_deg in range(1, total):
            for ka, kb in itertools.product(basis_keys(alg, a_deg), basis_keys(alg, total - a_deg)):
                p = product(alg, _felem(alg, ka), _felem(alg, kb))
                for k in p.terms:
                    if degree_of_key(alg, k) != total:
                        ok, witness = False, k
                if bigraded:
                    want = ops.internal_degree(kind, parse_key(alg, ka)) + ops.internal_degree(
                        kind, parse_key(alg, kb)
                    )
                    for k in p.terms:
                        if ops.internal_degree(kind, parse_key(alg, k)) != want:
                            ok, witness = False, f"ideg {k}"
        if bigraded:
            for k in basis_keys(alg, total):
                want = ops.internal_degree(kind, parse_key(alg, k))
                for (a, b), _ in hopf._coproduct_keys(alg, k):
                    got = ops.internal_degree(kind, parse_key(alg, a)) + ops.internal_degree(
                        kind, parse_key(alg, b)
                    )
                    if got != want:
                        ok, witness = False, f"ideg split {k}"
        report.record(f"hopf/{alg}/graded", total, ok, witness)
    return report


# ---------------------------------------------------------------------------
# TSym isomorphism


def verify_iso(max_degree: int) -> Report:
    report = Report()
    # coproduct side: Delta^B_i(H_t) = H_{it} x H_{ti} for every i
    for n in range(1, max_degree + 1):
        ok = True
        witness = None
        for t in enumerate_objects("ptree", n):
            tk = render("ptree", t)
            hf = change_basis("TSymB", "H", "F", Element("TSymB", "H", {tk: 1}))
            got = coproduct("TSymB", hf)
            # convert both slots back to H
            got_h: dict[tuple[str, str], int] = {}
            for (a, b), c in got.terms.items():
                ha = change_basis("TSymB", "F", "H", Element("TSymB", "F", {a: 1}))
                hb = change_basis("TSymB", "F", "H", Element("TSymB", "F", {b: 1}))
                for k1, c1 in ha.terms.items():
                    for k2, c2 in hb.terms.items():
                        got_h[(k1, k2)] = got_h.get((k1, k2), 0) + c * c1 * c2
            want: dict[tuple[str, str], int] = {}
            for i in range(n + 1):
                a, b = ops.split_tree(t, i)
                key = (render("ptree", a), render("ptree", b))
                want[key] = want.get(key, 0) + 1
            got_h = {k: c for k, c in got_h.items() if c}
            if got_h != want:
                ok, witness = False, tk
                break
        report.record("iso/coproduct", n, ok, witness)
    # product side: m^B(H_s x H_t) = sum over all splittings of t
    for total in range(2, max_degree + 1):
        ok = True
        witness = None
        for a_deg in range(1, total):
            for s in enumerate_objects("ptree", a_deg):
                for t in enumerate_objects("ptree", total - a_deg):
                    hs = change_basis("TSymB", "H", "F", Element("TSymB", "H", {render("ptree", s): 1}))
                    ht = change_basis("TSymB", "H", "F", Element("TSymB", "H", {render("ptree", t): 1}))
                    got = change_basis("TSymB", "F", "H", product("TSymB", hs, ht))
                    want: dict[str, int] = {}
                    for z in ops.enumerate_shuffles("ptree", [s, t], allowable=False):
                        key = render("ptree", ops.apply_shuffle("ptree", z, [s, t], allowable=False))
                        want[key] = want.get(key, 0) + 1
                    if got.terms != want:
                        ok, witness = False, f"{render('ptree', s)},{render('ptree', t)}"
        report.record("iso/product", total, ok, witness)
    return report


tsym_iso_check = verify_iso


# ---------------------------------------------------------------------------
# interval dual products


def verify_intervals(max_degree: int) -> Report:
    report = Report()
    for alg in ("YSym", "SSym", "TSymB", "STSym", "PSym"):
        for a_deg in range(0, max_degree + 1):
            for b_deg in range(0, max_degree + 1):
                ok = True
                witness = None
                for ka, kb in itertools.product(basis_keys(alg, a_deg), basis_keys(alg, b_deg)):
                    try:
                        dual_product(
                            alg, Element(alg, "Fdual", {ka: 1}), Element(alg, "Fdual", {kb: 1})
                        )
                    except AssertionError as e:
                        ok, witness = False, str(e)
                        break
                if not ok:
                    report.record(f"intervals/{alg}", a_deg + b_deg, False, witness)
                    return report
        report.record(f"intervals/{alg}", 2 * max_degree, True)
    golden = dual_product(
        "SSym", Element("SSym", "Fdual", {"21": 1}), Element("SSym", "Fdual", {"12": 1})
    )
    want = sorted(render("perm", w) for w in posets.interval("weak", (2, 1, 3, 4), (4, 3, 1, 2)))
    report.record("intervals/golden-2134-4312", 4, sorted(golden.terms) == want, str(sorted(golden.terms)))
    return report


# ---------------------------------------------------------------------------
# monomial formulas


ORDERED_ALGEBRAS = ("YSym", "SSym", "TSymB", "STSym", "PSym")


def verify_monomials(max_degree: int, product_degree: dict | None = None, antipode_degree: dict | None = None) -> Report:
    report = Report()
    product_degree = product_degree or {}
    antipode_degree = antipode_degree or {}
    for alg in ORDERED_ALGEBRAS:
        # coproduct formula vs conjugated coproduct
        for n in range(1, max_degree + 1):
            ok = True
            witness = None
            for k in basis_keys(alg, n):
                direct = monomial_coproduct(alg, k)
                m = Element(alg, "M", {k: 1})
                conj = coproduct_plus(alg, change_basis(alg, "M", "F", m))
                conv: dict[tuple[str, str], int] = {}
                for (a, b), c in conj.terms.items():
                    ma = change_basis(alg, "F", "M", Element(alg, "F", {a: 1}))
                    mb = change_basis(alg, "F", "M", Element(alg, "F", {b: 1}))
                    for k1, c1 in ma.terms.items():
                        for k2, c2 in mb.terms.items():
                            key = (k1, k2)
                            conv[key] = conv.get(key, 0) + c * c1 * c2
                conv = {k2: c for k2, c in conv.items() if c}
                if conv != direct.terms:
                    ok, witness = False, k
                    break
            report.record(f"monomials/coproduct/{alg}", n, ok, witness)

        # product formula: alpha >= 0 integers reproducing M_f M_g
        pmax = product_degree.get(alg, max_degree)
        for total in range(2, pmax + 1):
            ok = True
            witness = None
            for a_deg in range(1, total):
                for fk, gk in itertools.product(basis_keys(alg, a_deg), basis_keys(alg, total - a_deg)):
                    mf = change_basis(alg, "M", "F", Element(alg, "M", {fk: 1}))
                    mg = change_basis(alg, "M", "F", Element(alg, "M", {gk: 1}))
                    true_prod = change_basis(alg, "F", "M", product(alg, mf, mg))
                    table = _alpha_row(alg, fk, gk)
                    if true_prod.terms != table:
                        ok, witness = False, f"{fk}|{gk}"
                        break
                if not ok:
                    break
            report.record(f"monomials/product/{alg}", total, ok, witness)

        # antipode: Takeuchi in M vs uniform-sign beta table
        amax = antipode_degree.get(alg, max_degree)
        for n in range(1, amax + 1):
            ok = True
            witness = None
            for fk in basis_keys(alg, n):
                sm = antipode(alg, Element(alg, "M", {fk: 1}))
                gd = ops.global_descents(ALGEBRA_KIND[alg], parse_key(alg, fk))
                sign = -1 if len(gd) % 2 == 0 else 1
                betas = monomial_antipode_row(alg, fk)
                if {k: sign * c for k, c in betas.items()} != sm.terms:
                    ok, witness = False, fk
                    break
            report.record(f"monomials/antipode/{alg}", n, ok, witness)

    report.record(
        "monomials/golden-alpha",
        4,
        hopf.monomial_product_coeff("SSym", "21", "12", "3421") == 1,
        None,
    )
    report.record(
        "monomials/golden-beta", 4, hopf.monomial_antipode_coeff("SSym", "4231", "2134") == 2, None
    )
    return report


def _alpha_row(alg: str, fk: str, gk: str) -> dict[str, int]:
    kind = ALGEBRA_KIND[alg]
    order = ALGEBRA_ORDER[alg]
    f, g = parse_key(alg, fk), parse_key(alg, gk)
    ups_f = [parse_key(alg, k) for k in hopf.alg_upset(alg, fk)]
    ups_g = [parse_key(alg, k) for k in hopf.alg_upset(alg, gk)]
    evals = []
    for z in ops.enumerate_shuffles(kind, [f, g]):
        e = ops.apply_shuffle(kind, z, [f, g])
        others = [
            ops.apply_shuffle(kind, z, [f2, g2])
            for f2, g2 in itertools.product(ups_f, ups_g)
            if (f2, g2) != (f, g)
        ]
        evals.append((e, others))
    n = degree_of_key(alg, fk) + degree_of_key(alg, gk)
    out: dict[str, int] = {}
    for hk in basis_keys(alg, n):
        h = parse_key(alg, hk)
        alpha = 0
        for e, others in evals:
            if posets.leq(order, e, h) and not any(posets.leq(order, o, h) for o in others):
                alpha += 1
        if alpha:
            out[hk] = alpha
    return out


# ---------------------------------------------------------------------------
# bidendriform relations


def _half(alg: str, which: str, a: Element, b: Element) -> Element:
    return dendriform(alg, which, a, b)


def _dhalf(alg: str, which: str, a: Element) -> TensorElement:
    return dendriform(alg, which, a)


def _tensor_from_pairs(alg: str, pairs: dict[tuple[str, str], int]) -> TensorElement:
    return TensorElement(alg, "F", pairs)


def _combine_left(alg: str, t: TensorElement, b: Element, which: str) -> TensorElement:
    """sum a' x (a'' ? b) over tensor terms of t."""
    out: dict[tuple[str, ...], int] = {}
    for (a1, a2), c in t.terms.items():
        rhs = _half(alg, which, _felem(alg, a2), b)
        for k, c2 in rhs.terms.items():
            out[(a1, k)] = out.get((a1, k), 0) + c * c2
    return TensorElement(alg, "F", out)


def verify_bidendriform(max_degree: int) -> Report:
    report = Report()
    for alg in ("STSym", "PSym"):
        ok = True
        witness = None
        for total in range(2, max_degree + 1):
            for a_deg in range(1, total):
                for ka, kb in itertools.product(basis_keys(alg, a_deg), basis_keys(alg, total - a_deg)):
                    a, b = _felem(alg, ka), _felem(alg, kb)
                    full = product(alg, a, b)
                    got = _half(alg, "<<", a, b) + _half(alg, ">>", a, b)
                    if got.terms != full.terms:
                        ok, witness = False, f"(1) {ka},{kb}"
                    dsum = _dhalf(alg, "dll", a) + _dhalf(alg, "dgg", a)
                    if dsum.terms != coproduct_plus(alg, a).terms:
                        ok, witness = False, f"(5) {ka}"
        report.record(f"bidendriform/{alg}/split", max_degree, ok, witness)

        ok = True
        witness = None
        for total in range(3, max_degree + 1):
            for da in range(1, total - 1):
                for db in range(1, total - da):
                    dc = total - da - db
                    for ka, kb, kc in itertools.product(
                        basis_keys(alg, da), basis_keys(alg, db), basis_keys(alg, dc)
                    ):
                        a, b, c = _felem(alg, ka), _felem(alg, kb), _felem(alg, kc)
                        if _half(alg, "<<", _half(alg, "<<", a, b), c).terms != _half(
                            alg, "<<", a, product(alg, b, c)
                        ).terms:
                            ok, witness = False, f"(2) {ka},{kb},{kc}"
                        if _half(alg, ">>", a, _half(alg, ">>", b, c)).terms != _half(
                            alg, ">>", product(alg, a, b), c
                        ).terms:
                            ok, witness = False, f"(3) {ka},{kb},{kc}"
                        if _half(alg, ">>", a, _half(alg, "<<", b, c)).terms != _half(
                            alg, "<<", _half(alg, ">>", a, b), c
                        ).terms:
                            ok, witness = False, f"(4) {ka},{kb},{kc}"
        report.record(f"bidendriform/{alg}/dendriform", max_degree, ok, witness)

        ok = True
        witness = None
        for n in range(2, max_degree + 1):
            for k in basis_keys(alg, n):
                a = _felem(alg, k)
                # (6) (dll x id) dll = (id x d+) dll
                lhs = _expand_first(alg, _dhalf(alg, "dll", a), "dll")
                rhs = _expand_second(alg, _dhalf(alg, "dll", a), "d+")
                if lhs != rhs:
                    ok, witness = False, f"(6) {k}"
                # (7) (id x dgg) dgg = (d+ x id) dgg
                lhs = _expand_second(alg, _dhalf(alg, "dgg", a), "dgg")
                rhs = _expand_first(alg, _dhalf(alg, "dgg", a), "d+")
                if lhs != rhs:
                    ok, witness = False, f"(7) {k}"
                # (8) (dgg x id) dll = (id x dll) dgg
                lhs = _expand_first(alg, _dhalf(alg, "dll", a), "dgg")
                rhs = _expand_second(alg, _dhalf(alg, "dgg", a), "dll")
                if lhs != rhs:
                    ok, witness = False, f"(8) {k}"
        report.record(f"bidendriform/{alg}/codendriform", max_degree, ok, witness)

        ok = True
        witness = None
        for total in range(2, max_degree + 1):
            for a_deg in range(1, total):
                for ka, kb in itertools.product(basis_keys(alg, a_deg), basis_keys(alg, total - a_deg)):
                    if not _check_mixed(alg, ka, kb):
                        ok, witness = False, f"(9-12) {ka},{kb}"
        report.record(f"bidendriform/{alg}/mixed", max_degree, ok, witness)
    return report


def _expand_first(alg: str, t: TensorElement, which: str) -> dict[tuple[str, str, str], int]:
    out: dict[tuple[str, str, str], int] = {}
    for (a1, a2), c in t.terms.items():
        inner = coproduct_plus(alg, _felem(alg, a1)) if which == "d+" else _dhalf(alg, which, _felem(alg, a1))
        for (b1, b2), c2 in inner.terms.items():
            out[(b1, b2, a2)] = out.get((b1, b2, a2), 0) + c * c2
    return {k: c for k, c in out.items() if c}


def _expand_second(alg: str, t: TensorElement, which: str) -> dict[tuple[str, str, str], int]:
    out: dict[tuple[str, str, str], int] = {}
    for (a1, a2), c in t.terms.items():
        inner = coproduct_plus(alg, _felem(alg, a2)) if which == "d+" else _dhalf(alg, which, _felem(alg, a2))
        for (b1, b2), c2 in inner.terms.items():
            out[(a1, b1, b2)] = out.get((a1, b1, b2), 0) + c * c2
    return {k: c for k, c in out.items() if c}


def _check_mixed(alg: str, ka: str, kb: str) -> bool:
    """Relations (9)-(12) on fundamental pairs."""
    a, b = _felem(alg, ka), _felem(alg, kb)
    da = coproduct_plus(alg, a).terms
    dllb = _dhalf(alg, "dll", b).terms
    dggb = _dhalf(alg, "dgg", b).terms

    def tensor(left: Element, right: Element) -> dict[tuple[str, str], int]:
        return {
            (k1, k2): c1 * c2
            for k1, c1 in left.terms.items()
            for k2, c2 in right.terms.items()
        }

    def addin(acc: dict, terms: dict, scale: int = 1) -> None:
        for k, c in terms.items():
            acc[k] = acc.get(k, 0) + scale * c

    def halfp(which: str, x: str | Element, y: str | Element) -> Element:
        xe = _felem(alg, x) if isinstance(x, str) else x
        ye = _felem(alg, y) if isinstance(y, str) else y
        return _half(alg, which, xe, ye)

    def prod(x: str | Element, y: str | Element) -> Element:
        xe = _felem(alg, x) if isinstance(x, str) else x
        ye = _felem(alg, y) if isinstance(y, str) else y
        return product(alg, xe, ye)

    # (9) dgg(a >> b) = a'bg' x a''>>bg'' + a' x a''>>b + bg' x a>>bg'' + a bg' x bg'' + a x b
    lhs = _dhalf(alg, "dgg", halfp(">>", a, b)).terms
    rhs: dict[tuple[str, str], int] = {}
    for (a1, a2), c1 in da.items():
        for (b1, b2), c2 in dggb.items():
            addin(rhs, tensor(prod(a1, b1), halfp(">>", a2, b2)), c1 * c2)
        addin(rhs, tensor(_felem(alg, a1), halfp(">>", a2, b)), c1)
    for (b1, b2), c2 in dggb.items():
        addin(rhs, tensor(_felem(alg, b1), halfp(">>", a, b2)), c2)
        addin(rhs, tensor(prod(a, b1), _felem(alg, b2)), c2)
    addin(rhs, tensor(a, b))
    if lhs != {k: c for k, c in rhs.items() if c}:
        return False

    # (10) dgg(a << b) = a'bg' x a''<<bg'' + a' x a''<<b + bg' x a<<bg''
    lhs = _dhalf(alg, "dgg", halfp("<<", a, b)).terms
    rhs = {}
    for (a1, a2), c1 in da.items():
        for (b1, b2), c2 in dggb.items():
            addin(rhs, tensor(prod(a1, b1), halfp("<<", a2, b2)), c1 * c2)
        addin(rhs, tensor(_felem(alg, a1), halfp("<<", a2, b)), c1)
    for (b1, b2), c2 in dggb.items():
        addin(rhs, tensor(_felem(alg, b1), halfp("<<", a, b2)), c2)
    if lhs != {k: c for k, c in rhs.items() if c}:
        return False

    # (11) dll(a >> b) = a'bl' x a''>>bl'' + bl' x a>>bl'' + a bl' x bl''
    lhs = _dhalf(alg, "dll", halfp(">>", a, b)).terms
    rhs = {}
    for (a1, a2), c1 in da.items():
        for (b1, b2), c2 in dllb.items():
            addin(rhs, tensor(prod(a1, b1), halfp(">>", a2, b2)), c1 * c2)
    for (b1, b2), c2 in dllb.items():
        addin(rhs, tensor(_felem(alg, b1), halfp(">>", a, b2)), c2)
        addin(rhs, tensor(prod(a, b1), _felem(alg, b2)), c2)
    if lhs != {k: c for k, c in rhs.items() if c}:
        return False

    # (12) dll(a << b) = a'bl' x a''<<bl'' + bl' x a<<bl'' + a'b x a'' + b x a
    lhs = _dhalf(alg, "dll", halfp("<<", a, b)).terms
    rhs = {}
    for (a1, a2), c1 in da.items():
        for (b1, b2), c2 in dllb.items():
            addin(rhs, tensor(prod(a1, b1), halfp("<<", a2, b2)), c1 * c2)
        addin(rhs, tensor(prod(a1, b), _felem(alg, a2)), c1)
    for (b1, b2), c2 in dllb.items():
        addin(rhs, tensor(_felem(alg, b1), halfp("<<", a, b2)), c2)
    addin(rhs, tensor(b, a))
    return lhs == {k: c for k, c in rhs.items() if c}


# ---------------------------------------------------------------------------
# morphisms


def verify_morphisms(max_degree: int) -> Report:
    report = Report()
    for which, (src, dst, basis) in hopf.MORPHISM_SIGNATURE.items():
        # algebra map
        ok = True
        witness = None
        for total in range(2, max_degree + 1):
            for a_deg in range(1, total):
                for ka, kb in itertools.product(basis_keys(src, a_deg), basis_keys(src, total - a_deg)):
                    xa = Element(src, basis, {ka: 1})
                    xb = Element(src, basis, {kb: 1})
                    if basis == "F":
                        lhs = morphism(which, product(src, xa, xb))
                        rhs = product(dst, morphism(which, xa), morphism(which, xb))
                    else:
                        lhs = morphism(which, dual_product(src, xa, xb))
                        rhs = product(dst, morphism(which, xa), morphism(which, xb))
                    if lhs.terms != rhs.terms:
                        ok, witness = False, f"{ka},{kb}"
        report.record(f"morphisms/{which}/product", max_degree, ok, witness)

        ok = True
        witness = None
        for n in range(1, max_degree + 1):
            for k in basis_keys(src, n):
                x = Element(src, basis, {k: 1})
                if basis == "F":
                    lhs = coproduct(src, x)
                else:
                    lhs = dual_coproduct(src, x)
                mapped: dict[tuple[str, str], int] = {}
                for (a, b), c in lhs.terms.items():
                    key = (morphism_key(which, a), morphism_key(which, b))
                    mapped[key] = mapped.get(key, 0) + c
                mapped = {k2: c for k2, c in mapped.items() if c}
                rhs = coproduct(dst, morphism(which, x))
                if mapped != rhs.terms:
                    ok, witness = False, k
        report.record(f"morphisms/{which}/coproduct", max_degree, ok, witness)

    # monomial images under the quotient maps
    for which, cond in (
        ("Pi", lambda k: avoids(parse_key("SSym", k), 213)[0]),
        ("Pi_ptree", lambda k: avoids(parse_key("STSym", k), 213)[0]),
        ("Pi_tree", lambda k: parse_key("PSym", k).sigma == tuple(range(degree_of_key("PSym", k), 0, -1))),
        ("Pi_perm", lambda k: parse_key("PSym", k) == ops.iota_perm(parse_key("PSym", k).sigma)),
    ):
        src, dst, _ = hopf.MORPHISM_SIGNATURE[which]
        ok = True
        witness = None
        for n in range(1, max_degree + 1):
            for k in basis_keys(src, n):
                img = morphism(which, Element(src, "M", {k: 1}))
                if cond(k):
                    want = {morphism_key(which, k): 1}
                else:
                    want = {}
                if img.terms != want:
                    ok, witness = False, k
        report.record(f"morphisms/{which}/monomial", max_degree, ok, witness)

    # commuting square: Pi_ptree restricted to permutations is Pi
    ok = True
    witness = None
    for n in range(1, max_degree + 1):
        for k in basis_keys("SSym", n):
            if morphism_key("Pi_ptree", k) != morphism_key("Pi", k):
                ok, witness = False, k
    report.record("morphisms/square-ssym-stsym", max_degree, ok, witness)

    # the left triangle does not commute: exhibit a witness (smallest at 2)
    if max_degree >= 2:
        found = None
        for n in range(2, max_degree + 1):
            for k in basis_keys("PSym", n):
                via = morphism_key("Pi", morphism_key("Pi_perm", k))
                direct = morphism_key("Pi_tree", k)
                if via != direct:
                    found = k
                    break
            if found:
                break
        report.record("morphisms/triangle-noncommuting-witness", max_degree, found is not None, None)
    return report


# ---------------------------------------------------------------------------
# Galois connections and the planar weak order structure


def verify_galois(max_degree: int) -> Report:
    report = Report()
    pairs = [
        ("perm", "pbt", "weak", "tamari", ops.iota_binary, ops.forget),
        ("gsp", "ptree", "planar_weak", "planar_tamari", ops.iota_gsp, ops.forget),
    ]
    for up_kind, down_kind, up_order, down_order, iota, pi in pairs:
        for n in range(1, max_degree + 1):
            ok = True
            witness = None
            downs = enumerate_objects(down_kind, n)
            upsv = enumerate_objects(up_kind, n)
            for t in downs:
                it = iota(t)
                if pi(up_kind, it) != t:
                    ok, witness = False, render(down_kind, t)
            for f in upsv:
                for t in downs:
                    lhs = posets.leq(down_order, pi(up_kind, f), t)
                    rhs = posets.leq(up_order, f, iota(t))
                    if lhs != rhs:
                        ok, witness = False, f"{render(up_kind, f)} vs {render(down_kind, t)}"
            # order preservation of both maps
            for a, bb in itertools.product(downs, repeat=2):
                if posets.leq(down_order, a, bb) and not posets.leq(up_order, iota(a), iota(bb)):
                    ok, witness = False, f"iota not monotone {render(down_kind, a)}"
            for a, bb in itertools.product(upsv, repeat=2):
                if posets.leq(up_order, a, bb) and not posets.leq(
                    down_order, pi(up_kind, a), pi(up_kind, bb)
                ):
                    ok, witness = False, f"pi not monotone {render(up_kind, a)}"
            # iota preserves global descents
            for t in downs:
                if ops.global_descents(down_kind, t) != ops.global_descents(up_kind, iota(t)):
                    ok, witness = False, f"GD {render(down_kind, t)}"
            report.record(f"galois/{up_kind}->{down_kind}", n, ok, witness)

    # parking projections: adjunctions via iota_tree / iota_perm
    for n in range(1, min(max_degree, 4) + 1):
        ok = True
        witness = None
        pfs = enumerate_objects("pf", n)
        for f in pfs:
            for t in enumerate_objects("pbt", n):
                lhs = posets.leq("tamari", f.tree, t)
                rhs = posets.leq("parking", f, ops.iota_tree(t))
                if lhs != rhs:
                    ok, witness = False, f"iota_tree {render('pf', f)}"
            for s in enumerate_objects("perm", n):
                lhs = posets.leq("weak", f.sigma, s)
                rhs = posets.leq("parking", f, ops.iota_perm(s))
                if lhs != rhs:
                    ok, witness = False, f"iota_perm {render('pf', f)}"
        report.record("galois/parking", n, ok, witness)
    return report


def verify_planar_weak(max_degree: int) -> Report:
    report = Report()
    for n in range(1, max_degree + 1):
        ok = True
        witness = None
        comps = posets.components("planar_weak", n)
        for comp in comps:
            cls = {(setpar(w), nested_trace(w)) for w in comp}
            if len(cls) != 1:
                ok, witness = False, render("pw", comp[0])
            # delrpt is an order isomorphism onto a weak-order interval
            words = sorted(comp, key=lambda w: render("pw", w))
            ds = [delrpt(w) for w in words]
            if len(set(ds)) != len(ds):
                ok, witness = False, f"delrpt not injective on {render('pw', words[0])}"
            for u, v in itertools.product(words, repeat=2):
                if posets.leq("planar_weak", u, v) != posets.leq("weak", delrpt(u), delrpt(v)):
                    ok, witness = False, f"iso {render('pw', u)},{render('pw', v)}"
            lo = min(words, key=lambda w: len(inv_packed(w)))
            hi = max(words, key=lambda w: len(inv_packed(w)))
            image = sorted(ds)
            interval = sorted(
                s for s in enumerate_objects("perm", len(ds[0])) if posets.leq("weak", delrpt(lo), s) and posets.leq("weak", s, delrpt(hi))
            )
            if image != interval:
                ok, witness = False, f"interval {render('pw', lo)}"
            # classification: all words with this setpar and trace lie here
            sp, tr = setpar(words[0]), nested_trace(words[0])
            elsewhere = [
                w
                for w in enumerate_objects("pw", n)
                if setpar(w) == sp and nested_trace(w) == tr and w not in comp
            ]
            if elsewhere:
                ok, witness = False, f"class split {render('pw', elsewhere[0])}"
            # join/meet closed forms agree with brute force (posets.join asserts)
            for u, v in itertools.product(words, repeat=2):
                posets.join("planar_weak", u, v)
                posets.meet("planar_weak", u, v)
        report.record("planar-weak/components", n, ok, witness)
    return report


# ---------------------------------------------------------------------------
# NCQSym embedding and noncrossing support


def verify_embedding(max_degree: int, noncrossing_degree: int = 5) -> Report:
    report = Report()
    for n in range(1, noncrossing_degree + 1):
        ok = True
        witness = None
        for w in enumerate_objects("gsp", n):
            if not is_noncrossing(word_inverse(w)):
                ok, witness = False, render("gsp", w)
        report.record("embedding/noncrossing", n, ok, witness)
    sub = verify_morphisms_embed_only(max_degree)
    report.extend(sub)
    return report


def verify_morphisms_embed_only(max_degree: int) -> Report:
    report = Report()
    ok = True
    witness = None
    for total in range(2, max_degree + 1):
        for a_deg in range(1, total):
            for ka, kb in itertools.product(
                basis_keys("STSym", a_deg), basis_keys("STSym", total - a_deg)
            ):
                xa = Element("STSym", "Fdual", {ka: 1})
                xb = Element("STSym", "Fdual", {kb: 1})
                lhs = morphism("embed", dual_product("STSym", xa, xb))
                rhs = product("NCQSym_Q", morphism("embed", xa), morphism("embed", xb))
                if lhs.terms != rhs.terms:
                    ok, witness = False, f"{ka},{kb}"
    report.record("embedding/product", max_degree, ok, witness)
    ok = True
    witness = None
    for n in range(1, max_degree + 1):
        for k in basis_keys("STSym", n):
            x = Element("STSym", "Fdual", {k: 1})
            lhs = dual_coproduct("STSym", x)
            mapped: dict[tuple[str, str], int] = {}
            for (a, b), c in lhs.terms.items():
                key = (morphism_key("embed", a), morphism_key("embed", b))
                mapped[key] = mapped.get(key, 0) + c
            rhs = coproduct("NCQSym_Q", morphism("embed", x))
            if {k2: c for k2, c in mapped.items() if c} != rhs.terms:
                ok, witness = False, k
    report.record("embedding/coproduct", max_degree, ok, witness)
    return report

# ---------------------------------------------------------------------------
# section-3 axiom suites


def _alg_allow(alg: str, key: str) -> frozenset[int]:
    return ops.allow_single(ALGEBRA_KIND[alg], parse_key(alg, key))


def _alg_components(alg: str, n: int) -> list[list[str]]:
    """Connected components of the algebra's own (possibly induced) poset."""
    keys = basis_keys(alg, n)
    parent = {k: k for k in keys}

    def find(k: str) -> str:
        while parent[k] != k:
            parent[k] = parent[parent[k]]
            k = parent[k]
        return k

    for a, b in itertools.combinations(keys, 2):
        if hopf.alg_leq(alg, a, b) or hopf.alg_leq(alg, b, a):
            parent[find(a)] = find(b)
    groups: dict[str, list[str]] = {}
    for k in keys:
        groups.setdefault(find(k), []).append(k)
    return [sorted(g) for g in sorted(groups.values())]


def _alg_join(alg: str, a: str, b: str) -> str | None:
    """Least upper bound inside the algebra's ground set (the ambient
    order's join except on the induced STSym subposet)."""
    kind = ALGEBRA_KIND[alg]
    order = ALGEBRA_ORDER[alg]
    j = posets.join(order, parse_key(alg, a), parse_key(alg, b))
    if alg != "STSym":
        return None if j is None else render(kind, j)
    # induced subposet: the ambient join works whenever it stays 212-avoiding
    if j is not None and avoids(j, 212)[0]:
        return render(kind, j)
    ups = [k for k in hopf.alg_upset(alg, a) if hopf.alg_leq(alg, b, k)]
    mins = [k for k in ups if not any(k2 != k and hopf.alg_leq(alg, k2, k) for k2 in ups)]
    if len(mins) == 1 and all(hopf.alg_leq(alg, mins[0], k) for k in ups):
        return mins[0]
    return None


def _splits(alg: str, key: str, i: int) -> tuple[str, str]:
    kind = ALGEBRA_KIND[alg]
    a, b = ops.split_at(kind, parse_key(alg, key), i)
    return render(kind, a), render(kind, b)


def _over(alg: str, a: str, b: str) -> str:
    kind = ALGEBRA_KIND[alg]
    return render(kind, ops.graft_over(kind, parse_key(alg, a), parse_key(alg, b)))


def _under(alg: str, a: str, b: str) -> str:
    kind = ALGEBRA_KIND[alg]
    return render(kind, ops.graft_under(kind, parse_key(alg, a), parse_key(alg, b)))


def _compositions_of(n: int, min_parts: int = 2):
    if n == 0:
        return
    def rec(m):
        if m == 0:
            yield ()
            return
        for first in range(1, m + 1):
            for rest in rec(m - first):
                yield (first,) + rest
    for comp in rec(n):
        if len(comp) >= min_parts:
            yield comp


def verify_axioms(alg: str, max_degree: int) -> Report:
    if ALGEBRA_ORDER[alg] is None:
        raise ValueError(f"{alg} has no underlying order; the section-3 axioms do not apply")
    if alg in ("SSym", "STSym", "PSym"):
        report = _axioms_direct(alg, max_degree)
    elif alg == "YSym":
        report = _axioms_transfer("SSym", "YSym", ops.iota_binary, max_degree)
    elif alg == "TSymB":
        report = _axioms_transfer("STSym", "TSymB", ops.iota_gsp, max_degree)
        report.extend(_subposet_closure(max_degree))
    else:
        raise ValueError(alg)
    if alg == "PSym":
        report.extend(_axioms_transfer_parking(max_degree))
    return report


def _axioms_direct(alg: str, max_degree: int) -> Report:
    report = Report()
    kind = ALGEBRA_KIND[alg]
    order = ALGEBRA_ORDER[alg]

    for n in range(1, max_degree + 1):
        keys = basis_keys(alg, n)
        comparable = [
            (a, b) for a, b in itertools.product(keys, repeat=2) if a != b and hopf.alg_leq(alg, a, b)
        ]

        # (Delta1) allow is constant up the order
        ok = all(_alg_allow(alg, a) == _alg_allow(alg, b) for a, b in comparable)
        report.record(f"axioms/{alg}/D1", n, ok)

        # (Delta2) splits are monotone
        ok = True
        witness = None
        for a, b in comparable:
            for i in _alg_allow(alg, a):
                a1, a2 = _splits(alg, a, i)
                b1, b2 = _splits(alg, b, i)
                if not (hopf.alg_leq(alg, a1, b1) and hopf.alg_leq(alg, a2, b2)):
                    ok, witness = False, f"{a}<={b} at {i}"
        report.record(f"axioms/{alg}/D2", n, ok, witness)

        # (Delta3) g/h is the unique maximal preimage and / is monotone
        ok = True
        witness = None
        for i in range(1, n):
            for g, h in itertools.product(basis_keys(alg, i), basis_keys(alg, n - i)):
                over = _over(alg, g, h)
                fiber = [
                    f for f in keys if i in _alg_allow(alg, f) and _splits(alg, f, i) == (g, h)
                ]
                if over not in fiber or not all(hopf.alg_leq(alg, f, over) for f in fiber):
                    ok, witness = False, f"{g}/{h}"
        for i in range(1, n):
            for g, h in itertools.product(basis_keys(alg, i), basis_keys(alg, n - i)):
                for g2 in hopf.alg_upset(alg, g):
                    for h2 in hopf.alg_upset(alg, h):
                        if not hopf.alg_leq(alg, _over(alg, g, h), _over(alg, g2, h2)):
                            ok, witness = False, f"/ not monotone {g},{h}"
        report.record(f"axioms/{alg}/D3", n, ok, witness)

        # (m0) components admit least upper bounds
        ok = True
        witness = None
        for comp in _alg_components(alg, n):
            for a, b in itertools.combinations(comp, 2):
                if _alg_join(alg, a, b) is None:
                    ok, witness = False, f"{a} v {b}"
        report.record(f"axioms/{alg}/m0", n, ok, witness)

        # (m1) allowable split positions depend only on the component
        ok = True
        witness = None
        for comp in _alg_components(alg, n):
            allows = {_alg_allow(alg, k) for k in comp}
            if len(allows) > 1:
                ok, witness = False, comp[0]
        report.record(f"axioms/{alg}/m1-components", n, ok, witness)

    # (m2), (m3) on pairs of blocks with bounded total degree
    ok = True
    witness = None
    for total in range(2, max_degree + 1):
        for a_deg in range(1, total):
            b_deg = total - a_deg
            for fk, gk in itertools.product(basis_keys(alg, a_deg), basis_keys(alg, b_deg)):
                f, g = parse_key(alg, fk), parse_key(alg, gk)
                shuffles = ops.enumerate_shuffles(kind, [f, g])
                ups_f = hopf.alg_upset(alg, fk)
                ups_g = hopf.alg_upset(alg, gk)
                for z in shuffles:
                    e = ops.apply_shuffle(kind, z, [f, g])
                    for fk2, gk2 in itertools.product(ups_f, ups_g):
                        e2 = ops.apply_shuffle(kind, z, [parse_key(alg, fk2), parse_key(alg, gk2)])
                        if not posets.leq(order, e, e2):
                            ok, witness = False, f"m2 {fk},{gk}"
    report.record(f"axioms/{alg}/m2", max_degree, ok, witness)

    ok = True
    witness = None
    for total in range(2, max_degree + 1):
        for a_deg in range(1, total):
            b_deg = total - a_deg
            for comp_f in _alg_components(alg, a_deg):
                for comp_g in _alg_components(alg, b_deg):
                    f0 = parse_key(alg, comp_f[0])
                    g0 = parse_key(alg, comp_g[0])
                    shuffles = ops.enumerate_shuffles(kind, [f0, g0])
                    for f1k, f2k in itertools.combinations_with_replacement(comp_f, 2):
                        fj = _alg_join(alg, f1k, f2k)
                        for g1k, g2k in itertools.combinations_with_replacement(comp_g, 2):
                            gj = _alg_join(alg, g1k, g2k)
                            if fj is None or gj is None:
                                continue
                            for z in shuffles:
                                lhs = ops.apply_shuffle(kind, z, [parse_key(alg, fj), parse_key(alg, gj)])
                                r1 = ops.apply_shuffle(kind, z, [parse_key(alg, f1k), parse_key(alg, g1k)])
                                r2 = ops.apply_shuffle(kind, z, [parse_key(alg, f2k), parse_key(alg, g2k)])
                                rj = _alg_join(alg, render(kind, r1), render(kind, r2))
                                if rj is None or not posets.leq(order, lhs, parse_key(alg, rj)):
                                    ok, witness = False, f"m3 {f1k},{f2k};{g1k},{g2k}"
    report.record(f"axioms/{alg}/m3", max_degree, ok, witness)

    # (S0) backslash is a shuffle and the provenance factorization criterion
    ok = True
    witness = None
    for total in range(2, max_degree + 1):
        for a_deg in range(1, total):
            for fk, gk in itertools.product(basis_keys(alg, a_deg), basis_keys(alg, total - a_deg)):
                f, g = parse_key(alg, fk), parse_key(alg, gk)
                zstar = ops.backslash_shuffle(kind, [f, g])
                if ops.apply_shuffle(kind, zstar, [f, g]) != ops.graft_under(kind, f, g):
                    ok, witness = False, f"backslash {fk},{gk}"
                if not posets.leq(order, ops.graft_under(kind, f, g), ops.graft_over(kind, f, g)):
                    ok, witness = False, f"under<=over {fk},{gk}"
    for total in range(3, max_degree + 1):
        for comp in _compositions_of(total, 3):
            if len(comp) > 3:
                continue
            for keys3 in itertools.product(*(basis_keys(alg, d) for d in comp)):
                objs = [parse_key(alg, k) for k in keys3]
                left = ops.graft_under(kind, ops.graft_under(kind, objs[0], objs[1]), objs[2])
                right = ops.graft_under(kind, objs[0], ops.graft_under(kind, objs[1], objs[2]))
                if left != right:
                    ok, witness = False, f"backslash assoc {keys3}"
    report.record(f"axioms/{alg}/S0-backslash", max_degree, ok, witness)
    report.extend(_axiom_s0_provenance(alg, max_degree))

    # (S1) global descents grow up the order
    ok = True
    witness = None
    for n in range(1, max_degree + 1):
        for a, b in itertools.product(basis_keys(alg, n), repeat=2):
            if a != b and hopf.alg_leq(alg, a, b):
                if not ops.global_descents(kind, parse_key(alg, a)) <= ops.global_descents(
                    kind, parse_key(alg, b)
                ):
                    ok, witness = False, f"{a}<={b}"
    report.record(f"axioms/{alg}/S1", max_degree, ok, witness)

    # (S2)
    ok = True
    witness = None
    for total in range(2, max_degree + 1):
        for comp in _compositions_of(total):
            for keys_f in itertools.product(*(basis_keys(alg, d) for d in comp)):
                ups = [hopf.alg_upset(alg, k) for k in keys_f]
                from functools import reduce
                over_f = reduce(lambda a, b: _over(alg, a, b), keys_f)
                for keys_f2 in itertools.product(*ups):
                    over_f2 = reduce(lambda a, b: _over(alg, a, b), keys_f2)
                    under_f2 = reduce(lambda a, b: _under(alg, a, b), keys_f2)
                    j = _alg_join(alg, over_f, under_f2)
                    if j is None or not hopf.alg_leq(alg, over_f2, j):
                        ok, witness = False, f"S2 {keys_f}->{keys_f2}"
    report.record(f"axioms/{alg}/S2", max_degree, ok, witness)

    # (S3)
    ok = True
    witness = None
    from functools import reduce
    for total in range(2, max_degree + 1):
        for comp in _compositions_of(total):
            k = len(comp)
            for keys_f in itertools.product(*(basis_keys(alg, d) for d in comp)):
                over_all = reduce(lambda a, b: _over(alg, a, b), keys_f)
                for pattern in _interleavings(k):
                    a_groups, b_groups = pattern
                    term_a = _mixed_concat(alg, keys_f, a_groups)
                    term_b = _mixed_concat(alg, keys_f, b_groups)
                    j = _alg_join(alg, term_a, term_b)
                    if j is None or not hopf.alg_leq(alg, over_all, j):
                        ok, witness = False, f"S3 {keys_f} {pattern}"
    report.record(f"axioms/{alg}/S3", max_degree, ok, witness)
    return report


def _interleavings(k: int):
    """Index patterns i_1<j_1<...<i_l<j_l in [1..k]; returns the two
    /-grouping interval lists (term A groups [1,i_1],[j_1,i_2],...; term B
    groups [i_1,j_1],[i_2,j_2],...)."""
    out = []
    for size in range(2, k + 1, 2):
        for idx in itertools.combinations(range(1, k + 1), size):
            iis = idx[0::2]
            jjs = idx[1::2]
            a_groups = [(1, iis[0])]
            for m in range(1, len(iis)):
                a_groups.append((jjs[m - 1], iis[m]))
            a_groups.append((jjs[-1], k))
            b_groups = [(iis[m], jjs[m]) for m in range(len(iis))]
            out.append((a_groups, b_groups))
    return out


def _mixed_concat(alg: str, keys_f, groups) -> str:
    """Backslash-chain of the blocks with the given index intervals first
    merged by /."""
    from functools import reduce
    k = len(keys_f)
    grouped: list[str] = []
    pos = 1
    gidx = 0
    groups = sorted(groups)
    while pos <= k:
        if gidx < len(groups) and groups[gidx][0] == pos:
            a, b = groups[gidx]
            grouped.append(reduce(lambda x, y: _over(alg, x, y), keys_f[a - 1 : b]))
            pos = b + 1
            gidx += 1
        else:
            grouped.append(keys_f[pos - 1])
            pos += 1
    return reduce(lambda x, y: _under(alg, x, y), grouped)


def _axiom_s0_provenance(alg: str, max_degree: int) -> Report:
    """The Remark criterion: a shuffle factors through merging a set of
    gaps iff, gap by gap, every region of the left block precedes every
    region of the right block; validated against exhaustive re-enumeration."""
    report = Report()
    kind = ALGEBRA_KIND[alg]
    ok = True
    witness = None
    for n in range(2, max_degree + 1):
        for fk in basis_keys(alg, n):
            f = parse_key(alg, fk)
            gd = sorted(ops.global_descents(kind, f))
            if len(gd) < 1:
                continue
            blocks = list(ops.multi_split(kind, f, gd))
            shuffles = ops.enumerate_shuffles(kind, blocks)
            for z in shuffles:
                for gap in range(1, len(blocks)):
                    merged = ops.factor_through(kind, z, blocks, gap)
                    under = ops.graft_under(kind, blocks[gap - 1], blocks[gap])
                    nb = list(blocks)
                    nb[gap - 1 : gap + 1] = [under]
                    # exhaustive: does any shuffle of the merged tuple give the
                    # same provenance-refined evaluation?
                    target = ops.apply_shuffle(kind, z, blocks, with_provenance=True)
                    dj = ops.degree(kind, blocks[gap - 1])
                    want_prov = []
                    for b, r in target[1]:
                        if b == gap - 1:
                            want_prov.append((gap - 1, r))
                        elif b == gap:
                            want_prov.append((gap - 1, r + dj))
                        elif b > gap:
                            want_prov.append((b - 1, r))
                        else:
                            want_prov.append((b, r))
                    exists = any(
                        ops.apply_shuffle(kind, z2, nb, with_provenance=True)
                        == (target[0], tuple(want_prov))
                        for z2 in ops.enumerate_shuffles(kind, nb)
                    )
                    if (merged is not None) != exists:
                        ok, witness = False, f"{fk} gap {gap} {z.render()}"
    report.record(f"axioms/{alg}/S0-provenance", max_degree, ok, witness)
    return report


def _axioms_transfer(src: str, dst: str, iota, max_degree: int) -> Report:
    """The pi-axioms for a quotient pair (source algebra, quotient algebra)."""
    report = Report()
    skind, dkind = ALGEBRA_KIND[src], ALGEBRA_KIND[dst]
    sorder, dorder = ALGEBRA_ORDER[src], ALGEBRA_ORDER[dst]
    for n in range(1, max_degree + 1):
        ok = True
        witness = None
        dkeys = basis_keys(dst, n)
        skeys = basis_keys(src, n)
        # (pi0) iota is the maximal preimage and both maps are monotone
        for tk in dkeys:
            t = parse_key(dst, tk)
            it = iota(t)
            fiber = [parse_key(src, fk) for fk in skeys if ops.forget(skind, parse_key(src, fk)) == t]
            if it not in fiber or not all(posets.leq(sorder, f, it) for f in fiber):
                ok, witness = False, f"pi0 {tk}"
        for a, b in itertools.product(dkeys, repeat=2):
            ta, tb = parse_key(dst, a), parse_key(dst, b)
            if posets.leq(dorder, ta, tb) and not posets.leq(sorder, iota(ta), iota(tb)):
                ok, witness = False, f"iota monotone {a}"
        for a, b in itertools.product(skeys, repeat=2):
            fa, fb = parse_key(src, a), parse_key(src, b)
            if posets.leq(sorder, fa, fb) and not posets.leq(
                dorder, ops.forget(skind, fa), ops.forget(skind, fb)
            ):
                ok, witness = False, f"pi monotone {a}"
        report.record(f"axioms/{dst}/pi0", n, ok, witness)

        # (piDelta1) allow(f) = allow(pi f); (piDelta2) pi commutes with splits
        ok = True
        witness = None
        for fk in skeys:
            f = parse_key(src, fk)
            t = ops.forget(skind, f)
            if ops.allow_single(skind, f) != ops.allow_single(dkind, t):
                ok, witness = False, f"piD1 {fk}"
            for i in ops.allow_single(skind, f):
                f1, f2 = ops.split_at(skind, f, i)
                t1, t2 = ops.split_at(dkind, t, i)
                if ops.forget(skind, f1) != t1 or ops.forget(skind, f2) != t2:
                    ok, witness = False, f"piD2 {fk} at {i}"
        report.record(f"axioms/{dst}/piDelta", n, ok, witness)

        # (piS1) GD(iota t) = GD(t); (piS2) pi(g/h) = pi(g)/pi(h)
        ok = True
        witness = None
        for tk in dkeys:
            t = parse_key(dst, tk)
            if ops.global_descents(dkind, t) != ops.global_descents(skind, iota(t)):
                ok, witness = False, f"piS1 {tk}"
        for i in range(1, n):
            for gk, hk in itertools.product(basis_keys(src, i), basis_keys(src, n - i)):
                g, h = parse_key(src, gk), parse_key(src, hk)
                if ops.forget(skind, ops.graft_over(skind, g, h)) != ops.graft_over(
                    dkind, ops.forget(skind, g), ops.forget(skind, h)
                ):
                    ok, witness = False, f"piS2 {gk}/{hk}"
                if ops.forget(skind, ops.graft_under(skind, g, h)) != ops.graft_under(
                    dkind, ops.forget(skind, g), ops.forget(skind, h)
                ):
                    ok, witness = False, f"piS2\\ {gk}\\{hk}"
        report.record(f"axioms/{dst}/piS", n, ok, witness)

    # (pim1)/(pim2): same shuffle descriptors, pi commutes with application
    ok = True
    witness = None
    for total in range(2, max_degree + 1):
        for a_deg in range(1, total):
            for fk, gk in itertools.product(basis_keys(src, a_deg), basis_keys(src, total - a_deg)):
                f, g = parse_key(src, fk), parse_key(src, gk)
                tf, tg = ops.forget(skind, f), ops.forget(skind, g)
                zs = ops.enumerate_shuffles(skind, [f, g])
                zd = ops.enumerate_shuffles(dkind, [tf, tg])
                if [z.stages for z in zs] != [z.stages for z in zd]:
                    ok, witness = False, f"pim1 {fk},{gk}"
                    continue
                for z in zs:
                    if ops.forget(skind, ops.apply_shuffle(skind, z, [f, g])) != ops.apply_shuffle(
                        dkind, z, [tf, tg]
                    ):
                        ok, witness = False, f"pim2 {fk},{gk}"
    report.record(f"axioms/{dst}/pim", max_degree, ok, witness)
    return report


def _axioms_transfer_parking(max_degree: int) -> Report:
    """pi-axioms for the two parking projections."""
    report = Report()
    for which, dst, proj, iota in (
        ("Pi_tree", "YSym", lambda f: f.tree, ops.iota_tree),
        ("Pi_perm", "SSym", lambda f: f.sigma, ops.iota_perm),
    ):
        dorder = ALGEBRA_ORDER[dst]
        ok = True
        witness = None
        for n in range(1, max_degree + 1):
            pfs = basis_keys("PSym", n)
            for tk in basis_keys(dst, n):
                t = parse_key(dst, tk)
                it = iota(t)
                fiber = [parse_key("PSym", fk) for fk in pfs if proj(parse_key("PSym", fk)) == t]
                if it not in fiber or not all(posets.leq("parking", f, it) for f in fiber):
                    ok, witness = False, f"pi0 {tk}"
            for a, b in itertools.product(basis_keys(dst, n), repeat=2):
                ta, tb = parse_key(dst, a), parse_key(dst, b)
                if posets.leq(dorder, ta, tb) and not posets.leq("parking", iota(ta), iota(tb)):
                    ok, witness = False, f"iota monotone {a}"
        report.record(f"axioms/PSym/{which}-pi0", max_degree, ok, witness)
    return report


def _subposet_closure(max_degree: int) -> Report:
    """Binary trees inside planar trees: the induced-subposet closure
    conditions making YSym-in-TSymB a Hopf subalgebra."""
    report = Report()
    from .combinat import is_binary

    ok = True
    witness = None
    for n in range(1, max_degree + 1):
        for t in enumerate_objects("pbt", n):
            for i in ops.allow_single("ptree", t) | {0, n}:
                a, b = ops.split_at("ptree", t, i)
                if not (is_binary(a) and is_binary(b)):
                    ok, witness = False, render("ptree", t)
        for a_deg in range(1, n):
            for s, t in itertools.product(
                enumerate_objects("pbt", a_deg), enumerate_objects("pbt", n - a_deg)
            ):
                if not is_binary(ops.graft_over("ptree", s, t)) or not is_binary(
                    ops.graft_under("ptree", s, t)
                ):
                    ok, witness = False, f"graft {render('ptree', s)}"
                for z in ops.enumerate_shuffles("ptree", [s, t]):
                    if not is_binary(ops.apply_shuffle("ptree", z, [s, t])):
                        ok, witness = False, f"shuffle {render('ptree', s)}"
        for s, t in itertools.product(enumerate_objects("pbt", n), repeat=2):
            j = posets.join("planar_tamari", s, t)
            if j is not None and not is_binary(j):
                ok, witness = False, f"join {render('ptree', s)}"
            if posets.leq("planar_tamari", s, t) != posets.leq("tamari", s, t):
                ok, witness = False, f"induced order {render('ptree', s)}"
    report.record("axioms/TSymB/subposet-binary", max_degree, ok, witness)
    return report


# ---------------------------------------------------------------------------
# suite runner

SUITES = (
    "counts",
    "hopf",
    "iso",
    "intervals",
    "monomials",
    "bidendriform",
    "morphisms",
    "galois",
    "axioms",
    "all",
)


def run_suite(suite: str, max_degree: int, jobs: int = 1) -> Report:
    if suite == "all":
        names = [s for s in SUITES if s != "all"]
    else:
        names = [suite]
    tasks = []
    for name in names:
        tasks.extend(_suite_tasks(name, max_degree))
    report = Report()
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            for sub in pool.map(lambda fn: fn(), tasks):
                report.extend(sub)
    else:
        for fn in tasks:
            report.extend(fn())
    report.entries.sort(key=lambda e: (e.check, e.degree))
    return report


def _suite_tasks(name: str, max_degree: int):
    tree_degree = max_degree + 1  # the tree families get one extra degree
    if name == "counts":
        return [lambda: verify_counts(max(max_degree, 5))]
    if name == "hopf":
        tasks = []
        for alg in ("YSym", "TSymA", "TSymB"):
            tasks.append(lambda a=alg: verify_hopf(a, tree_degree))
        for alg in ("SSym", "STSym", "PSym", "NCQSym_Q"):
            tasks.append(lambda a=alg: verify_hopf(a, max_degree))
        return tasks
    if name == "iso":
        return [lambda: verify_iso(tree_degree)]
    if name == "intervals":
        return [lambda: verify_intervals(min(max_degree, 3))]
    if name == "monomials":
        return [
            lambda: verify_monomials(
                max_degree,
                product_degree={"SSym": max_degree + 1, "YSym": max_degree + 1},
                antipode_degree={
                    "SSym": max_degree,
                    "PSym": max_degree,
                    "YSym": max_degree - 1,
                    "TSymB": max_degree - 1,
                    "STSym": max_degree - 1,
                },
            )
        ]
    if name == "bidendriform":
        return [lambda: verify_bidendriform(max_degree)]
    if name == "morphisms":
        return [lambda: verify_morphisms(max_degree)]
    if name == "galois":
        return [
            lambda: verify_galois(max_degree),
            lambda: verify_planar_weak(max_degree),
            lambda: verify_embedding(max_degree),
        ]
    if name == "axioms":
        return [lambda a=alg: verify_axioms(a, max_degree) for alg in ("SSym", "STSym", "PSym", "YSym", "TSymB")]
    raise ValueError(f"unknown suite {name!r}")
