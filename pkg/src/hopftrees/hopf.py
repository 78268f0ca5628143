"""Exact linear algebra over the basis-indexed free modules: the seven
algebras, their products, coproducts, antipodes, basis changes, dual
products, monomial-coefficient searches, bidendriform splittings and
morphisms.

Elements store integer coefficients on canonical-text keys; everything is
exact and deterministic.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache

from . import ops, posets
from .combinat import (
    SetComposition,
    Word,
    enumerate_objects,
    parse,
    render,
    word_inverse,
)

ALGEBRA_KIND = {
    "YSym": "pbt",
    "SSym": "perm",
    "TSymA": "ptree",
    "TSymB": "ptree",
    "STSym": "gsp",
    "PSym": "pf",
    "NCQSym_Q": "setcomp",
}

ALGEBRA_ORDER = {
    "YSym": "tamari",
    "SSym": "weak",
    "TSymA": None,
    "TSymB": "planar_tamari",
    "STSym": "planar_weak",
    "PSym": "parking",
    "NCQSym_Q": None,
}

# TSymA uses every lightning splitting; all the others restrict to the
# allowable ones (for binary trees, permutations and parking functions the
# two notions coincide).
ALLOWABLE_ONLY = {name: name != "TSymA" for name in ALGEBRA_KIND}

BASES = {
    "YSym": ("F", "M", "Fdual"),
    "SSym": ("F", "M", "Fdual"),
    "TSymA": ("F",),
    "TSymB": ("F", "M", "H", "Fdual"),
    "STSym": ("F", "M", "Fdual"),
    "PSym": ("F", "M", "Fdual"),
    "NCQSym_Q": ("Q",),
}


class BasisError(ValueError):
    pass


@dataclass
class Element:
    """Finite integer-coefficient sum over canonical-text basis keys."""

    algebra: str
    basis: str
    terms: dict[str, int] = field(default_factory=dict)

    def __post_init__(self):
        self.terms = {k: c for k, c in self.terms.items() if c}

    def __add__(self, other: "Element") -> "Element":
        assert (self.algebra, self.basis) == (other.algebra, other.basis)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return Element(self.algebra, self.basis, out)

    def __sub__(self, other: "Element") -> "Element":
        return self + other.scale(-1)

    def scale(self, c: int) -> "Element":
        return Element(self.algebra, self.basis, {k: c * v for k, v in self.terms.items()})

    def coefficient(self, key: str) -> int:
        return self.terms.get(key, 0)

    def to_json(self) -> dict:
        return {
            "algebra": self.algebra,
            "basis": self.basis,
            "terms": [{"coef": c, "key": k} for k, c in sorted(self.terms.items())],
        }


@dataclass
class TensorElement:
    algebra: str
    basis: str
    terms: dict[tuple[str, ...], int] = field(default_factory=dict)

    def __post_init__(self):
        self.terms = {k: c for k, c in self.terms.items() if c}

    def __add__(self, other: "TensorElement") -> "TensorElement":
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return TensorElement(self.algebra, self.basis, out)

    def scale(self, c: int) -> "TensorElement":
        return TensorElement(self.algebra, self.basis, {k: c * v for k, v in self.terms.items()})

    def to_json(self) -> dict:
        return {
            "algebra": self.algebra,
            "basis": self.basis,
            "terms": [{"coef": c, "key": list(k)} for k, c in sorted(self.terms.items())],
        }


def basis_element(alg: str, basis: str, key: str) -> Element:
    if basis not in BASES[alg]:
        raise BasisError(f"basis {basis} undefined for {alg}")
    obj = parse_key(alg, key)  # validates
    return Element(alg, basis, {render(ALGEBRA_KIND[alg], obj): 1})


@lru_cache(maxsize=None)
def parse_key(alg: str, key: str):
    return parse(ALGEBRA_KIND[alg], key)


def key_of(alg: str, obj) -> str:
    return render(ALGEBRA_KIND[alg], obj)


def unit_key(alg: str) -> str:
    kind = ALGEBRA_KIND[alg]
    return {"ptree": "L", "pbt": "L", "pf": "|L", "perm": "", "gsp": "", "pw": "", "setcomp": ""}[kind]


def unit(alg: str, basis: str = "F") -> Element:
    if alg == "NCQSym_Q":
        basis = "Q"
    return Element(alg, basis, {unit_key(alg): 1})


def degree_of_key(alg: str, key: str) -> int:
    if alg == "NCQSym_Q":
        return sum(len(b) for b in parse_key(alg, key))
    return ops.degree(ALGEBRA_KIND[alg], parse_key(alg, key))


def counit(x: Element) -> int:
    return x.coefficient(unit_key(x.algebra))


def basis_keys(alg: str, degree: int) -> list[str]:
    kind = ALGEBRA_KIND[alg]
    return [render(kind, o) for o in enumerate_objects(kind, degree)]


# ---------------------------------------------------------------------------
# fundamental product / coproduct


@lru_cache(maxsize=None)
def _product_keys(alg: str, xk: str, yk: str) -> tuple[tuple[str, int], ...]:
    if alg == "NCQSym_Q":
        return _ncqsym_product_keys(xk, yk)
    kind = ALGEBRA_KIND[alg]
    x, y = parse_key(alg, xk), parse_key(alg, yk)
    out: dict[str, int] = {}
    for z in ops.enumerate_shuffles(kind, [x, y], allowable=ALLOWABLE_ONLY[alg]):
        key = render(kind, ops.apply_shuffle(kind, z, [x, y], allowable=ALLOWABLE_ONLY[alg]))
        out[key] = out.get(key, 0) + 1
    return tuple(sorted(out.items()))


def product(alg: str, x: Element, y: Element) -> Element:
    """Bilinear extension of the fundamental (or Q) product."""
    basis = "Q" if alg == "NCQSym_Q" else "F"
    if x.basis != basis or y.basis != basis:
        raise BasisError(f"product needs the {basis} basis")
    out: dict[str, int] = {}
    for xk, cx in x.terms.items():
        for yk, cy in y.terms.items():
            for key, mult in _product_keys(alg, xk, yk):
                out[key] = out.get(key, 0) + cx * cy * mult
    return Element(alg, basis, out)


@lru_cache(maxsize=None)
def _coproduct_keys(alg: str, xk: str) -> tuple[tuple[tuple[str, str], int], ...]:
    if alg == "NCQSym_Q":
        return _ncqsym_coproduct_keys(xk)
    kind = ALGEBRA_KIND[alg]
    x = parse_key(alg, xk)
    n = ops.degree(kind, x)
    positions = range(n + 1) if not ALLOWABLE_ONLY[alg] else sorted(
        {0, n} | set(ops.allow_single(kind, x))
    )
    out: dict[tuple[str, str], int] = {}
    for i in positions:
        a, b = ops.split_at(kind, x, i)
        key = (render(kind, a), render(kind, b))
        out[key] = out.get(key, 0) + 1
    return tuple(sorted(out.items()))


def coproduct(alg: str, x: Element) -> TensorElement:
    basis = "Q" if alg == "NCQSym_Q" else "F"
    if x.basis != basis:
        raise BasisError(f"coproduct needs the {basis} basis")
    out: dict[tuple[str, ...], int] = {}
    for xk, c in x.terms.items():
        for key, mult in _coproduct_keys(alg, xk):
            out[key] = out.get(key, 0) + c * mult
    return TensorElement(alg, basis, out)


def coproduct_plus(alg: str, x: Element) -> TensorElement:
    """Reduced coproduct: drop the two degree-0-sided terms."""
    full = coproduct(alg, x)
    e = unit_key(alg)
    return TensorElement(
        alg, full.basis, {k: c for k, c in full.terms.items() if k[0] != e and k[1] != e}
    )


def iterated_coproduct_plus(alg: str, xk: str, k: int) -> dict[tuple[str, ...], int]:
    """Terms of the k-fold reduced coproduct of one basis key, expanding
    the last tensor slot at each step."""
    if k == 1:
        return {(xk,): 1}
    out: dict[tuple[str, ...], int] = {}
    for prev, c in iterated_coproduct_plus(alg, xk, k - 1).items():
        head, last = prev[:-1], prev[-1]
        for (a, b), mult in _coproduct_keys(alg, last):
            if degree_of_key(alg, a) == 0 or degree_of_key(alg, b) == 0:
                continue
            key = head + (a, b)
            out[key] = out.get(key, 0) + c * mult
    return out


# ---------------------------------------------------------------------------
# NCQSym in the Q basis (set-composition keys)


def _shift_blocks(blocks: SetComposition, by: int) -> SetComposition:
    return tuple(tuple(x + by for x in b) for b in blocks)


def _std_blocks(blocks: SetComposition) -> SetComposition:
    ground = sorted(x for b in blocks for x in b)
    rank = {v: i + 1 for i, v in enumerate(ground)}
    return tuple(tuple(rank[x] for x in b) for b in blocks)


def _ncqsym_product_keys(xk: str, yk: str) -> tuple[tuple[str, int], ...]:
    b1 = parse_key("NCQSym_Q", xk)
    b2 = _shift_blocks(parse_key("NCQSym_Q", yk), sum(len(b) for b in parse_key("NCQSym_Q", xk)))
    out: dict[str, int] = {}
    k, l = len(b1), len(b2)
    for mask in itertools.combinations(range(k + l), k):
        first = iter(b1)
        second = iter(b2)
        blocks = tuple(next(first) if i in mask else next(second) for i in range(k + l))
        key = render("setcomp", blocks)
        out[key] = out.get(key, 0) + 1
    return tuple(sorted(out.items()))


def _ncqsym_coproduct_keys(xk: str) -> tuple[tuple[tuple[str, str], int], ...]:
    blocks = parse_key("NCQSym_Q", xk)
    out: dict[tuple[str, str], int] = {}
    for i in range(len(blocks) + 1):
        key = (render("setcomp", _std_blocks(blocks[:i])), render("setcomp", _std_blocks(blocks[i:])))
        out[key] = out.get(key, 0) + 1
    return tuple(sorted(out.items()))


# ---------------------------------------------------------------------------
# antipode (Takeuchi)


@lru_cache(maxsize=None)
def _antipode_key(alg: str, xk: str) -> tuple[tuple[str, int], ...]:
    basis = "Q" if alg == "NCQSym_Q" else "F"
    n = degree_of_key(alg, xk)
    if n == 0:
        return ((xk, 1),)
    acc = Element(alg, basis, {})
    for k in range(1, n + 1):
        sign = -1 if k % 2 else 1  # (-1)^k
        for keys, c in iterated_coproduct_plus(alg, xk, k).items():
            prod = Element(alg, basis, {keys[0]: 1})
            for kk in keys[1:]:
                prod = product(alg, prod, Element(alg, basis, {kk: 1}))
            acc = acc + prod.scale(sign * c)
    return tuple(sorted(acc.terms.items()))


def antipode(alg: str, x: Element) -> Element:
    """Takeuchi's alternating sum over iterated reduced coproducts."""
    basis = "Q" if alg == "NCQSym_Q" else "F"
    if x.basis == basis:
        out: dict[str, int] = {}
        for xk, c in x.terms.items():
            for k, v in _antipode_key(alg, xk):
                out[k] = out.get(k, 0) + c * v
        return Element(alg, basis, out)
    # other bases: conjugate through F
    back = change_basis(alg, x.basis, basis, x)
    return change_basis(alg, basis, x.basis, antipode(alg, back))


# ---------------------------------------------------------------------------
# orders on algebra ground sets, monomial and H bases


def alg_leq(alg: str, xk: str, yk: str) -> bool:
    order = ALGEBRA_ORDER[alg]
    if order is None:
        raise BasisError(f"{alg} has no underlying order")
    return posets.leq(order, parse_key(alg, xk), parse_key(alg, yk))


@lru_cache(maxsize=None)
def alg_upset(alg: str, xk: str) -> tuple[str, ...]:
    """Keys >= xk inside the algebra's own ground set (the induced
    subposet for STSym)."""
    n = degree_of_key(alg, xk)
    return tuple(yk for yk in basis_keys(alg, n) if alg_leq(alg, xk, yk))


@lru_cache(maxsize=None)
def _alg_mobius(alg: str, xk: str, yk: str) -> int:
    if xk == yk:
        return 1
    total = 0
    for zk in alg_upset(alg, xk):
        if zk != yk and alg_leq(alg, zk, yk):
            total -= _alg_mobius(alg, xk, zk)
    return total


@lru_cache(maxsize=None)
def _expansion_upset(tk: str) -> tuple[str, ...]:
    t = parse_key("TSymB", tk)
    return tuple(render("ptree", s) for s in posets.upset("expansion", t))


def change_basis(alg: str, frm: str, to: str, x: Element) -> Element:
    """Invertible triangular basis changes F <-> M (algebra order) and
    F <-> H (expansion order, TSymB only)."""
    for b in (frm, to):
        if b not in BASES[alg]:
            raise BasisError(f"basis {b} undefined for {alg}")
    if x.basis != frm:
        raise BasisError(f"element is in basis {x.basis}, not {frm}")
    if frm == to:
        return Element(alg, to, dict(x.terms))
    out: dict[str, int] = {}
    for key, c in x.terms.items():
        for k2, c2 in _basis_column(alg, frm, to, key):
            out[k2] = out.get(k2, 0) + c * c2
    return Element(alg, to, out)


@lru_cache(maxsize=None)
def _basis_column(alg: str, frm: str, to: str, key: str) -> tuple[tuple[str, int], ...]:
    if "Fdual" in (frm, to) or "Q" in (frm, to):
        raise BasisError(f"no triangular basis change between {frm} and {to}")
    if frm == "M" and to == "F":
        return tuple((yk, _alg_mobius(alg, key, yk)) for yk in alg_upset(alg, key))
    if frm == "F" and to == "M":
        return tuple((yk, 1) for yk in alg_upset(alg, key))
    if alg == "TSymB" and frm == "H" and to == "F":
        return tuple((yk, 1) for yk in _expansion_upset(key))
    if alg == "TSymB" and frm == "F" and to == "H":
        t = parse_key("TSymB", key)
        return tuple(
            (render("ptree", s), posets.mobius("expansion", t, s))
            for s in posets.upset("expansion", t)
        )
    # route through F
    via_f = dict(_basis_column(alg, frm, "F", key)) if frm != "F" else {key: 1}
    out: dict[str, int] = {}
    for fk, c in via_f.items():
        for k2, c2 in _basis_column(alg, "F", to, fk):
            out[k2] = out.get(k2, 0) + c * c2
    return tuple(sorted((k, c) for k, c in out.items() if c))


# ---------------------------------------------------------------------------
# dual products and coproducts


def dual_product(alg: str, x: Element, y: Element) -> Element:
    """Product in the graded dual, computed both as the transpose of the
    coproduct and as the interval sum [x\\y, x/y]; a mismatch raises."""
    if x.basis != "Fdual" or y.basis != "Fdual":
        raise BasisError("dual_product needs the Fdual basis")
    out: dict[str, int] = {}
    for xk, cx in x.terms.items():
        for yk, cy in y.terms.items():
            for wk, c in _dual_product_keys(alg, xk, yk):
                out[wk] = out.get(wk, 0) + cx * cy * c
    return Element(alg, "Fdual", out)


@lru_cache(maxsize=None)
def _coproduct_transpose(alg: str, n: int) -> dict[tuple[str, str], dict[str, int]]:
    """Bucket the degree-n coproduct structure constants by tensor key."""
    out: dict[tuple[str, str], dict[str, int]] = {}
    for wk in basis_keys(alg, n):
        for pair, mult in _coproduct_keys(alg, wk):
            out.setdefault(pair, {})[wk] = out.get(pair, {}).get(wk, 0) + mult
    return out


@lru_cache(maxsize=None)
def _dual_product_keys(alg: str, xk: str, yk: str) -> tuple[tuple[str, int], ...]:
    n = degree_of_key(alg, xk) + degree_of_key(alg, yk)
    transpose = dict(_coproduct_transpose(alg, n).get((xk, yk), {}))
    order = ALGEBRA_ORDER[alg]
    if order is not None:
        kind = ALGEBRA_KIND[alg]
        x, y = parse_key(alg, xk), parse_key(alg, yk)
        lo = ops.graft_under(kind, x, y)
        hi = ops.graft_over(kind, x, y)
        ground = set(basis_keys(alg, n))
        via_interval = sorted(
            render(kind, w) for w in posets.interval(order, lo, hi) if render(kind, w) in ground
        )
        if sorted(transpose) != via_interval or any(c != 1 for c in transpose.values()):
            raise AssertionError(
                f"dual product of {xk}, {yk} in {alg}: transpose {sorted(transpose)} "
                f"!= interval {via_interval}"
            )
    return tuple(sorted(transpose.items()))


def dual_coproduct(alg: str, x: Element) -> TensorElement:
    """Coproduct in the graded dual: transpose of the product."""
    if x.basis != "Fdual":
        raise BasisError("dual_coproduct needs the Fdual basis")
    out: dict[tuple[str, ...], int] = {}
    for xk, c in x.terms.items():
        n = degree_of_key(alg, xk)
        for i in range(n + 1):
            for ak in basis_keys(alg, i):
                for bk in basis_keys(alg, n - i):
                    mult = dict(_product_keys(alg, ak, bk)).get(xk, 0)
                    if mult:
                        key = (ak, bk)
                        out[key] = out.get(key, 0) + c * mult
    return TensorElement(alg, "Fdual", out)


# ---------------------------------------------------------------------------
# monomial formulas


def monomial_coproduct(alg: str, xk: str) -> TensorElement:
    """Reduced coproduct of M_f: deconcatenation at global descents."""
    kind = ALGEBRA_KIND[alg]
    x = parse_key(alg, xk)
    out: dict[tuple[str, ...], int] = {}
    for i in sorted(ops.global_descents(kind, x)):
        a, b = ops.split_at(kind, x, i)
        out[(render(kind, a), render(kind, b))] = 1
    return TensorElement(alg, "M", out)


def gd_blocks(alg: str, xk: str) -> list[str]:
    """The splitting of a key at all of its global descents."""
    kind = ALGEBRA_KIND[alg]
    x = parse_key(alg, xk)
    gd = sorted(ops.global_descents(kind, x))
    return [render(kind, p) for p in ops.multi_split(kind, x, gd)]


def monomial_product_coeff(alg: str, fk: str, gk: str, hk: str) -> int:
    """alpha: shuffles whose image is <= h and maximal in (f, g)."""
    kind = ALGEBRA_KIND[alg]
    f, g, h = parse_key(alg, fk), parse_key(alg, gk), parse_key(alg, hk)
    ups_f = [parse_key(alg, k) for k in alg_upset(alg, fk)]
    ups_g = [parse_key(alg, k) for k in alg_upset(alg, gk)]
    order = ALGEBRA_ORDER[alg]
    count = 0
    for z in ops.enumerate_shuffles(kind, [f, g]):
        if not posets.leq(order, ops.apply_shuffle(kind, z, [f, g]), h):
            continue
        ok = True
        for f2, g2 in itertools.product(ups_f, ups_g):
            if (f2, g2) == (f, g):
                continue
            if posets.leq(order, ops.apply_shuffle(kind, z, [f2, g2]), h):
                ok = False
                break
        if ok:
            count += 1
    return count


def monomial_antipode_row(alg: str, fk: str) -> dict[str, int]:
    """beta_f^h for all h: shuffles of the global-descent splitting whose
    image is <= h, maximal in f, and minimal in the descent set."""
    kind = ALGEBRA_KIND[alg]
    order = ALGEBRA_ORDER[alg]
    f = parse_key(alg, fk)
    n = ops.degree(kind, f)
    gd = sorted(ops.global_descents(kind, f))
    blocks = ops.multi_split(kind, f, gd)
    ups = [parse_key(alg, k) for k in alg_upset(alg, fk) if k != fk]
    rows: dict[str, int] = {}
    shuffles = ops.enumerate_shuffles(kind, list(blocks))
    evals = []
    for z in shuffles:
        e = ops.apply_shuffle(kind, z, list(blocks))
        dominated = [ops.apply_shuffle(kind, z, list(ops.multi_split(kind, f2, gd))) for f2 in ups]
        gap_evals = []
        for gap in range(1, len(blocks)):
            merged = ops.factor_through(kind, z, list(blocks), gap)
            if merged is None:
                continue
            over = ops.graft_over(kind, blocks[gap - 1], blocks[gap])
            new_blocks = list(blocks)
            new_blocks[gap - 1 : gap + 1] = [over]
            gap_evals.append(ops.apply_shuffle(kind, merged, new_blocks))
        evals.append((e, dominated, gap_evals))
    for hk in basis_keys(alg, n):
        h = parse_key(alg, hk)
        beta = 0
        for e, dominated, gap_evals in evals:
            if not posets.leq(order, e, h):
                continue
            if any(posets.leq(order, d, h) for d in dominated):
                continue
            if any(posets.leq(order, ge, h) for ge in gap_evals):
                continue
            beta += 1
        if beta:
            rows[hk] = beta
    return rows


def monomial_antipode_coeff(alg: str, fk: str, hk: str) -> int:
    return monomial_antipode_row(alg, fk).get(hk, 0)


# ---------------------------------------------------------------------------
# bidendriform operations


def dendriform(alg: str, which: str, x: Element, y: Element | None = None):
    """Half-products << and >> (by the origin of the last letter) and
    half-coproducts dll and dgg (by the side holding the largest letter)."""
    if alg not in ("STSym", "PSym"):
        raise BasisError("bidendriform structure lives on STSym and PSym")
    if which in ("<<", ">>"):
        assert y is not None
        out: dict[str, int] = {}
        for xk, cx in x.terms.items():
            for yk, cy in y.terms.items():
                for wk, mult in _product_keys(alg, xk, yk):
                    if _last_from_left(alg, wk, xk) == (which == "<<"):
                        out[wk] = out.get(wk, 0) + cx * cy * mult
        return Element(alg, "F", out)
    if which in ("dll", "dgg"):
        out2: dict[tuple[str, ...], int] = {}
        for xk, c in x.terms.items():
            n = degree_of_key(alg, xk)
            for (a, b), mult in _coproduct_keys(alg, xk):
                if degree_of_key(alg, a) == 0 or degree_of_key(alg, b) == 0:
                    continue
                left = _max_in_left(alg, xk, degree_of_key(alg, a))
                if left == (which == "dll"):
                    out2[(a, b)] = out2.get((a, b), 0) + c * mult
        return TensorElement(alg, "F", out2)
    raise ValueError(which)


def _word_of(alg: str, key: str) -> Word:
    obj = parse_key(alg, key)
    return obj.sigma if alg == "PSym" else obj


def _last_from_left(alg: str, wk: str, xk: str) -> bool:
    w = _word_of(alg, wk)
    bound = degree_of_key(alg, xk) if alg == "PSym" else ops.internal_degree("gsp", _word_of(alg, xk))
    return w[-1] <= bound


def _max_in_left(alg: str, xk: str, i: int) -> bool:
    w = _word_of(alg, xk)
    return w.index(max(w)) + 1 <= i


# ---------------------------------------------------------------------------
# morphisms

MORPHISMS = ("Pi", "Pi_ptree", "Pi_tree", "Pi_perm", "embed")


def morphism_key(which: str, key: str) -> str:
    if which == "Pi":
        return render("pbt", ops.forget("perm", parse_key("SSym", key)))
    if which == "Pi_ptree":
        return render("ptree", ops.forget("gsp", parse_key("STSym", key)))
    if which == "Pi_tree":
        return render("pbt", parse_key("PSym", key).tree)
    if which == "Pi_perm":
        return render("perm", parse_key("PSym", key).sigma)
    if which == "embed":
        return render("setcomp", word_inverse(parse_key("STSym", key)))
    raise ValueError(which)


MORPHISM_SIGNATURE = {
    "Pi": ("SSym", "YSym", "F"),
    "Pi_ptree": ("STSym", "TSymB", "F"),
    "Pi_tree": ("PSym", "YSym", "F"),
    "Pi_perm": ("PSym", "SSym", "F"),
    "embed": ("STSym", "NCQSym_Q", "Fdual"),
}


def morphism(which: str, x: Element) -> Element:
    src, dst, src_basis = MORPHISM_SIGNATURE[which]
    if x.algebra != src:
        raise BasisError(f"{which} starts from {src}")
    if x.basis == src_basis:
        out: dict[str, int] = {}
        for k, c in x.terms.items():
            k2 = morphism_key(which, k)
            out[k2] = out.get(k2, 0) + c
        dst_basis = "Q" if dst == "NCQSym_Q" else ("Fdual" if src_basis == "Fdual" else "F")
        return Element(dst, dst_basis, out)
    if x.basis == "M" and which in ("Pi", "Pi_ptree", "Pi_tree", "Pi_perm"):
        in_f = change_basis(src, "M", "F", x)
        mapped = morphism(which, in_f)
        return change_basis(dst, "F", "M", mapped)
    raise BasisError(f"{which} undefined on basis {x.basis}")
