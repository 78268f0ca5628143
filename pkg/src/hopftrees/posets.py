"""The six partial orders (Tamari, weak, planar Tamari, planar weak,
parking, expansion), with covers, comparisons, joins and meets, Moebius
values, intervals, connected components and DOT export.

Each (order, degree) builds a cached cover DAG with bitset transitive
closure; queries afterwards are read-only.
"""

from __future__ import annotations

import threading
import warnings
from dataclasses import dataclass, field
from . import ops
from .combinat import (
    ParkingFunction,
    PlanarTree,
    blocks_by_min,
    delrpt,
    enumerate_objects,
    inv_packed,
    nested_trace,
    pw,
    render,
    setpar,
    tree_descents,
    word_descents,
    word_inversions,
)
from .config import check_cap

ORDERS = ("tamari", "weak", "planar_tamari", "planar_weak", "parking", "expansion")

GROUND_KIND = {
    "tamari": "pbt",
    "weak": "perm",
    "planar_tamari": "ptree",
    "planar_weak": "pw",
    "parking": "pf",
    "expansion": "ptree",
}


# ---------------------------------------------------------------------------
# cover moves


def _rotations_planar(t: PlanarTree):
    """Planar left rotations anywhere in t (cover moves of planar Tamari)."""
    if t.is_leaf:
        return
    y = t.children[-1]
    if not y.is_leaf:
        head = t.children[:-1]
        grouped = PlanarTree(head + (y.children[0],))
        rest = y.children[1:]
        yield grouped if not rest else PlanarTree((grouped,) + rest)
    for j, c in enumerate(t.children):
        for rc in _rotations_planar(c):
            yield PlanarTree(t.children[:j] + (rc,) + t.children[j + 1 :])


def _expansion_moves(t: PlanarTree):
    """Group a prefix of children behind a new node (covers of the
    expansion order of the isomorphism proof)."""
    if t.is_leaf:
        return
    m = len(t.children)
    for j in range(2, m):
        yield PlanarTree((PlanarTree(t.children[:j]),) + t.children[j:])
    for j, c in enumerate(t.children):
        for rc in _expansion_moves(c):
            yield PlanarTree(t.children[:j] + (rc,) + t.children[j + 1 :])


def up_covers(order: str, x):
    """The elements covering x."""
    if order == "tamari" or order == "planar_tamari":
        return sorted(set(_rotations_planar(x)), key=lambda t: render("ptree", t))
    if order == "expansion":
        return sorted(set(_expansion_moves(x)), key=lambda t: render("ptree", t))
    if order == "weak":
        out = []
        pos = {v: i for i, v in enumerate(x)}
        for a in range(1, len(x)):
            if pos[a] < pos[a + 1]:
                out.append(tuple({a: a + 1, a + 1: a}.get(v, v) for v in x))
        return sorted(out)
    if order == "planar_weak":
        out = []
        inv = {}
        for i, v in enumerate(x, start=1):
            inv.setdefault(v, []).append(i)
        for a in range(1, max(x) if x else 0):
            if max(inv[a]) < min(inv[a + 1]):
                out.append(tuple({a: a + 1, a + 1: a}.get(v, v) for v in x))
        return sorted(out)
    if order == "parking":
        cache = poset(order, x.deg)
        i = cache.index[x]
        return [cache.elements[j] for j in cache.covers[i]]
    raise ValueError(order)


# ---------------------------------------------------------------------------
# poset cache


@dataclass
class PosetCache:
    order: str
    degree: int
    elements: tuple
    index: dict
    covers: list[list[int]]  # up-cover indices
    up: list[int] = field(default_factory=list)  # reachability bitsets
    down: list[int] = field(default_factory=list)
    mobius_memo: dict = field(default_factory=dict)

    def leq_idx(self, i: int, j: int) -> bool:
        return bool(self.up[i] >> j & 1)


_CACHE: dict[tuple[str, int], PosetCache] = {}
_LOCK = threading.Lock()


def poset(order: str, degree: int) -> PosetCache:
    key = (order, degree)
    with _LOCK:
        if key in _CACHE:
            return _CACHE[key]
    cache = _build(order, degree)
    with _LOCK:
        return _CACHE.setdefault(key, cache)


def _build(order: str, degree: int) -> PosetCache:
    kind = GROUND_KIND[order]
    check_cap(kind, degree)
    elements = tuple(enumerate_objects(kind, degree))
    index = {x: i for i, x in enumerate(elements)}
    n = len(elements)
    if order == "parking":
        covers = _parking_covers(elements, index, degree)
    else:
        covers = [[index[y] for y in up_covers(order, x)] for x in elements]
    up = [0] * n
    for i in _reverse_topo(covers, n):
        mask = 1 << i
        for j in covers[i]:
            mask |= up[j]
        up[i] = mask
    down = [0] * n
    for i in range(n):
        m = up[i]
        while m:
            j = (m & -m).bit_length() - 1
            down[j] |= 1 << i
            m &= m - 1
    return PosetCache(order, degree, elements, index, covers, up, down)


def _reverse_topo(covers: list[list[int]], n: int) -> list[int]:
    state = [0] * n
    order_out: list[int] = []

    def visit(i: int) -> None:
        stack = [(i, 0)]
        while stack:
            node, ptr = stack.pop()
            if ptr == 0:
                if state[node]:
                    continue
                state[node] = 1
            if ptr < len(covers[node]):
                stack.append((node, ptr + 1))
                nxt = covers[node][ptr]
                if not state[nxt]:
                    stack.append((nxt, 0))
            else:
                order_out.append(node)

    for i in range(n):
        visit(i)
    return order_out


def _parking_covers(elements, index, degree) -> list[list[int]]:
    tcache = poset("tamari", degree)
    wcache = poset("weak", degree)

    def leq_pf(f: ParkingFunction, g: ParkingFunction) -> bool:
        return tcache.leq_idx(tcache.index[f.tree], tcache.index[g.tree]) and wcache.leq_idx(
            wcache.index[f.sigma], wcache.index[g.sigma]
        )

    n = len(elements)
    ups = [[j for j in range(n) if i != j and leq_pf(elements[i], elements[j])] for i in range(n)]
    upsets = [set(u) for u in ups]
    covers: list[list[int]] = []
    for i in range(n):
        covers.append([j for j in ups[i] if not any(k in upsets[i] and j in upsets[k] for k in ups[i] if k != j)])
    return covers


# ---------------------------------------------------------------------------
# queries


def _parking_leq(f: ParkingFunction, g: ParkingFunction) -> bool:
    # componentwise; avoids materializing the much larger parking DAG
    t = poset("tamari", f.deg)
    w = poset("weak", f.deg)
    return t.leq_idx(t.index[f.tree], t.index[g.tree]) and w.leq_idx(
        w.index[f.sigma], w.index[g.sigma]
    )


def leq(order: str, x, y) -> bool:
    """x <= y; degree mismatch is an error, incomparability is just False."""
    dx = ops.degree(GROUND_KIND[order], x)
    dy = ops.degree(GROUND_KIND[order], y)
    if dx != dy:
        raise ValueError(f"degree mismatch {dx} != {dy}")
    if order == "parking":
        return _parking_leq(x, y)
    cache = poset(order, dx)
    return cache.leq_idx(cache.index[x], cache.index[y])


def leq_direct(order: str, x, y) -> bool:
    """Closed-form comparisons (no cover closure): inversion containment
    for the weak order, the setpar/nested-trace/inversion test for the
    planar weak order, coordinatewise for parking, section transport for
    the Tamari orders."""
    if order == "weak":
        return word_inversions(x) <= word_inversions(y)
    if order == "planar_weak":
        return (
            setpar(x) == setpar(y)
            and nested_trace(x) == nested_trace(y)
            and inv_packed(x) <= inv_packed(y)
        )
    if order == "parking":
        return leq_direct("tamari", x.tree, y.tree) and leq_direct("weak", x.sigma, y.sigma)
    if order == "tamari":
        return leq_direct("weak", ops.iota_binary(x), ops.iota_binary(y))
    if order == "planar_tamari":
        return leq_direct("planar_weak", ops.iota_gsp(x), ops.iota_gsp(y))
    if order == "expansion":
        return leq(order, x, y)
    raise ValueError(order)


def join(order: str, x, y):
    """Least upper bound, or None when the pair has none (different
    components, say).  Closed-form joins are checked against the poset."""
    brute = _brute_bound(order, x, y, up=True)
    formula = _formula_join(order, x, y)
    if formula is not None and brute != formula:
        raise AssertionError(f"join formula disagrees with poset for {x}, {y}")
    return brute


def meet(order: str, x, y):
    """Greatest lower bound or None; for planar Tamari only the brute-force
    bound is available (the quotient formula is join-only)."""
    if order == "planar_tamari":
        warnings.warn("planar Tamari meets are computed by brute force only", stacklevel=2)
    brute = _brute_bound(order, x, y, up=False)
    formula = _formula_meet(order, x, y)
    if formula is not None and brute != formula:
        raise AssertionError(f"meet formula disagrees with poset for {x}, {y}")
    return brute


def _brute_bound(order: str, x, y, up: bool):
    kind = GROUND_KIND[order]
    if order == "parking":
        le = _parking_leq if up else (lambda a, b: _parking_leq(b, a))
        common = [z for z in enumerate_objects("pf", x.deg) if le(x, z) and le(y, z)]
        best = [z for z in common if all(le(z, w) for w in common)]
        return best[0] if best else None
    cache = poset(order, ops.degree(kind, x))
    i, j = cache.index[x], cache.index[y]
    common = (cache.up[i] & cache.up[j]) if up else (cache.down[i] & cache.down[j])
    if not common:
        return None
    reach = cache.up if up else cache.down
    best = None
    m = common
    while m:
        k = (m & -m).bit_length() - 1
        if (reach[k] & common) == common:
            best = k
            break
        m &= m - 1
    return cache.elements[best] if best is not None else None


def _formula_join(order: str, x, y):
    if order == "weak":
        return ops.weak_join(x, y)
    if order == "tamari":
        return ops.tamari_join(x, y)
    if order == "planar_weak":
        if setpar(x) != setpar(y) or nested_trace(x) != nested_trace(y):
            return None
        return pw(blocks_by_min(x), ops.weak_join(delrpt(x), delrpt(y)))
    if order == "planar_tamari":
        u = _formula_join("planar_weak", ops.iota_gsp(x), ops.iota_gsp(y))
        return None if u is None else ops.forget("gsp", u)
    if order == "parking":
        return ParkingFunction(ops.weak_join(x.sigma, y.sigma), ops.tamari_join(x.tree, y.tree))
    return None


def _formula_meet(order: str, x, y):
    if order == "weak":
        return ops.weak_meet(x, y)
    if order == "planar_weak":
        if setpar(x) != setpar(y) or nested_trace(x) != nested_trace(y):
            return None
        return pw(blocks_by_min(x), ops.weak_meet(delrpt(x), delrpt(y)))
    if order == "parking":
        m_sigma = ops.weak_meet(x.sigma, y.sigma)
        m_tree = _brute_bound("tamari", x.tree, y.tree, up=False)
        try:
            return ParkingFunction(m_sigma, m_tree)
        except ValueError:
            return None
    return None


def mobius(order: str, x, y) -> int:
    """Moebius value mu(x, y); raises on incomparable input."""
    kind = GROUND_KIND[order]
    cache = poset(order, ops.degree(kind, x))
    i, j = cache.index[x], cache.index[y]
    if not cache.leq_idx(i, j):
        raise ValueError("mobius needs x <= y")
    return _mobius_idx(cache, i, j)


def _mobius_idx(cache: PosetCache, i: int, j: int) -> int:
    if i == j:
        return 1
    key = (i, j)
    if key in cache.mobius_memo:
        return cache.mobius_memo[key]
    total = 0
    m = cache.up[i] & cache.down[j]
    while m:
        k = (m & -m).bit_length() - 1
        if k != j:
            total -= _mobius_idx(cache, i, k)
        m &= m - 1
    cache.mobius_memo[key] = total
    return total


def _parking_box(x: ParkingFunction, y: ParkingFunction) -> list[ParkingFunction]:
    out = []
    perms = interval("weak", x.sigma, y.sigma)
    for t in interval("tamari", x.tree, y.tree):
        dt = tree_descents(t)
        out.extend(ParkingFunction(s, t) for s in perms if dt <= word_descents(s))
    return sorted(out, key=lambda f: render("pf", f))


def interval(order: str, x, y) -> list:
    """All z with x <= z <= y in canonical order; empty when incomparable."""
    kind = GROUND_KIND[order]
    if order == "parking":
        return _parking_box(x, y)
    cache = poset(order, ops.degree(kind, x))
    i, j = cache.index[x], cache.index[y]
    out = []
    m = cache.up[i] & cache.down[j]
    while m:
        k = (m & -m).bit_length() - 1
        out.append(cache.elements[k])
        m &= m - 1
    return out


def upset(order: str, x) -> list:
    kind = GROUND_KIND[order]
    if order == "parking":
        return [z for z in enumerate_objects("pf", x.deg) if _parking_leq(x, z)]
    cache = poset(order, ops.degree(kind, x))
    m = cache.up[cache.index[x]]
    out = []
    while m:
        k = (m & -m).bit_length() - 1
        out.append(cache.elements[k])
        m &= m - 1
    return out


def components(order: str, degree: int) -> list[list]:
    """Connected components of the comparability graph, canonically sorted."""
    cache = poset(order, degree)
    n = len(cache.elements)
    parent = list(range(n))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(n):
        for j in cache.covers[i]:
            parent[find(i)] = find(j)
    groups: dict[int, list] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(cache.elements[i])
    kind = GROUND_KIND[order]
    comps = [sorted(g, key=lambda x: render(kind, x)) for g in groups.values()]
    return sorted(comps, key=lambda g: render(kind, g[0]))


def component_of(order: str, x) -> list:
    for comp in components(order, ops.degree(GROUND_KIND[order], x)):
        if x in comp:
            return comp
    raise AssertionError("element missing from its ground set")


def hasse_dot(order: str, degree: int) -> str:
    """Deterministic DOT digraph of the cover relation."""
    cache = poset(order, degree)
    kind = GROUND_KIND[order]
    lines = [f'digraph "{order}_{degree}" {{']
    for x in cache.elements:
        lines.append(f'  "{render(kind, x)}";')
    for i, x in enumerate(cache.elements):
        for j in sorted(cache.covers[i]):
            lines.append(f'  "{render(kind, x)}" -> "{render(kind, cache.elements[j])}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def cover_count(order: str, degree: int) -> int:
    cache = poset(order, degree)
    return sum(len(c) for c in cache.covers)
