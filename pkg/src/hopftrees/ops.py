"""Structural operations underlying the Hopf algebras: lightning splits,
grafts, shuffle grafts, standardization, forgetful and section maps, and
provenance-tracked shuffles.

Objects move through these functions in one of four carrier forms, keyed by
the family name:

* ``ptree`` / ``pbt``  -- :class:`~hopftrees.combinat.PlanarTree`
* ``perm`` / ``gsp`` / ``pw`` -- packed words as int tuples
* ``pf`` -- :class:`~hopftrees.combinat.ParkingFunction`

A tree of degree n has n *regions* (the gaps between consecutive leaves,
equivalently the label slots read left to right); for word families the
regions are the letter positions.  Splits cut the region sequence
contiguously and shuffle grafts interleave it, which is what makes the
provenance bookkeeping uniform across families.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .combinat import (
    LEAF,
    InvariantError,
    LabeledTree,
    ParkingFunction,
    PlanarTree,
    Word,
    binary_trees,
    is_binary,
    labeled_of_word,
    pack,
    tree_descents,
    word_descents,
    word_inverse,
    word_inversions,
    word_of_labeled,
)

WORD_KINDS = ("perm", "gsp", "pw")


def degree(kind: str, x) -> int:
    if kind in ("ptree", "pbt"):
        return x.deg
    if kind in WORD_KINDS:
        return len(x)
    if kind == "pf":
        return x.deg
    raise ValueError(kind)


def internal_degree(kind: str, x) -> int:
    """ideg: internal nodes / distinct letters; equals degree for perm and pf."""
    if kind in ("ptree", "pbt"):
        return x.ideg
    if kind in WORD_KINDS:
        return max(x) if x else 0
    if kind == "pf":
        return x.deg
    raise ValueError(kind)


# ---------------------------------------------------------------------------
# splitting


def split_tree(t: PlanarTree, i: int) -> tuple[PlanarTree, PlanarTree]:
    """Lightning split at the (i+1)-th leaf: left keeps leaves 1..i+1, right
    keeps leaves i+1..; single-child copies along the path are contracted."""
    if not 0 <= i <= t.deg:
        raise ValueError(f"split position {i} out of range 0..{t.deg}")
    if t.is_leaf:
        return LEAF, LEAF
    acc = 0
    for j, c in enumerate(t.children):
        if acc + c.leaves >= i + 1:
            local = i - acc  # split degree within child j
            cl, cr = split_tree(c, local)
            left = cl if j == 0 else PlanarTree(t.children[:j] + (cl,))
            right = cr if j == len(t.children) - 1 else PlanarTree((cr,) + t.children[j + 1 :])
            return left, right
        acc += c.leaves
    raise AssertionError("unreachable")


def split_at(kind: str, x, i: int, std: bool = True):
    """Split into (left, right); word and parking parts are standardized
    unless ``std`` is false (shuffle application needs raw slices).  Word
    splits demand an allowable position: labels transfer only then."""
    if kind in ("ptree", "pbt"):
        return split_tree(x, i)
    if kind in WORD_KINDS:
        a, b = x[:i], x[i:]
        if set(a) & set(b):
            raise InvariantError("allowable", f"letters span the cut of {x} at {i}")
        return (pack(a), pack(b)) if std else (a, b)
    if kind == "pf":
        (sa, sb) = (x.sigma[:i], x.sigma[i:])
        ta, tb = split_tree(x.tree, i)
        if std:
            return ParkingFunction(pack(sa), ta), ParkingFunction(pack(sb), tb)
        return (sa, ta), (sb, tb)
    raise ValueError(kind)


def allow_single(kind: str, x) -> frozenset[int]:
    """Positions i in 1..n-1 where the two-part split is allowable
    (conserves internal degree / splits no letter)."""
    n = degree(kind, x)
    if kind in ("ptree", "pbt"):
        return frozenset(i for i in range(1, n) if _tree_split_allowable(x, i))
    if kind in WORD_KINDS:
        blocked: set[int] = set()
        for block in word_inverse(x):
            for i in range(min(block), max(block)):
                blocked.add(i)
        return frozenset(i for i in range(1, n) if i not in blocked)
    if kind == "pf":
        return frozenset(range(1, n))
    raise ValueError(kind)


def _tree_split_allowable(t: PlanarTree, i: int) -> bool:
    a, b = split_tree(t, i)
    return a.ideg + b.ideg == t.ideg


def is_allowable(kind: str, x, positions) -> bool:
    """A multiset of split positions is allowable iff the multi-split
    conserves internal degree."""
    if kind in ("ptree", "pbt"):
        parts = multi_split(kind, x, positions)
        return sum(p.ideg for p in parts) == x.ideg
    n = degree(kind, x)
    allowed = allow_single(kind, x)
    return all(p in allowed or p in (0, n) for p in positions)


def multi_split(kind: str, x, positions, std: bool = True):
    """Split at a sorted multiset of positions; part p spans the regions
    between consecutive positions."""
    pos = sorted(positions)
    if kind in WORD_KINDS:
        bounds = [0] + pos + [len(x)]
        parts = tuple(x[bounds[p] : bounds[p + 1]] for p in range(len(bounds) - 1))
        return tuple(pack(p) for p in parts) if std else parts
    if kind in ("ptree", "pbt"):
        parts = []
        rest, prev = x, 0
        for p in pos:
            left, rest = split_tree(rest, p - prev)
            parts.append(left)
            prev = p
        parts.append(rest)
        return tuple(parts)
    if kind == "pf":
        words = multi_split("perm", x.sigma, positions, std=std)
        trees = multi_split("pbt", x.tree, positions)
        if std:
            return tuple(ParkingFunction(w, t) for w, t in zip(words, trees))
        return tuple(zip(words, trees))
    raise ValueError(kind)


# ---------------------------------------------------------------------------
# grafting


def graft_over(kind: str, x, y):
    """x/y: identify the root of x (labels shifted up by ideg y) with the
    left-most leaf of y."""
    if kind in ("ptree", "pbt"):
        return _tree_over(x, y)
    if kind in WORD_KINDS:
        s = internal_degree(kind, y)
        return tuple(v + s for v in x) + y
    if kind == "pf":
        s = y.deg
        return ParkingFunction(tuple(v + s for v in x.sigma) + y.sigma, _tree_over(x.tree, y.tree))
    raise ValueError(kind)


def graft_under(kind: str, x, y):
    """x\\y: identify the root of y (labels shifted up by ideg x) with the
    right-most leaf of x."""
    if kind in ("ptree", "pbt"):
        return _tree_under(x, y)
    if kind in WORD_KINDS:
        s = internal_degree(kind, x)
        return x + tuple(v + s for v in y)
    if kind == "pf":
        s = x.deg
        return ParkingFunction(x.sigma + tuple(v + s for v in y.sigma), _tree_under(x.tree, y.tree))
    raise ValueError(kind)


def _tree_over(s: PlanarTree, t: PlanarTree) -> PlanarTree:
    if t.is_leaf:
        return s
    return PlanarTree((_tree_over(s, t.children[0]),) + t.children[1:])


def _tree_under(s: PlanarTree, t: PlanarTree) -> PlanarTree:
    if s.is_leaf:
        return t
    return PlanarTree(s.children[:-1] + (_tree_under(s.children[-1], t),))


def shuffle_graft(base: PlanarTree, parts: tuple[PlanarTree, ...]) -> PlanarTree:
    """Identify the root of parts[i] with the i-th leaf of the base tree."""
    if len(parts) != base.leaves:
        raise ValueError(f"need {base.leaves} parts, got {len(parts)}")
    it = iter(parts)

    def walk(t: PlanarTree) -> PlanarTree:
        if t.is_leaf:
            return next(it)
        return PlanarTree(tuple(walk(c) for c in t.children))

    return walk(base)


def shifted_shuffle_graft(kind: str, base, raw_parts):
    """Attach raw (unstandardized) parts at the base's leaves, shifting the
    parts' labels up by ideg(base)."""
    if kind in ("ptree", "pbt"):
        return shuffle_graft(base, tuple(raw_parts))
    if kind in WORD_KINDS:
        s = internal_degree(kind, base)
        out: list[int] = []
        for i, part in enumerate(raw_parts):
            if i:
                out.append(base[i - 1])
            out.extend(v + s for v in part)
        return tuple(out)
    if kind == "pf":
        s = base.deg
        words = [tuple(v + s for v in p[0]) for p in raw_parts]
        out: list[int] = []
        for i, part in enumerate(words):
            if i:
                out.append(base.sigma[i - 1])
            out.extend(part)
        tree = shuffle_graft(base.tree, tuple(p[1] for p in raw_parts))
        return ParkingFunction(tuple(out), tree)
    raise ValueError(kind)


# ---------------------------------------------------------------------------
# labeled-tree variants (general integer labels, not only the increasing ones)


def split_labeled(f: LabeledTree, i: int) -> tuple[LabeledTree, LabeledTree]:
    """Allowable labeled split: labels travel with their nodes and both
    parts are standardized."""
    from .combinat import labeled_from_regions, std_labeled

    if not is_allowable("ptree", f.shape, (i,)):
        raise InvariantError("allowable", f"labeled split at {i} is not allowable")
    left_shape, right_shape = split_tree(f.shape, i)
    word = word_of_labeled(f)
    left = labeled_from_regions(left_shape, word[:i])
    right = labeled_from_regions(right_shape, word[i:])
    return std_labeled(left), std_labeled(right)


def graft_labeled(f: LabeledTree, g: LabeledTree, side: str) -> LabeledTree:
    """f/g ('over') or f\\g ('under') with the label shifts of the paper."""
    from .combinat import labeled_from_regions

    wf, wg = word_of_labeled(f), word_of_labeled(g)
    if side == "over":
        shape = _tree_over(f.shape, g.shape)
        word = tuple(v + g.ideg for v in wf) + wg
    elif side == "under":
        shape = _tree_under(f.shape, g.shape)
        word = wf + tuple(v + f.ideg for v in wg)
    else:
        raise ValueError(side)
    return labeled_from_regions(shape, word)


def shifted_shuffle_labeled(f: LabeledTree, parts: tuple[LabeledTree, ...]) -> LabeledTree:
    """Attach labeled parts at f's leaves, shifting their labels above f's."""
    from .combinat import labeled_from_regions

    if len(parts) != f.shape.leaves:
        raise ValueError(f"need {f.shape.leaves} parts, got {len(parts)}")
    shape = shuffle_graft(f.shape, tuple(p.shape for p in parts))
    base = word_of_labeled(f)
    out: list[int] = []
    for i, p in enumerate(parts):
        if i:
            out.append(base[i - 1])
        out.extend(v + f.ideg for v in word_of_labeled(p))
    return labeled_from_regions(shape, tuple(out))


# ---------------------------------------------------------------------------
# forgetful maps and sections


def forget(kind: str, x) -> PlanarTree:
    """The label-forgetting projection onto (binary) planar trees."""
    if kind in ("ptree", "pbt"):
        return x
    if kind in WORD_KINDS:
        return labeled_of_word(x).shape
    if kind == "pf":
        return x.tree
    raise ValueError(kind)


def pf_perm(f: ParkingFunction) -> Word:
    return f.sigma


def iota_gsp(t: PlanarTree) -> Word:
    """The unique 213-avoiding generalized Stirling permutation over t:
    the root gets the smallest label of its range and the children's
    subranges are doled out right to left."""
    def build(s: PlanarTree, start: int) -> tuple[int, ...]:
        starts: dict[int, int] = {}
        nxt = start + 1
        for idx in range(len(s.children) - 1, -1, -1):
            c = s.children[idx]
            if not c.is_leaf:
                starts[idx] = nxt
                nxt += c.ideg
        out: list[int] = []
        for idx, c in enumerate(s.children):
            if idx:
                out.append(start)
            if not c.is_leaf:
                out.extend(build(c, starts[idx]))
        return tuple(out)

    return build(t, 1)


def iota_binary(t: PlanarTree) -> Word:
    if not is_binary(t):
        raise InvariantError("binarity", "section needs a binary tree")
    return iota_gsp(t)


def iota_tree(t: PlanarTree) -> ParkingFunction:
    """Maximal parking function over a binary tree: (n n-1 ... 1, t)."""
    n = t.deg
    return ParkingFunction(tuple(range(n, 0, -1)), t)


def iota_perm(sigma: Word) -> ParkingFunction:
    """(sigma, max{t : Des(t) <= Des(sigma)}); the maximum exists because
    descent sets are unions under Tamari joins."""
    des = word_descents(sigma)
    candidates = [t for t in binary_trees(len(sigma)) if tree_descents(t) <= des]
    top = candidates[0]
    for t in candidates[1:]:
        top = tamari_join(top, t)
    return ParkingFunction(sigma, top)


# ---------------------------------------------------------------------------
# weak-order joins (used by sections and posets)


def inv_closure(pairs: set[tuple[int, int]]) -> frozenset[tuple[int, int]]:
    pairs = set(pairs)
    changed = True
    while changed:
        changed = False
        for (i, j), (k, l) in itertools.product(tuple(pairs), repeat=2):
            if j == k and (i, l) not in pairs:
                pairs.add((i, l))
                changed = True
    return frozenset(pairs)


def perm_from_inversions(n: int, inv: frozenset[tuple[int, int]]) -> Word:
    vals = []
    for i in range(1, n + 1):
        smaller = sum(1 for j in range(1, i) if (j, i) not in inv) + sum(
            1 for j in range(i + 1, n + 1) if (i, j) in inv
        )
        vals.append(smaller + 1)
    return tuple(vals)


def weak_join(u: Word, v: Word) -> Word:
    """Least upper bound in the left weak order (transitive closure of the
    union of position-inversion sets)."""
    n = len(u)
    inv = inv_closure(set(word_inversions(u)) | set(word_inversions(v)))
    return perm_from_inversions(n, inv)


def weak_meet(u: Word, v: Word) -> Word:
    rev = lambda w: tuple(reversed(w))
    return rev(weak_join(rev(u), rev(v)))


def tamari_join(s: PlanarTree, t: PlanarTree) -> PlanarTree:
    """Join in the Tamari order via the weak order: pi preserves joins."""
    return forget("perm", weak_join(iota_binary(s), iota_binary(t)))


# ---------------------------------------------------------------------------
# global descents


def global_descents(kind: str, x) -> frozenset[int]:
    """{i : x = (left of degree i) / (right)}; for words this is
    min(prefix) > max(suffix), which also forces allowability."""
    n = degree(kind, x)
    if kind in WORD_KINDS:
        return frozenset(
            i for i in range(1, n) if min(x[:i]) > max(x[i:])
        )
    out = set()
    for i in range(1, n):
        a, b = split_at(kind, x, i)
        if graft_over(kind, a, b) == x:
            out.add(i)
    return frozenset(out)


# ---------------------------------------------------------------------------
# minimal allowable expansion


def minimal_allowable(t: PlanarTree, i: int) -> PlanarTree:
    """The minimal tree above t in the expansion order whose split at the
    (i+1)-th leaf is allowable; grouping the prefix of children up to the
    path child at every node where the path runs through the middle."""
    if t.is_leaf or i in (0, t.deg):
        return t
    acc = 0
    for j, c in enumerate(t.children):
        if acc + c.leaves >= i + 1:
            local = i - acc
            fixed = minimal_allowable(c, local)
            kids = t.children[:j] + (fixed,) + t.children[j + 1 :]
            if 0 < j < len(t.children) - 1:
                y = PlanarTree(kids[: j + 1])
                return PlanarTree((y,) + kids[j + 1 :])
            return PlanarTree(kids)
        acc += c.leaves
    raise AssertionError("unreachable")


# ---------------------------------------------------------------------------
# provenance-tracked shuffles

Tag = tuple[int, int]  # (block index, region index within the block)


@dataclass(frozen=True)
class Shuffle:
    """A left-to-right iterated shuffle descriptor on k blocks.

    ``stages[m]`` holds the nondecreasing split positions of block m+1 over
    the accumulated base (deg = sum of earlier block degrees positions,
    each in 0..deg(block m+1)).
    """

    stages: tuple[tuple[int, ...], ...]

    def render(self) -> str:
        return ";".join("[" + ",".join(str(a) for a in st) + "]" for st in self.stages)


def enumerate_shuffles(kind: str, blocks, allowable: bool = True) -> list[Shuffle]:
    """All iterated shuffles on the blocks; stage positions are restricted
    to allowable multi-splits of each block unless ``allowable`` is false."""
    if not blocks:
        raise ValueError("need at least one block")
    stage_choices: list[list[tuple[int, ...]]] = []
    base_deg = degree(kind, blocks[0])
    for x in blocks[1:]:
        n = degree(kind, x)
        options = [
            pos
            for pos in itertools.combinations_with_replacement(range(n + 1), base_deg)
            if not allowable or is_allowable(kind, x, pos)
        ]
        stage_choices.append(options)
        base_deg += n
    return [Shuffle(stages) for stages in itertools.product(*stage_choices)]


def apply_shuffle(kind: str, shuffle: Shuffle, blocks, with_provenance: bool = False, allowable: bool = True):
    """Evaluate the shuffle left to right; optionally return the region
    provenance (block, region) tags of the result."""
    if len(shuffle.stages) != len(blocks) - 1:
        raise ValueError("stage count must be one less than block count")
    result = blocks[0]
    prov: list[Tag] = [(0, r) for r in range(degree(kind, blocks[0]))]
    for m, positions in enumerate(shuffle.stages, start=1):
        block = blocks[m]
        if allowable and not is_allowable(kind, block, positions):
            raise InvariantError("allowable", f"positions {positions} on block {m}")
        raw_parts = multi_split(kind, block, positions, std=False)
        part_tags = _slice_tags(m, degree(kind, block), positions)
        new_prov: list[Tag] = []
        for p, tags in enumerate(part_tags):
            if p:
                new_prov.append(prov[p - 1])
            new_prov.extend(tags)
        result = shifted_shuffle_graft(kind, result, raw_parts)
        prov = new_prov
    if with_provenance:
        return result, tuple(prov)
    return result


def _slice_tags(block_idx: int, block_deg: int, positions) -> list[list[Tag]]:
    pos = sorted(positions)
    bounds = [0] + list(pos) + [block_deg]
    return [[(block_idx, r) for r in range(bounds[p], bounds[p + 1])] for p in range(len(bounds) - 1)]


def backslash_shuffle(kind: str, blocks) -> Shuffle:
    """The concatenation shuffle: every stage splits its block at 0s, so the
    whole block lands on the last leaf; evaluates to b1\\b2\\...\\bk."""
    stages = []
    base = degree(kind, blocks[0])
    for x in blocks[1:]:
        stages.append((0,) * base)
        base += degree(kind, x)
    return Shuffle(tuple(stages))


def factor_through(kind: str, shuffle: Shuffle, blocks, gap: int):
    """If the shuffle factors through merging blocks gap-1 and gap (1-based
    pairs (j, j+1) with gap = j), return the merged descriptor; else None.

    Factorization criterion: in the evaluated result, every region of block
    j precedes every region of block j+1.
    """
    j = gap - 1  # 0-based index of the left merged block
    result, prov = apply_shuffle(kind, shuffle, blocks, with_provenance=True)
    left_pos = [p for p, (b, _) in enumerate(prov) if b == j]
    right_pos = [p for p, (b, _) in enumerate(prov) if b == j + 1]
    if left_pos and right_pos and max(left_pos) > min(right_pos):
        return None
    dj = degree(kind, blocks[j])
    merged_prov = []
    for b, r in prov:
        if b == j:
            merged_prov.append((j, r))
        elif b == j + 1:
            merged_prov.append((j, r + dj))
        elif b > j + 1:
            merged_prov.append((b - 1, r))
        else:
            merged_prov.append((b, r))
    merged_degrees = [degree(kind, x) for x in blocks]
    merged_degrees[j : j + 2] = [merged_degrees[j] + merged_degrees[j + 1]]
    stages = _peel_descriptor(tuple(merged_prov), merged_degrees)
    merged = Shuffle(stages)
    # cross-check: the merged shuffle applied to the backslash tuple must
    # reproduce the original evaluation
    under = graft_under(kind, blocks[j], blocks[j + 1])
    new_blocks = list(blocks)
    new_blocks[j : j + 2] = [under]
    redo, redo_prov = apply_shuffle(kind, merged, new_blocks, with_provenance=True)
    if redo != result or tuple(redo_prov) != tuple(merged_prov):
        raise AssertionError("provenance factorization check failed")
    return merged


def provenance_by_node(kind: str, result, prov: tuple[Tag, ...]) -> tuple[int, ...]:
    """Block id of each internal node of the result, in preorder (the
    external rendering of a provenanced shuffle)."""
    shape = forget(kind, result) if kind not in ("ptree", "pbt") else result
    node_of_region: list[int] = []
    counter = itertools.count(0)

    def walk(t: PlanarTree) -> None:
        if t.is_leaf:
            return
        me = next(counter)
        for i, c in enumerate(t.children):
            if i:
                node_of_region.append(me)
            walk(c)

    walk(shape)
    out: dict[int, int] = {}
    for region, (block, _) in enumerate(prov):
        node = node_of_region[region]
        assert out.setdefault(node, block) == block, "node regions came from two blocks"
    return tuple(out[i] for i in range(shape.ideg))


def _peel_descriptor(prov: tuple[Tag, ...], block_degrees: list[int]) -> tuple[tuple[int, ...], ...]:
    """Recover stage descriptors from a region-provenance sequence."""
    stages: list[tuple[int, ...]] = []
    current = list(prov)
    for m in range(len(block_degrees) - 1, 0, -1):
        positions = []
        seen = 0
        for b, _ in current:
            if b == m:
                seen += 1
            else:
                positions.append(seen)
        stages.append(tuple(positions))
        current = [t for t in current if t[0] != m]
    stages.reverse()
    return tuple(stages)
