"""Combinatorial object families: planar trees, labeled trees, packed words,
generalized Stirling permutations, permutations, set compositions and parking
functions, with canonical text grammars and exhaustive enumeration.

Canonical text forms
--------------------
* planar tree      ``L`` or ``(c1 c2 ...)`` with at least two children
* labeled tree     ``L`` or ``(n; c1 c2 ...)`` with ``n`` the root label
* permutation / packed word   digit string (letters <= 9), else comma-separated
* parking function ``sigma|tree``
* set composition  blocks of sorted integers joined by ``|``, e.g. ``15|3467|2``

All objects are immutable values; every operation here is pure.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache

Word = tuple[int, ...]


class ParseError(ValueError):
    """Malformed object text; ``pos`` is the offending character offset."""

    def __init__(self, message: str, pos: int | None = None):
        super().__init__(message if pos is None else f"{message} (at position {pos})")
        self.pos = pos


class InvariantError(ValueError):
    """Structurally valid text that violates a named invariant."""

    def __init__(self, invariant: str, detail: str = ""):
        super().__init__(f"invariant '{invariant}' violated" + (f": {detail}" if detail else ""))
        self.invariant = invariant


# ---------------------------------------------------------------------------
# planar trees


@dataclass(frozen=True)
class PlanarTree:
    """Rooted planar tree; internal nodes have >= 2 ordered children.

    ``deg`` is the number of leaves minus one, ``ideg`` the number of
    internal nodes.  The empty tree is the single leaf.
    """

    children: tuple["PlanarTree", ...] = ()
    deg: int = field(init=False, compare=False)
    ideg: int = field(init=False, compare=False)

    def __post_init__(self):
        if len(self.children) == 1:
            raise InvariantError("arity", "internal nodes need at least 2 children")
        object.__setattr__(self, "deg", sum(c.deg for c in self.children) + max(0, len(self.children) - 1))
        object.__setattr__(self, "ideg", sum(c.ideg for c in self.children) + (1 if self.children else 0))

    @property
    def is_leaf(self) -> bool:
        return not self.children

    @property
    def leaves(self) -> int:
        return self.deg + 1

    def __repr__(self) -> str:
        return f"PlanarTree({render_tree(self)!r})"


LEAF = PlanarTree()


def node(*children: PlanarTree) -> PlanarTree:
    return PlanarTree(tuple(children))


def render_tree(t: PlanarTree) -> str:
    if t.is_leaf:
        return "L"
    return "(" + " ".join(render_tree(c) for c in t.children) + ")"


def is_binary(t: PlanarTree) -> bool:
    return t.is_leaf or (len(t.children) == 2 and all(is_binary(c) for c in t.children))


def internal_nodes_preorder(t: PlanarTree) -> list[PlanarTree]:
    out: list[PlanarTree] = []

    def walk(s: PlanarTree) -> None:
        if s.is_leaf:
            return
        out.append(s)
        for c in s.children:
            walk(c)

    walk(t)
    return out


def tree_stats(t: PlanarTree) -> tuple[int, int, int]:
    """(degree, internal degree, leaf count)."""
    return t.deg, t.ideg, t.leaves


# ---------------------------------------------------------------------------
# labeled trees


@dataclass(frozen=True)
class LabeledTree:
    """A planar tree with an integer label on each internal node.

    Labels are stored by preorder index of the internal node, which is
    stable under rendering and all structural operations.
    """

    shape: PlanarTree
    labels: tuple[int, ...]

    def __post_init__(self):
        if len(self.labels) != self.shape.ideg:
            raise InvariantError("labeling", "label map must be total on internal nodes")
        if any(x < 1 for x in self.labels):
            raise InvariantError("labeling", "labels must be positive")

    @property
    def deg(self) -> int:
        return self.shape.deg

    @property
    def ideg(self) -> int:
        return self.shape.ideg

    def is_standard(self) -> bool:
        return sorted(self.labels) == list(range(1, self.ideg + 1))

    def is_increasing(self) -> bool:
        def walk(t: PlanarTree, pos: int) -> int:
            # returns next free preorder slot; pos is this node's index
            my = self.labels[pos]
            nxt = pos + 1
            for c in t.children:
                if not c.is_leaf:
                    if self.labels[nxt] <= my:
                        return -1
                    nxt = walk(c, nxt)
                    if nxt < 0:
                        return -1
            return nxt

        return self.shape.is_leaf or walk(self.shape, 0) >= 0

    def __repr__(self) -> str:
        return f"LabeledTree({render_labeled(self)!r})"


def render_labeled(f: LabeledTree) -> str:
    def walk(t: PlanarTree, pos: int) -> tuple[str, int]:
        if t.is_leaf:
            return "L", pos
        parts = []
        nxt = pos + 1
        for c in t.children:
            s, nxt = walk(c, nxt)
            parts.append(s)
        return f"({f.labels[pos]}; " + " ".join(parts) + ")", nxt

    return walk(f.shape, 0)[0]


def word_of_labeled(f: LabeledTree) -> Word:
    """Read the region labels left to right (the in-order word for binary trees)."""
    out: list[int] = []

    def walk(t: PlanarTree, pos: int) -> int:
        if t.is_leaf:
            return pos
        my = f.labels[pos]
        nxt = pos + 1
        for i, c in enumerate(t.children):
            if i:
                out.append(my)
            nxt = walk(c, nxt)
        return nxt

    walk(f.shape, 0)
    return tuple(out)


def labeled_of_word(w: Word) -> LabeledTree:
    """Inverse of :func:`word_of_labeled` on 212-avoiding packed words.

    Splits recursively at the occurrences of the minimal letter; a 212
    pattern makes the letter sets of the segments overlap, which is exactly
    what the construction cannot absorb.
    """
    if not is_packed(w):
        raise InvariantError("packed", f"{w} is not packed")
    ok, witness = avoids(w, 212)
    if not ok:
        raise InvariantError("212-avoiding", f"pattern at positions {witness}")

    shapes: list[PlanarTree] = []
    labels: list[int] = []

    def build(seg: Word) -> PlanarTree:
        if not seg:
            return LEAF
        m = min(seg)
        pieces: list[Word] = []
        cur: list[int] = []
        for x in seg:
            if x == m:
                pieces.append(tuple(cur))
                cur = []
            else:
                cur.append(x)
        pieces.append(tuple(cur))
        labels.append(m)
        kids = []
        for p in pieces:
            kids.append(build(p))
        return PlanarTree(tuple(kids))

    # labels list is filled in preorder because build() appends before recursing
    shape = build(w)
    return LabeledTree(shape, tuple(labels))


def std_word(w: Word) -> Word:
    """Rank-compress a word with distinct letters onto 1..n."""
    if len(set(w)) != len(w):
        raise InvariantError("injective-labels", f"repeated letters in {w}")
    ranks = {v: i + 1 for i, v in enumerate(sorted(w))}
    return tuple(ranks[v] for v in w)


def std_labeled(f: LabeledTree) -> LabeledTree:
    """Renumber injective labels onto 1..ideg keeping their relative order."""
    if len(set(f.labels)) != len(f.labels):
        raise InvariantError("injective-labels", f"repeated labels in {f.labels}")
    ranks = {v: i + 1 for i, v in enumerate(sorted(f.labels))}
    return LabeledTree(f.shape, tuple(ranks[v] for v in f.labels))


def labeled_from_regions(shape: PlanarTree, word: Word) -> LabeledTree:
    """Rebuild a labeled tree from its shape and region word; each node's
    regions must carry one common label."""
    if len(word) != shape.deg:
        raise InvariantError("labeling", "region word length must equal the degree")
    out: dict[int, int] = {}
    counter = itertools.count(0)
    region = itertools.count(0)

    def walk(t: PlanarTree) -> None:
        if t.is_leaf:
            return
        me = next(counter)  # preorder index
        seen: list[int] = []
        for i, c in enumerate(t.children):
            if i:
                seen.append(word[next(region)])
            walk(c)
        if len(set(seen)) != 1:
            raise InvariantError("labeling", f"regions of one node disagree: {seen}")
        out[me] = seen[0]

    walk(shape)
    return LabeledTree(shape, tuple(out[i] for i in range(shape.ideg)))


def pack(w: Word) -> Word:
    """The unique packed word order-isomorphic to w (identity on packed words)."""
    ranks = {v: i + 1 for i, v in enumerate(sorted(set(w)))}
    return tuple(ranks[v] for v in w)


def is_packed(w: Word) -> bool:
    return all(x >= 1 for x in w) and set(w) == set(range(1, len(set(w)) + 1)) if w else True


def avoids(w: Word, pattern: int) -> tuple[bool, tuple[int, int, int] | None]:
    """Scan for a 212 or 213 pattern; returns (ok, first witness triple 1-based)."""
    n = len(w)
    if pattern == 212:
        for i in range(n):
            for k in range(i + 2, n):
                if w[i] == w[k]:
                    for j in range(i + 1, k):
                        if w[j] < w[i]:
                            return False, (i + 1, j + 1, k + 1)
        return True, None
    if pattern == 213:
        for i in range(n):
            for j in range(i + 1, n):
                if w[j] < w[i]:
                    for k in range(j + 1, n):
                        if w[k] > w[i]:
                            return False, (i + 1, j + 1, k + 1)
        return True, None
    raise ValueError(f"unsupported pattern {pattern}")


def is_gsp_word(w: Word) -> bool:
    return is_packed(w) and avoids(w, 212)[0]


def is_perm_word(w: Word) -> bool:
    return sorted(w) == list(range(1, len(w) + 1))


def word_descents(w: Word) -> set[int]:
    return {i + 1 for i in range(len(w) - 1) if w[i] > w[i + 1]}


def word_inversions(w: Word) -> frozenset[tuple[int, int]]:
    """Position inversions {(i,j): i<j, w_i > w_j}, 1-based."""
    n = len(w)
    return frozenset((i + 1, j + 1) for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def perm_iinv(w: Word) -> frozenset[tuple[int, int]]:
    """Value inversions {(a,b): a<b, pos(a) > pos(b)} of a permutation."""
    pos = {v: i for i, v in enumerate(w)}
    n = len(w)
    return frozenset((a, b) for a in range(1, n + 1) for b in range(a + 1, n + 1) if pos[a] > pos[b])


# ---------------------------------------------------------------------------
# packed words <-> set compositions

SetComposition = tuple[tuple[int, ...], ...]


def word_inverse(w: Word) -> SetComposition:
    """The set composition (w^{-1}(1), ..., w^{-1}(k)), positions 1-based."""
    k = max(w) if w else 0
    blocks: list[list[int]] = [[] for _ in range(k)]
    for i, x in enumerate(w, start=1):
        blocks[x - 1].append(i)
    return tuple(tuple(b) for b in blocks)


def composition_inverse(blocks: SetComposition) -> Word:
    """Inverse of :func:`word_inverse`; rejects overlapping or gappy blocks."""
    n = sum(len(b) for b in blocks)
    w = [0] * n
    for a, block in enumerate(blocks, start=1):
        if not block:
            raise InvariantError("set-composition", "empty block")
        for i in block:
            if not 1 <= i <= n or w[i - 1]:
                raise InvariantError("set-composition", f"overlap or gap at {i}")
            w[i - 1] = a
    return tuple(w)


def setpar(w: Word) -> frozenset[frozenset[int]]:
    return frozenset(frozenset(b) for b in word_inverse(w))


def blocks_by_min(w: Word) -> list[tuple[int, ...]]:
    return sorted(word_inverse(w), key=min)


def delrpt(w: Word) -> Word:
    """Initial permutation: keep only the first appearance of each letter, packed."""
    seen: set[int] = set()
    first = []
    for x in w:
        if x not in seen:
            seen.add(x)
            first.append(x)
    return pack(tuple(first))


def pw(blocks: list[tuple[int, ...]], sigma: Word) -> Word:
    """Packed word with underlying partition ``blocks`` (sorted by minima) and
    initial permutation ``sigma``."""
    if sorted(min(b) for b in blocks) != [min(b) for b in blocks]:
        raise InvariantError("set-composition", "blocks must be sorted by minima")
    if not is_perm_word(sigma) or len(sigma) != len(blocks):
        raise InvariantError("permutation", "arrangement must be a permutation of the block count")
    inv = {v: i + 1 for i, v in enumerate(sigma)}
    arranged = tuple(blocks[inv[a] - 1] for a in range(1, len(blocks) + 1))
    return composition_inverse(arranged)


def inv_packed(w: Word) -> frozenset[tuple[int, int]]:
    """Block-index inversions of a packed word: (i,j) with i<j and the letter
    of the i-th block (by minimum) larger than the letter of the j-th."""
    bs = blocks_by_min(w)
    out = set()
    for i in range(len(bs)):
        for j in range(i + 1, len(bs)):
            if w[min(bs[i]) - 1] > w[min(bs[j]) - 1]:
                out.add((i + 1, j + 1))
    return frozenset(out)


def iinv_packed(w: Word) -> frozenset[tuple[int, int]]:
    """{(a,b): a<b letters with min w^{-1}(a) > max w^{-1}(b)}."""
    inv = word_inverse(w)
    k = len(inv)
    return frozenset(
        (a, b) for a in range(1, k + 1) for b in range(a + 1, k + 1) if min(inv[a - 1]) > max(inv[b - 1])
    )


def nested_pairs(blocks: list[tuple[int, ...]]) -> frozenset[tuple[int, int]]:
    """Pairs (i,j), i<j of blocks sorted by minima with min B_i < min B_j < max B_i."""
    out = set()
    for i in range(len(blocks)):
        for j in range(i + 1, len(blocks)):
            if min(blocks[i]) < min(blocks[j]) < max(blocks[i]):
                out.add((i + 1, j + 1))
    return frozenset(out)


def nested_trace(w: Word) -> frozenset[tuple[int, int]]:
    """The nested block pairs that are also inversions of w."""
    bs = blocks_by_min(w)
    return nested_pairs(bs) & inv_packed(w)


def is_noncrossing(blocks: SetComposition) -> bool:
    """No a<b<c<d with a,c in one block and b,d in another."""
    sets = [set(b) for b in blocks]
    ground = sorted(x for b in blocks for x in b)
    which = {}
    for i, b in enumerate(sets):
        for x in b:
            which[x] = i
    for a, b, c, d in itertools.combinations(ground, 4):
        if which[a] == which[c] != which[b] == which[d]:
            return False
    return True


def elementary_move(w: Word, a: int) -> Word:
    """T_a: interchange all letters a and a+1."""
    if not w or a + 1 > max(w):
        raise InvariantError("letter-range", f"T_{a} undefined: a+1 exceeds max letter")
    swap = {a: a + 1, a + 1: a}
    return tuple(swap.get(x, x) for x in w)


# ---------------------------------------------------------------------------
# permutations as increasing binary trees


def perm_to_tree(w: Word) -> LabeledTree:
    """The increasing binary tree whose in-order label word is w."""
    if not is_perm_word(w):
        raise InvariantError("permutation", f"{w} is not a permutation word")
    return labeled_of_word(w)


def tree_to_perm(f: LabeledTree) -> Word:
    return word_of_labeled(f)


# ---------------------------------------------------------------------------
# binary tree descents


def tree_descents(t: PlanarTree) -> set[int]:
    """{i : the (i+1)-th leaf of the binary tree is a right child}."""
    if not is_binary(t):
        raise InvariantError("binarity", "descent set needs a binary tree")
    out: set[int] = set()
    counter = itertools.count(1)

    def walk(s: PlanarTree, right_child: bool) -> None:
        if s.is_leaf:
            i = next(counter)
            if right_child and i <= t.deg:
                out.add(i - 1)
            return
        walk(s.children[0], False)
        walk(s.children[1], True)

    walk(t, False)
    return {i for i in out if 1 <= i <= t.deg - 1}


# ---------------------------------------------------------------------------
# parking functions


@dataclass(frozen=True)
class ParkingFunction:
    """A pair (sigma, t) of a permutation and a binary tree of equal degree
    with Des(t) contained in Des(sigma)."""

    sigma: Word
    tree: PlanarTree

    def __post_init__(self):
        if not is_perm_word(self.sigma):
            raise InvariantError("permutation", f"{self.sigma}")
        if not is_binary(self.tree):
            raise InvariantError("binarity", "second component must be binary")
        if len(self.sigma) != self.tree.deg:
            raise InvariantError("degree-match", f"{len(self.sigma)} != {self.tree.deg}")
        if not tree_descents(self.tree) <= word_descents(self.sigma):
            raise InvariantError("Des(t)<=Des(sigma)", f"{tree_descents(self.tree)} !<= {word_descents(self.sigma)}")

    @property
    def deg(self) -> int:
        return len(self.sigma)


def _spots_preorder(t: PlanarTree) -> list[int]:
    """Spot of each internal node in preorder: 1 + leaves seen before it."""
    spots: list[int] = []
    leaves = 0

    def walk(s: PlanarTree) -> None:
        nonlocal leaves
        if s.is_leaf:
            leaves += 1
            return
        spots.append(leaves + 1)
        for c in s.children:
            walk(c)

    walk(t)
    return spots


def _std_ties_right(p: tuple[int, ...]) -> Word:
    """Standardize with ties broken right-to-left."""
    order = sorted(range(len(p)), key=lambda i: (p[i], -i))
    out = [0] * len(p)
    for rank, i in enumerate(order, start=1):
        out[i] = rank
    return tuple(out)


def _reverse_complement(s: Word) -> Word:
    n = len(s)
    return tuple(n + 1 - s[n - 1 - i] for i in range(n))


@lru_cache(maxsize=None)
def _trees_descents_within(n: int, s: frozenset[int]) -> tuple[PlanarTree, ...]:
    return tuple(t for t in binary_trees(n) if tree_descents(t) <= s)


@lru_cache(maxsize=None)
def _sorted_parking_ties_within(n: int, e: frozenset[int]) -> tuple[tuple[int, ...], ...]:
    out = []
    for q in itertools.combinations_with_replacement(range(1, n + 1), n):
        if is_classical_parking(q)[0] and all(q[a - 1] < q[a] for a in range(1, n) if a not in e):
            out.append(q)
    return tuple(out)


def parking_to_classical(f: ParkingFunction) -> tuple[int, ...]:
    """Classical parking word of the pair (sigma, t).

    The word is q composed with the inverse of sigma's reverse-complement,
    where q is the nondecreasing word matched to t rank-by-rank inside the
    descent class of sigma: trees with Des(t) inside Des(sigma) against
    nondecreasing parking words whose ties sit inside n - Des(sigma), both
    lex-sorted.  Inverse of :func:`classical_to_parking`.
    """
    n = f.deg
    if n == 0:
        return ()
    s = frozenset(word_descents(f.sigma))
    e = frozenset(n - i for i in s)
    rank = _trees_descents_within(n, s).index(f.tree)
    q = _sorted_parking_ties_within(n, e)[rank]
    rc = _reverse_complement(f.sigma)
    tau = [0] * n  # tau = rc(sigma)^{-1} = std'(p) with ties right-to-left
    for i, v in enumerate(rc):
        tau[v - 1] = i + 1
    return tuple(q[tau[i] - 1] for i in range(n))


def is_classical_parking(p: tuple[int, ...]) -> tuple[bool, int | None]:
    """Parking condition via the nondecreasing rearrangement; returns the
    first violated rank when false."""
    for i, v in enumerate(sorted(p), start=1):
        if v > i:
            return False, i
    return True, None


def classical_to_parking(p: tuple[int, ...]) -> ParkingFunction:
    ok, bad = is_classical_parking(p)
    if not ok:
        raise InvariantError("parking-condition", f"rank {bad} overfull")
    n = len(p)
    if n == 0:
        return ParkingFunction((), LEAF)
    tau = _std_ties_right(p)
    q = tuple(sorted(p))
    tau_inv = [0] * n
    for i, v in enumerate(tau):
        tau_inv[v - 1] = i + 1
    sigma = _reverse_complement(tuple(tau_inv))
    s = frozenset(word_descents(sigma))
    e = frozenset(n - i for i in s)
    rank = _sorted_parking_ties_within(n, e).index(q)
    t = _trees_descents_within(n, s)[rank]
    return ParkingFunction(sigma, t)


# ---------------------------------------------------------------------------
# canonical text for words and compositions


def render_word(w: Word) -> str:
    if any(x > 9 for x in w):
        return ",".join(str(x) for x in w)
    return "".join(str(x) for x in w)


def parse_word(text: str) -> Word:
    text = text.strip()
    if not text:
        return ()
    if "," in text:
        try:
            return tuple(int(p) for p in text.split(","))
        except ValueError as e:
            raise ParseError(f"bad letter in {text!r}") from e
    for i, c in enumerate(text):
        if not c.isdigit() or c == "0":
            raise ParseError(f"bad letter {c!r}", pos=i)
    return tuple(int(c) for c in text)


def render_composition(blocks: SetComposition) -> str:
    n = sum(len(b) for b in blocks)
    sep = "," if n > 9 else ""
    return "|".join(sep.join(str(x) for x in sorted(b)) for b in blocks)


def parse_composition(text: str) -> SetComposition:
    text = text.strip()
    if not text:
        return ()
    blocks = []
    for part in text.split("|"):
        if "," in part:
            elems = [int(x) for x in part.split(",")]
        else:
            if not part or not part.isdigit():
                raise ParseError(f"bad block {part!r}")
            elems = [int(c) for c in part]
        blocks.append(tuple(sorted(elems)))
    comp = tuple(blocks)
    composition_inverse(comp)  # validates disjointness and coverage
    return comp


# ---------------------------------------------------------------------------
# tree text


def parse_tree(text: str) -> PlanarTree:
    t, end = _parse_tree_at(text, 0)
    if text[end:].strip():
        raise ParseError("trailing text", pos=end)
    return t


def _parse_tree_at(text: str, i: int) -> tuple[PlanarTree, int]:
    while i < len(text) and text[i] == " ":
        i += 1
    if i >= len(text):
        raise ParseError("unexpected end of input", pos=i)
    if text[i] == "L":
        return LEAF, i + 1
    if text[i] != "(":
        raise ParseError(f"expected 'L' or '(', got {text[i]!r}", pos=i)
    i += 1
    kids = []
    while True:
        while i < len(text) and text[i] == " ":
            i += 1
        if i >= len(text):
            raise ParseError("unclosed '('", pos=i)
        if text[i] == ")":
            break
        c, i = _parse_tree_at(text, i)
        kids.append(c)
    if len(kids) < 2:
        raise InvariantError("arity", "internal nodes need at least 2 children")
    return PlanarTree(tuple(kids)), i + 1


def parse_labeled(text: str) -> LabeledTree:
    shapes: list[PlanarTree] = []

    def at(i: int) -> tuple[PlanarTree, list[int], int]:
        while i < len(text) and text[i] == " ":
            i += 1
        if i >= len(text):
            raise ParseError("unexpected end of input", pos=i)
        if text[i] == "L":
            return LEAF, [], i + 1
        if text[i] != "(":
            raise ParseError(f"expected 'L' or '(', got {text[i]!r}", pos=i)
        i += 1
        j = i
        while j < len(text) and text[j].isdigit():
            j += 1
        if j == i or j >= len(text) or text[j] != ";":
            raise ParseError("expected label followed by ';'", pos=i)
        label = int(text[i:j])
        i = j + 1
        kids, labs = [], [label]
        while True:
            while i < len(text) and text[i] == " ":
                i += 1
            if i >= len(text):
                raise ParseError("unclosed '('", pos=i)
            if text[i] == ")":
                break
            c, ls, i = at(i)
            kids.append(c)
            labs.extend(ls)
        if len(kids) < 2:
            raise InvariantError("arity", "internal nodes need at least 2 children")
        return PlanarTree(tuple(kids)), labs, i + 1

    shape, labels, end = at(0)
    if text[end:].strip():
        raise ParseError("trailing text", pos=end)
    return LabeledTree(shape, tuple(labels))


# ---------------------------------------------------------------------------
# object kinds

KINDS = ("ptree", "pbt", "perm", "pw", "gsp", "pf", "setcomp", "ltree")


def parse(kind: str, text: str):
    """Parse canonical text into the requested family, validating invariants."""
    if kind == "ptree":
        return parse_tree(text)
    if kind == "pbt":
        t = parse_tree(text)
        if not is_binary(t):
            raise InvariantError("binarity", text)
        return t
    if kind == "ltree":
        return parse_labeled(text)
    if kind == "perm":
        w = parse_word(text)
        if not is_perm_word(w):
            raise InvariantError("permutation", text)
        return w
    if kind == "pw":
        w = parse_word(text)
        if not is_packed(w):
            raise InvariantError("packed", text)
        return w
    if kind == "gsp":
        w = parse_word(text)
        if not is_packed(w):
            raise InvariantError("packed", text)
        ok, witness = avoids(w, 212)
        if not ok:
            raise InvariantError("212-avoiding", f"pattern at positions {witness}")
        return w
    if kind == "setcomp":
        return parse_composition(text)
    if kind == "pf":
        if "|" not in text:
            raise ParseError("parking function needs 'sigma|tree'")
        left, right = text.split("|", 1)
        return ParkingFunction(parse("perm", left), parse("pbt", right))
    raise ValueError(f"unknown kind {kind!r}")


def render(kind: str, obj) -> str:
    if kind in ("ptree", "pbt"):
        return render_tree(obj)
    if kind == "ltree":
        return render_labeled(obj)
    if kind in ("perm", "pw", "gsp"):
        return render_word(obj)
    if kind == "setcomp":
        return render_composition(obj)
    if kind == "pf":
        return render_word(obj.sigma) + "|" + render_tree(obj.tree)
    raise ValueError(f"unknown kind {kind!r}")


# ---------------------------------------------------------------------------
# enumeration


@lru_cache(maxsize=None)
def planar_trees(n: int) -> tuple[PlanarTree, ...]:
    """All planar trees of degree n (children-composition recursion)."""
    if n == 0:
        return (LEAF,)
    out = []
    for k in range(2, n + 2):
        # children degrees sum to n - k + 1
        for comp in _compositions(n - k + 1, k):
            for kids in itertools.product(*[planar_trees(d) for d in comp]):
                out.append(PlanarTree(kids))
    return tuple(sorted(out, key=render_tree))


def _compositions(total: int, parts: int):
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


@lru_cache(maxsize=None)
def binary_trees(n: int) -> tuple[PlanarTree, ...]:
    if n == 0:
        return (LEAF,)
    out = []
    for i in range(n):
        for left in binary_trees(i):
            for right in binary_trees(n - 1 - i):
                out.append(node(left, right))
    return tuple(sorted(out, key=render_tree))


@lru_cache(maxsize=None)
def permutations(n: int) -> tuple[Word, ...]:
    return tuple(sorted(itertools.permutations(range(1, n + 1)), key=render_word))


@lru_cache(maxsize=None)
def packed_words(n: int) -> tuple[Word, ...]:
    out = []
    for k in range(0 if n == 0 else 1, n + 1):
        for w in itertools.product(range(1, k + 1), repeat=n):
            if set(w) == set(range(1, k + 1)):
                out.append(w)
    return tuple(sorted(out, key=render_word))


@lru_cache(maxsize=None)
def gsp_words(n: int) -> tuple[Word, ...]:
    """212-avoiding packed words, by inserting the run of the new maximal
    letter into a smaller word (mirrors the (n+1)!/2 recurrence)."""
    if n == 0:
        return ((),)
    out = []
    for k in range(1, n + 1):
        for w in gsp_words(n - k):
            run = (1 + (max(w) if w else 0),) * k
            for i in range(len(w) + 1):
                out.append(w[:i] + run + w[i:])
    return tuple(sorted(out, key=render_word))


@lru_cache(maxsize=None)
def parking_functions(n: int) -> tuple[ParkingFunction, ...]:
    out = []
    for sigma in permutations(n):
        des = word_descents(sigma)
        for t in binary_trees(n):
            if tree_descents(t) <= des:
                out.append(ParkingFunction(sigma, t))
    return tuple(sorted(out, key=lambda f: render("pf", f)))


def enumerate_objects(kind: str, n: int):
    """All objects of degree n, canonically ordered (lexicographic on text)."""
    if n < 0:
        raise ValueError("degree must be nonnegative")
    if kind == "ptree":
        return planar_trees(n)
    if kind == "pbt":
        return binary_trees(n)
    if kind == "perm":
        return permutations(n)
    if kind == "pw":
        return packed_words(n)
    if kind == "gsp":
        return gsp_words(n)
    if kind == "setcomp":
        return tuple(sorted((word_inverse(w) for w in packed_words(n)), key=render_composition))
    if kind == "pf":
        return parking_functions(n)
    raise ValueError(f"unknown kind {kind!r}")
