import itertools

import pytest

from hopftrees import combinat as C, ops as O, posets as P

T = C.parse_tree


# --- splitting ---------------------------------------------------------------

def test_split_example_2_3():
    t = T("(L (L L) L)")
    assert O.split_tree(t, 2) == (T("(L (L L))"), T("(L L)"))
    assert not O.is_allowable("ptree", t, (2,))


def test_split_boundaries():
    for n in range(5):
        for t in C.planar_trees(n):
            assert O.split_tree(t, 0) == (C.LEAF, t)
            assert O.split_tree(t, t.deg) == (t, C.LEAF)


def test_split_B_example():
    t = T("((L L) (L L) L)")
    assert O.split_tree(t, 1) == (T("(L L)"), T("(L (L L) L)"))
    assert O.allow_single("ptree", t) == frozenset({1})


def test_binary_always_allowable():
    for t in C.binary_trees(4):
        assert O.allow_single("pbt", t) == frozenset(range(1, 4))
        for pos in itertools.combinations_with_replacement(range(5), 2):
            assert O.is_allowable("pbt", t, pos)


def test_multi_split_example_2_4():
    # the degree-7 tree of the allowable-splitting figure, cut at {1, 6}
    t = T("((L (L L)) (L L L) (L L))")
    parts = O.multi_split("ptree", t, (1, 6))
    assert [C.render_tree(p) for p in parts] == ["(L L)", "((L L) (L L L) L)", "(L L)"]
    assert O.is_allowable("ptree", t, (1, 6))


def test_multi_split_order_independent():
    for t in C.planar_trees(4):
        for pos in itertools.combinations_with_replacement(range(t.deg + 1), 2):
            parts = O.multi_split("ptree", t, pos)
            # folding from the largest position first gives the same parts
            left, right = O.split_tree(t, pos[1])
            ll, lr = O.split_tree(left, pos[0])
            assert (ll, lr, right) == parts


def test_empty_positions():
    t = T("(L L L)")
    assert O.multi_split("ptree", t, ()) == (t,)


# --- grafting ----------------------------------------------------------------

def test_graft_example_2_6():
    s, t = T("((L L) L)"), T("(L (L L))")
    assert O.graft_over("pbt", s, t) == T("(((L L) L) (L L))")
    assert O.graft_under("pbt", s, t) == T("((L L) (L (L L)))")


def test_graft_units():
    for t in C.planar_trees(3):
        assert O.graft_over("ptree", t, C.LEAF) == t
        assert O.graft_over("ptree", C.LEAF, t) == t
        assert O.graft_under("ptree", t, C.LEAF) == t


def test_perm_grafts():
    assert O.graft_over("perm", (2, 1), (1, 2)) == (4, 3, 1, 2)
    assert O.graft_under("perm", (2, 1), (1, 2)) == (2, 1, 3, 4)


def test_graft_associative():
    for kind, universe in (("ptree", C.planar_trees(2)), ("perm", C.permutations(2)), ("gsp", C.gsp_words(2))):
        for a, b, c in itertools.product(universe, repeat=3):
            assert O.graft_over(kind, O.graft_over(kind, a, b), c) == O.graft_over(kind, a, O.graft_over(kind, b, c))
            assert O.graft_under(kind, O.graft_under(kind, a, b), c) == O.graft_under(kind, a, O.graft_under(kind, b, c))


def test_graft_split_inverse():
    for kind, us, vs in (
        ("ptree", C.planar_trees(2), C.planar_trees(2)),
        ("perm", C.permutations(2), C.permutations(2)),
        ("gsp", C.gsp_words(2), C.gsp_words(2)),
    ):
        for s, t in itertools.product(us, vs):
            i = O.degree(kind, s)
            for graft in (O.graft_over, O.graft_under):
                g = graft(kind, s, t)
                assert O.split_at(kind, g, i) == (s, t)


def test_shuffle_graft_example_2_5():
    base = T("(L L L)")
    parts = (T("(L (L L))"), C.LEAF, T("(L L L)"))
    assert O.shuffle_graft(base, parts) == T("((L (L L)) L (L L L))")
    assert O.shuffle_graft(base, (C.LEAF,) * 3) == base


def test_labeled_shuffle_example():
    # "11" shifted-shuffled with the (13-word, empty, 22-word) trees
    result = O.shifted_shuffle_graft("gsp", (1, 1), ((1, 3), (), (2, 2)))
    assert sorted(result) == [1, 1, 2, 3, 3, 4]
    assert result == (2, 4, 1, 1, 3, 3)


# --- std and pi --------------------------------------------------------------

def test_std():
    assert C.std_word((4, 9, 2)) == (2, 3, 1)
    with pytest.raises(C.InvariantError):
        C.std_word((1, 1))


def test_pi_commutes_prop_2_8():
    for n in range(1, 4):
        for w in C.gsp_words(n):
            t = O.forget("gsp", w)
            for i in O.allow_single("gsp", w):
                assert O.allow_single("ptree", t) >= {i}
                w1, w2 = O.split_at("gsp", w, i)
                t1, t2 = O.split_at("ptree", t, i)
                assert O.forget("gsp", w1) == t1 and O.forget("gsp", w2) == t2
    for u, v in itertools.product(C.gsp_words(2), repeat=2):
        assert O.forget("gsp", O.graft_over("gsp", u, v)) == O.graft_over(
            "ptree", O.forget("gsp", u), O.forget("gsp", v)
        )
        assert O.forget("gsp", O.graft_under("gsp", u, v)) == O.graft_under(
            "ptree", O.forget("gsp", u), O.forget("gsp", v)
        )
    # shuffle grafts commute with pi
    for u in C.gsp_words(2):
        for v in C.gsp_words(2):
            for z in O.enumerate_shuffles("gsp", [u, v]):
                lhs = O.forget("gsp", O.apply_shuffle("gsp", z, [u, v]))
                rhs = O.apply_shuffle("ptree", z, [O.forget("gsp", u), O.forget("gsp", v)])
                assert lhs == rhs


def test_pi_on_degree3_permutations():
    # fiber sizes over the five binary trees: one tree has two preimages
    from collections import Counter
    fibers = Counter(O.forget("perm", s) for s in C.permutations(3))
    assert sorted(fibers.values()) == [1, 1, 1, 1, 2]


# --- sections ----------------------------------------------------------------

def test_iota_gsp_unique_213_avoiding():
    for n in range(5):
        for t in C.planar_trees(n):
            w = O.iota_gsp(t)
            assert C.avoids(w, 213)[0]
            assert O.forget("gsp", w) == t
            others = [u for u in C.gsp_words(n) if O.forget("gsp", u) == t and C.avoids(u, 213)[0]]
            assert others == [w]


def test_iota_binary_right_comb():
    assert O.iota_binary(T("(L (L (L L)))")) == (1, 2, 3)


def test_iota_tree_is_reversal():
    for t in C.binary_trees(4):
        f = O.iota_tree(t)
        assert f.sigma == (4, 3, 2, 1) and f.tree == t


def test_iota_perm_max_fiber():
    for n in range(1, 5):
        for s in C.permutations(n):
            f = O.iota_perm(s)
            fiber = [g for g in C.parking_functions(n) if g.sigma == s]
            assert f in fiber
            assert all(P.leq("parking", g, f) for g in fiber)


# --- global descents -----------------------------------------------------------

def test_global_descent_figures():
    assert O.global_descents("perm", (4, 2, 3, 1)) == frozenset({1, 3})
    assert O.global_descents("perm", (5, 4, 7, 6, 1, 3, 2)) == frozenset({4})
    t = T("(((L L) ((L L) L)) ((L L) L))")
    assert O.global_descents("pbt", t) == frozenset({1, 4})
    for n in range(1, 5):
        assert O.global_descents("perm", tuple(range(1, n + 1))) == frozenset()


def test_gd_word_characterization():
    for w in C.gsp_words(4):
        direct = {
            i
            for i in range(1, 4)
            if all(w[a] > w[b] for a in range(i) for b in range(i, 4))
        }
        assert O.global_descents("gsp", w) == direct


def test_gd_parking_is_intersection():
    for f in C.parking_functions(3):
        got = O.global_descents("pf", f)
        want = O.global_descents("perm", f.sigma) & O.global_descents("pbt", f.tree)
        assert got == want


def test_gd_inside_allow():
    for w in C.gsp_words(4):
        assert O.global_descents("gsp", w) <= O.allow_single("gsp", w)


# --- minimal allowable ------------------------------------------------------

def test_minimal_allowable_direct_vs_poset():
    for n in range(1, 6):
        for t in C.planar_trees(n):
            for i in range(1, n):
                got = O.minimal_allowable(t, i)
                # same split, allowable, above t in the expansion order
                assert O.split_tree(got, i) == O.split_tree(t, i)
                assert O.is_allowable("ptree", got, (i,))
                assert P.leq("expansion", t, got)
                # minimal among the up-set with allowable split
                candidates = [
                    s for s in P.upset("expansion", t) if O.is_allowable("ptree", s, (i,))
                ]
                mins = [s for s in candidates if not any(s2 != s and P.leq("expansion", s2, s) for s2 in candidates)]
                assert mins == [got]


def test_binary_minimal_allowable_identity():
    for t in C.binary_trees(4):
        for i in range(1, 5):
            assert O.minimal_allowable(t, i) == t


# --- shuffles ------------------------------------------------------------------

def test_shuffle_counts():
    assert len(O.enumerate_shuffles("perm", [(2, 1), (1, 2)])) == 6
    assert len(O.enumerate_shuffles("ptree", [T("(L (L L))"), T("(L L L)")])) == 3
    assert len(O.enumerate_shuffles("perm", [(1,)])) == 1


def test_shuffle_images_match_product_example():
    images = sorted(
        C.render_word(O.apply_shuffle("perm", z, [(2, 1), (1, 2)]))
        for z in O.enumerate_shuffles("perm", [(2, 1), (1, 2)])
    )
    assert images == ["2134", "2314", "2341", "3214", "3241", "3421"]


def test_backslash_shuffle():
    blocks = [(1,), (1, 2), (1,)]
    z = O.backslash_shuffle("perm", blocks)
    assert O.apply_shuffle("perm", z, blocks) == (1, 2, 3, 4)


def test_factor_through_worked_example():
    blocks = [(1,), (1, 2), (1,)]
    target = {C.render_word(O.apply_shuffle("perm", z, blocks)): z for z in O.enumerate_shuffles("perm", blocks)}
    z = target["2134"]
    merged = O.factor_through("perm", z, blocks, 2)
    assert merged is not None
    over = O.graft_over("perm", (1, 2), (1,))
    assert O.apply_shuffle("perm", merged, [(1,), over]) == (3, 1, 4, 2)
    # the 1234 shuffle also factors at gap 2 but its slash variant differs
    z2 = target["1234"]
    merged2 = O.factor_through("perm", z2, blocks, 2)
    assert merged2 is not None


def test_factor_through_reenumeration_oracle():
    # provenance criterion agrees with exhaustive re-enumeration
    for blocks in ([(1,), (1, 2)], [(2, 1), (1,)], [(1,), (1,), (1,)]):
        k = len(blocks)
        for z in O.enumerate_shuffles("perm", blocks):
            for gap in range(1, k):
                merged = O.factor_through("perm", z, blocks, gap)
                under = O.graft_under("perm", blocks[gap - 1], blocks[gap])
                nb = list(blocks)
                nb[gap - 1 : gap + 1] = [under]
                res, prov = O.apply_shuffle("perm", z, blocks, with_provenance=True)
                dj = len(blocks[gap - 1])
                want = []
                for b, r in prov:
                    if b == gap:
                        want.append((gap - 1, r + dj))
                    elif b > gap:
                        want.append((b - 1, r))
                    else:
                        want.append((b, r))
                exists = any(
                    O.apply_shuffle("perm", z2, nb, with_provenance=True) == (res, tuple(want))
                    for z2 in O.enumerate_shuffles("perm", nb)
                )
                assert (merged is not None) == exists


def test_provenance_tags():
    blocks = [(2, 1), (1, 2)]
    for z in O.enumerate_shuffles("perm", blocks):
        res, prov = O.apply_shuffle("perm", z, blocks, with_provenance=True)
        # block letters: block 0 contributes values <= 2, block 1 the rest
        for pos, (b, r) in enumerate(prov):
            assert (res[pos] <= 2) == (b == 0)


def test_degree_additive_under_shuffles():
    for s, t in itertools.product(C.planar_trees(2), repeat=2):
        for z in O.enumerate_shuffles("ptree", [s, t]):
            r = O.apply_shuffle("ptree", z, [s, t])
            assert r.deg == s.deg + t.deg
            assert r.ideg == s.ideg + t.ideg  # allowable shuffles conserve ideg


# --- weak order helpers -----------------------------------------------------

def test_weak_join_meet():
    assert O.weak_join((2, 1, 3), (1, 3, 2)) == (3, 2, 1)
    assert O.weak_meet((2, 1, 3), (1, 3, 2)) == (1, 2, 3)
    for u, v in itertools.product(C.permutations(3), repeat=2):
        j = O.weak_join(u, v)
        assert C.word_inversions(u) <= C.word_inversions(j)
        assert C.word_inversions(v) <= C.word_inversions(j)
