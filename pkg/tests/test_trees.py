"""Tree generators: counts against reference sequences, register numbers,
and statistics on small exhaustive sets."""

import math
from collections import Counter

import pytest

from latticepaths.combinat import a002212_terms, catalan, motzkin_numbers
from latticepaths.trees import (
    gen_binary,
    gen_hex,
    gen_marked,
    gen_multiedge,
    gen_ordered,
    gen_ternary,
    gen_unary_binary,
    reg,
    tree_size,
    tree_stats,
)


# ----------------------------------------------------------------------
# counts
# ----------------------------------------------------------------------

def test_binary_counts_are_catalan():
    assert [len(gen_binary(n)) for n in range(8)] == [catalan(n) for n in range(8)]


def test_unary_binary_counts_by_color():
    # zero unary colors degenerates to binary trees
    assert [len(gen_unary_binary(n, a=0)) for n in range(7)] == [catalan(n) for n in range(7)]
    seq = a002212_terms(6)
    assert [len(gen_unary_binary(n, a=1)) for n in range(7)] == seq
    # two colors; values agree with the trinomial closed form of weight a+2=4
    counts = [len(gen_unary_binary(n, a=2)) for n in range(5)]
    assert counts == [1, 1, 4, 17, 76]


def test_hex_counts_match_one_color_unary_binary():
    for n in range(7):
        assert len(gen_hex(n)) == len(gen_unary_binary(n, a=1))


def test_ordered_counts():
    assert gen_ordered(0) == []
    assert [len(gen_ordered(n)) for n in range(1, 7)] == [catalan(n - 1) for n in range(1, 7)]


def test_marked_counts():
    assert [len(gen_marked(n)) for n in range(1, 7)] == [1, 1, 3, 10, 36, 137]


def test_multiedge_counts():
    m3 = motzkin_numbers(5, colors=3)
    assert [len(gen_multiedge(w)) for w in range(1, 7)] == m3


def test_multiedge_small_enumeration():
    assert gen_multiedge(2) == [
        ((1, ()), (1, ())),
        ((1, ((1, ()),)),),
        ((2, ()),),
    ]


def test_ternary_counts():
    want = [math.comb(3 * n, n) // (2 * n + 1) for n in range(6)]
    assert [len(gen_ternary(n)) for n in range(6)] == want


# ----------------------------------------------------------------------
# sizes
# ----------------------------------------------------------------------

@pytest.mark.parametrize("family,gen,sizes", [
    ("binary", gen_binary, range(5)),
    ("unary_binary", lambda n: gen_unary_binary(n, 1), range(5)),
    ("hex", gen_hex, range(5)),
    ("ordered", gen_ordered, range(1, 6)),
    ("marked", gen_marked, range(1, 6)),
    ("multiedge", gen_multiedge, range(1, 6)),
    ("ternary", gen_ternary, range(4)),
])
def test_tree_size_matches_generator_argument(family, gen, sizes):
    for n in sizes:
        for t in gen(n):
            assert tree_size(t, family) == n


def test_tree_size_unknown_family():
    with pytest.raises(ValueError):
        tree_size(None, "nosuch")


# ----------------------------------------------------------------------
# register numbers
# ----------------------------------------------------------------------

def test_reg_base_cases():
    assert reg(None) == 0
    assert reg((None, None)) == 1
    assert reg(((None, None), (None, None))) == 2
    # a comb never needs more than one register
    comb = (None, None)
    for _ in range(5):
        comb = (comb, None)
    assert reg(comb) == 1


def test_reg_complete_binary_tree():
    t = None
    for depth in range(5):
        t = (t, t) if t is not None else (None, None)
        assert reg(t) == depth + 1


def test_reg_unary_edges_pass_through():
    child = ("2", None, None)
    assert reg(("u", 0, child), "unary_binary") == reg(child, "unary_binary") == 1


def test_reg_hex_bare_node():
    assert reg((".",), "hex") == 1
    assert reg(("M", (".",)), "hex") == 1
    assert reg(("2", (".",), (".",)), "hex") == 2


def test_reg_level_one_binary_counts():
    # exactly one register: zigzag chains, 2^(n-1) of them
    for n in range(1, 7):
        got = sum(1 for t in gen_binary(n) if reg(t) == 1)
        assert got == 2 ** (n - 1)


def test_reg_rejects_unscored_family():
    with pytest.raises(ValueError):
        reg((), "ordered")


# ----------------------------------------------------------------------
# statistics
# ----------------------------------------------------------------------

def test_tree_stats_empty_tree():
    st = tree_stats(None, "binary")
    assert st["height_nodes"] == 0 and st["height_edges"] == -1
    assert st["leaves"] == 0


def test_tree_stats_hand_examples():
    st = tree_stats(((), ()), "ordered")
    assert st["leaves"] == 2
    assert st["height_nodes"] == 2 and st["height_edges"] == 1

    st = tree_stats(("M", (".",)), "hex")
    assert st["middle_edges"] == 1

    st = tree_stats((None, (None, None, None), None), "ternary")
    assert st["middle_edges"] == 1
    st = tree_stats(((None, None, None), None, None), "ternary")
    assert st["middle_edges"] == 0


def test_tree_stats_marks():
    counts = Counter(tree_stats(t, "marked")["mark_count"] for t in gen_marked(3))
    assert counts == {0: 2, 1: 1}


def test_ternary_middle_edge_distribution():
    rows = {
        1: [1],
        2: [2, 1],
        3: [5, 6, 1],
        4: [14, 28, 12, 1],
    }
    for n, row in rows.items():
        got = Counter(tree_stats(t, "ternary")["middle_edges"] for t in gen_ternary(n))
        assert [got.get(k, 0) for k in range(n)] == row


def test_marked_tree_leaves_ignore_marks():
    # a marked edge does not change which nodes are leaves
    for t in gen_marked(4):
        plain = tree_stats(t, "marked")
        assert plain["leaves"] >= 1
        assert plain["height_nodes"] <= 4
