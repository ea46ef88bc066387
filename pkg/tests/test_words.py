"""Word classes: de Bruijn graphs, factor graphs, atomicity and wqo decisions."""

import pytest

from factorder.words import (
    WordClassSpec,
    de_bruijn_graph,
    decide_word_atomic,
    decide_word_wqo,
    enumerate_class_words,
    factor_leq,
    parse_word,
    path_to_word,
    word_factor_graph,
    word_to_obj,
    word_to_path,
)


def spec_bb_aab():
    return WordClassSpec("ab", ["bb", "aab"])


def spec_aaa_baa_bba_bbb():
    return WordClassSpec("ab", ["aaa", "baa", "bba", "bbb"])


def spec_aa_aba_abb_bab():
    return WordClassSpec("ab", ["aa", "aba", "abb", "bab"])


class TestFactorLeq:
    def test_suffix(self):
        assert factor_leq(("a", "b"), ("b", "a", "b"))

    def test_no_occurrence(self):
        assert not factor_leq(("b", "b"), ("a", "b", "a", "b"))

    def test_empty_factor(self):
        assert factor_leq((), ("a", "b"))
        assert factor_leq((), ())

    def test_equal(self):
        assert factor_leq(("a",), ("a",))


class TestDeBruijn:
    def test_dimension_one(self):
        g = de_bruijn_graph("ab", 1)
        assert g.vertices == ("a", "b")
        assert len(g.edges) == 4

    def test_dimension_two(self):
        g = de_bruijn_graph("ab", 2)
        assert len(g.vertices) == 4
        assert len(g.edges) == 8
        assert g.has_edge("ab", "ba")
        assert g.has_edge("aa", "aa")
        assert not g.has_edge("ab", "aa")

    def test_unary(self):
        g = de_bruijn_graph("a", 3)
        assert g.vertices == ("aaa",)
        assert g.edges == (("aaa", "aaa"),)

    def test_zero_dimension_rejected(self):
        with pytest.raises(ValueError):
            de_bruijn_graph("ab", 0)

    def test_multi_token_symbols(self):
        g = de_bruijn_graph(["x", "yy"], 2)
        assert "x,yy" in g.vertices
        assert g.has_edge("x,yy", "yy,x")


class TestWordPathMaps:
    def test_word_to_path(self):
        assert word_to_path(("a", "b", "a", "b"), 2) == ("ab", "ba", "ab")

    def test_single_window(self):
        assert word_to_path(("a", "a", "b"), 3) == ("aab",)

    def test_slide(self):
        assert word_to_path(("b", "a", "a", "a"), 3) == ("baa", "aaa")

    def test_too_short(self):
        with pytest.raises(ValueError):
            word_to_path(("a",), 2)

    def test_path_to_word(self):
        assert path_to_word(("ab", "ba", "ab")) == ("a", "b", "a", "b")
        assert path_to_word(("aaa",)) == ("a", "a", "a")
        assert path_to_word(("bab", "aba", "baa", "aaa")) == tuple("babaaa")

    def test_malformed_overlap(self):
        with pytest.raises(ValueError, match="overlap"):
            path_to_word(("ab", "ca"))

    def test_round_trip(self):
        for w in [("a", "b", "a", "b", "b"), ("a",), ("b", "b", "b")]:
            for m in range(1, len(w) + 1):
                assert path_to_word(word_to_path(w, m)) == w


class TestSpecNormalization:
    def test_basic_fields(self):
        s = spec_bb_aab()
        assert s.alphabet == ("a", "b")
        assert s.basis == (("b", "b"), ("a", "a", "b"))
        assert s.b == 3

    def test_redundant_element_dropped(self):
        s = WordClassSpec("ab", ["bb", "abb"])
        assert s.basis == (("b", "b"),)
        assert s.b == 2

    def test_duplicates_dropped(self):
        s = WordClassSpec("ab", ["ab", "ab"])
        assert s.basis == (("a", "b"),)

    def test_epsilon_dominates(self):
        s = WordClassSpec("ab", ["", "ab", "bb"])
        assert s.basis == ((),)
        assert s.empty_class

    def test_empty_basis(self):
        s = WordClassSpec("ab", [])
        assert s.empty_basis
        assert s.b == 1

    def test_alphabet_validation(self):
        with pytest.raises(ValueError, match="nonempty"):
            WordClassSpec("", ["a"])
        with pytest.raises(ValueError, match="duplicate"):
            WordClassSpec("aa", [])
        with pytest.raises(ValueError, match="not in the alphabet"):
            WordClassSpec("ab", ["ac"])

    def test_declared_order_not_sorted(self):
        s = WordClassSpec("ba", [])
        assert s.alphabet == ("b", "a")
        assert s.sort_key(("a",)) > s.sort_key(("b",))

    def test_parse_word(self):
        assert parse_word("ab", ("a", "b")) == ("a", "b")
        assert parse_word(["x", "yy"], ("x", "yy")) == ("x", "yy")
        with pytest.raises(ValueError, match="not in the alphabet"):
            parse_word("ac", ("a", "b"))
        with pytest.raises(ValueError, match="multi-character"):
            parse_word("xyy", ("x", "yy"))

    def test_word_to_obj(self):
        assert word_to_obj(("a", "b")) == "ab"
        assert word_to_obj(("x", "yy")) == ["x", "yy"]
        assert word_to_obj(()) == ""


class TestEnumerate:
    def test_bb_aab_to_three(self):
        words = enumerate_class_words(spec_bb_aab(), 3)
        assert [word_to_obj(w) for w in words] == [
            "",
            "a",
            "b",
            "aa",
            "ab",
            "ba",
            "aaa",
            "aba",
            "baa",
            "bab",
        ]

    def test_unary_blocked(self):
        s = WordClassSpec("a", ["a"])
        assert enumerate_class_words(s, 5) == [()]

    def test_count_eleven(self):
        assert len(enumerate_class_words(spec_aaa_baa_bba_bbb(), 3)) == 11

    def test_empty_class(self):
        s = WordClassSpec("ab", [""])
        assert enumerate_class_words(s, 4) == []

    def test_declared_order(self):
        s = WordClassSpec("ba", [])
        words = enumerate_class_words(s, 1)
        assert words == [(), ("b",), ("a",)]


class TestFactorGraph:
    def test_bb_aab(self):
        fg = word_factor_graph(spec_bb_aab())
        assert fg.dimension == 3
        assert set(fg.graph.vertices) == {"aaa", "aba", "baa", "bab"}
        assert set(fg.graph.edges) == {
            ("aaa", "aaa"),
            ("aba", "baa"),
            ("aba", "bab"),
            ("baa", "aaa"),
            ("bab", "aba"),
        }

    def test_aaa_baa_bba_bbb(self):
        fg = word_factor_graph(spec_aaa_baa_bba_bbb())
        assert set(fg.graph.vertices) == {"aab", "aba", "abb", "bab"}
        assert set(fg.graph.edges) == {
            ("aab", "aba"),
            ("aab", "abb"),
            ("aba", "bab"),
            ("bab", "aba"),
            ("bab", "abb"),
        }

    def test_aa_aba_abb_bab(self):
        fg = word_factor_graph(spec_aa_aba_abb_bab())
        assert set(fg.graph.vertices) == {"bba", "bbb"}
        assert set(fg.graph.edges) == {("bbb", "bba"), ("bbb", "bbb")}

    def test_vertex_words_map(self):
        fg = word_factor_graph(spec_bb_aab())
        assert fg.word_of("bab") == ("b", "a", "b")

    def test_vertex_count_matches_enumeration(self):
        for s in [spec_bb_aab(), spec_aaa_baa_bba_bbb(), spec_aa_aba_abb_bab()]:
            length_b = [w for w in enumerate_class_words(s, s.b) if len(w) == s.b]
            assert len(s_graph := word_factor_graph(s).graph.vertices) == len(length_b)
            assert sorted(s_graph) == sorted(s.word_id(w) for w in length_b)

    def test_empty_basis_complete_graph(self):
        fg = word_factor_graph(WordClassSpec("ab", []))
        assert fg.dimension == 1
        assert set(fg.graph.vertices) == {"a", "b"}
        assert len(fg.graph.edges) == 4


class TestDecideAtomic:
    def test_bb_aab_atomic(self):
        d = decide_word_atomic(spec_bb_aab())
        assert d.value is True
        assert d.degenerate is None

    def test_aaa_family_not_atomic(self):
        d = decide_word_atomic(spec_aaa_baa_bba_bbb())
        assert d.value is False
        assert d.witness == {"word_pair": ["aababa", "aababb"]}

    def test_short_word_witness(self):
        d = decide_word_atomic(spec_aa_aba_abb_bab())
        assert d.value is False
        assert d.witness == {"short_word": "ab", "pair": ["ab", "bba"]}

    def test_witness_off(self):
        d = decide_word_atomic(spec_aaa_baa_bba_bbb(), witness=False)
        assert d.value is False
        assert d.witness is None

    def test_empty_class(self):
        d = decide_word_atomic(WordClassSpec("ab", [""]))
        assert d.value is None
        assert d.degenerate == "degenerate: empty class"

    def test_empty_basis(self):
        d = decide_word_atomic(WordClassSpec("ab", []))
        assert d.value is True
        assert d.degenerate == "degenerate: empty basis"

    def test_finite_atomic(self):
        d = decide_word_atomic(WordClassSpec("ab", ["aa", "ab", "bb"]))
        assert d.value is True

    def test_finite_not_atomic(self):
        d = decide_word_atomic(WordClassSpec("ab", ["aa", "ab", "ba", "bb"]))
        assert d.value is False
        assert d.witness == {"word_pair": ["a", "b"]}


class TestDecideWqo:
    def test_bb_aab_wqo(self):
        assert decide_word_wqo(spec_bb_aab()).value is True

    def test_aa_family_wqo(self):
        assert decide_word_wqo(spec_aa_aba_abb_bab()).value is True

    def test_aaa_family_not_wqo(self):
        d = decide_word_wqo(spec_aaa_baa_bba_bbb())
        assert d.value is False
        assert d.witness["in_out_cycle"] == ["aba", "bab", "aba"]
        chain = d.witness["antichain"]
        assert len(chain) == 10
        assert chain[0] == "aabababb"
        assert chain[1] == "aababababb"

    def test_antichain_incomparable(self):
        d = decide_word_wqo(spec_aaa_baa_bba_bbb(), witness_len=6)
        chain = [tuple(w) for w in d.witness["antichain"]]
        for i, a in enumerate(chain):
            for b in chain[i + 1 :]:
                assert not factor_leq(a, b)
                assert not factor_leq(b, a)

    def test_empty_basis_two_symbols(self):
        d = decide_word_wqo(WordClassSpec("ab", []))
        assert d.value is False
        assert d.degenerate == "degenerate: empty basis"
        assert d.witness["antichain"][0] == "baab"

    def test_empty_basis_one_symbol(self):
        d = decide_word_wqo(WordClassSpec("a", []))
        assert d.value is True
        assert d.degenerate == "degenerate: empty basis"

    def test_empty_class(self):
        d = decide_word_wqo(WordClassSpec("ab", [""]))
        assert d.value is None
        assert d.degenerate == "degenerate: empty class"

    def test_finite_class_wqo(self):
        assert decide_word_wqo(WordClassSpec("ab", ["aa", "ab", "ba", "bb"])).value is True

    def test_antichain_words_avoid_basis(self):
        s = spec_aaa_baa_bba_bbb()
        d = decide_word_wqo(s)
        for w in d.witness["antichain"]:
            assert s.avoids(tuple(w))
