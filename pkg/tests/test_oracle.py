"""Brute-force baselines: the baselines themselves must be right."""

import pytest

from factorder.oracle import (
    OracleReport,
    bounded_jep,
    brute_sigma,
    brute_sigma_table,
    enumerate_av_perms,
    enumerate_av_words,
    no_common_superpath,
    validate_antichain,
)
from factorder.permcore import (
    PermClassSpec,
    path_to_perm_set,
    perm_factor_graph,
)
from factorder.words import WordClassSpec, word_factor_graph


class TestEnumerateAvPerms:
    def test_bicycle_class_shorts(self):
        got = enumerate_av_perms(["231", "312", "321", "1243", "3142"], 3)
        assert got == [(1,), (1, 2), (2, 1),
                       (1, 2, 3), (1, 3, 2), (2, 1, 3)]

    def test_av_123_321(self):
        got = enumerate_av_perms(["123", "321"], 3)
        assert got == [(1,), (1, 2), (2, 1),
                       (1, 3, 2), (2, 1, 3), (2, 3, 1), (3, 1, 2)]

    def test_av_12_21(self):
        assert enumerate_av_perms(["12", "21"], 3) == [(1,)]

    def test_scale_guard(self):
        with pytest.raises(ValueError):
            enumerate_av_perms([], 11)

    def test_matches_factor_graph_vertices(self):
        basis = ["123", "321"]
        slice3 = {p for p in enumerate_av_perms(basis, 3) if len(p) == 3}
        g = perm_factor_graph(PermClassSpec(basis), 3)
        assert slice3 == set(g.vertex_perms.values())


class TestEnumerateAvWords:
    def test_small_class(self):
        got = enumerate_av_words("ab", ["bb", "aab"], 3)
        expected = [(), ("a",), ("b",),
                    ("a", "a"), ("a", "b"), ("b", "a"),
                    ("a", "a", "a"), ("a", "b", "a"),
                    ("b", "a", "a"), ("b", "a", "b")]
        assert got == expected

    def test_scale_guard(self):
        with pytest.raises(ValueError):
            enumerate_av_words("abcdefghij", [], 8)


class TestBruteSigma:
    def test_five_realizations(self):
        got = brute_sigma(["123", "231", "312"], 3)
        assert got == [(1, 3, 5, 2, 4), (1, 4, 5, 2, 3), (2, 3, 5, 1, 4),
                       (2, 4, 5, 1, 3), (3, 4, 5, 1, 2)]

    def test_branching_pair(self):
        assert brute_sigma(["312", "123"], 3) == [(3, 1, 2, 4), (4, 1, 2, 3)]

    def test_single_vertex(self):
        assert brute_sigma(["2143"], 4) == [(2, 1, 4, 3)]

    def test_accepts_rank_tuples(self):
        assert brute_sigma([(2, 1, 3), (1, 3, 2)], 3) == [
            (2, 1, 4, 3), (3, 1, 4, 2)]

    def test_scale_guard(self):
        with pytest.raises(ValueError):
            brute_sigma(["1234"] * 8, 4)

    def test_agrees_with_incremental(self):
        a, b, c, d = "2143", "1324", "2134", "1234"
        for path in [(a, b, a, b), (b, a, b, c), (c, d, d, d), (d, d, d, d)]:
            assert brute_sigma(path, 4) == path_to_perm_set(path)


class TestBruteSigmaTable:
    def test_buckets_cover_everything(self):
        table = brute_sigma_table(3, 4)
        assert sum(len(v) for v in table.values()) == 24
        assert table[("123", "123")] == [(1, 2, 3, 4)]

    def test_buckets_match_incremental(self):
        table = brute_sigma_table(3, 4)
        for path, members in table.items():
            assert path_to_perm_set(path) == members


class TestBoundedJep:
    def test_refuted_perm_pair(self):
        universe = enumerate_av_perms(["132", "213", "231", "321"], 9)
        report = bounded_jep([(4, 1, 2, 3), (3, 1, 2, 4)], universe)
        assert report.verdict == "refuted"
        assert report.counterexample == ["4123", "3124"]

    def test_confirmed_word_pair(self):
        universe = enumerate_av_words("ab", ["bb", "aab"], 5)
        assert ("a", "b", "a") in universe
        report = bounded_jep(["a", "b"], universe)
        assert report.verdict == "confirmed"
        assert report.counterexample is None

    def test_exact_on_finite_class(self):
        universe = enumerate_av_words("ab", ["aa", "ab", "ba"], 4)
        report = bounded_jep(["a", "bb"], universe)
        assert report.verdict == "refuted"
        assert report.counterexample == ["a", "bb"]

    def test_self_pair_uses_element_itself(self):
        report = bounded_jep([(1, 2)], [(1, 2)])
        assert report.verdict == "confirmed"

    def test_empty_elements(self):
        assert bounded_jep([], []).verdict == "confirmed"

    def test_mixed_types_rejected(self):
        with pytest.raises(ValueError):
            bounded_jep([(1, 2), "ab"], [])


class TestValidateAntichain:
    def test_paper_family(self):
        family = [tuple([n - 1] + list(range(1, n - 1)) + [n])
                  for n in range(4, 9)]
        assert family[0] == (3, 1, 2, 4)
        assert validate_antichain(family).verdict == "confirmed"

    def test_comparable_pair_refuted(self):
        report = validate_antichain([(1, 2), (1, 2, 3)])
        assert report.verdict == "refuted"
        assert report.counterexample == ["12", "123"]

    def test_singleton(self):
        assert validate_antichain([(1, 2, 3)]).verdict == "confirmed"

    def test_word_antichain(self):
        report = validate_antichain(["aabababb", "aababababb"])
        assert report.verdict == "confirmed"

    def test_report_json(self):
        report = validate_antichain([(1, 2), (2, 1)])
        js = report.to_json()
        assert js["verdict"] == "confirmed"
        assert "counterexample" not in js


class TestNoCommonSuperpath:
    def g_words(self):
        spec = WordClassSpec("ab", ["aaa", "baa", "bba", "bbb"])
        return word_factor_graph(spec).graph

    def test_true_on_failing_pair(self):
        g = self.g_words()
        p = ("aab", "aba", "bab", "aba")
        q = ("aab", "aba", "bab", "abb")
        assert no_common_superpath(g, p, q)

    def test_false_when_join_exists(self):
        g = self.g_words()
        assert not no_common_superpath(g, ("aab",), ("abb",))

    def test_false_on_equal_paths(self):
        g = self.g_words()
        assert not no_common_superpath(g, ("aab", "aba"), ("aab", "aba"))

    def test_true_across_components(self):
        from factorder.digraph import make_digraph
        g = make_digraph(["u", "w"], [("u", "u"), ("w", "w")])
        assert no_common_superpath(g, ("u",), ("w",))

    def test_rejects_empty(self):
        g = self.g_words()
        with pytest.raises(ValueError):
            no_common_superpath(g, (), ("aab",))
