from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mteval.textsim import (
    char_ngrams,
    damerau_levenshtein,
    jaccard_trigram,
    lexical_similarity,
    normalize,
    sequence_ratio,
    token_sort_ratio,
    tokenize,
)
from oracles import osa_distance_recursive, ratcliff_ratio

short_abc = st.text(alphabet="abc", max_size=6)
words = st.text(alphabet="abcdefgmnñáé", min_size=1, max_size=8)


class TestNormalize:
    def test_collapses_and_lowercases(self):
        assert normalize("Hola  Mundo ") == "hola mundo"

    def test_empty(self):
        assert normalize("") == ""

    def test_nfc_lowercase_of_precomposed(self):
        assert normalize("ÑANDE") == "ñande"

    def test_decomposed_input_composes(self):
        # N + combining tilde must compare equal to precomposed ñ
        assert normalize("Ñande") == "ñande"

    @given(st.text(max_size=40))
    def test_idempotent(self, raw):
        once = normalize(raw)
        assert normalize(once) == once

    @given(st.text(max_size=40))
    def test_no_edge_or_double_spaces(self, raw):
        result = normalize(raw)
        assert result == result.strip()
        assert "  " not in result


class TestTokenize:
    def test_basic(self):
        assert tokenize("hola mundo") == ["hola", "mundo"]

    def test_empty(self):
        assert tokenize("") == []

    def test_duplicates_preserved(self):
        assert tokenize("a b a") == ["a", "b", "a"]


class TestCharNgrams:
    def test_enumeration(self):
        assert char_ngrams("abcd", 3) == {"abc", "bcd"}

    def test_short_string_contributes_itself(self):
        grams = char_ngrams("ab", 3)
        assert grams == {"ab"}
        assert len(grams) == 1

    def test_empty(self):
        assert char_ngrams("", 3) == set()

    def test_bad_order(self):
        with pytest.raises(ValueError):
            char_ngrams("abc", 0)

    @given(st.text(alphabet="abcd", min_size=3, max_size=20))
    def test_gram_count_bound(self, text):
        assert len(char_ngrams(text, 3)) <= len(text) - 2


class TestJaccardTrigram:
    def test_identity(self):
        assert jaccard_trigram("abcd", "abcd") == 1.0

    def test_disjoint(self):
        assert jaccard_trigram("abc", "xyz") == 0.0

    def test_enumerated_value(self):
        # {abc, bcd} vs {abc, bce}: intersection 1, union 3
        assert jaccard_trigram("abcd", "abce") == pytest.approx(1 / 3)

    def test_both_empty(self):
        assert jaccard_trigram("", "") == 1.0

    @given(short_abc, short_abc)
    def test_symmetric_and_bounded(self, a, b):
        v = jaccard_trigram(a, b)
        assert v == jaccard_trigram(b, a)
        assert 0.0 <= v <= 1.0


class TestDamerauLevenshtein:
    def test_kitten_sitting(self):
        assert damerau_levenshtein("kitten", "sitting") == 3

    def test_single_transposition(self):
        assert damerau_levenshtein("ab", "ba") == 1

    def test_identity(self):
        assert damerau_levenshtein("x", "x") == 0

    def test_empty_sides(self):
        assert damerau_levenshtein("", "abc") == 3
        assert damerau_levenshtein("abc", "") == 3

    @settings(max_examples=300)
    @given(short_abc, short_abc)
    def test_matches_recursive_oracle(self, a, b):
        assert damerau_levenshtein(a, b) == osa_distance_recursive(a, b)

    @given(short_abc, short_abc)
    def test_metric_fragment(self, a, b):
        assert damerau_levenshtein(a, a) == 0
        assert damerau_levenshtein(a, b) == damerau_levenshtein(b, a)


class TestLexicalSimilarity:
    def test_identity(self):
        assert lexical_similarity("abc", "abc") == 1.0

    def test_empty_vs_nonempty(self):
        assert lexical_similarity("abc", "") == 0.0

    def test_both_empty(self):
        assert lexical_similarity("", "") == 1.0

    def test_kitten_sitting(self):
        assert lexical_similarity("kitten", "sitting") == pytest.approx(1 - 3 / 7)

    @given(words, words)
    def test_bounded(self, a, b):
        assert 0.0 <= lexical_similarity(a, b) <= 1.0


class TestSequenceRatio:
    def test_identity(self):
        assert sequence_ratio("abc", "abc") == 1.0

    def test_empty_vs_nonempty(self):
        assert sequence_ratio("abc", "") == 0.0

    def test_oracle_value(self):
        # longest block "bcd" gives M=3 over combined length 8
        assert sequence_ratio("abcd", "bcde") == pytest.approx(0.75)

    @settings(max_examples=300)
    @given(st.text(alphabet="abc ", max_size=12), st.text(alphabet="abc ", max_size=12))
    def test_matches_recursive_oracle(self, a, b):
        assert sequence_ratio(a, b) == pytest.approx(ratcliff_ratio(a, b), abs=1e-12)

    @given(st.text(alphabet="abcd", max_size=10), st.text(alphabet="abcd", max_size=10))
    def test_one_iff_equal(self, a, b):
        assert (sequence_ratio(a, b) == 1.0) == (a == b)


class TestTokenSortRatio:
    def test_word_order_invariance(self):
        assert token_sort_ratio("world hello", "hello world") == 1.0

    def test_identity(self):
        assert token_sort_ratio("a b", "a b") == 1.0

    def test_sorted_rejoin_equivalence(self):
        expected = sequence_ratio("hola mundo", "bola mundo")
        assert token_sort_ratio("hola mundo", "mundo bola") == expected
        assert expected == pytest.approx(ratcliff_ratio("hola mundo", "bola mundo"))
        assert expected == pytest.approx(0.9)

    @given(st.lists(words, min_size=1, max_size=5), st.lists(words, min_size=1, max_size=5),
           st.randoms(use_true_random=False))
    def test_permutation_invariant(self, left, right, rnd):
        base = token_sort_ratio(" ".join(left), " ".join(right))
        rnd.shuffle(left)
        rnd.shuffle(right)
        assert token_sort_ratio(" ".join(left), " ".join(right)) == base
