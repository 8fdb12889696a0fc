import itertools

import pytest

from privword.exceptions import InvalidInputError
from privword.words import Word, classify, is_privileged_oracle
from privword.words.oracle import (
    ORACLE_MAX_LENGTH,
    border_lengths_naive,
    is_closed_any_border,
    privileged_naive,
)


def test_oracle_examples():
    assert is_privileged_oracle(Word.from_text("aa")) is True
    assert is_privileged_oracle(Word.from_text("ab")) is False
    assert is_privileged_oracle(Word.from_text("")) is True


def test_oracle_length_cap():
    u = Word((0,) * (ORACLE_MAX_LENGTH + 1), 2)
    with pytest.raises(InvalidInputError, match="cap"):
        is_privileged_oracle(u)
    assert is_privileged_oracle(u, max_length=ORACLE_MAX_LENGTH + 1) is True


def test_border_lengths_naive_descending():
    assert border_lengths_naive((0, 0, 1, 0, 0)) == [2, 1]
    assert border_lengths_naive((0, 1)) == []


@pytest.mark.parametrize("q, max_n", [(2, 14), (3, 9)])
def test_chain_classifier_matches_definitions(q, max_n):
    for n in range(0, max_n + 1):
        for s in itertools.product(range(q), repeat=n):
            closed, priv, b = classify(s)
            assert priv == privileged_naive(s), s
            assert closed == is_closed_any_border(s), s
            if n >= 2 and priv:
                assert closed, s
                assert classify(s[:b])[1], s
