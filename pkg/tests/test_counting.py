import pytest

from qcayley.counting import (
    AladovTable,
    aladov_counts,
    aladov_enumerate,
    sd_counts,
    sd_oracle,
    sd_oracle_table,
    sd_prime_power,
    sd_zero_predicate,
    PairCounts,
)


def test_aladov_examples():
    assert aladov_counts(7) == AladovTable(1, 2, 1, 1)
    assert aladov_counts(13) == AladovTable(2, 3, 3, 3)
    assert aladov_counts(3, 2) == AladovTable(0, 3, 0, 0)


@pytest.mark.parametrize("p,m", [(3, 1), (3, 3), (5, 2), (7, 2), (11, 1), (13, 2), (29, 1), (31, 1)])
def test_aladov_matches_enumeration(p, m):
    assert aladov_counts(p, m) == aladov_enumerate(p, m)


def test_aladov_total_counts_consecutive_units():
    t = aladov_counts(13, 2)
    assert t.total == 13 * (13 - 2)


def test_prime_power_examples():
    assert sd_prime_power(13, 1, 1) == PairCounts(2, 2)
    assert sd_prime_power(7, 1, 3) == PairCounts(2, 1)
    assert sd_prime_power(7, 1, 0) == PairCounts(0, 3)


def test_composite_examples():
    assert sd_counts(15, 2).s == sd_prime_power(3, 1, 2).s * sd_prime_power(5, 1, 2).s
    assert sd_counts(21, 7).d == 0
    assert sd_counts(9, 0) == PairCounts(0, 3)
    assert sd_oracle(13, 1).s == 2  # (4, 10) and (10, 4)
    assert sd_oracle(8, 2).s == 1
    assert sd_counts(1, 0) == PairCounts(1, 1)


def test_closed_forms_match_oracle():
    for n in range(1, 400, 2):
        s, d = sd_oracle_table(n)
        for r in range(n):
            assert sd_counts(n, r) == PairCounts(s[r], d[r]), (n, r)


def test_oracle_table_agrees_with_direct_count():
    for n in (9, 15, 16, 45):
        s, d = sd_oracle_table(n)
        assert all(sd_oracle(n, r) == PairCounts(s[r], d[r]) for r in range(n))


def test_zero_predicate_examples():
    assert sd_zero_predicate(15, 1) == (True, True)
    assert sd_zero_predicate(21, 7) == (True, True)
    assert sd_zero_predicate(7, 0) == (True, False)


def test_zero_predicate_matches_counts():
    for n in range(1, 400, 2):
        for r in range(n):
            c = sd_counts(n, r)
            assert sd_zero_predicate(n, r) == (c.s == 0, c.d == 0), (n, r)


def test_even_and_bad_inputs_rejected():
    with pytest.raises(ValueError):
        sd_counts(10, 1)
    with pytest.raises(ValueError):
        sd_zero_predicate(4, 1)
    with pytest.raises(ValueError):
        aladov_counts(2)
    with pytest.raises(ValueError):
        sd_prime_power(9, 1, 1)
