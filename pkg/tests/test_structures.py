import pytest

from crossing_count import structures
from crossing_count.oracle import EnumSpec, enumerate_count
from crossing_count.structures import LambdaTable, lambda_weight, s_k3, s_k3_by_isolated


def test_lambda_initial_conditions():
    assert lambda_weight(4, 1) == 5
    assert lambda_weight(8, 4) == 5
    assert lambda_weight(3, 2) == 0
    for n in range(50):
        assert lambda_weight(n, 0) == 1


def test_lambda_out_of_range_is_zero():
    assert lambda_weight(5, -1) == 0
    assert lambda_weight(5, 3) == 0


def test_lambda_rejects_negative_row():
    with pytest.raises(ValueError):
        lambda_weight(-1, 0)


def test_lambda_linear_row():
    for n in range(2, 201):
        assert lambda_weight(n, 1) == 2 * n - 3


def test_lambda_recursion_closure():
    for n in range(4, 201):
        for b in range(n // 2 + 1):
            assert lambda_weight(n, b) == (
                lambda_weight(n - 1, b)
                + lambda_weight(n - 2, b - 1)
                + lambda_weight(n - 3, b - 1)
                + lambda_weight(n - 4, b - 2)
            )


def test_lambda_diagonal_is_fibonacci():
    # lam(0,0) = lam(2,1) = 1, then each diagonal entry is the sum of
    # the previous two
    diag = [lambda_weight(2 * b, b) for b in range(101)]
    assert diag[0] == diag[1] == 1
    for b in range(2, 101):
        assert diag[b] == diag[b - 1] + diag[b - 2]


def test_lambda_table_type():
    table = LambdaTable(max_n=10)
    assert table.max_n == 10
    table.ensure(20)
    assert table.max_n == 20
    assert table.value(8, 4) == 5
    assert table.value(30, 2) == lambda_weight(30, 2)


def test_s_k3_small_values():
    assert s_k3(3, 3) == 1
    assert s_k3(3, 4) == 2
    assert s_k3(3, 5) == 5


def test_s_k3_rejects_bad_arguments():
    with pytest.raises(ValueError):
        s_k3(2, 5)
    with pytest.raises(ValueError):
        s_k3(3, -1)


def test_s_k3_by_isolated_values():
    assert s_k3_by_isolated(3, 4, 4) == 1
    assert s_k3_by_isolated(3, 4, 2) == 1
    # frozen from the exhaustive oracle, re-checked below
    assert s_k3_by_isolated(3, 7, 3) == 24


def test_s_k3_by_isolated_rejects_bad_ell():
    with pytest.raises(ValueError):
        s_k3_by_isolated(3, 4, 5)


def test_matches_oracle_to_10():
    for k in (3, 4):
        for n in range(11):
            hist = enumerate_count(
                EnumSpec(n=n, max_crossing=k, min_arc_length=3, by_isolated=True)
            )
            assert sum(hist.values()) == s_k3(k, n)
            for ell in range(n + 1):
                assert hist.get(ell, 0) == s_k3_by_isolated(k, n, ell)


def test_monotone_in_n_and_k():
    for k in (3, 4, 5):
        for n in range(40):
            assert s_k3(k, n) <= s_k3(k, n + 1)
            assert s_k3(k, n) <= s_k3(k + 1, n)


def test_sum_rule_over_isolated():
    for k in (3, 4):
        for n in range(41):
            parts = [s_k3_by_isolated(k, n, ell) for ell in range(n + 1)]
            assert all(p >= 0 for p in parts)
            assert sum(parts) == s_k3(k, n)


def test_structure_counts_are_cached():
    before = structures.s_k3(3, 25)
    assert structures.s_k3(3, 25) == before
