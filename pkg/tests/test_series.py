import pytest
from hypothesis import given, strategies as st

from tangentcone.series import ONE_MINUS_T, SeriesPolynomial as S, cumulative, diff, parse_series

coeffs = st.lists(st.integers(-50, 50), max_size=12)


def test_parse_and_print():
    p = parse_series("1-3t^3+3t^{4}-t^{}")
    assert p.sparse() == {0: 1, 1: -1, 3: -3, 4: 3}
    assert str(p) == "1 - t - 3*t^3 + 3*t^4"
    assert parse_series(str(p)) == p
    assert parse_series("0") == S()


def test_parse_rejects():
    with pytest.raises(ValueError):
        parse_series("1 + x^2")


def test_divmod_exact():
    q, r = (S([1, 2, 3]) * ONE_MINUS_T).divmod_one_minus_t()
    assert q == S([1, 2, 3]) and r == 0


def test_divmod_remainder():
    q, r = S([5]).divmod_one_minus_t()
    assert q == S() and r == 5


@given(coeffs, coeffs)
def test_divmod_identity(a, _):
    p = S(a)
    q, r = p.divmod_one_minus_t()
    assert q * ONE_MINUS_T + S([r]) == p


@given(coeffs, coeffs)
def test_ring_laws(a, b):
    x, y = S(a), S(b)
    assert x * y == y * x
    assert (x + y) - y == x
    assert (x * y)(2) == x(2) * y(2)


def test_geometric_and_shift():
    assert S.geometric(3) == S([1, 1, 1, 1])
    assert S.geometric(-1) == S()
    assert S([1, 2]).shift(2) == S([0, 0, 1, 2])
    assert (ONE_MINUS_T ** 3) == S([1, -3, 3, -1])


def test_diff_and_cumulative():
    assert diff(S([1, 2]), S([1, 3, 4])) == {1: (2, 3), 2: (0, 4)}
    assert cumulative([1, 3, 6], 4) == [1, 4, 10, 10, 10]
