from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from crossing_count import powerseries as ps
from crossing_count.powerseries import TruncatedSeries

ORDER = 8

coefficients = st.fractions(
    min_value=-4, max_value=4, max_denominator=6
)
series = st.lists(coefficients, min_size=1, max_size=ORDER + 1).map(
    lambda cs: TruncatedSeries(cs, ORDER)
)


def poly(*coeffs, order=10):
    return TruncatedSeries(list(coeffs), order)


def test_arithmetic_examples():
    one_plus = poly(1, 1)
    one_minus = poly(1, -1)
    assert one_plus * one_minus == poly(1, 0, -1)
    s = poly(3, 1, 4, 1, 5)
    assert s + TruncatedSeries.zero(10) == s
    assert poly(1, 1, 1) - poly(1, 1) == poly(0, 0, 1)


def test_order_mismatch_rejected():
    with pytest.raises(ValueError):
        poly(1, order=5) + poly(1, order=6)
    with pytest.raises(ValueError):
        poly(1, order=5) * poly(1, order=6)


def test_reciprocal_geometric():
    assert poly(1, -1).reciprocal() == TruncatedSeries([1] * 11, 10)


def test_reciprocal_fibonacci():
    fib = poly(1, -1, -1).reciprocal()
    assert [fib[i] for i in range(6)] == [1, 1, 2, 3, 5, 8]


def test_reciprocal_of_one():
    assert TruncatedSeries.one(10).reciprocal() == TruncatedSeries.one(10)


def test_reciprocal_rejects_zero_constant():
    with pytest.raises(ValueError):
        poly(0, 1).reciprocal()


def test_compose_geometric_with_square():
    comp = ps.geometric(10).compose(poly(0, 0, 1))
    assert comp.coeffs == [Fraction(n % 2 == 0) for n in range(11)]


def test_compose_identities():
    f = poly(0, 2, 3, 0, 7)
    x = TruncatedSeries.x(10)
    assert x.compose(f) == f
    assert f.compose(x) == f


def test_compose_moebius():
    half = TruncatedSeries.x(10) * ps.geometric(10)  # x/(1-x)
    comp = half.compose(half)
    assert [comp[i] for i in range(5)] == [0, 1, 2, 4, 8]  # x/(1-2x)


def test_compose_rejects_nonzero_constant():
    with pytest.raises(ValueError):
        poly(1, 1).compose(poly(1, 1))


@given(series, series, series)
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(series)
def test_reciprocal_round_trip(a):
    if not a[0]:
        a = a + TruncatedSeries.one(ORDER)
    if not a[0]:
        return
    assert a * a.reciprocal() == TruncatedSeries.one(ORDER)


@given(series)
def test_compose_identity_round_trip(a):
    assert a.compose(TruncatedSeries.x(ORDER)) == a


def test_laplace_identity_orders():
    assert ps.verify_laplace_identity(3, 30).ok
    assert ps.verify_laplace_identity(4, 20).ok
    assert ps.verify_laplace_identity(3, 0).ok


def test_functional_equation_orders():
    assert ps.verify_functional_equation(3, 30).ok
    assert ps.verify_functional_equation(4, 20).ok
    assert ps.verify_functional_equation(3, 0).ok


def test_phi_identity_orders():
    assert ps.verify_phi_identity(0, 20).ok
    assert ps.verify_phi_identity(1, 20).ok
    assert ps.verify_phi_identity(5, 15).ok


def test_phi_base_case_is_fibonacci():
    phi0 = ps.TruncatedSeries([1, -1, -1], 20).reciprocal()
    from crossing_count.structures import lambda_weight

    for b in range(21):
        assert phi0[b] == lambda_weight(2 * b, b)


def test_bessel_egf_orders():
    assert ps.verify_bessel_egf(3, 16).ok
    assert ps.verify_bessel_egf(4, 12).ok
    assert ps.verify_bessel_egf(3, 2).ok


def test_bessel_series_symmetric_in_order():
    assert ps.bessel_i(-2, 12) == ps.bessel_i(2, 12)


def test_reconstructed_structure_coefficients_are_integers():
    order = 25
    u_inv = TruncatedSeries([1, -1, 1, 1, -1], order).reciprocal()
    w = TruncatedSeries([0, 1, 0, -1], order) * u_inv
    rhs = u_inv * ps._even_part(3, order).compose(w)
    assert all(c.denominator == 1 for c in rhs.coeffs)


def test_report_pinpoints_first_mismatch():
    report = ps._compare("demo", poly(1, 2, 3), poly(1, 2, 4))
    assert not report.ok
    assert report.first_mismatch == 2
    assert report.lhs == 3 and report.rhs == 4
    assert "MISMATCH" in report.describe()
