from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from specular.quadratic import QuadraticNumber as Q

fracs = st.fractions(min_value=-50, max_value=50, max_denominator=30)


def golden_ratio():
    return (Q(1, 0, 5) + Q(0, 1, 5)) / 2


def test_golden_ratio_identity():
    phi = golden_ratio()
    assert phi * phi == phi + 1


def test_exact_comparison_close_to_zero():
    # sqrt(5) vs 2.2360679: differ in the eighth digit
    assert Q(0, 1, 5) > Q(Fraction(22360679, 10**7), 0, 5)
    assert Q(0, 1, 5) < Q(Fraction(22360680, 10**7), 0, 5)


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        Q(1, 0, 5) / Q(0, 0, 5)


def test_mixed_radicands_rejected():
    with pytest.raises(ValueError):
        Q(0, 1, 5) + Q(0, 1, 2)


def test_json_form():
    assert Q(Fraction(3, 2), Fraction(-1, 2), 5).to_json() == ["3/2", "-1/2"]


@given(fracs, fracs)
def test_sign_matches_float(p, q):
    x = Q(p, q, 5)
    f = float(p) + float(q) * 5 ** 0.5
    if abs(f) > 1e-9:
        assert x.sign() == (1 if f > 0 else -1)
    else:
        assert x.sign() == 0 or abs(f) < 1e-9


@given(fracs, fracs, fracs, fracs, fracs, fracs)
def test_field_laws(a, b, c, d, e, f):
    x, y, z = Q(a, b, 5), Q(c, d, 5), Q(e, f, 5)
    assert x + y == y + x
    assert x * y == y * x
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x - x == Q(0, 0, 5)
    if y.sign():
        assert (x / y) * y == x


@given(fracs, fracs, fracs, fracs, fracs, fracs)
def test_order_is_compatible_with_addition(a, b, c, d, e, f):
    x, y, z = Q(a, b, 5), Q(c, d, 5), Q(e, f, 5)
    assert (x < y) == (x + z < y + z)
    assert (x < y) or (y < x) or (x == y)
