from fractions import Fraction

import pytest

from whittaker_paths.algebra import ONE, ZERO, RatFunc, ratfunc_arith


def test_gcd_cancellation(l1):
    assert (l1 * l1 - 1) / (l1 - 1) == l1 + 1
    assert str((l1 * l1 - 1) / (l1 - 1)) == "l1+1"


def test_denominator_is_monic(l1, l2):
    x = RatFunc(1) / (-2 * l1 - 4 * l2)
    assert str(x) == "-1/(2*(l1+2*l2))"
    assert x == RatFunc(-1) / (2 * l1 + 4 * l2)


@pytest.mark.parametrize(
    "build, text",
    [
        (lambda a, b: a + 1, "l1+1"),
        (lambda a, b: 1 / (a + 1), "1/(l1+1)"),
        (lambda a, b: (a + 1) / (2 * a * (a + 2)), "(l1+1)/(2*l1*(l1+2))"),
        (lambda a, b: -(a + b) / (a * b * (a + b + 1)), "-(l1+l2)/(l1*l2*(l1+l2+1))"),
        (lambda a, b: 1 / (a * a), "1/l1^2"),
        (lambda a, b: RatFunc(0), "0"),
        (lambda a, b: RatFunc(Fraction(-3, 4)), "-3/4"),
    ],
)
def test_pretty(l1, l2, build, text):
    assert str(build(l1, l2)) == text


def test_zero_division(l1):
    with pytest.raises(ZeroDivisionError):
        l1 / (l1 - l1)
    with pytest.raises(ZeroDivisionError):
        RatFunc(1, 0)


def test_evaluate_and_specialize(l1, l2):
    x = (l1 + 2 * l2) / (l1 - l2)
    assert x.evaluate({"l1": 3, "l2": 1}) == Fraction(5, 2)
    assert x.specialize({"l2": 1}) == (l1 + 2) / (l1 - 1)
    with pytest.raises(KeyError):
        x.evaluate({"l1": 3})
    with pytest.raises(ZeroDivisionError):
        x.evaluate({"l1": 1, "l2": 1})


def test_eps_variable():
    e = RatFunc.eps()
    assert e.variables() == ("eps",)
    assert str(1 / e) == "1/eps"


def test_json_roundtrip(l1, l2):
    for x in [ZERO, ONE, (l1 * l1 - l2) / (3 * l1 * l2 + 1), RatFunc(Fraction(7, 3)) * RatFunc.eps()]:
        assert RatFunc.from_json(x.to_json()) == x


def test_arith_dispatch(l1):
    assert ratfunc_arith(l1, ONE, "add") == l1 + 1
    assert ratfunc_arith(l1, l1, "div") == ONE
    with pytest.raises(ValueError):
        ratfunc_arith(l1, l1, "%")


def test_constant_value(l1):
    assert ((l1 + 1) / (2 * l1 + 2)).constant_value() == Fraction(1, 2)
    with pytest.raises(ValueError):
        l1.constant_value()
