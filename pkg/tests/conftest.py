from fractions import Fraction

import pytest

from whittaker_paths.algebra import RatFunc
from whittaker_paths.cartan import WeightParam, build_cartan


@pytest.fixture
def l1():
    return RatFunc.lam(1)


@pytest.fixture
def l2():
    return RatFunc.lam(2)


@pytest.fixture
def a2():
    return build_cartan("A2"), WeightParam.symbolic(2)


@pytest.fixture
def affine_a1():
    return build_cartan("A1~"), WeightParam.symbolic(1, affine=True)


def frac(x) -> Fraction:
    return Fraction(x)
