"""Exact coefficient arithmetic: rational functions in the weight and q-Laurent quotients."""

from .qlaurent import QL_ONE, QL_ZERO, QLaurent, QRatFunc, bar_involution, q_number, qlaurent_arith
from .ratfunc import ONE, ZERO, RatFunc, ratfunc_arith, to_fmpq, to_fraction

__all__ = [
    "ONE", "ZERO", "RatFunc", "ratfunc_arith", "to_fmpq", "to_fraction",
    "QL_ONE", "QL_ZERO", "QLaurent", "QRatFunc", "bar_involution", "q_number", "qlaurent_arith",
]
