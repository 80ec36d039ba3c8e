"""Whittaker vectors and fundamental Whittaker functions for finite types.

The Whittaker vector is the sum over paths of ``x(p) f_{i_N}...f_{i_1}|lambda>``
with the monomial ``prod (d_i mu_i)^{beta_i}``; the Whittaker function is the
series ``sum_beta nu^beta e^{(lambda-beta|phi)} Z_beta`` with ``phi = sum phi_i alpha_i^vee``.
Monomials in mu and nu are carried as degree vectors.

The Toda equation is checked through its coefficient form: the scalar identity
``((lambda+rho|lambda+rho) - (lambda+rho-beta|lambda+rho-beta))/2 = v(beta)``
together with the partition-function recursion.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .algebra.ratfunc import RatFunc
from .cartan import CartanData, RootVec, WeightParam, weight_inner_product
from .errors import CapExceeded, DimensionMismatch, UnsupportedType
from .paths import (
    DEFAULT_CAP,
    Path,
    PartitionTable,
    enumerate_paths,
    lattice_points,
    path_weight,
    vertex_weight,
)


@dataclass(frozen=True)
class WhittakerVectorTerm:
    path: Path
    coefficient: object
    mu_degree: RootVec

    def word(self) -> str:
        """The lowering word, rightmost factor applied first; empty for the highest weight vector."""
        return " ".join(f"f{i + 1}" for i in reversed(self.path.steps))


@dataclass(frozen=True)
class WhittakerSeriesTerm:
    beta: RootVec
    nu_degree: RootVec
    exponent: tuple  # coefficient of each phi_i
    coefficient: object


def whittaker_vector(cd: CartanData, weight: WeightParam, max_degree: int, cap: int = DEFAULT_CAP) -> list[WhittakerVectorTerm]:
    if max_degree > cap:
        raise CapExceeded(f"degree {max_degree} exceeds the enumeration cap {cap}")
    terms = []
    for beta in lattice_points(cd.size, max_degree):
        for p in sorted(enumerate_paths(beta, cap), key=lambda p: p.steps):
            terms.append(WhittakerVectorTerm(p, path_weight(cd, weight, p), beta))
    return terms


def series_exponent(cd: CartanData, weight: WeightParam, beta: Sequence[int], modified: bool = True) -> tuple:
    """Coefficients of phi_i in (lambda [+rho] - beta | phi): lambda_i [+1] - sum_j C_ji beta_j."""
    shift = cd.root_to_weight(beta)
    return tuple((x + 1 if modified else x) - s for x, s in zip(weight.lam, shift))


def whittaker_series(
    cd: CartanData,
    weight: WeightParam,
    max_degree: int,
    modified: bool = True,
    table: PartitionTable | None = None,
) -> list[WhittakerSeriesTerm]:
    """Series terms up to total degree ``max_degree``.

    ``modified`` gives the rho-shifted function ``e^{(rho|phi)} W``.
    """
    if cd.affine:
        raise UnsupportedType("use the affine module for affine series")
    table = table or PartitionTable(cd, weight)
    out = []
    for beta, z in table.fill(max_degree).items():
        out.append(WhittakerSeriesTerm(beta, beta, series_exponent(cd, weight, beta, modified), z))
    return out


def _rho_shifted(weight: WeightParam) -> tuple:
    return tuple(x + 1 for x in weight.lam)


def toda_eigenvalue(cd: CartanData, weight: WeightParam):
    """E = (lambda+rho|lambda+rho)/2."""
    lr = _rho_shifted(weight)
    return weight_inner_product(cd, lr, lr) / 2


def toda_eigen_identity(cd: CartanData, weight: WeightParam, beta: Sequence[int]) -> bool:
    lr = _rho_shifted(weight)
    shifted = tuple(x - s for x, s in zip(lr, cd.root_to_weight(beta)))
    lhs = (weight_inner_product(cd, lr, lr) - weight_inner_product(cd, shifted, shifted)) / 2
    return lhs == vertex_weight(cd, weight, beta)


# -- type A2 ---------------------------------------------------------------

def _a2_lambdas(weight) -> tuple:
    lam = weight.lam if isinstance(weight, WeightParam) else tuple(weight)
    if len(lam) != 2:
        raise DimensionMismatch("A2 formulas need two weight coordinates")
    return lam


def bump_closed_form(b1: int, b2: int, weight):
    """Product formula for the A2 partition function.

    Z = prod_{j=1}^{b1+b2} (l1+l2+2-j)
        / [prod_{j<=b1} j (l1+1-j)(l1+l2+2-j) * prod_{j<=b2} j (l2+1-j)(l1+l2+2-j)]
    """
    l1, l2 = _a2_lambdas(weight)
    s = l1 + l2 + 2
    num = 1
    for j in range(1, b1 + b2 + 1):
        num = num * (s - j)
    den = 1
    for j in range(1, b1 + 1):
        den = den * (j * (l1 + 1 - j) * (s - j))
    for j in range(1, b2 + 1):
        den = den * (j * (l2 + 1 - j) * (s - j))
    if isinstance(num, int) and isinstance(den, int):
        return RatFunc(num) / den
    return num / den


def a2_higher_recursions(table: PartitionTable, b1: int, b2: int) -> dict[str, bool]:
    """The two third-order recursions, their combination, and their sum.

    first:   b1 (l1+1-b1)(l1+l2+2-b1) Z = (l1+l2+2-b1-b2) Z_{b1-1,b2}
    second:  b2 (l2+1-b2)(l1+l2+2-b2) Z = (l1+l2+2-b1-b2) Z_{b1,b2-1}
    combined: (b1-b2)(l1+1-b1)(l2+1-b2) Z = (l2+1-b2) Z_{b1-1,b2} - (l1+1-b1) Z_{b1,b2-1}
    sum:      first + second equals (l1+l2+2-b1-b2) times the basic recursion
    """
    l1, l2 = _a2_lambdas(table.weight)
    z = table[(b1, b2)]
    z1 = table[(b1 - 1, b2)]
    z2 = table[(b1, b2 - 1)]
    s = l1 + l2 + 2
    c = s - b1 - b2
    u1 = l1 + 1 - b1
    u2 = l2 + 1 - b2
    lhs1 = b1 * u1 * (s - b1)
    lhs2 = b2 * u2 * (s - b2)
    v = vertex_weight(table.cd, table.weight, (b1, b2))
    return {
        "first": lhs1 * z == c * z1,
        "second": lhs2 * z == c * z2,
        "combined": (b1 - b2) * u1 * u2 * z == u2 * z1 - u1 * z2,
        "sum": lhs1 + lhs2 == c * v,
    }


def a2_higher_recursion_check(table: PartitionTable, b1: int, b2: int) -> bool:
    return all(a2_higher_recursions(table, b1, b2).values())


def third_order_eigenvalue(weight):
    """E3 = (l1-l2) E - (l1-l2)^3/9 for A2."""
    l1, l2 = _a2_lambdas(weight)
    e = (l1 * l1 + l1 * l2 + l2 * l2) / 3 + l1 + l2 + 1
    return (l1 - l2) * e - (l1 - l2) ** 3 / 9


def _cubic(L1, L2):
    return (L1 - L2) * (2 * L1 + L2) * (L1 + 2 * L2) / 9


def third_order_coefficient_check(table: PartitionTable, b1: int, b2: int) -> bool:
    """Coefficient of nu^beta in H3 W~ = E3 W~ for A2.

    H3 = (D1-D2)(2D1+D2)(D1+2D2)/9 + nu1 e^{-(alpha_1|phi)}(D1+2D2) - nu2 e^{-(alpha_2|phi)}(2D1+D2),
    where D_i acts on e^{(lambda+rho-beta|phi)} as multiplication by lambda_i+1-sum_j C_ji beta_j.
    """
    cd, weight = table.cd, table.weight

    def L(beta):
        return series_exponent(cd, weight, beta, modified=True)

    beta = (b1, b2)
    lhs = _cubic(*L(beta)) * table[beta]
    if b1:
        m = (b1 - 1, b2)
        L1, L2 = L(m)
        lhs = lhs + (L1 + 2 * L2) * table[m]
    if b2:
        m = (b1, b2 - 1)
        L1, L2 = L(m)
        lhs = lhs - (2 * L1 + L2) * table[m]
    return lhs == third_order_eigenvalue(weight) * table[beta]
