"""Untwisted affine partition functions and the expansion at critical level.

Away from the critical level everything is the finite path model on the
affine lattice, with ``eps = k + h^vee`` carried as a variable.  At ``eps = 0``
the weight vanishes on the diagonal ``beta = m delta`` and the renormalized
Whittaker function takes the form ``e^{F/eps} (W_0 + eps W_1 + ...)`` with
``F = sum_m a_m nu^{m delta}``.  Its coefficients satisfy

    v(beta - beta_0 theta) w_{j;beta} + sum_m m a_m w_{j;beta - m delta}
        = -beta_0 w_{j-1;beta} + sum_i w_{j;beta - alpha_i}

``critical_solve`` runs this recursion degree by degree.  At the diagonal the
left side has no leading term, so those points carry free data:

* ``gauge="zero"`` sets every diagonal coefficient to zero except
  ``w_{0;0} = 1``.  The j = 0 equations all hold; the j >= 1 equations fail at
  the diagonal points.
* ``gauge="limit"`` takes the diagonal of ``W_{j-1}`` from the j-th diagonal
  equation, which is what the eps -> 0 limit of the non-critical function
  produces.  Every equation with j <= j_max then holds; the diagonal of
  ``W_{j_max}`` itself is left at zero.

The a_m do not depend on the gauge.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .cartan import CartanData, RootVec, WeightParam, affine_decompose
from .errors import SingularSpecialization, UnsupportedType
from .paths import (
    DEFAULT_CAP,
    PartitionTable,
    _zero,
    is_zero,
    lattice_points,
    partition_bruteforce,
    vertex_weight,
    vertex_weight_affine,
)

GAUGES = ("zero", "limit")


def _require_affine(cd: CartanData):
    if not cd.affine:
        raise UnsupportedType(f"{cd.type} is not affine")


class AffinePartitionTable(PartitionTable):
    """Partition table whose weights are cross-checked against the decomposed formula."""

    def __init__(self, cd: CartanData, weight: WeightParam, max_degree: int | None = None):
        _require_affine(cd)
        super().__init__(cd, weight, max_degree)
        self._v = lambda beta: vertex_weight_affine(cd, weight, beta)


def affine_partition_dp(cd: CartanData, weight: WeightParam, beta_hat: Sequence[int], table: AffinePartitionTable | None = None):
    table = table or AffinePartitionTable(cd, weight)
    return table[beta_hat]


def affine_partition_bruteforce(cd: CartanData, weight: WeightParam, beta_hat: Sequence[int], cap: int = DEFAULT_CAP):
    _require_affine(cd)
    return partition_bruteforce(cd, weight, beta_hat, cap)


def deformed_toda_identity(cd: CartanData, weight: WeightParam, beta_hat: Sequence[int]) -> bool:
    """v_hat(beta_hat) == (k + h^vee) beta_0 + v(beta - beta_0 theta)."""
    _require_affine(cd)
    direct = vertex_weight(cd, weight, beta_hat)
    b0, fin = affine_decompose(cd, beta_hat)
    return direct == weight.eps * b0 + vertex_weight(cd.finite, weight.lam, fin)


def renormalized_exponent(cd: CartanData, weight: WeightParam, beta_hat: Sequence[int]) -> tuple[tuple, tuple]:
    """Coefficients of phi_0..phi_r in (Lambda + rho_hat - beta_hat | phi_hat), two ways.

    ``phi_hat = sum_i phi_i alpha_i^vee``.  The first tuple pairs directly on the
    affine lattice; the second is eps phi_0 + (lambda+rho-(beta-beta_0 theta) | phi - phi_0 theta^vee)
    with ``phi - phi_0 theta^vee = sum_i (phi_i - a_i^vee phi_0) alpha_i^vee``.
    Raises AssertionError if they differ.
    """
    _require_affine(cd)
    coords = weight.affine_coords(cd)
    n = cd.size
    direct = tuple(
        coords[i] + 1 - sum(cd.cartan[j][i] * beta_hat[j] for j in range(n)) for i in range(n)
    )
    b0, fin = affine_decompose(cd, beta_hat)
    C = cd.finite.cartan
    r = cd.rank
    fin_pair = [weight.lam[i] + 1 - sum(C[j][i] * fin[j] for j in range(r)) for i in range(r)]
    phi0 = weight.eps
    for i in range(r):
        phi0 = phi0 - cd.comarks[i + 1] * fin_pair[i]
    split = (phi0,) + tuple(fin_pair)
    if not all(a == b for a, b in zip(direct, split)):
        raise AssertionError(f"exponent mismatch at {tuple(beta_hat)}")
    return direct, split


# -- critical level ---------------------------------------------------------

@dataclass
class CriticalExpansion:
    cd: CartanData
    weight: WeightParam
    max_degree: int
    j_max: int
    gauge: str
    a: dict[int, object] = field(default_factory=dict)
    w: dict[tuple[int, RootVec], object] = field(default_factory=dict)

    def coefficient(self, j: int, beta_hat: Sequence[int]):
        beta_hat = tuple(beta_hat)
        if j < 0 or any(b < 0 for b in beta_hat):
            return _zero(self.weight)
        return self.w[(j, beta_hat)]

    def diagonal_index(self, beta_hat: Sequence[int]) -> int | None:
        """m if beta_hat = m delta, else None."""
        b0, fin = affine_decompose(self.cd, beta_hat)
        return None if any(fin) else b0

    def residual(self, j: int, beta_hat: Sequence[int]):
        """LHS - RHS of the defining recursion at (j, beta_hat)."""
        beta_hat = tuple(beta_hat)
        cd = self.cd
        b0, fin = affine_decompose(cd, beta_hat)
        lhs = vertex_weight(cd.finite, self.weight.lam, fin) * self.coefficient(j, beta_hat)
        delta = cd.delta
        m = 1
        while all(b >= m * d for b, d in zip(beta_hat, delta)):
            prev = tuple(b - m * d for b, d in zip(beta_hat, delta))
            lhs = lhs + m * self.a[m] * self.coefficient(j, prev)
            m += 1
        rhs = -b0 * self.coefficient(j - 1, beta_hat)
        for i in range(cd.size):
            rhs = rhs + self.coefficient(j, _minus(beta_hat, i))
        return lhs - rhs

    def nonzero_residuals(self, j_max: int | None = None) -> list[tuple[int, RootVec]]:
        top = self.j_max if j_max is None else j_max
        out = []
        for beta in lattice_points(self.cd.size, self.max_degree):
            for j in range(top + 1):
                if not is_zero(self.residual(j, beta)):
                    out.append((j, beta))
        return out


def _minus(beta: RootVec, i: int) -> RootVec:
    return beta[:i] + (beta[i] - 1,) + beta[i + 1:]


def critical_solve(
    cd: CartanData,
    weight: WeightParam,
    max_degree: int,
    j_max: int = 0,
    gauge: str = "zero",
) -> CriticalExpansion:
    """Solve the critical-level recursion for a_m and w_{j;beta} with |beta| <= max_degree."""
    _require_affine(cd)
    if gauge not in GAUGES:
        raise ValueError(f"gauge must be one of {GAUGES}, got {gauge!r}")
    exp = CriticalExpansion(cd, weight, max_degree, j_max, gauge)
    delta = cd.delta
    zero = _zero(weight)
    one = zero + 1
    w, a = exp.w, exp.a
    get = exp.coefficient

    def diag(m: int) -> RootVec:
        return tuple(m * d for d in delta)

    def memory_sum(j: int, beta: RootVec, upto: int | None = None):
        """sum_{m>=1} m a_m w_{j;beta - m delta}, optionally only m <= upto."""
        total = zero
        m = 1
        while all(b >= m * d for b, d in zip(beta, delta)) and (upto is None or m <= upto):
            total = total + m * a[m] * get(j, tuple(b - m * d for b, d in zip(beta, delta)))
            m += 1
        return total

    for j in range(j_max + 1):
        w[(j, (0,) * cd.size)] = one if j == 0 else zero

    points = [p for p in lattice_points(cd.size, max_degree) if any(p)]
    by_degree: dict[int, list[RootVec]] = {}
    for p in points:
        by_degree.setdefault(sum(p), []).append(p)

    for n in sorted(by_degree):
        diagonal = []
        for j in range(j_max + 1):
            for beta in by_degree[n]:
                m = exp.diagonal_index(beta)
                if m is not None:
                    if j == 0:
                        diagonal.append((m, beta))
                    continue
                b0, fin = affine_decompose(cd, beta)
                v = vertex_weight(cd.finite, weight.lam, fin)
                if is_zero(v):
                    raise SingularSpecialization(beta)
                rhs = -b0 * get(j - 1, beta) - memory_sum(j, beta)
                for i in range(cd.size):
                    rhs = rhs + get(j, _minus(beta, i))
                w[(j, beta)] = rhs / v
        for m, beta in diagonal:
            near = zero
            for i in range(cd.size):
                near = near + get(0, _minus(beta, i))
            # m a_m w_{0;0} plus the lower-order memory terms balance the near-diagonal sum
            a[m] = (near - memory_sum(0, beta, upto=m - 1)) / m
            for j in range(j_max + 1):
                w[(j, beta)] = zero
            if gauge == "limit":
                for j in range(1, j_max + 1):
                    near = zero
                    for i in range(cd.size):
                        near = near + get(j, _minus(beta, i))
                    w[(j - 1, beta)] = (near - memory_sum(j, beta)) / m
    return exp


def critical_fixture_table(exp: CriticalExpansion) -> dict[str, object]:
    """Flat name -> value view: 'a_m' and 'w_{j;b0,b1,...}'."""
    out = {f"a_{m}": v for m, v in sorted(exp.a.items())}
    for (j, beta), v in sorted(exp.w.items(), key=lambda kv: (kv[0][0], sum(kv[0][1]), kv[0][1])):
        out[f"w_{j};" + ",".join(map(str, beta))] = v
    return out
