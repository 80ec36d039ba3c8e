"""Edge-weight path model for U_q(sl_{r+1}) at a specialized highest weight.

Direction indices are 0-based in function arguments (``i = 0`` is alpha_1) to
match ``Path``; formulas in docstrings use the usual 1-based labels.

With ``gamma_i = sum_j (C^-1)_ij (lambda_j + 1)`` and ``gamma_0 = gamma_{r+1} = 0``:

    v_q(beta)   = (q - 1/q)^-2 sum_{i=0}^r q^{2(gamma_i - gamma_{i+1})} (1 - q^{2(beta_{i+1} - beta_i)})
    tau_i(beta) = gamma_{i+1} - gamma_{i-1} + beta_{i-1} - beta_{i+1}
    v^(i)(beta) = q^{tau_i(beta)} v_q(beta)

A path weighs ``prod 1/v^(i_k)(p_k)`` and ``v_q(beta) Z_beta = sum_i q^{-tau_i(beta)} Z_{beta - alpha_i}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from .algebra.qlaurent import QL_ONE, QLaurent, QRatFunc, q_number
from .cartan import CartanData, LieType, RootVec, build_cartan
from .errors import DimensionMismatch, SingularWeight
from .paths import DEFAULT_CAP, Path, box_points, enumerate_paths, lattice_points

Q_ZERO = QRatFunc(0)
Q_ONE = QRatFunc(1)


def qp(exponent) -> QRatFunc:
    return QRatFunc.q_power(Fraction(exponent))


def gamma_closed_form(r: int, lam: Sequence[Fraction], i: int) -> Fraction:
    """gamma_i = i(r+1-i)/2 + [(r+1-i) sum_{j<=i} j l_j + i sum_{j>i} (r+1-j) l_j] / (r+1)."""
    head = sum((j * lam[j - 1] for j in range(1, i + 1)), Fraction(0))
    tail = sum(((r + 1 - j) * lam[j - 1] for j in range(i + 1, r + 1)), Fraction(0))
    return Fraction(i * (r + 1 - i), 2) + ((r + 1 - i) * head + i * tail) / (r + 1)


@dataclass(frozen=True)
class QContext:
    rank: int
    lam: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.lam) != self.rank:
            raise DimensionMismatch(f"sl_{self.rank + 1} needs {self.rank} weight coordinates, got {len(self.lam)}")
        object.__setattr__(self, "lam", tuple(Fraction(x) for x in self.lam))

    @classmethod
    def of(cls, lam: Sequence) -> "QContext":
        return cls(len(lam), tuple(Fraction(x) for x in lam))

    @cached_property
    def cartan(self) -> CartanData:
        return build_cartan(LieType("A", self.rank))

    @cached_property
    def gamma(self) -> tuple[Fraction, ...]:
        """gamma_0 .. gamma_{r+1} via the inverse Cartan matrix; cross-checked against the closed form."""
        inv = self.cartan.inverse_cartan
        r = self.rank
        inner = [sum((inv[i][j] * (self.lam[j] + 1) for j in range(r)), Fraction(0)) for i in range(r)]
        for i in range(1, r + 1):
            closed = gamma_closed_form(r, self.lam, i)
            if closed != inner[i - 1]:
                raise AssertionError(f"gamma_{i}: {inner[i - 1]} != {closed}")
        return (Fraction(0), *inner, Fraction(0))

    def padded(self, beta: Sequence[int]) -> tuple[int, ...]:
        if len(beta) != self.rank:
            raise DimensionMismatch(f"expected {self.rank} coordinates, got {len(beta)}")
        return (0, *beta, 0)

    def pairing(self, beta: Sequence[int], i: int) -> Fraction:
        """(lambda - beta | alpha_i) for 0-based i."""
        C = self.cartan.cartan
        return self.lam[i] - sum(beta[j] * C[j][i] for j in range(self.rank))


_QQ2 = None


def _q_minus_qinv_sq() -> QLaurent:
    global _QQ2
    if _QQ2 is None:
        d = QLaurent.from_terms({Fraction(1): 1, Fraction(-1): -1})
        _QQ2 = d * d
    return _QQ2


def vq_numerator(ctx: QContext, beta: Sequence[int]) -> QLaurent:
    """(q - 1/q)^2 v_q(beta) as a Laurent sum."""
    g, b = ctx.gamma, ctx.padded(beta)
    terms: dict[Fraction, Fraction] = {}
    for i in range(ctx.rank + 1):
        e = 2 * (g[i] - g[i + 1])
        terms[e] = terms.get(e, 0) + 1
        e2 = e + 2 * (b[i + 1] - b[i])
        terms[e2] = terms.get(e2, 0) - 1
    return QLaurent.from_terms(terms)


def vq(ctx: QContext, beta: Sequence[int]) -> QRatFunc:
    return QRatFunc(vq_numerator(ctx, beta), _q_minus_qinv_sq())


def tau(ctx: QContext, i: int, beta: Sequence[int]) -> Fraction:
    """tau for the 0-based direction i (label i+1)."""
    g, b = ctx.gamma, ctx.padded(beta)
    k = i + 1
    return g[k + 1] - g[k - 1] + b[k - 1] - b[k + 1]


def edge_weight(ctx: QContext, i: int, beta: Sequence[int]) -> QRatFunc:
    """v^(i)(beta) = q^{tau_i(beta)} v_q(beta)."""
    return qp(tau(ctx, i, beta)) * vq(ctx, beta)


def dual_edge_weight(ctx: QContext, i: int, beta: Sequence[int]) -> QRatFunc:
    """q^{-tau_i(beta)} v_{1/q}(beta), the weight of the dual vector's path model."""
    return qp(-tau(ctx, i, beta)) * vq(ctx, beta).bar()


def q_path_weight(ctx: QContext, path: Path, weight_fn=edge_weight) -> QRatFunc:
    out = Q_ONE
    for k, vert in enumerate(path.vertices()[1:]):
        w = weight_fn(ctx, path.steps[k], vert)
        if w.is_zero():
            raise SingularWeight(vert)
        out = out / w
    return out


class QPartitionTable:
    """Memoized quantum partition functions at one specialized weight."""

    def __init__(self, ctx: QContext):
        self.ctx = ctx
        self.memo: dict[RootVec, QRatFunc] = {(0,) * ctx.rank: Q_ONE}
        self._vq: dict[RootVec, QRatFunc] = {}

    def vq(self, beta: RootVec) -> QRatFunc:
        hit = self._vq.get(beta)
        if hit is None:
            hit = self._vq[beta] = vq(self.ctx, beta)
        return hit

    def _compute(self, beta: RootVec) -> QRatFunc:
        total = Q_ZERO
        for i in range(self.ctx.rank):
            if beta[i]:
                prev = beta[:i] + (beta[i] - 1,) + beta[i + 1:]
                total = total + qp(-tau(self.ctx, i, beta)) * self.memo[prev]
        w = self.vq(beta)
        if w.is_zero():
            raise SingularWeight(beta)
        return total / w

    def __getitem__(self, beta: Sequence[int]) -> QRatFunc:
        beta = tuple(beta)
        if len(beta) != self.ctx.rank:
            raise DimensionMismatch(f"expected {self.ctx.rank} coordinates, got {len(beta)}")
        if any(b < 0 for b in beta):
            return Q_ZERO
        if beta not in self.memo:
            for gamma in box_points(beta):
                if gamma not in self.memo:
                    self.memo[gamma] = self._compute(gamma)
        return self.memo[beta]

    def fill(self, max_degree: int) -> dict[RootVec, QRatFunc]:
        return {beta: self[beta] for beta in lattice_points(self.ctx.rank, max_degree)}


def q_partition_dp(table: QPartitionTable, beta: Sequence[int]) -> QRatFunc:
    return table[beta]


def q_partition_bruteforce(ctx: QContext, beta: Sequence[int], cap: int = DEFAULT_CAP, weight_fn=edge_weight) -> QRatFunc:
    total = Q_ZERO
    for p in enumerate_paths(beta, cap):
        total = total + q_path_weight(ctx, p, weight_fn)
    return total


def _up(beta: Sequence[int], i: int) -> RootVec:
    b = list(beta)
    b[i] += 1
    return tuple(b)


def edge_difference_check(ctx: QContext, beta: Sequence[int], i: int) -> bool:
    """v^(i)(beta + alpha_i) - v^(i)(beta) == [(lambda - beta | alpha_i)]."""
    lhs = edge_weight(ctx, i, _up(beta, i)) - edge_weight(ctx, i, beta)
    return lhs == q_number(ctx.pairing(beta, i))


def tau_independence_check(ctx: QContext, beta: Sequence[int], i: int) -> bool:
    return tau(ctx, i, _up(beta, i)) == tau(ctx, i, beta)


def cancellation_exponent(ctx: QContext, beta: Sequence[int], i: int, j: int) -> Fraction:
    """The exponent e with v^(i)(b+a_i) v^(j)(b) = q^e v^(j)(b+a_i) v^(i)(b), read off the tau's.

    Equals tau_j(b) - tau_j(b+a_i) = (alpha_i | omega_{j+1} - omega_{j-1}) = (j-i) C_ji.
    """
    up = _up(beta, i)
    return tau(ctx, i, up) - tau(ctx, i, beta) + tau(ctx, j, beta) - tau(ctx, j, up)


def cancellation_check(ctx: QContext, beta: Sequence[int], i: int, j: int, sign: int = 1) -> bool:
    """v^(i)(b+a_i) v^(j)(b) == q^{sign (i-j) C_ji} v^(j)(b+a_i) v^(i)(b).

    Cross-multiplied so that b = 0, where v^(i)(0) = 0, is still meaningful.
    ``sign=1`` is the commonly quoted form, which fails for
    adjacent i, j; ``sign=-1`` is the form that holds.
    """
    C = ctx.cartan.cartan
    up = _up(beta, i)
    claimed = sign * (i - j) * C[j][i]
    lhs = edge_weight(ctx, i, up) * edge_weight(ctx, j, beta)
    rhs = qp(claimed) * edge_weight(ctx, j, up) * edge_weight(ctx, i, beta)
    return lhs == rhs and cancellation_exponent(ctx, beta, i, j) == claimed


def q_eigencondition_check(ctx: QContext, path: Path, i: int) -> bool:
    """x_q(p) == sum_k q^{sum_{l>k} (i - i_l) C_{i_l, i}} [(lambda - p_k | alpha_i)] x_q(p_{k,i})."""
    C = ctx.cartan.cartan
    steps = path.steps
    n = len(steps)
    rhs = Q_ZERO
    for k, vert in enumerate(path.vertices()):
        c = ctx.pairing(vert, i)
        if c == 0:
            continue
        e = sum((i - s) * C[s][i] for s in steps[k:n])
        rhs = rhs + qp(e) * q_number(c) * q_path_weight(ctx, path.augment(k, i))
    return q_path_weight(ctx, path) == rhs


def bar_invariance_check(table: QPartitionTable, beta: Sequence[int]) -> bool:
    z = table[beta]
    return z.bar() == z


def q_toda_eigenvalue(ctx: QContext) -> QRatFunc:
    """E_q = sum_{i=0}^r q^{2(gamma_i - gamma_{i+1})}."""
    g = ctx.gamma
    return QRatFunc(QLaurent.from_terms(_accumulate(2 * (g[i] - g[i + 1]) for i in range(ctx.rank + 1))))


def _accumulate(exps) -> dict[Fraction, int]:
    out: dict[Fraction, int] = {}
    for e in exps:
        out[e] = out.get(e, 0) + 1
    return out


def _shift_insertion(ctx: QContext, beta: Sequence[int], i: int) -> Fraction:
    """Exponent inserted by S_i on q^{(lambda+rho-beta|phi)}: beta_i - gamma_i, with S_0 = S_{r+1} = 1."""
    if i == 0 or i == ctx.rank + 1:
        return Fraction(0)
    return beta[i - 1] - ctx.gamma[i]


def _t_insertion(ctx: QContext, beta: Sequence[int], i: int) -> Fraction:
    """T_i = S_{i+1} S_i^{-1}."""
    return _shift_insertion(ctx, beta, i + 1) - _shift_insertion(ctx, beta, i)


def q_toda_check(table: QPartitionTable, beta: Sequence[int]) -> dict[str, bool]:
    """Coefficient form of H_q W = E_q W at nu^beta.

    recursion:   v_q(beta) Z_beta = sum_k q^{-tau_k(beta)} Z_{beta - alpha_k}
    insertion:   sum_i (q^{2(g_i - g_{i+1})} - [T_i^2 insertion]) = (q - 1/q)^2 v_q(beta)
    hamiltonian: sum_i [T_i^2](beta) Z_beta + (q - 1/q)^2 sum_k [T_{k-1} T_k](beta - alpha_k) Z_{beta - alpha_k} = E_q Z_beta
    """
    ctx = table.ctx
    beta = tuple(beta)
    r = ctx.rank
    g = ctx.gamma
    z = table[beta]
    lower = [(k, beta[:k] + (beta[k] - 1,) + beta[k + 1:]) for k in range(r) if beta[k]]

    rec_rhs = Q_ZERO
    for k, m in lower:
        rec_rhs = rec_rhs + qp(-tau(ctx, k, beta)) * table[m]
    recursion = table.vq(beta) * z == rec_rhs

    t2 = [2 * _t_insertion(ctx, beta, i) for i in range(r + 1)]
    inserted = QLaurent.from_terms(_accumulate(2 * (g[i] - g[i + 1]) for i in range(r + 1)))
    inserted = inserted - QLaurent.from_terms(_accumulate(t2))
    insertion = QRatFunc(inserted) == table.vq(beta) * QRatFunc(_q_minus_qinv_sq())

    lhs = QRatFunc(QLaurent.from_terms(_accumulate(t2))) * z
    qq = QRatFunc(_q_minus_qinv_sq())
    for k, m in lower:
        label = k + 1
        e = _t_insertion(ctx, m, label - 1) + _t_insertion(ctx, m, label)
        lhs = lhs + qq * qp(e) * table[m]
    hamiltonian = lhs == q_toda_eigenvalue(ctx) * z
    return {"recursion": recursion, "insertion": insertion, "hamiltonian": hamiltonian}


def q_sl2_closed_form(ctx: QContext, b: int) -> QRatFunc:
    """Z_b = 1 / prod_{j=1}^b [j][lambda+1-j]."""
    (lam,) = ctx.lam
    den = Q_ONE
    for j in range(1, b + 1):
        den = den * q_number(j) * q_number(lam + 1 - j)
    return Q_ONE / den


def q_bump_sl3(ctx: QContext, b1: int, b2: int) -> QRatFunc:
    """Quantum product formula for sl_3, the A2 closed form with q-numbers."""
    l1, l2 = ctx.lam
    s = l1 + l2 + 2
    num = Q_ONE
    for j in range(1, b1 + b2 + 1):
        num = num * q_number(s - j)
    den = Q_ONE
    for j in range(1, b1 + 1):
        den = den * q_number(j) * q_number(l1 + 1 - j) * q_number(s - j)
    for j in range(1, b2 + 1):
        den = den * q_number(j) * q_number(l2 + 1 - j) * q_number(s - j)
    return num / den


def classical_limit(z: QRatFunc) -> Fraction:
    return z.classical_limit()


def q_whittaker_vector(ctx: QContext, max_degree: int, cap: int = DEFAULT_CAP) -> list[tuple[RootVec, Path, QRatFunc]]:
    """(beta, path, x_q(path)) for every path with |beta| <= max_degree."""
    out = []
    for beta in lattice_points(ctx.rank, max_degree):
        for p in sorted(enumerate_paths(beta, cap), key=lambda p: p.steps):
            out.append((beta, p, q_path_weight(ctx, p)))
    return out
