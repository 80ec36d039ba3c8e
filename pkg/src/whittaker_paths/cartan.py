"""Cartan data for the simple Lie algebras of types A-G and their untwisted affinizations.

Conventions
-----------
``C[i][j] = (alpha_i | alpha_j^vee)`` and ``(alpha_i | alpha_j) = d_j C[i][j]``, so
the symmetrizers satisfy ``C[i][j] d[j] == C[j][i] d[i]``.  Roots are
coordinate tuples in the simple-root basis; weights are tuples in the
fundamental-weight basis, ``lambda_i = (lambda | alpha_i^vee)``.

Tables are generated from the symmetric form on simple roots (short roots of
square length 2, Bourbaki numbering).  For G2 this puts the long root second,
so ``d = (1, 3)``.

Affine data uses the normalization ``d_0 = 1``: the finite symmetrizers are
divided by the long-root value, which keeps ``(Lambda + rho_hat | delta) = k + h^vee``.
Comarks are then ``a_i^vee = a_i d_i``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Sequence

import flint

from .algebra.ratfunc import RatFunc, to_fraction
from .errors import DimensionMismatch, UnsupportedType

RootVec = tuple[int, ...]

_FAMILIES = "ABCDEFG"


@dataclass(frozen=True)
class LieType:
    family: str
    rank: int
    affine: bool = False

    def __post_init__(self):
        f, r = self.family, self.rank
        if f not in _FAMILIES:
            raise UnsupportedType(f"unknown family {f!r}")
        ok = {
            "A": r >= 1,
            "B": r >= 2,
            "C": r >= 2,
            "D": r >= 4,
            "E": r in (6, 7, 8),
            "F": r == 4,
            "G": r == 2,
        }[f]
        if not ok:
            raise UnsupportedType(f"type {f}{r} does not exist")

    def __str__(self):
        return f"{self.family}{self.rank}" + ("~" if self.affine else "")


_TYPE_RE = re.compile(r"^\s*([A-Ga-g])_?(\d+)\s*(~|\^|hat|_?aff(?:ine)?)?\s*$")


def parse_type(text: str) -> LieType:
    """Parse ``"A2"``, ``"G2"``, ``"A1~"``, ``"A2^"`` or ``"A1_aff"``."""
    m = _TYPE_RE.match(text)
    if not m:
        raise UnsupportedType(f"cannot parse Lie type {text!r}")
    return LieType(m.group(1).upper(), int(m.group(2)), m.group(3) is not None)


def _symmetric_form(family: str, r: int) -> list[list[int]]:
    """(alpha_i|alpha_j) with short roots of square length 2."""
    B = [[0] * r for _ in range(r)]

    def link(i, j, v=-1):
        B[i][j] = B[j][i] = v

    if family in "ADE":
        for i in range(r):
            B[i][i] = 2
        if family == "A":
            for i in range(r - 1):
                link(i, i + 1)
        elif family == "D":
            for i in range(r - 2):
                link(i, i + 1)
            link(r - 3, r - 1)
        else:
            # Bourbaki: 1-3-4-5-..., with 2 attached to 4
            link(0, 2)
            link(1, 3)
            for i in range(2, r - 1):
                link(i, i + 1)
    elif family == "B":
        for i in range(r - 1):
            B[i][i] = 4
            link(i, i + 1, -2)
        B[r - 1][r - 1] = 2
    elif family == "C":
        for i in range(r - 1):
            B[i][i] = 2
        for i in range(r - 2):
            link(i, i + 1)
        B[r - 1][r - 1] = 4
        link(r - 2, r - 1, -2)
    elif family == "F":
        B[0][0] = B[1][1] = 4
        B[2][2] = B[3][3] = 2
        link(0, 1, -2)
        link(1, 2, -2)
        link(2, 3)
    elif family == "G":
        B[0][0], B[1][1] = 2, 6
        link(0, 1, -3)
    return B


def _positive_roots(C: Sequence[Sequence[int]]) -> list[RootVec]:
    """All positive roots, by extending alpha-strings level by level."""
    r = len(C)
    simple = [tuple(int(i == j) for j in range(r)) for i in range(r)]
    roots = set(simple)
    layer = list(simple)
    while layer:
        nxt = []
        for beta in layer:
            for i in range(r):
                # p = how far the alpha_i string extends downward from beta
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in roots:
                        p += 1
                    else:
                        break
                pairing = sum(beta[j] * C[j][i] for j in range(r))
                if p - pairing > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in roots:
                        roots.add(up)
                        nxt.append(up)
        layer = nxt
    return sorted(roots, key=lambda b: (sum(b), b))


@dataclass(frozen=True)
class CartanData:
    type: LieType
    cartan: tuple[tuple[int, ...], ...]
    d: tuple[Fraction, ...]
    marks: tuple[int, ...] | None = None
    comarks: tuple[int, ...] | None = None
    theta: RootVec | None = None
    dual_coxeter: int | None = None
    finite: "CartanData | None" = field(default=None, repr=False, compare=False)

    @property
    def rank(self) -> int:
        """Finite rank r (the affine index set has r+1 elements)."""
        return self.type.rank

    @property
    def size(self) -> int:
        return len(self.cartan)

    @property
    def affine(self) -> bool:
        return self.type.affine

    @property
    def delta(self) -> RootVec:
        if not self.affine:
            raise UnsupportedType("delta only exists for affine types")
        return self.marks

    @cached_property
    def inverse_cartan(self) -> tuple[tuple[Fraction, ...], ...]:
        if self.affine:
            raise UnsupportedType("affine Cartan matrix is singular")
        inv = flint.fmpq_mat(self.cartan).inv()
        n = self.size
        return tuple(tuple(to_fraction(inv[i, j]) for j in range(n)) for i in range(n))

    def simple_root(self, i: int) -> RootVec:
        return tuple(int(i == j) for j in range(self.size))

    def root_to_weight(self, beta: Sequence[int]) -> tuple[int, ...]:
        """Fundamental-weight coordinates of a root-lattice vector."""
        _check(self, beta)
        n = self.size
        return tuple(sum(beta[j] * self.cartan[j][i] for j in range(n)) for i in range(n))

    def positive_roots(self) -> list[RootVec]:
        if self.affine:
            raise UnsupportedType("positive roots are listed for finite types only")
        return _positive_roots(self.cartan)


def _finite_data(t: LieType) -> CartanData:
    B = _symmetric_form(t.family, t.rank)
    r = t.rank
    C = tuple(tuple(2 * B[i][j] // B[j][j] for j in range(r)) for i in range(r))
    d = tuple(Fraction(B[i][i], 2) for i in range(r))
    return CartanData(LieType(t.family, r, False), C, d)


def build_cartan(t: LieType | str) -> CartanData:
    if isinstance(t, str):
        t = parse_type(t)
    fin = _finite_data(t)
    if not t.affine:
        return fin
    r = t.rank
    C, d = fin.cartan, fin.d
    theta = _positive_roots(C)[-1]
    d_long = max(d)
    dn = tuple(x / d_long for x in d)
    theta_norm = sum(theta[i] * theta[j] * dn[j] * C[i][j] for i in range(r) for j in range(r))
    # (alpha_i|theta), then row/column 0 from alpha_0 = delta - theta
    a_theta = [sum(theta[j] * dn[j] * C[i][j] for j in range(r)) for i in range(r)]
    row0 = [-sum(theta[k] * C[k][j] for k in range(r)) for j in range(r)]
    col0 = [-2 * a_theta[i] / theta_norm for i in range(r)]
    hat = [[2] + [int(x) for x in row0]]
    for i in range(r):
        hat.append([int(col0[i])] + list(C[i]))
    marks = (1,) + tuple(theta)
    comarks = tuple(int(a * x) for a, x in zip(marks, (Fraction(1),) + dn))
    fin_scaled = CartanData(fin.type, C, dn)
    return CartanData(
        type=t,
        cartan=tuple(tuple(row) for row in hat),
        d=(Fraction(1),) + dn,
        marks=marks,
        comarks=comarks,
        theta=tuple(theta),
        dual_coxeter=sum(comarks),
        finite=fin_scaled,
    )


def _check(cd: CartanData, *vecs):
    for v in vecs:
        if len(v) != cd.size:
            raise DimensionMismatch(f"expected {cd.size} coordinates for {cd.type}, got {len(v)}")


def inner_product(cd: CartanData, beta: Sequence[int], gamma: Sequence[int]) -> Fraction:
    """(beta|gamma) = sum_ij beta_i gamma_j d_j C_ij."""
    _check(cd, beta, gamma)
    n = cd.size
    return sum(
        (beta[i] * gamma[j] * cd.d[j] * cd.cartan[i][j] for i in range(n) for j in range(n) if beta[i] and gamma[j]),
        Fraction(0),
    )


def weight_inner_product(cd: CartanData, x: Sequence, y: Sequence):
    """(x|y) for weights in fundamental-weight coordinates: (omega_i|omega_j) = (C^-1)_ij d_j."""
    _check(cd, x, y)
    inv = cd.inverse_cartan
    n = cd.size
    total = 0
    for i in range(n):
        for j in range(n):
            c = inv[i][j] * cd.d[j]
            if c:
                total = total + x[i] * y[j] * c
    return total


@dataclass(frozen=True)
class WeightParam:
    """Highest weight in fundamental-weight coordinates, plus eps = k + h^vee when affine.

    Entries are either ``RatFunc`` (symbolic) or ``Fraction`` (specialized).
    """

    lam: tuple
    eps: object = None

    @classmethod
    def symbolic(cls, rank: int, affine: bool = False) -> "WeightParam":
        return cls(tuple(RatFunc.lam(i) for i in range(1, rank + 1)), RatFunc.eps() if affine else None)

    @classmethod
    def specialized(cls, values: Sequence, eps=None) -> "WeightParam":
        return cls(tuple(Fraction(v) for v in values), None if eps is None else Fraction(eps))

    @property
    def symbolic_mode(self) -> bool:
        return any(isinstance(x, RatFunc) for x in self.lam) or isinstance(self.eps, RatFunc)

    def level(self, cd: CartanData):
        if self.eps is None:
            raise UnsupportedType("finite weight has no level")
        return self.eps - cd.dual_coxeter

    def affine_coords(self, cd: CartanData) -> tuple:
        """(lambda_0, lambda_1, ..., lambda_r) with lambda_0 = k - sum a_i^vee lambda_i."""
        if not cd.affine:
            raise UnsupportedType("affine coordinates need an affine type")
        if len(self.lam) != cd.rank:
            raise DimensionMismatch(f"expected {cd.rank} weight coordinates, got {len(self.lam)}")
        lam0 = self.level(cd)
        for a, x in zip(cd.comarks[1:], self.lam):
            lam0 = lam0 - a * x
        return (lam0,) + tuple(self.lam)


def weight_root_pairing(cd: CartanData, lam: WeightParam | Sequence, beta: Sequence[int], rho: bool = False):
    """(lambda|beta) = sum_i lambda_i d_i beta_i, or (lambda+rho|beta) when ``rho``."""
    _check(cd, beta)
    if isinstance(lam, WeightParam):
        coords = lam.affine_coords(cd) if cd.affine else lam.lam
    else:
        coords = tuple(lam)
    if len(coords) != cd.size:
        raise DimensionMismatch(f"expected {cd.size} weight coordinates, got {len(coords)}")
    total = 0
    for x, di, b in zip(coords, cd.d, beta):
        if b:
            total = total + ((x + 1) if rho else x) * (di * b)
    return total


def affine_decompose(cd: CartanData, beta_hat: Sequence[int]) -> tuple[int, tuple[int, ...]]:
    """beta_hat = beta_0 delta + (beta - beta_0 theta); returns beta_0 and the signed finite part."""
    if not cd.affine:
        raise UnsupportedType("affine_decompose needs an affine type")
    _check(cd, beta_hat)
    b0 = beta_hat[0]
    return b0, tuple(b - b0 * a for b, a in zip(beta_hat[1:], cd.marks[1:]))


def affine_recompose(cd: CartanData, b0: int, finite: Sequence[int]) -> RootVec:
    return (b0,) + tuple(f + b0 * a for f, a in zip(finite, cd.marks[1:]))
