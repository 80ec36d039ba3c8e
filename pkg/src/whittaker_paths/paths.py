"""Weighted lattice paths on the positive root lattice and their partition functions.

A path from 0 to beta is a word in the simple roots.  Each vertex beta carries
the weight ``v(beta) = (lambda+rho|beta) - (beta|beta)/2`` and a path weighs
``prod 1/v(p_k)`` over its non-initial vertices.  The partition function
``Z_beta`` sums this over all paths to beta and obeys
``v(beta) Z_beta = sum_i Z_{beta - alpha_i}``.

The same code runs on an affine ``CartanData``; the weight then uses the
affine coordinates ``(lambda_0, lambda_1, ..., lambda_r)``.

Scalars are ``RatFunc`` for symbolic weights and ``Fraction`` for specialized
ones; nothing here cares which.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import factorial, prod
from typing import Iterator, Sequence

from .algebra.ratfunc import RatFunc
from .cartan import CartanData, RootVec, WeightParam, affine_decompose, inner_product
from .errors import CapExceeded, CriticalSingularity, DimensionMismatch, SingularWeight

DEFAULT_CAP = 10


def is_zero(x) -> bool:
    return x.is_zero() if isinstance(x, RatFunc) else x == 0


def weight_coords(cd: CartanData, weight: WeightParam) -> tuple:
    if cd.affine:
        return weight.affine_coords(cd)
    if len(weight.lam) != cd.size:
        raise DimensionMismatch(f"{cd.type} needs {cd.size} weight coordinates, got {len(weight.lam)}")
    return tuple(weight.lam)


@dataclass(frozen=True)
class Path:
    """A word i_1..i_N in the simple-root indices, read from the origin."""

    steps: tuple[int, ...]
    size: int

    def __len__(self):
        return len(self.steps)

    @property
    def end(self) -> RootVec:
        out = [0] * self.size
        for i in self.steps:
            out[i] += 1
        return tuple(out)

    def vertices(self) -> list[RootVec]:
        """p_0 = 0, p_1, ..., p_N."""
        cur = [0] * self.size
        out = [tuple(cur)]
        for i in self.steps:
            cur[i] += 1
            out.append(tuple(cur))
        return out

    def augment(self, k: int, i: int) -> "Path":
        """p_{k,i}: follow p to p_k, step by alpha_i, then finish p shifted by alpha_i."""
        return Path(self.steps[:k] + (i,) + self.steps[k:], self.size)

    def __str__(self):
        return "(" + ",".join(str(i) for i in self.steps) + ")"


def _distinct_words(counts: list[int]) -> Iterator[tuple[int, ...]]:
    if not any(counts):
        yield ()
        return
    for i, c in enumerate(counts):
        if c:
            counts[i] -= 1
            for rest in _distinct_words(counts):
                yield (i,) + rest
            counts[i] += 1


def enumerate_paths(beta: Sequence[int], cap: int = DEFAULT_CAP) -> list[Path]:
    if any(b < 0 for b in beta):
        return []
    if sum(beta) > cap:
        raise CapExceeded(f"|beta| = {sum(beta)} exceeds the enumeration cap {cap}")
    return [Path(w, len(beta)) for w in _distinct_words(list(beta))]


def multinomial(beta: Sequence[int]) -> int:
    return factorial(sum(beta)) // prod(factorial(b) for b in beta)


def vertex_weight(cd: CartanData, weight: WeightParam | Sequence, beta: Sequence[int]):
    """v(beta) = sum_i (lambda_i+1) d_i beta_i - (beta|beta)/2."""
    coords = weight_coords(cd, weight) if isinstance(weight, WeightParam) else tuple(weight)
    if len(beta) != cd.size or len(coords) != cd.size:
        raise DimensionMismatch(f"{cd.type} expects {cd.size} coordinates")
    linear = 0
    for x, di, b in zip(coords, cd.d, beta):
        if b:
            linear = linear + (x + 1) * (di * b)
    return linear - inner_product(cd, beta, beta) / 2


def vertex_weight_affine(cd: CartanData, weight: WeightParam, beta_hat: Sequence[int]):
    """Affine vertex weight, computed two ways and required to agree.

    Direct: the bilinear form on the affine lattice.  Decomposed:
    ``(k + h^vee) beta_0 + v(beta - beta_0 theta)`` with the finite weight.
    """
    direct = vertex_weight(cd, weight, beta_hat)
    b0, fin = affine_decompose(cd, beta_hat)
    decomposed = weight.eps * b0 + vertex_weight(cd.finite, weight.lam, fin)
    if not direct == decomposed:
        raise AssertionError(f"affine weight mismatch at {tuple(beta_hat)}: {direct} != {decomposed}")
    return direct


def _weight_fn(cd: CartanData, weight: WeightParam):
    coords = weight_coords(cd, weight)
    return lambda beta: vertex_weight(cd, coords, beta)


def _singular(cd: CartanData, beta) -> SingularWeight:
    if cd.affine:
        b0, fin = affine_decompose(cd, beta)
        if b0 and not any(fin):
            return CriticalSingularity(beta)
    return SingularWeight(beta)


def path_weight(cd: CartanData, weight: WeightParam, path: Path):
    """x(p) = prod_{k>=1} 1/v(p_k); the empty path weighs 1."""
    v = _weight_fn(cd, weight)
    out = 1
    for vert in path.vertices()[1:]:
        w = v(vert)
        if is_zero(w):
            raise _singular(cd, vert)
        out = out / w
    return out if path.steps else _one(weight)


def _one(weight: WeightParam):
    return RatFunc(1) if weight.symbolic_mode else Fraction(1)


def _zero(weight: WeightParam):
    return RatFunc(0) if weight.symbolic_mode else Fraction(0)


def lattice_points(size: int, max_degree: int) -> Iterator[RootVec]:
    """All beta in Q_+ with |beta| <= max_degree, by increasing degree."""
    for n in range(max_degree + 1):
        for cut in itertools.combinations(range(n + size - 1), size - 1):
            bounds = (-1,) + cut + (n + size - 1,)
            yield tuple(bounds[k + 1] - bounds[k] - 1 for k in range(size))


def box_points(upper: Sequence[int]) -> Iterator[RootVec]:
    """All beta with 0 <= beta <= upper componentwise, lexicographically."""
    return itertools.product(*(range(u + 1) for u in upper))


class PartitionTable:
    """Memoized partition functions for one (CartanData, WeightParam) pair.

    Owned by a single computation; not meant to be shared between threads.
    """

    def __init__(self, cd: CartanData, weight: WeightParam, max_degree: int | None = None):
        self.cd = cd
        self.weight = weight
        self.max_degree = max_degree
        self._v = _weight_fn(cd, weight)
        self.memo: dict[RootVec, object] = {(0,) * cd.size: _one(weight)}
        self.weights: dict[RootVec, object] = {}

    def vertex(self, beta: RootVec):
        w = self.weights.get(beta)
        if w is None:
            w = self.weights[beta] = self._v(beta)
        return w

    def _compute(self, beta: RootVec):
        total = _zero(self.weight)
        for i in range(self.cd.size):
            if beta[i]:
                prev = beta[:i] + (beta[i] - 1,) + beta[i + 1:]
                total = total + self.memo[prev]
        w = self.vertex(beta)
        if is_zero(w):
            raise _singular(self.cd, beta)
        return total / w

    def __getitem__(self, beta: Sequence[int]):
        beta = tuple(beta)
        if len(beta) != self.cd.size:
            raise DimensionMismatch(f"{self.cd.type} expects {self.cd.size} coordinates")
        if any(b < 0 for b in beta):
            return _zero(self.weight)
        hit = self.memo.get(beta)
        if hit is not None:
            return hit
        if self.max_degree is not None and sum(beta) > self.max_degree:
            raise CapExceeded(f"|beta| = {sum(beta)} beyond table degree {self.max_degree}")
        for gamma in box_points(beta):
            if gamma not in self.memo:
                self.memo[gamma] = self._compute(gamma)
        return self.memo[beta]

    def fill(self, max_degree: int | None = None) -> dict[RootVec, object]:
        """Compute every Z_beta with |beta| <= max_degree; returns them in degree order."""
        n = self.max_degree if max_degree is None else max_degree
        out = {}
        for beta in lattice_points(self.cd.size, n):
            if beta not in self.memo:
                self.memo[beta] = self._compute(beta)
            out[beta] = self.memo[beta]
        return out

    def recursion_holds(self, beta: Sequence[int]) -> bool:
        beta = tuple(beta)
        if not any(beta):
            return self[beta] == 1
        rhs = sum((self[beta[:i] + (beta[i] - 1,) + beta[i + 1:]] for i in range(self.cd.size) if beta[i]), _zero(self.weight))
        return self.vertex(beta) * self[beta] == rhs


def partition_dp(table: PartitionTable, beta: Sequence[int]):
    return table[beta]


def partition_bruteforce(cd: CartanData, weight: WeightParam, beta: Sequence[int], cap: int = DEFAULT_CAP):
    """Sum of x(p) over every path to beta, with no sharing between paths."""
    total = _zero(weight)
    for p in enumerate_paths(beta, cap):
        total = total + path_weight(cd, weight, p)
    return total


def verify_weight_difference(cd: CartanData, weight: WeightParam, beta: Sequence[int], i: int) -> bool:
    """v(beta + alpha_i) - v(beta) == (lambda - beta | alpha_i)."""
    coords = weight_coords(cd, weight)
    up = list(beta)
    up[i] += 1
    lhs = vertex_weight(cd, coords, up) - vertex_weight(cd, coords, beta)
    rhs = coords[i] * cd.d[i] - inner_product(cd, beta, cd.simple_root(i))
    return lhs == rhs


def verify_eigencondition(cd: CartanData, weight: WeightParam, path: Path, i: int) -> bool:
    """x(p) == sum_{k=0}^{N} (lambda - p_k | alpha_i) x(p_{k,i})."""
    coords = weight_coords(cd, weight)
    alpha = cd.simple_root(i)
    rhs = _zero(weight)
    for k, vert in enumerate(path.vertices()):
        c = coords[i] * cd.d[i] - inner_product(cd, vert, alpha)
        if not is_zero(c):
            rhs = rhs + c * path_weight(cd, weight, path.augment(k, i))
    return path_weight(cd, weight, path) == rhs
