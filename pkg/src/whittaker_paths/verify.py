"""Named verification suites with instance counts.

Each suite walks a finite set of instances (lattice points, paths, index
pairs) and records which identities hold.  Instances where a vertex weight
vanishes are counted as singular rather than failed.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .affine import (
    AffinePartitionTable,
    critical_solve,
    deformed_toda_identity,
    renormalized_exponent,
)
from .algebra.qlaurent import QLaurent, QRatFunc
from .algebra.ratfunc import RatFunc
from .cartan import CartanData, WeightParam
from .errors import UnsupportedType
from .finite import (
    a2_higher_recursion_check,
    bump_closed_form,
    third_order_coefficient_check,
    toda_eigen_identity,
)
from .paths import (
    PartitionTable,
    enumerate_paths,
    is_zero,
    lattice_points,
    partition_bruteforce,
    verify_eigencondition,
    verify_weight_difference,
)
from . import quantum as qm


@dataclass
class SuiteResult:
    name: str
    instances: int = 0
    singular: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def run(self, label: str, check: Callable[[], bool]):
        try:
            ok = check()
        except ZeroDivisionError:
            self.singular += 1
            return
        self.instances += 1
        if not ok:
            self.failures.append(label)

    def summary(self) -> str:
        status = "pass" if self.passed else "FAIL"
        line = f"{self.name}: {status}, {self.instances} instances"
        if self.singular:
            line += f", {self.singular} singular"
        if self.failures:
            line += f"; first counterexample {self.failures[0]}"
        return line


@dataclass
class Job:
    """What a suite needs: the root datum, a weight, and the sizes to sweep."""

    cd: CartanData | None
    weight: WeightParam | None
    degree: int
    mode: str = "finite"
    j_max: int = 2
    gauge: str = "limit"
    qctx: qm.QContext | None = None
    seed: int = 0

    def table(self) -> PartitionTable:
        if self._table is None:
            cls = AffinePartitionTable if self.mode == "affine" else PartitionTable
            self._table = cls(self.cd, self.weight)
        return self._table

    def qtable(self) -> qm.QPartitionTable:
        if self._qtable is None:
            self._qtable = qm.QPartitionTable(self.qctx)
        return self._qtable

    def __post_init__(self):
        self._table = None
        self._qtable = None


def _key(beta) -> str:
    return "(" + ",".join(map(str, beta)) + ")"


def _nonzero(size: int, degree: int):
    return [b for b in lattice_points(size, degree) if any(b)]


def _all_paths(size: int, max_len: int):
    for beta in lattice_points(size, max_len):
        yield from enumerate_paths(beta, max_len)


def _require_a2(job: Job):
    if job.cd.affine or str(job.cd.type) != "A2":
        raise UnsupportedType(f"this suite is specific to A2, got {job.cd.type}")


# -- finite and affine ------------------------------------------------------

def suite_difference(job: Job) -> SuiteResult:
    res = SuiteResult("difference")
    for beta in lattice_points(job.cd.size, job.degree):
        for i in range(job.cd.size):
            res.run(f"beta={_key(beta)} i={i + 1}", lambda: verify_weight_difference(job.cd, job.weight, beta, i))
    return res


def suite_eigencondition(job: Job) -> SuiteResult:
    res = SuiteResult("eigencondition")
    for p in _all_paths(job.cd.size, job.degree):
        for i in range(job.cd.size):
            res.run(f"path={p} i={i + 1}", lambda: verify_eigencondition(job.cd, job.weight, p, i))
    return res


def suite_toda(job: Job) -> SuiteResult:
    res = SuiteResult("toda")
    t = job.table()
    for beta in _nonzero(job.cd.size, job.degree):
        res.run(f"beta={_key(beta)}", lambda: toda_eigen_identity(job.cd, job.weight, beta) and t.recursion_holds(beta))
    return res


def suite_oracle(job: Job) -> SuiteResult:
    res = SuiteResult("oracle")
    t = job.table()
    for beta in lattice_points(job.cd.size, job.degree):
        res.run(f"beta={_key(beta)}", lambda: t[beta] == partition_bruteforce(job.cd, job.weight, beta, cap=job.degree))
    return res


def suite_bump(job: Job) -> SuiteResult:
    _require_a2(job)
    res = SuiteResult("bump")
    t = job.table()
    for b1 in range(job.degree + 1):
        for b2 in range(job.degree + 1):
            res.run(f"beta=({b1},{b2})", lambda: t[(b1, b2)] == bump_closed_form(b1, b2, job.weight))
    return res


def suite_higher(job: Job) -> SuiteResult:
    _require_a2(job)
    res = SuiteResult("higher")
    t = job.table()
    for b1 in range(job.degree + 1):
        for b2 in range(job.degree + 1):
            res.run(f"beta=({b1},{b2})", lambda: a2_higher_recursion_check(t, b1, b2))
    return res


def suite_third(job: Job) -> SuiteResult:
    _require_a2(job)
    res = SuiteResult("third")
    t = job.table()
    for b1 in range(job.degree + 1):
        for b2 in range(job.degree + 1):
            res.run(f"beta=({b1},{b2})", lambda: third_order_coefficient_check(t, b1, b2))
    return res


def suite_deformed(job: Job) -> SuiteResult:
    res = SuiteResult("deformed")
    for beta in lattice_points(job.cd.size, job.degree):
        res.run(f"beta={_key(beta)}", lambda: deformed_toda_identity(job.cd, job.weight, beta))
    return res


def suite_exponent(job: Job) -> SuiteResult:
    res = SuiteResult("exponent")

    def check(beta):
        try:
            renormalized_exponent(job.cd, job.weight, beta)
        except AssertionError:
            return False
        return True

    for beta in lattice_points(job.cd.size, job.degree):
        res.run(f"beta={_key(beta)}", lambda: check(beta))
    return res


def suite_critical(job: Job) -> SuiteResult:
    res = SuiteResult(f"critical[{job.gauge}]")
    exp = critical_solve(job.cd, job.weight, job.degree, job.j_max, job.gauge)
    for beta in lattice_points(job.cd.size, job.degree):
        for j in range(job.j_max + 1):
            res.run(f"j={j} beta={_key(beta)}", lambda: is_zero(exp.residual(j, beta)))
    return res


# -- quantum ----------------------------------------------------------------

def suite_q_oracle(job: Job) -> SuiteResult:
    res = SuiteResult("oracle")
    t = job.qtable()
    for beta in lattice_points(job.qctx.rank, job.degree):
        res.run(f"beta={_key(beta)}", lambda: t[beta] == qm.q_partition_bruteforce(job.qctx, beta, cap=job.degree))
    return res


def suite_q_difference(job: Job) -> SuiteResult:
    res = SuiteResult("difference")
    r = job.qctx.rank
    for beta in lattice_points(r, job.degree):
        for i in range(r):
            res.run(f"beta={_key(beta)} i={i + 1}", lambda: qm.edge_difference_check(job.qctx, beta, i) and qm.tau_independence_check(job.qctx, beta, i))
    return res


def suite_q_cancel(job: Job) -> SuiteResult:
    res = SuiteResult("cancel")
    r = job.qctx.rank
    for beta in lattice_points(r, job.degree):
        for i in range(r):
            for j in range(r):
                res.run(f"beta={_key(beta)} i={i + 1} j={j + 1}", lambda: qm.cancellation_check(job.qctx, beta, i, j, sign=-1))
    return res


def suite_q_eigen(job: Job) -> SuiteResult:
    res = SuiteResult("eigen")
    r = job.qctx.rank
    for p in _all_paths(r, job.degree):
        for i in range(r):
            res.run(f"path={p} i={i + 1}", lambda: qm.q_eigencondition_check(job.qctx, p, i))
    return res


def suite_q_bar(job: Job) -> SuiteResult:
    res = SuiteResult("bar")
    t = job.qtable()
    for beta in lattice_points(job.qctx.rank, job.degree):
        res.run(f"beta={_key(beta)}", lambda: qm.bar_invariance_check(t, beta))
    return res


def suite_q_toda(job: Job) -> SuiteResult:
    res = SuiteResult("toda")
    t = job.qtable()
    for beta in lattice_points(job.qctx.rank, job.degree):
        res.run(f"beta={_key(beta)}", lambda: all(qm.q_toda_check(t, beta).values()))
    return res


def suite_q_closed(job: Job) -> SuiteResult:
    """sl_2 product formula for beta <= degree, sl_3 product formula on the box."""
    res = SuiteResult("closed")
    ctx, t = job.qctx, job.qtable()
    if ctx.rank == 1:
        for b in range(job.degree + 1):
            res.run(f"beta=({b})", lambda: t[(b,)] == qm.q_sl2_closed_form(ctx, b))
    elif ctx.rank == 2:
        for b1 in range(job.degree + 1):
            for b2 in range(job.degree + 1):
                res.run(f"beta=({b1},{b2})", lambda: _both(lambda: t[(b1, b2)], lambda: qm.q_bump_sl3(ctx, b1, b2)))
    else:
        raise UnsupportedType("closed forms exist for sl2 and sl3 only")
    return res


def suite_q_limit(job: Job) -> SuiteResult:
    res = SuiteResult("limit")
    ctx, t = job.qctx, job.qtable()
    classical = PartitionTable(ctx.cartan, WeightParam.specialized(ctx.lam))
    for beta in lattice_points(ctx.rank, job.degree):
        res.run(f"beta={_key(beta)}", lambda: _both(lambda: t[beta].classical_limit(), lambda: classical[beta]))
    return res


def _both(f, g) -> bool:
    """f() == g(); a pole on exactly one side is a failure, on both sides a singular instance."""
    try:
        a = f()
    except ZeroDivisionError:
        try:
            g()
        except ZeroDivisionError:
            raise
        return False
    try:
        b = g()
    except ZeroDivisionError:
        return False
    return a == b


# -- exact algebra ----------------------------------------------------------

def _random_ratfunc(rng: random.Random, nvars: int = 2) -> RatFunc:
    def poly():
        out = RatFunc(0)
        for _ in range(rng.randint(1, 3)):
            term = RatFunc(Fraction(rng.randint(-5, 5), rng.randint(1, 4)))
            for v in range(1, nvars + 1):
                term = term * RatFunc.lam(v) ** rng.randint(0, 2)
            out = out + term
        return out

    den = poly()
    while den.is_zero():
        den = poly()
    return poly() / den


def _random_qrat(rng: random.Random) -> QRatFunc:
    def laurent():
        return QLaurent.from_terms({Fraction(rng.randint(-6, 6), rng.choice((1, 2, 3))): rng.randint(-3, 3) for _ in range(3)})

    den = laurent()
    while den.is_zero():
        den = laurent()
    return QRatFunc(laurent(), den)


def suite_properties(job: Job, count: int = 250) -> SuiteResult:
    """Randomized field axioms for RatFunc and QRatFunc, bar involution, specialization."""
    res = SuiteResult("properties")
    rng = random.Random(job.seed)
    point = {"l1": Fraction(3, 7), "l2": Fraction(-5, 2)}
    for n in range(count):
        a, b, c = (_random_ratfunc(rng) for _ in range(3))
        res.run(f"ratfunc #{n}", lambda: (a + b) * c == a * c + b * c and (a - b) + b == a and a * b == b * a)
        if not b.is_zero():
            res.run(f"ratfunc div #{n}", lambda: (a / b) * b == a)

        def hom():
            try:
                lhs = (a * b + c).evaluate(point)
            except ZeroDivisionError:
                return True
            return lhs == a.evaluate(point) * b.evaluate(point) + c.evaluate(point)

        res.run(f"specialize #{n}", hom)
        x, y = _random_qrat(rng), _random_qrat(rng)
        res.run(f"qrat #{n}", lambda: (x + y).bar() == x.bar() + y.bar() and (x * y).bar() == x.bar() * y.bar() and x.bar().bar() == x)
        res.run(f"normalize #{n}", lambda: QRatFunc(x.num, x.den) == x and RatFunc(a.num, a.den) == a)
    return res


FINITE_SUITES = {
    "difference": suite_difference,
    "eigencondition": suite_eigencondition,
    "toda": suite_toda,
    "oracle": suite_oracle,
    "bump": suite_bump,
    "higher": suite_higher,
    "third": suite_third,
    "properties": suite_properties,
}
AFFINE_SUITES = {
    "difference": suite_difference,
    "oracle": suite_oracle,
    "deformed": suite_deformed,
    "exponent": suite_exponent,
    "critical": suite_critical,
    "properties": suite_properties,
}
QUANTUM_SUITES = {
    "oracle": suite_q_oracle,
    "difference": suite_q_difference,
    "cancel": suite_q_cancel,
    "eigen": suite_q_eigen,
    "bar": suite_q_bar,
    "toda": suite_q_toda,
    "closed": suite_q_closed,
    "limit": suite_q_limit,
    "properties": suite_properties,
}
SUITES = {"finite": FINITE_SUITES, "affine": AFFINE_SUITES, "quantum": QUANTUM_SUITES}
A2_ONLY = {"bump", "higher", "third"}


def available_suites(job: Job) -> list[str]:
    names = list(SUITES[job.mode])
    if job.mode == "finite" and str(job.cd.type) != "A2":
        names = [n for n in names if n not in A2_ONLY]
    if job.mode == "quantum" and job.qctx.rank > 2:
        names.remove("closed")
    return names


def run_suites(job: Job, names: list[str] | str = "all") -> list[SuiteResult]:
    table = SUITES[job.mode]
    if names == "all":
        names = available_suites(job)
    elif isinstance(names, str):
        names = [names]
    unknown = [n for n in names if n not in table]
    if unknown:
        raise UnsupportedType(f"unknown suite(s) {unknown} for {job.mode} mode; choose from {sorted(table)}")
    return [table[n](job) for n in names]
