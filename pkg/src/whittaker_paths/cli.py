"""whitpath: partition-function tables, Whittaker vectors, verification suites and
critical-level expansions from the command line.

    whitpath table    --type A2 --degree 3
    whitpath table    --type A1~ --degree 2
    whitpath table    --type A2q --lambda 3,4 --degree 3
    whitpath vector   --type G2 --degree 2 --output pretty
    whitpath verify   --type B2 --degree 5 --suite toda
    whitpath critical --type A1~ --degree 3 --jmax 1 --gauge limit

Exit status: 0 ok, 1 an identity failed, 2 singular weight, 3 bad configuration.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .affine import AffinePartitionTable, critical_solve, GAUGES
from .algebra.qlaurent import QRatFunc, laurent_str
from .algebra.ratfunc import RatFunc, poly_str
from .cartan import LieType, WeightParam, build_cartan, parse_type
from .errors import SingularWeight, WhittakerError
from .finite import whittaker_vector
from .paths import PartitionTable, lattice_points
from . import quantum as qm
from . import verify

EXIT_OK, EXIT_FAIL, EXIT_SINGULAR, EXIT_CONFIG = 0, 1, 2, 3


class ConfigError(WhittakerError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        sys.exit(EXIT_CONFIG)


@dataclass
class JobConfig:
    type: LieType
    mode: str  # finite | affine | quantum | critical
    max_degree: int
    j_max: int = 0
    lambda_spec: tuple | None = None
    eps: Fraction | None = None
    output: str = "json"
    seed: int = 0
    gauge: str = "zero"
    suite: str = "all"

    def weight(self) -> WeightParam:
        affine = self.mode in ("affine", "critical")
        if self.lambda_spec is None:
            return WeightParam.symbolic(self.type.rank, affine)
        if affine and self.mode == "affine" and self.eps is None:
            raise ConfigError("a specialized affine weight also needs --eps")
        return WeightParam.specialized(self.lambda_spec, self.eps if affine else None)

    def qcontext(self) -> qm.QContext:
        return qm.QContext.of(self.lambda_spec)


def _parse_lambda(text: str | None) -> tuple | None:
    if text is None:
        return None
    try:
        return tuple(Fraction(x.strip()) for x in text.split(","))
    except (ValueError, ZeroDivisionError) as e:
        raise ConfigError(f"bad --lambda {text!r}: {e}") from None


def build_config(args: argparse.Namespace) -> JobConfig:
    text = args.type.strip()
    quantum = text.endswith("q")
    if quantum:
        text = text[:-1]
    t = parse_type(text)
    if args.affine and not t.affine:
        t = LieType(t.family, t.rank, True)
    lam = _parse_lambda(args.__dict__.get("lambda_"))
    eps = Fraction(args.eps) if getattr(args, "eps", None) is not None else None
    if args.degree < 0:
        raise ConfigError("--degree must be non-negative")
    if args.command == "critical":
        mode = "critical"
        if not t.affine:
            raise ConfigError("critical mode needs an affine type (e.g. A1~)")
        if quantum:
            raise ConfigError("no quantum critical expansion")
    elif quantum:
        mode = "quantum"
        if t.family != "A" or t.affine:
            raise ConfigError("the quantum model is implemented for finite type A only")
        if lam is None:
            raise ConfigError("quantum mode needs --lambda")
    else:
        mode = "affine" if t.affine else "finite"
    if lam is not None and len(lam) != t.rank:
        raise ConfigError(f"{t} needs {t.rank} --lambda entries, got {len(lam)}")
    return JobConfig(
        type=t,
        mode=mode,
        max_degree=args.degree,
        j_max=getattr(args, "jmax", 0),
        lambda_spec=lam,
        eps=eps,
        output=args.output,
        seed=args.seed,
        gauge=getattr(args, "gauge", "zero"),
        suite=getattr(args, "suite", "all"),
    )


# -- value rendering ---------------------------------------------------------

def key(beta: Sequence[int]) -> str:
    return "(" + ",".join(map(str, beta)) + ")"


def show(x) -> str:
    return str(x)


def exact(x):
    if isinstance(x, Fraction):
        return {"num": str(x.numerator), "den": str(x.denominator)}
    return x.to_json()


def num_den(x) -> tuple[str, str]:
    if isinstance(x, Fraction):
        return str(x.numerator), str(x.denominator)
    if isinstance(x, RatFunc):
        return poly_str(x.num), poly_str(x.den)
    if isinstance(x, QRatFunc):
        return laurent_str(x.num), laurent_str(x.den)
    raise TypeError(type(x))


def from_exact(data):
    """Inverse of ``exact``; the value type is recognised from the JSON shape."""
    if "vars" in data:
        return RatFunc.from_json(data)
    if isinstance(data["num"], str):
        return Fraction(int(data["num"]), int(data["den"]))
    return QRatFunc.from_json(data)


def _meta(cfg: JobConfig) -> dict:
    out = {"type": str(cfg.type) + ("q" if cfg.mode == "quantum" else ""), "mode": cfg.mode, "degree": cfg.max_degree}
    if cfg.lambda_spec is not None:
        out["lambda"] = [str(x) for x in cfg.lambda_spec]
    if cfg.eps is not None:
        out["eps"] = str(cfg.eps)
    if cfg.mode == "critical":
        out["jmax"] = cfg.j_max
        out["gauge"] = cfg.gauge
    return out


def _emit_rows(cfg: JobConfig, rows: list[tuple[str, str, object]], extra: dict | None = None) -> str:
    """rows are (key, label, value); label is the vector word or ''."""
    if cfg.output == "json":
        doc = dict(_meta(cfg))
        if extra:
            doc.update(extra)
        if any(label for _, label, _ in rows) or doc.get("kind") == "vector":
            grouped: dict[str, list] = {}
            for k, label, v in rows:
                grouped.setdefault(k, []).append([label, show(v)])
            doc["terms"] = grouped
            doc["exact"] = {f"{k}|{label}": exact(v) for k, label, v in rows}
        else:
            doc["table"] = {k: show(v) for k, _, v in rows}
            doc["exact"] = {k: exact(v) for k, _, v in rows}
        return json.dumps(doc, indent=2) + "\n"
    if cfg.output == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        header = ["beta_coords", "value_num", "value_den"]
        with_label = any(label for _, label, _ in rows)
        if with_label:
            header.insert(1, "word")
        w.writerow(header)
        for k, label, v in rows:
            n, d = num_den(v)
            w.writerow([k, label, n, d] if with_label else [k, n, d])
        return buf.getvalue()
    lines = []
    for k, label, v in rows:
        lines.append(f"{k}  {label + '  ' if label else ''}{show(v)}")
    return "\n".join(lines) + "\n"


# -- commands ----------------------------------------------------------------

def cmd_table(cfg: JobConfig) -> tuple[int, str]:
    if cfg.mode == "quantum":
        t = qm.QPartitionTable(cfg.qcontext())
        size = cfg.type.rank
    else:
        cd = build_cartan(cfg.type)
        cls = AffinePartitionTable if cfg.mode == "affine" else PartitionTable
        t = cls(cd, cfg.weight())
        size = cd.size
    rows = [(key(b), "", t[b]) for b in lattice_points(size, cfg.max_degree)]
    return EXIT_OK, _emit_rows(cfg, rows, {"kind": "table"})


def cmd_vector(cfg: JobConfig) -> tuple[int, str]:
    if cfg.mode == "quantum":
        terms = qm.q_whittaker_vector(cfg.qcontext(), cfg.max_degree, cap=max(cfg.max_degree, 10))
        rows = [(key(b), " ".join(f"f{i + 1}" for i in reversed(p.steps)), x) for b, p, x in terms]
    else:
        cd = build_cartan(cfg.type)
        terms = whittaker_vector(cd, cfg.weight(), cfg.max_degree, cap=max(cfg.max_degree, 10))
        rows = [(key(t.mu_degree), t.word(), t.coefficient) for t in terms]
    return EXIT_OK, _emit_rows(cfg, rows, {"kind": "vector"})


def cmd_critical(cfg: JobConfig) -> tuple[int, str]:
    cd = build_cartan(cfg.type)
    exp = critical_solve(cd, cfg.weight(), cfg.max_degree, cfg.j_max, cfg.gauge)
    a_rows = [(f"a_{m}", "", v) for m, v in sorted(exp.a.items())]
    w_rows = [
        (f"w_{j};{key(beta)}", "", exp.w[(j, beta)])
        for beta in lattice_points(cd.size, cfg.max_degree)
        for j in range(cfg.j_max + 1)
    ]
    if cfg.output == "json":
        doc = dict(_meta(cfg), kind="critical")
        doc["a"] = {str(m): show(v) for m, v in sorted(exp.a.items())}
        doc["w"] = {k[2:]: show(v) for k, _, v in w_rows}
        doc["exact"] = {k: exact(v) for k, _, v in a_rows + w_rows}
        return EXIT_OK, json.dumps(doc, indent=2) + "\n"
    return EXIT_OK, _emit_rows(cfg, a_rows + w_rows)


def cmd_verify(cfg: JobConfig) -> tuple[int, str]:
    if cfg.mode == "critical":
        raise ConfigError("use --suite critical with an affine type")
    job = verify.Job(
        cd=None if cfg.mode == "quantum" else build_cartan(cfg.type),
        weight=None if cfg.mode == "quantum" else cfg.weight(),
        degree=cfg.max_degree,
        mode=cfg.mode,
        j_max=cfg.j_max,
        gauge=cfg.gauge,
        qctx=cfg.qcontext() if cfg.mode == "quantum" else None,
        seed=cfg.seed,
    )
    names = "all" if cfg.suite == "all" else [s.strip() for s in cfg.suite.split(",")]
    results = verify.run_suites(job, names)
    code = EXIT_OK if all(r.passed for r in results) else EXIT_FAIL
    if cfg.output == "json":
        doc = dict(_meta(cfg), kind="verify", passed=code == EXIT_OK)
        doc["suites"] = [
            {"name": r.name, "passed": r.passed, "instances": r.instances, "singular": r.singular, "failures": r.failures[:20]}
            for r in results
        ]
        return code, json.dumps(doc, indent=2) + "\n"
    if cfg.output == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["suite", "passed", "instances", "singular", "first_failure"])
        for r in results:
            w.writerow([r.name, r.passed, r.instances, r.singular, r.failures[0] if r.failures else ""])
        return code, buf.getvalue()
    return code, "\n".join(r.summary() for r in results) + "\n"


COMMANDS = {"table": cmd_table, "vector": cmd_vector, "verify": cmd_verify, "critical": cmd_critical}


def make_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="whitpath", description="Whittaker vectors and functions from weighted lattice paths.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--type", required=True, help="Lie type: A2, G2, A1~ (affine), A2q (quantum)")
    common.add_argument("--degree", type=int, default=3, help="maximal total degree |beta|")
    common.add_argument("--lambda", dest="lambda_", help="comma-separated rational weight, e.g. 3,4 or 5/3,11/2")
    common.add_argument("--eps", help="specialized eps = k + h^vee for affine tables")
    common.add_argument("--affine", action="store_true", help="treat --type as its untwisted affinization")
    common.add_argument("--output", choices=("json", "csv", "pretty"), default="json")
    common.add_argument("--out", help="write to this file instead of stdout")
    common.add_argument("--seed", type=int, default=0)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("table", parents=[common], help="partition functions Z_beta")
    sub.add_parser("vector", parents=[common], help="Whittaker vector terms grouped by beta")
    v = sub.add_parser("verify", parents=[common], help="run verification suites")
    v.add_argument("--suite", default="all", help="suite name, comma list, or 'all'")
    v.add_argument("--jmax", type=int, default=2)
    v.add_argument("--gauge", choices=GAUGES, default="limit")
    c = sub.add_parser("critical", parents=[common], help="critical-level expansion coefficients")
    c.add_argument("--jmax", type=int, default=0)
    c.add_argument("--gauge", choices=GAUGES, default="zero")
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = make_parser().parse_args(argv)
    try:
        cfg = build_config(args)
        code, text = COMMANDS[args.command](cfg)
    except SingularWeight as e:
        sys.stderr.write(f"singular: {e}\n")
        return EXIT_SINGULAR
    except (WhittakerError, ValueError) as e:
        sys.stderr.write(f"config error: {e}\n")
        return EXIT_CONFIG
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
