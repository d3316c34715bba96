"""Command-line driver: ``qpodles <command> [options]``.

Exit codes: 0 success, 1 property failure, 2 usage or parse error,
3 semantic input error.  Every option falls back to a ``QPODLES_*``
environment variable (``QPODLES_S``, ``QPODLES_N``, ``QPODLES_TENSOR_MAX``,
``QPODLES_FORMAT``, ``QPODLES_SEED``, ``QPODLES_PROJECTION``).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional

from qpodles._parse import ParseError

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_SEMANTIC = 0, 1, 2, 3
FORMATS = ("json", "csv", "md")
TARGETS = ("Dq", "RP2q", "id", "sigma", "mu")


class UsageError(Exception):
    pass


class SemanticError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    s: Fraction = Fraction(1)
    N: int = 6
    tensor_max: int = 3
    format: str = "md"
    seed: int = 0
    projection: Optional[str] = None

    def __post_init__(self):
        if self.N < 2:
            raise UsageError("--N must be at least 2")
        if self.tensor_max < 0:
            raise UsageError("--tensor-max must be nonnegative")
        if self.format not in FORMATS:
            raise UsageError(f"--format must be one of {', '.join(FORMATS)}")
        if not 0 <= self.s <= 1:
            raise UsageError("--s must lie in [0, 1]")


def _env(name, default):
    return os.environ.get("QPODLES_" + name, default)


def _fraction(text):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r}")


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    g = p.add_argument_group("run configuration")
    g.add_argument("--s", type=_fraction, default=argparse.SUPPRESS,
                   help="structure parameter s in [0, 1] (default 1)")
    g.add_argument("--N", type=int, default=argparse.SUPPRESS,
                   help="PBW degree truncation (default 6)")
    g.add_argument("--tensor-max", type=int, default=argparse.SUPPRESS,
                   help="tensor degree cap for bar complexes (default 3)")
    g.add_argument("--format", choices=FORMATS, default=argparse.SUPPRESS)
    g.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    g.add_argument("--projection", default=argparse.SUPPRESS,
                   help="JSON file with a projection matrix over the crossed product")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    p = argparse.ArgumentParser(prog="qpodles", parents=[common],
                                description="Exact computations in the Podles sphere algebra.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("normalize", parents=[common], help="PBW normal form of an expression")
    c.add_argument("expr")

    c = sub.add_parser("mul", parents=[common], help="product of two expressions")
    c.add_argument("x")
    c.add_argument("y")

    c = sub.add_parser("verify", parents=[common], help="run a self-check suite")
    c.add_argument("suite", choices=("relations", "resolution", "complexes"))

    c = sub.add_parser("homology", parents=[common],
                       help="Hochschild homology of an orbifold (Dq, RP2q) or twist")
    c.add_argument("target", choices=TARGETS)
    c.add_argument("--n", type=int, default=0, help="homological degree (0, 1 or 2)")
    c.add_argument("--source", choices=("auto", "mnw", "bar"), default="auto")

    c = sub.add_parser("cyclic", parents=[common], help="cyclic homology HC_n")
    c.add_argument("target", choices=TARGETS)
    c.add_argument("--n", type=int, default=0)

    c = sub.add_parser("index-table", parents=[common], help="Chern pairing table")
    c.add_argument("orbifold", choices=("Dq", "RP2q"))

    c = sub.add_parser("basis", parents=[common], help="PBW basis up to degree N")
    return p


def _config(ns) -> RunConfig:
    def pick(attr, env, conv, default):
        if hasattr(ns, attr):
            return getattr(ns, attr)
        raw = _env(env, None)
        if raw is None:
            return default
        try:
            return conv(raw)
        except (ValueError, ZeroDivisionError, argparse.ArgumentTypeError):
            raise UsageError(f"bad value {raw!r} in QPODLES_{env}")

    return RunConfig(s=pick("s", "S", Fraction, Fraction(1)),
                     N=pick("N", "N", int, 6),
                     tensor_max=pick("tensor_max", "TENSOR_MAX", int, 3),
                     format=pick("format", "FORMAT", str, "md"),
                     seed=pick("seed", "SEED", int, 0),
                     projection=pick("projection", "PROJECTION", str, None))


# ----------------------------------------------------------------------
# commands

def _emit_value(cfg: RunConfig, key: str, inp, value: str) -> str:
    if cfg.format == "json":
        return json.dumps({"input": inp, key: value}, ensure_ascii=False)
    if cfg.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["input", key])
        w.writerow([" ; ".join(inp) if isinstance(inp, list) else inp, value])
        return buf.getvalue().rstrip("\n")
    return value


def cmd_normalize(cfg, ns, out):
    from qpodles.podles import Podles
    alg = Podles(cfg.s)
    out.write(_emit_value(cfg, "normal_form", ns.expr, alg.parse(ns.expr).to_text()) + "\n")
    return EXIT_OK


def cmd_mul(cfg, ns, out):
    from qpodles.podles import Podles
    alg = Podles(cfg.s)
    v = alg.parse(ns.x) * alg.parse(ns.y)
    out.write(_emit_value(cfg, "product", [ns.x, ns.y], v.to_text()) + "\n")
    return EXIT_OK


def cmd_verify(cfg, ns, out):
    from qpodles.checks import run_suite
    res = run_suite(ns.suite, s=cfg.s, seed=cfg.seed)
    if cfg.format == "json":
        out.write(res.to_json() + "\n")
    else:
        for c in res.checks:
            out.write(f"{'PASS' if c.passed else 'FAIL'}  {c.name}\n")
        for k, v in res.info.items():
            out.write(f"# {k} = {v}\n")
        out.write(f"{ns.suite}: {'pass' if res.passed else 'FAIL'}\n")
    return EXIT_OK if res.passed else EXIT_FAIL


def _report_out(cfg, rep, out):
    d = rep.to_dict()
    if cfg.format == "json":
        out.write(json.dumps(d, ensure_ascii=False) + "\n")
    elif cfg.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["twist", "n", "N", "dim", "stabilized", "generator"])
        for g in rep.generators or [""]:
            w.writerow([rep.twist, rep.n, rep.N, rep.dim, str(rep.stabilized).lower(), g])
    else:
        out.write(f"| twist | n | N | dim | stabilized |\n|---|---|---|---|---|\n"
                  f"| {rep.twist} | {rep.n} | {rep.N} | {rep.dim} | "
                  f"{str(rep.stabilized).lower()} |\n\n")
        for g in rep.generators:
            out.write(f"- `{g}`\n")


def _semantic_twist(cfg, target):
    if target in ("RP2q", "mu") and cfg.s != 1:
        raise SemanticError("the mu action exists only for s = 1")


def cmd_homology(cfg, ns, out):
    from qpodles.homology import HomologyEngine, TruncationSpec
    if not 0 <= ns.n <= 2:
        raise UsageError("--n must be 0, 1 or 2")
    _semantic_twist(cfg, ns.target)
    source = ns.source
    if source == "auto":
        source = "mnw" if ns.n <= 1 else "bar"
    if source == "mnw" and ns.n >= 2:
        raise UsageError("the MNW model covers degrees 0 and 1; use --source bar")
    if source == "bar" and ns.n + 1 > cfg.tensor_max:
        raise UsageError(f"bar H_{ns.n} needs --tensor-max >= {ns.n + 1}")
    eng = HomologyEngine(cfg.s)
    trunc = TruncationSpec(cfg.N, cfg.tensor_max)
    if ns.target in ("Dq", "RP2q"):
        rep = eng.orbifold_hh(ns.target, ns.n, trunc, source=source)
    else:
        rep = eng.hh_report(source, ns.target, ns.n, trunc)
    _report_out(cfg, rep, out)
    return EXIT_OK


def cmd_cyclic(cfg, ns, out):
    from qpodles.homology import ORBIFOLDS, HomologyEngine, TruncationSpec
    if not 0 <= ns.n <= 2:
        raise UsageError("--n must be 0, 1 or 2")
    _semantic_twist(cfg, ns.target)
    eng = HomologyEngine(cfg.s)
    trunc = TruncationSpec(cfg.N, cfg.tensor_max)
    if ns.target in ORBIFOLDS:
        rep = eng.orbifold_hc(ns.target, ns.n, trunc)
    else:
        rep = eng.hc_report(ns.target, ns.n, trunc)
    _report_out(cfg, rep, out)
    return EXIT_OK


def cmd_index_table(cfg, ns, out):
    from qpodles.chern import NotAProjection, index_table
    from qpodles.crossed import CrossedMatrix, MixedAction
    from qpodles.podles import Podles
    alg = Podles(cfg.s)
    _semantic_twist(cfg, ns.orbifold)
    extra, labels = [], []
    if cfg.projection:
        try:
            with open(cfg.projection, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise SemanticError(f"cannot read projection file: {exc}")
        try:
            extra.append(CrossedMatrix.from_json(alg, text))
        except (json.JSONDecodeError, KeyError, TypeError) as exc:
            raise UsageError(f"malformed projection file: {exc}")
        except (MixedAction, ValueError) as exc:
            if isinstance(exc, ParseError):
                raise
            raise SemanticError(str(exc))
        labels.append("[P]")
    try:
        table = index_table(ns.orbifold, extra, alg=alg, extra_labels=labels)
    except NotAProjection as exc:
        raise SemanticError(str(exc))
    out.write(table.render(cfg.format))
    return EXIT_OK


def cmd_basis(cfg, ns, out):
    from qpodles.podles import Podles
    basis = Podles.basis_up_to(cfg.N)
    if cfg.format == "json":
        out.write(json.dumps({"N": cfg.N, "count": len(basis),
                              "basis": [m.text() for m in basis]}) + "\n")
    elif cfg.format == "csv":
        out.write("index,monomial,degree,weight\n")
        for i, m in enumerate(basis):
            out.write(f"{i},{m.text()},{m.degree},{m.weight}\n")
    else:
        out.write(" ".join(m.text() for m in basis) + "\n")
    return EXIT_OK


COMMANDS = {"normalize": cmd_normalize, "mul": cmd_mul, "verify": cmd_verify,
            "homology": cmd_homology, "cyclic": cmd_cyclic, "index-table": cmd_index_table,
            "basis": cmd_basis}


def main(argv: Optional[List[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already printed the message
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        cfg = _config(ns)
        return COMMANDS[ns.command](cfg, ns, out)
    except (UsageError, ParseError) as exc:
        err.write(f"qpodles: error: {exc}\n")
        return EXIT_USAGE
    except SemanticError as exc:
        err.write(f"qpodles: error: {exc}\n")
        return EXIT_SEMANTIC


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
