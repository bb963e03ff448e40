"""Command-line front end.

Data goes to stdout, diagnostics to stderr.  Exit codes::

    0  success / property holds
    1  property false or search came back empty
    2  input or usage error
    3  budget exceeded
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from typing import TextIO

import numpy as np

from . import catcheck, config
from .enumeration import EnumerationConfig, all_quasigroups, count_latin_squares, enumerate_latin_squares
from .errors import BudgetExceeded, InputError
from .morphisms import complete_homotopy, enumerate_homotopies, find_isomorphism, find_isotopy
from .qcore import (
    ParastropheKind,
    Quasigroup,
    cyclic_rotate,
    from_mul_table,
    is_semisymmetric_twisted,
    is_twisted_quasigroup,
    parastrophe,
    semisymmetry_report,
    twisted,
    validate_latin,
)
from .qgt import format_map, format_qgt, format_stream, format_table, parse_map, parse_table, split_records
from .semisym import (
    GammaVariant,
    delta_object,
    format_tagged,
    gamma_table,
    gamma_tagged,
    twisted_semisymmetrization,
)

EXIT_OK, EXIT_FALSE, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3

VERBS = ("validate", "show", "semisymmetrize", "check", "morph", "enumerate", "probe")
CHECKS = ("ss", "twisted", "adjunction", "faithful", "gf-algebra", "object-injectivity")
MORPHS = ("find-iso", "find-isotopy", "enumerate-homotopies", "complete-homotopy")


@dataclass
class Command:
    verb: str
    options: argparse.Namespace
    inputs: list[str]


def _positive_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--budget", type=_positive_int, default=None,
                        help=f"search budget (overrides ${config.BUDGET_ENV})")

    parser = argparse.ArgumentParser(prog="qss", description="Finite quasigroup semisymmetrization toolkit.")
    sub = parser.add_subparsers(dest="verb", required=True, metavar="VERB")

    p = sub.add_parser("validate", parents=[common], help="check that tables are Latin squares")
    p.add_argument("inputs", nargs="+", metavar="FILE")

    p = sub.add_parser("show", parents=[common], help="print a parastrophe table")
    p.add_argument("--parastrophe", choices=[k.value for k in ParastropheKind], default="mul")
    p.add_argument("inputs", nargs="+", metavar="FILE")

    p = sub.add_parser("semisymmetrize", parents=[common], help="emit a semisymmetrized quasigroup")
    p.add_argument("--functor", choices=("delta", "gamma", "nabla23", "nabla31"), default="delta")
    p.add_argument("--variant", choices=[v.value for v in GammaVariant], default=None)
    p.add_argument("--tagged", action="store_true", help="append the source tag block (gamma v12 only)")
    p.add_argument("inputs", nargs="+", metavar="FILE")

    p = sub.add_parser("check", parents=[common], help="run a law check or sweep")
    p.add_argument("name", choices=CHECKS)
    p.add_argument("--max-order", type=_positive_int, default=None)
    p.add_argument("--functor", choices=("delta", "gamma"), default=None)
    p.add_argument("--samples", type=_positive_int, default=config.DEFAULT_GF_SAMPLES)
    p.add_argument("--seed", type=int, default=config.DEFAULT_GF_SEED)
    p.add_argument("inputs", nargs="*", metavar="FILE")

    p = sub.add_parser("morph", parents=[common], help="search for homomorphisms and homotopies")
    p.add_argument("name", choices=MORPHS)
    p.add_argument("--f1", default=None, help="first component, as a map line")
    p.add_argument("--f2", default=None, help="second component, as a map line")
    p.add_argument("inputs", nargs="+", metavar="FILE")

    p = sub.add_parser("enumerate", parents=[common], help="list Latin squares of a given order")
    p.add_argument("--order", type=_positive_int, required=True)
    p.add_argument("--reduced", action="store_true")
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--limit", type=_positive_int, default=None)

    p = sub.add_parser("probe", parents=[common], help="isotopy versus isomorphism of semisymmetrizations")
    p.add_argument("name", choices=("isotopy-vs-ss",))
    p.add_argument("inputs", nargs=2, metavar="FILE")
    return parser


def parse_args(argv: list[str]) -> Command:
    ns = build_parser().parse_args(argv)
    return Command(ns.verb, ns, list(getattr(ns, "inputs", [])))


class _Env:
    def __init__(self, stdin: TextIO, stdout: TextIO, stderr: TextIO):
        self.stdin, self.out, self.err = stdin, stdout, stderr
        self._stdin_text: str | None = None

    def read(self, path: str) -> str:
        if path == "-":
            if self._stdin_text is None:
                self._stdin_text = self.stdin.read()
            return self._stdin_text
        try:
            with open(path, encoding="utf-8") as fh:
                return fh.read()
        except OSError as exc:
            raise InputError(f"cannot read {path}: {exc.strerror}") from None

    def records(self, path: str) -> list[tuple[str, str]]:
        texts = split_records(self.read(path))
        if not texts:
            raise InputError(f"{path}: no QGT records")
        if len(texts) == 1:
            return [(path, texts[0])]
        return [(f"{path}#{i}", t) for i, t in enumerate(texts)]

    def quasigroups(self, path: str) -> list[tuple[str, Quasigroup]]:
        return [(label, from_mul_table(parse_table(t).cells)) for label, t in self.records(path)]

    def single(self, path: str) -> Quasigroup:
        qs = self.quasigroups(path)
        if len(qs) != 1:
            raise InputError(f"{path}: expected one record, found {len(qs)}")
        return qs[0][1]

    def print(self, text: str = "") -> None:
        self.out.write(text if text.endswith("\n") else text + "\n")


def _flag(b: bool) -> str:
    return "PASS" if b else "FAIL"


def _cmd_validate(cmd: Command, env: _Env) -> int:
    ok = True
    for path in cmd.inputs:
        for label, text in env.records(path):
            good = validate_latin(parse_table(text).cells)
            ok &= good
            env.print(f"CHECK latin {label} {_flag(good)}")
    return EXIT_OK if ok else EXIT_FALSE


def _cmd_show(cmd: Command, env: _Env) -> int:
    kind = ParastropheKind(cmd.options.parastrophe)
    out = []
    for path in cmd.inputs:
        for _, q in env.quasigroups(path):
            out.append(format_qgt(parastrophe(q, kind), comments=[f"parastrophe {kind.value}"]))
    env.print(format_stream(out))
    return EXIT_OK


def _gamma_variant(opts) -> GammaVariant:
    defaults = {"gamma": GammaVariant.V12, "nabla23": GammaVariant.V23, "nabla31": GammaVariant.V31_SYMMETRIC}
    if opts.variant is not None:
        return GammaVariant(opts.variant)
    return defaults[opts.functor]


def _cmd_semisymmetrize(cmd: Command, env: _Env) -> int:
    opts = cmd.options
    if opts.functor == "delta" and opts.variant is not None:
        raise InputError("--variant applies to the square construction only")
    status = EXIT_OK
    out = []
    for path in cmd.inputs:
        for label, q in env.quasigroups(path):
            if opts.functor == "delta":
                if opts.tagged:
                    raise InputError("--tagged applies to the square construction only")
                out.append(format_qgt(delta_object(q), comments=[f"delta of {label}"]))
                continue
            variant = _gamma_variant(opts)
            if opts.tagged:
                if variant is not GammaVariant.V12:
                    raise InputError("--tagged is defined for variant v12 only")
                out.append(format_tagged(gamma_tagged(q)))
                continue
            table = gamma_table(q, variant)
            if not validate_latin(table):
                env.err.write(f"{label}: variant {variant.value} does not give a Latin square\n")
                status = EXIT_FALSE
            out.append(f"# gamma {variant.value} of {label}\n" + format_table(table))
    env.print(format_stream(out))
    return status


def _catalog(opts, default: int) -> list[Quasigroup]:
    return all_quasigroups(opts.max_order or default)


def _emit(env: _Env, results) -> int:
    ok = True
    for r in results:
        env.print(r.line())
        ok &= r.passed
    return EXIT_OK if ok else EXIT_FALSE


def _cmd_check(cmd: Command, env: _Env) -> int:
    opts = cmd.options
    name = opts.name
    results: list[catcheck.CheckResult] = []
    if name in ("ss", "twisted"):
        if not cmd.inputs:
            raise InputError(f"check {name} needs at least one input")
        for path in cmd.inputs:
            for label, q in env.quasigroups(path):
                if name == "ss":
                    rep = semisymmetry_report(q)
                    flags = " ".join(f"{k}={str(v).lower()}" for k, v in rep._asdict().items())
                    results.append(catcheck.CheckResult("ss", label, rep.all_true, flags))
                else:
                    t = twisted(q)
                    rots = [t, cyclic_rotate(t), cyclic_rotate(cyclic_rotate(t))]
                    ok = all(is_twisted_quasigroup(x) for x in rots)
                    ts = twisted_semisymmetrization(q)
                    equal = np.array_equal(ts.op1, ts.op3) and np.array_equal(ts.op2, ts.op3)
                    results.append(catcheck.CheckResult(
                        "twisted", label, ok and equal and is_semisymmetric_twisted(ts),
                        f"rotations={str(ok).lower()} nabla-equal={str(equal).lower()}"))
        return _emit(env, results)
    if name == "adjunction":
        qs = _inputs_or_catalog(cmd, env, 3)
        return _emit(env, catcheck.sweep_adjunction(qs, opts.budget))
    if name == "faithful":
        qs = _inputs_or_catalog(cmd, env, 2)
        functors = (opts.functor,) if opts.functor else ("delta", "gamma")
        return _emit(env, catcheck.sweep_faithful(qs, functors, opts.budget))
    if name == "gf-algebra":
        qs = _inputs_or_catalog(cmd, env, 3)
        return _emit(env, catcheck.sweep_gf_algebra(qs, opts.samples, opts.seed, opts.budget))
    if name == "object-injectivity":
        qs = _inputs_or_catalog(cmd, env, 3)
        return _emit(env, catcheck.sweep_object_injectivity(qs))
    raise InputError(f"unknown check {name!r}")


def _inputs_or_catalog(cmd: Command, env: _Env, default: int) -> list[Quasigroup]:
    if cmd.inputs:
        return [q for path in cmd.inputs for _, q in env.quasigroups(path)]
    return _catalog(cmd.options, default)


def _pair(cmd: Command, env: _Env) -> tuple[Quasigroup, Quasigroup]:
    if len(cmd.inputs) > 2:
        raise InputError("expected one or two inputs")
    q = env.single(cmd.inputs[0])
    r = env.single(cmd.inputs[1]) if len(cmd.inputs) == 2 else q
    return q, r


def _homotopy_lines(h) -> str:
    return "\n".join(format_map(f) for f in h.components) + "\n"


def _cmd_morph(cmd: Command, env: _Env) -> int:
    opts = cmd.options
    q, r = _pair(cmd, env)
    budget = opts.budget
    if opts.name == "find-iso":
        f = find_isomorphism(q, r, budget)
        if f is None:
            env.err.write("no isomorphism\n")
            return EXIT_FALSE
        env.print(format_map(f))
        return EXIT_OK
    if opts.name == "find-isotopy":
        h = find_isotopy(q, r, budget)
        if h is None:
            env.err.write("no isotopy\n")
            return EXIT_FALSE
        env.print(_homotopy_lines(h))
        return EXIT_OK
    if opts.name == "enumerate-homotopies":
        hs = enumerate_homotopies(q, r, budget)
        env.err.write(f"{len(hs)} homotopies\n")
        if hs:
            env.print(format_stream(_homotopy_lines(h) for h in hs))
        return EXIT_OK if hs else EXIT_FALSE
    if opts.name == "complete-homotopy":
        if opts.f1 is None or opts.f2 is None:
            raise InputError("complete-homotopy needs --f1 and --f2")
        h = complete_homotopy(q, r, parse_map(opts.f1), parse_map(opts.f2))
        if h is None:
            env.err.write("no homotopy extends (f1, f2)\n")
            return EXIT_FALSE
        env.print(_homotopy_lines(h))
        return EXIT_OK
    raise InputError(f"unknown morph command {opts.name!r}")


def _cmd_enumerate(cmd: Command, env: _Env) -> int:
    opts = cmd.options
    cfg = EnumerationConfig(opts.order, opts.reduced, opts.limit)
    if opts.count_only:
        env.print(str(count_latin_squares(cfg)))
        return EXIT_OK
    first = True
    for q in enumerate_latin_squares(cfg):
        if not first:
            env.out.write("---\n")
        env.out.write(format_table(q.mul))
        first = False
    return EXIT_OK


def _cmd_probe(cmd: Command, env: _Env) -> int:
    q = env.single(cmd.inputs[0])
    r = env.single(cmd.inputs[1])
    try:
        rep = catcheck.probe_isotopy_vs_ss_iso(q, r, cmd.options.budget)
    except BudgetExceeded as exc:
        for k, v in (exc.partial or {}).items():
            env.err.write(f"{k}: {str(v).lower()}\n")
        raise
    for k, v in rep._asdict().items():
        env.print(f"{k}: {str(v).lower()}")
    return EXIT_OK


_HANDLERS = {
    "validate": _cmd_validate,
    "show": _cmd_show,
    "semisymmetrize": _cmd_semisymmetrize,
    "check": _cmd_check,
    "morph": _cmd_morph,
    "enumerate": _cmd_enumerate,
    "probe": _cmd_probe,
}


def execute(cmd: Command, stdin: TextIO | None = None, stdout: TextIO | None = None,
            stderr: TextIO | None = None) -> int:
    env = _Env(stdin or sys.stdin, stdout or sys.stdout, stderr or sys.stderr)
    try:
        config.resolve_budget(cmd.options.budget)
        return _HANDLERS[cmd.verb](cmd, env)
    except InputError as exc:
        env.err.write(f"qss: error: {exc}\n")
        return EXIT_INPUT
    except BudgetExceeded as exc:
        env.err.write(f"qss: budget exceeded: {exc}\n")
        return EXIT_BUDGET


def main(argv: list[str] | None = None, stdin: TextIO | None = None, stdout: TextIO | None = None,
         stderr: TextIO | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    old_out, old_err = sys.stdout, sys.stderr
    # argparse prints help and usage errors to the process streams
    sys.stdout, sys.stderr = stdout or sys.stdout, stderr or sys.stderr
    try:
        cmd = parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    finally:
        sys.stdout, sys.stderr = old_out, old_err
    return execute(cmd, stdin, stdout, stderr)


if __name__ == "__main__":
    sys.exit(main())
