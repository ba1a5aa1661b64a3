"""Command-line entry point: ``symcycles <command> --t <int> [options]``.

Exit codes: 0 success, 1 a check failed, 2 usage error or malformed sign
string, 3 dimension or enumeration cap exceeded, 4 invalid cycle
descriptor, 5 dimension mismatch between arguments.
"""

from __future__ import annotations

import argparse
import random
import sys
from dataclasses import dataclass
from typing import TextIO

from . import stats as cen
from . import spectral as sp
from .cube import (
    MAX_DIMENSION,
    CapExceeded,
    CycleSpec,
    DimensionError,
    InvalidCycleError,
    PermutationError,
    SignStringError,
    SymmetricCycle,
    Tope,
    all_topes,
    build_cycle,
    build_standard_cycle,
    random_cycle,
)
from .decomposition import ENUMERATION_CAP, decompose
from .verify import Suite

COMMANDS = ("gen-cycle", "decompose", "metrics", "gamma", "verify")
MAX_CAP = 30

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_CAP = 3
EXIT_CYCLE = 4
EXIT_MISMATCH = 5


class UsageError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


@dataclass(frozen=True)
class RunConfig:
    command: str
    t: int
    cycle_descriptor: str | None = None
    target: str | None = None
    seed: int | None = None
    format: str = "text"
    cap: int = ENUMERATION_CAP

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise UsageError(EXIT_USAGE, f"unknown command {self.command!r}")
        if self.t < 1:
            raise UsageError(EXIT_USAGE, f"--t must be at least 1, got {self.t}")
        if self.t > MAX_DIMENSION:
            raise UsageError(EXIT_CAP, f"--t {self.t} exceeds the maximum dimension {MAX_DIMENSION}")
        if not 1 <= self.cap <= MAX_CAP:
            raise UsageError(EXIT_USAGE, f"--cap must be in 1..{MAX_CAP}, got {self.cap}")
        if self.format not in ("text", "records"):
            raise UsageError(EXIT_USAGE, f"--format must be text or records, got {self.format!r}")


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--t", type=int, required=True, help="dimension of the hypercube")
    common.add_argument("--cycle", dest="cycle_descriptor", help='"start=<signs>;order=<perm>"')
    common.add_argument("--target", help="sign string such as +-+")
    common.add_argument("--seed", type=int, help="random cycle and sampling seed")
    common.add_argument("--format", choices=("text", "records"), default="text")
    common.add_argument("--cap", type=int, default=ENUMERATION_CAP, help="enumeration cap on t")
    parser = argparse.ArgumentParser(prog="symcycles", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sub.add_parser(name, parents=[common])
    return parser


def parse_args(argv: list[str]) -> RunConfig:
    ns = _parser().parse_args(argv)
    return RunConfig(**vars(ns))


def _cycle(config: RunConfig) -> SymmetricCycle:
    if config.cycle_descriptor is not None:
        try:
            spec = CycleSpec.parse(config.cycle_descriptor)
        except SignStringError as exc:
            raise UsageError(EXIT_CYCLE, f"bad cycle start: {exc}") from None
        except (PermutationError, DimensionError) as exc:
            raise UsageError(EXIT_CYCLE, str(exc)) from None
        if spec.start.t != config.t:
            raise UsageError(
                EXIT_MISMATCH, f"cycle has dimension {spec.start.t}, --t is {config.t}"
            )
        return build_cycle(spec)
    if config.seed is not None:
        return random_cycle(config.t, random.Random(config.seed))
    return build_standard_cycle(config.t)


def _target(config: RunConfig) -> Tope | None:
    if config.target is None:
        return None
    try:
        target = Tope.parse(config.target)
    except (SignStringError, DimensionError) as exc:
        raise UsageError(EXIT_USAGE, str(exc)) from None
    if target.t != config.t:
        raise UsageError(EXIT_MISMATCH, f"target has dimension {target.t}, --t is {config.t}")
    return target


def _require_cap(config: RunConfig) -> None:
    if config.t > config.cap:
        raise UsageError(EXIT_CAP, f"--t {config.t} exceeds the enumeration cap {config.cap}")


def _gen_cycle(config, cycle, out) -> int:
    if config.format == "records":
        print("# k vertex", file=out)
        for k, v in enumerate(cycle):
            print(f"{k} {v}", file=out)
    else:
        for v in cycle:
            print(v, file=out)
    return EXIT_OK


def _decompose(config, cycle, out) -> int:
    target = _target(config)
    if target is None:
        raise UsageError(EXIT_USAGE, "decompose needs --target")
    d = decompose(target, cycle)
    if config.format == "records":
        print("# index vertex", file=out)
        for k in d.cycle_indices:
            print(f"{k} {cycle[k]}", file=out)
    else:
        print("indices " + ",".join(map(str, d.cycle_indices)), file=out)
        print("summands " + " ".join(str(v) for v in d.vertices(cycle)), file=out)
        print(f"|Q| = {d.cardinality}", file=out)
    return EXIT_OK


def _metrics(config, cycle, out) -> int:
    target = _target(config)
    if target is None:
        _require_cap(config)
        targets = list(all_topes(config.t))
    else:
        targets = [target]
    variants = sp.VARIANTS
    if config.format == "records":
        header = ["target", "cardinality"]
        for route in ("quadratic", "autocorr", "spectral"):
            header += [f"{route}_{v}" for v in variants]
        print("# " + " ".join(header + ["agree"]), file=out)
    all_agree = True
    for x in targets:
        z = sp.distance_vector(x, cycle)
        rep = sp.cardinality_report(x, cycle)
        all_agree &= rep.agree
        verdict = "yes" if rep.agree else "no"
        if config.format == "records":
            fields = [str(x), str(rep.cardinality)]
            fields += [str(rep.quadratic[v]) for v in variants]
            fields += [str(rep.autocorr[v]) for v in variants]
            fields += [f"{rep.spectral[v]:.9f}" for v in variants]
            print(" ".join(fields + [verdict]), file=out)
            continue
        a = sp.autocorrelation(z)
        mags = abs(sp.dft_forward(z.entries).entries)
        print(f"target {x}", file=out)
        print("z " + " ".join(map(str, z.entries)), file=out)
        print("a " + " ".join(map(str, a.entries)), file=out)
        print("|zhat| " + " ".join(f"{m:.6f}" for m in mags), file=out)
        print(f"|Q| {rep.cardinality}", file=out)
        for v in variants:
            print(
                f"{v} quadratic={rep.quadratic[v]} autocorr={rep.autocorr[v]} "
                f"spectral={rep.spectral[v]:.9f}",
                file=out,
            )
        print(f"agree {verdict}", file=out)
    return EXIT_OK if all_agree else EXIT_FAILED


def _gamma(config, cycle, out) -> int:
    _require_cap(config)
    table = cen.census(cycle, cap=config.cap)
    print(table.records() if config.format == "records" else table.polynomial(), file=out)
    return EXIT_OK if table.counts == cen.gamma_polynomial(config.t) else EXIT_FAILED


def _verify(config, cycle, out) -> int:
    _require_cap(config)
    results = Suite(cycle, seed=config.seed or 0, cap=config.cap).run()
    if config.format == "records":
        print("# check status count", file=out)
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        if config.format == "records":
            print(f"{r.name} {status} {r.count}", file=out)
        else:
            note = f"  [{r.note}]" if r.note else ""
            print(f"{status} {r.name} ({r.count}){note}", file=out)
    passed = sum(r.passed for r in results)
    if config.format == "text":
        print(f"verify t={config.t}: {passed}/{len(results)} checks passed", file=out)
    return EXIT_OK if passed == len(results) else EXIT_FAILED


_HANDLERS = {
    "gen-cycle": _gen_cycle,
    "decompose": _decompose,
    "metrics": _metrics,
    "gamma": _gamma,
    "verify": _verify,
}


def run(config: RunConfig, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    try:
        return _HANDLERS[config.command](config, _cycle(config), out)
    except UsageError as exc:
        print(f"error: {exc}", file=err)
        return exc.code
    except CapExceeded as exc:
        print(f"error: {exc}", file=err)
        return EXIT_CAP
    except InvalidCycleError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_CYCLE


def main(argv: list[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    err = err if err is not None else sys.stderr
    try:
        config = parse_args(sys.argv[1:] if argv is None else argv)
    except UsageError as exc:
        print(f"error: {exc}", file=err)
        return exc.code
    except SystemExit as exc:
        return int(exc.code or 0)
    return run(config, out, err)


if __name__ == "__main__":
    sys.exit(main())
