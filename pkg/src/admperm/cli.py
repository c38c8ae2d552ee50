"""Command-line driver: ``admperm {describe,enumerate,verify,counterexample,draw,statements}``.

Exit codes: 0 success, 1 verification failure, 2 bad configuration, 3 guard exceeded.
Errors are written to stderr as a single JSON object.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import asdict, dataclass, field

from . import __version__, affine, alcoves, musets, svg, verify
from .errors import ConfigurationError, GuardExceeded
from .rootsys import RootDatum, WeylPolytope, build_root_datum, require_dominant

EXIT_OK, EXIT_FAIL, EXIT_CONFIG, EXIT_GUARD = 0, 1, 2, 3


def _default_jobs() -> int:
    try:
        return len(os.sched_getaffinity(0))
    except AttributeError:
        return os.cpu_count() or 1


@dataclass
class RunConfig:
    command: str
    family: str | None = None
    size: int | None = None
    mu: tuple | None = None
    format: str = "table"
    output: str | None = None
    max_length: int | None = None
    max_points: int | None = None
    jobs: int = 1
    extra: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        d = asdict(self)
        if d["mu"] is not None:
            d["mu"] = list(d["mu"])
        return d

    @classmethod
    def from_json(cls, d: dict) -> "RunConfig":
        d = dict(d)
        if d.get("mu") is not None:
            d["mu"] = tuple(d["mu"])
        return cls(**d)

    def datum(self) -> RootDatum:
        if self.family is None or self.size is None:
            raise ConfigurationError("--family and --size are required")
        return build_root_datum(self.family, self.size)

    def checked_mu(self, datum: RootDatum) -> tuple:
        if self.mu is None:
            raise ConfigurationError("--mu is required")
        return tuple(int(a) for a in require_dominant(datum, self.mu))


def parse_mu(text: str) -> tuple:
    try:
        return tuple(int(a) for a in text.split(","))
    except ValueError:
        raise ConfigurationError(f"mu must be comma-separated integers, got {text!r}") from None


def _guards(cfg: RunConfig, datum: RootDatum, mu) -> None:
    if cfg.max_length is not None:
        n = affine.translation(datum, mu).length
        if n > cfg.max_length:
            raise GuardExceeded(f"l(t_mu) = {n} exceeds --max-length {cfg.max_length}")
    if cfg.max_points is not None:
        n = len(WeylPolytope(datum, mu).lattice_points)
        if n > cfg.max_points:
            raise GuardExceeded(f"Conv(mu) has {n} lattice points, over --max-points {cfg.max_points}")


def _emit(cfg: RunConfig, text: str) -> None:
    if cfg.output:
        with open(cfg.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


# -- commands -------------------------------------------------------------------

def cmd_describe(cfg: RunConfig) -> int:
    _emit(cfg, _dump(cfg.datum().to_json()))
    return EXIT_OK


def _table(report: musets.MuSetReport) -> str:
    lines = [f"datum   {report.datum.name}", f"mu      {list(report.mu)}"]
    for k, v in report.counts.items():
        lines.append(f"{k:8s}{v}")
    for k, v in report.verdicts.items():
        lines.append(f"{k:20s}{str(v).lower()}")
    return "\n".join(lines) + "\n"


def cmd_enumerate(cfg: RunConfig) -> int:
    d = cfg.datum()
    mu = cfg.checked_mu(d)
    _guards(cfg, d, mu)
    report = musets.compare(d, mu, jobs=cfg.jobs)
    if cfg.format == "json":
        text = _dump(report.to_json())
    elif cfg.format == "csv":
        text = musets.MuSetReport.to_csv([report])
    elif cfg.format == "table":
        text = _table(report)
    else:
        raise ConfigurationError(f"enumerate cannot write format {cfg.format!r}")
    _emit(cfg, text)
    return EXIT_OK


def cmd_verify(cfg: RunConfig) -> int:
    p = verify.Params(family=cfg.family, size=cfg.size, mu=cfg.mu, **cfg.extra.get("params", {}))
    if p.mu is not None and p.family is not None and p.size is not None:
        cfg.checked_mu(cfg.datum())
    result = verify.run(cfg.extra["statement"], p)
    _emit(cfg, _dump(result.to_json()))
    return EXIT_OK if result.passed else EXIT_FAIL


def cmd_statements(cfg: RunConfig) -> int:
    _emit(cfg, "".join(f"{k:24s}{v[0]}\n" for k, v in sorted(verify.REGISTRY.items())))
    return EXIT_OK


def cmd_counterexample(cfg: RunConfig) -> int:
    d = cfg.datum()
    if d.family in ("A", "GL") or d.rank <= 3:
        why = ("type A: Adm = Perm for every mu" if d.family in ("A", "GL")
               else f"rank {d.rank} <= 3: no equal-length pair of W_0 is ordered on coweights")
        _emit(cfg, _dump({"schema": "counterexample/1", "version": __version__, "datum": d.name,
                          "result": "none exists", "construction": "coweight-ordered pair",
                          "reason": why}))
        return EXIT_OK
    wit = musets.counterexample_pipeline(d, limit=cfg.max_length or 64)
    if wit is None:
        _emit(cfg, _dump({"schema": "counterexample/1", "version": __version__, "datum": d.name,
                          "result": "none found"}))
        return EXIT_FAIL
    out = wit.to_json()
    out["result"] = "witness found"
    _emit(cfg, _dump(out))
    return EXIT_OK if wit.ok else EXIT_FAIL


def _select(cfg: RunConfig, d: RootDatum) -> list:
    which = cfg.extra["set"]
    if which == "cone":
        w = d.weyl_from_word(cfg.extra.get("w") or [])
        A0 = alcoves.base_alcove(d)
        ball = verify.waff_ball(d, cfg.extra.get("radius", 3) * 2)
        return [x for x in ball if alcoves.in_acute_cone(A0, w, alcoves.alcove_of(x))]
    mu = cfg.checked_mu(d)
    _guards(cfg, d, mu)
    if which == "adm":
        return musets.enumerate_adm(d, mu, jobs=cfg.jobs)
    if which == "perm":
        return musets.enumerate_perm(d, mu, jobs=cfg.jobs)
    if which == "perm_st":
        return musets.enumerate_perm_st(d, mu, jobs=cfg.jobs)
    raise ConfigurationError(f"unknown set {which!r}")


def cmd_draw(cfg: RunConfig) -> int:
    d = cfg.datum()
    if d.rank != 2:
        raise ConfigurationError(f"draw needs a rank-2 datum; {d.name} has rank {d.rank}")
    elements = _select(cfg, d)
    title = f"{cfg.extra['set']} {d.name}" + (f" mu={list(cfg.mu)}" if cfg.mu else "")
    _emit(cfg, svg.render(d, elements, radius=cfg.extra.get("radius", 3), title=title))
    return EXIT_OK


COMMANDS = {"describe": cmd_describe, "enumerate": cmd_enumerate, "verify": cmd_verify,
            "statements": cmd_statements, "counterexample": cmd_counterexample, "draw": cmd_draw}


# -- argument parsing -------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ConfigurationError(message)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--family", help="GL, A, B, C, D, F, G or GSp")
    common.add_argument("--size", type=int, help="n for GL(n), rank for A-G, 2n for GSp(2n)")
    common.add_argument("--mu", type=parse_mu, help="dominant cocharacter, e.g. 1,0,0")
    common.add_argument("--output", "-o", help="write to this file instead of stdout")
    common.add_argument("--max-length", type=int, help="guard on l(t_mu)")
    common.add_argument("--max-points", type=int, help="guard on lattice points of Conv(mu)")
    common.add_argument("--jobs", type=int, default=_default_jobs(),
                        help="worker processes (default: available cores)")

    parser = _Parser(prog="admperm", description="Admissible and permissible sets in extended affine Weyl groups.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sub.add_parser("describe", parents=[common], help="print the root datum as JSON")
    p = sub.add_parser("enumerate", parents=[common], help="Adm, Perm and Perm^st of mu")
    p.add_argument("--format", choices=["table", "json", "csv"], default="table")
    p = sub.add_parser("verify", parents=[common], help="run a named check")
    p.add_argument("statement")
    p.add_argument("--radius", type=int)
    p.add_argument("--samples", type=int)
    p.add_argument("--seed", type=int)
    sub.add_parser("statements", parents=[common], help="list the named checks")
    sub.add_parser("counterexample", parents=[common], help="an element of Perm(mu) outside Adm(mu)")
    p = sub.add_parser("draw", parents=[common], help="SVG of a rank-2 alcove set")
    p.add_argument("set", choices=["adm", "perm", "perm_st", "cone"])
    p.add_argument("--radius", type=int, default=3)
    p.add_argument("--w", type=lambda s: [int(a) for a in s.split(",") if a], default=[],
                   help="reduced word of w for the cone set")
    return parser


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    extra = {}
    if ns.command == "verify":
        extra["statement"] = ns.statement
        extra["params"] = {k: getattr(ns, k) for k in ("radius", "samples", "seed")
                           if getattr(ns, k) is not None}
    if ns.command == "draw":
        extra.update({"set": ns.set, "radius": ns.radius, "w": ns.w})
    if ns.jobs < 1:
        raise ConfigurationError("--jobs must be at least 1")
    return RunConfig(ns.command, ns.family, ns.size, ns.mu, getattr(ns, "format", "table"),
                     ns.output, ns.max_length, ns.max_points, ns.jobs, extra)


def _fail(kind: str, exc: BaseException, code: int) -> int:
    sys.stderr.write(json.dumps({"error": kind, "message": str(exc), "exit_code": code}, sort_keys=True) + "\n")
    return code


def main(argv=None) -> int:
    try:
        ns = build_parser().parse_args(argv)
        cfg = config_from_args(ns)
        return COMMANDS[cfg.command](cfg)
    except GuardExceeded as exc:
        return _fail("guard_exceeded", exc, EXIT_GUARD)
    except ConfigurationError as exc:
        return _fail("configuration", exc, EXIT_CONFIG)


if __name__ == "__main__":
    sys.exit(main())
