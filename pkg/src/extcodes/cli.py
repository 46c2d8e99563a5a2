"""Command-line entry point: construct family codes, extend them, analyse
optimality, search for extension vectors and run the acceptance checks."""
from __future__ import annotations

import json
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable

import click
import numpy as np

from . import checks
from . import constructions as C
from .analysis import optimality_report, verdict
from .code_core import DEFAULT_BUDGET, LinearCode, dual, exact_distribution
from .constacyclic import ConstacyclicCode
from .errors import CodingError
from .extension import DEFAULT_SEED, classify, extend, search_u, standard_extend
from .gf import Field, make_field

EXIT_MISMATCH = 1
EXIT_INVALID = 2


@dataclass
class Built:
    code: LinearCode
    designated: dict[str, list[int]] = field(default_factory=dict)
    meta: dict = field(default_factory=dict)


def parse_field(text: str) -> Field:
    """``p^s`` or ``p^s:c0,c1,...,cs`` (defining polynomial low-degree-first)."""
    head, _, poly = text.partition(":")
    try:
        p, _, s = head.partition("^")
        coeffs = [int(c) for c in poly.split(",")] if poly else None
        return make_field(int(p), int(s or 1), coeffs)
    except ValueError as exc:
        raise click.BadParameter(f"{text!r}: {exc}", param_hint="--field") from exc


def parse_params(items: tuple[str, ...]) -> dict[str, str]:
    out = {}
    for it in items:
        key, eq, val = it.partition("=")
        if not eq:
            raise click.BadParameter(f"{it!r} is not key=value", param_hint="--params")
        out[key.strip()] = val.strip()
    return out


def _ints(text: str | None) -> list[int] | None:
    return None if text is None else [int(x) for x in text.split(",") if x.strip()]


def _consta(c: ConstacyclicCode, **designated) -> Built:
    return Built(c.linear, {k: [int(x) for x in v] for k, v in designated.items()}, {"constacyclic": c.descriptor()})


def _ovoid(f: Field, S: C.PointSet, p: dict) -> Built:
    u1 = int(p.get("u1", next(x for x in range(1, f.q) if x != f.neg(1))))
    u2 = int(p.get("u2", 0))
    return Built(C.ovoid_code(S), {"designated": C.ovoid_extension_u(S, u1, u2).tolist()})


def _denniston(f: Field, p: dict) -> Built:
    A = _ints(p.get("A"))
    if A is None:
        h = int(p.get("h", 2))
        i = h.bit_length() - 1
        A = C.subfield_elements(f, i) if f.s % i == 0 and len(C.subfield_elements(f, i)) == h else C.additive_subgroups(f, h, limit=1)[0]
    beta = int(p["beta"]) if "beta" in p else None
    D = C.denniston(f, A, beta)
    des = {"designated": D.u.tolist()} if D.u is not None else {}
    return Built(D.code, des, {"subgroup": list(D.subgroup), "beta": D.beta})


def _conic(f: Field, p: dict) -> Built:
    ch = C.conic_chain(f)
    stage = p.get("stage", "alpha")
    table = {"alpha": (ch.c_alpha, {"designated": ch.u1}), "1": (ch.c1, {"designated": ch.u2}),
             "2": (ch.c2, {}), "3": (ch.c3, {})}
    if stage not in table:
        raise click.BadParameter(f"stage must be one of {sorted(table)}", param_hint="--params")
    code, des = table[stage]
    return Built(code, {k: v.tolist() for k, v in des.items()})


FAMILIES: dict[str, Callable[[Field, dict], Built]] = {
    "rs": lambda f, p: (lambda cu: _consta(cu[0], designated=cu[1]))(C.cyclic_rs(f, int(p.get("d", 2)))),
    "conic": _conic,
    "hamming": lambda f, p: Built(C.hamming(f, int(p.get("m", 2)), _ints(p.get("a")), _ints(p.get("big_poly")))),
    "simplex": lambda f, p: Built(C.simplex(f, int(p.get("m", 2)), _ints(p.get("a")), _ints(p.get("big_poly")))),
    "two-weight": lambda f, p: _consta(C.two_weight_constacyclic(
        f, int(p.get("l", 2)), int(p.get("s", 1)), int(p["h"]), _ints(p.get("poly")), int(p.get("beta_mult", 1)))),
    "ovoid-eq": lambda f, p: _ovoid(f, C.elliptic_quadric(f, int(p["a"]) if "a" in p else None), p),
    "ovoid-tits": lambda f, p: _ovoid(f, C.tits_ovoid(f), p),
    "ovoid-cyclic": lambda f, p: (lambda cu: _consta(cu[0], designated=cu[1]))(C.cyclic_ovoid(f, int(p.get("u", 2)))),
    "denniston": _denniston,
    "sec6-single": lambda f, p: _consta(C.single_root(f, int(p["m"]), int(p.get("mult", 1)))),
    "sec6-double": lambda f, p: _consta(C.double_root(f, int(p["m"]), int(p["n"]))),
    "sec6-bch": lambda f, p: _consta(C.bch(f, int(p["n"]), int(p["delta"]))),
    "sec6-ternary": lambda f, p: _consta(C.ternary_12(f, int(p["n"]))),
}


def build(field_text: str, family: str, params: tuple[str, ...]) -> Built:
    if family not in FAMILIES:
        raise click.BadParameter(f"unknown family {family!r}", param_hint="--family")
    f = parse_field(field_text)
    p = parse_params(params)
    try:
        return FAMILIES[family](f, p)
    except KeyError as exc:
        raise click.BadParameter(f"missing parameter {exc.args[0]!r}", param_hint="--params") from exc


def write_outputs(out: Path, code: LinearCode, budget: int, extra: dict) -> dict:
    out.mkdir(parents=True, exist_ok=True)
    wd = exact_distribution(code, budget)
    d = wd.min_distance()
    d_dual = exact_distribution(dual(code), budget).min_distance() if code.k < code.n else None
    payload = {"code": code.to_json(), **extra}
    (out / "code.json").write_text(json.dumps(payload, sort_keys=True, indent=1) + "\n")
    (out / "weights.csv").write_text(wd.to_csv())
    v = verdict(code, d or 0, d_dual or 0).to_json()
    (out / "verdict.json").write_text(json.dumps(v, sort_keys=True, indent=1) + "\n")
    return v


def _summary(v: dict) -> str:
    return f"[{v['n']},{v['k']},{v['d']}] dual d={v['d_dual']} class={v['singleton_class']}"


def _invalid(exc: Exception) -> None:
    click.echo(f"error: {exc}", err=True)
    sys.exit(EXIT_INVALID)


common = [
    click.option("--field", "field_text", required=True, help="p^s or p^s:c0,...,cs"),
    click.option("--family", required=True, type=click.Choice(sorted(FAMILIES))),
    click.option("--params", multiple=True, help="family parameter key=value (repeatable)"),
    click.option("--budget", default=DEFAULT_BUDGET, show_default=True, type=click.IntRange(min=1)),
    click.option("--seed", default=DEFAULT_SEED, show_default=True, type=int),
    click.option("--out", default="out", show_default=True, type=click.Path(file_okay=False, path_type=Path)),
]


def with_common(fn):
    for opt in reversed(common):
        fn = opt(fn)
    return fn


@click.group()
def main() -> None:
    """Extended linear codes over finite fields."""


@main.command()
@with_common
def construct(field_text, family, params, budget, seed, out):
    """Build a family code and write code.json, weights.csv, verdict.json."""
    try:
        b = build(field_text, family, params)
        v = write_outputs(out, b.code, budget, {"family": family, "params": list(params),
                                                "designated_u": b.designated, **b.meta})
    except CodingError as exc:
        _invalid(exc)
    click.echo(_summary(v))


def _resolve_u(b: Built, spec: str, budget: int, seed: int) -> np.ndarray:
    code = b.code
    if spec == "standard":
        return np.full(code.n, code.field.neg(1), dtype=np.int64)
    if spec == "designated":
        if "designated" not in b.designated:
            raise click.BadParameter("this family has no designated u", param_hint="--u")
        return np.array(b.designated["designated"], dtype=np.int64)
    if spec == "search":
        u, _ = search_u(code, "max_dual_d", budget=min(budget, 1 << 16), seed=seed)
        if u is None:
            raise click.BadParameter("search found no u outside the dual", param_hint="--u")
        return np.array(u, dtype=np.int64)
    if spec.startswith("list:"):
        return np.array(_ints(spec[5:]), dtype=np.int64)
    raise click.BadParameter("expected standard, designated, search or list:a,b,...", param_hint="--u")


@main.command("extend")
@with_common
@click.option("--u", "u_spec", default="standard", show_default=True)
def extend_cmd(field_text, family, params, budget, seed, out, u_spec):
    """Extend a family code by u and write the extended code's files."""
    try:
        b = build(field_text, family, params)
        u = _resolve_u(b, u_spec, budget, seed)
        spec = classify(b.code, u)
        ext = extend(b.code, u)
        record = {"family": family, "params": list(params), "extension": spec.to_json(), "warnings": []}
        if spec.trivial:
            record["warnings"].append("trivial extension: u lies in the dual code")
        v = write_outputs(out, ext, budget, record)
    except CodingError as exc:
        _invalid(exc)
    if spec.trivial:
        click.echo("warning: trivial extension (u lies in the dual code)", err=True)
    click.echo(_summary(v))


@main.command()
@with_common
@click.option("--standard/--no-standard", default=True, help="include the standard extension")
def analyze(field_text, family, params, budget, seed, out, standard):
    """Optimality verdicts for a code, its dual and its extensions."""
    try:
        b = build(field_text, family, params)
        exts = {}
        if standard:
            exts["standard"] = standard_extend(b.code)
        if "designated" in b.designated:
            exts["designated"] = extend(b.code, b.designated["designated"])
        report = optimality_report(b.code, f"{family} {' '.join(params)}".strip(), exts)
    except CodingError as exc:
        _invalid(exc)
    out.mkdir(parents=True, exist_ok=True)
    (out / "report.json").write_text(json.dumps(report, sort_keys=True, indent=1) + "\n")
    for name in ("base", *exts):
        click.echo(f"{name}: {_summary(report[name]['code'])}")


@main.command("search-u")
@with_common
@click.option("--objective", type=click.Choice(["max_d", "max_dual_d"]), default="max_dual_d", show_default=True)
@click.option("--trials", default=1 << 16, show_default=True, type=click.IntRange(min=1))
def search_cmd(field_text, family, params, budget, seed, out, objective, trials):
    """Search for u maximising d of the extension or of its dual."""
    try:
        b = build(field_text, family, params)
        u, score = search_u(b.code, objective, budget=trials, seed=seed, code_budget=budget)
    except CodingError as exc:
        _invalid(exc)
    if u is None:
        click.echo("no u outside the dual was found", err=True)
        sys.exit(EXIT_MISMATCH)
    ext = extend(b.code, u)
    v = write_outputs(out, ext, budget, {"family": family, "params": list(params), "objective": objective,
                                         "score": score, "u": list(u)})
    click.echo(f"u={list(u)} score={score} -> {_summary(v)}")


@main.command()
@click.option("--suite", default="all", show_default=True, help="'all' or comma-separated criterion numbers")
@click.option("--out", default=None, type=click.Path(dir_okay=False, path_type=Path), help="optional JSON table")
def verify(suite, out):
    """Run the acceptance checks and print one line per row."""
    keys = list(checks.CRITERIA) if suite == "all" else [s.strip() for s in suite.split(",")]
    unknown = [k for k in keys if k not in checks.CRITERIA]
    if unknown:
        _invalid(ValueError(f"unknown criteria {unknown}"))
    rows = checks.run(keys, echo=click.echo)
    failed = [r for r in rows if not r.passed and not r.report_only]
    if out:
        out.write_text(json.dumps([r.__dict__ for r in rows], indent=1) + "\n")
    click.echo(f"{len(rows) - len(failed)}/{len(rows)} rows pass")
    sys.exit(EXIT_MISMATCH if failed else 0)


if __name__ == "__main__":  # pragma: no cover
    main()
