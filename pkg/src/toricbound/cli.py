"""Command-line surface: parse problem JSON, orchestrate the pipeline, emit
machine-readable reports.

Exit codes: 0 success; 2 validation error (malformed JSON, schema violation,
unsupported rank); 3 mathematically inconclusive (the compatibility condition
is Violated or Unknown but the command needs it Verified).
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from itertools import product

from .bounded import (
    BasicSet,
    K_sets,
    TCStatus,
    adapted_fan,
    bounded_ring,
    check_tc,
    subfan_FS,
)
from .cones import RationalCone
from .fans import is_smooth, smooth_resolution
from .filtration import filtration_level, total_stability_certificate
from .hilbert import SemigroupBasis, hilbert_basis, semigroup_contains
from .linalg import inertia
from .serialize import (
    SchemaError,
    cone_from_json,
    cone_to_json,
    fan_from_json,
    fan_to_json,
    inertia_to_json,
    level_to_json,
    matrix_from_json,
    parse_vector,
    problem_from_json,
    semigroup_to_json,
    stability_to_json,
    tc_report_to_json,
    iitaka_to_json,
)
from .surface import DivisorSelection, ToricSurface, iitaka_classify

COMMANDS = (
    "bounded",
    "ksets",
    "adapted-fan",
    "tc-check",
    "hilbert",
    "inertia",
    "surface-classify",
    "filtration",
    "stability",
    "resolve-fan",
    "corpus",
)

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_INCONCLUSIVE = 3


@dataclass
class RunConfig:
    command: str
    input_path: str | None = None
    corpus_name: str | None = None
    output_path: str | None = None
    grid: list | None = None
    drifts: list | None = None
    n_max: int = 5
    box: int | None = None


class Inconclusive(Exception):
    """Raised when a command needs a Verified compatibility condition."""

    def __init__(self, report):
        super().__init__(report.reason)
        self.report = report


def corpus_list() -> list[str]:
    """Names of the bundled example inputs, sorted."""
    base = resources.files("toricbound").joinpath("corpus")
    names = []
    for entry in base.iterdir():
        name = entry.name
        if name.endswith(".json") and not name.endswith(".golden.json"):
            names.append(name[: -len(".json")])
    return sorted(names)


def corpus_entry(name: str) -> dict:
    base = resources.files("toricbound").joinpath("corpus")
    path = base.joinpath(f"{name}.json")
    if not path.is_file():
        raise SchemaError(
            f"unknown corpus entry {name!r}; available: {', '.join(corpus_list())}"
        )
    return json.loads(path.read_text())


def _parse_grid_spec(spec: str):
    try:
        vals = [Fraction(part.strip()) for part in spec.split(",") if part.strip()]
    except (ValueError, ZeroDivisionError) as exc:
        raise SchemaError(f"bad grid value in {spec!r}: {exc}")
    if not vals:
        raise SchemaError("grid specification is empty")
    vals = sorted(set(vals))
    grid = [tuple(p) for p in product(vals, repeat=2)]
    dvals = sorted(set(vals) | {Fraction(0)})
    drifts = [tuple(p) for p in product(dvals, repeat=2) if any(p)]
    return grid, drifts


def _load_input(cfg: RunConfig):
    if cfg.corpus_name is not None:
        return corpus_entry(cfg.corpus_name)["input"]
    if cfg.input_path is None:
        raise SchemaError("no input: pass --input PATH or --corpus NAME")
    if cfg.input_path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(cfg.input_path) as fh:
                text = fh.read()
        except OSError as exc:
            raise SchemaError(f"cannot read {cfg.input_path}: {exc}")
    return json.loads(text)


def _tc_gate(sigma, s, cfg: RunConfig):
    """For basic sets, require a Verified compatibility condition; returns the
    subfan data of the kept rays."""
    fan = adapted_fan(s, sigma)
    report = check_tc(fan, sigma, s, cfg.grid, cfg.drifts)
    if report.status is not TCStatus.VERIFIED:
        raise Inconclusive(report)
    return subfan_FS(fan, sigma, RationalCone.full(2, "N"))


def _cmd_bounded(cfg: RunConfig):
    sigma, s = problem_from_json(_load_input(cfg))
    if isinstance(s, BasicSet):
        _tc_gate(sigma, s, cfg)
        basis = SemigroupBasis(s.rank, "M", ())
    else:
        basis = bounded_ring(sigma, s)
    return semigroup_to_json(basis)


def _cmd_ksets(cfg: RunConfig):
    sigma, s = problem_from_json(_load_input(cfg))
    if isinstance(s, BasicSet):
        raise SchemaError("ksets requires a binomial or tentacle set")
    k, k0, equal = K_sets(s)
    return {"K": cone_to_json(k), "K0": cone_to_json(k0), "equal": equal}


def _cmd_adapted_fan(cfg: RunConfig):
    sigma, s = problem_from_json(_load_input(cfg))
    return fan_to_json(adapted_fan(s, sigma))


def _cmd_tc_check(cfg: RunConfig):
    sigma, s = problem_from_json(_load_input(cfg))
    fan = adapted_fan(s, sigma)
    return tc_report_to_json(check_tc(fan, sigma, s, cfg.grid, cfg.drifts))


def _cmd_hilbert(cfg: RunConfig):
    cone = cone_from_json(_load_input(cfg))
    basis = hilbert_basis(cone)
    out = semigroup_to_json(basis)
    if cfg.box is not None:
        _verify_box_coverage(cone, basis, cfg.box)
        out["verified_box"] = cfg.box
    return out


def _verify_box_coverage(cone: RationalCone, basis, bound: int):
    for pt in product(range(-bound, bound + 1), repeat=cone.rank):
        if cone.contains(pt) and not semigroup_contains(basis, pt):
            raise AssertionError(f"lattice point {pt} not covered by the basis")


def _cmd_inertia(cfg: RunConfig):
    mat = matrix_from_json(_load_input(cfg))
    return inertia_to_json(inertia(mat))


def _cmd_surface_classify(cfg: RunConfig):
    obj = _load_input(cfg)
    if not isinstance(obj, dict):
        raise SchemaError("$: expected an object with 'fan' and 'T'")
    fan = fan_from_json(obj.get("fan"), "$.fan")
    if not fan.complete:
        raise SchemaError("$.fan: surface classification needs a complete fan")
    if not is_smooth(fan):
        raise SchemaError("$.fan: fan is not smooth; run resolve-fan first")
    surface = ToricSurface.from_fan(fan)
    t_rays = obj.get("T")
    if not isinstance(t_rays, list):
        raise SchemaError("$.T: expected a list of rays")
    rays = [parse_vector(r, f"$.T[{i}]", 2) for i, r in enumerate(t_rays)]
    try:
        sel = DivisorSelection.from_rays(surface, rays)
    except ValueError as exc:
        raise SchemaError(f"$.T: {exc}")
    return iitaka_to_json(iitaka_classify(sel))


def _cmd_filtration(cfg: RunConfig):
    sigma, s = problem_from_json(_load_input(cfg))
    if isinstance(s, BasicSet):
        fs = _tc_gate(sigma, s, cfg)
    else:
        fan = adapted_fan(s, sigma)
        fs = subfan_FS(fan, sigma, K_sets(s)[1])
    levels = [filtration_level(fs, n) for n in range(cfg.n_max + 1)]
    return {
        "bounded_basis": semigroup_to_json(fs.dual_basis),
        "levels": [level_to_json(lv) for lv in levels],
    }


def _cmd_stability(cfg: RunConfig):
    sigma, s = problem_from_json(_load_input(cfg))
    if isinstance(s, BasicSet):
        raise SchemaError("stability requires a binomial or tentacle set")
    return stability_to_json(total_stability_certificate(sigma, s, cfg.n_max))


def _cmd_resolve_fan(cfg: RunConfig):
    fan = fan_from_json(_load_input(cfg), "$")
    if not fan.complete:
        raise SchemaError("$: resolution needs a complete fan")
    return fan_to_json(smooth_resolution(fan))


def _cmd_corpus(cfg: RunConfig):
    return corpus_list()


_DISPATCH = {
    "bounded": _cmd_bounded,
    "ksets": _cmd_ksets,
    "adapted-fan": _cmd_adapted_fan,
    "tc-check": _cmd_tc_check,
    "hilbert": _cmd_hilbert,
    "inertia": _cmd_inertia,
    "surface-classify": _cmd_surface_classify,
    "filtration": _cmd_filtration,
    "stability": _cmd_stability,
    "resolve-fan": _cmd_resolve_fan,
    "corpus": _cmd_corpus,
}


def render(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _emit(obj, cfg: RunConfig):
    text = render(obj)
    if cfg.output_path:
        with open(cfg.output_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="toricbound",
        description="Exact bounded-function rings on affine toric varieties.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")
    for name in COMMANDS:
        p = sub.add_parser(name)
        if name != "corpus":
            p.add_argument("--input", help="path to the input JSON ('-' for stdin)")
            p.add_argument("--corpus", dest="corpus_name", metavar="NAME",
                           help="use a bundled example as input")
            p.add_argument("--output", help="write the report here instead of stdout")
        if name in ("tc-check", "bounded", "filtration"):
            p.add_argument("--grid", help="comma-separated rational grid values")
        if name in ("filtration", "stability"):
            p.add_argument("--nmax", type=int, default=5, help="highest level (default 5)")
        if name == "hilbert":
            p.add_argument("--box", type=int, help="verify coverage in [-B, B]^n")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    cfg = RunConfig(command=args.command)
    cfg.input_path = getattr(args, "input", None)
    cfg.corpus_name = getattr(args, "corpus_name", None)
    cfg.output_path = getattr(args, "output", None)
    cfg.n_max = getattr(args, "nmax", 5)
    cfg.box = getattr(args, "box", None)
    if getattr(args, "grid", None):
        cfg.grid, cfg.drifts = _parse_grid_spec(args.grid)
    try:
        result = _DISPATCH[cfg.command](cfg)
    except json.JSONDecodeError as exc:
        print(
            f"error: malformed JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}",
            file=sys.stderr,
        )
        return EXIT_INVALID
    except Inconclusive as exc:
        _emit(tc_report_to_json(exc.report), cfg)
        print(f"error: compatibility condition not verified: {exc}", file=sys.stderr)
        return EXIT_INCONCLUSIVE
    except (SchemaError, ValueError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    _emit(result, cfg)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
