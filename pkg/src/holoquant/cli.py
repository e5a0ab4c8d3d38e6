"""Command-line front end: `holoquant star|transform|wigner|check|modes`."""

import argparse
import json
import logging
import sys
from fractions import Fraction
from pathlib import Path
from typing import List, Optional

import numpy as np
import pandas as pd
from pydantic import BaseModel, ValidationError

from .__version__ import __version__
from .algebra.polysymbol import PolySymbol, SOrder
from .algebra.star import moyal_star, normal_star, s_star, s_transform
from .checks.runner import SUITE_NAMES, run_suite
from .exceptions import (
    ConfigurationError,
    ContractError,
    DimensionError,
    FieldFileError,
    ParseError,
)
from .fields.io import read_field_csv
from .fields.modes import (
    amplitudes_from_field,
    field_from_amplitudes,
    qp_from_amplitudes,
    symplectic_check,
)
from .models.fock import FockTruncation
from .models.grids import FLOAT_FORMAT
from .models.run import RunConfig
from .parsing.state_parser import parse_state
from .parsing.symbol_parser import format_symbol, lower, mode_span, parse_expr
from .quasiprob.grids import distribution_grid, husimi_grid, wigner_grid
from .quasiprob.wigner import default_truncation, state_density
from .settings.resolver import ConfigResolver

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_SUITE_FAILURE = 1
EXIT_USER_ERROR = 2
EXIT_CONTRACT_ERROR = 3

NORMALIZATION_NOTE = (
    "W(xi) = tr{Pi D(xi)^dagger rho D(xi)}; s-ordered values are normalized so coherent peaks equal 1; "
    "multiply by 2/(pi (1 - s)) per mode for the density convention"
)


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"{text!r} is not a rational number such as -1, 0 or 1/2")


def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", default=argparse.SUPPRESS, help="flat key: value config file")
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="seed for randomized suites")
    common.add_argument("--cutoff", type=int, default=argparse.SUPPRESS, help="Fock cutoff per mode")
    common.add_argument(
        "--format", dest="output_format", choices=("csv", "json"), default=argparse.SUPPRESS, help="output format"
    )
    common.add_argument("--workers", type=int, default=argparse.SUPPRESS, help="threads for grid evaluation")
    common.add_argument(
        "-v", "--verbose", action="count", default=argparse.SUPPRESS, help="-v for info, -vv for debug logging"
    )
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="holoquant",
        description="Phase-space quantization: star-products, quasiprobabilities and lattice field modes.",
        parents=[common],
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    commands = parser.add_subparsers(dest="command", required=True)

    star = commands.add_parser("star", parents=[common], help="star-product of two symbols")
    star.add_argument("left", help="first symbol, e.g. 'a0'")
    star.add_argument("right", help="second symbol, e.g. 'ad0'")
    star.add_argument("kind", nargs="?", choices=("moyal", "normal"), default="moyal", help="product (default moyal)")
    star.add_argument("--order", type=_rational, default=None, help="s-ordered product instead of KIND")
    star.add_argument("--modes", type=int, default=None, help="mode count (default: inferred)")

    transform = commands.add_parser("transform", parents=[common], help="convert a symbol between orderings")
    transform.add_argument("expr", help="symbol text")
    transform.add_argument("s_from", type=_rational, help="ordering of the input (-1 normal, 0 Weyl, 1 anti-normal)")
    transform.add_argument("s_to", type=_rational, help="target ordering")
    transform.add_argument("--modes", type=int, default=None, help="mode count (default: inferred)")

    wigner = commands.add_parser("wigner", parents=[common], help="quasiprobability grid of a single-mode state")
    wigner.add_argument("--state", required=True, help="vacuum | fock:n | coherent:re+imi | sup:(w)s+(w)s")
    wigner.add_argument("--order", type=_rational, default=Fraction(0), help="ordering s <= 0 (default 0)")
    wigner.add_argument("--output", default=None, help="grid file (default: stdout)")
    wigner.add_argument("--center", type=complex, default=None, help="grid centre as a Python complex, e.g. 1+0j")
    wigner.add_argument("--half-width", type=float, default=None, help="grid half width")
    wigner.add_argument("--resolution", type=int, default=None, help="grid points per axis")
    wigner.add_argument("--progress", action="store_true", help="show a progress bar")

    check = commands.add_parser("check", parents=[common], help="run verification suites")
    check.add_argument("suite", choices=SUITE_NAMES, help="suite to run")
    check.add_argument("--amplitude", type=float, default=None, help="coherent amplitude scale")
    check.add_argument("--output", default=None, help="report file (default: stdout)")
    check.add_argument("--progress", action="store_true", help="show progress bars")

    modes = commands.add_parser("modes", parents=[common], help="mode decomposition of a lattice field file")
    modes.add_argument("field_csv", help="CSV file with header x,phi,varpi")
    modes.add_argument("--sites", type=int, default=None, help="sites per direction (default: from the file)")
    modes.add_argument("--spacing", type=float, default=None, help="lattice spacing")
    modes.add_argument("--mass", type=float, default=None, help="field mass")
    modes.add_argument("--dimension", type=int, default=None, help="spatial dimensions")
    modes.add_argument("--k-selection", default=None, help="all, nonnegative, or indices like 1,-1")
    modes.add_argument("--round-trip", action="store_true", help="report the field round-trip residue")
    return parser


def configure_logging(verbosity: int) -> None:
    level = logging.WARNING if verbosity <= 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    logging.basicConfig(level=level, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")


def resolve_config(args: argparse.Namespace, resolver: Optional[ConfigResolver] = None, **extra) -> RunConfig:
    flags = {key: getattr(args, key, None) for key in ("seed", "cutoff", "output_format", "workers")}
    flags.update(extra)
    return (resolver or ConfigResolver()).resolve(getattr(args, "config", None), **flags)


def _with_updates(model: BaseModel, **updates) -> BaseModel:
    """Copy of a validated model with command-line overrides, validated again."""
    try:
        return type(model)(**{**model.model_dump(), **updates})
    except ValidationError as e:
        raise ConfigurationError(f"Invalid {type(model).__name__} options:\n{e}") from e


# Symbols
def _symbols(texts: List[str], modes: Optional[int], config: RunConfig) -> List[PolySymbol]:
    trees = [parse_expr(text) for text in texts]
    count = modes or max([config.mode_count] + [mode_span(tree) for tree in trees])
    return [lower(tree, count, text) for tree, text in zip(trees, texts)]


def _emit_symbol(symbol: PolySymbol, config: RunConfig) -> None:
    if config.output_format == "json":
        print(json.dumps({"symbol": format_symbol(symbol), "terms": symbol.to_dict()}, sort_keys=True))
    else:
        print(format_symbol(symbol))


def cmd_star(args: argparse.Namespace, config: RunConfig) -> int:
    F, G = _symbols([args.left, args.right], args.modes, config)
    if args.order is not None:
        result = s_star(F, G, args.order)
    else:
        result = moyal_star(F, G) if args.kind == "moyal" else normal_star(F, G)
    _emit_symbol(result, config)
    return EXIT_OK


def cmd_transform(args: argparse.Namespace, config: RunConfig) -> int:
    (F,) = _symbols([args.expr], args.modes, config)
    _emit_symbol(s_transform(F, args.s_from, args.s_to), config)
    return EXIT_OK


# Grids
def cmd_wigner(args: argparse.Namespace, config: RunConfig) -> int:
    spec = parse_state(args.state)
    if spec.mode_count != 1:
        raise ContractError(f"Grids are single-mode; state {args.state!r} has {spec.mode_count} modes")
    if "cutoff" in config.model_fields_set:
        trunc = FockTruncation.uniform(1, config.cutoff)
    else:
        trunc = default_truncation(spec)
    rho = state_density(spec, trunc)

    grid = config.grid_spec()
    updates = {}
    if args.center is not None:
        updates["center"] = (args.center.real, args.center.imag)
    if args.half_width is not None:
        updates["half_width"] = args.half_width
    if args.resolution is not None:
        updates["resolution"] = args.resolution
    if updates:
        grid = _with_updates(grid, **updates)

    s = SOrder(args.order)
    if s == SOrder.NORMAL:
        result = husimi_grid(rho, grid)
    elif s == SOrder.WEYL:
        result = wigner_grid(rho, grid, workers=config.workers, progress=args.progress)
    else:
        result = distribution_grid(rho, grid, s, workers=config.workers, progress=args.progress)

    if config.output_format == "json":
        metadata = {"state": args.state, "cutoff": trunc.cutoffs[0], "normalization": NORMALIZATION_NOTE}
        payload = result.to_json(metadata)
        if args.output:
            Path(args.output).write_text(payload + "\n", encoding="utf-8")
        else:
            print(payload)
    else:
        if args.output:
            result.to_csv(args.output)
        else:
            sys.stdout.write(result.to_csv())

    minimum, at_min = result.minimum()
    maximum, at_max = result.maximum()
    summary = (
        f"min {minimum!r} at ({at_min.real!r}, {at_min.imag!r}); "
        f"max {maximum!r} at ({at_max.real!r}, {at_max.imag!r})"
    )
    print(summary, file=sys.stdout if args.output else sys.stderr)
    if args.output:
        logger.info("Wrote grid to %s", args.output)
    return EXIT_OK


# Suites
def cmd_check(args: argparse.Namespace, config: RunConfig) -> int:
    report = run_suite(args.suite, config, progress=args.progress)
    payload = report.to_json()
    if args.output:
        Path(args.output).write_text(payload + "\n", encoding="utf-8")
    else:
        print(payload)
    return EXIT_OK if report.passed else EXIT_SUITE_FAILURE


# Fields
def cmd_modes(args: argparse.Namespace, config: RunConfig) -> int:
    _, field = read_field_csv(args.field_csv)
    lat = config.lattice()
    if "lattice_sites" not in config.model_fields_set:
        sites = int(round(field.site_count ** (1.0 / lat.dimension)))
        lat = _with_updates(lat, sites=sites)

    amplitudes = amplitudes_from_field(field, lat)
    canonical = qp_from_amplitudes(amplitudes, lat.omega)
    deviation = symplectic_check(lat)
    residue = None
    if args.round_trip:
        if not lat.covers_all_modes():
            raise ContractError("The field round trip needs the full mode set (k selection 'all')")
        back = field_from_amplitudes(amplitudes, lat)
        residue = max(float(np.max(np.abs(back.phi - field.phi))), float(np.max(np.abs(back.varpi - field.varpi))))

    indices = [",".join(str(c) for c in row) for row in lat.mode_indices()]
    frame = pd.DataFrame(
        {
            "mode": indices,
            "omega": lat.omega,
            "a_re": amplitudes.alpha.real,
            "a_im": amplitudes.alpha.imag,
            "Q": canonical.Q,
            "P": canonical.P,
        }
    )
    if config.output_format == "json":
        data = {
            "modes": frame.to_dict(orient="records"),
            "symplectic_deviation": deviation,
            "round_trip_residue": residue,
        }
        print(json.dumps(data, sort_keys=True))
    else:
        sys.stdout.write(frame.to_csv(index=False, float_format=FLOAT_FORMAT, lineterminator="\n"))
        print(f"# symplectic_deviation={deviation!r}")
        if residue is not None:
            print(f"# round_trip_residue={residue!r}")
    return EXIT_OK


COMMANDS = {
    "star": cmd_star,
    "transform": cmd_transform,
    "wigner": cmd_wigner,
    "check": cmd_check,
    "modes": cmd_modes,
}


def _command_overrides(args: argparse.Namespace) -> dict:
    if args.command == "check":
        return {"amplitude": args.amplitude}
    if args.command == "modes":
        return {
            "lattice_sites": args.sites,
            "lattice_spacing": args.spacing,
            "mass": args.mass,
            "lattice_dimension": args.dimension,
            "k_selection": args.k_selection,
        }
    return {}


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    configure_logging(getattr(args, "verbose", 0))
    try:
        config = resolve_config(args, **_command_overrides(args))
        logger.debug("Resolved configuration %s", config.digest())
        return COMMANDS[args.command](args, config)
    except (ParseError, FieldFileError, ConfigurationError, ValidationError) as e:
        logger.error("%s", e)
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USER_ERROR
    except (DimensionError, ContractError) as e:
        logger.error("%s", e)
        print(f"error: {e}", file=sys.stderr)
        return EXIT_CONTRACT_ERROR


if __name__ == "__main__":
    raise SystemExit(main())
