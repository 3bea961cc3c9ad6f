"""Command-line front end: tables, oracle comparisons, wavefunction sampling.

Exit codes: 0 success, 2 usage error, 3 constraint violation, 4 profile
ingestion error. Output is CSV or JSON, to stdout or ``--out``; identical
flags produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass

import numpy as np

from . import beamquality, fockspace, moments, wavefunction
from .exceptions import AllZeroIntensity, ConstraintViolation, IngestionError
from .qalgebra import Deformation

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_CONSTRAINT = 3
EXIT_INGESTION = 4

_FLOAT_FMT = "{:.9g}"  # 9 significant digits in CSV cells


@dataclass(frozen=True)
class RunConfig:
    """Validated parameters for one CLI invocation."""

    command: str
    p: int | None = None  # None = undeformed ("inf")
    alpha_re: float = 0.0
    alpha_im: float = 0.0
    hbar: float = 1.0
    wavelength: float | None = None
    waist: float | None = None
    order: int = 40
    output_format: str = "csv"
    output_path: str | None = None
    p_max: int | None = None
    level: int | None = None
    use_alpha: bool = False
    x_min: float = -3.0
    x_max: float = 3.0
    samples: int = 201
    near_path: str | None = None
    far_path: str | None = None

    @property
    def deformation(self) -> Deformation:
        return Deformation.undeformed() if self.p is None else Deformation.root_of_unity(self.p)

    @property
    def alpha(self) -> complex:
        return complex(self.alpha_re, self.alpha_im)


def _fmt(value: float) -> str:
    return _FLOAT_FMT.format(float(value))


def _emit(text: str, cfg: RunConfig) -> None:
    if cfg.output_path:
        with open(cfg.output_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _rows_to_csv(header: list[str], rows: list[list]) -> str:
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(cell if isinstance(cell, str) else _fmt(cell) for cell in row))
    return "\n".join(lines) + "\n"


def _report_text(report: dict, cfg: RunConfig) -> str:
    if cfg.output_format == "json":
        return json.dumps(report, indent=2) + "\n"
    rows = [[key, value if isinstance(value, str) else _fmt(value)] for key, value in report.items()]
    return _rows_to_csv(["quantity", "value"], rows)


def cmd_table(cfg: RunConfig) -> str:
    table = beamquality.golden_table(cfg.p_max)
    if cfg.output_format == "json":
        return json.dumps([{"p": p, "mq2": mq2} for p, mq2 in table], indent=2) + "\n"
    return _rows_to_csv(["p", "mq2"], [[str(p), mq2] for p, mq2 in table])


def cmd_mq2(cfg: RunConfig) -> str:
    deform = cfg.deformation
    closed = beamquality.mq2_closed(deform, cfg.alpha)
    exact = fockspace.uncertainty_exact(deform, cfg.alpha, hbar=cfg.hbar)
    defect = fockspace.eigen_defect(deform, fockspace.coherent_state(deform, cfg.alpha))
    gap = fockspace.closed_form_gap(deform, cfg.alpha)
    report = {
        "p": "inf" if cfg.p is None else cfg.p,
        "alpha_re": cfg.alpha_re,
        "alpha_im": cfg.alpha_im,
        "hbar": cfg.hbar,
        "mq2_closed": closed,
        "mq2_exact": exact.mq2,
        "mq2_gap": abs(closed - exact.mq2),
        "var_x_exact": exact.var_x,
        "var_p_exact": exact.var_p,
        "uncertainty_product_exact": exact.product,
        "commutator_mean_exact": exact.commutator_mean,
        "eigen_defect": defect,
        "aadag_exact": gap.aadag_exact,
        "aadag_closed": gap.aadag_closed,
        "aadag_radical": gap.radical,
        "aadag_gap": gap.gap,
    }
    return _report_text(report, cfg)


def cmd_wavefunction(cfg: RunConfig) -> str:
    deform = cfg.deformation
    if cfg.use_alpha:
        state = wavefunction.coherent_series(deform, cfg.hbar, cfg.alpha, order=cfg.order)
    else:
        state = wavefunction.excited_series(deform, cfg.hbar, cfg.level, order=cfg.order)
    xs = np.linspace(cfg.x_min, cfg.x_max, cfg.samples)
    values = [wavefunction.evaluate(state, x) for x in xs]
    complex_valued = any(abs(v.imag) > 1e-12 * max(1.0, abs(v)) for v in values)
    if cfg.output_format == "json":
        payload = {"x": [float(x) for x in xs], "psi_re": [v.real for v in values]}
        if complex_valued:
            payload["psi_im"] = [v.imag for v in values]
        return json.dumps(payload, indent=2) + "\n"
    if complex_valued:
        return _rows_to_csv(["x", "psi_re", "psi_im"], [[x, v.real, v.imag] for x, v in zip(xs, values)])
    return _rows_to_csv(["x", "psi"], [[x, v.real] for x, v in zip(xs, values)])


def cmd_moments(cfg: RunConfig) -> str:
    near = moments.read_profile_csv(cfg.near_path, moments.SPACE)
    far = moments.read_profile_csv(cfg.far_path, moments.SPATIAL_FREQUENCY)
    mean_near, waist = moments.centroid_and_width(near)
    theta = moments.divergence(far, cfg.wavelength)
    report = {
        "wavelength": cfg.wavelength,
        "waist_centroid": mean_near,
        "waist_width": waist,
        "divergence": theta,
        "m2": moments.m2_from_profiles(near, far, cfg.wavelength),
    }
    return _report_text(report, cfg)


def cmd_medium(cfg: RunConfig) -> str:
    deform = cfg.deformation
    geom = beamquality.BeamGeometry(wavelength=cfg.wavelength, waist_radius=cfg.waist)
    mq2 = beamquality.mq2_closed(deform, cfg.alpha)
    inference = beamquality.beta_j_inferred(deform, cfg.alpha, geom)
    report = {
        "p": "inf" if cfg.p is None else cfg.p,
        "alpha_re": cfg.alpha_re,
        "alpha_im": cfg.alpha_im,
        "wavelength": cfg.wavelength,
        "waist": cfg.waist,
        "mq2": mq2,
        "theta_q": beamquality.theta_q(deform, cfg.alpha, geom),
        "beta_j_literal": inference.literal.beta_j,
        "beta_j_inversion": inference.inversion.beta_j,
        "beta_j_abs_difference": inference.difference,
        "m_eff2_roundtrip": beamquality.m_eff_squared(1.0, geom, inference.inversion),
    }
    return _report_text(report, cfg)


_DISPATCH = {
    "table": cmd_table,
    "mq2": cmd_mq2,
    "wavefunction": cmd_wavefunction,
    "moments": cmd_moments,
    "medium": cmd_medium,
}


def _parse_p(text: str):
    if text.lower() == "inf":
        return None
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer or 'inf', got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"order must be >= 1, got {value}")
    return value


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def _positive_float(text: str) -> float:
    value = float(text)
    if value <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive number, got {value}")
    return value


def _add_alpha_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--alpha-re", type=float, default=0.0, help="Re(alpha)")
    parser.add_argument("--alpha-im", type=float, default=0.0, help="Im(alpha)")


def _add_common_args(parser: argparse.ArgumentParser, default_format: str) -> None:
    parser.add_argument("--format", choices=("csv", "json"), default=default_format, dest="output_format")
    parser.add_argument("--out", dest="output_path", default=None, help="write output to this path")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qbeam", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    table = sub.add_parser("table", help="beam quality versus order at |alpha| = 1")
    table.add_argument("--pmax", type=_positive_int, required=True, dest="p_max")
    _add_common_args(table, "csv")

    mq2 = sub.add_parser("mq2", help="closed form versus exact oracle for one state")
    mq2.add_argument("--p", type=_parse_p, required=True, help="order, or 'inf' for undeformed")
    _add_alpha_args(mq2)
    mq2.add_argument("--hbar", type=_positive_float, default=1.0)
    _add_common_args(mq2, "json")

    wave = sub.add_parser("wavefunction", help="sample a state series on an x grid")
    wave.add_argument("--p", type=_parse_p, required=True)
    wave.add_argument("--level", type=int, default=None, help="oscillator level n")
    _add_alpha_args(wave)
    wave.add_argument("--hbar", type=_positive_float, default=1.0)
    wave.add_argument("--xmin", type=float, default=-3.0, dest="x_min")
    wave.add_argument("--xmax", type=float, default=3.0, dest="x_max")
    wave.add_argument("--samples", type=_positive_int, default=201)
    wave.add_argument("--order", type=_positive_int, default=40)
    _add_common_args(wave, "csv")

    mom = sub.add_parser("moments", help="second-moment M^2 from near/far CSV profiles")
    mom.add_argument("--near", required=True, dest="near_path", help="space-domain profile CSV")
    mom.add_argument("--far", required=True, dest="far_path", help="spatial-frequency profile CSV")
    mom.add_argument("--wavelength", type=_positive_float, required=True)
    _add_common_args(mom, "json")

    med = sub.add_parser("medium", help="deformed divergence and inferred medium coupling")
    med.add_argument("--p", type=_parse_p, required=True)
    _add_alpha_args(med)
    med.add_argument("--wavelength", type=_positive_float, required=True)
    med.add_argument("--waist", type=_positive_float, required=True)
    _add_common_args(med, "json")

    return parser


def _config_from_args(parser: argparse.ArgumentParser, args: argparse.Namespace) -> RunConfig:
    fields = {k: v for k, v in vars(args).items() if v is not None}
    use_alpha = False
    if args.command == "wavefunction":
        alpha_given = args.alpha_re != 0.0 or args.alpha_im != 0.0
        if args.level is None and not alpha_given:
            parser.error("wavefunction needs --level or a nonzero --alpha-re/--alpha-im")
        if args.level is not None and alpha_given:
            parser.error("--level and --alpha-re/--alpha-im are mutually exclusive")
        use_alpha = args.level is None
        if use_alpha and args.p is None:
            parser.error("a coherent series needs a finite --p")
        if not use_alpha and args.level < 0:
            parser.error(f"--level must be >= 0, got {args.level}")
        if not use_alpha and args.p is not None and args.level > args.p:
            parser.error(f"--level {args.level} does not exist: only p+1 = {args.p + 1} levels")
        if args.x_max <= args.x_min:
            parser.error("--xmax must exceed --xmin")
        if args.samples < 2:
            parser.error("--samples must be >= 2")
        if args.order < 2:
            parser.error("--order must be >= 2")
    return RunConfig(use_alpha=use_alpha, **fields)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg = _config_from_args(parser, args)
    try:
        text = _DISPATCH[cfg.command](cfg)
    except ConstraintViolation as exc:
        print(f"qbeam: constraint violation: {exc}", file=sys.stderr)
        return EXIT_CONSTRAINT
    except (IngestionError, AllZeroIntensity) as exc:
        print(f"qbeam: ingestion error: {exc}", file=sys.stderr)
        return EXIT_INGESTION
    _emit(text, cfg)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
