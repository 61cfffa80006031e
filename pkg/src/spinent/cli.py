"""Command-line interface: temperature sweeps, spectra, and point reports."""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass

import numpy as np

from .entanglement import critical_temperature, evaluate_point, sweep_reports
from .linalg import hermitian_eigendecompose
from .model import SpinSystem, build_hamiltonian

CSV_HEADER = "T,ppt_min_eigenvalue,negativity,entanglement_hs,T_E"


def _fmt(x: float) -> str:
    return f"{x:.9g}"


@dataclass
class SweepConfig:
    """Validated description of one temperature sweep."""

    J: float
    s2: float = 1.0
    kB: float = 1.0
    t_min: float = 0.0
    t_max: float = 2.0
    n_points: int = 201
    scale: str = "linear"
    output_format: str = "csv"
    out_path: str | None = None

    def validate(self) -> None:
        if not math.isfinite(self.J):
            raise ValueError(f"J must be finite, got {self.J!r}")
        if not math.isfinite(self.kB) or self.kB <= 0.0:
            raise ValueError(f"kB must be a positive number, got {self.kB!r}")
        if not (math.isfinite(self.t_min) and math.isfinite(self.t_max)):
            raise ValueError("temperature bounds must be finite")
        if not (0.0 <= self.t_min < self.t_max):
            raise ValueError(
                f"need 0 <= t-min < t-max, got [{self.t_min}, {self.t_max}]"
            )
        if self.n_points < 2:
            raise ValueError(f"n must be at least 2, got {self.n_points}")
        if self.scale not in ("linear", "log"):
            raise ValueError(f"scale must be linear or log, got {self.scale!r}")
        if self.scale == "log" and self.t_min <= 0.0:
            raise ValueError("log scale needs t-min > 0")
        if self.output_format not in ("csv", "json"):
            raise ValueError(
                f"format must be csv or json, got {self.output_format!r}"
            )

    def system(self) -> SpinSystem:
        return SpinSystem(s1=0.5, s2=self.s2, J=self.J, kB=self.kB)

    def temperatures(self) -> np.ndarray:
        if self.scale == "log":
            return np.geomspace(self.t_min, self.t_max, self.n_points)
        return np.linspace(self.t_min, self.t_max, self.n_points)


def format_csv(reports) -> str:
    """Render reports as delimited text, one ascending-T row per report.

    Floats carry nine significant digits; the T_E field is empty when no
    entanglement temperature exists.
    """
    lines = [CSV_HEADER]
    for r in reports:
        lines.append(
            ",".join(
                (
                    _fmt(r.T),
                    _fmt(r.ppt_min_eigenvalue),
                    _fmt(r.negativity),
                    _fmt(r.entanglement_hs),
                    "" if r.T_E is None else _fmt(r.T_E),
                )
            )
        )
    return "\n".join(lines) + "\n"


def sweep_payload(cfg: SweepConfig, reports) -> dict:
    """JSON-ready dict with the sweep configuration and all rows."""
    return {
        "J": cfg.J,
        "s2": cfg.s2,
        "kB": cfg.kB,
        "t_min": cfg.t_min,
        "t_max": cfg.t_max,
        "n_points": cfg.n_points,
        "scale": cfg.scale,
        "T_E": reports[0].T_E if reports else None,
        "points": [
            {
                "T": r.T,
                "ppt_min_eigenvalue": r.ppt_min_eigenvalue,
                "negativity": r.negativity,
                "entanglement_hs": r.entanglement_hs,
                "T_E": r.T_E,
            }
            for r in reports
        ],
    }


def _write_text(path: str | None, text: str) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def cmd_sweep(args) -> int:
    cfg = SweepConfig(
        J=args.J,
        s2=args.s2,
        kB=args.kB,
        t_min=args.t_min,
        t_max=args.t_max,
        n_points=args.n,
        scale=args.scale,
        output_format=args.format,
        out_path=args.out,
    )
    cfg.validate()
    reports = sweep_reports(cfg.system(), cfg.temperatures())
    if cfg.output_format == "csv":
        text = format_csv(reports)
    else:
        text = json.dumps(sweep_payload(cfg, reports), indent=2) + "\n"
    _write_text(cfg.out_path, text)
    if args.plot is not None:
        from .plotting import save_sweep_figure

        save_sweep_figure(
            reports, args.plot, title=f"J={_fmt(cfg.J)}, s2={_fmt(cfg.s2)}"
        )
    return 0


def cmd_spectrum(args) -> int:
    system = SpinSystem(s1=0.5, s2=args.s2, J=args.J, kB=args.kB)
    eigs = hermitian_eigendecompose(build_hamiltonian(system)).eigenvalues
    tol = 1e-9 * max(1.0, abs(system.J))
    groups: list[tuple[float, int]] = []
    for lam in eigs:
        if groups and abs(lam - groups[-1][0]) <= tol:
            groups[-1] = (groups[-1][0], groups[-1][1] + 1)
        else:
            groups.append((float(lam), 1))

    print(f"{'eigenvalue':>14}  {'degeneracy':>10}  total_spin")
    for value, count in groups:
        # Each exchange multiplet has degeneracy 2*S_tot + 1; with J = 0
        # everything collapses into one group and the label is meaningless.
        label = _fmt((count - 1) / 2.0) if system.J != 0.0 else "-"
        print(f"{_fmt(value):>14}  {count:>10}  {label}")
    return 0


def cmd_point(args) -> int:
    system = SpinSystem(s1=0.5, s2=args.s2, J=args.J, kB=args.kB)
    report = evaluate_point(system, args.T)
    if args.format == "json":
        print(json.dumps(report.as_dict(), indent=2))
    else:
        rows = report.as_dict()
        width = max(len(k) for k in rows)
        for key, value in rows.items():
            shown = "none" if value is None else _fmt(value)
            print(f"{key:<{width}}  {shown}")
    return 0


def cmd_critical_temp(args) -> int:
    system = SpinSystem(s1=0.5, s2=args.s2, J=args.J, kB=args.kB)
    t_e = critical_temperature(system)
    print("T_E = none" if t_e is None else f"T_E = {_fmt(t_e)}")
    return 0


def _add_system_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--J",
        type=float,
        required=True,
        help="exchange coupling (J < 0 is antiferromagnetic)",
    )
    parser.add_argument(
        "--s2",
        type=float,
        default=1.0,
        help="spin of the second site (positive half-integer, default 1)",
    )
    parser.add_argument(
        "--kB", type=float, default=1.0, help="Boltzmann constant (default 1)"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spinent",
        description=(
            "Thermal entanglement of a spin-1/2 x spin-S Heisenberg "
            "exchange cell: partial-transpose tests and Hilbert-Schmidt "
            "distance to the separable boundary."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_sweep = sub.add_parser(
        "sweep", help="entanglement report over a temperature grid"
    )
    _add_system_args(p_sweep)
    p_sweep.add_argument(
        "--t-min", type=float, default=0.0, help="lowest temperature (default 0)"
    )
    p_sweep.add_argument(
        "--t-max", type=float, required=True, help="highest temperature"
    )
    p_sweep.add_argument(
        "--n", type=int, default=201, help="number of grid points (>= 2)"
    )
    p_sweep.add_argument("--scale", choices=("linear", "log"), default="linear")
    p_sweep.add_argument("--format", choices=("csv", "json"), default="csv")
    p_sweep.add_argument(
        "--out", default=None, help="output file (default: stdout)"
    )
    p_sweep.add_argument(
        "--plot",
        default=None,
        metavar="PATH",
        help="also render the sweep curves to an image file",
    )
    p_sweep.set_defaults(func=cmd_sweep)

    p_spectrum = sub.add_parser(
        "spectrum", help="eigenvalues of the exchange Hamiltonian"
    )
    _add_system_args(p_spectrum)
    p_spectrum.set_defaults(func=cmd_spectrum)

    p_point = sub.add_parser(
        "point", help="entanglement report at a single temperature"
    )
    _add_system_args(p_point)
    p_point.add_argument("--T", type=float, required=True, help="temperature")
    p_point.add_argument("--format", choices=("pretty", "json"), default="pretty")
    p_point.set_defaults(func=cmd_point)

    p_ct = sub.add_parser(
        "critical-temp", help="entanglement temperature T_E (if any)"
    )
    _add_system_args(p_ct)
    p_ct.set_defaults(func=cmd_critical_temp)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        parser.exit(2, f"{parser.prog}: error: {exc}\n")
    except OSError as exc:
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
