# SPDX-FileCopyrightText: Copyright (c) 2025 NVIDIA CORPORATION & AFFILIATES. All rights reserved.
# SPDX-License-Identifier: Apache-2.0
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import argparse
import itertools
import logging
import sys
from dataclasses import replace
from pathlib import Path
from typing import List, NoReturn, Optional, Sequence

import pandas as pd
from tqdm import tqdm

from approx_adders.cost import CellCostTable, load_cell_costs, transistor_count
from approx_adders.defaults import AdderDefaults, ErrorAnalysisDefaults, ImageDefaults
from approx_adders.errors import AdderToolkitError, ConfigurationError
from approx_adders.fixed_fft import FixedFormat
from approx_adders.logging_utils import (
    configure_logging,
    format_table,
    progress_disabled,
)
from approx_adders.metrics import combined_stats
from approx_adders.models import (
    ADDER_FAMILY,
    family_config,
    lsm_truth_table,
    unordered_rows,
)
from approx_adders.netlist import build_netlist, export_netlist
from approx_adders.pgm import read_pgm, write_pgm
from approx_adders.pipeline import image_experiment
from approx_adders.reports import (
    REPORT_FORMATS,
    ReportRow,
    default_energies,
    load_energy_file,
    read_report_csv,
    render,
    tradeoff_rows,
)
from approx_adders.words import (
    HALF_ADDER_KINDS,
    NO_CONSTANT_KINDS,
    AdderConfig,
    AdderKind,
    config_violations,
    validate_config,
)

logger = logging.getLogger(__name__)

EXIT_RUNTIME = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


class ArgumentParser(argparse.ArgumentParser):
    """Reports usage problems as a single machine-parsable stderr line."""

    def error(self, message: str) -> NoReturn:
        raise UsageError(message)


def parse_range(text: str) -> List[int]:
    """
    Parse `a,b,c` or an inclusive `start:stop[:step]` range.
    """
    try:
        if ":" in text:
            parts = [int(p) for p in text.split(":")]
            if len(parts) not in (2, 3):
                raise ValueError(text)
            start, stop = parts[0], parts[1]
            step = parts[2] if len(parts) == 3 else 1
            if step <= 0:
                raise ValueError(text)
            return list(range(start, stop + 1, step))
        return sorted({int(p) for p in text.split(",") if p.strip()})
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid range {text!r}") from None


def resolve_config(
    kind: AdderKind, n: int, m: Optional[int], k: Optional[int]
) -> AdderConfig:
    """Fill unset m/k with defaults that suit the kind, then validate."""
    if kind is AdderKind.EXACT:
        return validate_config(AdderConfig(kind, n, m or 0, k or 0))
    if m is None:
        m = min(AdderDefaults.m, n)
    if k is None:
        if kind in NO_CONSTANT_KINDS or kind is AdderKind.HERLOA:
            k = 0
        elif kind in HALF_ADDER_KINDS:
            k = max(min(AdderDefaults.k, m - 2), 0)
        else:
            k = min(AdderDefaults.k, m)
    return validate_config(AdderConfig(kind, n, m, k))


def selected_configs(args: argparse.Namespace) -> List[AdderConfig]:
    if getattr(args, "family", False):
        m = AdderDefaults.m if args.m is None else args.m
        k = AdderDefaults.k if args.k is None else args.k
        return [
            validate_config(family_config(kind, args.n, m, k)) for kind in ADDER_FAMILY
        ]
    return [resolve_config(args.kind, args.n, args.m, args.k)]


def load_costs(args: argparse.Namespace) -> CellCostTable:
    return load_cell_costs(args.cells) if args.cells else CellCostTable()


def emit(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text)
        logger.info(f"Wrote report to {out}")
    else:
        sys.stdout.write(text)


def cmd_analyze(args: argparse.Namespace) -> None:
    costs = load_costs(args)
    rows: List[ReportRow] = []
    for cfg in selected_configs(args):
        stats = combined_stats(cfg, args.samples, args.seed, args.workers)
        row = ReportRow.for_config(cfg).with_stats(stats)
        transistors = transistor_count(build_netlist(cfg, args.msm), costs)
        rows.append(replace(row, transistors=transistors))
    emit(render(rows, args.format), args.out)


def cmd_sweep(args: argparse.Namespace) -> None:
    costs = load_costs(args)
    combos = sorted(itertools.product(args.m_range, args.k_range))
    configs: List[AdderConfig] = []
    for m, k in combos:
        cfg = AdderConfig(args.kind, args.n, m, k)
        violations = config_violations(cfg)
        if violations:
            logger.info(f"Skipping m={m} k={k}: {violations[0][1]}")
            continue
        configs.append(cfg)
    if not configs:
        raise ConfigurationError(
            f"No valid (m, k) combination for {args.kind.value} at n={args.n}",
            [("m_range", str(args.m_range)), ("k_range", str(args.k_range))],
        )

    rows: List[ReportRow] = []
    for cfg in tqdm(configs, desc="sweep", disable=progress_disabled()):
        stats = combined_stats(cfg, args.samples, args.seed, args.workers)
        row = ReportRow.for_config(cfg).with_stats(stats)
        transistors = transistor_count(build_netlist(cfg, args.msm), costs)
        rows.append(replace(row, transistors=transistors))
    emit(render(rows, args.format), args.out)


def cmd_vectors(args: argparse.Namespace) -> None:
    rows = unordered_rows(lsm_truth_table(args.kind, args.m, args.k))
    frame = pd.DataFrame([row.as_dict() for row in rows])
    logger.info(
        f"{args.kind.value}: {sum(row.erroneous for row in rows)} of {len(rows)} "
        "unordered input combinations erroneous"
    )
    if args.format == "csv":
        text = frame.to_csv(index=False, lineterminator="\n")
    elif args.format == "json":
        text = frame.to_json(orient="records", indent=2) + "\n"
    else:
        text = format_table(frame.astype(str)) + "\n"
    emit(text, args.out)


def cmd_cost(args: argparse.Namespace) -> None:
    costs = load_costs(args)
    configs = selected_configs(args)
    if args.export and len(configs) > 1:
        raise ConfigurationError(
            "--export writes a single netlist",
            [("family", "not allowed with --export")],
        )
    rows: List[ReportRow] = []
    for cfg in configs:
        nl = build_netlist(cfg, args.msm)
        if args.export:
            Path(args.export).write_text(export_netlist(nl))
            logger.info(f"Exported {len(nl.gates)} gates to {args.export}")
        row = ReportRow.for_config(cfg)
        rows.append(replace(row, transistors=transistor_count(nl, costs)))
    emit(render(rows, args.format), args.out)


def cmd_image(args: argparse.Namespace) -> None:
    img = read_pgm(args.input)
    fixed_format = FixedFormat(args.n, args.frac_bits)
    configs = selected_configs(args)
    rows: List[ReportRow] = []
    for cfg in configs:
        rebuilt, quality = image_experiment(img, cfg, fixed_format)
        if args.output:
            output = Path(args.output)
            if len(configs) > 1:
                name = f"{output.stem}_{cfg.kind.value}{output.suffix}"
                output = output.with_name(name)
            write_pgm(output, rebuilt, binary=not args.p2)
        rows.append(ReportRow.for_config(cfg).with_quality(quality))
        print(
            f"{cfg.kind.value}: ssim={quality.ssim:.4f} psnr={quality.psnr_db:.2f}dB "
            f"quality={quality.label}",
            file=sys.stderr,
        )
    emit(render(rows, args.format), args.out)


def cmd_tradeoff(args: argparse.Namespace) -> None:
    rows = read_report_csv(args.rows)
    energies = (
        load_energy_file(args.energy_file) if args.energy_file else default_energies()
    )
    emit(render(tradeoff_rows(rows, energies), args.format), args.out)


def _add_config_args(parser: argparse.ArgumentParser, family: bool = True) -> None:
    parser.add_argument(
        "--kind",
        type=AdderKind,
        choices=list(AdderKind),
        default=AdderKind.HALOC,
        help="Adder design (default: haloc)",
    )
    parser.add_argument("--n", type=int, default=AdderDefaults.n, help="Adder width")
    parser.add_argument("--m", type=int, default=None, help="Approximate LSM width")
    parser.add_argument(
        "--k",
        type=int,
        default=None,
        help="Constant-ones width (default depends on kind)",
    )
    if family:
        parser.add_argument(
            "--family",
            action="store_true",
            help="Report every design of the comparison family at (n, m, k)",
        )


def _add_sampling_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--samples", type=int, default=ErrorAnalysisDefaults.samples)
    parser.add_argument("--seed", type=int, default=ErrorAnalysisDefaults.seed)
    parser.add_argument(
        "--workers",
        type=int,
        default=ErrorAnalysisDefaults.workers,
        help="Sampling threads; results do not depend on this",
    )


def _add_cost_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--cells", default=None, help="Cell cost table file (OP=count)")
    parser.add_argument(
        "--msm", choices=["ripple", "lookahead"], default=AdderDefaults.msm_style
    )


def _add_output_args(parser: argparse.ArgumentParser, default: str = "csv") -> None:
    parser.add_argument("--format", choices=REPORT_FORMATS, default=default)
    parser.add_argument(
        "--out", default=None, help="Write the report here instead of stdout"
    )


def build_parser() -> ArgumentParser:
    parser = ArgumentParser(
        prog="axadd",
        description="Emulation, error analysis and image-quality evaluation of approximate adders",
    )
    subparsers = parser.add_subparsers(
        dest="command", required=True, parser_class=ArgumentParser
    )

    analyze = subparsers.add_parser(
        "analyze", help="Error statistics and transistor count"
    )
    _add_config_args(analyze)
    _add_sampling_args(analyze)
    _add_cost_args(analyze)
    _add_output_args(analyze)
    analyze.set_defaults(func=cmd_analyze)

    sweep = subparsers.add_parser("sweep", help="Design-space sweep over (m, k)")
    _add_config_args(sweep, family=False)
    sweep.add_argument(
        "--m-range", type=parse_range, required=True, help="e.g. 8,10,12 or 8:12:2"
    )
    sweep.add_argument("--k-range", type=parse_range, default=[0], help="e.g. 4:6")
    _add_sampling_args(sweep)
    _add_cost_args(sweep)
    _add_output_args(sweep)
    sweep.set_defaults(func=cmd_sweep)

    vectors = subparsers.add_parser("vectors", help="Two-MSB truth table of an LSM")
    vectors.add_argument(
        "--kind", type=AdderKind, choices=list(AdderKind), required=True
    )
    vectors.add_argument("--m", type=int, default=2)
    vectors.add_argument("--k", type=int, default=0)
    _add_output_args(vectors, default="table")
    vectors.set_defaults(func=cmd_vectors)

    cost = subparsers.add_parser("cost", help="Transistor count of the gate netlist")
    _add_config_args(cost)
    _add_cost_args(cost)
    cost.add_argument("--export", default=None, help="Write the netlist text here")
    _add_output_args(cost)
    cost.set_defaults(func=cmd_cost)

    image = subparsers.add_parser(
        "image", help="FFT/IFFT image reconstruction experiment"
    )
    _add_config_args(image)
    image.add_argument("--input", required=True, help="8-bit PGM image")
    image.add_argument("--output", default=None, help="Reconstructed PGM path")
    image.add_argument("--frac-bits", type=int, default=ImageDefaults.frac_bits)
    image.add_argument("--p2", action="store_true", help="Write ASCII (P2) PGM")
    _add_output_args(image)
    image.set_defaults(func=cmd_image)

    tradeoff = subparsers.add_parser(
        "tradeoff", help="Join SSIM rows with reference energies"
    )
    tradeoff.add_argument("--rows", required=True, help="CSV report with ssim values")
    tradeoff.add_argument("--energy-file", default=None, help="kind=value_fJ lines")
    _add_output_args(tradeoff)
    tradeoff.set_defaults(func=cmd_tradeoff)
    return parser


def _fail(error: BaseException, status: int) -> int:
    message = " ".join(str(error).split())
    print(f"error: {type(error).__name__}: {message}", file=sys.stderr)
    return status


def main(argv: Optional[Sequence[str]] = None) -> int:
    configure_logging()
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        args.func(args)
    except UsageError as e:
        return _fail(e, EXIT_USAGE)
    except ConfigurationError as e:
        return _fail(e, EXIT_USAGE)
    except (AdderToolkitError, OSError) as e:
        return _fail(e, EXIT_RUNTIME)
    return 0


if __name__ == "__main__":
    sys.exit(main())
