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

"""
Report rows and their CSV, JSON and terminal-table renderings.

Numbers are printed with a fixed number of significant digits and missing
fields are left empty (CSV/table) or null (JSON), so that a report is
byte-identical across runs.
"""

import io
import json
import logging
from dataclasses import asdict, dataclass, replace
from pathlib import Path
from typing import Any, Dict, List, Optional, Union

import pandas as pd

from approx_adders.defaults import ReportDefaults
from approx_adders.errors import EnergyFileError, JoinError
from approx_adders.logging_utils import format_table
from approx_adders.metrics import ErrorStats
from approx_adders.quality import QualityReport
from approx_adders.words import AdderConfig, AdderKind

logger = logging.getLogger(__name__)

REPORT_FORMATS = ("csv", "json", "table")


@dataclass(frozen=True)
class ReportRow:
    kind: str
    n: int
    m: int
    k: int
    med: Optional[float] = None
    mred: Optional[float] = None
    error_rate: Optional[float] = None
    max_ed: Optional[int] = None
    transistors: Optional[int] = None
    ssim: Optional[float] = None
    psnr: Optional[float] = None
    energy_fj: Optional[float] = None
    normalized_energy: Optional[float] = None

    @classmethod
    def for_config(cls, cfg: AdderConfig) -> "ReportRow":
        return cls(kind=cfg.kind.value, n=cfg.n, m=cfg.m, k=cfg.k)

    def with_stats(self, stats: ErrorStats) -> "ReportRow":
        return replace(
            self,
            med=stats.med,
            mred=stats.mred,
            error_rate=stats.error_rate,
            max_ed=stats.max_ed,
        )

    def with_quality(self, quality: QualityReport) -> "ReportRow":
        return replace(self, ssim=quality.ssim, psnr=quality.psnr_db)


def format_value(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return format(value, f".{ReportDefaults.significant_digits}g")
    return str(value)


def _json_value(value: Any) -> Any:
    if isinstance(value, float):
        return float(format_value(value))
    return value


def rows_to_frame(rows: List[ReportRow]) -> pd.DataFrame:
    """Formatted (string) frame in the fixed column order."""
    return pd.DataFrame(
        [
            [format_value(getattr(row, col)) for col in ReportDefaults.csv_columns]
            for row in rows
        ],
        columns=ReportDefaults.csv_columns,
    )


def to_csv(rows: List[ReportRow]) -> str:
    buffer = io.StringIO()
    rows_to_frame(rows).to_csv(buffer, index=False, lineterminator="\n")
    return buffer.getvalue()


def to_json(rows: List[ReportRow]) -> str:
    payload = [
        {key: _json_value(value) for key, value in asdict(row).items()} for row in rows
    ]
    return json.dumps(payload, indent=2) + "\n"


def render(rows: List[ReportRow], fmt: str) -> str:
    if fmt == "csv":
        return to_csv(rows)
    if fmt == "json":
        return to_json(rows)
    if fmt == "table":
        return format_table(rows_to_frame(rows)) + "\n"
    raise ValueError(f"Unknown report format {fmt!r}, expected one of {REPORT_FORMATS}")


def _optional(value: Any, cast: Any) -> Any:
    if value is None or (isinstance(value, float) and pd.isna(value)) or value == "":
        return None
    return cast(value)


def read_report_csv(path: Union[str, Path]) -> List[ReportRow]:
    frame = pd.read_csv(path, dtype=str, keep_default_na=False)
    missing = [col for col in ("kind", "n", "m", "k") if col not in frame.columns]
    if missing:
        raise JoinError(f"Report {path} lacks columns {missing}")
    int_columns = {"n", "m", "k", "max_ed", "transistors"}
    rows: List[ReportRow] = []
    for record in frame.to_dict(orient="records"):
        values: Dict[str, Any] = {}
        for col in ReportDefaults.csv_columns:
            cast = int if col in int_columns else float
            if col == "kind":
                values[col] = record["kind"]
            else:
                values[col] = _optional(record.get(col), cast)
        rows.append(ReportRow(**values))
    logger.info(f"Read {len(rows)} report rows from {path}")
    return rows


def default_energies() -> Dict[AdderKind, float]:
    return {
        AdderKind(kind): value
        for kind, value in ReportDefaults.reference_energy_fj.items()
    }


def load_energy_file(path: Union[str, Path]) -> Dict[AdderKind, float]:
    """Parse `kind=value_fJ` lines; blank lines and `#` comments are ignored."""
    energies: Dict[AdderKind, float] = {}
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key = key.strip().lower()
        if not sep:
            raise EnergyFileError(
                f"{path}:{lineno}: expected kind=value", [("line", raw.strip())]
            )
        try:
            kind = AdderKind(key)
        except ValueError:
            raise EnergyFileError(
                f"{path}:{lineno}: unknown adder kind {key!r}", [("kind", key)]
            ) from None
        try:
            energy = float(value)
        except ValueError:
            raise EnergyFileError(
                f"{path}:{lineno}: energy must be a number", [(key, value.strip())]
            ) from None
        if not energy > 0:
            raise EnergyFileError(
                f"{path}:{lineno}: energy must be positive", [(key, value.strip())]
            )
        energies[kind] = energy
    if not energies:
        raise EnergyFileError(f"{path}: no energy entries")
    return energies


def tradeoff_rows(
    rows: List[ReportRow], energies: Dict[AdderKind, float]
) -> List[ReportRow]:
    """
    Join report rows with per-kind reference energies, normalised to the
    largest energy in the table. Every row's kind must have an energy entry.
    """
    peak = max(energies.values())
    energy_frame = pd.DataFrame(
        {
            "kind": [kind.value for kind in energies],
            "energy": list(energies.values()),
        }
    )
    report_frame = pd.DataFrame({"kind": [row.kind for row in rows]})
    joined = report_frame.merge(energy_frame, on="kind", how="left", indicator=True)
    unmatched = sorted(set(joined.loc[joined["_merge"] == "left_only", "kind"]))
    if unmatched:
        raise JoinError(f"No reference energy for adder kinds {unmatched}")

    return [
        replace(row, energy_fj=float(energy), normalized_energy=float(energy) / peak)
        for row, energy in zip(rows, joined["energy"])
    ]
