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


import json

import pytest

from approx_adders.defaults import ReportDefaults
from approx_adders.errors import EnergyFileError, JoinError
from approx_adders.metrics import ErrorStats, StatsMode
from approx_adders.models import ADDER_FAMILY
from approx_adders.quality import QualityLabel, QualityReport
from approx_adders.reports import (
    ReportRow,
    default_energies,
    format_value,
    load_energy_file,
    read_report_csv,
    render,
    to_csv,
    to_json,
    tradeoff_rows,
)
from approx_adders.words import AdderConfig, AdderKind

HALOC_ROW = ReportRow(kind="haloc", n=32, m=10, k=5, med=123.9, max_ed=300)


@pytest.mark.parametrize(
    "value,text",
    [
        (None, ""),
        (5, "5"),
        (0.1, "0.1"),
        (123.93359375, "123.933594"),
        (3.77e-8, "3.77e-08"),
        (1.0, "1"),
    ],
)
def test_format_value(value, text):
    assert format_value(value) == text


def test_csv_layout():
    lines = to_csv([HALOC_ROW]).splitlines()
    assert lines[0] == ",".join(ReportDefaults.csv_columns)
    assert lines[1] == "haloc,32,10,5,123.9,,,300,,,,,"


def test_json_layout():
    payload = json.loads(to_json([HALOC_ROW]))
    assert payload == [
        {
            "kind": "haloc",
            "n": 32,
            "m": 10,
            "k": 5,
            "med": 123.9,
            "mred": None,
            "error_rate": None,
            "max_ed": 300,
            "transistors": None,
            "ssim": None,
            "psnr": None,
            "energy_fj": None,
            "normalized_energy": None,
        }
    ]


def test_render_formats():
    assert render([HALOC_ROW], "csv") == to_csv([HALOC_ROW])
    table = render([HALOC_ROW], "table")
    assert "haloc" in table and "normalized_energy" in table
    with pytest.raises(ValueError):
        render([HALOC_ROW], "xml")


def test_row_builders():
    stats = ErrorStats(
        med=2.5,
        mred=1e-3,
        error_rate=0.25,
        max_ed=7,
        sample_count=16,
        mode=StatsMode.EXHAUSTIVE_LSM,
    )
    quality = QualityReport(psnr_db=41.5, ssim=0.93, label=QualityLabel.HIGH)
    row = (
        ReportRow.for_config(AdderConfig(AdderKind.LOA, 8, 4, 0))
        .with_stats(stats)
        .with_quality(quality)
    )
    assert (row.kind, row.n, row.m, row.k) == ("loa", 8, 4, 0)
    assert (row.med, row.mred, row.error_rate, row.max_ed) == (2.5, 1e-3, 0.25, 7)
    assert (row.ssim, row.psnr) == (0.93, 41.5)


def test_csv_round_trip(tmp_path):
    rows = [
        HALOC_ROW,
        ReportRow(
            kind="loa", n=32, m=10, k=0, mred=6.19e-8, transistors=682, ssim=0.85
        ),
    ]
    path = tmp_path / "rows.csv"
    path.write_text(to_csv(rows))
    assert read_report_csv(path) == rows


def test_report_without_config_columns_is_rejected(tmp_path):
    path = tmp_path / "rows.csv"
    path.write_text("kind,ssim\nhaloc,0.9\n")
    with pytest.raises(JoinError):
        read_report_csv(path)


def test_tradeoff_with_reference_energies():
    rows = [
        ReportRow(kind=kind.value, n=32, m=10, k=5, ssim=0.9) for kind in ADDER_FAMILY
    ]
    joined = tradeoff_rows(rows, default_energies())
    by_kind = {row.kind: row for row in joined}
    assert by_kind["exact"].normalized_energy == 1.0
    assert by_kind["haloc"].energy_fj == 51.45
    assert by_kind["haloc"].normalized_energy == pytest.approx(51.45 / 66.25)
    lowest = min(joined, key=lambda row: row.normalized_energy or 0.0)
    assert lowest.kind == "haloc"
    assert [row.kind for row in joined] == [kind.value for kind in ADDER_FAMILY]


def test_tradeoff_with_equal_energies():
    rows = [
        ReportRow(kind="loa", n=32, m=10, k=0),
        ReportRow(kind="haloc", n=32, m=10, k=5),
    ]
    joined = tradeoff_rows(rows, {AdderKind.LOA: 5.0, AdderKind.HALOC: 5.0})
    assert [row.normalized_energy for row in joined] == [1.0, 1.0]


def test_tradeoff_requires_every_kind():
    rows = [ReportRow(kind="eta", n=32, m=10, k=0)]
    with pytest.raises(JoinError, match="eta"):
        tradeoff_rows(rows, default_energies())


def test_load_energy_file(tmp_path):
    path = tmp_path / "energy.txt"
    path.write_text("# measured\nHALOC = 50.0\nloa=55.5  # older corner\n")
    assert load_energy_file(path) == {AdderKind.HALOC: 50.0, AdderKind.LOA: 55.5}


@pytest.mark.parametrize(
    "text", ["foo=1\n", "loa=abc\n", "loa=-1\n", "loa=0\n", "loa 3\n", "# nothing\n"]
)
def test_load_energy_file_errors(tmp_path, text):
    path = tmp_path / "energy.txt"
    path.write_text(text)
    with pytest.raises(EnergyFileError):
        load_energy_file(path)
