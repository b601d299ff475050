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


from dataclasses import replace

import pytest

from approx_adders.cost import (
    DEFAULT_CELL_COSTS,
    CellCostTable,
    load_cell_costs,
    transistor_count,
)
from approx_adders.errors import CostTableError
from approx_adders.models import ADDER_FAMILY, family_config
from approx_adders.netlist import ARITY, Gate, GateOp, Netlist, build_netlist
from approx_adders.words import AdderConfig, AdderKind


@pytest.fixture(scope="module")
def family_counts():
    return {
        kind: transistor_count(build_netlist(family_config(kind, 32, 10, 5)))
        for kind in ADDER_FAMILY
    }


def test_empty_netlist_costs_nothing():
    nl = Netlist(n=1, primary_inputs=(0, 1), primary_outputs=(0, 1), gates=())
    assert transistor_count(nl, CellCostTable()) == 0


def test_single_full_adder():
    nl = Netlist(
        n=1,
        primary_inputs=(0, 1),
        primary_outputs=(3, 4),
        gates=(Gate(GateOp.TIE0, (), (2,)), Gate(GateOp.FA, (0, 1, 2), (3, 4))),
    )
    assert transistor_count(nl) == 28


def test_family_counts_with_default_costs(family_counts):
    assert family_counts == {
        AdderKind.OLOCA: 652,
        AdderKind.LOAWA: 676,
        AdderKind.HALOC: 676,
        AdderKind.LOA: 682,
        AdderKind.MHERLOA: 688,
        AdderKind.HERLOA: 718,
        AdderKind.EXACT: 896,
    }


def test_family_area_ordering(family_counts):
    c = family_counts
    assert c[AdderKind.OLOCA] < c[AdderKind.LOAWA]
    assert c[AdderKind.LOAWA] == c[AdderKind.HALOC]
    assert c[AdderKind.HALOC] < c[AdderKind.LOA]
    assert c[AdderKind.LOA] < c[AdderKind.MHERLOA]
    assert c[AdderKind.MHERLOA] < c[AdderKind.HERLOA]
    assert c[AdderKind.HERLOA] < c[AdderKind.EXACT]


def test_lookahead_msm_costs_more_than_ripple():
    cfg = AdderConfig(AdderKind.HALOC, 32, 10, 5)
    ripple = transistor_count(build_netlist(cfg, "ripple"))
    lookahead = transistor_count(build_netlist(cfg, "lookahead"))
    assert lookahead > ripple


def test_adding_a_gate_never_decreases_count():
    nl = build_netlist(AdderConfig(AdderKind.LOA, 8, 4, 0))
    before = transistor_count(nl)
    for op in GateOp:
        n_in, n_out = ARITY[op]
        extra = Gate(op, tuple(range(n_in)), tuple(range(1000, 1000 + n_out)))
        grown = replace(nl, gates=nl.gates + (extra,))
        assert transistor_count(grown) >= before


def test_missing_cost_entry_is_reported():
    costs = CellCostTable({GateOp.OR2: 6, GateOp.TIE0: 0})
    nl = build_netlist(AdderConfig(AdderKind.LOAWA, 8, 4, 0))
    with pytest.raises(CostTableError) as excinfo:
        transistor_count(nl, costs)
    assert ("FA", "missing") in excinfo.value.violations


def test_tie_cells_must_be_free():
    with pytest.raises(CostTableError):
        CellCostTable({GateOp.TIE1: 2})
    with pytest.raises(CostTableError):
        CellCostTable({GateOp.AND2: -1})


def test_load_cell_costs(tmp_path):
    path = tmp_path / "cells.txt"
    path.write_text(
        "# calibrated library\n"
        "FA=24\n"
        "or2 = 4  # lower case is accepted\n"
        "\n"
        "HA=14\n"
        "AND2=4\n"
    )
    costs = load_cell_costs(path)
    assert costs.transistors_per_op[GateOp.FA] == 24
    assert costs.transistors_per_op[GateOp.OR2] == 4
    assert costs.transistors_per_op[GateOp.TIE1] == 0
    nl = build_netlist(AdderConfig(AdderKind.HALOC, 8, 4, 2))
    # 1 OR2 + 2 HA + 4 FA
    assert transistor_count(nl, costs) == 4 + 2 * 14 + 4 * 24


@pytest.mark.parametrize(
    "text", ["FOO2=3\n", "FA=many\n", "FA 28\n", "FA=28\nFA=30\n", "TIE0=1\n"]
)
def test_load_cell_costs_rejects_bad_files(tmp_path, text):
    path = tmp_path / "cells.txt"
    path.write_text(text)
    with pytest.raises(CostTableError):
        load_cell_costs(path)


def test_default_table_covers_every_op():
    assert set(DEFAULT_CELL_COSTS) == set(GateOp)
