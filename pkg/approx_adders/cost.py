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

import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Tuple, Union

from approx_adders.errors import CostTableError
from approx_adders.netlist import GateOp, Netlist, gate_histogram

logger = logging.getLogger(__name__)

TIE_OPS = (GateOp.TIE0, GateOp.TIE1)

# static complementary-style cell costs; HA = XOR2 + AND2, FA is mirror-style
DEFAULT_CELL_COSTS: Dict[GateOp, int] = {
    GateOp.INV: 2,
    GateOp.NAND2: 4,
    GateOp.NOR2: 4,
    GateOp.AND2: 6,
    GateOp.OR2: 6,
    GateOp.XOR2: 12,
    GateOp.XNOR2: 12,
    GateOp.HA: 18,
    GateOp.FA: 28,
    GateOp.TIE1: 0,
    GateOp.TIE0: 0,
}


@dataclass(frozen=True)
class CellCostTable:
    transistors_per_op: Dict[GateOp, int] = field(
        default_factory=lambda: dict(DEFAULT_CELL_COSTS)
    )

    def __post_init__(self) -> None:
        violations: List[Tuple[str, str]] = []
        for op, cost in self.transistors_per_op.items():
            if cost < 0:
                violations.append((op.value, f"negative cost {cost}"))
            elif op in TIE_OPS and cost != 0:
                violations.append((op.value, f"tie cells cost 0, got {cost}"))
        if violations:
            raise CostTableError("Invalid cell cost table", violations)


def load_cell_costs(path: Union[str, Path]) -> CellCostTable:
    """
    Parse a flat `OP=transistors` file. Blank lines and `#` comments are
    ignored; tie cells default to 0 when not listed.
    """
    costs: Dict[GateOp, int] = {}
    text = Path(path).read_text()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        key = key.strip().upper()
        if not sep:
            raise CostTableError(
                f"{path}:{lineno}: expected OP=value", [("line", raw.strip())]
            )
        try:
            op = GateOp(key)
        except ValueError:
            raise CostTableError(
                f"{path}:{lineno}: unknown gate op {key!r}", [("op", key)]
            ) from None
        if op in costs:
            raise CostTableError(f"{path}:{lineno}: duplicate entry", [("op", key)])
        try:
            costs[op] = int(value.strip())
        except ValueError:
            raise CostTableError(
                f"{path}:{lineno}: cost must be an integer", [(key, value.strip())]
            ) from None

    for op in TIE_OPS:
        costs.setdefault(op, 0)
    logger.info(f"Loaded {len(costs)} cell costs from {path}")
    return CellCostTable(costs)


def transistor_count(nl: Netlist, costs: CellCostTable = CellCostTable()) -> int:
    histogram = gate_histogram(nl)
    missing = [op for op in histogram if op not in costs.transistors_per_op]
    if missing:
        raise CostTableError(
            f"Cell cost table has no entry for gates used by {nl.name}",
            [(op.value, "missing") for op in missing],
        )
    return sum(count * costs.transistors_per_op[op] for op, count in histogram.items())
