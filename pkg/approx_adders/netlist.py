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
Gate-level netlists of the adders and a bit-parallel simulator for them.

Nets are integers. A netlist for an n-bit adder reads operand A on nets
0..n-1 and operand B on nets n..2n-1 (bit i of each operand on the i-th net)
and exposes n+1 primary outputs, least significant first. Outputs may alias
input nets (passthrough bits).
"""

import logging
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, List, Sequence, Tuple

import networkx as nx
import numpy as np

from approx_adders.defaults import AdderDefaults, ErrorAnalysisDefaults
from approx_adders.errors import NetlistError, WidthMismatchError
from approx_adders.words import (
    HALF_ADDER_KINDS,
    AddResult,
    AdderConfig,
    AdderKind,
    Word,
    validate_config,
)

logger = logging.getLogger(__name__)


class GateOp(str, Enum):
    INV = "INV"
    AND2 = "AND2"
    OR2 = "OR2"
    NAND2 = "NAND2"
    NOR2 = "NOR2"
    XOR2 = "XOR2"
    XNOR2 = "XNOR2"
    HA = "HA"
    FA = "FA"
    TIE1 = "TIE1"
    TIE0 = "TIE0"


# (inputs, outputs) per op
ARITY: Dict[GateOp, Tuple[int, int]] = {
    GateOp.INV: (1, 1),
    GateOp.AND2: (2, 1),
    GateOp.OR2: (2, 1),
    GateOp.NAND2: (2, 1),
    GateOp.NOR2: (2, 1),
    GateOp.XOR2: (2, 1),
    GateOp.XNOR2: (2, 1),
    GateOp.HA: (2, 2),
    GateOp.FA: (3, 2),
    GateOp.TIE1: (0, 1),
    GateOp.TIE0: (0, 1),
}


@dataclass(frozen=True)
class Gate:
    op: GateOp
    inputs: Tuple[int, ...]
    outputs: Tuple[int, ...]

    def __post_init__(self) -> None:
        n_in, n_out = ARITY[self.op]
        if len(self.inputs) != n_in or len(self.outputs) != n_out:
            raise NetlistError(
                f"{self.op.value} expects {n_in} inputs and {n_out} outputs, "
                f"got {len(self.inputs)} and {len(self.outputs)}"
            )


@dataclass(frozen=True)
class Netlist:
    n: int
    primary_inputs: Tuple[int, ...]
    primary_outputs: Tuple[int, ...]
    gates: Tuple[Gate, ...]
    name: str = ""

    @property
    def num_nets(self) -> int:
        nets = list(self.primary_inputs)
        for gate in self.gates:
            nets.extend(gate.outputs)
        return max(nets, default=-1) + 1


def check_netlist(nl: Netlist) -> Netlist:
    """
    Verifies port counts, topological gate order, single drivers and
    acyclicity. Returns the netlist unchanged when every check passes.
    """
    if len(nl.primary_inputs) != 2 * nl.n:
        raise NetlistError(
            f"Expected {2 * nl.n} primary inputs, got {len(nl.primary_inputs)}"
        )
    if len(nl.primary_outputs) != nl.n + 1:
        raise NetlistError(
            f"Expected {nl.n + 1} primary outputs, got {len(nl.primary_outputs)}"
        )

    graph = nx.DiGraph()
    driven = set(nl.primary_inputs)
    if len(driven) != len(nl.primary_inputs):
        raise NetlistError("Primary inputs are not distinct nets")
    graph.add_nodes_from(nl.primary_inputs)
    for index, gate in enumerate(nl.gates):
        for net in gate.inputs:
            if net not in driven:
                raise NetlistError(
                    f"Gate {index} ({gate.op.value}) reads net {net} before it is driven"
                )
        for net in gate.outputs:
            if net in driven:
                raise NetlistError(f"Net {net} has more than one driver (gate {index})")
            driven.add(net)
            graph.add_edges_from((src, net) for src in gate.inputs)
            graph.add_node(net)

    for net in nl.primary_outputs:
        if net not in driven:
            raise NetlistError(f"Primary output net {net} is undriven")

    if not nx.is_directed_acyclic_graph(graph):
        raise NetlistError(f"Netlist {nl.name} contains a combinational loop")
    return nl


class NetlistBuilder:
    def __init__(self, n: int, name: str = "") -> None:
        self.n = n
        self.name = name
        self.a: List[int] = list(range(n))
        self.b: List[int] = list(range(n, 2 * n))
        self._next_net = 2 * n
        self._gates: List[Gate] = []

    def add(self, op: GateOp, *inputs: int) -> Tuple[int, ...]:
        outputs = tuple(range(self._next_net, self._next_net + ARITY[op][1]))
        self._next_net += len(outputs)
        self._gates.append(Gate(op, tuple(inputs), outputs))
        return outputs

    def and2(self, x: int, y: int) -> int:
        return self.add(GateOp.AND2, x, y)[0]

    def or2(self, x: int, y: int) -> int:
        return self.add(GateOp.OR2, x, y)[0]

    def xor2(self, x: int, y: int) -> int:
        return self.add(GateOp.XOR2, x, y)[0]

    def ha(self, x: int, y: int) -> Tuple[int, int]:
        """Returns (sum, carry)."""
        s, c = self.add(GateOp.HA, x, y)
        return s, c

    def fa(self, x: int, y: int, cin: int) -> Tuple[int, int]:
        """Returns (sum, carry-out)."""
        s, c = self.add(GateOp.FA, x, y, cin)
        return s, c

    def tie0(self) -> int:
        return self.add(GateOp.TIE0)[0]

    def tie1(self) -> int:
        return self.add(GateOp.TIE1)[0]

    def and_all(self, nets: Sequence[int]) -> int:
        acc = nets[0]
        for net in nets[1:]:
            acc = self.and2(acc, net)
        return acc

    def or_all(self, nets: Sequence[int]) -> int:
        acc = nets[0]
        for net in nets[1:]:
            acc = self.or2(acc, net)
        return acc

    def build(self, outputs: Sequence[int]) -> Netlist:
        return check_netlist(
            Netlist(
                n=self.n,
                primary_inputs=tuple(self.a + self.b),
                primary_outputs=tuple(outputs),
                gates=tuple(self._gates),
                name=self.name,
            )
        )


def _build_lsm(builder: NetlistBuilder, cfg: AdderConfig) -> Tuple[List[int], int]:
    """Returns (sum nets of the m low bits, carry net into the MSM)."""
    a, b, m, k = builder.a, builder.b, cfg.m, cfg.k
    kind = cfg.kind

    if kind is AdderKind.LOA:
        return [builder.or2(a[i], b[i]) for i in range(m)], builder.and2(
            a[m - 1], b[m - 1]
        )
    if kind is AdderKind.LOAWA:
        return [builder.or2(a[i], b[i]) for i in range(m)], builder.tie0()
    if kind is AdderKind.PASSTHROUGH:
        return a[:m], builder.tie0()
    if kind is AdderKind.ETA:
        pg = [builder.ha(a[i], b[i]) for i in range(m)]
        # ones[i] is high when any bit pair at or above i is (1, 1)
        ones: List[int] = [0] * m
        ones[m - 1] = pg[m - 1][1]
        for i in range(m - 2, -1, -1):
            ones[i] = builder.or2(pg[i][1], ones[i + 1])
        return [builder.or2(pg[i][0], ones[i]) for i in range(m)], builder.tie0()

    sums = [builder.tie1() for _ in range(k)]
    if kind is AdderKind.OLOCA:
        sums += [builder.or2(a[i], b[i]) for i in range(k, m)]
        return sums, builder.and2(a[m - 1], b[m - 1])

    assert kind in HALF_ADDER_KINDS, kind
    sums += [builder.or2(a[i], b[i]) for i in range(k, m - 2)]
    p0, g0 = builder.ha(a[m - 2], b[m - 2])
    p1, cin = builder.ha(a[m - 1], b[m - 1])
    if kind is AdderKind.HALOC:
        sums.append(p0)
    else:
        sums.append(builder.or2(p0, builder.and2(p1, g0)))
    sums.append(builder.or2(p1, g0))
    return sums, cin


def _build_ripple(
    builder: NetlistBuilder, lo: int, hi: int, cin: int
) -> Tuple[List[int], int]:
    sums: List[int] = []
    carry = cin
    for i in range(lo, hi):
        s, carry = builder.fa(builder.a[i], builder.b[i], carry)
        sums.append(s)
    return sums, carry


def _build_lookahead(
    builder: NetlistBuilder, lo: int, hi: int, cin: int
) -> Tuple[List[int], int]:
    """Blocks of lookahead_group bits with fully expanded carries, rippling between blocks."""
    group = AdderDefaults.lookahead_group
    sums: List[int] = []
    carry = cin
    for start in range(lo, hi, group):
        bits = range(start, min(start + group, hi))
        pg = [builder.ha(builder.a[i], builder.b[i]) for i in bits]
        p = [x[0] for x in pg]
        g = [x[1] for x in pg]
        carries = [carry]
        for j in range(len(pg)):
            # c[j+1] = g[j] | p[j]g[j-1] | ... | p[j]..p[0]c[0]
            terms = [g[j]]
            for i in range(j - 1, -1, -1):
                terms.append(builder.and_all(p[i + 1 : j + 1] + [g[i]]))
            terms.append(builder.and_all(p[: j + 1] + [carry]))
            carries.append(builder.or_all(terms))
        sums += [builder.xor2(p[j], carries[j]) for j in range(len(pg))]
        carry = carries[-1]
    return sums, carry


def build_netlist(
    cfg: AdderConfig, msm_style: str = AdderDefaults.msm_style
) -> Netlist:
    validate_config(cfg)
    if msm_style not in ("ripple", "lookahead"):
        raise NetlistError(f"Unknown MSM style {msm_style!r}")
    builder = NetlistBuilder(cfg.n, name=f"{cfg}/{msm_style}")
    if cfg.is_exact:
        lsm_sums: List[int] = []
        cin = builder.tie0()
        m = 0
    else:
        lsm_sums, cin = _build_lsm(builder, cfg)
        m = cfg.m
    msm = _build_ripple if msm_style == "ripple" else _build_lookahead
    msm_sums, cout = msm(builder, m, cfg.n, cin)
    nl = builder.build(lsm_sums + msm_sums + [cout])
    logger.debug(f"Built {nl.name} with {len(nl.gates)} gates")
    return nl


def _evaluate(
    nl: Netlist, a_bits: List[Any], b_bits: List[Any], zero: Any, one: Any
) -> List[Any]:
    values: List[Any] = [None] * nl.num_nets
    for net, value in zip(nl.primary_inputs, a_bits + b_bits):
        values[net] = value

    for gate in nl.gates:
        x = [values[net] for net in gate.inputs]
        op = gate.op
        if op is GateOp.INV:
            out: Tuple[Any, ...] = (x[0] ^ one,)
        elif op is GateOp.AND2:
            out = (x[0] & x[1],)
        elif op is GateOp.OR2:
            out = (x[0] | x[1],)
        elif op is GateOp.NAND2:
            out = ((x[0] & x[1]) ^ one,)
        elif op is GateOp.NOR2:
            out = ((x[0] | x[1]) ^ one,)
        elif op is GateOp.XOR2:
            out = (x[0] ^ x[1],)
        elif op is GateOp.XNOR2:
            out = (x[0] ^ x[1] ^ one,)
        elif op is GateOp.HA:
            out = (x[0] ^ x[1], x[0] & x[1])
        elif op is GateOp.FA:
            p = x[0] ^ x[1]
            out = (p ^ x[2], (x[0] & x[1]) | (p & x[2]))
        elif op is GateOp.TIE1:
            out = (one,)
        else:
            out = (zero,)
        for net, value in zip(gate.outputs, out):
            values[net] = value
    return [values[net] for net in nl.primary_outputs]


def simulate_netlist(nl: Netlist, a: Word, b: Word) -> AddResult:
    if a.width != nl.n or b.width != nl.n:
        raise WidthMismatchError(
            f"Operands do not match the {nl.n}-bit netlist {nl.name}",
            [("a.width", str(a.width)), ("b.width", str(b.width))],
        )
    outputs = _evaluate(
        nl,
        [a.bit(i) for i in range(nl.n)],
        [b.bit(i) for i in range(nl.n)],
        0,
        1,
    )
    return AddResult(Word(sum(bit << i for i, bit in enumerate(outputs)), nl.n + 1))


def simulate_netlist_batch(nl: Netlist, a: Any, b: Any) -> np.ndarray:
    """
    Bit-parallel simulation over arrays of operands: every net carries one
    uint8 lane per input pair. Returns the (n+1)-bit sums as uint64.
    """
    if nl.n > ErrorAnalysisDefaults.max_array_width:
        raise WidthMismatchError(
            f"Batch simulation supports at most {ErrorAnalysisDefaults.max_array_width} bits",
            [("n", str(nl.n))],
        )
    a_arr = np.asarray(a, dtype=np.uint64)
    b_arr = np.asarray(b, dtype=np.uint64)
    if a_arr.shape != b_arr.shape:
        raise WidthMismatchError(
            "Operand arrays differ in shape",
            [("b.shape", f"{b_arr.shape} != {a_arr.shape}")],
        )

    def lanes(x: np.ndarray) -> List[np.ndarray]:
        return [
            ((x >> np.uint64(i)) & np.uint64(1)).astype(np.uint8) for i in range(nl.n)
        ]

    zero = np.zeros(a_arr.shape, dtype=np.uint8)
    one = np.ones(a_arr.shape, dtype=np.uint8)
    outputs = _evaluate(nl, lanes(a_arr), lanes(b_arr), zero, one)
    result = np.zeros(a_arr.shape, dtype=np.uint64)
    for i, bit in enumerate(outputs):
        result |= bit.astype(np.uint64) << np.uint64(i)
    return result


def gate_histogram(nl: Netlist) -> Dict[GateOp, int]:
    counts = Counter(gate.op for gate in nl.gates)
    return {op: counts[op] for op in GateOp if counts[op]}


def export_netlist(nl: Netlist) -> str:
    """One gate per line in topological order: `<id> <OP> <in...> -> <out...>`."""
    lines = [
        f"# netlist {nl.name}",
        "# inputs " + " ".join(str(net) for net in nl.primary_inputs),
        "# outputs " + " ".join(str(net) for net in nl.primary_outputs),
    ]
    for index, gate in enumerate(nl.gates):
        fields = [str(index), gate.op.value]
        fields += [str(net) for net in gate.inputs]
        fields.append("->")
        fields += [str(net) for net in gate.outputs]
        lines.append(" ".join(fields))
    return "\n".join(lines) + "\n"
