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
Word-level functional models of the approximate adders.

Every model splits the operands at bit m. The upper (n-m)-bit module is an
exact adder fed by a speculated carry; the lower m-bit module is the
kind-specific approximation. The same bit rules serve Python ints and numpy
uint64 arrays: `lit` lifts integer constants into the operand domain.
"""

import logging
from dataclasses import dataclass
from typing import Any, Callable, List, Tuple

import numpy as np

from approx_adders.defaults import ErrorAnalysisDefaults
from approx_adders.errors import ConfigurationError, WidthMismatchError
from approx_adders.words import (
    NO_CONSTANT_KINDS,
    AddResult,
    AdderConfig,
    AdderKind,
    Word,
    mask,
    validate_config,
)

logger = logging.getLogger(__name__)

Lift = Callable[[int], Any]

# comparison family, in report order
ADDER_FAMILY: Tuple[AdderKind, ...] = (
    AdderKind.EXACT,
    AdderKind.LOA,
    AdderKind.LOAWA,
    AdderKind.OLOCA,
    AdderKind.HERLOA,
    AdderKind.MHERLOA,
    AdderKind.HALOC,
)


def family_config(kind: AdderKind, n: int, m: int, k: int) -> AdderConfig:
    """
    Configuration of one family member for a shared (n, m, k) operating point.
    The constant width only applies to kinds that have a constant section.
    """
    if kind is AdderKind.EXACT:
        return AdderConfig(kind, n, 0, 0)
    if kind in NO_CONSTANT_KINDS or kind is AdderKind.HERLOA:
        return AdderConfig(kind, n, m, 0)
    return AdderConfig(kind, n, m, k)


def _bit(x: Any, i: int, lit: Lift) -> Any:
    return (x >> lit(i)) & lit(1)


def _lower_part(
    kind: AdderKind, m: int, k: int, a: Any, b: Any, lit: Lift
) -> Tuple[Any, Any]:
    """Returns (lsm sum bits, speculated carry into the MSM) for m >= 1."""
    lsm_mask = lit(mask(m))
    if kind is AdderKind.LOA:
        return (a | b) & lsm_mask, _bit(a & b, m - 1, lit)
    if kind is AdderKind.LOAWA:
        return (a | b) & lsm_mask, lit(0)
    if kind is AdderKind.PASSTHROUGH:
        return a & lsm_mask, lit(0)
    if kind is AdderKind.ETA:
        # smear every generate bit towards bit 0
        ones = a & b & lsm_mask
        shift = 1
        while shift < m:
            ones = ones | (ones >> lit(shift))
            shift *= 2
        return ((a ^ b) | ones) & lsm_mask, lit(0)

    constant = lit(mask(k))
    if kind is AdderKind.OLOCA:
        return constant | ((a | b) & lsm_mask), _bit(a & b, m - 1, lit)

    # half-adder kinds
    top, second = m - 1, m - 2
    a1, b1 = _bit(a, top, lit), _bit(b, top, lit)
    a0, b0 = _bit(a, second, lit), _bit(b, second, lit)
    p1 = a1 ^ b1
    g0 = a0 & b0
    s0 = a0 ^ b0
    if kind in (AdderKind.HERLOA, AdderKind.MHERLOA):
        s0 = s0 | (p1 & g0)
    elif kind is not AdderKind.HALOC:
        raise ConfigurationError(f"Unknown adder kind {kind!r}", [("kind", str(kind))])
    s1 = p1 | g0
    or_section = (a | b) & lit(mask(second))
    lsm = constant | or_section | (s0 << lit(second)) | (s1 << lit(top))
    return lsm, a1 & b1


def _approx_sum(cfg: AdderConfig, a: Any, b: Any, lit: Lift) -> Any:
    if cfg.is_exact:
        return a + b
    m = cfg.m
    lsm, cin = _lower_part(cfg.kind, m, cfg.k, a, b, lit)
    upper = (a >> lit(m)) + (b >> lit(m)) + cin
    return (upper << lit(m)) | lsm


def approx_add(cfg: AdderConfig, a: Word, b: Word) -> AddResult:
    validate_config(cfg)
    if a.width != cfg.n or b.width != cfg.n:
        raise WidthMismatchError(
            f"Operands do not match {cfg}",
            [("a.width", str(a.width)), ("b.width", str(b.width))],
        )
    return AddResult(Word(_approx_sum(cfg, a.value, b.value, int), cfg.n + 1))


def _as_words(x: Any, n: int) -> np.ndarray:
    arr = np.asarray(x)
    if arr.dtype != np.uint64:
        arr = arr.astype(np.uint64)
    return arr & np.uint64(mask(n))


def approx_add_array(cfg: AdderConfig, a: Any, b: Any) -> np.ndarray:
    """
    Vectorised approx_add over uint64 arrays. Operands are masked to n bits;
    the (n+1)-bit sums are returned as uint64, so n is limited to 63.
    """
    validate_config(cfg)
    if cfg.n > ErrorAnalysisDefaults.max_array_width:
        raise ConfigurationError(
            "Array evaluation needs the sum to fit in 64 bits",
            [("n", f"{cfg.n} > {ErrorAnalysisDefaults.max_array_width}")],
        )
    a_arr = _as_words(a, cfg.n)
    b_arr = _as_words(b, cfg.n)
    if a_arr.shape != b_arr.shape:
        raise WidthMismatchError(
            "Operand arrays differ in shape",
            [("b.shape", f"{b_arr.shape} != {a_arr.shape}")],
        )
    return _approx_sum(cfg, a_arr, b_arr, np.uint64)


def exact_add_array(n: int, a: Any, b: Any) -> np.ndarray:
    return _as_words(a, n) + _as_words(b, n)


def approx_add_wide(cfg: AdderConfig, a: Any, b: Any) -> np.ndarray:
    """
    approx_add over arrays of up to 64-bit operands, evaluated on Python ints
    held in object arrays so the (n+1)-bit sum never overflows. Much slower
    than approx_add_array.
    """
    validate_config(cfg)
    a_obj = _as_words(a, cfg.n).astype(object)
    b_obj = _as_words(b, cfg.n).astype(object)
    if a_obj.shape != b_obj.shape:
        raise WidthMismatchError(
            "Operand arrays differ in shape",
            [("b.shape", f"{b_obj.shape} != {a_obj.shape}")],
        )
    return _approx_sum(cfg, a_obj, b_obj, int)


def exact_add_wide(n: int, a: Any, b: Any) -> np.ndarray:
    return _as_words(a, n).astype(object) + _as_words(b, n).astype(object)


def kind_is_commutative(kind: AdderKind) -> bool:
    return kind is not AdderKind.PASSTHROUGH


@dataclass(frozen=True)
class TruthTableRow:
    a_bits: int
    b_bits: int
    accurate: int
    approx: int

    @property
    def erroneous(self) -> bool:
        return self.approx != self.accurate

    def as_dict(self) -> dict:
        return {
            "A": format(self.a_bits, "02b"),
            "B": format(self.b_bits, "02b"),
            "accurate": format(self.accurate, "03b"),
            "approx": format(self.approx, "03b"),
            "erroneous": self.erroneous,
        }


def lsm_truth_table(kind: AdderKind, m: int = 2, k: int = 0) -> List[TruthTableRow]:
    """
    Behaviour of the two most significant LSM bit pairs for every ordered
    input combination. The lower m-2 input bits are held at 0 and the result
    is read from bit m-2 upwards, carry into the MSM included.
    """
    if m < 2:
        raise ConfigurationError(
            "Truth table needs at least two LSM bits", [("m", f"{m} < 2")]
        )
    cfg = validate_config(family_config(kind, m, m, k))
    rows: List[TruthTableRow] = []
    for a_bits in range(4):
        for b_bits in range(4):
            a = Word(a_bits << (m - 2), m)
            b = Word(b_bits << (m - 2), m)
            approx = approx_add(cfg, a, b).value >> (m - 2)
            rows.append(TruthTableRow(a_bits, b_bits, a_bits + b_bits, approx))
    return rows


def unordered_rows(rows: List[TruthTableRow]) -> List[TruthTableRow]:
    """The 10 non-redundant rows (a_bits >= b_bits), ordered by (A, B)."""
    return sorted(
        (row for row in rows if row.a_bits >= row.b_bits),
        key=lambda row: (row.a_bits, row.b_bits),
    )
