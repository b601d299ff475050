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
Fixed-width words, adder configurations and the exact reference adder.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import List, Tuple

from approx_adders.defaults import AdderDefaults
from approx_adders.errors import ConfigurationError, WidthMismatchError

logger = logging.getLogger(__name__)


def mask(width: int) -> int:
    return (1 << width) - 1


@dataclass(frozen=True)
class Word:
    """
    Unsigned integer of a fixed bit width. The value is masked to the width on
    construction, so it always satisfies value < 2**width.

    Width 0 only arises from degenerate operand splits and always holds 0.
    """

    value: int
    width: int

    def __post_init__(self) -> None:
        if not 0 <= self.width <= AdderDefaults.max_width + 1:
            raise ConfigurationError(
                f"Invalid word width {self.width}",
                [("width", f"must be in [0, {AdderDefaults.max_width + 1}]")],
            )
        object.__setattr__(self, "value", int(self.value) & mask(self.width))

    def __int__(self) -> int:
        return self.value

    def bit(self, i: int) -> int:
        return (self.value >> i) & 1


class AdderKind(str, Enum):
    EXACT = "exact"
    LOA = "loa"
    LOAWA = "loawa"
    PASSTHROUGH = "passthrough"
    ETA = "eta"
    OLOCA = "oloca"
    HERLOA = "herloa"
    MHERLOA = "mherloa"
    HALOC = "haloc"

    def __str__(self) -> str:
        return self.value


# kinds whose LSM ends in the two half-adder stage
HALF_ADDER_KINDS = frozenset({AdderKind.HALOC, AdderKind.HERLOA, AdderKind.MHERLOA})
# kinds without a constant-ones section
NO_CONSTANT_KINDS = frozenset(
    {AdderKind.LOA, AdderKind.LOAWA, AdderKind.PASSTHROUGH, AdderKind.ETA}
)


@dataclass(frozen=True)
class AdderConfig:
    kind: AdderKind
    n: int
    m: int
    k: int

    def __str__(self) -> str:
        return f"{self.kind.value}(n={self.n}, m={self.m}, k={self.k})"

    @property
    def is_exact(self) -> bool:
        return self.kind is AdderKind.EXACT or self.m == 0


@dataclass(frozen=True)
class AddResult:
    """Sum of two n-bit words, carrying the MSM carry-out as bit n."""

    sum: Word

    @property
    def value(self) -> int:
        return self.sum.value


def config_violations(cfg: AdderConfig) -> List[Tuple[str, str]]:
    violations: List[Tuple[str, str]] = []
    if not 1 <= cfg.n <= AdderDefaults.max_width:
        violations.append(("n", f"{cfg.n} outside [1, {AdderDefaults.max_width}]"))
    if not 0 <= cfg.m <= cfg.n:
        violations.append(("m", f"{cfg.m} outside [0, n={cfg.n}]"))
    if not 0 <= cfg.k <= max(cfg.m, 0):
        violations.append(("k", f"{cfg.k} outside [0, m={cfg.m}]"))

    if cfg.kind is AdderKind.EXACT:
        if cfg.m != 0:
            violations.append(("m", f"exact adder requires m=0, got {cfg.m}"))
        if cfg.k != 0:
            violations.append(("k", f"exact adder requires k=0, got {cfg.k}"))
    elif cfg.kind in NO_CONSTANT_KINDS:
        if cfg.k != 0:
            violations.append(
                ("k", f"{cfg.kind.value} has no constant section, k must be 0")
            )
    elif cfg.kind in HALF_ADDER_KINDS and cfg.m != 0:
        if cfg.m < 2:
            violations.append(
                ("m", f"{cfg.kind.value} requires m >= 2 or m = 0, got {cfg.m}")
            )
        elif cfg.k > cfg.m - 2:
            violations.append(
                ("k", f"{cfg.kind.value} requires k <= m-2={cfg.m - 2}, got {cfg.k}")
            )
    return violations


def validate_config(cfg: AdderConfig) -> AdderConfig:
    """
    Returns cfg unchanged if it satisfies every structural invariant, otherwise
    raises ConfigurationError listing each violation with its field.
    """
    if not isinstance(cfg.kind, AdderKind):
        raise ConfigurationError(
            f"Unknown adder kind {cfg.kind!r}", [("kind", "not an AdderKind")]
        )
    violations = config_violations(cfg)
    if violations:
        raise ConfigurationError(f"Invalid adder configuration {cfg}", violations)
    return cfg


def exact_add(a: Word, b: Word) -> AddResult:
    if a.width != b.width:
        raise WidthMismatchError(
            "Operand widths differ", [("b.width", f"{b.width} != a.width {a.width}")]
        )
    return AddResult(Word(a.value + b.value, a.width + 1))


def split_operand(a: Word, m: int) -> Tuple[Word, Word]:
    """Split a into (hi, lo) where hi * 2**m + lo == a.value."""
    if not 0 <= m <= a.width:
        raise ConfigurationError(
            f"Cannot split a {a.width}-bit word at {m}",
            [("m", f"{m} outside [0, {a.width}]")],
        )
    return Word(a.value >> m, a.width - m), Word(a.value & mask(m), m)
