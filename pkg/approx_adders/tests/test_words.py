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


import random

import pytest

from approx_adders.errors import ConfigurationError, WidthMismatchError
from approx_adders.words import (
    AdderConfig,
    AdderKind,
    Word,
    exact_add,
    split_operand,
    validate_config,
)


def test_word_masks_value_to_width():
    assert Word(300, 8).value == 44
    assert Word(-1, 4).value == 0xF
    assert Word(5, 0).value == 0


def test_word_rejects_unsupported_width():
    with pytest.raises(ConfigurationError):
        Word(0, 70)


@pytest.mark.parametrize(
    "a,b,n,expected",
    [
        (0, 0, 8, 0),
        (0xFF, 1, 8, 0x100),
        (26518, 26644, 16, 53162),
    ],
)
def test_exact_add(a, b, n, expected):
    result = exact_add(Word(a, n), Word(b, n))
    assert result.value == expected
    assert result.sum.width == n + 1


def test_exact_add_matches_integer_addition_exhaustively():
    n = 6
    for a in range(1 << n):
        for b in range(1 << n):
            assert exact_add(Word(a, n), Word(b, n)).value == a + b


def test_exact_add_width_mismatch():
    with pytest.raises(WidthMismatchError):
        exact_add(Word(1, 8), Word(1, 9))


@pytest.mark.parametrize(
    "value,m,hi,lo",
    [
        (0xCFAA, 8, 0xCF, 0xAA),
        (0x6796, 8, 0x67, 0x96),
        (0x1234, 0, 0x1234, 0),
    ],
)
def test_split_operand(value, m, hi, lo):
    high, low = split_operand(Word(value, 16), m)
    assert (high.value, low.value) == (hi, lo)
    assert (high.width, low.width) == (16 - m, m)


def test_split_recombines_exhaustively_at_small_width():
    n = 10
    for value in range(1 << n):
        word = Word(value, n)
        for m in range(n + 1):
            hi, lo = split_operand(word, m)
            assert (hi.value << m) + lo.value == value, f"{value=} {m=}"


def test_split_recombines_randomized_at_full_width():
    rng = random.Random(0)
    for _ in range(2000):
        value = rng.getrandbits(64)
        m = rng.randint(0, 64)
        hi, lo = split_operand(Word(value, 64), m)
        assert (hi.value << m) + lo.value == value


def test_split_beyond_width_is_rejected():
    with pytest.raises(ConfigurationError):
        split_operand(Word(3, 4), 5)


def test_validate_accepts_reference_configuration():
    cfg = AdderConfig(AdderKind.HALOC, 32, 10, 5)
    assert validate_config(cfg) is cfg


@pytest.mark.parametrize(
    "cfg,field",
    [
        (AdderConfig(AdderKind.HALOC, 8, 1, 0), "m"),
        (AdderConfig(AdderKind.HALOC, 8, 4, 3), "k"),
        (AdderConfig(AdderKind.LOA, 8, 4, 2), "k"),
        (AdderConfig(AdderKind.EXACT, 8, 2, 0), "m"),
        (AdderConfig(AdderKind.OLOCA, 8, 9, 0), "m"),
        (AdderConfig(AdderKind.OLOCA, 0, 0, 0), "n"),
    ],
)
def test_validate_reports_offending_field(cfg, field):
    with pytest.raises(ConfigurationError) as excinfo:
        validate_config(cfg)
    fields = [name for name, _ in excinfo.value.violations]
    assert field in fields, f"expected a violation on {field}, got {fields}"


def test_validate_allows_degenerate_partition_for_every_kind():
    for kind in AdderKind:
        validate_config(AdderConfig(kind, 8, 0, 0))
