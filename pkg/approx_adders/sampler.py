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
Deterministic operand streams for Monte Carlo error analysis.

A run of `samples` draws is cut into fixed-size chunks. Chunk i always draws
from its own counter-based Philox stream keyed by (i, seed), so the operands
a chunk sees do not depend on how chunks are spread over workers.
"""

import logging
from typing import List, Tuple

import numpy as np
from numpy.random import Generator

from approx_adders.defaults import ErrorAnalysisDefaults
from approx_adders.errors import ConfigurationError
from approx_adders.words import mask

logger = logging.getLogger(__name__)

SEED_BITS = 64


def check_seed(seed: int) -> int:
    if not 0 <= seed < (1 << SEED_BITS):
        raise ConfigurationError(
            f"Seed {seed} is out of range", [("seed", f"must be in [0, 2^{SEED_BITS})")]
        )
    return seed


def chunk_rng(seed: int, chunk: int) -> Generator:
    check_seed(seed)
    return np.random.Generator(np.random.Philox(key=(chunk << SEED_BITS) | seed))


def chunk_sizes(
    samples: int, chunk_size: int = ErrorAnalysisDefaults.chunk_size
) -> List[int]:
    if samples < 1:
        raise ConfigurationError(
            f"Need at least one sample, got {samples}", [("samples", str(samples))]
        )
    full, rest = divmod(samples, chunk_size)
    return [chunk_size] * full + ([rest] if rest else [])


def draw_operands(rng: Generator, n: int, size: int) -> Tuple[np.ndarray, np.ndarray]:
    """Uniform operand pair arrays over [0, 2**n)."""
    high = mask(n)
    a = rng.integers(0, high, size=size, dtype=np.uint64, endpoint=True)
    b = rng.integers(0, high, size=size, dtype=np.uint64, endpoint=True)
    return a, b
