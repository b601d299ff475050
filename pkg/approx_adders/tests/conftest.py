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


import numpy as np
import pytest

from approx_adders.pgm import GrayImage


@pytest.fixture(autouse=True)
def no_progress_bars(monkeypatch):
    monkeypatch.setenv("AXADD_NO_PROGRESS", "1")


def synthetic_image(size: int, seed: int = 0) -> GrayImage:
    """Smooth gradients plus mild texture, similar in spirit to a natural photo."""
    rng = np.random.default_rng(seed)
    y, x = np.mgrid[0:size, 0:size].astype(np.float64)
    base = 120.0 + 60.0 * np.sin(x / 5.0) + 45.0 * np.cos(y / 7.0) + 0.3 * (x - y)
    noise = rng.normal(0.0, 6.0, size=(size, size))
    return GrayImage(np.clip(np.round(base + noise), 0, 255).astype(np.uint8))


@pytest.fixture(scope="module")
def test_image() -> GrayImage:
    return synthetic_image(64)


@pytest.fixture(scope="module")
def small_image() -> GrayImage:
    return synthetic_image(16, seed=1)


@pytest.fixture(scope="session")
def large_image() -> GrayImage:
    return synthetic_image(512)
