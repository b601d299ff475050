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


import math

import numpy as np
import pytest

from approx_adders.errors import ImageDimensionError
from approx_adders.pgm import GrayImage
from approx_adders.quality import (
    QualityLabel,
    assess,
    gaussian_window,
    psnr,
    quality_label,
    ssim,
    ssim_map,
)


def test_psnr_identical_images_hit_the_cap(test_image):
    assert psnr(test_image, test_image) == 100.0


def test_psnr_extremes():
    black = GrayImage(np.zeros((16, 16), dtype=np.uint8))
    white = GrayImage(np.full((16, 16), 255, dtype=np.uint8))
    assert psnr(black, white) == pytest.approx(0.0, abs=1e-12)


def test_psnr_off_by_one():
    ref = GrayImage(np.full((16, 16), 100, dtype=np.uint8))
    test = GrayImage(np.full((16, 16), 101, dtype=np.uint8))
    assert psnr(ref, test) == pytest.approx(10 * math.log10(255**2), abs=1e-9)
    assert psnr(ref, test) == pytest.approx(48.1308, abs=1e-4)


def test_ssim_of_identical_images(test_image):
    assert ssim(test_image, test_image) == pytest.approx(1.0, abs=1e-12)


def test_ssim_of_inverted_image(test_image):
    inverted = GrayImage(255 - test_image.pixels)
    assert ssim(test_image, inverted) < 0.5


def test_ssim_window_matches_direct_computation(test_image):
    other = GrayImage(np.clip(test_image.pixels.astype(np.int64) + 7, 0, 255))
    taps = gaussian_window()
    weights = np.outer(taps, taps)
    x = test_image.pixels[:11, :11].astype(np.float64)
    y = other.pixels[:11, :11].astype(np.float64)
    mu_x, mu_y = (weights * x).sum(), (weights * y).sum()
    var_x = (weights * x * x).sum() - mu_x**2
    var_y = (weights * y * y).sum() - mu_y**2
    cov = (weights * x * y).sum() - mu_x * mu_y
    c1, c2 = (0.01 * 255) ** 2, (0.03 * 255) ** 2
    expected = ((2 * mu_x * mu_y + c1) * (2 * cov + c2)) / (
        (mu_x**2 + mu_y**2 + c1) * (var_x + var_y + c2)
    )
    values = ssim_map(test_image, other)
    assert values.shape == (54, 54)
    assert values[0, 0] == pytest.approx(expected, abs=1e-9)


def test_gaussian_window_is_normalised():
    taps = gaussian_window()
    assert taps.shape == (11,)
    assert taps.sum() == pytest.approx(1.0)
    np.testing.assert_allclose(taps, taps[::-1])


def test_dimension_errors(test_image, small_image):
    with pytest.raises(ImageDimensionError):
        psnr(test_image, small_image)
    with pytest.raises(ImageDimensionError):
        ssim(test_image, small_image)
    tiny = GrayImage(np.zeros((8, 8), dtype=np.uint8))
    with pytest.raises(ImageDimensionError):
        ssim(tiny, tiny)


@pytest.mark.parametrize(
    "value,label",
    [
        (0.95, QualityLabel.HIGH),
        (0.90, QualityLabel.ACCEPTABLE),
        (0.85, QualityLabel.ACCEPTABLE),
        (0.70, QualityLabel.LOW),
        (0.30, QualityLabel.LOW),
        (0.29, QualityLabel.POOR),
        (-0.2, QualityLabel.POOR),
    ],
)
def test_quality_bands(value, label):
    assert quality_label(value) is label


def test_assess(test_image):
    report = assess(test_image, test_image)
    assert report.label is QualityLabel.HIGH
    assert report.psnr_db == 100.0
    assert str(report.label) == "high"
