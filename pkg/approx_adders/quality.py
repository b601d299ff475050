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
import math
from dataclasses import dataclass
from enum import Enum

import numpy as np
from scipy import ndimage

from approx_adders.defaults import (
    QUALITY_ACCEPTABLE,
    QUALITY_HIGH,
    QUALITY_LOW,
    ImageDefaults,
)
from approx_adders.errors import ImageDimensionError
from approx_adders.pgm import GrayImage

logger = logging.getLogger(__name__)


class QualityLabel(str, Enum):
    HIGH = "high"
    ACCEPTABLE = "acceptable"
    LOW = "low"
    POOR = "poor"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class QualityReport:
    psnr_db: float
    ssim: float
    label: QualityLabel


def _check_same_shape(ref: GrayImage, test: GrayImage) -> None:
    if ref.pixels.shape != test.pixels.shape:
        raise ImageDimensionError(
            f"Image dimensions differ: {ref.width}x{ref.height} vs {test.width}x{test.height}"
        )


def psnr(ref: GrayImage, test: GrayImage) -> float:
    """Peak signal-to-noise ratio in dB; identical images return the cap."""
    _check_same_shape(ref, test)
    diff = ref.pixels.astype(np.float64) - test.pixels.astype(np.float64)
    mse = float(np.mean(diff * diff))
    if mse == 0.0:
        return ImageDefaults.psnr_cap_db
    peak = float(ImageDefaults.dynamic_range)
    return min(10.0 * math.log10(peak * peak / mse), ImageDefaults.psnr_cap_db)


def gaussian_window(
    size: int = ImageDefaults.ssim_window, sigma: float = ImageDefaults.ssim_sigma
) -> np.ndarray:
    """Normalised 1-D Gaussian taps; the 2-D window is their outer product."""
    x = np.arange(size, dtype=np.float64) - (size - 1) / 2.0
    taps = np.exp(-(x * x) / (2.0 * sigma * sigma))
    return taps / taps.sum()


def _local_mean(x: np.ndarray, taps: np.ndarray) -> np.ndarray:
    # separable filter, then keep only windows fully inside the image
    filtered = ndimage.correlate1d(x, taps, axis=0, mode="constant")
    filtered = ndimage.correlate1d(filtered, taps, axis=1, mode="constant")
    r = len(taps) // 2
    return filtered[r : x.shape[0] - r, r : x.shape[1] - r]


def ssim_map(ref: GrayImage, test: GrayImage) -> np.ndarray:
    _check_same_shape(ref, test)
    size = ImageDefaults.ssim_window
    if ref.width < size or ref.height < size:
        raise ImageDimensionError(
            f"SSIM needs images of at least {size}x{size}, got {ref.width}x{ref.height}"
        )
    taps = gaussian_window(size)
    c1 = (ImageDefaults.ssim_k1 * ImageDefaults.dynamic_range) ** 2
    c2 = (ImageDefaults.ssim_k2 * ImageDefaults.dynamic_range) ** 2

    x = ref.pixels.astype(np.float64)
    y = test.pixels.astype(np.float64)
    mu_x = _local_mean(x, taps)
    mu_y = _local_mean(y, taps)
    var_x = _local_mean(x * x, taps) - mu_x * mu_x
    var_y = _local_mean(y * y, taps) - mu_y * mu_y
    cov = _local_mean(x * y, taps) - mu_x * mu_y

    numerator = (2.0 * mu_x * mu_y + c1) * (2.0 * cov + c2)
    denominator = (mu_x * mu_x + mu_y * mu_y + c1) * (var_x + var_y + c2)
    return numerator / denominator


def ssim(ref: GrayImage, test: GrayImage) -> float:
    """Mean structural similarity over 11x11 Gaussian windows (sigma 1.5)."""
    return float(np.mean(ssim_map(ref, test)))


def quality_label(value: float) -> QualityLabel:
    if value > QUALITY_HIGH:
        return QualityLabel.HIGH
    if value > QUALITY_ACCEPTABLE:
        return QualityLabel.ACCEPTABLE
    if value >= QUALITY_LOW:
        return QualityLabel.LOW
    return QualityLabel.POOR


def assess(ref: GrayImage, test: GrayImage) -> QualityReport:
    value = ssim(ref, test)
    return QualityReport(
        psnr_db=psnr(ref, test), ssim=value, label=quality_label(value)
    )
