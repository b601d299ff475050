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
import time
from typing import Tuple

from approx_adders.fixed_fft import FixedFormat, fft2d, ifft2d
from approx_adders.pgm import GrayImage
from approx_adders.quality import QualityReport, assess
from approx_adders.words import AdderConfig

logger = logging.getLogger(__name__)


def reconstruct(img: GrayImage, cfg: AdderConfig, fmt: FixedFormat) -> GrayImage:
    """FFT followed by IFFT, both directions adding through the same adder."""
    return ifft2d(fft2d(img, cfg, fmt), cfg, fmt)


def image_experiment(
    img: GrayImage, cfg: AdderConfig, fmt: FixedFormat
) -> Tuple[GrayImage, QualityReport]:
    start = time.perf_counter()
    rebuilt = reconstruct(img, cfg, fmt)
    report = assess(img, rebuilt)
    logger.info(
        f"Reconstructed {img.width}x{img.height} image with {cfg} in "
        f"{time.perf_counter() - start:.2f}s: ssim={report.ssim:.4f} "
        f"psnr={report.psnr_db:.2f}dB ({report.label})"
    )
    return rebuilt, report
