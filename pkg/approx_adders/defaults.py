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

import os


def _get_int_from_env(name: str, default: int) -> int:
    """
    Read an integer override from the environment.
    Falls back to the default when the variable is unset or empty.
    """
    value = os.environ.get(name, "")
    return int(value) if value.strip() else default


# Source of truth for toolkit defaults
class AdderDefaults:
    n = 32  # total adder width
    m = 10  # approximate LSM width
    k = 5  # constant-ones section width
    max_width = 64
    msm_style = "ripple"  # ["ripple", "lookahead"]
    lookahead_group = 4  # bits per carry-lookahead block


class ErrorAnalysisDefaults:
    samples = _get_int_from_env("AXADD_SAMPLES", 10**6)
    seed = 0
    workers = 1
    chunk_size = 1 << 20  # samples per deterministic substream
    exhaustive_chunk = 1 << 22  # lower-part pairs evaluated per array pass
    max_exhaustive_bits = 26  # refuse exhaustive enumeration above 2m bits
    max_array_width = 63  # uint64 arrays must hold the n+1 bit sum


class ImageDefaults:
    frac_bits = 15
    psnr_cap_db = 100.0
    ssim_window = 11
    ssim_sigma = 1.5
    ssim_k1 = 0.01
    ssim_k2 = 0.03
    dynamic_range = 255
    max_product_bits = 62  # int64 headroom for the exact twiddle multiply


class ReportDefaults:
    significant_digits = 9
    csv_columns = [
        "kind",
        "n",
        "m",
        "k",
        "med",
        "mred",
        "error_rate",
        "max_ed",
        "transistors",
        "ssim",
        "psnr",
        "energy_fj",
        "normalized_energy",
    ]
    # published average switching energy per operation (fJ); ingested, never computed
    reference_energy_fj = {
        "exact": 66.25,
        "loa": 55.05,
        "loawa": 53.42,
        "oloca": 51.71,
        "herloa": 60.04,
        "mherloa": 52.92,
        "haloc": 51.45,
    }


# SSIM quality bands, lower bounds (exclusive for high/acceptable)
QUALITY_HIGH = 0.90
QUALITY_ACCEPTABLE = 0.70
QUALITY_LOW = 0.30
