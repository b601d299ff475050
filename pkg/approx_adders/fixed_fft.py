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
Fixed-point radix-2 FFT whose butterfly additions run through an adder model.

Values are two's-complement integers of `total_bits` bits with `frac_bits`
fractional bits, held in int64 arrays. Twiddle multiplication is exact with
round-to-nearest; every butterfly add and subtract of a real or imaginary
component goes through `approx_add_array` and saturates on overflow.
"""

import logging
from dataclasses import dataclass
from typing import Tuple

import numpy as np

from approx_adders.defaults import ImageDefaults
from approx_adders.errors import FixedFormatError, ImageDimensionError
from approx_adders.models import approx_add_array
from approx_adders.pgm import MAXVAL, GrayImage
from approx_adders.words import AdderConfig, mask, validate_config

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FixedFormat:
    total_bits: int
    frac_bits: int = ImageDefaults.frac_bits

    def __post_init__(self) -> None:
        if not 0 < self.frac_bits < self.total_bits:
            raise FixedFormatError(
                f"Invalid fixed-point format Q{self.total_bits}.{self.frac_bits}",
                [("frac_bits", f"must be in (0, {self.total_bits})")],
            )
        if self.total_bits + self.frac_bits > ImageDefaults.max_product_bits:
            raise FixedFormatError(
                "Twiddle products would not fit in 64-bit integers",
                [
                    (
                        "total_bits",
                        f"{self.total_bits} + {self.frac_bits} > "
                        f"{ImageDefaults.max_product_bits}",
                    )
                ],
            )
        if MAXVAL << self.frac_bits > self.max_value:
            raise FixedFormatError(
                f"{self.total_bits}-bit words cannot hold pixel value {MAXVAL} "
                f"with {self.frac_bits} fractional bits",
                [("frac_bits", f"at most {self.total_bits - 9} for 8-bit pixels")],
            )

    @property
    def max_value(self) -> int:
        return (1 << (self.total_bits - 1)) - 1

    @property
    def min_value(self) -> int:
        return -(1 << (self.total_bits - 1))

    @property
    def one(self) -> int:
        return 1 << self.frac_bits

    def saturate(self, x: np.ndarray) -> np.ndarray:
        return np.clip(x, self.min_value, self.max_value)

    def to_fixed(self, x: np.ndarray) -> np.ndarray:
        scaled = np.round(np.asarray(x, dtype=np.float64) * self.one)
        return self.saturate(scaled).astype(np.int64)

    def from_fixed(self, x: np.ndarray) -> np.ndarray:
        return np.asarray(x, dtype=np.float64) / self.one

    def round_shift(self, x: np.ndarray) -> np.ndarray:
        """Drop the fractional bits of a double-width product, rounding half up."""
        return (x + (1 << (self.frac_bits - 1))) >> self.frac_bits


@dataclass(frozen=True, eq=False)
class ComplexFx:
    re: np.ndarray
    im: np.ndarray

    def __post_init__(self) -> None:
        if self.re.shape != self.im.shape:
            raise ImageDimensionError(
                f"Real and imaginary parts differ in shape: {self.re.shape} vs {self.im.shape}"
            )

    @property
    def shape(self) -> Tuple[int, ...]:
        return tuple(self.re.shape)


def check_format(cfg: AdderConfig, fmt: FixedFormat) -> None:
    validate_config(cfg)
    if fmt.total_bits != cfg.n:
        raise FixedFormatError(
            f"Fixed-point words must match the adder width n={cfg.n}",
            [("total_bits", str(fmt.total_bits))],
        )


def _to_signed(x: np.ndarray, bits: int) -> np.ndarray:
    signed = (x & np.uint64(mask(bits))).astype(np.int64)
    return np.where(signed >= (1 << (bits - 1)), signed - (1 << bits), signed)


def fx_add(
    cfg: AdderConfig, fmt: FixedFormat, x: np.ndarray, y: np.ndarray
) -> np.ndarray:
    """x + y through the adder model, saturating on signed overflow."""
    n = fmt.total_bits
    ux = x.astype(np.uint64) & np.uint64(mask(n))
    uy = y.astype(np.uint64) & np.uint64(mask(n))
    total = _to_signed(approx_add_array(cfg, ux, uy), n)
    # overflow: operands share a sign that the result lost
    overflow = ((x < 0) == (y < 0)) & ((total < 0) != (x < 0))
    return np.where(overflow, np.where(x < 0, fmt.min_value, fmt.max_value), total)


def fx_sub(
    cfg: AdderConfig, fmt: FixedFormat, x: np.ndarray, y: np.ndarray
) -> np.ndarray:
    """x - y as x + (-y); the negation is exact and saturates at the maximum."""
    return fx_add(cfg, fmt, x, fmt.saturate(-y))


def _bit_reverse(size: int) -> np.ndarray:
    bits = size.bit_length() - 1
    index = np.arange(size)
    reversed_index = np.zeros(size, dtype=np.int64)
    for bit in range(bits):
        reversed_index |= ((index >> bit) & 1) << (bits - 1 - bit)
    return reversed_index


def _twiddles(fmt: FixedFormat, size: int, sign: int) -> Tuple[np.ndarray, np.ndarray]:
    angle = sign * 2.0 * np.pi * np.arange(size // 2) / size
    return fmt.to_fixed(np.cos(angle)), fmt.to_fixed(np.sin(angle))


def _is_power_of_two(x: int) -> bool:
    return x > 0 and (x & (x - 1)) == 0


def fft_rows(
    cfg: AdderConfig,
    fmt: FixedFormat,
    data: ComplexFx,
    inverse: bool = False,
    scale: bool = True,
) -> ComplexFx:
    """
    Radix-2 decimation-in-time transform along the last axis of a 2-D field.
    With `scale`, both butterfly inputs are shifted right by one bit per stage,
    so a forward transform returns the DFT divided by the row length.
    """
    rows, size = data.shape
    if not _is_power_of_two(size):
        raise ImageDimensionError(f"Transform length {size} is not a power of two")
    order = _bit_reverse(size)
    re = data.re[:, order]
    im = data.im[:, order]
    sign = 1 if inverse else -1

    span = 2
    while span <= size:
        half = span // 2
        tw_re, tw_im = _twiddles(fmt, span, sign)
        blocks_re = re.reshape(rows, size // span, span)
        blocks_im = im.reshape(rows, size // span, span)
        u_re, u_im = blocks_re[..., :half], blocks_im[..., :half]
        v_re, v_im = blocks_re[..., half:], blocks_im[..., half:]

        # exact complex multiply, one rounding per component
        t_re = fmt.saturate(fmt.round_shift(v_re * tw_re - v_im * tw_im))
        t_im = fmt.saturate(fmt.round_shift(v_re * tw_im + v_im * tw_re))
        if scale:
            u_re, u_im = u_re >> 1, u_im >> 1
            t_re, t_im = t_re >> 1, t_im >> 1

        re = np.concatenate(
            [fx_add(cfg, fmt, u_re, t_re), fx_sub(cfg, fmt, u_re, t_re)], axis=-1
        ).reshape(rows, size)
        im = np.concatenate(
            [fx_add(cfg, fmt, u_im, t_im), fx_sub(cfg, fmt, u_im, t_im)], axis=-1
        ).reshape(rows, size)
        span *= 2
    return ComplexFx(re, im)


def _transpose(data: ComplexFx) -> ComplexFx:
    return ComplexFx(np.ascontiguousarray(data.re.T), np.ascontiguousarray(data.im.T))


def fft2d(img: GrayImage, cfg: AdderConfig, fmt: FixedFormat) -> ComplexFx:
    """Row-column 2-D forward transform, scaled by 1/(width*height)."""
    check_format(cfg, fmt)
    if not (_is_power_of_two(img.width) and _is_power_of_two(img.height)):
        raise ImageDimensionError(
            f"Image dimensions {img.width}x{img.height} must be powers of two"
        )
    re = img.pixels.astype(np.int64) << fmt.frac_bits
    field = fft_rows(cfg, fmt, ComplexFx(re, np.zeros_like(re)))
    return _transpose(fft_rows(cfg, fmt, _transpose(field)))


def ifft2d(field: ComplexFx, cfg: AdderConfig, fmt: FixedFormat) -> GrayImage:
    """Unscaled 2-D inverse transform, rounded and clamped to 8-bit pixels."""
    check_format(cfg, fmt)
    height, width = field.shape
    if not (_is_power_of_two(width) and _is_power_of_two(height)):
        raise ImageDimensionError(
            f"Field dimensions {width}x{height} must be powers of two"
        )
    columns = _transpose(
        fft_rows(cfg, fmt, _transpose(field), inverse=True, scale=False)
    )
    spatial = fft_rows(cfg, fmt, columns, inverse=True, scale=False)
    pixels = np.clip(fmt.round_shift(spatial.re), 0, MAXVAL)
    return GrayImage(pixels.astype(np.uint8))
