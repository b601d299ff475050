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
8-bit grayscale images and their PGM (P2 ASCII / P5 binary) encoding.
"""

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import List, Tuple, Union

import numpy as np

from approx_adders.errors import (
    ImageDimensionError,
    PGMHeaderError,
    TruncatedPayloadError,
    UnsupportedDepthError,
)

logger = logging.getLogger(__name__)

MAXVAL = 255
WHITESPACE = b" \t\n\r\x0b\x0c"


@dataclass(frozen=True, eq=False)
class GrayImage:
    """Row-major 8-bit raster of shape (height, width)."""

    pixels: np.ndarray

    def __post_init__(self) -> None:
        pixels = np.asarray(self.pixels)
        if pixels.ndim != 2 or pixels.size == 0:
            raise ImageDimensionError(
                f"Expected a non-empty 2-D raster, got shape {pixels.shape}"
            )
        if pixels.dtype != np.uint8:
            if pixels.min() < 0 or pixels.max() > MAXVAL:
                raise ImageDimensionError(f"Pixel values must lie in [0, {MAXVAL}]")
            pixels = pixels.astype(np.uint8)
        pixels = np.ascontiguousarray(pixels)
        pixels.setflags(write=False)
        object.__setattr__(self, "pixels", pixels)

    @property
    def height(self) -> int:
        return int(self.pixels.shape[0])

    @property
    def width(self) -> int:
        return int(self.pixels.shape[1])

    def same_pixels(self, other: "GrayImage") -> bool:
        return bool(np.array_equal(self.pixels, other.pixels))


def _header_tokens(data: bytes, count: int) -> Tuple[List[bytes], int]:
    """
    Reads `count` whitespace-separated header tokens, skipping `#` comments.
    Returns the tokens and the offset just past the last token.
    """
    tokens: List[bytes] = []
    pos = 0
    while len(tokens) < count:
        while pos < len(data) and data[pos] in WHITESPACE:
            pos += 1
        if pos >= len(data):
            raise PGMHeaderError(
                f"Header ended after {len(tokens)} of {count} fields"
            )
        if data[pos : pos + 1] == b"#":
            newline = data.find(b"\n", pos)
            pos = len(data) if newline < 0 else newline + 1
            continue
        start = pos
        while (
            pos < len(data)
            and data[pos] not in WHITESPACE
            and data[pos : pos + 1] != b"#"
        ):
            pos += 1
        tokens.append(data[start:pos])
    return tokens, pos


def load_pgm(data: bytes) -> GrayImage:
    tokens, pos = _header_tokens(data, 4)
    magic = tokens[0]
    if magic not in (b"P2", b"P5"):
        raise PGMHeaderError(f"Unsupported magic number {magic!r}, expected P2 or P5")
    try:
        width, height, maxval = (int(token) for token in tokens[1:])
    except ValueError:
        raise PGMHeaderError(f"Malformed header fields {tokens[1:]!r}") from None
    if width <= 0 or height <= 0:
        raise PGMHeaderError(f"Invalid dimensions {width}x{height}")
    if maxval != MAXVAL:
        raise UnsupportedDepthError(
            f"Only 8-bit graymaps (maxval {MAXVAL}) are supported, got maxval {maxval}"
        )

    count = width * height
    if magic == b"P5":
        # exactly one whitespace byte separates the header from the raster
        payload = data[pos + 1 : pos + 1 + count]
        if len(payload) < count:
            raise TruncatedPayloadError(
                f"Expected {count} pixel bytes, found {len(payload)}"
            )
        pixels = np.frombuffer(payload, dtype=np.uint8)
    else:
        fields = data[pos:].split()
        if len(fields) < count:
            raise TruncatedPayloadError(
                f"Expected {count} pixel values, found {len(fields)}"
            )
        try:
            values = np.array([int(field) for field in fields[:count]], dtype=np.int64)
        except ValueError:
            raise PGMHeaderError("Non-numeric pixel value in P2 payload") from None
        if values.min() < 0 or values.max() > MAXVAL:
            raise UnsupportedDepthError(f"P2 pixel value outside [0, {MAXVAL}]")
        pixels = values.astype(np.uint8)
    return GrayImage(pixels.reshape(height, width))


def save_pgm(img: GrayImage, binary: bool = True) -> bytes:
    header = f"{'P5' if binary else 'P2'}\n{img.width} {img.height}\n{MAXVAL}\n"
    if binary:
        return header.encode("ascii") + img.pixels.tobytes()
    rows = (" ".join(str(int(v)) for v in row) for row in img.pixels)
    return (header + "\n".join(rows) + "\n").encode("ascii")


def read_pgm(path: Union[str, Path]) -> GrayImage:
    img = load_pgm(Path(path).read_bytes())
    logger.info(f"Read {img.width}x{img.height} image from {path}")
    return img


def write_pgm(path: Union[str, Path], img: GrayImage, binary: bool = True) -> None:
    Path(path).write_bytes(save_pgm(img, binary))
    logger.info(f"Wrote {img.width}x{img.height} image to {path}")
