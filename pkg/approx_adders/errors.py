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
Exception hierarchy shared by every module of the toolkit.
"""

from typing import Iterable, List, Tuple


class AdderToolkitError(Exception):
    """Base class for all errors raised by approx_adders."""


class ConfigurationError(AdderToolkitError, ValueError):
    """
    An adder configuration, word width or table entry is invalid.

    Args:
        message: Human readable summary.
        violations: (field, reason) pairs, one per violated invariant.
    """

    def __init__(
        self, message: str, violations: Iterable[Tuple[str, str]] = ()
    ) -> None:
        self.violations: List[Tuple[str, str]] = list(violations)
        if self.violations:
            details = "; ".join(
                f"{field}: {reason}" for field, reason in self.violations
            )
            message = f"{message} ({details})"
        super().__init__(message)


class WidthMismatchError(ConfigurationError):
    """Operands (or netlist ports) disagree on the word width."""


class EnumerationTooLargeError(ConfigurationError):
    """Exhaustive enumeration was requested for an intractably wide LSM."""


class CostTableError(ConfigurationError):
    """A cell cost table is malformed or misses an entry needed by a netlist."""


class NetlistError(AdderToolkitError):
    """A netlist violates its structural invariants."""


class PGMError(AdderToolkitError, ValueError):
    """Base class for PGM decoding failures."""


class PGMHeaderError(PGMError):
    """Magic number, dimensions or maxval could not be parsed."""


class UnsupportedDepthError(PGMError):
    """Only 8-bit graymaps (maxval 255) are supported."""


class TruncatedPayloadError(PGMError):
    """The pixel payload is shorter than width x height."""


class ImageDimensionError(AdderToolkitError, ValueError):
    """Image dimensions are incompatible with the requested operation."""


class FixedFormatError(ConfigurationError):
    """A fixed-point format cannot hold the values it is asked to carry."""


class EnergyFileError(ConfigurationError):
    """An energy reference file is malformed or names an unknown adder kind."""


class JoinError(AdderToolkitError):
    """Report rows could not be joined with reference data."""
