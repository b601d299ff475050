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
import os
import sys
from typing import TextIO

import pandas as pd
from tabulate import tabulate

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
DATE_FORMAT = "%Y-%m-%d %H:%M:%S"


def configure_logging(stream: TextIO | None = None) -> None:
    """
    A single place to configure logging for the toolkit.

    Diagnostics always go to stderr so that report output on stdout stays
    byte-identical between runs.
    """
    # First, remove any existing handlers to avoid duplication
    root_logger = logging.getLogger()
    for handler in root_logger.handlers[:]:
        root_logger.removeHandler(handler)

    handler = logging.StreamHandler(stream if stream is not None else sys.stderr)
    handler.setFormatter(logging.Formatter(LOG_FORMAT, DATE_FORMAT))
    root_logger.addHandler(handler)
    root_logger.setLevel(log_level_mapping(os.environ.get("AXADD_LOG", "info")))


def log_level_mapping(level: str) -> int:
    """
    The AXADD_LOG variable is set using "debug", "info", "warn", ...
    This function maps those to the appropriate logging level and defaults to INFO
    if the variable is not set or a bad value.
    """
    level = level.lower()
    if level == "debug":
        return logging.DEBUG
    elif level == "info":
        return logging.INFO
    elif level == "warn" or level == "warning":
        return logging.WARNING
    elif level == "error":
        return logging.ERROR
    elif level == "critical":
        return logging.CRITICAL
    else:
        return logging.INFO


def get_bool_env_var(name: str, default: str = "false") -> bool:
    value = os.getenv(name, default)
    value = value.lower()

    truthy_values = ("true", "1")
    falsy_values = ("false", "0")

    if (value not in truthy_values) and (value not in falsy_values):
        logging.warning(
            f"The environment variable {name} has an unrecognized value={value}, treating as false"
        )

    return value in truthy_values


def progress_disabled() -> bool:
    return get_bool_env_var("AXADD_NO_PROGRESS")


def format_table(df: pd.DataFrame) -> str:
    """
    Render a report frame in the pretty tabular layout used on the terminal.
    Missing values are shown as blanks.
    """
    return tabulate(
        df.astype(object).where(df.notna(), ""),
        headers="keys",
        tablefmt="pretty",
        showindex=False,
        disable_numparse=True,
    )
