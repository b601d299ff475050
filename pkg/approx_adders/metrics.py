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
Error metrics of approximate adders: mean error distance (MED), mean relative
error distance (MRED), error rate and maximum error distance.

The error distance of every model depends only on the low m operand bits,
so MED, error rate and max ED are computed exactly by enumerating the 2**(2m)
lower-part pairs. MRED needs the full accurate sum and is sampled.
"""

import logging
import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from enum import Enum
from typing import Callable, Dict, Iterable, List, Optional, Tuple

import numpy as np
from tqdm import tqdm

from approx_adders.defaults import AdderDefaults, ErrorAnalysisDefaults
from approx_adders.errors import EnumerationTooLargeError
from approx_adders.logging_utils import progress_disabled
from approx_adders.models import (
    approx_add,
    approx_add_array,
    approx_add_wide,
    exact_add_array,
    exact_add_wide,
    family_config,
)
from approx_adders.sampler import check_seed, chunk_rng, chunk_sizes, draw_operands
from approx_adders.words import AdderConfig, AdderKind, Word, exact_add, mask

logger = logging.getLogger(__name__)


class StatsMode(str, Enum):
    EXHAUSTIVE_LSM = "exhaustive_lsm"
    MONTE_CARLO = "monte_carlo"
    COMBINED = "combined"


@dataclass(frozen=True)
class ErrorStats:
    med: float
    mred: Optional[float]
    error_rate: float
    max_ed: int
    sample_count: int
    mode: StatsMode
    seed: Optional[int] = None
    ed_std: float = 0.0
    mean_error: float = 0.0
    mred_excluded: int = 0


# approximate designs in report order
APPROX_KINDS: Tuple[AdderKind, ...] = (
    AdderKind.LOA,
    AdderKind.LOAWA,
    AdderKind.OLOCA,
    AdderKind.HERLOA,
    AdderKind.MHERLOA,
    AdderKind.HALOC,
)


def error_distance(cfg: AdderConfig, a: Word, b: Word) -> int:
    return abs(exact_add(a, b).value - approx_add(cfg, a, b).value)


def expected_mred(med: float, n: int) -> float:
    """
    MRED implied by a MED under uniform n-bit operands, assuming ED is
    independent of the accurate sum: MED * E[1/S] with E[1/S] = 2 ln 2 / 2**n.
    """
    return med * 2.0 * math.log(2.0) / float(1 << n)


@dataclass(frozen=True)
class _Partial:
    count: int
    ed_sum: float
    ed_sq_sum: float
    signed_sum: float
    errors: int
    max_ed: int
    rel_sum: float
    rel_count: int


def _partial(
    exact: np.ndarray, approx: np.ndarray, accurate: Optional[np.ndarray] = None
) -> _Partial:
    """
    Error sums of one chunk. `accurate` holds the full accurate sums as float64
    and enables the MRED terms; zero sums are skipped there.
    """
    ed = np.where(exact >= approx, exact - approx, approx - exact)
    ed_f = ed.astype(np.float64)
    signed = np.where(exact >= approx, ed_f, -ed_f)
    rel_sum, rel_count = 0.0, 0
    if accurate is not None:
        nonzero = accurate != 0
        rel_count = int(np.count_nonzero(nonzero))
        rel_sum = float((ed_f[nonzero] / accurate[nonzero]).sum())
    return _Partial(
        count=int(ed.size),
        ed_sum=float(ed_f.sum()),
        ed_sq_sum=float((ed_f * ed_f).sum()),
        signed_sum=float(signed.sum()),
        errors=int(np.count_nonzero(ed)),
        max_ed=int(ed.max()) if ed.size else 0,
        rel_sum=rel_sum,
        rel_count=rel_count,
    )


def _run_chunks(
    work: Callable[[int], _Partial], num_chunks: int, workers: int, desc: str
) -> List[_Partial]:
    """Evaluate chunks in index order; results are collected in that order."""
    bar = tqdm(
        total=num_chunks, desc=desc, disable=progress_disabled() or num_chunks < 2
    )
    results: List[_Partial] = []
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(work, range(num_chunks)):
                results.append(part)
                bar.update(1)
    else:
        for chunk in range(num_chunks):
            results.append(work(chunk))
            bar.update(1)
    bar.close()
    return results


def _aggregate(
    parts: Iterable[_Partial],
    mode: StatsMode,
    seed: Optional[int],
    relative: bool,
) -> ErrorStats:
    parts = list(parts)
    count = sum(p.count for p in parts)
    ed_sum = math.fsum(p.ed_sum for p in parts)
    med = ed_sum / count
    if count > 1:
        variance = (math.fsum(p.ed_sq_sum for p in parts) - count * med * med) / (
            count - 1
        )
        ed_std = math.sqrt(max(variance, 0.0))
    else:
        ed_std = 0.0

    mred: Optional[float] = None
    excluded = 0
    if relative:
        rel_count = sum(p.rel_count for p in parts)
        excluded = count - rel_count
        mred = math.fsum(p.rel_sum for p in parts) / rel_count if rel_count else None
        if excluded:
            logger.warning(f"{excluded} samples with accurate sum 0 excluded from MRED")

    return ErrorStats(
        med=med,
        mred=mred,
        error_rate=sum(p.errors for p in parts) / count,
        max_ed=max(p.max_ed for p in parts),
        sample_count=count,
        mode=mode,
        seed=seed,
        ed_std=ed_std,
        mean_error=math.fsum(p.signed_sum for p in parts) / count,
        mred_excluded=excluded,
    )


def _exact_stats(count: int, mode: StatsMode, seed: Optional[int]) -> ErrorStats:
    return ErrorStats(
        med=0.0,
        mred=0.0 if mode is not StatsMode.EXHAUSTIVE_LSM else None,
        error_rate=0.0,
        max_ed=0,
        sample_count=count,
        mode=mode,
        seed=seed,
    )


def exhaustive_lsm_stats(
    cfg: AdderConfig, workers: int = ErrorAnalysisDefaults.workers
) -> ErrorStats:
    """
    Exact MED, error rate and max ED over uniform operands, by enumerating
    every pair of m-bit lower parts. MRED is not computed in this mode.
    """
    if cfg.is_exact:
        return _exact_stats(1, StatsMode.EXHAUSTIVE_LSM, None)
    m = cfg.m
    if 2 * m > ErrorAnalysisDefaults.max_exhaustive_bits:
        raise EnumerationTooLargeError(
            f"Enumerating 2^{2 * m} lower-part pairs is intractable, "
            "use Monte Carlo sampling instead",
            [("m", f"2m = {2 * m} > {ErrorAnalysisDefaults.max_exhaustive_bits}")],
        )

    # ED only depends on the low m bits, so an m-bit adder (carry-out = Cin) suffices
    lsm_cfg = replace(cfg, n=m)
    total = 1 << (2 * m)
    step = ErrorAnalysisDefaults.exhaustive_chunk
    num_chunks = -(-total // step)

    def work(chunk: int) -> _Partial:
        index = np.arange(
            chunk * step, min((chunk + 1) * step, total), dtype=np.uint64
        )
        a = index >> np.uint64(m)
        b = index & np.uint64(mask(m))
        return _partial(exact_add_array(m, a, b), approx_add_array(lsm_cfg, a, b))

    start = time.perf_counter()
    stats = _aggregate(
        _run_chunks(work, num_chunks, workers, f"exhaustive {cfg.kind.value}"),
        StatsMode.EXHAUSTIVE_LSM,
        None,
        relative=False,
    )
    logger.debug(
        f"Enumerated {total} pairs for {cfg} in {time.perf_counter() - start:.2f}s"
    )
    return stats


def _wide_partial(cfg: AdderConfig, a: np.ndarray, b: np.ndarray) -> _Partial:
    """
    Chunk sums for 64-bit operands, whose sums do not fit in uint64. The ED is
    taken from an m-bit adder over the low operand bits and the MRED divides by
    a float64 accurate sum.
    """
    accurate = a.astype(np.float64) + b.astype(np.float64)
    m = cfg.m
    if m > ErrorAnalysisDefaults.max_array_width:
        return _partial(
            exact_add_wide(cfg.n, a, b), approx_add_wide(cfg, a, b), accurate
        )
    low = np.uint64(mask(m))
    a_lo, b_lo = a & low, b & low
    return _partial(
        exact_add_array(m, a_lo, b_lo),
        approx_add_array(replace(cfg, n=m), a_lo, b_lo),
        accurate,
    )


def monte_carlo_stats(
    cfg: AdderConfig,
    samples: int = ErrorAnalysisDefaults.samples,
    seed: int = ErrorAnalysisDefaults.seed,
    workers: int = ErrorAnalysisDefaults.workers,
) -> ErrorStats:
    """
    MED, MRED, error rate and max ED over `samples` uniform operand pairs.
    Samples whose accurate sum is 0 are left out of the MRED mean only and
    counted in `mred_excluded`. Results are identical for any worker count.
    """
    sizes = chunk_sizes(samples)
    if cfg.is_exact:
        check_seed(seed)
        return _exact_stats(samples, StatsMode.MONTE_CARLO, seed)

    wide = cfg.n > ErrorAnalysisDefaults.max_array_width

    def work(chunk: int) -> _Partial:
        a, b = draw_operands(chunk_rng(seed, chunk), cfg.n, sizes[chunk])
        if wide:
            return _wide_partial(cfg, a, b)
        exact = exact_add_array(cfg.n, a, b)
        return _partial(exact, approx_add_array(cfg, a, b), exact.astype(np.float64))

    start = time.perf_counter()
    stats = _aggregate(
        _run_chunks(work, len(sizes), workers, f"sampling {cfg.kind.value}"),
        StatsMode.MONTE_CARLO,
        seed,
        relative=True,
    )
    logger.debug(
        f"Sampled {samples} pairs for {cfg} in {time.perf_counter() - start:.2f}s"
    )
    return stats


def combined_stats(
    cfg: AdderConfig,
    samples: int = ErrorAnalysisDefaults.samples,
    seed: int = ErrorAnalysisDefaults.seed,
    workers: int = ErrorAnalysisDefaults.workers,
) -> ErrorStats:
    """
    Exhaustive MED, error rate and max ED joined with a sampled MRED. Falls
    back to sampling everything when the lower part is too wide to enumerate.
    """
    sampled = monte_carlo_stats(cfg, samples, seed, workers)
    if 2 * cfg.m > ErrorAnalysisDefaults.max_exhaustive_bits:
        logger.warning(
            f"m={cfg.m} is too wide to enumerate, reporting sampled MED for {cfg}"
        )
        return sampled
    exhaustive = exhaustive_lsm_stats(cfg, workers)
    return replace(
        exhaustive,
        mred=sampled.mred,
        mred_excluded=sampled.mred_excluded,
        sample_count=sampled.sample_count,
        mode=StatsMode.COMBINED,
        seed=seed,
    )


def table1_error_report(
    n: int = AdderDefaults.n,
    m: int = AdderDefaults.m,
    k: int = AdderDefaults.k,
    samples: int = ErrorAnalysisDefaults.samples,
    seed: int = ErrorAnalysisDefaults.seed,
    workers: int = ErrorAnalysisDefaults.workers,
) -> Dict[AdderKind, ErrorStats]:
    report: Dict[AdderKind, ErrorStats] = {}
    for kind in APPROX_KINDS:
        cfg = family_config(kind, n, m, k)
        report[kind] = combined_stats(cfg, samples, seed, workers)
        logger.info(
            f"{cfg}: med={report[kind].med:.4f} mred={report[kind].mred} "
            f"error_rate={report[kind].error_rate:.4f}"
        )
    return report
