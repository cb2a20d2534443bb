#!/usr/bin/python
# -*- coding: utf-8 -*-
# date: 2024/3/12
# author: clarkmonkey@163.com

""" experiment
Monte Carlo estimates of the asymptotic statements, written as CSV.

Every trial owns the random stream keyed by ``(seed, n, trial)``, so the
report does not depend on the number of worker processes.
"""

import csv
import math
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from fractions import Fraction
from functools import partial
from typing import Any, Callable, Dict, Iterable, List, NamedTuple, Optional, Sequence, TextIO, Tuple

import numpy as np
from scipy.stats import chisquare

from .analyze import DEFAULT_ALPHA, has_small_simple_ab_cycle, is_almost_malnormal, is_parabolic
from .codec import emit_text
from .core import CombType, free_rank, is_connected
from .count import silhouette_sizes_of_size
from .enumeration import enum_cyclically_reduced
from .moves import silhouette
from .rng import Rng
from .sample import (
    sample_cyclically_reduced, sample_cyclically_reduced_by_size, sample_permutation_pair,
    sample_rooted_by_size, sample_silhouette,
)
from .util import ExperimentError, get_logger

logger = get_logger(__name__)

EXPERIMENTS: Tuple[str, ...] = (
    'ab-cycles', 'silhouette-size', 'disconnection', 'uniformity', 'rank-preservation',
    'parabolic', 'malnormal', 'rooted-silhouette-size',
)
MODELS: Tuple[str, ...] = ('cyclically-reduced', 'silhouette')
CSV_HEADER: Tuple[str, ...] = ('experiment', 'n', 'trials', 'metric', 'value', 'stderr', 'seed')

_default_trials: int = 2000
_default_workers: int = 1
# samples per graph of the enumerated class
_default_uniformity_factor: int = 200
_default_uniformity_types: Tuple[CombType, ...] = (
    CombType(2, 1, 1, 0, 0), CombType(3, 1, 0, 1, 0), CombType(4, 2, 0, 0, 1),
)
_enumeration_limit: int = 8
_needs_multiple_of_six: Tuple[str, ...] = ('disconnection',)
# largest size for which silhouette-size also reports exact values
_exact_size_limit: int = 60


@dataclass(frozen=True)
class ExperimentSpec:
    """ What to run: one experiment over a list of sizes.

    ``trials`` counts samples per size; for ``uniformity`` it counts samples
    per graph of the enumerated class of each entry of ``types``.
    """

    name: str
    sizes: Tuple[int, ...] = ()
    trials: Optional[int] = None
    alpha: float = DEFAULT_ALPHA
    seed: int = 0
    types: Tuple[CombType, ...] = ()
    workers: int = _default_workers
    model: str = 'cyclically-reduced'

    def validate(self) -> 'ExperimentSpec':
        """ Raises :class:`ExperimentError` on the first problem, returns the filled-in spec """
        if self.name not in EXPERIMENTS:
            raise ExperimentError(f'unknown experiment {self.name!r}, expected one of {", ".join(EXPERIMENTS)}')
        if self.model not in MODELS:
            raise ExperimentError(f'unknown model {self.model!r}, expected one of {", ".join(MODELS)}')
        if self.trials is not None and self.trials < 1:
            raise ExperimentError(f'trials must be at least 1, got {self.trials}')
        if self.workers < 1:
            raise ExperimentError(f'workers must be at least 1, got {self.workers}')
        if not isinstance(self.seed, int) or not 0 <= self.seed < 1 << 64:
            raise ExperimentError(f'seed must be an unsigned 64-bit integer, got {self.seed!r}')
        if self.name == 'uniformity':
            types: Tuple[CombType, ...] = tuple(CombType(*tau) for tau in self.types) or _default_uniformity_types
            for tau in types:
                if not 1 <= tau.n <= _enumeration_limit:
                    raise ExperimentError(f'uniformity is checked by enumeration, n <= {_enumeration_limit}; got {tau}')
            trials: int = self.trials or _default_uniformity_factor
            return replace(self, types=types, trials=trials)

        if not self.sizes:
            raise ExperimentError(f'{self.name} needs at least one size')
        for n in self.sizes:
            if n < 1:
                raise ExperimentError(f'sizes must be positive, got {n}')
            six: bool = self.name in _needs_multiple_of_six or (self.name == 'ab-cycles' and self.model == 'silhouette')
            if six and n % 6:
                raise ExperimentError(f'{self.name} needs sizes that are multiples of 6, got {n}')
        if self.name == 'ab-cycles' and not 0 < self.alpha < 1 / 6:
            raise ExperimentError(f'alpha must lie strictly between 0 and 1/6, got {self.alpha}')
        return replace(self, trials=self.trials or _default_trials)


class Row(NamedTuple):

    experiment: str
    n: int
    trials: int
    metric: str
    value: float
    stderr: Optional[float]
    seed: int


# -- single trials ------------------------------------------------------------------
# module level so that worker processes can unpickle them

def _ab_cycles_trial(spec: ExperimentSpec, n: int, rng: Rng) -> bool:
    if spec.model == 'silhouette':
        g = sample_silhouette(n, rng)
    else:
        g = sample_cyclically_reduced_by_size(n, rng)
    return not has_small_simple_ab_cycle(g, spec.alpha)


def _silhouette_size_trial(spec: ExperimentSpec, n: int, rng: Rng) -> int:
    return silhouette(sample_cyclically_reduced_by_size(n, rng)).n


def _disconnection_trial(spec: ExperimentSpec, n: int, rng: Rng) -> bool:
    return not is_connected(sample_permutation_pair(n, rng))


def _rank_trial(spec: ExperimentSpec, n: int, rng: Rng) -> bool:
    g = sample_cyclically_reduced_by_size(n, rng)
    return free_rank(g) != free_rank(silhouette(g))


def _parabolic_trial(spec: ExperimentSpec, n: int, rng: Rng) -> bool:
    return is_parabolic(sample_rooted_by_size(n, rng))


def _malnormal_trial(spec: ExperimentSpec, n: int, rng: Rng) -> bool:
    return is_almost_malnormal(sample_rooted_by_size(n, rng)).almost_malnormal


def _rooted_silhouette_size_trial(spec: ExperimentSpec, n: int, rng: Rng) -> int:
    return silhouette(sample_rooted_by_size(n, rng)).n


_trials: Dict[str, Callable[[ExperimentSpec, int, Rng], Any]] = {
    'ab-cycles': _ab_cycles_trial,
    'silhouette-size': _silhouette_size_trial,
    'disconnection': _disconnection_trial,
    'rank-preservation': _rank_trial,
    'parabolic': _parabolic_trial,
    'malnormal': _malnormal_trial,
    'rooted-silhouette-size': _rooted_silhouette_size_trial,
}


def _run_trial(spec: ExperimentSpec, n: int, trial: int) -> Any:
    return _trials[spec.name](spec, n, Rng(spec.seed, (n, trial)))


def _uniformity_trial(spec: ExperimentSpec, tau: CombType, trial: int) -> str:
    rng: Rng = Rng(spec.seed, (tau.n, trial) + tuple(tau))
    return emit_text(sample_cyclically_reduced(tau, rng))


def _collect(spec: ExperimentSpec, func: Callable[[int], Any], count: int) -> List[Any]:
    if spec.workers == 1:
        return [func(trial) for trial in range(count)]
    chunk: int = max(1, count // (4 * spec.workers))
    with ProcessPoolExecutor(max_workers=spec.workers) as pool:
        return list(pool.map(func, range(count), chunksize=chunk))


# -- summaries -----------------------------------------------------------------------

def _proportion(values: Sequence[bool]) -> Tuple[float, float]:
    p: float = float(np.mean(values))
    return p, math.sqrt(p * (1 - p) / len(values))


def _summarize(spec: ExperimentSpec, n: int, values: List[Any]) -> Iterable[Row]:
    trials: int = len(values)

    def row(metric: str, value: float, stderr: Optional[float] = None) -> Row:
        return Row(spec.name, n, trials, metric, value, stderr, spec.seed)

    if spec.name == 'ab-cycles':
        yield row('band', math.floor(n ** spec.alpha))
        yield row('lacking-fraction', *_proportion(values))
    elif spec.name in ('silhouette-size', 'rooted-silhouette-size'):
        sizes = np.asarray(values, dtype=float)
        stderr: float = float(sizes.std(ddof=1) / math.sqrt(trials)) if trials > 1 else 0.0
        threshold: float = n - 3 * n ** (2 / 3)
        yield row('mean', float(sizes.mean()), stderr)
        yield row('min', float(sizes.min()))
        yield row('below-threshold-fraction', *_proportion(sizes < threshold))
        if spec.name == 'silhouette-size' and n <= _exact_size_limit:
            exact: Dict[int, int] = silhouette_sizes_of_size(n)
            total: int = sum(exact.values())
            yield row('exact-mean', float(Fraction(sum(m * c for m, c in exact.items()), total)))
            below: int = sum(c for m, c in exact.items() if m < threshold)
            yield row('exact-below-threshold-fraction', float(Fraction(below, total)))
    elif spec.name == 'disconnection':
        rate, stderr = _proportion(values)
        yield row('rate', rate, stderr)
        yield row('c', rate * n, stderr * n)
    elif spec.name == 'rank-preservation':
        yield row('violations', sum(values))
    elif spec.name == 'parabolic':
        yield row('parabolic-fraction', *_proportion(values))
    elif spec.name == 'malnormal':
        yield row('malnormal-fraction', *_proportion(values))


def _uniformity_rows(spec: ExperimentSpec, tau: CombType) -> Iterable[Row]:
    population: List[str] = [emit_text(g) for g in enum_cyclically_reduced(tau.n, tau)]
    if not population:
        raise ExperimentError(f'type {tau} has an empty class')
    count: int = spec.trials * len(population)
    drawn: Counter = Counter(_collect(spec, partial(_uniformity_trial, spec, tau), count))
    unknown: int = sum(drawn.values()) - sum(drawn[key] for key in population)
    observed: List[int] = [drawn[key] for key in population]
    metric: str = f'[{tau}]'
    yield Row(spec.name, tau.n, count, 'class-size' + metric, len(population), None, spec.seed)
    yield Row(spec.name, tau.n, count, 'outside-class' + metric, unknown, None, spec.seed)
    if len(population) > 1:
        result = chisquare(observed)
        yield Row(spec.name, tau.n, count, 'chi2' + metric, float(result.statistic), None, spec.seed)
        yield Row(spec.name, tau.n, count, 'p-value' + metric, float(result.pvalue), None, spec.seed)


def run_experiment(spec: ExperimentSpec, stream: Optional[TextIO] = None) -> List[Row]:
    """ Runs ``spec`` and returns its rows; with ``stream`` they are also written as CSV """
    spec = spec.validate()
    rows: List[Row] = []
    if spec.name == 'uniformity':
        for tau in spec.types:
            logger.info('uniformity: type %s, %d samples per graph', tau, spec.trials)
            rows.extend(_uniformity_rows(spec, tau))
    else:
        for n in spec.sizes:
            logger.info('%s: n=%d, %d trials', spec.name, n, spec.trials)
            values: List[Any] = _collect(spec, partial(_run_trial, spec, n), spec.trials)
            rows.extend(_summarize(spec, n, values))
    if stream is not None:
        write_csv(rows, stream)
    return rows


def _cell(value: Any) -> str:
    if value is None:
        return ''
    if isinstance(value, float):
        return repr(value)
    return str(value)


def write_csv(rows: Iterable[Row], stream: TextIO) -> None:
    writer = csv.writer(stream, lineterminator='\n')
    writer.writerow(CSV_HEADER)
    for item in rows:
        writer.writerow([_cell(value) for value in item])
