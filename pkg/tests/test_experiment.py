#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# date: 2024/3/16
# author: clarkmonkey@163.com

import io

import pytest

from psl2z.analyze import DEFAULT_ALPHA
from psl2z.count import silhouette_sizes_of_size
from psl2z.experiment import CSV_HEADER, ExperimentSpec, Row, run_experiment, write_csv
from psl2z.util import ExperimentError

params = pytest.mark.parametrize
raises = pytest.raises
slow = pytest.mark.slow


def metrics(rows):
    return {row.metric: row.value for row in rows}


class TestValidate:

    @params('spec, message', [
        (ExperimentSpec('nothing', sizes=(6,)), 'unknown experiment'),
        (ExperimentSpec('disconnection', sizes=(6,), model='lattice'), 'unknown model'),
        (ExperimentSpec('disconnection', sizes=(6,), trials=0), 'trials must be at least 1'),
        (ExperimentSpec('disconnection', sizes=(6,), workers=0), 'workers must be at least 1'),
        (ExperimentSpec('disconnection'), 'needs at least one size'),
        (ExperimentSpec('silhouette-size', sizes=(0,)), 'sizes must be positive'),
        (ExperimentSpec('disconnection', sizes=(6, 7)), 'multiples of 6'),
        (ExperimentSpec('ab-cycles', sizes=(10,), model='silhouette'), 'multiples of 6'),
        (ExperimentSpec('ab-cycles', sizes=(10,), alpha=0.2), 'alpha must lie'),
        (ExperimentSpec('uniformity', types=((9, 4, 1, 1, 1),)), 'n <= 8'),
        (ExperimentSpec('disconnection', sizes=(6,), seed=-1), 'unsigned 64-bit'),
    ])
    def test_errors(self, spec, message):
        with raises(ExperimentError) as info:
            spec.validate()
        assert message in str(info.value)

    def test_defaults(self):
        spec = ExperimentSpec('silhouette-size', sizes=(10,)).validate()
        assert spec.trials == 2000
        spec = ExperimentSpec('uniformity').validate()
        assert spec.trials == 200
        assert [tuple(tau) for tau in spec.types] == [(2, 1, 1, 0, 0), (3, 1, 0, 1, 0), (4, 2, 0, 0, 1)]

    def test_default_alpha(self):
        assert ExperimentSpec('ab-cycles').alpha == DEFAULT_ALPHA
        assert 0 < DEFAULT_ALPHA < 1 / 6


class TestRuns:

    def test_disconnection(self):
        # a disconnected pair needs a component of size divisible by 6
        rows = run_experiment(ExperimentSpec('disconnection', sizes=(6,), trials=20, seed=1))
        assert [row.metric for row in rows] == ['rate', 'c']
        assert metrics(rows) == {'rate': 0.0, 'c': 0.0}
        assert all(row.n == 6 and row.trials == 20 and row.seed == 1 for row in rows)

    def test_ab_cycles_empty_band(self):
        rows = run_experiment(ExperimentSpec('ab-cycles', sizes=(60,), trials=3, seed=2))
        assert metrics(rows) == {'band': 1, 'lacking-fraction': 1.0}

    def test_rank_preservation(self):
        rows = run_experiment(ExperimentSpec('rank-preservation', sizes=(12, 30), trials=10, seed=3))
        assert [row.value for row in rows] == [0, 0]

    @slow
    def test_rank_preservation_at_sixty(self):
        rows = run_experiment(ExperimentSpec('rank-preservation', sizes=(60,), trials=1000, seed=3))
        assert metrics(rows) == {'violations': 0}

    def test_silhouette_size(self):
        rows = run_experiment(ExperimentSpec('silhouette-size', sizes=(30,), trials=10, seed=4))
        found = metrics(rows)
        assert 0 <= found['min'] <= found['mean'] <= 30
        assert 0 <= found['below-threshold-fraction'] <= 1
        exact = silhouette_sizes_of_size(30)
        total = sum(exact.values())
        assert found['exact-mean'] == pytest.approx(sum(m * c for m, c in exact.items()) / total)
        assert 0 <= found['exact-below-threshold-fraction'] <= 1

    def test_silhouette_size_beyond_exact_limit(self):
        rows = run_experiment(ExperimentSpec('silhouette-size', sizes=(66,), trials=2, seed=4))
        assert 'exact-mean' not in metrics(rows)

    def test_rooted_silhouette_size(self):
        rows = run_experiment(ExperimentSpec('rooted-silhouette-size', sizes=(24,), trials=10, seed=8))
        found = metrics(rows)
        assert [row.metric for row in rows] == ['mean', 'min', 'below-threshold-fraction']
        assert 0 <= found['min'] <= found['mean'] <= 24

    def test_parabolic_and_malnormal(self):
        parabolic = metrics(run_experiment(ExperimentSpec('parabolic', sizes=(30,), trials=10, seed=9)))
        malnormal = metrics(run_experiment(ExperimentSpec('malnormal', sizes=(30,), trials=10, seed=9)))
        assert 0 <= parabolic['parabolic-fraction'] <= 1
        assert 0 <= malnormal['malnormal-fraction'] <= 1

    def test_malnormal_at_size_one(self):
        # the three rootings of the one-vertex graph have a single vertex, no pair to share a loop
        rows = run_experiment(ExperimentSpec('malnormal', sizes=(1,), trials=5, seed=10))
        assert metrics(rows) == {'malnormal-fraction': 1.0}

    def test_uniformity(self):
        spec = ExperimentSpec('uniformity', trials=50, seed=5, types=((2, 1, 1, 0, 0), (4, 2, 0, 0, 1)))
        found = metrics(run_experiment(spec))
        assert found['class-size[2,1,1,0,0]'] == 2
        assert found['outside-class[2,1,1,0,0]'] == 0
        assert found['class-size[4,2,0,0,1]'] == 24
        assert found['outside-class[4,2,0,0,1]'] == 0
        assert 0 <= found['p-value[4,2,0,0,1]'] <= 1

    def test_single_graph_class(self):
        found = metrics(run_experiment(ExperimentSpec('uniformity', trials=5, types=((1, 0, 0, 1, 1),))))
        assert found == {'class-size[1,0,0,1,1]': 1, 'outside-class[1,0,0,1,1]': 0}

    def test_workers_do_not_matter(self):
        single = run_experiment(ExperimentSpec('silhouette-size', sizes=(18,), trials=8, seed=6))
        pooled = run_experiment(ExperimentSpec('silhouette-size', sizes=(18,), trials=8, seed=6, workers=2))
        assert single == pooled


class TestCsv:

    def test_header_and_cells(self):
        stream = io.StringIO()
        write_csv([Row('disconnection', 6, 5, 'rate', 0.25, None, 1)], stream)
        lines = stream.getvalue().splitlines()
        assert lines == [','.join(CSV_HEADER), 'disconnection,6,5,rate,0.25,,1']
        assert lines[0] == 'experiment,n,trials,metric,value,stderr,seed'

    def test_stream(self):
        stream = io.StringIO()
        rows = run_experiment(ExperimentSpec('disconnection', sizes=(12,), trials=4, seed=7), stream)
        assert len(stream.getvalue().splitlines()) == len(rows) + 1
