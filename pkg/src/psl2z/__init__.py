#!/usr/bin/python
# -*- coding: utf-8 -*-
# date: 2024/3/2
# author: clarkmonkey@163.com

"""
psl2z is a MIT licensed library for finitely generated subgroups of the modular
group PSL2(Z): Stallings graphs, exact counts and uniform random generation.
"""

from psl2z.core import (
    CombType, GraphBuilder, IsoType, LabeledGraph, comb_type, completion, free_rank,
    is_cyclically_reduced, iso_type, iso_type_via_collapse, relab, validate,
)
from psl2z.codec import GRAPH_FORMAT_VERSION, emit_text, parse_text
from psl2z.stallings import build_stallings, member
from psl2z.moves import minimal_sequence, quasi_silhouette, silhouette
from psl2z.count import H_count, L_count, count_by_iso, s_count, silhouette_count
from psl2z.memo import CountCache
from psl2z.rng import Rng
from psl2z.sample import (
    build_path, sample_by_iso, sample_cyclically_reduced, sample_rooted, sample_silhouette,
)
from psl2z.enumeration import enum_cyclically_reduced, enum_rooted
from psl2z.analyze import ab_cycles, has_small_simple_ab_cycle, is_almost_malnormal, is_parabolic
from psl2z.experiment import ExperimentSpec, run_experiment

__author__: str = 'St·Kali <clarkmonkey@163.com>'
__name__: str = 'psl2z'  # pylint: disable=redefined-builtin
__email__: str = 'clarkmonkey@163.com'
__version__: str = '0.1.0'

__all__: list = [
    'CombType', 'IsoType', 'LabeledGraph', 'GraphBuilder',
    'comb_type', 'iso_type', 'iso_type_via_collapse', 'completion', 'free_rank',
    'is_cyclically_reduced', 'relab', 'validate',
    'GRAPH_FORMAT_VERSION', 'emit_text', 'parse_text',
    'build_stallings', 'member',
    'minimal_sequence', 'quasi_silhouette', 'silhouette',
    'CountCache', 's_count', 'L_count', 'H_count', 'count_by_iso', 'silhouette_count',
    'Rng', 'build_path', 'sample_silhouette', 'sample_cyclically_reduced',
    'sample_rooted', 'sample_by_iso',
    'enum_cyclically_reduced', 'enum_rooted',
    'ab_cycles', 'is_parabolic', 'is_almost_malnormal', 'has_small_simple_ab_cycle',
    'ExperimentSpec', 'run_experiment',
]
