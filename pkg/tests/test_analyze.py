#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# date: 2024/3/15
# author: clarkmonkey@163.com

import pytest

from psl2z.analyze import (
    AbCycle, ab_cycle_census, ab_cycles, has_small_simple_ab_cycle, is_almost_malnormal, is_parabolic,
)
from psl2z.core import delta1, delta2, delta3
from psl2z.enumeration import enum_rooted
from psl2z.stallings import build_stallings, trace
from utils import GENS_H, GENS_K, common_loop, cyclic_words

params = pytest.mark.parametrize
raises = pytest.raises


class TestAbCycles:

    def test_delta1(self):
        assert ab_cycles(delta1()) == [AbCycle((1,), True)]

    def test_delta2(self):
        # a 1-2, b 1>2: only 2 -> 1 -> 2 closes
        found = ab_cycles(delta2())
        assert found == [AbCycle((2,), True)]
        assert found[0].word == 'ab'

    def test_no_cycle(self):
        assert ab_cycles(delta3()) == []
        assert ab_cycles(build_stallings(['aba'])) == []

    def test_single_long_cycle(self):
        (cycle,) = ab_cycles(build_stallings(GENS_H))
        assert cycle.length == 6
        assert cycle.vertices[0] == 1
        assert not cycle.simple
        assert ab_cycle_census(build_stallings(GENS_H)) == {6: 1}

    def test_cycles_close(self):
        for gens in (GENS_H, GENS_K, ['ab'], ['abab', 'ba']):
            g = build_stallings(gens)
            for cycle in ab_cycles(g):
                v = cycle.vertices[0]
                assert trace(g, cycle.word, v) == v


class TestParabolic:

    def test_examples(self):
        assert is_parabolic(build_stallings(['ab']))
        assert is_parabolic(build_stallings(GENS_H))
        assert not is_parabolic(build_stallings(['aba']))
        assert not is_parabolic(build_stallings(['a']))

    @params('n', [1, 2, 3, 4])
    def test_against_powers(self, n):
        for g in enum_rooted(n):
            closing = any(trace(g, 'ab' * k, v) == v for v in g.vertices for k in range(1, n + 1))
            assert is_parabolic(g) == closing


class TestSmallCycles:

    @params('alpha', [0, 1 / 6, 0.2, -0.1])
    def test_alpha_range(self, alpha):
        with raises(ValueError):
            has_small_simple_ab_cycle(delta1(), alpha)

    def test_band_is_empty_for_small_graphs(self):
        assert not has_small_simple_ab_cycle(build_stallings(GENS_H))
        assert not has_small_simple_ab_cycle(delta1(), 0.16)


class TestMalnormality:

    def test_finite_and_maximal_cyclic(self):
        assert is_almost_malnormal(build_stallings(['aba'])).almost_malnormal
        assert is_almost_malnormal(build_stallings(['ab'])).almost_malnormal
        assert is_almost_malnormal(delta1()) == (True, None)

    def test_square_of_ab(self):
        g = build_stallings(['abab'])
        verdict = is_almost_malnormal(g)
        assert not verdict.almost_malnormal
        assert verdict.witness.word == 'abab'
        assert verdict.witness.pair == (1, 4)

    @params('gens', [GENS_H, GENS_K])
    def test_witness_closes(self, gens):
        g = build_stallings(gens)
        verdict = is_almost_malnormal(g)
        assert not verdict.almost_malnormal
        p, q = verdict.witness.pair
        assert p != q
        assert trace(g, verdict.witness.word, p) == p
        assert trace(g, verdict.witness.word, q) == q

    @params('n', [1, 2, 3])
    def test_against_brute_force(self, n):
        # a pair-graph cycle visits at most n(n-1) pairs, two letters each
        words = cyclic_words(2 * n * (n - 1))
        for g in enum_rooted(n):
            assert is_almost_malnormal(g).almost_malnormal == (common_loop(g, words) is None)
