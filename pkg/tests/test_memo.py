#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# date: 2024/3/15
# author: clarkmonkey@163.com

from concurrent.futures import ThreadPoolExecutor

import pytest

from psl2z.memo import CountCache

raises = pytest.raises


class TestCountCache:

    def setup_class(self):
        self.cache = CountCache('test')

    def setup_method(self):
        self.cache.clear()

    def test_inspect(self):
        key = ('s_count', 4, 2, 0, 0, 1)
        assert len(self.cache) == 0
        assert key not in self.cache
        assert self.cache.inspect(key) is None

        self.cache[key] = 24
        inspect = self.cache.inspect(key)
        assert isinstance(inspect, dict)
        assert inspect['key'] == key
        assert inspect['value'] == 24

    def test_write_once(self):
        key = ('s_count', 3, 1, 0, 1, 0)
        assert self.cache.ex_set(key, 6) == 6
        assert self.cache.ex_set(key, 7) == 6
        assert self.cache[key] == 6

    def test_keys(self):
        assert list(self.cache.keys()) == []
        keys = {('T2', n) for n in range(10)}
        for key in keys:
            self.cache[key] = key[1]
        assert set(self.cache.keys()) == keys
        assert set(self.cache) == keys

    def test_stats(self):
        self.cache.get(('missing',))
        self.cache[('present',)] = 1
        self.cache.get(('present',))
        assert self.cache.stats() == {'entries': 1, 'hits': 1, 'misses': 1}
        self.cache.clear()
        assert self.cache.stats() == {'entries': 0, 'hits': 0, 'misses': 0}

    def test_str(self):
        assert str(self.cache) == '<CountCache name=test length:0>'
        self.cache[('n',)] = 0
        assert str(self.cache) == '<CountCache name=test length:1>'


class TestMemoize:

    def test_memoize(self):
        cache = CountCache(thread_safe=False)
        calls = []

        @cache.memoize
        def double(n):
            calls.append(n)
            return 2 * n

        assert double(3) == 6 and double(3) == 6
        assert calls == [3]
        assert ('double', 3) in cache
        assert double.cache is cache
        assert double.__name__ == 'double'

    def test_zero_is_cached(self):
        cache = CountCache()
        calls = []

        @cache.memoize
        def zero(n):
            calls.append(n)
            return 0

        zero(1)
        zero(1)
        assert calls == [1]

    def test_not_callable(self):
        with raises(TypeError):
            CountCache().memoize(1)

    def test_threads(self):
        cache = CountCache()

        @cache.memoize
        def square(n):
            return n * n

        with ThreadPoolExecutor(max_workers=8) as pool:
            results = list(pool.map(square, [n % 50 for n in range(2000)]))
        assert results == [(n % 50) ** 2 for n in range(2000)]
        assert len(cache) == 50
