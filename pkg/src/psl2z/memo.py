#!/usr/bin/python
# -*- coding: utf-8 -*-
# date: 2024/3/5
# author: clarkmonkey@163.com

""" memo
Thread-safe memo table for exact counts.

Entries are written once and never change afterwards, so readers only need
the lock to keep the table itself consistent.
"""

import functools
from contextlib import nullcontext
from threading import Lock
from typing import Any, Callable, ContextManager, Dict, Hashable, Iterable, Optional, Tuple

from .util import empty

Key = Tuple[Hashable, ...]


class CountCache:
    """ A dictionary-based memo table keyed by argument tuples.

    ``memoize`` namespaces the keys with the decorated function name, so one
    cache can hold several counting functions side by side.
    """

    def __init__(self, name: str = 'counts', thread_safe: bool = True) -> None:
        self.name: str = name
        self._lock: ContextManager = Lock() if thread_safe else nullcontext()
        self._cache: Dict[Key, int] = {}
        self.hits: int = 0
        self.misses: int = 0

    def get(self, key: Key, default: Any = None) -> Any:
        with self._lock:
            value: Any = self._cache.get(key, empty)
            if value is empty:
                self.misses += 1
                return default
            self.hits += 1
            return value

    def set(self, key: Key, value: int) -> bool:
        with self._lock:
            self._cache[key] = value
            return True

    def ex_set(self, key: Key, value: int) -> int:
        """ Stores ``value`` unless the key exists; returns the stored value """
        with self._lock:
            return self._cache.setdefault(key, value)

    def has_key(self, key: Key) -> bool:
        with self._lock:
            return key in self._cache

    def inspect(self, key: Key) -> Optional[Dict[str, Any]]:
        """ inspect the key in cache, returns the dict if the key exists else None """
        with self._lock:
            if key not in self._cache:
                return None
            return {'key': key, 'value': self._cache[key]}

    def stats(self) -> Dict[str, int]:
        return {'entries': len(self), 'hits': self.hits, 'misses': self.misses}

    def clear(self) -> bool:
        with self._lock:
            self._cache.clear()
            self.hits = self.misses = 0
        return True

    def keys(self) -> Iterable[Key]:
        return iter(list(self._cache))

    def memoize(self, func: Callable[..., int]) -> Callable[..., int]:
        """ Caches the return value of ``func`` per positional argument tuple """

        if not callable(func):
            raise TypeError('The `memoize` decorator expects a callable.')

        @functools.wraps(func)
        def wrapper(*args: Hashable) -> int:
            key: Key = (func.__name__,) + tuple(args)
            value: Any = self.get(key, empty)
            if value is empty:
                value = self.ex_set(key, func(*args))
            return value

        wrapper.cache = self  # type: ignore[attr-defined]
        return wrapper

    def __len__(self) -> int:
        return len(self._cache)

    def __repr__(self) -> str:
        return f'<CountCache name={self.name} length:{len(self)}>'

    __iter__ = keys
    __getitem__ = get
    __setitem__ = set
    __contains__ = has_key
