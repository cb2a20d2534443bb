#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# date: 2024/3/13
# author: clarkmonkey@163.com

import logging

import pytest

from psl2z.util import (
    ExperimentError, GraphParseError, InvalidGraph, InvariantBreach, Psl2zError, empty, exact_div,
    get_logger, parse_int_tuple,
)

params = pytest.mark.parametrize
raises = pytest.raises


class TestExactDiv:

    @params('numerator, denominator, quotient', [
        (24, 4, 6),
        (0, 7, 0),
        (-12, 3, -4),
        (2395008000 * 6, 6, 2395008000),
    ])
    def test_exact(self, numerator, denominator, quotient):
        assert exact_div(numerator, denominator) == quotient

    def test_inexact(self):
        with raises(InvariantBreach, match='s\\(5\\): 7 is not divisible by 2'):
            exact_div(7, 2, 's(5)')

    def test_zero(self):
        with raises(InvariantBreach, match='division by zero'):
            exact_div(1, 0)


class TestParseIntTuple:

    def test_parse(self):
        assert parse_int_tuple('6,3,0,0,0') == (6, 3, 0, 0, 0)
        assert parse_int_tuple(' 4, 2 ,0,0, 1') == (4, 2, 0, 0, 1)
        assert parse_int_tuple('12') == (12,)

    def test_size(self):
        assert parse_int_tuple('2,0,1,0', 4) == (2, 0, 1, 0)
        with raises(ValueError, match='expected 5 integers'):
            parse_int_tuple('1,2,3', 5)

    @params('text', ['', 'a,b', '1,,2', '1.5'])
    def test_garbage(self, text):
        with raises(ValueError, match='comma-separated'):
            parse_int_tuple(text)


class TestErrors:

    def test_hierarchy(self):
        for cls in (InvalidGraph, GraphParseError, InvariantBreach, ExperimentError):
            assert issubclass(cls, Psl2zError)
        assert issubclass(InvalidGraph, ValueError)
        assert issubclass(InvariantBreach, ArithmeticError)

    def test_invalid_graph(self):
        error = InvalidGraph(['vertex 1 has no a-edge', 'graph is not connected'])
        assert error.violations == ['vertex 1 has no a-edge', 'graph is not connected']
        assert str(error) == 'vertex 1 has no a-edge; graph is not connected'
        assert str(InvalidGraph([])) == 'invalid graph'

    def test_parse_error(self):
        error = GraphParseError(3, 'unknown record')
        assert error.lineno == 3
        assert str(error) == 'line 3: unknown record'


class TestMisc:

    def test_empty(self):
        assert not empty
        assert repr(empty) == str(empty) == '<empty>'

    def test_logger(self):
        logger = get_logger('psl2z.test')
        assert logger.name == 'psl2z.test'
        assert any(isinstance(h, logging.NullHandler) for h in logger.handlers)
