#!/usr/bin/python
# -*- coding: utf-8 -*-
# date: 2024/3/2
# author: clarkmonkey@163.com

""" util
Errors, warnings and small shared helpers for psl2z
"""

import logging
from typing import Any, Iterable, List, Optional, Tuple, Type

# Compatible with multiple types.
empty: Any = type('empty', (), {
    '__str__': lambda x: '<empty>',
    '__repr__': lambda x: '<empty>',
    '__bool__': lambda x: False,
})()

Label: Type = int
Edge: Type = Tuple[int, int]


class Psl2zError(Exception):
    """ A simple base exception for psl2z """


class Psl2zWarning(UserWarning):
    """ A simple base warning for psl2z """


class LegacyValueWarning(Psl2zWarning):
    """ Emitted when a known-wrong legacy constant is requested explicitly """


class InvalidGraph(Psl2zError, ValueError):
    """ The graph breaks one or more structural invariants """

    def __init__(self, violations: Iterable[str]) -> None:
        self.violations: List[str] = list(violations)
        super(InvalidGraph, self).__init__('; '.join(self.violations) or 'invalid graph')


class GraphParseError(Psl2zError, ValueError):
    """ Syntax error in the graph text format """

    def __init__(self, lineno: int, message: str) -> None:
        self.lineno: int = lineno
        super(GraphParseError, self).__init__(f'line {lineno}: {message}')


class WordError(Psl2zError, ValueError):
    """ Illegal character in a word """


class MoveError(Psl2zError, ValueError):
    """ A move is not applicable (or not invertible) on the given graph """


class InvariantBreach(Psl2zError, ArithmeticError):
    """ An internal consistency check failed: a formula or an algorithm is wrong """


class SamplingError(Psl2zError, RuntimeError):
    """ Nothing to sample from, or the rejection cap was exceeded """


class ExperimentError(Psl2zError, ValueError):
    """ Invalid experiment description """


def exact_div(numerator: int, denominator: int, what: str = 'division') -> int:
    """ Returns numerator / denominator, raising ``InvariantBreach`` unless exact """
    if denominator == 0:
        raise InvariantBreach(f'{what}: division by zero')
    quotient, remainder = divmod(numerator, denominator)
    if remainder:
        raise InvariantBreach(
            f'{what}: {numerator} is not divisible by {denominator}'
        )
    return quotient


def parse_int_tuple(text: str, size: Optional[int] = None) -> Tuple[int, ...]:
    """ Parses "6,3,0,0,0" (spaces allowed) into an int tuple """
    try:
        values: Tuple[int, ...] = tuple(int(part) for part in text.replace(' ', '').split(','))
    except ValueError:
        raise ValueError(f'expected comma-separated integers, got {text!r}') from None
    if size is not None and len(values) != size:
        raise ValueError(f'expected {size} integers, got {len(values)} in {text!r}')
    return values


def get_logger(name: str) -> logging.Logger:
    """ Package loggers never install handlers, the application does """
    logger: logging.Logger = logging.getLogger(name)
    logger.addHandler(logging.NullHandler())
    return logger
