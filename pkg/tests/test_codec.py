#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# date: 2024/3/13
# author: clarkmonkey@163.com

import pytest

from psl2z.codec import GRAPH_FORMAT_VERSION, emit_many, emit_text, parse_many, parse_text
from psl2z.core import GraphBuilder, delta1, delta2, delta3, delta4
from psl2z.stallings import build_stallings
from psl2z.util import GraphParseError, InvalidGraph
from utils import GENS_H, GENS_K, GENS_L

params = pytest.mark.parametrize
raises = pytest.raises

DELTA3_TEXT: str = '''psl2z-graph v1
n 2
root none
aloop 1 2
bedge 1>2
'''


class TestEmit:

    def test_delta3(self):
        assert emit_text(delta3()) == DELTA3_TEXT

    def test_sorted_items(self):
        g = GraphBuilder().add_a_edge(3, 4).add_a_edge(1, 2).add_b_triangle(4, 2, 1).add_b_loop(3)
        text = emit_text(g.set_root(3).freeze())
        assert text.splitlines() == [
            GRAPH_FORMAT_VERSION, 'n 4', 'root 3', 'a 1-2 3-4', 'bloop 3', 'btri 1>4>2',
        ]

    def test_labels_line(self):
        g = delta2(3, 7)
        lines = emit_text(g).splitlines()
        assert 'labels 3 7' in lines
        assert parse_text(emit_text(g)) == g

    def test_many(self):
        text = emit_many([delta1(), delta4()])
        assert text.count(GRAPH_FORMAT_VERSION) == 2
        assert '\n\n' in text


class TestParse:

    def test_delta3(self):
        assert parse_text(DELTA3_TEXT) == delta3()

    def test_comments_and_blank_lines(self):
        text = '# a comment\n\n' + DELTA3_TEXT.replace('bedge 1>2', 'bedge 1>2   # the b-edge')
        assert parse_text(text) == delta3()

    @params('gens', [GENS_H, GENS_K, GENS_L])
    def test_stallings_graphs(self, gens):
        g = build_stallings(gens)
        assert parse_text(emit_text(g)) == g

    def test_many(self):
        graphs = [delta1(), delta2(), delta3(), delta4()]
        assert parse_many(emit_many(graphs)) == graphs

    def test_parse_text_wants_one(self):
        with raises(GraphParseError, match='expected one graph, found 2'):
            parse_text(emit_many([delta1(), delta2()]))


class TestParseErrors:

    @params('text, lineno, message', [
        ('n 2\n', 1, 'expected header'),
        ('', 1, 'expected header'),
        (GRAPH_FORMAT_VERSION + '\nroot none\naloop 1\nbloop 1\n', 4, 'missing "n" line'),
        (GRAPH_FORMAT_VERSION + '\nn 1\naloop 1\nbloop 1\n', 4, 'missing "root" line'),
        (GRAPH_FORMAT_VERSION + '\nn 1\nn 1\n', 3, 'single "n <int>"'),
        (GRAPH_FORMAT_VERSION + '\nn 1\nroot none\ncloop 1\n', 4, "unknown key 'cloop'"),
        (GRAPH_FORMAT_VERSION + '\nn 2\nroot none\na 1-x\n', 4, 'expected a vertex label'),
        (GRAPH_FORMAT_VERSION + '\nn 2\nroot none\na 1-0\n', 4, 'positive integers'),
        (GRAPH_FORMAT_VERSION + '\nn 3\nroot none\nbtri 1>2\n', 4, 'malformed item'),
        (GRAPH_FORMAT_VERSION + '\nn 2\nroot none\naloop 1\na 1-2\n', 5, 'already has an outgoing a-edge'),
        (GRAPH_FORMAT_VERSION + '\nn 3\nroot none\nlabels 1 2\n', 4, '"labels" lists 2 vertices'),
    ])
    def test_line_numbers(self, text, lineno, message):
        with raises(GraphParseError, match=message) as info:
            parse_many(text)
        assert info.value.lineno == lineno

    def test_structure_is_validated(self):
        text = GRAPH_FORMAT_VERSION + '\nn 2\nroot none\naloop 1 2\n'
        with raises(InvalidGraph) as info:
            parse_text(text)
        assert 'vertex 1 has no b-edge' in info.value.violations
