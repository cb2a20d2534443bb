#!/usr/bin/python
# -*- coding: utf-8 -*-
# date: 2024/3/12
# author: clarkmonkey@163.com

""" cli
Command-line front end: ``psl2z <command> [options]``.

Exit codes: 0 success (or a true verdict for ``check``), 1 a false verdict,
2 usage or input errors, 3 an internal invariant breach.
"""

import argparse
import logging
import sys
from typing import Callable, Dict, Iterable, List, Optional, Sequence

from .analyze import is_almost_malnormal, is_parabolic
from .codec import GRAPH_FORMAT_VERSION, emit_many, emit_text, parse_many
from .core import CombType, IsoType, LabeledGraph, comb_type, iso_type
from .count import count_by_iso, count_of_size, H_count, L_count, s_count, silhouette_count
from .enumeration import enum_cyclically_reduced, enum_rooted, tally_by_iso, tally_by_type
from .experiment import EXPERIMENTS, MODELS, ExperimentSpec, run_experiment
from .moves import move_word, reduce, silhouette
from .rng import Rng
from .sample import (
    sample_by_iso, sample_cyclically_reduced, sample_cyclically_reduced_by_size,
    sample_rooted, sample_silhouette,
)
from .stallings import build_stallings, index, is_free, member
from .util import InvariantBreach, Psl2zError, get_logger, parse_int_tuple

logger = get_logger(__name__)

_verbosity: Dict[int, int] = {0: logging.WARNING, 1: logging.INFO}


def _comb_type(text: str) -> CombType:
    try:
        return CombType(*parse_int_tuple(text, 5))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _iso_spec(text: str) -> Sequence[int]:
    try:
        return parse_int_tuple(text, 4)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _int_list(text: str) -> Sequence[int]:
    try:
        return parse_int_tuple(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _type_list(text: str) -> Sequence[CombType]:
    return [_comb_type(part) for part in text.split(';') if part.strip()]


def _word_list(text: str) -> Sequence[str]:
    words: List[str] = [part.strip() for part in text.split(',') if part.strip()]
    if not words:
        raise argparse.ArgumentTypeError(f'no generator in {text!r}')
    return words


def _read(path: str) -> List[LabeledGraph]:
    if path == '-':
        return parse_many(sys.stdin.read())
    with open(path, encoding='utf-8') as f:
        return parse_many(f.read())


def _write(text: str, path: Optional[str]) -> None:
    if path is None or path == '-':
        sys.stdout.write(text)
        return
    with open(path, 'w', encoding='utf-8') as f:
        f.write(text)


# -- commands ------------------------------------------------------------------------

def cmd_stallings(args: argparse.Namespace) -> int:
    g: LabeledGraph = build_stallings(args.gens)
    text: str = emit_text(g)
    if args.info:
        sigma: IsoType = iso_type(g)
        found: Optional[int] = index(g)
        text += (
            f'# type {comb_type(g)}\n# iso {sigma}\n'
            f'# index {"infinite" if found is None else found}\n# free {str(is_free(g)).lower()}\n'
        )
    _write(text, args.out)
    return 0


def cmd_count(args: argparse.Namespace) -> int:
    if args.type is not None:
        what: Dict[str, Callable[[CombType], int]] = {'s': s_count, 'L': L_count, 'H': H_count}
        value: int = what[args.what](args.type)
    elif args.iso is not None:
        n, *sigma = args.iso
        mode: str = 'cyclically-reduced' if args.cyclically_reduced else 'all'
        value = count_by_iso(n, sigma, mode, labeled=args.labeled)
    elif args.silhouettes is not None:
        value = silhouette_count(args.silhouettes)
    else:
        value = count_of_size(args.size)
    print(value)
    return 0


def cmd_sample(args: argparse.Namespace) -> int:
    rng: Rng = Rng(args.seed)
    graphs: List[LabeledGraph] = []
    for i in range(args.count):
        child: Rng = rng.child(i)
        if args.type is not None:
            sampler = sample_rooted if args.rooted else sample_cyclically_reduced
            graphs.append(sampler(args.type, child))
        elif args.iso is not None:
            n, *sigma = args.iso
            mode: str = 'cyclically-reduced' if args.cyclically_reduced else 'all'
            graphs.append(sample_by_iso(n, sigma, child, mode))
        elif args.silhouette is not None:
            graphs.append(sample_silhouette(args.silhouette, child))
        else:
            graphs.append(sample_cyclically_reduced_by_size(args.size, child))
    _write(emit_many(graphs), args.out)
    return 0


def cmd_silhouette(args: argparse.Namespace) -> int:
    records: List[str] = []
    for g in _read(args.input):
        if args.trace:
            moves, _ = reduce(g)
            record: str = ''.join(f'# {move}\n' for move in moves)
            record += f'# word {move_word(move.label for move in moves)}\n'
            records.append(record + emit_text(silhouette(g)))
        else:
            records.append(emit_text(silhouette(g)))
    _write('\n'.join(records), args.out)
    return 0


def cmd_enumerate(args: argparse.Namespace) -> int:
    if args.rooted:
        graphs: Iterable[LabeledGraph] = enum_rooted(args.size, args.include_trivial)
    else:
        graphs = enum_cyclically_reduced(args.size)
    if args.group_by is None:
        _write(emit_many(graphs), args.out)
        return 0
    tally = tally_by_iso(graphs) if args.group_by == 'iso' else tally_by_type(graphs)
    _write(''.join(f'{key} {tally[key]}\n' for key in sorted(tally)), args.out)
    return 0


def cmd_check(args: argparse.Namespace) -> int:
    verdicts: List[bool] = []
    for g in _read(args.input):
        if args.property == 'parabolic':
            verdict: bool = is_parabolic(g)
            print(str(verdict).lower())
        elif args.property == 'malnormal':
            result = is_almost_malnormal(g)
            verdict = result.almost_malnormal
            line: str = str(verdict).lower()
            if args.witness and result.witness is not None:
                p, q = result.witness.pair
                line += f' {result.witness.word} {p} {q}'
            print(line)
        else:
            verdict = member(g, args.word)
            print(str(verdict).lower())
        verdicts.append(verdict)
    return 0 if all(verdicts) else 1


def cmd_experiment(args: argparse.Namespace) -> int:
    spec: ExperimentSpec = ExperimentSpec(
        name=args.name,
        sizes=tuple(args.sizes or ()),
        trials=args.trials,
        alpha=args.alpha,
        seed=args.seed,
        types=tuple(args.types or ()),
        workers=args.workers,
        model=args.model,
    )
    if args.out is None or args.out == '-':
        run_experiment(spec, sys.stdout)
    else:
        with open(args.out, 'w', encoding='utf-8', newline='') as f:
            run_experiment(spec, f)
    return 0


# -- parser ----------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='psl2z', description='Subgroups of the modular group PSL2(Z)')
    parser.add_argument('--version', action='version', version=GRAPH_FORMAT_VERSION)
    parser.add_argument('-v', '--verbose', action='count', default=0, help='more logging, repeatable')
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('stallings', help='Stallings graph of a finite generating set')
    p.add_argument('--gens', type=_word_list, required=True, help='comma separated generators, words over a, b, B')
    p.add_argument('--info', action='store_true', help='append type, isomorphism type and index')
    p.add_argument('--out')
    p.set_defaults(func=cmd_stallings)

    p = sub.add_parser('count', help='exact counts')
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument('--type', type=_comb_type, help='n,k2,k3,l2,l3')
    group.add_argument('--iso', type=_iso_spec, help='n,l2,l3,r')
    group.add_argument('--silhouettes', type=int, metavar='N', help='labeled silhouette graphs of size N')
    group.add_argument('--size', type=int, help='labeled cyclically reduced graphs of this size')
    p.add_argument('--what', choices=('s', 'L', 'H'), default='s')
    p.add_argument('--cyclically-reduced', action='store_true')
    p.add_argument('--labeled', action='store_true', help='labeled total instead of subgroups')
    p.set_defaults(func=cmd_count)

    p = sub.add_parser('sample', help='uniform random graphs')
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument('--type', type=_comb_type, help='n,k2,k3,l2,l3')
    group.add_argument('--iso', type=_iso_spec, help='n,l2,l3,r')
    group.add_argument('--silhouette', type=int, metavar='N')
    group.add_argument('--size', type=int, help='any cyclically reduced type of this size')
    p.add_argument('--seed', type=int, required=True)
    p.add_argument('--count', type=int, default=1)
    p.add_argument('--rooted', action='store_true', help='with --type, rooted reduced graphs')
    p.add_argument('--cyclically-reduced', action='store_true')
    p.add_argument('--out')
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser('silhouette', help='silhouettes of the graphs in a file')
    p.add_argument('--in', dest='input', required=True)
    p.add_argument('--trace', action='store_true', help='print the minimal move sequence, one move per line')
    p.add_argument('--out')
    p.set_defaults(func=cmd_silhouette)

    p = sub.add_parser('enumerate', help='all labeled graphs of a small size')
    p.add_argument('--size', type=int, required=True)
    p.add_argument('--rooted', action='store_true')
    p.add_argument('--include-trivial', action='store_true')
    p.add_argument('--group-by', choices=('type', 'iso'))
    p.add_argument('--out')
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser('check', help='parabolicity, almost malnormality or membership')
    p.add_argument('property', choices=('parabolic', 'malnormal', 'member'))
    p.add_argument('--in', dest='input', required=True)
    p.add_argument('--word')
    p.add_argument('--witness', action='store_true')
    p.set_defaults(func=cmd_check)

    p = sub.add_parser('experiment', help='Monte Carlo experiments, CSV output')
    p.add_argument('name', choices=EXPERIMENTS)
    p.add_argument('--sizes', type=_int_list)
    p.add_argument('--trials', type=int)
    p.add_argument('--alpha', type=float, default=ExperimentSpec.alpha)
    p.add_argument('--seed', type=int, required=True)
    p.add_argument('--types', type=_type_list, help='semicolon separated types for uniformity')
    p.add_argument('--workers', type=int, default=ExperimentSpec.workers)
    p.add_argument('--model', choices=MODELS, default=ExperimentSpec.model)
    p.add_argument('--out')
    p.set_defaults(func=cmd_experiment)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser: argparse.ArgumentParser = build_parser()
    args: argparse.Namespace = parser.parse_args(argv)
    logging.basicConfig(
        level=_verbosity.get(args.verbose, logging.DEBUG),
        format='%(asctime)s %(levelname)s %(name)s: %(message)s',
    )
    if args.command == 'check' and args.property == 'member' and not args.word:
        parser.error('check member needs --word')
    try:
        return args.func(args)
    except InvariantBreach as exc:
        print(f'psl2z: invariant breach: {exc}', file=sys.stderr)
        return 3
    except (Psl2zError, ValueError, OSError) as exc:
        print(f'psl2z: {exc}', file=sys.stderr)
        return 2
