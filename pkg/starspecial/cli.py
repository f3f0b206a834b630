# -*- coding: utf-8 -*-
__doc__ = """
Command line interface.

    starspecial [-v] [--format text|xml] [--output PATH] [--manifest PATH] COMMAND ...

Commands: enumerate, classify, family, invariants, separate, stargraph.
Exit codes: 0 success, 1 incomplete result, 2 usage or input error,
3 resource limit exceeded.
"""

__all__ = ('main', 'build_parser', 'RunManifest', 'InputError', 'read_words')

import argparse
import hashlib
import json
import logging
import sys
from collections import namedtuple

from starspecial import (DEFAULT_JOBS, DEFAULT_MAX_INDEX, FAMILY_MAX_N,
                         MAX_INDEX_BOUND, VERSION, ResourceLimitError)
from starspecial.catalog import (admissible_words, builtin_groups, group_names)
from starspecial.classify import partition, verify_composition_table
from starspecial.enumeration import (FILTER_MODES, CandidateConstraints,
                                     enumeration_report)
from starspecial.family import FamilyParams, family_report
from starspecial.lowindex import (COUNTING_MODES, SEARCH_MODES, invariant_profiles,
                                  separation_matrix)
from starspecial.report import (ClassificationReport, InvariantReport,
                                SeparationReport, StarGraphReport, report_writers)
from starspecial.stargraph import (Presentation, analyze, build, check_special,
                                   hyperbolic_flag)
from starspecial.wordparser import ParseException, word_parsers
from starspecial.words import is_cyclically_reduced

logger = logging.getLogger(__name__)

EXIT_OK, EXIT_INCOMPLETE, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3


class InputError(ValueError):
    "Malformed or inconsistent input, the message carries the location."


class RunManifest(namedtuple('RunManifest', 'command parameters digests version')):
    def to_json(self):
        return json.dumps(self._asdict(), sort_keys=True, separators=(',', ':'),
                          ensure_ascii=True).encode('utf-8')


def _sha256(data):
    return hashlib.sha256(data).hexdigest()


def _input_format(rank, input_format):
    if input_format == 'compact' and rank > 3:
        return 'indexed'
    return input_format

def read_words(lines, rank=3, input_format='compact', source='<input>', check=None):
    """Parse one word per line, skipping blank lines and '#' comments.
    Errors name the source and line number.
    """
    input_format = _input_format(rank, input_format)
    words = []
    seen = {}
    for number, line in enumerate(lines, 1):
        text = line.split('#', 1)[0].strip()
        if not text:
            continue
        try:
            w = word_parsers.parse(text, rank, input_format)
        except (ParseException, ValueError) as e:
            raise InputError('%s:%d: cannot parse %r: %s' % (source, number, text, e))
        if check is not None:
            problem = check(w)
            if problem:
                raise InputError('%s:%d: %s %s' % (source, number, text, problem))
        if w in seen:
            raise InputError('%s:%d: %s duplicates line %d' % (source, number, text, seen[w]))
        seen[w] = number
        words.append(w)
    return words

def _read_lines(path):
    if path == '-':
        return sys.stdin.read().splitlines(), '<stdin>'
    with open(path, encoding='UTF-8') as f:
        return f.read().splitlines(), path

def _check_classifiable(w):
    if not is_cyclically_reduced(w):
        return 'is not cyclically reduced'
    return None


def _cmd_enumerate(args):
    constraints = CandidateConstraints(args.length, args.rank)
    report = enumeration_report(constraints, args.mode, args.cross_check)
    status = EXIT_OK
    if report.brute_force is not None and report.brute_force != report.candidates:
        logger.warning("brute force found %d candidates, the generator %d",
                       report.brute_force, report.candidates)
        status = EXIT_INCOMPLETE
    return 'enumeration', report, status

def _cmd_classify(args):
    if args.input:
        lines, source = _read_lines(args.input)
        words = read_words(lines, 3, 'compact', source, _check_classifiable)
    else:
        words = admissible_words()
    classes = partition(words)
    checks = verify_composition_table() if args.replay else None
    status = EXIT_OK
    if checks is not None and not all(check.ok for check in checks):
        status = EXIT_INCOMPLETE
    return 'classification', ClassificationReport(classes, checks), status

def _cmd_family(args):
    report = family_report(FamilyParams(args.n, args.alpha), bound=args.max_n)
    return 'family', report, EXIT_OK

def _presentation_from_args(args):
    input_format = _input_format(args.rank, args.input_format)
    words = []
    for i, text in enumerate(args.relator or (), 1):
        try:
            words.append(word_parsers.parse(text, args.rank, input_format))
        except (ParseException, ValueError) as e:
            raise InputError('--relator %d: cannot parse %r: %s' % (i, text, e))
    if args.input:
        lines, source = _read_lines(args.input)
        words.extend(read_words(lines, args.rank, args.input_format, source))
    return Presentation(words, args.rank)

def _selected_groups(names, parser):
    groups = builtin_groups()
    unknown = [ name for name in names if name not in groups ]
    if unknown:
        parser.error('unknown group(s) %s, expected names from %s'
                     % (', '.join(unknown), ', '.join(group_names())))
    return [ groups[name] for name in names ]

def _cmd_invariants(args, parser):
    if args.group:
        if args.relator or args.input:
            parser.error('--group cannot be combined with --relator or --input')
        names = list(args.group)
        ps = _selected_groups(names, parser)
    else:
        ps = [ _presentation_from_args(args) ]
        names = [ 'input' ]
    profiles = invariant_profiles(ps, args.max_index, args.mode, args.jobs, args.bound,
                                  args.counting)
    report = InvariantReport(names, ps, profiles, args.max_index, args.mode, args.counting)
    return 'invariants', report, EXIT_OK

def _cmd_separate(args, parser):
    names = args.groups.split(',') if args.groups else group_names()
    ps = _selected_groups(names, parser)
    matrix = separation_matrix(ps, args.max_index, args.jobs, args.mode, args.bound,
                               args.counting)
    status = EXIT_OK
    for i, j in matrix.unseparated():
        logger.warning("%s and %s are not separated up to index %d",
                       names[i], names[j], args.max_index)
        status = EXIT_INCOMPLETE
    return 'separation', SeparationReport(names, ps, matrix), status

def _cmd_stargraph(args, parser):
    p = _presentation_from_args(args)
    if not p.relators:
        parser.error('stargraph needs at least one relator')
    if args.power != 1:
        p = p.power(args.power)
    graph = build(p)
    certificate = check_special(p)
    hyperbolic = hyperbolic_flag(certificate.m, certificate.k) if certificate else None
    report = StarGraphReport(p, graph, analyze(graph), certificate, hyperbolic)
    return 'stargraph', report, EXIT_OK


def _add_presentation_arguments(parser):
    parser.add_argument('--relator', action='append', metavar='WORD',
                        help='a relator, may be repeated')
    parser.add_argument('--input', metavar='PATH',
                        help="file with one relator per line, '-' for standard input")
    parser.add_argument('--rank', type=int, default=3, help='number of generators (default 3)')
    parser.add_argument('--input-format', default='compact',
                        choices=word_parsers.known_types(), help='word format (default compact)')

def _add_index_arguments(parser):
    parser.add_argument('--max-index', type=int, default=DEFAULT_MAX_INDEX,
                        help='largest subgroup index (default %d)' % DEFAULT_MAX_INDEX)
    parser.add_argument('--bound', type=int, default=MAX_INDEX_BOUND,
                        help='refuse indices above this bound (default %d)' % MAX_INDEX_BOUND)
    parser.add_argument('--mode', default='all', choices=SEARCH_MODES,
                        help='enumerate all subgroups or one per conjugacy class')
    parser.add_argument('--counting', default='subgroups', choices=COUNTING_MODES,
                        help='count every subgroup or every conjugacy class once')
    parser.add_argument('--jobs', type=int, default=DEFAULT_JOBS,
                        help='worker processes (default %d)' % DEFAULT_JOBS)

def build_parser():
    parser = argparse.ArgumentParser(
        prog='starspecial',
        description='Star-graphs of presentations, special relators and low-index invariants.')
    parser.add_argument('--version', action='version', version='%(prog)s ' + VERSION)
    parser.add_argument('-v', '--verbose', action='count', default=0,
                        help='log progress (-vv for debug output)')
    parser.add_argument('--format', default='text', choices=report_writers.known_types(),
                        help='report format (default text)')
    parser.add_argument('--output', default='-', metavar='PATH',
                        help="report file, '-' for standard output (default)")
    parser.add_argument('--manifest', metavar='PATH',
                        help='write a JSON run manifest with the report digest')
    commands = parser.add_subparsers(dest='command', metavar='COMMAND')
    commands.required = True

    p = commands.add_parser('enumerate', help='list the (2,9)-special relators')
    p.add_argument('--mode', default='exact', choices=FILTER_MODES,
                   help='exact K_{3,3} test or the girth/diameter proxy')
    p.add_argument('--cross-check', action='store_true',
                   help='also count candidates by brute force')
    p.add_argument('--length', type=int, default=9, help='relator length (default 9)')
    p.add_argument('--rank', type=int, default=3, help='number of generators (default 3)')

    p = commands.add_parser('classify', help='equivalence classes of relators')
    p.add_argument('--input', metavar='PATH',
                   help="words to classify, one per line, '-' for standard input "
                        "(default: the builtin list)")
    p.add_argument('--replay', action='store_true',
                   help='replay the builtin composition table')

    p = commands.add_parser('family', help='the relator w_n with star-graph K_{n,n}')
    p.add_argument('-n', type=int, required=True, help='number of generators')
    p.add_argument('--alpha', type=int, default=1, help='relator power (default 1)')
    p.add_argument('--max-n', type=int, default=FAMILY_MAX_N,
                   help='refuse n above this bound (default %d)' % FAMILY_MAX_N)

    p = commands.add_parser('invariants', help='abelianized low-index subgroups')
    p.add_argument('--group', action='append', metavar='NAME',
                   help='builtin group G1..G12, may be repeated')
    _add_presentation_arguments(p)
    _add_index_arguments(p)

    p = commands.add_parser('separate', help='separate groups by low-index invariants')
    p.add_argument('--groups', metavar='NAMES',
                   help='comma separated builtin groups (default: all twelve)')
    _add_index_arguments(p)

    p = commands.add_parser('stargraph', help='star-graph of a presentation')
    _add_presentation_arguments(p)
    p.add_argument('--power', type=int, default=1, help='raise every relator to this power')
    return parser


def _write_output(path, data):
    if path == '-':
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    else:
        with open(path, 'wb') as f:
            f.write(data)

def _configure_logging(verbosity):
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity > 1:
        level = logging.DEBUG
    logging.basicConfig(level=level, stream=sys.stderr,
                        format='%(levelname)s %(name)s: %(message)s')

_COMMANDS = {
    'enumerate':  lambda args, parser: _cmd_enumerate(args),
    'classify':   lambda args, parser: _cmd_classify(args),
    'family':     lambda args, parser: _cmd_family(args),
    'invariants': _cmd_invariants,
    'separate':   _cmd_separate,
    'stargraph':  _cmd_stargraph,
    }

_UNRECORDED = ('output', 'manifest', 'verbose', 'jobs')

def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    _configure_logging(args.verbose)
    try:
        kind, report, status = _COMMANDS[args.command](args, parser)
        data = report_writers.write(kind, report, args.format)
        _write_output(args.output, data)
        if args.manifest:
            parameters = dict( (key, value) for key, value in vars(args).items()
                               if key not in _UNRECORDED )
            manifest = RunManifest(args.command, parameters,
                                   {'stdout' if args.output == '-' else args.output: _sha256(data)},
                                   VERSION)
            _write_output(args.manifest, manifest.to_json() + b'\n')
    except ResourceLimitError as e:
        sys.stderr.write('starspecial: %s\n' % e)
        return EXIT_RESOURCE
    except (InputError, ParseException, ValueError) as e:
        sys.stderr.write('starspecial: %s\n' % e)
        return EXIT_USAGE
    except (IOError, OSError) as e:
        sys.stderr.write('starspecial: %s\n' % e)
        return EXIT_USAGE
    return status
