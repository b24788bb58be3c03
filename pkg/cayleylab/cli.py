"""
Command-line front end: 'analyze', 'cycles' and 'verify-paper'.

Exit codes are 0 for success, 1 for usage and input errors, 2 when a run found violated claims.
"""

import argparse
import json
import logging
import os
import sys

import jinja2

from .acceptance import run_suite
from .cayley import build_cayley, count_4cycles_through, six_cycles_through_with_distance3, distance3_vertices
from .fs import Filesystem
from .perm import Transposition, PermutationError
from .permgroup import GroupError
from .settings import Settings, SettingsError
from .tgraph import TranspositionSet, GraphError, EdgeListError, path_set, star_set, cycle_set, tree_from_pruefer
from .tgraph import ConsistencyError
from .theory import full_report

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_FAILURES = 2

PRESETS = ('path', 'star', 'cycle', 'tree')

REPORT_KEYS = {'input', 'n', 'girth', 'tgraph_aut_order', 'cayley', 'aut_order', 'ge_order', 'le_order',
               'le_is_klein', 'r_normal', 'theorem1', 'lemma2', 'theorem4', 'runtime_ms'}
NESTED_REPORT_KEYS = {
    'cayley': {'vertices', 'degree', 'bipartite'},
    'theorem1': {'applicable', 'confirmed'},
    'lemma2': {'checked', 'failures'},
    'theorem4': {'checked', 'failures'},
}


def parse_spec(text, fs=None, n=None):
    """
    Transposition set from an input spec: a preset ('path:n', 'star:n', 'cycle:n', 'tree:<Pruefer sequence>'),
    a whitespace-separated 1-based edge list ('1-2 2-3'), or the name of a file holding an edge list.
    :param fs: FilesystemInterface used to look up file names
    :param n: explicit point count; must cover every endpoint
    """
    fs = fs or Filesystem()
    stripped = text.strip()
    if not stripped:
        raise SpecParseError('empty input spec', 0)

    name, sep, parameter = stripped.partition(':')
    if sep and name in PRESETS:
        S = _parse_preset(name, parameter, text.index(':') + 1)
    elif fs.isFile(stripped):
        logger.info('reading edge list from %s', stripped)
        try:
            contents = fs.readFile(stripped)
        except UnicodeDecodeError as e:
            raise SpecParseError('edge list file "%s" is not UTF-8 text' % stripped, e.start)
        lines = [line.split('#', 1)[0] for line in contents.splitlines()]
        S = _parse_edges(' '.join(lines), None)
    elif sep and ('-' not in name):
        raise SpecParseError('unknown preset "%s" (expected one of %s)' % (name, ', '.join(PRESETS)), 0)
    else:
        S = _parse_edges(text, None)

    if n is not None:
        if n < S.n:
            raise SpecParseError('--points %d is less than the %d points the spec uses' % (n, S.n), 0)
        S = TranspositionSet(n, S.edges)
    return S


def _parse_edges(text, n):
    try:
        return TranspositionSet.parse(text, n)
    except EdgeListError as e:
        raise SpecParseError(e.message, e.position)


def _parse_preset(name, parameter, position):
    if name == 'tree':
        try:
            sequence = [int(x) for x in parameter.replace(',', ' ').split()]
        except ValueError:
            raise SpecParseError('Pruefer sequence must be integers, got "%s"' % parameter, position)
        try:
            return tree_from_pruefer(sequence)
        except GraphError as e:
            raise SpecParseError(str(e), position)

    try:
        count = int(parameter)
    except ValueError:
        raise SpecParseError('preset "%s" needs an integer point count, got "%s"' % (name, parameter), position)
    if count < 2:
        raise SpecParseError('preset "%s" needs at least 2 points, got %d' % (name, count), position)
    try:
        return {'path': path_set, 'star': star_set, 'cycle': cycle_set}[name](count)
    except GraphError as e:
        raise SpecParseError(str(e), position)


def render(templateName, **context):
    """Render one of the text templates shipped in 'cayleylab/templates'."""
    env = jinja2.Environment(loader=jinja2.FileSystemLoader(searchpath=template_dir()),
                             trim_blocks=True, lstrip_blocks=True, keep_trailing_newline=True)
    return env.get_template(templateName).render(context)


def template_dir():
    return os.path.join(os.path.dirname(os.path.abspath(__file__)), 'templates')


def report_json(report):
    """Stable-ordered JSON for a VerdictReport, validated by parsing it back."""
    text = json.dumps(report.toJson(), sort_keys=True, indent=2)
    validate_report_json(text)
    return text


def validate_report_json(text):
    parsed = json.loads(text)
    if set(parsed) != REPORT_KEYS:
        raise ConsistencyError('report keys %s differ from the schema' % sorted(set(parsed) ^ REPORT_KEYS))
    for key, expected in NESTED_REPORT_KEYS.items():
        if set(parsed[key]) != expected:
            raise ConsistencyError('report field "%s" has keys %s, expected %s' % (key, sorted(parsed[key]),
                                                                                   sorted(expected)))
    if not (parsed['girth'] == 'infinite' or isinstance(parsed['girth'], int)):
        raise ConsistencyError('girth must be an integer or "infinite", got %r' % parsed['girth'])
    return parsed


def _rows(report):
    def value(x):
        return 'unavailable' if x is None else x
    return [
        ('input', report.input),
        ('points n', report.n),
        ('girth of T(S)', report.girth),
        ('|Aut(T(S))|', report.tgraphAutOrder),
        ('Cayley vertices', report.cayleyOrderV),
        ('Cayley degree', report.cayleyDegree),
        ('bipartite', report.bipartite),
        ('|Aut|', value(report.autOrder)),
        ('|G_e|', value(report.geOrder)),
        ('|L_e|', value(report.leOrder)),
        ('L_e Klein four', value(report.leIsKlein)),
        ('R(S_n) normal', value(report.rNormal)),
        ('semidirect product', value(report.semidirectHolds)),
        ('4-cycle/6-cycle condition', report.fengCondition),
        ('girth >= 5 claims applicable', report.theorem1Applicable),
        ('girth >= 5 claims confirmed', report.theorem1Confirmed),
    ]


def cmd_analyze(args, settings, fs, out):
    S = parse_spec(args.spec, fs, args.points)
    report = full_report(S, settings, skipFullAut=args.skip_full_aut)
    if args.json:
        out.write(report_json(report) + '\n')
    else:
        out.write(render('analyze.jinja.txt', rows=_rows(report), report=report))
    return EXIT_FAILURES if report.failures else EXIT_OK


def cmd_cycles(args, settings, fs, out):
    S = parse_spec(args.spec, fs, args.points)
    try:
        t, k = Transposition.parse(args.t), Transposition.parse(args.k)
    except PermutationError as e:
        raise UsageError(str(e))
    for x in (t, k):
        if x not in S:
            raise UsageError('transposition %s is not in S = {%s}' % (x.edgeToken(), S))
    cayley = build_cayley(S, settings.maxN)
    if args.len == 4:
        cycles = count_4cycles_through(cayley, t, k)
        far = None
    else:
        cycles = six_cycles_through_with_distance3(cayley, t, k)
        far = len(distance3_vertices(cayley, cycles))
    out.write(render('cycles.jinja.txt', t=t, k=k, length=args.len, far=far,
                     cycles=[c.render(cayley) for c in cycles]))
    return EXIT_OK


def cmd_verify_paper(args, settings, fs, out):
    rows = run_suite(settings, slow=args.slow)
    out.write(render('verify.jinja.txt', rows=rows, failed=[r for r in rows if not r.passed]))
    return EXIT_OK if all(r.passed for r in rows) else EXIT_FAILURES


class ArgumentParser(argparse.ArgumentParser):
    """argparse with usage errors mapped to exit code 1."""
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, '%s: error: %s\n' % (self.prog, message))


def build_parser():
    parser = ArgumentParser(prog='cayleylab',
                            description='Cayley graphs of symmetric groups generated by transpositions.')
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('-v', '--verbose', action='count', default=0, help='-v for progress, -vv for debug output')
    common.add_argument('--parallel', action='store_true', default=None, help='run per-pair checks on a thread pool')
    sub = parser.add_subparsers(dest='command', metavar='command', parser_class=ArgumentParser)
    sub.required = True

    analyze = sub.add_parser('analyze', parents=[common], help='run every check on one transposition set')
    analyze.add_argument('spec', help='edge list "1-2 2-3", preset path:n star:n cycle:n tree:<seq>, or a file')
    analyze.add_argument('--json', action='store_true', help='machine-readable output')
    analyze.add_argument('--max-n', type=int, help='construction cap for Cay(S_n,S)')
    analyze.add_argument('--skip-full-aut', action='store_true', help='skip whole-graph automorphism groups')
    analyze.add_argument('--points', type=int, help='point count, when higher than the largest endpoint')
    analyze.set_defaults(handler=cmd_analyze)

    cycles = sub.add_parser('cycles', parents=[common], help='list the 4- or 6-cycles through e, t and k')
    cycles.add_argument('spec')
    cycles.add_argument('--t', required=True, help='transposition "a-b" in S')
    cycles.add_argument('--k', required=True, help='transposition "a-b" in S')
    cycles.add_argument('--len', type=int, choices=(4, 6), default=6)
    cycles.add_argument('--max-n', type=int)
    cycles.add_argument('--points', type=int)
    cycles.set_defaults(handler=cmd_cycles)

    verify = sub.add_parser('verify-paper', parents=[common], help='run the acceptance table of published claims')
    verify.add_argument('--slow', action='store_true', help='add the n = 6 rows')
    verify.set_defaults(handler=cmd_verify_paper, max_n=None)
    return parser


def configure_logging(verbosity):
    level = {0: logging.WARNING, 1: logging.INFO}.get(verbosity, logging.DEBUG)
    logging.basicConfig(level=level, stream=sys.stderr, format='%(asctime)s %(name)s %(levelname)s: %(message)s')


def run(argv, fs=None, out=None, environ=None):
    """Parse argv, dispatch to a subcommand and return its exit code."""
    out = out or sys.stdout
    fs = fs or Filesystem()
    args = build_parser().parse_args(argv)
    configure_logging(args.verbose)
    try:
        settings = Settings.load(environ)
        settings.configure(maxN=args.max_n, parallel=args.parallel)
        return args.handler(args, settings, fs, out)
    except (SpecParseError, GraphError, GroupError, SettingsError, UsageError, OSError) as e:
        sys.stderr.write('cayleylab: error: %s\n' % e)
        return EXIT_USAGE


class SpecParseError(ValueError):
    """Raised for malformed input specs; 'position' is the character offset of the problem."""
    def __init__(self, message, position):
        ValueError.__init__(self, '%s (at position %d)' % (message, position))
        self.message = message
        self.position = position


class UsageError(ValueError):
    """Raised for arguments that parse but make no sense together."""
    def __init__(self, *args, **kwargs):
        ValueError.__init__(self, *args, **kwargs)
