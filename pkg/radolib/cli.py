"""Command line entry point: `python -m radolib <command> ...`.

Every command prints "key=value" lines on stdout; diagnostics go to stderr
through logging. Exit codes: 0 success (or Exact), 2 AtLeast, 1 error."""
import argparse
import logging
import sys
from typing import Optional, Sequence, TextIO

import numpy

from .lib.deuber import Generator, MpcParams, extractSolution, mpcElements, paramsFromWitness
from .lib.linalg import IntegerMatrix
from .lib.Parser import formatWitness, parseIntegerSet, readColouring, readFunction, readMatrix, readWitness, writeColouring, writeWitness
from .lib.progression import Progression, checkProgressionProperties
from .lib.regularity import findWitness, verifyWitness
from .lib.search import MODES, RadoResult, findMonoSolution, mpcThreshold, radoNumber
from .lib.SelfTest import runSuites
from .lib.Systems import systemByName
from .lib.uniformity import LinearSystemMap, ModFunction, factorizationGap, gowersNorm, gvnReport, qCount

LOG = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_AT_LEAST = 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """Reports usage errors as exceptions so run() can map them to exit code 1."""

    def error(self, message: str):
        raise UsageError(f'{self.format_usage()}{self.prog}: error: {message}')


def _flag(value: bool) -> str:
    return 'true' if value else 'false'


def _real(value: float) -> str:
    return f'{value:.12g}'


def _joined(values: Sequence[int]) -> str:
    return ','.join(str(v) for v in values)


def _matrix(args: argparse.Namespace) -> IntegerMatrix:
    return readMatrix(args.matrix) if args.matrix else systemByName(args.system)


def _addMatrixSource(parser: argparse.ArgumentParser) -> None:
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument('--matrix', metavar='FILE', help='matrix file: "k d" then k rows of d integers')
    source.add_argument('--system', metavar='NAME', help='named system: schur, gschur:K, brauer:D or ap:K')


def _regcheck(args: argparse.Namespace, out: TextIO) -> int:
    A = _matrix(args)
    if args.verify:
        out.write(f'verified={_flag(verifyWitness(A, readWitness(args.verify)))}\n')
        return EXIT_OK

    W = findWitness(A)
    if W is None:
        out.write('regular=false\n')
        return EXIT_OK
    t, claimed, agrees = W.rankReport()
    out.write(f'regular=true t={t} one_plus_rank={claimed} rank_agrees={_flag(agrees)}\n')
    out.write(formatWitness(W))
    if args.witness:
        writeWitness(args.witness, W)
    return EXIT_OK


def _mpc(args: argparse.Namespace, out: TextIO) -> int:
    s = Generator.parse(args.generator)
    if args.matrix or args.system:
        A = _matrix(args)
        W = readWitness(args.witness) if args.witness else findWitness(A)
        if W is None:
            raise ValueError('Matrix is not partition regular, no witness to extract from')
        base = paramsFromWitness(W)
        out.write(f'witness_params={base}\n')
        params = MpcParams(s.m, base.p, base.c)
    elif args.mpc:
        A, W, params = None, None, MpcParams.parse(args.mpc)
    else:
        raise ValueError('mpc needs --mpc or a matrix source')

    spanned = mpcElements(params, s)
    out.write(f'params={params}\n')
    out.write(f'generator={s}\n')
    out.write(f'elements={_joined(spanned.Elements)}\n')
    out.write(f'valid={_flag(spanned.Valid)}\n')
    if A is not None and W is not None:
        out.write(f'solution={_joined(extractSolution(A, W, s))}\n')
    return EXIT_OK


def _writeResult(result: RadoResult, certificate: Optional[str], out: TextIO) -> int:
    out.write(f'kind={result.Kind.value} value={result.Value}\n')
    if certificate:
        writeColouring(certificate, result.Certificate)
    return EXIT_OK if result.isExact else EXIT_AT_LEAST


def _rado(args: argparse.Namespace, out: TextIO) -> int:
    result = radoNumber(_matrix(args), args.colours, args.max_n, args.mode, args.threads, args.node_limit)
    return _writeResult(result, args.certificate, out)


def _threshold(args: argparse.Namespace, out: TextIO) -> int:
    result = mpcThreshold(MpcParams.parse(args.mpc), args.colours, args.max_n, args.threads, args.node_limit)
    return _writeResult(result, args.certificate, out)


def _mono(args: argparse.Namespace, out: TextIO) -> int:
    found = findMonoSolution(_matrix(args), readColouring(args.colouring), args.mode)
    if found is None:
        out.write('result=none\n')
    else:
        colour, x = found
        out.write(f'result=found colour={colour} solution={_joined(x)}\n')
    return EXIT_OK


def _gowers(args: argparse.Namespace, out: TextIO) -> int:
    f = readFunction(args.function)
    for k in range(1, args.order + 1) if args.all_orders else (args.order,):
        out.write(f'N={f.Modulus} k={k} norm={_real(gowersNorm(f, k, args.threads))}\n')
    return EXIT_OK


def _qcount(args: argparse.Namespace, out: TextIO) -> int:
    A = parseIntegerSet(args.set)
    params = MpcParams.parse(args.mpc)
    Ps = [Progression.parse(text) for text in args.progression]
    if args.gap:
        report = factorizationGap(A, params, Ps)
        out.write(f'alpha={report.Alpha} q={report.Q} q_lower={report.QLower}\n')
        out.write(f'predicted={report.Predicted} gap={report.Gap} gap_real={_real(float(report.Gap))}\n')
        out.write(f'alternative={report.Alternative} alternative_gap={report.AlternativeGap}\n')
    else:
        q = qCount(A, params, Ps)
        out.write(f'q={q} q_real={_real(float(q))}\n')
    return EXIT_OK


def _parseForms(text: str) -> LinearSystemMap:
    try:
        return LinearSystemMap(tuple(tuple(int(v) for v in form.split(',')) for form in text.split(';')))
    except ValueError as e:
        raise ValueError(f'Malformed forms "{text}", expected e.g. "1,0;0,1;1,1"') from e


def _gvn(args: argparse.Namespace, out: TextIO) -> int:
    Psi = _parseForms(args.forms)
    if args.function:
        trials = [[readFunction(path) for path in args.function]]
        N = trials[0][0].Modulus
    else:
        if args.modulus is None:
            raise ValueError('gvn needs --function files or --modulus for random trials')
        N = args.modulus
        rng = numpy.random.default_rng(args.seed)
        trials = [[ModFunction.random(N, rng) for _ in range(Psi.l)] for _ in range(args.trials)]

    violations = 0
    for index, fs in enumerate(trials):
        report = gvnReport(Psi, fs, args.order, N, args.threads)
        violations += report.violated
        out.write(
            f'trial={index} N={N} k={args.order} lambda_abs={_real(abs(report.LambdaValue))} '
            f'min_norm={_real(min(report.Norms))} slack={_real(report.Slack)} violated={_flag(report.violated)}\n')
    out.write(f'trials={len(trials)} violations={violations}\n')
    return EXIT_OK


def _progProps(args: argparse.Namespace, out: TextIO) -> int:
    for name, (passed, failed) in checkProgressionProperties(args.seed, args.samples, args.max_radius).items():
        out.write(f'property={name} passed={passed} failed={failed}\n')
    return EXIT_OK


def _selftest(args: argparse.Namespace, out: TextIO) -> int:
    tallies = runSuites(args.seed, args.threads, args.suite or ())
    for tally in tallies:
        out.write(f'{tally}\n')
    return EXIT_OK if all(tally.Failed == 0 for tally in tallies) else EXIT_ERROR


def buildParser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument('--seed', type=int, default=0, help='seed of every randomised computation')
    common.add_argument('--threads', type=int, default=1, help='worker threads for searches and norms')
    common.add_argument('--verbose', action='store_true', help='debug logging on stderr')

    parser = _Parser(prog='radolib', description='Partition regularity, Deuber sets, Gowers norms and Rado numbers.')
    commands = parser.add_subparsers(dest='command', required=True, parser_class=_Parser)

    regcheck = commands.add_parser('regcheck', parents=[common], help='decide partition regularity via the columns condition')
    _addMatrixSource(regcheck)
    regcheck.add_argument('--witness', metavar='OUT', help='write the witness found to this file')
    regcheck.add_argument('--verify', metavar='FILE', help='verify a witness file instead of searching')
    regcheck.set_defaults(handler=_regcheck)

    mpc = commands.add_parser('mpc', parents=[common], help='(m,p,c)-set elements and solution extraction')
    source = mpc.add_mutually_exclusive_group()
    source.add_argument('--matrix', metavar='FILE')
    source.add_argument('--system', metavar='NAME')
    source.add_argument('--mpc', metavar='m,p,c')
    mpc.add_argument('--generator', metavar='S', required=True, help='comma separated generator s_0,...,s_m')
    mpc.add_argument('--witness', metavar='FILE', help='witness file; searched for when omitted')
    mpc.set_defaults(handler=_mpc)

    rado = commands.add_parser('rado', parents=[common], help='exact Rado number with certificate')
    _addMatrixSource(rado)
    rado.add_argument('--colours', type=int, required=True)
    rado.add_argument('--max-n', type=int, required=True)
    rado.add_argument('--mode', choices=MODES, default='all')
    rado.add_argument('--certificate', metavar='OUT')
    rado.add_argument('--node-limit', type=int)
    rado.set_defaults(handler=_rado)

    mono = commands.add_parser('mono', parents=[common], help='monochromatic solution in a colouring')
    _addMatrixSource(mono)
    mono.add_argument('--colouring', metavar='FILE', required=True)
    mono.add_argument('--mode', choices=MODES, default='all')
    mono.set_defaults(handler=_mono)

    threshold = commands.add_parser('threshold', parents=[common], help='monochromatic (m,p,c)-set threshold')
    threshold.add_argument('--mpc', metavar='m,p,c', required=True)
    threshold.add_argument('--colours', type=int, required=True)
    threshold.add_argument('--max-n', type=int, required=True)
    threshold.add_argument('--certificate', metavar='OUT')
    threshold.add_argument('--node-limit', type=int)
    threshold.set_defaults(handler=_threshold)

    gowers = commands.add_parser('gowers', parents=[common], help='Gowers U^k norm of a function file')
    gowers.add_argument('--function', metavar='FILE', required=True, help='"N" then N lines "re im"')
    gowers.add_argument('--order', '-k', type=int, default=2)
    gowers.add_argument('--all-orders', action='store_true', help='print every order from 1 up to --order')
    gowers.set_defaults(handler=_gowers)

    qcount = commands.add_parser('qcount', parents=[common], help='Q_{m,p,c} count over progressions')
    qcount.add_argument('--set', required=True, help='e.g. "1..10,14"')
    qcount.add_argument('--mpc', metavar='m,p,c', required=True)
    qcount.add_argument('--progression', metavar='x,d,N', action='append', required=True, help='P_0 first, repeat m+1 times')
    qcount.add_argument('--gap', action='store_true', help='report the factorisation gap instead')
    qcount.set_defaults(handler=_qcount)

    gvn = commands.add_parser('gvn', parents=[common], help='generalised von Neumann bound check')
    gvn.add_argument('--forms', default='1,0;0,1;1,1', help='forms separated by ";", default x, y, x+y')
    gvn.add_argument('--function', metavar='FILE', action='append', help='one file per form')
    gvn.add_argument('--modulus', type=int, help='prime modulus for random trials')
    gvn.add_argument('--trials', type=int, default=10)
    gvn.add_argument('--order', '-k', type=int, default=2)
    gvn.set_defaults(handler=_gvn)

    progProps = commands.add_parser('prog-props', parents=[common], help='randomised progression property suite')
    progProps.add_argument('--samples', type=int, default=1000)
    progProps.add_argument('--max-radius', type=int, default=1000)
    progProps.set_defaults(handler=_progProps)

    selftest = commands.add_parser('selftest', parents=[common], help='run the seeded invariant suites')
    selftest.add_argument('--suite', action='append', help='restrict to a suite, may repeat')
    selftest.set_defaults(handler=_selftest)
    return parser


def run(argv: Optional[Sequence[str]] = None, out: TextIO = sys.stdout, err: TextIO = sys.stderr) -> int:
    parser = buildParser()
    try:
        args = parser.parse_args(argv)
    except UsageError as e:
        err.write(f'{e}\n')
        return EXIT_ERROR
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_OK

    logging.basicConfig(stream=err, level=logging.DEBUG if args.verbose else logging.WARNING,
                        format='%(levelname)s %(name)s: %(message)s', force=True)
    try:
        return args.handler(args, out)
    except (ValueError, SyntaxError, OSError) as e:
        LOG.debug('command %s failed', args.command, exc_info=True)
        err.write(f'error: {e}\n')
        return EXIT_ERROR


def main() -> None:
    sys.exit(run())
