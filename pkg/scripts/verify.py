import argparse
import logging
import sys
from collections import defaultdict

from colexcode import colexes, gf2, suites
from colexcode.errors import ColexError
from colexcode.utils import hparams_utils
from colexcode.utils.report_utils import RunReport, print_options, save_options, write_json

logger = logging.getLogger('verify')


def split_suite_hparams(hparams):
    """'nets.samples=10,code.x=1' -> {'nets': 'samples=10', 'code': 'x=1'}"""
    grouped = defaultdict(list)
    for item in hparams_utils.split_hparams_string(hparams or ''):
        name, _, value = item.partition('=')
        suite, dot, name = name.strip().partition('.')
        if not dot:
            raise ValueError('hparam %r must be prefixed with a suite name, e.g. nets.samples=10' % item)
        grouped[suite].append('%s=%s' % (name, value))
    return {suite: ','.join(items) for suite, items in grouped.items()}


def main(argv=None):
    parser = argparse.ArgumentParser(description='run verification suites on a colex file')
    parser.add_argument("colex", type=str, help="path of the colex file")
    parser.add_argument("--suite", type=str, default='all', choices=list(suites.SUITE_NAMES) + ['all'])
    parser.add_argument("--out", type=str, help="path of the json report, stdout by default")
    parser.add_argument("--cap", type=int, default=gf2.DEFAULT_ENUMERATION_CAP,
                        help="maximum number of elements in any enumerated span")
    parser.add_argument("--paper-claims", "--claims", dest='claims', action='store_true',
                        help="report published values next to computed ones")
    parser.add_argument("--hparams_dict", type=str, help="a json file mapping suite names to hyperparameters")
    parser.add_argument("--hparams", type=str, help="a string of comma separated list of suite.name=value pairs")

    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO, format='%(levelname)s:%(name)s:%(message)s')
    print_options(args)

    if args.cap < 1:
        parser.error('--cap must be positive')
    suite_names = suites.SUITE_NAMES if args.suite == 'all' else (args.suite,)
    try:
        hparams_dicts = hparams_utils.load_hparams_dict(args.hparams_dict)
        hparams_strings = split_suite_hparams(args.hparams)
    except (TypeError, ValueError) as e:
        parser.error(str(e))

    try:
        colex = colexes.load_colex(args.colex)
    except (OSError, ColexError) as e:
        logger.error('%s', e)
        return 3

    report = RunReport('verify', dict(colex=args.colex, suite=args.suite, cap=args.cap, claims=args.claims))
    context = suites.VerificationContext(colex, cap=args.cap, claims=args.claims)
    try:
        suite_objects = [suites.get_suite_class(name)(context, hparams_dict=hparams_dicts.get(name),
                                                      hparams=hparams_strings.get(name))
                         for name in suite_names]
    except (TypeError, ValueError) as e:
        parser.error(str(e))

    try:
        for suite in suite_objects:
            suite.run(report)
    except ColexError as e:
        logger.error('%s', e)
        return 3
    except Exception:
        logger.exception('verification failed with an internal error')
        return 1

    report_dict = report.to_dict()
    if args.claims:
        report_dict['claims'] = dict(suites.CLAIMS)
    write_json(report_dict, args.out)
    if args.out:
        save_options(args, args.out, hparams={suite.name: suite.hparams.to_dict() for suite in suite_objects})
    return 0 if report.passed else 3


if __name__ == '__main__':
    sys.exit(main())
