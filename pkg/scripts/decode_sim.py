import argparse
import logging
import sys

from colexcode import colexes, gf2, metrics
from colexcode.code import code_from_colex, compute_distance
from colexcode.decoder import BASES, build_lookup, get_default_sim_hparams_dict, monte_carlo
from colexcode.errors import ColexError, DistanceRefutedError
from colexcode.utils import hparams_utils
from colexcode.utils.report_utils import print_options, save_options, write_json_lines

logger = logging.getLogger('decode_sim')


def parse_p_grid(value):
    return [float(p) for p in value.split(',') if p.strip()]


def main(argv=None):
    parser = argparse.ArgumentParser(description='Monte Carlo logical error rates of lookup decoding')
    parser.add_argument("colex", type=str, help="path of a colex file whose code encodes one qubit")
    parser.add_argument("--p", type=str, help="comma separated physical error probabilities")
    parser.add_argument("--trials", type=int, help="trials per error probability")
    parser.add_argument("--seed", type=int)
    parser.add_argument("--basis", type=str, choices=BASES)
    parser.add_argument("--out", type=str, help="path of the json lines output, stdout by default")
    parser.add_argument("--cap", type=int, default=gf2.DEFAULT_ENUMERATION_CAP,
                        help="maximum number of elements in the distance search")
    parser.add_argument("--hparams_dict", type=str, help="a json file of simulation hyperparameters")
    parser.add_argument("--hparams", type=str, help="a string of comma separated list of simulation hyperparameters")

    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO, format='%(levelname)s:%(name)s:%(message)s')
    print_options(args)

    try:
        hparams = hparams_utils.parse_hparams(get_default_sim_hparams_dict(),
                                              hparams_utils.load_hparams_dict(args.hparams_dict), args.hparams)
        if args.p is not None:
            hparams.p_grid = parse_p_grid(args.p)
        for name in ('trials', 'seed', 'basis'):
            if getattr(args, name) is not None:
                hparams[name] = getattr(args, name)
    except (TypeError, ValueError) as e:
        parser.error(str(e))
    if hparams.trials < 0:
        parser.error('--trials must be non-negative')
    if any(not 0 <= p < 0.5 for p in hparams.p_grid):
        parser.error('error probabilities must lie in [0, 0.5)')

    try:
        colex = colexes.load_colex(args.colex)
        code = code_from_colex(colex)
    except (OSError, ColexError) as e:
        logger.error('%s', e)
        return 3
    if code.k != 1:
        parser.error('decoding simulation needs a code with k=1, %s has k=%d' % (args.colex, code.k))

    try:
        distance = compute_distance(code, cap=args.cap)
        decoder = build_lookup(code, distance.d, cap=hparams.table_cap)
        reports = monte_carlo(code, decoder, list(hparams.p_grid), hparams.trials, hparams.seed,
                              basis=hparams.basis, shard_size=hparams.shard_size)
    except DistanceRefutedError as e:
        logger.error('%s', e)
        return 3
    except Exception:
        logger.exception('simulation failed with an internal error')
        return 1

    logger.info('certified t=%d from exhaustive d=%d', decoder.t, distance.d)
    rates = [(report.p, report.logical_rate) for report in reports if report.p > 0]
    if len(rates) >= 2:
        (p_low, rate_low), (p_high, rate_high) = min(rates), max(rates)
        logger.info('log-log slope between p=%g and p=%g: %s', p_low, p_high,
                    metrics.loglog_slope(p_low, rate_low, p_high, rate_high))
    write_json_lines([report.to_dict() for report in reports], args.out)
    if args.out:
        save_options(args, args.out, hparams=hparams.to_dict())
    return 0


if __name__ == '__main__':
    sys.exit(main())
