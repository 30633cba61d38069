import argparse
import json
import logging
import os
import sys

from colexcode import colexes
from colexcode.utils import hparams_utils
from colexcode.utils.report_utils import print_options, save_options

logger = logging.getLogger('build')


def main(argv=None):
    parser = argparse.ArgumentParser(description='build a colex and write it to a file')
    parser.add_argument("--target", type=str, required=True, choices=['tesseract', 'tetra', 'torus'],
                        help="builder class name")
    parser.add_argument("--L", type=int, help="period of the torus, must be even")
    parser.add_argument("--hparams_dict", type=str, help="a json file of builder hyperparameters")
    parser.add_argument("--hparams", type=str, help="a string of comma separated list of builder hyperparameters")
    parser.add_argument("--out", type=str, required=True, help="path of the colex file to write")

    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO, format='%(levelname)s:%(name)s:%(message)s')
    print_options(args)

    try:
        hparams_dict = hparams_utils.load_hparams_dict(args.hparams_dict)
    except ValueError as e:
        parser.error(str(e))
    if args.L is not None:
        if args.target != 'torus':
            parser.error('--L only applies to the torus')
        if args.L < 2 or args.L % 2:
            parser.error('--L must be even and at least 2, got %d' % args.L)
        hparams_dict['period'] = args.L

    try:
        ColexBuilder = colexes.get_builder_class(args.target)
        builder = ColexBuilder(hparams_dict=hparams_dict, hparams=args.hparams)
    except (TypeError, ValueError) as e:
        parser.error(str(e))
    if args.target == 'torus' and (builder.hparams.period < 2 or builder.hparams.period % 2):
        parser.error('torus period must be even and at least 2, got %d' % builder.hparams.period)

    try:
        colex = builder.build_validated()
        head, _ = os.path.split(args.out)
        if head and not os.path.exists(head):
            os.makedirs(head)
        colexes.save_colex(colex, args.out)
        save_options(args, args.out, hparams=builder.hparams.to_dict())
    except Exception:
        logger.exception('failed to build %s', args.target)
        return 1

    print(json.dumps(dict(target=args.target, out=args.out, hparams=builder.hparams.to_dict(),
                          counts=colex.counts()), sort_keys=True, indent=4))
    return 0


if __name__ == '__main__':
    sys.exit(main())
