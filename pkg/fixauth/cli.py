#!/usr/bin/env python3
# Software License Agreement (BSD License)
#
# Copyright (c) 2026, fixauth developers.
# All rights reserved.

"""
fixauth command line

    fixauth simulate --msg-bits 9 --tag-bits 7 --knowledge 0.1 --stop forge --seed 1
    fixauth guess --tag-bits 7 --trials 100000
    fixauth analytic --ratio 0.5 --kmax 100
    fixauth compose --eps1 1e-6 --eps2 1e-6 --rounds 10
    fixauth sweep --msg-bits 9 10 11 --trials 200 --stop forge --out sweep.csv

Data goes to stdout (or --out), logs go to stderr. Exit codes: 0 success,
1 usage error, 2 runtime error.
"""

import sys
import argparse

from .core.config.fa_config import FACONF
from .core.config.fa_code import ExitCode, FixAuthError, UsageError
from .core.utils.export import emit, read_config, to_csv, to_json
from .core.utils.log import logger, set_verbosity
from .sim.harness import SweepConfig
from .wrapper import LifetimeAPI


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError('{}\n\n{}'.format(message, self.format_help()))


def _common(parser, out_format):
    parser.add_argument('-v', '--verbose', action='count', default=0, help='more logging, repeatable')
    parser.add_argument('--out', default=None, help='output path, default is stdout')
    parser.add_argument('--format', choices=('csv', 'json'), default=out_format)


def _attack_flags(parser, msg_nargs=None):
    parser.add_argument('--config', default=None, help='JSON config file, flags override its values')
    parser.add_argument('--tag-bits', type=int, default=None)
    parser.add_argument('--msg-bits', type=int, nargs=msg_nargs, default=None)
    parser.add_argument('--knowledge', type=float, default=None,
                        help='fraction of OTP values Eve excludes each round')
    parser.add_argument('--ratio', type=float, default=None, help='surviving ratio h/H, overrides --knowledge')
    parser.add_argument('--stop', choices=(FACONF.Stop.IDENTIFY, FACONF.Stop.FORGE), default=None)
    parser.add_argument('--forge-only', action='store_true', default=None,
                        help='forge stop without OTP recovery')
    parser.add_argument('--seed', type=int, default=None)
    parser.add_argument('--budget', type=int, default=None, help='round budget per attack')


def build_parser():
    parser = _Parser(prog='fixauth', description='Lifetime of fixed-key OTP authentication under partial OTP knowledge')
    sub = parser.add_subparsers(dest='command', metavar='command')
    sub.required = True

    p = sub.add_parser('simulate', help='run a single attack and print its transcript')
    _attack_flags(p)
    p.add_argument('--target-message', type=int, default=None)
    _common(p, 'json')

    p = sub.add_parser('guess', help='guessing baseline')
    p.add_argument('--tag-bits', type=int, default=FACONF.Family.DEFAULT_TAG_BITS)
    p.add_argument('--trials', type=int, default=FACONF.Guess.DEFAULT_TRIALS)
    p.add_argument('--seed', type=int, default=0)
    p.add_argument('--budget', type=int, default=FACONF.Guess.DEFAULT_BUDGET)
    _common(p, 'json')

    p = sub.add_parser('analytic', help='lifetime table of the analytic models')
    p.add_argument('--ratio', type=float, default=0.9)
    p.add_argument('--kmax', type=int, required=True)
    p.add_argument('--H', dest='H', type=int, default=FACONF.Analytic.DEFAULT_H)
    p.add_argument('--h', dest='h', type=int, default=None, help='overrides --ratio')
    p.add_argument('--s-factor', type=float, default=None)
    _common(p, 'csv')

    p = sub.add_parser('compose', help='composability security-loss ledger')
    p.add_argument('--eps1', type=float, required=True)
    p.add_argument('--eps2', type=float, required=True)
    p.add_argument('--rounds', type=int, default=10)
    p.add_argument('--budget', type=float, default=None, help='also report the key-refresh interval, needs --format json')
    p.add_argument('--msg-bits', type=int, default=FACONF.Family.DEFAULT_MSG_BITS[0])
    p.add_argument('--tag-bits', type=int, default=FACONF.Family.DEFAULT_TAG_BITS)
    _common(p, 'csv')

    p = sub.add_parser('sweep', help='full experiment over message sizes')
    _attack_flags(p, msg_nargs='+')
    p.add_argument('--trials', type=int, default=None)
    p.add_argument('--memory-ceiling', type=int, default=None, help='bytes')
    p.add_argument('--workers', type=int, default=None, help='default is FIXAUTH_WORKERS or the cpu count')
    _common(p, 'csv')
    return parser


_SIMULATE_KEYS = ('tag_bits', 'msg_bits', 'knowledge', 'ratio', 'stop', 'forge_only', 'seed', 'budget',
                  'target_message')
_SWEEP_KEYS = ('tag_bits', 'msg_bits', 'knowledge', 'ratio', 'stop', 'forge_only', 'trials', 'seed', 'budget',
               'memory_ceiling')


def _flag_values(args, names):
    return {name: getattr(args, name) for name in names if getattr(args, name, None) is not None}


def _cmd_simulate(args):
    values = read_config(args.config, _SIMULATE_KEYS) if args.config else {}
    values.update(_flag_values(args, _SIMULATE_KEYS))
    api = LifetimeAPI(tag_bits=values.get('tag_bits', FACONF.Family.DEFAULT_TAG_BITS),
                      msg_bits=values.get('msg_bits', FACONF.Family.DEFAULT_MSG_BITS[0]),
                      knowledge=values.get('knowledge', FACONF.Knowledge.DEFAULT_FRACTION),
                      ratio=values.get('ratio', None))
    transcript = api.simulate(stop=values.get('stop', FACONF.Stop.FORGE),
                              seed=values.get('seed', 0),
                              budget=values.get('budget', FACONF.Attack.DEFAULT_BUDGET),
                              target_message=values.get('target_message', None),
                              forge_only=bool(values.get('forge_only', False)))
    if args.format == 'csv':
        return to_csv(FACONF.Csv.TRANSCRIPT, transcript.to_rows())
    return to_json(transcript.to_dict())


def _cmd_guess(args):
    api = LifetimeAPI(tag_bits=args.tag_bits, msg_bits=1)
    result = api.guess(trials=args.trials, seed=args.seed, budget=args.budget)
    if args.format == 'csv':
        return to_csv(FACONF.Csv.GUESS, list(enumerate(result.rounds)))
    return to_json(result.to_dict())


def _cmd_analytic(args):
    api = LifetimeAPI()
    table = api.analytic(args.kmax, ratio=args.ratio, H=args.H, h=args.h, s_factor=args.s_factor)
    if args.format == 'csv':
        return to_csv(FACONF.Csv.ANALYTIC, table.to_rows())
    return to_json(table.to_dict())


def _cmd_compose(args):
    if args.budget is not None and args.format == 'csv':
        raise UsageError('--budget reports the key-refresh interval, which only the json format carries; '
                         'add --format json')
    api = LifetimeAPI(tag_bits=args.tag_bits, msg_bits=args.msg_bits)
    ledger = api.compose(args.rounds, args.eps1, args.eps2)
    if args.format == 'csv':
        return to_csv(FACONF.Csv.COMPOSE, ledger.to_rows())
    data = ledger.to_dict()
    if args.budget is not None:
        plan = api.refresh_plan(args.eps1, args.eps2, args.budget)
        data['refresh'] = {'budget': args.budget, 'interval': plan.interval,
                           'key_bits': plan.key_bits, 'bits_per_round': plan.bits_per_round}
    return to_json(data)


def _cmd_sweep(args):
    flags = _flag_values(args, _SWEEP_KEYS)
    if args.config:
        config = SweepConfig.from_file(args.config, **flags)
    else:
        config = SweepConfig.from_dict(flags)
    api = LifetimeAPI(tag_bits=config.tag_bits, msg_bits=1, workers=args.workers)
    result = api.sweep(config)
    if args.format == 'csv':
        return to_csv(FACONF.Csv.SWEEP, result.to_rows())
    return to_json(result.to_dict())


_COMMANDS = {
    'simulate': _cmd_simulate,
    'guess': _cmd_guess,
    'analytic': _cmd_analytic,
    'compose': _cmd_compose,
    'sweep': _cmd_sweep,
}


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(sys.argv[1:] if argv is None else argv)
    except UsageError as e:
        print('fixauth: {}'.format(e.args[0]), file=sys.stderr)
        return ExitCode.USAGE_ERROR
    except SystemExit as e:
        # --help
        return e.code if isinstance(e.code, int) else ExitCode.NORMAL
    set_verbosity(args.verbose)
    try:
        text = _COMMANDS[args.command](args)
        text = emit(text, args.out)
    except UsageError as e:
        print('fixauth: {}'.format(e.args[0]), file=sys.stderr)
        return ExitCode.USAGE_ERROR
    except (FixAuthError, OSError, ValueError) as e:
        logger.error('{} failed: {}'.format(args.command, e))
        print('fixauth: {}'.format(e), file=sys.stderr)
        return ExitCode.RUNTIME_ERROR
    if text is not None:
        sys.stdout.write(text)
    return ExitCode.NORMAL


if __name__ == '__main__':
    sys.exit(main())
