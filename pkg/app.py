#!/usr/bin/env python3
"""
Demazure Multiplicity Command Line
Outer multiplicities, characters, flag multiplicities and verification
sweeps for tensor products of affine sl2 modules
"""
import argparse
import logging
import sys
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Tuple

from algebra.affine_weights import Weight, gamma_set, parse_weight
from algebra.char_oracle import freudenthal, oracle_tensor_table
from algebra.demazure_flags import weyl_flag_poly
from algebra.outer_mult import (
    candidate_phis,
    classify_phi,
    outer_mult_closed_form,
    outer_mult_limit,
)
from config import CLI_DEFAULTS, LOGGING_CONFIG, METHODS, OUTPUT_FORMATS, VERIFY_TARGETS
from reporting import render, render_report, write_output
from services.verification_service import VerificationService, all_passed
from validation import (
    BoundError,
    ConsistencyError,
    IntegrityError,
    ResourceError,
    UnsupportedLevelError,
    ValidationError,
    validate_format,
    validate_index,
    validate_method,
    validate_nonnegative_int,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2

Table = Tuple[Sequence[str], List[Dict[str, Any]]]


@dataclass
class RunConfig:
    """Validated settings for one CLI invocation"""
    command: str
    s_max: int = CLI_DEFAULTS['s_max']
    depth: Optional[int] = CLI_DEFAULTS['depth']
    order: int = CLI_DEFAULTS['order']
    lambda_max: Optional[int] = CLI_DEFAULTS['lambda_max']
    format: str = CLI_DEFAULTS['format']
    method: str = CLI_DEFAULTS['method']
    out: Optional[str] = None
    verbose: bool = False
    threads: Optional[int] = None
    i: int = 0
    with_spec: Optional[str] = None
    weight_spec: Optional[str] = None
    mu: Optional[int] = None
    which: Optional[str] = None

    def __post_init__(self):
        self.s_max = validate_nonnegative_int(self.s_max, 's_max')
        if self.depth is not None:
            self.depth = validate_nonnegative_int(self.depth, 'depth')
        self.order = validate_nonnegative_int(self.order, 'order')
        if self.lambda_max is not None:
            self.lambda_max = validate_nonnegative_int(self.lambda_max, 'lambda_max')
        self.format = validate_format(self.format)
        self.method = validate_method(self.method)
        self.i = validate_index(self.i)


def _level_one_weight(spec: str) -> Weight:
    Lambda = parse_weight(spec)
    if Lambda.level != 1 or not Lambda.is_dominant():
        raise ValidationError('with', spec, "Must be a dominant level-one weight (Lambda0 or Lambda1 plus delta shifts)")
    return Lambda


def _positive_dominant_weight(spec: str) -> Weight:
    Lambda = parse_weight(spec)
    if Lambda.level < 1 or not Lambda.is_dominant():
        raise ValidationError('weight', spec, "Must be dominant of positive level")
    return Lambda


def _phi_label(i: int, Lambda: Weight, Phi: Weight) -> str:
    """(j, s) label of Phi relative to the top of V(Lambda_i) (x) V(Lambda)"""
    shifted = Phi.shift_delta(-Lambda.c)
    if i == 1 and Lambda.b == 1:
        if shifted.b in (0, 2) and shifted.c <= 0:
            return f"j={1 if shifted.b == 0 else 0},s={-shifted.c}"
        return ''
    label = classify_phi(i + Lambda.b, shifted)
    return f"j={label.j},s={label.s}" if label else ''


def cmd_outer_mult(config: RunConfig) -> Table:
    """Multiplicities of every candidate Phi within s_max of the top"""
    Lambda = _level_one_weight(config.with_spec)
    top_c = Lambda.c
    logger.info(f"🧮 [V(Lambda{config.i}) x V({Lambda}) : V(Phi)] by {config.method}, s <= {config.s_max}")

    if config.method == 'oracle':
        table = oracle_tensor_table(config.i, Lambda, max(config.depth, config.s_max))

    rows = []
    for Phi in candidate_phis(config.i, Lambda, config.s_max):
        if config.method == 'closed-form':
            value = outer_mult_closed_form(config.i, Lambda, Phi)
        elif config.method == 'limit':
            value = outer_mult_limit(config.i, Lambda, Phi, config.lambda_max)
        else:
            value = table.get(Phi, 0)
        if not value and not config.verbose:
            continue
        rows.append({
            'phi': Phi.to_json(),
            'label': _phi_label(config.i, Lambda, Phi),
            's': str(top_c - Phi.c),
            'mult': str(value),
            'method': config.method,
        })
    return ('phi', 'label', 's', 'mult', 'method'), rows


def cmd_character(config: RunConfig) -> Table:
    Lambda = _positive_dominant_weight(config.weight_spec)
    return ('weight', 'mult'), freudenthal(Lambda, config.depth).to_json()


def cmd_flag_mult(config: RunConfig) -> Table:
    mu = validate_nonnegative_int(config.mu, 'mu')
    rows = []
    for lam in range(mu, -1, -1):
        poly = weyl_flag_poly(mu, lam)
        if poly.is_zero():
            continue
        rows.append({'lambda': str(lam), 'poly': poly.to_json(), 'q_poly': str(poly)})
    return ('lambda', 'poly', 'q_poly'), rows


def cmd_gamma(config: RunConfig) -> Table:
    Phi = parse_weight(config.weight_spec)
    if not Phi.is_dominant():
        raise ValidationError('weight', config.weight_spec, "Must be dominant")
    lambda_max = config.lambda_max if config.lambda_max is not None else 20
    rows = [{'lambda': str(entry.lam), 'r': str(entry.r)} for entry in gamma_set(Phi, lambda_max)]
    return ('lambda', 'r'), rows


def cmd_verify(config: RunConfig) -> int:
    """Run a sweep, write the report, return the exit code"""
    service = VerificationService(config.threads)
    results = service.run(config.which, {
        's_max': config.s_max,
        'depth': config.depth,
        'order': config.order,
    })
    write_output(render_report(config.format, results, title=f"verify {config.which}"), config.out)
    if all_passed(results):
        logger.info(f"✅ verify {config.which}: {len(results)} case(s) passed")
        return EXIT_OK
    logger.error(f"❌ verify {config.which}: failures found")
    return EXIT_VERIFY_FAILED


COMMANDS = {
    'outer-mult': cmd_outer_mult,
    'character': cmd_character,
    'flag-mult': cmd_flag_mult,
    'gamma': cmd_gamma,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--format', choices=OUTPUT_FORMATS, default=CLI_DEFAULTS['format'])
    common.add_argument('--out', metavar='PATH', default=None, help='write output here instead of stdout')
    common.add_argument('--verbose', action='store_true', help='log progress and keep zero rows')
    common.add_argument('--threads', type=int, default=None, help='worker cap for sweeps')

    parser = argparse.ArgumentParser(
        prog='demazure-mult',
        description='Outer multiplicities of tensor products of affine sl2 integrable modules',
    )
    sub = parser.add_subparsers(dest='command', required=True)

    outer = sub.add_parser('outer-mult', parents=[common], help='multiplicities in V(Lambda_i) x V(Lambda)')
    outer.add_argument('--i', type=int, default=0, dest='i')
    outer.add_argument('--with', required=True, dest='with_spec', metavar='WEIGHT')
    outer.add_argument('--s-max', type=int, default=CLI_DEFAULTS['s_max'], dest='s_max')
    outer.add_argument('--depth', type=int, default=CLI_DEFAULTS['depth'])
    outer.add_argument('--lambda-max', type=int, default=None, dest='lambda_max')
    outer.add_argument('--method', choices=METHODS, default=CLI_DEFAULTS['method'])

    verify = sub.add_parser('verify', parents=[common], help='run a verification sweep')
    verify.add_argument('which', choices=VERIFY_TARGETS)
    verify.add_argument('--s-max', type=int, default=CLI_DEFAULTS['s_max'], dest='s_max')
    verify.add_argument('--depth', type=int, default=None,
                        help="truncation depth (default: each sweep's own setting)")
    verify.add_argument('--order', type=int, default=CLI_DEFAULTS['order'])

    character = sub.add_parser('character', parents=[common], help='dump a truncated character')
    character.add_argument('weight_spec', metavar='WEIGHT')
    character.add_argument('--depth', type=int, default=CLI_DEFAULTS['depth'])

    flag = sub.add_parser('flag-mult', parents=[common], help='flag multiplicities [W(mu):D(2,lambda)](q)')
    flag.add_argument('mu', type=int)

    gamma = sub.add_parser('gamma', parents=[common], help='Demazure labels of V(Phi)')
    gamma.add_argument('weight_spec', metavar='WEIGHT')
    gamma.add_argument('--lambda-max', type=int, default=None, dest='lambda_max')

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    settings = vars(args)

    logging_config = dict(LOGGING_CONFIG)
    if settings.get('verbose'):
        logging_config['level'] = 'INFO'
    logging.basicConfig(**logging_config)

    try:
        config = RunConfig(**settings)
        if config.command == 'verify':
            return cmd_verify(config)
        columns, rows = COMMANDS[config.command](config)
        write_output(render(config.format, columns, rows, title=config.command), config.out)
        return EXIT_OK
    except (ValidationError, UnsupportedLevelError, BoundError, ResourceError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (ConsistencyError, IntegrityError) as e:
        logger.error(f"❌ {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_VERIFY_FAILED


if __name__ == '__main__':
    sys.exit(main())
