"""
Demazure Multiplicity Verification Service
Runs the verification sweeps, fanning cases out to a worker pool
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from algebra.affine_weights import (
    LAMBDA0,
    LAMBDA1,
    Weight,
    apply_word,
    fundamental,
    orbit_segment,
    reflect,
    sigma_k_word,
)
from algebra.char_oracle import decompose, freudenthal, oracle_tensor_table, tensor_character
from algebra.demazure_flags import (
    alpha1,
    alpha1_via_beta,
    beta,
    beta_sequence,
    stabilized_limit,
    weyl_flag_poly,
)
from algebra.outer_mult import (
    admissible_labels,
    candidate_phis,
    classify_phi,
    limit_support_size,
    misra_wilson,
    outer_mult_11,
    outer_mult_fundamental,
    outer_mult_limit,
    outer_mult_transferred,
    summation_bound,
    verify_b_formula,
    verify_partition_identity,
)
from algebra.partitions import (
    PartitionConstraints,
    enumerate_partitions,
    rho_bounded,
    rho_bounded_both,
    rho_distinct_parity,
)
from algebra.qseries import gaussian_binomial, gaussian_binomial_product
from config import CLI_DEFAULTS, MAX_WORKERS, VERIFY_DEFAULTS
from memo_store import log_store_stats
from reporting import CaseResult, make_case
from validation import (
    BoundError,
    ConsistencyError,
    IntegrityError,
    validate_nonnegative_int,
    validate_verify_target,
    validate_worker_count,
)

logger = logging.getLogger(__name__)

Task = Tuple[Tuple, str, Callable[[], List[CaseResult]]]

ORACLE_WEIGHTS = (
    LAMBDA0,
    LAMBDA1,
    Weight(2, 0, 0),
    Weight(2, 1, 0),
    Weight(2, 2, 0),
)

ROUND_TRIP_WEIGHTS = (
    LAMBDA0,
    LAMBDA1,
    Weight(1, 0, -2),
    Weight(2, 0, 0),
    Weight(2, 1, 0),
    Weight(2, 2, 3),
    Weight(3, 0, 0),
    Weight(3, 1, 0),
    Weight(3, 2, -1),
    Weight(3, 3, 0),
)


class VerificationService:
    """Service for running verification sweeps"""

    def __init__(self, max_workers: Optional[int] = None):
        self.max_workers = validate_worker_count(max_workers if max_workers is not None else MAX_WORKERS)

    def _run_tasks(self, tasks: Sequence[Task]) -> List[CaseResult]:
        """Run tasks in the pool; computation errors become failing rows"""
        def guarded(task: Task) -> List[CaseResult]:
            key, name, work = task
            try:
                return work()
            except (ConsistencyError, IntegrityError, BoundError) as e:
                logger.error(f"❌ {name}: {e}")
                return [make_case(key, name, 'error', str(e))]

        with ThreadPoolExecutor(max_workers=self.max_workers) as executor:
            batches = list(executor.map(guarded, tasks))

        results = sorted(result for batch in batches for result in batch)
        failed = sum(1 for result in results if not result.passed)
        if failed:
            logger.warning(f"❌ {failed} of {len(results)} case(s) failed")
        else:
            logger.info(f"✅ All {len(results)} case(s) passed")
        return results

    # ----- partition identity and generating series -----

    def verify_partrel(self, s_max: int) -> List[CaseResult]:
        s_max = validate_nonnegative_int(s_max, 's_max')
        logger.info(f"🧮 Partition identity sweep up to s={s_max}")
        return self._run_tasks([(('partrel',), 'partrel', lambda: verify_partition_identity(s_max))])

    def verify_bformula(self, order: int) -> List[CaseResult]:
        order = validate_nonnegative_int(order, 'order')
        logger.info(f"🧮 Generating series check to order {order}")
        return self._run_tasks([
            (('bformula', j), f"bformula j={j}", lambda j=j: verify_b_formula(j, order))
            for j in (0, 1)
        ])

    # ----- closed form against distinct parts and the oracle -----

    @staticmethod
    def _triple_cases(i: int, s_max: int, depth: int) -> List[CaseResult]:
        table = oracle_tensor_table(0, fundamental(i), depth)
        phis = {label.weight() for label in admissible_labels(s_max) if label.i == i}
        phis.update(phi for phi in table if -phi.c <= s_max)

        results = []
        for phi in sorted(phis, key=lambda w: (-w.c, w.b)):
            closed = outer_mult_fundamental(i, phi)
            label = classify_phi(i, phi)
            name = f"i={i},Phi={phi}"
            key = ('triple', i, -phi.c, phi.b)
            results.append(make_case(key + ('oracle',), f"{name},oracle", closed, table.get(phi, 0)))
            if label is not None:
                results.append(make_case(key + ('misra-wilson',), f"{name},misra-wilson",
                                         closed, misra_wilson(i, label.j, label.s)))
        return results

    def verify_triple(self, s_max: int, depth: int) -> List[CaseResult]:
        s_max = validate_nonnegative_int(s_max, 's_max')
        depth = max(validate_nonnegative_int(depth, 'depth'), s_max)
        logger.info(f"🧮 Triple agreement sweep up to s={s_max}, oracle depth {depth}")
        return self._run_tasks([
            (('triple', i), f"triple i={i}", lambda i=i: self._triple_cases(i, s_max, depth))
            for i in (0, 1)
        ])

    # ----- Weyl orbit closed forms -----

    @staticmethod
    def _orbit_cases(Lambda: Weight, k_max: int) -> List[CaseResult]:
        mismatches = []
        for k, with_s1, closed in orbit_segment(Lambda, k_max):
            by_word = apply_word(Lambda, sigma_k_word(k, with_s1))
            if closed != by_word:
                mismatches.append(make_case(('orbit', Lambda.a, Lambda.b, Lambda.c, k, with_s1),
                                            f"Lambda={Lambda},k={k},s1={with_s1}", closed, by_word))
        if mismatches:
            return mismatches
        checked = 2 * (2 * k_max + 1)
        return [make_case(('orbit', Lambda.a, Lambda.b, Lambda.c), f"Lambda={Lambda}", checked, checked)]

    def verify_orbit(self, k_max: int, levels: Sequence[int]) -> List[CaseResult]:
        k_max = validate_nonnegative_int(k_max, 'k_max')
        logger.info(f"🧮 Orbit closed forms for levels {tuple(levels)}, |k| <= {k_max}")
        weights = [
            Weight(level, m, s)
            for level in levels
            for m in range(level + 1)
            for s in range(-3, 4)
        ]
        return self._run_tasks([
            (('orbit', w.a, w.b, w.c), f"orbit {w}", lambda w=w: self._orbit_cases(w, k_max))
            for w in weights
        ])

    # ----- limit formula assembly and automorphism transfer -----

    @staticmethod
    def _assembly_cases(i: int, s_max: int) -> List[CaseResult]:
        results = []
        for phi in candidate_phis(i, LAMBDA0, s_max):
            closed = outer_mult_fundamental(i, phi)
            name = f"i={i},Phi={phi}"
            key = ('assembly', i, -phi.c, phi.b)
            results.append(make_case(key + ('limit',), f"{name},limit", outer_mult_limit(i, LAMBDA0, phi), closed))
            results.append(make_case(key + ('swapped',), f"{name},swapped",
                                     outer_mult_limit(0, fundamental(i), phi), closed))
            label = classify_phi(i, phi)
            if label is not None:
                bound = summation_bound(i, label.j, label.s) + 1
                support = limit_support_size(i, LAMBDA0, phi)
                results.append(make_case(key + ('support',), f"{name},support<={bound}",
                                         min(support, bound), support))
        return results

    def verify_assembly(self, s_max: int) -> List[CaseResult]:
        s_max = validate_nonnegative_int(s_max, 's_max')
        logger.info(f"🧮 Limit formula assembly up to s={s_max}")
        return self._run_tasks([
            (('assembly', i), f"assembly i={i}", lambda i=i: self._assembly_cases(i, s_max))
            for i in (0, 1)
        ])

    def verify_transfer(self, s_max: int, depth: int) -> List[CaseResult]:
        s_max = validate_nonnegative_int(s_max, 's_max')
        depth = max(validate_nonnegative_int(depth, 'depth'), s_max)
        logger.info(f"🧮 Automorphism transfer up to s={s_max}, oracle depth {depth}")

        def work() -> List[CaseResult]:
            table = oracle_tensor_table(1, LAMBDA1, depth)
            results = []
            for phi in candidate_phis(1, LAMBDA1, s_max):
                expected = outer_mult_11(phi)
                name = f"Phi={phi}"
                key = ('transfer', -phi.c, phi.b)
                results.append(make_case(key + ('transferred',), f"{name},transferred",
                                         outer_mult_transferred(1, LAMBDA1, phi), expected))
                results.append(make_case(key + ('limit',), f"{name},limit",
                                         outer_mult_limit(1, LAMBDA1, phi), expected))
                results.append(make_case(key + ('oracle',), f"{name},oracle", table.get(phi, 0), expected))
            return results

        return self._run_tasks([(('transfer',), 'transfer', work)])

    # ----- flag multiplicities and partition counts -----

    @staticmethod
    def _flag_poly_cases(mu_max: int) -> List[CaseResult]:
        results = []
        for mu in range(mu_max + 1):
            for lam in range(mu % 2, mu + 1, 2):
                p = (mu - lam) // 2
                direct = gaussian_binomial_product(mu // 2, p).shift(p * ((mu + 1) // 2))
                results.append(make_case(('flags', 'poly', mu, lam), f"flag poly mu={mu},lam={lam}",
                                         weyl_flag_poly(mu, lam), direct))
            top = weyl_flag_poly(mu, mu)
            results.append(make_case(('flags', 'top', mu), f"flag top mu={mu}", top.evaluate(1), 1))
        return results

    @staticmethod
    def _beta_cases(m_max: int, r_max: int) -> List[CaseResult]:
        results = []
        for m in range(m_max + 1):
            for p in range(m + 1):
                for sign, extra in (('-', 0), ('+', 1)):
                    poly = gaussian_binomial(m, p).shift((m + extra) * p)
                    results.append(make_case(
                        ('flags', 'beta', m, p, sign), f"beta{sign} m={m},l={m - p}",
                        [beta(sign, m, m - p, r) for r in range(r_max + 1)],
                        [poly.coeff(r) for r in range(r_max + 1)],
                    ))
        return results

    @staticmethod
    def _alpha_cases(total_max: int) -> List[CaseResult]:
        results = []
        for lam in range(total_max + 1):
            for m in range((total_max - lam) // 2 + 1):
                top = (lam + 2 * m) * (lam + 2 * m) // 2 + 1
                results.append(make_case(
                    ('flags', 'alpha', lam, m), f"alpha1 lam={lam},m={m}",
                    [alpha1(lam, m, r) for r in range(top)],
                    [alpha1_via_beta(lam, m, r) for r in range(top)],
                ))
        return results

    @staticmethod
    def _partition_cases(b_max: int, r_max: int) -> List[CaseResult]:
        results = []
        for b in range(1, b_max + 1):
            for p in range(1, b + 1):
                lhs = [rho_bounded_both(b - 1, p, r - p) for r in range(r_max + 1)]
                rhs = [rho_bounded_both(b, p, r) - rho_bounded_both(b, p - 1, r) for r in range(r_max + 1)]
                results.append(make_case(('flags', 'andrews', b, p), f"recurrence b={b},p={p}", lhs, rhs))
        for k in range(13):
            for p in range(k + 1):
                results.append(make_case(
                    ('flags', 'conjugate', k, p), f"conjugation k={k},p={p}",
                    [rho_bounded_both(k, p, m) for m in range(r_max + 1)],
                    [rho_bounded_both(p, k, m) for m in range(r_max + 1)],
                ))
        for b in range(9):
            for f in range(31):
                k = f + b
                results.append(make_case(('flags', 'complement', b, f), f"complement b={b},f={f}",
                                         rho_bounded_both(b, k - b, b * (k - b) - f), rho_bounded(b, f)))
        for m in range(31):
            results.append(make_case(('flags', 'enumerate', m), f"enumerate m={m}",
                                     len(enumerate_partitions(m)), rho_bounded(m, m)))
            for i in (0, 1):
                distinct = PartitionConstraints(distinct=True, part_parity=1 - i)
                results.append(make_case(('flags', 'enumerate-distinct', i, m), f"distinct i={i},m={m}",
                                         len(enumerate_partitions(m, distinct)), rho_distinct_parity(i, m)))
        return results

    @staticmethod
    def _stabilization_cases(b_max: int) -> List[CaseResult]:
        results = []
        for sign in ('-', '+'):
            for b in range(min(b_max, 8) + 1):
                for f in range(-2, 31):
                    limit = stabilized_limit(sign, b, f)
                    window = range(limit.threshold, limit.threshold + 6)
                    results.append(make_case(('flags', 'limit', sign, b, f), f"limit{sign} b={b},f={f}",
                                             [beta_sequence(sign, k, b, f) for k in window],
                                             [rho_bounded(b, f)] * len(window)))
        return results

    def verify_flags(self, mu_max: int, b_max: int, r_max: int) -> List[CaseResult]:
        mu_max = validate_nonnegative_int(mu_max, 'mu_max')
        b_max = validate_nonnegative_int(b_max, 'b_max')
        r_max = validate_nonnegative_int(r_max, 'r_max')
        logger.info(f"🧮 Flag multiplicity layer: mu <= {mu_max}, b <= {b_max}, r <= {r_max}")
        return self._run_tasks([
            (('flags', 'poly'), 'flag polynomials', lambda: self._flag_poly_cases(mu_max)),
            (('flags', 'beta'), 'beta families', lambda: self._beta_cases(min(mu_max // 2, 12), r_max)),
            (('flags', 'alpha'), 'alpha1', lambda: self._alpha_cases(mu_max)),
            (('flags', 'partitions'), 'partition counts', lambda: self._partition_cases(b_max, r_max)),
            (('flags', 'limit'), 'stabilized limits', lambda: self._stabilization_cases(b_max)),
        ])

    # ----- oracle self-consistency -----

    @staticmethod
    def _weyl_invariance_cases(Lambda: Weight, depth: int) -> List[CaseResult]:
        character = freudenthal(Lambda, depth)
        broken = []
        checked = 0
        for mu, mult in character.entries.items():
            for i in (0, 1):
                image = reflect(mu, i)
                if character.depth_of(image) <= depth:
                    checked += 1
                    if character.mult(image) != mult:
                        broken.append(make_case(('oracle', 'weyl', str(Lambda), str(mu), i),
                                                f"Weyl s{i} at {mu} in V({Lambda})", mult, character.mult(image)))
        extremal_ok = 0
        extremal_total = 0
        for k, with_s1, w in orbit_segment(Lambda, depth + 1):
            if 0 <= character.depth_of(w) <= depth:
                extremal_total += 1
                extremal_ok += character.mult(w) == 1
        return broken + [
            make_case(('oracle', 'weyl', str(Lambda)), f"Weyl invariance V({Lambda})", checked, checked),
            make_case(('oracle', 'extremal', str(Lambda)), f"extremal weights V({Lambda})",
                      extremal_ok, extremal_total),
        ]

    @staticmethod
    def _round_trip_cases(depth: int) -> List[CaseResult]:
        results = []
        for Phi in ROUND_TRIP_WEIGHTS:
            d = min(depth, 8)
            table = decompose(freudenthal(Phi, d), d)
            results.append(make_case(('oracle', 'round-trip', str(Phi)), f"round trip V({Phi})",
                                     {str(w): m for w, m in table.items()}, {str(Phi): 1}))
        return results

    @staticmethod
    def _order_cases(depth: int) -> List[CaseResult]:
        results = []
        for left, right in ((LAMBDA0, LAMBDA0), (LAMBDA0, Weight(2, 1, 0)), (LAMBDA1, Weight(2, 2, 0))):
            product = tensor_character(freudenthal(left, depth), freudenthal(right, depth))
            baseline = decompose(product, depth)
            for seed in range(3):
                shuffled = decompose(product, depth, seed=seed)
                results.append(make_case(('oracle', 'order', str(left), str(right), seed),
                                         f"shuffled order V({left})xV({right}) seed={seed}",
                                         {str(w): m for w, m in shuffled.items()},
                                         {str(w): m for w, m in baseline.items()}))
        return results

    def verify_oracle(self, depth: int) -> List[CaseResult]:
        depth = validate_nonnegative_int(depth, 'depth')
        logger.info(f"🧮 Oracle self-consistency at depth {depth}")
        tasks: List[Task] = [
            (('oracle', 'weyl', str(w)), f"Weyl invariance {w}", lambda w=w: self._weyl_invariance_cases(w, depth))
            for w in ORACLE_WEIGHTS
        ]
        tasks.append((('oracle', 'round-trip'), 'round trip', lambda: self._round_trip_cases(depth)))
        tasks.append((('oracle', 'order'), 'order independence', lambda: self._order_cases(depth)))
        return self._run_tasks(tasks)

    # ----- dispatch -----

    def run(self, which: str, bounds: Optional[Dict] = None) -> List[CaseResult]:
        """Run one named sweep (or all of them) with the given bounds"""
        which = validate_verify_target(which)
        settings = dict(VERIFY_DEFAULTS)
        settings.update({
            's_max': CLI_DEFAULTS['s_max'],
            'depth': CLI_DEFAULTS['depth'],
            'order': CLI_DEFAULTS['order'],
        })
        explicit = {k: v for k, v in (bounds or {}).items() if v is not None}
        if 'depth' in explicit:
            settings['oracle_depth'] = explicit['depth']
        settings.update(explicit)

        sweeps: Dict[str, Callable[[], List[CaseResult]]] = {
            'partrel': lambda: self.verify_partrel(settings['s_max']),
            'bformula': lambda: self.verify_bformula(settings['order']),
            'triple': lambda: self.verify_triple(settings['s_max'], settings['depth']),
            'orbit': lambda: self.verify_orbit(settings['orbit_k_max'], settings['orbit_levels']),
            'assembly': lambda: self.verify_assembly(settings['s_max']),
            'transfer': lambda: self.verify_transfer(settings['s_max'], settings['depth']),
            'flags': lambda: self.verify_flags(settings['flags_mu_max'], settings['flags_b_max'],
                                               settings['flags_r_max']),
            'oracle': lambda: self.verify_oracle(settings['oracle_depth']),
        }

        if which == 'all':
            results = [result for name in sweeps for result in sweeps[name]()]
        else:
            results = sweeps[which]()
        log_store_stats()
        return sorted(results)


def all_passed(results: Sequence[CaseResult]) -> bool:
    return all(result.passed for result in results)
