"""
Command line entry point.

    python mainFile.py bench --algo umqms --theta 11/5 --dist random --n 2^20 --seeds 30 --mode comparisons
    python mainFile.py worstcase --algo all --n 2^18 --seeds 20
    python mainFile.py analyze --theta 11/5
    python mainFile.py gen --dist mo3killer --n 16 --seed 3
"""
import argparse
import logging
import sys
from fractions import Fraction
from typing import List, Optional

import numpy as np

from config.settings import load_settings
from core.analysis import (
    EPS_MAX,
    average_case_targets,
    eps,
    find_theta_opt,
    g,
    max_g_over_alpha,
    mom_select_coefficient,
    worst_case_constants,
)
from core.bench_collector import BenchConfig, BenchmarkCollector
from core.inputs import Distribution, InputSpec, gen_input
from core.selection import UndersamplingConfig
from core.simulation import SIMULATED_VARIANTS
from core.sorter import REGISTERED_VARIANTS, Algorithm, Mode


def parse_size(text: str) -> int:
    """Accepts plain integers and powers written as 2^k."""
    try:
        if '^' in text:
            base, exponent = text.split('^', 1)
            value = int(base) ** int(exponent)
        else:
            value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid size '{text}'")
    if value < 0:
        raise argparse.ArgumentTypeError(f"size must be non-negative, got {value}")
    return value


def parse_theta(text: str) -> UndersamplingConfig:
    try:
        return UndersamplingConfig.parse(text)
    except (ValueError, ZeroDivisionError) as e:
        raise argparse.ArgumentTypeError(str(e))


def parse_delta(text: str) -> Fraction:
    try:
        delta = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"invalid delta '{text}'")
    if not 0 < delta < Fraction(1, 2):
        raise argparse.ArgumentTypeError(f"delta must lie in (0, 1/2), got {text}")
    return delta


def _algorithms(names: List[str], worst_case: bool) -> tuple:
    if 'all' in names:
        return SIMULATED_VARIANTS if worst_case else REGISTERED_VARIANTS
    return tuple(Algorithm.parse(name) for name in names)


def _distributions(names: List[str]) -> tuple:
    if 'all' in names:
        return tuple(Distribution)
    return tuple(Distribution.parse(name) for name in names)


def build_parser(settings) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(description="Median-of-medians QuickMergesort benchmarks and bounds")
    parser.add_argument('--verbose', action='store_true', help="debug logging")
    sub = parser.add_subparsers(dest='command', required=True)

    def add_run_arguments(p, default_dist):
        p.add_argument('--algo', nargs='+', default=['all'], help="algorithms or 'all'")
        p.add_argument('--theta', type=parse_theta, default=settings.theta, help="undersampling factor p/q")
        p.add_argument('--delta', type=parse_delta, default=settings.delta, help="hybrid escalation threshold p/q")
        p.add_argument('--dist', nargs='+', default=[default_dist], help="input distributions or 'all'")
        p.add_argument('--n', nargs='+', type=parse_size, default=[1 << 16], help="sizes, 2^k accepted")
        p.add_argument('--seeds', type=int, default=settings.default_seeds, help="seeds per cell")
        p.add_argument('--first-seed', type=int, default=0)
        p.add_argument('--mode', choices=[m.value for m in Mode], default=Mode.COMPARISONS.value)
        p.add_argument('--csv', default=None, help="output CSV path")
        p.add_argument('--min-bytes', type=int, default=None, help="data floor per size (default: 0 when counting)")
        p.add_argument('--payload-bytes', type=int, default=0, help="opaque bytes carried by every element")
        p.add_argument('--distinct', type=int, default=2, help="values of the few-distinct distribution")
        p.add_argument('--jobs', type=int, default=settings.jobs, help="worker processes for counting runs")

    bench = sub.add_parser('bench', help="run a benchmark grid")
    add_run_arguments(bench, 'random')
    bench.add_argument('--worst-case', action='store_true', help="simulate the worst case")

    worst = sub.add_parser('worstcase', help="worst-case simulation grid")
    add_run_arguments(worst, 'random')

    analyze = sub.add_parser('analyze', help="print the bound constants")
    analyze.add_argument('--theta', type=parse_theta, default=settings.theta)

    gen = sub.add_parser('gen', help="print a generated input")
    gen.add_argument('--dist', default='random')
    gen.add_argument('--n', type=parse_size, default=16)
    gen.add_argument('--seed', type=int, default=0)
    gen.add_argument('--distinct', type=int, default=2)
    return parser


def run_bench(args, settings, worst_case: bool, parser: argparse.ArgumentParser) -> int:
    try:
        mode = Mode(args.mode)
        min_bytes = args.min_bytes
        if min_bytes is None:
            min_bytes = settings.default_min_bytes if mode is Mode.TIME else 0
        config = BenchConfig(
            algorithms=_algorithms(args.algo, worst_case),
            distributions=_distributions(args.dist),
            sizes=tuple(args.n),
            seeds=args.seeds,
            first_seed=args.first_seed,
            mode=mode,
            theta=args.theta,
            delta=args.delta,
            worst_case=worst_case,
            min_bytes=min_bytes,
            element_bytes=settings.element_bytes,
            payload_bytes=args.payload_bytes,
            distinct=args.distinct,
            cutoff=settings.timing_cutoff if mode is Mode.TIME else settings.counting_cutoff,
            jobs=args.jobs,
        )
    except ValueError as e:
        parser.error(str(e))
    collector = BenchmarkCollector(settings.output_directory, settings.save_to_file or args.csv is not None)
    collector.collect(config)
    collector.save_rows_to_file(args.csv)
    collector.print_collection_summary()
    return 0


def run_analyze(args) -> int:
    theta = args.theta
    theta_value = float(theta.theta)
    selection = mom_select_coefficient()
    constants = worst_case_constants(theta_value)
    eps_peak = max(eps(float(x)) for x in np.linspace(0.0, 1.0, 1001)[:-1])
    alpha, peak = max_g_over_alpha(theta_value)
    theta_opt = find_theta_opt()
    print("=" * 60)
    print("BOUND CONSTANTS")
    print("=" * 60)
    print(f"  Selection linear coefficient: {selection.coefficient:.6f} (zeta {selection.zeta:.4f})")
    print(f"  bMQMS worst case:  n log n + {constants['bmqms']:.4f} n")
    print(f"  MQMS worst case:   n log n + {constants['mqms']:.4f} n")
    print(f"  uMQMS({theta}) worst case: n log n + {peak:.4f} n (alpha {alpha:.4f})")
    print(f"  g(1/2, theta) = {g(0.5, theta_value):.5f}, g(1/(5 theta), theta) = {g(1 / (5 * theta_value), theta_value):.5f}")
    print(f"  theta_opt = {theta_opt:.6f}, g(1/2, theta_opt) = {g(0.5, theta_opt):.5f}")
    print(f"  max eps on a grid: {eps_peak:.5f} (constant used: {EPS_MAX})")
    print("\n  Average-case targets:")
    for name, value in average_case_targets().items():
        print(f"    {name:>10}: {value:.4f}")
    return 0


def run_gen(args, parser: argparse.ArgumentParser) -> int:
    try:
        distribution = Distribution.parse(args.dist)
    except ValueError as e:
        parser.error(str(e))
    values = gen_input(InputSpec(distribution, args.n, args.seed, args.distinct))
    print(' '.join(str(v) for v in values))
    return 0


def main(argv: Optional[List[str]] = None) -> int:
    settings = load_settings()
    parser = build_parser(settings)
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.INFO,
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
    )
    if args.command == 'bench':
        return run_bench(args, settings, args.worst_case, parser)
    if args.command == 'worstcase':
        return run_bench(args, settings, True, parser)
    if args.command == 'analyze':
        return run_analyze(args)
    return run_gen(args, parser)


if __name__ == "__main__":
    sys.exit(main())
