"""
Median-of-3 killer experiment: plain quicksort against the guarded hybrids.

    python scripts/hybrid_robustness.py --n 2^12 --seeds 3
"""
import argparse
import sys
from pathlib import Path

sys.path.append(str(Path(__file__).parent.parent))

from config.settings import load_settings  # noqa: E402
from core.experiments import HYBRID_DISTRIBUTIONS, hybrid_robustness  # noqa: E402
from core.inputs import Distribution  # noqa: E402
from mainFile import parse_size  # noqa: E402


def main(argv=None) -> int:
    settings = load_settings()
    parser = argparse.ArgumentParser(description=__doc__.strip().splitlines()[0])
    parser.add_argument('--n', type=parse_size, default=1 << 12)
    parser.add_argument('--seeds', type=int, default=settings.default_seeds)
    parser.add_argument('--dist', nargs='+', default=[d.value for d in HYBRID_DISTRIBUTIONS])
    parser.add_argument('--csv', default=None)
    args = parser.parse_args(argv)

    try:
        distributions = [Distribution.parse(name) for name in args.dist]
    except ValueError as e:
        parser.error(str(e))
    table = hybrid_robustness(args.n, range(args.seeds), distributions)
    print("=" * 60)
    print(f"HYBRID ROBUSTNESS (n = {args.n}, {args.seeds} seeds)")
    print("=" * 60)
    print(table.to_string(index=False))
    if args.csv:
        table.to_csv(args.csv, index=False)
        print(f"  - Saved {len(table)} rows to {args.csv}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
