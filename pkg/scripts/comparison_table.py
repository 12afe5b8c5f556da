"""
Average and simulated worst-case coefficients of bMQMS, MQMS and uMQMS(11/5).

    python scripts/comparison_table.py --n 2^16 --seeds 5
"""
import argparse
import sys
from pathlib import Path

sys.path.append(str(Path(__file__).parent.parent))

from config.settings import load_settings  # noqa: E402
from core.experiments import comparison_table  # noqa: E402
from mainFile import parse_size  # noqa: E402


def main(argv=None) -> int:
    settings = load_settings()
    parser = argparse.ArgumentParser(description=__doc__.strip().splitlines()[0])
    parser.add_argument('--n', type=parse_size, default=1 << 16)
    parser.add_argument('--seeds', type=int, default=settings.default_seeds)
    parser.add_argument('--csv', default=None)
    args = parser.parse_args(argv)

    table = comparison_table(args.n, range(args.seeds))
    print("=" * 60)
    print(f"LINEAR TERMS (n = {args.n}, {args.seeds} seeds)")
    print("=" * 60)
    print(table.to_string(index=False))
    if args.csv:
        table.to_csv(args.csv, index=False)
        print(f"  - Saved {len(table)} rows to {args.csv}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
