"""
Undersampling sweep: simulated worst-case coefficient of uMQMS for several theta.

    python scripts/theta_sweep.py --n 2^16 --seeds 5
"""
import argparse
import sys
from pathlib import Path

sys.path.append(str(Path(__file__).parent.parent))

from config.settings import load_settings  # noqa: E402
from core.experiments import THETA_GRID, best_theta, theta_sweep  # noqa: E402
from mainFile import parse_size  # noqa: E402


def main(argv=None) -> int:
    settings = load_settings()
    parser = argparse.ArgumentParser(description=__doc__.strip().splitlines()[0])
    parser.add_argument('--theta', nargs='+', default=list(THETA_GRID))
    parser.add_argument('--n', type=parse_size, default=1 << 16)
    parser.add_argument('--seeds', type=int, default=settings.default_seeds)
    parser.add_argument('--csv', default=None)
    args = parser.parse_args(argv)

    sweep = theta_sweep(args.theta, args.n, range(args.seeds))
    print("=" * 60)
    print(f"UNDERSAMPLING SWEEP (n = {args.n}, {args.seeds} seeds)")
    print("=" * 60)
    print(sweep.to_string(index=False))
    print(f"\n  Lowest simulated coefficient at theta = {best_theta(sweep)}")
    if args.csv:
        sweep.to_csv(args.csv, index=False)
        print(f"  - Saved {len(sweep)} rows to {args.csv}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
