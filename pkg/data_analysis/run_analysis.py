"""
Summary script for benchmark CSV files.

Run this script after `mainFile.py bench` to compare measured coefficients
with the worst-case bounds and average-case targets.
"""

import argparse
import os
import sys
from pathlib import Path

current_dir = Path(__file__).parent
sys.path.append(str(current_dir.parent))

from core.analysis import average_case_targets, worst_case_constants  # noqa: E402
from data_analysis.data_loader import BenchmarkLoader  # noqa: E402


def main(argv=None) -> int:
    """Main execution function."""
    parser = argparse.ArgumentParser(description="Summarize benchmark CSV files")
    parser.add_argument('data_dir', nargs='?', default='bench_data')
    parser.add_argument('--pattern', default='bench_*.csv')
    args = parser.parse_args(argv)

    print("Benchmark Data Analysis")
    print("=" * 40)
    if not os.path.exists(args.data_dir):
        print(f"Data directory '{args.data_dir}' not found!")
        return 1
    loader = BenchmarkLoader(args.data_dir, args.pattern)
    files = loader.find_csv_files()
    if not files:
        print(f"No CSV files found in '{args.data_dir}'!")
        return 1
    print(f"Found {len(files)} CSV files:")
    for path in files:
        print(f"  - {os.path.basename(path)}")

    summary = loader.summarize(loader.load(files))
    if summary.empty:
        print("No benchmark rows loaded.")
        return 1
    worst = summary[summary['worst_case'].astype(bool)]
    average = summary[~summary['worst_case'].astype(bool)]
    sections = [
        ("Worst case vs bounds", loader.compare_with_targets(worst, worst_case_constants())),
        ("Average case vs targets", loader.compare_with_targets(average, average_case_targets())),
    ]
    for title, table in sections:
        if table.empty:
            continue
        print("\n" + "=" * 40)
        print(title)
        print("=" * 40)
        print(table.to_string(index=False))
    return 0


if __name__ == "__main__":
    sys.exit(main())
