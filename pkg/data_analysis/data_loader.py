"""
Data Loader Module for Benchmark CSV Files

This module loads the CSV files written by the benchmark collector and
summarizes the normalized comparison coefficients.
"""

import glob
import os
from typing import Dict, List, Optional

import numpy as np
import pandas as pd

GROUP_COLUMNS = ['algorithm', 'theta', 'distribution', 'n', 'mode', 'worst_case']


class BenchmarkLoader:
    """Loader for the bench_*.csv files of one output directory."""

    def __init__(self, data_directory: str, pattern: str = "bench_*.csv"):
        """
        Initialize the loader.

        Args:
            data_directory: Directory holding the benchmark CSV files
            pattern: Glob pattern of the files to read
        """
        self.data_directory = data_directory
        self.pattern = pattern
        self.loaded_data: Optional[pd.DataFrame] = None

    def find_csv_files(self) -> List[str]:
        return sorted(glob.glob(os.path.join(self.data_directory, self.pattern)))

    def load_csv_file(self, file_path: str) -> pd.DataFrame:
        """
        Load one CSV file, keeping only per-seed rows.

        Args:
            file_path: Path to the CSV file

        Returns:
            DataFrame of cell rows, empty if the file could not be read
        """
        try:
            df = pd.read_csv(file_path, dtype={'seed': str, 'theta': str})
        except (OSError, pd.errors.ParserError, pd.errors.EmptyDataError) as e:
            print(f"Error loading {file_path}: {e}")
            return pd.DataFrame()
        df = df[df['seed'] != 'aggregate'].copy()
        df['source_file'] = os.path.basename(file_path)
        return df

    def load(self, files: Optional[List[str]] = None) -> pd.DataFrame:
        """
        Load and concatenate the benchmark files.

        Args:
            files: Explicit file list; defaults to every file matching the pattern

        Returns:
            All cell rows in one DataFrame
        """
        files = files if files is not None else self.find_csv_files()
        frames = [df for df in (self.load_csv_file(path) for path in files) if not df.empty]
        if not frames:
            self.loaded_data = pd.DataFrame()
        else:
            self.loaded_data = pd.concat(frames, ignore_index=True)
        return self.loaded_data

    def summarize(self, df: Optional[pd.DataFrame] = None) -> pd.DataFrame:
        """
        Mean, standard deviation and maximum of the coefficient per configuration.

        Args:
            df: Cell rows; defaults to the last loaded data

        Returns:
            One row per (algorithm, theta, distribution, n, mode, worst_case)
        """
        df = self.loaded_data if df is None else df
        if df is None or df.empty:
            return pd.DataFrame()
        grouped = df.groupby(GROUP_COLUMNS)['normalized_coefficient']
        summary = grouped.agg(['count', 'mean', 'max'])
        summary['std'] = grouped.agg(lambda s: float(np.std(s.to_numpy())))
        return summary.reset_index()

    def compare_with_targets(self, summary: pd.DataFrame, targets: Dict[str, float]) -> pd.DataFrame:
        """
        Attach a target coefficient per algorithm and flag rows above it.

        Args:
            summary: Output of summarize
            targets: Coefficient per algorithm name

        Returns:
            The summary with 'target' and 'within_target' columns
        """
        result = summary.copy()
        result['target'] = result['algorithm'].map(targets)
        column = np.where(result['worst_case'].astype(bool), result['max'], result['mean'])
        result['within_target'] = np.where(result['target'].isna(), True, column <= result['target'])
        return result
