import pytest

from core.bench_collector import BenchConfig, run_benchmark, write_csv
from core.inputs import Distribution
from core.sorter import Algorithm
from data_analysis import run_analysis
from data_analysis.data_loader import BenchmarkLoader


@pytest.fixture
def bench_dir(tmp_path):
    average = BenchConfig((Algorithm.UMQMS, Algorithm.HQMS), (Distribution.RANDOM_PERM,), (256,), seeds=3)
    worst = BenchConfig((Algorithm.MQMS,), (Distribution.RANDOM_PERM,), (256,), seeds=2, worst_case=True)
    write_csv(run_benchmark(average), str(tmp_path / "bench_average.csv"))
    write_csv(run_benchmark(worst), str(tmp_path / "bench_worst.csv"))
    (tmp_path / "notes.csv").write_text("ignored\n")
    return tmp_path


def test_loader_reads_cell_rows_only(bench_dir):
    loader = BenchmarkLoader(str(bench_dir))
    assert [p.split("/")[-1] for p in loader.find_csv_files()] == ["bench_average.csv", "bench_worst.csv"]
    df = loader.load()
    assert len(df) == 3 + 3 + 2
    assert "aggregate" not in set(df["seed"])
    assert set(df["source_file"]) == {"bench_average.csv", "bench_worst.csv"}


def test_summary_per_configuration(bench_dir):
    loader = BenchmarkLoader(str(bench_dir))
    summary = loader.summarize(loader.load())
    assert len(summary) == 3
    counts = dict(zip(summary["algorithm"], summary["count"]))
    assert counts == {"umqms": 3, "hqms": 3, "mqms": 2}
    assert (summary["max"] >= summary["mean"]).all()


def test_compare_with_targets(bench_dir):
    loader = BenchmarkLoader(str(bench_dir))
    summary = loader.summarize(loader.load())
    compared = loader.compare_with_targets(summary, {"umqms": 100.0, "mqms": -100.0})
    flags = dict(zip(compared["algorithm"], compared["within_target"]))
    assert flags["umqms"]
    assert not flags["mqms"]
    assert flags["hqms"]


def test_unreadable_files_are_skipped(tmp_path, capsys):
    (tmp_path / "bench_empty.csv").write_text("")
    loader = BenchmarkLoader(str(tmp_path))
    assert loader.load().empty
    assert loader.summarize().empty
    assert "Error loading" in capsys.readouterr().out


def test_run_analysis_prints_both_sections(bench_dir, capsys):
    assert run_analysis.main([str(bench_dir)]) == 0
    out = capsys.readouterr().out
    assert "Worst case vs bounds" in out
    assert "Average case vs targets" in out


def test_run_analysis_missing_directory(tmp_path):
    assert run_analysis.main([str(tmp_path / "nowhere")]) == 1
    assert run_analysis.main([str(tmp_path)]) == 1
