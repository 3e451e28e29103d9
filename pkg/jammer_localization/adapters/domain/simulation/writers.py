"""Result writers: CSV tables and run manifests."""

import os
import tempfile
from pathlib import Path
from typing import Any, Dict, List, Sequence

import pandas as pd

from jammer_localization.adapters.domain.simulation.schemas import RunManifestSchema
from jammer_localization.domain.simulation.common import ErrorMetric
from jammer_localization.domain.simulation.value_objects import ExperimentResult, WorkAggregate

AGGREGATE_COLUMNS = ("method", "ci95_m", "trials", "failures")
COMPLEXITY_COLUMNS = (
    "n_samples",
    "method",
    "mean_samples_used",
    "mean_work_units",
    "work_bound",
    "mean_runtime_us",
)


def error_column(metric: ErrorMetric) -> str:
    return f"{metric.value}_m"


def experiment_frame(result: ExperimentResult) -> pd.DataFrame:
    """One row per (grid point, method), label columns first."""
    metric = result.series[0].report.metric if result.series else ErrorMetric.RMSE
    header = list(result.columns) + ["method", error_column(metric)] + list(AGGREGATE_COLUMNS[1:])

    rows: List[Dict[str, Any]] = []
    for series in result.series:
        for point in series.report.points:
            for aggregate in point.aggregates:
                row: Dict[str, Any] = {column: series.labels.get(column) for column in result.columns}
                row[series.value_column] = point.value
                row["method"] = aggregate.method.value
                row[error_column(metric)] = aggregate.error_m
                row["ci95_m"] = aggregate.ci95_m
                row["trials"] = aggregate.trials
                row["failures"] = aggregate.failures
                rows.append(row)

    # object dtype keeps integer columns integral next to blank cells
    return pd.DataFrame(rows, columns=header, dtype=object)


def complexity_frame(aggregates: Sequence[WorkAggregate]) -> pd.DataFrame:
    rows = [
        {
            "n_samples": a.n_samples,
            "method": a.method.value,
            "mean_samples_used": a.mean_samples_used,
            "mean_work_units": a.mean_work_units,
            "work_bound": a.work_bound,
            "mean_runtime_us": a.mean_runtime_us,
        }
        for a in aggregates
    ]
    return pd.DataFrame(rows, columns=list(COMPLEXITY_COLUMNS), dtype=object)


def frame_to_csv(frame: pd.DataFrame) -> str:
    """CSV text with a header row, '.' decimals and blanks for missing values."""
    return frame.to_csv(index=False, na_rep="", lineterminator="\n")


def write_atomic(path: Path, text: str) -> Path:
    """Write through a temporary sibling file, then rename over the target."""
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp_name = tempfile.mkstemp(prefix=f".{path.name}.", suffix=".tmp", dir=path.parent)
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
        os.replace(tmp_name, path)
    except BaseException:
        if os.path.exists(tmp_name):
            os.unlink(tmp_name)
        raise
    return path


def csv_path(out_dir: Path, name: str) -> Path:
    return out_dir / f"{name}.csv"


def manifest_path(out_dir: Path, name: str) -> Path:
    return out_dir / f"{name}.manifest.json"


def write_results(out_dir: Path, name: str, frame: pd.DataFrame, manifest: RunManifestSchema) -> List[Path]:
    """Write `<name>.csv` and `<name>.manifest.json`; the CSV lands first."""
    written = [write_atomic(csv_path(out_dir, name), frame_to_csv(frame))]
    written.append(write_atomic(manifest_path(out_dir, name), manifest.model_dump_json(indent=2) + "\n"))
    return written
