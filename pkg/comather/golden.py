"""
Golden tables: loading the CSV fixtures, recomputing them, and diffing.

Mather tables have one column per Schubert variety X_w and list a_{w,v} down
the rows. Euler tables have row u and column v and hold the Euler obstruction
of X_v at the point u. Rows absent from a fixture part are zero.
"""
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Tuple

import pandas as pd

from .chow import FlagSpace
from .csm import csm_cell_gp, euler_obstructions
from .errors import InvalidInputError
from .mather import mather_class

logger = logging.getLogger(__name__)

FIXTURE_DIR = Path(__file__).resolve().parent / "fixtures"

TABLE_KINDS = ("mather", "euler", "csm")


@dataclass(frozen=True)
class GoldenSpec:
    id: str
    space: str
    kind: str
    files: Tuple[str, ...]
    extended: bool = False


GOLDEN_SPECS = {
    "Gr36": GoldenSpec("Gr36", "A5/P3", "mather", ("gr36_mather.csv",)),
    "Gr37": GoldenSpec("Gr37", "A6/P4", "mather", ("gr37_mather.csv",)),
    "Gr48": GoldenSpec("Gr48", "A7/P4", "mather", ("gr48_mather_1.csv", "gr48_mather_2.csv", "gr48_mather_3.csv")),
    "LG48-mather": GoldenSpec("LG48-mather", "C4/P4", "mather", ("lg48_mather.csv",)),
    "LG48-euler": GoldenSpec("LG48-euler", "C4/P4", "euler", ("lg48_euler.csv",)),
    "E6-mather": GoldenSpec("E6-mather", "E6/P6", "mather", ("e6_mather_1.csv", "e6_mather_2.csv")),
    "LG510-euler": GoldenSpec("LG510-euler", "C5/P5", "euler", ("lg510_euler.csv",), extended=True),
}


@dataclass
class GoldenTable:
    id: str
    space: FlagSpace
    kind: str
    parts: List[pd.DataFrame]

    def column_entries(self) -> Dict[str, Dict[str, int]]:
        """Column -> {row: value}, merging parts that split one column over several row blocks."""
        out: Dict[str, Dict[str, int]] = {}
        for part in self.parts:
            for col in part.columns:
                column = out.setdefault(col, {})
                for row, value in part[col].items():
                    column[row] = int(value)
        return out


def get_spec(table_id: str) -> GoldenSpec:
    try:
        return GOLDEN_SPECS[table_id]
    except KeyError:
        raise InvalidInputError(f"unknown golden table {table_id!r}; known: {', '.join(GOLDEN_SPECS)}") from None


def read_table(path: Path) -> pd.DataFrame:
    frame = pd.read_csv(path, index_col=0, dtype=str, keep_default_na=False)
    frame.index = frame.index.astype(str)
    return frame.astype(int)


def load_golden(table_id: str, fixture_dir: Optional[Path] = None) -> GoldenTable:
    spec = get_spec(table_id)
    space = FlagSpace.parse(spec.space)
    directory = Path(fixture_dir) if fixture_dir else FIXTURE_DIR
    parts = []
    for name in spec.files:
        frame = read_table(directory / name)
        for label in list(frame.index) + list(frame.columns):
            space.parse_element(label)
        parts.append(frame)
    logger.info("loaded golden table %s from %d file(s)", table_id, len(parts))
    return GoldenTable(table_id, space, spec.kind, parts)


# -- computing columns -------------------------------------------------------


def compute_column(space_text: str, kind: str, label: str) -> Dict[str, int]:
    """Row label -> integer entry for the column headed `label`."""
    space = FlagSpace.parse(space_text)
    w = space.parse_element(label)
    if kind == "mather":
        return mather_class(space, w).downstairs.constant_by_label()
    if kind == "euler":
        return {space.label(u): e for u, e in euler_obstructions(space, w).values.items() if e}
    if kind == "csm":
        return csm_cell_gp(space, w).constant_by_label()
    raise InvalidInputError(f"unknown table kind {kind!r}; expected one of {', '.join(TABLE_KINDS)}")


def _column_job(args: Tuple[str, str, str]) -> Tuple[str, Dict[str, int]]:
    space_text, kind, label = args
    return label, compute_column(space_text, kind, label)


def compute_columns(space: FlagSpace, kind: str, labels: Sequence[str], jobs: int = 1) -> Dict[str, Dict[str, int]]:
    tasks = [(str(space), kind, label) for label in labels]
    results: Dict[str, Dict[str, int]] = {}
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for label, column in pool.map(_column_job, tasks):
                results[label] = column
                logger.info("column %s of %s computed", label, space)
    else:
        for task in tasks:
            label, column = _column_job(task)
            results[label] = column
            logger.info("column %s of %s computed", label, space)
    return results


def stored_layout(space: FlagSpace, kind: str) -> Optional[Tuple[List[str], List[str]]]:
    """(rows, columns) of a stored single-part table covering all of W^P, if one exists."""
    labels = {space.label(w) for w in space.min_reps()}
    for spec in GOLDEN_SPECS.values():
        if spec.kind != kind or len(spec.files) != 1 or FlagSpace.parse(spec.space) != space:
            continue
        part = read_table(FIXTURE_DIR / spec.files[0])
        if set(part.index) == labels and set(part.columns) == labels:
            return list(part.index), list(part.columns)
    return None


def build_table(space: FlagSpace, kind: str, columns: Optional[Sequence[str]] = None, jobs: int = 1,
                rows: Optional[Sequence[str]] = None) -> pd.DataFrame:
    """Full table; without explicit labels the layout is the stored one, else W^P in table order."""
    all_labels = [space.label(w) for w in sorted(space.min_reps(), key=space.table_key)]
    if columns is None and rows is None:
        layout = stored_layout(space, kind)
        if layout is not None:
            rows, columns = layout
            logger.debug("using the stored layout for the %s table of %s", kind, space)
    columns = list(columns) if columns is not None else all_labels
    rows = list(rows) if rows is not None else all_labels
    computed = compute_columns(space, kind, columns, jobs)
    data = {col: [computed[col].get(row, 0) for row in rows] for col in columns}
    return pd.DataFrame(data, index=rows, columns=columns)


# -- diffing -----------------------------------------------------------------


@dataclass
class DiffReport:
    id: str
    checked: int = 0
    mismatches: List[Tuple[str, str, int, int]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def golden_diff(table_id: str, fixture_dir: Optional[Path] = None, jobs: int = 1) -> DiffReport:
    table = load_golden(table_id, fixture_dir)
    report = DiffReport(table_id)
    expected_columns = table.column_entries()
    computed = compute_columns(table.space, table.kind, list(expected_columns), jobs)
    for col, expected in expected_columns.items():
        got = computed[col]
        for row, value in expected.items():
            report.checked += 1
            if got.get(row, 0) != value:
                report.mismatches.append((row, col, value, got.get(row, 0)))
        for row, value in got.items():
            if row not in expected and value:
                report.mismatches.append((row, col, 0, value))
    logger.info("golden diff %s: %d cells, %d mismatches", table_id, report.checked, len(report.mismatches))
    return report


def table_like(table_id: str, jobs: int = 1) -> pd.DataFrame:
    """Recompute a single-part golden table with the fixture's row and column order."""
    table = load_golden(table_id)
    if len(table.parts) != 1:
        raise InvalidInputError(f"golden table {table_id} is split over several parts")
    part = table.parts[0]
    return build_table(table.space, table.kind, list(part.columns), jobs, rows=list(part.index))
