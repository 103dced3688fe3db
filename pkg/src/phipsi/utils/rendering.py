import json
from typing import Dict

import pandas as pd
from rich.console import Console
from rich.markup import escape
from rich.table import Table

from ..harness.results import SuiteResult


def dict_table(doc: Dict, title: str = None) -> Table:
    table = Table(title=title, show_header=True)
    table.add_column("field", style="cyan")
    table.add_column("value")
    for k, v in doc.items():
        table.add_row(escape(str(k)), escape(v if isinstance(v, str) else json.dumps(v)))
    return table


def frame_table(df: pd.DataFrame, title: str = None) -> Table:
    table = Table(title=title, show_header=True)
    for c in df.columns:
        table.add_column(str(c), justify="right" if pd.api.types.is_numeric_dtype(df[c]) else "left")
    for row in df.itertuples(index=False):
        table.add_row(*["" if v is None or (isinstance(v, float) and pd.isna(v)) else
                        escape(f"{v:.2f}" if isinstance(v, float) else str(v)) for v in row])
    return table


def emit(doc: Dict, fmt: str, title: str = None, frame: pd.DataFrame = None, console: Console = None):
    """Print a report as JSON, or as a rich table (plus an optional per-row frame)."""
    console = console or Console()
    if fmt == "json":
        console.print_json(json.dumps(doc))
        return
    console.print(dict_table(doc, title))
    if frame is not None and not frame.empty:
        console.print(frame_table(frame))


def emit_suite(res: SuiteResult, fmt: str, console: Console = None):
    console = console or Console()
    if fmt == "json":
        console.print_json(json.dumps(res.to_dict()))
        return

    console.print(frame_table(res.to_frame(), title=f"{res.name}: {len(res.case_results)} cases"))
    for f in res.failures:
        console.print(f"[red]FAIL[/red] " + escape(f"{f.key} :: {f.check} expected={f.expected} actual={f.actual}"))
    status = "[green]passed[/green]" if res.passed else f"[red]{len(res.failures)} failures[/red]"
    console.print(f"{res.cases_run} checks in {res.wall_time:.1f}s, {status}")
