import json
import logging
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Any, Iterable, Sequence

from celery import Task, group
from django.conf import settings
from rest_framework.exceptions import ParseError
from rest_framework.renderers import JSONRenderer

logger = logging.getLogger("project")


def dispatch(task: Task, calls: Sequence[tuple], workers: int) -> list[Any]:
    """
    Runs ``task`` once per argument tuple and returns the results in the
    order of ``calls``. Eager mode uses a local thread pool; otherwise the
    calls go out as one Celery group.
    """
    if settings.CELERY_TASK_ALWAYS_EAGER:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda args: task(*args), calls))
    else:
        results = group(task.s(*args) for args in calls).apply_async().get()
    logger.debug("Dispatched %s calls of %s on %s workers", len(calls), task.name, workers)
    return results


def read_json(path: str | Path) -> Any:
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, ValueError) as exc:
        raise ParseError(f"{path}: {exc}")


def write_json(path: str | Path, payload: Any) -> None:
    Path(path).write_bytes(render_machine(payload) + b"\n")


def render_machine(data: Any) -> bytes:
    return JSONRenderer().render(data)


def render_rows(rows: Iterable[Sequence[Any]]) -> str:
    """
    Left-aligned text columns; the last column is right-aligned so numbers
    line up at the end of each line.
    """
    rows = [[str(cell) for cell in row] for row in rows]
    if not rows:
        return ""
    width = max(len(row) for row in rows)
    sizes = [max((len(row[i]) for row in rows if i < len(row)), default=0) for i in range(width)]

    lines = []
    for row in rows:
        cells = [
            cell.rjust(sizes[i]) if i == len(row) - 1 else cell.ljust(sizes[i])
            for i, cell in enumerate(row)
        ]
        lines.append("  ".join(cells).rstrip())
    return "\n".join(lines)


def yes_no(value: bool | None) -> str:
    if value is None:
        return "-"
    return "yes" if value else "no"
