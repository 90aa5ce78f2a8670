import json
import sys
from typing import Iterable

from pydantic import BaseModel


def use_json(forced: bool) -> bool:
    """JSON lines unless a terminal is attached and --json was not given."""
    return forced or not sys.stdout.isatty()


def _plain(record) -> dict:
    if isinstance(record, BaseModel):
        return record.model_dump(exclude_none=True)
    return record


def emit(records: Iterable, as_json: bool, stream=None) -> None:
    stream = stream or sys.stdout
    for record in records:
        record = _plain(record)
        if as_json:
            stream.write(json.dumps(record, sort_keys=True) + "\n")
        else:
            stream.write("  ".join(f"{k}={_text(v)}" for k, v in record.items()) + "\n")


def emit_lines(lines: Iterable[str], stream=None) -> None:
    stream = stream or sys.stdout
    for line in lines:
        stream.write(line + "\n")


def _text(value) -> str:
    if isinstance(value, (list, tuple)):
        return "(" + ", ".join(_text(v) for v in value) + ")"
    if isinstance(value, dict):
        return "{" + ", ".join(f"{k}: {_text(v)}" for k, v in value.items()) + "}"
    return str(value)
