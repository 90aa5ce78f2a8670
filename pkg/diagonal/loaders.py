import json
import logging
from pathlib import Path
from typing import Any, Dict

from pydantic import ValidationError as SchemaError

from .exceptions import ConfigError, ValidationError
from .fibrations.equation import ParametricSolution
from .forms.form import Form, parse_form
from .schemas import SolutionRecord
from .surface.cone import RationalCone

logger = logging.getLogger(__name__)


def _existing(file_path: str | Path) -> Path:
    path = Path(file_path)
    if not path.exists():
        raise ConfigError(f"Config file not found: {path}")
    return path


def _read_text(path: Path) -> str:
    try:
        return path.read_text(encoding="utf-8")
    except Exception as e:
        raise ConfigError(f"Failed to read {path}: {e}")


def load_json(file_path: str | Path) -> Dict[str, Any]:
    """
    Loads a JSON configuration or data file.
    """
    path = _existing(file_path)
    try:
        with open(path, "r", encoding="utf-8") as f:
            return json.load(f)
    except json.JSONDecodeError as e:
        raise ConfigError(f"Invalid JSON in {path}: {e}")
    except Exception as e:
        raise ConfigError(f"Failed to load JSON {path}: {e}")


def load_yaml(file_path: str | Path) -> Dict[str, Any]:
    """
    Loads a YAML configuration file.
    Requires PyYAML to be installed.
    """
    path = _existing(file_path)

    try:
        import yaml
    except ImportError:
        logger.error("PyYAML not installed. Cannot load YAML config.")
        raise ConfigError("PyYAML is required to load YAML files. Please pip install PyYAML.")

    try:
        with open(path, "r", encoding="utf-8") as f:
            return yaml.safe_load(f)
    except yaml.YAMLError as e:
        raise ConfigError(f"Invalid YAML in {path}: {e}")
    except Exception as e:
        raise ConfigError(f"Failed to load YAML {path}: {e}")


def load_config(file_path: str | Path) -> Dict[str, Any]:
    """JSON or YAML by extension. An empty file is an empty config."""
    path = Path(file_path)
    if path.suffix.lower() in (".yaml", ".yml"):
        data = load_yaml(path)
    else:
        data = load_json(path)
    if data is None:
        return {}
    if not isinstance(data, dict):
        raise ConfigError(f"Expected a mapping at the top of {path}, got {type(data).__name__}")
    return data


# ----------------------------------------------------------------------
# Text inputs
# ----------------------------------------------------------------------
def load_constraints(file_path: str | Path) -> RationalCone:
    """
    One integer row vector per line, whitespace separated; '#' starts a comment.
    Each row c is the half-space c . v >= 0.
    """
    path = _existing(file_path)
    rows = []
    for number, raw in enumerate(_read_text(path).splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            rows.append(tuple(int(v) for v in line.split()))
        except ValueError:
            raise ConfigError(f"Invalid constraint row in {path} line {number}: {raw!r}")
    if not rows:
        raise ConfigError(f"No constraints in {path}")
    try:
        cone = RationalCone(tuple(rows))
    except ValidationError as e:
        raise ConfigError(f"Invalid constraints in {path}: {e}")
    logger.debug(f"Loaded {len(rows)} constraints of dimension {cone.dimension} from {path}")
    return cone


def load_form(file_path: str | Path) -> Form:
    path = _existing(file_path)
    try:
        return parse_form(_read_text(path))
    except ValidationError as e:
        raise ConfigError(f"Invalid form in {path}: {e}")


# ----------------------------------------------------------------------
# Solution files
# ----------------------------------------------------------------------
def load_solution(file_path: str | Path) -> ParametricSolution:
    path = _existing(file_path)
    if not _read_text(path).strip():
        raise ConfigError(f"Empty solution file: {path}")
    data = load_json(path)
    try:
        return SolutionRecord.model_validate(data).to_solution()
    except SchemaError as e:
        raise ConfigError(f"Invalid solution file {path}: {e}")
    except ValidationError as e:
        raise ConfigError(f"Invalid equation in {path}: {e}")


def save_solution(sol: ParametricSolution, file_path: str | Path) -> Path:
    path = Path(file_path)
    path.parent.mkdir(parents=True, exist_ok=True)
    record = SolutionRecord.from_solution(sol)
    with open(path, "w", encoding="utf-8") as f:
        f.write(record.model_dump_json(indent=2))
        f.write("\n")
    logger.info(f"Solution written to {path}")
    return path
