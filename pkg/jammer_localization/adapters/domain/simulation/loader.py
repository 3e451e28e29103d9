"""Scenario file loading: JSON or YAML documents, or a run manifest."""

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, Optional

import yaml
from pydantic import ValidationError

from jammer_localization.adapters.domain.simulation.schemas import (
    RunManifestSchema,
    ScenarioDocumentSchema,
    ScenarioSchema,
)
from jammer_localization.domain.simulation.exceptions import ScenarioConfigurationError

YAML_SUFFIXES = (".yaml", ".yml")
MANIFEST_KEY = "config"


@dataclass(frozen=True)
class LoadedDocument:
    """A validated scenario document and, when read from a manifest, the manifest itself."""

    document: ScenarioDocumentSchema
    manifest: Optional[RunManifestSchema] = None


def format_validation_error(error: ValidationError, prefix: str = "") -> str:
    """One line per failing field, dotted path first."""
    lines = []
    for item in error.errors():
        location = ".".join(str(part) for part in item["loc"])
        if prefix:
            location = f"{prefix}.{location}" if location else prefix
        lines.append(f"{location or '<root>'}: {item['msg']}")
    return "; ".join(lines)


def parse_text(text: str, source: str, use_yaml: bool) -> Dict[str, Any]:
    """Parse a document into a mapping, raising with the line and column of syntax errors."""
    if use_yaml:
        try:
            raw = yaml.safe_load(text)
        except yaml.YAMLError as e:
            mark = getattr(e, "problem_mark", None)
            where = f"{source}:{mark.line + 1}:{mark.column + 1}" if mark is not None else source
            problem = getattr(e, "problem", None) or str(e)
            raise ScenarioConfigurationError(f"{where}: {problem}") from e
    else:
        try:
            raw = json.loads(text)
        except json.JSONDecodeError as e:
            raise ScenarioConfigurationError(f"{source}:{e.lineno}:{e.colno}: {e.msg}") from e

    if raw is None:
        return {}
    if not isinstance(raw, dict):
        raise ScenarioConfigurationError(f"{source}: top level must be a mapping, got {type(raw).__name__}")
    return raw


def read_mapping(path: Path) -> Dict[str, Any]:
    """Read a scenario or manifest file into a mapping."""
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise ScenarioConfigurationError(f"Cannot read {path}: {e.strerror or e}") from e
    return parse_text(text, str(path), use_yaml=path.suffix.lower() in YAML_SUFFIXES)


def validate_mapping(raw: Dict[str, Any], source: str = "<config>") -> LoadedDocument:
    """Validate a parsed mapping; a top-level `config` key marks a run manifest."""
    if MANIFEST_KEY in raw:
        try:
            manifest = RunManifestSchema.model_validate(raw)
        except ValidationError as e:
            raise ScenarioConfigurationError(f"{source}: {format_validation_error(e)}") from e
        return LoadedDocument(document=manifest.config, manifest=manifest)

    try:
        document = ScenarioDocumentSchema.model_validate(raw)
    except ValidationError as e:
        raise ScenarioConfigurationError(f"{source}: {format_validation_error(e)}") from e
    return LoadedDocument(document=document)


def load_document(path: Optional[Path]) -> LoadedDocument:
    """Load a scenario document; no path means every default."""
    if path is None:
        return LoadedDocument(document=ScenarioDocumentSchema())
    return validate_mapping(read_mapping(path), source=str(path))


def apply_overrides(
    document: ScenarioDocumentSchema,
    master_seed: Optional[int] = None,
    trials: Optional[int] = None,
) -> ScenarioDocumentSchema:
    """Document with --seed / --trials applied and re-validated."""
    updates: Dict[str, Any] = {}
    if master_seed is not None:
        updates["master_seed"] = master_seed
    if trials is not None:
        updates["trials"] = trials
    if not updates:
        return document

    data = document.scenario.model_dump()
    data.update(updates)
    try:
        scenario = ScenarioSchema.model_validate(data)
    except ValidationError as e:
        raise ScenarioConfigurationError(format_validation_error(e, prefix="scenario")) from e
    return document.model_copy(update={"scenario": scenario})
