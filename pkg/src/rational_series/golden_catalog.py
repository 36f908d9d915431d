#!/usr/bin/env python3
"""
Golden Catalog

Closed-form Hilbert series of invariant rings of named modules, loaded
from the packaged JSON file shared by the tests and the CLI.
"""

import json
import logging
import os
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Dict, List, Optional

from hilbert_errors import InvalidInputError
from branching import GroupId
from .rational_form import RationalForm

logger = logging.getLogger(__name__)

DEFAULT_CATALOG_PATH = Path(__file__).parent / "data" / "golden_forms.json"


@dataclass(frozen=True)
class GoldenEntry:
    """One printed closed form with the module and group it describes"""
    key: str
    name: str
    group: GroupId
    spec_text: str
    form: RationalForm
    maxdeg: int
    source: str = ""
    note: Optional[str] = None


def make_key(name: str, group: GroupId) -> str:
    return f"{name}/{group.kind.value}/{group.n}"


def _parse_entry(raw: Dict) -> GoldenEntry:
    group = GroupId.parse(raw['group'], raw['n'])
    form = RationalForm.from_factors(raw.get('numerator_factors', [[1]]), raw.get('denominator', []))
    key = raw.get('key') or make_key(raw['name'], group)
    return GoldenEntry(
        key=key,
        name=raw['name'],
        group=group,
        spec_text=raw['spec'],
        form=form,
        maxdeg=int(raw['maxdeg']),
        source=raw.get('source', ''),
        note=raw.get('note'),
    )


@lru_cache(maxsize=None)
def _load(path: str) -> Dict[str, GoldenEntry]:
    catalog_path = Path(path)
    if not catalog_path.exists():
        raise FileNotFoundError(f"Golden catalog not found: {catalog_path}")
    try:
        with open(catalog_path, 'r', encoding='utf-8') as file:
            data = json.load(file)
    except json.JSONDecodeError as e:
        logger.error(f"Failed to read golden catalog {catalog_path}: {e}")
        raise InvalidInputError(f"Malformed golden catalog {catalog_path}: {e}")

    entries: Dict[str, GoldenEntry] = {}
    for raw in data.get('entries', []):
        entry = _parse_entry(raw)
        if entry.key in entries:
            raise InvalidInputError(f"Duplicate golden key {entry.key}")
        entries[entry.key] = entry
    logger.info(f"Loaded {len(entries)} golden forms from {catalog_path}")
    return entries


def golden_entries(path: Optional[str] = None) -> List[GoldenEntry]:
    """All catalog entries in file order"""
    return list(_load(str(path or DEFAULT_CATALOG_PATH)).values())


def golden_forms(path: Optional[str] = None) -> Dict[str, RationalForm]:
    """Catalog of named RationalForms keyed like "cubics/sp/2" """
    return {key: entry.form for key, entry in _load(str(path or DEFAULT_CATALOG_PATH)).items()}


def golden_entry(key: str, path: Optional[str] = None) -> GoldenEntry:
    entries = _load(str(path or DEFAULT_CATALOG_PATH))
    if key not in entries:
        raise InvalidInputError(f"Unknown golden key {key!r}; known keys: {', '.join(sorted(entries))}")
    return entries[key]
