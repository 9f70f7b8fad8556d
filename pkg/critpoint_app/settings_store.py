from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import Optional

from .job_settings import JobDefaults

DEFAULT_STATE_FILENAME = "defaults.json"
DEFAULT_STORAGE_DIRNAME = ".critpoint"

log = logging.getLogger(__name__)


class SettingsStore:
    def __init__(self, storage_path: Optional[Path] = None) -> None:
        if storage_path is None:
            storage_path = Path.home() / DEFAULT_STORAGE_DIRNAME / DEFAULT_STATE_FILENAME
        self.storage_path = storage_path

    def load(self) -> JobDefaults:
        if not self.storage_path.exists():
            return JobDefaults()
        try:
            raw = json.loads(self.storage_path.read_text(encoding="utf-8"))
        except json.JSONDecodeError:
            log.warning("ignoring unreadable defaults file %s", self.storage_path)
            return JobDefaults()
        if not isinstance(raw, dict):
            return JobDefaults()
        try:
            return JobDefaults.from_dict(raw.get("defaults", {}))
        except (TypeError, ValueError):
            log.warning("ignoring malformed defaults in %s", self.storage_path)
            return JobDefaults()

    def save(self, defaults: JobDefaults) -> None:
        self.storage_path.parent.mkdir(parents=True, exist_ok=True)
        payload = {"defaults": defaults.to_dict()}
        self.storage_path.write_text(json.dumps(payload, indent=2), encoding="utf-8")
