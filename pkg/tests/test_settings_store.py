from __future__ import annotations

import json
from fractions import Fraction

from critpoint_app.job_settings import DEFAULT_WINDOW, JobCommand, JobDefaults, JobSpec, PlotSettings
from critpoint_app.settings_store import SettingsStore


def test_missing_file_gives_defaults(tmp_path):
    assert SettingsStore(tmp_path / "none.json").load() == JobDefaults()


def test_save_and_load(tmp_path):
    store = SettingsStore(tmp_path / "nested" / "defaults.json")
    defaults = JobDefaults(seed=42, trials=7, window=(Fraction(-1), Fraction(1), Fraction(-1, 2), Fraction(2)))
    store.save(defaults)
    assert store.load() == defaults
    raw = json.loads(store.storage_path.read_text(encoding="utf-8"))
    assert raw["defaults"]["window"] == ["-1", "1", "-1/2", "2"]


def test_unreadable_files_fall_back(tmp_path, caplog):
    path = tmp_path / "defaults.json"
    path.write_text("{not json", encoding="utf-8")
    assert SettingsStore(path).load() == JobDefaults()
    assert "unreadable" in caplog.text
    path.write_text("[1, 2]", encoding="utf-8")
    assert SettingsStore(path).load() == JobDefaults()
    path.write_text(json.dumps({"defaults": {"seed": "abc"}}), encoding="utf-8")
    assert SettingsStore(path).load() == JobDefaults()


def test_short_window_falls_back_to_default():
    assert JobDefaults.from_dict({"window": [0, 1]}).window == DEFAULT_WINDOW


def test_job_spec_dict_form():
    job = JobSpec(JobCommand.PLOT, output_path="a.svg", plot=PlotSettings(shade=True, level=Fraction(1, 3)))
    data = job.to_dict()
    assert data["command"] == "plot"
    assert data["plot"]["level"] == "1/3"
    assert JobSpec.from_dict(data) == job
