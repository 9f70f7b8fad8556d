from __future__ import annotations

import pytest

from critpoint_app.errors import BadInput
from critpoint_app.interpcurve import structural_factor
from critpoint_app.point_config import PointConfig
from critpoint_app.preset_library import BUILTIN_PRESETS, PresetLibrary


def test_builtin_presets_are_listed(tmp_path):
    library = PresetLibrary(tmp_path)
    names = library.list_presets()
    assert "rhombus" in names and "grid-3x3" in names
    assert names == sorted(names)


def test_builtin_shapes():
    assert len(BUILTIN_PRESETS["grid-3x3"].points) == 9
    assert BUILTIN_PRESETS["parallel-3-2"].candidates == [structural_factor(3)]
    assert all(len(p.points) == 6 for name, p in BUILTIN_PRESETS.items() if p.degree == 4 and name.endswith("six"))


def test_save_load_delete(tmp_path):
    library = PresetLibrary(tmp_path / "presets")
    config = PointConfig.of([(0, 0), (2, "1/2")])
    path = library.save_preset("my config!", config, degree=3)
    assert path.name == "my_config_.json"
    loaded = library.load_preset("my config!")
    assert loaded.points == config
    assert loaded.degree == 3
    assert "my_config_" in library.list_presets()
    library.delete_preset("my config!")
    with pytest.raises(BadInput):
        library.load_preset("my config!")


def test_user_preset_shadows_builtin(tmp_path):
    library = PresetLibrary(tmp_path)
    library.save_preset("rhombus", PointConfig.of([(5, 5)]))
    assert len(library.load_preset("rhombus").points) == 1


def test_bad_names_and_files(tmp_path):
    library = PresetLibrary(tmp_path)
    with pytest.raises(BadInput):
        library.save_preset("   ", PointConfig())
    (tmp_path / "broken.json").write_text("{", encoding="utf-8")
    with pytest.raises(BadInput):
        library.load_preset("broken")
