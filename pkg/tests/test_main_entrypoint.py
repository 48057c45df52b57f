"""Tests for running the package as ``python -m torus_wrt`` or as a plain script."""

from __future__ import annotations

import importlib.util
import json
import sys
from pathlib import Path

from torus_wrt import __main__ as entry


def _main_path() -> Path:
    return Path(__file__).resolve().parents[1] / "src" / "torus_wrt" / "__main__.py"


def test_main_delegates_to_cli(capsys):
    assert entry.main(["classify", "--matrix", "2,1,1,1"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["kind"] == "hyperbolic"


def test_script_sets_up_package_context():
    main_path = _main_path()
    src_str = str(main_path.parent.parent)

    module_name = "standalone_torus_main"
    spec = importlib.util.spec_from_file_location(module_name, main_path)
    assert spec is not None and spec.loader is not None
    module = importlib.util.module_from_spec(spec)
    sys.modules[module_name] = module

    try:
        spec.loader.exec_module(module)

        assert module.__package__ == "torus_wrt"
        assert src_str in sys.path
        assert "torus_wrt.cli" in sys.modules
    finally:
        sys.modules.pop(module_name, None)
