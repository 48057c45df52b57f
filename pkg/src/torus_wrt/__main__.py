"""``python -m torus_wrt`` and ``python path/to/torus_wrt/__main__.py``."""

from __future__ import annotations

import sys
from pathlib import Path
from typing import Sequence


def _bootstrap_package() -> str:
    """Put ``src/`` on the path when this file runs as a plain script."""

    src_root = str(Path(__file__).resolve().parents[1])
    if src_root not in sys.path:
        sys.path.insert(0, src_root)
    return "torus_wrt"


if not __package__:  # pragma: no cover - executed as a script
    __package__ = _bootstrap_package()

from .cli import main as cli_main  # noqa: E402


def main(argv: Sequence[str] | None = None) -> int:
    return cli_main(argv)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main(sys.argv[1:]))
