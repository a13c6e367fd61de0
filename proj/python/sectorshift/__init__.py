"""Two-sector structural-transformation toolkit.

Thin wrapper around the compiled module; points the bundled-data loader at the
packaged data directory unless SECTORSHIFT_DATA is set.
"""

import os
from pathlib import Path

from sectorshift._core import *  # noqa: F401,F403
from sectorshift import _core as _core

_pkg_data = Path(__file__).resolve().parent / "data"
if "SECTORSHIFT_DATA" not in os.environ and _pkg_data.is_dir():
    _core.set_data_dir(str(_pkg_data))

__version__ = _core.__version__
