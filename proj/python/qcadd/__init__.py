"""Quasi-cyclic constructions of quaternary additive codes.

The heavy lifting lives in the C++ extension; this package re-exports it and
points the dataset lookup at the bundled copy when one is installed.
"""

import os
from pathlib import Path

_bundled = Path(__file__).parent / "data"
if _bundled.is_dir() and "QCADD_DATA_DIR" not in os.environ:
    os.environ["QCADD_DATA_DIR"] = str(_bundled)

from ._core import *  # noqa: F401,F403,E402
from ._core import __doc__ as _doc  # noqa: E402

__doc__ = _doc
__version__ = "0.1.0"


def data_dir() -> str:
    """Directory holding the table datasets and reference files."""
    from ._core import default_data_dir

    return default_data_dir()
