import os
import sys

import pytest


@pytest.fixture(scope="session")
def core():
    pymodule_dir = os.environ.get("KOTTWITZ_PYMODULE_DIR")
    if not pymodule_dir:
        pytest.skip("KOTTWITZ_PYMODULE_DIR is not set")
    if pymodule_dir not in sys.path:
        sys.path.insert(0, pymodule_dir)
    import _core

    return _core


@pytest.fixture(scope="session")
def src_dir():
    path = os.environ.get("KOTTWITZ_SRC")
    if not path:
        pytest.skip("KOTTWITZ_SRC is not set")
    return path
