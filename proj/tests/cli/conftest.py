import os

import pytest


@pytest.fixture(autouse=True, scope="session")
def require_cli():
    if not os.environ.get("KOTTWITZ_CLI"):
        pytest.skip("KOTTWITZ_CLI is not set")
