import os
import subprocess
import sys

import pytest

from pgl2poly import make_field

SRC = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "src")


@pytest.fixture(scope="session")
def F2():
    return make_field(2, 1)

@pytest.fixture(scope="session")
def F3():
    return make_field(3, 1)

@pytest.fixture(scope="session")
def F4():
    return make_field(2, 2)

@pytest.fixture(scope="session")
def F5():
    return make_field(5, 1)

@pytest.fixture(scope="session")
def F7():
    return make_field(7, 1)


def run_cli(*args):
    env = dict(os.environ)
    env["PYTHONPATH"] = SRC + os.pathsep + env.get("PYTHONPATH", "")
    return subprocess.run([sys.executable, "-m", "pgl2poly", *args],
                          capture_output=True, text=True, env=env)
