import pytest

from duadiq import _kernels


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    # pay the JIT cost once, before anything timed runs
    _kernels.warm_up()
