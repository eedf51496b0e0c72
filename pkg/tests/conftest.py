import pytest

from qwdirac import backend


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    # jit compilation happens here, outside any timed test body
    backend.warmup()
