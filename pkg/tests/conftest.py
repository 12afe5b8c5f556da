import pytest

from core.instrument import ComparisonCounter


@pytest.fixture
def counter():
    return ComparisonCounter()
