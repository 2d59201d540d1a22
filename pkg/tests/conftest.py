import pytest

from seqstr.core import SymbolSequence


@pytest.fixture
def S():
    return SymbolSequence.from_text
