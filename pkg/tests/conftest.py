import pytest

from affcrystal import Multicharge, parse_multisegment

WORKED = "[0;6)+[0;5)+[3;5)+[1;4)+2[3;3)+[0;3)+[2;2)+[2;1)"


@pytest.fixture
def worked():
    """The e = 4 multisegment used throughout as the running example."""
    return parse_multisegment(WORKED, 4)


@pytest.fixture
def charge():
    def make(e, *values):
        return Multicharge(e, values)
    return make
