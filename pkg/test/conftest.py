import os
import sys

import pytest

# same as env.sh
sys.path.insert(0, os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "src"))

from phipsi.cruncher.groups import make_group  # noqa: E402
from phipsi.cruncher.modring import make_ring  # noqa: E402
from phipsi.data_cache import PhiCache  # noqa: E402


@pytest.fixture
def cache():
    return PhiCache()


@pytest.fixture
def f5c12():
    return make_ring(5), make_group([12])
