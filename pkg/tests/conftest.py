import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from abelian_ideals import LieType, build_root_system  # noqa: E402
from abelian_ideals.kernel import BACKENDS  # noqa: E402


@pytest.fixture(params=sorted(BACKENDS))
def backend(request):
    return request.param


def rs_of(name):
    return build_root_system(LieType.parse(name))
