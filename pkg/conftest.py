"""
Doctest configuration: print numpy scalars as plain numbers (numpy < 2 style),
which is the format the doctests were written against.
"""

import numpy as np
import pytest
from _pytest.doctest import DoctestItem


@pytest.fixture(autouse=True)
def _legacy_numpy_repr(request):
    if isinstance(request.node, DoctestItem):
        with np.printoptions(legacy="1.25"):
            yield
    else:
        yield
