import os
import sys

import pytest

_ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
sys.path.insert(0, _ROOT)
sys.path.insert(0, os.path.join(_ROOT, 'src'))
sys.path.insert(0, os.path.join(_ROOT, 'src/catalog'))
sys.path.insert(0, os.path.join(_ROOT, 'src/types'))
sys.path.insert(0, os.path.join(_ROOT, 'src/stuffs'))

import linform_functions as linform  # noqa: E402

CATALOG_LEVELS = (6, 10, 14, 15, 21, 26, 35, 39)


@pytest.fixture(scope="session")
def apery_rows():
    """
    Level 6, alpha = 0 approximants to index 101
    """
    return linform.approximants(6, 0, 102)


@pytest.fixture(scope="session")
def catalog_levels():
    return CATALOG_LEVELS
