import pathlib
import sys

import pytest

sys.path.insert(0, str(pathlib.Path(__file__).parent))

from plb.compare import reproduce_table2


@pytest.fixture(scope="session")
def table2_rows():
    """Computed Table 2 rows, shared across acceptance criteria."""
    return reproduce_table2()
