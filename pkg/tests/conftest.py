from pathlib import Path

import pytest

from conezeta.algebra import FactoredRational, LaurentPoly

DATA = Path(__file__).parent / "data"


def poly(*terms):
    """poly((c, i, j), ...) = sum c q^i t^j"""
    return LaurentPoly([((i, j), c) for c, i, j in terms])


def fr(terms, den=()):
    return FactoredRational(poly(*terms), list(den))


@pytest.fixture
def data_dir():
    return DATA
