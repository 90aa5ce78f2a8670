import pytest

from diagonal.arith import Poly
from diagonal.forms import Form
from diagonal.pencils import build_pencil, example_split


@pytest.fixture
def t():
    return Poly.t()


@pytest.fixture
def published_split():
    return example_split()


@pytest.fixture
def published_pencil(published_split):
    return build_pencil(published_split, (3, 3, 3))


@pytest.fixture
def linear_pair():
    """f1 = X1 and f2 = -X2, so u = (1, 4) gives t = 4 = 2^2."""
    return Form.linear((1, 0)), Form.linear((0, -1))


@pytest.fixture
def temp_dir(tmp_path):
    return tmp_path
