import pytest

from compression.fileformat import dump
from compression.zl78 import Scheme, compress

BANANAS = b'ananasbananer'


@pytest.fixture
def bananas():
    return BANANAS


@pytest.fixture
def bananas_z():
    return compress(BANANAS, Scheme.ZL78)


@pytest.fixture
def bananas_file(tmp_path, bananas_z):
    path = tmp_path / 'bananas.cz'
    dump(bananas_z, path)
    return path


@pytest.fixture
def bananas_zlw_file(tmp_path):
    path = tmp_path / 'bananas.czlw'
    dump(compress(BANANAS, Scheme.ZLW), path)
    return path
