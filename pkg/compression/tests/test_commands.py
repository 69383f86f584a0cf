from io import StringIO

import pytest
from django.core.management import call_command
from django.core.management.base import CommandError

from compression.fileformat import load
from compression.zl78 import Scheme


def run(command, *args, **options):
    out = StringIO()
    call_command(command, *args, stdout=out, stderr=StringIO(), **options)
    return out.getvalue()


@pytest.fixture
def source(tmp_path, bananas):
    path = tmp_path / 'bananas.txt'
    path.write_bytes(bananas)
    return path


def test_compress_reports_element_count(tmp_path, source):
    target = tmp_path / 'bananas.cz'
    out = run('compress', str(source), str(target))
    assert out.startswith('n=8 u=13 bytes=30 ')
    assert load(target).n == 8


def test_compress_show(tmp_path, source):
    out = run('compress', str(source), str(tmp_path / 'b.cz'), show=True)
    assert out.splitlines()[1] == '(0,a)(0,n)(1,n)(1,s)(0,b)(3,a)(2,e)(0,r)'


def test_compress_empty_file(tmp_path):
    empty = tmp_path / 'empty.txt'
    empty.write_bytes(b'')
    out = run('compress', str(empty), str(tmp_path / 'empty.cz'))
    assert out.startswith('n=0 ')


@pytest.mark.parametrize('scheme', Scheme.values)
def test_roundtrip_is_byte_identical(tmp_path, scheme):
    original = tmp_path / 'original.bin'
    original.write_bytes(bytes(range(256)) * 3 + b'abababab' * 40)
    run('compress', str(original), str(tmp_path / 'c.cz'), scheme=scheme)
    assert load(tmp_path / 'c.cz').scheme == scheme
    run('decompress', str(tmp_path / 'c.cz'), str(tmp_path / 'restored.bin'))
    assert (tmp_path / 'restored.bin').read_bytes() == original.read_bytes()


def test_compress_missing_input(tmp_path):
    with pytest.raises(CommandError, match='cannot read') as excinfo:
        run('compress', str(tmp_path / 'absent'), str(tmp_path / 'out.cz'))
    assert excinfo.value.returncode == 1


def test_decompress_truncated_file(tmp_path, source):
    run('compress', str(source), str(tmp_path / 'b.cz'))
    data = (tmp_path / 'b.cz').read_bytes()
    (tmp_path / 'b.cz').write_bytes(data[:-2])
    with pytest.raises(CommandError, match='element 8') as excinfo:
        run('decompress', str(tmp_path / 'b.cz'), str(tmp_path / 'out.txt'))
    assert excinfo.value.returncode == 1


def test_decompress_bad_header(tmp_path):
    (tmp_path / 'bad.cz').write_bytes(b'GIF89a')
    with pytest.raises(CommandError, match='magic'):
        run('decompress', str(tmp_path / 'bad.cz'), str(tmp_path / 'out.txt'))
