from io import StringIO

import pytest
from django.core.management import call_command
from django.core.management.base import CommandError


def test_selftest_passes():
    out = StringIO()
    call_command('selftest', cases=2, max_length=100, stdout=out, stderr=StringIO())
    assert '4 cases agree with the oracle (seed 0)' in out.getvalue()


def test_selftest_single_mode():
    out = StringIO()
    call_command('selftest', cases=3, mode='regex', profile='dna', max_length=80, stdout=out)
    assert '3 cases agree' in out.getvalue()


def test_seed_setting_overrides_option(settings):
    settings.CZGREP = {**settings.CZGREP, 'SEED': 42}
    out = StringIO()
    call_command('selftest', cases=1, seed=5, max_length=50, stdout=out)
    assert '(seed 42)' in out.getvalue()


def test_disagreement_fails(monkeypatch):
    monkeypatch.setattr('oracle.management.commands.selftest.search_regex', lambda *args, **kwargs: [-1])
    err = StringIO()
    with pytest.raises(CommandError, match='2 of 2 cases disagree') as excinfo:
        call_command('selftest', cases=2, mode='regex', max_length=40, stdout=StringIO(), stderr=err)
    assert excinfo.value.returncode == 1
    assert err.getvalue().count('FAIL regex/') == 2
