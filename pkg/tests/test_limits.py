import pytest

from mvd import FormatError, Limits
from mvd.limits import DEFAULT, default_limits, parse_limits


def test_defaults():
    assert DEFAULT.max_cols == 24
    assert DEFAULT.max_rows == 4096
    assert DEFAULT.max_memo == 5_000_000
    assert DEFAULT.max_words == 200_000
    assert DEFAULT.max_bb_nodes == 1_000_000


def test_parse_overrides():
    lim = parse_limits("max_memo=10, max_cols=5")
    assert lim.max_memo == 10 and lim.max_cols == 5
    assert lim.max_rows == DEFAULT.max_rows


def test_parse_rejects_unknown_name():
    with pytest.raises(FormatError, match="unknown limit"):
        parse_limits("max_banana=3")


def test_parse_rejects_non_integer():
    with pytest.raises(FormatError, match="integer"):
        parse_limits("max_memo=lots")


def test_env_override(monkeypatch):
    monkeypatch.setenv("MVD_LIMITS", "max_rows=7")
    assert default_limits().max_rows == 7
    monkeypatch.delenv("MVD_LIMITS")
    assert default_limits() == DEFAULT
