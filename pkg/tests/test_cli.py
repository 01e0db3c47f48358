import json

import pytest

from cli.main import EXIT_FAILED, EXIT_OK, EXIT_USAGE, run
from config.settings import Settings


@pytest.fixture
def settings():
    return Settings(cache_url=None)


def test_enumerate_text(capsys, settings):
    assert run(["enumerate", "e8", "1"], settings) == EXIT_OK
    assert capsys.readouterr().out == "x^8 + 14*x^4*y^4 + y^8\n"


def test_enumerate_golay(capsys, settings):
    assert run(["enumerate", "C7", "1", "text"], settings) == EXIT_OK
    assert capsys.readouterr().out.strip() == "x^24 + 759*x^16*y^8 + 2576*x^12*y^12 + 759*x^8*y^16 + y^24"


def test_enumerate_json(capsys, settings):
    assert run(["enumerate", "d4", "2", "json"], settings) == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    assert payload["genus"] == 2
    assert len(payload["terms"]) == 4


def test_enumerate_latex_flag(capsys, settings):
    assert run(["enumerate", "d4", "1", "--format", "latex"], settings) == EXIT_OK
    assert capsys.readouterr().out.strip() == "x^{4}+y^{4}"


def test_enumerate_over_budget(capsys, settings):
    assert run(["enumerate", "C3", "3", "text"], settings) == EXIT_USAGE
    assert "decomposed" in capsys.readouterr().err


def test_enumerate_unknown_name(capsys, settings):
    assert run(["enumerate", "h7", "1"], settings) == EXIT_USAGE
    assert "unknown code name" in capsys.readouterr().err


def test_enumerate_decomposed_genus3(capsys, settings):
    assert run(["enumerate", "e8^2", "3"], settings) == EXIT_OK
    assert capsys.readouterr().out.startswith("x_000^16 + ")


def test_verify_single_pair(capsys, settings):
    assert run(["verify", "thm1", "--pair", "5", "7"], settings) == EXIT_OK
    out = capsys.readouterr().out
    assert "PASS  thm1.2/i=5,j=7" in out
    assert out.strip().endswith("1 passed, 0 failed, 0 informational")


def test_verify_json(capsys, settings):
    assert run(["verify", "thm1", "--pair", "5", "7", "--json"], settings) == EXIT_OK
    reports = json.loads(capsys.readouterr().out)
    assert [r["claim"] for r in reports] == ["thm1.2/i=5,j=7"]
    assert reports[0]["details"]["modulus"] == "66"


def test_verify_pair_out_of_scope(capsys, settings):
    assert run(["verify", "thm1", "--pair", "8", "9"], settings) == EXIT_USAGE


def test_verify_unknown_selector(settings):
    with pytest.raises(SystemExit) as excinfo:
        run(["verify", "bogus"], settings)
    assert excinfo.value.code == EXIT_USAGE


def test_tables(capsys, settings):
    assert run(["tables"], settings) == EXIT_OK
    out = capsys.readouterr().out
    assert "11/4" in out
    assert "all entries match" in out


def test_bad_data_file(tmp_path, capsys, settings):
    path = tmp_path / "codes.txt"
    path.write_text("code 1 d12^2 5/4\n0101\n", encoding="utf-8")
    assert run(["--data", str(path), "tables"], settings) == EXIT_USAGE
    assert "line 2" in capsys.readouterr().err


@pytest.mark.slow
def test_verify_genus3(capsys, settings):
    assert run(["verify", "genus3"], settings) == EXIT_OK
    assert "PASS  genus3" in capsys.readouterr().out


def test_exit_code_constants():
    assert (EXIT_OK, EXIT_FAILED, EXIT_USAGE) == (0, 1, 2)


@pytest.mark.parametrize("content", [
    b"code 1 d12^2 5/0\n" + b"0" * 24 + b"\n",
    b"\xff\xfe",
])
def test_undecodable_data_file(tmp_path, capsys, settings, content):
    path = tmp_path / "codes.txt"
    path.write_bytes(content)
    assert run(["--data", str(path), "tables"], settings) == EXIT_USAGE
    assert "line 1" in capsys.readouterr().err


def test_pair_rejected_for_other_selectors(capsys, settings):
    assert run(["verify", "genus3", "--pair", "1", "2"], settings) == EXIT_USAGE
    assert "--pair" in capsys.readouterr().err


@pytest.mark.parametrize("variable,value", [("TYPE2_JOBS", "four"), ("TYPE2_BLOCK_SIZE", "-1")])
def test_bad_environment(monkeypatch, capsys, variable, value):
    monkeypatch.setenv(variable, value)
    assert run(["tables"]) == EXIT_USAGE
    assert variable in capsys.readouterr().err
