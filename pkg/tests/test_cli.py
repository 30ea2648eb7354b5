import io
import json

import pytest

from doldcalc.cli import main
from doldcalc.literals import (
    ParseError,
    format_dold,
    format_spectrum,
    parse_dold,
    parse_set,
    parse_spectrum,
)
from doldcalc.doldcore import DoldSequence, RootSpectrum


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def fields(text):
    return dict(line.split(": ", 1) for line in text.splitlines() if ": " in line)


def test_literals():
    assert parse_spectrum("{3, 4}") == RootSpectrum({3: 1, 4: 1})
    assert parse_spectrum("3:1,4:1") == RootSpectrum({3: 1, 4: 1})
    assert parse_spectrum("") == RootSpectrum()
    assert parse_dold("(3,1,-1,-1)") == DoldSequence({1: 3, 2: 1, 3: -1, 4: -1})
    assert parse_dold(" 15 : -2 ") == DoldSequence({15: -2})
    assert parse_dold("()") == DoldSequence()
    assert parse_set("{1, 2}") == {1, 2}
    assert parse_set("{}") == frozenset()


@pytest.mark.parametrize("text", ["{1,a}", "(1,2", "3:", "0:1", "{1,2"])
def test_bad_literals(text):
    with pytest.raises(ParseError):
        (parse_spectrum if text.startswith("{") else parse_dold)(text)


def test_convert_spectrum():
    code, out, _ = run("convert", "--spectrum", "{3,4}")
    f = fields(out)
    assert code == 0
    assert f["dold"] == "(3,1,-1,-1)" and f["genus"] == "2" and f["ap"] == "{1,2,3,4}"
    assert f["mper"] == "{1,3}" and f["realizable"] == "yes"


def test_convert_dold():
    code, out, _ = run("convert", "--dold", "15:-2")
    f = fields(out)
    assert f["spectrum"] == "{1,1,1,1,3,3,5,5,15,15}" and f["genus"] == "16"
    code, out, _ = run("convert", "--dold", "")
    f = fields(out)
    assert code == 0 and f["spectrum"] == "{1,1}" and f["genus"] == "1"


def test_convert_exit_codes():
    code, out, _ = run("convert", "--dold", "1:1")
    assert code == 0 and fields(out)["diagnostics"] == "r_1 = 1 odd"
    code, _, _ = run("convert", "--dold", "1:1", "--require-realizable")
    assert code == 1
    code, _, err = run("convert", "--dold", "1:x")
    assert code == 2 and "position" in err
    code, _, _ = run("convert")
    assert code == 2


@pytest.mark.parametrize(
    "flag, literal",
    [("--spectrum", "{1,1,6}"), ("--dold", "(2,-1,0,1,0,1,0,0,0,0,0,-1)"),
     ("--dold", "3:5"), ("--spectrum", "2:-3,7:1")],
)
def test_convert_round_trip(flag, literal):
    _, out, _ = run("convert", flag, literal)
    f = fields(out)
    _, out2, _ = run("convert", "--spectrum", f["spectrum"])
    assert fields(out2) == f
    _, out3, _ = run("convert", "--dold", f["dold"])
    assert fields(out3) == f


def test_convert_json():
    code, out, _ = run("convert", "--spectrum", "{5}", "--format", "json")
    data = json.loads(out)
    assert data["dold"] == "(3,0,0,0,-1)" and data["realizable"] is True


def test_catalog_jsonl_and_summary():
    code, out, err = run("catalog", "1")
    assert code == 0
    assert len(out.splitlines()) == 5
    assert "#Sp=5 #AP=5 #AP_odd=3" in err


def test_catalog_csv():
    code, out, err = run("catalog", "2", "--format", "csv")
    assert code == 0 and len(out.splitlines()) == 20
    assert "#Sp=19 #AP=15 #AP_odd=5" in err


def test_catalog_usage_and_io_errors(tmp_path):
    assert run("catalog", "0")[0] == 2
    assert run("catalog", "1", "-o", str(tmp_path / "missing" / "x.jsonl"))[0] == 3
    target = tmp_path / "g3.csv"
    assert run("catalog", "3", "--format", "csv", "-o", str(target))[0] == 0
    assert len(target.read_text().splitlines()) == 60


def test_catalog_output_is_deterministic(tmp_path, monkeypatch):
    a, b = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
    run("catalog", "4", "-o", str(a))
    monkeypatch.setenv("DOLDCALC_JOBS", "3")
    run("catalog", "4", "-o", str(b))
    assert a.read_bytes() == b.read_bytes()


def test_min_genus():
    code, out, _ = run("min-genus", "{1,2}")
    f = fields(out)
    assert code == 0 and f["genus"] == "1" and f["spectrum"] == "{2,2}"
    assert fields(run("min-genus", "{15}")[1])["genus"] == "16"
    assert fields(run("min-genus", "{1,2}", "--upper-bound")[1])["genus"] == "4"


def test_min_genus_odd():
    code, out, _ = run("min-genus", "{15}", "--odd", "--format", "json")
    data = json.loads(out)
    assert data["genus"] == 14 and data["spectrum"] == "{6,6,10,10,30,30}"


def test_min_genus_usage_errors():
    assert run("min-genus", "{}")[0] == 2
    assert run("min-genus", "{2,3}", "--odd")[0] == 2
    assert run("min-genus", "1,2")[0] == 2


def test_realize():
    code, out, _ = run("realize", "--spectrum", "{3}")
    assert code == 0
    assert "-1 -1\n 1  0" in out
    assert "char_poly: x^2 + x + 1" in out
    assert out.count("pass") == 3
    code, out, _ = run("realize", "--spectrum", "{1,1}")
    assert "1 0\n0 1" in out


def test_realize_json_matrix_format():
    code, out, _ = run("realize", "--spectrum", "{3}", "--format", "json")
    data = json.loads(out)
    assert data["matrix"] == [["-1", "-1"], ["1", "0"]]
    assert all(data["checks"].values())


def test_realize_not_realizable():
    code, _, err = run("realize", "--dold", "1:1")
    assert code == 1 and "r_1 = 1 odd" in err


def test_realize_horizon_cap():
    code, _, err = run("realize", "--spectrum", "{5,7}", "--horizon-cap", "10")
    assert code == 2 and "cap" in err


def test_bounds():
    code, out, _ = run("bounds", "15:-2")
    assert code == 0 and "15\todd-exact\t2" in out
    code, out, _ = run("bounds", "")
    assert out.splitlines() == ["n\tkind\tbound"]
    code, out, _ = run("bounds", "2:-2")
    assert "2\teven-pair\t2" in out
    assert run("bounds", "x")[0] == 2


def test_summary():
    code, out, _ = run("summary", "1", "3", "--format", "csv")
    assert out.splitlines() == ["genus,sp,ap,ap_odd", "1,5,5,3", "2,19,15,5", "3,59,40,9"]
    assert run("summary", "3", "1")[0] == 2


def test_formatters_round_trip():
    r = RootSpectrum({1: 2, 6: 1})
    assert parse_spectrum(format_spectrum(r)) == r
    a = DoldSequence({1: -1, 6: 3})
    assert parse_dold(format_dold(a)) == a
