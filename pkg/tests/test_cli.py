import json

import pytest

from qmacmahon.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_expand_json(capsys):
    code, out, _ = run(capsys, "expand", "--family", "A", "--sign", "plus", "--k", "1", "--m", "inf", "--order", "6", "--format", "json")
    assert code == 0
    d = json.loads(out)
    assert d == {"family": "A", "sign": "+", "k": 1, "m": "inf", "order": 6, "coeffs": ["0", "1", "3", "4", "7", "6", "12"]}


def test_expand_conventions(capsys):
    _, out, _ = run(capsys, "expand", "--family", "A", "--k", "0", "--m", "3", "--order", "4", "--format", "json")
    assert json.loads(out)["coeffs"] == ["1", "0", "0", "0", "0"]
    _, out, _ = run(capsys, "expand", "--family", "C", "--k", "1", "--m", "1", "--order", "4", "--format", "json")
    assert json.loads(out)["coeffs"] == ["0", "1", "2", "3", "4"]


def test_expand_bad_params(capsys):
    code, _, err = run(capsys, "expand", "--family", "A", "--k", "-1", "--order", "4")
    assert code == 2 and err
    with pytest.raises(SystemExit) as exc:
        main(["expand", "--family", "A", "--k", "1", "--m", "zero"])
    assert exc.value.code == 2


def test_large_coefficients_are_full_decimal(capsys):
    from qmacmahon.identities import IdentityReport, Mismatch
    from qmacmahon.macmahon import A
    from qmacmahon.qfunctions import Sign

    _, out, _ = run(capsys, "expand", "--family", "A", "--k", "3", "--order", "200", "--format", "json")
    assert json.loads(out)["coeffs"] == [str(c) for c in A(Sign.PLUS, 3, None, 200).coeffs]
    big = 2**200
    r = IdentityReport("a-1", {"k": 1}, "q", (0, 5), "fail", Mismatch(5, big, -big))
    d = json.loads(json.dumps(r.to_dict()))
    assert d["first_mismatch"] == {"index": 5, "lhs": str(big), "rhs": str(-big)}
    assert len(d["first_mismatch"]["lhs"]) == 61


def test_stat(capsys):
    code, out, _ = run(capsys, "stat", "a+", "--k", "1", "--n", "6", "--format", "json")
    assert code == 0 and json.loads(out)["values"] == [{"n": 6, "value": "12"}]
    _, out, _ = run(capsys, "stat", "p3", "--n", "0..4", "--format", "json")
    assert [v["value"] for v in json.loads(out)["values"]] == ["1", "3", "9", "22", "51"]
    _, out, _ = run(capsys, "stat", "P", "--m", "6", "--l", "4", "--n", "20", "--format", "json")
    assert int(json.loads(out)["values"][0]["value"]) >= 1
    code, out, _ = run(capsys, "stat", "Q", "--m", "6", "--s", "8", "--t", "2", "--n", "25")
    assert code == 0 and "Q(" in out


def test_stat_guard(capsys):
    code, _, err = run(capsys, "stat", "overline-p", "--n", "41")
    assert code == 2 and "--force" in err
    code, _, _ = run(capsys, "stat", "overline-p", "--n", "41", "--force")
    assert code == 0
    code, _, err = run(capsys, "stat", "P", "--m", "3", "--n", "4")
    assert code == 2 and "--l" in err


def test_verify_all_small(capsys):
    code, _, _ = run(capsys, "verify", "all", "--order", "40", "--max-k", "3", "--max-m", "6")
    assert code == 0


def test_verify_single(capsys):
    code, out, _ = run(capsys, "verify", "c-1", "--k", "1", "--a-max", "30", "--format", "json")
    assert code == 0
    reports = json.loads(out)
    assert reports[0]["status"] == "pass" and reports[0]["checked"] == [0, 30]
    code, out, _ = run(capsys, "verify", "--identity", "m-1", "--k", "1", "--m", "2", "--sign", "minus", "--format", "json")
    assert code == 0 and json.loads(out)[0]["params"]["sign"] == "-"


def test_verify_unknown_identity(capsys):
    code, _, err = run(capsys, "verify", "bogus-id")
    assert code == 2 and "unknown identity" in err


def test_verify_bad_domain(capsys):
    code, _, err = run(capsys, "verify", "a-3", "--k", "1", "--m", "2", "--sign", "minus")
    assert code == 2 and err


def test_verify_mismatch_exit_code(capsys, monkeypatch):
    from qmacmahon import macmahon

    original = macmahon.SIDE_BUILDERS["a-3"]

    def off_by_one(k, m, sign, order):
        s = original(k, m, sign, order)
        cs = list(s.lhs_num.coeffs)
        cs[-1] += 1
        return macmahon.Sides(macmahon.TruncatedSeries(cs), s.lhs_den, s.rhs_num, s.rhs_den)

    monkeypatch.setitem(macmahon.SIDE_BUILDERS, "a-3", off_by_one)
    code, out, _ = run(capsys, "verify", "a-3", "--k", "1", "--m", "2", "--order", "8", "--format", "json")
    assert code == 1
    assert json.loads(out)[0]["first_mismatch"]["index"] == 8


def test_json_is_byte_identical(capsys):
    argv = ("verify", "all", "--order", "12", "--max-k", "2", "--max-m", "3", "--n-max", "8", "--format", "json")
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second
