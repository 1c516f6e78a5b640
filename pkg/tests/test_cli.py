import json

import pytest

from modelspace.cli import main, parse_inner, parse_symbol
from modelspace.model_space import BlaschkeProduct, LaurentSymbol


def run(capsys, *argv):
    try:
        code = main(list(argv))
    except SystemExit as exc:
        code = exc.code
    out, err = capsys.readouterr()
    return code, out, err


def test_parse_inner():
    assert parse_inner("zpow:5") == BlaschkeProduct.zpow(5)
    b = parse_inner("blaschke:[0.5,0; 0,-0.25]")
    assert b == BlaschkeProduct((0.5, -0.25j))
    assert parse_inner("blaschke:[0.5,0]@0,1").constant == 1j


def test_parse_symbol():
    assert parse_symbol("-1:1,0;2:0,1") == LaurentSymbol.from_dict({-1: 1, 2: 1j})
    assert parse_symbol("0:3") == LaurentSymbol.monomial(0, 3)


def test_verify_example(capsys):
    code, out, _ = run(capsys, "verify", "--id", "sym3", "--theta", "zpow:5", "--alpha", "zpow:3", "--seed", "7")
    assert code == 0
    report = json.loads(out)
    assert report["id"] == "sym3" and report["pass"] is True and report["params"]["seed"] == 7


def test_verify_with_symbol_and_out(tmp_path, capsys):
    path = tmp_path / "r.json"
    code, out, _ = run(capsys, "verify", "--id", "han2", "--theta", "blaschke:[0.3,0.2;-0.5,0;0,0.1]@0,1",
                       "--alpha", "blaschke:[-0.5,0]", "--symbol=-1:1,0;0:0.5,0.5;2:0,1", "--out", str(path))
    assert code == 0
    assert json.loads(path.read_text()) == json.loads(out)


def test_verify_failure_exit_code(capsys):
    # a tolerance of 1e-300 cannot be met by a quadrature residual
    code, out, _ = run(capsys, "verify", "--id", "sym1", "--theta", "blaschke:[0.3,0;0.5,0.1]",
                       "--alpha", "blaschke:[0.3,0]", "--tol", "1e-300")
    assert code == 1
    assert json.loads(out)["pass"] is False


def test_expected_mismatch_exits_zero(capsys):
    code, out, _ = run(capsys, "verify", "--id", "naive-csym")
    assert code == 0
    assert json.loads(out)["residual"] == pytest.approx(2.0)


def test_classify_example(capsys):
    code, out, _ = run(capsys, "classify", "--alpha", "zpow:3", "--theta", "zpow:5")
    assert code == 0
    assert out.strip() == '["C_{z^5}","C_{z^3,z^2}"]'


def test_classify_gamma(capsys):
    code, out, _ = run(capsys, "classify", "--alpha", "zpow:3", "--theta", "zpow:5", "--gamma", "1")
    assert code == 0 and json.loads(out)["betas"] == [3, 4, 5]
    code, out, _ = run(capsys, "classify", "--alpha", "zpow:1", "--theta", "zpow:2", "--gamma", "z")
    assert json.loads(out)["betas"] == [2, 3]
    code, out, _ = run(capsys, "classify", "--theta", "zpow:4")
    assert json.loads(out) == ["C_{z^4}"]


def test_build(capsys):
    code, out, _ = run(capsys, "build", "--op", "atto", "--theta", "zpow:5", "--alpha", "zpow:3",
                       "--symbol", "0:1,0")
    data = json.loads(out)
    assert code == 0 and data["rows"] == 3 and data["cols"] == 5 and data["kind"] == "linear"


def test_suite(capsys, tmp_path):
    path = tmp_path / "suite.json"
    code, out, _ = run(capsys, "suite", "--grid", "2048", "--trials", "2", "--out", str(path))
    assert code == 0
    assert out.strip().endswith("0 failures")
    assert all(r["pass"] == r["expected"] for r in json.loads(path.read_text()))


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["frobnicate"],
        ["verify"],
        ["verify", "--id", "no-such-id"],
        ["verify", "--id", "sym1", "--theta", "zpow:x"],
        ["verify", "--id", "sym1", "--theta", "circle:3"],
        ["verify", "--id", "sym1", "--theta", "zpow:5", "--alpha", "blaschke:[0.5,0]"],
        ["verify", "--id", "sym1", "--theta", "zpow:5", "--symbol", "1-2"],
        ["verify", "--id", "sym1", "--theta", "zpow:5", "--grid", "1000"],
        ["verify", "--id", "sym1", "--theta", "blaschke:[2,0]"],
        ["build", "--op", "atto", "--theta", "zpow:5", "--alpha", "zpow:3"],
        ["classify", "--theta", "blaschke:[0.5,0]"],
        ["suite", "--tol", "-1"],
    ],
)
def test_malformed_arguments_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert "usage" in err
