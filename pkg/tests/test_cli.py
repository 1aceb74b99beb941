import json
import xml.etree.ElementTree as ET
import pytest

from cliffwalls.cli import main

NS = {"svg": "http://www.w3.org/2000/svg"}


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_cliff_k3_table(capsys):
    code, out, _ = run_cli(capsys, "cliff", "k3", "--r", "3", "--g", "9")
    assert code == 0
    assert "value_num = 10" in out and "value_den = 3" in out


def test_cliff_p2_json(capsys):
    code, out, _ = run_cli(capsys, "cliff", "p2", "--r", "4", "--l", "6",
                           "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["schema"] == "cliff-walls/1"
    assert (data["value_num"], data["value_den"]) == (2, 1)
    assert data["valid"] is True


def test_cliff_hypothesis_violation_exit_code(capsys):
    code, _, err = run_cli(capsys, "cliff", "k3", "--r", "3", "--g", "8")
    assert code == 1
    assert "g >= r^2" in err


def test_cliff_construction_unavailable_flag(capsys):
    code, out, _ = run_cli(capsys, "cliff", "k3", "--r", "2", "--g", "4",
                           "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["valid"] is False
    assert "construction unavailable" in data["provenance"]
    assert (data["value_num"], data["value_den"]) == (1, 1)


def test_h0_k3_json(capsys):
    code, out, _ = run_cli(capsys, "h0", "k3", "--r", "1", "--g", "5",
                           "--d", "4", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert (data["value_num"], data["value_den"]) == (49, 20)
    assert data["integer_cap"] == 2


def test_h0_p2(capsys):
    code, out, _ = run_cli(capsys, "h0", "p2", "--r", "1", "--l", "5",
                           "--d", "5", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert (data["value_num"], data["value_den"]) == (3, 1)
    assert data["integer_cap"] == 3


def test_h0_out_of_range(capsys):
    code, _, err = run_cli(capsys, "h0", "k3", "--r", "2", "--g", "4",
                           "--d", "9")
    assert code == 1
    assert "r(g-1)" in err


def test_h0_csv_header(capsys):
    code, out, _ = run_cli(capsys, "h0", "k3", "--r", "1", "--g", "5",
                           "--d", "4", "--format", "csv")
    assert code == 0
    lines = out.strip().split("\n")
    assert len(lines) == 2
    assert lines[0].split(",")[0] == "integer_cap"


def test_verify_cli_pass_and_exit_codes(capsys):
    code, out, _ = run_cli(capsys, "verify", "--suite", "q-step1",
                           "--rmax", "8", "--gmax", "100")
    assert code == 0
    assert "pass" in out
    code, out, _ = run_cli(capsys, "verify", "--suite", "plane-cases",
                           "--lmax", "12")
    assert code == 0
    code, out, _ = run_cli(capsys, "verify", "--suite", "rank2",
                           "--gmax", "20", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["passed"] is True and data["failures"] == []


def test_verify_unknown_suite_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--suite", "nosuch"])
    assert exc.value.code == 2


def test_plot_k3_structure(tmp_path, capsys):
    out = tmp_path / "k3.svg"
    code = main(["plot", "k3", "--r", "2", "--d", "6", "--g", "5",
                 "--out", str(out)])
    assert code == 0
    root = ET.parse(out).getroot()
    paths = root.findall(".//svg:path[@class='gamma-path']", NS)
    # exactly one path per unit cell in view, cells carrying their index
    cells = sorted(int(p.get("data-cell-num")) for p in paths)
    assert cells == list(range(cells[0], cells[-1] + 1))
    ids = [p.get("id") for p in paths]
    assert len(paths) == len(set(ids))
    assert all(i.startswith("gamma-path-") for i in ids)
    bands = root.findall(".//svg:rect[@id='wall-band']", NS)
    assert len(bands) == 1
    band = bands[0]
    # exact data attributes: refined window for r=2, d=6, g=5 is [-1/2, 3/8]
    assert (band.get("data-beta1-num"), band.get("data-beta1-den")) == ("-1", "2")
    assert (band.get("data-beta2-num"), band.get("data-beta2-den")) == ("3", "8")
    assert root.find(".//svg:polygon[@id='triangle']", NS) is not None
    assert root.find(".//svg:line[@id='axis-x']", NS) is not None
    assert root.find(".//svg:line[@id='axis-y']", NS) is not None


def test_plot_p2_structure(tmp_path):
    out = tmp_path / "p2.svg"
    code = main(["plot", "p2", "--r", "1", "--d", "5", "--l", "5",
                 "--out", str(out)])
    assert code == 0
    root = ET.parse(out).getroot()
    polys = root.findall(".//svg:polyline[@class='gamma-tilde-path']", NS)
    assert len(polys) >= 2
    assert root.find(".//svg:polygon[@id='triangle']", NS) is not None


def test_plot_determinism(tmp_path):
    a, b = tmp_path / "a.svg", tmp_path / "b.svg"
    for target in (a, b):
        assert main(["plot", "k3", "--r", "2", "--d", "6", "--g", "5",
                     "--out", str(target)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_plot_io_error(capsys):
    code = main(["plot", "k3", "--r", "2", "--d", "6", "--g", "5",
                 "--out", "/nonexistent-dir/x.svg"])
    assert code == 3


def test_missing_surface_parameter(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["cliff", "k3", "--r", "2"])
    assert exc.value.code == 2


def test_stdout_determinism(capsys):
    outputs = []
    for _ in range(2):
        code, out, _ = run_cli(capsys, "cliff", "k3", "--r", "5", "--g", "30",
                               "--format", "json")
        assert code == 0
        outputs.append(out)
    assert outputs[0] == outputs[1]


def test_verify_failure_exit_code(capsys, monkeypatch):
    # exercise the failure rendering and exit code with a stubbed report
    import cliffwalls.cli as cli_mod
    from cliffwalls.verifier import Failure, VerificationReport
    from fractions import Fraction

    def fake_run_suite(spec):
        rep = VerificationReport(spec.suite)
        rep.checked = 1
        rep.failures.append(Failure(("x", 1), Fraction(3, 2), Fraction(1), "stub"))
        return rep

    monkeypatch.setattr(cli_mod, "run_suite", fake_run_suite)
    code, out, _ = run_cli(capsys, "verify", "--suite", "rank2")
    assert code == 2
    assert "FAIL" in out
    code, out, _ = run_cli(capsys, "verify", "--suite", "rank2",
                           "--format", "json")
    assert code == 2
    data = json.loads(out)
    assert data["passed"] is False
    assert data["failures"][0]["lhs_num"] == 3
    assert data["failures"][0]["lhs_den"] == 2
    code, out, _ = run_cli(capsys, "verify", "--suite", "rank2",
                           "--format", "csv")
    assert code == 2
    assert "stub" in out
