import json

import pytest

from comather import COMMAND_CONFIG
from comather.cli import COMMANDS, build_parser, main, run_command
from comather.chow import FlagSpace
from comather.golden import FIXTURE_DIR
from comather.loc import conormal_localize


def test_every_command_is_registered_and_described():
    names = [command["name"] for command in COMMANDS]
    assert names == list(COMMAND_CONFIG)
    assert all(command["description"] for command in COMMANDS)


def test_run_command_mather():
    result = run_command("mather", space="A3/P2", w="2,1")
    assert result["success"]
    assert result["output"] == "[21]+3[2]+3[11]+8[1]+6[()]"
    assert result["exit_code"] == 0


def test_run_command_dual_mather():
    result = run_command("mather", space="A3/P2", w="21", dual=True)
    assert result["output"] == "[21]-3[2]-3[11]+8[1]-6[()]"


def test_run_command_json_schema():
    result = run_command("mather", space="A3/P2", w="21", equivariant=True, format="json")
    data = json.loads(result["output"])
    assert data["space"] == "A3/P2"
    assert data["equivariant"] is True
    by_label = {term["label"]: term for term in data["terms"]}
    assert by_label["1"]["coeff"] == "8+2a1+4a2+2a3"
    assert by_label["21"]["word"] == "132"


def test_run_command_unknown():
    result = run_command("frobnicate")
    assert not result["success"]
    assert result["message"] == "Command frobnicate not found"


def test_invalid_input_gives_exit_code_two():
    assert run_command("mather", space="C3/P1", w="1")["exit_code"] == 2
    assert run_command("mather", space="A3/P9", w="1")["exit_code"] == 2
    assert run_command("mather", space="A3/P2", w="21", format="yaml")["exit_code"] == 2


def test_euler_and_cc():
    euler = run_command("euler", space="C3/P3", w="3,2")
    assert euler["values"] == {"()": 1, "1": 0, "2": 0, "21": 1, "3": 0, "31": 1, "32": 1}
    cc = run_command("cc", space="C2/P2", w="2")
    assert cc["multiplicities"] == {"2": 1, "()": 1}
    assert cc["irreducible"] is False
    assert "reducible" in cc["message"]
    pulled = run_command("cc", space="C2/P2", w="2", pullback_to="B")
    assert pulled["multiplicities"] == {"2": 1, "()": 1}
    assert run_command("cc", space="C2/P2", w="2", pullback_to="P1")["exit_code"] == 2


def test_klclass_and_segre():
    kl = run_command("klclass", space="C2/P2", w="2")
    assert kl["success"]
    assert kl["output"].startswith("[2]")
    assert kl["output"].endswith("+3[()]")
    assert run_command("segre-mather", space="A2/P1", w="1")["output"] == "[1]-[()]"
    assert run_command("segre-mather", space="A2/P1", w="1", conormal=True)["success"]


def test_mather_poly():
    result = run_command("mather-poly", space="C4/P4", w="431")
    assert result["polynomial"] == "x^8+11x^7+52x^6+152x^5+286x^4+452x^3+246x^2+132x+24"
    assert result["unimodal"] and result["log_concave"]


def test_pullback_mather_command():
    result = run_command("pullback-mather", space="A3/P2", w="21", to="B")
    assert result["success"]
    assert result["output"].startswith("[")


def test_conormal_loc_command():
    result = run_command("conormal-loc", space="A3/P2", w="21", u="()")
    assert result["success"]
    space = FlagSpace.parse("A3/P2")
    value = conormal_localize(space, space.parse_element("21"), space.group.identity)
    assert result["output"] == value.to_str()


def test_table_command():
    result = run_command("table", space="A3/P2", kind="mather")
    lines = result["output"].splitlines()
    assert lines[0] == ",(),1,11,2,21,22"
    assert lines[1] == "(),1,2,3,3,6,6"
    like = run_command("table", like="LG48-euler")
    assert like["output"] == (FIXTURE_DIR / "lg48_euler.csv").read_text()
    plain = run_command("table", space="C4/P4", kind="euler")
    assert plain["output"] == (FIXTURE_DIR / "lg48_euler.csv").read_text()
    assert run_command("table", kind="mather")["exit_code"] == 2


def test_golden_diff_command(tmp_path):
    assert run_command("golden-diff", id="LG48-mather")["exit_code"] == 0
    text = (FIXTURE_DIR / "lg48_mather.csv").read_text().replace("(),1,2,2,4", "(),1,2,2,5", 1)
    (tmp_path / "lg48_mather.csv").write_text(text)
    result = run_command("golden-diff", id="LG48-mather", fixture_dir=tmp_path)
    assert result["exit_code"] == 1
    assert result["output"].splitlines() == ["row,column,expected,got", "(),21,5,4"]


def test_scan_command():
    result = run_command("scan", spaces=["A3/P2", "C3/P3"])
    assert result["success"], result["output"]
    quadric = run_command("scan", spaces=["D4/P1"], which=["logconcave"])
    assert quadric["success"]
    assert quadric["report"]["D4/P1"]["logconcave"]


@pytest.mark.slow
def test_scan_lagrangian_grassmannian_of_rank_five():
    result = run_command("scan", spaces=["C5/P5"], which=["unimodal", "logconcave"])
    assert result["exit_code"] == 0
    found = result["report"]["C5/P5"]
    assert found["unimodal"] == []
    assert {"531", "54321"} <= set(found["logconcave"])


def test_main_prints_output(capsys):
    assert main(["mather", "--space", "A3/P2", "--w", "2,1"]) == 0
    assert capsys.readouterr().out.strip() == "[21]+3[2]+3[11]+8[1]+6[()]"


def test_main_reports_errors(capsys):
    assert main(["euler", "--space", "A3/P7", "--w", "1"]) == 2
    assert "❌" in capsys.readouterr().err


def test_main_interval_cap():
    assert main(["--max-interval", "2", "euler", "--space", "B3/P1", "--w", "3"]) == 2


def test_parser_rejects_unknown_golden_id():
    with pytest.raises(SystemExit):
        build_parser().parse_args(["golden-diff", "Gr99"])
