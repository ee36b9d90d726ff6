# Copyright (C) 2026
#
# This file is part of Wpstack.
#
# Wpstack is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# Wpstack is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <http://www.gnu.org/licenses/>.

import json

import pytest

from wpstack import cli, documents
from wpstack.cli import EXIT_VERIFICATION_FAILED, main, run_command


@pytest.fixture
def wpstack(tmp_path):
    """Runs commands on a session file of its own, with an empty environment"""
    path = str(tmp_path / "session.json")

    def run(*argv, environ=None):
        return run_command(["--session", path] + list(argv), environ={} if environ is None else environ)
    return run


def write_json(tmp_path, name, document):
    path = tmp_path / name
    path.write_text(json.dumps(document))
    return str(path)


def test_ring_new(wpstack):
    code, document = wpstack("ring", "new", "2,3")
    assert code == 0
    assert document["schema_version"] == documents.SCHEMA_VERSION
    assert document["command"] == "ring new"
    assert document["result"] == {"ring": {"field": "Q", "weights": [2, 3]}, "lcm_weights": 6}


@pytest.mark.parametrize("argv", [
    ["ring", "new", "1,x"],
    ["frobnicate"],
    ["ring", "new", "1,1", "--field", "R"],
])
def test_malformed_input_exits_with_1(wpstack, argv):
    code, document = wpstack(*argv)
    assert code == 1
    assert "result" not in document


def test_preconditions_exit_with_2(wpstack):
    code, document = wpstack("ring", "new", "2")
    assert code == 2
    assert document["error"]["type"] == "SingleVariableRingError"
    assert wpstack("ring", "new", "1,1", "--field", "Fp:9")[0] == 2
    assert wpstack("mod", "new", "--degrees", "0", "--as", "M")[0] == 2
    assert wpstack("ring", "new", "1,1")[0] == 0
    assert wpstack("mod", "hilbert", "M", "--from", "0", "--to", "1")[0] == 2
    assert wpstack("twist-epi", "-1", "--as", "E")[0] == 2


def test_stabilization_budget_exits_with_3(wpstack):
    wpstack("ring", "new", "1,1")
    code, _ = wpstack("mod", "new", "--degrees", "3,3,3,3", "--relation", "x1,-x0,0,0", "--relation", "0,x1,-x0,0",
                      "--relation", "0,0,x1,-x0", "--as", "M")
    assert code == 0
    code, document = wpstack("--cap", "1", "sat", "M", "--as", "S")
    assert code == 3
    assert document["error"]["type"] == "StabilizationBudgetExceeded"
    assert document["config"]["stabilization_cap"] == 1
    code, document = wpstack("sat", "M", "--as", "S")
    assert code == 0
    assert wpstack("mod", "hilbert", "S", "--from", "-1", "--to", "2")[1]["result"]["dims"] == [0, 1, 2, 3]


def test_wgg_check_of_a_negative_twist(wpstack):
    wpstack("ring", "new", "2,3")
    wpstack("mod", "new", "--degrees", "1", "--as", "L")
    code, document = wpstack("wgg-check", "L")
    assert code == 0
    assert document["result"]["verdict"] is False
    assert document["result"]["failure_degree"] is not None
    wpstack("mod", "new", "--degrees", "-4", "--as", "O4")
    result = wpstack("wgg-check", "O4")[1]["result"]
    assert result["verdict"] is True
    assert result["multiplicities"] == [1, 1, 1, 0, 1, 0]


def test_tangent_of_the_projective_line(wpstack):
    wpstack("ring", "new", "1,1")
    code, document = wpstack("tangent")
    assert code == 0
    assert document["result"]["name"] == "T"
    assert all(document["result"]["checks"].values())
    code, document = wpstack("mod", "hilbert", "T", "--from", "-3", "--to", "5")
    assert code == 0
    assert document["result"]["dims"] == [0, 1, 2, 3, 4, 5, 6, 7, 8]
    assert wpstack("vb-check", "T")[1]["result"]["verdict"] is True


def test_identical_invocations_give_identical_documents(tmp_path):
    outputs = []
    for name in ("first.json", "second.json"):
        argv = ["--session", str(tmp_path / name)]
        run_command(argv + ["ring", "new", "1,1,2"], environ={})
        outputs.append(documents.dumps(run_command(argv + ["tangent"], environ={})[1]))
    assert outputs[0] == outputs[1]


def test_result_documents_echo_the_configuration(wpstack):
    wpstack("ring", "new", "1,2", "--field", "Fp:5")
    code, document = wpstack("--cap", "7", "mod", "new", "--degrees", "0", "--as", "A",
                             environ={"WPSTACK_WINDOW_MARGIN": "3"})
    assert code == 0
    assert document["config"] == {"field": "Fp:5", "stabilization_cap": 7, "window_margin": 3, "weights": [1, 2]}


def test_session_weights_are_checked(wpstack):
    wpstack("ring", "new", "1,1")
    wpstack("mod", "new", "--degrees", "0", "--as", "A")
    assert wpstack("--weights", "1,1", "mod", "hilbert", "A", "--from", "0", "--to", "2")[0] == 0
    code, document = wpstack("--weights", "1,2", "mod", "hilbert", "A", "--from", "0", "--to", "2")
    assert code == 2
    assert document["error"]["type"] == "RingMismatchError"


def test_module_documents(wpstack, tmp_path):
    wpstack("ring", "new", "1,1")
    module = {"ring": {"field": "Q", "weights": [1, 1]}, "generators": [{"degree": 0}], "relations": [["x0^2"]]}
    code, document = wpstack("mod", "new", "--file", write_json(tmp_path, "module.json", module), "--as", "M")
    assert code == 0
    assert document["result"]["module"] == module
    module["name"] = "M"
    assert wpstack("mod", "new", "--file", write_json(tmp_path, "bad.json", module), "--as", "N")[0] == 1
    (tmp_path / "broken.json").write_text("{")
    assert wpstack("mod", "new", "--file", str(tmp_path / "broken.json"), "--as", "N")[0] == 1
    assert wpstack("mod", "new", "--file", str(tmp_path / "absent.json"), "--as", "N")[0] == 1


def test_module_algebra(wpstack):
    wpstack("ring", "new", "1,1")
    wpstack("mod", "new", "--degrees", "0", "--relation", "x0^2", "--relation", "x0*x1", "--as", "M")
    assert wpstack("is-torsion", "M")[1]["result"]["verdict"] is False
    code, document = wpstack("torsion", "M", "--as", "tau")
    assert code == 0 and document["result"]["dimension"] == 1
    assert wpstack("is-torsion", "tau")[1]["result"]["verdict"] is True
    wpstack("mod", "twist", "M", "1", "--as", "M1")
    assert wpstack("mod", "hilbert", "M1", "--from", "-1", "--to", "1")[1]["result"]["dims"] == [1, 2, 1]
    wpstack("mod", "new", "--degrees", "0", "--as", "A")
    wpstack("mod", "sum", "A", "M1", "--as", "S")
    assert wpstack("mod", "hilbert", "S", "--from", "0", "--to", "1")[1]["result"]["dims"] == [3, 3]
    wpstack("mod", "sym", "S", "2", "--as", "S2")
    wpstack("mod", "tensor", "A", "M", "--as", "P")
    assert wpstack("mod", "hilbert", "P", "--from", "0", "--to", "2")[1]["result"]["dims"] == [1, 2, 1]
    assert wpstack("mod", "hilbert", "P", "--from", "2", "--to", "0")[0] == 1


def test_maps(wpstack):
    wpstack("ring", "new", "1,1")
    wpstack("mod", "new", "--degrees", "1", "--as", "L")
    wpstack("mod", "new", "--degrees", "0", "--as", "A")
    code, document = wpstack("map", "new", "--source", "L", "--target", "A", "--column", "x0", "--as", "f")
    assert code == 0
    assert document["result"]["map"]["matrix"] == [["x0"]]
    assert wpstack("map", "epi-check", "f")[1]["result"]["verdict"] is False
    assert wpstack("map", "mono-check", "f")[1]["result"]["verdict"] is True
    assert wpstack("map", "iso-check", "f")[1]["result"]["verdict"] is False
    assert wpstack("map", "new", "--source", "L", "--target", "A", "--column", "1", "--as", "g")[0] == 1
    assert wpstack("map", "epi-check", "A")[0] == 2


def test_epimorphism_commands(wpstack):
    wpstack("ring", "new", "2,3")
    code, document = wpstack("twist-epi", "7", "--as", "E")
    assert code == 0 and document["result"]["epi"]["verdict"] is True
    wpstack("mod", "new", "--degrees", "0", "--relation", "x0^2", "--as", "C")
    assert wpstack("lemma-epi", "C", "2", "--as", "F")[1]["result"]["epi"]["verdict"] is True
    assert wpstack("lemma-epi", "C", "-1", "--as", "F")[0] == 2


def test_hom_and_ext(wpstack):
    wpstack("ring", "new", "1,1")
    wpstack("mod", "new", "--degrees", "0", "--relation", "x0", "--relation", "x1", "--as", "K")
    wpstack("mod", "new", "--degrees", "0", "--as", "A")
    code, document = wpstack("ext", "K", "A", "2", "--as", "E")
    assert code == 0 and document["result"]["is_torsion"] is True
    assert wpstack("mod", "hilbert", "E", "--from", "-3", "--to", "0")[1]["result"]["dims"] == [0, 1, 0, 0]
    wpstack("hom", "A", "A", "--as", "H")
    assert wpstack("mod", "hilbert", "H", "--from", "0", "--to", "1")[1]["result"]["dims"] == [1, 2]
    assert wpstack("ext", "K", "A", "-1", "--as", "E")[0] == 1


def test_ample_probe_literals(wpstack):
    wpstack("ring", "new", "1,1")
    wpstack("mod", "new", "--degrees", "-1", "--as", "L")
    code, document = wpstack("ample-probe", "L", "--nmax", "5", "--against", "O,O(-3)", "--as", "R")
    assert code == 0
    result = document["result"]
    assert [(r["sheaf"], r["n0"]) for r in result["records"]] == [("O", 1), ("O(-3)", 3)]
    assert result["success"] is True
    assert wpstack("ample-probe", "L", "--nmax", "0")[0] == 1


def scenario_entry(scenario, weights, **params):
    return {"scenario": scenario, "weights": weights, "fixed_weights": False, "params": params}


def test_verification_on_a_small_file(wpstack, tmp_path):
    entries = [scenario_entry("TwistGenerationScenario", [2, 3], twists=[0, 4]),
               scenario_entry("TangentAmpleScenario", [1, 1], twists=[0], n_max=3, expected_n0={"O": 1})]
    code, document = wpstack("verify-paper", "--scenarios", write_json(tmp_path, "ok.json", entries))
    assert code == 0
    assert document["result"]["passed"] is True
    assert [run["scenario"] for run in document["result"]["runs"]] == ["TwistGenerationScenario",
                                                                      "TangentAmpleScenario"]


def test_verification_failures(wpstack, tmp_path):
    wrong = [scenario_entry("TangentAmpleScenario", [1, 1], twists=[0], n_max=3, expected_n0={"O": 2})]
    code, document = wpstack("verify-paper", "--scenarios", write_json(tmp_path, "wrong.json", wrong))
    assert code == EXIT_VERIFICATION_FAILED
    assert document["result"]["failed_checks"] == 1
    assert wpstack("verify-paper", "--weights", "1,1", "--scenarios", write_json(tmp_path, "wrong.json", wrong))[0] \
        == EXIT_VERIFICATION_FAILED
    moved = [scenario_entry("TangentAmpleScenario", [2, 3], twists=[0], n_max=3, expected_n0={"O": 2})]
    assert wpstack("verify-paper", "--weights", "1,1", "--scenarios", write_json(tmp_path, "moved.json", moved))[0] == 0
    for name in ("NoSuchScenario", "Scenario", "Session"):
        unknown = [scenario_entry(name, [1, 1])]
        assert wpstack("verify-paper", "--scenarios", write_json(tmp_path, "unknown.json", unknown))[0] == 1


def test_main_prints_the_document(tmp_path, capsys, monkeypatch):
    for key in ("WPSTACK_FIELD", "WPSTACK_STABILIZATION_CAP", "WPSTACK_WINDOW_MARGIN", "WPSTACK_LOG_DEPTH"):
        monkeypatch.delenv(key, raising=False)
    code = main(["--session", str(tmp_path / "session.json"), "ring", "new", "1,1"])
    assert code == 0
    out = capsys.readouterr().out
    assert json.loads(out)["result"]["lcm_weights"] == 1


def test_internal_errors_are_not_reported_as_malformed_input(wpstack, monkeypatch):
    def broken(args, context):
        raise ValueError("broken invariant")
    monkeypatch.setattr(cli, "ring_new", broken)
    with pytest.raises(ValueError, match="broken invariant"):
        wpstack("ring", "new", "1,1")


def test_out_of_range_arguments_exit_with_1(wpstack):
    wpstack("ring", "new", "1,1")
    code, document = wpstack("tangent", "--window", "5", "1")
    assert code == 1
    assert document["error"]["type"] == "MalformedInputError"


def test_session_path_from_the_environment(tmp_path):
    path = tmp_path / "env-session.json"
    code, _ = run_command(["ring", "new", "1,2"], environ={"WPSTACK_SESSION": str(path)})
    assert code == 0
    assert json.loads(path.read_text())["ring"]["weights"] == [1, 2]
