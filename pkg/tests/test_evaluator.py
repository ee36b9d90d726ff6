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

from wpstack.evaluator import ScenarioEvaluator
from wpstack.exceptions import SchemaError, StabilizationBudgetExceeded
from wpstack.scenarios import Scenario, load_entries, select_entries


class FixedScenario(Scenario):
    """Yields the outcomes listed in its "outcomes" parameter, then raises "error" if given"""

    def checks(self):
        for name, passed in self.param("outcomes", []):
            yield name, passed, {"seed": self.rng.randint(0, 100)}
        if self.param("error"):
            raise StabilizationBudgetExceeded(self.param("error"))


def test_runs_are_recorded(p11):
    evaluator = ScenarioEvaluator()
    assert FixedScenario(p11, {"outcomes": [["a", True], ["b", True]]}).run(evaluator)
    assert not FixedScenario(p11, {"outcomes": [["a", True], ["b", False]]}).run(evaluator)
    statistics = evaluator.statistics()
    assert statistics["runs"] == 2
    assert statistics["checks"] == 4
    assert statistics["failed_checks"] == 1
    assert statistics["passed_perc"] == 50
    records = evaluator.records()
    assert records[0]["scenario"] == "FixedScenario"
    assert records[0]["configuration"]["weights"] == [1, 1]
    assert [check["check"] for check in records[1]["checks"]] == ["a", "b"]
    assert records[1]["passed"] is False


def test_budget_errors_fail_the_run(p11):
    evaluator = ScenarioEvaluator()
    assert not FixedScenario(p11, {"outcomes": [["a", True]], "error": "too deep"}).run(evaluator)
    record = evaluator.records()[0]
    assert record["error"] == "StabilizationBudgetExceeded: too deep"
    assert record["checks"][0]["passed"]


def test_records_are_reproducible(p11):
    documents = []
    for _ in range(2):
        evaluator = ScenarioEvaluator()
        FixedScenario(p11, {"seed": 3, "outcomes": [["a", True]]}).run(evaluator)
        documents.append(json.dumps(evaluator.records(), sort_keys=True))
    assert documents[0] == documents[1]


def test_only_the_latest_runs_are_evaluated(p11):
    evaluator = ScenarioEvaluator(runs_for_evaluation=2)
    for passed in (False, True, True):
        FixedScenario(p11, {"outcomes": [["a", passed]]}).run(evaluator)
    assert evaluator.statistics()["passed_perc"] == 100


def test_all_pass():
    assert Scenario.all_pass("x", [(1, True), (2, True)]) == ("x", True, {"instances": 2, "failing": []})
    assert Scenario.all_pass("x", [(1, True), (2, False)])[1:] == (False, {"instances": 2, "failing": [2]})


def test_scenario_files(tmp_path):
    entries = [
        {"scenario": "A", "weights": [1, 1], "fixed_weights": False, "params": {"expected_n0": 1, "seed": 1}},
        {"scenario": "A", "weights": [1, 2], "fixed_weights": False, "params": {"expected_n0": 2}},
        {"scenario": "B", "weights": [3, 5], "fixed_weights": True, "params": {}},
        {"scenario": "C", "weights": [1, 2], "fixed_weights": False, "params": {"expected_dims": [1]}},
    ]
    path = tmp_path / "scenarios.json"
    path.write_text(json.dumps(entries))
    assert load_entries(str(path)) == entries
    assert select_entries(entries) == entries
    selected = select_entries(entries, [1, 2])
    assert [(e["scenario"], e["weights"]) for e in selected] == [("A", [1, 2]), ("B", [3, 5]), ("C", [1, 2])]
    assert selected[0]["params"] == {"seed": 1}
    assert selected[2]["params"] == {"expected_dims": [1]}
    path.write_text(json.dumps([{"scenario": "A", "weights": [1, 1]}]))
    with pytest.raises(SchemaError):
        load_entries(str(path))
    path.write_text(json.dumps({"scenario": "A"}))
    with pytest.raises(SchemaError):
        load_entries(str(path))
