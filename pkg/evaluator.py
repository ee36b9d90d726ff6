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

import collections
import time


class ScenarioEvaluator:
    """Keeps track of scenario runs: which checks passed, which failed and how long each run took"""

    def __init__(self, runs_for_evaluation=None):
        """
        :param int runs_for_evaluation:
            number of latest runs to consider when computing statistics
            (use 0, None or any "falsy" value to consider them all)
        """
        self.runs_for_evaluation = runs_for_evaluation or None
        self.runs = collections.deque(maxlen=self.runs_for_evaluation)  # type: deque[ScenarioRun]
        self.current_run = None  # type: ScenarioRun

    def on_run_begin(self, scenario_name, configuration):
        """Records the beginning of a scenario run

        :param str scenario_name:
        :param dict configuration:
            weights and parameters of the run, echoed in its record
        """
        self.current_run = ScenarioRun(scenario_name, configuration)

    def on_check(self, name, passed, details=None):
        """Records the outcome of a single check of the running scenario

        :param str name:
            check name
        :param bool passed:
        :param details:
            JSON-serializable data explaining the outcome
        """
        self.current_run.checks.append({"check": name, "passed": bool(passed), "details": details})

    def on_error(self, error):
        """Records an exception that aborted the running scenario"""
        self.current_run.error = "%s: %s" % (type(error).__name__, error)

    def on_run_end(self):
        """Records the end of the running scenario"""
        self.current_run.elapsed = time.perf_counter() - self.current_run.started
        self.runs.append(self.current_run)
        self.current_run = None

    def statistics(self):
        """
        :return:
            dict of statistics:
            {
             "runs": int,             # number of evaluated runs
             "passed_perc": float,    # % of runs whose checks all passed
             "checks": int,           # total number of checks
             "failed_checks": int,    # number of failed checks
             "elapsed_avg": float     # average run duration in seconds
            }
        """
        result = {"runs": len(self.runs), "passed_perc": 0, "checks": 0, "failed_checks": 0, "elapsed_avg": 0}
        for run in self.runs:
            result["checks"] += len(run.checks)
            result["failed_checks"] += sum(1 for check in run.checks if not check["passed"])
            result["elapsed_avg"] += run.elapsed
            if run.passed:
                result["passed_perc"] += 1
        if self.runs:
            result["passed_perc"] *= 100 / len(self.runs)
            result["elapsed_avg"] /= len(self.runs)
        return result

    def records(self):
        """Run records in the order they were run, without timings so that they are reproducible"""
        return [run.to_document() for run in self.runs]


class ScenarioRun:
    """A single scenario run"""

    def __init__(self, scenario_name, configuration):
        self.scenario_name = scenario_name
        self.configuration = configuration
        self.checks = []
        self.error = None
        self.started = time.perf_counter()
        self.elapsed = 0

    @property
    def passed(self):
        return self.error is None and all(check["passed"] for check in self.checks)

    def to_document(self):
        return {
            "scenario": self.scenario_name,
            "configuration": self.configuration,
            "passed": self.passed,
            "checks": self.checks,
            "error": self.error,
        }
