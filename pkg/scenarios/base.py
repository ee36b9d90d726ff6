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

from abc import ABC, abstractmethod
import random

from .. import documents
from ..exceptions import AmpleProbeFailure, BudgetExceededError, PreconditionError, SchemaError
from ..options import KernelOptions


__all__ = ["Scenario", "load_entries", "select_entries"]


# ABSTRACT CLASS

class Scenario(ABC):
    """Base class for verification scenarios.
    Concrete classes yield their checks from .checks(), each as a tuple (name, passed, details).

    N.B. scenarios are looked up by class name from the entries of a scenario file, so renaming a class breaks
    the files that use it.
    """

    def __init__(self, ring, params=None, options=None):
        """
        :param ring.WeightedRing ring:
            ring of the scenario
        :param dict params:
            scenario specific parameters, "seed" seeds the random instances
        :param options.KernelOptions options:
        """
        self.ring = ring
        self.params = dict(params or {})
        self.options = options or KernelOptions()
        self.rng = random.Random(self.params.get("seed", 0))

    def param(self, name, default=None):
        return self.params.get(name, default)

    @abstractmethod
    def checks(self):
        """the implementing class should yield tuples (check name, passed, JSON-serializable details)"""
        yield from ()

    def configuration(self):
        return {"weights": list(self.ring.weights), "field": str(self.ring.field), "params": self.params}

    def run(self, evaluator):
        """Runs every check, recording them in 'evaluator'

        :param evaluator.ScenarioEvaluator evaluator:
        :rtype: bool
        :return:
            whether every check passed
        """
        evaluator.on_run_begin(type(self).__name__, self.configuration())
        try:
            for name, passed, details in self.checks():
                evaluator.on_check(name, passed, details)
        except (BudgetExceededError, PreconditionError, AmpleProbeFailure) as e:
            evaluator.on_error(e)
        run = evaluator.current_run
        evaluator.on_run_end()
        return run.passed

    @staticmethod
    def all_pass(name, outcomes):
        """Folds a list of (instance label, passed) into a single check"""
        failing = [label for label, passed in outcomes if not passed]
        return name, not failing, {"instances": len(outcomes), "failing": failing}


def load_entries(path):
    """Reads a scenario file: a JSON list of {"scenario", "weights", "fixed_weights", "params"}

    :param str path:
    :rtype: list[dict]
    """
    with open(path) as f:
        entries = documents.loads(f.read(), "scenario file %s" % path)
    if not isinstance(entries, list):
        raise SchemaError("scenario file %s should hold a JSON list" % path)
    for entry in entries:
        documents.check_fields(entry, ("scenario", "weights", "fixed_weights", "params"), what="scenario entry")
    return entries


def select_entries(entries, weights=None):
    """Entries to run. With 'weights', every scenario whose weights are not fixed runs once on those weights,
    without the expectations recorded for its own weights (parameters named "expected_*")

    :param list[dict] entries:
    :param list[int] weights:
    :rtype: list[dict]
    """
    if weights is None:
        return list(entries)
    selected, seen = [], set()
    for entry in entries:
        if entry["fixed_weights"]:
            selected.append(entry)
            continue
        if entry["scenario"] in seen:
            continue
        seen.add(entry["scenario"])
        params = entry["params"]
        if list(entry["weights"]) != list(weights):
            params = {key: value for key, value in params.items() if not key.startswith("expected_")}
        selected.append(dict(entry, weights=list(weights), params=params))
    return selected
