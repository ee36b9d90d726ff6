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

import importlib.util
import os
import sys

import pytest
from hypothesis import settings

ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))


def _load_package(name="wpstack"):
    # the repository root is the package, whatever the name of its directory
    if name in sys.modules:
        return sys.modules[name]
    spec = importlib.util.spec_from_file_location(name, os.path.join(ROOT, "__init__.py"),
                                                  submodule_search_locations=[ROOT])
    package = importlib.util.module_from_spec(spec)
    sys.modules[name] = package
    spec.loader.exec_module(package)
    return package


_load_package()

from wpstack.options import KernelOptions  # noqa: E402
from wpstack.ring import FieldSpec, WeightedRing  # noqa: E402

settings.register_profile("wpstack", derandomize=True, deadline=None, max_examples=25)
settings.load_profile("wpstack")


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False, help="run the long verification tests")


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: long verification runs, skipped without --runslow")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture
def p11():
    return WeightedRing([1, 1])


@pytest.fixture
def p12():
    return WeightedRing([1, 2])


@pytest.fixture
def p23():
    return WeightedRing([2, 3])


@pytest.fixture
def p112():
    return WeightedRing([1, 1, 2])


@pytest.fixture
def p111():
    return WeightedRing([1, 1, 1])


@pytest.fixture
def p123():
    return WeightedRing([1, 2, 3])


@pytest.fixture
def p112_f7():
    return WeightedRing([1, 1, 2], FieldSpec(7))


@pytest.fixture
def options():
    return KernelOptions()
