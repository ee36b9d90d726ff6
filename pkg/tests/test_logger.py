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

import pytest

from wpstack.gmodule import FreeModule, present
from wpstack.logger import Log, Logger
from wpstack.options import KernelOptions
from wpstack.quotient import saturate


def test_depth_filters_logs(capsys):
    logger = Logger(log_depth=1)
    logger.log([Log("a", "shown", depth=0), Log("b", "also shown", depth=1), Log("c", "hidden", depth=2)])
    err = capsys.readouterr().err
    assert "shown" in err and "also shown" in err and "hidden" not in err
    logger.log([Log("a", "skipped")], condition=False)
    assert capsys.readouterr().err == ""


def test_timers_are_totalled_even_when_silent(capsys):
    logger = Logger(log_depth=0, log_targets=())
    for _ in range(3):
        logger.start_log_timer([Log("stage", "a stage", depth=2)])
        logger.stop_log_timer([Log("stage", "a stage", depth=2)])
    logger.stop_log_timer([Log("never", "never started")])
    assert logger.timing_report()["stage"]["calls"] == 3
    assert "never" not in logger.timing_report()
    assert capsys.readouterr() == ("", "")


def test_file_target(tmp_path):
    path = tmp_path / "kernel.log"
    logger = Logger(log_targets=("file",), filepath=str(path))
    logger.log([Log("summary", "hello")])
    logger.close()
    assert path.read_text().strip().endswith("hello")


def test_unknown_target():
    with pytest.raises(ValueError):
        Logger(log_targets=("syslog",))


def test_saturation_is_timed(p11):
    options = KernelOptions(log_targets=())
    x0 = p11.variable(0)
    saturate(present(FreeModule(p11, [0]), [[x0 * x0], [x0 * p11.variable(1)]]), options=options)
    assert options.logger.timing_report()["saturate"]["calls"] == 1
