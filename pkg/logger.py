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

import sys
import time
from datetime import datetime


class Log:
    """A kernel log entry: a named message shown when its depth is within the logger depth"""

    def __init__(self, name, text, depth=0):
        """
        :param str name:
            entry name, timers and timing totals are keyed by it
        :param str text:
        :param int depth:
            0 for command summaries, 1 for whole operations (saturation, wgg checks, probes),
            2 for their inner stages
        """
        self.name = name
        self.text = text
        self.depth = depth


class Logger:
    """Writes kernel logs to stdout, stderr or a file, and times named operations"""

    TARGETS = ("terminal", "stderr", "file")

    def __init__(self, log_depth=0, log_targets=("stderr",), filepath="wpstack.log"):
        """
        :param int log_depth:
            deepest log that is written
        :param tuple[str] log_targets:
            any of "terminal" (stdout), "stderr" and "file". The command line writes to stderr only, since stdout
            carries the result document.
        :param str filepath:
            file appended to when log_targets contains "file"
        """
        unknown = [target for target in log_targets if target not in self.TARGETS]
        if unknown:
            raise ValueError("unknown log targets %s" % ", ".join(unknown))
        self.depth = log_depth
        self.targets = tuple(log_targets)
        self.timers = {}
        # name -> [count, total seconds]
        self.timings = {}
        self.log_file = open(filepath, "a") if "file" in self.targets else None

    def enabled(self, log):
        return bool(self.targets) and log.depth <= self.depth

    def log(self, logs, condition=True):
        """Writes the logs whose depth is within the logger depth

        :param list[Log] logs:
        :param condition:
            nothing is written unless truthy
        """
        if condition:
            for log in logs:
                if self.enabled(log):
                    self._write(log.text)

    def start_log_timer(self, logs, condition=True):
        """Starts timing the operations named by 'logs'. Timings are collected at every depth so that
        timing_report() is complete even when nothing is written.

        :param list[Log] logs:
        :param condition:
        """
        if condition:
            now = time.perf_counter()
            for log in logs:
                self.timers[log.name] = now

    def stop_log_timer(self, logs, condition=True):
        """Stops the timers of 'logs', adds them to the totals and writes the elapsed time of the enabled ones

        :param list[Log] logs:
        :param condition:
        """
        if not condition:
            return
        for log in logs:
            started = self.timers.pop(log.name, None)
            if started is None:
                continue
            elapsed = time.perf_counter() - started
            total = self.timings.setdefault(log.name, [0, 0.0])
            total[0] += 1
            total[1] += elapsed
            if self.enabled(log):
                self._write("[%s] took %d ms" % (log.text, int(elapsed * 1000)))

    def timing_report(self):
        """Returns {name: {"calls": int, "total_ms": int}} for every timed operation"""
        return {name: {"calls": count, "total_ms": int(total * 1000)}
                for name, (count, total) in sorted(self.timings.items())}

    def close(self):
        if self.log_file is not None:
            self.log_file.close()
            self.log_file = None

    def _write(self, text):
        line = "[%s] %s" % (datetime.now().isoformat(timespec="seconds"), text)
        for target in self.targets:
            if target == "terminal":
                print(line)
            elif target == "stderr":
                print(line, file=sys.stderr)
            elif self.log_file is not None:
                print(line, file=self.log_file)
                self.log_file.flush()
