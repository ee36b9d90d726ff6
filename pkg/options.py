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

import os

from .exceptions import MalformedInputError
from .logger import Logger


class KernelOptions:
    """Options shared by every computation of the kernel"""

    def __init__(self, field="Q", stabilization_cap=64, window_margin=2, log_depth=0, log_targets=(),
                 log_filepath="wpstack.log"):
        """
        :param str field:
            default coefficient field, "Q" for the rationals or "Fp:<p>" for the prime field with p elements.
            N.B. this is used only when a ring is created without an explicit field
        :param int stabilization_cap:
            maximum number of Hom(m, -) stages tried by saturation before giving up
        :param int window_margin:
            number of extra degrees added on both sides of default degree windows
        :param int log_depth:
            maximum log depth, see Logger
        :param tuple[str] log_targets:
            log media, see Logger. An empty sequence keeps the kernel silent
        :param str log_filepath:
            log file path, used only if 'log_targets' contains "file"
        """
        if stabilization_cap < 1:
            raise MalformedInputError('stabilization_cap should be positive, got %s instead' % stabilization_cap)
        if window_margin < 0:
            raise MalformedInputError('window_margin should be non-negative, got %s instead' % window_margin)
        self.field = field
        self.stabilization_cap = stabilization_cap
        self.window_margin = window_margin
        self.log_depth = log_depth
        self.log_targets = tuple(log_targets)
        self.log_filepath = log_filepath
        self._logger = None

    @classmethod
    def from_environment(cls, environ=None, **overrides):
        """Build options from the WPSTACK_* environment variables, then apply explicit overrides

        :param dict[str, str] environ:
            environment to read, os.environ if None
        :param overrides:
            keyword arguments of the constructor that win over the environment
        :rtype: KernelOptions
        """
        environ = os.environ if environ is None else environ
        kwargs = {}
        if "WPSTACK_FIELD" in environ:
            kwargs["field"] = environ["WPSTACK_FIELD"]
        for key, name in (("WPSTACK_STABILIZATION_CAP", "stabilization_cap"),
                          ("WPSTACK_WINDOW_MARGIN", "window_margin"),
                          ("WPSTACK_LOG_DEPTH", "log_depth")):
            if key in environ:
                try:
                    kwargs[name] = int(environ[key])
                except ValueError:
                    raise MalformedInputError('%s should be an integer, got "%s" instead' % (key, environ[key]))
        kwargs.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**kwargs)

    def field_spec(self):
        """Returns the FieldSpec described by the 'field' option

        :rtype: ring.FieldSpec
        """
        from .ring import FieldSpec
        return FieldSpec.parse(self.field)

    @property
    def logger(self):
        """Shared logger, created on first use"""
        if self._logger is None:
            self._logger = Logger(log_depth=self.log_depth, log_targets=self.log_targets,
                                  filepath=self.log_filepath)
        return self._logger

    def describe(self):
        """Returns the options as a plain dict, echoed by result documents"""
        return {
            "field": self.field,
            "stabilization_cap": self.stabilization_cap,
            "window_margin": self.window_margin,
        }


class SessionOptions:
    """Command line session options"""

    def __init__(self, session_path="wpstack-session.json", kernel_options=None, scenario_path=None):
        """
        :param str session_path:
            path of the session document that is loaded before and saved after each command
        :param KernelOptions kernel_options:
            options of the computations, KernelOptions.from_environment() if None
        :param str scenario_path:
            scenario file used by verify-paper.
            If None, the bundled scenarios/suite.json will be used
        """
        self.session_path = session_path
        self.kernel_options = kernel_options or KernelOptions.from_environment()
        self.scenario_path = scenario_path or self.default_scenario_path()

    @staticmethod
    def default_scenario_path():
        this_file_dir = os.path.dirname(os.path.realpath(__file__))
        return os.path.join(this_file_dir, "scenarios", "suite.json")
