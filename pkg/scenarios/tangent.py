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

from .base import Scenario
from ..bundles import euler_tangent, graded_ext, is_vector_bundle, module_rank, twist_sheaves, verify_tangent_ample
from ..gmodule import Presentation
from ..quotient import DegreeWindow


__all__ = ["EulerScenario", "TangentAmpleScenario"]


class EulerScenario(Scenario):
    """The Euler sequence is exact, its cokernel T is a vector bundle of rank n and, with two variables,
    T = O(a0 + a1)

    params: window, line_window, expected_dims, expected_ext1_dimension
    """

    def checks(self):
        ring = self.ring
        logger = self.options.logger
        window = DegreeWindow(*self.param("window", [-6, 10]))
        sequence = euler_tangent(ring, window, self.options)
        tangent = sequence.tangent
        for name, passed in sorted(sequence.checks(window, logger).items()):
            yield "euler sequence: %s" % name, passed, None
        yield "tangent sheaf is a vector bundle", bool(is_vector_bundle(tangent, logger)), None
        rank = module_rank(tangent.module)
        yield "tangent sheaf has rank n", rank == ring.nvars - 1, {"rank": rank}
        if ring.nvars == 2:
            lo, hi = self.param("line_window", [-2, 8])
            dims = tangent.dims(lo, hi)
            twist = sum(ring.weights)
            expected = [len(ring.monomial_basis(d + twist)) for d in range(lo, hi + 1)]
            yield "tangent sheaf is O(%d)" % twist, dims == expected, {"dims": dims}
        expected_dims = self.param("expected_dims")
        if expected_dims is not None:
            lo, values = expected_dims["from"], expected_dims["values"]
            dims = tangent.dims(lo, lo + len(values) - 1)
            yield "tangent dimensions match the recorded ones", dims == values, {"dims": dims}
        expected_ext = self.param("expected_ext1_dimension")
        if expected_ext is not None and ring.nvars >= 3:
            ext = graded_ext(tangent.module, Presentation.free(ring, [0]), 1, minimal=True, logger=logger)
            dimension = ext.module.gb().standard_term_count() if ext.is_torsion else None
            yield "Ext^1(T, A) has the recorded dimension", dimension == expected_ext, {"dimension": dimension}


class TangentAmpleScenario(Scenario):
    """The ampleness probe of the tangent sheaf against twists of the structure sheaf

    params: twists, n_max, expected_n0
    """

    def checks(self):
        ring = self.ring
        sheaves = twist_sheaves(ring, self.param("twists", [0, -5]), self.options)
        report = verify_tangent_ample(ring, sheaves, self.param("n_max", 8), self.options, raise_on_failure=False)
        n0 = report.n0_values()
        yield "tangent sheaf is a vector bundle", report.vector_bundle, None
        yield "every test sheaf has an n0", report.success, {"n0": n0}
        expected = self.param("expected_n0")
        if expected is not None:
            yield "probe matches the recorded n0", n0 == expected, {"expected": expected}
