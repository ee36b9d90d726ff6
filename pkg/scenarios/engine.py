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
from .instances import membership_instance, saturation_instance
from ..gmodule import DegreeComponent, FreeModule, Presentation, hilbert_function
from ..groebner import kernel, module_gb, same_submodule, vector_to_column
from ..quotient import DegreeWindow, is_epi_sheaf, is_iso_sheaf, saturate, torsion_submodule
from ..ring import hilbert_series
from ..sheafops import saturation_tensor_map


__all__ = ["EngineOracleScenario", "SaturationScenario", "TensorSaturationScenario"]


class EngineOracleScenario(Scenario):
    """Groebner normal forms against degreewise linear algebra on random membership problems

    params: seed, instances, max_degree
    """

    def checks(self):
        ring = self.ring
        max_degree = self.param("max_degree", 8)
        membership, dimensions, criterion = [], [], []
        for index in range(self.param("instances", 50)):
            degrees, generators, vector, d = membership_instance(ring, self.rng, max_degree)
            gb = module_gb(ring, degrees, generators, logger=self.options.logger)
            module = Presentation(FreeModule(ring, degrees),
                                  [vector_to_column(v, ring, len(degrees)) for v in generators])
            component = DegreeComponent(module, d)
            membership.append((index, gb.contains(vector) == component.contains(vector)))
            dimensions.append((index, hilbert_function(module, d) == component.dimension))
            criterion.append((index, gb.is_groebner()))
        yield self.all_pass("membership agrees with linear algebra", membership)
        yield self.all_pass("standard terms count the degree components", dimensions)
        yield self.all_pass("S-vectors reduce to zero", criterion)
        series = hilbert_series(ring, max_degree)
        counts = [len(ring.monomial_basis(d)) for d in range(max_degree + 1)]
        yield "hilbert series counts monomials", series.tolist() == counts, {"series": series.tolist()}


class SaturationScenario(Scenario):
    """The kernel of M -> Sat(M) is the torsion of M, its cokernel is torsion and saturating twice changes nothing

    params: seed, instances, window
    """

    def checks(self):
        ring = self.ring
        logger = self.options.logger
        window = DegreeWindow(*self.param("window", [-6, 12]))
        kernels, cokernels, idempotent = [], [], []
        for index in range(self.param("instances", 25)):
            family, module = saturation_instance(ring, self.rng)
            label = "%d:%s" % (index, family)
            sheaf = saturate(module, window, self.options)
            relations = [v for v in module.relation_vectors() if v]
            unit_kernel = kernel(sheaf.unit, logger=logger)[1].image_vectors()
            torsion = torsion_submodule(module, logger=logger).inclusion.image_vectors()
            kernels.append((label, same_submodule(ring, module.generator_degrees,
                                                  [v for v in unit_kernel if v] + relations,
                                                  [v for v in torsion if v] + relations)))
            cokernels.append((label, bool(is_epi_sheaf(sheaf.unit))))
            again = saturate(sheaf.module, window, self.options)
            idempotent.append((label, again.dims() == sheaf.dims() and bool(is_iso_sheaf(again.unit, logger))))
        yield self.all_pass("kernel of the unit is the torsion submodule", kernels)
        yield self.all_pass("cokernel of the unit is torsion", cokernels)
        yield self.all_pass("saturation is idempotent on the window", idempotent)


class TensorSaturationScenario(Scenario):
    """M (x) N -> Sat(M) (x) Sat(N) is an isomorphism of sheaves

    params: seed, instances
    """

    families = ("primary_ideal", "finite_module", "finite_summand", "embedded_point")

    def checks(self):
        outcomes = []
        for index in range(self.param("instances", 10)):
            first_family, first = saturation_instance(self.ring, self.rng, self.families)
            second_family, second = saturation_instance(self.ring, self.rng, self.families)
            graded_map, _, _ = saturation_tensor_map(first, second, self.options)
            label = "%d:%s*%s" % (index, first_family, second_family)
            outcomes.append((label, bool(is_iso_sheaf(graded_map, self.options.logger))))
        yield self.all_pass("canonical map to the tensor of saturations is an isomorphism", outcomes)
