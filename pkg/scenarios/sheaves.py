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
from .instances import random_quotient, twist_sum
from ..bundles import ample_probe, twist_sheaves, verify_tangent_ample
from ..exceptions import DegreeTooSmall
from ..gmodule import (FreeModule, Presentation, direct_sum, hilbert_function, present, sym_multiplication,
                       sym_sum_map, tensor_presentation)
from ..quotient import is_epi_sheaf, is_iso_sheaf
from ..sheafops import lemma_epi, structure_twist, twist_epi, wgg_check, wgg_check_presentation


__all__ = ["TwistGenerationScenario", "LemmaEpiScenario", "ClosureScenario", "ClassicalGenerationScenario",
           "CoarseIdentificationScenario"]


class TwistGenerationScenario(Scenario):
    """O(k) is weighted globally generated exactly for k >= 0, and the explicit epimorphisms onto O(k) are onto

    params: twists [lo, hi], negative_twists
    """

    def checks(self):
        ring = self.ring
        lo, hi = self.param("twists", [0, 10])
        generated, epis = [], []
        for k in range(lo, hi + 1):
            generated.append((k, bool(wgg_check(structure_twist(ring, k, options=self.options), self.options))))
            epis.append((k, bool(is_epi_sheaf(twist_epi(ring, k)))))
        yield self.all_pass("non-negative twists are weighted globally generated", generated)
        yield self.all_pass("twist epimorphisms are onto", epis)
        negative = [(k, not wgg_check(structure_twist(ring, k, options=self.options), self.options))
                    for k in self.param("negative_twists", [-1])]
        yield self.all_pass("negative twists are not weighted globally generated", negative)


class LemmaEpiScenario(Scenario):
    """The epimorphisms from sums of twists onto F(n) for F = O and F = (A/(x0^2))~, for n from the largest
    generator degree on

    params: extra
    """

    def checks(self):
        ring = self.ring
        x0 = ring.variable(0)
        sheaves = [("O", Presentation.free(ring, [0])),
                   ("A/(x0^2)", present(FreeModule(ring, [0]), [[x0 * x0]]))]
        outcomes, rejected = [], []
        for name, module in sheaves:
            rho = max(module.generator_degrees)
            for n in range(rho, rho + self.param("extra", 4) + 1):
                outcomes.append(("%s,n=%d" % (name, n), bool(is_epi_sheaf(lemma_epi(module, n)))))
            try:
                lemma_epi(module, rho - 1)
                rejected.append((name, False))
            except DegreeTooSmall:
                rejected.append((name, True))
        yield self.all_pass("lemma epimorphisms are onto", outcomes)
        yield self.all_pass("degrees below the generators are rejected", rejected)


class ClosureScenario(Scenario):
    """Weighted global generation passes to quotients, direct sums and tensor products, and the multiplication of
    symmetric powers is onto

    params: seed, instances, max_twist
    """

    def wgg(self, module):
        return bool(wgg_check_presentation(module, self.options))

    def checks(self):
        ring = self.ring
        max_twist = self.param("max_twist", 3)
        quotients, sums, tensors, products, sym_sums = [], [], [], [], []
        for index in range(self.param("instances", 10)):
            module = twist_sum(ring, self.rng, 0, max_twist)
            quotient, projection = random_quotient(module, self.rng)
            quotients.append((index, bool(is_epi_sheaf(projection)) and (not self.wgg(module) or self.wgg(quotient))))

            first = twist_sum(ring, self.rng, -1, max_twist)
            second = twist_sum(ring, self.rng, -1, max_twist)
            both = self.wgg(first) and self.wgg(second)
            sums.append((index, self.wgg(direct_sum(first, second).module) == both))
            tensors.append((index, not both or self.wgg(tensor_presentation(first, second))))

            products.append((index, all(is_epi_sheaf(sym_multiplication(quotient, p, q))
                                        for p, q in ((1, 1), (1, 2), (2, 1)))))
            sym_sums.append((index, bool(is_iso_sheaf(sym_sum_map(first, second, 2), self.options.logger))))
        yield self.all_pass("quotients of generated sheaves are generated", quotients)
        yield self.all_pass("a direct sum is generated iff its summands are", sums)
        yield self.all_pass("tensor products of generated sheaves are generated", tensors)
        yield self.all_pass("multiplication of symmetric powers is onto", products)
        yield self.all_pass("symmetric square of a direct sum decomposes", sym_sums)


class ClassicalGenerationScenario(Scenario):
    """With all weights 1, weighted global generation is generation by the sections of degree 0 and the tangent
    sheaf is ample

    params: twists, probe_twists, n_max, expected_n0
    """

    def checks(self):
        ring = self.ring
        yield "lcm of the weights is 1", ring.lcm_weights == 1, {"lcm": ring.lcm_weights}
        outcomes = []
        for k in self.param("twists", [-2, -1, 0, 1, 2, 3]):
            sheaf = structure_twist(ring, k, options=self.options)
            certificate = wgg_check(sheaf, self.options)
            degree_zero = hilbert_function(sheaf.module, 0)
            outcomes.append((k, certificate.verdict == (k >= 0)
                             and certificate.multiplicities(ring.lcm_weights) == [degree_zero]))
        yield self.all_pass("generation uses the sections of degree 0", outcomes)
        sheaves = twist_sheaves(ring, self.param("probe_twists", [0, -3]), self.options)
        report = verify_tangent_ample(ring, sheaves, self.param("n_max", 6), self.options, raise_on_failure=False)
        yield "tangent sheaf probe succeeds", report.success, {"n0": report.n0_values()}
        expected = self.param("expected_n0")
        if expected is not None:
            yield "probe matches the recorded n0", report.n0_values() == expected, {"expected": expected}


class CoarseIdentificationScenario(Scenario):
    """On P(3,5) the twists O(2) and O(-1) have the same sections in every degree of the form k * lcm, and O(2)
    passes the ampleness probe

    params: twists, k_max, n_max
    """

    def checks(self):
        ring = self.ring
        first, second = self.param("twists", [2, -1])
        counts = []
        for k in range(self.param("k_max", 10) + 1):
            d = k * ring.lcm_weights
            counts.append((k, len(ring.monomial_basis(first + d)) == len(ring.monomial_basis(second + d))))
        yield self.all_pass("section counts agree", counts)
        record = ample_probe(structure_twist(ring, first, options=self.options),
                             structure_twist(ring, 0, options=self.options),
                             self.param("n_max", 4), sheaf_id="O", options=self.options)
        yield "O(%d) probe finds n0" % first, record.n0 is not None, {"n0": record.n0}
