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

"""Sheaf-level constructions on weighted projective stacks: twists O(k), tensor products, symmetric powers,
weighted global generation and the two explicit epimorphisms onto twists.
"""

from .exceptions import DegreeTooSmall, WindowTooSmall
from .gmodule import (GradedMap, Presentation, direct_sum_of, sym_presentation, tensor_map, tensor_presentation,
                      twist)
from .logger import Log
from .options import KernelOptions
from .quotient import SheafRep, default_window, is_epi_sheaf, saturate, sheaf_of, torsion_bound


def structure_twist(ring, k, window=None, options=None):
    """O(k) = Sat(A[k]), represented by A[k] itself

    :param ring.WeightedRing ring:
    :param int k:
    :rtype: quotient.SheafRep
    """
    module = Presentation.free(ring, [-k])
    return SheafRep(module, window or default_window(module, options))


def sheaf_tensor(first, second, options=None):
    """Sat(M (x) N) on a window joining those of the factors

    :param quotient.SheafRep first:
    :param quotient.SheafRep second:
    :rtype: quotient.SheafRep
    """
    product = tensor_presentation(first.module, second.module)
    window = default_window(product, options).join(first.window).join(second.window)
    return sheaf_of(product, window, options)


def sheaf_sym(sheaf, n, options=None):
    """Sym^n of a sheaf as Sat(S^n(M))

    :param quotient.SheafRep sheaf:
    :param int n:
    :rtype: quotient.SheafRep
    """
    power = sym_presentation(sheaf.module, n)
    return sheaf_of(power, default_window(power, options).join(sheaf.window), options)


def saturation_tensor_map(first, second, options=None):
    """The canonical map M (x) N -> Sat(M) (x) Sat(N) with the two saturations it goes through

    :param gmodule.Presentation first:
    :param gmodule.Presentation second:
    :rtype: (gmodule.GradedMap, quotient.SheafRep, quotient.SheafRep)
    """
    first_rep = saturate(first, options=options)
    second_rep = saturate(second, options=options)
    return tensor_map(first_rep.unit, second_rep.unit), first_rep, second_rep


class WggCertificate:
    """Outcome of a weighted global generation check"""

    def __init__(self, verdict, generators_used, failure_degree=None, saturated=True):
        """
        :param bool verdict:
        :param list[(int, dict)] generators_used:
            pairs (twist j, section of degree -j as a vector of the module cover)
        :param int failure_degree:
            degree with a nonzero cokernel component, set only when the verdict is false
        :param bool saturated:
            whether the sections were taken from the saturation or from the module itself
        """
        self.verdict = bool(verdict)
        self.generators_used = generators_used
        self.failure_degree = failure_degree
        self.saturated = saturated

    def multiplicities(self, lcm_weights):
        """s_j for j = 0..l-1"""
        counts = [0] * lcm_weights
        for j, _ in self.generators_used:
            counts[j] += 1
        return counts

    def __bool__(self):
        return self.verdict

    def __repr__(self):
        return "WggCertificate(verdict=%s, generators=%d, failure_degree=%s)" % (
            self.verdict, len(self.generators_used), self.failure_degree)


def sections_map(module):
    """The map from the sum of O(j)^{s_j}, j = 0..l-1, sending each copy to a basis element of M_{-j}

    :param gmodule.Presentation module:
    :return: the map and the list of (j, section) it uses
    :rtype: (gmodule.GradedMap, list[(int, dict)])
    """
    ring = module.ring
    sections = []
    if module.rank:
        gb = module.gb()
        for j in range(ring.lcm_weights):
            sections.extend((j, {term: ring.field.one}) for term in gb.standard_terms(-j))
    source = direct_sum_of([Presentation.free(ring, [-j]) for j, _ in sections], ring)
    return GradedMap.from_vectors(source, module, [section for _, section in sections], check=False), sections


def wgg_check(sheaf, options=None):
    """Weighted global generation: whether all of Sat(M)_{-j}, j = 0..l-1, generate the sheaf

    :param quotient.SheafRep sheaf:
    :param options.KernelOptions options:
    :rtype: WggCertificate
    """
    options = options or KernelOptions()
    ring = sheaf.ring
    lo = -(ring.lcm_weights - 1)
    bound = torsion_bound(sheaf.module)
    if not sheaf.window.covers(min(lo, bound), max(0, bound)):
        raise WindowTooSmall("window %r does not cover the section degrees [%d, 0] and the torsion bound %d"
                             % (sheaf.window, lo, bound))
    graded_map, sections = sections_map(sheaf.module)
    check = is_epi_sheaf(graded_map)
    options.logger.log([Log("wgg", "wgg check on %r: %s with %d sections" % (sheaf.module, check.verdict,
                                                                              len(sections)), depth=1)])
    return WggCertificate(check.verdict, sections, check.failure_degree)


def wgg_check_presentation(module, options=None):
    """Weighted global generation of the sheaf of a possibly unsaturated module. The sections of the module
    itself are tried first, since an epimorphism onto M is one onto its sheaf; saturation follows only if they
    do not suffice.

    :param gmodule.Presentation module:
    :param options.KernelOptions options:
    :rtype: WggCertificate
    """
    options = options or KernelOptions()
    graded_map, sections = sections_map(module)
    check = is_epi_sheaf(graded_map)
    if check:
        return WggCertificate(True, sections, saturated=False)
    if module.is_free():
        return WggCertificate(False, sections, check.failure_degree, saturated=False)
    sheaf = saturate(module, options=options)
    return wgg_check(sheaf, options)


def twist_epi(ring, k):
    """O(r)^{n+1} -> O(k) with e_j -> x_j^{a l / d_j}, where k = a l + r and 0 <= r < l

    :param ring.WeightedRing ring:
    :param int k:
        non-negative twist
    :rtype: gmodule.GradedMap
    """
    if k < 0:
        raise DegreeTooSmall("twist_epi needs k >= 0, got %d" % k)
    a, r = divmod(k, ring.lcm_weights)
    source = direct_sum_of([Presentation.free(ring, [-r]) for _ in range(ring.nvars)], ring)
    target = Presentation.free(ring, [-k])
    images = [{(ring.variable_monomial(j, a * ring.lcm_weights // w), 0): ring.field.one}
              for j, w in enumerate(ring.weights)]
    return GradedMap.from_vectors(source, target, images)


def lemma_epi(sheaf, n, generators=None):
    """The sum over i and j of O(r_i) -> F(n) with e_{j,i} -> x_j^{a_i l / d_j} f_i, where
    n - rho_i = a_i l + r_i, 0 <= r_i < l

    :param quotient.SheafRep|gmodule.Presentation sheaf:
        the sheaf F or a module representing it
    :param int n:
    :param list[(dict, int)] generators:
        pairs (f_i as a vector of the cover, degree rho_i), the generators of the cover if None
    :rtype: gmodule.GradedMap
    """
    module = sheaf.module if isinstance(sheaf, SheafRep) else sheaf
    ring = module.ring
    if generators is None:
        generators = [({(ring.unit_monomial(), a): ring.field.one}, g) for a, g in enumerate(module.generator_degrees)]
    if generators and n < max(rho for _, rho in generators):
        raise DegreeTooSmall("n = %d is below the largest generator degree %d"
                             % (n, max(rho for _, rho in generators)))
    target = twist(module, n)
    summands, images = [], []
    for j, w in enumerate(ring.weights):
        for vector, rho in generators:
            a, r = divmod(n - rho, ring.lcm_weights)
            mon = ring.variable_monomial(j, a * ring.lcm_weights // w)
            summands.append(Presentation.free(ring, [-r]))
            images.append({(tuple(e + f for e, f in zip(m, mon)), p): c for (m, p), c in vector.items()})
    source = direct_sum_of(summands, ring)
    return GradedMap.from_vectors(source, target, images)
