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

"""The quotient of graded modules by torsion modules, realized on finitely presented representatives:
torsion, saturation and the sheaf-level predicates.
"""

from .exceptions import MalformedInputError, StabilizationBudgetExceeded
from .gmodule import (FreeModule, GradedMap, Presentation, cokernel, compose, hilbert_function, identity_map,
                      minimize)
from .groebner import (colon_closure, kernel, kernel_generators, minimal_generators, shift_positions,
                       submodule_presentation, unit_vector, vector_to_column)
from .logger import Log
from .options import KernelOptions


class DegreeWindow:
    """Closed range of degrees [lo, hi]"""

    def __init__(self, lo, hi):
        if lo > hi:
            raise MalformedInputError("window lower end %d is above its upper end %d" % (lo, hi))
        self.lo = lo
        self.hi = hi

    def degrees(self):
        return range(self.lo, self.hi + 1)

    def covers(self, lo, hi):
        return self.lo <= lo and hi <= self.hi

    def join(self, other):
        return DegreeWindow(min(self.lo, other.lo), max(self.hi, other.hi))

    def __eq__(self, other):
        return isinstance(other, DegreeWindow) and (self.lo, self.hi) == (other.lo, other.hi)

    def __hash__(self):
        return hash((self.lo, self.hi))

    def __repr__(self):
        return "[%d, %d]" % (self.lo, self.hi)


def default_window(module, options=None):
    """[-(l + max|g| + 2 + margin), reg + l + 2 + margin] where g ranges over generator degrees and reg is the
    largest degree of a generator or relation, or 0 if that is larger

    :param gmodule.Presentation module:
    :param options.KernelOptions options:
    :rtype: DegreeWindow
    """
    options = options or KernelOptions()
    ring = module.ring
    order = module.cover.order()
    degrees = list(module.generator_degrees) + [order.vector_degree(v) for v in module.relation_vectors() if v]
    spread = max((abs(g) for g in module.generator_degrees), default=0)
    reg = max([0] + degrees)
    margin = options.window_margin
    return DegreeWindow(-(ring.lcm_weights + spread + 2 + margin), reg + ring.lcm_weights + 2 + margin)


class SheafRep:
    """A saturated module with its dimensions certified on a window. It represents the sheaf of every module
    whose saturation it is, 'unit' being the canonical map from that module.
    """

    def __init__(self, module, window, saturated_dims=None, torsion_free=True, unit=None, stages=0):
        """
        :param gmodule.Presentation module:
            the saturated module
        :param DegreeWindow window:
        :param dict[int, int] saturated_dims:
            degree -> dimension of the saturation on the window, computed from 'module' if None
        :param bool torsion_free:
        :param gmodule.GradedMap unit:
            canonical map from the module that was saturated, the identity if None
        :param int stages:
            number of Hom(m, -) stages needed to reach the saturation
        """
        self.module = module
        self.window = window
        if saturated_dims is None:
            saturated_dims = {d: hilbert_function(module, d) for d in window.degrees()}
        self.saturated_dims = dict(saturated_dims)
        self.torsion_free = torsion_free
        self.unit = unit if unit is not None else identity_map(module)
        self.stages = stages

    @property
    def ring(self):
        return self.module.ring

    def dimension(self, d):
        """dim Sat(M)_d, read from the cache on the window"""
        if d in self.saturated_dims:
            return self.saturated_dims[d]
        return hilbert_function(self.module, d)

    def dims(self, lo=None, hi=None):
        lo = self.window.lo if lo is None else lo
        hi = self.window.hi if hi is None else hi
        return [self.dimension(d) for d in range(lo, hi + 1)]

    def is_zero(self):
        return is_torsion(self.module)

    def __repr__(self):
        return "SheafRep(%r, window=%r)" % (self.module, self.window)


class SheafCheck:
    """Verdict of a sheaf-level predicate, truthy iff the predicate holds"""

    def __init__(self, verdict, failure_degree=None, witness=None):
        """
        :param bool verdict:
        :param int failure_degree:
            a degree where the witness module is nonzero, beyond its relation degrees
        :param gmodule.Presentation witness:
            the module whose torsion decided the verdict (cokernel or kernel)
        """
        self.verdict = bool(verdict)
        self.failure_degree = failure_degree
        self.witness = witness

    def __bool__(self):
        return self.verdict

    def __repr__(self):
        return "SheafCheck(verdict=%s, failure_degree=%s)" % (self.verdict, self.failure_degree)


def is_torsion(module):
    """Whether M is finite dimensional, i.e. the relation leading terms leave finitely many standard terms

    :param gmodule.Presentation module:
    :rtype: bool
    """
    return module.gb().is_finite()


def torsion_bound(module):
    """A degree beyond which a non torsion module has nonzero components arbitrarily far out"""
    order = module.cover.order()
    degrees = list(module.generator_degrees) + [order.vector_degree(v) for v in module.relation_vectors() if v]
    return max(degrees, default=0)


def failure_degree(module):
    """The first degree past torsion_bound() where a non torsion module is nonzero, None for torsion modules"""
    gb = module.gb()
    if gb.is_finite():
        return None
    d = torsion_bound(module)
    while not gb.standard_terms(d):
        d += 1
    return d


class TorsionDecomposition:
    """The torsion submodule of M, its inclusion and the torsion-free quotient M/tau(M)"""

    def __init__(self, module, submodule, inclusion, quotient, projection, colons):
        self.module = module
        self.submodule = submodule
        self.inclusion = inclusion
        self.quotient = quotient
        self.projection = projection
        self.colons = colons


def torsion_submodule(module, logger=None):
    """tau(M) = (N : m^infinity) / N for M = F/N

    :param gmodule.Presentation module:
    :rtype: TorsionDecomposition
    """
    ring = module.ring
    closure, colons = colon_closure(ring, module.generator_degrees, module.relation_vectors(), logger=logger)
    kept = minimal_generators(ring, module.generator_degrees, closure, module.relation_vectors(), logger=logger)
    submodule, inclusion = submodule_presentation(module, [closure[i] for i in kept], logger=logger)
    quotient = Presentation(module.cover, [vector_to_column(v, ring, module.rank) for v in closure])
    projection = GradedMap.from_vectors(module, quotient, [unit_vector(ring, a) for a in range(module.rank)],
                                        check=False)
    return TorsionDecomposition(module, submodule, inclusion, quotient, projection, colons)


def hom_from_irrelevant(module, logger=None):
    """Hom(m, H) for a torsion-free H, presented on the images of the generators of H followed by the extra
    generators needed, so that the canonical map H -> Hom(m, H) sends e_a to the a-th generator.

    :param gmodule.Presentation module:
    :return: the presentation and the number of extra generators
    :rtype: (gmodule.Presentation, int)
    """
    ring = module.ring
    rank, nvars = module.rank, ring.nvars
    pairs = [(i, j) for i in range(nvars) for j in range(i + 1, nvars)]
    pair_index = {pair: k for k, pair in enumerate(pairs)}
    source_degrees = tuple(g - w for w in ring.weights for g in module.generator_degrees)
    target_degrees = tuple(g - ring.weights[i] - ring.weights[j] for i, j in pairs for g in module.generator_degrees)
    relations = module.relation_vectors()
    source_relations = [shift_positions(v, i * rank) for i in range(nvars) for v in relations if v]
    target_relations = [shift_positions(v, k * rank) for k in range(len(pairs)) for v in relations if v]
    images = []
    for i in range(nvars):
        for a in range(rank):
            image = {}
            for j in range(nvars):
                if j > i:
                    image[(ring.variable_monomial(j), pair_index[(i, j)] * rank + a)] = ring.field.one
                elif j < i:
                    image[(ring.variable_monomial(j), pair_index[(j, i)] * rank + a)] = -ring.field.one
            images.append(image)
    generators = kernel_generators(ring, source_degrees, target_degrees, images, target_relations, logger=logger)
    units = [{(ring.variable_monomial(i), i * rank + a): ring.field.one for i in range(nvars)} for a in range(rank)]
    kept = minimal_generators(ring, source_degrees, generators, source_relations + units, logger=logger)
    ambient = Presentation(FreeModule(ring, source_degrees),
                           [vector_to_column(v, ring, len(source_degrees)) for v in source_relations])
    hom, _ = submodule_presentation(ambient, units + [generators[i] for i in kept], logger=logger)
    return hom, len(kept)


def saturate(module, window=None, options=None):
    """Sat(M): the torsion-free quotient M/tau(M) extended by Hom(m, -) until the canonical map is onto

    :param gmodule.Presentation module:
    :param DegreeWindow window:
        certification window, default_window(module) if None
    :param options.KernelOptions options:
    :rtype: SheafRep
    """
    options = options or KernelOptions()
    logger = options.logger
    window = window or default_window(module, options)
    log = Log("saturate", "saturation of %r" % module, depth=1)
    logger.start_log_timer([log])
    ring = module.ring
    closure, _ = colon_closure(ring, module.generator_degrees, module.relation_vectors(), logger=logger)
    current = Presentation(module.cover, [vector_to_column(v, ring, module.rank) for v in closure])
    stages = 0
    if not current.is_free():
        while True:
            extended, extra = hom_from_irrelevant(current, logger=logger)
            if not extra:
                break
            stages += 1
            logger.log([Log("saturate-stage", "stage %d adds %d generators" % (stages, extra), depth=2)])
            if stages > options.stabilization_cap:
                raise StabilizationBudgetExceeded("saturation did not stabilize within %d stages"
                                                  % options.stabilization_cap)
            current = extended
    unit = GradedMap.from_vectors(module, current, [unit_vector(ring, a) for a in range(module.rank)],
                                  check=False)
    saturated, pruning = minimize(current)
    logger.stop_log_timer([log])
    return SheafRep(saturated, window, torsion_free=True, unit=compose(pruning, unit), stages=stages)


def sheaf_of(module, window=None, options=None):
    """Saturates unless the module is free, whose saturation is itself over a ring with at least two variables"""
    if module.is_free():
        return SheafRep(module, window or default_window(module, options))
    return saturate(module, window, options)


def is_epi_sheaf(graded_map):
    """Whether the cokernel of the map is torsion

    :param gmodule.GradedMap graded_map:
    :rtype: SheafCheck
    """
    quotient = cokernel(graded_map)
    degree = failure_degree(quotient)
    return SheafCheck(degree is None, degree, quotient)


def is_mono_sheaf(graded_map, logger=None):
    """Whether the kernel of the map is torsion

    :param gmodule.GradedMap graded_map:
    :rtype: SheafCheck
    """
    submodule, _ = kernel(graded_map, logger=logger)
    degree = failure_degree(submodule)
    return SheafCheck(degree is None, degree, submodule)


def is_iso_sheaf(graded_map, logger=None):
    """Whether both the kernel and the cokernel of the map are torsion

    :param gmodule.GradedMap graded_map:
    :rtype: SheafCheck
    """
    epi = is_epi_sheaf(graded_map)
    if not epi:
        return epi
    return is_mono_sheaf(graded_map, logger=logger)
