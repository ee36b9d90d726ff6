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

"""Groebner bases of graded submodules of free modules, syzygies, colons by the irrelevant ideal and free
resolutions.

Vectors of a free module are dicts {(monomial, position): scalar} with nonzero scalars only. All inputs are
homogeneous: the degree of monomial*e_position is the weighted degree of the monomial plus the degree of the
generator e_position.
"""

import heapq
import itertools

from .exceptions import ResolutionTooLong
from .logger import Log
from .ring import (Polynomial, monomial_div, monomial_divides, monomial_lcm, monomial_mul, monomials_coprime,
                   revlex_key)


def column_to_vector(column):
    """Returns the vector of a column of polynomials

    :param list[ring.Polynomial] column:
    :rtype: dict
    """
    vector = {}
    for pos, entry in enumerate(column):
        for mon, c in entry.terms.items():
            vector[(mon, pos)] = c
    return vector


def vector_to_column(vector, ring, rank):
    """Returns the column of polynomials of a vector

    :param dict vector:
    :param ring.WeightedRing ring:
    :param int rank:
        number of positions
    :rtype: tuple[ring.Polynomial]
    """
    entries = [{} for _ in range(rank)]
    for (mon, pos), c in vector.items():
        entries[pos][mon] = c
    return tuple(Polynomial(ring, terms) for terms in entries)


def unit_vector(ring, pos, mon=None):
    return {(mon or ring.unit_monomial(), pos): ring.field.one}


def scaled_vector(vector, c, mon=None, shift=0):
    """Returns c * mon * vector with positions moved by 'shift'"""
    if mon is None:
        return {(m, p + shift): c * a for (m, p), a in vector.items()}
    return {(monomial_mul(m, mon), p + shift): c * a for (m, p), a in vector.items()}


def add_vectors(u, v, c=None):
    """Returns u + c*v"""
    result = dict(u)
    for term, a in v.items():
        if c is not None:
            a = c * a
        value = result[term] + a if term in result else a
        if value:
            result[term] = value
        else:
            result.pop(term, None)
    return result


def shift_positions(vector, shift):
    return {(m, p + shift): c for (m, p), c in vector.items()}


class ModuleOrder:
    """Term-over-position order on a graded free module with a weighted degree reverse lexicographic base.

    Positions may be split into blocks: every term in a higher block is larger than every term in a lower one,
    which turns the order into an elimination order for the lower block.
    """

    def __init__(self, ring, degrees, blocks=None):
        """
        :param ring.WeightedRing ring:
        :param tuple[int] degrees:
            generator degrees of the free module
        :param tuple[int] blocks:
            block of every position, all zero if None
        """
        self.ring = ring
        self.degrees = tuple(degrees)
        self.blocks = tuple(blocks) if blocks is not None else (0,) * len(self.degrees)
        self._keys = {}
        self._heap_keys = {}

    def key(self, term):
        """Sort key of a term, larger means bigger in the order"""
        k = self._keys.get(term)
        if k is None:
            mon, pos = term
            k = (self.blocks[pos], self.term_degree(term), revlex_key(mon), -pos)
            self._keys[term] = k
        return k

    def heap_key(self, term):
        """Sort key of a term, smaller means bigger in the order"""
        k = self._heap_keys.get(term)
        if k is None:
            block, degree, rev, pos = self.key(term)
            k = (-block, -degree, tuple(-e for e in rev), -pos)
            self._heap_keys[term] = k
        return k

    def term_degree(self, term):
        mon, pos = term
        return self.ring.monomial_degree(mon) + self.degrees[pos]

    def vector_degree(self, vector):
        """Degree of a nonzero homogeneous vector"""
        return self.term_degree(next(iter(vector)))

    def lead(self, vector):
        return max(vector, key=self.key)

    def sorted_terms(self, terms, reverse=True):
        return sorted(terms, key=self.key, reverse=reverse)


class GroebnerBasis:
    """Reduced Groebner basis of a graded submodule of a free module"""

    def __init__(self, order):
        """
        :param ModuleOrder order:
            order of the ambient free module
        """
        self.order = order
        self.elements = []
        self.leads = []
        self._positions = []
        self._by_position = {}

    @classmethod
    def compute(cls, generators, order, logger=None):
        """Buchberger's algorithm for homogeneous generators, processing S-pairs and generators by increasing degree

        :param list[dict] generators:
            homogeneous vectors
        :param ModuleOrder order:
        :param logger.Logger logger:
            optional logger for size and timing information
        :rtype: GroebnerBasis
        """
        log = Log("groebner", "Groebner basis of %d generators" % len(generators), depth=3)
        if logger is not None:
            logger.start_log_timer([log])
        gb = cls(order)
        counter = itertools.count()
        queue = []
        for vector in generators:
            if vector:
                heapq.heappush(queue, (order.vector_degree(vector), 1, next(counter), vector))
        pending = set()
        while queue:
            _, kind, _, payload = heapq.heappop(queue)
            if kind == 0:
                pending.discard(payload)
                if gb._skip_pair(payload, pending):
                    continue
                vector = gb._s_vector(*payload)
            else:
                vector = payload
            remainder = gb.reduce(vector)
            if not remainder:
                continue
            index = gb._append(remainder)
            mon, pos = gb.leads[index]
            for other in gb._by_position[pos]:
                if other != index:
                    lcm = monomial_lcm(gb.leads[other][0], mon)
                    heapq.heappush(queue, (order.term_degree((lcm, pos)), 0, next(counter), (other, index)))
                    pending.add((other, index))
        gb._interreduce()
        if logger is not None:
            logger.stop_log_timer([log])
            logger.log([Log("groebner-size", "Groebner basis has %d elements" % len(gb), depth=3)])
        return gb

    def _append(self, vector):
        lead = self.order.lead(vector)
        inverse = self.order.ring.field.one / vector[lead]
        vector = {term: inverse * c for term, c in vector.items()}
        index = len(self.elements)
        self.elements.append(vector)
        self.leads.append(lead)
        self._positions.append(frozenset(pos for _, pos in vector))
        self._by_position.setdefault(lead[1], []).append(index)
        return index

    def _s_vector(self, i, j):
        (mi, pos), (mj, _) = self.leads[i], self.leads[j]
        lcm = monomial_lcm(mi, mj)
        left = scaled_vector(self.elements[i], self.order.ring.field.one, monomial_div(lcm, mi))
        right = scaled_vector(self.elements[j], self.order.ring.field.one, monomial_div(lcm, mj))
        return add_vectors(left, right, -self.order.ring.field.one)

    def _skip_pair(self, pair, pending):
        i, j = pair
        if len(self.elements[i]) == 1 and len(self.elements[j]) == 1:
            return True
        (mi, pos), (mj, _) = self.leads[i], self.leads[j]
        if len(self._positions[i]) == 1 and len(self._positions[j]) == 1 and monomials_coprime(mi, mj):
            return True
        lcm = monomial_lcm(mi, mj)
        for k in self._by_position[pos]:
            if k in pair or not monomial_divides(self.leads[k][0], lcm):
                continue
            if (min(i, k), max(i, k)) not in pending and (min(j, k), max(j, k)) not in pending:
                return True
        return False

    def _interreduce(self):
        for index, vector in enumerate(self.elements):
            lead = self.leads[index]
            tail = dict(vector)
            del tail[lead]
            reduced = self.reduce(tail)
            reduced[lead] = vector[lead]
            self.elements[index] = reduced
        ranked = sorted(range(len(self.elements)), key=lambda i: self.order.key(self.leads[i]))
        elements = [self.elements[i] for i in ranked]
        self.elements, self.leads, self._positions, self._by_position = [], [], [], {}
        for vector in elements:
            self._append(vector)

    def _reducer(self, term):
        mon, pos = term
        for index in self._by_position.get(pos, ()):
            if monomial_divides(self.leads[index][0], mon):
                return index
        return None

    def reduce(self, vector):
        """Returns the normal form of 'vector': no term of it is divisible by a leading term of the basis

        :param dict vector:
        :rtype: dict
        """
        order = self.order
        vector = dict(vector)
        queue = [(order.heap_key(term), term) for term in vector]
        heapq.heapify(queue)
        remainder = {}
        while queue:
            _, term = heapq.heappop(queue)
            c = vector.pop(term, None)
            if c is None:
                continue
            index = self._reducer(term)
            if index is None:
                remainder[term] = c
                continue
            lead = self.leads[index]
            shift = monomial_div(term[0], lead[0])
            for other, a in self.elements[index].items():
                if other == lead:
                    continue
                target = (monomial_mul(other[0], shift), other[1])
                old = vector.get(target)
                value = -c * a if old is None else old - c * a
                if value:
                    vector[target] = value
                    if old is None:
                        heapq.heappush(queue, (order.heap_key(target), target))
                else:
                    vector.pop(target, None)
        return remainder

    def contains(self, vector):
        return not self.reduce(vector)

    def is_groebner(self):
        """Buchberger's criterion: every S-vector of two elements with leads on the same position reduces to zero"""
        for indices in self._by_position.values():
            for i, j in itertools.combinations(indices, 2):
                if self.reduce(self._s_vector(i, j)):
                    return False
        return True

    def lead_monomials(self, pos):
        return [self.leads[i][0] for i in self._by_position.get(pos, ())]

    def standard_terms(self, d):
        """Terms of degree d that are not divisible by any leading term, largest first"""
        ring, degrees = self.order.ring, self.order.degrees
        terms = []
        for pos, g in enumerate(degrees):
            leads = self.lead_monomials(pos)
            for mon in ring.monomial_basis(d - g):
                if not any(monomial_divides(lead, mon) for lead in leads):
                    terms.append((mon, pos))
        return self.order.sorted_terms(terms)

    def is_finite(self):
        """Returns whether the quotient by the basis has finitely many standard terms"""
        nvars = self.order.ring.nvars
        for pos in range(len(self.order.degrees)):
            pure = set()
            for mon in self.lead_monomials(pos):
                support = [i for i, e in enumerate(mon) if e]
                if len(support) <= 1:
                    pure.update(support or range(nvars))
            if len(pure) < nvars:
                return False
        return True

    def top_degree(self):
        """Largest degree of a standard term, assuming is_finite()"""
        ring = self.order.ring
        top = None
        for pos, g in enumerate(self.order.degrees):
            box = [0] * ring.nvars
            for mon in self.lead_monomials(pos):
                support = [i for i, e in enumerate(mon) if e]
                if len(support) == 1:
                    i = support[0]
                    box[i] = mon[i] if not box[i] else min(box[i], mon[i])
                elif not support:
                    box = None
                    break
            if box is None:
                continue
            degree = g + sum((e - 1) * w for e, w in zip(box, ring.weights))
            top = degree if top is None else max(top, degree)
        return top

    def standard_term_count(self):
        """Number of standard terms, assuming is_finite()"""
        top = self.top_degree()
        if top is None:
            return 0
        return sum(len(self.standard_terms(d)) for d in range(min(self.order.degrees), top + 1))

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)


def module_gb(ring, degrees, generators, logger=None):
    """Reduced Groebner basis, in the standard order, of the submodule generated by 'generators'

    :param ring.WeightedRing ring:
    :param tuple[int] degrees:
        generator degrees of the ambient free module
    :param list[dict] generators:
        homogeneous vectors
    :rtype: GroebnerBasis
    """
    return GroebnerBasis.compute(list(generators), ModuleOrder(ring, degrees), logger=logger)


def normal_form(vector, gb):
    """Remainder of 'vector' modulo 'gb', zero iff the vector lies in the submodule"""
    return gb.reduce(vector)


def eliminate(ring, top_degrees, bottom_degrees, columns, logger=None):
    """Groebner basis of the module generated by the stacked columns (top; bottom) in an order that eliminates
    the top block. The elements whose leading term lies in the bottom block generate the intersection of the
    module with the bottom free module.

    :param ring.WeightedRing ring:
    :param tuple[int] top_degrees:
    :param tuple[int] bottom_degrees:
    :param list[tuple[dict, dict]] columns:
        pairs (top vector, bottom vector or None), each pair homogeneous of a common degree
    :return: the Groebner basis and the bottom parts, as vectors of the bottom module
    :rtype: (GroebnerBasis, list[dict])
    """
    top_rank = len(top_degrees)
    order = ModuleOrder(ring, tuple(top_degrees) + tuple(bottom_degrees),
                        blocks=(1,) * top_rank + (0,) * len(bottom_degrees))
    generators = []
    for top, bottom in columns:
        vector = dict(top)
        if bottom:
            vector.update(shift_positions(bottom, top_rank))
        if vector:
            generators.append(vector)
    gb = GroebnerBasis.compute(generators, order, logger=logger)
    bottoms = [shift_positions(g, -top_rank) for g, lead in zip(gb.elements, gb.leads) if lead[1] >= top_rank]
    return gb, bottoms


def syzygies(ring, degrees, columns, column_degrees, logger=None):
    """Generators of the module of coefficient vectors c with sum c_j * columns[j] = 0.

    :param ring.WeightedRing ring:
    :param tuple[int] degrees:
        generator degrees of the free module containing the columns
    :param list[dict] columns:
    :param tuple[int] column_degrees:
        degree of every column, needed for zero columns
    :return: a Groebner basis of the syzygy module, as vectors of the free module with generator degrees
        'column_degrees'
    :rtype: list[dict]
    """
    stacked = [(column, unit_vector(ring, j)) for j, column in enumerate(columns)]
    return eliminate(ring, degrees, column_degrees, stacked, logger=logger)[1]


def kernel_generators(ring, source_degrees, target_degrees, images, target_relations=(), logger=None):
    """Generators of {u : sum u_a * images[a] lies in the span of target_relations}

    :param ring.WeightedRing ring:
    :param tuple[int] source_degrees:
    :param tuple[int] target_degrees:
    :param list[dict] images:
        image of every source generator
    :param list[dict] target_relations:
    :rtype: list[dict]
    """
    stacked = [(image, unit_vector(ring, a)) for a, image in enumerate(images)]
    stacked.extend((relation, None) for relation in target_relations)
    return eliminate(ring, target_degrees, source_degrees, stacked, logger=logger)[1]


def subquotient_relations(ring, degrees, generators, generator_degrees, relations=(), logger=None):
    """Relations of the module (span(generators) + span(relations)) / span(relations) on its given generators

    :return: vectors of the free module with generator degrees 'generator_degrees'
    :rtype: list[dict]
    """
    return kernel_generators(ring, generator_degrees, degrees, generators, relations, logger=logger)


def lift(ring, degrees, vector, columns, column_degrees, relations=()):
    """Coefficients c with vector = sum c_j * columns[j] modulo span(relations), None if there are none

    :rtype: dict|None
    """
    if not vector:
        return {}
    stacked = [(column, unit_vector(ring, j)) for j, column in enumerate(columns)]
    stacked.extend((relation, None) for relation in relations)
    gb, _ = eliminate(ring, degrees, column_degrees, stacked)
    remainder = gb.reduce(vector)
    top_rank = len(degrees)
    if any(pos < top_rank for _, pos in remainder):
        return None
    return {(mon, pos - top_rank): -c for (mon, pos), c in remainder.items()}


def minimal_generators(ring, degrees, vectors, relations=(), logger=None):
    """Drops the vectors lying in the span of the previously kept ones (and of 'relations'), by increasing degree.
    Zero vectors are always dropped.

    :return: indices of the kept vectors
    :rtype: list[int]
    """
    order = ModuleOrder(ring, degrees)
    ranked = sorted((i for i, v in enumerate(vectors) if v), key=lambda i: order.vector_degree(vectors[i]))
    kept = []
    gb = GroebnerBasis.compute(list(relations), order, logger=logger)
    for i in ranked:
        if gb.reduce(vectors[i]):
            kept.append(i)
            gb = GroebnerBasis.compute(list(relations) + [vectors[k] for k in kept], order, logger=logger)
    return sorted(kept)


def same_submodule(ring, degrees, first, second):
    """Returns whether two lists of vectors generate the same submodule"""
    gb_first = module_gb(ring, degrees, first)
    gb_second = module_gb(ring, degrees, second)
    return all(gb_second.contains(v) for v in first) and all(gb_first.contains(v) for v in second)


def colon(ring, degrees, submodule, logger=None):
    """Generators of (N : m) = {v : x_i * v in N for every variable x_i}

    :param list[dict] submodule:
        generators of N
    :return: a Groebner basis of (N : m)
    :rtype: list[dict]
    """
    rank = len(degrees)
    blocks_degrees = tuple(g - w for w in ring.weights for g in degrees)
    images = []
    for a in range(rank):
        image = {}
        for i in range(ring.nvars):
            image[(ring.variable_monomial(i), i * rank + a)] = ring.field.one
        images.append(image)
    relations = [shift_positions(v, i * rank) for i in range(ring.nvars) for v in submodule]
    return kernel_generators(ring, tuple(degrees), blocks_degrees, images, relations, logger=logger)


def colon_power(ring, degrees, submodule, k, logger=None):
    """Generators of (N : m^k), by k successive single colons"""
    if k < 1:
        raise ValueError("k should be positive, got %s instead" % k)
    current = list(submodule)
    for _ in range(k):
        current = colon(ring, degrees, current, logger=logger)
    return current


def colon_closure(ring, degrees, submodule, logger=None):
    """Generators of (N : m^infinity), iterating single colons until they stop growing

    :return: a Groebner basis of the stable colon and the number of colons that changed the module
    :rtype: (list[dict], int)
    """
    current = module_gb(ring, degrees, submodule, logger=logger)
    k = 0
    while True:
        following = colon(ring, degrees, current.elements, logger=logger)
        if all(current.contains(v) for v in following):
            return current.elements, k
        current = module_gb(ring, degrees, following, logger=logger)
        k += 1


def is_torsion_quotient(ring, degrees, relations):
    """Returns whether F/span(relations) is finite dimensional, reading the leading terms of a Groebner basis"""
    if not degrees:
        return True
    return module_gb(ring, degrees, relations).is_finite()


class FreeResolution:
    """A free resolution ... -> F_2 -> F_1 -> F_0 of a finitely presented module.

    modules[i] holds the generator degrees of F_i and differentials[i] the columns of F_{i+1} -> F_i, as vectors
    of F_i.
    """

    def __init__(self, ring, modules, differentials):
        """
        :param ring.WeightedRing ring:
        :param list[tuple[int]] modules:
        :param list[list[dict]] differentials:
        """
        self.ring = ring
        self.modules = modules
        self.differentials = differentials

    @property
    def length(self):
        return len(self.differentials)

    def ranks(self):
        return [len(degrees) for degrees in self.modules]

    def free_module(self, i):
        """The free module F_i, the zero module beyond the resolution"""
        from .gmodule import FreeModule
        degrees = self.modules[i] if i < len(self.modules) else ()
        return FreeModule(self.ring, degrees)

    def differential(self, i):
        """The map F_i -> F_{i-1} as a GradedMap of free presentations, for 1 <= i <= length"""
        from .gmodule import GradedMap, present
        source = present(self.free_module(i), [])
        target = present(self.free_module(i - 1), [])
        columns = self.differentials[i - 1] if i <= self.length else []
        rank = len(target.cover.generator_degrees)
        return GradedMap(source, target, [vector_to_column(v, self.ring, rank) for v in columns])


def free_resolution(module, max_length=None, minimal=False, logger=None):
    """Free resolution of a Presentation by iterated syzygies

    :param gmodule.Presentation module:
    :param int max_length:
        number of differentials to compute at most, all of them if None
    :param bool minimal:
        minimize the presentation and prune every stage to minimal generators
    :rtype: FreeResolution
    """
    from .gmodule import minimize
    ring = module.ring
    if minimal:
        module = minimize(module)[0]
    bound = ring.nvars
    degrees = tuple(module.cover.generator_degrees)
    columns = [v for v in module.relation_vectors() if v]
    if minimal:
        columns = [columns[i] for i in minimal_generators(ring, degrees, columns, logger=logger)]
    modules = [degrees]
    differentials = []
    order = ModuleOrder(ring, degrees)
    while columns and (max_length is None or len(differentials) < max_length):
        if len(differentials) >= bound:
            raise ResolutionTooLong("syzygies persist past length %d" % bound)
        column_degrees = tuple(order.vector_degree(v) for v in columns)
        differentials.append(columns)
        modules.append(column_degrees)
        following = syzygies(ring, degrees, columns, column_degrees, logger=logger)
        degrees = column_degrees
        order = ModuleOrder(ring, degrees)
        columns = [following[i] for i in minimal_generators(ring, degrees, following, logger=logger)]
    return FreeResolution(ring, modules, differentials)


def submodule_presentation(ambient, generators, logger=None):
    """Presentation of the submodule of 'ambient' generated by the classes of nonzero vectors of its cover,
    together with its inclusion map

    :param gmodule.Presentation ambient:
    :param list[dict] generators:
    :rtype: (gmodule.Presentation, gmodule.GradedMap)
    """
    from .gmodule import FreeModule, GradedMap, Presentation
    ring = ambient.ring
    order = ambient.cover.order()
    degrees = tuple(order.vector_degree(v) for v in generators)
    relations = subquotient_relations(ring, ambient.generator_degrees, generators, degrees,
                                      ambient.relation_vectors(), logger=logger)
    module = Presentation(FreeModule(ring, degrees), [vector_to_column(v, ring, len(degrees)) for v in relations])
    return module, GradedMap.from_vectors(module, ambient, generators, check=False)


def kernel(graded_map, logger=None):
    """Presentation of the kernel of a GradedMap with its inclusion into the source

    :param gmodule.GradedMap graded_map:
    :rtype: (gmodule.Presentation, gmodule.GradedMap)
    """
    source, target = graded_map.source, graded_map.target
    ring = source.ring
    generators = kernel_generators(ring, source.generator_degrees, target.generator_degrees,
                                   graded_map.image_vectors(), target.relation_vectors(), logger=logger)
    kept = minimal_generators(ring, source.generator_degrees, generators, source.relation_vectors(), logger=logger)
    return submodule_presentation(source, [generators[i] for i in kept], logger=logger)
