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

"""Finitely presented graded modules over a WeightedRing, graded morphisms between them and the
presentation-level constructions: twist, direct sum, tensor product and symmetric powers.

A[k] is the free module with one generator in degree -k, so that A[k]_m = A_{k+m}.
"""

import itertools

import numpy as np
from sympy.polys.matrices import DomainMatrix

from .exceptions import IllDefinedMapError, InhomogeneousRelation, MalformedInputError
from .groebner import (ModuleOrder, add_vectors, column_to_vector, module_gb, scaled_vector, shift_positions,
                       unit_vector, vector_to_column)
from .ring import monomial_mul


class FreeModule:
    """The graded free module of a WeightedRing with generators e_i in degrees g_i"""

    def __init__(self, ring, generator_degrees):
        """
        :param ring.WeightedRing ring:
        :param list[int] generator_degrees:
            degree g_i of every generator e_i
        """
        self.ring = ring
        self.generator_degrees = tuple(int(g) for g in generator_degrees)

    @property
    def rank(self):
        return len(self.generator_degrees)

    def shifted(self, k):
        """The free module twisted by k: every generator degree decreases by k"""
        return FreeModule(self.ring, [g - k for g in self.generator_degrees])

    def order(self):
        return ModuleOrder(self.ring, self.generator_degrees)

    def __eq__(self, other):
        return (isinstance(other, FreeModule) and self.ring == other.ring
                and self.generator_degrees == other.generator_degrees)

    def __hash__(self):
        return hash((self.ring, self.generator_degrees))

    def __repr__(self):
        return "FreeModule(%s)" % (self.generator_degrees,)


class Presentation:
    """The module cover / span(relations), built through present()"""

    def __init__(self, cover, relations):
        """
        :param FreeModule cover:
        :param list[tuple[ring.Polynomial]] relations:
            relation columns, one entry per generator of the cover, already validated
        """
        self.cover = cover
        self.relations = tuple(tuple(column) for column in relations)
        self._vectors = None
        self._gb = None

    @classmethod
    def free(cls, ring, generator_degrees):
        return cls(FreeModule(ring, generator_degrees), [])

    @property
    def ring(self):
        return self.cover.ring

    @property
    def rank(self):
        return self.cover.rank

    @property
    def generator_degrees(self):
        return self.cover.generator_degrees

    def relation_vectors(self):
        """Relation columns as vectors of the cover"""
        if self._vectors is None:
            self._vectors = [column_to_vector(column) for column in self.relations]
        return self._vectors

    def gb(self):
        """Groebner basis of the relation submodule, computed on first use"""
        if self._gb is None:
            self._gb = module_gb(self.ring, self.generator_degrees, self.relation_vectors())
        return self._gb

    def is_free(self):
        return all(not v for v in self.relation_vectors())

    def hilbert_function(self, d):
        return hilbert_function(self, d)

    def __repr__(self):
        return "Presentation(generators=%s, relations=%d)" % (self.generator_degrees, len(self.relations))


def present(cover, relations):
    """Validates relation columns and returns the Presentation cover / span(relations)

    :param FreeModule cover:
    :param list[list[ring.Polynomial]] relations:
        relation columns, one entry per generator of the cover
    :rtype: Presentation
    """
    ring = cover.ring
    columns = []
    for j, column in enumerate(relations):
        column = tuple(column)
        if len(column) != cover.rank:
            raise MalformedInputError('relation column %d has %d entries, the cover has %d generators'
                                      % (j, len(column), cover.rank))
        degree = None
        for entry, g in zip(column, cover.generator_degrees):
            ring.check_same(entry.ring)
            if entry.is_zero():
                continue
            entry_degree = entry.homogeneous_degree
            if entry_degree is None or (degree is not None and entry_degree + g != degree):
                raise InhomogeneousRelation(j, str(entry))
            degree = entry_degree + g
        columns.append(column)
    return Presentation(cover, columns)


def zero_module(ring):
    return Presentation.free(ring, [])


class DegreeComponent:
    """The K-vector space M_d computed by exact row reduction of the relation multiples landing in degree d"""

    def __init__(self, module, d):
        """
        :param Presentation module:
        :param int d:
        """
        self.module = module
        self.degree = d
        ring = module.ring
        order = module.cover.order()
        terms = []
        for pos, g in enumerate(module.generator_degrees):
            terms.extend((mon, pos) for mon in ring.monomial_basis(d - g))
        self.terms = order.sorted_terms(terms)
        self.index = {term: i for i, term in enumerate(self.terms)}
        rows = []
        for vector in module.relation_vectors():
            if not vector:
                continue
            for mon in ring.monomial_basis(d - order.vector_degree(vector)):
                rows.append(self._dense(scaled_vector(vector, ring.field.one, mon)))
        self.rows, self.pivots = _row_reduce(rows, len(self.terms), ring.domain)
        pivot_set = set(self.pivots)
        self.basis = tuple(term for i, term in enumerate(self.terms) if i not in pivot_set)

    @property
    def dimension(self):
        return len(self.basis)

    def _dense(self, vector):
        row = [self.module.ring.field.zero] * len(self.terms)
        for term, c in vector.items():
            row[self.index[term]] = c
        return row

    def coordinates(self, vector):
        """Coordinates, on the basis, of the class of a degree-d vector of the cover"""
        row = self._dense(vector)
        for pivot_row, pivot in zip(self.rows, self.pivots):
            c = row[pivot]
            if c:
                row = [a - c * b for a, b in zip(row, pivot_row)]
        return [row[self.index[term]] for term in self.basis]

    def contains(self, vector):
        """Returns whether a degree-d vector of the cover vanishes in M_d"""
        return not any(self.coordinates(vector))


def _row_reduce(rows, ncols, domain):
    if not rows or not ncols:
        return [], ()
    matrix, pivots = DomainMatrix(rows, (len(rows), ncols), domain).rref()
    reduced = matrix.to_list()
    return [reduced[i] for i in range(len(pivots))], tuple(pivots)


def matrix_rank(rows, ncols, domain):
    """Rank of a dense matrix of domain elements"""
    return len(_row_reduce(rows, ncols, domain)[1])


def component_basis(module, d):
    """Basis of M_d: the terms of the cover in degree d that are not pivots of the reduced relation multiples

    :param Presentation module:
    :param int d:
    :rtype: tuple[tuple[tuple[int], int]]
    """
    return DegreeComponent(module, d).basis


def hilbert_function(module, d):
    """dim_K M_d, counting standard terms of the relation Groebner basis

    :param Presentation module:
    :param int d:
    :rtype: int
    """
    if not module.rank:
        return 0
    return len(module.gb().standard_terms(d))


def hilbert_window(module, lo, hi):
    """Returns the numpy array of dim_K M_d for d = lo..hi"""
    return np.array([hilbert_function(module, d) for d in range(lo, hi + 1)], dtype=np.int64)


def twist(module, k):
    """M[k]: generator degrees shifted by -k, so that M[k]_d = M_{d+k}

    :param Presentation module:
    :param int k:
    :rtype: Presentation
    """
    return Presentation(module.cover.shifted(k), module.relations)


class GradedMap:
    """Degree-0 morphism of presentations given by the images of the source generators"""

    def __init__(self, source, target, matrix, check=True):
        """
        :param Presentation source:
        :param Presentation target:
        :param list[list[ring.Polynomial]] matrix:
            one column per source generator, holding its image on the target generators
        :param bool check:
            verify homogeneity and that source relations go into the span of target relations
        """
        source.ring.check_same(target.ring)
        self.source = source
        self.target = target
        self.matrix = tuple(tuple(column) for column in matrix)
        self._vectors = None
        if check:
            self._check()

    @classmethod
    def from_vectors(cls, source, target, vectors, check=True):
        columns = [vector_to_column(v, source.ring, target.rank) for v in vectors]
        graded_map = cls(source, target, columns, check=check)
        graded_map._vectors = [dict(v) for v in vectors]
        return graded_map

    @property
    def ring(self):
        return self.source.ring

    def entry(self, i, j):
        return self.matrix[j][i]

    def image_vectors(self):
        """Images of the source generators as vectors of the target cover"""
        if self._vectors is None:
            self._vectors = [column_to_vector(column) for column in self.matrix]
        return self._vectors

    def apply(self, vector):
        """Image of a vector of the source cover, as a vector of the target cover"""
        images = self.image_vectors()
        result = {}
        for (mon, pos), c in vector.items():
            result = add_vectors(result, scaled_vector(images[pos], c, mon))
        return result

    def _check(self):
        if len(self.matrix) != self.source.rank:
            raise IllDefinedMapError('the matrix has %d columns, the source has %d generators'
                                     % (len(self.matrix), self.source.rank))
        order = self.target.cover.order()
        for j, (column, vector) in enumerate(zip(self.matrix, self.image_vectors())):
            if len(column) != self.target.rank:
                raise IllDefinedMapError('column %d has %d entries, the target has %d generators'
                                         % (j, len(column), self.target.rank))
            for entry in column:
                self.ring.check_same(entry.ring)
            if any(order.term_degree(term) != self.source.generator_degrees[j] for term in vector):
                raise IllDefinedMapError('column %d is not homogeneous of degree %d'
                                         % (j, self.source.generator_degrees[j]))
        gb = self.target.gb()
        for j, relation in enumerate(self.source.relation_vectors()):
            if not gb.contains(self.apply(relation)):
                raise IllDefinedMapError('source relation %d is not carried into the target relations' % j)

    def __repr__(self):
        return "GradedMap(%r -> %r)" % (self.source, self.target)


def identity_map(module):
    return GradedMap.from_vectors(module, module, [unit_vector(module.ring, a) for a in range(module.rank)],
                                  check=False)


def zero_map(source, target):
    return GradedMap.from_vectors(source, target, [{} for _ in range(source.rank)], check=False)


def compose(second, first):
    """second o first

    :param GradedMap second:
    :param GradedMap first:
    :rtype: GradedMap
    """
    return GradedMap.from_vectors(first.source, second.target,
                                  [second.apply(v) for v in first.image_vectors()], check=False)


def cokernel(graded_map):
    """Presentation of target / image, on the target generators"""
    target = graded_map.target
    columns = list(target.relations) + [vector_to_column(v, target.ring, target.rank)
                                        for v in graded_map.image_vectors()]
    return Presentation(target.cover, columns)


def cokernel_projection(graded_map):
    """The canonical map target -> cokernel"""
    target = graded_map.target
    return GradedMap.from_vectors(target, cokernel(graded_map),
                                  [unit_vector(target.ring, a) for a in range(target.rank)], check=False)


class DirectSum:
    """A direct sum of presentations with its canonical injections and projections"""

    def __init__(self, summands):
        """
        :param list[Presentation] summands:
        """
        ring = summands[0].ring
        degrees, relations, offsets = [], [], []
        for summand in summands:
            ring.check_same(summand.ring)
            offsets.append(len(degrees))
            degrees.extend(summand.generator_degrees)
        rank = len(degrees)
        for summand, offset in zip(summands, offsets):
            for vector in summand.relation_vectors():
                relations.append(vector_to_column(shift_positions(vector, offset), ring, rank))
        self.summands = list(summands)
        self.offsets = offsets
        self.module = Presentation(FreeModule(ring, degrees), relations)
        self.injections = [
            GradedMap.from_vectors(summand, self.module,
                                   [unit_vector(ring, offset + a) for a in range(summand.rank)], check=False)
            for summand, offset in zip(summands, offsets)]
        self.projections = []
        for index, summand in enumerate(summands):
            images = []
            for other_index, other in enumerate(summands):
                images.extend(unit_vector(ring, a) if other_index == index else {} for a in range(other.rank))
            self.projections.append(GradedMap.from_vectors(self.module, summand, images, check=False))


def direct_sum(first, second):
    """M + N with the two canonical injections and projections

    :param Presentation first:
    :param Presentation second:
    :rtype: DirectSum
    """
    return DirectSum([first, second])


def direct_sum_of(modules, ring):
    """Presentation of the direct sum of any number of modules, the zero module if there are none"""
    if not modules:
        return zero_module(ring)
    return DirectSum(modules).module


def direct_sum_map(maps, target):
    """The map from the direct sum of the sources of 'maps' into their common target"""
    source = direct_sum_of([m.source for m in maps], target.ring)
    images = [v for m in maps for v in m.image_vectors()]
    return GradedMap.from_vectors(source, target, images, check=False)


def _tensor_vectors(u, v, right_rank):
    """u (x) v for a vector u of the left cover and v of the right cover"""
    result = {}
    for (m1, a), c1 in u.items():
        for (m2, b), c2 in v.items():
            term = (monomial_mul(m1, m2), a * right_rank + b)
            value = result.get(term)
            value = c1 * c2 if value is None else value + c1 * c2
            if value:
                result[term] = value
            else:
                result.pop(term)
    return result


def tensor_presentation(first, second):
    """Standard presentation of M (x) N: generators e_a (x) f_b in degree g_a + h_b at position a*rank(N) + b,
    relations rel(M) (x) f_b and e_a (x) rel(N)

    :param Presentation first:
    :param Presentation second:
    :rtype: Presentation
    """
    ring = first.ring
    ring.check_same(second.ring)
    degrees = [g + h for g in first.generator_degrees for h in second.generator_degrees]
    rank = len(degrees)
    relations = []
    for vector in first.relation_vectors():
        for b in range(second.rank):
            relations.append(_tensor_vectors(vector, unit_vector(ring, b), second.rank))
    for a in range(first.rank):
        for vector in second.relation_vectors():
            relations.append(_tensor_vectors(unit_vector(ring, a), vector, second.rank))
    return Presentation(FreeModule(ring, degrees), [vector_to_column(v, ring, rank) for v in relations])


def tensor_map(first, second):
    """first (x) second between standard tensor presentations

    :param GradedMap first:
    :param GradedMap second:
    :rtype: GradedMap
    """
    source = tensor_presentation(first.source, second.source)
    target = tensor_presentation(first.target, second.target)
    right_rank = second.target.rank
    images = [_tensor_vectors(u, v, right_rank) for u in first.image_vectors() for v in second.image_vectors()]
    return GradedMap.from_vectors(source, target, images, check=False)


class SymmetricIndex:
    """Positions of the generators of S^n(F): the size-n multisets of generators of F, sorted"""

    def __init__(self, rank, n):
        self.rank = rank
        self.n = n
        self.multisets = list(itertools.combinations_with_replacement(range(rank), n))
        self.position = {multiset: i for i, multiset in enumerate(self.multisets)}

    def __len__(self):
        return len(self.multisets)

    def merge(self, *parts):
        return self.position[tuple(sorted(itertools.chain(*parts)))]


def _sym_product(vectors, index):
    """Product of vectors of F in S^n(F), n = len(vectors)"""
    partial = [(None, None, ())]
    for vector in vectors:
        partial = [(m if mon is None else monomial_mul(mon, m), coeff if c is None else c * coeff, multiset + (a,))
                   for mon, c, multiset in partial for (m, a), coeff in vector.items()]
    result = {}
    for mon, c, multiset in partial:
        term = (mon, index.merge(multiset))
        value = result.get(term)
        value = c if value is None else value + c
        if value:
            result[term] = value
        else:
            result.pop(term)
    return result


def sym_presentation(module, n):
    """S^n(F/N) presented as S^n(F)/(N S^{n-1}(F))

    :param Presentation module:
    :param int n:
        non-negative power
    :rtype: Presentation
    """
    if n < 0:
        raise MalformedInputError("symmetric power should be non-negative, got %d" % n)
    ring = module.ring
    index = SymmetricIndex(module.rank, n)
    degrees = [sum(module.generator_degrees[a] for a in multiset) for multiset in index.multisets]
    relations = []
    if n >= 1:
        for vector in module.relation_vectors():
            for multiset in itertools.combinations_with_replacement(range(module.rank), n - 1):
                relations.append({(mon, index.merge(multiset, (a,))): c for (mon, a), c in vector.items()})
    return Presentation(FreeModule(ring, degrees), [vector_to_column(v, ring, len(index)) for v in relations])


def sym_map(graded_map, n):
    """S^n of a map

    :param GradedMap graded_map:
    :param int n:
    :rtype: GradedMap
    """
    source = sym_presentation(graded_map.source, n)
    target = sym_presentation(graded_map.target, n)
    images = graded_map.image_vectors()
    index = SymmetricIndex(graded_map.target.rank, n)
    columns = []
    for multiset in SymmetricIndex(graded_map.source.rank, n).multisets:
        if n == 0:
            columns.append(unit_vector(graded_map.ring, 0))
        else:
            columns.append(_sym_product([images[a] for a in multiset], index))
    return GradedMap.from_vectors(source, target, columns, check=False)


def sym_multiplication(module, p, q):
    """The canonical map S^p(M) (x) S^q(M) -> S^{p+q}(M)

    :rtype: GradedMap
    """
    source = tensor_presentation(sym_presentation(module, p), sym_presentation(module, q))
    target = sym_presentation(module, p + q)
    index = SymmetricIndex(module.rank, p + q)
    images = [unit_vector(module.ring, index.merge(left, right))
              for left in SymmetricIndex(module.rank, p).multisets
              for right in SymmetricIndex(module.rank, q).multisets]
    return GradedMap.from_vectors(source, target, images, check=False)


def sym_sum_map(first, second, n):
    """The canonical map from the sum over p+q=n of S^p(M) (x) S^q(N) to S^n(M + N)

    :rtype: GradedMap
    """
    ring = first.ring
    total = direct_sum(first, second).module
    index = SymmetricIndex(total.rank, n)
    pieces = []
    for p in range(n + 1):
        q = n - p
        piece = tensor_presentation(sym_presentation(first, p), sym_presentation(second, q))
        images = []
        for left in SymmetricIndex(first.rank, p).multisets:
            for right in SymmetricIndex(second.rank, q).multisets:
                images.append(unit_vector(ring, index.merge(left, tuple(b + first.rank for b in right))))
        pieces.append((piece, images))
    source = direct_sum_of([piece for piece, _ in pieces], ring)
    images = [v for _, vectors in pieces for v in vectors]
    return GradedMap.from_vectors(source, sym_presentation(total, n), images, check=False)


def tensor_power(module, n):
    """M (x) ... (x) M, n >= 1 factors, generators indexed lexicographically by n-tuples"""
    result = module
    for _ in range(n - 1):
        result = tensor_presentation(result, module)
    return result


def sym_coequalizer_dimension(module, n, d):
    """dim of the degree-d part of the coequalizer of the permutations acting on the n-fold tensor power

    :param Presentation module:
    :param int n:
        positive power
    :param int d:
    :rtype: int
    """
    if n == 0:
        return hilbert_function(Presentation.free(module.ring, [0]), d)
    power = tensor_power(module, n)
    component = DegreeComponent(power, d)
    tuples = list(itertools.product(range(module.rank), repeat=n))
    position = {t: i for i, t in enumerate(tuples)}
    field = module.ring.field
    rows = []
    for i in range(n - 1):
        for mon, pos in component.basis:
            factors = list(tuples[pos])
            factors[i], factors[i + 1] = factors[i + 1], factors[i]
            swapped = (mon, position[tuple(factors)])
            difference = {(mon, pos): field.one}
            difference = add_vectors(difference, {swapped: field.one}, -field.one)
            if difference:
                rows.append(component.coordinates(difference))
    return component.dimension - matrix_rank(rows, component.dimension, module.ring.domain)


def _substitute(vector, pos, replacement):
    """Replaces e_pos by 'replacement' and closes the gap left by the position"""
    result = {}
    for (mon, p), c in vector.items():
        if p != pos:
            result = add_vectors(result, {(mon, p): c})
    for (mon, p), c in vector.items():
        if p == pos:
            result = add_vectors(result, scaled_vector(replacement, c, mon))
    return {(mon, p - 1 if p > pos else p): c for (mon, p), c in result.items()}


def minimize(module):
    """Prunes generators made redundant by relations with a constant entry, then drops zero relations

    :param Presentation module:
    :return: the pruned presentation and the isomorphism from the original one
    :rtype: (Presentation, GradedMap)
    """
    ring = module.ring
    unit = ring.unit_monomial()
    degrees = list(module.generator_degrees)
    relations = [dict(v) for v in module.relation_vectors() if v]
    images = [unit_vector(ring, a) for a in range(module.rank)]
    while True:
        found = None
        for j, vector in enumerate(relations):
            for (mon, pos), c in sorted(vector.items(), key=lambda t: t[0][1]):
                if mon == unit:
                    found = (j, pos, c)
                    break
            if found:
                break
        if found is None:
            break
        j, pos, c = found
        column = relations.pop(j)
        replacement = {term: -a / c for term, a in column.items() if term[1] != pos}
        relations = [v for v in (_substitute(v, pos, replacement) for v in relations) if v]
        images = [_substitute(v, pos, replacement) for v in images]
        del degrees[pos]
    rank = len(degrees)
    pruned = Presentation(FreeModule(ring, degrees), [vector_to_column(v, ring, rank) for v in relations])
    return pruned, GradedMap.from_vectors(module, pruned, images, check=False)
