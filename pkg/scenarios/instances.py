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

"""Seeded random instances: forms, membership problems and presentations whose saturation is finitely generated"""

from ..gmodule import FreeModule, GradedMap, Presentation, present
from ..groebner import add_vectors, column_to_vector, scaled_vector, submodule_presentation, unit_vector
from ..ring import Polynomial


COEFFICIENTS = (-3, -2, -1, 1, 2, 3)


def random_polynomial(ring, d, rng, density=0.6):
    """A random form of degree d with small integer coefficients, zero when there are no monomials of degree d"""
    terms = {}
    for mon in ring.monomial_basis(d):
        if rng.random() < density:
            terms[mon] = ring.field.convert(rng.choice(COEFFICIENTS))
    return Polynomial(ring, terms)


def random_nonzero_polynomial(ring, d, rng):
    """As random_polynomial() but never zero, None if there are no monomials of degree d"""
    basis = ring.monomial_basis(d)
    if not basis:
        return None
    f = random_polynomial(ring, d, rng)
    if f.is_zero():
        f = Polynomial(ring, {rng.choice(basis): ring.field.convert(rng.choice(COEFFICIENTS))})
    return f


def random_column(ring, degrees, d, rng):
    """A column whose entries make a vector of degree d in the free module with generator degrees 'degrees'"""
    return tuple(random_polynomial(ring, d - g, rng) for g in degrees)


def multiply(vector, polynomial):
    """polynomial * vector"""
    result = {}
    for mon, c in polynomial.terms.items():
        result = add_vectors(result, scaled_vector(vector, c, mon))
    return result


def membership_instance(ring, rng, max_degree=8):
    """A submodule of a free module of rank 1 or 2 and a candidate vector, half of the time built inside it

    :return: generator degrees, generators and the candidate vector with its degree
    :rtype: (list[int], list[dict], dict, int)
    """
    degrees = [0] if rng.random() < 0.5 else [0, rng.randint(0, 2)]
    top = max(degrees)
    generators, generator_degrees = [], []
    for _ in range(rng.randint(1, 3)):
        d = rng.randint(top + 1, max(top + 1, max_degree - 2))
        vector = column_to_vector(random_column(ring, degrees, d, rng))
        if vector:
            generators.append(vector)
            generator_degrees.append(d)
    d = rng.randint(max(generator_degrees, default=top), max_degree)
    if generators and rng.random() < 0.5:
        vector = {}
        for generator, g in zip(generators, generator_degrees):
            vector = add_vectors(vector, multiply(generator, random_polynomial(ring, d - g, rng)))
    else:
        vector = column_to_vector(random_column(ring, degrees, d, rng))
    return degrees, generators, vector, d


def _powers(ring, rng, max_degree=6):
    """A pure power of every variable, each of degree at most max(max_degree, weight)"""
    powers = []
    for i, w in enumerate(ring.weights):
        e = rng.randint(1, max(1, max_degree // w // 2))
        powers.append(ring.variable(i, e))
    return powers


def primary_ideal(ring, rng):
    """An ideal containing a power of every variable and a random form, presented on its generators"""
    generators = _powers(ring, rng)
    extra = random_nonzero_polynomial(ring, rng.randint(1, 4), rng)
    if extra is not None:
        generators.append(extra)
    vectors = [column_to_vector([f]) for f in generators]
    return submodule_presentation(Presentation.free(ring, [0]), vectors)[0]


def finite_module(ring, rng, k=0):
    """A[k] modulo powers of every variable and a random form: a torsion module"""
    relations = [[f] for f in _powers(ring, rng)]
    extra = random_nonzero_polynomial(ring, rng.randint(1, 4), rng)
    if extra is not None:
        relations.append([extra])
    return present(FreeModule(ring, [-k]), relations)


def finite_summand(ring, rng):
    """A[k] + a torsion module"""
    k = rng.randint(-2, 2)
    j = rng.randint(-1, 2)
    relations = [[ring.zero(), f] for f in _powers(ring, rng)]
    return present(FreeModule(ring, [-k, -j]), relations)


def embedded_point(ring, rng):
    """A[k] / (x0 * m): its torsion is the line spanned by x0, the quotient A[k]/(x0) is saturated with at least
    three variables
    """
    k = rng.randint(-1, 2)
    x0 = ring.variable(0)
    return present(FreeModule(ring, [-k]), [[x0 * x] for x in ring.variables()])


def irrelevant_multiple(ring, rng):
    """m * N for a module N of rank 2, with one random relation when there are at least three variables"""
    degrees = [0, rng.randint(0, 2)]
    relations = []
    if ring.nvars >= 3:
        column = random_column(ring, degrees, max(degrees) + rng.randint(1, 3), rng)
        if any(not f.is_zero() for f in column):
            relations.append(column)
    module = present(FreeModule(ring, degrees), relations)
    generators = [unit_vector(ring, a, ring.variable_monomial(i)) for a in range(2) for i in range(ring.nvars)]
    return submodule_presentation(module, generators)[0]


def embedded_component(ring, rng):
    """The submodule m e_1 + A (e_2 + g e_1) of A + A[-j]. The free module modulo it is the residue field, so it
    is torsion-free but saturates to A + A[-j] only through Hom(m, -)
    """
    j = rng.randint(0, 2)
    free = Presentation.free(ring, [0, j])
    generators = [unit_vector(ring, 0, ring.variable_monomial(i)) for i in range(ring.nvars)]
    g = random_polynomial(ring, j, rng)
    generators.append(add_vectors(unit_vector(ring, 1), multiply(unit_vector(ring, 0), g)))
    return submodule_presentation(free, generators)[0]


FAMILIES = ("primary_ideal", "finite_module", "finite_summand", "irrelevant_multiple", "embedded_point",
            "embedded_component")


def saturation_instance(ring, rng, families=FAMILIES):
    """A random module out of the families whose saturation is finitely generated

    :param tuple[str] families:
        names of the families to draw from
    :return: family name and module
    :rtype: (str, gmodule.Presentation)
    """
    if ring.nvars < 3:
        families = [family for family in families if family != "embedded_point"]
    name = rng.choice(families)
    if name == "finite_module":
        return name, finite_module(ring, rng, rng.randint(-2, 2))
    return name, globals()[name](ring, rng)


def twist_sum(ring, rng, lo, hi, count=None):
    """Free module A[k_1] + ... with twists k_i drawn from [lo, hi]"""
    count = count or rng.randint(1, 2)
    return Presentation.free(ring, [-rng.randint(lo, hi) for _ in range(count)])


def random_quotient(module, rng):
    """The quotient of 'module' by one random homogeneous relation, with its projection

    :param gmodule.Presentation module:
    :rtype: (gmodule.Presentation, gmodule.GradedMap)
    """
    ring = module.ring
    d = max(module.generator_degrees) + rng.randint(0, 2)
    column = random_column(ring, module.generator_degrees, d, rng)
    quotient = Presentation(module.cover, list(module.relations) + [column])
    projection = GradedMap.from_vectors(module, quotient, [unit_vector(ring, a) for a in range(module.rank)],
                                        check=False)
    return quotient, projection
