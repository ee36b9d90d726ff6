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

import random

from hypothesis import given, settings, strategies as st

from wpstack.gmodule import DegreeComponent, FreeModule, Presentation, compose, present
from wpstack.groebner import (ModuleOrder, add_vectors, colon, colon_closure, column_to_vector, free_resolution,
                              lift, minimal_generators, module_gb, normal_form, same_submodule, scaled_vector,
                              syzygies, unit_vector, vector_to_column)
from wpstack.ring import WeightedRing, monomial_divides
from wpstack.scenarios.instances import membership_instance


def ideal(ring, *texts):
    from wpstack.parser import parse_polynomial
    return [column_to_vector([parse_polynomial(ring, text)]) for text in texts]


def combination(vectors, coefficients):
    result = {}
    for vector, polynomial in zip(vectors, coefficients):
        for (mon, pos), c in polynomial.items():
            result = add_vectors(result, scaled_vector(vector, c, mon))
    return result


def test_order_prefers_degree_then_revlex(p11):
    order = ModuleOrder(p11, (0, 0))
    assert order.lead({((2, 0), 0): 1, ((0, 1), 1): 1}) == ((2, 0), 0)
    assert order.lead({((1, 1), 0): 1, ((2, 0), 0): 1}) == ((2, 0), 0)
    assert order.lead({((1, 0), 0): 1, ((1, 0), 1): 1}) == ((1, 0), 0)


def test_ideal_membership(p11):
    gb = module_gb(p11, (0,), ideal(p11, "x0^2", "x0*x1"))
    assert gb.contains(ideal(p11, "x0^2*x1 - 3*x0*x1^2")[0])
    assert not gb.contains(ideal(p11, "x1^3")[0])
    assert normal_form(ideal(p11, "x1^3 + x0^3")[0], gb) == ideal(p11, "x1^3")[0]
    assert gb.is_groebner()


def test_basis_is_reduced_and_monic(p112):
    gb = module_gb(p112, (0,), ideal(p112, "2*x0*x1 - x2", "x0^2 + x2", "x1^2"))
    assert gb.is_groebner()
    for element, lead in zip(gb.elements, gb.leads):
        assert element[lead] == p112.field.one
        tail = {t: c for t, c in element.items() if t != lead}
        assert not any(other[1] == t[1] and monomial_divides(other[0], t[0]) for other in gb.leads for t in tail)


def test_unit_generator_gives_everything(p11):
    gb = module_gb(p11, (0, 1), [unit_vector(p11, 0), unit_vector(p11, 1)])
    assert gb.is_finite()
    assert gb.standard_term_count() == 0


@settings(max_examples=20)
@given(st.integers(min_value=0, max_value=10 ** 6))
def test_membership_agrees_with_linear_algebra(seed):
    ring = WeightedRing([1, 1, 2])
    degrees, generators, vector, d = membership_instance(ring, random.Random(seed), max_degree=6)
    gb = module_gb(ring, degrees, generators)
    module = Presentation(FreeModule(ring, degrees), [vector_to_column(v, ring, len(degrees)) for v in generators])
    component = DegreeComponent(module, d)
    assert gb.contains(vector) == component.contains(vector)
    assert len(gb.standard_terms(d)) == component.dimension
    assert gb.is_groebner()


def test_membership_over_prime_field(p112_f7):
    ring = p112_f7
    gb = module_gb(ring, (0,), ideal(ring, "x0 + 7*x1", "x1^2"))
    assert gb.contains(ideal(ring, "x0^2")[0])


def test_syzygies_of_the_variables(p112):
    columns = ideal(p112, "x0", "x1", "x2")
    syz = syzygies(p112, (0,), columns, (1, 1, 2))
    for s in syz:
        assert combination(columns, [{(m, 0): c for (m, p), c in s.items() if p == j} for j in range(3)]) == {}
    koszul = [column_to_vector(column) for column in (
        [p112.variable(1), -p112.variable(0), p112.zero()],
        [p112.variable(2), p112.zero(), -p112.variable(0)],
        [p112.zero(), p112.variable(2), -p112.variable(1)])]
    assert same_submodule(p112, (1, 1, 2), syz, koszul)


def test_lift_reconstructs(p11):
    columns = ideal(p11, "x0^2", "x1^2")
    vector = ideal(p11, "x0^3*x1 - 2*x0*x1^3")[0]
    coefficients = lift(p11, (0,), vector, columns, (2, 2))
    assert coefficients is not None
    rebuilt = combination(columns, [{(m, 0): c for (m, p), c in coefficients.items() if p == j} for j in range(2)])
    assert rebuilt == vector
    assert lift(p11, (0,), ideal(p11, "x0*x1")[0], columns, (2, 2)) is None


def test_minimal_generators_drop_redundant(p11):
    vectors = ideal(p11, "x0", "x0*x1", "x1", "x0^2 + x1^2")
    assert minimal_generators(p11, (0,), vectors) == [0, 2]


def test_colon_by_the_irrelevant_ideal(p11):
    square = ideal(p11, "x0^2", "x0*x1", "x1^2")
    assert same_submodule(p11, (0,), colon(p11, (0,), square), ideal(p11, "x0", "x1"))


def test_colon_closure_removes_embedded_component(p11):
    closure, k = colon_closure(p11, (0,), ideal(p11, "x0^2", "x0*x1"))
    assert same_submodule(p11, (0,), closure, ideal(p11, "x0"))
    assert k == 1


def test_koszul_resolution_ranks(p112):
    residue = present(FreeModule(p112, [0]), [[x] for x in p112.variables()])
    resolution = free_resolution(residue, minimal=True)
    assert resolution.ranks() == [1, 3, 3, 1]
    assert sorted(resolution.modules[3]) == [4]
    for i in range(1, resolution.length):
        assert not any(compose(resolution.differential(i), resolution.differential(i + 1)).image_vectors())


def test_free_module_has_trivial_resolution(p11):
    resolution = free_resolution(Presentation.free(p11, [0, 3]))
    assert resolution.length == 0
    assert resolution.ranks() == [2]
