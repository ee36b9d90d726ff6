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

import pytest

from wpstack.exceptions import IllDefinedMapError, InhomogeneousRelation, MalformedInputError
from wpstack.gmodule import (DegreeComponent, FreeModule, GradedMap, Presentation, cokernel, cokernel_projection,
                             component_basis, compose, direct_sum, hilbert_function, hilbert_window, identity_map,
                             minimize, present, sym_coequalizer_dimension, sym_map, sym_multiplication,
                             sym_presentation, sym_sum_map, tensor_map, tensor_presentation, twist, zero_map)
from wpstack.groebner import unit_vector
from wpstack.quotient import is_epi_sheaf, is_iso_sheaf
from wpstack.scenarios.instances import random_quotient


def test_present_rejects_inhomogeneous_columns(p11):
    x0, x1 = p11.variables()
    with pytest.raises(InhomogeneousRelation) as info:
        present(FreeModule(p11, [0, 0]), [[x0, x1], [x0, x1 * x1]])
    assert info.value.column == 1
    with pytest.raises(InhomogeneousRelation):
        present(FreeModule(p11, [0]), [[x0 + x1 * x1]])
    with pytest.raises(MalformedInputError):
        present(FreeModule(p11, [0, 0]), [[x0]])


def test_shifted_generators_make_columns_homogeneous(p12):
    x0, x1 = p12.variables()
    module = present(FreeModule(p12, [0, 1]), [[x1, x0]])
    assert module.rank == 2
    assert not module.is_free()


def test_hilbert_function_of_twists(p11, p23):
    a2 = Presentation.free(p11, [-2])
    assert hilbert_window(a2, -3, 3).tolist() == [0, 1, 2, 3, 4, 5, 6]
    o1 = Presentation.free(p23, [-1])
    assert [hilbert_function(o1, d) for d in range(-1, 6)] == [1, 0, 1, 1, 1, 1, 2]


def test_standard_terms_agree_with_linear_algebra(p112):
    x0, x1, x2 = p112.variables()
    module = present(FreeModule(p112, [0, 1]), [[x2, x0], [x1 * x1, p112.zero()], [x0 * x2, x1 * x1]])
    for d in range(-1, 7):
        assert hilbert_function(module, d) == DegreeComponent(module, d).dimension == len(component_basis(module, d))


def test_degree_component_coordinates(p11):
    x0, x1 = p11.variables()
    module = present(FreeModule(p11, [0]), [[x0 - x1]])
    component = DegreeComponent(module, 1)
    assert component.dimension == 1
    assert component.contains({((1, 0), 0): p11.field.one, ((0, 1), 0): -p11.field.one})
    assert not component.contains({((1, 0), 0): p11.field.one})


def test_twist_shifts_dimensions(p112):
    x0 = p112.variable(0)
    module = present(FreeModule(p112, [0]), [[x0 * x0]])
    shifted = twist(module, 3)
    assert [hilbert_function(shifted, d) for d in range(-3, 5)] == [hilbert_function(module, d) for d in range(0, 8)]


def test_ill_defined_maps_are_rejected(p11):
    x0, x1 = p11.variables()
    quotient = present(FreeModule(p11, [0]), [[x0]])
    free = Presentation.free(p11, [0])
    with pytest.raises(IllDefinedMapError):
        GradedMap(quotient, free, [[p11.one()]])
    with pytest.raises(IllDefinedMapError):
        GradedMap(free, free, [[x0]])
    with pytest.raises(IllDefinedMapError):
        GradedMap(free, free, [])
    GradedMap(free, quotient, [[p11.one()]])
    GradedMap(Presentation.free(p11, [1]), free, [[x0 + x1]])


def test_compose_and_identity(p11):
    x0, x1 = p11.variables()
    free = Presentation.free(p11, [0])
    shifted = Presentation.free(p11, [-1])
    multiply = GradedMap(free, shifted, [[x0]])
    assert compose(identity_map(shifted), multiply).image_vectors() == multiply.image_vectors()
    assert compose(multiply, zero_map(free, free)).image_vectors() == [{}]


def test_cokernel(p11):
    free = Presentation.free(p11, [0])
    multiply = GradedMap(Presentation.free(p11, [1]), free, [[p11.variable(0)]])
    quotient = cokernel(multiply)
    assert hilbert_window(quotient, 0, 4).tolist() == [1, 1, 1, 1, 1]


def test_direct_sum(p12):
    first = Presentation.free(p12, [0])
    second = present(FreeModule(p12, [-1]), [[p12.variable(1)]])
    total = direct_sum(first, second)
    for d in range(-1, 5):
        assert hilbert_function(total.module, d) == hilbert_function(first, d) + hilbert_function(second, d)
    for injection, projection, summand in zip(total.injections, total.projections, total.summands):
        roundtrip = compose(projection, injection)
        assert roundtrip.image_vectors() == [unit_vector(p12, a) for a in range(summand.rank)]


def test_tensor_products(p11):
    x0, x1 = p11.variables()
    product = tensor_presentation(Presentation.free(p11, [-1]), Presentation.free(p11, [-2]))
    assert product.generator_degrees == (-3,)
    lines = tensor_presentation(present(FreeModule(p11, [0]), [[x0]]), present(FreeModule(p11, [0]), [[x1]]))
    assert hilbert_window(lines, -1, 3).tolist() == [0, 1, 0, 0, 0]


def test_symmetric_powers_of_free_modules(p11):
    free = Presentation.free(p11, [0, 0])
    square = sym_presentation(free, 2)
    assert square.rank == 3
    assert [hilbert_function(square, d) for d in range(3)] == [3, 6, 9]
    assert sym_presentation(free, 0).generator_degrees == (0,)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_symmetric_power_is_the_coequalizer(p11, n):
    x0, x1 = p11.variables()
    module = present(FreeModule(p11, [0, 1]), [[x0 * x0, x1]])
    power = sym_presentation(module, n)
    for d in range(n - 1, n + 3):
        assert sym_coequalizer_dimension(module, n, d) == hilbert_function(power, d)


def test_symmetric_power_of_a_map(p11):
    x0, x1 = p11.variables()
    source = Presentation.free(p11, [1, 1])
    target = Presentation.free(p11, [0])
    square = sym_map(GradedMap(source, target, [[x0], [x1]]), 2)
    assert square.source.rank == 3
    assert bool(is_epi_sheaf(square))


def test_symmetric_multiplication_and_sums_of_free_modules(p12):
    free = Presentation.free(p12, [0, -1])
    assert all(is_epi_sheaf(sym_multiplication(free, p, q)) for p, q in ((1, 1), (1, 2), (2, 1)))
    first, second = Presentation.free(p12, [0]), Presentation.free(p12, [-2])
    assert bool(is_iso_sheaf(sym_sum_map(first, second, 2)))


def test_minimize_prunes_unit_relations(p11):
    x0 = p11.variable(0)
    module = present(FreeModule(p11, [0, 1]), [[x0, -p11.one()]])
    pruned, iso = minimize(module)
    assert pruned.rank == 1 and pruned.is_free()
    assert pruned.generator_degrees == (0,)
    assert [hilbert_function(pruned, d) for d in range(4)] == [hilbert_function(module, d) for d in range(4)]
    assert iso.source is module and iso.target is pruned


@pytest.mark.parametrize("seed", range(4))
def test_symmetric_power_of_a_sum_splits(p12, seed):
    rng = random.Random(seed)
    first, _ = random_quotient(Presentation.free(p12, [0, -1]), rng)
    second, _ = random_quotient(Presentation.free(p12, [1]), rng)
    total = direct_sum(first, second).module
    for n in range(4):
        power = sym_presentation(total, n)
        parts = [tensor_presentation(sym_presentation(first, p), sym_presentation(second, n - p))
                 for p in range(n + 1)]
        for d in range(-4, 6):
            assert hilbert_function(power, d) == sum(hilbert_function(part, d) for part in parts)


def test_tensor_is_right_exact(p11):
    x0, x1 = p11.variables()
    multiply = GradedMap.from_vectors(Presentation.free(p11, [1]), Presentation.free(p11, [0]),
                                      [{(p11.variable_monomial(0), 0): p11.field.one}])
    other = present(FreeModule(p11, [0, 0]), [[x1, -x0]])
    tensored = tensor_map(multiply, identity_map(other))
    quotient = tensor_presentation(cokernel(multiply), other)
    assert hilbert_window(cokernel(tensored), -1, 5).tolist() == hilbert_window(quotient, -1, 5).tolist()
    assert hilbert_window(quotient, 0, 3).tolist() == [2, 1, 1, 1]
    onto = tensor_map(cokernel_projection(multiply), identity_map(other))
    assert not hilbert_window(cokernel(onto), -1, 5).any()
