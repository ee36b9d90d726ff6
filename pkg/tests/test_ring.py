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

import pytest
from hypothesis import given, strategies as st

from wpstack.exceptions import MalformedInputError, NotPrimeModulusError, RingMismatchError, SingleVariableRingError
from wpstack.ring import (FieldSpec, Polynomial, WeightedRing, hilbert_series, monomial_basis, monomial_divides,
                          monomial_lcm, poly_product)


weights_lists = st.lists(st.integers(min_value=1, max_value=5), min_size=2, max_size=4)


def test_field_parse():
    assert FieldSpec.parse("Q").is_rational
    assert FieldSpec.parse("Fp:7").modulus == 7
    assert str(FieldSpec.parse("Fp:7")) == "Fp:7"
    with pytest.raises(NotPrimeModulusError):
        FieldSpec.parse("Fp:8")
    with pytest.raises(MalformedInputError):
        FieldSpec.parse("R")


def test_field_convert_reduces_modulo_p():
    field = FieldSpec(5)
    assert field.convert(7) == field.convert(2)
    assert field.convert(1, 2) * field.convert(2) == field.one
    with pytest.raises(MalformedInputError):
        field.convert(1, 5)
    with pytest.raises(MalformedInputError):
        FieldSpec().convert(1, 0)


def test_ring_preconditions():
    with pytest.raises(SingleVariableRingError):
        WeightedRing([3])
    with pytest.raises(MalformedInputError):
        WeightedRing([1, 0])
    assert WeightedRing([2, 3]).lcm_weights == 6
    assert WeightedRing([4, 6, 3]).lcm_weights == 12


def test_monomial_basis_examples():
    ring = WeightedRing([1, 1, 2])
    assert set(monomial_basis(ring, 2)) == {(2, 0, 0), (1, 1, 0), (0, 2, 0), (0, 0, 1)}
    assert monomial_basis(ring, -1) == ()
    assert monomial_basis(ring, 0) == ((0, 0, 0),)
    coarse = WeightedRing([3, 5])
    assert monomial_basis(coarse, 2) == ()
    assert monomial_basis(coarse, 7) == ()
    assert set(monomial_basis(coarse, 15)) == {(5, 0), (0, 3)}


def test_monomial_basis_is_ordered_largest_first():
    ring = WeightedRing([1, 1])
    assert monomial_basis(ring, 2) == ((2, 0), (1, 1), (0, 2))


@given(weights_lists, st.integers(min_value=0, max_value=20))
def test_monomial_basis_matches_hilbert_series(weights, d):
    ring = WeightedRing(weights)
    basis = monomial_basis(ring, d)
    assert len(basis) == hilbert_series(ring, d)[d]
    assert all(ring.monomial_degree(mon) == d for mon in basis)
    assert len(set(basis)) == len(basis)


def test_monomial_helpers():
    assert monomial_divides((1, 0), (2, 3))
    assert not monomial_divides((0, 4), (2, 3))
    assert monomial_lcm((1, 4), (2, 3)) == (2, 4)


def polynomials(ring):
    coefficient = st.integers(min_value=-4, max_value=4)
    monomial = st.tuples(*[st.integers(min_value=0, max_value=3) for _ in range(ring.nvars)])
    return st.dictionaries(monomial, coefficient, max_size=4).map(
        lambda terms: Polynomial(ring, {mon: ring.field.convert(c) for mon, c in terms.items()}))


RING = WeightedRing([1, 2, 3])


@given(polynomials(RING), polynomials(RING), polynomials(RING))
def test_ring_laws(f, g, h):
    assert f + g == g + f
    assert f * g == g * f
    assert f * (g + h) == f * g + f * h
    assert (f - f).is_zero()
    assert poly_product(f, RING.one()) == f


@given(polynomials(RING), polynomials(RING))
def test_products_of_forms_are_forms(f, g):
    degree = RING.monomial_degree
    f = Polynomial(RING, {mon: c for mon, c in f.terms.items() if degree(mon) == 6})
    g = Polynomial(RING, {mon: c for mon, c in g.terms.items() if degree(mon) == 3})
    product = f * g
    assert product.is_homogeneous()
    if not product.is_zero():
        assert product.homogeneous_degree == 9


def test_homogeneous_degree():
    ring = WeightedRing([1, 2])
    x0, x1 = ring.variables()
    assert (x0 * x0 + x1).homogeneous_degree == 2
    assert (x0 + x1).homogeneous_degree is None
    assert not (x0 + x1).is_homogeneous()
    assert ring.zero().is_homogeneous()


def test_rings_do_not_mix():
    with pytest.raises(RingMismatchError):
        WeightedRing([1, 1]).one() + WeightedRing([1, 2]).one()
    with pytest.raises(RingMismatchError):
        WeightedRing([1, 1]).check_same(WeightedRing([1, 1], FieldSpec(3)))


def test_prime_field_arithmetic():
    ring = WeightedRing([1, 1], FieldSpec(3))
    x0 = ring.variable(0)
    assert (x0 * 3).is_zero()
    assert x0 + x0 + x0 == ring.zero()
