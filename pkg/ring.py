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

"""Exact scalars and the weighted graded polynomial ring A = K[x0, ..., xn] with deg(xi) = di.

Monomials are plain tuples of exponents. Polynomials are immutable maps from monomials to
nonzero scalars of a sympy domain (QQ or GF(p)).
"""

import math
from functools import reduce

import numpy as np
from sympy import isprime
from sympy.polys.domains import QQ, GF

from .exceptions import MalformedInputError, NotPrimeModulusError, RingMismatchError, SingleVariableRingError


class FieldSpec:
    """Base field: the rationals or a prime field"""

    def __init__(self, modulus=None):
        """
        :param int modulus:
            prime modulus p of the field F_p, None for the rationals
        """
        if modulus is not None:
            if not isinstance(modulus, int) or modulus < 2 or not isprime(modulus):
                raise NotPrimeModulusError('modulus should be a prime p >= 2, got %s instead' % modulus)
            self.domain = GF(modulus)
        else:
            self.domain = QQ
        self.modulus = modulus

    @classmethod
    def parse(cls, text):
        """Build a field from "Q" or "Fp:<p>"

        :param str text:
            field description
        :rtype: FieldSpec
        """
        text = str(text).strip()
        if text == "Q":
            return cls()
        if text.startswith("Fp:") and text[3:].isdigit():
            return cls(int(text[3:]))
        raise MalformedInputError('field should be "Q" or "Fp:<p>", got "%s" instead' % text)

    @property
    def is_rational(self):
        return self.modulus is None

    @property
    def zero(self):
        return self.domain.zero

    @property
    def one(self):
        return self.domain.one

    def convert(self, numerator, denominator=1):
        """Returns the scalar numerator/denominator

        :param int numerator:
        :param int denominator:
        """
        if denominator == 0:
            raise MalformedInputError('zero denominator in coefficient %s/%s' % (numerator, denominator))
        value = self.domain.convert(numerator)
        if denominator != 1:
            den = self.domain.convert(denominator)
            if not den:
                raise MalformedInputError('denominator %s vanishes in %s' % (denominator, self))
            value = value / den
        return value

    def to_text(self, c):
        """Canonical text of a scalar: "a" or "a/b" in lowest terms with positive denominator"""
        if self.is_rational:
            num, den = int(self.domain.numer(c)), int(self.domain.denom(c))
            return str(num) if den == 1 else "%d/%d" % (num, den)
        return str(int(c) % self.modulus)

    def to_text_abs(self, c):
        """Text of the absolute value of a scalar and whether it is negative"""
        if self.is_rational:
            num, den = int(self.domain.numer(c)), int(self.domain.denom(c))
            text = str(abs(num)) if den == 1 else "%d/%d" % (abs(num), den)
            return text, num < 0
        return self.to_text(c), False

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and self.modulus == other.modulus

    def __hash__(self):
        return hash(("field", self.modulus))

    def __str__(self):
        return "Q" if self.is_rational else "Fp:%d" % self.modulus

    __repr__ = __str__


def monomial_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def monomial_div(a, b):
    """Returns a/b, assuming b divides a"""
    return tuple(x - y for x, y in zip(a, b))


def monomial_divides(b, a):
    """Returns whether b divides a"""
    return all(y <= x for x, y in zip(a, b))


def monomial_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def monomials_coprime(a, b):
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def revlex_key(mon):
    """Sort key that compares monomials of equal weighted degree reverse lexicographically"""
    return tuple(-e for e in reversed(mon))


class WeightedRing:
    """The graded polynomial ring K[x0, ..., xn] with deg(xi) = di"""

    def __init__(self, weights, field=None):
        """
        :param list[int] weights:
            positive weights d0, ..., dn, at least two of them
        :param FieldSpec field:
            base field, the rationals if None
        """
        weights = tuple(weights)
        if len(weights) < 2:
            raise SingleVariableRingError('a weighted ring needs at least two variables, got %d' % len(weights))
        if any(not isinstance(w, int) or w < 1 for w in weights):
            raise MalformedInputError('weights should be positive integers, got %s instead' % (weights,))
        self.field = field or FieldSpec()
        self.weights = weights
        self.lcm_weights = reduce(lambda a, b: a * b // math.gcd(a, b), weights)
        self._bases = {}

    @property
    def nvars(self):
        return len(self.weights)

    @property
    def domain(self):
        return self.field.domain

    def monomial_degree(self, mon):
        return sum(e * w for e, w in zip(mon, self.weights))

    def unit_monomial(self):
        return (0,) * self.nvars

    def variable_monomial(self, i, power=1):
        mon = [0] * self.nvars
        mon[i] = power
        return tuple(mon)

    def monomial_basis(self, d):
        """Returns the monomials of weighted degree d, largest first"""
        if d < 0:
            return ()
        basis = self._bases.get(d)
        if basis is None:
            found = []
            self._enumerate(d, len(self.weights) - 1, [], found)
            basis = tuple(sorted(found, key=revlex_key, reverse=True))
            self._bases[d] = basis
        return basis

    def _enumerate(self, d, i, suffix, found):
        w = self.weights[i]
        if i == 0:
            if d % w == 0:
                found.append(tuple([d // w] + suffix))
            return
        for e in range(d // w + 1):
            self._enumerate(d - e * w, i - 1, [e] + suffix, found)

    def zero(self):
        return Polynomial(self, {})

    def one(self):
        return self.constant(1)

    def constant(self, numerator, denominator=1):
        return Polynomial(self, {self.unit_monomial(): self.field.convert(numerator, denominator)})

    def variable(self, i, power=1):
        return Polynomial(self, {self.variable_monomial(i, power): self.field.one})

    def variables(self):
        return [self.variable(i) for i in range(self.nvars)]

    def check_same(self, other):
        """Raise RingMismatchError if 'other' is not this ring"""
        if self != other:
            raise RingMismatchError('ring mismatch: %s vs %s' % (self, other))

    def __eq__(self, other):
        return isinstance(other, WeightedRing) and self.weights == other.weights and self.field == other.field

    def __hash__(self):
        return hash(("ring", self.weights, self.field))

    def __str__(self):
        return "%s[x0..x%d; weights %s]" % (self.field, self.nvars - 1, ",".join(map(str, self.weights)))

    __repr__ = __str__


class Polynomial:
    """Immutable polynomial of a WeightedRing"""

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        """
        :param WeightedRing ring:
        :param dict[tuple[int], object] terms:
            monomial -> scalar, zero scalars are dropped
        """
        self.ring = ring
        self.terms = {mon: c for mon, c in terms.items() if c}

    @property
    def homogeneous_degree(self):
        """Weighted degree if all monomials share it, None otherwise (and for zero)"""
        degrees = {self.ring.monomial_degree(mon) for mon in self.terms}
        return degrees.pop() if len(degrees) == 1 else None

    def is_zero(self):
        return not self.terms

    def is_homogeneous(self):
        return self.is_zero() or self.homogeneous_degree is not None

    def constant_term(self):
        return self.terms.get(self.ring.unit_monomial(), self.ring.field.zero)

    def sorted_terms(self):
        """Terms in canonical order: weighted degree descending, then reverse lexicographic"""
        degree = self.ring.monomial_degree
        return sorted(self.terms.items(), key=lambda t: (degree(t[0]), revlex_key(t[0])), reverse=True)

    def scale(self, c):
        return Polynomial(self.ring, {mon: c * v for mon, v in self.terms.items()})

    def mul_monomial(self, mon, c=None):
        c = self.ring.field.one if c is None else c
        return Polynomial(self.ring, {monomial_mul(m, mon): c * v for m, v in self.terms.items()})

    def __add__(self, other):
        self.ring.check_same(other.ring)
        terms = dict(self.terms)
        for mon, c in other.terms.items():
            terms[mon] = terms.get(mon, self.ring.field.zero) + c
        return Polynomial(self.ring, terms)

    def __neg__(self):
        return Polynomial(self.ring, {mon: -c for mon, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            return poly_product(self, other)
        return self.scale(self.ring.field.convert(other))

    def __eq__(self, other):
        return isinstance(other, Polynomial) and self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash(tuple(self.sorted_terms()))

    def __str__(self):
        from .parser import format_polynomial
        return format_polynomial(self)

    __repr__ = __str__


def monomial_basis(ring, d):
    """Returns exactly the monomials of weighted degree d, in canonical order

    :param WeightedRing ring:
    :param int d:
        degree, may be negative
    :rtype: tuple[tuple[int]]
    """
    return ring.monomial_basis(d)


def poly_product(f, g):
    """Distributed product of two polynomials of the same ring

    :param Polynomial f:
    :param Polynomial g:
    :rtype: Polynomial
    """
    f.ring.check_same(g.ring)
    zero = f.ring.field.zero
    terms = {}
    for m1, c1 in f.terms.items():
        for m2, c2 in g.terms.items():
            mon = monomial_mul(m1, m2)
            terms[mon] = terms.get(mon, zero) + c1 * c2
    return Polynomial(f.ring, terms)


def hilbert_series(ring, up_to):
    """Returns dim A_d for d = 0..up_to, expanding the product of 1/(1 - t^di) as power series

    :param WeightedRing ring:
    :param int up_to:
        last degree
    :rtype: numpy.ndarray
    """
    series = np.zeros(up_to + 1, dtype=np.int64)
    series[0] = 1
    for w in ring.weights:
        geometric = np.zeros(up_to + 1, dtype=np.int64)
        geometric[::w] = 1
        series = np.convolve(series, geometric)[:up_to + 1]
    return series
