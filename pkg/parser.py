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

import re

from .exceptions import PolynomialSyntaxError


class PolynomialParser:
    """Parser and formatter for the polynomial text grammar of a WeightedRing.

    A polynomial is a sum of terms "coeff*x0^e0*...*xn^en" where coeff is an integer or a fraction "a/b",
    exponents "^1" and coefficients "1*" can be omitted, e.g. "2*x0^3*x1 - 1/2*x2".
    """

    # regexp used to split a polynomial into signed terms
    term_re = re.compile(r"""
                    \s*(?P<sign>[+-])?\s*
                    (?P<body>[^+-]+)""", re.VERBOSE)

    # regexp used to parse a single factor of a term
    factor_re = re.compile(r"""
                    \s*(?:
                    (?P<numerator>\d+)(?:\s*/\s*(?P<denominator>\d+))?
                    |
                    x(?P<index>\d+)(?:\s*\^\s*(?P<exponent>\d+))?
                    )\s*$""", re.VERBOSE)

    def __init__(self, ring):
        """
        :param ring.WeightedRing ring:
            ring whose variables and field are used
        """
        self.ring = ring

    def parse(self, text):
        """Returns the polynomial described by 'text'

        :param str text:
        :rtype: ring.Polynomial
        """
        from .ring import Polynomial

        if not isinstance(text, str) or not text.strip():
            raise PolynomialSyntaxError('empty polynomial text "%s"' % text)
        field = self.ring.field
        terms = {}
        position = 0
        first = True
        stripped = text.rstrip()
        while position < len(stripped):
            match = self.term_re.match(stripped, position)
            if match is None or (match.group("sign") is None and not first):
                raise PolynomialSyntaxError('cannot parse "%s" at position %d' % (text, position))
            mon, coeff = self._parse_term(match.group("body"), text)
            if match.group("sign") == "-":
                coeff = -coeff
            terms[mon] = terms.get(mon, field.zero) + coeff
            position = match.end()
            first = False
        return Polynomial(self.ring, terms)

    def _parse_term(self, body, text):
        field = self.ring.field
        exponents = [0] * self.ring.nvars
        coeff = field.one
        for factor in body.split("*"):
            match = self.factor_re.match(factor)
            if match is None:
                raise PolynomialSyntaxError('bad factor "%s" in "%s"' % (factor.strip(), text))
            if match.group("index") is not None:
                index = int(match.group("index"))
                if index >= self.ring.nvars:
                    raise PolynomialSyntaxError('variable x%d does not exist in a ring with %d variables'
                                                % (index, self.ring.nvars))
                exponents[index] += int(match.group("exponent") or 1)
            else:
                coeff = coeff * field.convert(int(match.group("numerator")), int(match.group("denominator") or 1))
        return tuple(exponents), coeff

    def format(self, polynomial):
        """Returns the canonical text of 'polynomial'

        :param ring.Polynomial polynomial:
        :rtype: str
        """
        field = self.ring.field
        pieces = []
        for mon, coeff in polynomial.sorted_terms():
            text, negative = field.to_text_abs(coeff)
            factors = []
            for i, e in enumerate(mon):
                if e == 1:
                    factors.append("x%d" % i)
                elif e > 1:
                    factors.append("x%d^%d" % (i, e))
            if text != "1" or not factors:
                factors.insert(0, text)
            term = "*".join(factors)
            if not pieces:
                pieces.append("-" + term if negative else term)
            else:
                pieces.append(("- " if negative else "+ ") + term)
        return " ".join(pieces) if pieces else "0"


def parse_polynomial(ring, text):
    """Shorthand for PolynomialParser(ring).parse(text)"""
    return PolynomialParser(ring).parse(text)


def format_polynomial(polynomial):
    """Shorthand for PolynomialParser(polynomial.ring).format(polynomial)"""
    return PolynomialParser(polynomial.ring).format(polynomial)
