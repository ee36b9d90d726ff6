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

# Exit code families used by the command line front end:
#   MalformedInputError -> 1, PreconditionError -> 2, BudgetExceededError -> 3


class MalformedInputError(ValueError):
    """Exception raised when an input document, polynomial or flag cannot be understood"""
    exit_code = 1


class PolynomialSyntaxError(MalformedInputError):
    """Exception raised when a polynomial string does not follow the ring grammar"""
    pass


class SchemaError(MalformedInputError):
    """Exception raised when a document has missing, unknown or mistyped fields"""
    pass


class SchemaVersionError(SchemaError):
    """Exception raised when a document was written under another schema version"""
    pass


class InhomogeneousRelation(MalformedInputError):
    """Exception raised when a relation column is not homogeneous"""

    def __init__(self, column, entry, message=None):
        """
        :param int column:
            index of the offending relation column
        :param str entry:
            text of the offending entry
        """
        self.column = column
        self.entry = entry
        super().__init__(message or 'relation column %d is not homogeneous at entry "%s"' % (column, entry))


class IllDefinedMapError(MalformedInputError):
    """Exception raised when a matrix does not carry source relations into target relations"""
    pass


class PreconditionError(ValueError):
    """Exception raised when a mathematical precondition of an operation is violated"""
    exit_code = 2


class RingMismatchError(PreconditionError):
    """Exception raised when objects over different rings are combined"""
    pass


class SingleVariableRingError(PreconditionError):
    """Exception raised when a ring with a single variable is requested"""
    pass


class NotPrimeModulusError(PreconditionError):
    """Exception raised when a prime field is requested with a composite modulus"""
    pass


class DegreeTooSmall(PreconditionError):
    """Exception raised when a twist is too small for the chosen generators"""
    pass


class UnknownBindingError(PreconditionError):
    """Exception raised when a session has no binding with the requested name or kind"""
    pass


class BudgetExceededError(RuntimeError):
    """Exception raised when a computation needs more than its configured budget"""
    exit_code = 3


class StabilizationBudgetExceeded(BudgetExceededError):
    """Exception raised when saturation does not stabilize within the configured cap"""
    pass


class WindowTooSmall(BudgetExceededError):
    """Exception raised when a certified degree window misses degrees a check needs"""
    pass


class ResolutionTooLong(BudgetExceededError):
    """Exception raised when syzygies persist past the Hilbert syzygy bound"""
    pass


class AmpleProbeFailure(RuntimeError):
    """Exception raised when an ampleness probe finds no n0 for some test sheaf"""

    def __init__(self, sheaf_id, n, message=None):
        """
        :param str sheaf_id:
            identifier of the test sheaf F
        :param int n:
            last symmetric power for which F (x) Sym^n was not weighted globally generated
        """
        self.sheaf_id = sheaf_id
        self.n = n
        super().__init__(message or 'no n0 found for test sheaf %s (fails at n=%d)' % (sheaf_id, n))
