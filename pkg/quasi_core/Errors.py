class QuasialgError(Exception):
    """Base error for every precondition failure raised by quasi_core."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.message = message
        self.witness = witness

    def __str__(self):
        if self.witness is None:
            return self.message
        return f"{self.message} (witness: {self.witness})"


# scalars
class ConductorMismatch(QuasialgError):
    pass


class DivisionByZero(QuasialgError, ZeroDivisionError):
    pass


# groups
class GroupMismatch(QuasialgError):
    pass


class NotAssociative(QuasialgError):
    pass


class NotLatinSquare(QuasialgError):
    pass


class NoIdentity(QuasialgError):
    pass


class NoInverse(QuasialgError):
    pass


class GroupTooLarge(QuasialgError):
    pass


# cochains
class ZeroValue(QuasialgError):
    pass


class NotNormalized(QuasialgError):
    pass


class InvalidParameter(QuasialgError):
    pass


# algebras
class AlgebraMismatch(QuasialgError):
    pass


class GradingViolation(QuasialgError):
    pass


class NotQuasialgebra(QuasialgError):
    pass


class NotHomogeneous(QuasialgError):
    pass


class NotAUnit(QuasialgError):
    pass


# crossed products
class NotQuasicrossed(QuasialgError):
    pass


class NonUnitAlpha(QuasialgError):
    pass


class NonAutomorphismSigma(QuasialgError):
    pass


class IncompatibleSystems(QuasialgError):
    pass


class IncompatibleBase(QuasialgError):
    pass


# Cayley-Dickson
class NotInvolution(QuasialgError):
    pass


class NotStrong(QuasialgError):
    pass


class ZeroEpsilon(QuasialgError):
    pass


class NotAbelian(QuasialgError):
    pass


class ZeroParameter(QuasialgError):
    pass


# modules
class MissingAction(QuasialgError):
    pass


class NotGradedAction(QuasialgError):
    pass


# definition files
class DefinitionSyntaxError(QuasialgError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)


class UnknownReference(QuasialgError):
    def __init__(self, name, line=None):
        self.name = name
        self.line = line
        where = f"line {line}: " if line is not None else ""
        super().__init__(f"{where}unknown reference '{name}'")


class DuplicateSection(QuasialgError):
    def __init__(self, name, line=None):
        self.name = name
        self.line = line
        where = f"line {line}: " if line is not None else ""
        super().__init__(f"{where}duplicate section '{name}'")
