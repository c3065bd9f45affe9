"""Exception hierarchy shared by every module of the package."""


class HomHopfError(Exception):
    """Base class for all errors raised by homhopf."""


class FieldError(HomHopfError, ValueError):
    """Invalid field modulus."""


class DivisionByZero(HomHopfError, ZeroDivisionError):
    pass


class NotInvertibleError(HomHopfError, ArithmeticError):
    """A matrix that had to be invertible is singular."""

    def __init__(self, message, rank=None):
        super().__init__(message if rank is None else f"{message} (rank {rank})")
        self.rank = rank


class ShapeError(HomHopfError, ValueError):
    pass


class BoundsError(HomHopfError, IndexError):
    pass


class GroupValidationError(HomHopfError, ValueError):
    pass


class NonAssociativeError(GroupValidationError):
    def __init__(self, triple):
        a, b, c = triple
        super().__init__(f"table is not associative at ({a}, {b}, {c})")
        self.witness = triple


class MissingIdentityError(GroupValidationError):
    def __init__(self):
        super().__init__("table has no two-sided identity")


class MissingInverseError(GroupValidationError):
    def __init__(self, element):
        super().__init__(f"element {element} has no two-sided inverse")
        self.witness = element


class PreconditionError(HomHopfError, ValueError):
    """A constructor input violates a documented precondition."""

    def __init__(self, message, axiom=None, witness=None):
        super().__init__(message)
        self.axiom = axiom
        self.witness = witness


class NoAntipodeError(HomHopfError, ArithmeticError):
    pass


class NotBijectiveError(HomHopfError, ArithmeticError):
    pass


class HostMismatchError(HomHopfError, TypeError):
    """Operands of a binary YD construction live over different hosts."""


class DegreeMismatchError(HomHopfError, TypeError):
    pass


class InconsistencyError(HomHopfError, RuntimeError):
    pass


class ConfigurationError(HomHopfError, ValueError):
    pass


class ParseError(HomHopfError, ValueError):
    """Syntax error in an instance file; carries line and column when known."""

    def __init__(self, message, line=None, column=None):
        where = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(message + where)
        self.line = line
        self.column = column


class InstanceShapeError(ParseError, ShapeError):
    def __init__(self, tensor, expected, got):
        ParseError.__init__(self, f"{tensor}: expected shape {expected}, got {got}")
        self.tensor = tensor
        self.expected = expected


class SemanticError(ParseError):
    def __init__(self, invariant, message):
        ParseError.__init__(self, f"{invariant}: {message}")
        self.invariant = invariant
