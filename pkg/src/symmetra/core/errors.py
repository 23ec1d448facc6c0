"""
src/symmetra/core/errors.py

Exception hierarchy. Every error derives from SymmetraError and from the
closest built-in exception, so callers may catch either.
"""


class SymmetraError(Exception):
    """Base class for all errors raised by symmetra."""


# --- Arithmetic ---

class DivisionByZero(SymmetraError, ZeroDivisionError):
    pass

class DegenerateRatio(SymmetraError, ValueError):
    """Geometric ratio (g^p - 1)/(g - 1) requested at g = 1."""

class RootOfUnityQ(SymmetraError, ValueError):
    """The numeric value of q is (numerically) a root of unity."""

class NumericDenominatorVanishes(SymmetraError, ArithmeticError):
    pass


# --- Algebra ---

class NotAMonomial(SymmetraError, ValueError):
    pass

class NotAUnit(SymmetraError, ValueError):
    pass

class NotHyperbolic(SymmetraError, ValueError):
    pass

class WeightRelationViolated(SymmetraError, ValueError):
    pass

class GenericityViolated(SymmetraError, ValueError):
    pass

class RelationViolated(SymmetraError, ValueError):
    pass

class NotAWeightAction(SymmetraError, ValueError):
    pass

class SolverBudgetExceeded(SymmetraError, RuntimeError):
    pass


# --- Input / configuration ---

class ParseError(SymmetraError, ValueError):
    """Malformed scalar, element, word or matrix text."""

class ConfigError(SymmetraError, ValueError):
    pass
