"""Exception types raised by the modular arithmetic layers."""


class CongruenceError(Exception):
    """Base class for all arithmetic/lookup failures in this package."""


class DenominatorDivisibleByP(CongruenceError):
    """A rational parameter is not a p-integer (p divides its denominator)."""


class NotInvertible(CongruenceError):
    """Residue shares a factor with the modulus."""


class BaseDivisibleByP(CongruenceError):
    """Fermat quotient base divisible by p."""


class TermNotInvertible(CongruenceError):
    """A harmonic-sum term 1/k with p | k was requested."""


class NotDivisible(CongruenceError):
    """Exact division by p requested on a residue not divisible by p."""


class KTooLarge(CongruenceError):
    """Binomial lower index k >= p, so k! is not a unit."""


class Unsatisfiable(CongruenceError):
    """No sign choice on a quadratic-form representation meets the rule."""


class UnknownStatement(CongruenceError):
    """Statement id not present in the registry."""


class OraclePrimeTooLarge(CongruenceError):
    """Exact-rational cross-check requested beyond the configured bound."""
