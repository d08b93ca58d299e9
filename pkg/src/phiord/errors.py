"""Exception types shared by every phiord module."""


class DomainError(ValueError):
    """An argument lies outside the operation's mathematical domain."""


class InvalidModulusError(DomainError):
    """The modulus is zero (or otherwise unusable as a divisor)."""


class NotCoprimeError(DomainError):
    """Two values that must be coprime share a divisor greater than 1."""

    def __init__(self, a, n, divisor):
        super().__init__(f"{a} and {n} are not coprime: common divisor {divisor}")
        self.a = a
        self.n = n
        self.divisor = divisor


class OracleBoundError(DomainError):
    """A brute-force oracle was asked to run above its supported bound."""
