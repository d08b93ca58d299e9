"""Exact integer primitives: gcd, modular products and powers, factorization.

Inputs are 64-bit unsigned; intermediate residue products are computed with
exact widening (128-bit in the compiled backend, arbitrary precision in the
pure one), never with a wrapped machine product.  Returned residues always
lie in [0, n): arguments denoting residue classes are reduced there first,
so negative and oversized representatives of a class are accepted.
"""

from dataclasses import dataclass

from ._backend import kernels
from .errors import DomainError, InvalidModulusError

U64_MAX = 2**64 - 1


def _check_width(value, name):
    if value > U64_MAX:
        raise DomainError(f"{name}={value} exceeds the 64-bit input width")


def _check_modulus(n):
    if not isinstance(n, int):
        raise TypeError(f"modulus must be an int, got {type(n).__name__}")
    if n == 0:
        raise InvalidModulusError("modulus must be >= 1")
    if n < 0:
        raise InvalidModulusError(f"modulus must be positive, got {n}")
    _check_width(n, "modulus")


def _check_positive(n, name="n"):
    if not isinstance(n, int):
        raise TypeError(f"{name} must be an int, got {type(n).__name__}")
    if n < 1:
        raise DomainError(f"{name} must be >= 1, got {n}")
    _check_width(n, name)


@dataclass(frozen=True)
class Factorization:
    """n together with its ordered (prime, exponent) decomposition.

    factors is empty exactly for n = 1; primes are strictly increasing and
    the product of p**e reconstructs n.
    """

    n: int
    factors: tuple

    def __iter__(self):
        return iter(self.factors)

    def __str__(self):
        if not self.factors:
            return "1"
        return " * ".join(f"{p}^{e}" if e > 1 else str(p) for p, e in self.factors)


def gcd(a: int, b: int) -> int:
    """Greatest common divisor; gcd(a, b) = 1 means a and b are coprime.

    gcd(0, b) = b; gcd(0, 0) is undefined and rejected.
    """
    for name, v in (("a", a), ("b", b)):
        if not isinstance(v, int):
            raise TypeError(f"{name} must be an int, got {type(v).__name__}")
        if v < 0:
            raise DomainError(f"{name} must be nonnegative, got {v}")
        _check_width(v, name)
    if a == 0 and b == 0:
        raise DomainError("gcd(0, 0) is undefined")
    return kernels.gcd(a, b)


def mod_mul(a: int, b: int, n: int) -> int:
    """(a * b) mod n with an exact product."""
    _check_modulus(n)
    return kernels.mod_mul(a % n, b % n, n)


def mod_pow(x: int, e: int, n: int) -> int:
    """x**e mod n in [0, n); x**0 = 1 for every x, including x = 0."""
    _check_modulus(n)
    if not isinstance(e, int):
        raise TypeError(f"exponent must be an int, got {type(e).__name__}")
    if e < 0:
        raise DomainError(f"exponent must be nonnegative, got {e}")
    _check_width(e, "exponent")
    return kernels.mod_pow(x % n, e, n)


def factorize(n: int) -> Factorization:
    """Canonical prime factorization of n >= 1 (deterministic trial division)."""
    _check_positive(n)
    return Factorization(n, tuple(kernels.factor_pairs(n)))


def divisors(n: int) -> list:
    """All divisors of n, ascending, including 1 and n."""
    _check_positive(n)
    return kernels.divisor_list(n)
