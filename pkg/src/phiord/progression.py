"""Arithmetic progressions mod n: residue systems and congruence solving.

One period of a, a+d, a+2d, ... contains n terms; when gcd(d, n) = 1 its
residues mod n form a complete residue system (a permutation of 0..n-1), so
exactly phi(n) of the terms are coprime to n and the congruence
a + nu*d == r (mod n) has a unique term index nu in [0, n).
"""

from dataclasses import dataclass

from ._backend import kernels
from .arith import _check_modulus, _check_positive, _check_width
from .errors import DomainError, NotCoprimeError


@dataclass(frozen=True)
class ProgressionTrace:
    """First term a, difference d, modulus n, and the n residues of one period."""

    a: int
    d: int
    n: int
    residues: tuple


@dataclass(frozen=True)
class CongruenceSolution:
    """Term index nu and quotient mu with a + nu*d = mu*n + r exactly."""

    nu: int
    mu: int
    r: int


def _normalize_first_term(a, n):
    # Negative first terms denote the same residue class; reduce them.
    if not isinstance(a, int):
        raise TypeError(f"first term must be an int, got {type(a).__name__}")
    if a < 0:
        return a % n
    _check_width(a, "first term")
    return a


def progression_residues(a: int, d: int, n: int) -> ProgressionTrace:
    """Trace the residues mod n of one full period of n terms."""
    _check_modulus(n)
    _check_positive(d, "difference")
    a = _normalize_first_term(a, n)
    return ProgressionTrace(a, d, n, tuple(kernels.progression_list(a % n, d, n)))


def count_coprime_terms(a: int, d: int, n: int) -> int:
    """How many of the n residues in one period are coprime to n."""
    _check_modulus(n)
    _check_positive(d, "difference")
    a = _normalize_first_term(a, n)
    return kernels.coprime_term_count(a % n, d, n)


def solve_progression_congruence(a: int, d: int, n: int, r: int) -> CongruenceSolution:
    """The unique term index nu in [0, n) with a + nu*d == r (mod n).

    Requires gcd(d, n) = 1 (otherwise no solution is guaranteed) and
    0 <= r < n.  The returned quotient mu makes a + nu*d = mu*n + r an exact
    integer identity; a negative first term is reduced mod n first, and the
    identity then holds for the reduced term.
    """
    _check_modulus(n)
    _check_positive(d, "difference")
    if not 0 <= r < n:
        raise DomainError(f"target residue must be in [0, {n}), got {r}")
    g = kernels.gcd(d % n, n)
    if g != 1:
        raise NotCoprimeError(d, n, g)
    a = _normalize_first_term(a, n)
    # pow(., -1, n) is the extended-Euclid inverse; valid since gcd(d, n) = 1.
    d_inv = pow(d % n, -1, n)
    nu = (r - a) * d_inv % n
    mu, rem = divmod(a + nu * d - r, n)
    assert rem == 0 and mu >= 0
    return CongruenceSolution(nu, mu, r)
