"""The totient phi(n) and the totatives (residues in [0, n) coprime to n)."""

from bisect import bisect_left
from dataclasses import dataclass

from ._backend import kernels
from .arith import _check_positive
from .errors import OracleBoundError

#: Largest n the brute-force counting oracle accepts.
ORACLE_BOUND = 10**6


@dataclass(frozen=True)
class TotativeSet:
    """n with the ascending list of its totatives.

    For n > 1 the set contains 1 and is symmetric under a -> n - a;
    for n = 1 it is the single residue class {0}.
    """

    n: int
    parts: tuple

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __contains__(self, value):
        i = bisect_left(self.parts, value)
        return i < len(self.parts) and self.parts[i] == value


def totient(n: int) -> int:
    """phi(n), via the product of p**(e-1) * (p-1) over the prime factors."""
    _check_positive(n)
    return kernels.totient(n)


def totatives(n: int) -> TotativeSet:
    """The full ascending set of residues in [0, n) coprime to n."""
    _check_positive(n)
    return TotativeSet(n, tuple(kernels.totative_list(n)))


def totient_bruteforce(n: int) -> int:
    """phi(n) counted by a direct gcd scan of [0, n).

    Independent of the factorization route; serves as the oracle for
    totient() and refuses n above ORACLE_BOUND.
    """
    _check_positive(n)
    if n > ORACLE_BOUND:
        raise OracleBoundError(
            f"brute-force totient is limited to n <= {ORACLE_BOUND}, got {n}")
    return kernels.totient_scan(n)
