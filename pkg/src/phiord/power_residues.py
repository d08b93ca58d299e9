"""Power residues of a base x mod N: order, subgroup, cosets, Euler-Fermat.

The residues of x**0, x**1, x**2, ... (x coprime to N) cycle with period
nu = ord_N(x); the first residue to recur is always 1.  The nu distinct
residues form a multiplicatively closed set R whose cosets partition the
totatives of N, so nu divides phi(N) -- which yields the Euler-Fermat
theorem: x**phi(N) == 1 (mod N).

The *_check operations are executable theorem checks: they return a
CheckResult that is truthy when the law holds and otherwise carries the
offending residues as witness (which would signal an implementation bug,
never a failure of the law).
"""

from dataclasses import dataclass, field

from ._backend import kernels
from .arith import _check_modulus
from .errors import NotCoprimeError, OracleBoundError
from .totient import totient

#: Largest modulus the iterated-multiplication order oracle accepts.
ORDER_ORACLE_BOUND = 10**5


@dataclass(frozen=True)
class PowerTrace:
    """Base x, modulus n, the distinct residue cycle of its powers, and the order."""

    x: int
    n: int
    cycle: tuple
    order: int


@dataclass(frozen=True)
class CosetDecomposition:
    """The power-residue subgroup of x mod n and its cosets.

    cosets[0] is the subgroup itself; every coset is sorted ascending and has
    order-many elements; together they partition the totatives of n, so
    index * order = phi(n).
    """

    x: int
    n: int
    subgroup: tuple
    cosets: tuple
    index: int

    @property
    def order(self):
        return len(self.subgroup)


@dataclass(frozen=True)
class CheckResult:
    """Outcome of a theorem check; falsy iff a counterexample was found."""

    ok: bool
    outputs: dict = field(default_factory=dict)

    def __bool__(self):
        return self.ok


def _reduce_base(x, n):
    """Reduce x mod n and require it coprime to n."""
    _check_modulus(n)
    if not isinstance(x, int):
        raise TypeError(f"base must be an int, got {type(x).__name__}")
    x0 = x % n
    g = n if x0 == 0 else kernels.gcd(x0, n)
    if n > 1 and g != 1:
        raise NotCoprimeError(x, n, g)
    return x0


def multiplicative_order(x: int, n: int) -> int:
    """Least nu >= 1 with x**nu == 1 (mod n), for x coprime to n.

    Searches the ascending divisors of phi(n); the order always divides
    phi(n), so the search cannot miss.
    """
    x0 = _reduce_base(x, n)
    return kernels.order_search(x0, n)


def order_bruteforce(x: int, n: int) -> int:
    """The order found by multiplying x into itself until 1 reappears.

    Independent oracle for multiplicative_order; refuses moduli above
    ORDER_ORACLE_BOUND.
    """
    x0 = _reduce_base(x, n)
    if n > ORDER_ORACLE_BOUND:
        raise OracleBoundError(
            f"brute-force order is limited to n <= {ORDER_ORACLE_BOUND}, got {n}")
    return kernels.order_scan(x0, n)


def power_trace(x: int, n: int) -> PowerTrace:
    """The full cycle of distinct power residues x**0 .. x**(nu-1) mod n."""
    x0 = _reduce_base(x, n)
    cycle = kernels.power_cycle(x0, n)
    return PowerTrace(x0, n, tuple(cycle), len(cycle))


def coset_decomposition(x: int, n: int) -> CosetDecomposition:
    """Partition the totatives of n into cosets of x's power-residue subgroup.

    Cosets are generated in discovery order: the smallest totative not yet
    covered is the next representative, and its coset is representative times
    each subgroup element, sorted.
    """
    x0 = _reduce_base(x, n)
    cosets = tuple(tuple(c) for c in kernels.coset_partition(x0, n))
    return CosetDecomposition(x0, n, cosets[0], cosets, len(cosets))


def euler_fermat_holds(x: int, n: int) -> CheckResult:
    """Check x**phi(n) == 1 (mod n); the residue is returned as witness."""
    x0 = _reduce_base(x, n)
    phi = totient(n)
    residue = kernels.mod_pow(x0, phi, n)
    return CheckResult(residue == 1 % n, {"exponent": phi, "residue": residue})


def power_difference_divisible(x: int, y: int, n: int) -> CheckResult:
    """Check x**phi(n) == y**phi(n) (mod n), i.e. n divides the difference."""
    x0 = _reduce_base(x, n)
    y0 = _reduce_base(y, n)
    phi = totient(n)
    rx = kernels.mod_pow(x0, phi, n)
    ry = kernels.mod_pow(y0, phi, n)
    return CheckResult(rx == ry,
                       {"exponent": phi, "residue_x": rx, "residue_y": ry})


def subgroup_closure_check(x: int, n: int) -> CheckResult:
    """Check that products of two power residues are again power residues."""
    x0 = _reduce_base(x, n)
    cex = kernels.closure_counterexample(x0, n)
    order = kernels.order_search(x0, n)
    if cex is None:
        return CheckResult(True, {"order": order})
    left, right, product = cex
    return CheckResult(False, {"order": order, "left": left, "right": right,
                               "product": product})
