"""phiord: totients, multiplicative orders, power-residue cosets, and
Euler-Fermat checks for the integers mod N.

Hot loops live in a compiled extension when available; a pure-Python
fallback with identical behavior is selected at import otherwise
(see active_backend()).
"""

__version__ = "0.1.0"

from ._backend import active_backend
from .arith import Factorization, divisors, factorize, gcd, mod_mul, mod_pow
from .errors import (DomainError, InvalidModulusError, NotCoprimeError,
                     OracleBoundError)
from .power_residues import (CheckResult, CosetDecomposition, PowerTrace,
                             coset_decomposition, euler_fermat_holds,
                             multiplicative_order, order_bruteforce,
                             power_difference_divisible, power_trace,
                             subgroup_closure_check)
from .progression import (CongruenceSolution, ProgressionTrace,
                          count_coprime_terms, progression_residues,
                          solve_progression_congruence)
from .totient import TotativeSet, totatives, totient, totient_bruteforce

__all__ = [
    "Factorization", "TotativeSet", "ProgressionTrace", "CongruenceSolution",
    "PowerTrace", "CosetDecomposition", "CheckResult",
    "gcd", "mod_mul", "mod_pow", "factorize", "divisors",
    "totient", "totatives", "totient_bruteforce",
    "progression_residues", "count_coprime_terms",
    "solve_progression_congruence",
    "multiplicative_order", "order_bruteforce", "power_trace",
    "coset_decomposition", "euler_fermat_holds",
    "power_difference_divisible", "subgroup_closure_check",
    "DomainError", "InvalidModulusError", "NotCoprimeError",
    "OracleBoundError", "active_backend",
]
