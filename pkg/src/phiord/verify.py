"""Verification suites: every library-level law as a runnable sweep.

Each suite checks one group of laws over all moduli up to a cap and reports
``SuiteReport(name, cases, violations)``; a violation is a ReportRow carrying
the witness values.  All suites are deterministic; the randomized ones (t5,
parts of t11) draw from a seeded generator.

Suite names accepted by run_suite / the CLI:

    t1, t2   progression residues: permutation of 0..n-1 / coprime-term count
             (one shared traversal; violations are labelled per law)
    t3       totient of prime powers: p**(m-1) * (p-1)
    t4       totient of products of two distinct primes: (p-1) * (q-1)
    t5       totient multiplicativity on seeded coprime pairs
    t6, t7   power cycles: entries coprime / distinct until 1 recurs
             (one shared traversal)
    t8       power-residue subgroup closed under products
    t9       coset partition laws, plus residue/non-residue product
             classification (the product half is capped at 300, its
             exhaustive bound: cost grows ~n**4 beyond that)
    t10      divisor-search order vs. iterated-multiplication oracle
             (oracle half capped at min(max_n, 500))
    t11      Euler-Fermat: x**phi(n) == 1, the prime-combination divisibility
             forms, and x**phi == y**phi on seeded pairs
    oracle   totient vs. brute-force gcd count (capped at the oracle bound)
"""

import random
from dataclasses import dataclass

from ._backend import kernels
from .report import ReportRow
from .totient import ORACLE_BOUND

DEFAULT_SEED = 271

CLASS_PRODUCT_CAP = 300
ORDER_ORACLE_CAP = 500

#: (modulus, exponent) pairs of the divisibility forms for primes 3, 5, 7:
#: p | x**(p-1) - 1, pq | x**((p-1)(q-1)) - 1, p**3 | x**(p*p*(p-1)) - 1,
#: p*p*q | x**(p(p-1)(q-1)) - 1, pqr | x**((p-1)(q-1)(r-1)) - 1.
DIVISIBILITY_FORMS = (
    ("p", 3, 2),
    ("pq", 15, 8),
    ("p^3", 27, 18),
    ("p^2*q", 45, 24),
    ("pqr", 105, 48),
)


@dataclass(frozen=True)
class SuiteReport:
    name: str
    cases: int
    violations: tuple

    @property
    def ok(self):
        return not self.violations


def _viol_row(suite, payload):
    law = payload.pop("law")
    inputs = {"suite": suite}
    for key in ("n", "d", "a", "x"):
        if key in payload:
            inputs[key] = payload.pop(key)
    payload["law"] = law
    return ReportRow("verify", inputs, payload, "violated")


def _modulus_sweep(suite, max_n, sweep, *args):
    cases = 0
    violations = []
    for n in range(2, max_n + 1):
        done, viol = sweep(n, *args)
        cases += done
        if viol is not None:
            violations.append(_viol_row(suite, viol))
    return SuiteReport(suite, cases, tuple(violations))


def _suite_progression(name, max_n, rng):
    return _modulus_sweep(name, max_n, kernels.progression_sweep)


def _suite_prime_powers(name, max_n, rng):
    cases = 0
    violations = []
    for p in range(2, max_n + 1):
        if kernels.factor_pairs(p) != [(p, 1)]:
            continue
        q = p
        m = 1
        while q <= max_n:
            cases += 1
            expected = q // p * (p - 1)
            got = kernels.totient(q)
            if got != expected:
                violations.append(_viol_row(name, {
                    "law": "prime-power-totient", "n": q, "prime": p,
                    "exponent": m, "got": got, "expected": expected}))
            q *= p
            m += 1
    return SuiteReport(name, cases, tuple(violations))


def _suite_prime_products(name, max_n, rng):
    cases = 0
    violations = []
    primes = [p for p in range(2, max_n // 2 + 1)
              if kernels.factor_pairs(p) == [(p, 1)]]
    for i, p in enumerate(primes):
        for q in primes[i + 1:]:
            if p * q > max_n:
                break
            cases += 1
            got = kernels.totient(p * q)
            expected = (p - 1) * (q - 1)
            if got != expected:
                violations.append(_viol_row(name, {
                    "law": "two-prime-totient", "n": p * q, "p": p, "q": q,
                    "got": got, "expected": expected}))
    return SuiteReport(name, cases, tuple(violations))


def _suite_multiplicativity(name, max_n, rng, pairs=500):
    cases = 0
    violations = []
    while cases < pairs:
        a = rng.randint(1, max_n)
        b = rng.randint(1, max_n)
        if kernels.gcd(a, b) != 1:
            continue
        cases += 1
        got = kernels.totient(a * b)
        expected = kernels.totient(a) * kernels.totient(b)
        if got != expected:
            violations.append(_viol_row(name, {
                "law": "multiplicativity", "a": a, "b": b,
                "got": got, "expected": expected}))
    return SuiteReport(name, cases, tuple(violations))


def _suite_traces(name, max_n, rng):
    return _modulus_sweep(name, max_n, kernels.trace_sweep)


def _suite_closure(name, max_n, rng):
    return _modulus_sweep(name, max_n, kernels.closure_sweep)


def _suite_cosets(name, max_n, rng):
    report = _modulus_sweep(name, max_n, kernels.coset_sweep)
    products = _modulus_sweep(name, min(max_n, CLASS_PRODUCT_CAP),
                              kernels.class_product_sweep)
    return SuiteReport(name, report.cases + products.cases,
                       report.violations + products.violations)


def _suite_orders(name, max_n, rng):
    return _modulus_sweep(name, max_n, kernels.order_sweep,
                          min(max_n, ORDER_ORACLE_CAP))


def _coprime_samples(rng, n, count):
    """count seeded draws from the totatives of n (duplicates allowed)."""
    if n <= 2:
        return [1 % n] * count
    out = []
    while len(out) < count:
        x = rng.randint(1, n - 1)
        if kernels.gcd(x, n) == 1:
            out.append(x)
    return out


def _suite_euler_fermat(name, max_n, rng, per_n=20):
    cases = 0
    violations = []
    for n in range(2, max_n + 1):
        one = 1 % n
        phi = kernels.totient(n)
        xs = _coprime_samples(rng, n, per_n)
        for x in xs:
            cases += 1
            r = kernels.mod_pow(x, phi, n)
            if r != one:
                violations.append(_viol_row(name, {
                    "law": "euler-fermat", "n": n, "x": x,
                    "exponent": phi, "residue": r}))
        # pair the draws: x**phi and y**phi must agree mod n
        for x, y in zip(xs[0::2], xs[1::2]):
            cases += 1
            rx = kernels.mod_pow(x, phi, n)
            ry = kernels.mod_pow(y, phi, n)
            if rx != ry:
                violations.append(_viol_row(name, {
                    "law": "power-difference", "n": n, "x": x, "y": y,
                    "residue_x": rx, "residue_y": ry}))
    for label, modulus, exponent in DIVISIBILITY_FORMS:
        for _ in range(50):
            x = rng.randint(1, 10**6)
            while kernels.gcd(x % modulus, modulus) != 1:
                x = rng.randint(1, 10**6)
            cases += 1
            r = kernels.mod_pow(x % modulus, exponent, modulus)
            if r != 1:
                violations.append(_viol_row(name, {
                    "law": "divisibility-form", "form": label, "n": modulus,
                    "x": x, "exponent": exponent, "residue": r}))
    return SuiteReport(name, cases, tuple(violations))


def _suite_totient_oracle(name, max_n, rng):
    cases = 0
    violations = []
    for n in range(1, min(max_n, ORACLE_BOUND) + 1):
        cases += 1
        fast = kernels.totient(n)
        slow = kernels.totient_scan(n)
        if fast != slow:
            violations.append(_viol_row(name, {
                "law": "totient-oracle", "n": n, "formula": fast,
                "scan": slow}))
    return SuiteReport(name, cases, tuple(violations))


SUITES = {
    "t1": _suite_progression,
    "t2": _suite_progression,
    "t3": _suite_prime_powers,
    "t4": _suite_prime_products,
    "t5": _suite_multiplicativity,
    "t6": _suite_traces,
    "t7": _suite_traces,
    "t8": _suite_closure,
    "t9": _suite_cosets,
    "t10": _suite_orders,
    "t11": _suite_euler_fermat,
    "oracle": _suite_totient_oracle,
}

SUITE_NAMES = tuple(SUITES) + ("all",)


def run_suite(name: str, max_n: int, seed: int = DEFAULT_SEED) -> SuiteReport:
    """Run one named suite up to max_n; unknown names raise KeyError."""
    rng = random.Random(seed)
    return SUITES[name](name, max_n, rng)


def run_suites(names, max_n, seed=DEFAULT_SEED):
    """Run several suites in order, merging shared traversals.

    t1/t2 and t6/t7 check their laws in one pass each, so requesting both
    members of a pair runs the pass once under a combined label.
    """
    if "all" in names:
        names = list(SUITES)
    groups = []  # (function, [names...]) in first-appearance order
    for name in names:
        fn = SUITES[name]
        for gfn, gnames in groups:
            if gfn is fn:
                if name not in gnames:
                    gnames.append(name)
                break
        else:
            groups.append((fn, [name]))
    reports = []
    for fn, gnames in groups:
        label = "+".join(gnames)
        rng = random.Random(seed)
        reports.append(fn(label, max_n, rng))
    return reports
