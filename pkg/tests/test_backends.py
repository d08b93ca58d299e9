"""Cross-checks between the compiled kernels and the pure-Python fallback.

Skipped wholesale when the extension was not built; the rest of the test
suite then exercises the pure backend through the public API.
"""

import random

import pytest

from phiord import _backend
from phiord import _kernels_py as pure

compiled = pytest.importorskip("phiord._kernels",
                               reason="compiled kernels not built")

PER_XN = ["order_scan", "order_search", "power_cycle", "coset_partition",
          "closure_counterexample", "class_counterexample"]
SWEEPS = ["progression_sweep", "trace_sweep", "coset_sweep", "closure_sweep",
          "class_product_sweep"]


def test_active_backend_prefers_compiled():
    assert _backend.BACKEND == "compiled"
    assert _backend.kernels is compiled
    assert _backend.active_backend() == "compiled"


def test_scalar_kernels_agree():
    rng = random.Random(5)
    for _ in range(2000):
        n = rng.randint(1, 2**64 - 1)
        a, b = rng.randint(0, n - 1), rng.randint(0, n - 1)
        e = rng.randint(0, 2**64 - 1)
        assert pure.gcd(a, b) == compiled.gcd(a, b)
        assert pure.mod_mul(a, b, n) == compiled.mod_mul(a, b, n)
        assert pure.mod_pow(a, e, n) == compiled.mod_pow(a, e, n)


def test_per_modulus_kernels_agree():
    ns = list(range(1, 400)) + [720, 1024, 9991, 123456, 2**32 + 1,
                                10**12 + 39]
    for n in ns:
        for name in ("factor_pairs", "divisor_list", "totient"):
            assert getattr(pure, name)(n) == getattr(compiled, name)(n), (name, n)
    for n in range(1, 400):
        assert pure.totient_scan(n) == compiled.totient_scan(n)
        assert pure.totative_list(n) == compiled.totative_list(n)


def test_per_base_kernels_agree():
    for n in (1, 2, 15, 16, 45, 97, 120, 121):
        for x in pure.totative_list(n):
            for name in PER_XN:
                assert (getattr(pure, name)(x, n)
                        == getattr(compiled, name)(x, n)), (name, x, n)


def test_progression_kernels_agree():
    rng = random.Random(17)
    for _ in range(200):
        n = rng.randint(1, 200)
        a = rng.randint(0, n - 1)
        d = rng.randint(1, 3 * n)
        assert (pure.progression_list(a, d, n)
                == compiled.progression_list(a, d, n))
        assert (pure.coprime_term_count(a, d, n)
                == compiled.coprime_term_count(a, d, n))


def test_sweep_kernels_agree():
    for n in range(2, 120):
        for name in SWEEPS:
            assert getattr(pure, name)(n) == getattr(compiled, name)(n), (name, n)
        assert pure.order_sweep(n, 60) == compiled.order_sweep(n, 60), n


def test_wide_product_exactness():
    # products near 2**128 must not wrap
    n = 2**64 - 59
    for a in (n - 1, n - 2, 2**63, 3):
        for b in (n - 1, 2**63 + 11, 7):
            assert compiled.mod_mul(a, b, n) == (a * b) % n
    assert compiled.mod_pow(2**63, 2**64 - 1, n) == pow(2**63, 2**64 - 1, n)
