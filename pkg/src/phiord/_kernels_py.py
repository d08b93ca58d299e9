"""Pure-Python kernels.

Fallback implementation of the hot loops, used when the compiled extension
(`phiord._kernels`) is not available.  Both backends expose exactly the same
functions with the same contracts; argument validation and normalization
happen one layer up, so every function here may assume

    * moduli satisfy 1 <= n < 2**64,
    * residue arguments already lie in [0, n),
    * coprimality preconditions hold where stated.

Sweep kernels (`*_sweep`) drive the verification suites: they return
``(cases, violation)`` where ``violation`` is ``None`` or a dict naming the
broken law and the offending witness values.  They stop at the first
violation for a given modulus.
"""

from math import gcd as _gcd


def gcd(a, b):
    return _gcd(a, b)


def mod_mul(a, b, n):
    return (a * b) % n


def mod_pow(x, e, n):
    return pow(x, e, n)


def factor_pairs(n):
    """Prime factorization of n as ascending (prime, exponent) pairs.

    Deterministic trial division by 2, 3, then the 6k+-1 wheel up to sqrt(n).
    """
    pairs = []
    for p in (2, 3):
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if e:
            pairs.append((p, e))
    f = 5
    step = 2  # alternates 2, 4: visits 5, 7, 11, 13, ...
    while f * f <= n:
        e = 0
        while n % f == 0:
            n //= f
            e += 1
        if e:
            pairs.append((f, e))
        f += step
        step = 6 - step
    if n > 1:
        pairs.append((n, 1))
    return pairs


def divisor_list(n):
    divs = [1]
    for p, e in factor_pairs(n):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    divs.sort()
    return divs


def totient(n):
    phi = 1
    for p, e in factor_pairs(n):
        phi *= p ** (e - 1) * (p - 1)
    return phi


def totient_scan(n):
    # Independent of the factorization route on purpose: straight gcd count.
    return sum(1 for k in range(n) if _gcd(k, n) == 1) if n > 1 else 1


def totative_list(n):
    if n == 1:
        return [0]
    return [k for k in range(1, n) if _gcd(k, n) == 1]


def order_scan(x, n):
    """Least k >= 1 with x**k == 1 (mod n), by iterated multiplication."""
    one = 1 % n
    r = x
    k = 1
    while r != one:
        r = r * x % n
        k += 1
    return k


def order_search(x, n):
    """Same value as order_scan, found among the ascending divisors of phi(n)."""
    one = 1 % n
    for d in divisor_list(totient(n)):
        if pow(x, d, n) == one:
            return d
    raise AssertionError(f"no exponent up to phi worked for {x} mod {n}")


def power_cycle(x, n):
    """Residues of x**0, x**1, ... up to (excluding) the first return to 1."""
    one = 1 % n
    cycle = [one]
    r = x % n
    while r != one:
        cycle.append(r)
        r = r * x % n
        if len(cycle) > n:
            raise AssertionError(f"power residues of {x} mod {n} never return to 1")
    return cycle


def coset_partition(x, n):
    """Partition of the totatives into cosets of the cycle subgroup.

    Representatives are the smallest not-yet-covered totatives, ascending;
    each coset comes out sorted.
    """
    cycle = power_cycle(x, n)
    covered = bytearray(n)
    cosets = []
    for t in totative_list(n):
        if covered[t]:
            continue
        coset = sorted(t * r % n for r in cycle)
        for v in coset:
            covered[v] = 1
        cosets.append(coset)
    return cosets


def closure_counterexample(x, n):
    """First product of two cycle residues that escapes the cycle, or None."""
    cycle = power_cycle(x, n)
    members = set(cycle)
    for i, r in enumerate(cycle):
        for s in cycle[i:]:
            p = r * s % n
            if p not in members:
                return (r, s, p)
    return None


def class_counterexample(x, n):
    """First product r*t misclassified between residues and non-residues.

    For every cycle residue r and totative t, r*t mod n must be a cycle
    residue exactly when t is one.  Returns (r, t, product) or None.
    """
    cycle = power_cycle(x, n)
    members = set(cycle)
    for r in cycle:
        for t in totative_list(n):
            p = r * t % n
            if (p in members) != (t in members):
                return (r, t, p)
    return None


def progression_list(a, d, n):
    """Residues mod n of one period a, a+d, ..., a+(n-1)d."""
    res = []
    r = a
    dm = d % n
    for _ in range(n):
        res.append(r)
        r += dm
        if r >= n:
            r -= n
    return res


def coprime_term_count(a, d, n):
    r = a
    dm = d % n
    count = 0
    for _ in range(n):
        if _gcd(r, n) == 1:
            count += 1
        r += dm
        if r >= n:
            r -= n
    return count


# ---------------------------------------------------------------------------
# sweep kernels


def progression_sweep(n):
    """All coprime differences d < n, first terms {0, 1, n+3}: the n residues
    must be a permutation of 0..n-1 and contain exactly phi(n) coprime ones."""
    phi = totient(n)
    cases = 0
    for d in range(1, n):
        if _gcd(d, n) != 1:
            continue
        for a in (0, 1, (n + 3) % n):
            seen = bytearray(n)
            coprime = 0
            r = a
            for _ in range(n):
                if seen[r]:
                    return cases, {"law": "residue-permutation", "n": n, "d": d,
                                   "a": a, "residue": r}
                seen[r] = 1
                if _gcd(r, n) == 1:
                    coprime += 1
                r += d
                if r >= n:
                    r -= n
            if coprime != phi:
                return cases, {"law": "coprime-count", "n": n, "d": d, "a": a,
                               "count": coprime, "phi": phi}
            cases += 1
    return cases, None


def trace_sweep(n):
    """Every totative's power cycle: entries distinct and coprime to n,
    and the power after the last one is 1 again."""
    one = 1 % n
    is_tot = bytearray(n)
    for t in totative_list(n):
        is_tot[t] = 1
    seen = bytearray(n)
    cases = 0
    for x in totative_list(n):
        cycle = []
        r = one
        while True:
            if not is_tot[r]:
                return cases, {"law": "trace-entry-not-coprime", "n": n, "x": x,
                               "value": r}
            if seen[r]:
                law = "cycle-return" if r == one else "repeat-before-unity"
                for v in cycle:
                    seen[v] = 0
                if r == one:
                    break
                return cases, {"law": law, "n": n, "x": x, "value": r}
            seen[r] = 1
            cycle.append(r)
            r = r * x % n
        cases += 1
    return cases, None


def order_sweep(n, oracle_limit):
    """Divisor-search order for every totative; cross-checked against the
    multiply-scan order when n <= oracle_limit."""
    one = 1 % n
    cases = 0
    for x in totative_list(n):
        o = order_search(x, n)
        if pow(x, o, n) != one:
            return cases, {"law": "power-not-unity", "n": n, "x": x, "order": o}
        if n <= oracle_limit and o != order_scan(x, n):
            return cases, {"law": "order-mismatch", "n": n, "x": x,
                           "search": o, "scan": order_scan(x, n)}
        cases += 1
    return cases, None


def coset_sweep(n):
    """Coset partition laws for every totative base x of n.

    Builds the partition exactly like coset_partition and verifies, per x:
    every generated element is a totative (gcd-scan table, independent of the
    product route), no element is covered twice, every coset has order-many
    elements, and the covered count equals the formula phi(n).
    """
    phi = totient(n)
    tots = totative_list(n)
    is_tot = bytearray(n)
    for t in tots:
        is_tot[t] = 1
    covered = bytearray(n)
    cases = 0
    for x in tots:
        cycle = power_cycle(x, n)
        nu = len(cycle)
        total = 0
        viol = None
        for t in tots:
            if covered[t]:
                continue
            size = 0
            for r in cycle:
                p = t * r % n
                if not is_tot[p]:
                    viol = {"law": "product-not-totative", "n": n, "x": x,
                            "rep": t, "value": p}
                    break
                if covered[p]:
                    viol = {"law": "coset-overlap", "n": n, "x": x, "rep": t,
                            "value": p}
                    break
                covered[p] = 1
                size += 1
            if viol is not None:
                break
            if size != nu:
                viol = {"law": "coset-size", "n": n, "x": x, "rep": t,
                        "size": size, "order": nu}
                break
            total += size
        for t in tots:
            covered[t] = 0
        if viol is not None:
            return cases, viol
        if total != phi:
            return cases, {"law": "cover-count", "n": n, "x": x,
                           "covered": total, "phi": phi}
        cases += 1
    return cases, None


def closure_sweep(n):
    cases = 0
    for x in totative_list(n):
        cex = closure_counterexample(x, n)
        if cex is not None:
            return cases, {"law": "closure", "n": n, "x": x, "left": cex[0],
                           "right": cex[1], "product": cex[2]}
        cases += 1
    return cases, None


def class_product_sweep(n):
    """Residue/non-residue product classification for every base x of n."""
    tots = totative_list(n)
    in_cycle = bytearray(n)
    cases = 0
    for x in tots:
        cycle = power_cycle(x, n)
        for r in cycle:
            in_cycle[r] = 1
        viol = None
        for r in cycle:
            for t in tots:
                p = r * t % n
                if in_cycle[p] != in_cycle[t]:
                    viol = {"law": "class-product", "n": n, "x": x,
                            "residue": r, "part": t, "product": p}
                    break
            if viol is not None:
                break
        for r in cycle:
            in_cycle[r] = 0
        if viol is not None:
            return cases, viol
        cases += 1
    return cases, None
