# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels.

Hot-loop twin of `phiord._kernels_py` (same functions, same contracts: see
that module's docstring for the assumptions).  Arguments are 64-bit unsigned;
every product of two residues is widened to 128 bits before reduction, so
results are exact for any modulus below 2**64.
"""

from libc.stdlib cimport free, malloc
from libc.string cimport memset

ctypedef unsigned long long u64

cdef extern from *:
    ctypedef unsigned long long u128 "unsigned __int128"


cdef inline u64 _gcd(u64 a, u64 b) noexcept nogil:
    cdef u64 t
    while b:
        t = a % b
        a = b
        b = t
    return a


cdef inline u64 _mulmod(u64 a, u64 b, u64 n) noexcept nogil:
    return <u64>((<u128>a * b) % n)


cdef inline u64 _powmod(u64 x, u64 e, u64 n) noexcept nogil:
    cdef u64 r = 1 % n
    while e:
        if e & 1:
            r = _mulmod(r, x, n)
        x = _mulmod(x, x, n)
        e >>= 1
    return r


def gcd(u64 a, u64 b):
    return _gcd(a, b)


def mod_mul(u64 a, u64 b, u64 n):
    return _mulmod(a, b, n)


def mod_pow(u64 x, u64 e, u64 n):
    return _powmod(x, e, n)


def factor_pairs(u64 n):
    """Prime factorization as ascending (prime, exponent) pairs.

    Deterministic trial division by 2, 3, then the 6k+-1 wheel up to sqrt(n).
    """
    pairs = []
    cdef u64 p, f, e
    for p in (2, 3):
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if e:
            pairs.append((p, e))
    f = 5
    cdef u64 step = 2
    while <u128>f * f <= n:
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


def divisor_list(u64 n):
    divs = [1]
    cdef u64 p, q
    cdef int e, k
    for p, e in factor_pairs(n):
        grown = []
        for d in divs:
            q = 1
            for k in range(e + 1):
                grown.append(d * q)
                if k < e:
                    q *= p
        divs = grown
    divs.sort()
    return divs


cdef u64 _totient(u64 n) noexcept nogil:
    cdef u64 phi = 1, p, f, step
    for p in range(2, 4):
        if n % p == 0:
            n //= p
            phi *= p - 1
            while n % p == 0:
                n //= p
                phi *= p
    f = 5
    step = 2
    while <u128>f * f <= n:
        if n % f == 0:
            n //= f
            phi *= f - 1
            while n % f == 0:
                n //= f
                phi *= f
        f += step
        step = 6 - step
    if n > 1:
        phi *= n - 1
    return phi


def totient(u64 n):
    return _totient(n)


def totient_scan(u64 n):
    # Independent of the factorization route on purpose: straight gcd count.
    if n == 1:
        return 1
    cdef u64 k, count = 0
    with nogil:
        for k in range(n):
            if _gcd(k, n) == 1:
                count += 1
    return count


def totative_list(u64 n):
    if n == 1:
        return [0]
    cdef u64 k
    out = []
    for k in range(1, n):
        if _gcd(k, n) == 1:
            out.append(k)
    return out


def order_scan(u64 x, u64 n):
    """Least k >= 1 with x**k == 1 (mod n), by iterated multiplication."""
    cdef u64 one = 1 % n
    cdef u64 r = x
    cdef u64 k = 1
    with nogil:
        while r != one:
            r = _mulmod(r, x, n)
            k += 1
    return k


cdef u64 _order_search(u64 x, u64 n, list divs):
    cdef u64 one = 1 % n
    cdef u64 d
    for d in divs:
        if _powmod(x, d, n) == one:
            return d
    raise AssertionError(f"no exponent up to phi worked for {x} mod {n}")


def order_search(u64 x, u64 n):
    """Same value as order_scan, found among the ascending divisors of phi(n)."""
    return _order_search(x, n, divisor_list(_totient(n)))


cdef Py_ssize_t _unroll_cycle(u64 x, u64 n, u64* cyc) except -1:
    # Fills cyc (capacity n) with 1, x, x**2, ... mod n; returns the length.
    cdef u64 one = 1 % n
    cdef u64 r = one
    cdef Py_ssize_t clen = 0
    while True:
        if <u64>clen >= n:
            raise AssertionError(f"power residues of {x} mod {n} never return to 1")
        cyc[clen] = r
        clen += 1
        r = _mulmod(r, x, n)
        if r == one:
            return clen


def power_cycle(u64 x, u64 n):
    """Residues of x**0, x**1, ... up to (excluding) the first return to 1."""
    cdef u64 one = 1 % n
    cdef u64 r = x % n
    cdef u64 count = 1
    cycle = [one]
    while r != one:
        cycle.append(r)
        r = _mulmod(r, x, n)
        count += 1
        if count > n:
            raise AssertionError(f"power residues of {x} mod {n} never return to 1")
    return cycle


def coset_partition(u64 x, u64 n):
    """Partition of the totatives into cosets of the cycle subgroup.

    Representatives are the smallest not-yet-covered totatives, ascending;
    each coset comes out sorted.
    """
    cdef u64* cyc = <u64*>malloc(n * sizeof(u64))
    if cyc == NULL:
        raise MemoryError()
    cdef unsigned char[::1] covered = bytearray(n)
    cdef Py_ssize_t clen, i
    cdef u64 t, p
    cosets = []
    try:
        clen = _unroll_cycle(x % n, n, cyc)
        for t in totative_list(n):
            if covered[t]:
                continue
            coset = []
            for i in range(clen):
                p = _mulmod(t, cyc[i], n)
                coset.append(p)
                covered[p] = 1
            coset.sort()
            cosets.append(coset)
    finally:
        free(cyc)
    return cosets


def closure_counterexample(u64 x, u64 n):
    """First product of two cycle residues that escapes the cycle, or None."""
    cdef u64* cyc = <u64*>malloc(n * sizeof(u64))
    if cyc == NULL:
        raise MemoryError()
    cdef unsigned char[::1] member = bytearray(n)
    cdef Py_ssize_t clen, i, j
    cdef u64 p
    try:
        clen = _unroll_cycle(x % n, n, cyc)
        for i in range(clen):
            member[cyc[i]] = 1
        for i in range(clen):
            for j in range(i, clen):
                p = _mulmod(cyc[i], cyc[j], n)
                if not member[p]:
                    return (cyc[i], cyc[j], p)
    finally:
        free(cyc)
    return None


def class_counterexample(u64 x, u64 n):
    """First product r*t misclassified between residues and non-residues.

    For every cycle residue r and totative t, r*t mod n must be a cycle
    residue exactly when t is one.  Returns (r, t, product) or None.
    """
    tots = totative_list(n)
    cdef u64* cyc = <u64*>malloc(n * sizeof(u64))
    if cyc == NULL:
        raise MemoryError()
    cdef unsigned char[::1] member = bytearray(n)
    cdef Py_ssize_t clen, i
    cdef u64 r, t, p
    try:
        clen = _unroll_cycle(x % n, n, cyc)
        for i in range(clen):
            member[cyc[i]] = 1
        for i in range(clen):
            r = cyc[i]
            for t in tots:
                p = _mulmod(r, t, n)
                if member[p] != member[t]:
                    return (r, t, p)
    finally:
        free(cyc)
    return None


def progression_list(u64 a, u64 d, u64 n):
    """Residues mod n of one period a, a+d, ..., a+(n-1)d."""
    cdef u64 dm = d % n
    cdef u64 r = a
    cdef u64 k
    res = []
    for k in range(n):
        res.append(r)
        r += dm
        if r >= n:
            r -= n
    return res


def coprime_term_count(u64 a, u64 d, u64 n):
    cdef u64 dm = d % n
    cdef u64 r = a
    cdef u64 k, count = 0
    with nogil:
        for k in range(n):
            if _gcd(r, n) == 1:
                count += 1
            r += dm
            if r >= n:
                r -= n
    return count


# ---------------------------------------------------------------------------
# sweep kernels


def progression_sweep(u64 n):
    """All coprime differences d < n, first terms {0, 1, n+3}: the n residues
    must be a permutation of 0..n-1 and contain exactly phi(n) coprime ones."""
    cdef u64 phi = _totient(n)
    cdef bytearray seen_buf = bytearray(n)
    cdef unsigned char[::1] seen = seen_buf
    cdef u64 cases = 0, d, a, r, coprime, k
    cdef int ai, bad
    cdef u64[3] firsts
    firsts[0] = 0
    firsts[1] = 1 % n
    firsts[2] = (n + 3) % n
    for d in range(1, n):
        if _gcd(d, n) != 1:
            continue
        for ai in range(3):
            a = firsts[ai]
            coprime = 0
            bad = 0
            r = a
            for k in range(n):
                if seen[r]:
                    bad = 1
                    break
                seen[r] = 1
                if _gcd(r, n) == 1:
                    coprime += 1
                r += d
                if r >= n:
                    r -= n
            memset(&seen[0], 0, n)
            if bad:
                return cases, {"law": "residue-permutation", "n": n, "d": d,
                               "a": a, "residue": r}
            if coprime != phi:
                return cases, {"law": "coprime-count", "n": n, "d": d, "a": a,
                               "count": coprime, "phi": phi}
            cases += 1
    return cases, None


def trace_sweep(u64 n):
    """Every totative's power cycle: entries distinct and coprime to n,
    and the power after the last one is 1 again."""
    cdef u64 one = 1 % n
    tots = totative_list(n)
    cdef Py_ssize_t nt = len(tots), i, clen
    cdef u64* tarr = <u64*>malloc((nt + n) * sizeof(u64))
    if tarr == NULL:
        raise MemoryError()
    cdef u64* cyc = tarr + nt  # scratch for the current cycle
    for i in range(nt):
        tarr[i] = tots[i]
    cdef unsigned char[::1] is_tot = bytearray(n)
    cdef unsigned char[::1] seen = bytearray(n)
    cdef u64 x, r, cases = 0
    cdef object viol
    try:
        for i in range(nt):
            is_tot[tarr[i]] = 1
        for i in range(nt):
            x = tarr[i]
            viol = None
            clen = 0
            r = one
            while True:
                if not is_tot[r]:
                    viol = {"law": "trace-entry-not-coprime", "n": n, "x": x,
                            "value": r}
                    break
                if seen[r]:
                    if r != one:
                        viol = {"law": "repeat-before-unity", "n": n, "x": x,
                                "value": r}
                    break
                seen[r] = 1
                cyc[clen] = r
                clen += 1
                r = _mulmod(r, x, n)
            while clen:
                clen -= 1
                seen[cyc[clen]] = 0
            if viol is not None:
                return cases, viol
            cases += 1
    finally:
        free(tarr)
    return cases, None


def order_sweep(u64 n, u64 oracle_limit):
    """Divisor-search order for every totative; cross-checked against the
    multiply-scan order when n <= oracle_limit."""
    cdef u64 one = 1 % n
    divs = divisor_list(_totient(n))
    cdef u64 cases = 0, x, o, o2
    for x in totative_list(n):
        o = _order_search(x, n, divs)
        if _powmod(x, o, n) != one:
            return cases, {"law": "power-not-unity", "n": n, "x": x, "order": o}
        if n <= oracle_limit:
            o2 = order_scan(x, n)
            if o != o2:
                return cases, {"law": "order-mismatch", "n": n, "x": x,
                               "search": o, "scan": o2}
        cases += 1
    return cases, None


def coset_sweep(u64 n):
    """Coset partition laws for every totative base x of n.

    Builds the partition exactly like coset_partition and verifies, per x:
    every generated element is a totative (gcd-scan table, independent of the
    product route), no element is covered twice, every coset has order-many
    elements, and the covered count equals the formula phi(n).
    """
    cdef u64 phi = _totient(n)
    tots = totative_list(n)
    cdef Py_ssize_t nt = len(tots), i, j, ci, clen
    cdef u64* tarr = <u64*>malloc((nt + n) * sizeof(u64))
    if tarr == NULL:
        raise MemoryError()
    cdef u64* cyc = tarr + nt
    for i in range(nt):
        tarr[i] = tots[i]
    cdef unsigned char[::1] is_tot = bytearray(n)
    cdef unsigned char[::1] covered = bytearray(n)
    cdef u64 x, t, p, total, size, cases = 0
    cdef object viol
    try:
        for i in range(nt):
            is_tot[tarr[i]] = 1
        for i in range(nt):
            x = tarr[i]
            clen = _unroll_cycle(x, n, cyc)
            viol = None
            total = 0
            for j in range(nt):
                t = tarr[j]
                if covered[t]:
                    continue
                size = 0
                for ci in range(clen):
                    p = _mulmod(t, cyc[ci], n)
                    if not is_tot[p]:
                        viol = {"law": "product-not-totative", "n": n, "x": x,
                                "rep": t, "value": p}
                        break
                    if covered[p]:
                        viol = {"law": "coset-overlap", "n": n, "x": x,
                                "rep": t, "value": p}
                        break
                    covered[p] = 1
                    size += 1
                if viol is not None:
                    break
                if size != <u64>clen:
                    viol = {"law": "coset-size", "n": n, "x": x, "rep": t,
                            "size": size, "order": clen}
                    break
                total += size
            memset(&covered[0], 0, n)
            if viol is not None:
                return cases, viol
            if total != phi:
                return cases, {"law": "cover-count", "n": n, "x": x,
                               "covered": total, "phi": phi}
            cases += 1
    finally:
        free(tarr)
    return cases, None


def closure_sweep(u64 n):
    cdef u64 cases = 0, x
    for x in totative_list(n):
        cex = closure_counterexample(x, n)
        if cex is not None:
            return cases, {"law": "closure", "n": n, "x": x, "left": cex[0],
                           "right": cex[1], "product": cex[2]}
        cases += 1
    return cases, None


def class_product_sweep(u64 n):
    """Residue/non-residue product classification for every base x of n."""
    tots = totative_list(n)
    cdef Py_ssize_t nt = len(tots), i, j, ci, clen
    cdef u64* tarr = <u64*>malloc((nt + n) * sizeof(u64))
    if tarr == NULL:
        raise MemoryError()
    cdef u64* cyc = tarr + nt
    for i in range(nt):
        tarr[i] = tots[i]
    cdef unsigned char[::1] member = bytearray(n)
    cdef u64 x, r, t, p, cases = 0
    cdef object viol
    try:
        for i in range(nt):
            x = tarr[i]
            clen = _unroll_cycle(x, n, cyc)
            for ci in range(clen):
                member[cyc[ci]] = 1
            viol = None
            for ci in range(clen):
                r = cyc[ci]
                for j in range(nt):
                    t = tarr[j]
                    p = _mulmod(r, t, n)
                    if member[p] != member[t]:
                        viol = {"law": "class-product", "n": n, "x": x,
                                "residue": r, "part": t, "product": p}
                        break
                if viol is not None:
                    break
            for ci in range(clen):
                member[cyc[ci]] = 0
            if viol is not None:
                return cases, viol
            cases += 1
    finally:
        free(tarr)
    return cases, None
