"""Independent test oracles.

These deliberately re-derive results with different algorithms than the
package under test: determinantal divisors from raw minor expansion,
polynomial arithmetic from schoolbook loops, Hermite completions from brute
force over invertible 2x2 matrices.
"""

import math
from itertools import combinations, product


# -- integer determinantal divisors -----------------------------------------


def _minor_det(grid, rs, cs, memo):
    if len(rs) == 1:
        return grid[rs[0]][cs[0]]
    key = (rs, cs)
    got = memo.get(key)
    if got is not None:
        return got
    acc = 0
    for idx, c in enumerate(cs):
        v = grid[rs[0]][c]
        if v:
            sub = _minor_det(grid, rs[1:], cs[:idx] + cs[idx + 1 :], memo)
            acc += v * sub if idx % 2 == 0 else -v * sub
    memo[key] = acc
    return acc


def int_determinantal_divisors(grid):
    """d_k = gcd of all k x k minors, k = 1..min(m, n); zeros once the rank ends."""
    m = len(grid)
    n = len(grid[0]) if m else 0
    memo = {}
    out = []
    exhausted = False
    for k in range(1, min(m, n) + 1):
        if exhausted:
            out.append(0)
            continue
        g = 0
        for rs in combinations(range(m), k):
            for cs in combinations(range(n), k):
                g = math.gcd(g, _minor_det(grid, rs, cs, memo))
                if g == 1:
                    break
            if g == 1:
                break
        out.append(g)
        exhausted = g == 0
    return out


# -- schoolbook polynomial arithmetic over GF(p) ------------------------------


def p_trim(f):
    f = list(f)
    while f and f[-1] == 0:
        f.pop()
    return tuple(f)


def p_add(f, g, p):
    n = max(len(f), len(g))
    return p_trim(
        ((f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0)) % p
        for i in range(n)
    )


def p_mul(f, g, p):
    if not f or not g:
        return ()
    out = [0] * (len(f) + len(g) - 1)
    for i in range(len(f)):
        for j in range(len(g)):
            out[i + j] = (out[i + j] + f[i] * g[j]) % p
    return p_trim(out)


def p_neg(f, p):
    return tuple(-c % p for c in f)


def p_divmod(f, g, p):
    assert g, "division by zero polynomial"
    rem = list(f)
    if len(f) < len(g):
        return (), p_trim(f)
    inv = pow(g[-1], -1, p)
    quot = [0] * (len(f) - len(g) + 1)
    for k in range(len(quot) - 1, -1, -1):
        coef = (rem[k + len(g) - 1] * inv) % p
        quot[k] = coef
        for j in range(len(g)):
            rem[k + j] = (rem[k + j] - coef * g[j]) % p
    return p_trim(quot), p_trim(rem)


def p_monic(f, p):
    if not f:
        return ()
    inv = pow(f[-1], -1, p)
    return tuple(c * inv % p for c in f)


def p_gcd(f, g, p):
    a, b = p_trim(f), p_trim(g)
    while b:
        a, b = b, p_divmod(a, b, p)[1]
    return p_monic(a, p)


def poly_determinantal_divisors(grid, p):
    """Monic d_k over GF(p)[x]; () marks a vanished rank."""
    m = len(grid)
    n = len(grid[0]) if m else 0
    one = (1,)

    def minor(rs, cs, memo):
        if len(rs) == 1:
            return grid[rs[0]][cs[0]]
        key = (rs, cs)
        got = memo.get(key)
        if got is not None:
            return got
        acc = ()
        for idx, c in enumerate(cs):
            v = grid[rs[0]][c]
            if v:
                sub = minor(rs[1:], cs[:idx] + cs[idx + 1 :], memo)
                term = p_mul(v, sub, p)
                if idx % 2:
                    term = p_neg(term, p)
                acc = p_add(acc, term, p)
        memo[key] = acc
        return acc

    memo = {}
    out = []
    exhausted = False
    for k in range(1, min(m, n) + 1):
        if exhausted:
            out.append(())
            continue
        g = ()
        for rs in combinations(range(m), k):
            for cs in combinations(range(n), k):
                g = p_gcd(g, minor(rs, cs, memo), p)
                if g == one:
                    break
            if g == one:
                break
        out.append(g)
        exhausted = g == ()
    return out


# -- misc ---------------------------------------------------------------------


def squarefree_kernel(n):
    """Product of the distinct primes dividing n."""
    out = 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            out *= d
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out *= n
    return out


def brute_hermite_pair(ring, a, b):
    """Search all invertible 2x2 matrices Q for (a b)Q = (g, 0)."""
    elems = [e.payload for e in ring.elements()]
    units = {e.payload for e in ring.elements() if ring.is_unit(e)}
    ap, bp = a.payload, b.payload
    for q00, q01, q10, q11 in product(elems, repeat=4):
        det = ring._sub(ring._mul(q00, q11), ring._mul(q01, q10))
        if det not in units:
            continue
        if ring._add(ring._mul(ap, q01), ring._mul(bp, q11)) == ring._zero():
            return True
    return False
