"""Dense univariate polynomial helpers over an exact field.

Polynomials are lists of scalars, lowest degree first, with no trailing
zeros.  Only what the idempotent-splitting machinery needs lives here:
division, gcd, modular powering and root extraction.
"""

from __future__ import annotations

from fractions import Fraction

from .fields import QQ, Field, Fp


def trim(coeffs):
    c = list(coeffs)
    while c and not c[-1]:
        c.pop()
    return c


def degree(p):
    return len(p) - 1


def poly_add(a, b, field):
    n = max(len(a), len(b))
    z = field.zero
    return trim([(a[i] if i < len(a) else z) + (b[i] if i < len(b) else z) for i in range(n)])


def poly_sub(a, b, field):
    n = max(len(a), len(b))
    z = field.zero
    return trim([(a[i] if i < len(a) else z) - (b[i] if i < len(b) else z) for i in range(n)])


def poly_scale(c, a):
    if not c:
        return []
    return trim([c * x for x in a])


def poly_mul(a, b, field):
    if not a or not b:
        return []
    z = field.zero
    out = [z] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            if y:
                out[i + j] = out[i + j] + x * y
    return trim(out)


def poly_divmod(a, b, field):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    q = [field.zero] * max(0, len(a) - len(b) + 1)
    inv = field.one / b[-1]
    while len(a) >= len(b) and trim(a):
        a = trim(a)
        if len(a) < len(b):
            break
        c = a[-1] * inv
        d = len(a) - len(b)
        q[d] = c
        for i, y in enumerate(b):
            a[d + i] = a[d + i] - c * y
    return trim(q), trim(a)


def poly_mod(a, b, field):
    return poly_divmod(a, b, field)[1]


def monic(a, field):
    if not a:
        return []
    inv = field.one / a[-1]
    return [inv * x for x in a]


def poly_gcd(a, b, field):
    a, b = trim(a), trim(b)
    while b:
        a, b = b, poly_mod(a, b, field)
    return monic(a, field)


def poly_ext_gcd(a, b, field):
    """Monic g plus u, v with u*a + v*b = g."""
    r0, r1 = trim(a), trim(b)
    s0, s1 = [field.one], []
    t0, t1 = [], [field.one]
    while r1:
        q, r = poly_divmod(r0, r1, field)
        r0, r1 = r1, r
        s0, s1 = s1, poly_sub(s0, poly_mul(q, s1, field), field)
        t0, t1 = t1, poly_sub(t0, poly_mul(q, t1, field), field)
    if not r0:
        return [], s0, t0
    lead = r0[-1]
    inv = field.one / lead
    return poly_scale(inv, r0), poly_scale(inv, s0), poly_scale(inv, t0)


def poly_eval(a, x, field):
    acc = field.zero
    for c in reversed(a):
        acc = acc * x + c
    return acc


def poly_pow_mod(base, e: int, mod, field):
    result = [field.one]
    base = poly_mod(base, mod, field)
    while e:
        if e & 1:
            result = poly_mod(poly_mul(result, base, field), mod, field)
        base = poly_mod(poly_mul(base, base, field), mod, field)
        e >>= 1
    return result


def _divisors(n: int):
    n = abs(n)
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)


def _rational_roots(coeffs):
    """Distinct rational roots of a polynomial with Fraction coefficients."""
    p = trim(coeffs)
    if degree(p) < 1:
        return []
    roots = []
    # factor out x^k first
    k = 0
    while not p[0]:
        p = p[1:]
        k += 1
    if k:
        roots.append(Fraction(0))
    if degree(p) < 1:
        return roots
    denom_lcm = 1
    for c in p:
        denom_lcm = denom_lcm * c.denominator // _gcd(denom_lcm, c.denominator)
    ints = [int(c * denom_lcm) for c in p]
    g = 0
    for c in ints:
        g = _gcd(g, c)
    if g > 1:
        ints = [c // g for c in ints]
    a0, an = ints[0], ints[-1]
    for num in _divisors(a0):
        for den in _divisors(an):
            for cand in (Fraction(num, den), Fraction(-num, den)):
                if cand in roots:
                    continue
                if poly_eval(p, cand, QQ) == 0:
                    roots.append(cand)
    return sorted(roots)


def _gcd(a, b):
    a, b = abs(a), abs(b)
    while b:
        a, b = b, a % b
    return a


_BRUTE_PRIME_BOUND = 4096


def _prime_field_roots(coeffs, field, rng=None):
    """Distinct roots in GF(p): brute force for small p, split via x^p - x else."""
    p = field.characteristic
    f = monic(trim(coeffs), field)
    if degree(f) < 1:
        return []
    if p <= _BRUTE_PRIME_BOUND:
        return sorted((Fp(v, p) for v in range(p) if not poly_eval(f, Fp(v, p), field)),
                      key=lambda s: s.v)
    # keep only the part that splits into linear factors
    x = [field.zero, field.one]
    xp = poly_pow_mod(x, p, f, field)
    lin = poly_gcd(poly_sub(xp, x, field), f, field)
    roots = []
    _equal_degree_split(lin, field, roots, rng)
    return sorted(roots, key=lambda s: s.v)


def _equal_degree_split(f, field, out, rng):
    """Cantor-Zassenhaus on a product of distinct linear factors, odd p."""
    import random

    f = monic(f, field)
    d = degree(f)
    if d <= 0:
        return
    if d == 1:
        out.append(-f[0])
        return
    p = field.characteristic
    rng = rng or random.Random(0)
    while True:
        a = [field.scalar(rng.randrange(p)) for _ in range(d)] + [field.one]
        g = poly_gcd(a, f, field)
        if 0 < degree(g) < d:
            break
        h = poly_sub(poly_pow_mod(a, (p - 1) // 2, f, field), [field.one], field)
        g = poly_gcd(h, f, field)
        if 0 < degree(g) < d:
            break
    _equal_degree_split(g, field, out, rng)
    _equal_degree_split(poly_divmod(f, g, field)[0], field, out, rng)


def roots_in_field(coeffs, field: Field, rng=None):
    """All distinct roots of the polynomial that lie in the ground field."""
    if field.characteristic == 0:
        return _rational_roots(coeffs)
    return _prime_field_roots(coeffs, field, rng)
