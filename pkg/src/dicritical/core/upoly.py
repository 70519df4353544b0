"""Dense univariate polynomial helpers.

Polynomials are plain lists of field elements, constant term first.  The
zero polynomial is the empty list.  Every function takes the coefficient
field ``K`` so that it can produce ``K.zero``/``K.one``.
"""


def trim(f):
    f = list(f)
    while f and f[-1] == 0:
        f.pop()
    return f


def degree(f):
    return len(f) - 1 if f else -1


def add(K, f, g):
    n = max(len(f), len(g))
    out = [K.zero] * n
    for i, c in enumerate(f):
        out[i] = out[i] + c
    for i, c in enumerate(g):
        out[i] = out[i] + c
    return trim(out)


def neg(f):
    return [-c for c in f]


def sub(K, f, g):
    return add(K, f, neg(g))


def scale(f, c):
    if c == 0:
        return []
    return trim([c * a for a in f])


def mul(K, f, g):
    if not f or not g:
        return []
    out = [K.zero] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a == 0:
            continue
        for j, b in enumerate(g):
            out[i + j] = out[i + j] + a * b
    return trim(out)


def divmod_(K, f, g):
    """Euclidean division ``f = q*g + r`` with ``deg r < deg g``."""
    g = trim(g)
    if not g:
        raise ZeroDivisionError("division by the zero polynomial")
    r = trim(f)
    dg = len(g) - 1
    inv = K.one / g[-1]
    q = [K.zero] * max(len(r) - dg, 0)
    while len(r) - 1 >= dg and r:
        shift = len(r) - 1 - dg
        c = r[-1] * inv
        q[shift] = c
        for i, b in enumerate(g):
            r[i + shift] = r[i + shift] - c * b
        r = trim(r)
    return trim(q), r


def monic(K, f):
    f = trim(f)
    if not f:
        return f
    inv = K.one / f[-1]
    return [c * inv for c in f]


def gcd(K, f, g):
    f, g = trim(f), trim(g)
    while g:
        f, g = g, divmod_(K, f, g)[1]
    return monic(K, f)


def xgcd(K, f, g):
    """Return ``(d, s, t)`` with ``s*f + t*g = d`` and ``d`` monic."""
    r0, r1 = trim(f), trim(g)
    s0, s1 = [K.one], []
    t0, t1 = [], [K.one]
    while r1:
        q, r = divmod_(K, r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub(K, s0, mul(K, q, s1))
        t0, t1 = t1, sub(K, t0, mul(K, q, t1))
    if not r0:
        return [], [], []
    inv = K.one / r0[-1]
    return [c * inv for c in r0], scale(s0, inv), scale(t0, inv)


def evaluate(K, f, x):
    acc = K.zero
    for c in reversed(f):
        acc = acc * x + c
    return acc


def derivative(K, f):
    return trim([c * i for i, c in enumerate(f)][1:])


def compose_linear(K, f, a, b):
    """Return ``f(a*t + b)``."""
    out = []
    lin = [b, a] if a != 0 else [b]
    power = [K.one]
    for c in f:
        out = add(K, out, scale(power, c))
        power = mul(K, power, lin)
    return out


def pow_mod(K, f, e, m):
    result = [K.one]
    base = divmod_(K, f, m)[1]
    while e:
        if e & 1:
            result = divmod_(K, mul(K, result, base), m)[1]
        base = divmod_(K, mul(K, base, base), m)[1]
        e >>= 1
    return result
