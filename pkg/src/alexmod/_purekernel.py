"""Pure-Python coefficient-dict kernel.

Laurent polynomials are stored as dicts mapping exponent -> nonzero
coefficient; module vectors over Z[t] as dicts mapping (position, exponent)
-> nonzero integer.  These functions are the inner loop of everything above
them (polynomial arithmetic, Smith reduction, Groebner reduction), and have
a compiled twin in ``_speedups.pyx`` with identical semantics.

Coefficient arithmetic is generic: int and Fraction both work except in the
``*_mod`` variants, which assume ints.
"""

IMPLEMENTATION = "pure"


def padd(a, b):
    """a + b for exponent dicts."""
    out = dict(a)
    for k, c in b.items():
        s = out.get(k, 0) + c
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def psub(a, b):
    """a - b for exponent dicts."""
    out = dict(a)
    for k, c in b.items():
        s = out.get(k, 0) - c
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def pneg(a):
    """-a for exponent dicts."""
    return {k: -c for k, c in a.items()}


def pmul(a, b):
    """a * b for exponent dicts (convolution on exponents)."""
    if not a or not b:
        return {}
    if len(a) > len(b):
        a, b = b, a
    out = {}
    for ka, ca in a.items():
        for kb, cb in b.items():
            k = ka + kb
            s = out.get(k, 0) + ca * cb
            if s:
                out[k] = s
            else:
                del out[k]
    return out


def pscale(a, c, k):
    """c * t^k * a for exponent dicts; c must be nonzero (or a empty)."""
    if not a:
        return {}
    if c == 0:
        return {}
    return {e + k: c * v for e, v in a.items()}


def pconj(a):
    """Substitute t -> t^-1 (negate every exponent)."""
    return {-e: v for e, v in a.items()}


def padd_mod(a, b, p):
    out = dict(a)
    for k, c in b.items():
        s = (out.get(k, 0) + c) % p
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def pmul_mod(a, b, p):
    if not a or not b:
        return {}
    if len(a) > len(b):
        a, b = b, a
    out = {}
    for ka, ca in a.items():
        for kb, cb in b.items():
            k = ka + kb
            s = (out.get(k, 0) + ca * cb) % p
            if s:
                out[k] = s
            elif k in out:
                del out[k]
    return out


def pscale_mod(a, c, k, p):
    c %= p
    if not a or c == 0:
        return {}
    out = {}
    for e, v in a.items():
        s = (c * v) % p
        if s:
            out[e + k] = s
    return out


def vadd_scaled(a, b, c, k):
    """a + c * t^k * b for (position, exponent)-keyed vectors."""
    out = dict(a)
    for (pos, e), v in b.items():
        key = (pos, e + k)
        s = out.get(key, 0) + c * v
        if s:
            out[key] = s
        else:
            out.pop(key, None)
    return out


def vscale(a, c, k):
    """c * t^k * a for (position, exponent)-keyed vectors."""
    if c == 0:
        return {}
    return {(pos, e + k): c * v for (pos, e), v in a.items()}
