# cython: language_level=3
"""Compiled twin of ``_purekernel``.

Coefficients stay Python objects (arbitrary precision is required
everywhere), so the win over the pure kernel is loop and dict-protocol
overhead, not numeric conversion.  Semantics must match ``_purekernel``
exactly; the parity test suite compares the two on random inputs.
"""

IMPLEMENTATION = "compiled"


def padd(dict a, dict b):
    """a + b for exponent dicts."""
    cdef dict out = dict(a)
    for k, c in b.items():
        s = out.get(k, 0) + c
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def psub(dict a, dict b):
    """a - b for exponent dicts."""
    cdef dict out = dict(a)
    for k, c in b.items():
        s = out.get(k, 0) - c
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def pneg(dict a):
    """-a for exponent dicts."""
    cdef dict out = {}
    for k, c in a.items():
        out[k] = -c
    return out


def pmul(dict a, dict b):
    """a * b for exponent dicts (convolution on exponents)."""
    if not a or not b:
        return {}
    if len(a) > len(b):
        a, b = b, a
    cdef dict out = {}
    for ka, ca in a.items():
        for kb, cb in b.items():
            k = ka + kb
            s = out.get(k, 0) + ca * cb
            if s:
                out[k] = s
            elif k in out:
                del out[k]
    return out


def pscale(dict a, c, k):
    """c * t^k * a for exponent dicts; c must be nonzero (or a empty)."""
    if not a:
        return {}
    if c == 0:
        return {}
    cdef dict out = {}
    for e, v in a.items():
        out[e + k] = c * v
    return out


def pconj(dict a):
    """Substitute t -> t^-1 (negate every exponent)."""
    cdef dict out = {}
    for e, v in a.items():
        out[-e] = v
    return out


def padd_mod(dict a, dict b, p):
    cdef dict out = dict(a)
    for k, c in b.items():
        s = (out.get(k, 0) + c) % p
        if s:
            out[k] = s
        else:
            out.pop(k, None)
    return out


def pmul_mod(dict a, dict b, p):
    if not a or not b:
        return {}
    if len(a) > len(b):
        a, b = b, a
    cdef dict out = {}
    for ka, ca in a.items():
        for kb, cb in b.items():
            k = ka + kb
            s = (out.get(k, 0) + ca * cb) % p
            if s:
                out[k] = s
            elif k in out:
                del out[k]
    return out


def pscale_mod(dict a, c, k, p):
    c = c % p
    if not a or c == 0:
        return {}
    cdef dict out = {}
    for e, v in a.items():
        s = (c * v) % p
        if s:
            out[e + k] = s
    return out


def vadd_scaled(dict a, dict b, c, k):
    """a + c * t^k * b for (position, exponent)-keyed vectors."""
    cdef dict out = dict(a)
    for key0, v in b.items():
        key = (key0[0], key0[1] + k)
        s = out.get(key, 0) + c * v
        if s:
            out[key] = s
        else:
            out.pop(key, None)
    return out


def vscale(dict a, c, k):
    """c * t^k * a for (position, exponent)-keyed vectors."""
    if c == 0:
        return {}
    cdef dict out = {}
    for key0, v in a.items():
        out[(key0[0], key0[1] + k)] = c * v
    return out
