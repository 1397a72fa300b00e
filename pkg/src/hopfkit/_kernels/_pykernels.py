"""Pure-Python integer polynomial kernels.

Polynomials are tuples of ints, lowest degree first, with no trailing
zeros; ``()`` is the zero polynomial.
"""

from math import gcd


def ptrim(a):
    n = len(a)
    while n and a[n - 1] == 0:
        n -= 1
    return tuple(a[:n])


def padd(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return ptrim(out)


def psub(a, b):
    out = list(a) + [0] * (len(b) - len(a))
    for i, c in enumerate(b):
        out[i] -= c
    return ptrim(out)


def pneg(a):
    return tuple(-c for c in a)


def pscale(a, k):
    if k == 0:
        return ()
    return tuple(c * k for c in a)


def pmul(a, b):
    if not a or not b:
        return ()
    if len(a) == 1:
        return pscale(b, a[0])
    if len(b) == 1:
        return pscale(a, b[0])
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return ptrim(out)


def pcontent(a):
    g = 0
    for c in a:
        g = gcd(g, c)
        if g == 1:
            break
    return g


def pval(a):
    """Lowest exponent with a nonzero coefficient."""
    for i, c in enumerate(a):
        if c:
            return i
    return 0


def pdivexact(a, b):
    """Exact quotient a / b over Z[q]; raises ArithmeticError if inexact."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if not a:
        return ()
    db = len(b) - 1
    lb = b[db]
    rem = list(a)
    qlen = len(a) - db
    if qlen <= 0:
        raise ArithmeticError("inexact polynomial division")
    quo = [0] * qlen
    for i in range(qlen - 1, -1, -1):
        c = rem[i + db]
        if c:
            t, r = divmod(c, lb)
            if r:
                raise ArithmeticError("inexact polynomial division")
            quo[i] = t
            for j, y in enumerate(b):
                rem[i + j] -= t * y
    if any(rem):
        raise ArithmeticError("inexact polynomial division")
    return ptrim(quo)


def _pprem(a, b):
    # pseudo-remainder of a by b
    rem = list(a)
    db = len(b) - 1
    lb = b[db]
    while len(rem) - 1 >= db and rem:
        shift = len(rem) - 1 - db
        lc = rem[-1]
        rem = [c * lb for c in rem]
        for j, y in enumerate(b):
            rem[shift + j] -= lc * y
        rem = list(ptrim(rem))
    return tuple(rem)


def _primitive(a):
    c = pcontent(a)
    if c == 0:
        return ()
    if a[-1] < 0:
        c = -c
    return tuple(x // c for x in a)


def pgcd(a, b):
    """Primitive gcd of a and b in Z[q], positive leading coefficient.

    The integer content is not included.
    """
    if not a:
        return _primitive(b)
    if not b:
        return _primitive(a)
    va, vb = pval(a), pval(b)
    v = min(va, vb)
    a = a[va:]
    b = b[vb:]
    if len(a) == 1 or len(b) == 1:
        return (0,) * v + (1,)
    a = _primitive(a)
    b = _primitive(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _pprem(a, b)
        a, b = b, _primitive(r) if r else ()
        if len(b) == 1:
            return (0,) * v + (1,)
    return (0,) * v + _primitive(a)


def peval(a, x):
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc
