# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled integer polynomial kernels (same contract as _pykernels).

Coefficients stay Python ints (arbitrary precision); the gain comes from
typed loop indices and list access without interpreter dispatch.
"""

from math import gcd


cpdef tuple ptrim(a):
    cdef Py_ssize_t n = len(a)
    while n and a[n - 1] == 0:
        n -= 1
    return tuple(a[:n])


cpdef tuple padd(tuple a, tuple b):
    cdef Py_ssize_t i, nb
    cdef list out
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    nb = len(b)
    for i in range(nb):
        out[i] = out[i] + b[i]
    return ptrim(out)


cpdef tuple psub(tuple a, tuple b):
    cdef Py_ssize_t i, na = len(a), nb = len(b)
    cdef list out = list(a)
    if nb > na:
        out.extend([0] * (nb - na))
    for i in range(nb):
        out[i] = out[i] - b[i]
    return ptrim(out)


cpdef tuple pneg(tuple a):
    return tuple([-c for c in a])


cpdef tuple pscale(tuple a, k):
    if k == 0:
        return ()
    return tuple([c * k for c in a])


cpdef tuple pmul(tuple a, tuple b):
    cdef Py_ssize_t i, j, na = len(a), nb = len(b)
    cdef list out
    if na == 0 or nb == 0:
        return ()
    if na == 1:
        return pscale(b, a[0])
    if nb == 1:
        return pscale(a, b[0])
    out = [0] * (na + nb - 1)
    for i in range(na):
        x = a[i]
        if x:
            for j in range(nb):
                out[i + j] = out[i + j] + x * b[j]
    return ptrim(out)


cpdef pcontent(tuple a):
    g = 0
    for c in a:
        g = gcd(g, c)
        if g == 1:
            break
    return g


cpdef Py_ssize_t pval(tuple a):
    cdef Py_ssize_t i
    for i in range(len(a)):
        if a[i]:
            return i
    return 0


cpdef tuple pdivexact(tuple a, tuple b):
    cdef Py_ssize_t i, j, db, qlen
    cdef list rem, quo
    if len(b) == 0:
        raise ZeroDivisionError("polynomial division by zero")
    if len(a) == 0:
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
            for j in range(db + 1):
                rem[i + j] = rem[i + j] - t * b[j]
    for c in rem:
        if c:
            raise ArithmeticError("inexact polynomial division")
    return ptrim(quo)


cdef tuple _pprem(tuple a, tuple b):
    cdef Py_ssize_t db = len(b) - 1, shift, j
    cdef list rem = list(a)
    lb = b[db]
    while rem and len(rem) - 1 >= db:
        shift = len(rem) - 1 - db
        lc = rem[len(rem) - 1]
        rem = [c * lb for c in rem]
        for j in range(db + 1):
            rem[shift + j] = rem[shift + j] - lc * b[j]
        rem = list(ptrim(rem))
    return tuple(rem)


cdef tuple _primitive(tuple a):
    c = pcontent(a)
    if c == 0:
        return ()
    if a[len(a) - 1] < 0:
        c = -c
    return tuple([x // c for x in a])


cpdef tuple pgcd(tuple a, tuple b):
    cdef Py_ssize_t va, vb, v
    if len(a) == 0:
        return _primitive(b)
    if len(b) == 0:
        return _primitive(a)
    va = pval(a)
    vb = pval(b)
    v = va if va < vb else vb
    a = a[va:]
    b = b[vb:]
    if len(a) == 1 or len(b) == 1:
        return (0,) * v + (1,)
    a = _primitive(a)
    b = _primitive(b)
    if len(a) < len(b):
        a, b = b, a
    while len(b):
        r = _pprem(a, b)
        a, b = b, (_primitive(r) if len(r) else ())
        if len(b) == 1:
            return (0,) * v + (1,)
    return (0,) * v + _primitive(a)


cpdef peval(tuple a, x):
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc
