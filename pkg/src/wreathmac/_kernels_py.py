"""Pure-Python arithmetic kernels for sparse bivariate (Laurent) polynomials.

A polynomial is a dict mapping exponent pairs ``(a, b)`` to nonzero integer
coefficients.  The gcd machinery works on a dense recursive representation:
an element of Z[z][w] is a list indexed by the w-degree whose entries are
little-endian int lists (elements of Z[z]); trailing zeros are trimmed at
both levels and the zero polynomial is the empty list.

The compiled twin of this module is ``_kernels.pyx``; both expose the same
functions and are selected in ``kernels.py``.
"""

from math import gcd as _igcd


# ---------------------------------------------------------------------------
# sparse dict kernels

def pmul(a, b):
    """Multiply two sparse exponent-dict polynomials."""
    if not a or not b:
        return {}
    if len(a) > len(b):
        a, b = b, a
    out = {}
    for (xa, ya), ca in a.items():
        for (xb, yb), cb in b.items():
            key = (xa + xb, ya + yb)
            v = out.get(key)
            if v is None:
                out[key] = ca * cb
            else:
                v = v + ca * cb
                if v:
                    out[key] = v
                else:
                    del out[key]
    return out


def padd(a, b):
    out = dict(a)
    for key, c in b.items():
        v = out.get(key)
        if v is None:
            out[key] = c
        else:
            v = v + c
            if v:
                out[key] = v
            else:
                del out[key]
    return out


def pscale(a, c):
    if not c:
        return {}
    return {key: v * c for key, v in a.items()}


# ---------------------------------------------------------------------------
# univariate helpers (little-endian int lists over Z)

def utrim(a):
    n = len(a)
    while n and not a[n - 1]:
        n -= 1
    del a[n:]
    return a


def umul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return utrim(out)


def uadd(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, bi in enumerate(b):
        out[i] += bi
    return utrim(out)


def uscale(a, c):
    if not c:
        return []
    return [ai * c for ai in a]


def ucontent(a):
    g = 0
    for ai in a:
        if ai:
            g = _igcd(g, ai if ai > 0 else -ai)
            if g == 1:
                return 1
    return g


def udivexact_int(a, c):
    """Divide every coefficient by the integer c (must be exact)."""
    if c == 1:
        return list(a)
    out = []
    for ai in a:
        q, r = divmod(ai, c)
        if r:
            raise ArithmeticError("non-exact integer division in kernel")
        out.append(q)
    return out


def udivexact(a, b):
    """Exact division in Z[z]; raises if b does not divide a."""
    if not b:
        raise ZeroDivisionError("univariate division by zero")
    if not a:
        return []
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    da = len(a) - 1
    if da < db:
        raise ArithmeticError("non-exact univariate division")
    out = [0] * (da - db + 1)
    for k in range(da - db, -1, -1):
        c = a[k + db]
        if c:
            q, r = divmod(c, lb)
            if r:
                raise ArithmeticError("non-exact univariate division")
            out[k] = q
            for j in range(db + 1):
                a[k + j] -= q * b[j]
    if any(a):
        raise ArithmeticError("non-exact univariate division")
    return utrim(out)


def ugcd(a, b):
    """Primitive-PRS gcd in Z[z], normalized to positive leading coefficient."""
    a = utrim(list(a))
    b = utrim(list(b))
    if not a:
        return _upos(b)
    if not b:
        return _upos(a)
    ca, cb = ucontent(a), ucontent(b)
    c = _igcd(ca, cb)
    a = udivexact_int(a, ca)
    b = udivexact_int(b, cb)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _uprem(a, b)
        a, b = b, r
        if b:
            cb = ucontent(b)
            b = udivexact_int(b, cb)
    if len(a) == 1:
        return [c]
    return uscale(_upos(a), c)


def _upos(a):
    return [-x for x in a] if a and a[-1] < 0 else list(a)


def _uprem(a, b):
    """Pseudo-remainder of a by b in Z[z] (b nonzero, deg a >= deg b)."""
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    while True:
        utrim(a)
        da = len(a) - 1
        if not a or da < db:
            return a
        la = a[-1]
        # lb*a - la*z^(da-db)*b kills the leading term
        for i in range(da):
            a[i] *= lb
        a[-1] = 0
        for j in range(db):
            a[da - db + j] -= la * b[j]


# ---------------------------------------------------------------------------
# bivariate recursive representation: list (w-degree) of Z[z] int lists

def btrim(A):
    n = len(A)
    while n and not A[n - 1]:
        n -= 1
    del A[n:]
    return A


def bmul(A, B):
    if not A or not B:
        return []
    out = [[] for _ in range(len(A) + len(B) - 1)]
    for i, ai in enumerate(A):
        if ai:
            for j, bj in enumerate(B):
                if bj:
                    out[i + j] = uadd(out[i + j], umul(ai, bj))
    return btrim(out)


def bscale_u(A, c):
    """Multiply by an element of Z[z]."""
    if not c:
        return []
    return btrim([umul(ai, c) for ai in A])


def bcontent(A):
    """Content of A in Z[z] (gcd of all w-coefficients)."""
    g = []
    for ai in A:
        if ai:
            g = ugcd(g, ai)
            if g == [1]:
                return g
    return g


def bdivexact_u(A, c):
    """Divide by an element of Z[z] (must divide every coefficient)."""
    if c == [1]:
        return [list(ai) for ai in A]
    return [udivexact(ai, c) if ai else [] for ai in A]


def bdivexact(A, B):
    """Exact division in Z[z][w]; raises if B does not divide A."""
    if not B:
        raise ZeroDivisionError("bivariate division by zero")
    if not A:
        return []
    A = [list(ai) for ai in A]
    db = len(B) - 1
    lb = B[-1]
    da = len(A) - 1
    if da < db:
        raise ArithmeticError("non-exact bivariate division")
    out = [[] for _ in range(da - db + 1)]
    for k in range(da - db, -1, -1):
        c = A[k + db]
        if c:
            q = udivexact(c, lb)
            out[k] = q
            for j in range(db + 1):
                if B[j]:
                    A[k + j] = uadd(A[k + j], uscale(umul(q, B[j]), -1))
    if any(A):
        raise ArithmeticError("non-exact bivariate division")
    return btrim(out)


def _bprem(A, B):
    """Pseudo-remainder of A by B in Z[z][w]: lc(B)^(deg A - deg B + 1) A mod B."""
    A = [list(ai) for ai in A]
    db = len(B) - 1
    lb = B[-1]
    e = len(A) - 1 - db + 1
    while True:
        btrim(A)
        da = len(A) - 1
        if not A or da < db:
            break
        la = A[-1]
        for i in range(da):
            A[i] = umul(A[i], lb)
        A[-1] = []
        for j in range(db):
            if B[j]:
                A[da - db + j] = uadd(A[da - db + j], uscale(umul(la, B[j]), -1))
        e -= 1
    for _ in range(e):
        A = [umul(ai, lb) for ai in A]
    return A


def bgcd(A, B):
    """Subresultant-PRS gcd in Z[z][w], primitive-part based."""
    A = btrim([utrim(list(ai)) for ai in A])
    B = btrim([utrim(list(ai)) for ai in B])
    if not A:
        return B
    if not B:
        return A
    ca, cb = bcontent(A), bcontent(B)
    c = ugcd(ca, cb)
    A = bdivexact_u(A, ca)
    B = bdivexact_u(B, cb)
    if len(A) < len(B):
        A, B = B, A
    g = [1]
    h = [1]
    while True:
        d = len(A) - len(B)
        R = _bprem(A, B)
        if not R:
            result = bdivexact_u(B, bcontent(B))
            break
        if len(R) == 1:
            result = [[1]]
            break
        A, B = B, bdivexact_u(R, umul(g, _upow(h, d)))
        g = A[-1]
        if d > 0:
            h = udivexact(_upow(g, d), _upow(h, d - 1))
    return bscale_u(result, c)


def _upow(a, n):
    out = [1]
    for _ in range(n):
        out = umul(out, a)
    return out
