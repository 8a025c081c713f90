# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled integer kernels; same contract as ``_kernels_py``.

Coordinates live in C ``long long``.  The dispatcher only routes inputs here
whose magnitudes keep every inner product far from overflow.
"""

from libc.stdlib cimport malloc, free


cdef long long* _flat(rows, int n) except NULL:
    cdef int r = len(rows)
    cdef long long* out = <long long*> malloc((r * n + 1) * sizeof(long long))
    if out == NULL:
        raise MemoryError()
    cdef int i, j
    for i in range(r):
        row = rows[i]
        for j in range(n):
            out[i * n + j] = row[j]
    return out


cdef inline long long _dot(const long long* a, const long long* b, int n) noexcept nogil:
    cdef long long s = 0
    cdef int j
    for j in range(n):
        s += a[j] * b[j]
    return s


cdef int _reduce(long long* v, const long long* simple, const long long* norms,
                 int r, int n, long long* nrefl) except -1:
    cdef int i, j
    cdef bint changed = True
    cdef long long ip, c
    while changed:
        changed = False
        for i in range(r):
            ip = _dot(v, simple + i * n, n)
            if ip < 0:
                if (2 * ip) % norms[i] != 0:
                    raise ValueError("non-integral reflection coefficient")
                c = (2 * ip) // norms[i]
                for j in range(n):
                    v[j] -= c * simple[i * n + j]
                nrefl[0] += 1
                changed = True
    return 0


cdef bint _singular(const long long* v, const long long* simple, int r, int n) noexcept nogil:
    cdef int i
    for i in range(r):
        if _dot(v, simple + i * n, n) == 0:
            return True
    return False


cdef bint _is_dominant(const long long* v, const long long* simple, int r, int n) noexcept nogil:
    cdef int i
    for i in range(r):
        if _dot(v, simple + i * n, n) < 0:
            return False
    return True


cdef tuple _as_tuple(const long long* v, int n):
    return tuple([v[j] for j in range(n)])


def reduce_dominant(v, simple, norms):
    cdef int n = len(v)
    cdef int r = len(simple)
    cdef long long nrefl = 0
    cdef long long* cv = _flat([v], n)
    cdef long long* cs = _flat(simple, n)
    cdef long long* cn = _flat([norms], r)
    try:
        _reduce(cv, cs, cn, r, n, &nrefl)
        return _as_tuple(cv, n), nrefl, _singular(cv, cs, r, n)
    finally:
        free(cv)
        free(cs)
        free(cn)


def orbit(v, simple, norms):
    cdef int n = len(v)
    cdef int r = len(simple)
    cdef int i, j
    cdef long long ip, c
    cdef long long* cs = _flat(simple, n)
    cdef long long* cn = _flat([norms], r)
    cdef long long* x = <long long*> malloc((n + 1) * sizeof(long long))
    cdef long long* y = <long long*> malloc((n + 1) * sizeof(long long))
    start = tuple(v)
    seen = {start}
    stack = [start]
    try:
        while stack:
            t = stack.pop()
            for j in range(n):
                x[j] = t[j]
            for i in range(r):
                ip = _dot(x, cs + i * n, n)
                if ip == 0:
                    continue
                if (2 * ip) % cn[i] != 0:
                    raise ValueError("non-integral reflection coefficient")
                c = (2 * ip) // cn[i]
                for j in range(n):
                    y[j] = x[j] - c * cs[i * n + j]
                u = _as_tuple(y, n)
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        return list(seen)
    finally:
        free(cs)
        free(cn)
        free(x)
        free(y)


def dominant_weights(lam, positive, simple):
    cdef int n = len(lam)
    cdef int p = len(positive)
    cdef int r = len(simple)
    cdef int i, j
    cdef long long* cp = _flat(positive, n)
    cdef long long* cs = _flat(simple, n)
    cdef long long* y = <long long*> malloc((n + 1) * sizeof(long long))
    start = tuple(lam)
    seen = {start}
    stack = [start]
    try:
        while stack:
            t = stack.pop()
            for i in range(p):
                for j in range(n):
                    y[j] = <long long> t[j] - cp[i * n + j]
                if not _is_dominant(y, cs, r, n):
                    continue
                u = _as_tuple(y, n)
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        return list(seen)
    finally:
        free(cp)
        free(cs)
        free(y)


def freudenthal(lam, rho, positive, simple, norms):
    cdef int n = len(lam)
    cdef int p = len(positive)
    cdef int r = len(simple)
    cdef int i, j
    cdef long long nrefl, top, den, ip
    cdef long long* cp = _flat(positive, n)
    cdef long long* cs = _flat(simple, n)
    cdef long long* cn = _flat([norms], r)
    cdef long long* crho = _flat([rho], n)
    cdef long long* nu = <long long*> malloc((n + 1) * sizeof(long long))
    cdef long long* d = <long long*> malloc((n + 1) * sizeof(long long))
    cdef long long* lr = <long long*> malloc((n + 1) * sizeof(long long))
    lam = tuple(lam)
    try:
        doms = dominant_weights(lam, positive, simple)
        doms.sort(key=lambda mu: sum((lam[k] - mu[k]) * rho[k] for k in range(n)))
        for j in range(n):
            lr[j] = lam[j] + crho[j]
        top = _dot(lr, lr, n)
        mults = {}
        for mu in doms:
            if mu == lam:
                mults[mu] = 1
                continue
            num = 0
            for i in range(p):
                for j in range(n):
                    nu[j] = mu[j]
                while True:
                    for j in range(n):
                        nu[j] += cp[i * n + j]
                        d[j] = nu[j]
                    nrefl = 0
                    _reduce(d, cs, cn, r, n, &nrefl)
                    m = mults.get(_as_tuple(d, n))
                    if m is None:
                        break
                    ip = _dot(nu, cp + i * n, n)
                    num += m * ip
            for j in range(n):
                lr[j] = <long long> mu[j] + crho[j]
            den = top - _dot(lr, lr, n)
            q, rem = divmod(2 * num, den)
            if rem:
                raise ArithmeticError(f"non-integral multiplicity at {mu}")
            mults[mu] = q
        return mults
    finally:
        free(cp)
        free(cs)
        free(cn)
        free(crho)
        free(nu)
        free(d)
        free(lr)


def klimyk(shift, weights, rho, simple, norms):
    cdef int n = len(shift)
    cdef int r = len(simple)
    cdef int j
    cdef long long nrefl
    cdef long long* cs = _flat(simple, n)
    cdef long long* cn = _flat([norms], r)
    cdef long long* csh = _flat([shift], n)
    cdef long long* crho = _flat([rho], n)
    cdef long long* x = <long long*> malloc((n + 1) * sizeof(long long))
    acc = {}
    try:
        for nu, m in weights:
            for j in range(n):
                x[j] = csh[j] + <long long> nu[j]
            nrefl = 0
            _reduce(x, cs, cn, r, n, &nrefl)
            if _singular(x, cs, r, n):
                continue
            for j in range(n):
                x[j] -= crho[j]
            key = _as_tuple(x, n)
            acc[key] = acc.get(key, 0) + (-m if nrefl & 1 else m)
        return acc
    finally:
        free(cs)
        free(cn)
        free(csh)
        free(crho)
        free(x)
