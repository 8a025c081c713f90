"""Pure-Python integer kernels.

All vectors are tuples of Python ints in a scaled coordinate system where the
simple roots are integral and every reflection coefficient
``2<v, a> / <a, a>`` is an integer.  The compiled module ``_kernels`` exposes
the same functions with the same semantics.
"""

from __future__ import annotations


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def _coeff(ip, norm):
    c, rem = divmod(2 * ip, norm)
    if rem:
        raise ValueError("non-integral reflection coefficient")
    return c


def reduce_dominant(v, simple, norms):
    """Reflect ``v`` into the closed dominant chamber.

    Returns ``(dominant, n_reflections, singular)``.
    """
    v = list(v)
    nrefl = 0
    changed = True
    while changed:
        changed = False
        for a, n in zip(simple, norms):
            ip = _dot(v, a)
            if ip < 0:
                c = _coeff(ip, n)
                for j, aj in enumerate(a):
                    v[j] -= c * aj
                nrefl += 1
                changed = True
    singular = any(_dot(v, a) == 0 for a in simple)
    return tuple(v), nrefl, singular


def orbit(v, simple, norms):
    """Weyl orbit of ``v`` as a list (order unspecified)."""
    v = tuple(v)
    seen = {v}
    stack = [v]
    while stack:
        x = stack.pop()
        for a, n in zip(simple, norms):
            ip = _dot(x, a)
            if ip:
                c = _coeff(ip, n)
                y = tuple(xj - c * aj for xj, aj in zip(x, a))
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
    return list(seen)


def dominant_weights(lam, positive, simple):
    """Dominant weights of the irreducible module with highest weight ``lam``."""
    lam = tuple(lam)
    seen = {lam}
    stack = [lam]
    while stack:
        x = stack.pop()
        for b in positive:
            y = tuple(xj - bj for xj, bj in zip(x, b))
            if y in seen:
                continue
            if all(_dot(y, a) >= 0 for a in simple):
                seen.add(y)
                stack.append(y)
    return list(seen)


def freudenthal(lam, rho, positive, simple, norms):
    """Multiplicities of the dominant weights of V(lam) by Freudenthal's recursion."""
    lam = tuple(lam)
    doms = dominant_weights(lam, positive, simple)
    doms.sort(key=lambda mu: _dot([l - m for l, m in zip(lam, mu)], rho))
    lr = [l + r for l, r in zip(lam, rho)]
    top = _dot(lr, lr)
    mults = {}
    for mu in doms:
        if mu == lam:
            mults[mu] = 1
            continue
        num = 0
        for b in positive:
            nu = list(mu)
            while True:
                for j, bj in enumerate(b):
                    nu[j] += bj
                d, _, _ = reduce_dominant(nu, simple, norms)
                m = mults.get(d)
                if m is None:
                    break
                num += m * _dot(nu, b)
        mr = [m + r for m, r in zip(mu, rho)]
        den = top - _dot(mr, mr)
        q, rem = divmod(2 * num, den)
        if rem:
            raise ArithmeticError(f"non-integral multiplicity at {mu}")
        mults[mu] = q
    return mults


def klimyk(shift, weights, rho, simple, norms):
    """Signed accumulation of ``dominant(shift + nu) - rho`` over ``(nu, mult)`` pairs.

    ``shift`` is the other factor's highest weight plus rho.
    """
    acc = {}
    for nu, m in weights:
        x = [s + n for s, n in zip(shift, nu)]
        d, nrefl, singular = reduce_dominant(x, simple, norms)
        if singular:
            continue
        key = tuple(dj - rj for dj, rj in zip(d, rho))
        acc[key] = acc.get(key, 0) + (-m if nrefl & 1 else m)
    return acc
