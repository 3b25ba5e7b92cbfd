"""Dense univariate polynomials over F_p.

A polynomial is a tuple of canonical residues, lowest degree first, with no
trailing zeros; the zero polynomial is the empty tuple.
"""

from __future__ import annotations

from typing import Iterable, Sequence

Poly = tuple


def norm(coeffs: Iterable[int], p: int) -> Poly:
    c = [x % p for x in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def degree(f: Poly) -> int:
    return len(f) - 1


def add(f: Poly, g: Poly, p: int) -> Poly:
    n = max(len(f), len(g))
    return norm(
        ((f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0) for i in range(n)), p
    )


def sub(f: Poly, g: Poly, p: int) -> Poly:
    n = max(len(f), len(g))
    return norm(
        ((f[i] if i < len(f) else 0) - (g[i] if i < len(g) else 0) for i in range(n)), p
    )


def scale(f: Poly, c: int, p: int) -> Poly:
    return norm((a * c for a in f), p)


def mul(f: Poly, g: Poly, p: int) -> Poly:
    if not f or not g:
        return ()
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return norm(out, p)


def divmod_(f: Poly, g: Poly, p: int) -> tuple[Poly, Poly]:
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(f)
    dg = len(g) - 1
    if len(r) <= dg:
        return (), tuple(r)
    inv_lead = pow(g[-1], -1, p)
    q = [0] * (len(r) - dg)
    for k in range(len(r) - 1, dg - 1, -1):
        c = r[k] * inv_lead % p
        if c:
            q[k - dg] = c
            for j in range(dg + 1):
                r[k - dg + j] = (r[k - dg + j] - c * g[j]) % p
    return norm(q, p), norm(r[:dg], p)


def rem(f: Poly, g: Poly, p: int) -> Poly:
    return divmod_(f, g, p)[1]


def monic(f: Poly, p: int) -> Poly:
    if not f:
        return f
    return scale(f, pow(f[-1], -1, p), p)


def gcd(f: Poly, g: Poly, p: int) -> Poly:
    """Monic gcd; gcd(0, 0) = 0."""
    while g:
        f, g = g, rem(f, g, p)
    return monic(f, p)


def derivative(f: Poly, p: int) -> Poly:
    return norm((i * f[i] for i in range(1, len(f))), p)


def evaluate(f: Poly, x: int, p: int) -> int:
    acc = 0
    for c in reversed(f):
        acc = (acc * x + c) % p
    return acc


def powmod(f: Poly, e: int, m: Poly, p: int) -> Poly:
    result: Poly = (1,)
    base = rem(f, m, p)
    while e:
        if e & 1:
            result = rem(mul(result, base, p), m, p)
        e >>= 1
        if e:
            base = rem(mul(base, base, p), m, p)
    return rem(result, m, p)


def resultant(f: Poly, g: Poly, p: int) -> int:
    """Res(f, g) by the Euclidean algorithm."""
    if not f or not g:
        return 0
    res = 1
    while True:
        m, n = len(f) - 1, len(g) - 1
        if n == 0:
            return res * pow(g[0], m, p) % p
        r = rem(f, g, p)
        if not r:
            return 0
        k = len(r) - 1
        # Res(f, g) = (-1)^{mn} lc(g)^{m-k} Res(g, r)
        if m * n % 2:
            res = -res
        res = res * pow(g[-1], m - k, p) % p
        f, g = g, r


def discriminant(f: Poly, p: int) -> int:
    """Disc(f) = (-1)^{n(n-1)/2} Res(f, f') / lc(f)."""
    n = len(f) - 1
    r = resultant(f, derivative(f, p), p)
    if (n * (n - 1) // 2) % 2:
        r = -r
    return r * pow(f[-1], -1, p) % p


def _split(f: Poly, p: int, out: list[int]) -> None:
    # f is monic, squarefree and a product of distinct linear factors
    d = len(f) - 1
    if d == 0:
        return
    if d == 1:
        out.append((-f[0]) % p)
        return
    half = (p - 1) // 2
    shift = 0
    while True:
        h = powmod((shift, 1), half, f, p)
        g = gcd(f, sub(h, (1,), p), p)
        if 0 < len(g) - 1 < d:
            _split(g, p, out)
            _split(divmod_(f, g, p)[0], p, out)
            return
        shift += 1


def distinct_roots(f: Poly, p: int) -> list[int]:
    """Distinct roots of f in F_p, ascending."""
    f = monic(norm(f, p), p)
    if not f:
        raise ValueError("the zero polynomial has every element as a root")
    if len(f) == 1:
        return []
    xp = powmod((0, 1), p, f, p)
    g = gcd(f, sub(xp, (0, 1), p), p)
    out: list[int] = []
    _split(g, p, out)
    return sorted(out)


def roots(f: Poly, p: int) -> list[int]:
    """Roots of f in F_p with multiplicity, ascending."""
    f = norm(f, p)
    out = []
    for r in distinct_roots(f, p):
        q = f
        lin = ((-r) % p, 1)
        while True:
            quo, re = divmod_(q, lin, p)
            if re:
                break
            out.append(r)
            q = quo
    return out


def factor_degrees(f: Poly, p: int) -> tuple[int, ...]:
    """Degrees of the irreducible factors of a squarefree f, ascending.

    Distinct-degree factorization; each degree-d block contributes
    deg(block) / d factors.
    """
    f = monic(norm(f, p), p)
    degs: list[int] = []
    x: Poly = (0, 1)
    h = x
    d = 0
    while len(f) - 1 >= 2 * (d + 1):
        d += 1
        h = powmod(h, p, f, p)
        g = gcd(f, sub(h, x, p), p)
        if len(g) > 1:
            degs.extend([d] * ((len(g) - 1) // d))
            f = divmod_(f, g, p)[0]
            h = rem(h, f, p)
    if len(f) > 1:
        degs.append(len(f) - 1)
    return tuple(sorted(degs))


def from_roots(rs: Sequence[int], p: int) -> Poly:
    f: Poly = (1,)
    for r in rs:
        f = mul(f, ((-r) % p, 1), p)
    return f
