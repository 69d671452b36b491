"""Partitions, omega indices, symmetric polynomials, and basis transitions.

An omega index is a tuple (i_1, i_2, ...) counting how many parts of the
matching partition equal 1, 2, ...; its weight is sum l*i_l. We keep omega
tuples trimmed of trailing zeros so they double as cobordism exponent keys.
"""

from functools import lru_cache
from itertools import permutations

from .exactalg import MultiPoly, exact_div, xvars


def trim(omega):
    omega = tuple(omega)
    while omega and omega[-1] == 0:
        omega = omega[:-1]
    return omega


def omega_weight(omega):
    return sum((l + 1) * m for l, m in enumerate(omega))


def omega_parts(omega):
    return sum(omega)


def omega_to_partition(omega, n=None):
    """Partition with i_k parts equal to k, weakly decreasing, padded to n."""
    parts = []
    for l in range(len(omega) - 1, -1, -1):
        parts.extend([l + 1] * omega[l])
    if n is not None:
        if len(parts) > n:
            raise ValueError("omega has more parts than arity %d" % n)
        parts.extend([0] * (n - len(parts)))
    return tuple(parts)


def partition_to_omega(lam):
    m = max(lam, default=0)
    omega = [0] * m
    for p in lam:
        if p:
            omega[p - 1] += 1
    return tuple(omega)


def partitions(n, max_part=None):
    """All partitions of n as weakly decreasing tuples."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def omegas_of_weight(w):
    """All trimmed omega tuples of the given weight, sorted."""
    return sorted(partition_to_omega(lam) for lam in partitions(w))


def omegas_up_to(w):
    out = []
    for k in range(w + 1):
        out.extend(omegas_of_weight(k))
    return out


def conjugate_partition(lam):
    lam = [p for p in lam if p]
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p >= k) for k in range(1, lam[0] + 1))


def perm_sign(perm):
    s = 1
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                s = -s
    return s


def orbit_monomial(xi, n, arena=None):
    """Sum of the distinct S_n-orbit of the monomial u^xi."""
    if len(xi) != n:
        raise ValueError("exponent vector length %d != arity %d" % (len(xi), n))
    if arena is None:
        arena = xvars(n)
    seen = {tuple(xi[i] for i in perm) for perm in permutations(range(n))}
    return MultiPoly(arena, {e: 1 for e in seen})


def monomial_sym(lam, n, arena=None):
    """m_lambda in n variables."""
    lam = tuple(lam) + (0,) * (n - len(lam))
    return orbit_monomial(lam, n, arena)


def elementary(k, n, arena=None):
    if arena is None:
        arena = xvars(n)
    if k == 0:
        return MultiPoly.const(arena, 1)
    if k > n:
        return MultiPoly(arena)
    return orbit_monomial((1,) * k + (0,) * (n - k), n, arena)


def newton_power(k, n, arena=None):
    return orbit_monomial((k,) + (0,) * (n - 1), n, arena)


def antisymmetrize(p):
    """Sum of sign(sigma) * sigma(p) over the full symmetric group of the arena."""
    n = p.arena.arity
    total = MultiPoly(p.arena)
    for perm in permutations(range(n)):
        total = total + p.permute(perm) * perm_sign(perm)
    return total


def vandermonde(arena):
    n = arena.arity
    v = MultiPoly.const(arena, 1)
    for i in range(n):
        for j in range(i + 1, n):
            v = v * (MultiPoly.variable(arena, i) - MultiPoly.variable(arena, j))
    return v


def schur(lam, n, arena=None):
    """Sh_lambda as the bialternant antisym(x^(lam+delta)) / Delta_n."""
    if arena is None:
        arena = xvars(n)
    lam = tuple(lam) + (0,) * (n - len(lam))
    if len(lam) > n:
        raise ValueError("partition longer than arity")
    delta = tuple(range(n - 1, -1, -1))
    mono = MultiPoly.monomial(arena, tuple(l + d for l, d in zip(lam, delta)))
    return exact_div(antisymmetrize(mono), vandermonde(arena))


def f_omega_decomposition(n, nmax, arena=None):
    """Coefficients f_omega of a^omega in prod_i (1 + sum_k a_k t_i^k).

    Returns a dict from trimmed omega (1 <= weight <= nmax) to a MultiPoly
    in t_1..t_n.
    """
    if arena is None:
        arena = xvars(n, "t")
    acc = {(): MultiPoly.const(arena, 1)}
    for i in range(n):
        ti = MultiPoly.variable(arena, i)
        tpow = {k: ti ** k for k in range(1, nmax + 1)}
        nxt = {}
        for omega, poly in acc.items():
            w = omega_weight(omega)
            nxt[omega] = nxt.get(omega, MultiPoly(arena)) + poly
            for k in range(1, nmax - w + 1):
                no = list(omega) + [0] * (k - len(omega))
                no[k - 1] += 1
                no = trim(no)
                nxt[no] = nxt.get(no, MultiPoly(arena)) + poly * tpow[k]
        acc = nxt
    return {omega: p for omega, p in acc.items() if omega and not p.is_zero()}


@lru_cache(maxsize=None)
def monomial_to_elementary(omega):
    """Expansion of the orbit polynomial of shape omega in elementary symmetrics.

    For ||omega|| = n, returns a dict xi -> integer with
    m_{lambda(omega)} = sum beta_xi * e_1^{xi_1} ... e_n^{xi_n} in n variables;
    each xi is trimmed and satisfies sum k*xi_k = n.
    """
    omega = trim(omega)
    n = omega_weight(omega)
    arena = xvars(n)
    target = monomial_sym(omega_to_partition(omega), n, arena)
    es = [elementary(k, n, arena) for k in range(n + 1)]
    beta = {}
    rem = target
    while not rem.is_zero():
        exp, c = rem.leading_term()
        mu = tuple(sorted(exp, reverse=True))
        if mu != exp:
            raise AssertionError("leading term of symmetric polynomial not dominant")
        conj = conjugate_partition(mu)
        xi = trim(partition_to_omega(conj))
        prod = MultiPoly.const(arena, c)
        for part in conj:
            prod = prod * es[part]
        rem = rem - prod
        beta[xi] = beta.get(xi, 0) + c
    return {xi: c for xi, c in beta.items() if c}


def elementary_product(xi, n, arena=None):
    """e_1^{xi_1} * e_2^{xi_2} * ... in n variables."""
    if arena is None:
        arena = xvars(n)
    prod = MultiPoly.const(arena, 1)
    for k, mult in enumerate(xi, start=1):
        for _ in range(mult):
            prod = prod * elementary(k, n, arena)
    return prod
