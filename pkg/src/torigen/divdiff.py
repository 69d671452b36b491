"""Divided differences, the operator L, and Schubert-calculus class formulas.

Everything here works directly on the polynomial ring, with no fixed-point
data, so the flag and Grassmannian classes computed below form an independent
cross-check against the localization route in the genus module.

The operator L sends p to (1/Delta_n) sum_sigma sign(sigma) sigma(p); on
monomials x^(lambda+delta) it produces the Schur polynomial Sh_lambda.
"""

from functools import lru_cache
from itertools import combinations, permutations
from math import factorial

from .exactalg import (
    CobordismPoly,
    GradedSeries,
    MultiPoly,
    exact_div,
    exact_div_terms,
    xvars,
)
from .symmfunc import antisymmetrize, omegas_of_weight, perm_sign, vandermonde


def operator_L(p, n=None):
    """Antisymmetrize and divide by the Vandermonde determinant.

    The division is always exact because the antisymmetrization is an
    alternating polynomial.  n defaults to the arena arity and is accepted
    only as a guard against feeding a polynomial in the wrong ring.
    """
    if n is not None and p.arena.arity != n:
        raise ValueError("polynomial lives in %d variables, expected %d" % (p.arena.arity, n))
    return exact_div(antisymmetrize(p), vandermonde(p.arena))


def _antisymmetrize_terms(terms, n):
    # same sum as antisymmetrize() but over a bare exponent->coefficient dict,
    # so it also covers blocks whose coefficients are CobordismPoly
    out = {}
    for perm in permutations(range(n)):
        s = perm_sign(perm)
        for e, c in terms.items():
            ne = [0] * n
            for i, d in enumerate(e):
                ne[perm[i]] = d
            ne = tuple(ne)
            add = c * s
            if ne in out:
                add = add + out[ne]
            out[ne] = add
    return {e: c for e, c in out.items() if not (c.is_zero() if isinstance(c, CobordismPoly) else c == 0)}


def _L_terms(terms, arena):
    """operator_L on an exponent dict with ring-valued coefficients."""
    anti = _antisymmetrize_terms(terms, arena.arity)
    if not anti:
        return {}
    return exact_div_terms(anti, vandermonde(arena).terms)


def divided_difference(i, p):
    """partial_i p = (p - s_i p)/(x_i - x_{i+1}) for 1 <= i < n."""
    n = p.arena.arity
    if not 1 <= i < n:
        raise ValueError("divided difference index %d out of range for %d variables" % (i, n))
    perm = list(range(n))
    perm[i - 1], perm[i] = perm[i], perm[i - 1]
    coeffs = [0] * n
    coeffs[i - 1], coeffs[i] = 1, -1
    return exact_div(p - p.permute(perm), MultiPoly.linear_form(p.arena, coeffs))


def _descent_peel(u):
    """Swap positions at adjacent descents until sorted; returns the 1-based
    swap positions in peel order.  Each swap is a right multiplication by an
    adjacent transposition, so the list has length ell(u)."""
    v = list(u)
    out = []
    while True:
        i = next((i for i in range(len(v) - 1) if v[i] > v[i + 1]), None)
        if i is None:
            return out
        v[i], v[i + 1] = v[i + 1], v[i]
        out.append(i + 1)


def reduced_word(w):
    """A reduced word (j_1, ..., j_p) with w = s_{j_1} o ... o s_{j_p}.

    Composition is right-to-left: the rightmost letter acts first.  w is a
    permutation in one-line notation (1-based values).
    """
    return tuple(reversed(_descent_peel(w)))


class PermWord:
    """Permutation in one-line notation plus the cached word driving nabla_w.

    The cached word is a reduced word of w0*w: nabla_w applies the divided
    differences indexed by it left to right.
    """

    __slots__ = ("one_line", "word")

    def __init__(self, one_line):
        w = tuple(one_line)
        n = len(w)
        if sorted(w) != list(range(1, n + 1)):
            raise ValueError("not a permutation in one-line notation: %r" % (w,))
        self.one_line = w
        self.word = reduced_word(tuple(n + 1 - v for v in w))

    def __repr__(self):
        return "PermWord(%r)" % (self.one_line,)


def schubert_polynomial(w, n=None):
    """Schubert polynomial nabla_w x^delta, delta = (n-1, ..., 1, 0)."""
    if not isinstance(w, PermWord):
        w = PermWord(w)
    if n is None:
        n = len(w.one_line)
    elif n != len(w.one_line):
        raise ValueError("permutation length %d does not match n=%d" % (len(w.one_line), n))
    arena = xvars(n)
    p = MultiPoly.monomial(arena, tuple(range(n - 1, -1, -1)))
    for j in w.word:
        p = divided_difference(j, p)
    return p


def _line_series(arena, i, j, order, odd_only=False):
    """f(x_i - x_j) truncated at total degree `order`; odd_only keeps only the
    odd part a_1 t + a_3 t^3 + ... (and drops the constant 1)."""
    coeffs = [0] * arena.arity
    coeffs[i], coeffs[j] = 1, -1
    form = MultiPoly.linear_form(arena, coeffs)
    out = GradedSeries.const(arena, order, 0 if odd_only else 1)
    power = MultiPoly.const(arena, 1)
    for k in range(1, order + 1):
        power = power * form
        if odd_only and k % 2 == 0:
            continue
        out = out + GradedSeries.from_multipoly(power, order, scale=CobordismPoly.gen(k))
    return out


@lru_cache(maxsize=None)
def _flag_product(n, order):
    """prod_{i<j} f(x_i - x_j) over n variables, truncated at `order`."""
    arena = xvars(n)
    out = GradedSeries.const(arena, order, 1)
    for i, j in combinations(range(n), 2):
        out = out * _line_series(arena, i, j, order)
    return out


@lru_cache(maxsize=None)
def flag_P_polynomials(n, xi):
    """P_xi for the flag manifold: the x^xi coefficient of prod f(x_i - x_j)."""
    xi = tuple(xi)
    if len(xi) != n:
        raise ValueError("exponent length %d does not match n=%d" % (len(xi), n))
    return _flag_product(n, sum(xi)).coeff(xi)


def _signed_delta_sum(n, read):
    delta = tuple(range(n - 1, -1, -1))
    total = CobordismPoly()
    for perm in permutations(range(n)):
        total = total + read(perm, delta) * perm_sign(perm)
    return total


def flag_class(n, method="corL"):
    """[U(n)/T^n] by one of three equivalent Schubert-calculus routes.

    corL reads the P polynomials on the orbit of delta, tchi reads the
    permuted products at x^delta, thm8 (n >= 4 only) replaces the (1,2) and
    (n-1,n) factors by the odd part of f and applies L to the top block.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    m = n * (n - 1) // 2
    if method == "corL":
        def read(perm, delta):
            e = [0] * n
            for i, d in enumerate(delta):
                e[perm[i]] = d
            return flag_P_polynomials(n, tuple(e))
        return _signed_delta_sum(n, read)
    if method == "tchi":
        prod = _flag_product(n, m)

        def read(perm, delta):
            return prod.permute(perm).coeff(delta)
        return _signed_delta_sum(n, read)
    if method == "thm8":
        if n < 4:
            raise ValueError("thm8 route needs n >= 4")
        arena = xvars(n)
        out = GradedSeries.const(arena, m, 1)
        for i, j in combinations(range(n), 2):
            odd = (i, j) in ((0, 1), (n - 2, n - 1))
            out = out * _line_series(arena, i, j, m, odd_only=odd)
        quot = _L_terms(out.homogeneous_part(m), arena)
        return quot.get((0,) * n, CobordismPoly())
    raise ValueError("unknown method %r" % (method,))


@lru_cache(maxsize=None)
def _grassmann_product(q, l, order):
    """Delta_q * Delta_{q+1,q+l} * prod_{i<=q<j} f(x_i - x_j), truncated."""
    n = q + l
    arena = xvars(n)
    base = MultiPoly.const(arena, 1)
    for i, j in combinations(range(q), 2):
        coeffs = [0] * n
        coeffs[i], coeffs[j] = 1, -1
        base = base * MultiPoly.linear_form(arena, coeffs)
    for i, j in combinations(range(q, n), 2):
        coeffs = [0] * n
        coeffs[i], coeffs[j] = 1, -1
        base = base * MultiPoly.linear_form(arena, coeffs)
    out = GradedSeries.from_multipoly(base, order)
    for i in range(q):
        for j in range(q, n):
            out = out * _line_series(arena, i, j, order)
    return out


@lru_cache(maxsize=None)
def grassmann_Q_polynomials(q, l, xi):
    """Q_{(q+l,l)xi}: the x^xi coefficient of the weighted Grassmann product."""
    xi = tuple(xi)
    if len(xi) != q + l:
        raise ValueError("exponent length %d does not match q+l=%d" % (len(xi), q + l))
    return _grassmann_product(q, l, sum(xi)).coeff(xi)


def grassmann_class(q, l):
    """[G_{q+l,l}] = (1/q!l!) L(Delta_q Delta_{q+1,q+l} prod f(x_i - x_j)).

    Only the top block of total degree C(q+l,2) contributes a degree-zero
    result after dividing by the Vandermonde, and that block carries exactly
    the polynomial weight ql of the class.
    """
    if q < 1 or l < 1:
        raise ValueError("need q, l >= 1")
    n = q + l
    m = n * (n - 1) // 2
    prod = _grassmann_product(q, l, m)
    quot = _L_terms(prod.homogeneous_part(m), prod.arena)
    cls = quot.get((0,) * n, CobordismPoly()) / (factorial(q) * factorial(l))
    if not cls.is_integral():
        raise ArithmeticError("Grassmann class failed q!l! integrality")
    return cls


def flag_vanishing_checks(n):
    """Check the structural vanishing and parity statements for [U(n)/T^n].

    Covers: the value of s_m (2 for n=2, -6 for n=3, 0 for n > 3); s_omega = 0
    whenever omega meets a generator index above 2n-3; the inequality-based
    vanishing family (sum q_p < l(2l-1), faithfully enumerated even though it
    is empty for n <= 5); the all-even-Chern-numbers statement; and, for
    n = 4q or 4q+1, vanishing of every s_omega supported on even indices.
    """
    if not 2 <= n <= 5:
        raise ValueError("checks are sized for 2 <= n <= 5")
    from .chern import s_to_chern

    cls = flag_class(n)
    m = n * (n - 1) // 2
    s = {om: cls.coeff(om) for om in omegas_of_weight(m)}

    sm_value = s[(0,) * (m - 1) + (1,)]
    sm_expected = {2: 2, 3: -6}.get(n, 0)

    cor8 = [om for om in s if any(om[k] for k in range(2 * n - 3, len(om)))]

    inequality = []
    for om in s:
        ks = [k + 1 for k, mult in enumerate(om) if mult]
        if any(k > 2 * n - 3 for k in ks):
            continue
        ll = len(ks)
        if n >= 2 * ll and sum(2 * (n - 1) - k for k in ks) < ll * (2 * ll - 1):
            inequality.append(om)

    odd_zero_applies = n % 4 in (0, 1)
    odd_zero = []
    if odd_zero_applies:
        odd_zero = [om for om in s if all(om[k] == 0 for k in range(0, len(om), 2))]

    chern = s_to_chern(s, m)

    report = {
        "n": n,
        "m": m,
        "s_m": {"value": sm_value, "expected": sm_expected, "ok": sm_value == sm_expected},
        "cor8": {"count": len(cor8), "ok": all(s[om] == 0 for om in cor8)},
        "inequality": {"count": len(inequality), "ok": all(s[om] == 0 for om in inequality)},
        "odd_zero": {
            "applicable": odd_zero_applies,
            "count": len(odd_zero),
            "ok": all(s[om] == 0 for om in odd_zero),
        },
        "even_chern": {"ok": all(v % 2 == 0 for v in chern.values())},
    }
    report["ok"] = all(
        report[key]["ok"] for key in ("s_m", "cor8", "inequality", "odd_zero", "even_chern")
    )
    return report
