"""Exact polynomial kernel: rationals, multivariate polynomials, graded series.

Everything is exact. Coefficients are python ints whenever they are integral
and fractions.Fraction otherwise; no floats anywhere. Polynomials are dicts
from exponent tuples to coefficients, term order is graded lex (total degree
first, then lex on the exponent tuple).
"""

from fractions import Fraction


class ArenaMismatch(Exception):
    pass


class NotDivisible(Exception):
    pass


class BadLeadingTerm(Exception):
    pass


def clean(c):
    """Collapse integral Fractions to int."""
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


def grlex_key(exp):
    return (sum(exp), exp)


def _fmt_coeff(c):
    c = clean(c)
    if isinstance(c, Fraction):
        return "%d/%d" % (c.numerator, c.denominator)
    return str(c)


def _fmt_term(exp, c, names):
    factors = []
    for i, e in enumerate(exp):
        if e == 1:
            factors.append(names[i])
        elif e > 1:
            factors.append("%s^%d" % (names[i], e))
    c = clean(c)
    neg = c < 0
    c = -c if neg else c
    if not factors:
        body = _fmt_coeff(c)
    elif c == 1:
        body = "*".join(factors)
    else:
        body = _fmt_coeff(c) + "*" + "*".join(factors)
    return neg, body


def render_terms(terms, names):
    """Canonical text of an exponent->coefficient map, graded lex descending."""
    if not terms:
        return "0"
    parts = []
    for exp in sorted(terms, key=grlex_key, reverse=True):
        neg, body = _fmt_term(exp, terms[exp], names)
        if not parts:
            parts.append("-" + body if neg else body)
        else:
            parts.append(("- " if neg else "+ ") + body)
    return " ".join(parts)


def terms_to_json(terms):
    out = []
    for exp in sorted(terms, key=grlex_key, reverse=True):
        out.append({"exponents": list(exp), "coefficient": _fmt_coeff(terms[exp])})
    return out


class VarArena:
    """Immutable set of variable names; fixes exponent-vector arity."""

    __slots__ = ("names",)

    def __init__(self, names):
        self.names = tuple(names)

    @property
    def arity(self):
        return len(self.names)

    def index(self, name):
        return self.names.index(name)

    def __eq__(self, other):
        return isinstance(other, VarArena) and self.names == other.names

    def __hash__(self):
        return hash(self.names)

    def __repr__(self):
        return "VarArena(%s)" % ",".join(self.names)


def xvars(k, prefix="x"):
    return VarArena("%s%d" % (prefix, i + 1) for i in range(k))


def _check_arena(a, b):
    if a != b:
        raise ArenaMismatch("%r vs %r" % (a, b))


class MultiPoly:
    """Multivariate polynomial over Q with a fixed variable arena."""

    __slots__ = ("arena", "terms")

    def __init__(self, arena, terms=None):
        self.arena = arena
        t = {}
        if terms:
            for exp, c in terms.items():
                c = clean(c)
                if c:
                    t[tuple(exp)] = c
        self.terms = t

    @classmethod
    def const(cls, arena, c):
        return cls(arena, {(0,) * arena.arity: c})

    @classmethod
    def variable(cls, arena, i):
        exp = [0] * arena.arity
        exp[i] = 1
        return cls(arena, {tuple(exp): 1})

    @classmethod
    def monomial(cls, arena, exp, c=1):
        return cls(arena, {tuple(exp): c})

    @classmethod
    def linear_form(cls, arena, coeffs):
        """sum coeffs[i]*x_i from an integer vector."""
        t = {}
        for i, c in enumerate(coeffs):
            if c:
                exp = [0] * arena.arity
                exp[i] = 1
                t[tuple(exp)] = c
        return cls(arena, t)

    def is_zero(self):
        return not self.terms

    def coeff(self, exp):
        return self.terms.get(tuple(exp), 0)

    def constant_term(self):
        return self.terms.get((0,) * self.arena.arity, 0)

    def as_constant(self):
        if not self.terms:
            return 0
        if len(self.terms) == 1:
            ((exp, c),) = self.terms.items()
            if not any(exp):
                return c
        raise ValueError("not a constant: %s" % self.canonical_text())

    def degree(self):
        return max((sum(e) for e in self.terms), default=0)

    def homogeneous_part(self, d):
        return MultiPoly(self.arena, {e: c for e, c in self.terms.items() if sum(e) == d})

    def is_homogeneous(self):
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def leading_term(self):
        exp = max(self.terms, key=grlex_key)
        return exp, self.terms[exp]

    def __add__(self, other):
        if not isinstance(other, MultiPoly):
            other = MultiPoly.const(self.arena, other)
        _check_arena(self.arena, other.arena)
        t = dict(self.terms)
        for exp, c in other.terms.items():
            t[exp] = t.get(exp, 0) + c
        return MultiPoly(self.arena, t)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly(self.arena, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, MultiPoly):
            if other == 0:
                return MultiPoly(self.arena)
            return MultiPoly(self.arena, {e: c * other for e, c in self.terms.items()})
        _check_arena(self.arena, other.arena)
        t = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                t[e] = t.get(e, 0) + c1 * c2
        return MultiPoly(self.arena, t)

    __rmul__ = __mul__

    def __pow__(self, n):
        result = MultiPoly.const(self.arena, 1)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            return self.terms == MultiPoly.const(self.arena, other).terms
        return self.arena == other.arena and self.terms == other.terms

    def __hash__(self):
        return hash((self.arena, frozenset(self.terms.items())))

    def permute(self, perm):
        """Apply the variable permutation x_i -> x_{perm[i]} (perm 0-based)."""
        t = {}
        for e, c in self.terms.items():
            ne = [0] * len(e)
            for i, d in enumerate(e):
                ne[perm[i]] = d
            t[tuple(ne)] = c
        return MultiPoly(self.arena, t)

    def substitute(self, bindings):
        """bindings: var index -> MultiPoly (same or other arena) or number."""
        target = self.arena
        for v in bindings.values():
            if isinstance(v, MultiPoly):
                target = v.arena
                break
        pows = {}
        for i, b in bindings.items():
            if not isinstance(b, MultiPoly):
                b = MultiPoly.const(target, b)
            pows[i] = {0: MultiPoly.const(target, 1), 1: b}
        result = MultiPoly(target)
        for e, c in self.terms.items():
            factor = MultiPoly.const(target, c)
            for i, d in enumerate(e):
                if d == 0:
                    continue
                if i in bindings:
                    cache = pows[i]
                    while max(cache) < d:
                        top = max(cache)
                        cache[top + 1] = cache[top] * cache[1]
                    factor = factor * cache[d]
                else:
                    if self.arena != target:
                        raise ArenaMismatch("unbound variable %s" % self.arena.names[i])
                    factor = factor * MultiPoly.variable(target, i) ** d
            result = result + factor
        return result

    def evaluate(self, point):
        """Exact value at a rational point (sequence of numbers)."""
        total = 0
        for e, c in self.terms.items():
            v = c
            for i, d in enumerate(e):
                if d:
                    v = v * (Fraction(point[i]) ** d if not isinstance(point[i], int) else point[i] ** d)
            total += v
        return clean(Fraction(total) if isinstance(total, Fraction) else total)

    def canonical_text(self):
        return render_terms(self.terms, self.arena.names)

    def to_json(self):
        return terms_to_json(self.terms)

    def __repr__(self):
        return "MultiPoly(%s)" % self.canonical_text()


def _coeff_div(a, b):
    """Exact a/b where b is a nonzero number and a is a number or ring element."""
    if isinstance(a, (int, Fraction)):
        return clean(Fraction(a) / Fraction(b))
    return a / b


def exact_div_terms(num_terms, div_terms):
    """Divide exponent->coeff maps, raising NotDivisible on nonzero remainder.

    The numerator coefficients may be any ring elements supporting +,*,/number;
    the divisor must have numeric coefficients.
    """
    rem = dict(num_terms)
    dexp = max(div_terms, key=grlex_key)
    dc = div_terms[dexp]
    quot = {}
    while rem:
        exp = max(rem, key=grlex_key)
        c = rem[exp]
        q = tuple(a - b for a, b in zip(exp, dexp))
        if any(x < 0 for x in q):
            raise NotDivisible("leading term x^%s not divisible" % (exp,))
        qc = _coeff_div(c, dc)
        quot[q] = qc
        for e2, c2 in div_terms.items():
            e = tuple(a + b for a, b in zip(q, e2))
            nc = rem.get(e, 0) - qc * c2
            if isinstance(nc, (int, Fraction)):
                nc = clean(nc)
                gone = nc == 0
            else:
                gone = nc.is_zero()
            if gone:
                rem.pop(e, None)
            else:
                rem[e] = nc
    return quot


def exact_div(p, q):
    """Exact polynomial quotient p/q; NotDivisible if the remainder is nonzero."""
    _check_arena(p.arena, q.arena)
    if q.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    if p.is_zero():
        return MultiPoly(p.arena)
    return MultiPoly(p.arena, exact_div_terms(p.terms, q.terms))


class CobordismPoly:
    """Integer/rational polynomial in the cobordism generators a_1, a_2, ...

    Keys are exponent tuples with trailing zeros stripped; generator a_i has
    weight i, so the monomial a^omega has weight sum(l * omega_l).
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        t = {}
        if terms:
            for exp, c in terms.items():
                c = clean(c)
                if c:
                    exp = tuple(exp)
                    while exp and exp[-1] == 0:
                        exp = exp[:-1]
                    t[exp] = t.get(exp, 0) + c
                    if t[exp] == 0:
                        del t[exp]
        self.terms = t

    @classmethod
    def const(cls, c):
        return cls({(): c})

    @classmethod
    def gen(cls, i):
        """The generator a_i, i >= 1."""
        return cls({(0,) * (i - 1) + (1,): 1})

    @classmethod
    def monomial(cls, omega, c=1):
        return cls({tuple(omega): c})

    def is_zero(self):
        return not self.terms

    def coeff(self, omega):
        omega = tuple(omega)
        while omega and omega[-1] == 0:
            omega = omega[:-1]
        return self.terms.get(omega, 0)

    def weights(self):
        return {sum((l + 1) * m for l, m in enumerate(e)) for e in self.terms}

    def is_homogeneous(self, weight=None):
        ws = self.weights()
        if len(ws) > 1:
            return False
        return True if weight is None else (not ws or ws == {weight})

    def weight_part(self, w):
        return CobordismPoly(
            {e: c for e, c in self.terms.items() if sum((l + 1) * m for l, m in enumerate(e)) == w}
        )

    def is_integral(self):
        return all(isinstance(c, int) for c in self.terms.values())

    def __add__(self, other):
        if not isinstance(other, CobordismPoly):
            other = CobordismPoly.const(other)
        t = dict(self.terms)
        for exp, c in other.terms.items():
            t[exp] = t.get(exp, 0) + c
        return CobordismPoly(t)

    __radd__ = __add__

    def __neg__(self):
        return CobordismPoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-(other if isinstance(other, CobordismPoly) else CobordismPoly.const(other)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, CobordismPoly):
            if other == 0:
                return CobordismPoly()
            return CobordismPoly({e: c * other for e, c in self.terms.items()})
        t = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                if len(e1) < len(e2):
                    ea, eb = e2, e1
                else:
                    ea, eb = e1, e2
                e = tuple(a + b for a, b in zip(ea, eb)) + ea[len(eb):]
                t[e] = t.get(e, 0) + c1 * c2
        return CobordismPoly(t)

    __rmul__ = __mul__

    def __truediv__(self, num):
        return CobordismPoly({e: Fraction(c) / Fraction(num) for e, c in self.terms.items()})

    def __pow__(self, n):
        result = CobordismPoly.const(1)
        for _ in range(n):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, CobordismPoly):
            other = CobordismPoly.const(other)
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def substitute_gens(self, values):
        """Replace a_i by values[i-1] (numbers or CobordismPoly)."""
        result = CobordismPoly()
        for e, c in self.terms.items():
            factor = CobordismPoly.const(c)
            for i, d in enumerate(e):
                for _ in range(d):
                    v = values[i]
                    factor = factor * (v if isinstance(v, CobordismPoly) else CobordismPoly.const(v))
            result = result + factor
        return result

    def max_gen(self):
        return max((len(e) for e in self.terms), default=0)

    def canonical_text(self, prefix="a"):
        n = self.max_gen()
        names = ["%s%d" % (prefix, i + 1) for i in range(n)]
        padded = {e + (0,) * (n - len(e)): c for e, c in self.terms.items()}
        return render_terms(padded, names)

    def to_json(self):
        n = self.max_gen()
        padded = {e + (0,) * (n - len(e)): c for e, c in self.terms.items()}
        return terms_to_json(padded)

    def __repr__(self):
        return "CobordismPoly(%s)" % self.canonical_text()


class GradedSeries:
    """Series in geometric variables truncated by total degree.

    Coefficients are CobordismPoly; exponent tuples follow the arena.
    """

    __slots__ = ("arena", "order", "terms")

    def __init__(self, arena, order, terms=None):
        self.arena = arena
        self.order = order
        t = {}
        if terms:
            for exp, c in terms.items():
                if sum(exp) > order:
                    continue
                if not isinstance(c, CobordismPoly):
                    c = CobordismPoly.const(c)
                if not c.is_zero():
                    t[tuple(exp)] = c
        self.terms = t

    @classmethod
    def const(cls, arena, order, c):
        return cls(arena, order, {(0,) * arena.arity: c})

    @classmethod
    def from_multipoly(cls, p, order, scale=None):
        t = {}
        for e, c in p.terms.items():
            cc = CobordismPoly.const(c) if scale is None else scale * c
            t[e] = cc
        return cls(p.arena, order, t)

    def coeff(self, exp):
        return self.terms.get(tuple(exp), CobordismPoly())

    def homogeneous_part(self, d):
        return {e: c for e, c in self.terms.items() if sum(e) == d}

    def truncate(self, order):
        return GradedSeries(self.arena, order, self.terms)

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        if not isinstance(other, GradedSeries):
            other = GradedSeries.const(self.arena, self.order, other)
        _check_arena(self.arena, other.arena)
        t = dict(self.terms)
        for exp, c in other.terms.items():
            s = t.get(exp, CobordismPoly()) + c
            if s.is_zero():
                t.pop(exp, None)
            else:
                t[exp] = s
        return GradedSeries(self.arena, min(self.order, other.order), t)

    __radd__ = __add__

    def __neg__(self):
        return GradedSeries(self.arena, self.order, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, GradedSeries):
            other = GradedSeries.const(self.arena, self.order, other)
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, MultiPoly):
            other = GradedSeries.from_multipoly(other, self.order)
        if not isinstance(other, GradedSeries):
            return GradedSeries(self.arena, self.order, {e: c * other for e, c in self.terms.items()})
        _check_arena(self.arena, other.arena)
        order = min(self.order, other.order)
        t = {}
        for e1, c1 in self.terms.items():
            d1 = sum(e1)
            for e2, c2 in other.terms.items():
                if d1 + sum(e2) > order:
                    continue
                e = tuple(a + b for a, b in zip(e1, e2))
                prod = c1 * c2
                if e in t:
                    t[e] = t[e] + prod
                else:
                    t[e] = prod
        return GradedSeries(self.arena, order, t)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, GradedSeries):
            return NotImplemented
        return self.arena == other.arena and self.order == other.order and self.terms == other.terms

    def permute(self, perm):
        t = {}
        for e, c in self.terms.items():
            ne = [0] * len(e)
            for i, d in enumerate(e):
                ne[perm[i]] = d
            t[tuple(ne)] = c
        return GradedSeries(self.arena, self.order, t)

    def substitute_linear(self, forms):
        """Substitute x_i -> forms[i], a numeric MultiPoly, exactly (re-truncated)."""
        result = GradedSeries(self.arena, self.order)
        pows = [{0: MultiPoly.const(self.arena, 1)} for _ in forms]
        for e, c in self.terms.items():
            m = MultiPoly.const(self.arena, 1)
            for i, d in enumerate(e):
                if d:
                    cache = pows[i]
                    while max(cache) < d:
                        top = max(cache)
                        cache[top + 1] = cache[top] * forms[i]
                    m = m * cache[d]
            result = result + GradedSeries.from_multipoly(m, self.order, scale=c)
        return result

    def substitute_series(self, bindings, arena, order):
        """Substitute x_i -> bindings[i] (GradedSeries over the target arena)."""
        result = GradedSeries(arena, order)
        one = GradedSeries.const(arena, order, 1)
        pows = [{0: one} for _ in bindings]
        for e, c in self.terms.items():
            m = one
            for i, d in enumerate(e):
                if d:
                    cache = pows[i]
                    while max(cache) < d:
                        top = max(cache)
                        cache[top + 1] = cache[top] * bindings[i]
                    m = m * cache[d]
            result = result + m * c
        return result

    def canonical_text(self):
        if not self.terms:
            return "0"
        parts = []
        names = self.arena.names
        for exp in sorted(self.terms, key=grlex_key):
            mono = "*".join(
                names[i] if d == 1 else "%s^%d" % (names[i], d) for i, d in enumerate(exp) if d
            )
            ctext = self.terms[exp].canonical_text()
            if mono:
                parts.append("(%s)*%s" % (ctext, mono))
            else:
                parts.append(ctext)
        return " + ".join(parts)

    def to_json(self):
        out = []
        for exp in sorted(self.terms, key=grlex_key):
            out.append({"exponents": list(exp), "coefficient": self.terms[exp].canonical_text()})
        return out

    def __repr__(self):
        return "GradedSeries(%s)" % self.canonical_text()


def series_mul(a, b, order):
    """Truncated product of univariate coefficient lists (index = power)."""
    out = [0] * (order + 1)
    for i, ca in enumerate(a):
        if i > order or _is_zero_coeff(ca):
            continue
        for j, cb in enumerate(b):
            if i + j > order:
                break
            if _is_zero_coeff(cb):
                continue
            out[i + j] = out[i + j] + ca * cb
    return out


def _is_zero_coeff(c):
    return c.is_zero() if isinstance(c, CobordismPoly) else c == 0


def series_compose(h, r, order):
    """h(r(y)) truncated; requires r[0] = 0."""
    if r and not _is_zero_coeff(r[0]):
        raise ValueError("inner series must have zero constant term")
    out = [0] * (order + 1)
    power = [1] + [0] * order
    for i, c in enumerate(h):
        if i > order:
            break
        if i > 0:
            power = series_mul(power, r, order)
        if _is_zero_coeff(c):
            continue
        for j in range(order + 1):
            if not _is_zero_coeff(power[j]):
                out[j] = out[j] + c * power[j]
    return out


def reverse_series(h, order):
    """Compositional inverse of h = y + O(y^2) to the given order.

    Returns r with h(r(y)) = y mod y^(order+1).
    """
    if len(h) < 2 or not _is_zero_coeff(h[0]) or h[1] != 1:
        raise BadLeadingTerm("need h(0)=0 and linear coefficient 1")
    r = [0, 1] + [0] * (order - 1)
    for d in range(2, order + 1):
        c = series_compose(h, r, d)[d]
        r[d] = -c
    return r[: order + 1]
