"""Divided differences, Schubert polynomials and the operator-L routes."""

import pytest

from torigen.divdiff import (
    PermWord,
    divided_difference,
    flag_P_polynomials,
    flag_class,
    flag_vanishing_checks,
    grassmann_Q_polynomials,
    grassmann_class,
    operator_L,
    reduced_word,
    schubert_polynomial,
)
from torigen.exactalg import CobordismPoly, MultiPoly, xvars
from torigen.genus import cobordism_class
from torigen.rootdata import build_space, fixed_point_weights
from torigen.symmfunc import elementary, vandermonde

# full one-line Schubert basis for n = 3
SCHUBERT3 = {
    (1, 2, 3): {(0, 0, 0): 1},
    (2, 1, 3): {(1, 0, 0): 1},
    (1, 3, 2): {(1, 0, 0): 1, (0, 1, 0): 1},
    (2, 3, 1): {(1, 1, 0): 1},
    (3, 1, 2): {(2, 0, 0): 1},
    (3, 2, 1): {(2, 1, 0): 1},
}

PDELTA = "a1^3 - a1*a2 - 3*a3"
PDELTA_SWAP = "-a1^3 - 5*a1*a2 - 3*a3"


def test_divided_difference_basics():
    ar = xvars(3)
    x1, x2 = MultiPoly.variable(ar, 0), MultiPoly.variable(ar, 1)
    assert divided_difference(1, x1) == MultiPoly.const(ar, 1)
    assert divided_difference(1, x1 * x1) == x1 + x2
    assert divided_difference(1, elementary(2, 3, ar)).is_zero()
    assert divided_difference(2, x1) .is_zero()
    with pytest.raises(ValueError):
        divided_difference(3, x1)


def test_divided_difference_relations():
    ar = xvars(3)
    p = MultiPoly.monomial(ar, (3, 1, 0)) + MultiPoly.monomial(ar, (0, 2, 2)) * 2
    d1 = lambda q: divided_difference(1, q)
    d2 = lambda q: divided_difference(2, q)
    assert d1(d1(p)).is_zero()
    assert d2(d2(p)).is_zero()
    assert d1(d2(d1(p))) == d2(d1(d2(p)))


def test_reduced_words():
    assert reduced_word((0, 1, 2)) == ()
    assert len(reduced_word((2, 1, 0))) == 3
    for w in ((1, 0, 2), (2, 0, 1), (1, 2, 0), (2, 1, 0)):
        # replaying the word as position swaps rebuilds the permutation
        cur = list(range(3))
        for j in reduced_word(w):
            cur[j - 1], cur[j] = cur[j], cur[j - 1]
        assert tuple(cur) == w


def test_schubert_polynomials_n3():
    for w, terms in SCHUBERT3.items():
        assert schubert_polynomial(w).terms == terms
    with pytest.raises(ValueError):
        PermWord((1, 1, 2))
    with pytest.raises(ValueError):
        schubert_polynomial((2, 1, 3), n=4)


def test_operator_L_properties():
    ar = xvars(3)
    delta = MultiPoly.monomial(ar, (2, 1, 0))
    assert operator_L(delta) == MultiPoly.const(ar, 1)
    # swapping two variables flips the sign
    p = MultiPoly.monomial(ar, (3, 1, 0))
    assert operator_L(p.permute((1, 0, 2))) == operator_L(p) * -1
    # symmetric factors pass through
    e2 = elementary(2, 3, ar)
    assert operator_L(e2 * delta) == e2
    # the Vandermonde is alternating, so all 6 summands coincide
    assert operator_L(vandermonde(ar)) == MultiPoly.const(ar, 6)
    with pytest.raises(ValueError):
        operator_L(delta, n=4)


def test_flag_P_delta_orbit():
    vals = {
        (2, 1, 0): PDELTA,
        (2, 0, 1): PDELTA_SWAP,
        (1, 2, 0): "-a1^3 + a1*a2 + 3*a3",
        (1, 0, 2): "a1^3 + 5*a1*a2 + 3*a3",
        (0, 2, 1): PDELTA,
        (0, 1, 2): "-a1^3 + a1*a2 + 3*a3",
    }
    total = CobordismPoly()
    for xi, text in vals.items():
        p = flag_P_polynomials(3, xi)
        assert p.canonical_text() == text
        total = total + p
    assert total.is_zero()


def test_flag_class_routes_agree():
    assert flag_class(2).canonical_text() == "2*a1"
    for n in (2, 3):
        loc = cobordism_class(fixed_point_weights(build_space("U(%d)/T%d" % (n, n))))
        assert flag_class(n, "corL") == loc
        assert flag_class(n, "tchi") == loc
    with pytest.raises(ValueError):
        flag_class(3, "thm8")
    with pytest.raises(ValueError):
        flag_class(1)
    with pytest.raises(ValueError):
        flag_class(3, "nope")


def test_grassmann_routes():
    assert grassmann_class(1, 1).canonical_text() == "2*a1"
    cp2 = cobordism_class(fixed_point_weights(build_space("CP2")))
    assert grassmann_class(1, 2) == cp2
    assert grassmann_class(2, 1) == cp2
    with pytest.raises(ValueError):
        grassmann_class(0, 2)


def test_grassmann_Q_values():
    assert grassmann_Q_polynomials(2, 2, (3, 2, 1, 0)).canonical_text() == \
        "a1^4 - 4*a1*a3 + 4*a2^2"
    assert grassmann_Q_polynomials(2, 2, (2, 1, 3, 0)).canonical_text() == \
        "a1^4 + 4*a1^2*a2 + 6*a1*a3 + a2^2 - 6*a4"
    assert grassmann_Q_polynomials(2, 2, (1, 3, 2, 0)).canonical_text() == \
        "a1^4 + 8*a1^2*a2 + 2*a2^2 - 4*a4"
    with pytest.raises(ValueError):
        grassmann_Q_polynomials(2, 2, (1, 0))


def test_flag_vanishing_reports():
    for n in (2, 3):
        rep = flag_vanishing_checks(n)
        assert rep["ok"]
        assert rep["s_m"]["value"] == {2: 2, 3: -6}[n]
        assert rep["even_chern"]["ok"]
    with pytest.raises(ValueError):
        flag_vanishing_checks(6)
