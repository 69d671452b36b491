"""Symmetric-function helper tests."""

from itertools import permutations

from hypothesis import given, settings
from hypothesis import strategies as st

from torigen.exactalg import MultiPoly, xvars
from torigen.symmfunc import (
    antisymmetrize,
    conjugate_partition,
    elementary,
    elementary_product,
    f_omega_decomposition,
    monomial_sym,
    monomial_to_elementary,
    newton_power,
    omega_to_partition,
    omega_weight,
    omegas_of_weight,
    omegas_up_to,
    partition_to_omega,
    partitions,
    perm_sign,
    schur,
    trim,
    vandermonde,
)

# partition counts p(0)..p(8)
PARTITION_COUNTS = [1, 1, 2, 3, 5, 7, 11, 15, 22]


def test_omega_partition_round_trip():
    assert omega_to_partition((2, 0, 1)) == (3, 1, 1)
    assert partition_to_omega((3, 1, 1)) == (2, 0, 1)
    assert trim((1, 0, 0)) == (1,)
    assert omega_weight((2, 0, 1)) == 5
    for w in range(7):
        for om in omegas_of_weight(w):
            assert omega_weight(om) == w
            assert partition_to_omega(omega_to_partition(om)) == om


def test_partition_enumeration_counts():
    for n, count in enumerate(PARTITION_COUNTS):
        assert len(list(partitions(n))) == count
        assert len(omegas_of_weight(n)) == count
    assert omegas_of_weight(0) == [()]
    assert sum(len(omegas_of_weight(w)) for w in range(5)) == len(omegas_up_to(4))


def test_conjugate_partition_involution():
    assert conjugate_partition((3, 1)) == (2, 1, 1)
    for n in range(1, 8):
        for lam in partitions(n):
            assert conjugate_partition(conjugate_partition(lam)) == lam


def test_perm_sign_matches_inversions():
    for n in range(1, 5):
        for p in permutations(range(n)):
            inv = sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])
            assert perm_sign(p) == (-1) ** inv


def test_monomial_sym_small_cases():
    ar = xvars(3)
    x1, x2, x3 = (MultiPoly.variable(ar, i) for i in range(3))
    assert monomial_sym((), 3, ar) == MultiPoly.const(ar, 1)
    m21 = monomial_sym((2, 1), 3, ar)
    want = (x1 * x1 * (x2 + x3) + x2 * x2 * (x1 + x3) + x3 * x3 * (x1 + x2))
    assert m21 == want
    # m_{(1,1)} has each product once, not twice
    assert monomial_sym((1, 1), 3, ar) == x1 * x2 + x1 * x3 + x2 * x3


def test_elementary_and_newton():
    ar = xvars(3)
    x1, x2, x3 = (MultiPoly.variable(ar, i) for i in range(3))
    assert elementary(2, 3, ar) == x1 * x2 + x1 * x3 + x2 * x3
    assert elementary(0, 3, ar) == MultiPoly.const(ar, 1)
    assert elementary(4, 3, ar).is_zero()
    assert newton_power(3, 3, ar) == x1 ** 3 + x2 ** 3 + x3 ** 3
    # m of a one-part partition is the power sum
    assert monomial_sym((3,), 3, ar) == newton_power(3, 3, ar)


def test_vandermonde_and_antisymmetrize():
    ar = xvars(3)
    x1, x2, x3 = (MultiPoly.variable(ar, i) for i in range(3))
    v = vandermonde(ar)
    assert v == (x1 - x2) * (x1 - x3) * (x2 - x3)
    assert antisymmetrize(MultiPoly.monomial(ar, (2, 1, 0))) == v
    assert antisymmetrize(x1 * x2).is_zero()


def test_schur_polynomials():
    ar = xvars(3)
    assert schur((1,), 3, ar) == elementary(1, 3, ar)
    assert schur((1, 1), 3, ar) == elementary(2, 3, ar)
    # s_(2) = h_2 = m_(2) + m_(1,1)
    assert schur((2,), 3, ar) == monomial_sym((2,), 3, ar) + monomial_sym((1, 1), 3, ar)
    # s_(2,1) = m_(2,1) + 2 m_(1,1,1)
    assert schur((2, 1), 3, ar) == monomial_sym((2, 1), 3, ar) + monomial_sym((1, 1, 1), 3, ar) * 2


def test_f_omega_decomposition_blocks():
    ar = xvars(2, "t")
    table = f_omega_decomposition(2, 3, ar)
    t1, t2 = MultiPoly.variable(ar, 0), MultiPoly.variable(ar, 1)
    assert table[(1,)] == t1 + t2
    assert table[(2,)] == t1 * t2
    assert table[(0, 1)] == t1 * t1 + t2 * t2
    # omega = (1,1): a1*a2 picks t_i * t_j^2 over i != j
    assert table[(1, 1)] == t1 * t2 * t2 + t1 * t1 * t2


def test_monomial_to_elementary_reassembles():
    for w in range(1, 6):
        for om in omegas_of_weight(w):
            beta = monomial_to_elementary(om)
            ar = xvars(w)
            acc = MultiPoly(ar)
            for xi, c in beta.items():
                acc = acc + elementary_product(xi, w, ar) * c
            assert acc == monomial_sym(omega_to_partition(om), w, ar)
            # every xi in the expansion has matching weight
            for xi in beta:
                assert sum((k + 1) * m for k, m in enumerate(xi)) == w


# -- light randomized checks --------------------------------------------------


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(0, 3), min_size=1, max_size=3))
def test_orbit_polynomials_are_symmetric(exps):
    lam = tuple(sorted((e for e in exps if e), reverse=True))
    n = 3
    ar = xvars(n)
    p = monomial_sym(lam, n, ar)
    for i in range(n - 1):
        perm = list(range(n))
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
        assert p.permute(tuple(perm)) == p


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 6))
def test_omegas_are_distinct(w):
    oms = omegas_of_weight(w)
    assert len(set(oms)) == len(oms)
    assert all(om == trim(om) for om in oms)
