"""Exact translation between the numbers s_omega and classical Chern numbers.

The dictionary is the integer matrix beta: expanding the orbit polynomial of
shape omega in elementary symmetric polynomials gives
s_omega = sum_xi beta_{omega,xi} c_1^{xi_1} ... c_n^{xi_n}, and the matrix is
invertible over the integers, so Chern numbers are recovered by exact solve.
"""

from fractions import Fraction
from functools import lru_cache

from .exactalg import clean
from .symmfunc import monomial_to_elementary, omegas_of_weight


class NonIntegerSolution(Exception):
    pass


@lru_cache(maxsize=None)
def beta_matrix(n):
    """(index, rows): index = sorted omega/xi keys, rows[i][j] = beta."""
    index = omegas_of_weight(n)
    pos = {xi: j for j, xi in enumerate(index)}
    rows = []
    for om in index:
        row = [0] * len(index)
        for xi, c in monomial_to_elementary(om).items():
            row[pos[xi]] = c
        rows.append(row)
    return index, rows


def chern_to_s(table, n):
    """Forward application: s_omega = sum beta_{omega,xi} * c^xi."""
    index, rows = beta_matrix(n)
    vals = []
    for xi in index:
        if xi not in table:
            raise KeyError("Chern table missing partition %s" % (xi,))
        vals.append(table[xi])
    return {om: sum(b * v for b, v in zip(row, vals)) for om, row in zip(index, rows)}


def s_to_chern(s, n):
    """Exact solve of the beta system; integer solution or NonIntegerSolution."""
    index, rows = beta_matrix(n)
    size = len(index)
    aug = []
    for i, om in enumerate(index):
        if om not in s:
            raise KeyError("s table missing omega %s" % (om,))
        aug.append([Fraction(v) for v in rows[i]] + [Fraction(s[om])])
    for col in range(size):
        pivot = next((r for r in range(col, size) if aug[r][col] != 0), None)
        if pivot is None:
            raise NonIntegerSolution("beta system is singular at column %d" % col)
        aug[col], aug[pivot] = aug[pivot], aug[col]
        pv = aug[col][col]
        aug[col] = [v / pv for v in aug[col]]
        for r in range(size):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [v - factor * w for v, w in zip(aug[r], aug[col])]
    out = {}
    for j, xi in enumerate(index):
        v = clean(aug[j][size])
        if not isinstance(v, int):
            raise NonIntegerSolution("c^%s = %s is not an integer" % (xi, v))
        out[xi] = v
    return out
