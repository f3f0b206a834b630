# -*- coding: utf-8 -*-
__doc__ = """
Finitely generated abelian groups and the integer Smith normal form.

Matrices are numpy arrays of dtype object, so all entries are exact
Python integers.

>>> from starspecial.abelian import *
>>> U, S, V = smith_normal_form([[3, 3, 3]])
>>> S.tolist()
[[3, 0, 0]]
>>> (U.dot([[3, 3, 3]]).dot(V) == S).all()
True
>>> print(abelian_group([[3, 3, 3]], 3))
Z^2 + Z_3
>>> print(abelian_group([[2]], 1))
Z_2
>>> print(abelian_group([], 3))
Z^3
>>> AbelianGroup(4, (3, 3)) < AbelianGroup(4, (9,))
True
"""

__all__ = (
    'AbelianGroup', 'smith_normal_form', 'invariant_factors',
    'abelian_group', 'surjection_count_z2',
    )

from collections import namedtuple

import numpy as np


class AbelianGroup(namedtuple('AbelianGroup', 'rank torsion')):
    """Z^rank + Z_d1 + Z_d2 + ... with 1 < d1 | d2 | ...

    Groups order by (rank, torsion).  Z_3 + Z_3 and Z_9 are different.
    """
    def __new__(cls, rank=0, torsion=()):
        torsion = tuple(int(d) for d in torsion)
        if rank < 0:
            raise ValueError("Negative free rank %r" % (rank,))
        if any(d <= 1 for d in torsion):
            raise ValueError("Torsion coefficients must exceed 1: %r" % (torsion,))
        if any(b % a for a, b in zip(torsion, torsion[1:])):
            raise ValueError("Torsion coefficients must form a divisibility chain: %r" % (torsion,))
        return super(AbelianGroup, cls).__new__(cls, int(rank), torsion)

    def __str__(self):
        factors = []
        if self.rank:
            factors.append('Z' if self.rank == 1 else 'Z^%d' % self.rank)
        factors.extend('Z_%d' % d for d in self.torsion)
        return ' + '.join(factors) or '0'


def _identity(n):
    matrix = np.zeros((n, n), dtype=object)
    for i in range(n):
        matrix[i, i] = 1
    return matrix


class _Reduction(object):
    "S with the row transform U, column transform V and their inverses."
    def __init__(self, matrix):
        rows, columns = matrix.shape
        self.S = matrix
        self.U, self.U_inv = _identity(rows), _identity(rows)
        self.V, self.V_inv = _identity(columns), _identity(columns)

    def add_row(self, target, source, factor):
        "row[target] += factor * row[source]"
        self.S[target] += factor * self.S[source]
        self.U[target] += factor * self.U[source]
        self.U_inv[:, source] -= factor * self.U_inv[:, target]

    def add_column(self, target, source, factor):
        "column[target] += factor * column[source]"
        self.S[:, target] += factor * self.S[:, source]
        self.V[:, target] += factor * self.V[:, source]
        self.V_inv[source] -= factor * self.V_inv[target]

    def swap_rows(self, i, j):
        if i != j:
            for matrix in (self.S, self.U):
                matrix[[i, j]] = matrix[[j, i]]
            self.U_inv[:, [i, j]] = self.U_inv[:, [j, i]]

    def swap_columns(self, i, j):
        if i != j:
            for matrix in (self.S, self.V):
                matrix[:, [i, j]] = matrix[:, [j, i]]
            self.V_inv[[i, j]] = self.V_inv[[j, i]]

    def negate_row(self, i):
        self.S[i] *= -1
        self.U[i] *= -1
        self.U_inv[:, i] *= -1


def _as_matrix(matrix, columns=None):
    rows = [ [ int(entry) for entry in row ] for row in matrix ]
    if columns is None:
        columns = len(rows[0]) if rows else 0
    result = np.zeros((len(rows), columns), dtype=object)
    for i, row in enumerate(rows):
        if len(row) != columns:
            raise ValueError("Row %d has %d entries, expected %d" % (i, len(row), columns))
        result[i, :] = row
    return result

def smith_normal_form(matrix, columns=None, inverses=False):
    """Return (U, S, V) with U.A.V == S, U and V unimodular and S diagonal
    with non-negative entries d1 | d2 | ...  With inverses=True, also return
    the inverses of U and V.

    The pivot is always an entry of least absolute value.  'columns' gives
    the width of an empty matrix.
    """
    reduction = _Reduction(_as_matrix(matrix, columns))
    S = reduction.S
    rows, columns = S.shape

    for t in range(min(rows, columns)):
        while True:
            entries = [ (abs(S[i, j]), i, j) for i in range(t, rows) for j in range(t, columns)
                        if S[i, j] != 0 ]
            if not entries:
                break
            _, i, j = min(entries)
            reduction.swap_rows(t, i)
            reduction.swap_columns(t, j)
            pivot = S[t, t]
            for i in range(t+1, rows):
                if S[i, t]:
                    reduction.add_row(i, t, -(S[i, t] // pivot))
            for j in range(t+1, columns):
                if S[t, j]:
                    reduction.add_column(j, t, -(S[t, j] // pivot))
            if any(S[i, t] for i in range(t+1, rows)) or any(S[t, j] for j in range(t+1, columns)):
                continue
            # row and column are clear, enforce divisibility of the rest
            bad_row = next((i for i in range(t+1, rows)
                            for j in range(t+1, columns) if S[i, j] % pivot), None)
            if bad_row is None:
                break
            reduction.add_row(t, bad_row, 1)
        if S[t, t] < 0:
            reduction.negate_row(t)

    if inverses:
        return reduction.U, S, reduction.V, reduction.U_inv, reduction.V_inv
    return reduction.U, S, reduction.V

def invariant_factors(S):
    "The nonzero diagonal entries of a Smith normal form."
    return [ S[i, i] for i in range(min(S.shape)) if S[i, i] != 0 ]

def abelian_group(relation_rows, generators):
    "The abelian group with the given generators and relation vectors."
    _, S, _ = smith_normal_form(relation_rows, columns=generators)
    factors = invariant_factors(S)
    return AbelianGroup(generators - len(factors), [ d for d in factors if d > 1 ])

def surjection_count_z2(group):
    "Number of surjections onto Z_2, that is nonzero maps to Z_2."
    even = sum(1 for d in group.torsion if d % 2 == 0)
    return 2 ** (group.rank + even) - 1
