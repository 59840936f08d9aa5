# exact.py
#
# Exact rank and positive-semidefiniteness of rational matrices.

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Optional

from homrep.utilities.errors import ContractViolation
from homrep.utilities.utils import integer_row


def exact_rank(m):
    """Rank by fraction-free (Bareiss) elimination on rows cleared of denominators."""
    rows = [integer_row(row) for row in m]
    if not rows or not rows[0]:
        return 0
    n_rows, n_cols = len(rows), len(rows[0])
    previous = 1
    rank = 0
    for col in range(n_cols):
        if rank == n_rows:
            break
        pivot = next((i for i in range(rank, n_rows) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        p = rows[rank][col]
        for i in range(rank + 1, n_rows):
            factor = rows[i][col]
            row_i = rows[i]
            row_r = rows[rank]
            for j in range(col + 1, n_cols):
                row_i[j] = (p * row_i[j] - factor * row_r[j]) // previous
            row_i[col] = 0
        previous = p
        rank += 1
    return rank


@dataclass(frozen=True)
class PsdVerdict:
    verdict: str
    witness: Optional[tuple] = None
    value: Optional[Fraction] = None
    pivots: tuple = ()

    @property
    def is_psd(self):
        return self.verdict == "psd"


def quadratic_form(m, x):
    return sum((Fraction(x[i]) * m[i][j] * x[j] for i in range(len(x)) for j in range(len(x)) if x[i] and x[j]),
               Fraction(0))


def check_symmetric(m):
    n = len(m)
    for i in range(n):
        if len(m[i]) != n:
            raise ContractViolation(f"matrix is not square: row {i} has {len(m[i])} entries, expected {n}")
        for j in range(i):
            if m[i][j] != m[j][i]:
                raise ContractViolation(f"matrix is not symmetric at ({i},{j})")


def _witness(m, history, seed_vector):
    """Back-substitute a vector on the remaining block through the eliminated pivots."""
    x = dict(seed_vector)
    for p, row, pivot in reversed(history):
        x[p] = -sum((value * x.get(j, 0) for j, value in row.items()), Fraction(0)) / pivot
    vector = [x.get(i, Fraction(0)) for i in range(len(m))]
    scale = 1
    for v in vector:
        scale = lcm(scale, v.denominator)
    vector = tuple(v * scale for v in vector)
    return vector, quadratic_form(m, vector)


def psd_check(m):
    """
    Symmetric elimination with largest-diagonal pivoting. A negative
    diagonal in the Schur complement, or a zero diagonal with a nonzero
    off-diagonal entry, gives a witness x with x^T m x < 0.
    """
    check_symmetric(m)
    n = len(m)
    a = [[Fraction(v) for v in row] for row in m]
    active = list(range(n))
    history = []
    pivots = []
    while active:
        negative = [i for i in active if a[i][i] < 0]
        if negative:
            vector, value = _witness(m, history, {negative[0]: Fraction(1)})
            return PsdVerdict("not_psd", vector, value, tuple(pivots))
        best = max(active, key=lambda i: (a[i][i], -i))
        if a[best][best] == 0:
            for i in active:
                for j in active:
                    if j > i and a[i][j] != 0:
                        sign = 1 if a[i][j] > 0 else -1
                        vector, value = _witness(m, history, {i: Fraction(1), j: Fraction(-sign)})
                        return PsdVerdict("not_psd", vector, value, tuple(pivots))
            break
        p = best
        pivot = a[p][p]
        active.remove(p)
        history.append((p, {j: a[p][j] for j in active if a[p][j]}, pivot))
        pivots.append(pivot)
        for i in active:
            if not a[i][p]:
                continue
            factor = a[i][p] / pivot
            for j in active:
                if a[p][j]:
                    a[i][j] -= factor * a[p][j]
    return PsdVerdict("psd", None, None, tuple(pivots))


def verify_witness(m, verdict):
    """Re-check a verdict: a not_psd witness must give the claimed negative value."""
    if verdict.is_psd:
        return verdict.witness is None
    value = quadratic_form(m, verdict.witness)
    return value < 0 and value == verdict.value
