# -*- coding: utf-8 -*-
"""
Exact integer linear algebra
============================

Two tools:

- ``IntMatrix``: a sparse integer matrix (rows of ``{column: value}``) with
  elimination to diagonal form. Used for ranks and invariant factors of
  boundary matrices, which can have thousands of columns.
- ``diagonal_form``: dense unimodular reduction A = S·D·T on numpy
  object arrays (exact Python ints), with inverses. Used where the
  transforms matter: integer kernels and integer solvability.

All arithmetic is on Python ints, so there is no overflow.
"""

import logging
from dataclasses import dataclass
from math import gcd
from typing import Dict, Iterable, List, Optional, Tuple

import numpy as np

from evrard.budget import Budget

logger = logging.getLogger(__name__)


class IntMatrix:
    """
    Sparse integer matrix.

    Attributes:
        n_rows: Number of rows
        n_cols: Number of columns
        rows: Row index -> {column index: nonzero value}
    """

    def __init__(self, n_rows: int, n_cols: int, entries: Optional[Iterable[Tuple[int, int, int]]] = None):
        self.n_rows = n_rows
        self.n_cols = n_cols
        self.rows: Dict[int, Dict[int, int]] = {}
        for i, j, value in entries or ():
            self.add(i, j, value)

    def add(self, i: int, j: int, value: int) -> None:
        """Add ``value`` to entry (i, j)."""
        if not value:
            return
        row = self.rows.setdefault(i, {})
        new = row.get(j, 0) + value
        if new:
            row[j] = new
        else:
            del row[j]
            if not row:
                del self.rows[i]

    def get(self, i: int, j: int) -> int:
        return self.rows.get(i, {}).get(j, 0)

    @property
    def shape(self) -> Tuple[int, int]:
        return self.n_rows, self.n_cols

    def nnz(self) -> int:
        return sum(len(row) for row in self.rows.values())

    def is_zero(self) -> bool:
        return not self.rows

    def columns(self) -> Dict[int, Dict[int, int]]:
        cols: Dict[int, Dict[int, int]] = {}
        for i, row in self.rows.items():
            for j, value in row.items():
                cols.setdefault(j, {})[i] = value
        return cols

    def matmul(self, other: "IntMatrix") -> "IntMatrix":
        """self · other."""
        if self.n_cols != other.n_rows:
            raise ValueError(f"Shape mismatch: {self.shape} · {other.shape}")
        result = IntMatrix(self.n_rows, other.n_cols)
        for i, row in self.rows.items():
            for k, a in row.items():
                for j, b in other.rows.get(k, {}).items():
                    result.add(i, j, a * b)
        return result

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        if self.shape != other.shape:
            raise ValueError(f"Shape mismatch: {self.shape} - {other.shape}")
        result = self.copy()
        for i, row in other.rows.items():
            for j, value in row.items():
                result.add(i, j, -value)
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    def copy(self) -> "IntMatrix":
        result = IntMatrix(self.n_rows, self.n_cols)
        result.rows = {i: dict(row) for i, row in self.rows.items()}
        return result

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, ((i, i, 1) for i in range(n)))

    @classmethod
    def from_dense(cls, array: np.ndarray) -> "IntMatrix":
        array = np.asarray(array, dtype=object)
        n_rows, n_cols = array.shape
        return cls(n_rows, n_cols, ((i, j, int(array[i, j]))
                                    for i in range(n_rows) for j in range(n_cols) if array[i, j]))

    def to_dense(self) -> np.ndarray:
        array = np.zeros((self.n_rows, self.n_cols), dtype=object)
        for i, row in self.rows.items():
            for j, value in row.items():
                array[i, j] = value
        return array

    def column_vector(self, j: int) -> np.ndarray:
        vector = np.zeros(self.n_rows, dtype=object)
        for i, row in self.rows.items():
            if j in row:
                vector[i] = row[j]
        return vector

    def __repr__(self) -> str:
        return f"IntMatrix({self.n_rows}x{self.n_cols}, nnz={self.nnz()})"


def _pick_pivot(rows: Dict[int, Dict[int, int]], col_index: Dict[int, set]) -> Tuple[int, int]:
    best, best_key = None, None
    for i, row in rows.items():
        for j, value in row.items():
            key = (abs(value), len(row) + len(col_index[j]))
            if best_key is None or key < best_key:
                best, best_key = (i, j), key
                if key[0] == 1 and key[1] <= 3:
                    return best
    return best


def diagonal_entries(matrix: IntMatrix, budget: Optional[Budget] = None) -> List[int]:
    """
    Reduce ``matrix`` to diagonal form by unimodular row/column operations.

    Pivots prefer ±1 entries in short rows/columns. Non-unit pivots are
    replaced by remainders until they divide their row and column.

    Every pivot pass spends the rows and columns it touches against
    ``budget``.

    Returns:
        Absolute values of the nonzero diagonal entries (not yet a divisor chain)
    """
    rows = {i: dict(row) for i, row in matrix.rows.items()}
    col_index: Dict[int, set] = {}
    for i, row in rows.items():
        for j in row:
            col_index.setdefault(j, set()).add(i)

    def add_row(target: int, source: int, factor: int) -> None:
        row_t = rows.setdefault(target, {})
        for j, value in rows[source].items():
            new = row_t.get(j, 0) + factor * value
            if new:
                if j not in row_t:
                    col_index[j].add(target)
                row_t[j] = new
            elif j in row_t:
                del row_t[j]
                col_index[j].discard(target)
        if not row_t:
            del rows[target]

    what = f"elimination of a {matrix.n_rows}x{matrix.n_cols} matrix"
    diagonal = []
    while rows:
        if budget is not None:
            budget.spend(len(rows), what)
        r, c = _pick_pivot(rows, col_index)
        while True:
            p = rows[r][c]
            others = [i for i in col_index[c] if i != r]
            if budget is not None:
                budget.spend(len(others) * len(rows[r]) + 1, what)
            leftover = False
            for i in others:
                q = rows[i][c] // p
                add_row(i, r, -q)
                if i in rows and rows[i].get(c):
                    leftover = True
            if leftover:
                r = min((i for i in col_index[c]), key=lambda i: abs(rows[i][c]))
                continue
            row_r = rows[r]
            for j in [j for j in row_r if j != c]:
                q = row_r[j] // p
                new = row_r[j] - q * p
                if new:
                    row_r[j] = new
                    leftover = True
                else:
                    del row_r[j]
                    col_index[j].discard(r)
            if leftover:
                c = min((j for j in row_r), key=lambda j: abs(row_r[j]))
                continue
            break
        diagonal.append(abs(rows[r][c]))
        del rows[r]
        col_index[c].discard(r)
    return diagonal


def invariant_factors(diagonal: Iterable[int]) -> List[int]:
    """
    Turn nonzero diagonal entries into the divisor chain d₁ | d₂ | ... by gcd/lcm exchanges.
    """
    values = [abs(d) for d in diagonal if d]
    units = sum(1 for d in values if d == 1)
    rest = sorted(d for d in values if d != 1)
    for i in range(len(rest)):
        for j in range(i + 1, len(rest)):
            g = gcd(rest[i], rest[j])
            rest[i], rest[j] = g, rest[i] * rest[j] // g
    factors = [1] * units + [d for d in rest if d == 1] + [d for d in rest if d != 1]
    return factors


@dataclass
class Elimination:
    """Rank and invariant factors of an integer matrix."""
    rank: int
    factors: List[int]

    @property
    def torsion(self) -> List[int]:
        return [d for d in self.factors if d > 1]


def eliminate(matrix: IntMatrix, budget: Optional[Budget] = None) -> Elimination:
    diagonal = diagonal_entries(matrix, budget=budget)
    factors = invariant_factors(diagonal)
    logger.debug("  Eliminated %dx%d matrix: rank %d", matrix.n_rows, matrix.n_cols, len(factors))
    return Elimination(len(factors), factors)


# ----------------------------------------------------------------------
# Dense reduction with transforms
# ----------------------------------------------------------------------

def exgcd(a: int, b: int) -> np.ndarray:
    """
    A 2x2 integer matrix M of determinant 1 with M @ [a, b] = [gcd(a, b), 0].

    If a divides b, M[0, 1] is 0.
    """
    if a == 0 and b == 0:
        return np.eye(2, dtype=object)
    a_sign = -1 if a < 0 else 1
    a *= a_sign
    b_sign = -1 if b < 0 else 1
    b *= b_sign
    M = np.array([[b, 0, 1],
                  [a, 1, 0]], dtype=object)
    while M[1, 0] != 0:
        q = M[0, 0] // M[1, 0]
        M[0] -= q * M[1]
        M = M[::-1]
    g = M[0, 0]
    M = M[:, 1:]
    M *= [a_sign, b_sign]
    if g != 0:
        M[1] = [-b_sign * b // g, a_sign * a // g]
    return np.array(M, dtype=object)


def _inverse_2x2(M: np.ndarray) -> np.ndarray:
    return np.array([[M[1, 1], -M[0, 1]], [-M[1, 0], M[0, 0]]], dtype=object)


@dataclass
class DiagonalForm:
    """
    A = S @ D @ T with S, T unimodular and D diagonal.

    Attributes:
        D: Diagonal matrix (same shape as A)
        S, T: Unimodular transforms
        S_inv, T_inv: Their exact inverses
    """
    D: np.ndarray
    S: np.ndarray
    T: np.ndarray
    S_inv: np.ndarray
    T_inv: np.ndarray

    def diagonal(self) -> List[int]:
        return [self.D[i, i] for i in range(min(self.D.shape))]

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal() if d != 0)


def diagonal_form(A: np.ndarray) -> DiagonalForm:
    """
    Reduce an integer matrix to diagonal form, tracking both transforms.

    Alternately clears the i-th column (row operations) and the i-th row
    (column operations) until both are clear, then moves on to i+1.
    """
    D = np.array(A, dtype=object).copy()
    n_rows, n_cols = D.shape
    S, T = np.eye(n_rows, dtype=object), np.eye(n_cols, dtype=object)
    S_inv, T_inv = S.copy(), T.copy()

    def clear_row(i: int) -> bool:
        if (D[i, i + 1:] == 0).all():
            return False
        for j in range(i + 1, n_cols):
            M = exgcd(D[i, i], D[i, j]).T
            D[:, [i, j]] = D[:, [i, j]].dot(M)
            T[[i, j]] = _inverse_2x2(M).dot(T[[i, j]])
            T_inv[:, [i, j]] = T_inv[:, [i, j]].dot(M)
        return True

    def clear_col(i: int) -> bool:
        if (D[i + 1:, i] == 0).all():
            return False
        for j in range(i + 1, n_rows):
            M = exgcd(D[i, i], D[j, i])
            D[[i, j]] = M.dot(D[[i, j]])
            S[:, [i, j]] = S[:, [i, j]].dot(_inverse_2x2(M))
            S_inv[[i, j]] = M.dot(S_inv[[i, j]])
        return True

    for i in range(min(n_rows, n_cols)):
        clear_col(i)
        while clear_row(i) and clear_col(i):
            pass
    return DiagonalForm(D, S, T, S_inv, T_inv)


def smith_normal_form(A: np.ndarray) -> List[int]:
    """Invariant factors of A (nonzero diagonal of its Smith normal form)."""
    return invariant_factors(diagonal_form(A).diagonal())


def integer_kernel(A: np.ndarray) -> np.ndarray:
    """
    A basis of {x ∈ ℤⁿ : A x = 0} as the columns of the returned matrix.

    With A = S D T, x is in the kernel iff T x is supported where D has zero
    diagonal, so the basis is the matching columns of T⁻¹.
    """
    A = np.array(A, dtype=object)
    n_rows, n_cols = A.shape
    if n_rows == 0:
        return np.eye(n_cols, dtype=object)
    form = diagonal_form(A)
    diagonal = form.diagonal()
    free = [j for j in range(n_cols) if j >= len(diagonal) or diagonal[j] == 0]
    return form.T_inv[:, free] if free else np.zeros((n_cols, 0), dtype=object)


def solvable_over_integers(A: np.ndarray, y: np.ndarray, form: Optional[DiagonalForm] = None) -> bool:
    """
    Whether A x = y has an integer solution.

    With A = S D T: D (T x) = S⁻¹ y, which is solvable iff every entry
    of S⁻¹ y is divisible by the matching diagonal entry (zero where the
    diagonal is zero or absent).
    """
    A = np.array(A, dtype=object)
    y = np.array(y, dtype=object).reshape(-1)
    if A.shape[0] == 0:
        return True
    if A.shape[1] == 0:
        return not any(y)
    form = form or diagonal_form(A)
    rhs = form.S_inv.dot(y)
    diagonal = form.diagonal()
    for i, value in enumerate(rhs):
        d = diagonal[i] if i < len(diagonal) else 0
        if d == 0:
            if value != 0:
                return False
        elif value % d != 0:
            return False
    return True
