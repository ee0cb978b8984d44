"""
Smith normal form over the integers with unimodular transforms.

All arithmetic uses Python integers, so entries never overflow. For an integer
matrix A the decomposition satisfies U * A * V = D with U, V unimodular and D
diagonal, d_1 | d_2 | ... ; the inverse of V is tracked alongside V because the
cyclic decompositions of quotients and submodules need the new generators in old
coordinates.
"""

from dataclasses import dataclass
from typing import List, Sequence

Matrix = List[List[int]]


@dataclass
class SmithForm:
    diagonal: List[int]
    left: Matrix
    right: Matrix
    right_inverse: Matrix
    rank: int


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


class _Reducer:
    """Row/column operations on a working copy, mirrored onto the transforms."""

    def __init__(self, matrix: Sequence[Sequence[int]], cols: int):
        self.a = [[int(x) for x in row] for row in matrix]
        self.rows = len(self.a)
        self.cols = cols
        self.u = identity(self.rows)
        self.v = identity(cols)
        self.v_inv = identity(cols)

    def swap_rows(self, i: int, j: int):
        if i != j:
            self.a[i], self.a[j] = self.a[j], self.a[i]
            self.u[i], self.u[j] = self.u[j], self.u[i]

    def swap_cols(self, i: int, j: int):
        if i == j:
            return
        for row in self.a:
            row[i], row[j] = row[j], row[i]
        for row in self.v:
            row[i], row[j] = row[j], row[i]
        self.v_inv[i], self.v_inv[j] = self.v_inv[j], self.v_inv[i]

    def add_row(self, target: int, source: int, q: int):
        # row_target += q * row_source
        if q == 0:
            return
        a_t, a_s = self.a[target], self.a[source]
        for k in range(self.cols):
            a_t[k] += q * a_s[k]
        u_t, u_s = self.u[target], self.u[source]
        for k in range(self.rows):
            u_t[k] += q * u_s[k]

    def add_col(self, target: int, source: int, q: int):
        # col_target += q * col_source; V^-1 gets the inverse row operation
        if q == 0:
            return
        for row in self.a:
            row[target] += q * row[source]
        for row in self.v:
            row[target] += q * row[source]
        inv_s, inv_t = self.v_inv[source], self.v_inv[target]
        for k in range(self.cols):
            inv_s[k] -= q * inv_t[k]

    def negate_row(self, i: int):
        self.a[i] = [-x for x in self.a[i]]
        self.u[i] = [-x for x in self.u[i]]

    def smallest_in_block(self, s: int):
        best = None
        for i in range(s, self.rows):
            for j in range(s, self.cols):
                x = self.a[i][j]
                if x != 0 and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
        return best

    def clear_edging(self, s: int):
        """Zero row s and column s outside the pivot; pivot ends up dividing its block."""
        while True:
            done = True
            for i in range(s + 1, self.rows):
                if self.a[i][s] != 0:
                    self.add_row(i, s, -(self.a[i][s] // self.a[s][s]))
                    if self.a[i][s] != 0:
                        done = False
            for j in range(s + 1, self.cols):
                if self.a[s][j] != 0:
                    self.add_col(j, s, -(self.a[s][j] // self.a[s][s]))
                    if self.a[s][j] != 0:
                        done = False
            if done:
                offender = self._non_divisible(s)
                if offender is None:
                    break
                self.add_row(s, offender, 1)
                done = False
            # move the smallest remaining edge entry into the pivot
            best = (abs(self.a[s][s]), s, s)
            for i in range(s + 1, self.rows):
                x = self.a[i][s]
                if x != 0 and abs(x) < best[0]:
                    best = (abs(x), i, s)
            for j in range(s + 1, self.cols):
                x = self.a[s][j]
                if x != 0 and abs(x) < best[0]:
                    best = (abs(x), s, j)
            self.swap_rows(s, best[1])
            self.swap_cols(s, best[2])

        if self.a[s][s] < 0:
            self.negate_row(s)

    def _non_divisible(self, s: int):
        p = self.a[s][s]
        for i in range(s + 1, self.rows):
            for j in range(s + 1, self.cols):
                if self.a[i][j] % p != 0:
                    return i
        return None


def smith_normal_form(matrix: Sequence[Sequence[int]], cols: int = None) -> SmithForm:
    """Compute U * A * V = D.

    Args:
        matrix: Integer matrix as a list of rows (may have zero rows)
        cols: Number of columns, required when the matrix has no rows

    Returns:
        SmithForm with the diagonal of D (length min(rows, cols)), U, V, V^-1 and the rank
    """
    if cols is None:
        cols = len(matrix[0]) if matrix else 0
    reducer = _Reducer(matrix, cols)
    rank = 0
    for s in range(min(reducer.rows, cols)):
        best = reducer.smallest_in_block(s)
        if best is None:
            break
        _, i, j = best
        reducer.swap_rows(s, i)
        reducer.swap_cols(s, j)
        reducer.clear_edging(s)
        rank = s + 1

    diagonal = [reducer.a[i][i] for i in range(min(reducer.rows, cols))]
    return SmithForm(diagonal, reducer.u, reducer.v, reducer.v_inv, rank)


def integer_kernel(matrix: Sequence[Sequence[int]], cols: int) -> Matrix:
    """Basis of {x in Z^cols : A x = 0} as a list of vectors."""
    form = smith_normal_form(matrix, cols)
    return [[form.right[i][j] for i in range(cols)] for j in range(form.rank, cols)]


def congruence_solutions(congruences: Sequence[tuple], nvars: int) -> Matrix:
    """Generators of the lattice of integer x with sum(a_j x_j) = 0 mod n for each (a, n).

    Each congruence becomes a row of [A | diag(n)] and the x-part of the integer
    kernel of that system spans the solution lattice.
    """
    count = len(congruences)
    if count == 0:
        return identity(nvars)
    system = []
    for idx, (coeffs, modulus) in enumerate(congruences):
        row = [int(c) for c in coeffs] + [0] * count
        row[nvars + idx] = int(modulus)
        system.append(row)
    kernel = integer_kernel(system, nvars + count)
    return [vector[:nvars] for vector in kernel]


def lattice_index(rows: Sequence[Sequence[int]], dim: int) -> int:
    """Index [Z^dim : span(rows)]; the span must have full rank."""
    form = smith_normal_form(rows, dim)
    if form.rank < dim:
        raise ValueError("lattice does not have full rank")
    index = 1
    for d in form.diagonal[:dim]:
        index *= abs(d)
    return index
