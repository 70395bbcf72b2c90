"""
Exact integer Smith normal form for small dense matrices.
"""
import math
from typing import List, Sequence, Tuple

Matrix = List[List[int]]


def xgcd(a: int, b: int) -> Tuple[int, int, int]:
    """(x, y, g) with x a + y b = g = gcd(a, b), g >= 0."""
    x, next_x = 1, 0
    y, next_y = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        x, next_x = next_x, x - q * next_x
        y, next_y = next_y, y - q * next_y
        g, next_g = next_g, g - q * next_g
    if g < 0:
        x, y, g = -x, -y, -g
    return x, y, g


class _Reducer:
    """Row and column operations on a private copy of the matrix."""

    def __init__(self, rows: Sequence[Sequence[int]], n_cols: int):
        self.d: Matrix = [list(r) for r in rows]
        self.m = len(self.d)
        self.n = n_cols

    def _combine_rows(self, i1: int, i2: int, x: int, y: int, z: int, w: int) -> None:
        r1, r2 = self.d[i1], self.d[i2]
        for j in range(self.n):
            a, b = r1[j], r2[j]
            r1[j], r2[j] = x * a + y * b, z * a + w * b

    def _combine_cols(self, j1: int, j2: int, x: int, y: int, z: int, w: int) -> None:
        for row in self.d:
            a, b = row[j1], row[j2]
            row[j1], row[j2] = x * a + y * b, z * a + w * b

    def clear_below(self, k: int, i: int) -> None:
        """Make d[i][k] zero, leaving gcd(d[k][k], d[i][k]) at d[k][k]."""
        a, b = self.d[k][k], self.d[i][k]
        if b == 0:
            return
        if a == 0:
            self.d[k], self.d[i] = self.d[i], self.d[k]
        elif b % a == 0:
            self._combine_rows(k, i, 1, 0, -(b // a), 1)
        else:
            x, y, g = xgcd(a, b)
            self._combine_rows(k, i, x, y, -(b // g), a // g)

    def clear_right(self, k: int, j: int) -> None:
        a, b = self.d[k][k], self.d[k][j]
        if b == 0:
            return
        if a == 0:
            self._combine_cols(k, j, 0, 1, 1, 0)
        elif b % a == 0:
            self._combine_cols(k, j, 1, 0, -(b // a), 1)
        else:
            x, y, g = xgcd(a, b)
            self._combine_cols(k, j, x, y, -(b // g), a // g)

    def _pivot(self, k: int) -> bool:
        """Bring a nonzero entry of the lower-right block to (k, k)."""
        for i in range(k, self.m):
            for j in range(k, self.n):
                if self.d[i][j]:
                    self.d[k], self.d[i] = self.d[i], self.d[k]
                    if j != k:
                        self._combine_cols(k, j, 0, 1, 1, 0)
                    return True
        return False

    def diagonalize(self) -> List[int]:
        for k in range(min(self.m, self.n)):
            if not self._pivot(k):
                break
            while True:
                for i in range(k + 1, self.m):
                    self.clear_below(k, i)
                if all(self.d[k][j] == 0 for j in range(k + 1, self.n)):
                    break
                for j in range(k + 1, self.n):
                    self.clear_right(k, j)
                if all(self.d[i][k] == 0 for i in range(k + 1, self.m)):
                    break
        return [abs(self.d[k][k]) for k in range(min(self.m, self.n)) if self.d[k][k]]


def invariant_factors(diagonal: Sequence[int]) -> List[int]:
    """
    Normalize nonzero diagonal entries into d1 | d2 | ... by replacing each
    pair (a, b) with (gcd, lcm) until the chain divides.
    """
    d = sorted(abs(v) for v in diagonal if v)
    changed = True
    while changed:
        changed = False
        for i in range(len(d)):
            for j in range(i + 1, len(d)):
                if d[j] % d[i]:
                    g = math.gcd(d[i], d[j])
                    d[i], d[j] = g, d[i] * d[j] // g
                    changed = True
        d.sort()
    return d


def smith_diagonal(rows: Sequence[Sequence[int]], n_cols: int) -> List[int]:
    """Invariant factors of an m x n integer matrix (zero entries dropped)."""
    if not rows or n_cols == 0:
        return []
    return invariant_factors(_Reducer(rows, n_cols).diagonalize())


def rank(rows: Sequence[Sequence[int]], n_cols: int) -> int:
    return len(smith_diagonal(rows, n_cols))
