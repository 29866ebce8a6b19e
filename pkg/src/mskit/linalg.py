"""Exact dense linear algebra over the package's fields.

Vectors are lists of scalars and subspaces are row spans.  The central
tool is an incremental echelon form that remembers how each stored row
was obtained from the inserted originals, which gives membership tests,
linear solves and relation (left-kernel) bases in one pass.  Matrices
stay small throughout the package, so everything is plain dense
Gaussian elimination.
"""

from __future__ import annotations

from typing import List, Optional, Sequence, Tuple


class Echelon:
    """Row echelon accumulator with combination tracking.

    ``rows[i]`` is a reduced row with leading entry 1 at ``pivots[i]``,
    and equals the combination ``sum(combos[i][j] * original_j)`` over
    the originals inserted via :meth:`add` so far.
    """

    def __init__(self, field, ncols: int):
        self.field = field
        self.ncols = ncols
        self.rows: List[List] = []
        self.pivots: List[int] = []
        self.combos: List[List] = []
        self.n_seen = 0

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, v: Sequence) -> Tuple[List, List]:
        """Return (residual, coeffs) with v = sum(coeffs*originals) + residual."""
        res = list(v)
        coeffs = [self.field.zero] * self.n_seen
        for row, piv, combo in zip(self.rows, self.pivots, self.combos):
            f = res[piv]
            if not f:
                continue
            for j in range(piv, self.ncols):
                if row[j]:
                    res[j] = res[j] - f * row[j]
            for j, c in enumerate(combo):
                coeffs[j] = coeffs[j] + f * c
        return res, coeffs

    def add(self, v: Sequence) -> Optional[List]:
        """Insert a vector.

        Returns None when v enlarges the span; otherwise returns the
        coefficients expressing v over the previously inserted originals.
        """
        res, coeffs = self.reduce(v)
        piv = next((j for j, x in enumerate(res) if x), None)
        if piv is None:
            self.n_seen += 1
            for combo in self.combos:
                combo.append(self.field.zero)
            return coeffs
        f = res[piv]
        row = [x / f for x in res]
        combo = [-c / f for c in coeffs]
        combo.append(self.field.one / f)
        self.n_seen += 1
        for other in self.combos:
            other.append(self.field.zero)
        k = next((i for i, p in enumerate(self.pivots) if p > piv), len(self.pivots))
        self.rows.insert(k, row)
        self.pivots.insert(k, piv)
        self.combos.insert(k, combo)
        return None

    def contains(self, v: Sequence) -> bool:
        res, _ = self.reduce(v)
        return not any(res)

    def solve(self, v: Sequence) -> Optional[List]:
        """Coefficients over the inserted originals reproducing v, or None."""
        res, coeffs = self.reduce(v)
        if any(res):
            return None
        return coeffs

    def canonical(self) -> List[List]:
        """Fully reduced canonical basis of the span (pivot entries isolated)."""
        rows = [list(r) for r in self.rows]
        for i in range(len(rows) - 1, -1, -1):
            piv = self.pivots[i]
            for k in range(i):
                f = rows[k][piv]
                if f:
                    for j in range(piv, self.ncols):
                        if rows[i][j]:
                            rows[k][j] = rows[k][j] - f * rows[i][j]
        return rows


def row_basis(rows: Sequence[Sequence], field, ncols: int) -> List[List]:
    ech = Echelon(field, ncols)
    for r in rows:
        ech.add(r)
    return ech.canonical()


def rank(rows: Sequence[Sequence], field, ncols: int) -> int:
    ech = Echelon(field, ncols)
    for r in rows:
        ech.add(r)
    return ech.rank


def relations(rows: Sequence[Sequence], field, ncols: int) -> List[List]:
    """A basis of the left kernel: vectors c with sum(c_i * rows_i) = 0."""
    ech = Echelon(field, ncols)
    out = []
    for i, r in enumerate(rows):
        coeffs = ech.add(r)
        if coeffs is not None:
            rel = [-c for c in coeffs] + [field.one]
            rel += [field.zero] * (len(rows) - i - 1)
            out.append(rel)
    return out


def solve_left(rows: Sequence[Sequence], target: Sequence, field, ncols: int) -> Optional[List]:
    """Coefficients c with sum(c_i * rows_i) = target, or None."""
    ech = Echelon(field, ncols)
    for r in rows:
        ech.add(r)
    return ech.solve(target)


def intersect_rowspaces(a_rows: Sequence[Sequence], b_rows: Sequence[Sequence], field, ncols: int) -> List[List]:
    """A basis of span(a_rows) & span(b_rows)."""
    stacked = list(a_rows) + list(b_rows)
    out = []
    for rel in relations(stacked, field, ncols):
        vec = [field.zero] * ncols
        for c, row in zip(rel[: len(a_rows)], a_rows):
            if c:
                for j, x in enumerate(row):
                    if x:
                        vec[j] = vec[j] + c * x
        if any(vec):
            out.append(vec)
    return row_basis(out, field, ncols)


def same_rowspace(a_rows: Sequence[Sequence], b_rows: Sequence[Sequence], field, ncols: int) -> bool:
    return row_basis(a_rows, field, ncols) == row_basis(b_rows, field, ncols)


def mat_mul(rows: Sequence[Sequence], mat: Sequence[Sequence], field, out_cols: int) -> List[List]:
    """Row-vector times matrix for each row: rows @ mat."""
    out = []
    for r in rows:
        acc = [field.zero] * out_cols
        for i, x in enumerate(r):
            if x:
                mi = mat[i]
                for j in range(out_cols):
                    if mi[j]:
                        acc[j] = acc[j] + x * mi[j]
        out.append(acc)
    return out


def zero_matrix(nrows: int, ncols: int, field) -> List[List]:
    return [[field.zero] * ncols for _ in range(nrows)]


def identity_matrix(n: int, field) -> List[List]:
    out = zero_matrix(n, n, field)
    for i in range(n):
        out[i][i] = field.one
    return out
