"""
src/symmetra/algebra/linalg.py

Sparse Gauss-Jordan elimination over a ScalarField. A row is a dict
column -> non-zero scalar, read as sum(row[c] * u_c) = row.get(RHS, 0).
"""
import logging
from typing import Dict, Iterable, List, Optional, Tuple

from symmetra.algebra.scalars import Scalar, ScalarField

logger = logging.getLogger(__name__)

RHS = -1

Row = Dict[int, Scalar]


def _iadd(target: Row, coef: Scalar, other: Row):
    """target += coef * other, dropping zeros."""
    for col, value in other.items():
        total = target.get(col, 0) + coef * value
        if total:
            target[col] = total
        else:
            target.pop(col, None)


class EchelonForm:
    """Reduced row echelon form, built one row at a time."""

    def __init__(self, field: ScalarField, ncols: int):
        self.field = field
        self.ncols = ncols
        self.pivots: Dict[int, Row] = {}
        self.consistent = True

    def add_row(self, row: Row):
        r = {c: v for c, v in row.items() if v}
        for col, prow in self.pivots.items():
            c = r.get(col)
            if c:
                _iadd(r, -c, prow)
        cols = [c for c in r if c != RHS]
        if not cols:
            if r.get(RHS):
                self.consistent = False
            return
        col = min(cols)
        scale = self.field.inv(r[col])
        r = {c: v * scale for c, v in r.items()}
        for other in self.pivots.values():
            c = other.get(col)
            if c:
                _iadd(other, -c, r)
        self.pivots[col] = r

    def add_rows(self, rows: Iterable[Row]) -> 'EchelonForm':
        for row in rows:
            self.add_row(row)
        return self

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def free_columns(self) -> List[int]:
        return [c for c in range(self.ncols) if c not in self.pivots]

    def nullspace(self) -> List[Row]:
        """One basis vector per free column, with that column set to 1."""
        basis = []
        for f in self.free_columns():
            vec: Row = {f: self.field.one}
            for p, prow in self.pivots.items():
                c = prow.get(f)
                if c:
                    vec[p] = -c
            basis.append(vec)
        return basis

    def particular_solution(self) -> Optional[Row]:
        """Solution with every free column zero, or None if inconsistent."""
        if not self.consistent:
            return None
        return {p: prow[RHS] for p, prow in self.pivots.items() if prow.get(RHS)}


def nullspace(field: ScalarField, rows: Iterable[Row], ncols: int) -> List[Row]:
    return EchelonForm(field, ncols).add_rows(rows).nullspace()


def solve_affine(field: ScalarField, rows: Iterable[Row], ncols: int) -> Tuple[Optional[Row], List[int]]:
    """(particular solution or None, free columns) of an augmented system."""
    form = EchelonForm(field, ncols).add_rows(rows)
    logger.debug("solve_affine: rank %d of %d columns", form.rank, ncols)
    return form.particular_solution(), form.free_columns()
