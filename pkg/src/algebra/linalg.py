"""
Sparse row reduction over Q and F_p, backed by sympy's DomainMatrix.

Vectors are dicts column -> raw field value. The stored rows are the reduced
row echelon form of everything added so far: each has a distinct pivot, its
smallest column, normalized to 1, and is zero on every other pivot column.
Normal forms are therefore unique.
"""

from typing import Dict, Iterable, List

from sympy.polys.domains import GF as FiniteDomain
from sympy.polys.domains import QQ as RationalDomain
from sympy.polys.matrices import DomainMatrix

from .scalars import Field

Vector = Dict[int, object]


class Echelon:
    """Incrementally built echelon basis of a subspace of a coordinate space."""

    def __init__(self, field: Field):
        self.field = field
        self.domain = RationalDomain if field.is_rational else FiniteDomain(field.characteristic)
        self.pivots: Dict[int, Vector] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def _to_domain(self, value):
        if self.field.is_rational:
            return self.domain(value.numerator, value.denominator)
        return self.domain(value)

    def extend(self, vectors: Iterable[Vector]) -> None:
        rows = list(self.pivots.values())
        added = [{c: v for c, v in vec.items() if v} for vec in vectors]
        added = [vec for vec in added if vec]
        if not added:
            return
        rows.extend(added)
        columns = sorted({c for row in rows for c in row})
        position = {c: i for i, c in enumerate(columns)}
        zero = self.domain.zero
        dense = []
        for row in rows:
            line = [zero] * len(columns)
            for c, v in row.items():
                line[position[c]] = self._to_domain(v)
            dense.append(line)

        reduced, pivot_positions = DomainMatrix(dense, (len(rows), len(columns)), self.domain).rref()
        entries = reduced.to_Matrix()
        pivots: Dict[int, Vector] = {}
        for i, j in enumerate(pivot_positions):
            row: Vector = {}
            for k, c in enumerate(columns):
                value = self.field.normalize(entries[i, k])
                if value:
                    row[c] = value
            pivots[columns[j]] = row
        self.pivots = pivots

    def add(self, vector: Vector) -> bool:
        """Insert a vector; True when it enlarged the span."""
        before = self.rank
        self.extend([vector])
        return self.rank > before

    def normal_form(self, vector: Vector) -> Vector:
        """Unique representative of vector + span supported off the pivot columns."""
        fld = self.field
        work = {c: v for c, v in vector.items() if v}
        for col, row in self.pivots.items():
            value = work.get(col)
            if not value:
                continue
            for c, v in row.items():
                updated = fld.reduce_raw(work.get(c, 0) - value * v)
                if updated:
                    work[c] = updated
                else:
                    work.pop(c, None)
        return work

    def contains(self, vector: Vector) -> bool:
        return not self.normal_form(vector)

    def pivot_columns(self) -> List[int]:
        return sorted(self.pivots)
