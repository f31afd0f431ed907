"""Sparse exact matrices with labelled bases, plus Matrix Market export."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

import numpy as np

from .basis import BasisIndexer
from .exceptions import DomainError
from .fields import FieldDescriptor


@dataclass(frozen=True)
class MapMatrix:
    """A linear map as a coordinate dict ``{(row, col): coefficient}``.

    ``row_basis`` / ``col_basis`` label the codomain / domain when they are
    monomial spaces; evaluation matrices have point rows and no row basis.
    """

    shape: tuple[int, int]
    entries: dict[tuple[int, int], int | Fraction]
    field: FieldDescriptor
    row_basis: BasisIndexer | None = None
    col_basis: BasisIndexer | None = None
    meta: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        nr, nc = self.shape
        clean = {}
        for (i, j), v in self.entries.items():
            if not (0 <= i < nr and 0 <= j < nc):
                raise DomainError(f"entry ({i}, {j}) outside shape {self.shape}")
            v = self.field(v)
            if v != 0:
                clean[(i, j)] = v
        object.__setattr__(self, "entries", clean)
        if self.row_basis is not None and self.row_basis.dim != nr:
            raise DomainError("row basis does not match the row count")
        if self.col_basis is not None and self.col_basis.dim != nc:
            raise DomainError("column basis does not match the column count")

    @property
    def nrows(self) -> int:
        return self.shape[0]

    @property
    def ncols(self) -> int:
        return self.shape[1]

    @property
    def nnz(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij: tuple[int, int]):
        return self.entries.get(ij, self.field(0))

    def to_dense(self) -> np.ndarray:
        """Dense copy: int64 residues over F_p, an object array over QQ."""
        if self.field.is_prime_field:
            out = np.zeros(self.shape, dtype=np.int64)
        else:
            out = np.full(self.shape, Fraction(0), dtype=object)
        for (i, j), v in self.entries.items():
            out[i, j] = v
        return out

    def to_rows(self) -> list[dict[int, int | Fraction]]:
        rows: list[dict] = [dict() for _ in range(self.nrows)]
        for (i, j), v in self.entries.items():
            rows[i][j] = v
        return rows

    def transpose(self) -> MapMatrix:
        return MapMatrix(
            (self.ncols, self.nrows),
            {(j, i): v for (i, j), v in self.entries.items()},
            self.field,
            self.col_basis,
            self.row_basis,
        )

    def __add__(self, other: MapMatrix) -> MapMatrix:
        self._check_compatible(other, self.shape)
        out = dict(self.entries)
        for k, v in other.entries.items():
            out[k] = out.get(k, 0) + v
        return MapMatrix(self.shape, out, self.field, self.row_basis, self.col_basis)

    def __matmul__(self, other: MapMatrix) -> MapMatrix:
        if self.ncols != other.nrows:
            raise DomainError(f"cannot compose {self.shape} after {other.shape}")
        self._check_compatible(other, other.shape)
        by_row: dict[int, list] = {}
        for (k, j), v in other.entries.items():
            by_row.setdefault(k, []).append((j, v))
        out: dict = {}
        for (i, k), u in self.entries.items():
            for j, v in by_row.get(k, ()):
                out[(i, j)] = out.get((i, j), 0) + u * v
        return MapMatrix(
            (self.nrows, other.ncols), out, self.field, self.row_basis, other.col_basis
        )

    def _check_compatible(self, other: MapMatrix, shape):
        if other.field != self.field:
            raise DomainError(f"field mismatch: {self.field} vs {other.field}")
        if other.shape != shape:
            raise DomainError(f"shape mismatch: {other.shape} vs {shape}")

    def to_matrix_market(self) -> str:
        """Coordinate text with an ``integer general`` header, 1-based indices.

        F_p entries are written as residues in [0, p).  Over QQ every entry
        must be an integer.
        """
        lines = [
            "%%MatrixMarket matrix coordinate integer general",
            f"{self.nrows} {self.ncols} {self.nnz}",
        ]
        for (i, j), v in sorted(self.entries.items()):
            if isinstance(v, Fraction):
                if v.denominator != 1:
                    raise DomainError(f"non-integer entry {v} cannot be exported")
                v = v.numerator
            lines.append(f"{i + 1} {j + 1} {v}")
        return "\n".join(lines) + "\n"

    def write_matrix_market(self, path: str | Path) -> None:
        Path(path).write_text(self.to_matrix_market())


def from_dense(a, field: FieldDescriptor) -> MapMatrix:
    """Wrap a 2-d array-like of integers or fractions."""
    a = np.asarray(a, dtype=object)
    if a.ndim != 2:
        raise DomainError("expected a 2-d array")
    entries = {(i, j): a[i, j] for i, j in zip(*np.nonzero(a != 0))}
    return MapMatrix(a.shape, entries, field)


def identity(n: int, field: FieldDescriptor) -> MapMatrix:
    return MapMatrix((n, n), {(i, i): 1 for i in range(n)}, field)


def zeros(nrows: int, ncols: int, field: FieldDescriptor) -> MapMatrix:
    return MapMatrix((nrows, ncols), {}, field)
