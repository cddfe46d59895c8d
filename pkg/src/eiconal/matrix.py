"""Dense exact matrices over Q(sqrt2, sqrt3).

Matrices are immutable (tuple-of-tuples storage).  Multiplication skips zero
entries, which matters because the Hurwitz-family constructions produce
signed permutation matrices that are almost entirely zero.
"""

from __future__ import annotations

from typing import Iterable, Sequence, Union

from .scalar import ONE, ZERO, Scalar


class ScalarMatrix:
    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Sequence[Sequence]) -> None:
        grid = tuple(
            tuple(Scalar.coerce(v) for v in row) for row in entries
        )
        if not grid or not grid[0]:
            raise ValueError("matrix must have at least one row and column")
        cols = len(grid[0])
        if any(len(row) != cols for row in grid):
            raise ValueError("ragged rows in matrix")
        self.entries = grid
        self.rows = len(grid)
        self.cols = cols

    # -- constructors --------------------------------------------------------

    @classmethod
    def identity(cls, n: int) -> ScalarMatrix:
        return cls(
            [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]
        )

    @classmethod
    def zero(cls, rows: int, cols: int) -> ScalarMatrix:
        return cls([[ZERO] * cols for _ in range(rows)])

    # -- access ---------------------------------------------------------------

    def entry(self, i: int, j: int) -> Scalar:
        return self.entries[i][j]

    def row(self, i: int) -> tuple[Scalar, ...]:
        return self.entries[i]

    # -- algebra ---------------------------------------------------------------

    def transpose(self) -> ScalarMatrix:
        return ScalarMatrix(
            [[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)]
        )

    def __add__(self, other: ScalarMatrix) -> ScalarMatrix:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("matrix shape mismatch in addition")
        return ScalarMatrix(
            [
                [a + b for a, b in zip(r1, r2)]
                for r1, r2 in zip(self.entries, other.entries)
            ]
        )

    def __neg__(self) -> ScalarMatrix:
        return ScalarMatrix([[-v for v in row] for row in self.entries])

    def __sub__(self, other: ScalarMatrix) -> ScalarMatrix:
        return self + (-other)

    def scale(self, s: Union[Scalar, int]) -> ScalarMatrix:
        s = Scalar.coerce(s)
        return ScalarMatrix([[v * s for v in row] for row in self.entries])

    def __matmul__(self, other: ScalarMatrix) -> ScalarMatrix:
        if self.cols != other.rows:
            raise ValueError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        b_sparse = [
            [(j, v) for j, v in enumerate(row) if not v.is_zero()]
            for row in other.entries
        ]
        out = [[ZERO] * other.cols for _ in range(self.rows)]
        for i in range(self.rows):
            row = self.entries[i]
            acc = out[i]
            for k in range(self.cols):
                a = row[k]
                if a.is_zero():
                    continue
                for j, b in b_sparse[k]:
                    acc[j] = acc[j] + a * b
        return ScalarMatrix(out)

    def apply(self, vec: Sequence[Scalar]) -> list[Scalar]:
        if len(vec) != self.cols:
            raise ValueError("vector length mismatch")
        out = []
        for row in self.entries:
            acc = ZERO
            for a, v in zip(row, vec):
                if not a.is_zero() and not v.is_zero():
                    acc = acc + a * v
            out.append(acc)
        return out

    def trace(self) -> Scalar:
        if self.rows != self.cols:
            raise ValueError("trace of a non-square matrix")
        acc = ZERO
        for i in range(self.rows):
            acc = acc + self.entries[i][i]
        return acc

    # -- predicates -------------------------------------------------------------

    def is_symmetric(self) -> bool:
        return self.rows == self.cols and self == self.transpose()

    def is_orthogonal(self) -> bool:
        return (
            self.rows == self.cols
            and self.transpose() @ self == ScalarMatrix.identity(self.rows)
        )

    def is_zero(self) -> bool:
        return all(v.is_zero() for row in self.entries for v in row)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ScalarMatrix):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    # -- block structure ----------------------------------------------------------

    def block(self, i0: int, j0: int, rows: int, cols: int) -> ScalarMatrix:
        return ScalarMatrix(
            [
                [self.entries[i][j] for j in range(j0, j0 + cols)]
                for i in range(i0, i0 + rows)
            ]
        )

    @classmethod
    def from_blocks(cls, blocks: Sequence[Sequence[ScalarMatrix]]) -> ScalarMatrix:
        rows: list[list[Scalar]] = []
        for brow in blocks:
            height = brow[0].rows
            if any(b.rows != height for b in brow):
                raise ValueError("inconsistent block heights")
            for i in range(height):
                row: list[Scalar] = []
                for b in brow:
                    row.extend(b.entries[i])
                rows.append(row)
        return cls(rows)

    def direct_sum(self, other: ScalarMatrix) -> ScalarMatrix:
        z1 = ScalarMatrix.zero(self.rows, other.cols)
        z2 = ScalarMatrix.zero(other.rows, self.cols)
        return ScalarMatrix.from_blocks([[self, z1], [z2, other]])

    def kron(self, other: ScalarMatrix) -> ScalarMatrix:
        out = []
        for i in range(self.rows):
            for k in range(other.rows):
                row = []
                for j in range(self.cols):
                    a = self.entries[i][j]
                    if a.is_zero():
                        row.extend([ZERO] * other.cols)
                    else:
                        row.extend(a * b for b in other.entries[k])
                out.append(row)
        return ScalarMatrix(out)

    # -- serialization ---------------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "rows": self.rows,
            "cols": self.cols,
            "entries": self.grid_json(),
        }

    def grid_json(self) -> list[list[list[int]]]:
        """Row-major grid of scalar encodings (no shape header)."""
        return [[v.to_json() for v in row] for row in self.entries]

    @classmethod
    def from_json(cls, data: dict) -> ScalarMatrix:
        m = cls.from_grid_json(data["entries"])
        if m.rows != data["rows"] or m.cols != data["cols"]:
            raise ValueError("matrix JSON shape header disagrees with entries")
        return m

    @classmethod
    def from_grid_json(cls, grid: Iterable[Iterable[list]]) -> ScalarMatrix:
        return cls([[Scalar.from_json(v) for v in row] for row in grid])

    def __str__(self) -> str:
        return "\n".join(
            "[" + ", ".join(str(v) for v in row) + "]" for row in self.entries
        )

    def __repr__(self) -> str:
        return f"ScalarMatrix({self.rows}x{self.cols})"
