"""Sparse integer matrices."""

from collections.abc import Iterable, Mapping, Sequence


class IntMatrix:
    """Integer matrix stored as ``row -> {col: value}`` with no stored zeros.

    Instances are treated as immutable once built; the mutating helpers are
    only used by the constructors below.
    """

    __slots__ = ("rows", "cols", "_data")

    def __init__(
        self,
        rows: int,
        cols: int,
        data: Mapping[int, Mapping[int, int]] | None = None,
    ):
        if rows < 0 or cols < 0:
            raise ValueError("matrix dimensions must be non-negative")
        self.rows = rows
        self.cols = cols
        self._data: dict[int, dict[int, int]] = {}
        for r, row in (data or {}).items():
            clean = {c: int(v) for c, v in row.items() if v}
            if not clean:
                continue
            if not 0 <= r < rows or any(not 0 <= c < cols for c in clean):
                raise IndexError(f"entry outside a {rows}x{cols} matrix")
            self._data[r] = clean

    @classmethod
    def from_dense(cls, dense: Sequence[Sequence[int]], cols: int | None = None):
        n_cols = cols if cols is not None else (len(dense[0]) if dense else 0)
        data = {r: dict(enumerate(row)) for r, row in enumerate(dense)}
        return cls(len(dense), n_cols, data)

    @classmethod
    def from_rows(cls, rows: Iterable[Mapping[int, int]], cols: int) -> "IntMatrix":
        data = dict(enumerate(rows))
        return cls(len(data), cols, data)

    @classmethod
    def from_columns(
        cls, columns: Sequence[Sequence[int]], rows: int | None = None
    ) -> "IntMatrix":
        n_rows = rows if rows is not None else (len(columns[0]) if columns else 0)
        data: dict[int, dict[int, int]] = {}
        for c, column in enumerate(columns):
            for r, v in enumerate(column):
                if v:
                    data.setdefault(r, {})[c] = v
        return cls(n_rows, len(columns), data)

    @classmethod
    def identity(cls, n: int, scale: int = 1) -> "IntMatrix":
        return cls(n, n, {i: {i: scale} for i in range(n)})

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols)

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    def __getitem__(self, key: tuple[int, int]) -> int:
        r, c = key
        return self._data.get(r, {}).get(c, 0)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.shape == other.shape and self._data == other._data

    def __repr__(self) -> str:
        return f"IntMatrix({self.rows}x{self.cols}, nnz={self.nnz})"

    @property
    def nnz(self) -> int:
        return sum(len(row) for row in self._data.values())

    def row(self, r: int) -> dict[int, int]:
        return dict(self._data.get(r, {}))

    def nonzero_rows(self) -> Iterable[tuple[int, dict[int, int]]]:
        for r in sorted(self._data):
            yield r, self._data[r]

    def column(self, c: int) -> list[int]:
        return [self._data.get(r, {}).get(c, 0) for r in range(self.rows)]

    def columns(self) -> list[list[int]]:
        out = [[0] * self.rows for _ in range(self.cols)]
        for r, row in self._data.items():
            for c, v in row.items():
                out[c][r] = v
        return out

    def is_zero(self) -> bool:
        return not self._data

    def to_dense(self) -> list[list[int]]:
        out = [[0] * self.cols for _ in range(self.rows)]
        for r, row in self._data.items():
            for c, v in row.items():
                out[r][c] = v
        return out

    def transpose(self) -> "IntMatrix":
        data: dict[int, dict[int, int]] = {}
        for r, row in self._data.items():
            for c, v in row.items():
                data.setdefault(c, {})[r] = v
        return IntMatrix(self.cols, self.rows, data)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        data: dict[int, dict[int, int]] = {}
        for r, row in self._data.items():
            acc: dict[int, int] = {}
            for k, a in row.items():
                for c, b in other._data.get(k, {}).items():
                    acc[c] = acc.get(c, 0) + a * b
            data[r] = acc
        return IntMatrix(self.rows, other.cols, data)

    def apply(self, vector: Sequence[int]) -> list[int]:
        """Return M·v for a dense vector v."""
        if len(vector) != self.cols:
            raise ValueError(f"vector of length {len(vector)} for {self.shape}")
        out = [0] * self.rows
        for r, row in self._data.items():
            out[r] = sum(v * vector[c] for c, v in row.items())
        return out

    def reduce(self, modulus: int) -> "IntMatrix":
        data = {
            r: {c: v % modulus for c, v in row.items()} for r, row in self._data.items()
        }
        return IntMatrix(self.rows, self.cols, data)

    def hstack(self, other: "IntMatrix") -> "IntMatrix":
        if self.rows != other.rows:
            raise ValueError("hstack needs equal row counts")
        data = {r: dict(row) for r, row in self._data.items()}
        for r, row in other._data.items():
            target = data.setdefault(r, {})
            for c, v in row.items():
                target[c + self.cols] = v
        return IntMatrix(self.rows, self.cols + other.cols, data)

    def select_columns(self, columns: Sequence[int]) -> "IntMatrix":
        where = {c: i for i, c in enumerate(columns)}
        data = {
            r: {where[c]: v for c, v in row.items() if c in where}
            for r, row in self._data.items()
        }
        return IntMatrix(self.rows, len(columns), data)
