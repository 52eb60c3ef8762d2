"""Dense and sparse exact linear algebra on tensor-product spaces.

Index convention, fixed once for the whole package and the file formats:
the leftmost tensor factor is the most significant digit of the mixed-radix
basis index (TensorIndex).  Kronecker products, flips and amplifications
all follow it.

SparseOperator is the working representation for operators on spaces of
three or more factors; the images of group elements are signed
block-permutation-like, so rows stay short and composition stays
near-linear in the dimension.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod

from .cyclo import ONE, CycloScalar, scalar
from .errors import DimensionMismatchError


@dataclass(frozen=True)
class TensorIndex:
    """Mixed-radix encoding of basis strings, leftmost factor most significant."""

    dims: tuple[int, ...]

    @property
    def size(self) -> int:
        return prod(self.dims)

    def encode(self, digits) -> int:
        assert len(digits) == len(self.dims)
        out = 0
        for x, d in zip(digits, self.dims):
            assert 0 <= x < d
            out = out * d + x
        return out

    def decode(self, index: int) -> tuple[int, ...]:
        out = []
        for d in reversed(self.dims):
            out.append(index % d)
            index //= d
        assert index == 0
        return tuple(reversed(out))


class ExactMatrix:
    """Dense matrix over CycloScalar; treated as immutable after construction."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows: int, cols: int, data: list[list[CycloScalar]]):
        self.rows = rows
        self.cols = cols
        self.data = data

    @classmethod
    def zeros(cls, rows: int, cols: int) -> ExactMatrix:
        z = CycloScalar.from_rational(0)
        return cls(rows, cols, [[z] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, n: int) -> ExactMatrix:
        m = cls.zeros(n, n)
        for i in range(n):
            m.data[i][i] = ONE
        return m

    @classmethod
    def diag(cls, values) -> ExactMatrix:
        vals = [scalar(v) for v in values]
        m = cls.zeros(len(vals), len(vals))
        for i, v in enumerate(vals):
            m.data[i][i] = v
        return m

    @classmethod
    def from_entries(cls, rows: int, cols: int, entries: dict) -> ExactMatrix:
        m = cls.zeros(rows, cols)
        for (i, j), v in entries.items():
            m.data[i][j] = scalar(v)
        return m

    def entry(self, i: int, j: int) -> CycloScalar:
        return self.data[i][j]

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if (self.rows, self.cols) != (other.rows, other.cols):
            return False
        for ra, rb in zip(self.data, other.data):
            for a, b in zip(ra, rb):
                if a != b:
                    return False
        return True

    __hash__ = None

    def __neg__(self) -> ExactMatrix:
        return ExactMatrix(self.rows, self.cols, [[-v for v in row] for row in self.data])

    def __add__(self, other: ExactMatrix) -> ExactMatrix:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatchError(f"add {self.rows}x{self.cols} with {other.rows}x{other.cols}")
        return ExactMatrix(
            self.rows, self.cols,
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.data, other.data)],
        )

    def __sub__(self, other: ExactMatrix) -> ExactMatrix:
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, ExactMatrix):
            if self.cols != other.rows:
                raise DimensionMismatchError(f"matmul {self.rows}x{self.cols} by {other.rows}x{other.cols}")
            out = ExactMatrix.zeros(self.rows, other.cols)
            for i in range(self.rows):
                row = self.data[i]
                acc = out.data[i]
                for k in range(self.cols):
                    a = row[k]
                    if a.is_zero():
                        continue
                    brow = other.data[k]
                    for j in range(other.cols):
                        b = brow[j]
                        if not b.is_zero():
                            acc[j] = acc[j] + a * b
            return out
        return NotImplemented

    def scaled(self, factor) -> ExactMatrix:
        f = scalar(factor)
        return ExactMatrix(self.rows, self.cols, [[f * v for v in row] for row in self.data])

    def transpose(self) -> ExactMatrix:
        return ExactMatrix(self.cols, self.rows,
                           [[self.data[i][j] for i in range(self.rows)] for j in range(self.cols)])

    def dagger(self) -> ExactMatrix:
        """Conjugate transpose."""
        return ExactMatrix(self.cols, self.rows,
                           [[self.data[i][j].conj() for i in range(self.rows)] for j in range(self.cols)])

    def trace(self) -> CycloScalar:
        if self.rows != self.cols:
            raise DimensionMismatchError("trace of a non-square matrix")
        acc = CycloScalar.from_rational(0)
        for i in range(self.rows):
            acc = acc + self.data[i][i]
        return acc

    def kron(self, other: ExactMatrix) -> ExactMatrix:
        out = ExactMatrix.zeros(self.rows * other.rows, self.cols * other.cols)
        for ia in range(self.rows):
            for ja in range(self.cols):
                a = self.data[ia][ja]
                if a.is_zero():
                    continue
                for ib in range(other.rows):
                    orow = other.data[ib]
                    trow = out.data[ia * other.rows + ib]
                    base = ja * other.cols
                    for jb in range(other.cols):
                        b = orow[jb]
                        if not b.is_zero():
                            trow[base + jb] = a * b
        return out

    def is_identity(self) -> bool:
        if self.rows != self.cols:
            return False
        for i in range(self.rows):
            for j in range(self.cols):
                v = self.data[i][j]
                if i == j:
                    if not v.is_one():
                        return False
                elif not v.is_zero():
                    return False
        return True

    def column(self, j: int) -> list[CycloScalar]:
        return [self.data[i][j] for i in range(self.rows)]

    def apply(self, vec: list[CycloScalar]) -> list[CycloScalar]:
        if len(vec) != self.cols:
            raise DimensionMismatchError("vector length does not match column count")
        out = []
        for row in self.data:
            acc = CycloScalar.from_rational(0)
            for a, x in zip(row, vec):
                if not a.is_zero() and not x.is_zero():
                    acc = acc + a * x
            out.append(acc)
        return out

    def __repr__(self) -> str:
        return f"ExactMatrix({self.rows}x{self.cols})"


class SparseOperator:
    """Square operator stored row-wise as sorted (column, scalar) pairs."""

    __slots__ = ("dim", "rows")

    def __init__(self, dim: int, rows: list[list[tuple[int, CycloScalar]]]):
        self.dim = dim
        self.rows = rows

    @classmethod
    def identity(cls, n: int) -> SparseOperator:
        return cls(n, [[(i, ONE)] for i in range(n)])

    @classmethod
    def from_dense(cls, m: ExactMatrix) -> SparseOperator:
        if m.rows != m.cols:
            raise DimensionMismatchError("sparse operators are square")
        rows = []
        for i in range(m.rows):
            row = [(j, v) for j, v in enumerate(m.data[i]) if not v.is_zero()]
            rows.append(row)
        return cls(m.rows, rows)

    def to_dense(self) -> ExactMatrix:
        out = ExactMatrix.zeros(self.dim, self.dim)
        for i, row in enumerate(self.rows):
            for j, v in row:
                out.data[i][j] = v
        return out

    def __mul__(self, other):
        if isinstance(other, SparseOperator):
            if self.dim != other.dim:
                raise DimensionMismatchError(f"matmul dims {self.dim} and {other.dim}")
            orows = other.rows
            out = []
            for row in self.rows:
                if len(row) == 1:
                    # dominant case: signed-permutation-like rows; row lists
                    # are immutable by convention, so sharing is safe
                    k, a = row[0]
                    if a.is_one():
                        out.append(orows[k])
                    else:
                        out.append([(j, a * b) for j, b in orows[k]])
                    continue
                acc: dict[int, CycloScalar] = {}
                for k, a in row:
                    for j, b in orows[k]:
                        prev = acc.get(j)
                        acc[j] = a * b if prev is None else prev + a * b
                out.append(sorted((j, v) for j, v in acc.items() if not v.is_zero()))
            return SparseOperator(self.dim, out)
        return NotImplemented

    def trace(self) -> CycloScalar:
        acc = CycloScalar.from_rational(0)
        for i, row in enumerate(self.rows):
            for j, v in row:
                if j == i:
                    acc = acc + v
                elif j > i:
                    break
        return acc

    def dagger(self) -> SparseOperator:
        cols: list[list[tuple[int, CycloScalar]]] = [[] for _ in range(self.dim)]
        for i, row in enumerate(self.rows):
            for j, v in row:
                cols[j].append((i, v.conj()))
        return SparseOperator(self.dim, cols)

    def apply(self, vec: list[CycloScalar]) -> list[CycloScalar]:
        if len(vec) != self.dim:
            raise DimensionMismatchError("vector length does not match dimension")
        out = []
        for row in self.rows:
            acc = CycloScalar.from_rational(0)
            for j, v in row:
                x = vec[j]
                if not x.is_zero():
                    acc = acc + v * x
            out.append(acc)
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparseOperator):
            return NotImplemented
        if self.dim != other.dim:
            return False
        for ra, rb in zip(self.rows, other.rows):
            if len(ra) != len(rb):
                return False
            for (ja, va), (jb, vb) in zip(ra, rb):
                if ja != jb or va != vb:
                    return False
        return True

    __hash__ = None

    def is_identity(self) -> bool:
        for i, row in enumerate(self.rows):
            if len(row) != 1 or row[0][0] != i or not row[0][1].is_one():
                return False
        return True

    def max_row_nnz(self) -> int:
        return max((len(r) for r in self.rows), default=0)

    def __repr__(self) -> str:
        return f"SparseOperator(dim={self.dim}, nnz={sum(len(r) for r in self.rows)})"


def matmul(a, b):
    """Exact product of two dense matrices or two sparse operators."""
    out = a * b
    if out is NotImplemented:
        raise TypeError("matmul needs two ExactMatrix or two SparseOperator operands")
    return out


def kron(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    return a.kron(b)


def flip_operator(d1: int, d2: int) -> ExactMatrix:
    """The swap v (x) w -> w (x) v from C^d1 (x) C^d2 to C^d2 (x) C^d1."""
    n = d1 * d2
    m = ExactMatrix.zeros(n, n)
    for i in range(d1):
        for j in range(d2):
            m.data[j * d1 + i][i * d2 + j] = ONE
    return m


def amplify(op: ExactMatrix, dims, start: int, stop: int) -> SparseOperator:
    """Materialize 1 (x) ... (x) op (x) ... (x) 1 on the full tensor space.

    ``op`` acts on the contiguous factor slots [start, stop) of a space with
    the given factor dimensions.
    """
    dims = tuple(dims)
    mid = prod(dims[start:stop])
    if op.rows != op.cols or op.rows != mid:
        raise DimensionMismatchError(
            f"operator of dim {op.rows} cannot act on factors {start}..{stop} of {dims}")
    pre = prod(dims[:start])
    post = prod(dims[stop:])
    op_rows = [[(j, v) for j, v in enumerate(row) if not v.is_zero()] for row in op.data]
    rows: list[list[tuple[int, CycloScalar]]] = []
    for p in range(pre):
        pbase = p * mid
        for m in range(mid):
            entries = op_rows[m]
            for s in range(post):
                rows.append([((pbase + c) * post + s, v) for c, v in entries])
    return SparseOperator(pre * mid * post, rows)
