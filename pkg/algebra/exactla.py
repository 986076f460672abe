"""
Exact linear algebra over a cyclotomic field.

Monomial operators (one nonzero entry per column) model the partial braidings
c_i and the twists; sparse matrices hold sums of them; rank is computed by
incremental sparse elimination, with a dense elimination kept as an oracle.
"""

from __future__ import annotations

from typing import Iterable, Optional, Sequence

from algebra.cyclo import CycloField, CycloNum

SparseVec = dict[int, CycloNum]


class DimensionMismatchError(ValueError):
    """Operands act on spaces of different dimension."""


class NotInvertibleError(ValueError):
    """A monomial operator whose image table is not a bijection."""


# ---------------------------------------------------------------------------
# Monomial operators
# ---------------------------------------------------------------------------

class MonomialOperator:
    """The linear map e_j -> coeff[j] * e_image[j]."""

    __slots__ = ("dim", "image", "coeff", "field")

    def __init__(self, image: Sequence[int], coeff: Sequence[CycloNum], field: CycloField,
                 check: bool = True):
        image = tuple(image)
        coeff = tuple(coeff)
        if len(image) != len(coeff):
            raise DimensionMismatchError(f"image has {len(image)} entries, coeff has {len(coeff)}")
        if check:
            dim = len(image)
            for j, (k, c) in enumerate(zip(image, coeff)):
                if not 0 <= k < dim:
                    raise ValueError(f"image[{j}] = {k} outside [0, {dim})")
                if c.is_zero():
                    raise ValueError(f"coefficient at column {j} is zero")
        self.dim = len(image)
        self.image = image
        self.coeff = coeff
        self.field = field

    @classmethod
    def identity(cls, dim: int, field: CycloField) -> MonomialOperator:
        one = field.one()
        return cls(range(dim), [one] * dim, field, check=False)

    @classmethod
    def permutation(cls, perm: Sequence[int], field: CycloField) -> MonomialOperator:
        one = field.one()
        return cls(perm, [one] * len(perm), field)

    def is_invertible(self) -> bool:
        return len(set(self.image)) == self.dim

    def inverse(self) -> MonomialOperator:
        if not self.is_invertible():
            raise NotInvertibleError("monomial operator image is not a bijection")
        image = [0] * self.dim
        coeff: list = [None] * self.dim
        for j, (k, c) in enumerate(zip(self.image, self.coeff)):
            image[k] = j
            coeff[k] = c.inverse()
        return MonomialOperator(image, coeff, self.field, check=False)

    def apply(self, vec: SparseVec) -> SparseVec:
        out: SparseVec = {}
        image, coeff = self.image, self.coeff
        for j, v in vec.items():
            k = image[j]
            term = coeff[j] * v
            prev = out.get(k)
            if prev is not None:
                term = prev + term
                if term.is_zero():
                    del out[k]
                    continue
            out[k] = term
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, MonomialOperator):
            return NotImplemented
        return self.image == other.image and self.coeff == other.coeff

    def __hash__(self) -> int:
        return hash((self.image, self.coeff))

    def __repr__(self) -> str:
        return f"MonomialOperator(dim={self.dim}, field={self.field})"

    def to_sparse(self) -> SparseMatrix:
        return SparseMatrix(self.dim, self.dim, self.field,
                            {(k, j): c for j, (k, c) in enumerate(zip(self.image, self.coeff))})


def compose(a: MonomialOperator, b: MonomialOperator) -> MonomialOperator:
    """a o b (apply b first)."""
    if a.dim != b.dim:
        raise DimensionMismatchError(f"cannot compose dim {a.dim} with dim {b.dim}")
    image = tuple(a.image[k] for k in b.image)
    coeff = tuple(a.coeff[k] * c for k, c in zip(b.image, b.coeff))
    return MonomialOperator(image, coeff, a.field, check=False)


def tensor(a: MonomialOperator, b: MonomialOperator) -> MonomialOperator:
    """a (x) b on the tensor product, first factor as the most significant digit."""
    db = b.dim
    image = []
    coeff = []
    for i in range(a.dim):
        ai, ac = a.image[i], a.coeff[i]
        for j in range(db):
            image.append(ai * db + b.image[j])
            coeff.append(ac * b.coeff[j])
    return MonomialOperator(image, coeff, a.field, check=False)


# ---------------------------------------------------------------------------
# Sparse matrices
# ---------------------------------------------------------------------------

class SparseMatrix:
    """Entries {(row, col): value}; zero values are never stored."""

    __slots__ = ("rows", "cols", "field", "entries")

    def __init__(self, rows: int, cols: int, field: CycloField,
                 entries: Optional[dict[tuple[int, int], CycloNum]] = None):
        self.rows = rows
        self.cols = cols
        self.field = field
        self.entries = {k: v for k, v in (entries or {}).items() if not v.is_zero()}

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def nnz(self) -> int:
        return len(self.entries)

    def __getitem__(self, key: tuple[int, int]) -> CycloNum:
        return self.entries.get(key, self.field.zero())

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __repr__(self) -> str:
        return f"SparseMatrix({self.rows}x{self.cols}, nnz={self.nnz}, field={self.field})"

    @classmethod
    def from_columns(cls, rows: int, columns: Sequence[SparseVec], field: CycloField) -> SparseMatrix:
        entries = {}
        for j, col in enumerate(columns):
            for i, v in col.items():
                entries[i, j] = v
        return cls(rows, len(columns), field, entries)

    @classmethod
    def from_dense(cls, matrix: Sequence[Sequence], field: CycloField) -> SparseMatrix:
        entries = {}
        for i, row in enumerate(matrix):
            for j, v in enumerate(row):
                v = v if isinstance(v, CycloNum) else field.from_rational(v)
                entries[i, j] = v
        cols = len(matrix[0]) if matrix else 0
        return cls(len(matrix), cols, field, entries)

    def columns(self) -> dict[int, SparseVec]:
        out: dict[int, SparseVec] = {}
        for (i, j), v in self.entries.items():
            out.setdefault(j, {})[i] = v
        return out

    def transpose(self) -> SparseMatrix:
        return SparseMatrix(self.cols, self.rows, self.field,
                            {(j, i): v for (i, j), v in self.entries.items()})

    def to_dense(self) -> list[list[CycloNum]]:
        zero = self.field.zero()
        dense = [[zero] * self.cols for _ in range(self.rows)]
        for (i, j), v in self.entries.items():
            dense[i][j] = v
        return dense


def accumulate(terms: Iterable[MonomialOperator]) -> SparseMatrix:
    """Sum of monomial operators; colliding entries add and exact zeros drop."""
    terms = list(terms)
    if not terms:
        raise ValueError("accumulate needs at least one term")
    dim, field = terms[0].dim, terms[0].field
    entries: dict[tuple[int, int], CycloNum] = {}
    for t in terms:
        if t.dim != dim:
            raise DimensionMismatchError(f"term of dim {t.dim} in a sum of dim {dim}")
        for j, (k, c) in enumerate(zip(t.image, t.coeff)):
            key = (k, j)
            prev = entries.get(key)
            if prev is None:
                entries[key] = c
            else:
                s = prev + c
                if s.is_zero():
                    del entries[key]
                else:
                    entries[key] = s
    return SparseMatrix(dim, dim, field, entries)


# ---------------------------------------------------------------------------
# Rank
# ---------------------------------------------------------------------------

def _axpy(vec: SparseVec, c: CycloNum, row: SparseVec) -> None:
    """vec -= c * row, in place, dropping exact zeros."""
    for k, x in row.items():
        prev = vec.get(k)
        if prev is None:
            vec[k] = -(c * x)
        else:
            s = prev - c * x
            if s.is_zero():
                del vec[k]
            else:
                vec[k] = s


class Echelon:
    """
    Incremental echelon basis of sparse vectors.

    Rows are kept in insertion order; every row is zero at the pivots of the
    rows stored before it and carries 1 at its own pivot. The pivot of a new
    row is the support position seen least often among stored rows (ties by
    index), which keeps fill-in low.
    """

    def __init__(self, field: CycloField):
        self.field = field
        self.rows: list[tuple[int, SparseVec]] = []
        self.nonzeros = 0
        self._col_count: dict[int, int] = {}

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, vec: SparseVec) -> SparseVec:
        vec = dict(vec)
        for pivot, row in self.rows:
            c = vec.get(pivot)
            if c is not None:
                _axpy(vec, c, row)
        return vec

    def insert(self, vec: SparseVec) -> bool:
        """Add vec to the span; return False if it was already there."""
        v = self.reduce(vec)
        if not v:
            return False
        counts = self._col_count
        pivot = min(v, key=lambda k: (counts.get(k, 0), k))
        inv = v[pivot].inverse()
        row = {k: x * inv for k, x in v.items()}
        row[pivot] = self.field.one()
        self.rows.append((pivot, row))
        for k in row:
            counts[k] = counts.get(k, 0) + 1
        self.nonzeros += len(row)
        return True


def rank(A: SparseMatrix) -> int:
    """Exact rank, eliminating column by column."""
    basis = Echelon(A.field)
    for _, col in sorted(A.columns().items()):
        basis.insert(col)
    return basis.rank


def dense_rank(matrix: Sequence[Sequence[CycloNum]]) -> int:
    """Plain Gaussian elimination on a dense matrix; the brute-force oracle."""
    rows = [list(r) for r in matrix]
    if not rows:
        return 0
    ncols = len(rows[0])
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if not rows[i][col].is_zero()), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = rows[r][col].inverse()
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and not rows[i][col].is_zero():
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        r += 1
        if r == len(rows):
            break
    return r
