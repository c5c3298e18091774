"""Exact square matrices over a :class:`~suzree.field.FieldSpec`.

Storage is a flat row-major tuple of element codes; products and inverses are
delegated to the field's kernel (compiled when available).

Index conventions used by the group modules (storage index -> label):

* dimension 4: 0, 1, 2, 3  ->  1, 2, -2, -1
* dimension 7: 0, ..., 6   ->  1, 2, 3, 0, -3, -2, -1
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import FieldMismatch, ParseError, Singular, WrongCharacteristic, WrongDimension
from .field import FieldElement, FieldSpec

SUZUKI_LABELS = (1, 2, -2, -1)
REE_LABELS = (1, 2, 3, 0, -3, -2, -1)


def label_index(labels: Sequence[int]) -> dict[int, int]:
    return {lab: i for i, lab in enumerate(labels)}


class Matrix:
    """Immutable dim x dim matrix; ``@`` multiplies, ``m[i, j]`` reads an entry."""

    __slots__ = ("field", "dim", "data", "_hash")

    def __init__(self, field: FieldSpec, dim: int, data: Sequence[int]):
        data = tuple(data)
        if len(data) != dim * dim:
            raise WrongDimension(f"expected {dim * dim} entries, got {len(data)}")
        self.field = field
        self.dim = dim
        self.data = data
        self._hash = None

    # -- constructors --------------------------------------------------------

    @classmethod
    def identity(cls, field: FieldSpec, dim: int) -> Matrix:
        return cls(field, dim, [1 if i == j else 0 for i in range(dim) for j in range(dim)])

    @classmethod
    def from_rows(cls, field: FieldSpec, rows: Sequence[Sequence]) -> Matrix:
        dim = len(rows)
        data = []
        for row in rows:
            if len(row) != dim:
                raise WrongDimension("matrix must be square")
            data.extend(field(x).code for x in row)
        return cls(field, dim, data)

    @classmethod
    def diagonal(cls, entries: Sequence[FieldElement]) -> Matrix:
        field, dim = entries[0].field, len(entries)
        data = [0] * (dim * dim)
        for i, e in enumerate(entries):
            data[i * dim + i] = field(e).code
        return cls(field, dim, data)

    @classmethod
    def with_entries(cls, field: FieldSpec, dim: int, entries: dict) -> Matrix:
        """Identity with the given {(i, j): element} entries overwritten."""
        data = list(cls.identity(field, dim).data)
        for (i, j), x in entries.items():
            data[i * dim + j] = field(x).code
        return cls(field, dim, data)

    # -- access ----------------------------------------------------------------

    def __getitem__(self, ij) -> FieldElement:
        i, j = ij
        return FieldElement(self.field, self.data[i * self.dim + j])

    def row(self, i: int) -> list[FieldElement]:
        d = self.dim
        return [FieldElement(self.field, c) for c in self.data[i * d:(i + 1) * d]]

    def rows(self) -> list[list[FieldElement]]:
        return [self.row(i) for i in range(self.dim)]

    # -- algebra ---------------------------------------------------------------

    def _check(self, other: Matrix):
        if other.dim != self.dim:
            raise WrongDimension(f"{self.dim}x{self.dim} vs {other.dim}x{other.dim}")
        if other.field is not self.field and other.field != self.field:
            raise FieldMismatch("matrices over different fields")

    def __matmul__(self, other: Matrix) -> Matrix:
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check(other)
        return Matrix(self.field, self.dim, self.field.kernel.mat_mul(self.data, other.data, self.dim))

    def inverse(self) -> Matrix:
        out = self.field.kernel.mat_inv(self.data, self.dim)
        if out is None:
            raise Singular("matrix is singular")
        return Matrix(self.field, self.dim, out)

    def det(self) -> FieldElement:
        return FieldElement(self.field, self.field.kernel.det(self.data, self.dim))

    def transpose(self) -> Matrix:
        d = self.dim
        return Matrix(self.field, d, [self.data[j * d + i] for i in range(d) for j in range(d)])

    def antitranspose(self) -> Matrix:
        """Reflection across the antidiagonal: entry (i, j) -> (d-1-j, d-1-i)."""
        d = self.dim
        return Matrix(self.field, d, [self.data[(d - 1 - j) * d + (d - 1 - i)]
                                      for i in range(d) for j in range(d)])

    def scale(self, c: FieldElement) -> Matrix:
        mul = self.field.tables.mul[self.field(c).code]
        return Matrix(self.field, self.dim, [mul[x] for x in self.data])

    def __pow__(self, k: int) -> Matrix:
        base = self if k >= 0 else self.inverse()
        result = Matrix.identity(self.field, self.dim)
        for _ in range(abs(k)):
            result = result @ base
        return result

    # -- predicates ------------------------------------------------------------

    def is_identity(self) -> bool:
        d = self.dim
        return all(c == (1 if i // d == i % d else 0) for i, c in enumerate(self.data))

    def is_diagonal(self) -> bool:
        d = self.dim
        return all(c == 0 for i, c in enumerate(self.data) if i // d != i % d)

    def is_upper_unitriangular(self) -> bool:
        d = self.dim
        return all(c == (1 if i // d == i % d else 0)
                   for i, c in enumerate(self.data) if i // d >= i % d)

    def is_lower_unitriangular(self) -> bool:
        d = self.dim
        return all(c == (1 if i // d == i % d else 0)
                   for i, c in enumerate(self.data) if i // d <= i % d)

    # -- equality / text -------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.data == other.data and self.dim == other.dim and self.field == other.field

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.data)
        return self._hash

    def to_text(self) -> str:
        d = self.dim
        return "\n".join(" ".join(str(c) for c in self.data[i * d:(i + 1) * d]) for i in range(d))

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"Matrix(GF({self.field.q}), {self.dim}, {self.data})"


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    return a @ b


def mat_inv(a: Matrix) -> Matrix:
    return a.inverse()


def product(mats: Iterable[Matrix]) -> Matrix:
    it = iter(mats)
    out = next(it)
    for m in it:
        out = out @ m
    return out


def symplectic_form(field: FieldSpec) -> Matrix:
    """Gram matrix (delta_{i,-j}) in storage order: the 4x4 antidiagonal of ones."""
    return Matrix(field, 4, [1 if i + j == 3 else 0 for i in range(4) for j in range(4)])


def preserves_symplectic_form(g: Matrix) -> bool:
    if g.dim != 4:
        raise WrongDimension("symplectic form check is defined for 4x4 matrices")
    if g.field.p != 2:
        raise WrongCharacteristic("symplectic form check is defined in characteristic 2")
    phi = symplectic_form(g.field)
    return g.transpose() @ phi @ g == phi


def parse_matrix(text: str, field: FieldSpec, dim: int | None = None) -> Matrix:
    """Read the line-oriented text format (one row per line, decimal codes)."""
    lines = [ln.split() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ParseError("empty matrix")
    d = len(lines) if dim is None else dim
    if len(lines) != d or any(len(ln) != d for ln in lines):
        raise ParseError(f"expected a {d}x{d} matrix")
    try:
        codes = [int(tok) for ln in lines for tok in ln]
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    if any(not 0 <= c < field.q for c in codes):
        raise ParseError(f"entry out of range for GF({field.q})")
    return Matrix(field, d, codes)


def parse_matrices(text: str, field: FieldSpec, dim: int) -> list[Matrix]:
    """Split a stream of consecutive dim-line matrices (blank lines ignored)."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if len(lines) % dim:
        raise ParseError(f"line count {len(lines)} is not a multiple of {dim}")
    return [parse_matrix("\n".join(lines[i:i + dim]), field, dim)
            for i in range(0, len(lines), dim)]
