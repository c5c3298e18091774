"""The Chevalley group G2(F) in its 7-dimensional representation, char 3.

Basis labels are ``1, 2, 3, 0, -3, -2, -1`` (storage indices 0..6). Each root
unipotent is ``e + xi*N + xi^2*N2`` with the structure constants below; the
integer constant 2 is read as the field element 2 = -1.
"""

from __future__ import annotations

import enum
import functools

from .errors import WrongCharacteristic, ZeroTorusParameter
from .field import FieldElement, FieldSpec
from .matrix import REE_LABELS, Matrix, label_index

_IDX = label_index(REE_LABELS)


class Root(str, enum.Enum):
    """Roots of G2 written in the simple roots a (short) and b (long).

    A negative root is its positive label with a "-" prefix, so "-3a+b" is
    -(3a+b).
    """

    A = "a"
    B = "b"
    A_B = "a+b"
    TWO_A_B = "2a+b"
    THREE_A_B = "3a+b"
    THREE_A_TWO_B = "3a+2b"
    NEG_A = "-a"
    NEG_B = "-b"
    NEG_A_B = "-a+b"
    NEG_TWO_A_B = "-2a+b"
    NEG_THREE_A_B = "-3a+b"
    NEG_THREE_A_TWO_B = "-3a+2b"

    @property
    def is_long(self) -> bool:
        return self.value.lstrip("-") in ("b", "3a+b", "3a+2b")

    @property
    def is_positive(self) -> bool:
        return not self.value.startswith("-")

    @property
    def negative(self) -> Root:
        return _NEGATIVES[self]

    def __str__(self):
        return self.value


_NEGATIVES = {}
for _r in Root:
    if _r.is_positive:
        _neg = Root("-" + _r.value)
        _NEGATIVES[_r] = _neg
        _NEGATIVES[_neg] = _r

# root -> [(row label, col label, integer coefficient, power of xi)]
ROOT_TERMS: dict[Root, list[tuple[int, int, int, int]]] = {
    Root.A: [(1, 2, 1, 1), (3, 0, -1, 1), (0, -3, 2, 1), (-2, -1, -1, 1), (3, -3, -1, 2)],
    Root.A_B: [(1, 3, 1, 1), (2, 0, 1, 1), (0, -2, -2, 1), (-3, -1, -1, 1), (2, -2, -1, 2)],
    Root.TWO_A_B: [(1, 0, -1, 1), (2, -3, 1, 1), (3, -2, -1, 1), (0, -1, 2, 1), (1, -1, -1, 2)],
    Root.NEG_A: [(2, 1, 1, 1), (0, 3, -2, 1), (-3, 0, 1, 1), (-1, -2, -1, 1), (-3, 3, -1, 2)],
    Root.NEG_A_B: [(3, 1, 1, 1), (0, 2, 2, 1), (-2, 0, -1, 1), (-1, -3, -1, 1), (-2, 2, -1, 2)],
    Root.NEG_TWO_A_B: [(0, 1, -2, 1), (-3, 2, 1, 1), (-2, 3, -1, 1), (-1, 0, 1, 1), (-1, 1, -1, 2)],
    Root.B: [(2, 3, -1, 1), (-3, -2, 1, 1)],
    Root.THREE_A_B: [(1, -3, 1, 1), (3, -1, -1, 1)],
    Root.THREE_A_TWO_B: [(1, -2, -1, 1), (2, -1, 1, 1)],
}
# long negative roots are the transposes of the positive ones
for _r in (Root.B, Root.THREE_A_B, Root.THREE_A_TWO_B):
    ROOT_TERMS[_r.negative] = [(j, i, c, k) for i, j, c, k in ROOT_TERMS[_r]]


class G2:
    """Root unipotents, Weyl lifts and torus elements of G2(GF(3^(2m+1)))."""

    dim = 7

    def __init__(self, field: FieldSpec):
        if field.p != 3:
            raise WrongCharacteristic("G2 is built here over fields of characteristic 3")
        self.field = field
        self.theta = field.theta
        self._cache: dict = {}

    def root_unipotent(self, root: Root | str, xi) -> Matrix:
        root = Root(root)
        xi = self.field(xi) if not isinstance(xi, int) else self.field.constant(xi)
        key = (root, xi.code)
        mat = self._cache.get(key)
        if mat is None:
            entries = {}
            for i, j, c, k in ROOT_TERMS[root]:
                entries[_IDX[i], _IDX[j]] = c * xi ** k
            mat = self._cache[key] = Matrix.with_entries(self.field, 7, entries)
        return mat

    x = root_unipotent

    def one_param_additivity_check(self, root, a: FieldElement, b: FieldElement) -> bool:
        return self.x(root, a) @ self.x(root, b) == self.x(root, a + b)

    def weyl_lift(self, root, c=1) -> Matrix:
        """w_r(c) = x_r(c) x_{-r}(-1/c) x_r(c)."""
        root = Root(root)
        c = self.field.constant(c) if isinstance(c, int) else self.field(c)
        if c == 0:
            raise ZeroTorusParameter("w_r(c) needs c != 0")
        return self.x(root, c) @ self.x(root.negative, -c.inverse()) @ self.x(root, c)

    def torus_root(self, root, c) -> Matrix:
        """h_r(c) = w_r(c) w_r(1)^{-1}."""
        return self.weyl_lift(root, c) @ self.weyl_lift(root, 1).inverse()

    def torus_alpha_beta(self, a: FieldElement, b: FieldElement) -> Matrix:
        return self.torus_root(Root.A, a) @ self.torus_root(Root.B, b)

    @functools.cached_property
    def longest_weyl(self) -> Matrix:
        """(w_a(1) w_b(1))^3."""
        return (self.weyl_lift(Root.A) @ self.weyl_lift(Root.B)) ** 3
