"""Small Ree groups 2G2(q), q = 3^(2m+1), inside G2(q) acting on 7-space.

The sigma-fixed unipotents are x_+(t, u, v) = x1(t) x2(u) x3(v) with

    x1(t) = x_a(t^th) x_b(t) x_{a+b}(t^(th+1)) x_{2a+b}(t^(2th+1))
    x2(u) = x_{a+b}(u^th) x_{3a+b}(u)
    x3(v) = x_{2a+b}(v^th) x_{3a+2b}(v)

built by multiplying the root unipotents of :mod:`suzree.g2`. The torus is
h(eps) = diag(eps, eps^(3th-1), eps^(2-3th), 1, eps^(3th-2), eps^(1-3th), eps^-1)
and w is the antidiagonal matrix with all entries -1.
"""

from __future__ import annotations

import functools
from typing import NamedTuple

from .errors import NotInU, WrongCharacteristic
from .field import FieldElement, FieldSpec, sqrt_char3
from .g2 import G2, Root
from .matrix import Matrix
from .rank1 import RankOneGroup

# Row-0 positions carrying u^th in x2(u) x3(v) and -v^th in x3(v); re-derived
# in tests from the generator matrices.
U_ENTRY = (0, 2)
V_ENTRY = (0, 3)
V_SIGN = -1


class ReeUPlusParams(NamedTuple):
    t: FieldElement
    u: FieldElement
    v: FieldElement


class Ree(RankOneGroup):
    name = "ree"
    dim = 7
    nparams = 3
    params_type = ReeUPlusParams

    def __init__(self, field: FieldSpec):
        if field.p != 3:
            raise WrongCharacteristic("small Ree groups live in characteristic 3")
        super().__init__(field)
        self.g2 = G2(field)
        self._w = Matrix(field, 7, [2 if i + j == 6 else 0 for i in range(7) for j in range(7)])

    @classmethod
    def from_q(cls, q: int) -> Ree:
        field = FieldSpec.for_order(q)
        if field.p != 3:
            raise ValueError(f"q={q} is not a power of 3")
        return cls(field)

    @classmethod
    def from_m(cls, m: int) -> Ree:
        return cls(FieldSpec.default(3, 2 * m + 1))

    # -- the three one-parameter pieces ------------------------------------------------

    @functools.lru_cache(maxsize=None)
    def _x1(self, code: int) -> Matrix:
        t, th, x = FieldElement(self.field, code), self.theta, self.g2.x
        return (x(Root.A, t ** th) @ x(Root.B, t) @ x(Root.A_B, t ** (th + 1))
                @ x(Root.TWO_A_B, t ** (2 * th + 1)))

    @functools.lru_cache(maxsize=None)
    def _x2(self, code: int) -> Matrix:
        u, x = FieldElement(self.field, code), self.g2.x
        return x(Root.A_B, u ** self.theta) @ x(Root.THREE_A_B, u)

    @functools.lru_cache(maxsize=None)
    def _x3(self, code: int) -> Matrix:
        v, x = FieldElement(self.field, code), self.g2.x
        return x(Root.TWO_A_B, v ** self.theta) @ x(Root.THREE_A_TWO_B, v)

    @functools.lru_cache(maxsize=None)
    def _x1_inv(self, code: int) -> Matrix:
        return self._x1(code).inverse()

    @functools.lru_cache(maxsize=None)
    def _x2_inv(self, code: int) -> Matrix:
        return self._x2(code).inverse()

    def x1(self, t) -> Matrix:
        return self._x1(self._elem(t).code)

    def x2(self, u) -> Matrix:
        return self._x2(self._elem(u).code)

    def x3(self, v) -> Matrix:
        return self._x3(self._elem(v).code)

    def _x_plus(self, params: ReeUPlusParams) -> Matrix:
        t, u, v = params
        return self._x1(t.code) @ self._x2(u.code) @ self._x3(v.code)

    def torus(self, eps) -> Matrix:
        e = self._eps(eps)
        th = self.theta
        return Matrix.diagonal([e, e ** (3 * th - 1), e ** (2 - 3 * th), self.field.one,
                                e ** (3 * th - 2), e ** (1 - 3 * th), e ** -1])

    def weyl(self) -> Matrix:
        return self._w

    # -- parameter extraction ------------------------------------------------------

    def extract_uplus(self, g: Matrix) -> ReeUPlusParams:
        """Peel x1, x2, x3 off the left of g, reading one row-0 entry each time."""
        if g.dim != 7:
            raise NotInU("not a 7x7 matrix")
        t = g[0, 1].theta_unpow()
        g1 = self._x1_inv(t.code) @ g
        u = g1[U_ENTRY].theta_unpow()
        g2 = self._x2_inv(u.code) @ g1
        v = (V_SIGN * g2[V_ENTRY]).theta_unpow()
        if self._x3(v.code) != g2:
            raise NotInU("matrix does not have the x_+(t, u, v) pattern")
        return ReeUPlusParams(t, u, v)

    def params_from_top_row(self, row) -> ReeUPlusParams:
        """(t, u, v) from the first row of x_+(t, u, v) alone."""
        t = row[1].theta_unpow()
        u = (row[U_ENTRY[1]] - self.x_plus(t, 0, 0)[U_ENTRY]).theta_unpow()
        v = (V_SIGN * (row[V_ENTRY[1]] - self.x_plus(t, u, 0)[V_ENTRY])).theta_unpow()
        return ReeUPlusParams(t, u, v)

    def _big_cell_eps(self, corner):
        # (h(eps) w) has -eps^-1 at (6, 0)
        return -corner.inverse()

    def _big_cell_right(self, g, eps):
        # row 6 of g is -eps^-1 * (row 0 of x_+(u2)) and g[6, 0] = -eps^-1
        scale = g[6, 0].inverse()
        return self.params_from_top_row([x * scale for x in g.row(6)])

    # -- Sylow factorization of the two cells -----------------------------------------

    def _lam(self, eps):
        return sqrt_char3(self._eps(eps))

    def weyl_cell_parts(self, lam, sign: int):
        """(left x_-, right x_+, x_+ params on the other side) for eps = sign * lam^2."""
        th = self.theta
        if sign == 1:
            return (self.x_minus(-lam ** (3 - 6 * th), 0, lam ** (-3 * th)),
                    self.x_plus(0, 0, lam ** (3 * th)),
                    (lam ** (6 * th - 3), 0, -lam ** (3 * th)))
        return (self.x_minus(-lam ** (3 - 6 * th), -lam ** (3 * th - 3), lam ** (-3 * th)),
                self.x_plus(lam ** (6 * th - 3), 0, 0),
                (lam ** (6 * th - 3), lam ** (3 - 3 * th), lam ** (3 * th)))

    def weyl_identity(self, lam, sign: int) -> tuple[Matrix, Matrix]:
        """Both sides of x_-(...) x_+(...) = x_+(...) h(sign lam^2) w."""
        lam = self._eps(lam)
        left, right, p = self.weyl_cell_parts(lam, sign)
        return left @ right, self.x_plus(*p) @ self.torus_weyl(sign * lam * lam)

    def factor_weyl_cell(self, eps) -> tuple[Matrix, Matrix, Matrix]:
        """h(eps) w as a product in U U- U, split on eps = lam^2 or -lam^2."""
        lam, sign = self._lam(eps)
        left, right, p = self.weyl_cell_parts(lam, sign)
        return self.x_plus(*p).inverse(), left, right

    def torus_cell_parts(self, lam, sign: int):
        """(g1, right U factor, x_- params) with g1 x_+(...) = h(sign lam^2) x_-(...).

        With a = lam^(6th-3), b = lam^(3-3th), c = lam^(3th) the lower factor is
        x_-(a, -b(1+b), c + lam^3) for sign +1 and
        x_-(a(1-a), c + b^2 - b, c(1 - c - a - a^2) - lam^3) for sign -1.
        """
        th = self.theta
        a, b, c = lam ** (6 * th - 3), lam ** (3 - 3 * th), lam ** (3 * th)
        right = self.x_plus(-lam ** (3 - 6 * th), -lam ** (3 * th - 3), -lam ** (-3 * th))
        if sign == 1:
            g1 = self.x_plus(0, 1, 0) @ self.x_minus(0, 1, c)
            low = (a, -b * (1 + b), c + lam ** 3)
        else:
            g1 = self.x_plus(-1, -1, 1) @ self.x_minus(1, 0, c)
            low = (a * (1 - a), c + b * b - b, c * (1 - c - a - a * a) - lam ** 3)
        return g1, right, ReeUPlusParams(*(self._elem(x) for x in low))

    def torus_identity(self, lam, sign: int) -> tuple[Matrix, Matrix, Matrix]:
        """(g1, g1 x_+(...), h(sign lam^2) x_-(...))."""
        lam = self._eps(lam)
        g1, right, low = self.torus_cell_parts(lam, sign)
        return g1, g1 @ right, self.torus(sign * lam * lam) @ self.x_minus(low)

    def factor_torus_cell(self, eps) -> tuple[Matrix, Matrix, Matrix, Matrix]:
        """h(eps) as a product in U U- U U-."""
        lam, sign = self._lam(eps)
        if sign == 1:
            f1, f2 = self.x_plus(0, 1, 0), self.x_minus(0, 1, lam ** (3 * self.theta))
        else:
            f1, f2 = self.x_plus(-1, -1, 1), self.x_minus(1, 0, lam ** (3 * self.theta))
        _, right, low = self.torus_cell_parts(lam, sign)
        return f1, f2, right, self.x_minus(low).inverse()

    def generators(self) -> list[Matrix]:
        return [self.x_plus(1, 0, 0), self.torus(self.field.primitive), self.weyl()]
