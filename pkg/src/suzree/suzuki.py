"""Suzuki groups Sz(q), q = 2^(2m+1), as 4x4 matrices inside Sp(4, q).

Storage order of the basis is 1, 2, -2, -1. With theta = 2^m:

    x_+(t, u) = [[1, t^th, u,  t^(2th+1) + t^th u + u^(2th)],
                 [0, 1,    t,  t^(th+1) + u                ],
                 [0, 0,    1,  t^th                        ],
                 [0, 0,    0,  1                           ]]

    h(eps) = diag(eps, eps^(2th-1), eps^(1-2th), eps^-1),   w = antidiag(1, 1, 1, 1)

and x_-(t, u) = w x_+(t, u) w.
"""

from __future__ import annotations

from typing import NamedTuple

from .errors import NotInU, WrongCharacteristic
from .field import FieldElement, FieldSpec
from .matrix import Matrix
from .rank1 import RankOneGroup


class UPlusParams(NamedTuple):
    t: FieldElement
    u: FieldElement


class Suzuki(RankOneGroup):
    name = "suzuki"
    dim = 4
    nparams = 2
    params_type = UPlusParams

    def __init__(self, field: FieldSpec):
        if field.p != 2:
            raise WrongCharacteristic("Suzuki groups live in characteristic 2")
        super().__init__(field)
        self._w = Matrix(field, 4, [1 if i + j == 3 else 0 for i in range(4) for j in range(4)])

    @classmethod
    def from_q(cls, q: int) -> Suzuki:
        field = FieldSpec.for_order(q)
        if field.p != 2:
            raise ValueError(f"q={q} is not a power of 2")
        return cls(field)

    @classmethod
    def from_m(cls, m: int) -> Suzuki:
        return cls(FieldSpec.default(2, 2 * m + 1))

    def _x_plus(self, params: UPlusParams) -> Matrix:
        t, u = params
        th = self.theta
        t_th = t ** th
        u_th = u ** th
        return Matrix.from_rows(self.field, [
            [1, t_th, u, t_th * t_th * t + t_th * u + u_th * u_th],
            [0, 1, t, t_th * t + u],
            [0, 0, 1, t_th],
            [0, 0, 0, 1],
        ])

    def torus(self, eps) -> Matrix:
        e = self._eps(eps)
        th = self.theta
        return Matrix.diagonal([e, e ** (2 * th - 1), e ** (1 - 2 * th), e ** -1])

    def weyl(self) -> Matrix:
        return self._w

    def extract_uplus(self, g: Matrix) -> UPlusParams:
        """(t, u) from entries (1,2) and (0,2), checked by rebuilding."""
        if g.dim != 4:
            raise NotInU("not a 4x4 matrix")
        params = UPlusParams(g[1, 2], g[0, 2])
        if self.x_plus(params) != g:
            raise NotInU("matrix does not have the x_+(t, u) pattern")
        return params

    def _big_cell_eps(self, corner):
        # (h(eps) w) has eps^-1 at (3, 0)
        return corner.inverse()

    def _big_cell_right(self, g, eps):
        # row 3 of g is eps^-1 * (1, t^th, u, *)
        return UPlusParams((g[3, 1] * eps).theta_unpow(), g[3, 2] * eps)

    # -- Sylow factorization of the two cells -----------------------------------------

    def weyl_identity(self, eps) -> tuple[Matrix, Matrix]:
        """Both sides of x_-(eps^(1-2th), 0) x_+(0, eps^th) = x_+(eps^(2th-1), 0) h(eps) w."""
        e = self._eps(eps)
        th = self.theta
        lhs = self.x_minus(e ** (1 - 2 * th), 0) @ self.x_plus(0, e ** th)
        rhs = self.x_plus(e ** (2 * th - 1), 0) @ self.torus_weyl(e)
        return lhs, rhs

    def factor_weyl_cell(self, eps) -> tuple[Matrix, Matrix, Matrix]:
        """h(eps) w as a product in U U- U."""
        e = self._eps(eps)
        th = self.theta
        return (self.x_plus(e ** (2 * th - 1), 0).inverse(),
                self.x_minus(e ** (1 - 2 * th), 0),
                self.x_plus(0, e ** th))

    def torus_cell_parts(self, eps):
        """(g1, right U factor, (t, u)) with g1 x_+(...) = h(eps) x_-(t, u)."""
        e = self._eps(eps)
        th = self.theta
        g1 = self.x_plus(0, 1) @ self.x_minus(1, 1 + e ** th)
        right = self.x_plus(e ** (1 - 2 * th), e ** -th)
        s = e ** (2 * th - 1)
        return g1, right, UPlusParams(s * (1 + s), e + e ** th + e ** (2 * th))

    def torus_identity(self, eps) -> tuple[Matrix, Matrix, Matrix]:
        """(g1, g1 x_+(eps^(1-2th), eps^-th), h(eps) x_-(t, u))."""
        g1, right, tu = self.torus_cell_parts(eps)
        return g1, g1 @ right, self.torus(eps) @ self.x_minus(tu)

    def factor_torus_cell(self, eps) -> tuple[Matrix, Matrix, Matrix, Matrix]:
        """h(eps) as a product in U U- U U-."""
        e = self._eps(eps)
        th = self.theta
        _, right, tu = self.torus_cell_parts(e)
        return (self.x_plus(0, 1), self.x_minus(1, 1 + e ** th), right,
                self.x_minus(tu).inverse())

    def generators(self) -> list[Matrix]:
        if self.q == 2:
            return [self.x_plus(1, 0), self.x_plus(0, 1), self.weyl()]
        return [self.x_plus(1, 0), self.torus(self.field.primitive), self.weyl()]
