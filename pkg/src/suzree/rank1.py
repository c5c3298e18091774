"""Machinery shared by the two rank-one twisted groups (Suzuki and small Ree).

Both groups have a split BN-pair with Weyl group of order 2, so every element
is uniquely ``x_+(a) h(eps) w x_+(b)`` (big cell) or ``x_+(a) h(eps)`` (torus
cell). A subclass supplies the unipotent parameterization, the torus, the
Weyl element, parameter extraction and the two cell factorizations; this base
turns those into Bruhat forms, 4-factor Sylow factorizations, enumeration and
uniform sampling.
"""

from __future__ import annotations

import dataclasses
import functools
import itertools
import random
from typing import Iterator

from .errors import NotInGroup, NotInU, WrongDimension, ZeroTorusParameter
from .field import FieldElement, FieldSpec
from .matrix import Matrix, product


@dataclasses.dataclass(frozen=True)
class BigCell:
    u1: tuple
    eps: FieldElement
    u2: tuple


@dataclasses.dataclass(frozen=True)
class TorusCell:
    u: tuple
    eps: FieldElement


@dataclasses.dataclass(frozen=True)
class SylowFactorization:
    """f1 in U, f2 in U-, f3 in U, f4 in U-, with f1 f2 f3 f4 = g."""

    f1: Matrix
    f2: Matrix
    f3: Matrix
    f4: Matrix

    TAGS = ("U", "U-", "U", "U-")

    @property
    def factors(self) -> tuple[Matrix, Matrix, Matrix, Matrix]:
        return (self.f1, self.f2, self.f3, self.f4)

    def product(self) -> Matrix:
        return product(self.factors)

    def to_text(self, header: str) -> str:
        return "\n".join([header] + [f.to_text() for f in self.factors])


class RankOneGroup:
    name: str
    dim: int
    nparams: int  # 2 for Suzuki (t, u), 3 for Ree (t, u, v)
    params_type: type

    def __init__(self, field: FieldSpec):
        self.field = field
        self.m = field.m
        self.q = field.q
        self.theta = field.theta
        self.identity = Matrix.identity(field, self.dim)

    def __repr__(self):
        return f"{type(self).__name__}(q={self.q})"

    @property
    def header(self) -> str:
        return f"{self.name} q={self.q}"

    # -- subclass hooks ------------------------------------------------------

    def _x_plus(self, params: tuple) -> Matrix:
        raise NotImplementedError

    def torus(self, eps) -> Matrix:
        raise NotImplementedError

    def weyl(self) -> Matrix:
        raise NotImplementedError

    def extract_uplus(self, g: Matrix):
        raise NotImplementedError

    def _big_cell_right(self, g: Matrix, eps: FieldElement) -> tuple:
        """Parameters of u2 for a big-cell g with known eps."""
        raise NotImplementedError

    def _big_cell_eps(self, corner: FieldElement) -> FieldElement:
        raise NotImplementedError

    def factor_weyl_cell(self, eps) -> tuple[Matrix, Matrix, Matrix]:
        raise NotImplementedError

    def factor_torus_cell(self, eps) -> tuple[Matrix, Matrix, Matrix, Matrix]:
        raise NotImplementedError

    # -- elements ------------------------------------------------------------

    def _elem(self, x) -> FieldElement:
        if isinstance(x, int):
            return self.field.constant(x)
        return self.field(x)

    def _eps(self, eps) -> FieldElement:
        eps = self._elem(eps)
        if eps == 0:
            raise ZeroTorusParameter("torus parameter must be nonzero")
        return eps

    def x_plus(self, *params) -> Matrix:
        if len(params) == 1 and isinstance(params[0], tuple):
            params = params[0]
        if len(params) != self.nparams:
            raise TypeError(f"x_plus takes {self.nparams} parameters")
        return self._x_plus_cached(tuple(self._elem(x).code for x in params))

    @functools.lru_cache(maxsize=1 << 16)
    def _x_plus_cached(self, codes: tuple[int, ...]) -> Matrix:
        return self._x_plus(self.params_type(*(FieldElement(self.field, c) for c in codes)))

    def x_minus(self, *params) -> Matrix:
        w = self.weyl()
        return w @ self.x_plus(*params) @ w

    @functools.lru_cache(maxsize=1 << 12)
    def _hw(self, eps_code: int) -> Matrix:
        return self.torus(FieldElement(self.field, eps_code)) @ self.weyl()

    def torus_weyl(self, eps) -> Matrix:
        """h(eps) w."""
        return self._hw(self._eps(eps).code)

    # -- membership ----------------------------------------------------------

    def in_u(self, g: Matrix) -> bool:
        try:
            self.extract_uplus(g)
        except NotInU:
            return False
        return True

    def in_u_minus(self, g: Matrix) -> bool:
        w = self.weyl()
        return self.in_u(w @ g @ w)

    def _check_shape(self, g: Matrix):
        if g.dim != self.dim:
            raise WrongDimension(f"{self.name} elements are {self.dim}x{self.dim}")
        if g.field != self.field:
            raise NotInGroup("matrix is over a different field")

    # -- Bruhat decomposition --------------------------------------------------

    def rebuild(self, form) -> Matrix:
        if isinstance(form, BigCell):
            return self.x_plus(form.u1) @ self.torus_weyl(form.eps) @ self.x_plus(form.u2)
        return self.x_plus(form.u) @ self.torus(form.eps)

    def bruhat(self, g: Matrix):
        """Unique Bruhat normal form of g; raises NotInGroup if g is not in the group.

        The big cell is recognised by a nonzero bottom-left corner: the last row
        of ``x_+ h w x_+(b)`` is a nonzero multiple of the first row of ``x_+(b)``.
        """
        self._check_shape(g)
        d = self.dim
        corner = g[d - 1, 0]
        try:
            if corner:
                eps = self._big_cell_eps(corner)
                u2 = self._big_cell_right(g, eps)
                rest = g @ self.x_plus(u2).inverse() @ self.torus_weyl(eps).inverse()
                form = BigCell(self.extract_uplus(rest), eps, u2)
            else:
                eps = g[0, 0]
                if eps == 0:
                    raise NotInGroup("zero diagonal corner in the torus cell")
                form = TorusCell(self.extract_uplus(g @ self.torus(eps).inverse()), eps)
        except NotInU as exc:
            raise NotInGroup(f"not in group: {exc}") from None
        if self.rebuild(form) != g:
            raise NotInGroup("not in group: reconstruction mismatch")
        return form

    def contains(self, g: Matrix) -> bool:
        try:
            self.bruhat(g)
        except NotInGroup:
            return False
        return True

    # -- Sylow factorization ---------------------------------------------------

    def factor(self, g: Matrix) -> SylowFactorization:
        form = self.bruhat(g)
        if isinstance(form, BigCell):
            a, b, c = self.factor_weyl_cell(form.eps)
            return SylowFactorization(self.x_plus(form.u1) @ a, b, c @ self.x_plus(form.u2),
                                      self.identity)
        f1, f2, f3, f4 = self.factor_torus_cell(form.eps)
        return SylowFactorization(self.x_plus(form.u) @ f1, f2, f3, f4)

    def check_factorization(self, g: Matrix, fac: SylowFactorization) -> bool:
        """Product round trip plus U / U- membership of each factor."""
        return (fac.product() == g
                and self.in_u(fac.f1) and self.in_u_minus(fac.f2)
                and self.in_u(fac.f3) and self.in_u_minus(fac.f4))

    # -- counting, enumeration, sampling -----------------------------------------

    @property
    def unipotent_order(self) -> int:
        return self.q ** self.nparams

    @property
    def order(self) -> int:
        qk = self.unipotent_order
        return qk * (self.q - 1) * (qk + 1)

    def all_params(self) -> Iterator[tuple]:
        elems = list(self.field.elements())
        for combo in itertools.product(elems, repeat=self.nparams):
            yield self.params_type(*combo)

    def form_at(self, index: int):
        """The index-th Bruhat form in enumeration order (big cell first)."""
        qk, q = self.unipotent_order, self.q
        if not 0 <= index < self.order:
            raise IndexError(index)
        big = qk * (q - 1) * qk
        if index < big:
            index, b = divmod(index, qk)
            a, e = divmod(index, q - 1)
            return BigCell(self._params_at(a), self.field(e + 1), self._params_at(b))
        a, e = divmod(index - big, q - 1)
        return TorusCell(self._params_at(a), self.field(e + 1))

    def _params_at(self, index: int) -> tuple:
        codes = []
        for _ in range(self.nparams):
            index, c = divmod(index, self.q)
            codes.append(c)
        return self.params_type(*(FieldElement(self.field, c) for c in reversed(codes)))

    def enumerate_forms(self, start: int = 0, stop: int | None = None) -> Iterator:
        stop = self.order if stop is None else min(stop, self.order)
        for i in range(start, stop):
            yield self.form_at(i)

    def enumerate_group(self, start: int = 0, stop: int | None = None) -> Iterator[Matrix]:
        for form in self.enumerate_forms(start, stop):
            yield self.rebuild(form)

    def random_form(self, seed):
        """Uniform over the group: a uniform index into the Bruhat enumeration."""
        return self.form_at(random.Random(seed).randrange(self.order))

    def random_element(self, seed) -> Matrix:
        return self.rebuild(self.random_form(seed))

    # -- generators for closure checks ---------------------------------------------

    def generators(self) -> list[Matrix]:
        """Three elements generating the whole group."""
        raise NotImplementedError
