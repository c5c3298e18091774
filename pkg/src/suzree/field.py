"""Finite fields GF(p^n) for p in {2, 3} and odd n.

Elements are stored as their base-p integer code ``sum(c[i] * p**i)``, where
``c`` is the little-endian coefficient vector of the representing polynomial.
The same code is the text encoding used everywhere else in the package.

Two routes to the arithmetic exist side by side:

* polynomial arithmetic on coefficient lists (:func:`add`, :func:`mul`,
  :func:`inv`, :func:`poly_pow`), used to build everything else;
* lookup tables derived from it once per field (operators on
  :class:`FieldElement` and the matrix kernels).
"""

from __future__ import annotations

import dataclasses
import functools
from typing import Iterator, Sequence

from .errors import (
    FieldMismatch,
    NotIrreducible,
    ParseError,
    WrongCharacteristic,
    ZeroInput,
    ZeroInverse,
)

# Default moduli, little-endian coefficient tuples.
DEFAULT_MODULI = {
    (2, 1): (0, 1),                     # x
    (2, 3): (1, 1, 0, 1),               # x^3 + x + 1
    (2, 5): (1, 0, 1, 0, 0, 1),         # x^5 + x^2 + 1
    (2, 7): (1, 1, 0, 0, 0, 0, 0, 1),   # x^7 + x + 1
    (3, 1): (0, 1),                     # x
    (3, 3): (1, 2, 0, 1),               # x^3 + 2x + 1
    (3, 5): (1, 2, 0, 0, 0, 1),         # x^5 + 2x + 1
}

# Add/mul tables are q*q; keep them a sane size.
MAX_ORDER = 3 ** 7


# -- polynomials over GF(p): little-endian int lists, no trailing zeros ------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _padd(a, b, p):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = (out[i] + c) % p
    return _trim(out)


def _psub(a, b, p):
    return _padd(a, [(-c) % p for c in b], p)


def _pmul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _trim(out)


def _pdivmod(a, b, p):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    lead_inv = pow(b[-1], p - 2, p)
    db = len(b) - 1
    qt = [0] * max(len(a) - db, 0)
    while len(r) - 1 >= db and r:
        shift = len(r) - 1 - db
        c = (r[-1] * lead_inv) % p
        qt[shift] = c
        for i, y in enumerate(b):
            r[shift + i] = (r[shift + i] - c * y) % p
        _trim(r)
    return _trim(qt), r


def _pmonic(a, p):
    if not a:
        return a
    inv = pow(a[-1], p - 2, p)
    return [(c * inv) % p for c in a]


def _pgcd(a, b, p):
    while b:
        a, b = b, _pdivmod(a, b, p)[1]
    return _pmonic(a, p)


def _ppowmod(a, e, mod, p):
    result = [1]
    base = _pdivmod(a, mod, p)[1]
    while e:
        if e & 1:
            result = _pdivmod(_pmul(result, base, p), mod, p)[1]
        base = _pdivmod(_pmul(base, base, p), mod, p)[1]
        e >>= 1
    return result


def _pinvmod(a, mod, p):
    """Inverse of ``a`` modulo ``mod`` by the extended Euclidean algorithm."""
    r0, r1 = list(mod), _pdivmod(a, mod, p)[1]
    s0, s1 = [], [1]
    while r1:
        qt, r = _pdivmod(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, _psub(s0, _pmul(qt, s1, p), p)
    if len(r0) != 1:
        raise ZeroInverse("element is not invertible")
    c = pow(r0[0], p - 2, p)
    return _trim([(x * c) % p for x in s0])


def is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Ben-Or test for a monic polynomial over GF(p)."""
    f = _trim([int(c) % p for c in modulus])
    n = len(f) - 1
    if n < 1 or f[-1] != 1:
        return False
    if n == 1:
        return True
    # cheap precheck: no roots in GF(p)
    for c in range(p):
        if sum(coef * pow(c, i, p) for i, coef in enumerate(f)) % p == 0:
            return False
    x = [0, 1]
    h = x
    for _ in range(n // 2):
        h = _ppowmod(h, p, f, p)
        if _pgcd(_psub(h, x, p), f, p) != [1]:
            return False
    return True


def find_irreducible(p: int, n: int) -> tuple[int, ...]:
    """Smallest monic irreducible of degree n, by code order of the low part."""
    for low in range(p ** n):
        coeffs = [(low // p ** i) % p for i in range(n)] + [1]
        if is_irreducible(coeffs, p):
            return tuple(coeffs)
    raise NotIrreducible(f"no irreducible polynomial of degree {n} over GF({p})")


def _factorize(k: int) -> list[int]:
    primes, d = [], 2
    while d * d <= k:
        if k % d == 0:
            primes.append(d)
            while k % d == 0:
                k //= d
        d += 1
    if k > 1:
        primes.append(k)
    return primes


@dataclasses.dataclass(frozen=True)
class _Tables:
    exp: list[int]      # exp[i] = g**i, doubled length so log sums need no mod
    log: list[int]      # log[0] = -1
    add: list[list[int]]
    mul: list[list[int]]
    neg: list[int]
    inv: list[int]      # inv[0] = 0 (never read)
    generator: int


@dataclasses.dataclass(frozen=True)
class FieldSpec:
    """GF(p^n) with a fixed irreducible monic modulus."""

    p: int
    n: int
    modulus: tuple[int, ...]

    def __post_init__(self):
        if self.p not in (2, 3):
            raise WrongCharacteristic(f"characteristic must be 2 or 3, got {self.p}")
        if self.n < 1 or self.n % 2 == 0:
            raise ValueError(f"extension degree must be odd and >= 1, got {self.n}")
        object.__setattr__(self, "modulus", tuple(int(c) for c in self.modulus))
        if len(self.modulus) != self.n + 1 or any(not 0 <= c < self.p for c in self.modulus):
            raise NotIrreducible(f"modulus must be {self.n + 1} residues mod {self.p}")
        if not is_irreducible(self.modulus, self.p):
            raise NotIrreducible(f"{self.modulus} is not irreducible over GF({self.p})")
        if self.q > MAX_ORDER:
            raise ValueError(f"field order {self.q} exceeds supported maximum {MAX_ORDER}")

    @classmethod
    def default(cls, p: int, n: int) -> FieldSpec:
        """Shared instance with the built-in modulus, so tables are built once."""
        return _default_field(cls, p, n)

    def __reduce__(self):
        # drop cached tables/kernel when pickling
        return (type(self), (self.p, self.n, self.modulus))

    @classmethod
    def for_order(cls, q: int) -> FieldSpec:
        for p in (2, 3):
            n, k = 0, q
            while k % p == 0:
                k //= p
                n += 1
            if k == 1 and n >= 1:
                return cls.default(p, n)
        raise ValueError(f"{q} is not a power of 2 or 3")

    @classmethod
    def parse(cls, text: str) -> FieldSpec:
        """Inverse of ``str(spec)``: ``"p=<p> n=<n> mod=<c0,c1,...>"``."""
        try:
            fields = dict(tok.split("=", 1) for tok in text.split())
            return cls(int(fields["p"]), int(fields["n"]),
                       tuple(int(c) for c in fields["mod"].split(",")))
        except (KeyError, ValueError) as exc:
            if isinstance(exc, NotIrreducible):
                raise
            raise ParseError(f"bad field spec {text!r}") from exc

    def __str__(self):
        return f"p={self.p} n={self.n} mod={','.join(map(str, self.modulus))}"

    @property
    def q(self) -> int:
        return self.p ** self.n

    @property
    def m(self) -> int:
        return (self.n - 1) // 2

    @property
    def theta(self) -> int:
        return self.p ** self.m

    # -- element construction ----------------------------------------------

    def __call__(self, code) -> FieldElement:
        if isinstance(code, FieldElement):
            if code.field != self:
                raise FieldMismatch("element belongs to another field")
            return code
        code = int(code)
        if not 0 <= code < self.q:
            raise ValueError(f"code {code} out of range for GF({self.q})")
        return FieldElement(self, code)

    def constant(self, k: int) -> FieldElement:
        """The image of the integer k under Z -> GF(q)."""
        return FieldElement(self, k % self.p)

    def from_coeffs(self, coeffs: Sequence[int]) -> FieldElement:
        if len(coeffs) > self.n:
            raise ValueError("too many coefficients")
        return FieldElement(self, _encode(coeffs, self.p))

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, 1)

    @property
    def primitive(self) -> FieldElement:
        return FieldElement(self, self.tables.generator)

    def elements(self) -> Iterator[FieldElement]:
        return (FieldElement(self, c) for c in range(self.q))

    def nonzero(self) -> Iterator[FieldElement]:
        return (FieldElement(self, c) for c in range(1, self.q))

    # -- tables ------------------------------------------------------------

    def poly_mul_codes(self, a: int, b: int) -> int:
        p, mod = self.p, list(self.modulus)
        prod = _pmul(_decode(a, p, self.n), _decode(b, p, self.n), p)
        return _encode(_pdivmod(prod, mod, p)[1], p)

    def _find_generator(self) -> int:
        order = self.q - 1
        primes = _factorize(order)
        mod = list(self.modulus)
        for c in range(1, self.q):
            a = _decode(c, self.p, self.n)
            if all(_ppowmod(a, order // r, mod, self.p) != [1] for r in primes):
                return c
        raise AssertionError("multiplicative group has no generator")

    @functools.cached_property
    def tables(self) -> _Tables:
        q, p, n = self.q, self.p, self.n
        g = self._find_generator()
        exp = [0] * (2 * (q - 1))
        log = [-1] * q
        x = 1
        for i in range(q - 1):
            exp[i] = x
            log[x] = i
            x = self.poly_mul_codes(x, g)
        exp[q - 1:] = exp[:q - 1]
        mul = [[0] * q]
        for a in range(1, q):
            la = log[a]
            mul.append([0] + [exp[la + log[b]] for b in range(1, q)])
        if p == 2:
            add = [[a ^ b for b in range(q)] for a in range(q)]
            neg = list(range(q))
        else:
            add = [[0]]
            for _ in range(n):
                size = len(add)
                add = [[(a % 3 + b % 3) % 3 + 3 * add[a // 3][b // 3]
                        for b in range(3 * size)] for a in range(3 * size)]
            neg = [_encode([(-c) % 3 for c in _decode(a, 3, n)], 3) for a in range(q)]
        mod = list(self.modulus)
        inv = [0] + [_encode(_pinvmod(_decode(a, p, n), mod, p), p) for a in range(1, q)]
        return _Tables(exp, log, add, mul, neg, inv, g)

    @functools.cached_property
    def kernel(self):
        """Matrix kernel bound to this field's tables (compiled if available)."""
        from . import _kernels
        t = self.tables
        return _kernels.Kernel(self.q, t.add, t.mul, t.neg, t.inv)


@functools.lru_cache(maxsize=None)
def _default_field(cls, p, n):
    modulus = DEFAULT_MODULI.get((p, n))
    if modulus is None:
        modulus = find_irreducible(p, n)
    return cls(p, n, modulus)


def _decode(code: int, p: int, n: int) -> list[int]:
    out = []
    for _ in range(n):
        code, r = divmod(code, p)
        out.append(r)
    return _trim(out)


def _encode(coeffs: Sequence[int], p: int) -> int:
    code = 0
    for c in reversed(coeffs):
        code = code * p + (c % p)
    return code


class FieldElement:
    """An element of a :class:`FieldSpec`, immutable.

    Plain ints on either side of an operator are mapped through Z -> GF(q),
    so ``a + 1`` and ``a == 0`` mean what they look like.
    """

    __slots__ = ("field", "code")

    def __init__(self, field: FieldSpec, code: int):
        self.field = field
        self.code = code

    @property
    def coeffs(self) -> tuple[int, ...]:
        p, c = self.field.p, self.code
        out = []
        for _ in range(self.field.n):
            c, r = divmod(c, p)
            out.append(r)
        return tuple(out)

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field is not self.field and other.field != self.field:
                raise FieldMismatch(f"GF({self.field.q}) vs GF({other.field.q})")
            return other.code
        if isinstance(other, int):
            return other % self.field.p
        return NotImplemented

    def __add__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.tables.add[self.code][b])

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.field, self.field.tables.neg[self.code])

    def __sub__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        t = self.field.tables
        return FieldElement(self.field, t.add[self.code][t.neg[b]])

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return FieldElement(self.field, self.field.tables.mul[self.code][b])

    __rmul__ = __mul__

    def inverse(self) -> FieldElement:
        if self.code == 0:
            raise ZeroInverse("zero has no inverse")
        return FieldElement(self.field, self.field.tables.inv[self.code])

    def __truediv__(self, other):
        b = self._other(other)
        if b is NotImplemented:
            return b
        return self * FieldElement(self.field, b).inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if self.code == 0:
            if k > 0:
                return self
            if k == 0:
                return self.field.one
            raise ZeroInverse("zero to a negative power")
        t = self.field.tables
        e = (t.log[self.code] * k) % (self.field.q - 1)
        return FieldElement(self.field, t.exp[e])

    def theta_pow(self) -> FieldElement:
        return theta_pow(self)

    def theta_unpow(self) -> FieldElement:
        return theta_unpow(self)

    def is_square(self) -> bool:
        if self.code == 0:
            return True
        if self.field.p == 2:
            return True
        return self.field.tables.log[self.code] % 2 == 0

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.code == other.code and self.field == other.field
        if isinstance(other, int):
            return self.code == other % self.field.p
        return NotImplemented

    def __hash__(self):
        return hash((self.code, self.field.p, self.field.n))

    def __bool__(self):
        return self.code != 0

    def __int__(self):
        return self.code

    def __repr__(self):
        return f"GF({self.field.q})({self.code})"

    def __str__(self):
        return str(self.code)


# -- reference operations (polynomial route) --------------------------------

def _check_same(a: FieldElement, b: FieldElement) -> FieldSpec:
    if a.field != b.field:
        raise FieldMismatch(f"GF({a.field.q}) vs GF({b.field.q})")
    return a.field


def add(a: FieldElement, b: FieldElement) -> FieldElement:
    f = _check_same(a, b)
    return f.from_coeffs([(x + y) % f.p for x, y in zip(a.coeffs, b.coeffs)])


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    f = _check_same(a, b)
    return FieldElement(f, f.poly_mul_codes(a.code, b.code))


def inv(a: FieldElement) -> FieldElement:
    """Inverse by extended Euclid over the modulus."""
    f = a.field
    if a.code == 0:
        raise ZeroInverse("zero has no inverse")
    return f.from_coeffs(_pinvmod(_decode(a.code, f.p, f.n), list(f.modulus), f.p))


def poly_pow(a: FieldElement, k: int) -> FieldElement:
    """Square-and-multiply with polynomial multiplication only (k >= 0)."""
    result, base = a.field.one, a
    while k:
        if k & 1:
            result = mul(result, base)
        base = mul(base, base)
        k >>= 1
    return result


def theta_pow(a: FieldElement) -> FieldElement:
    """a -> a**theta with theta = p**m, as m Frobenius steps."""
    p = a.field.p
    for _ in range(a.field.m):
        a = a ** p
    return a


def theta_unpow(a: FieldElement) -> FieldElement:
    """Inverse of :func:`theta_pow`: a -> a**(p*theta), since theta * p*theta = q."""
    return a ** (a.field.p * a.field.theta)


def sqrt_char3(a: FieldElement) -> tuple[FieldElement, int]:
    """Return (lam, s) with s * lam**2 == a and s in {+1, -1}.

    q = 3**n with n odd, so q = 3 (mod 4) and a**((q+1)/4) is a square root of
    any square a.
    """
    f = a.field
    if f.p != 3:
        raise WrongCharacteristic("sqrt_char3 needs characteristic 3")
    if a.code == 0:
        raise ZeroInput("zero is neither a square nor a minus square")
    half = (f.q - 1) // 2
    if a ** half == 1:
        return a ** ((f.q + 1) // 4), 1
    return (-a) ** ((f.q + 1) // 4), -1


def sqrt_char2(a: FieldElement) -> FieldElement:
    f = a.field
    if f.p != 2:
        raise WrongCharacteristic("sqrt_char2 needs characteristic 2")
    return a ** (2 ** (f.n - 1))


def enumerate_field(spec: FieldSpec) -> list[FieldElement]:
    """All q elements, ordered by code."""
    return list(spec.elements())
