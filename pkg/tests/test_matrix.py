import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from suzree.errors import FieldMismatch, ParseError, Singular, WrongCharacteristic, WrongDimension
from suzree.field import FieldSpec
from suzree.matrix import (REE_LABELS, SUZUKI_LABELS, Matrix, label_index, mat_inv, mat_mul,
                           parse_matrices, parse_matrix, preserves_symplectic_form, product,
                           symplectic_form)
from suzree.suzuki import Suzuki

from oracles import naive_mul

GF8 = FieldSpec.for_order(8)
GF27 = FieldSpec.for_order(27)


def matrices(field, dim):
    return st.lists(st.integers(0, field.q - 1), min_size=dim * dim, max_size=dim * dim).map(
        lambda codes: Matrix(field, dim, codes))


def test_label_conventions():
    assert label_index(SUZUKI_LABELS) == {1: 0, 2: 1, -2: 2, -1: 3}
    assert label_index(REE_LABELS)[0] == 3 and label_index(REE_LABELS)[-3] == 4


def test_identity_and_weyl():
    S = Suzuki.from_q(8)
    a = S.random_element(3)
    ident = Matrix.identity(GF8, 4)
    assert a @ ident == a == ident @ a
    w = S.weyl()
    assert w @ w == ident
    assert mat_inv(ident) == ident


def test_unipotent_inverse():
    S = Suzuki.from_q(8)
    for t in GF8.elements():
        for u in GF8.elements():
            x = S.x_plus(t, u)
            xi = x.inverse()
            assert x @ xi == S.identity
            assert xi.is_upper_unitriangular()


def test_torus_inverse():
    S = Suzuki.from_q(32)
    for e in S.field.nonzero():
        assert S.torus(e).inverse() == S.torus(e.inverse())


def test_inverse_of_unitriangular_is_unitriangular():
    rng = random.Random(5)
    for _ in range(50):
        codes = [rng.randrange(27) if j > i else int(i == j) for i in range(7) for j in range(7)]
        m = Matrix(GF27, 7, codes)
        inv = m.inverse()
        assert inv.is_upper_unitriangular()
        assert m @ inv == Matrix.identity(GF27, 7)
        assert inv.transpose() == m.transpose().inverse()


def test_singular():
    m = Matrix.from_rows(GF8, [[1, 1, 0, 0], [1, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
    assert m.det() == 0
    with pytest.raises(Singular):
        m.inverse()


def test_shape_and_field_checks():
    with pytest.raises(WrongDimension):
        Matrix(GF8, 4, [0] * 15)
    with pytest.raises(WrongDimension):
        Matrix.identity(GF8, 4) @ Matrix.identity(GF8, 7)
    with pytest.raises(FieldMismatch):
        Matrix.identity(GF8, 4) @ Matrix.identity(FieldSpec.for_order(32), 4)


@settings(max_examples=60)
@given(matrices(GF27, 7), matrices(GF27, 7), matrices(GF27, 7))
def test_mul_associative(a, b, c):
    assert (a @ b) @ c == a @ (b @ c)
    assert (a @ b).data == naive_mul(GF27, a.data, b.data, 7)


@settings(max_examples=60)
@given(matrices(GF8, 4), matrices(GF8, 4))
def test_inverse_of_product(a, b):
    if a.det() == 0 or b.det() == 0:
        with pytest.raises(Singular):
            (a @ b).inverse()
        return
    assert (a @ b).inverse() == b.inverse() @ a.inverse()
    assert (a @ b).det() == a.det() * b.det()


def test_transposes():
    m = Matrix(GF27, 7, range(49))
    assert m.transpose().transpose() == m
    assert m.antitranspose().antitranspose() == m
    assert m.antitranspose()[0, 0] == m[6, 6]
    assert m.antitranspose()[0, 1] == m[5, 6]


def test_powers_and_product():
    S = Suzuki.from_q(8)
    x = S.x_plus(1, 0)
    assert x ** 0 == S.identity
    assert x ** 3 == product([x, x, x]) == mat_mul(mat_mul(x, x), x)
    assert x ** -1 == x.inverse()
    # x_+(1, 0) has order 4 in characteristic 2
    assert x ** 4 == S.identity and x ** 2 != S.identity


def test_predicates():
    S = Suzuki.from_q(8)
    assert S.identity.is_identity() and S.identity.is_diagonal()
    f = S.field
    assert S.x_plus(f(3), f(5)).is_upper_unitriangular()
    assert S.x_minus(f(3), f(5)).is_lower_unitriangular()
    assert S.torus(f(3)).is_diagonal() and not S.torus(f(3)).is_identity()
    assert not S.weyl().is_diagonal()


def test_symplectic_examples():
    S = Suzuki.from_q(8)
    assert preserves_symplectic_form(S.identity)
    assert preserves_symplectic_form(S.weyl())
    for t in GF8.elements():
        for u in GF8.elements():
            assert preserves_symplectic_form(S.x_plus(t, u))
    # e + e_{0,1} without its mirrored partner: g^T phi g differs at (1, 2)
    e01 = Matrix.with_entries(GF8, 4, {(0, 1): 1})
    assert not preserves_symplectic_form(e01)
    # the matching symplectic transvection adds the mirrored entry (2, 3)
    assert preserves_symplectic_form(Matrix.with_entries(GF8, 4, {(0, 1): 1, (2, 3): 1}))
    assert symplectic_form(GF8) == S.weyl()
    with pytest.raises(WrongDimension):
        preserves_symplectic_form(Matrix.identity(GF8, 7))
    with pytest.raises(WrongCharacteristic):
        preserves_symplectic_form(Matrix.identity(GF27, 4))


def test_text_roundtrip():
    S = Suzuki.from_q(8)
    g = S.random_element(11)
    assert parse_matrix(g.to_text(), GF8) == g
    assert parse_matrix(g.to_text(), GF8, 4) == g
    text = "\n\n".join(m.to_text() for m in (g, S.weyl(), S.identity))
    assert parse_matrices(text, GF8, 4) == [g, S.weyl(), S.identity]


@pytest.mark.parametrize("text", ["", "1 0\n0", "1 0 0\n0 1 0\n0 0 x", "8 0\n0 1", "-1 0\n0 1"])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_matrix(text, GF8)


def test_parse_dim_mismatch():
    with pytest.raises(ParseError):
        parse_matrix("1 0\n0 1", GF8, 4)
    with pytest.raises(ParseError):
        parse_matrices("1 0\n0 1\n1 0", GF8, 2)
