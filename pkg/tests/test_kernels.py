import random

import pytest

from suzree import _kernels
from suzree.field import FieldSpec

from oracles import leibniz_det, naive_mul

BACKENDS = [_kernels.PyKernel] + ([_kernels.CKernel] if _kernels.CKernel is not None else [])


@pytest.fixture(params=BACKENDS, ids=lambda k: k.backend)
def kernel_cls(request):
    return request.param


def make(kernel_cls, q):
    f = FieldSpec.for_order(q)
    t = f.tables
    return f, kernel_cls(q, t.add, t.mul, t.neg, t.inv)


def rand_mat(rng, q, n):
    return tuple(rng.randrange(q) for _ in range(n * n))


@pytest.mark.parametrize("q,n", [(2, 4), (8, 4), (128, 4), (3, 7), (27, 7), (243, 7)])
def test_mul_matches_naive(kernel_cls, q, n):
    f, k = make(kernel_cls, q)
    rng = random.Random(q * n)
    for _ in range(20):
        a, b = rand_mat(rng, q, n), rand_mat(rng, q, n)
        assert k.mat_mul(a, b, n) == naive_mul(f, a, b, n)


@pytest.mark.parametrize("q,n", [(2, 4), (8, 4), (32, 4), (3, 7), (27, 7)])
def test_inverse_and_det(kernel_cls, q, n):
    f, k = make(kernel_cls, q)
    rng = random.Random(q + n)
    ident = tuple(1 if i // n == i % n else 0 for i in range(n * n))
    singular_seen = 0
    for _ in range(30):
        a = rand_mat(rng, q, n)
        if n == 4:
            assert k.det(a, n) == leibniz_det(f, a, n)
        inv = k.mat_inv(a, n)
        if inv is None:
            singular_seen += 1
            assert k.det(a, n) == 0
        else:
            assert k.mat_mul(a, inv, n) == ident
            assert k.mat_mul(inv, a, n) == ident
            assert k.det(a, n) != 0


def test_det_7x7_oracle(kernel_cls):
    f, k = make(kernel_cls, 3)
    rng = random.Random(7)
    for _ in range(3):
        a = rand_mat(rng, 3, 7)
        assert k.det(a, 7) == leibniz_det(f, a, 7)


def test_singular_returns_none(kernel_cls):
    _, k = make(kernel_cls, 8)
    a = (1, 2, 3, 4) * 4  # four equal rows
    assert k.mat_inv(a, 4) is None
    assert k.det(a, 4) == 0
    assert k.mat_inv((0,) * 16, 4) is None


def test_backends_agree():
    if _kernels.CKernel is None:
        pytest.skip("compiled extension not built")
    f = FieldSpec.for_order(243)
    t = f.tables
    py = _kernels.PyKernel(243, t.add, t.mul, t.neg, t.inv)
    c = _kernels.CKernel(243, t.add, t.mul, t.neg, t.inv)
    rng = random.Random(1)
    for _ in range(200):
        a, b = rand_mat(rng, 243, 7), rand_mat(rng, 243, 7)
        assert py.mat_mul(a, b, 7) == c.mat_mul(a, b, 7)
        assert py.mat_inv(a, 7) == c.mat_inv(a, 7)
        assert py.det(a, 7) == c.det(a, 7)


def test_selected_backend():
    assert _kernels.BACKEND in ("python", "cython")
    assert _kernels.Kernel.backend == _kernels.BACKEND


def test_pure_python_fallback_selected_by_env():
    import os
    import subprocess
    import sys
    code = ("from suzree import BACKEND, Suzuki; G = Suzuki.from_q(32); g = G.random_element(1); "
            "print(BACKEND, G.check_factorization(g, G.factor(g)))")
    res = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True,
                         env=dict(os.environ, SUZREE_PURE_PYTHON="1"), check=True)
    assert res.stdout.split() == ["python", "True"]
