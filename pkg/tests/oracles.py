"""Slow, independent reference implementations used as test oracles."""

import itertools

from suzree.field import FieldSpec, add, mul


def naive_mul(field: FieldSpec, a, b, n):
    """Row-by-column product using polynomial-route field arithmetic."""
    out = []
    for i in range(n):
        for j in range(n):
            s = field.zero
            for k in range(n):
                s = add(s, mul(field(a[i * n + k]), field(b[k * n + j])))
            out.append(s.code)
    return tuple(out)


def _perm_sign(perm):
    sign, seen = 1, set()
    for start in range(len(perm)):
        if start in seen:
            continue
        length, j = 0, start
        while j not in seen:
            seen.add(j)
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def leibniz_det(field: FieldSpec, a, n):
    total = field.zero
    for perm in itertools.permutations(range(n)):
        term = field.one
        for i in range(n):
            term = mul(term, field(a[i * n + perm[i]]))
        total = add(total, term if _perm_sign(perm) == 1 else -term)
    return total.code
