"""Pure-Python matrix kernels over a table-driven GF(q).

Matrices are flat row-major sequences of element codes. Same interface as the
compiled ``_ckernels.Kernel``.
"""


class Kernel:
    backend = "python"

    def __init__(self, q, add, mul, neg, inv):
        self.q = q
        self.add = add
        self.mul = mul
        self.neg = neg
        self.inv = inv

    def mat_mul(self, a, b, n):
        add, mul = self.add, self.mul
        cols = [b[j::n] for j in range(n)]
        out = []
        for i in range(0, n * n, n):
            row = a[i:i + n]
            for col in cols:
                s = 0
                for x, y in zip(row, col):
                    if x and y:
                        s = add[s][mul[x][y]]
                out.append(s)
        return tuple(out)

    def _eliminate(self, a, n, aug):
        # Gauss-Jordan; returns (reduced augmented rows, det code) or (None, 0)
        add, mul, neg, inv = self.add, self.mul, self.neg, self.inv
        rows = [list(a[i * n:(i + 1) * n]) + (aug[i] if aug else []) for i in range(n)]
        det = 1
        for c in range(n):
            piv = next((r for r in range(c, n) if rows[r][c]), None)
            if piv is None:
                return None, 0
            if piv != c:
                rows[c], rows[piv] = rows[piv], rows[c]
                det = neg[det]
            pr = rows[c]
            det = mul[det][pr[c]]
            s = inv[pr[c]]
            pr[:] = [mul[s][x] for x in pr]
            for r in range(n):
                f = rows[r][c]
                if r != c and f:
                    nf = mul[neg[f]]
                    rows[r] = [add[x][nf[y]] for x, y in zip(rows[r], pr)]
        return rows, det

    def mat_inv(self, a, n):
        """Inverse as a flat tuple, or None when singular."""
        ident = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
        rows, _ = self._eliminate(a, n, ident)
        if rows is None:
            return None
        return tuple(x for r in rows for x in r[n:])

    def det(self, a, n):
        _, d = self._eliminate(a, n, None)
        return d
