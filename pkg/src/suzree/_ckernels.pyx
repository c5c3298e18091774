# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled matrix kernels over a table-driven GF(q).

Mirror of ``_pykernels.Kernel``; matrices are flat row-major sequences of
element codes, dimension at most 7.
"""

from libc.stdlib cimport malloc, free

cdef enum:
    MAXN = 7


cdef class Kernel:
    cdef readonly int q
    cdef int *add_t
    cdef int *mul_t
    cdef int *neg_t
    cdef int *inv_t

    backend = "cython"

    def __cinit__(self, int q, add, mul, neg, inv):
        cdef int i, j
        self.q = q
        self.add_t = <int *> malloc(q * q * sizeof(int))
        self.mul_t = <int *> malloc(q * q * sizeof(int))
        self.neg_t = <int *> malloc(q * sizeof(int))
        self.inv_t = <int *> malloc(q * sizeof(int))
        if not (self.add_t and self.mul_t and self.neg_t and self.inv_t):
            raise MemoryError()
        for i in range(q):
            arow = add[i]
            mrow = mul[i]
            for j in range(q):
                self.add_t[i * q + j] = arow[j]
                self.mul_t[i * q + j] = mrow[j]
            self.neg_t[i] = neg[i]
            self.inv_t[i] = inv[i]

    def __dealloc__(self):
        free(self.add_t)
        free(self.mul_t)
        free(self.neg_t)
        free(self.inv_t)

    cdef int _load(self, seq, int *dst, int n) except -1:
        cdef int i
        if n > MAXN or len(seq) != n * n:
            raise ValueError("bad matrix shape")
        for i in range(n * n):
            dst[i] = seq[i]
        return 0

    def mat_mul(self, a, b, int n):
        cdef int A[MAXN * MAXN]
        cdef int B[MAXN * MAXN]
        cdef int i, j, k, s, x, y
        cdef int q = self.q
        self._load(a, A, n)
        self._load(b, B, n)
        out = []
        for i in range(n):
            for j in range(n):
                s = 0
                for k in range(n):
                    x = A[i * n + k]
                    y = B[k * n + j]
                    if x and y:
                        s = self.add_t[s * q + self.mul_t[x * q + y]]
                out.append(s)
        return tuple(out)

    cdef int _eliminate(self, int *M, int n, int width, int *det) except -2:
        # Gauss-Jordan on an n x width row-major buffer; returns 0, or -1 if singular
        cdef int q = self.q
        cdef int c, r, piv, j, s, f, t
        det[0] = 1
        for c in range(n):
            piv = -1
            for r in range(c, n):
                if M[r * width + c]:
                    piv = r
                    break
            if piv < 0:
                det[0] = 0
                return -1
            if piv != c:
                for j in range(width):
                    t = M[c * width + j]
                    M[c * width + j] = M[piv * width + j]
                    M[piv * width + j] = t
                det[0] = self.neg_t[det[0]]
            det[0] = self.mul_t[det[0] * q + M[c * width + c]]
            s = self.inv_t[M[c * width + c]]
            for j in range(width):
                M[c * width + j] = self.mul_t[s * q + M[c * width + j]]
            for r in range(n):
                f = M[r * width + c]
                if r != c and f:
                    f = self.neg_t[f]
                    for j in range(width):
                        M[r * width + j] = self.add_t[
                            M[r * width + j] * q + self.mul_t[f * q + M[c * width + j]]]
        return 0

    def mat_inv(self, a, int n):
        """Inverse as a flat tuple, or None when singular."""
        cdef int A[MAXN * MAXN]
        cdef int M[MAXN * 2 * MAXN]
        cdef int i, j, d
        self._load(a, A, n)
        for i in range(n):
            for j in range(n):
                M[i * 2 * n + j] = A[i * n + j]
                M[i * 2 * n + n + j] = 1 if i == j else 0
        if self._eliminate(M, n, 2 * n, &d) < 0:
            return None
        return tuple([M[i * 2 * n + n + j] for i in range(n) for j in range(n)])

    def det(self, a, int n):
        cdef int A[MAXN * MAXN]
        cdef int d
        self._load(a, A, n)
        self._eliminate(A, n, n, &d)
        return d
