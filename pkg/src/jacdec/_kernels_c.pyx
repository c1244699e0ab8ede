# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled integer kernels.

Same interface and conventions as the reference twin in ``_kernels_py``
(row-style HNF with U*A = H, SNF with U*A*V = D).  Entries are Python
ints, so the arithmetic stays arbitrary precision; the speedup comes
from typed loop indexing and avoided interpreter dispatch.
"""

BACKEND = "c"


def int_matmul(A, B):
    cdef Py_ssize_t n = len(A)
    cdef Py_ssize_t k = len(B)
    cdef Py_ssize_t m = len(B[0]) if k else 0
    cdef Py_ssize_t i, j, t
    cdef list Bt = [[B[t][j] for t in range(k)] for j in range(m)]
    cdef list out = []
    cdef list Bj, row
    for i in range(n):
        Ai = A[i]
        row = []
        for j in range(m):
            Bj = Bt[j]
            s = 0
            for t in range(k):
                s += Ai[t] * Bj[t]
            row.append(s)
        out.append(row)
    return out


def is_symplectic(M):
    """Exact test of Mt*J*M == J for the standard alternating form J."""
    cdef Py_ssize_t n = len(M)
    cdef Py_ssize_t g, i, j, t
    if n % 2:
        return False
    for row in M:
        if len(row) != n:
            return False
    g = n // 2
    for i in range(n):
        for j in range(n):
            s = 0
            for t in range(g):
                s += M[t][i] * M[t + g][j] - M[t + g][i] * M[t][j]
            if j == i + g:
                want = 1
            elif i == j + g:
                want = -1
            else:
                want = 0
            if s != want:
                return False
    return True


def hnf_transform(A):
    """Row HNF with transform: returns (H, U, rank) with U*A = H."""
    cdef Py_ssize_t n = len(A)
    cdef Py_ssize_t m = len(A[0]) if n else 0
    cdef list H = [list(row) for row in A]
    cdef list U = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    cdef Py_ssize_t r = 0
    cdef Py_ssize_t col, i, t, piv
    cdef bint done
    cdef list Hi, Hr, Ui, Ur
    for col in range(m):
        if r == n:
            break
        piv = -1
        while True:
            piv = -1
            best = 0
            for i in range(r, n):
                v = H[i][col]
                if v:
                    a = -v if v < 0 else v
                    if piv < 0 or a < best:
                        piv, best = i, a
            if piv < 0:
                break
            if piv != r:
                H[r], H[piv] = H[piv], H[r]
                U[r], U[piv] = U[piv], U[r]
            done = True
            p = H[r][col]
            for i in range(r + 1, n):
                v = H[i][col]
                if v:
                    q = v // p
                    if q:
                        Hi, Hr = H[i], H[r]
                        for t in range(m):
                            Hi[t] -= q * Hr[t]
                        Ui, Ur = U[i], U[r]
                        for t in range(n):
                            Ui[t] -= q * Ur[t]
                    if H[i][col]:
                        done = False
            if done:
                break
        if piv < 0:
            continue
        if H[r][col] < 0:
            H[r] = [-x for x in H[r]]
            U[r] = [-x for x in U[r]]
        p = H[r][col]
        for i in range(r):
            q = H[i][col] // p
            if q:
                Hi, Hr = H[i], H[r]
                for t in range(m):
                    Hi[t] -= q * Hr[t]
                Ui, Ur = U[i], U[r]
                for t in range(n):
                    Ui[t] -= q * Ur[t]
        r += 1
    return H, U, r


cdef bint _is_diagonal(list M):
    cdef Py_ssize_t i, j
    cdef list row
    for i in range(len(M)):
        row = M[i]
        for j in range(len(row)):
            if i != j and row[j]:
                return False
    return True


def snf_transform(A):
    """Smith normal form with transforms: returns (D, U, V), U*A*V = D."""
    cdef Py_ssize_t n = len(A)
    cdef Py_ssize_t m = len(A[0]) if n else 0
    cdef list D = [list(row) for row in A]
    cdef list U = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    cdef list V = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    cdef Py_ssize_t i, j, k, t
    cdef bint changed
    while not _is_diagonal(D):
        H, W, _ = hnf_transform(D)
        D = H
        U = int_matmul(W, U)
        if _is_diagonal(D):
            break
        Ht, Wt, _ = hnf_transform([[D[i][j] for i in range(n)] for j in range(m)])
        D = [[Ht[j][i] for j in range(m)] for i in range(n)]
        Wtt = [[Wt[j][i] for j in range(m)] for i in range(m)]
        V = int_matmul(V, Wtt)
    k = n if n < m else m
    changed = True
    while changed:
        changed = False
        for i in range(k - 1):
            a, b = D[i][i], D[i + 1][i + 1]
            if a == 0 and b != 0:
                _swap_diag(D, U, V, i, i + 1)
                changed = True
            elif a and b and b % a:
                g, x, y = _xgcd(a, b)
                u2 = [[x, y], [-b // g, a // g]]
                v2 = [[1, -y * b // g], [1, x * a // g]]
                _apply_block(D, U, V, i, u2, v2, n, m)
                changed = True
    for i in range(k):
        if D[i][i] < 0:
            D[i][i] = -D[i][i]
            for t in range(n):
                U[i][t] = -U[i][t]
    return D, U, V


cdef _swap_diag(list D, list U, list V, Py_ssize_t i, Py_ssize_t j):
    cdef list row
    D[i], D[j] = D[j], D[i]
    U[i], U[j] = U[j], U[i]
    for row in D:
        row[i], row[j] = row[j], row[i]
    for row in V:
        row[i], row[j] = row[j], row[i]


cdef _xgcd(a, b):
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


cdef _apply_block(list D, list U, list V, Py_ssize_t i, list u2, list v2,
                  Py_ssize_t n, Py_ssize_t m):
    cdef Py_ssize_t t
    cdef list row
    for t in range(m):
        a, b = D[i][t], D[i + 1][t]
        D[i][t] = u2[0][0] * a + u2[0][1] * b
        D[i + 1][t] = u2[1][0] * a + u2[1][1] * b
    for t in range(n):
        a, b = U[i][t], U[i + 1][t]
        U[i][t] = u2[0][0] * a + u2[0][1] * b
        U[i + 1][t] = u2[1][0] * a + u2[1][1] * b
    for row in D:
        a, b = row[i], row[i + 1]
        row[i] = a * v2[0][0] + b * v2[1][0]
        row[i + 1] = a * v2[0][1] + b * v2[1][1]
    for row in V:
        a, b = row[i], row[i + 1]
        row[i] = a * v2[0][0] + b * v2[1][0]
        row[i + 1] = a * v2[0][1] + b * v2[1][1]
