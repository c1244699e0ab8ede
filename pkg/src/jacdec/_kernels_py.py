"""Pure-Python integer kernels.

Same interface as the compiled twin in ``_kernels_c``; ``jacdec.kernels``
picks whichever is available.  Everything here works on lists of lists of
Python ints (arbitrary precision) and returns fresh lists.

Conventions:
  * hnf_transform: row-style Hermite normal form H with U*A = H, U unimodular.
    Pivots positive, entries above a pivot reduced into [0, pivot), zero rows
    at the bottom, row count preserved.  Pivot selection: smallest absolute
    value, lowest row index on ties.
  * snf_transform: U*A*V = D diagonal with nonnegative entries and
    d1 | d2 | ... ; U, V unimodular.
"""

BACKEND = "python"


def int_matmul(A, B):
    n = len(A)
    k = len(B)
    m = len(B[0]) if k else 0
    Bt = [[B[t][j] for t in range(k)] for j in range(m)]
    out = []
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
    n = len(M)
    if n % 2 or any(len(row) != n for row in M):
        return False
    g = n // 2
    # (Mt J M)[i][j] = sum_t M[t][i]*M[t+g][j] - M[t+g][i]*M[t][j]
    for i in range(n):
        for j in range(n):
            s = 0
            for t in range(g):
                s += M[t][i] * M[t + g][j] - M[t + g][i] * M[t][j]
            want = 1 if j == i + g else (-1 if i == j + g else 0)
            if s != want:
                return False
    return True


def hnf_transform(A):
    """Row HNF with transform: returns (H, U, rank) with U*A = H."""
    n = len(A)
    m = len(A[0]) if n else 0
    H = [list(row) for row in A]
    U = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    r = 0
    for col in range(m):
        if r == n:
            break
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


def _is_diagonal(M):
    for i, row in enumerate(M):
        for j, v in enumerate(row):
            if i != j and v:
                return False
    return True


def snf_transform(A):
    """Smith normal form with transforms: returns (D, U, V), U*A*V = D."""
    n = len(A)
    m = len(A[0]) if n else 0
    D = [list(row) for row in A]
    U = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    V = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    # Alternate row and column reductions until diagonal.  Each pass strictly
    # reduces the product of pivot magnitudes, so this terminates.
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
    # Enforce the divisor chain d1 | d2 | ... on the diagonal.
    k = min(n, m)
    changed = True
    while changed:
        changed = False
        for i in range(k - 1):
            a, b = D[i][i], D[i + 1][i + 1]
            if a == 0 and b != 0:
                # move the zero to the end
                _swap_diag(D, U, V, i, i + 1)
                changed = True
            elif a and b and b % a:
                # fold diag(a, b) to diag(gcd, a*b/gcd) with the Bezout
                # transforms  [[x, y], [-b/g, a/g]] . diag(a,b) .
                # [[1, -y*b/g], [1, x*a/g]] = diag(g, a*b/g)
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


def _swap_diag(D, U, V, i, j):
    D[i], D[j] = D[j], D[i]
    U[i], U[j] = U[j], U[i]
    for row in D:
        row[i], row[j] = row[j], row[i]
    for row in V:
        row[i], row[j] = row[j], row[i]


def _xgcd(a, b):
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def _apply_block(D, U, V, i, u2, v2, n, m):
    # Replace rows/cols i, i+1 by the 2x2 transforms computed for the block.
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
