"""Dense matrix helpers: exact matrices over Cyc, and matrices over a
SmallField (integer-index entries).

Cyc matrices are tuples of tuples; the zero-skipping in mat_mul makes
products with monomial matrices cost O(d^2) automatically.
"""

from .cyclo import Cyc, cyc_root

# ---------------------------------------------------------------------------
# matrices over Cyc


def mat_identity(d):
    one, zero = Cyc.one(), Cyc.zero()
    return tuple(
        tuple(one if i == j else zero for j in range(d)) for i in range(d)
    )


def mat_zero(d):
    zero = Cyc.zero()
    return tuple(tuple(zero for _ in range(d)) for _ in range(d))


def mat_mul(A, B):
    d = len(A)
    m = len(B[0])
    Bt = list(zip(*B))
    out = []
    for i in range(d):
        Ai = A[i]
        nz = [(k, x) for k, x in enumerate(Ai) if not x.is_zero()]
        row = []
        for j in range(m):
            Bj = Bt[j]
            acc = Cyc.zero()
            for k, x in nz:
                y = Bj[k]
                if not y.is_zero():
                    acc = acc + x * y
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def mat_add(A, B):
    return tuple(
        tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(A, B)
    )


def mat_scale(c, A):
    return tuple(tuple(c * x for x in row) for row in A)


def mat_trace(A):
    t = Cyc.zero()
    for i in range(len(A)):
        t = t + A[i][i]
    return t


def mat_trace_prod(A, B):
    """Tr(A.B) without forming the product."""
    t = Cyc.zero()
    for i, row in enumerate(A):
        for j, x in enumerate(row):
            if not x.is_zero():
                y = B[j][i]
                if not y.is_zero():
                    t = t + x * y
    return t


def mat_eq(A, B):
    return all(x == y for ra, rb in zip(A, B) for x, y in zip(ra, rb))


def mat_inv(A):
    d = len(A)
    M = [list(row) for row in A]
    I = [list(row) for row in mat_identity(d)]
    for col in range(d):
        piv = next((r for r in range(col, d) if not M[r][col].is_zero()), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        M[col], M[piv] = M[piv], M[col]
        I[col], I[piv] = I[piv], I[col]
        inv = M[col][col].inverse()
        M[col] = [x * inv for x in M[col]]
        I[col] = [x * inv for x in I[col]]
        for r in range(d):
            if r != col and not M[r][col].is_zero():
                f = M[r][col]
                M[r] = [x - f * y for x, y in zip(M[r], M[col])]
                I[r] = [x - f * y for x, y in zip(I[r], I[col])]
    return tuple(tuple(row) for row in I)


def mat_is_monomial(A):
    """One nonzero root-of-unity-ish entry per row and column?"""
    d = len(A)
    seen_cols = set()
    for row in A:
        nz = [j for j, x in enumerate(row) if not x.is_zero()]
        if len(nz) != 1 or nz[0] in seen_cols:
            return False
        seen_cols.add(nz[0])
    return True


# ---------------------------------------------------------------------------
# matrices over a SmallField: tuples of tuples of indices


def fmat_identity(F, d):
    return tuple(tuple(1 if i == j else 0 for j in range(d)) for i in range(d))


def fmat_mul(F, A, B):
    d, m, inner = len(A), len(B[0]), len(B)
    add, mul = F.add, F.mul
    out = []
    for i in range(d):
        Ai = A[i]
        row = []
        for j in range(m):
            acc = 0
            for k in range(inner):
                x = Ai[k]
                if x:
                    y = B[k][j]
                    if y:
                        acc = add(acc, mul(x, y))
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def fmat_vec(F, A, v):
    add, mul = F.add, F.mul
    out = []
    for row in A:
        acc = 0
        for x, y in zip(row, v):
            if x and y:
                acc = add(acc, mul(x, y))
        out.append(acc)
    return tuple(out)


def fmat_transpose(A):
    return tuple(zip(*A))


def fmat_map(A, table):
    """Apply an entry map (e.g. Frobenius or embedding table)."""
    return tuple(tuple(table[x] for x in row) for row in A)


def fmat_pow_entries(F, A, e):
    return tuple(tuple(F.pow(x, e) for x in row) for row in A)


def fmat_inv(F, A):
    d = len(A)
    M = [list(row) for row in A]
    I = [[1 if i == j else 0 for j in range(d)] for i in range(d)]
    for col in range(d):
        piv = next((r for r in range(col, d) if M[r][col]), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix over %r" % (F,))
        M[col], M[piv] = M[piv], M[col]
        I[col], I[piv] = I[piv], I[col]
        inv = F.inv(M[col][col])
        M[col] = [F.mul(x, inv) for x in M[col]]
        I[col] = [F.mul(x, inv) for x in I[col]]
        for r in range(d):
            if r != col and M[r][col]:
                f = M[r][col]
                M[r] = [F.sub(x, F.mul(f, y)) for x, y in zip(M[r], M[col])]
                I[r] = [F.sub(x, F.mul(f, y)) for x, y in zip(I[r], I[col])]
    return tuple(tuple(row) for row in I)


def fmat_nullity(F, A):
    """Dimension of the kernel of A acting on column vectors."""
    if not A:
        return 0
    M = [list(row) for row in A]
    rows, cols = len(M), len(M[0])
    rank = 0
    for col in range(cols):
        piv = next((r for r in range(rank, rows) if M[r][col]), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        inv = F.inv(M[rank][col])
        M[rank] = [F.mul(x, inv) for x in M[rank]]
        for r in range(rows):
            if r != rank and M[r][col]:
                f = M[r][col]
                M[r] = [F.sub(x, F.mul(f, y)) for x, y in zip(M[r], M[rank])]
        rank += 1
    return cols - rank


def fmat_solve(F, A, b):
    """One solution x of A x = b over F, or None. A: rows, b: vector."""
    rows = len(A)
    cols = len(A[0]) if rows else 0
    M = [list(A[r]) + [b[r]] for r in range(rows)]
    pivots = []
    rank = 0
    for col in range(cols):
        piv = next((r for r in range(rank, rows) if M[r][col]), None)
        if piv is None:
            continue
        M[rank], M[piv] = M[piv], M[rank]
        inv = F.inv(M[rank][col])
        M[rank] = [F.mul(x, inv) for x in M[rank]]
        for r in range(rows):
            if r != rank and M[r][col]:
                f = M[r][col]
                M[r] = [F.sub(x, F.mul(f, y)) for x, y in zip(M[r], M[rank])]
        pivots.append(col)
        rank += 1
    for r in range(rank, rows):
        if M[r][cols]:
            return None
    x = [0] * cols
    for r, col in enumerate(pivots):
        x[col] = M[r][cols]
    return tuple(x)
